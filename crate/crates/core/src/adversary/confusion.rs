use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::oracle::upset_table;
use crate::set::{enumerate_antichains, Antichain, SetFamily};

/// Ground-set cap for [`confusion_pair`].
pub const CONFUSION_MAX_N: usize = 5;

/// Two distinct `k`-antichains with identical answers on `queries`, or
/// `None` when `queries` identifies every `k`-antichain over `[n]`.
///
/// The pair returned is the first collision in canonical enumeration order.
pub fn confusion_pair(queries: &SetFamily, n: usize, k: usize) -> Result<Option<(Antichain, Antichain)>> {
    if queries.n() != n {
        return Err(Error::Dimension {
            left: n,
            right: queries.n(),
        });
    }
    if n > CONFUSION_MAX_N {
        return Err(Error::resource(format!(
            "confusion search capped at n <= {CONFUSION_MAX_N}, got {n}"
        )));
    }
    let selector = queries.bits().fold(0u64, |acc, q| acc | 1 << q);
    let mut seen: HashMap<u64, Antichain> = HashMap::new();
    for s in enumerate_antichains(n, k)? {
        let key = upset_table(&s) & selector;
        if let Some(prev) = seen.get(&key) {
            return Ok(Some((prev.clone(), s)));
        }
        seen.insert(key, s);
    }
    Ok(None)
}
