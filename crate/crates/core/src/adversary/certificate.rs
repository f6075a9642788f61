use serde::Serialize;

use crate::combinatorics::antichain_pair_count;
use crate::error::{Error, Result};

/// Worse-branch count after the first query of a 2-antichain search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct K2Certificate {
    /// Lower bound on the 2-antichains consistent with the worse answer.
    pub count: u128,
    /// `2^(2n-2)`: more than this many survivors force `2n - 1` further queries.
    pub threshold: u128,
}

impl K2Certificate {
    pub fn holds(&self) -> bool {
        self.count > self.threshold
    }
}

/// Counts the antichains left after the worse answer to a first query of
/// size `size`.
///
/// * `size = n`: the answer is always YES, so all `A(n)` remain;
/// * `size = n - 1` (`n >= 6`): YES leaves `A(n) - A(n-1)`;
/// * `size <= n - 2` (`n >= 12`): NO leaves at least
///   `A(n) - A(n-2) - 2^(n-2)(2^n - 2^(n-2))`.
pub fn k2_first_query_certificate(n: usize, size: usize) -> Result<K2Certificate> {
    if size > n {
        return Err(Error::contract(format!("a query over [{n}] has at most {n} elements, got {size}")));
    }
    if n > 63 {
        return Err(Error::contract(format!("counts are evaluated for n <= 63, got {n}")));
    }
    let a = antichain_pair_count;
    let count = if size + 1 >= n {
        if n < 6 {
            return Err(Error::regime(format!("the size-{size} branch needs n >= 6, got {n}")));
        }
        if size == n {
            a(n)?
        } else {
            a(n)? - a(n - 1)?
        }
    } else {
        if n < 12 {
            return Err(Error::regime(format!("the size-{size} branch needs n >= 12, got {n}")));
        }
        let quarter = 1u128 << (n - 2);
        a(n)? - a(n - 2)? - quarter * ((1u128 << n) - quarter)
    };
    Ok(K2Certificate {
        count,
        threshold: 1u128 << (2 * n - 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve() {
        let c = k2_first_query_certificate(12, 11).unwrap();
        assert_eq!(c.threshold, 4_194_304);
        assert!(c.holds());
        let c = k2_first_query_certificate(12, 10).unwrap();
        assert_eq!(c.count, 4_247_736);
        assert!(c.holds());
        assert_eq!(k2_first_query_certificate(12, 0).unwrap(), c);
    }

    #[test]
    fn six() {
        let c = k2_first_query_certificate(6, 5).unwrap();
        assert_eq!(c.count, 1066);
        assert_eq!(c.threshold, 1024);
        assert!(c.holds());
    }

    #[test]
    fn below_thresholds() {
        assert!(matches!(k2_first_query_certificate(11, 5), Err(Error::UnsupportedRegime(_))));
        assert!(matches!(k2_first_query_certificate(5, 4), Err(Error::UnsupportedRegime(_))));
        assert!(matches!(k2_first_query_certificate(6, 7), Err(Error::Contract(_))));
    }

    #[test]
    fn inequality_persists() {
        for n in 12..=40 {
            for size in [n - 1, n - 2] {
                assert!(k2_first_query_certificate(n, size).unwrap().holds(), "{n} {size}");
            }
        }
    }
}
