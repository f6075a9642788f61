//! Random hidden antichains.

use rand::Rng;

use crate::error::{Error, Result};
use crate::set::{check_n, enumerate_antichains, full_bits, Antichain, SetFamily};

/// Largest `n` for which sampling is uniform over the full enumeration.
pub const UNIFORM_MAX_N: usize = 6;

const REJECTION_TRIES: usize = 1_000_000;

/// Draws a `k`-antichain over `[n]`.
///
/// For `n <= 6` the draw is uniform over all `k`-antichains. Above that,
/// `k` distinct uniform subsets are drawn until they form an antichain.
pub fn random_antichain<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Result<Antichain> {
    check_n(n)?;
    if k == 0 {
        return Err(Error::contract("k must be at least 1"));
    }
    if n <= UNIFORM_MAX_N {
        let all: Vec<Antichain> = enumerate_antichains(n, k)?.collect();
        if all.is_empty() {
            return Err(Error::contract(format!("there is no {k}-antichain over [{n}]")));
        }
        let i = rng.gen_range(0..all.len());
        return Ok(all.into_iter().nth(i).expect("index in range"));
    }
    let full = full_bits(n);
    for _ in 0..REJECTION_TRIES {
        let mut masks: Vec<u32> = Vec::with_capacity(k);
        while masks.len() < k {
            let m = rng.gen::<u32>() & full;
            if !masks.contains(&m) {
                masks.push(m);
            }
        }
        let f = SetFamily::from_raw(n, masks);
        if f.is_antichain() {
            return Antichain::new(f);
        }
    }
    Err(Error::resource(format!(
        "no {k}-antichain over [{n}] after {REJECTION_TRIES} rejection rounds"
    )))
}
