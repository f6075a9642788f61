use serde::Serialize;

use super::gainanov::{gainanov_find_one, shrink, Cached};
use crate::error::{Error, Result};
use crate::oracle::QueryOracle;
use crate::set::{minimal_cover_bits, Antichain, SubsetMask};

/// Ground-set cap for [`solve`]; each round enumerates minimal covers.
pub const SOLVE_MAX_N: usize = 16;

/// Outcome of a [`solve_traced`] run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub found: Antichain,
    /// Queries charged by the oracle during this run.
    pub queries_used: usize,
    /// `|MC(S'_m)|` for each extension round `m = 1, ..., k-1`.
    pub cover_counts: Vec<usize>,
}

impl SolveReport {
    /// `n + Σ (|MC(S'_m)| + n)`: the budget the run was entitled to.
    pub fn realized_bound(&self) -> usize {
        let n = self.found.n();
        n + self.cover_counts.iter().map(|c| c + n).sum::<usize>()
    }
}

/// Identifies a hidden `k`-antichain adaptively.
///
/// One member comes from element removal on `[n]`. With `m` members known,
/// the complements of their minimal covers are asked in canonical order; the
/// first YES set avoids a cover of every known member, so element removal
/// inside it yields a new one. Queries are never repeated within a run.
pub fn solve<O: QueryOracle + ?Sized>(oracle: &mut O, n: usize, k: usize) -> Result<Antichain> {
    solve_traced(oracle, n, k).map(|r| r.found)
}

pub fn solve_traced<O: QueryOracle + ?Sized>(oracle: &mut O, n: usize, k: usize) -> Result<SolveReport> {
    check_args(oracle.n(), n, k)?;
    let start = oracle.queries_used();
    let full = SubsetMask::full(n)?;
    let mut oracle = Cached::new(oracle);

    let mut found = vec![gainanov_find_one(&mut oracle, full)?.bits()];
    let mut cover_counts = Vec::with_capacity(k - 1);
    while found.len() < k {
        let covers = minimal_cover_bits(&found);
        cover_counts.push(covers.len());
        let mut next = None;
        for c in covers {
            let q = SubsetMask::from_raw(n, !c & full.bits());
            if oracle.ask(q)? {
                next = Some(gainanov_find_one(&mut oracle, q)?);
                break;
            }
        }
        let Some(h) = next else {
            return Err(Error::contract(format!(
                "no further member after {} found; the oracle hides fewer than {k}",
                found.len()
            )));
        };
        if found.contains(&h.bits()) {
            return Err(Error::contract(format!("member {h} found twice")));
        }
        found.push(h.bits());
    }

    let found = crate::SetFamily::from_raw(n, found);
    let found = Antichain::new(found)
        .map_err(|e| Error::contract(format!("oracle inconsistent with an antichain: {e}")))?;
    if !oracle.transcript().is_consistent_with(&found)? {
        return Err(Error::contract(format!(
            "answers are inconsistent with the recovered {found}"
        )));
    }
    Ok(SolveReport {
        found,
        queries_used: oracle.queries_used() - start,
        cover_counts,
    })
}

/// Identifies a hidden 2-antichain with at most `2n` queries.
///
/// After one member `H` is found, `[n] \ {h}` is asked for successive
/// `h ∈ H`. NO puts `h` into the other member `H'`; the first YES drops `h`
/// from `H'`, and element removal over the still-undecided elements finishes
/// with `n - i` more queries.
pub fn solve_k2<O: QueryOracle + ?Sized>(oracle: &mut O, n: usize) -> Result<Antichain> {
    check_args(oracle.n(), n, 2)?;
    let full = SubsetMask::full(n)?;
    let mut oracle = Cached::new(oracle);

    let first = gainanov_find_one(&mut oracle, full)?;
    if first.is_empty() {
        return Err(Error::contract(
            "the empty set is a member, so the hidden antichain has one member",
        ));
    }
    let mut confirmed = 0u32;
    for h in first.elements() {
        let bit = 1u32 << (h - 1);
        let q = SubsetMask::from_raw(n, full.bits() & !bit);
        if oracle.ask(q)? {
            let free = full.bits() & !bit & !confirmed;
            let (second, _) = shrink(&mut oracle, q, free)?;
            let pair = crate::SetFamily::from_raw(n, [first.bits(), second.bits()]);
            if second == first || !pair.is_antichain() {
                return Err(Error::contract(format!(
                    "{first} and {second} do not form a 2-antichain"
                )));
            }
            let found = Antichain::new(pair)?;
            if !oracle.transcript().is_consistent_with(&found)? {
                return Err(Error::contract(format!(
                    "answers are inconsistent with the recovered {found}"
                )));
            }
            return Ok(found);
        }
        confirmed |= bit;
    }
    Err(Error::contract(format!(
        "every element of {first} lies in the other member, which is impossible in an antichain"
    )))
}

fn check_args(oracle_n: usize, n: usize, k: usize) -> Result<()> {
    crate::set::check_n(n)?;
    if oracle_n != n {
        return Err(Error::Dimension {
            left: n,
            right: oracle_n,
        });
    }
    if n > SOLVE_MAX_N {
        return Err(Error::resource(format!(
            "adaptive solver capped at n <= {SOLVE_MAX_N}, got {n}"
        )));
    }
    if k == 0 {
        return Err(Error::contract("k must be at least 1"));
    }
    Ok(())
}

/// `Σ g(n, m) + k·n` over `m = 1, ..., k-1`, with `g_values[m-1] = g(n, m)`.
pub fn theorem3_bound(n: usize, k: usize, g_values: &[u128]) -> Result<u128> {
    if k == 0 || g_values.len() != k - 1 {
        return Err(Error::contract(format!(
            "need exactly k - 1 = {} values of g, got {}",
            k.saturating_sub(1),
            g_values.len()
        )));
    }
    Ok(g_values.iter().sum::<u128>() + (k * n) as u128)
}
