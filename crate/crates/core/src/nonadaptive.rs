//! Optimal non-adaptive query families, their decoders, and a brute-force
//! identifiability check.
//!
//! Three regimes are covered, each with its own family:
//!
//! * `k = 1`: the `n` sets `[n] \ {x}`; element `x` is in the hidden set
//!   exactly when `[n] \ {x}` is answered NO.
//! * `1 < k < n`: every set of size `n - k ..= n - 1` except `[n-1]`. The
//!   minimal sets all of whose queried supersets answered YES are the hidden
//!   antichain, possibly plus `[n-1]`.
//! * `n <= k <= C(n-2, floor(n/2) - 1) + 1`: every set except `∅`, `[n]`,
//!   `{n}` and `[n-1]`.
//!
//! The degenerate `n = 2, k = 2` case needs no queries: `{{1}, {2}}` is the
//! only 2-antichain on `[2]`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::oracle::{answer_query, upset_table};
use crate::set::{binomial, check_n, enumerate_antichains, full_bits, Antichain, SetFamily};

/// Ground-set cap for the exhaustive identifiability check.
pub const VERIFY_MAX_N: usize = 6;
/// Ground-set cap for [`decode`]; the middle-regime decoder scans all `2^n` sets.
pub const DECODE_MAX_N: usize = 15;

/// Which construction applies to an `(n, k)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `k = 1`.
    Single,
    /// `n = 2, k = 2`: nothing to ask.
    TrivialPair,
    /// `1 < k < n`.
    Middle,
    /// `n <= k <= C(n-2, floor(n/2) - 1) + 1`.
    Large,
}

/// Largest `k` of the `k >= n` regime: `C(n-2, floor(n/2) - 1) + 1`.
pub fn large_regime_max_k(n: usize) -> u128 {
    binomial(n as u64 - 2, (n / 2) as u64 - 1) + 1
}

pub fn regime(n: usize, k: usize) -> Result<Regime> {
    check_n(n)?;
    let unsupported = || {
        Error::regime(format!(
            "no non-adaptive construction for n = {n}, k = {k}"
        ))
    };
    match (n, k) {
        (_, 0) => Err(unsupported()),
        (_, 1) => Ok(Regime::Single),
        (2, 2) => Ok(Regime::TrivialPair),
        (1 | 2, _) => Err(unsupported()),
        _ if k < n => Ok(Regime::Middle),
        _ if (k as u128) <= large_regime_max_k(n) => Ok(Regime::Large),
        _ => Err(unsupported()),
    }
}

/// Optimal number of non-adaptive queries `h(n, k)` in every regime covered.
pub fn h_formula(n: usize, k: usize) -> Result<u64> {
    Ok(match regime(n, k)? {
        Regime::Single => n as u64,
        Regime::TrivialPair => 0,
        Regime::Middle => {
            let total: u128 = (n - k..n).map(|i| binomial(n as u64, i as u64)).sum();
            (total - 1) as u64
        }
        Regime::Large => (1u64 << n) - 4,
    })
}

/// The query family achieving [`h_formula`].
///
/// For `k = 1` members are listed as `[n] \ {1}, [n] \ {2}, ...`; the other
/// regimes list members in canonical order.
pub fn build_family(n: usize, k: usize) -> Result<SetFamily> {
    let full = full_bits(n);
    let missing_top = full >> 1;
    Ok(match regime(n, k)? {
        Regime::Single => SetFamily::from_raw(n, (0..n).map(|x| full & !(1 << x))),
        Regime::TrivialPair => SetFamily::empty(n)?,
        Regime::Middle => SetFamily::from_raw(
            n,
            (0..=full).filter(|&m| {
                let size = m.count_ones() as usize;
                size >= n - k && size < n && m != missing_top
            }),
        ),
        Regime::Large => SetFamily::from_raw(
            n,
            (1..full).filter(|&m| m != 1 << (n - 1) && m != missing_top),
        ),
    })
}

/// Answers of `hidden` to each query, positionally aligned with `queries`.
pub fn answer_vector(hidden: &Antichain, queries: &SetFamily) -> Result<Vec<bool>> {
    queries.iter().map(|&q| answer_query(hidden, q)).collect()
}

/// Recovers the hidden `k`-antichain from answers to [`build_family`]`(n, k)`.
///
/// `queries` may list the family in any order; `answers` must follow it. An
/// answer vector that no `k`-antichain produces is a [`Error::Decode`] naming
/// the first query whose answer the reconstruction cannot reproduce.
pub fn decode(n: usize, k: usize, queries: &SetFamily, answers: &[bool]) -> Result<Antichain> {
    let regime = regime(n, k)?;
    if n > DECODE_MAX_N {
        return Err(Error::resource(format!(
            "decoder capped at n <= {DECODE_MAX_N}, got {n}"
        )));
    }
    if queries.n() != n {
        return Err(Error::Dimension {
            left: n,
            right: queries.n(),
        });
    }
    if answers.len() != queries.len() {
        return Err(Error::contract(format!(
            "{} answers for {} queries",
            answers.len(),
            queries.len()
        )));
    }
    let expected = build_family(n, k)?;
    if !queries.same_members(&expected) {
        return Err(Error::contract(format!(
            "queries are not the optimal family for n = {n}, k = {k}"
        )));
    }
    let table: HashMap<u32, bool> = queries.bits().zip(answers.iter().copied()).collect();

    let members = match regime {
        Regime::Single => decode_single(n, &table),
        Regime::TrivialPair => vec![0b01, 0b10],
        Regime::Middle => decode_middle(n, k, &table)?,
        Regime::Large => decode_large(n, k, &table)?,
    };
    certify(n, k, members, queries, answers)
}

fn decode_single(n: usize, table: &HashMap<u32, bool>) -> Vec<u32> {
    let full = full_bits(n);
    let h = (0..n)
        .filter(|&x| !table[&(full & !(1 << x))])
        .fold(0u32, |acc, x| acc | 1 << x);
    vec![h]
}

fn decode_middle(n: usize, k: usize, table: &HashMap<u32, bool>) -> Result<Vec<u32>> {
    let full = full_bits(n);
    let missing_top = full >> 1;
    let no_answers: Vec<u32> = table.iter().filter(|(_, &a)| !a).map(|(&q, _)| q).collect();
    // A set survives when no NO-answered query contains it.
    let survivors: Vec<u32> = (0..=full)
        .filter(|&a| no_answers.iter().all(|&q| a & !q != 0))
        .collect();
    let minimal: Vec<u32> = survivors
        .iter()
        .copied()
        .filter(|&a| !survivors.iter().any(|&b| b != a && b & !a == 0))
        .collect();
    if minimal.len() == k {
        Ok(minimal)
    } else if minimal.len() == k + 1 && minimal.contains(&missing_top) {
        Ok(minimal.into_iter().filter(|&a| a != missing_top).collect())
    } else {
        Err(Error::Decode(format!(
            "{} minimal sets consistent with the answers, expected {k} or {} including [n-1]",
            minimal.len(),
            k + 1
        )))
    }
}

fn decode_large(n: usize, k: usize, table: &HashMap<u32, bool>) -> Result<Vec<u32>> {
    let full = full_bits(n);
    let top = 1u32 << (n - 1);
    let low = full & !top;
    // ∅ is never in the upfamily once k > 1, and [n] always is. Only {n} and
    // [n-1] are left unknown.
    let yes = |a: u32| -> bool {
        match a {
            0 => false,
            a if a == full => true,
            a => table[&a],
        }
    };
    let pair_with_top = |a: u32| a & top != 0 && a.count_ones() == 2;

    // Every asked set all of whose maximal proper subsets were asked too.
    let mut certain = Vec::new();
    for a in 1..full {
        if a == top || a == low || pair_with_top(a) || !yes(a) {
            continue;
        }
        let mut rest = a;
        let mut minimal = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if yes(a & !bit) {
                minimal = false;
                break;
            }
            rest &= rest - 1;
        }
        if minimal {
            certain.push(a);
        }
    }

    // Pairs {x, n} that are members unless {n} itself is.
    let stars: Vec<u32> = (0..n - 1)
        .map(|x| 1u32 << x)
        .filter(|&b| yes(b | top) && !yes(b))
        .map(|b| b | top)
        .collect();
    let some_pair_no = (0..n - 1).any(|x| !yes(1 << x | top));
    let low_undetermined = (0..n - 1).all(|x| !yes(low & !(1 << x)));

    let mut out = certain;
    if low_undetermined {
        // Then [n-1] is the only possible member avoiding n, which rules {n} out.
        out.extend(&stars);
        if out.len() + 1 == k {
            out.push(low);
        }
    } else if some_pair_no {
        out.extend(&stars);
    } else {
        let with_singleton = out.len() + 1 == k;
        let with_stars = out.len() + stars.len() == k;
        match (with_singleton, with_stars) {
            (true, false) => out.push(top),
            (false, true) => out.extend(&stars),
            (true, true) => {
                return Err(Error::Decode(format!(
                    "{{{n}}} and {} cannot be told apart by counting",
                    crate::set::SubsetMask::from_raw(n, stars[0])
                )))
            }
            (false, false) => {
                return Err(Error::Decode(format!(
                    "{} certified members fit neither {{{n}}} ({} needed) nor the {} pairs through {n}",
                    out.len(),
                    k - 1,
                    stars.len()
                )))
            }
        }
    }
    Ok(out)
}

/// Checks a reconstruction against every answer and wraps it.
fn certify(
    n: usize,
    k: usize,
    members: Vec<u32>,
    queries: &SetFamily,
    answers: &[bool],
) -> Result<Antichain> {
    let family = SetFamily::from_raw(n, members);
    if family.len() != k {
        return Err(Error::Decode(format!(
            "reconstructed {} members, expected {k}",
            family.len()
        )));
    }
    let candidate = Antichain::new(family)
        .map_err(|_| Error::Decode("reconstruction is not an antichain".into()))?;
    for (&q, &a) in queries.iter().zip(answers) {
        if answer_query(&candidate, q)? != a {
            return Err(Error::Decode(format!(
                "query {q} answered {} but {candidate} predicts {}",
                yes_no(a),
                yes_no(!a)
            )));
        }
    }
    Ok(candidate)
}

fn yes_no(a: bool) -> &'static str {
    if a {
        "YES"
    } else {
        "NO"
    }
}

/// Whether distinct `k`-antichains over `[n]` always get distinct answer
/// vectors on `queries`. Exhaustive; `n <= 6`.
pub fn verify_identifying(queries: &SetFamily, n: usize, k: usize) -> Result<bool> {
    check_n(n)?;
    if n > VERIFY_MAX_N {
        return Err(Error::resource(format!(
            "identifiability check capped at n <= {VERIFY_MAX_N}, got {n}"
        )));
    }
    if queries.n() != n {
        return Err(Error::Dimension {
            left: n,
            right: queries.n(),
        });
    }
    let selector = queries.bits().fold(0u64, |acc, q| acc | 1 << q);
    let mut seen = HashSet::new();
    for s in enumerate_antichains(n, k)? {
        if !seen.insert(upset_table(&s) & selector) {
            return Ok(false);
        }
    }
    Ok(true)
}
