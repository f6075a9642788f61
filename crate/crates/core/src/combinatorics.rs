//! Counting kernel: `g(n, m)`, the shared-element cover bound, `A(n)` and the
//! exhaustive search for the smallest identifying family.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::upset_table;
use crate::set::{binomial, check_n, enumerate_antichains, minimal_cover_bits, SetFamily};

/// Default cap on the number of `m`-families `g_bruteforce` will inspect.
pub const G_BRUTEFORCE_BUDGET: u128 = 2_000_000;

/// Ground-set cap for [`exact_h_search`].
pub const EXACT_H_MAX_N: usize = 4;

/// `∏_{i=0}^{m-1} ⌊(n+i)/m⌋`, the number of minimal covers of a balanced
/// `m`-partition of `[n]`.
pub fn g_formula(n: usize, m: usize) -> Result<u128> {
    if m == 0 || m > n {
        return Err(Error::contract(format!(
            "need 1 <= m <= n for a partition into m nonempty parts, got n={n}, m={m}"
        )));
    }
    Ok((0..m).map(|i| ((n + i) / m) as u128).product())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GWitness {
    pub value: u128,
    /// Lexicographically first family (by ascending mask tuple) attaining `value`.
    pub witness: SetFamily,
}

impl GWitness {
    /// True when the witness is a partition of `[n]` into parts whose sizes differ by at most one.
    pub fn is_balanced_partition(&self) -> bool {
        let n = self.witness.n();
        let mut union = 0u32;
        let mut sizes = Vec::new();
        for m in self.witness.iter() {
            if m.is_empty() || union & m.bits() != 0 {
                return false;
            }
            union |= m.bits();
            sizes.push(m.len());
        }
        let (lo, hi) = (sizes.iter().min(), sizes.iter().max());
        union == crate::set::full_bits(n) && matches!((lo, hi), (Some(a), Some(b)) if b - a <= 1)
    }
}

/// Maximum of `|MC(F)|` over all `m`-member families `F ⊆ 2^[n]`, with the
/// default budget.
pub fn g_bruteforce(n: usize, m: usize) -> Result<GWitness> {
    g_bruteforce_with_budget(n, m, G_BRUTEFORCE_BUDGET)
}

/// As [`g_bruteforce`], refusing when `C(2^n, m)` exceeds `budget`.
pub fn g_bruteforce_with_budget(n: usize, m: usize, budget: u128) -> Result<GWitness> {
    check_n(n)?;
    if m == 0 {
        return Err(Error::contract("m must be at least 1"));
    }
    let universe = 1u64 << n;
    let families = binomial(universe, m as u64);
    if families == 0 {
        return Err(Error::contract(format!("there is no {m}-family over 2^[{n}]")));
    }
    if families > budget {
        return Err(Error::resource(format!(
            "C(2^{n}, {m}) = {families} families exceed the budget of {budget}"
        )));
    }

    let mut idx: Vec<u32> = (0..m as u32).collect();
    let mut best: Option<(u128, Vec<u32>)> = None;
    loop {
        let value = minimal_cover_bits(&idx).len() as u128;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, idx.clone()));
        }
        if !next_combination(&mut idx, universe as u32) {
            break;
        }
    }
    let (value, masks) = best.expect("at least one family");
    Ok(GWitness {
        value,
        witness: SetFamily::from_raw(n, masks),
    })
}

/// Advances a strictly increasing index tuple over `0..limit` in lexicographic order.
fn next_combination(idx: &mut [u32], limit: u32) -> bool {
    let m = idx.len();
    for i in (0..m).rev() {
        if idx[i] < limit - (m - i) as u32 {
            idx[i] += 1;
            for j in i + 1..m {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Upper bound on `|MC(F)|` for a family in which some element is shared.
///
/// With `A` the elements lying in at least two members, `a = |A|` and
/// `a_1 >= ... >= a_m` the sizes of `F_i \ A`, returns
/// `∏ a_i + Σ_{j=1}^{min(a, m-1)} C(a, j) · ∏_{i=1}^{m-j-1} a_i`.
pub fn eq1_bound(f: &SetFamily) -> Result<u128> {
    let m = f.len();
    if m == 0 {
        return Err(Error::contract("the family is empty"));
    }
    let mut seen = 0u32;
    let mut shared = 0u32;
    for b in f.bits() {
        shared |= seen & b;
        seen |= b;
    }
    let a = shared.count_ones() as u64;
    if a == 0 {
        return Err(Error::regime(
            "members are pairwise disjoint; the bound needs a shared element",
        ));
    }
    let mut sizes: Vec<u128> = f.bits().map(|b| (b & !shared).count_ones() as u128).collect();
    sizes.sort_unstable_by(|x, y| y.cmp(x));
    let mut bound: u128 = sizes.iter().product();
    for j in 1..=(a as usize).min(m - 1) {
        let head: u128 = sizes[..m - j - 1].iter().product();
        bound += binomial(a, j as u64) * head;
    }
    Ok(bound)
}

/// `A(n) = 2^(2n-1) - 3^n + 2^(n-1)`, the number of 2-member antichains over `[n]`.
pub fn antichain_pair_count(n: usize) -> Result<u128> {
    if n == 0 || n > 63 {
        return Err(Error::contract(format!("A(n) is evaluated for 1 <= n <= 63, got {n}")));
    }
    Ok((1u128 << (2 * n - 1)) + (1u128 << (n - 1)) - 3u128.pow(n as u32))
}

/// Smallest `|G|` over identifying families `G ⊆ 2^[n]`, `n <= 4`.
///
/// Two antichains are told apart by `G` exactly when `G` contains a query on
/// which their answers differ. Each pair contributes its difference set of
/// queries; `G` identifies iff it meets every inclusion-minimal difference
/// set. Families are scanned by size, ascending.
pub fn exact_h_search(n: usize, k: usize) -> Result<usize> {
    check_n(n)?;
    if n > EXACT_H_MAX_N {
        return Err(Error::resource(format!(
            "exhaustive h search capped at n <= {EXACT_H_MAX_N}, got {n}"
        )));
    }
    let tables: Vec<u64> = enumerate_antichains(n, k)?.map(|a| upset_table(&a)).collect();
    let mut diffs: HashSet<u64> = HashSet::new();
    for (i, s) in tables.iter().enumerate() {
        for t in &tables[i + 1..] {
            diffs.insert(s ^ t);
        }
    }
    let mut diffs: Vec<u64> = diffs.into_iter().collect();
    diffs.sort_unstable_by_key(|d| d.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for d in diffs {
        if !minimal.iter().any(|m| m & d == *m) {
            minimal.push(d);
        }
    }
    if minimal.is_empty() {
        return Ok(0);
    }

    let width = 1u32 << n;
    for size in 1..=width {
        // Gosper's hack over all `size`-subsets of the query universe.
        let mut g: u64 = (1u64 << size) - 1;
        let stop = 1u64 << width;
        while g < stop {
            if minimal.iter().all(|d| d & g != 0) {
                return Ok(size as usize);
            }
            let c = g & g.wrapping_neg();
            let r = g + c;
            g = (((r ^ g) >> 2) / c) | r;
        }
    }
    unreachable!("the full power set separates distinct antichains")
}
