use crate::error::{Error, Result};
use crate::nonadaptive::large_regime_max_k;
use crate::set::{Antichain, SetFamily, SubsetMask};

/// Two `k`-antichains that answer every query except `a0` (and, when `|a0|`
/// is `1` or `n - 1`, one partner set of the same size) identically.
///
/// Any non-adaptive family that skips `a0` therefore fails to identify. The
/// regime is picked by `k` and `|a0|`:
///
/// * `1 < k < n`, `n - k <= |a0| <= n - 2`: `a0` against `a0 ∪ {w}` for the
///   least `w ∉ a0`, padded with sets that block every other superset of `a0`;
/// * `1 < k < n`, `|a0| = n - 1`: `a0` against another `(n-1)`-set;
/// * `n <= k <= C(n-2, ⌊n/2⌋-1) + 1`, `|a0| ∈ {1, ..., n-1}`: the
///   half-size padding constructions, with the smallest elements of `a0` and
///   of its complement playing the roles of the fixed labels.
pub fn missing_set_construction(n: usize, k: usize, a0: SubsetMask) -> Result<(Antichain, Antichain)> {
    if a0.n() != n {
        return Err(Error::Dimension { left: n, right: a0.n() });
    }
    let size = a0.len();
    let (first, second) = if k >= 2 && k < n {
        if size + k < n || size > n - 1 {
            return Err(Error::contract(format!(
                "|a0| = {size} outside [{}, {}] for (n, k) = ({n}, {k})",
                n - k,
                n - 1
            )));
        }
        if size == n - 1 {
            two_coatoms(n, k, a0.bits())
        } else {
            middle(n, k, a0.bits())?
        }
    } else if k >= n && n >= 3 && (k as u128) <= large_regime_max_k(n) {
        if size == 0 || size >= n {
            return Err(Error::contract(format!(
                "|a0| = {size} outside [1, {}] for (n, k) = ({n}, {k})",
                n - 1
            )));
        }
        large(n, k, a0.bits())?
    } else {
        return Err(Error::regime(format!(
            "no missing-set construction for (n, k) = ({n}, {k})"
        )));
    };
    let wrap = |masks: Vec<u32>| {
        Antichain::new(SetFamily::from_raw(n, masks))
            .map_err(|e| Error::contract(format!("construction produced a non-antichain: {e}")))
    };
    Ok((wrap(first)?, wrap(second)?))
}

fn sets_of_size(n: usize, size: usize) -> impl Iterator<Item = u32> + Clone {
    (0..1u32 << n).filter(move |m| m.count_ones() as usize == size)
}

fn middle(n: usize, k: usize, a0: u32) -> Result<(Vec<u32>, Vec<u32>)> {
    let full = crate::set::full_bits(n);
    let comp = full & !a0;
    let w = comp & comp.wrapping_neg();
    let x = a0 & a0.wrapping_neg();
    let mut shared: Vec<u32> = bits_of(comp & !w).map(|wi| (a0 & !x) | wi).collect();
    let size = a0.count_ones() as usize;
    let blocked = a0 | w;
    for s in sets_of_size(n, size) {
        if shared.len() + 1 >= k {
            break;
        }
        if s & !blocked != 0 && !shared.contains(&s) {
            shared.push(s);
        }
    }
    if shared.len() + 1 < k {
        return Err(Error::contract(format!("not enough padding sets for (n, k) = ({n}, {k})")));
    }
    Ok(pair_up(a0, a0 | w, shared))
}

fn two_coatoms(n: usize, k: usize, a0: u32) -> (Vec<u32>, Vec<u32>) {
    let full = crate::set::full_bits(n);
    let c = full & !a0;
    let rest = full & !c;
    let c2 = rest & rest.wrapping_neg();
    let shared = bits_of(full & !c & !c2).take(k - 1).map(|d| full & !d).collect();
    pair_up(a0, full & !c2, shared)
}

fn bits_of(m: u32) -> impl Iterator<Item = u32> {
    (0..32).map(|i| 1u32 << i).filter(move |b| m & b != 0)
}

fn pair_up(one: u32, other: u32, shared: Vec<u32>) -> (Vec<u32>, Vec<u32>) {
    let mut a = vec![one];
    a.extend(&shared);
    let mut b = vec![other];
    b.extend(shared);
    (a, b)
}

/// Label `j` (1-based) in the normalized picture sits at `order[j - 1]`:
/// the elements of `a0` ascending, then the rest ascending.
struct Relabel {
    order: Vec<u32>,
}

impl Relabel {
    fn new(n: usize, a0: u32) -> Self {
        let inside = (0..n as u32).filter(|i| a0 >> i & 1 == 1);
        let outside = (0..n as u32).filter(|i| a0 >> i & 1 == 0);
        Relabel {
            order: inside.chain(outside).collect(),
        }
    }

    fn map(&self, m: u32) -> u32 {
        bits_of(m).fold(0, |acc, b| acc | 1 << self.order[b.trailing_zeros() as usize])
    }
}

fn large(n: usize, k: usize, a0: u32) -> Result<(Vec<u32>, Vec<u32>)> {
    let size = a0.count_ones() as usize;
    let el = |j: usize| 1u32 << (j - 1);
    let range = |lo: usize, hi: usize| (lo..=hi).fold(0u32, |acc, j| acc | el(j));
    let half = n / 2;
    let short = |what: &str| Error::contract(format!("not enough {what} for (n, k) = ({n}, {k})"));

    let (one, other, shared): (u32, u32, Vec<u32>) = if size == 1 {
        let b: Vec<u32> = sets_of_size(n, half - 1)
            .filter(|s| s & (el(1) | el(2)) == 0)
            .take(k + 1 - n)
            .collect();
        if b.len() < k + 1 - n {
            return Err(short("padding sets"));
        }
        let mut one: Vec<u32> = b.clone();
        one.push(el(1));
        one.extend((3..=n).map(|i| el(2) | el(i)));
        let mut two = b;
        two.push(el(2));
        two.extend((3..=n).map(|i| el(1) | el(i)));
        let r = Relabel::new(n, a0);
        return Ok((
            one.into_iter().map(|m| r.map(m)).collect(),
            two.into_iter().map(|m| r.map(m)).collect(),
        ));
    } else if size == n - 1 {
        let both = el(n - 1) | el(n);
        let b: Vec<u32> = sets_of_size(n, half + 1).filter(|s| s & both == both).take(k - 1).collect();
        if b.len() < k - 1 {
            return Err(short("padding sets"));
        }
        (range(1, n - 1), range(1, n) & !el(n - 1), b)
    } else {
        let l = n - size;
        let a = range(1, n - l);
        let w = el(n - l + 1);
        let top = el(n);
        let pool: Vec<u32> = sets_of_size(n, half).filter(|s| s & top != 0 && s & el(1) == 0).collect();
        let mut shared = Vec::with_capacity(k - 1);
        if size >= half {
            // One padding set must sit inside a ∪ {n}, else that query tells the two apart.
            let inner = *pool.iter().find(|&&s| s & !(a | top) == 0).ok_or_else(|| short("padding sets"))?;
            shared.extend((1..=l - 2).map(|i| (a & !el(2)) | el(n - i)));
            shared.push(inner);
            shared.extend(pool.iter().filter(|&&s| s != inner).take(k - l));
            if shared.len() < k - 1 {
                return Err(short("padding sets"));
            }
        } else {
            shared.extend((n - l + 2..=n).map(|y| (a & !el(2)) | el(y)));
            shared.extend(pool.iter().take(k - l));
            if shared.len() < k - 1 {
                return Err(short("padding sets"));
            }
        }
        (a, a | w, shared)
    };
    let r = Relabel::new(n, a0);
    let (x, y) = pair_up(r.map(one), r.map(other), shared.into_iter().map(|m| r.map(m)).collect());
    Ok((x, y))
}
