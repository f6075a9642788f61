use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::upset_table;
use crate::set::{check_n, enumerate_antichains, Antichain};

/// Ground-set cap for the exhaustive minimax.
pub const EXACT_F_MAX_N: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactFOptions {
    /// Maximum number of distinct game states expanded before giving up.
    pub node_budget: u64,
    /// Merge states that differ by a relabelling of the ground set.
    pub symmetry: bool,
}

impl Default for ExactFOptions {
    fn default() -> Self {
        ExactFOptions {
            node_budget: 5_000_000,
            symmetry: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactF {
    /// Worst-case optimal number of adaptive queries.
    pub value: u32,
    /// Number of `k`-antichains over `[n]`.
    pub antichains: usize,
    /// `ceil(log2(antichains))`.
    pub information_bound: u32,
    /// States expanded by the search.
    pub nodes: u64,
}

/// Exact `f(n, k)` by memoized minimax; see [`exact_f_with`].
pub fn exact_f(n: usize, k: usize) -> Result<u32> {
    exact_f_with(n, k, &ExactFOptions::default()).map(|r| r.value)
}

/// Exact worst-case optimal query count for identifying a `k`-antichain over
/// `[n]`, `n <= 4`.
///
/// A game state is the set of antichains consistent with the answers so far.
/// The questioner may ask any of the `2^n` sets; the adversary picks the
/// answer whose subtree is deeper. States with at most one antichain are
/// terminal. Values are memoized per state and are always exact: pruning only
/// skips queries that provably cannot beat the best value found so far.
pub fn exact_f_with(n: usize, k: usize, opts: &ExactFOptions) -> Result<ExactF> {
    check_n(n)?;
    if n > EXACT_F_MAX_N {
        return Err(Error::resource(format!(
            "exact minimax capped at n <= {EXACT_F_MAX_N}, got {n}"
        )));
    }
    let antichains: Vec<Antichain> = enumerate_antichains(n, k)?.collect();
    let count = antichains.len();
    let mut game = Game::new(n, &antichains, opts);
    let root = State::full(count);
    let value = match game.value(&root, 0) {
        Ok(v) => v,
        Err(Error::BudgetExceeded { budget, .. }) => {
            return Err(Error::BudgetExceeded {
                budget,
                lower: ceil_log2(count),
                upper: game.root_best,
            })
        }
        Err(e) => return Err(e),
    };
    Ok(ExactF {
        value,
        antichains: count,
        information_bound: ceil_log2(count),
        nodes: game.nodes,
    })
}

pub(crate) fn ceil_log2(x: usize) -> u32 {
    if x <= 1 {
        0
    } else {
        usize::BITS - (x - 1).leading_zeros()
    }
}

/// A set of antichain indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct State(Vec<u64>);

impl State {
    fn empty(len: usize) -> Self {
        State(vec![0; len.div_ceil(64).max(1)])
    }

    fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &State) -> State {
        State(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &State) -> State {
        State(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn count_and(&self, other: &State) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

struct Game {
    len: usize,
    /// For each query mask, the antichains answering YES.
    yes_sets: Vec<State>,
    /// Index permutations induced by relabelling `[n]`; empty unless symmetry is on.
    relabelings: Vec<Vec<usize>>,
    memo: HashMap<State, u32>,
    budget: u64,
    nodes: u64,
    root_best: Option<u32>,
}

impl Game {
    fn new(n: usize, antichains: &[Antichain], opts: &ExactFOptions) -> Self {
        let len = antichains.len();
        let tables: Vec<u64> = antichains.iter().map(upset_table).collect();
        let yes_sets = (0..1u32 << n)
            .map(|q| {
                let mut s = State::empty(len);
                for (i, t) in tables.iter().enumerate() {
                    if t >> q & 1 == 1 {
                        s.insert(i);
                    }
                }
                s
            })
            .collect();
        let relabelings = if opts.symmetry {
            relabelings(n, antichains)
        } else {
            Vec::new()
        };
        Game {
            len,
            yes_sets,
            relabelings,
            memo: HashMap::new(),
            budget: opts.node_budget,
            nodes: 0,
            root_best: None,
        }
    }

    fn canonical(&self, s: &State) -> State {
        let mut best = s.clone();
        for perm in &self.relabelings {
            let mut image = State::empty(self.len);
            for i in s.indices() {
                image.insert(perm[i]);
            }
            if image < best {
                best = image;
            }
        }
        best
    }

    fn value(&mut self, state: &State, depth: usize) -> Result<u32> {
        let total = state.count();
        if total <= 1 {
            return Ok(0);
        }
        let key = self.canonical(state);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                lower: 0,
                upper: None,
            });
        }
        let floor = ceil_log2(total);

        // Splitting queries, most balanced first.
        let mut moves: Vec<(usize, usize)> = self
            .yes_sets
            .iter()
            .enumerate()
            .filter_map(|(q, ys)| {
                let y = state.count_and(ys);
                (y != 0 && y != total).then(|| (y.max(total - y), q))
            })
            .collect();
        moves.sort_unstable();

        let mut best = u32::MAX;
        for (larger, q) in moves {
            if 1 + ceil_log2(larger) >= best {
                continue;
            }
            let yes = state.and(&self.yes_sets[q]);
            let no = state.and_not(&self.yes_sets[q]);
            let (big, small) = if yes.count() >= no.count() {
                (yes, no)
            } else {
                (no, yes)
            };
            let v_big = self.value(&big, depth + 1)?;
            if 1 + v_big >= best {
                continue;
            }
            let v_small = self.value(&small, depth + 1)?;
            best = best.min(1 + v_big.max(v_small));
            if depth == 0 {
                self.root_best = Some(best);
            }
            if best == floor {
                break;
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }
}

/// For every permutation of `[n]`, where each antichain index is sent.
fn relabelings(n: usize, antichains: &[Antichain]) -> Vec<Vec<usize>> {
    let index: HashMap<Vec<u32>, usize> = antichains
        .iter()
        .enumerate()
        .map(|(i, a)| (a.bits().collect(), i))
        .collect();
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permutations(&mut current, 0, &mut perms);
    perms
        .into_iter()
        .map(|p| {
            antichains
                .iter()
                .map(|a| {
                    let mut image: Vec<u32> = a
                        .bits()
                        .map(|m| (0..n).filter(|&x| m >> x & 1 == 1).fold(0, |acc, x| acc | 1 << p[x]))
                        .collect();
                    image.sort_unstable();
                    index[&image]
                })
                .collect()
        })
        .collect()
}

fn permutations(current: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == current.len() {
        out.push(current.clone());
        return;
    }
    for i in at..current.len() {
        current.swap(at, i);
        permutations(current, at + 1, out);
        current.swap(at, i);
    }
}
