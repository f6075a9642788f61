use serde::Serialize;

use super::construction::missing_set_construction;
use crate::adaptive::ceil_log2;
use crate::answer_query;
use crate::error::{Error, Result};
use crate::oracle::{QueryOracle, Transcript};
use crate::set::{check_n, enumerate_antichains, minimal_covers, Antichain, SetFamily, SubsetMask};

/// Ground-set cap for the partition adversary.
pub const THEOREM5_MAX_N: usize = 12;
/// Ground-set cap for the counting adversary, which tracks every 2-antichain.
pub const K2_COUNTING_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Strategy {
    NonadaptiveMissingSet,
    Theorem5Partition,
    K2Counting,
}

#[derive(Debug, Clone)]
enum Play {
    MissingSet {
        first: Antichain,
        second: Antichain,
        a0: SubsetMask,
        distinguished: bool,
    },
    Partition {
        candidates: SetFamily,
        committed: Option<SubsetMask>,
        product: usize,
    },
    Counting {
        pairs: Vec<[u32; 2]>,
        total: u128,
    },
}

/// A lower-bound adversary that answers queries as a [`QueryOracle`].
#[derive(Debug, Clone)]
pub struct AdversaryState {
    n: usize,
    k: usize,
    strategy: Strategy,
    revealed: Option<Antichain>,
    play: Play,
    log: Transcript,
    candidate_queries: usize,
}

/// The partition adversary for `n > k >= 3`, `n <= 12`.
///
/// The first `k - 1` members are announced: consecutive blocks of sizes
/// `⌊(n+i-1)/(k-1)⌋`. The last member is one of the complements of the
/// blocks' minimal covers; each one queried is denied until a single one
/// remains.
pub fn theorem5_adversary(n: usize, k: usize) -> Result<AdversaryState> {
    AdversaryState::theorem5(n, k)
}

/// Block sizes `⌊(n+i-1)/(k-1)⌋` for `i = 1, ..., k-1`.
pub fn partition_sizes(n: usize, k: usize) -> Vec<usize> {
    (1..k).map(|i| (n + i - 1) / (k - 1)).collect()
}

impl AdversaryState {
    pub fn theorem5(n: usize, k: usize) -> Result<Self> {
        check_n(n)?;
        if k < 3 || n <= k {
            return Err(Error::regime(format!(
                "the partition adversary needs n > k >= 3, got (n, k) = ({n}, {k})"
            )));
        }
        if n > THEOREM5_MAX_N {
            return Err(Error::resource(format!(
                "partition adversary capped at n <= {THEOREM5_MAX_N}, got {n}"
            )));
        }
        let sizes = partition_sizes(n, k);
        let mut blocks = Vec::with_capacity(k - 1);
        let mut at = 0;
        for s in &sizes {
            blocks.push(((1u32 << s) - 1) << at);
            at += s;
        }
        let revealed = SetFamily::from_raw(n, blocks);
        let candidates = minimal_covers(&revealed)?.complement_family().sorted();
        Ok(AdversaryState {
            n,
            k,
            strategy: Strategy::Theorem5Partition,
            revealed: Some(Antichain::new(revealed)?),
            play: Play::Partition {
                product: candidates.len(),
                candidates,
                committed: None,
            },
            log: Transcript::new(n)?,
            candidate_queries: 0,
        })
    }

    /// Answers as the first family of [`missing_set_construction`]; the
    /// second stays consistent until `a0` (or its partner) is asked.
    pub fn missing_set(n: usize, k: usize, a0: SubsetMask) -> Result<Self> {
        let (first, second) = missing_set_construction(n, k, a0)?;
        Ok(AdversaryState {
            n,
            k,
            strategy: Strategy::NonadaptiveMissingSet,
            revealed: None,
            play: Play::MissingSet {
                first,
                second,
                a0,
                distinguished: false,
            },
            log: Transcript::new(n)?,
            candidate_queries: 0,
        })
    }

    /// Keeps every 2-antichain consistent with the answers and always gives
    /// the answer that keeps more of them (NO on ties).
    pub fn k2_counting(n: usize) -> Result<Self> {
        check_n(n)?;
        if n > K2_COUNTING_MAX_N {
            return Err(Error::resource(format!(
                "counting adversary capped at n <= {K2_COUNTING_MAX_N}, got {n}"
            )));
        }
        let pairs: Vec<[u32; 2]> = enumerate_antichains(n, 2)?
            .map(|a| {
                let b: Vec<u32> = a.bits().collect();
                [b[0], b[1]]
            })
            .collect();
        Ok(AdversaryState {
            n,
            k: 2,
            strategy: Strategy::K2Counting,
            revealed: None,
            play: Play::Counting {
                total: pairs.len() as u128,
                pairs,
            },
            log: Transcript::new(n)?,
            candidate_queries: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// Members given away for free.
    pub fn revealed(&self) -> Option<&Antichain> {
        self.revealed.as_ref()
    }

    /// Still-possible final members (partition adversary only; empty otherwise).
    pub fn candidates(&self) -> SetFamily {
        match &self.play {
            Play::Partition {
                candidates,
                committed: Some(c),
                ..
            } => SetFamily::from_raw(candidates.n(), [c.bits()]),
            Play::Partition { candidates, .. } => candidates.clone(),
            _ => SetFamily::from_raw(self.n, []),
        }
    }

    /// Queries that hit a live candidate (partition), or all queries otherwise.
    pub fn candidate_queries(&self) -> usize {
        match self.play {
            Play::Partition { .. } => self.candidate_queries,
            _ => self.log.len(),
        }
    }

    /// Queries every questioner must spend against this adversary, when the
    /// strategy certifies one.
    pub fn lower_bound(&self) -> Option<u64> {
        match &self.play {
            Play::Partition { product, .. } => Some(*product as u64 - 1),
            Play::Counting { total, .. } => Some(ceil_log2(*total as usize) as u64),
            Play::MissingSet { .. } => None,
        }
    }

    /// Number of `k`-antichains still consistent with the answers given.
    pub fn completions(&self) -> usize {
        match &self.play {
            Play::MissingSet { distinguished, .. } => {
                if *distinguished {
                    1
                } else {
                    2
                }
            }
            Play::Partition {
                candidates,
                committed,
                ..
            } => {
                if committed.is_some() {
                    1
                } else {
                    candidates.len()
                }
            }
            Play::Counting { pairs, .. } => pairs.len(),
        }
    }

    /// The single remaining completion once the game is decided.
    pub fn resolved(&self) -> Option<Antichain> {
        if self.completions() != 1 {
            return None;
        }
        match &self.play {
            Play::MissingSet { first, .. } => Some(first.clone()),
            Play::Partition { .. } => {
                let c = self.candidates().members()[0];
                Some(self.with_revealed(c))
            }
            Play::Counting { pairs, .. } => Some(Antichain::from_raw(self.n, pairs[0])),
        }
    }

    fn with_revealed(&self, last: SubsetMask) -> Antichain {
        let revealed = self.revealed.as_ref().expect("partition adversary reveals members");
        Antichain::from_raw(self.n, revealed.bits().chain([last.bits()]))
    }

    /// Every completion still consistent with the answers (partition and
    /// missing-set strategies), for auditing.
    pub fn live_completions(&self) -> Vec<Antichain> {
        match &self.play {
            Play::MissingSet {
                first,
                second,
                distinguished,
                ..
            } => {
                if *distinguished {
                    vec![first.clone()]
                } else {
                    vec![first.clone(), second.clone()]
                }
            }
            Play::Partition { .. } => self.candidates().iter().map(|&c| self.with_revealed(c)).collect(),
            Play::Counting { pairs, .. } => pairs.iter().map(|&p| Antichain::from_raw(self.n, p)).collect(),
        }
    }

    fn answer(&mut self, q: SubsetMask) -> Result<bool> {
        let qb = q.bits();
        match &mut self.play {
            Play::MissingSet {
                first,
                second,
                a0,
                distinguished,
            } => {
                let ans = answer_query(first, q)?;
                if q == *a0 || ans != answer_query(second, q)? {
                    *distinguished = true;
                }
                Ok(ans)
            }
            Play::Partition {
                candidates,
                committed,
                ..
            } => {
                let revealed = self.revealed.as_ref().expect("partition adversary reveals members");
                if revealed.bits().any(|b| b & !qb == 0) {
                    return Ok(true);
                }
                if let Some(c) = committed {
                    return Ok(c.bits() & !qb == 0);
                }
                let inside: Vec<SubsetMask> = candidates.iter().copied().filter(|c| c.bits() & !qb == 0).collect();
                if inside.is_empty() {
                    return Ok(false);
                }
                if inside.iter().any(|c| c.bits() != qb) {
                    return Ok(true);
                }
                self.candidate_queries += 1;
                if candidates.len() > 1 {
                    candidates.remove(q);
                    Ok(false)
                } else {
                    *committed = Some(q);
                    Ok(true)
                }
            }
            Play::Counting { pairs, .. } => {
                let hit = |p: &[u32; 2]| p[0] & !qb == 0 || p[1] & !qb == 0;
                let yes = pairs.iter().filter(|p| hit(p)).count();
                let ans = yes > pairs.len() - yes;
                pairs.retain(|p| hit(p) == ans);
                Ok(ans)
            }
        }
    }
}

impl QueryOracle for AdversaryState {
    fn n(&self) -> usize {
        self.n
    }

    fn ask(&mut self, query: SubsetMask) -> Result<bool> {
        if query.n() != self.n {
            return Err(Error::Dimension {
                left: self.n,
                right: query.n(),
            });
        }
        let ans = self.answer(query)?;
        self.log.push(query, ans)?;
        Ok(ans)
    }

    fn queries_used(&self) -> usize {
        self.log.len()
    }

    fn transcript(&self) -> &Transcript {
        &self.log
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adaptive::{solve, solve_k2};

    #[test]
    fn partition_shapes() {
        assert_eq!(partition_sizes(7, 3), vec![3, 4]);
        assert_eq!(partition_sizes(9, 4), vec![3, 3, 3]);
        let a = theorem5_adversary(7, 3).unwrap();
        assert_eq!(a.candidates().len(), 12);
        assert_eq!(a.lower_bound(), Some(11));
        let mut all = a.revealed().unwrap().as_family().clone();
        for c in a.candidates().iter() {
            all.push(*c).unwrap();
        }
        assert!(all.is_antichain());
        assert_eq!(theorem5_adversary(9, 4).unwrap().lower_bound(), Some(26));
    }

    #[test]
    fn solver_against_partition() {
        for (n, k, lb) in [(7, 3, 11), (9, 4, 26), (5, 3, 5), (12, 5, 80)] {
            let mut adv = theorem5_adversary(n, k).unwrap();
            let found = solve(&mut adv, n, k).unwrap();
            assert_eq!(Some(found), adv.resolved());
            assert!(adv.candidate_queries() >= lb, "({n},{k})");
            assert!(adv.transcript().is_consistent_with(&adv.resolved().unwrap()).unwrap());
        }
    }

    #[test]
    fn partition_answers_stay_consistent() {
        let mut adv = theorem5_adversary(6, 3).unwrap();
        for q in (0..64u32).rev() {
            adv.ask(SubsetMask::new(6, q).unwrap()).unwrap();
            for c in adv.live_completions() {
                assert!(adv.transcript().is_consistent_with(&c).unwrap());
            }
        }
        assert_eq!(adv.completions(), 1);
    }

    #[test]
    fn regimes() {
        assert!(matches!(theorem5_adversary(3, 3), Err(Error::UnsupportedRegime(_))));
        assert!(matches!(theorem5_adversary(8, 2), Err(Error::UnsupportedRegime(_))));
        assert!(matches!(theorem5_adversary(13, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn counting_adversary_forces_log_bound() {
        for n in 3..=6 {
            let mut adv = AdversaryState::k2_counting(n).unwrap();
            let found = solve_k2(&mut adv, n).unwrap();
            assert_eq!(adv.completions(), 1);
            assert_eq!(Some(found), adv.resolved());
            assert!(adv.queries_used() as u64 >= adv.lower_bound().unwrap());
            assert!(adv.queries_used() <= 2 * n);
        }
    }

    #[test]
    fn missing_set_adversary() {
        let a0 = SubsetMask::from_elements(4, &[1, 2]).unwrap();
        let mut adv = AdversaryState::missing_set(4, 2, a0).unwrap();
        for q in 0..16u32 {
            if q != a0.bits() {
                adv.ask(SubsetMask::new(4, q).unwrap()).unwrap();
            }
        }
        assert_eq!(adv.completions(), 2);
        adv.ask(a0).unwrap();
        assert_eq!(adv.completions(), 1);
    }
}
