//! The truthful answerer: a hidden antichain behind superset queries, plus the
//! brute-force referee listing every antichain consistent with a transcript.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{enumerate_antichains, Antichain, SubsetMask};

/// Largest ground set accepted by [`consistent_antichains`].
pub const REFEREE_MAX_N: usize = 6;

/// YES exactly when some member of `hidden` is contained in `query`.
pub fn answer_query(hidden: &Antichain, query: SubsetMask) -> Result<bool> {
    if hidden.n() != query.n() {
        return Err(Error::Dimension {
            left: hidden.n(),
            right: query.n(),
        });
    }
    Ok(hidden.iter().any(|h| h.subset_of(query)))
}

/// One asked query and its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub query: SubsetMask,
    pub answer: bool,
}

/// Queries in ask order with their answers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TranscriptRepr", into = "TranscriptRepr")]
pub struct Transcript {
    n: usize,
    entries: Vec<Entry>,
}

impl Transcript {
    pub fn new(n: usize) -> Result<Self> {
        crate::set::check_n(n)?;
        Ok(Transcript {
            n,
            entries: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, query: SubsetMask, answer: bool) -> Result<()> {
        if query.n() != self.n {
            return Err(Error::Dimension {
                left: self.n,
                right: query.n(),
            });
        }
        self.entries.push(Entry { query, answer });
        Ok(())
    }

    /// The most recent recorded answer to `query`, if it was ever asked.
    pub fn recorded(&self, query: SubsetMask) -> Option<bool> {
        self.entries
            .iter()
            .rev()
            .find(|e| e.query == query)
            .map(|e| e.answer)
    }

    /// Whether `candidate` would have produced every recorded answer.
    pub fn is_consistent_with(&self, candidate: &Antichain) -> Result<bool> {
        for e in &self.entries {
            if answer_query(candidate, e.query)? != e.answer {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    query: Vec<usize>,
    answer: bool,
}

#[derive(Serialize, Deserialize)]
struct TranscriptRepr {
    n: usize,
    entries: Vec<EntryRepr>,
}

impl From<Entry> for EntryRepr {
    fn from(e: Entry) -> Self {
        EntryRepr {
            query: e.query.elements().collect(),
            answer: e.answer,
        }
    }
}

impl From<Transcript> for TranscriptRepr {
    fn from(t: Transcript) -> Self {
        TranscriptRepr {
            n: t.n,
            entries: t.entries.into_iter().map(EntryRepr::from).collect(),
        }
    }
}

impl TryFrom<TranscriptRepr> for Transcript {
    type Error = Error;

    fn try_from(r: TranscriptRepr) -> Result<Self> {
        let mut t = Transcript::new(r.n)?;
        for e in r.entries {
            t.push(SubsetMask::from_elements(r.n, &e.query)?, e.answer)?;
        }
        Ok(t)
    }
}

/// Anything that answers superset queries and keeps an account of them.
///
/// Implemented by the truthful [`OracleState`] and by the lower-bound
/// adversaries, so every solver can play against either.
pub trait QueryOracle {
    fn n(&self) -> usize;

    fn ask(&mut self, query: SubsetMask) -> Result<bool>;

    fn queries_used(&self) -> usize;

    fn transcript(&self) -> &Transcript;
}

/// A hidden antichain with a query counter and a log of every exchange.
#[derive(Debug, Clone)]
pub struct OracleState {
    hidden: Antichain,
    log: Transcript,
}

impl OracleState {
    pub fn new(hidden: Antichain) -> Self {
        let log = Transcript {
            n: hidden.n(),
            entries: Vec::new(),
        };
        OracleState { hidden, log }
    }

    pub fn hidden(&self) -> &Antichain {
        &self.hidden
    }

    pub fn count(&self) -> usize {
        self.log.len()
    }

    pub fn log(&self) -> &Transcript {
        &self.log
    }

    pub fn into_transcript(self) -> Transcript {
        self.log
    }
}

impl QueryOracle for OracleState {
    fn n(&self) -> usize {
        self.hidden.n()
    }

    /// Repeated queries are answered again and charged again.
    fn ask(&mut self, query: SubsetMask) -> Result<bool> {
        let answer = answer_query(&self.hidden, query)?;
        self.log.push(query, answer)?;
        Ok(answer)
    }

    fn queries_used(&self) -> usize {
        self.log.len()
    }

    fn transcript(&self) -> &Transcript {
        &self.log
    }
}

/// Every `k`-antichain that would have produced all answers in `t`.
pub fn consistent_antichains(t: &Transcript, k: usize) -> Result<Vec<Antichain>> {
    if t.n() > REFEREE_MAX_N {
        return Err(Error::resource(format!(
            "consistency referee capped at n <= {REFEREE_MAX_N}, got {}",
            t.n()
        )));
    }
    let mut out = Vec::new();
    for s in enumerate_antichains(t.n(), k)? {
        if t.is_consistent_with(&s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// The upfamily of `s` as a `2^n`-bit truth table: bit `q` is set when query
/// mask `q` is answered YES. Only for `n <= 6`.
pub(crate) fn upset_table(s: &Antichain) -> u64 {
    let n = s.n();
    debug_assert!(n <= 6);
    let members: Vec<u32> = s.bits().collect();
    let mut table = 0u64;
    for q in 0..(1u32 << n) {
        if members.iter().any(|&h| h & !q == 0) {
            table |= 1 << q;
        }
    }
    table
}
