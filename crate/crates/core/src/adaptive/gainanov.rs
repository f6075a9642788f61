use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::oracle::{QueryOracle, Transcript};
use crate::set::{full_bits, SubsetMask};

/// Finds one member of the hidden antichain inside `a` with exactly `|a|`
/// queries.
///
/// Elements of `a` are tried in descending label order. Each step asks the
/// current candidate minus the next element: YES drops the element for good,
/// NO proves every remaining member inside the candidate needs it. After the
/// last step the candidate is a minimal YES set, hence a member.
///
/// `a` must be known to contain a member: either `a = [n]`, or `a` was
/// answered YES earlier. If every step answers NO the result is `a` itself,
/// which is only certified by that earlier YES; a recorded NO for `a` is a
/// contract error.
pub fn gainanov_find_one<O: QueryOracle + ?Sized>(oracle: &mut O, a: SubsetMask) -> Result<SubsetMask> {
    if a.n() != oracle.n() {
        return Err(Error::Dimension {
            left: oracle.n(),
            right: a.n(),
        });
    }
    let (found, saw_yes) = shrink(oracle, a, a.bits())?;
    if !saw_yes && !certified(oracle.transcript(), a) {
        return Err(Error::contract(format!(
            "{a} was answered NO, so it holds no member of the hidden antichain"
        )));
    }
    Ok(found)
}

fn certified(t: &Transcript, a: SubsetMask) -> bool {
    a.bits() == full_bits(a.n()) || t.recorded(a) != Some(false)
}

/// Element removal over the elements of `free`, starting from `start`.
/// Elements of `start` outside `free` stay in every query.
pub(crate) fn shrink<O: QueryOracle + ?Sized>(
    oracle: &mut O,
    start: SubsetMask,
    free: u32,
) -> Result<(SubsetMask, bool)> {
    let n = start.n();
    let mut candidate = start.bits();
    let mut saw_yes = false;
    for x in (0..n).rev().filter(|x| free >> x & 1 == 1) {
        let q = SubsetMask::from_raw(n, candidate & !(1 << x));
        if oracle.ask(q)? {
            candidate = q.bits();
            saw_yes = true;
        }
    }
    Ok((SubsetMask::from_raw(n, candidate), saw_yes))
}

/// Wraps an oracle so that repeated queries are served from memory.
pub(crate) struct Cached<'a, O: ?Sized> {
    inner: &'a mut O,
    memo: HashMap<u32, bool>,
}

impl<'a, O: QueryOracle + ?Sized> Cached<'a, O> {
    pub(crate) fn new(inner: &'a mut O) -> Self {
        Cached {
            inner,
            memo: HashMap::new(),
        }
    }
}

impl<O: QueryOracle + ?Sized> QueryOracle for Cached<'_, O> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn ask(&mut self, query: SubsetMask) -> Result<bool> {
        if let Some(&a) = self.memo.get(&query.bits()) {
            return Ok(a);
        }
        let a = self.inner.ask(query)?;
        self.memo.insert(query.bits(), a);
        Ok(a)
    }

    fn queries_used(&self) -> usize {
        self.inner.queries_used()
    }

    fn transcript(&self) -> &Transcript {
        self.inner.transcript()
    }
}
