use super::family::Antichain;
use super::mask::check_n;
use crate::error::{Error, Result};

/// Hard cap on the ground set for exhaustive antichain enumeration.
pub const ENUMERATION_MAX_N: usize = 8;

/// Streams every `k`-member antichain over `[n]` exactly once.
///
/// Order is canonical: each antichain lists its members ascending by mask,
/// and antichains come out in lexicographic order of those member tuples.
pub fn enumerate_antichains(n: usize, k: usize) -> Result<Antichains> {
    check_n(n)?;
    if n > ENUMERATION_MAX_N {
        return Err(Error::resource(format!(
            "antichain enumeration capped at n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    if k == 0 {
        return Err(Error::contract("antichain size k must be at least 1"));
    }
    Ok(Antichains {
        n,
        k,
        limit: 1 << n,
        stack: Vec::with_capacity(k),
        cursor: 0,
        done: false,
    })
}

/// Iterator returned by [`enumerate_antichains`].
#[derive(Debug, Clone)]
pub struct Antichains {
    n: usize,
    k: usize,
    limit: u32,
    stack: Vec<u32>,
    cursor: u32,
    done: bool,
}

impl Antichains {
    #[inline]
    fn compatible(&self, c: u32) -> bool {
        self.stack
            .iter()
            .all(|&m| m & !c != 0 && c & !m != 0)
    }
}

impl Iterator for Antichains {
    type Item = Antichain;

    fn next(&mut self) -> Option<Antichain> {
        if self.done {
            return None;
        }
        loop {
            if self.stack.len() == self.k {
                let out = Antichain::from_raw(self.n, self.stack.iter().copied());
                let last = self.stack.pop().expect("k >= 1");
                self.cursor = last + 1;
                return Some(out);
            }
            while self.cursor < self.limit && !self.compatible(self.cursor) {
                self.cursor += 1;
            }
            if self.cursor < self.limit {
                self.stack.push(self.cursor);
                self.cursor += 1;
            } else {
                match self.stack.pop() {
                    Some(last) => self.cursor = last + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}
