use super::family::SetFamily;
use super::mask::SubsetMask;
use crate::error::{Error, Result};

/// Whether `a` meets every member of `f`.
///
/// An empty `f` is rejected: every set covers it vacuously and no caller in
/// this crate should depend on that.
pub fn is_cover(a: SubsetMask, f: &SetFamily) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::contract("is_cover called with an empty family"));
    }
    if a.n() != f.n() {
        return Err(Error::Dimension {
            left: a.n(),
            right: f.n(),
        });
    }
    Ok(covers(a.bits(), &f.bits().collect::<Vec<_>>()))
}

#[inline]
pub(crate) fn covers(candidate: u32, members: &[u32]) -> bool {
    members.iter().all(|&m| m & candidate != 0)
}

/// Minimal covers of raw member masks, ascending by mask value.
///
/// Only subsets of the union of the members can be minimal, so the scan runs
/// over submasks of the union. A cover is minimal exactly when dropping any
/// single element breaks it.
pub(crate) fn minimal_cover_bits(members: &[u32]) -> Vec<u32> {
    if members.contains(&0) {
        return Vec::new();
    }
    let union = members.iter().fold(0u32, |acc, &m| acc | m);
    let mut out = Vec::new();
    let mut s = 0u32;
    loop {
        if covers(s, members) && is_minimal_cover(s, members) {
            out.push(s);
        }
        s = s.wrapping_sub(union) & union;
        if s == 0 {
            break;
        }
    }
    out
}

#[inline]
fn is_minimal_cover(cover: u32, members: &[u32]) -> bool {
    let mut rest = cover;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        if covers(cover & !bit, members) {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

/// All minimal covers (transversals) of `f`, in canonical order.
///
/// A family with an empty member has no covers at all and yields the empty
/// family.
pub fn minimal_covers(f: &SetFamily) -> Result<SetFamily> {
    if f.is_empty() {
        return Err(Error::contract("minimal_covers called with an empty family"));
    }
    let members: Vec<u32> = f.bits().collect();
    Ok(SetFamily::from_raw(f.n(), minimal_cover_bits(&members)))
}
