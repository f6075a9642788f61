use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::mask::{check_n, SubsetMask};
use crate::error::{Error, Result};

/// Wire form shared by every family-valued type: `{"n": 5, "sets": [[1, 3], [2]]}`
/// with 1-based elements listed ascending.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct FamilyRepr {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

/// An ordered, duplicate-free collection of subsets of a common ground set.
///
/// Order is preserved as given. Generated families use the canonical order
/// (ascending by mask value); see [`SetFamily::sorted`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct SetFamily {
    n: u8,
    members: Vec<SubsetMask>,
}

impl SetFamily {
    pub fn new(n: usize, members: Vec<SubsetMask>) -> Result<Self> {
        check_n(n)?;
        let mut seen = HashSet::with_capacity(members.len());
        for m in &members {
            if m.n() != n {
                return Err(Error::Dimension {
                    left: n,
                    right: m.n(),
                });
            }
            if !seen.insert(m.bits()) {
                return Err(Error::contract(format!("duplicate member {m}")));
            }
        }
        Ok(SetFamily { n: n as u8, members })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let members = masks
            .into_iter()
            .map(|b| SubsetMask::new(n, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, members)
    }

    /// Builds a family from lists of 1-based labels.
    pub fn from_sets<S: AsRef<[usize]>>(n: usize, sets: &[S]) -> Result<Self> {
        let members = sets
            .iter()
            .map(|s| SubsetMask::from_elements(n, s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, members)
    }

    /// Unchecked constructor; callers guarantee distinct in-range masks.
    pub(crate) fn from_raw(n: usize, masks: impl IntoIterator<Item = u32>) -> Self {
        SetFamily {
            n: n as u8,
            members: masks
                .into_iter()
                .map(|b| SubsetMask::from_raw(n, b))
                .collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubsetMask> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: SubsetMask) -> bool {
        self.members.contains(&m)
    }

    pub(crate) fn bits(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().map(|m| m.bits())
    }

    /// Appends a member; duplicates and foreign ground sets are rejected.
    pub fn push(&mut self, m: SubsetMask) -> Result<()> {
        if m.n() != self.n() {
            return Err(Error::Dimension {
                left: self.n(),
                right: m.n(),
            });
        }
        if self.contains(m) {
            return Err(Error::contract(format!("duplicate member {m}")));
        }
        self.members.push(m);
        Ok(())
    }

    /// Removes `m` if present, returning whether it was there.
    pub fn remove(&mut self, m: SubsetMask) -> bool {
        match self.members.iter().position(|&x| x == m) {
            Some(i) => {
                self.members.remove(i);
                true
            }
            None => false,
        }
    }

    /// Same members in canonical order.
    pub fn sorted(&self) -> SetFamily {
        let mut members = self.members.clone();
        members.sort_unstable_by_key(|m| m.bits());
        SetFamily { n: self.n, members }
    }

    /// Equality of member sets, ignoring order.
    pub fn same_members(&self, other: &SetFamily) -> bool {
        self.n == other.n && self.sorted().members == other.sorted().members
    }

    /// True when no member contains another.
    pub fn is_antichain(&self) -> bool {
        self.members.iter().enumerate().all(|(i, a)| {
            self.members[i + 1..]
                .iter()
                .all(|b| !a.subset_of(*b) && !b.subset_of(*a))
        })
    }

    /// Members that contain no other member as a proper subset, in input order.
    pub fn minimal_members(&self) -> SetFamily {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|a| {
                !self
                    .members
                    .iter()
                    .any(|b| b != a && b.subset_of(*a))
            })
            .collect();
        SetFamily { n: self.n, members }
    }

    /// Replaces every member by its complement in `[n]`, keeping order.
    pub fn complement_family(&self) -> SetFamily {
        SetFamily {
            n: self.n,
            members: self.members.iter().map(|m| m.complement()).collect(),
        }
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a SubsetMask;
    type IntoIter = std::slice::Iter<'a, SubsetMask>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl TryFrom<FamilyRepr> for SetFamily {
    type Error = Error;

    fn try_from(repr: FamilyRepr) -> Result<Self> {
        SetFamily::from_sets(repr.n, &repr.sets)
    }
}

impl From<SetFamily> for FamilyRepr {
    fn from(f: SetFamily) -> Self {
        FamilyRepr {
            n: f.n(),
            sets: f.members.iter().map(|m| m.elements().collect()).collect(),
        }
    }
}

/// A family whose members are pairwise incomparable, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct Antichain(SetFamily);

impl Antichain {
    /// Validates incomparability and sorts the members canonically.
    pub fn new(family: SetFamily) -> Result<Self> {
        if !family.is_antichain() {
            return Err(Error::contract(format!("{family} is not an antichain")));
        }
        Ok(Antichain(family.sorted()))
    }

    pub fn from_sets<S: AsRef<[usize]>>(n: usize, sets: &[S]) -> Result<Self> {
        Self::new(SetFamily::from_sets(n, sets)?)
    }

    /// Unchecked; callers guarantee an antichain of distinct in-range masks.
    pub(crate) fn from_raw(n: usize, masks: impl IntoIterator<Item = u32>) -> Self {
        let fam = SetFamily::from_raw(n, masks);
        debug_assert!(fam.is_antichain());
        Antichain(fam.sorted())
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> &[SubsetMask] {
        self.0.members()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SubsetMask> {
        self.0.iter()
    }

    pub fn contains(&self, m: SubsetMask) -> bool {
        self.0.contains(m)
    }

    pub fn as_family(&self) -> &SetFamily {
        &self.0
    }

    pub fn into_family(self) -> SetFamily {
        self.0
    }

    pub(crate) fn bits(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.bits()
    }
}

impl<'a> IntoIterator for &'a Antichain {
    type Item = &'a SubsetMask;
    type IntoIter = std::slice::Iter<'a, SubsetMask>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<FamilyRepr> for Antichain {
    type Error = Error;

    fn try_from(repr: FamilyRepr) -> Result<Self> {
        Antichain::new(SetFamily::try_from(repr)?)
    }
}

impl From<Antichain> for FamilyRepr {
    fn from(a: Antichain) -> Self {
        a.0.into()
    }
}

impl From<Antichain> for SetFamily {
    fn from(a: Antichain) -> Self {
        a.0
    }
}
