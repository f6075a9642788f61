use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_N: usize = 20;

/// A subset of `[n] = {1, ..., n}` stored as an `n`-bit mask: bit `i - 1` is set
/// exactly when element `i` belongs to the set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    n: u8,
    bits: u32,
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if (1..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::contract(format!(
            "ground-set size {n} outside 1..={MAX_N}"
        )))
    }
}

#[inline]
pub(crate) fn full_bits(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl SubsetMask {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_n(n)?;
        if bits & !full_bits(n) != 0 {
            return Err(Error::contract(format!(
                "mask {bits:#b} has bits outside [{n}]"
            )));
        }
        Ok(Self::from_raw(n, bits))
    }

    /// Builds a mask without range checks. Callers guarantee `bits < 2^n`.
    #[inline]
    pub(crate) fn from_raw(n: usize, bits: u32) -> Self {
        debug_assert!(n <= MAX_N && bits & !full_bits(n) == 0);
        SubsetMask { n: n as u8, bits }
    }

    /// Builds a set from 1-based element labels. Repeated labels are ignored.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::contract(format!(
                    "element {e} outside ground set [{n}]"
                )));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Self::from_raw(n, bits))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// The whole ground set `[n]`.
    pub fn full(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_raw(n, full_bits(n)))
    }

    #[inline]
    pub fn n(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= self.n() && self.bits & (1 << (element - 1)) != 0
    }

    /// Element labels in ascending order.
    pub fn elements(self) -> impl DoubleEndedIterator<Item = usize> {
        let bits = self.bits;
        (1..=self.n()).filter(move |e| bits & (1 << (e - 1)) != 0)
    }

    fn same_n(self, other: SubsetMask) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension {
                left: self.n(),
                right: other.n(),
            })
        }
    }

    /// `self ⊆ other`.
    pub fn is_subset(self, other: SubsetMask) -> Result<bool> {
        self.same_n(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    #[inline]
    pub(crate) fn subset_of(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(self) -> SubsetMask {
        Self::from_raw(self.n(), !self.bits & full_bits(self.n()))
    }

    pub fn intersects(self, other: SubsetMask) -> Result<bool> {
        self.same_n(other)?;
        Ok(self.bits & other.bits != 0)
    }

    pub fn union(self, other: SubsetMask) -> Result<SubsetMask> {
        self.same_n(other)?;
        Ok(Self::from_raw(self.n(), self.bits | other.bits))
    }

    pub fn difference(self, other: SubsetMask) -> Result<SubsetMask> {
        self.same_n(other)?;
        Ok(Self::from_raw(self.n(), self.bits & !other.bits))
    }

    /// Same set with `element` added; out-of-range labels are a contract error.
    pub fn with(self, element: usize) -> Result<SubsetMask> {
        if element == 0 || element > self.n() {
            return Err(Error::contract(format!(
                "element {element} outside ground set [{}]",
                self.n()
            )));
        }
        Ok(Self::from_raw(self.n(), self.bits | 1 << (element - 1)))
    }

    pub fn without(self, element: usize) -> Result<SubsetMask> {
        if element == 0 || element > self.n() {
            return Err(Error::contract(format!(
                "element {element} outside ground set [{}]",
                self.n()
            )));
        }
        Ok(Self::from_raw(self.n(), self.bits & !(1 << (element - 1))))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(n, e).unwrap()
    }

    #[test]
    fn subset_examples() {
        assert!(set(3, &[1]).is_subset(set(3, &[1, 3])).unwrap());
        assert!(!set(3, &[1, 2]).is_subset(set(3, &[1, 3])).unwrap());
        assert!(set(3, &[]).is_subset(set(3, &[])).unwrap());
    }

    #[test]
    fn mismatched_ground_sets() {
        let err = set(3, &[1]).is_subset(set(4, &[1])).unwrap_err();
        assert_eq!(err, Error::Dimension { left: 3, right: 4 });
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(SubsetMask::new(3, 0b1000).is_err());
        assert!(SubsetMask::from_elements(3, &[4]).is_err());
        assert!(SubsetMask::from_elements(3, &[0]).is_err());
        assert!(SubsetMask::new(0, 0).is_err());
        assert!(SubsetMask::new(21, 0).is_err());
        assert!(SubsetMask::full(20).is_ok());
    }

    #[test]
    fn display_and_elements() {
        let s = set(5, &[3, 1]);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(s.elements().rev().collect::<Vec<_>>(), vec![3, 1]);
        assert_eq!(s.complement(), set(5, &[2, 4, 5]));
        assert_eq!(SubsetMask::empty(2).unwrap().to_string(), "{}");
    }
}
