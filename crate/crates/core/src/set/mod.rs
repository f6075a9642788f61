//! Subsets of `[n]` as bitmasks, families, antichains and minimal covers.

mod cover;
mod enumerate;
mod family;
mod mask;

pub use cover::{is_cover, minimal_covers};
pub use enumerate::{enumerate_antichains, Antichains, ENUMERATION_MAX_N};
pub use family::{Antichain, SetFamily};
pub use mask::{SubsetMask, MAX_N};

pub(crate) use cover::minimal_cover_bits;
pub(crate) use mask::{check_n, full_bits};

/// Free-function form of [`SubsetMask::is_subset`].
pub fn is_subset(a: SubsetMask, b: SubsetMask) -> crate::Result<bool> {
    a.is_subset(b)
}

/// Free-function form of [`SetFamily::is_antichain`].
pub fn is_antichain(f: &SetFamily) -> bool {
    f.is_antichain()
}

/// Free-function form of [`SetFamily::minimal_members`].
pub fn minimal_members(f: &SetFamily) -> SetFamily {
    f.minimal_members()
}

/// Free-function form of [`SetFamily::complement_family`].
pub fn complement_family(f: &SetFamily) -> SetFamily {
    f.complement_family()
}

/// Binomial coefficient in exact arithmetic.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
