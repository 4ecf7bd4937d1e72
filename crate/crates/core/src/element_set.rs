//! Fixed-width subsets of the ground set `{1..n}`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ground-set size.
pub const MAX_ELEMENTS: usize = 16;

/// A subset of `{1..=MAX_ELEMENTS}` stored as a bitmask with bit `i` set for element `i`.
///
/// The derived ordering compares the raw masks as integers, which is the canonical sort
/// order used for basis lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u32);

const VALID_MASK: u32 = ((1u32 << (MAX_ELEMENTS + 1)) - 1) & !1;

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// `{1..n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set of size {n} exceeds {MAX_ELEMENTS}");
        ElementSet(((1u32 << (n + 1)) - 1) & !1)
    }

    pub fn singleton(e: usize) -> Self {
        assert!((1..=MAX_ELEMENTS).contains(&e), "element {e} out of range");
        ElementSet(1 << e)
    }

    /// Builds a set from raw bits; returns `None` if bit 0 or a bit above the cap is set.
    pub fn from_bits(bits: u32) -> Option<Self> {
        (bits & !VALID_MASK == 0).then_some(ElementSet(bits))
    }

    pub(crate) const fn from_bits_unchecked(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.0 & (1 << e) != 0
    }

    pub fn with(self, e: usize) -> Self {
        self | ElementSet::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u32 << e))
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// Every subset of `self` with exactly `k` elements, in increasing mask order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        self.subsets().filter(move |s| s.len() == k)
    }

    /// Applies a relabelling `e -> map[e]`; `map[0]` is ignored.
    pub fn relabel(self, map: &[usize]) -> ElementSet {
        self.iter().fold(ElementSet::EMPTY, |acc, e| acc.with(map[e]))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(ElementSet::EMPTY, |acc, e| acc.with(e))
    }
}

impl<'a> FromIterator<&'a usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    /// Complement within `{1..MAX_ELEMENTS}`; intersect with `full(n)` for a smaller ground set.
    fn not(self) -> ElementSet {
        ElementSet(!self.0 & VALID_MASK)
    }
}

#[derive(Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler enumeration of the subsets of a mask.
pub struct Subsets {
    set: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        let succ = cur.wrapping_sub(self.set) & self.set;
        self.next = (succ != 0).then_some(succ);
        Some(ElementSet(cur))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elems = Vec::<usize>::deserialize(deserializer)?;
        let mut set = ElementSet::EMPTY;
        for e in elems {
            if !(1..=MAX_ELEMENTS).contains(&e) {
                return Err(serde::de::Error::custom(format!(
                    "element {e} outside 1..={MAX_ELEMENTS}"
                )));
            }
            set = set.with(e);
        }
        Ok(set)
    }
}

/// Binomial coefficient for the small arguments that occur here.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}
