//! Finite sets of vertex labels `1..=64` packed into a single machine word.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{MacError, Result};

/// Largest vertex label a [`VertexSet`] can hold.
pub const MAX_LABEL: usize = 64;

/// A subset of `{1, ..., 64}`; label `i` is stored in bit `i - 1`.
///
/// Ordering is lexicographic on the increasing label sequences, so
/// `{1,2,4} < {1,3} < {2}` and the empty set is the least element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn initial(n: usize) -> Self {
        assert!(n <= MAX_LABEL, "label range exceeds {MAX_LABEL}");
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(label: usize) -> Self {
        debug_assert!((1..=MAX_LABEL).contains(&label));
        VertexSet(1u64 << (label - 1))
    }

    /// Builds a set from labels, rejecting anything outside `1..=64`.
    pub fn try_from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for l in labels {
            if l == 0 || l > MAX_LABEL {
                return Err(MacError::input(format!(
                    "vertex label {l} outside 1..={MAX_LABEL}"
                )));
            }
            bits |= 1u64 << (l - 1);
        }
        Ok(VertexSet(bits))
    }

    /// Panicking variant of [`VertexSet::try_from_labels`] for literals.
    pub fn of(labels: &[usize]) -> Self {
        Self::try_from_labels(labels.iter().copied()).expect("invalid vertex label")
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    #[inline]
    pub fn insert(self, label: usize) -> Self {
        self | VertexSet::singleton(label)
    }

    #[inline]
    pub fn remove(self, label: usize) -> Self {
        self - VertexSet::singleton(label)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// `(i, σ) = card{ j ∈ σ | j < i }`, the position of `i` in the increasing
    /// listing of `σ ∪ {i}`.
    #[inline]
    pub fn count_below(self, label: usize) -> usize {
        let mask = if label <= 1 { 0 } else { (1u64 << (label - 1)) - 1 };
        (self.0 & mask).count_ones() as usize
    }

    /// Number of elements strictly greater than `label`.
    #[inline]
    pub fn count_above(self, label: usize) -> usize {
        if label >= 64 {
            return 0;
        }
        (self.0 >> label).count_ones() as usize
    }

    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in binary-counter order over the members
    /// (least member = least significant digit), starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }

    /// Relabels by `label -> label + shift` for labels above `threshold`;
    /// labels `<= threshold` are kept.
    pub fn shift_above(self, threshold: usize, shift: usize) -> Self {
        let low_mask = if threshold >= 64 {
            u64::MAX
        } else {
            (1u64 << threshold) - 1
        };
        let low = self.0 & low_mask;
        let high = self.0 & !low_mask;
        debug_assert!(
            shift == 0 || high.leading_zeros() as usize >= shift,
            "shift pushes labels past {MAX_LABEL}"
        );
        VertexSet(low | (high << shift))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        // The first position where the sorted listings differ is the least
        // element of the symmetric difference.
        let diff = self.0 ^ other.0;
        let x = diff.trailing_zeros();
        let above = if x >= 63 { 0 } else { !((1u64 << (x + 1)) - 1) };
        if self.0 & (1u64 << x) != 0 {
            // `self` holds x; `other` either continues with something larger
            // or stops here (and is then a prefix of `self`).
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `{1,2,5}`; the empty set is `{}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(VertexSet::EMPTY, |s, l| s.insert(l))
    }
}

/// Increasing iterator over the labels of a [`VertexSet`].
#[derive(Clone)]
pub struct Labels(u64);

impl Iterator for Labels {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

impl DoubleEndedIterator for Labels {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let top = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << top);
        Some(top + 1)
    }
}

/// Iterator over all subsets of a fixed set.
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            Some((cur.wrapping_sub(self.universe)) & self.universe)
        };
        Some(VertexSet(cur))
    }
}
