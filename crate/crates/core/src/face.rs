//! Faces and ground sets as 64-bit masks.
//!
//! Label `l` (1..=64) occupies bit `l - 1`. Every complex, link and deletion
//! therefore shares one index space, and set arithmetic is a single word
//! operation. The derived ordering on [`Face`] compares the masks as integers,
//! which for equal-size faces is exactly the revlex order under the natural
//! order of the labels.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_LABEL: u32 = 64;

fn bit(label: u32) -> Result<u64> {
    if label == 0 || label > MAX_LABEL {
        return Err(Error::LabelOutOfRange(label));
    }
    Ok(1u64 << (label - 1))
}

/// Iterator over the labels stored in a mask, ascending.
#[derive(Clone, Debug)]
pub struct Labels(u64);

impl Iterator for Labels {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

/// A finite set of labels; the unit of all set arithmetic.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Face> {
        let mut mask = 0u64;
        for l in labels {
            let b = bit(l)?;
            if mask & b != 0 {
                return Err(Error::DuplicateLabel(l));
            }
            mask |= b;
        }
        Ok(Face(mask))
    }

    pub fn singleton(label: u32) -> Result<Face> {
        bit(label).map(Face)
    }

    #[inline]
    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension of the face, `len - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn labels(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.labels().collect()
    }

    #[inline]
    pub fn contains(self, label: u32) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn max_label(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    pub fn min_label(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }
}

/// Two faces of equal size are adjacent when they differ in exactly one element.
pub fn adjacent(a: Face, b: Face) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    Ok(a != b && a.intersection(b).len() + 1 == a.len())
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let compact = self.max_label().is_some_and(|m| m < 10);
        let mut first = true;
        for l in self.labels() {
            if !first && !compact {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face({self})")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}

/// The ground set of a complex. Unlike a [`Face`] it is never empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet(u64);

impl GroundSet {
    /// The ground set `{1, ..., n}`.
    pub fn range(n: usize) -> Result<GroundSet> {
        if n == 0 || n > MAX_LABEL as usize {
            return Err(Error::InvalidGround);
        }
        Ok(GroundSet(if n == 64 { u64::MAX } else { (1u64 << n) - 1 }))
    }

    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<GroundSet> {
        let f = Face::from_labels(labels)?;
        GroundSet::from_face(f)
    }

    pub fn from_face(face: Face) -> Result<GroundSet> {
        if face.is_empty() {
            return Err(Error::InvalidGround);
        }
        Ok(GroundSet(face.bits()))
    }

    /// Ground sets produced by link and deletion may become empty; those are
    /// kept internally as a zero mask.
    pub(crate) const fn from_bits_unchecked(bits: u64) -> GroundSet {
        GroundSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn as_face(self) -> Face {
        Face(self.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: u32) -> bool {
        self.as_face().contains(label)
    }

    pub fn labels(self) -> Labels {
        Labels(self.0)
    }

    pub fn without(self, face: Face) -> GroundSet {
        GroundSet(self.0 & !face.bits())
    }

    pub fn with(self, face: Face) -> GroundSet {
        GroundSet(self.0 | face.bits())
    }

    /// True when the ground set is `{1, ..., n}` for some `n`.
    pub fn is_initial_segment(self) -> bool {
        self.0 != 0 && (self.0 & (self.0.wrapping_add(1))) == 0
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

impl Serialize for GroundSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels())
    }
}

/// All `k`-subsets of `elements`, where `elements` is listed from smallest to
/// largest under some linear order. Subsets come out in revlex order under
/// that same order, lazily.
#[derive(Clone, Debug)]
pub struct KSubsets {
    elements: Vec<u64>,
    // positions of the current subset as a bit pattern over `elements`
    state: Option<u128>,
    limit: u128,
}

impl KSubsets {
    pub fn new(elements: &[u32], k: usize) -> KSubsets {
        let n = elements.len();
        let elements: Vec<u64> = elements.iter().map(|&l| 1u64 << (l - 1)).collect();
        let state = (k <= n).then(|| (1u128 << k) - 1);
        KSubsets { elements, state, limit: 1u128 << n }
    }

    fn deposit(&self, pattern: u128) -> Face {
        let mut mask = 0u64;
        let mut p = pattern;
        while p != 0 {
            let i = p.trailing_zeros() as usize;
            mask |= self.elements[i];
            p &= p - 1;
        }
        Face(mask)
    }
}

impl Iterator for KSubsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.state?;
        let out = self.deposit(cur);
        // Gosper's hack: next larger integer with the same popcount.
        self.state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let next = (((r ^ cur) >> 2) / c) | r;
            (next < self.limit).then_some(next)
        };
        Some(out)
    }
}

/// `k`-subsets of a ground set in revlex order under the natural order.
pub fn k_subsets(ground: GroundSet, k: usize) -> KSubsets {
    let labels: Vec<u32> = ground.labels().collect();
    KSubsets::new(&labels, k)
}

pub fn binomial(n: usize, k: usize) -> u128 {
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
