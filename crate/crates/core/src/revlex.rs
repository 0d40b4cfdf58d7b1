//! Linear orders on a ground set, revlex comparison of equal-size sets,
//! missing-facet search and shiftedness.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, GroundSet, KSubsets, MAX_LABEL};

/// A linear order on a ground set; `elements()[0]` is the smallest element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    elements: Vec<u32>,
    // rank[label] = position in `elements`, u8::MAX when absent
    rank: [u8; MAX_LABEL as usize + 1],
}

impl LinearOrder {
    pub fn new(elements: Vec<u32>) -> Result<LinearOrder> {
        let mut rank = [u8::MAX; MAX_LABEL as usize + 1];
        for (i, &l) in elements.iter().enumerate() {
            if l == 0 || l > MAX_LABEL {
                return Err(Error::LabelOutOfRange(l));
            }
            if rank[l as usize] != u8::MAX {
                return Err(Error::DuplicateLabel(l));
            }
            rank[l as usize] = i as u8;
        }
        Ok(LinearOrder { elements, rank })
    }

    /// Ascending labels of the ground set.
    pub fn natural(ground: GroundSet) -> LinearOrder {
        LinearOrder::new(ground.labels().collect()).expect("ground labels are valid")
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ground(&self) -> Face {
        Face::from_labels(self.elements.iter().copied()).expect("validated on construction")
    }

    pub fn position(&self, label: u32) -> Option<usize> {
        let r = *self.rank.get(label as usize)?;
        (r != u8::MAX).then_some(r as usize)
    }

    pub fn largest(&self) -> Option<u32> {
        self.elements.last().copied()
    }

    /// The order restricted to `keep`, relative order preserved.
    pub fn restrict(&self, keep: Face) -> LinearOrder {
        LinearOrder::new(self.elements.iter().copied().filter(|l| keep.contains(*l)).collect())
            .expect("subsequence of a valid order")
    }

    /// The order with its largest element removed.
    pub fn without_largest(&self) -> LinearOrder {
        let mut e = self.elements.clone();
        e.pop();
        LinearOrder::new(e).expect("prefix of a valid order")
    }

    /// Appends `label` as the new largest element.
    pub fn push_largest(&self, label: u32) -> Result<LinearOrder> {
        let mut e = self.elements.clone();
        e.push(label);
        LinearOrder::new(e)
    }

    pub fn is_order_on(&self, ground: GroundSet) -> bool {
        self.len() == ground.len() && self.ground() == ground.as_face()
    }

    /// Re-indexes a face by position: bit `i` set iff the element of rank `i`
    /// is in the face. Revlex comparison is then integer comparison.
    fn reindex(&self, f: Face) -> Result<u64> {
        let mut out = 0u64;
        for l in f.labels() {
            let p = self.position(l).ok_or(Error::LabelNotInGround { label: l })?;
            out |= 1u64 << p;
        }
        Ok(out)
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder{:?}", self.elements)
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for LinearOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

/// Revlex comparison: the set whose largest differing element is smaller is
/// the smaller set.
pub fn revlex_cmp(a: Face, b: Face, ord: &LinearOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    Ok(ord.reindex(a)?.cmp(&ord.reindex(b)?))
}

/// `rank`-subsets of the order's ground set in increasing revlex order.
pub fn revlex_subsets(ord: &LinearOrder, rank: usize) -> KSubsets {
    KSubsets::new(ord.elements(), rank)
}

/// The revlex smallest `(d+1)`-subset of the ground set that is not a facet,
/// or `None` when the complex is full.
pub fn smallest_missing(complex: &Complex, ord: &LinearOrder) -> Result<Option<Face>> {
    if !ord.is_order_on(complex.ground()) {
        return Err(Error::InvalidOrder);
    }
    Ok(revlex_subsets(ord, complex.rank()).find(|f| !complex.has_facet(*f)))
}

/// Every single-element replacement by a smaller ground element lands back in
/// the complex.
pub fn is_shifted(complex: &Complex, ord: &LinearOrder) -> Result<bool> {
    if !ord.is_order_on(complex.ground()) {
        return Err(Error::InvalidOrder);
    }
    for &f in complex.facets() {
        for x in f.labels() {
            let px = ord.position(x).expect("facet inside ground");
            for &y in &ord.elements()[..px] {
                if f.contains(y) {
                    continue;
                }
                let swapped = f.difference(Face::from_bits(1u64 << (x - 1))).union(Face::from_bits(1u64 << (y - 1)));
                if !complex.contains_face(swapped) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
