//! Matroid independence complexes: basis-exchange recognition, a few
//! constructors, the one-facet extension for matroids that are full away
//! from a vertex, and basis-first orders.

use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, GroundSet};
use crate::revlex::LinearOrder;

/// Facets `f`, `g` and `x ∈ f \ g` such that no `y ∈ g \ f` makes
/// `(f \ {x}) ∪ {y}` a facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeViolation {
    pub f: Face,
    pub g: Face,
    pub x: u32,
}

impl fmt::Display for ExchangeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot exchange {} out of {} using {}", self.x, self.f, self.g)
    }
}

/// Naive exchange check over all ordered facet pairs.
pub fn exchange_violation(complex: &Complex) -> Result<Option<ExchangeViolation>> {
    if !complex.is_pure() {
        return Err(Error::Precondition("matroid check needs a pure complex".into()));
    }
    let facets = complex.facets();
    for &f in facets {
        for &g in facets {
            for x in f.difference(g).labels() {
                let base = f.difference(Face::singleton(x)?);
                let ok = g
                    .difference(f)
                    .labels()
                    .any(|y| complex.has_facet(base.union(Face::from_bits(1u64 << (y - 1)))));
                if !ok {
                    return Ok(Some(ExchangeViolation { f, g, x }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_matroid(complex: &Complex) -> bool {
    matches!(exchange_violation(complex), Ok(None))
}

/// A complex whose facets passed the exchange check. Loops are allowed; the
/// rank is the facet cardinality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matroid {
    complex: Complex,
}

impl Matroid {
    pub fn new(complex: Complex) -> Result<Matroid> {
        match exchange_violation(&complex)? {
            None => Ok(Matroid { complex }),
            Some(v) => Err(Error::NotMatroid(v)),
        }
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn into_complex(self) -> Complex {
        self.complex
    }

    pub fn rank(&self) -> usize {
        self.complex.rank()
    }

    pub fn is_basis(&self, f: Face) -> bool {
        self.complex.has_facet(f)
    }
}

/// All `d`-subsets of `{1, ..., n}`.
pub fn uniform_matroid(n: usize, d: usize) -> Result<Matroid> {
    if d == 0 || d > n {
        return Err(Error::DimensionTooLarge { n, d });
    }
    Ok(Matroid { complex: Complex::skeleton(n, d - 1)? })
}

/// Cone with a new apex joined to every facet.
pub fn cone(complex: &Complex, apex: u32) -> Result<Complex> {
    let a = Face::singleton(apex)?;
    if complex.ground().contains(apex) {
        return Err(Error::Precondition(format!("apex {apex} already in the ground set")));
    }
    let ground = GroundSet::from_face(complex.ground().as_face().union(a))?;
    Complex::new(ground, complex.facets().iter().map(|f| f.union(a)))
}

/// Adds a non-basis `F ∋ v` to a matroid that is full on `V \ {v}`; the
/// result is again a matroid.
pub fn extend_full_minus_vertex(m: &Matroid, v: u32, f: Face) -> Result<Matroid> {
    let c = m.complex();
    let vf = Face::singleton(v)?;
    if !c.vertices().contains(v) {
        return Err(Error::Precondition(format!("{v} is a loop or outside the ground set")));
    }
    if !c.is_full_over(c.ground().without(vf)) {
        return Err(Error::Precondition(format!("matroid is not full on the ground set minus {v}")));
    }
    if f.len() != m.rank() {
        return Err(Error::Precondition(format!("{f} does not have size {}", m.rank())));
    }
    if !f.contains(v) {
        return Err(Error::Precondition(format!("{f} does not contain {v}")));
    }
    if m.is_basis(f) {
        return Err(Error::Precondition(format!("{f} is already a basis")));
    }
    let next = c.with_facet(f)?;
    Matroid::new(next).map_err(|e| Error::Internal(format!("extension failed: {e}")))
}

/// The first `rank` elements of `ord` form a basis.
pub fn is_basis_first_order(m: &Matroid, ord: &LinearOrder) -> Result<bool> {
    if !ord.is_order_on(m.complex().ground()) {
        return Err(Error::InvalidOrder);
    }
    let head = ord.elements().iter().take(m.rank()).copied();
    Ok(m.is_basis(Face::from_labels(head)?))
}
