//! Pure simplicial complexes given by facets over an explicit ground set.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{binomial, k_subsets, Face, GroundSet};

/// A simplicial complex stored as its facet list (an antichain, sorted) plus a
/// ground set, so that loops are representable.
///
/// Complexes built from user input are pure. Deletion can produce non-pure
/// complexes, which is why [`Complex::is_pure`] exists; every search in this
/// crate checks purity before relying on it.
///
/// The void complex has no facets at all; the empty complex has the single
/// facet `∅`. The two are distinct values.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Complex {
    ground: GroundSet,
    #[serde(skip)]
    rank: usize,
    facets: Vec<Face>,
}

impl Complex {
    /// Builds a pure complex. Facets are deduplicated; mixed cardinalities are
    /// rejected.
    pub fn new<I: IntoIterator<Item = Face>>(ground: GroundSet, facets: I) -> Result<Complex> {
        let mut facets: Vec<Face> = facets.into_iter().collect();
        facets.sort_unstable();
        facets.dedup();
        for f in &facets {
            if let Some(l) = f.difference(ground.as_face()).min_label() {
                return Err(Error::LabelNotInGround { label: l });
            }
        }
        let rank = facets.first().map_or(0, |f| f.len());
        if let Some(bad) = facets.iter().find(|f| f.len() != rank) {
            return Err(Error::NonPure(rank, bad.len()));
        }
        Ok(Complex { ground, rank, facets })
    }

    /// Convenience constructor from label lists.
    pub fn from_lists(ground: GroundSet, facets: &[&[u32]]) -> Result<Complex> {
        let faces = facets
            .iter()
            .map(|l| Face::from_labels(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Complex::new(ground, faces)
    }

    /// The void complex on `ground`. `rank` records the facet cardinality the
    /// caller has in mind (it matters for fullness and missing-facet queries).
    pub fn void(ground: GroundSet, rank: usize) -> Complex {
        Complex { ground, rank, facets: Vec::new() }
    }

    /// The empty complex `{∅}`.
    pub fn empty(ground: GroundSet) -> Complex {
        Complex { ground, rank: 0, facets: vec![Face::EMPTY] }
    }

    /// Complex generated by arbitrary faces: keeps only the inclusion-maximal ones.
    pub(crate) fn generated(ground: GroundSet, mut faces: Vec<Face>) -> Complex {
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !kept.iter().any(|k| f.is_subset_of(*k)) {
                kept.push(f);
            }
        }
        let rank = kept.first().map_or(0, |f| f.len());
        kept.sort_unstable();
        Complex { ground, rank, facets: kept }
    }

    /// All `(d+1)`-subsets of `{1, ..., n}`.
    pub fn skeleton(n: usize, d: usize) -> Result<Complex> {
        if d >= n {
            return Err(Error::DimensionTooLarge { n, d });
        }
        let ground = GroundSet::range(n)?;
        Ok(Complex::full(ground, d + 1))
    }

    /// Every `rank`-subset of `ground`.
    pub fn full(ground: GroundSet, rank: usize) -> Complex {
        let facets: Vec<Face> = k_subsets(ground, rank).collect();
        Complex { ground, rank, facets }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Cardinality of the facets (the largest one, if the complex is not pure).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> isize {
        self.rank as isize - 1
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// A single facet (or none): the base case of every decomposition.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() <= 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.rank)
    }

    pub fn vertices(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    /// Ground elements that lie in no face.
    pub fn loops(&self) -> Face {
        self.ground.as_face().difference(self.vertices())
    }

    pub fn has_facet(&self, f: Face) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(*g))
    }

    fn require_face(&self, f: Face) -> Result<()> {
        if self.contains_face(f) {
            Ok(())
        } else {
            Err(Error::FaceNotInComplex(f))
        }
    }

    /// `{G : G ∩ F = ∅, G ∪ F ∈ Δ}` on ground set `V \ F`.
    pub fn link(&self, f: Face) -> Result<Complex> {
        self.require_face(f)?;
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| f.is_subset_of(**g))
            .map(|g| g.difference(f))
            .collect();
        let rank = facets.iter().map(|g| g.len()).max().unwrap_or(0);
        let mut facets = facets;
        facets.sort_unstable();
        Ok(Complex {
            ground: GroundSet::from_bits_unchecked(self.ground.without(f).bits()),
            rank,
            facets,
        })
    }

    /// Subcomplex generated by the facets containing `F`, on the same ground set.
    pub fn star(&self, f: Face) -> Result<Complex> {
        self.require_face(f)?;
        let facets = self.facets.iter().copied().filter(|g| f.is_subset_of(*g)).collect();
        Ok(Complex { ground: self.ground, rank: self.rank, facets })
    }

    /// All faces not containing `F`. Deleting a vertex also removes it from the
    /// ground set; deleting a larger face keeps the ground set. The result need
    /// not be pure.
    pub fn deletion(&self, f: Face) -> Result<Complex> {
        if f.is_empty() {
            return Err(Error::EmptyFaceDeletion);
        }
        if let Some(l) = f.difference(self.ground.as_face()).min_label() {
            return Err(Error::LabelNotInGround { label: l });
        }
        let ground = if f.len() == 1 { self.ground.without(f) } else { self.ground };
        if self.is_void() {
            return Ok(Complex { ground, rank: self.rank, facets: Vec::new() });
        }
        let mut candidates = Vec::with_capacity(self.facets.len());
        let mut untouched = true;
        for &g in &self.facets {
            if f.is_subset_of(g) {
                untouched = false;
                candidates.extend(f.labels().map(|x| g.difference(Face::from_bits(1u64 << (x - 1)))));
            } else {
                candidates.push(g);
            }
        }
        if untouched {
            return Ok(Complex { ground, rank: self.rank, facets: candidates });
        }
        Ok(Complex::generated(ground, candidates))
    }

    /// Deletes a single element, which may be a loop.
    pub fn delete_vertex(&self, v: u32) -> Result<Complex> {
        self.deletion(Face::singleton(v)?)
    }

    /// Every `rank`-subset of `over` is a facet.
    pub fn is_full_over(&self, over: GroundSet) -> bool {
        let present = self
            .facets
            .iter()
            .filter(|f| f.len() == self.rank && f.is_subset_of(over.as_face()))
            .count() as u128;
        present == binomial(over.len(), self.rank)
    }

    /// Full over the whole ground set.
    pub fn is_full(&self) -> bool {
        self.is_full_over(self.ground)
    }

    /// Full over its own vertex set (loops ignored).
    pub fn is_full_over_vertices(&self) -> bool {
        if self.is_void() {
            return true;
        }
        self.is_full_over(GroundSet::from_bits_unchecked(self.vertices().bits()))
    }

    /// A new complex with one more facet of the same cardinality.
    pub fn with_facet(&self, f: Face) -> Result<Complex> {
        if let Some(l) = f.difference(self.ground.as_face()).min_label() {
            return Err(Error::LabelNotInGround { label: l });
        }
        if !self.is_void() && f.len() != self.rank {
            return Err(Error::NonPure(self.rank, f.len()));
        }
        let mut out = self.clone();
        out.rank = f.len();
        if let Err(pos) = out.facets.binary_search(&f) {
            out.facets.insert(pos, f);
        }
        Ok(out)
    }

    /// Same facets on a different ground set, which must contain every vertex.
    pub fn with_ground(&self, ground: GroundSet) -> Result<Complex> {
        if let Some(l) = self.vertices().difference(ground.as_face()).min_label() {
            return Err(Error::LabelNotInGround { label: l });
        }
        Ok(Complex { ground, rank: self.rank, facets: self.facets.clone() })
    }

    /// Same facets, ground set shrunk to the vertex set.
    pub fn without_loops(&self) -> Complex {
        Complex {
            ground: GroundSet::from_bits_unchecked(self.vertices().bits()),
            rank: self.rank,
            facets: self.facets.clone(),
        }
    }

    /// Removes a loop from the ground set.
    pub fn drop_loop(&self, v: u32) -> Result<Complex> {
        let f = Face::singleton(v)?;
        if !self.loops().contains(v) {
            return Err(Error::Precondition(format!("{v} is not a loop")));
        }
        Ok(Complex { ground: self.ground.without(f), rank: self.rank, facets: self.facets.clone() })
    }

    pub fn facet_lists(&self) -> Vec<Vec<u32>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({self} on {:?})", self.ground)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn face(s: &str) -> Face {
        Face::from_labels(s.chars().map(|c| c.to_digit(10).unwrap())).unwrap()
    }

    pub(crate) fn cx(n: usize, facets: &[&str]) -> Complex {
        Complex::new(GroundSet::range(n).unwrap(), facets.iter().map(|s| face(s))).unwrap()
    }

    pub(crate) fn delta7() -> Complex {
        cx(
            7,
            &["1234", "1235", "1245", "1345", "2345", "1236", "1246", "1256", "2356", "1237", "2347"],
        )
    }

    pub(crate) fn delta6() -> Complex {
        cx(6, &["1234", "1235", "1245", "1345", "2345", "1236", "1246", "1256", "2356"])
    }

    fn names(c: &Complex) -> Vec<String> {
        c.facets().iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn link_examples() {
        let tri = cx(3, &["12", "13", "23"]);
        let l = tri.link(face("1")).unwrap();
        assert_eq!(names(&l), ["2", "3"]);
        assert_eq!(l.ground(), GroundSet::from_labels([2, 3]).unwrap());

        let l6 = delta6().link(face("6")).unwrap();
        assert_eq!(l6, cx(5, &["123", "124", "125", "235"]));

        let m = cx(6, &["1234", "1345", "2346", "3456", "1235", "1245", "1236", "1246", "1256"]);
        let l = m.link(face("56")).unwrap();
        assert_eq!(names(&l), ["12", "34"]);
    }

    #[test]
    fn link_of_missing_face_is_an_error() {
        let tri = cx(3, &["12", "13", "23"]);
        assert_eq!(tri.link(face("123")), Err(Error::FaceNotInComplex(face("123"))));
    }

    #[test]
    fn deletion_examples() {
        let d5 = cx(5, &["123", "124", "125", "235"]);
        assert_eq!(d5.deletion(face("5")).unwrap(), cx(4, &["123", "124"]));

        let tri = cx(3, &["12", "13", "23"]);
        let d = tri.deletion(face("3")).unwrap();
        assert_eq!(names(&d), ["12"]);
        assert_eq!(d.ground(), GroundSet::from_labels([1, 2]).unwrap());

        assert_eq!(delta7().deletion(face("7")).unwrap(), delta6());
        assert_eq!(tri.deletion(Face::EMPTY), Err(Error::EmptyFaceDeletion));
    }

    #[test]
    fn deletion_can_be_nonpure() {
        let c = cx(4, &["123", "124"]);
        let d = c.deletion(face("3")).unwrap();
        assert_eq!(names(&d), ["124"]);
        let c = cx(4, &["123", "234"]);
        let d = c.deletion(face("1")).unwrap();
        assert!(d.is_pure());
        let c = cx(5, &["123", "145"]);
        let d = c.deletion(face("1")).unwrap();
        assert!(d.is_pure());
        assert_eq!(names(&d), ["23", "45"]);
        let c = cx(4, &["123", "234", "124"]);
        let d = c.deletion(face("12")).unwrap();
        assert!(!d.is_pure());
        assert_eq!(d.ground(), c.ground());
    }

    #[test]
    fn star_examples() {
        let tri = cx(3, &["12", "13", "23"]);
        assert_eq!(names(&tri.star(face("1")).unwrap()), ["12", "13"]);
        assert_eq!(names(&delta7().star(face("7")).unwrap()), ["1237", "2347"]);
        assert_eq!(delta7().star(Face::EMPTY).unwrap(), delta7());
    }

    #[test]
    fn skeleton_examples() {
        assert_eq!(Complex::skeleton(4, 2).unwrap().num_facets(), 4);
        assert_eq!(Complex::skeleton(6, 3).unwrap().num_facets(), 15);
        assert_eq!(names(&Complex::skeleton(3, 2).unwrap()), ["123"]);
        assert!(Complex::skeleton(3, 3).is_err());
    }

    #[test]
    fn fullness() {
        let g5 = GroundSet::range(5).unwrap();
        assert!(Complex::skeleton(5, 2).unwrap().is_full_over(g5));
        assert!(delta6().deletion(face("6")).unwrap().is_full_over(g5));
        let d = delta7().deletion(face("7")).unwrap();
        assert!(!d.is_full_over(GroundSet::range(6).unwrap()));
        assert!(!d.has_facet(face("1346")));
    }

    #[test]
    fn loops_and_vertices() {
        let c = cx(3, &["12"]);
        assert_eq!(c.loops(), face("3"));
        assert_eq!(c.vertices(), face("12"));
        assert!(c.is_full_over_vertices());
        assert!(Complex::skeleton(5, 1).unwrap().loops().is_empty());
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let g = GroundSet::range(3).unwrap();
        let v = Complex::void(g, 0);
        let e = Complex::empty(g);
        assert_ne!(v, e);
        assert!(v.is_void() && !e.is_void());
        assert!(e.is_empty_complex());
    }

    #[test]
    fn nonpure_construction_rejected() {
        let g = GroundSet::range(4).unwrap();
        let err = Complex::from_lists(g, &[&[1, 2, 3], &[1, 4]]).unwrap_err();
        assert_eq!(err, Error::NonPure(3, 2));
    }
}
