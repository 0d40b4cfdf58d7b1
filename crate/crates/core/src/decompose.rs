//! Shedding vertices and faces, vertex decomposability and k-decomposability.
//!
//! Searches return a [`DecompositionCertificate`]: a tree whose internal
//! nodes name the shedding face chosen and whose children certify the
//! deletion and the link. Replaying a certificate only needs link, deletion
//! and a purity test.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, KSubsets};

/// Replayable proof that a complex is (k-)vertex decomposable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DecompositionCertificate {
    /// A single facet.
    SimplexBase,
    /// No faces at all.
    VoidBase,
    /// Only the empty face.
    EmptyBase,
    Step {
        face: Face,
        deletion: Box<DecompositionCertificate>,
        link: Box<DecompositionCertificate>,
    },
}

impl DecompositionCertificate {
    /// Base certificate when `complex` is a simplex (void and empty included).
    pub fn base_for(complex: &Complex) -> Option<DecompositionCertificate> {
        if complex.is_void() {
            Some(DecompositionCertificate::VoidBase)
        } else if complex.is_empty_complex() {
            Some(DecompositionCertificate::EmptyBase)
        } else if complex.is_simplex() {
            Some(DecompositionCertificate::SimplexBase)
        } else {
            None
        }
    }

    pub fn root_face(&self) -> Option<Face> {
        match self {
            DecompositionCertificate::Step { face, .. } => Some(*face),
            _ => None,
        }
    }

    /// Size of the largest face chosen anywhere in the tree.
    pub fn max_face_len(&self) -> usize {
        match self {
            DecompositionCertificate::Step { face, deletion, link } => {
                face.len().max(deletion.max_face_len()).max(link.max_face_len())
            }
            _ => 0,
        }
    }

    /// The chain of (face, branch) choices obtained by always following the
    /// deletion child, mostly useful for display.
    pub fn deletion_spine(&self) -> Vec<Face> {
        let mut out = Vec::new();
        let mut cur = self;
        while let DecompositionCertificate::Step { face, deletion, .. } = cur {
            out.push(*face);
            cur = deletion;
        }
        out
    }

    /// Replays the tree against `complex` using this crate's link and
    /// deletion: every chosen face has at most `max_face_len` elements, lies
    /// in the complex, is a shedding face, and the leaves are simplices.
    pub fn replay(&self, complex: &Complex, max_face_len: usize) -> std::result::Result<(), String> {
        match self {
            DecompositionCertificate::VoidBase if complex.is_void() => Ok(()),
            DecompositionCertificate::EmptyBase if complex.is_empty_complex() => Ok(()),
            DecompositionCertificate::SimplexBase if complex.num_facets() == 1 => Ok(()),
            DecompositionCertificate::Step { face, deletion, link } => {
                if face.is_empty() || face.len() > max_face_len {
                    return Err(format!("face {face} has the wrong size"));
                }
                let del = complex.deletion(*face).map_err(|e| e.to_string())?;
                let lk = complex.link(*face).map_err(|e| e.to_string())?;
                if !del.is_pure() || del.rank() != complex.rank() || del.is_void() {
                    return Err(format!("{face} is not a shedding face of {complex}"));
                }
                deletion.replay(&del, max_face_len)?;
                link.replay(&lk, max_face_len)
            }
            other => Err(format!("base {other:?} does not match {complex}")),
        }
    }
}

fn require_vertex(complex: &Complex, v: u32) -> Result<Face> {
    let f = Face::singleton(v)?;
    if !complex.ground().contains(v) {
        return Err(Error::LabelNotInGround { label: v });
    }
    if !complex.vertices().contains(v) {
        return Err(Error::Precondition(format!("{v} is a loop, not a vertex")));
    }
    Ok(f)
}

/// Every facet of the deletion of `v` is a facet of the complex.
pub fn is_shedding_vertex(complex: &Complex, v: u32) -> Result<bool> {
    let f = require_vertex(complex, v)?;
    let del = complex.deletion(f)?;
    let by_definition = del.facets().iter().all(|g| complex.has_facet(*g));
    if complex.is_pure() {
        debug_assert_eq!(by_definition, shedding_by_adjacency(complex, v)?);
    }
    Ok(by_definition)
}

/// For pure complexes: every facet of the star of `v` is adjacent to some
/// facet of the deletion of `v`.
pub fn shedding_by_adjacency(complex: &Complex, v: u32) -> Result<bool> {
    let f = require_vertex(complex, v)?;
    let star = complex.star(f)?;
    let del = complex.deletion(f)?;
    Ok(star.facets().iter().all(|s| {
        del.facets()
            .iter()
            .any(|g| g.len() == s.len() && s.intersection(*g).len() + 1 == s.len())
    }))
}

/// The deletion of `F` is pure of the same dimension as the complex.
pub fn is_shedding_face(complex: &Complex, f: Face) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::EmptyFaceDeletion);
    }
    if !complex.contains_face(f) {
        return Err(Error::FaceNotInComplex(f));
    }
    let del = complex.deletion(f)?;
    Ok(!del.is_void() && del.is_pure() && del.rank() == complex.rank())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Vertex,
    Face { max_len: usize },
}

/// Memoized decomposition search. Keep one around to share the memo table
/// across many queries on related complexes.
#[derive(Debug)]
pub struct Decomposer {
    mode: Mode,
    memo: HashMap<(u64, Vec<Face>), Option<DecompositionCertificate>>,
}

impl Decomposer {
    /// Searches for vertex decompositions, shedding vertices in ascending label order.
    pub fn vertex() -> Decomposer {
        Decomposer { mode: Mode::Vertex, memo: HashMap::new() }
    }

    /// Searches for k-decompositions: shedding faces of dimension at most `k`,
    /// smaller faces first, equal sizes in lexicographic order of their
    /// sorted labels (the same as ascending label for vertices).
    pub fn k_faces(k: usize) -> Decomposer {
        Decomposer { mode: Mode::Face { max_len: k + 1 }, memo: HashMap::new() }
    }

    pub fn decompose(&mut self, complex: &Complex) -> Option<DecompositionCertificate> {
        if let Some(base) = DecompositionCertificate::base_for(complex) {
            return Some(base);
        }
        if !complex.is_pure() {
            return None;
        }
        let key = (complex.ground().bits(), complex.facets().to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = self.search(complex);
        self.memo.insert(key, result.clone());
        result
    }

    fn candidates(&self, complex: &Complex) -> Vec<Face> {
        match self.mode {
            Mode::Vertex => complex
                .vertices()
                .labels()
                .filter(|&v| is_shedding_vertex(complex, v).unwrap_or(false))
                .map(|v| Face::singleton(v).expect("vertex label"))
                .collect(),
            Mode::Face { max_len } => {
                let mut out = Vec::new();
                for size in 1..=max_len.min(complex.rank()) {
                    let mut faces: Vec<Face> = complex
                        .facets()
                        .iter()
                        .flat_map(|f| KSubsets::new(&f.to_vec(), size))
                        .collect();
                    faces.sort_unstable_by_key(|f| f.to_vec());
                    faces.dedup();
                    out.extend(faces.into_iter().filter(|f| is_shedding_face(complex, *f).unwrap_or(false)));
                }
                out
            }
        }
    }

    fn search(&mut self, complex: &Complex) -> Option<DecompositionCertificate> {
        for face in self.candidates(complex) {
            let del = complex.deletion(face).expect("candidate is a nonempty face");
            let Some(del_cert) = self.decompose(&del) else { continue };
            let lk = complex.link(face).expect("candidate is a face");
            let Some(lk_cert) = self.decompose(&lk) else { continue };
            return Some(DecompositionCertificate::Step {
                face,
                deletion: Box::new(del_cert),
                link: Box::new(lk_cert),
            });
        }
        None
    }

    /// `v` is a shedding vertex whose deletion and link are both vertex
    /// decomposable.
    pub fn is_decomposing_vertex(&mut self, complex: &Complex, v: u32) -> Result<bool> {
        if !is_shedding_vertex(complex, v)? {
            return Ok(false);
        }
        let f = Face::singleton(v)?;
        Ok(self.decompose(&complex.deletion(f)?).is_some() && self.decompose(&complex.link(f)?).is_some())
    }
}

/// A vertex decomposition certificate, or `None` when there is none.
pub fn is_vertex_decomposable(complex: &Complex) -> Option<DecompositionCertificate> {
    Decomposer::vertex().decompose(complex)
}

/// A k-decomposition certificate (all chosen faces of dimension at most `k`),
/// or `None`.
pub fn is_k_decomposable(complex: &Complex, k: usize) -> Option<DecompositionCertificate> {
    Decomposer::k_faces(k).decompose(complex)
}
