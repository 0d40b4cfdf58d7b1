//! Decomposing orders and shelling completions to the full skeleton.
//!
//! An order on the ground set is *decomposing* for a vertex decomposable
//! complex when adding the revlex smallest missing facet keeps the complex
//! vertex decomposable. [`find_decomposing_order`] builds one by peeling off
//! the largest element: a loop, or a decomposing vertex whose deletion (if
//! not full) or link (if the deletion is full) is handled recursively, down
//! to a complex that is full over its vertex set with the loops ordered last.

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::Complex;
use crate::decompose::{Decomposer, DecompositionCertificate};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::revlex::{smallest_missing, LinearOrder};
use crate::shelling::{find_shelling, step_witness, ShellingSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceCase {
    Loop,
    DeletionBranch,
    LinkBranch,
    FullBase,
}

/// One level of a decomposing-order derivation. `complex` is the complex at
/// this level; `element` is the largest element of the order restricted to
/// its ground set (absent for the base).
#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub element: Option<u32>,
    pub case: TraceCase,
    pub complex: Complex,
}

/// A decomposing order together with the levels that justify it, outermost
/// level first.
#[derive(Clone, Debug, Serialize)]
pub struct DecomposingOrderTrace {
    pub order: LinearOrder,
    pub steps: Vec<TraceStep>,
}

impl DecomposingOrderTrace {
    /// Walks back up the trace and returns, for every level, the facet that
    /// the construction adds there. The first entry belongs to the outermost
    /// complex and equals its revlex smallest missing facet.
    pub fn stage_additions(&self) -> Result<Vec<(Complex, Face)>> {
        let base = self.steps.last().ok_or_else(|| Error::Internal("empty trace".into()))?;
        let base_order = self.order.restrict(base.complex.ground().as_face());
        let mut face = smallest_missing(&base.complex, &base_order)?.ok_or(Error::NothingMissing)?;
        let mut out = vec![(base.complex.clone(), face)];
        for step in self.steps.iter().rev().skip(1) {
            if step.case == TraceCase::LinkBranch {
                let v = step.element.expect("link steps carry their vertex");
                face = face.union(Face::singleton(v)?);
            }
            out.push((step.complex.clone(), face));
        }
        out.reverse();
        Ok(out)
    }

    pub fn cases(&self) -> Vec<(Option<u32>, TraceCase)> {
        self.steps.iter().map(|s| (s.element, s.case)).collect()
    }
}

fn full_base(complex: &Complex) -> (Vec<u32>, Vec<TraceStep>) {
    let mut order: Vec<u32> = complex.vertices().labels().collect();
    order.extend(complex.loops().labels());
    let step = TraceStep { element: None, case: TraceCase::FullBase, complex: complex.clone() };
    (order, vec![step])
}

fn build(complex: &Complex, dec: &mut Decomposer) -> Result<Option<(Vec<u32>, Vec<TraceStep>)>> {
    if complex.is_full_over_vertices() {
        return Ok(Some(full_base(complex)));
    }
    let step = |element, case| TraceStep { element: Some(element), case, complex: complex.clone() };
    if let Some(v) = complex.loops().max_label() {
        let Some((mut order, mut steps)) = build(&complex.drop_loop(v)?, dec)? else {
            return Ok(None);
        };
        order.push(v);
        steps.insert(0, step(v, TraceCase::Loop));
        return Ok(Some((order, steps)));
    }
    let mut vertices: Vec<u32> = complex.vertices().labels().collect();
    vertices.reverse();
    for v in vertices {
        if !dec.is_decomposing_vertex(complex, v)? {
            continue;
        }
        let del = complex.delete_vertex(v)?;
        let (sub, case) = if del.is_full() {
            (complex.link(Face::singleton(v)?)?, TraceCase::LinkBranch)
        } else {
            (del, TraceCase::DeletionBranch)
        };
        if let Some((mut order, mut steps)) = build(&sub, dec)? {
            order.push(v);
            steps.insert(0, step(v, case));
            return Ok(Some((order, steps)));
        }
    }
    Ok(None)
}

/// Builds a decomposing order for a pure vertex decomposable complex, or
/// returns `None` when the complex is not vertex decomposable. Loops are
/// peeled first, then decomposing vertices from the largest label down.
pub fn find_decomposing_order(complex: &Complex) -> Result<Option<DecomposingOrderTrace>> {
    find_decomposing_order_with(complex, &mut Decomposer::vertex())
}

pub fn find_decomposing_order_with(
    complex: &Complex,
    dec: &mut Decomposer,
) -> Result<Option<DecomposingOrderTrace>> {
    if !complex.is_pure() {
        return Err(Error::Precondition("complex must be pure".into()));
    }
    Ok(build(complex, dec)?.map(|(order, steps)| DecomposingOrderTrace {
        order: LinearOrder::new(order).expect("a permutation of the ground set"),
        steps,
    }))
}

/// Direct check: adding the revlex smallest missing facet under `ord`
/// yields a vertex decomposable complex.
pub fn is_decomposing_order(complex: &Complex, ord: &LinearOrder) -> Result<bool> {
    Ok(decomposing_order_certificate(complex, ord, &mut Decomposer::vertex())?.1.is_some())
}

/// The facet added under `ord` and a certificate for the enlarged complex.
pub fn decomposing_order_certificate(
    complex: &Complex,
    ord: &LinearOrder,
    dec: &mut Decomposer,
) -> Result<(Face, Option<DecompositionCertificate>)> {
    let (f, next) = extend_once(complex, ord)?;
    Ok((f, dec.decompose(&next)))
}

/// Recursive sufficient criterion for `ord` to be decomposing, evaluated from
/// the largest element down. Returns the trace when one of the four cases
/// applies all the way down.
pub fn decomposing_order_criterion(
    complex: &Complex,
    ord: &LinearOrder,
) -> Result<Option<DecomposingOrderTrace>> {
    if !ord.is_order_on(complex.ground()) {
        return Err(Error::InvalidOrder);
    }
    let mut dec = Decomposer::vertex();
    Ok(criterion(complex, ord, &mut dec)?.map(|steps| DecomposingOrderTrace { order: ord.clone(), steps }))
}

fn loops_last(complex: &Complex, ord: &LinearOrder) -> bool {
    let loops = complex.loops();
    let mut seen_loop = false;
    for &l in ord.elements() {
        if loops.contains(l) {
            seen_loop = true;
        } else if seen_loop {
            return false;
        }
    }
    true
}

fn criterion(complex: &Complex, ord: &LinearOrder, dec: &mut Decomposer) -> Result<Option<Vec<TraceStep>>> {
    if complex.is_full_over_vertices() && loops_last(complex, ord) {
        return Ok(Some(full_base(complex).1));
    }
    let Some(v) = ord.largest() else { return Ok(None) };
    let rest = ord.without_largest();
    let (sub, case) = if complex.loops().contains(v) {
        (complex.drop_loop(v)?, TraceCase::Loop)
    } else if dec.is_decomposing_vertex(complex, v)? {
        let del = complex.delete_vertex(v)?;
        if del.is_full() {
            (complex.link(Face::singleton(v)?)?, TraceCase::LinkBranch)
        } else {
            (del, TraceCase::DeletionBranch)
        }
    } else {
        return Ok(None);
    };
    Ok(criterion(&sub, &rest, dec)?.map(|mut steps| {
        steps.insert(0, TraceStep { element: Some(v), case, complex: complex.clone() });
        steps
    }))
}

/// Adds the revlex smallest missing facet under `ord`. No vertex
/// decomposability is claimed for the result.
pub fn extend_once(complex: &Complex, ord: &LinearOrder) -> Result<(Face, Complex)> {
    let f = smallest_missing(complex, ord)?.ok_or(Error::NothingMissing)?;
    Ok((f, complex.with_facet(f)?))
}

/// Shedding order check: walking from the largest element down, each element
/// is a shedding vertex of the current complex, which is then replaced by the
/// deletion. Loops are dropped and cone points (vertices in every facet) are
/// passed over, since deleting them is the same as taking their link; the
/// walk stops successfully at a simplex.
pub fn is_shedding_order(complex: &Complex, ord: &LinearOrder) -> Result<bool> {
    if !ord.is_order_on(complex.ground()) {
        return Err(Error::InvalidOrder);
    }
    let mut cur = complex.clone();
    for &v in ord.elements().iter().rev() {
        if cur.is_simplex() {
            return Ok(true);
        }
        let f = Face::singleton(v)?;
        let is_cone_point = cur.facets().iter().all(|g| g.contains(v));
        if cur.vertices().contains(v) && !is_cone_point && !crate::decompose::is_shedding_vertex(&cur, v)? {
            return Ok(false);
        }
        cur = cur.deletion(f)?;
    }
    Ok(true)
}

/// One facet added during a completion.
#[derive(Clone, Debug, Serialize)]
pub struct CompletionStage {
    pub order: LinearOrder,
    pub added: Face,
    /// The previous stage's order was no longer decomposing here.
    pub reorder_needed: bool,
}

/// A shelling of the full skeleton whose first `prefix_len` facets shell the
/// starting complex.
#[derive(Clone, Debug, Serialize)]
pub struct Completion {
    pub prefix_len: usize,
    pub sequence: ShellingSequence,
    pub stages: Vec<CompletionStage>,
}

/// Completes a vertex decomposable complex to a shelling of the full
/// skeleton over its ground set, recomputing a decomposing order after every
/// added facet.
pub fn complete_to_skeleton(complex: &Complex) -> Result<Completion> {
    let mut dec = Decomposer::vertex();
    if dec.decompose(complex).is_none() {
        return Err(Error::NotVertexDecomposable);
    }
    let mut sequence = find_shelling(complex)?
        .ok_or_else(|| Error::Internal("vertex decomposable complex without a shelling".into()))?;
    let prefix_len = sequence.len();
    let mut stages: Vec<CompletionStage> = Vec::new();
    let mut cur = complex.clone();
    while !cur.is_full() {
        let trace = find_decomposing_order_with(&cur, &mut dec)?
            .ok_or_else(|| Error::Internal(format!("no decomposing order for {cur}")))?;
        let reorder_needed = match stages.last() {
            Some(prev) => decomposing_order_certificate(&cur, &prev.order, &mut dec)?.1.is_none(),
            None => false,
        };
        let (added, next) = extend_once(&cur, &trace.order)?;
        if dec.decompose(&next).is_none() {
            return Err(Error::Internal(format!("order {} is not decomposing for {cur}", trace.order)));
        }
        sequence.push(added);
        stages.push(CompletionStage { order: trace.order, added, reorder_needed });
        cur = next;
    }
    Ok(Completion { prefix_len, sequence, stages })
}

/// Completion without vertex decomposability: appends missing facets one at
/// a time, each meeting the current complex in a pure codimension-one
/// complex, backtracking on dead ends. Returns the length of the starting
/// shelling and the full sequence, or `None` if the starting complex is not
/// shellable or every branch dead-ends.
pub fn complete_by_extension(complex: &Complex) -> Result<Option<(usize, ShellingSequence)>> {
    let Some(prefix) = find_shelling(complex)? else { return Ok(None) };
    let missing: Vec<Face> = crate::face::k_subsets(complex.ground(), complex.rank())
        .filter(|f| !complex.has_facet(*f))
        .collect();
    if missing.len() > crate::shelling::MAX_SEARCH_FACETS {
        return Err(Error::TooLarge(format!("{} missing facets", missing.len())));
    }
    fn rec(seq: &mut Vec<Face>, missing: &[Face], added: u128, dead: &mut HashSet<u128>) -> bool {
        if added.count_ones() as usize == missing.len() {
            return true;
        }
        if dead.contains(&added) {
            return false;
        }
        for (i, &f) in missing.iter().enumerate() {
            if added >> i & 1 == 1 || step_witness(seq, f).is_some() {
                continue;
            }
            seq.push(f);
            if rec(seq, missing, added | 1 << i, dead) {
                return true;
            }
            seq.pop();
        }
        dead.insert(added);
        false
    }
    let prefix_len = prefix.len();
    let mut seq = prefix;
    if rec(&mut seq, &missing, 0, &mut HashSet::new()) {
        Ok(Some((prefix_len, seq)))
    } else {
        Ok(None)
    }
}
