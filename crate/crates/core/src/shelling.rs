//! Shelling verification, backtracking search and extendability.
//!
//! A facet `F` may follow a set `S` of earlier facets when the complex
//! generated by `{G ∩ F : G ∈ S}` is pure of dimension `d - 1`. Write `X` for
//! the set of elements `x ∈ F` such that the ridge `F \ {x}` lies in some
//! facet of `S`. Every intersection `G ∩ F` lies in a present ridge exactly
//! when `X ⊄ G`, so the whole step test is one pass of mask operations.
//!
//! Whether a facet may be added depends only on the *set* of earlier facets,
//! never on their order. Searches therefore work on facet-index bitsets and
//! memoize on them.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;

pub type ShellingSequence = Vec<Face>;

/// Largest facet count the bitset searches accept.
pub const MAX_SEARCH_FACETS: usize = 128;

/// Why a sequence is not a shelling: at position `index` (1-based) the facet
/// meets its predecessors in a complex with the maximal face `witness` of the
/// wrong dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingFailure {
    pub index: usize,
    pub facet: Face,
    pub witness: Face,
}

impl fmt::Display for ShellingFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "facet {} at position {} meets earlier facets in the maximal face {} of dimension {}",
            self.facet,
            self.index,
            self.witness,
            self.witness.dim()
        )
    }
}

/// Elements `x` of `f` whose ridge `f \ {x}` is covered by some earlier facet.
fn covered_ridges<'a, I: IntoIterator<Item = &'a Face>>(prev: I, f: Face) -> Face {
    let mut x = Face::EMPTY;
    for &g in prev {
        let out = f.difference(g);
        if out.len() == 1 {
            x = x.union(out);
        }
    }
    x
}

/// `None` when `f` may follow `prev`; otherwise a maximal face of the
/// intersection complex of the wrong dimension.
pub(crate) fn step_witness(prev: &[Face], f: Face) -> Option<Face> {
    if prev.is_empty() {
        return None;
    }
    let x = covered_ridges(prev, f);
    let bad = if x.is_empty() {
        prev.iter().map(|g| g.intersection(f)).max_by_key(|i| i.len())?
    } else {
        prev.iter().find(|g| x.is_subset_of(**g))?.intersection(f)
    };
    // grow to an inclusion-maximal intersection; it cannot be a ridge
    let mut witness = bad;
    for g in prev {
        let i = g.intersection(f);
        if witness.is_subset_of(i) && i.len() > witness.len() {
            witness = i;
        }
    }
    Some(witness)
}

/// Checks the shelling condition for every prefix of `seq`, without
/// requiring the sequence to cover any particular complex.
pub fn verify_partial(seq: &[Face]) -> Option<ShellingFailure> {
    for k in 1..seq.len() {
        if let Some(w) = step_witness(&seq[..k], seq[k]) {
            return Some(ShellingFailure { index: k + 1, facet: seq[k], witness: w });
        }
    }
    None
}

fn check_permutation(complex: &Complex, seq: &[Face]) -> Result<()> {
    let mut seen = HashSet::with_capacity(seq.len());
    for f in seq {
        if !complex.has_facet(*f) {
            return Err(Error::NotPermutation(format!("{f} is not a facet")));
        }
        if !seen.insert(*f) {
            return Err(Error::NotPermutation(format!("{f} repeated")));
        }
    }
    Ok(())
}

/// `Ok(None)` when `seq` is a shelling of `complex`, `Ok(Some(failure))` when
/// the shelling condition breaks. `seq` must list every facet exactly once.
pub fn verify_shelling(complex: &Complex, seq: &[Face]) -> Result<Option<ShellingFailure>> {
    check_permutation(complex, seq)?;
    if seq.len() != complex.num_facets() {
        return Err(Error::NotPermutation(format!(
            "{} of {} facets listed",
            seq.len(),
            complex.num_facets()
        )));
    }
    Ok(verify_partial(seq))
}

type Mask = u128;

struct Search<'a> {
    facets: &'a [Face],
    full: Mask,
    dead: HashSet<Mask>,
}

impl<'a> Search<'a> {
    fn new(complex: &'a Complex) -> Result<Search<'a>> {
        if !complex.is_pure() {
            let small = complex.facets().iter().map(|f| f.len()).min().unwrap_or(0);
            return Err(Error::NonPure(complex.rank(), small));
        }
        let m = complex.num_facets();
        if m > MAX_SEARCH_FACETS {
            return Err(Error::TooLarge(format!("{m} facets (limit {MAX_SEARCH_FACETS})")));
        }
        let full = if m == 128 { Mask::MAX } else { (1u128 << m) - 1 };
        Ok(Search { facets: complex.facets(), full, dead: HashSet::new() })
    }

    fn members(&self, s: Mask) -> impl Iterator<Item = Face> + '_ {
        let mut bits = s;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(self.facets[i])
        })
    }

    /// Candidate next facets with the count of ridges already present,
    /// most-connected first, ties by revlex.
    fn candidates(&self, s: Mask) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for j in 0..self.facets.len() {
            if s & (1u128 << j) != 0 {
                continue;
            }
            let f = self.facets[j];
            if s == 0 {
                out.push((j, 0));
                continue;
            }
            let mut x = Face::EMPTY;
            for g in self.members(s) {
                let d = f.difference(g);
                if d.len() == 1 {
                    x = x.union(d);
                }
            }
            if x.is_empty() || self.members(s).any(|g| x.is_subset_of(g)) {
                continue;
            }
            out.push((j, x.len()));
        }
        // facets are stored in revlex order, so index order breaks ties
        out.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        out.into_iter().map(|(j, _)| j).collect()
    }

    fn complete(&mut self, s: Mask, seq: &mut Vec<usize>) -> bool {
        if s == self.full {
            return true;
        }
        if self.dead.contains(&s) {
            return false;
        }
        for j in self.candidates(s) {
            seq.push(j);
            if self.complete(s | (1u128 << j), seq) {
                return true;
            }
            seq.pop();
        }
        self.dead.insert(s);
        false
    }
}

/// Exhaustive backtracking search for a shelling. `Ok(None)` means the
/// complex is not shellable. The void and empty complexes shell trivially.
pub fn find_shelling(complex: &Complex) -> Result<Option<ShellingSequence>> {
    extend_shelling(complex, &[])
}

/// Extends a valid partial shelling `prefix` (facets of `complex`) to a full
/// shelling, or reports that no extension exists.
pub fn extend_shelling(complex: &Complex, prefix: &[Face]) -> Result<Option<ShellingSequence>> {
    check_permutation(complex, prefix)?;
    if let Some(fail) = verify_partial(prefix) {
        return Err(Error::InvalidPrefix(fail));
    }
    let mut search = Search::new(complex)?;
    let index = |f: &Face| complex.facets().binary_search(f).expect("checked above");
    let mut seq: Vec<usize> = prefix.iter().map(index).collect();
    let s = seq.iter().fold(0u128, |acc, &i| acc | (1u128 << i));
    if search.complete(s, &mut seq) {
        Ok(Some(seq.into_iter().map(|i| complex.facets()[i]).collect()))
    } else {
        Ok(None)
    }
}

/// Every partial shelling extends to a shelling of the whole complex.
/// Exponential in the number of facets; meant for small complexes.
pub fn is_extendably_shellable(complex: &Complex) -> Result<bool> {
    let search = Search::new(complex)?;
    let mut completes: HashMap<Mask, bool> = HashMap::new();

    fn can_complete(search: &Search<'_>, s: Mask, memo: &mut HashMap<Mask, bool>) -> bool {
        if s == search.full {
            return true;
        }
        if let Some(&v) = memo.get(&s) {
            return v;
        }
        let v = search
            .candidates(s)
            .into_iter()
            .any(|j| can_complete(search, s | (1u128 << j), memo));
        memo.insert(s, v);
        v
    }

    // every reachable state must be able to finish
    let mut visited: HashSet<Mask> = HashSet::new();
    let mut stack = vec![0u128];
    while let Some(s) = stack.pop() {
        if !visited.insert(s) {
            continue;
        }
        if !can_complete(&search, s, &mut completes) {
            return Ok(false);
        }
        for j in search.candidates(s) {
            stack.push(s | (1u128 << j));
        }
    }
    Ok(true)
}

/// Facets of dimension at least 1 chained through shared vertices reach
/// every facet.
pub fn is_connected(complex: &Complex) -> bool {
    let facets = complex.facets();
    let Some(&first) = facets.first() else { return true };
    let mut reached = first;
    let mut left: Vec<Face> = facets[1..].to_vec();
    loop {
        let before = left.len();
        left.retain(|f| {
            if f.is_disjoint(reached) {
                true
            } else {
                reached = reached.union(*f);
                false
            }
        });
        if left.is_empty() {
            return true;
        }
        if left.len() == before {
            return false;
        }
    }
}

/// A face whose link has dimension at least 1 and is disconnected. Links of
/// shellable complexes are shellable, hence connected in positive
/// dimension, so such a face proves non-shellability. Larger faces are
/// tried first, equal sizes in lexicographic label order.
pub fn disconnected_link(complex: &Complex) -> Result<Option<(Face, Complex)>> {
    if complex.rank() < 2 {
        return Ok(None);
    }
    for size in (0..=complex.rank() - 2).rev() {
        let mut faces: Vec<Face> = complex
            .facets()
            .iter()
            .flat_map(|f| crate::face::KSubsets::new(&f.to_vec(), size))
            .collect();
        faces.sort_unstable_by_key(|f| f.to_vec());
        faces.dedup();
        for f in faces {
            let lk = complex.link(f)?;
            if !is_connected(&lk) {
                return Ok(Some((f, lk)));
            }
        }
    }
    Ok(None)
}
