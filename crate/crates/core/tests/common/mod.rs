#![allow(dead_code)]

use shellcomp_core::{Complex, Face, GroundSet, PureEnumeration};

pub fn face(s: &str) -> Face {
    if s.is_empty() {
        return Face::EMPTY;
    }
    Face::from_labels(s.chars().map(|c| c.to_digit(10).unwrap())).unwrap()
}

pub fn cx(n: usize, facets: &[&str]) -> Complex {
    Complex::new(GroundSet::range(n).unwrap(), facets.iter().map(|f| face(f))).unwrap()
}

pub fn lists(c: &Complex) -> Vec<Vec<u32>> {
    c.facet_lists()
}

pub fn seq_lists(seq: &[Face]) -> Vec<Vec<u32>> {
    seq.iter().map(|f| f.to_vec()).collect()
}

/// Every nonvoid pure complex on `[n]` of every dimension.
pub fn all_pure(n: usize) -> Vec<Complex> {
    (0..n).flat_map(|d| PureEnumeration::new(n, d, false).unwrap().complexes().collect::<Vec<_>>()).collect()
}

/// Every nonvoid pure complex on `[n]` for `n <= max_n`.
pub fn all_pure_upto(max_n: usize) -> Vec<Complex> {
    (1..=max_n).flat_map(all_pure).collect()
}

pub fn delta7() -> Complex {
    cx(7, &["1234", "1235", "1245", "1345", "2345", "1236", "1246", "1256", "2356", "1237", "2347"])
}

pub fn v6f10() -> Complex {
    cx(6, &["123", "124", "125", "134", "136", "245", "256", "346", "356", "456"])
}

/// Every face of the complex, the empty face included, sorted and deduplicated.
pub fn all_faces(c: &Complex) -> Vec<Face> {
    let mut out = Vec::new();
    for f in c.facets() {
        let ls = f.to_vec();
        for mask in 0u32..(1 << ls.len()) {
            out.push(Face::from_labels((0..ls.len()).filter(|i| mask >> i & 1 == 1).map(|i| ls[i])).unwrap());
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Subsets of size `rank` of the ground set that are not facets.
pub fn missing(c: &Complex) -> Vec<Face> {
    shellcomp_core::face::k_subsets(c.ground(), c.rank()).filter(|f| !c.has_facet(*f)).collect()
}
