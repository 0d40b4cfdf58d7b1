//! Exhaustive enumeration of pure complexes on `[n]`, optionally one per
//! relabelling class.
//!
//! A complex is a bit set over the `(d+1)`-subsets of `[n]` listed in revlex
//! order; the class representative is the numerically smallest bit set among
//! all `n!` relabellings.

use itertools::Itertools;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{binomial, k_subsets, Face, GroundSet};

/// Largest number of candidate facets, i.e. at most `2^24` complexes.
pub const MAX_CANDIDATE_FACETS: u128 = 24;
/// Relabelling classes are computed by brute force over `n!` permutations.
pub const MAX_DEDUPE_N: usize = 8;

#[derive(Clone, Debug)]
pub struct PureEnumeration {
    ground: GroundSet,
    subsets: Vec<Face>,
    // perms[p][i] = index of the image of subsets[i] under permutation p
    perms: Vec<Vec<u8>>,
}

impl PureEnumeration {
    pub fn new(n: usize, d: usize, dedupe: bool) -> Result<PureEnumeration> {
        let ground = GroundSet::range(n)?;
        if d + 1 > n {
            return Err(Error::DimensionTooLarge { n, d });
        }
        let m = binomial(n, d + 1);
        if m > MAX_CANDIDATE_FACETS {
            return Err(Error::TooLarge(format!(
                "C({n},{}) = {m} candidate facets exceeds {MAX_CANDIDATE_FACETS}; try a smaller n or d",
                d + 1
            )));
        }
        if dedupe && n > MAX_DEDUPE_N {
            return Err(Error::TooLarge(format!("deduplication needs n <= {MAX_DEDUPE_N}")));
        }
        let subsets: Vec<Face> = k_subsets(ground, d + 1).collect();
        let perms = if dedupe {
            (1..=n as u32)
                .permutations(n)
                .map(|p| {
                    subsets
                        .iter()
                        .map(|f| {
                            let img = Face::from_labels(f.labels().map(|l| p[l as usize - 1])).expect("permuted labels");
                            subsets.binary_search(&img).expect("image is a subset") as u8
                        })
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        Ok(PureEnumeration { ground, subsets, perms })
    }

    pub fn num_candidates(&self) -> usize {
        self.subsets.len()
    }

    pub fn candidates(&self) -> &[Face] {
        &self.subsets
    }

    pub fn complex(&self, mask: u32) -> Complex {
        let facets = (0..self.subsets.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.subsets[i]);
        Complex::new(self.ground, facets).expect("subsets of one size on the ground set")
    }

    pub fn mask_of(&self, complex: &Complex) -> Option<u32> {
        let mut mask = 0u32;
        for f in complex.facets() {
            mask |= 1 << self.subsets.binary_search(f).ok()?;
        }
        Some(mask)
    }

    fn image(&self, perm: &[u8], mask: u32) -> u32 {
        let mut out = 0u32;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1 << perm[i];
            m &= m - 1;
        }
        out
    }

    /// Smallest bit set in the relabelling class of `mask`.
    pub fn canonical(&self, mask: u32) -> u32 {
        self.perms.iter().map(|p| self.image(p, mask)).min().unwrap_or(mask)
    }

    pub fn is_canonical(&self, mask: u32) -> bool {
        self.perms.iter().all(|p| self.image(p, mask) >= mask)
    }

    /// Nonzero masks in increasing order; with deduplication only class
    /// representatives.
    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        let top = if self.subsets.len() == 32 { u32::MAX } else { (1u32 << self.subsets.len()) - 1 };
        (1..=top).filter(move |&m| self.perms.is_empty() || self.is_canonical(m))
    }

    pub fn complexes(&self) -> impl Iterator<Item = Complex> + '_ {
        self.masks().map(|m| self.complex(m))
    }
}

/// All nonvoid pure `d`-complexes on `[n]`, in increasing bit-set order.
pub fn enumerate_pure(n: usize, d: usize, dedupe: bool) -> Result<Vec<Complex>> {
    let e = PureEnumeration::new(n, d, dedupe)?;
    Ok(e.complexes().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    // Orbit oracle on facet lists: relabel every complex by every permutation
    // and keep the lexicographically smallest sorted facet list.
    fn orbit_count(n: u32, d: usize) -> usize {
        let subsets: Vec<Vec<u32>> = (1..=n).combinations(d + 1).collect();
        let perms: Vec<Vec<u32>> = (1..=n).permutations(n as usize).collect();
        let mut classes = BTreeSet::new();
        for mask in 1u32..(1 << subsets.len()) {
            let facets: Vec<&Vec<u32>> = (0..subsets.len()).filter(|i| mask >> i & 1 == 1).map(|i| &subsets[i]).collect();
            let best = perms
                .iter()
                .map(|p| {
                    let mut img: Vec<Vec<u32>> = facets
                        .iter()
                        .map(|f| {
                            let mut g: Vec<u32> = f.iter().map(|&l| p[l as usize - 1]).collect();
                            g.sort_unstable();
                            g
                        })
                        .collect();
                    img.sort();
                    img
                })
                .min()
                .unwrap();
            classes.insert(best);
        }
        classes.len()
    }

    #[test]
    fn raw_counts() {
        assert_eq!(enumerate_pure(4, 2, false).unwrap().len(), 15);
        assert_eq!(enumerate_pure(5, 2, false).unwrap().len(), 1023);
        assert_eq!(enumerate_pure(4, 1, false).unwrap().len(), 63);
    }

    #[test]
    fn dedupe_matches_orbit_oracle() {
        for (n, d) in [(4, 1), (4, 2), (5, 2), (5, 1), (5, 3)] {
            let got = enumerate_pure(n, d, true).unwrap().len();
            assert_eq!(got, orbit_count(n as u32, d), "n={n} d={d}");
        }
    }

    #[test]
    fn representatives_are_minimal_and_exhaustive() {
        let e = PureEnumeration::new(5, 2, true).unwrap();
        let reps: BTreeSet<u32> = e.masks().collect();
        let raw = PureEnumeration::new(5, 2, false).unwrap();
        for m in raw.masks() {
            assert!(reps.contains(&e.canonical(m)));
        }
        for c in e.complexes() {
            assert_eq!(e.mask_of(&c).map(|m| e.canonical(m)), e.mask_of(&c));
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(PureEnumeration::new(9, 3, false), Err(Error::TooLarge(_))));
        assert!(matches!(PureEnumeration::new(3, 3, false), Err(Error::DimensionTooLarge { .. })));
        assert!(matches!(PureEnumeration::new(10, 0, true), Err(Error::TooLarge(_))));
    }
}
