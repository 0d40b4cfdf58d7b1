//! Benchmark inputs: the worked examples plus a few larger complexes.

use shellcomp_core::{Complex, Face, GroundSet};

fn build(n: usize, facets: &[&str]) -> Complex {
    let faces = facets.iter().map(|f| Face::from_labels(f.chars().map(|c| c.to_digit(10).unwrap())).unwrap());
    Complex::new(GroundSet::range(n).unwrap(), faces).unwrap()
}

pub fn delta7() -> Complex {
    build(7, &["1234", "1235", "1245", "1345", "2345", "1236", "1246", "1256", "2356", "1237", "2347"])
}

/// Shellable, not vertex decomposable.
pub fn v6f10() -> Complex {
    build(6, &["123", "124", "125", "134", "136", "245", "256", "346", "356", "456"])
}

/// Not shellable: the link of 56 is two disjoint edges.
pub fn m9() -> Complex {
    build(6, &["1234", "1345", "2346", "3456", "1235", "1245", "1236", "1246", "1256"])
}

/// The full `d`-skeleton of the `(n-1)`-simplex.
pub fn skeleton(n: usize, d: usize) -> Complex {
    Complex::skeleton(n, d).unwrap()
}
