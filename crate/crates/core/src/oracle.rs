//! Brute-force checkers that share no code with the searches: faces are
//! plain sorted `Vec<u32>`s, complexes are facet lists, and every notion is
//! re-implemented straight from its definition. Slow by design.

use std::collections::{BTreeSet, HashMap};

use crate::decompose::DecompositionCertificate;

pub type Set = BTreeSet<u32>;

fn set(v: &[u32]) -> Set {
    v.iter().copied().collect()
}

/// Inclusion-maximal members of `faces`, deduplicated and sorted.
pub fn maximal(faces: Vec<Set>) -> Vec<Set> {
    let mut uniq: Vec<Set> = faces.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    uniq.sort();
    uniq.iter()
        .filter(|f| !uniq.iter().any(|g| g != *f && f.is_subset(g)))
        .cloned()
        .collect()
}

fn facets_of(lists: &[Vec<u32>]) -> Vec<Set> {
    maximal(lists.iter().map(|f| set(f)).collect())
}

/// Each facet after the first meets the union of the earlier ones in a pure
/// codimension-one complex: the maximal pairwise intersections all have
/// size `|F| - 1`.
pub fn check_partial_shelling(seq: &[Vec<u32>]) -> Result<(), String> {
    let seq: Vec<Set> = seq.iter().map(|f| set(f)).collect();
    for k in 1..seq.len() {
        let f = &seq[k];
        let meets = maximal(seq[..k].iter().map(|g| f.intersection(g).copied().collect()).collect());
        if let Some(bad) = meets.iter().find(|m| m.len() + 1 != f.len()) {
            return Err(format!("step {}: {:?} meets the earlier facets in {:?}", k + 1, f, bad));
        }
    }
    Ok(())
}

/// `seq` is a permutation of the facets of the complex and a shelling.
pub fn check_shelling(facets: &[Vec<u32>], seq: &[Vec<u32>]) -> Result<(), String> {
    let want: BTreeSet<Set> = facets_of(facets).into_iter().collect();
    let got: Vec<Set> = seq.iter().map(|f| set(f)).collect();
    let got_set: BTreeSet<Set> = got.iter().cloned().collect();
    if got_set.len() != got.len() {
        return Err("sequence repeats a facet".into());
    }
    if got_set != want {
        return Err("sequence is not a permutation of the facets".into());
    }
    check_partial_shelling(seq)
}

/// Exhaustive shellability: depth-first over orders, memoised on the set of
/// facets already placed. At most 32 facets.
pub fn naive_shellable(facets: &[Vec<u32>]) -> bool {
    let fs = facets_of(facets);
    assert!(fs.len() <= 32, "oracle limited to 32 facets");
    if fs.len() <= 1 {
        return true;
    }
    fn ok_after(fs: &[Set], used: u32, k: usize) -> bool {
        let meets = maximal(
            (0..fs.len())
                .filter(|i| used >> i & 1 == 1)
                .map(|i| fs[k].intersection(&fs[i]).copied().collect())
                .collect(),
        );
        meets.iter().all(|m| m.len() + 1 == fs[k].len())
    }
    fn rec(fs: &[Set], used: u32, dead: &mut HashMap<u32, ()>) -> bool {
        if used.count_ones() as usize == fs.len() {
            return true;
        }
        if dead.contains_key(&used) {
            return false;
        }
        for k in 0..fs.len() {
            if used >> k & 1 == 0 && (used == 0 || ok_after(fs, used, k)) && rec(fs, used | 1 << k, dead) {
                return true;
            }
        }
        dead.insert(used, ());
        false
    }
    rec(&fs, 0, &mut HashMap::new())
}

fn link(fs: &[Set], sigma: &Set) -> Vec<Set> {
    maximal(fs.iter().filter(|f| sigma.is_subset(f)).map(|f| f.difference(sigma).copied().collect()).collect())
}

fn deletion(fs: &[Set], sigma: &Set) -> Vec<Set> {
    let mut faces = Vec::new();
    for f in fs {
        if sigma.is_subset(f) {
            for x in sigma {
                let mut g = f.clone();
                g.remove(x);
                faces.push(g);
            }
        } else {
            faces.push(f.clone());
        }
    }
    maximal(faces)
}

fn is_face(fs: &[Set], sigma: &Set) -> bool {
    fs.iter().any(|f| sigma.is_subset(f))
}

/// Shedding face per definition: the deletion is nonvoid, pure, and of the
/// same dimension.
fn sheds(fs: &[Set], sigma: &Set) -> bool {
    let d = fs[0].len();
    let del = deletion(fs, sigma);
    !del.is_empty() && del.iter().all(|g| g.len() == d)
}

fn replay(fs: &[Set], cert: &DecompositionCertificate, k: usize) -> Result<(), String> {
    match cert {
        DecompositionCertificate::VoidBase if fs.is_empty() => Ok(()),
        DecompositionCertificate::EmptyBase if fs.len() == 1 && fs[0].is_empty() => Ok(()),
        DecompositionCertificate::SimplexBase if fs.len() == 1 => Ok(()),
        DecompositionCertificate::Step { face, deletion: del, link: lk } => {
            let sigma: Set = face.labels().collect();
            if sigma.is_empty() || sigma.len() > k + 1 {
                return Err(format!("face {sigma:?} has dimension above {k}"));
            }
            if !is_face(fs, &sigma) {
                return Err(format!("{sigma:?} is not a face"));
            }
            if fs.len() < 2 || !sheds(fs, &sigma) {
                return Err(format!("{sigma:?} does not shed from {fs:?}"));
            }
            replay(&deletion(fs, &sigma), del, k)?;
            replay(&link(fs, &sigma), lk, k)
        }
        other => Err(format!("{other:?} does not match {fs:?}")),
    }
}

/// Replays a k-decomposition certificate (shedding faces of dimension at
/// most `k`); vertex decomposability is `k = 0`.
pub fn check_decomposition(facets: &[Vec<u32>], cert: &DecompositionCertificate, k: usize) -> Result<(), String> {
    let fs = facets_of(facets);
    if fs.iter().any(|f| f.len() != fs[0].len()) {
        return Err("complex is not pure".into());
    }
    replay(&fs, cert, k)
}

/// Exhaustive k-decomposability straight from the recursive definition,
/// trying every face of dimension `0..=k`.
pub fn naive_k_decomposable(facets: &[Vec<u32>], k: usize) -> bool {
    fn rec(fs: &[Set], k: usize, memo: &mut HashMap<Vec<Set>, bool>) -> bool {
        if fs.len() <= 1 {
            return true;
        }
        if let Some(&r) = memo.get(fs) {
            return r;
        }
        let mut faces: BTreeSet<Set> = BTreeSet::new();
        for f in fs {
            let v: Vec<u32> = f.iter().copied().collect();
            for mask in 1u32..(1 << v.len()) {
                if (mask.count_ones() as usize) <= k + 1 {
                    faces.insert((0..v.len()).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect());
                }
            }
        }
        let r = faces.iter().any(|s| {
            sheds(fs, s) && rec(&deletion(fs, s), k, memo) && rec(&link(fs, s), k, memo)
        });
        memo.insert(fs.to_vec(), r);
        r
    }
    let fs = facets_of(facets);
    if fs.iter().any(|f| f.len() != fs[0].len()) {
        return false;
    }
    rec(&fs, k, &mut HashMap::new())
}

/// Every vertex is simplicial among the vertices that come after it.
pub fn check_elimination_order(vertices: &[u32], edges: &[(u32, u32)], order: &[u32]) -> Result<(), String> {
    let adj = |a: u32, b: u32| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    if set(order) != set(vertices) || order.len() != vertices.len() {
        return Err("order is not a permutation of the vertices".into());
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<u32> = order[i + 1..].iter().copied().filter(|&w| adj(v, w)).collect();
        for (j, &a) in later.iter().enumerate() {
            for &b in &later[j + 1..] {
                if !adj(a, b) {
                    return Err(format!("{v}: later neighbours {a} and {b} are not adjacent"));
                }
            }
        }
    }
    Ok(())
}

/// A cycle of length ≥ 4 whose only edges are the consecutive ones.
pub fn check_induced_cycle(edges: &[(u32, u32)], cycle: &[u32]) -> Result<(), String> {
    let adj = |a: u32, b: u32| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    let k = cycle.len();
    if k < 4 || set(cycle).len() != k {
        return Err("need at least 4 distinct vertices".into());
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if consecutive != adj(cycle[i], cycle[j]) {
                return Err(format!("pair {} {} breaks the cycle", cycle[i], cycle[j]));
            }
        }
    }
    Ok(())
}

/// Every `size`-subset of `ground`, for completion checks.
pub fn all_subsets(ground: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(g: &[u32], size: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..g.len() {
            cur.push(g[i]);
            rec(g, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(ground, size, 0, &mut cur, &mut out);
    out
}
