//! Complement graphs of codimension-two complexes, chordality with
//! elimination-order certificates, and the constructive decomposition of
//! shellable `d`-complexes on at most `d + 3` vertices.
//!
//! Convention: the complement graph of `Δ` on vertex set `V` is `K_V` with
//! the edge `V \ F` removed for every facet `F`. A facet is a *missing*
//! edge, so the graph is chordal exactly when `Δ` is shellable:
//!
//! ```
//! use shellcomp_core::{chordal, Complex, GroundSet};
//! let g = GroundSet::range(5).unwrap();
//! let d = Complex::from_lists(g, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]).unwrap();
//! let graph = chordal::complement_graph(&d).unwrap();
//! assert!(!graph.has_edge(4, 5) && !graph.has_edge(3, 5) && !graph.has_edge(3, 4));
//! assert!(graph.has_edge(1, 2) && graph.has_edge(1, 3));
//! assert!(chordal::is_chordal(&graph).is_some());
//! ```

use std::collections::VecDeque;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::complex::Complex;
use crate::decompose::DecompositionCertificate;
use crate::error::{Error, Result};
use crate::face::{Face, GroundSet, MAX_LABEL};
use crate::shelling::find_shelling;

/// Simple undirected graph on at most 64 labelled vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Face,
    adj: [u64; MAX_LABEL as usize],
}

fn bit(l: u32) -> u64 {
    1u64 << (l - 1)
}

impl Graph {
    /// No edges.
    pub fn empty(vertices: GroundSet) -> Graph {
        Graph { vertices: vertices.as_face(), adj: [0; MAX_LABEL as usize] }
    }

    pub fn complete(vertices: GroundSet) -> Graph {
        let mut g = Graph::empty(vertices);
        let all = vertices.bits();
        for v in vertices.labels() {
            g.adj[v as usize - 1] = all & !bit(v);
        }
        g
    }

    fn check(&self, a: u32, b: u32) -> Result<()> {
        for l in [a, b] {
            if !self.vertices.contains(l) {
                return Err(Error::LabelNotInGround { label: l });
            }
        }
        if a == b {
            return Err(Error::Precondition(format!("self-loop at {a}")));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, a: u32, b: u32) -> Result<()> {
        self.check(a, b)?;
        self.adj[a as usize - 1] |= bit(b);
        self.adj[b as usize - 1] |= bit(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: u32, b: u32) -> Result<()> {
        self.check(a, b)?;
        self.adj[a as usize - 1] &= !bit(b);
        self.adj[b as usize - 1] &= !bit(a);
        Ok(())
    }

    pub fn from_edges(vertices: GroundSet, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut g = Graph::empty(vertices);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        (1..=MAX_LABEL).contains(&a) && (1..=MAX_LABEL).contains(&b) && self.adj[a as usize - 1] & bit(b) != 0
    }

    /// Open neighbourhood; empty for labels outside the graph.
    pub fn neighbors(&self, v: u32) -> Face {
        if !self.vertices.contains(v) {
            return Face::EMPTY;
        }
        Face::from_bits(self.adj[v as usize - 1])
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for a in self.vertices.labels() {
            for b in self.neighbors(a).labels().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        self.vertices.labels().map(|v| self.neighbors(v).len()).sum::<usize>() / 2
    }

    /// Induced subgraph on `keep ∩ V`.
    pub fn induced(&self, keep: Face) -> Graph {
        let vertices = self.vertices.intersection(keep);
        let mut adj = [0; MAX_LABEL as usize];
        for v in vertices.labels() {
            adj[v as usize - 1] = self.adj[v as usize - 1] & vertices.bits();
        }
        Graph { vertices, adj }
    }

    /// Every two vertices of `s` are adjacent.
    pub fn is_clique(&self, s: Face) -> bool {
        s.labels().all(|v| s.difference(Face::from_bits(bit(v))).is_subset_of(self.neighbors(v)))
    }

    pub fn is_simplicial(&self, v: u32) -> bool {
        self.vertices.contains(v) && self.is_clique(self.neighbors(v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={}, E={:?})", self.vertices, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if a < 10 && b < 10 {
                write!(f, "{a}{b}")?;
            } else {
                write!(f, "{a}-{b}")?;
            }
        }
        f.write_str("}")
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("vertices", &self.vertices.to_vec())?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

/// `K_V` minus `V \ F` for every facet `F`, where `V` is the ground set.
pub fn complement_graph(complex: &Complex) -> Result<Graph> {
    let n = complex.ground().len();
    if n < 2 || complex.rank() + 2 != n {
        return Err(Error::NotCodimensionTwo { n, rank: complex.rank() });
    }
    let mut g = Graph::complete(complex.ground());
    for f in complex.facets() {
        let e = complex.ground().as_face().difference(*f).to_vec();
        g.remove_edge(e[0], e[1])?;
    }
    Ok(g)
}

/// Either a perfect elimination order or a chordless cycle of length ≥ 4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "kebab-case")]
pub enum Chordality {
    EliminationOrder(Vec<u32>),
    InducedCycle(Vec<u32>),
}

/// Maximum cardinality search; the reverse visit order is a perfect
/// elimination order iff the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<u32> {
    let mut weight = [0u32; MAX_LABEL as usize];
    let mut unvisited = g.vertices();
    let mut visit = Vec::with_capacity(g.vertices().len());
    while let Some(first) = unvisited.min_label() {
        let mut best = first;
        for v in unvisited.labels() {
            if weight[v as usize - 1] > weight[best as usize - 1] {
                best = v;
            }
        }
        visit.push(best);
        unvisited = unvisited.difference(Face::from_bits(bit(best)));
        for w in g.neighbors(best).intersection(unvisited).labels() {
            weight[w as usize - 1] += 1;
        }
    }
    visit.reverse();
    visit
}

/// Each vertex is simplicial in the graph induced on itself and the
/// vertices after it.
pub fn is_elimination_order(g: &Graph, order: &[u32]) -> bool {
    let Ok(all) = Face::from_labels(order.iter().copied()) else { return false };
    if all != g.vertices() || all.len() != order.len() {
        return false;
    }
    let mut remaining = all;
    for &v in order {
        let later = g.neighbors(v).intersection(remaining);
        if !g.is_clique(later) {
            return false;
        }
        remaining = remaining.difference(Face::from_bits(bit(v)));
    }
    true
}

/// Shortest path from `x` to `y` inside `allowed`, endpoints included.
fn shortest_path(g: &Graph, x: u32, y: u32, allowed: Face) -> Option<Vec<u32>> {
    let mut prev = [0u32; MAX_LABEL as usize];
    let mut seen = Face::from_bits(bit(x));
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            let mut path = vec![y];
            let mut cur = y;
            while cur != x {
                cur = prev[cur as usize - 1];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).intersection(allowed).difference(seen).labels() {
            seen = seen.union(Face::from_bits(bit(w)));
            prev[w as usize - 1] = u;
            queue.push_back(w);
        }
    }
    None
}

/// A chordless cycle of length at least 4, if any: for each vertex `v` and
/// non-adjacent neighbours `x`, `y`, a shortest `x`–`y` path avoiding the
/// rest of `N[v]` closes one.
pub fn induced_cycle(g: &Graph) -> Option<Vec<u32>> {
    for v in g.vertices().labels() {
        let nv = g.neighbors(v);
        for x in nv.labels() {
            for y in nv.labels().filter(|&y| y > x && !g.has_edge(x, y)) {
                let closed = nv.union(Face::from_bits(bit(v)));
                let allowed = g.vertices().difference(closed).union(Face::from_bits(bit(x) | bit(y)));
                if let Some(path) = shortest_path(g, x, y, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn chordality(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    if is_elimination_order(g, &order) {
        return Chordality::EliminationOrder(order);
    }
    match induced_cycle(g) {
        Some(c) => Chordality::InducedCycle(c),
        None => unreachable!("MCS order failed but no chordless cycle exists"),
    }
}

/// A perfect elimination order, or `None` when the graph has a chordless
/// cycle of length ≥ 4 (see [`chordality`] for the witness).
pub fn is_chordal(g: &Graph) -> Option<Vec<u32>> {
    match chordality(g) {
        Chordality::EliminationOrder(o) => Some(o),
        Chordality::InducedCycle(_) => None,
    }
}

pub fn simplicial_vertices(g: &Graph) -> Face {
    Face::from_labels(g.vertices().labels().filter(|&v| g.is_simplicial(v))).expect("labels come from a face")
}

/// Decomposition certificate for a shellable pure `d`-complex on at most
/// `d + 3` vertices, following the constructive argument: points shed any
/// vertex, graphs shed a spanning-tree leaf, complexes on `d + 2` vertices
/// shed a vertex missing from a facet, and on `d + 3` vertices a simplicial
/// vertex of the complement graph is shed. Loops are ignored.
pub fn vd_certificate_small(complex: &Complex) -> Result<DecompositionCertificate> {
    if !complex.is_pure() {
        return Err(Error::Precondition("complex is not pure".into()));
    }
    let nv = complex.vertices().len();
    if !complex.is_void() && nv > complex.rank() + 2 {
        return Err(Error::Precondition(format!(
            "{nv} vertices exceeds dimension + 3 = {}",
            complex.rank() + 2
        )));
    }
    if find_shelling(complex)?.is_none() {
        return Err(Error::NotShellable);
    }
    let cert = small(&complex.without_loops())?;
    cert.replay(complex, 1).map_err(|e| Error::Internal(format!("small-case certificate rejected: {e}")))?;
    Ok(cert)
}

fn small(c: &Complex) -> Result<DecompositionCertificate> {
    if let Some(base) = DecompositionCertificate::base_for(c) {
        return Ok(base);
    }
    let vertices = c.vertices();
    let rank = c.rank();
    let v = if rank == 1 {
        vertices.min_label().expect("non-simplex has vertices")
    } else if rank == 2 {
        spanning_tree_leaf(c).ok_or(Error::NotShellable)?
    } else if vertices.len() <= rank + 1 {
        vertices.difference(c.facets()[0]).min_label().expect("non-simplex has a vertex off each facet")
    } else if vertices.len() == rank + 2 {
        let g = complement_graph(c)?;
        if is_chordal(&g).is_none() {
            return Err(Error::NotShellable);
        }
        simplicial_vertices(&g).min_label().expect("chordal graphs have simplicial vertices")
    } else {
        return Err(Error::Internal(format!("{c} has too many vertices for the small case")));
    };
    let deletion = small(&c.delete_vertex(v)?.without_loops())?;
    let link = small(&c.link(Face::singleton(v)?)?.without_loops())?;
    Ok(DecompositionCertificate::Step {
        face: Face::singleton(v)?,
        deletion: Box::new(deletion),
        link: Box::new(link),
    })
}

/// The smallest leaf of a breadth-first spanning tree rooted at the smallest
/// vertex of a 1-dimensional complex; `None` if disconnected.
fn spanning_tree_leaf(c: &Complex) -> Option<u32> {
    let vertices = c.vertices();
    let mut g = Graph::empty(GroundSet::from_face(vertices).ok()?);
    for f in c.facets() {
        let e = f.to_vec();
        g.add_edge(e[0], e[1]).ok()?;
    }
    let root = vertices.min_label()?;
    let mut seen = Face::from_bits(bit(root));
    let mut has_child = Face::EMPTY;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u).difference(seen).labels() {
            seen = seen.union(Face::from_bits(bit(w)));
            has_child = has_child.union(Face::from_bits(bit(u)));
            queue.push_back(w);
        }
    }
    if seen != vertices {
        return None;
    }
    vertices.difference(has_child).min_label()
}
