//! One-stop classification of a complex, each positive answer carrying its
//! certificate and each expensive search behind a facet-count guard.

use serde::Serialize;

use crate::complex::Complex;
use crate::decompose::{is_k_decomposable, is_vertex_decomposable, DecompositionCertificate};
use crate::matroid::{exchange_violation, ExchangeViolation};
use crate::revlex::{is_shifted, LinearOrder};
use crate::shelling::{disconnected_link, find_shelling, is_extendably_shellable, ShellingSequence};
use crate::face::Face;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum Verdict<C, W = ()> {
    Yes(C),
    No(W),
    Skipped(String),
}

impl<C, W> Verdict<C, W> {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Verdict::Yes(_) => Some(true),
            Verdict::No(_) => Some(false),
            Verdict::Skipped(_) => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No(_) => "no",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

/// Searches that may blow up are skipped above these sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub max_facets: usize,
}

impl Default for Guards {
    fn default() -> Guards {
        Guards { max_facets: 20 }
    }
}

/// Face with a disconnected link, when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkWitness {
    pub face: Face,
    pub link: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KDecomposable {
    pub k: usize,
    pub verdict: Verdict<DecompositionCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub complex: Complex,
    pub num_vertices: usize,
    pub shellable: Verdict<ShellingSequence, Option<LinkWitness>>,
    pub extendably_shellable: Verdict<()>,
    pub vertex_decomposable: Verdict<DecompositionCertificate>,
    pub k_decomposable: Vec<KDecomposable>,
    pub matroid: Verdict<(), Option<ExchangeViolation>>,
    pub shifted: Verdict<()>,
}

fn guarded<C, W>(c: &Complex, g: Guards, run: impl FnOnce() -> Verdict<C, W>) -> Verdict<C, W> {
    if c.num_facets() > g.max_facets {
        Verdict::Skipped(format!("{} facets exceeds the guard of {}", c.num_facets(), g.max_facets))
    } else {
        run()
    }
}

pub fn classify(c: &Complex, guards: Guards) -> Classification {
    let shellable = guarded(c, guards, || match find_shelling(c) {
        Ok(Some(seq)) => Verdict::Yes(seq),
        Ok(None) => Verdict::No(
            disconnected_link(c)
                .ok()
                .flatten()
                .map(|(face, lk)| LinkWitness { face, link: lk.facets().to_vec() }),
        ),
        Err(e) => Verdict::Skipped(e.to_string()),
    });
    let extendably_shellable = guarded(c, guards, || match is_extendably_shellable(c) {
        Ok(true) => Verdict::Yes(()),
        Ok(false) => Verdict::No(()),
        Err(e) => Verdict::Skipped(e.to_string()),
    });
    let decompose = |k: Option<usize>| {
        guarded(c, guards, || {
            let cert = match k {
                None => is_vertex_decomposable(c),
                Some(k) => is_k_decomposable(c, k),
            };
            cert.map_or(Verdict::No(()), Verdict::Yes)
        })
    };
    let vertex_decomposable = decompose(None);
    let dim = c.rank().saturating_sub(1);
    let k_decomposable = (1..=dim).map(|k| KDecomposable { k, verdict: decompose(Some(k)) }).collect();
    let matroid = match exchange_violation(c) {
        Ok(None) => Verdict::Yes(()),
        Ok(Some(w)) => Verdict::No(Some(w)),
        Err(_) => Verdict::No(None),
    };
    let shifted = match is_shifted(c, &LinearOrder::natural(c.ground())) {
        Ok(true) => Verdict::Yes(()),
        Ok(false) => Verdict::No(()),
        Err(e) => Verdict::Skipped(e.to_string()),
    };
    Classification {
        complex: c.clone(),
        num_vertices: c.vertices().len(),
        shellable,
        extendably_shellable,
        vertex_decomposable,
        k_decomposable,
        matroid,
        shifted,
    }
}

impl Classification {
    /// Violations of the implications that must hold between the fields;
    /// skipped fields are ignored.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut out = Vec::new();
        let sh = self.shellable.holds();
        let ext = self.extendably_shellable.holds();
        let vd = self.vertex_decomposable.holds();
        let mut implies = |a: Option<bool>, b: Option<bool>, what: &str| {
            if a == Some(true) && b == Some(false) {
                out.push(what.to_string());
            }
        };
        implies(vd, sh, "vertex decomposable but not shellable");
        implies(ext, sh, "extendably shellable but not shellable");
        implies(self.matroid.holds(), vd, "matroid but not vertex decomposable");
        let mut prev = vd;
        for k in &self.k_decomposable {
            let cur = k.verdict.holds();
            implies(prev, cur, &format!("not monotone at k = {}", k.k));
            implies(cur, sh, &format!("{}-decomposable but not shellable", k.k));
            prev = cur;
        }
        if self.num_vertices <= self.complex.rank() + 2 && !self.complex.is_void() {
            implies(sh, vd, "shellable but not vertex decomposable on few vertices");
            implies(sh, ext, "shellable but not extendably shellable on few vertices");
        }
        out
    }
}
