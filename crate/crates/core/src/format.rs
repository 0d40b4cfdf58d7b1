//! The `.scx` text format.
//!
//! ```text
//! # comment to end of line
//! ground 7            # or: ground 1 2 3 5 8   (declares loops too)
//! 1 2 3 4             # one facet per line, whitespace-separated labels
//! 1 2 3 5
//! order 1 2 3 4 5 6 7 # optional linear order on the ground set
//! ```
//!
//! Without a `ground` line the ground set is the union of the facets. The
//! empty facet is written `{}`. LF and CRLF line endings are accepted.

use std::fmt::Write as _;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, GroundSet};
use crate::revlex::LinearOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub message: String,
}

/// A parsed file. `sequence` keeps the facets in file order (duplicates
/// dropped), which is what `check-shelling` verifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub complex: Complex,
    pub sequence: Vec<Face>,
    pub order: Option<LinearOrder>,
    pub warnings: Vec<Warning>,
}

impl ComplexFile {
    pub fn new(complex: Complex) -> ComplexFile {
        let sequence = complex.facets().to_vec();
        ComplexFile { complex, sequence, order: None, warnings: Vec::new() }
    }
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn label(tok: &str, line: usize) -> Result<u32> {
    let l: u32 = tok.parse().map_err(|_| perr(line, format!("`{tok}` is not a label")))?;
    if l == 0 || l > 64 {
        return Err(perr(line, format!("label {l} is outside 1..=64")));
    }
    Ok(l)
}

pub fn parse(text: &str) -> Result<ComplexFile> {
    let mut ground: Option<(GroundSet, usize)> = None;
    let mut order: Option<(Vec<u32>, usize)> = None;
    let mut facets: Vec<(Face, usize)> = Vec::new();
    let mut warnings = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        let head = toks.next().expect("nonempty line");
        match head {
            "ground" => {
                if ground.is_some() {
                    return Err(perr(line, "second ground line"));
                }
                if !facets.is_empty() {
                    return Err(perr(line, "ground line must come before the facets"));
                }
                let rest: Vec<&str> = toks.collect();
                let g = match rest.as_slice() {
                    [] => return Err(perr(line, "ground line needs a size or labels")),
                    [n] => {
                        let n: usize = n.parse().map_err(|_| perr(line, format!("`{n}` is not a size")))?;
                        GroundSet::range(n).map_err(|_| perr(line, format!("ground size {n} is outside 1..=64")))?
                    }
                    many => {
                        let ls = many.iter().map(|t| label(t, line)).collect::<Result<Vec<_>>>()?;
                        GroundSet::from_labels(ls).map_err(|e| perr(line, e.to_string()))?
                    }
                };
                ground = Some((g, line));
            }
            "order" => {
                if order.is_some() {
                    return Err(perr(line, "second order line"));
                }
                let ls = toks.map(|t| label(t, line)).collect::<Result<Vec<_>>>()?;
                order = Some((ls, line));
            }
            "{}" => {
                if toks.next().is_some() {
                    return Err(perr(line, "`{}` must stand alone"));
                }
                facets.push((Face::EMPTY, line));
            }
            _ => {
                let ls = std::iter::once(head).chain(toks).map(|t| label(t, line)).collect::<Result<Vec<_>>>()?;
                let f = Face::from_labels(ls).map_err(|e| perr(line, e.to_string()))?;
                facets.push((f, line));
            }
        }
    }

    let ground = match ground {
        Some((g, _)) => g,
        None => {
            let all = facets.iter().fold(Face::EMPTY, |a, (f, _)| a.union(*f));
            GroundSet::from_face(all).map_err(|_| perr(0, "no ground line and no nonempty facet"))?
        }
    };
    let Some(&(first, first_line)) = facets.first() else {
        return Err(perr(0, "no facets"));
    };
    let mut sequence: Vec<Face> = Vec::with_capacity(facets.len());
    for &(f, line) in &facets {
        if let Some(l) = f.difference(ground.as_face()).min_label() {
            return Err(perr(line, format!("label {l} is not in the ground set")));
        }
        if f.len() != first.len() {
            return Err(perr(
                line,
                format!("facet {f} has {} labels but line {first_line} has {}", f.len(), first.len()),
            ));
        }
        if sequence.contains(&f) {
            warnings.push(Warning { line, message: format!("duplicate facet {f} ignored") });
            continue;
        }
        sequence.push(f);
    }
    let complex = Complex::new(ground, sequence.iter().copied())?;
    let order = match order {
        None => None,
        Some((ls, line)) => {
            let o = LinearOrder::new(ls).map_err(|e| perr(line, e.to_string()))?;
            if !o.is_order_on(ground) {
                return Err(perr(line, "order is not a permutation of the ground set"));
            }
            Some(o)
        }
    };
    Ok(ComplexFile { complex, sequence, order, warnings })
}

/// Canonical text: `ground` line, facets in canonical order, then the order
/// line if any. Parsing the output gives back the same complex and order.
pub fn serialize(file: &ComplexFile) -> String {
    let c = &file.complex;
    let mut out = String::new();
    let g = c.ground();
    if g.is_initial_segment() {
        let _ = writeln!(out, "ground {}", g.len());
    } else {
        let _ = writeln!(out, "ground {}", join(g.labels()));
    }
    for f in c.facets() {
        if f.is_empty() {
            out.push_str("{}\n");
        } else {
            let _ = writeln!(out, "{}", join(f.labels()));
        }
    }
    if let Some(o) = &file.order {
        let _ = writeln!(out, "order {o}");
    }
    out
}

fn join(ls: impl Iterator<Item = u32>) -> String {
    ls.map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Labels from a command-line argument: separated by whitespace or commas
/// (`"1 3 4 6"`, `"1,3,4,6"`), or a single run of digits read one label per
/// digit (`"1346"`). Labels of two digits need separators.
pub fn parse_labels(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let toks: Vec<&str> = s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect();
    if toks.len() == 1 && toks[0].len() > 1 && toks[0].chars().all(|c| c.is_ascii_digit()) {
        return toks[0].chars().map(|c| label(&c.to_string(), 0)).collect();
    }
    toks.iter().map(|t| label(t, 0)).collect()
}

pub fn parse_face(s: &str) -> Result<Face> {
    if s.trim() == "{}" {
        return Ok(Face::EMPTY);
    }
    Face::from_labels(parse_labels(s)?)
}
