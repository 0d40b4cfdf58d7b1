//! Plain-text rendering of certificates and traces.

use shellcomp_core::{DecompositionCertificate, Face, TraceCase};

pub fn faces(fs: &[Face]) -> String {
    fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn case(c: TraceCase) -> &'static str {
    match c {
        TraceCase::Loop => "loop",
        TraceCase::DeletionBranch => "deletion",
        TraceCase::LinkBranch => "link",
        TraceCase::FullBase => "base",
    }
}

pub fn trace(cases: &[(Option<u32>, TraceCase)]) -> String {
    cases
        .iter()
        .map(|(e, c)| match e {
            Some(e) => format!("{e}:{}", case(*c)),
            None => case(*c).to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Indented tree, one shedding step per line.
pub fn certificate(cert: &DecompositionCertificate) -> String {
    let mut out = String::new();
    walk(cert, 0, "", &mut out);
    out
}

fn walk(cert: &DecompositionCertificate, depth: usize, tag: &str, out: &mut String) {
    let pad = "  ".repeat(depth);
    match cert {
        DecompositionCertificate::Step { face, deletion, link } => {
            out.push_str(&format!("{pad}{tag}shed {face}\n"));
            walk(deletion, depth + 1, "del: ", out);
            walk(link, depth + 1, "lk: ", out);
        }
        DecompositionCertificate::SimplexBase => out.push_str(&format!("{pad}{tag}simplex\n")),
        DecompositionCertificate::VoidBase => out.push_str(&format!("{pad}{tag}void\n")),
        DecompositionCertificate::EmptyBase => out.push_str(&format!("{pad}{tag}{{}}\n")),
    }
}
