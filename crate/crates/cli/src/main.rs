//! `shellcomp`: shellability, vertex decomposability and shelling completion
//! for `.scx` files.
//!
//! Exit codes: 0 the property holds (or the task finished), 1 it fails
//! (witness on stdout), 2 usage or parse error, 3 a search guard was
//! exceeded, 4 an independent oracle rejected a certificate.

mod enumerate;
mod render;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use shellcomp_core::chordal::{chordality, Chordality};
use shellcomp_core::format::parse_labels;
use shellcomp_core::{
    classify, complement_graph, complete_by_extension, complete_to_skeleton, decomposing_order_criterion,
    disconnected_link, exchange_violation, extend_once, find_decomposing_order, find_shelling,
    is_extendably_shellable, is_k_decomposable, is_shifted, is_vertex_decomposable, oracle, parse, smallest_missing,
    verify_shelling, Classification, Complex, ComplexFile, DecompositionCertificate, Error, Guards, LinearOrder,
    Verdict,
};

#[derive(Parser)]
#[command(name = "shellcomp", version, about = "Shellability and vertex decomposability of small simplicial complexes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Skip exponential searches on complexes with more facets than this.
    #[arg(long, global = true, default_value_t = 20)]
    max_facets: usize,
    /// Re-verify every positive certificate with the brute-force checkers.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that the facets, in file order, form a shelling.
    CheckShelling { file: PathBuf },
    /// Search for a shelling.
    FindShelling { file: PathBuf },
    /// Decide extendable shellability.
    Extendable { file: PathBuf },
    /// Search for a vertex decomposition.
    CheckVd { file: PathBuf },
    /// Search for a k-decomposition (shedding faces of dimension at most k).
    CheckKdec {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Check the basis exchange property.
    CheckMatroid { file: PathBuf },
    /// Check shiftedness under the file's order (natural order by default).
    CheckShifted {
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
    /// Construct a decomposing order, or verify the given one.
    DecomposingOrder {
        #[arg(long)]
        verify: Option<String>,
        file: PathBuf,
    },
    /// Add the revlex smallest missing facet and test the result.
    ExtendOnce {
        #[arg(long)]
        order: Option<String>,
        file: PathBuf,
    },
    /// Extend a shelling of the complex to a shelling of the full skeleton.
    Complete { file: PathBuf },
    /// Complement graph of a codimension-two complex and its chordality.
    ComplementChordal { file: PathBuf },
    /// Every property at once.
    Classify { file: PathBuf },
    /// All pure d-complexes on [n].
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// One complex per relabelling class.
        #[arg(long)]
        dedupe: bool,
        /// CSV classification report instead of facet lists.
        #[arg(long)]
        report: bool,
    },
}

pub enum Failure {
    Usage(String),
    Guard(String),
    Oracle(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::TooLarge(_) => Failure::Guard(e.to_string()),
            Error::Internal(_) => Failure::Oracle(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// What a command found: whether the property holds, and how to say so.
pub struct Report {
    pub holds: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(holds: bool, text: impl Into<String>, json: Value) -> Report {
        Report { holds, text: text.into(), json }
    }
}

pub struct Ctx {
    pub json: bool,
    pub guards: Guards,
    pub oracle: bool,
}

impl Ctx {
    fn guard(&self, c: &Complex) -> Result<(), Failure> {
        if c.num_facets() > self.guards.max_facets {
            return Err(Failure::Guard(format!(
                "{} facets exceeds --max-facets {}",
                c.num_facets(),
                self.guards.max_facets
            )));
        }
        Ok(())
    }
}

fn load(path: &PathBuf) -> Result<ComplexFile, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    let file = parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    for w in &file.warnings {
        eprintln!("warning: {}:{}: {}", path.display(), w.line, w.message);
    }
    Ok(file)
}

fn order_arg(s: &str, c: &Complex) -> Result<LinearOrder, Failure> {
    let o = LinearOrder::new(parse_labels(s)?)?;
    if !o.is_order_on(c.ground()) {
        return Err(Failure::Usage(format!("order `{s}` is not a permutation of the ground set")));
    }
    Ok(o)
}

fn file_order(file: &ComplexFile, arg: &Option<String>) -> Result<LinearOrder, Failure> {
    match arg {
        Some(s) => order_arg(s, &file.complex),
        None => Ok(file.order.clone().unwrap_or_else(|| LinearOrder::natural(file.complex.ground()))),
    }
}

fn oracle_ok(r: Result<(), String>, what: &str) -> Result<(), Failure> {
    r.map_err(|e| Failure::Oracle(format!("oracle rejected the {what}: {e}")))
}

fn check_cert(ctx: &Ctx, c: &Complex, cert: &DecompositionCertificate, k: usize) -> Result<(), Failure> {
    if ctx.oracle {
        oracle_ok(oracle::check_decomposition(&c.facet_lists(), cert, k), "decomposition")?;
    }
    Ok(())
}

fn seq_lists(seq: &[shellcomp_core::Face]) -> Vec<Vec<u32>> {
    seq.iter().map(|f| f.to_vec()).collect()
}

fn check_seq(ctx: &Ctx, c: &Complex, seq: &[shellcomp_core::Face]) -> Result<(), Failure> {
    if ctx.oracle {
        oracle_ok(oracle::check_shelling(&c.facet_lists(), &seq_lists(seq)), "shelling")?;
    }
    Ok(())
}

fn check_shelling_cmd(ctx: &Ctx, file: &ComplexFile) -> Result<Report, Failure> {
    let c = &file.complex;
    match verify_shelling(c, &file.sequence)? {
        None => {
            check_seq(ctx, c, &file.sequence)?;
            Ok(Report::new(
                true,
                format!("valid shelling of {} facets", file.sequence.len()),
                json!({ "valid": true, "sequence": file.sequence }),
            ))
        }
        Some(fail) => Ok(Report::new(
            false,
            format!("not a shelling: {fail}"),
            json!({ "valid": false, "failure": fail }),
        )),
    }
}

fn find_shelling_cmd(ctx: &Ctx, c: &Complex) -> Result<Report, Failure> {
    ctx.guard(c)?;
    match find_shelling(c)? {
        Some(seq) => {
            check_seq(ctx, c, &seq)?;
            Ok(Report::new(
                true,
                format!("shellable\nshelling: {}", render::faces(&seq)),
                json!({ "shellable": true, "sequence": seq }),
            ))
        }
        None => {
            let w = disconnected_link(c)?;
            let mut text = "not shellable".to_string();
            if let Some((f, lk)) = &w {
                text.push_str(&format!("\nwitness: link of {f} is disconnected: {lk}"));
            }
            let witness = w.map(|(f, lk)| json!({ "face": f, "link": lk.facets() }));
            Ok(Report::new(false, text, json!({ "shellable": false, "witness": witness })))
        }
    }
}

fn decomposition_report(
    ctx: &Ctx,
    c: &Complex,
    cert: Option<DecompositionCertificate>,
    k: usize,
    what: &str,
) -> Result<Report, Failure> {
    match cert {
        Some(cert) => {
            check_cert(ctx, c, &cert, k)?;
            Ok(Report::new(
                true,
                format!("{what}\n{}", render::certificate(&cert).trim_end()),
                json!({ "holds": true, "certificate": cert }),
            ))
        }
        None => Ok(Report::new(false, format!("not {what}"), json!({ "holds": false }))),
    }
}

fn decomposing_order_cmd(ctx: &Ctx, c: &Complex, verify: &Option<String>) -> Result<Report, Failure> {
    ctx.guard(c)?;
    let (ord, trace) = match verify {
        Some(s) => {
            let ord = order_arg(s, c)?;
            let trace = decomposing_order_criterion(c, &ord)?;
            (ord, trace)
        }
        None => match find_decomposing_order(c)? {
            Some(t) => (t.order.clone(), Some(t)),
            None => {
                return Ok(Report::new(
                    false,
                    "not vertex decomposable: no decomposing order",
                    json!({ "valid": false }),
                ))
            }
        },
    };
    let cases = trace.as_ref().map(|t| t.cases());
    let trace_text = cases.as_ref().map_or("recursive criterion does not apply".to_string(), |cs| render::trace(cs));
    let trace_json: Value = cases.as_ref().map_or(Value::Null, |cs| {
        cs.iter().map(|(e, k)| json!({ "element": e, "case": render::case(*k) })).collect()
    });
    let Some(f) = smallest_missing(c, &ord)? else {
        return Ok(Report::new(
            true,
            format!("order {ord}: complex is full, nothing to add\ntrace: {trace_text}"),
            json!({ "order": ord, "valid": true, "full": true, "trace": trace_json }),
        ));
    };
    let next = c.with_facet(f)?;
    let cert = is_vertex_decomposable(&next);
    let valid = cert.is_some();
    let mut text = format!(
        "order {ord}: {}\ntrace: {trace_text}\nsmallest missing facet: {f}",
        if valid { "valid decomposing order" } else { "not a decomposing order" }
    );
    if let Some(cert) = &cert {
        check_cert(ctx, &next, cert, 0)?;
        text.push_str(&format!("\ncertificate for the complex with {f} added:\n{}", render::certificate(cert).trim_end()));
    }
    Ok(Report::new(
        valid,
        text,
        json!({
            "order": ord,
            "valid": valid,
            "trace": trace_json,
            "smallest_missing": f,
            "certificate": cert,
        }),
    ))
}

fn extend_once_cmd(ctx: &Ctx, file: &ComplexFile, order: &Option<String>) -> Result<Report, Failure> {
    let c = &file.complex;
    let ord = file_order(file, order)?;
    let (f, next) = extend_once(c, &ord)?;
    ctx.guard(&next)?;
    let cert = is_vertex_decomposable(&next);
    if let Some(cert) = &cert {
        check_cert(ctx, &next, cert, 0)?;
    }
    let mut text = format!("order {ord}: added {f}\nresult: {next}\n");
    match &cert {
        Some(cert) => text.push_str(&format!("vertex decomposable\n{}", render::certificate(cert).trim_end())),
        None => text.push_str("not vertex decomposable"),
    }
    Ok(Report::new(
        cert.is_some(),
        text,
        json!({ "order": ord, "added": f, "complex": next, "vertex_decomposable": cert.is_some(), "certificate": cert }),
    ))
}

fn complete_cmd(ctx: &Ctx, c: &Complex) -> Result<Report, Failure> {
    ctx.guard(c)?;
    let full = Complex::full(c.ground(), c.rank());
    let (prefix_len, seq, method, reorders) = if is_vertex_decomposable(c).is_some() {
        let comp = complete_to_skeleton(c)?;
        let reorders = comp.stages.iter().filter(|s| s.reorder_needed).count();
        (comp.prefix_len, comp.sequence, "decomposing orders", Some(reorders))
    } else {
        match complete_by_extension(c)? {
            Some((p, seq)) => (p, seq, "search (not vertex decomposable)", None),
            None => {
                return Ok(Report::new(false, "not shellable: no completion", json!({ "completed": false })));
            }
        }
    };
    if let Some(fail) = verify_shelling(&full, &seq)? {
        return Err(Failure::Oracle(format!("completion is not a shelling: {fail}")));
    }
    if ctx.oracle {
        oracle_ok(oracle::check_shelling(&c.facet_lists(), &seq_lists(&seq[..prefix_len])), "starting shelling")?;
        oracle_ok(oracle::check_shelling(&full.facet_lists(), &seq_lists(&seq)), "completion")?;
    }
    let mut text = format!(
        "completed by {method}: {} facets, first {prefix_len} shell the input\nshelling: {} | {}",
        seq.len(),
        render::faces(&seq[..prefix_len]),
        render::faces(&seq[prefix_len..]),
    );
    if let Some(r) = reorders {
        text.push_str(&format!("\nreorderings needed: {r}"));
    }
    Ok(Report::new(
        true,
        text,
        json!({ "completed": true, "method": method, "prefix_len": prefix_len, "sequence": seq, "reorderings": reorders }),
    ))
}

fn complement_cmd(ctx: &Ctx, c: &Complex) -> Result<Report, Failure> {
    let g = complement_graph(c)?;
    let vertices = g.vertices().to_vec();
    match chordality(&g) {
        Chordality::EliminationOrder(o) => {
            if ctx.oracle {
                oracle_ok(oracle::check_elimination_order(&vertices, &g.edges(), &o), "elimination order")?;
            }
            let order = o.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Report::new(
                true,
                format!("complement graph: {g}\nchordal, elimination order {order}\ncomplex is shellable"),
                json!({ "graph": g, "chordal": true, "elimination_order": o }),
            ))
        }
        Chordality::InducedCycle(cy) => {
            if ctx.oracle {
                oracle_ok(oracle::check_induced_cycle(&g.edges(), &cy), "induced cycle")?;
            }
            let cycle = cy.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Report::new(
                false,
                format!("complement graph: {g}\nnot chordal, induced cycle {cycle}\ncomplex is not shellable"),
                json!({ "graph": g, "chordal": false, "induced_cycle": cy }),
            ))
        }
    }
}

pub fn verify_classification(ctx: &Ctx, r: &Classification) -> Result<(), Failure> {
    if !ctx.oracle {
        return Ok(());
    }
    let c = &r.complex;
    if let Verdict::Yes(seq) = &r.shellable {
        check_seq(ctx, c, seq)?;
    }
    if let Verdict::Yes(cert) = &r.vertex_decomposable {
        check_cert(ctx, c, cert, 0)?;
    }
    for k in &r.k_decomposable {
        if let Verdict::Yes(cert) = &k.verdict {
            check_cert(ctx, c, cert, k.k)?;
        }
    }
    let bad = r.inconsistencies();
    if !bad.is_empty() {
        return Err(Failure::Oracle(format!("inconsistent classification: {}", bad.join("; "))));
    }
    Ok(())
}

fn classify_cmd(ctx: &Ctx, c: &Complex) -> Result<Report, Failure> {
    let r = classify(c, ctx.guards);
    verify_classification(ctx, &r)?;
    let mut text = format!("complex: {c}\n");
    text.push_str(&format!("shellable: {}", r.shellable.label()));
    if let Verdict::No(Some(w)) = &r.shellable {
        text.push_str(&format!(" (link of {} is disconnected: {})", w.face, render::faces(&w.link)));
    }
    text.push_str(&format!("\nextendably shellable: {}", r.extendably_shellable.label()));
    text.push_str(&format!("\nvertex decomposable: {}", r.vertex_decomposable.label()));
    for k in &r.k_decomposable {
        text.push_str(&format!("\n{}-decomposable: {}", k.k, k.verdict.label()));
        if let Verdict::Yes(DecompositionCertificate::Step { face, .. }) = &k.verdict {
            text.push_str(&format!(" (first shedding face {face})"));
        }
    }
    text.push_str(&format!("\nmatroid: {}", r.matroid.label()));
    text.push_str(&format!("\nshifted: {}", r.shifted.label()));
    let json = serde_json::to_value(&r).expect("classification serializes");
    Ok(Report::new(true, text, json))
}

fn run(cli: &Cli, ctx: &Ctx) -> Result<Report, Failure> {
    let needs_file = |f: &PathBuf| load(f);
    match &cli.cmd {
        Cmd::CheckShelling { file } => check_shelling_cmd(ctx, &needs_file(file)?),
        Cmd::FindShelling { file } => find_shelling_cmd(ctx, &needs_file(file)?.complex),
        Cmd::Extendable { file } => {
            let c = needs_file(file)?.complex;
            ctx.guard(&c)?;
            let e = is_extendably_shellable(&c)?;
            let text = if e { "extendably shellable" } else { "not extendably shellable" };
            Ok(Report::new(e, text, json!({ "extendably_shellable": e })))
        }
        Cmd::CheckVd { file } => {
            let c = needs_file(file)?.complex;
            ctx.guard(&c)?;
            decomposition_report(ctx, &c, is_vertex_decomposable(&c), 0, "vertex decomposable")
        }
        Cmd::CheckKdec { k, file } => {
            let c = needs_file(file)?.complex;
            ctx.guard(&c)?;
            decomposition_report(ctx, &c, is_k_decomposable(&c, *k), *k, &format!("{k}-decomposable"))
        }
        Cmd::CheckMatroid { file } => {
            let c = needs_file(file)?.complex;
            match exchange_violation(&c)? {
                None => Ok(Report::new(
                    true,
                    format!("matroid of rank {} with {} bases", c.rank(), c.num_facets()),
                    json!({ "matroid": true }),
                )),
                Some(w) => Ok(Report::new(false, format!("not a matroid: {w}"), json!({ "matroid": false, "witness": w }))),
            }
        }
        Cmd::CheckShifted { order, file } => {
            let f = needs_file(file)?;
            let ord = file_order(&f, order)?;
            let s = is_shifted(&f.complex, &ord)?;
            let text = format!("{} under order {ord}", if s { "shifted" } else { "not shifted" });
            Ok(Report::new(s, text, json!({ "shifted": s, "order": ord })))
        }
        Cmd::DecomposingOrder { verify, file } => decomposing_order_cmd(ctx, &needs_file(file)?.complex, verify),
        Cmd::ExtendOnce { order, file } => extend_once_cmd(ctx, &needs_file(file)?, order),
        Cmd::Complete { file } => complete_cmd(ctx, &needs_file(file)?.complex),
        Cmd::ComplementChordal { file } => complement_cmd(ctx, &needs_file(file)?.complex),
        Cmd::Classify { file } => classify_cmd(ctx, &needs_file(file)?.complex),
        Cmd::Enumerate { n, d, dedupe, report } => enumerate::run(ctx, *n, *d, *dedupe, *report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { json: cli.json, guards: Guards { max_facets: cli.max_facets }, oracle: cli.oracle };
    match run(&cli, &ctx) {
        Ok(r) => {
            let out = if ctx.json { serde_json::to_string_pretty(&r.json).expect("json") } else { r.text };
            if !out.is_empty() {
                // a closed pipe (`| head`) is not an error
                let _ = writeln!(std::io::stdout().lock(), "{out}");
            }
            if r.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("guard exceeded: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Oracle(m)) => {
            eprintln!("oracle failure: {m}");
            ExitCode::from(4)
        }
    }
}
