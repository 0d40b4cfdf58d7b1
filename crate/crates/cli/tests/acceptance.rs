//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Worked examples go through the `shellcomp` binary; the
//! sweeps call the library and replay every certificate through the
//! brute-force checkers in `shellcomp_core::oracle`.

use std::path::PathBuf;
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use shellcomp_core::chordal::{chordality, Chordality};
use shellcomp_core::completion::decomposing_order_certificate;
use shellcomp_core::decompose::shedding_by_adjacency;
use shellcomp_core::face::k_subsets;
use shellcomp_core::oracle;
use shellcomp_core::{
    complement_graph, complete_to_skeleton, cone, extend_full_minus_vertex, find_shelling, is_basis_first_order,
    is_decomposing_order, is_extendably_shellable, is_k_decomposable, is_matroid, is_shedding_order,
    is_shedding_vertex, is_shifted, is_vertex_decomposable, smallest_missing, uniform_matroid, verify_partial,
    verify_shelling, Complex, Decomposer, Face, GroundSet, LinearOrder, Matroid, PureEnumeration,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

// Certificates replayed by the oracle, and disagreements, across all suites.
static REPLAYED: AtomicUsize = AtomicUsize::new(0);
static DISAGREED: AtomicUsize = AtomicUsize::new(0);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn replay(r: Result<(), String>, what: &str) -> Result<(), String> {
    REPLAYED.fetch_add(1, Ordering::Relaxed);
    r.map_err(|e| {
        DISAGREED.fetch_add(1, Ordering::Relaxed);
        format!("oracle rejected {what}: {e}")
    })
}

fn face(s: &str) -> Face {
    Face::from_labels(s.chars().map(|c| c.to_digit(10).unwrap())).unwrap()
}

fn cx(n: usize, facets: &[&str]) -> Complex {
    Complex::new(GroundSet::range(n).unwrap(), facets.iter().map(|f| face(f))).unwrap()
}

fn seq_lists(seq: &[Face]) -> Vec<Vec<u32>> {
    seq.iter().map(|f| f.to_vec()).collect()
}

fn all_pure(n: usize) -> Vec<Complex> {
    (0..n).flat_map(|d| PureEnumeration::new(n, d, false).unwrap().complexes().collect::<Vec<_>>()).collect()
}

fn all_pure_upto(max_n: usize) -> Vec<Complex> {
    (1..=max_n).flat_map(all_pure).collect()
}

fn all_faces(c: &Complex) -> Vec<Face> {
    let mut out: Vec<Face> = c
        .facets()
        .iter()
        .flat_map(|f| {
            let ls = f.to_vec();
            (0u32..1 << ls.len())
                .map(move |m| Face::from_labels((0..ls.len()).filter(|i| m >> i & 1 == 1).map(|i| ls[i])).unwrap())
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn missing(c: &Complex) -> Vec<Face> {
    k_subsets(c.ground(), c.rank()).filter(|f| !c.has_facet(*f)).collect()
}

fn orders(c: &Complex) -> impl Iterator<Item = LinearOrder> {
    let labels: Vec<u32> = c.ground().labels().collect();
    let n = labels.len();
    labels.into_iter().permutations(n).map(|p| LinearOrder::new(p).unwrap())
}

fn shellable(c: &Complex) -> bool {
    find_shelling(c).unwrap().is_some()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

struct Run {
    code: i32,
    stdout: String,
}

fn shellcomp(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_shellcomp")).args(args).output().expect("run shellcomp");
    Run { code: out.status.code().unwrap_or(-1), stdout: String::from_utf8_lossy(&out.stdout).into_owned() }
}

fn has_line(out: &str, line: &str) -> bool {
    out.lines().any(|l| l.trim_end() == line)
}

fn criterion_1() -> Outcome {
    let f = fixture("delta7.scx");
    let r = shellcomp(&["--oracle", "decomposing-order", "--verify", "1 2 3 4 5 6 7", f.to_str().unwrap()]);
    ensure!(r.code == 0, "exit code {}:\n{}", r.code, r.stdout);
    ensure!(has_line(&r.stdout, "order 1 2 3 4 5 6 7: valid decomposing order"), "verdict line:\n{}", r.stdout);
    ensure!(has_line(&r.stdout, "trace: 7:deletion 6:link 5:deletion 4:link base"), "trace:\n{}", r.stdout);
    ensure!(has_line(&r.stdout, "smallest missing facet: 1346"), "missing facet:\n{}", r.stdout);
    ensure!(has_line(&r.stdout, "certificate for the complex with 1346 added:"), "certificate:\n{}", r.stdout);

    // the JSON certificate replays independently
    let r = shellcomp(&["--json", "decomposing-order", "--verify", "1 2 3 4 5 6 7", f.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).map_err(|e| e.to_string())?;
    ensure!(v["smallest_missing"] == serde_json::json!([1, 3, 4, 6]), "json missing facet {}", v["smallest_missing"]);
    let cases: Vec<String> =
        v["trace"].as_array().unwrap().iter().map(|s| s["case"].as_str().unwrap().to_string()).collect();
    ensure!(cases == ["deletion", "link", "deletion", "link", "base"], "json trace {cases:?}");
    let delta7 = shellcomp_core::parse(&std::fs::read_to_string(&f).unwrap()).unwrap().complex;
    let next = delta7.with_facet(face("1346")).unwrap();
    let cert = is_vertex_decomposable(&next).ok_or("no certificate for the extension")?;
    replay(oracle::check_decomposition(&next.facet_lists(), &cert, 0), "certificate of Δ7 + 1346")?;
    Ok("trace 7:deletion 6:link 5:deletion 4:link base, adds 1346".into())
}

fn criterion_2() -> Outcome {
    let r = shellcomp(&["--oracle", "extend-once", fixture("m4.scx").to_str().unwrap()]);
    ensure!(r.code == 0, "extend-once exit code {}:\n{}", r.code, r.stdout);
    ensure!(has_line(&r.stdout, "order 1 2 3 4 5 6: added 1235"), "added facet:\n{}", r.stdout);
    ensure!(has_line(&r.stdout, "vertex decomposable"), "verdict:\n{}", r.stdout);

    let m9 = fixture("m9.scx");
    let r = shellcomp(&["find-shelling", m9.to_str().unwrap()]);
    ensure!(r.code == 1, "find-shelling exit code {}:\n{}", r.code, r.stdout);
    ensure!(has_line(&r.stdout, "not shellable"), "verdict:\n{}", r.stdout);
    ensure!(has_line(&r.stdout, "witness: link of 56 is disconnected: {12, 34}"), "witness:\n{}", r.stdout);
    let r = shellcomp(&["--json", "classify", m9.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).map_err(|e| e.to_string())?;
    ensure!(v["shellable"]["status"] == "no", "classify shellable {}", v["shellable"]);
    ensure!(v["shellable"]["detail"]["face"] == serde_json::json!([5, 6]), "classify witness {}", v["shellable"]);
    ensure!(
        v["shellable"]["detail"]["link"] == serde_json::json!([[1, 2], [3, 4]]),
        "classify link {}",
        v["shellable"]
    );
    let c = cx(6, &["1234", "1345", "2346", "3456", "1235", "1245", "1236", "1246", "1256"]);
    ensure!(!oracle::naive_shellable(&c.facet_lists()), "oracle finds a shelling");
    Ok("adds 1235 (VD); extension not shellable, link(56) = {12, 34}".into())
}

fn criterion_3() -> Outcome {
    let gamma = cx(6, &["1234", "1235", "1245", "1345", "2345", "1346", "1456", "2456", "3456"]);
    let natural = LinearOrder::natural(gamma.ground());
    ensure!(is_shedding_order(&gamma, &natural).unwrap(), "1..6 is not a shedding order");
    // each successive deletion's vertex passes the shedding test
    let mut cur = gamma.clone();
    for v in (1..=6u32).rev() {
        if cur.is_simplex() {
            break;
        }
        if cur.vertices().contains(v) && !cur.facets().iter().all(|f| f.contains(v)) {
            ensure!(is_shedding_vertex(&cur, v).unwrap(), "{v} does not shed {cur}");
        }
        cur = cur.deletion(Face::singleton(v).unwrap()).unwrap();
    }
    ensure!(!is_decomposing_order(&gamma, &natural).unwrap(), "1..6 is decomposing");
    let other = LinearOrder::new(vec![5, 4, 3, 2, 1, 6]).unwrap();
    ensure!(is_decomposing_order(&gamma, &other).unwrap(), "5 4 3 2 1 6 is not decomposing");
    let (f, cert) = decomposing_order_certificate(&gamma, &other, &mut Decomposer::vertex()).unwrap();
    let next = gamma.with_facet(f).unwrap();
    replay(oracle::check_decomposition(&next.facet_lists(), &cert.unwrap(), 0), "certificate for Γ under 543216")?;
    let natural_next = gamma.with_facet(smallest_missing(&gamma, &natural).unwrap().unwrap()).unwrap();
    ensure!(!oracle::naive_k_decomposable(&natural_next.facet_lists(), 0), "oracle decomposes Γ plus the natural-order facet");
    Ok("1..6 shedding but not decomposing; 5 4 3 2 1 6 decomposing".into())
}

fn criterion_4() -> Outcome {
    let c = cx(6, &["123", "124", "125", "134", "136", "245", "256", "346", "356", "456"]);
    ensure!(is_vertex_decomposable(&c).is_none(), "V6F10-6 is vertex decomposable");
    ensure!(!oracle::naive_k_decomposable(&c.facet_lists(), 0), "oracle finds a vertex decomposition");
    let cert = is_k_decomposable(&c, 1).ok_or("not 1-decomposable")?;
    ensure!(cert.root_face() == Some(face("15")), "root shedding face {:?}", cert.root_face());
    replay(oracle::check_decomposition(&c.facet_lists(), &cert, 1), "1-decomposition")?;
    let seq = find_shelling(&c).unwrap().ok_or("no shelling")?;
    replay(oracle::check_shelling(&c.facet_lists(), &seq_lists(&seq)), "shelling of V6F10-6")?;
    Ok("not VD; 1-decomposable with root {1,5}; shellable".into())
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for n in [4, 5] {
        for c in PureEnumeration::new(n, n - 3, false).unwrap().complexes() {
            let l = c.facet_lists();
            let seq = find_shelling(&c).unwrap();
            let sh = seq.is_some();
            let vd = is_vertex_decomposable(&c);
            let ext = is_extendably_shellable(&c).unwrap();
            let g = complement_graph(&c).unwrap();
            let chordal = match chordality(&g) {
                Chordality::EliminationOrder(o) => {
                    replay(oracle::check_elimination_order(&g.vertices().to_vec(), &g.edges(), &o), "elimination order")?;
                    true
                }
                Chordality::InducedCycle(cy) => {
                    replay(oracle::check_induced_cycle(&g.edges(), &cy), "induced cycle")?;
                    false
                }
            };
            ensure!(sh == vd.is_some() && sh == ext && sh == chordal, "{c}: sh {sh} vd {} ext {ext} chordal {chordal}", vd.is_some());
            ensure!(sh == oracle::naive_shellable(&l), "{c}: oracle shellability differs");
            if let Some(seq) = seq {
                replay(oracle::check_shelling(&l, &seq_lists(&seq)), "shelling")?;
            }
            if let Some(cert) = vd {
                replay(oracle::check_decomposition(&l, &cert, 0), "vertex decomposition")?;
            }
            count += 1;
        }
    }
    ensure!(count == 63 + 1023, "{count} complexes");
    Ok(format!("{count} complexes, 0 discrepancies"))
}

/// Returns whether some stage needed a new decomposing order.
fn check_completion(c: &Complex) -> Result<bool, String> {
    let comp = complete_to_skeleton(c).map_err(|e| format!("{c}: {e}"))?;
    let prefix = &comp.sequence[..comp.prefix_len];
    ensure!(comp.prefix_len == c.num_facets(), "{c}: prefix of {} facets", comp.prefix_len);
    ensure!(verify_shelling(c, prefix).unwrap().is_none(), "{c}: prefix is not a shelling");
    let full = Complex::full(c.ground(), c.rank());
    ensure!(verify_shelling(&full, &comp.sequence).unwrap().is_none(), "{c}: completion is not a shelling");
    replay(oracle::check_shelling(&c.facet_lists(), &seq_lists(prefix)), "prefix")?;
    replay(oracle::check_shelling(&full.facet_lists(), &seq_lists(&comp.sequence)), "completion")?;
    Ok(comp.stages.iter().any(|s| s.reorder_needed))
}

fn criterion_6() -> Outcome {
    let (mut done, mut reordered) = (0, 0);
    for c in all_pure_upto(5).into_iter().filter(|c| is_vertex_decomposable(c).is_some()) {
        reordered += check_completion(&c)? as usize;
        done += 1;
    }
    check_completion(&cx(7, &["1234", "1235", "1245", "1345", "2345", "1236", "1246", "1256", "2356", "1237", "2347"]))?;
    Ok(format!("{} completions verified, {reordered} needed a new order mid-way", done + 1))
}

fn criterion_7() -> Outcome {
    let mut matroids: Vec<Complex> = all_pure_upto(5).into_iter().filter(is_matroid).collect();
    let filtered = matroids.len();
    for n in 1..=5 {
        for r in 1..=n {
            matroids.push(uniform_matroid(n, r).unwrap().into_complex());
        }
    }
    for m in all_pure_upto(4).into_iter().filter(is_matroid) {
        let apex = m.ground().len() as u32 + 1;
        let c = cone(&m, apex).unwrap();
        ensure!(is_matroid(&c), "cone over {m} is not a matroid");
        matroids.push(c);
    }
    let mut checked = 0;
    for c in &matroids {
        if c.is_full() {
            continue;
        }
        let m = Matroid::new(c.clone()).map_err(|e| e.to_string())?;
        let mut dec = Decomposer::vertex();
        for ord in orders(c) {
            if !is_basis_first_order(&m, &ord).unwrap() {
                continue;
            }
            let (f, cert) = decomposing_order_certificate(c, &ord, &mut dec).unwrap();
            let cert = cert.ok_or_else(|| format!("{c}: order {ord} is not decomposing"))?;
            replay(oracle::check_decomposition(&c.with_facet(f).unwrap().facet_lists(), &cert, 0), "extension")?;
            checked += 1;
        }
    }
    Ok(format!("{} matroids ({filtered} by filter), {checked} basis-first orders decomposing", matroids.len()))
}

fn criterion_8() -> Outcome {
    let all = all_pure_upto(5);

    let mut links = 0;
    for c in all.iter().filter(|c| c.num_facets() <= 8 && shellable(c)) {
        for f in all_faces(c) {
            let lk = c.link(f).unwrap();
            ensure!(shellable(&lk) && oracle::naive_shellable(&lk.facet_lists()), "link of {f} in {c}");
            links += 1;
        }
    }

    let mut shed = 0;
    for c in &all {
        for v in c.vertices().labels() {
            ensure!(
                is_shedding_vertex(c, v).unwrap() == shedding_by_adjacency(c, v).unwrap(),
                "{c}: shedding tests disagree at {v}"
            );
            shed += 1;
        }
    }

    let mut pairs = 0;
    for c in all.iter().filter(|c| shellable(c)) {
        let shellings: Vec<Vec<Face>> = if c.num_facets() <= 6 {
            c.facets().iter().copied().permutations(c.num_facets()).filter(|p| verify_partial(p).is_none()).collect()
        } else {
            vec![find_shelling(c).unwrap().unwrap()]
        };
        for f in missing(c) {
            let bigger = c.with_facet(f).unwrap();
            if !shellable(&bigger) {
                continue;
            }
            for s in &shellings {
                let mut t = s.clone();
                t.push(f);
                ensure!(verify_shelling(&bigger, &t).unwrap().is_none(), "{c} + {f} after {s:?}");
            }
            pairs += 1;
        }
    }

    let mut shifted = 0;
    for c in &all {
        let ord = LinearOrder::natural(c.ground());
        if c.is_full() || !is_shifted(c, &ord).unwrap() {
            continue;
        }
        let f = smallest_missing(c, &ord).unwrap().unwrap();
        ensure!(is_shifted(&c.with_facet(f).unwrap(), &ord).unwrap(), "{c} + {f} is not shifted");
        shifted += 1;
    }

    let mut ext = 0;
    for c in all_pure(4).into_iter().filter(|c| c.rank() == 3) {
        let Ok(m) = Matroid::new(c.clone()) else { continue };
        for v in c.vertices().labels() {
            if !c.is_full_over(c.ground().without(Face::singleton(v).unwrap())) {
                continue;
            }
            for f in missing(&c).into_iter().filter(|f| f.contains(v)) {
                let e = extend_full_minus_vertex(&m, v, f).map_err(|e| format!("{c} {v} {f}: {e}"))?;
                ensure!(is_matroid(e.complex()), "{c} + {f} is not a matroid");
                ext += 1;
            }
        }
    }
    ensure!(ext > 0, "no qualifying matroid extensions");
    Ok(format!("{links} links, {shed} vertices, {pairs} append pairs, {shifted} shifted, {ext} extensions"))
}

fn criterion_9() -> Outcome {
    let mut runs = 0;
    let f = |n: &str| fixture(n).to_str().unwrap().to_string();
    let cases: Vec<(Vec<String>, i32)> = vec![
        (vec!["find-shelling".into(), f("delta7.scx")], 0),
        (vec!["find-shelling".into(), f("v6f10.scx")], 0),
        (vec!["check-vd".into(), f("delta7.scx")], 0),
        (vec!["check-kdec".into(), "--k".into(), "1".into(), f("v6f10.scx")], 0),
        (vec!["complement-chordal".into(), f("m4.scx")], 0),
        (vec!["complement-chordal".into(), f("m9.scx")], 1),
        (vec!["complete".into(), f("delta7.scx")], 0),
        (vec!["complete".into(), f("v6f10.scx")], 0),
        (vec!["classify".into(), f("gamma.scx")], 0),
        (vec!["classify".into(), f("v6f10.scx")], 0),
        (vec!["enumerate".into(), "--n".into(), "5".into(), "--d".into(), "2".into(), "--report".into()], 0),
        (vec!["enumerate".into(), "--n".into(), "4".into(), "--d".into(), "1".into(), "--report".into()], 0),
        (vec!["enumerate".into(), "--n".into(), "5".into(), "--d".into(), "1".into(), "--report".into()], 0),
    ];
    for (args, want) in cases {
        let mut full = vec!["--oracle"];
        full.extend(args.iter().map(String::as_str));
        let r = shellcomp(&full);
        ensure!(r.code == want, "`shellcomp {}` exited {} (want {want})", full.join(" "), r.code);
        runs += 1;
    }
    let replayed = REPLAYED.load(Ordering::Relaxed);
    let disagreed = DISAGREED.load(Ordering::Relaxed);
    ensure!(disagreed == 0, "{disagreed} of {replayed} certificates rejected");
    ensure!(replayed > 1000, "only {replayed} certificates replayed");
    Ok(format!("{runs} --oracle runs agree; {replayed} library certificates replayed, 0 rejected"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example: decomposing order of Δ7", criterion_1, Duration::from_secs(1)),
        ("worked example: extension and non-shellable witness", criterion_2, Duration::from_secs(5)),
        ("shedding order vs decomposing order", criterion_3, Duration::from_secs(5)),
        ("V6F10-6 is 1-decomposable, not VD", criterion_4, Duration::from_secs(10)),
        ("codimension-two equivalence sweep", criterion_5, Duration::from_secs(120)),
        ("completions of VD complexes", criterion_6, Duration::from_secs(600)),
        ("basis-first orders of matroids", criterion_7, Duration::from_secs(600)),
        ("lemma-level property suites", criterion_8, Duration::from_secs(600)),
        ("oracle independence", criterion_9, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > *limit => Err(format!("took {took:.2?}, limit {limit:.0?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
