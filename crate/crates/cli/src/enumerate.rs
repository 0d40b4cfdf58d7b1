use rayon::prelude::*;
use serde_json::{json, Value};
use shellcomp_core::{classify, Classification, PureEnumeration, Verdict};

use crate::{verify_classification, Ctx, Failure, Report};

fn facet_field(c: &shellcomp_core::Complex) -> String {
    crate::render::faces(c.facets())
}

fn verdict_field<C, W>(v: &Verdict<C, W>) -> &'static str {
    v.label()
}

pub fn run(ctx: &Ctx, n: usize, d: usize, dedupe: bool, report: bool) -> Result<Report, Failure> {
    let e = PureEnumeration::new(n, d, dedupe)?;
    let masks: Vec<u32> = e.masks().collect();
    if !report {
        if ctx.json {
            let all: Vec<Value> = masks.iter().map(|&m| json!(e.complex(m).facets())).collect();
            return Ok(Report::new(true, String::new(), json!({ "n": n, "d": d, "count": all.len(), "complexes": all })));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        write(&mut w, ["index", "facets"].map(String::from))?;
        for (i, &m) in masks.iter().enumerate() {
            write(&mut w, [i.to_string(), facet_field(&e.complex(m))])?;
        }
        return finish(w, json!(null));
    }

    // par_iter keeps the input order in collect
    let rows: Vec<Classification> = masks.par_iter().map(|&m| classify(&e.complex(m), ctx.guards)).collect();
    for r in &rows {
        verify_classification(ctx, r)?;
    }
    if ctx.json {
        let v = serde_json::to_value(&rows).expect("classifications serialize");
        return Ok(Report::new(true, String::new(), v));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> =
        ["index", "facets", "num_facets", "num_vertices", "shellable", "extendable", "vd"].map(String::from).to_vec();
    header.extend((1..=d).map(|k| format!("kdec{k}")));
    header.extend(["matroid", "shifted"].map(String::from));
    write(&mut w, header)?;
    for (i, r) in rows.iter().enumerate() {
        let mut row = vec![
            i.to_string(),
            facet_field(&r.complex),
            r.complex.num_facets().to_string(),
            r.num_vertices.to_string(),
            verdict_field(&r.shellable).to_string(),
            verdict_field(&r.extendably_shellable).to_string(),
            verdict_field(&r.vertex_decomposable).to_string(),
        ];
        row.extend(r.k_decomposable.iter().map(|k| verdict_field(&k.verdict).to_string()));
        row.push(verdict_field(&r.matroid).to_string());
        row.push(verdict_field(&r.shifted).to_string());
        write(&mut w, row)?;
    }
    finish(w, json!(null))
}

fn write<I: IntoIterator<Item = String>>(w: &mut csv::Writer<Vec<u8>>, row: I) -> Result<(), Failure> {
    w.write_record(row).map_err(|e| Failure::Usage(e.to_string()))
}

fn finish(w: csv::Writer<Vec<u8>>, json: Value) -> Result<Report, Failure> {
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    let text = String::from_utf8(bytes).expect("csv is utf-8");
    Ok(Report::new(true, text.trim_end().to_string(), json))
}
