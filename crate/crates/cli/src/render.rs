//! JSON, CSV and plain-text renderings of command results.

use std::fmt::Write as _;

use conorbit::catalog::{CatalogRow, Grid};
use conorbit::gf::Sym;
use conorbit::report::BoundReport;
use conorbit::{Code, ConstaRing, OrbitReport, WeightDist};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One result in all three shapes.
pub struct Doc {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    text: String,
}

impl Doc {
    pub fn render(&self, f: Format) -> anyhow::Result<String> {
        Ok(match f {
            Format::Json => {
                // Round-tripping through Value sorts keys, so re-serializing
                // a parsed report reproduces it exactly.
                let mut s = serde_json::to_string_pretty(&self.json)?;
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                String::from_utf8(w.into_inner()?)?
            }
            Format::Text => self.text.clone(),
        })
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Symbols of a prime field print as integers; otherwise 0 is zero and
/// `1+e` stands for `xi^e`.
fn sym_value(ring: &ConstaRing, s: Sym) -> u64 {
    if ring.q.e == 1 {
        ring.field.encode(ring.base.to_field(s)) as u64
    } else {
        s as u64
    }
}

fn sym_label(ring: &ConstaRing, s: Sym) -> String {
    match (ring.q.e, s) {
        (1, _) => sym_value(ring, s).to_string(),
        (_, 0) => "0".into(),
        (_, 1) => "1".into(),
        (_, s) => format!("xi^{}", s - 1),
    }
}

fn symbol_encoding(ring: &ConstaRing) -> &'static str {
    if ring.q.e == 1 {
        "integer"
    } else {
        "xi-log: 0 is zero, 1+e is xi^e"
    }
}

fn params(ring: &ConstaRing) -> Value {
    json!({
        "q": ring.qq(),
        "n": ring.n,
        "lambda": ring.lambda_spec.to_string(),
        "r": ring.r(),
        "rn": ring.rn(),
        "m": ring.m(),
    })
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn cosets(ring: &ConstaRing) -> Doc {
    let mut text = format!("rn = {}, m = {}, {} cosets\n", ring.rn(), ring.m(), ring.table.len());
    let mut rows = Vec::new();
    for (i, c) in ring.table.cosets.iter().enumerate() {
        let _ = writeln!(text, "Gamma_{i} = {{{}}}", join(&c.elements, ","));
        rows.push(vec![
            i.to_string(),
            c.rep.to_string(),
            c.a.to_string(),
            c.k.to_string(),
            join(&c.elements, " "),
        ]);
    }
    let list: Vec<Value> = ring
        .table
        .cosets
        .iter()
        .enumerate()
        .map(|(i, c)| json!({"index": i, "rep": c.rep, "a": c.a, "k": c.k, "elements": c.elements}))
        .collect();
    Doc {
        json: json!({"params": params(ring), "cosets": list}),
        header: vec!["index", "rep", "a", "k", "elements"],
        rows,
        text,
    }
}

pub fn code(code: &Code) -> Doc {
    let ring = code.ring();
    let g: Vec<u64> = code.genpoly().iter().map(|&s| sym_value(ring, s)).collect();
    let matrix: Vec<Vec<u64>> =
        code.genmatrix().iter().map(|r| r.iter().map(|&s| sym_value(ring, s)).collect()).collect();
    let mut text = format!(
        "[{}, {}] code over F_{}, cosets {:?}\ng(x) coefficients (low to high): {}\n",
        code.len(),
        code.dim(),
        ring.qq(),
        code.selected(),
        join(&code.genpoly().iter().map(|&s| sym_label(ring, s)).collect::<Vec<_>>(), " ")
    );
    for r in code.genmatrix() {
        let _ = writeln!(text, "{}", join(&r.iter().map(|&s| sym_label(ring, s)).collect::<Vec<_>>(), " "));
    }
    let rows = matrix.iter().enumerate().map(|(i, r)| vec![i.to_string(), join(r, " ")]).collect();
    Doc {
        json: json!({
            "params": params(ring),
            "cosets": code.selected(),
            "dim": code.dim(),
            "symbols": symbol_encoding(ring),
            "genpoly": g,
            "genmatrix": matrix,
        }),
        header: vec!["row", "entries"],
        rows,
        text,
    }
}

pub fn weights(code: &Code, w: &WeightDist) -> Doc {
    let rows = (0..w.counts.len())
        .filter(|&i| w.counts[i] > 0)
        .map(|i| vec![i.to_string(), w.counts[i].to_string()])
        .collect();
    Doc {
        json: json!({
            "params": params(code.ring()),
            "cosets": code.selected(),
            "dim": code.dim(),
            "weights": to_json(w),
        }),
        header: vec!["weight", "count"],
        rows,
        text: format!("{}\nell = {}\n", w.enumerator(), w.ell()),
    }
}

pub fn orbits(code: &Code, reports: &[OrbitReport]) -> Doc {
    let mut rows = Vec::new();
    let mut text = String::new();
    for r in reports {
        let _ = writeln!(
            text,
            "{}: {} orbits (Burnside {}), {} group elements",
            r.group, r.orbit_count, r.burnside_count, r.order
        );
        for c in &r.weight_classes {
            rows.push(vec![
                r.group.to_string(),
                c.weight.to_string(),
                c.codewords.to_string(),
                c.orbit_count_within.to_string(),
            ]);
            let _ = writeln!(text, "  weight {}: {} words in {} orbits", c.weight, c.codewords, c.orbit_count_within);
        }
    }
    Doc {
        json: json!({
            "params": params(code.ring()),
            "cosets": code.selected(),
            "orbits": to_json(&reports),
        }),
        header: vec!["group", "weight", "codewords", "orbits"],
        rows,
        text,
    }
}

pub fn bound_report(rep: &BoundReport) -> Doc {
    let mut text = String::new();
    let p = &rep.params;
    let _ = writeln!(text, "q = {}, n = {}, lambda = {}, r = {}, m = {}, dim = {}", p.q, p.n, p.lambda, p.r, p.m, p.dim);
    if let Some(w) = &rep.weights {
        let _ = writeln!(text, "weights: {} (ell = {})", w.enumerator(), w.ell());
    }
    for (g, c) in &rep.oracle {
        let _ = writeln!(text, "oracle {g}: {c}");
    }
    let mut rows = Vec::new();
    for m in &rep.methods {
        let v = m.value.as_ref().map(|v| v.to_string()).unwrap_or_default();
        let role = to_json(&m.role).as_str().unwrap_or_default().to_string();
        if m.applicable {
            let _ = writeln!(text, "{} [{role}] = {}", m.name, if v.is_empty() { &m.reason } else { &v });
        }
        rows.push(vec!["method".into(), m.name.clone(), role, m.applicable.to_string(), v]);
    }
    for v in &rep.verdicts {
        let _ = writeln!(
            text,
            "{} {}",
            match (v.pass, v.required) {
                (true, _) => "ok  ",
                (false, true) => "FAIL",
                (false, false) => "note",
            },
            v.check
        );
        rows.push(vec!["verdict".into(), v.check.clone(), v.required.to_string(), v.pass.to_string(), String::new()]);
    }
    for q in &rep.open_questions {
        let _ = writeln!(text, "open: {q}");
    }
    Doc {
        json: to_json(rep),
        header: vec!["kind", "name", "detail", "flag", "value"],
        rows,
        text,
    }
}

/// Catalog columns as stored on disk.
#[derive(Debug, Serialize, Deserialize)]
pub struct CatalogCsv {
    q: u64,
    n: u64,
    lambda: String,
    cosets: String,
    dim: u64,
    ell: Option<u64>,
    best_bound: Option<u64>,
    method: String,
    tight: bool,
}

impl From<CatalogCsv> for CatalogRow {
    fn from(c: CatalogCsv) -> Self {
        CatalogRow {
            q: c.q,
            n: c.n,
            lambda: c.lambda,
            cosets: c.cosets,
            dim: c.dim,
            ell: c.ell,
            best_bound: c.best_bound,
            method: c.method,
            tight: c.tight,
        }
    }
}

pub fn catalog(rows: &[CatalogRow]) -> Doc {
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut text = String::new();
    for r in rows {
        let _ = writeln!(
            text,
            "q={} n={} lambda={} coset {} dim={} ell={} bound={} ({}){}",
            r.q,
            r.n,
            r.lambda,
            r.cosets,
            r.dim,
            r.ell.map_or("?".into(), |v| v.to_string()),
            opt(r.best_bound),
            r.method,
            if r.tight { " tight" } else { "" }
        );
    }
    Doc {
        json: json!({"rows": to_json(&rows)}),
        header: vec!["q", "n", "lambda", "cosets", "dim", "ell", "best_bound", "method", "tight"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.q.to_string(),
                    r.n.to_string(),
                    r.lambda.clone(),
                    r.cosets.clone(),
                    r.dim.to_string(),
                    opt(r.ell),
                    opt(r.best_bound),
                    r.method.clone(),
                    r.tight.to_string(),
                ]
            })
            .collect(),
        text,
    }
}

/// Run metadata written next to the catalog.
pub fn sidecar(grid: &Grid, caps: &(u64, u64), rows: usize, warnings: &[String]) -> String {
    let v = json!({
        "tool": "conorbit",
        "version": env!("CARGO_PKG_VERSION"),
        "caps": {"field": caps.0, "enumeration": caps.1},
        "grid": {
            "q": grid.qs,
            "n_min": grid.n_min,
            "n_max": grid.n_max,
            "orders": grid.orders,
        },
        "rows": rows,
        "warnings": warnings,
    });
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}
