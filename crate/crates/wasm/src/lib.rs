//! Browser bindings. Every function returns a JSON string; failures come
//! back as `{"error": "..."}` so the page never has to catch exceptions.

use std::sync::Arc;

use conorbit::code::DEFAULT_ENUM_CAP;
use conorbit::gf::DEFAULT_FIELD_CAP;
use conorbit::report::{verify_code, Caps};
use conorbit::{build_code, Code, ConstaRing, LambdaSpec, PrimePower};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Conservative caps for a browser tab.
const WEB_ENUM_CAP: u64 = 1 << 16;
const WEB_ORBIT_CAP: u64 = 1 << 14;

fn ring(q: &str, n: u32, lambda: &str) -> conorbit::Result<Arc<ConstaRing>> {
    let q: PrimePower = q.parse()?;
    let lambda: LambdaSpec = lambda.parse()?;
    Ok(Arc::new(ConstaRing::new(q, n as u64, lambda, DEFAULT_FIELD_CAP)?))
}

fn code(q: &str, n: u32, lambda: &str, cosets: &str) -> conorbit::Result<Code> {
    let ring = ring(q, n, lambda)?;
    let sel: Vec<usize> = if cosets.trim() == "all" {
        (0..ring.table.len()).collect()
    } else {
        cosets
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| conorbit::Error::InvalidParameter(format!("bad coset index '{s}'")))
            })
            .collect::<conorbit::Result<_>>()?
    };
    build_code(&ring, &sel)
}

fn finish(v: conorbit::Result<Value>) -> String {
    let v = v.unwrap_or_else(|e| json!({ "error": e.to_string() }));
    serde_json::to_string(&v).expect("serializable")
}

#[wasm_bindgen]
pub fn cosets(q: &str, n: u32, lambda: &str) -> String {
    finish(ring(q, n, lambda).map(|r| {
        json!({
            "rn": r.rn(),
            "m": r.m(),
            "r": r.r(),
            "cosets": serde_json::to_value(&r.table.cosets).expect("serializable"),
        })
    }))
}

#[wasm_bindgen]
pub fn weights(q: &str, n: u32, lambda: &str, cosets: &str) -> String {
    finish(code(q, n, lambda, cosets).and_then(|c| {
        let w = c.enumerate_weights(WEB_ENUM_CAP.min(DEFAULT_ENUM_CAP))?;
        Ok(json!({ "dim": c.dim(), "weights": serde_json::to_value(&w).expect("serializable") }))
    }))
}

#[wasm_bindgen]
pub fn verify(q: &str, n: u32, lambda: &str, cosets: &str) -> String {
    finish(code(q, n, lambda, cosets).and_then(|c| {
        let rep = verify_code(&c, Caps { enumeration: WEB_ENUM_CAP, orbit: WEB_ORBIT_CAP })?;
        Ok(serde_json::to_value(&rep).expect("serializable"))
    }))
}
