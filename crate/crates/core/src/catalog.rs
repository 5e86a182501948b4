//! Grid search for irreducible few-weight codes.

use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundInputs, CosetData};
use crate::code::{build_code, ConstaRing, LambdaSpec};
use crate::error::Result;
use crate::gf::PrimePower;
use crate::modring::{cyclotomic_cosets, divisors};
use crate::report::{evaluate_methods, Role};
use crate::{bounds, Error};

/// Fields, lengths and constant orders to sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub qs: Vec<u64>,
    pub n_min: u64,
    pub n_max: u64,
    /// Orders of `lambda`; `None` means every divisor of `q - 1`.
    pub orders: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub q: u64,
    pub n: u64,
    pub lambda: String,
    /// Coset representatives, space separated.
    pub cosets: String,
    pub dim: u64,
    pub ell: Option<u64>,
    pub best_bound: Option<u64>,
    pub method: String,
    pub tight: bool,
}

impl CatalogRow {
    /// Sort and deduplication key.
    pub fn key(&self) -> (u64, u64, u64, String, Vec<u64>) {
        let r = self
            .lambda
            .parse::<LambdaSpec>()
            .ok()
            .zip(PrimePower::from_q(self.q).ok())
            .and_then(|(l, q)| l.order(q).ok())
            .unwrap_or(0);
        let reps = self.cosets.split_whitespace().filter_map(|c| c.parse().ok()).collect();
        (self.q, self.n, r, self.lambda.clone(), reps)
    }
}

/// The lambda used for order `r`: `1`, `-1`, or `xi^{(q-1)/r}`.
pub fn lambda_for_order(q: u64, r: u64) -> LambdaSpec {
    match r {
        1 => LambdaSpec::Int(1),
        2 => LambdaSpec::Int(-1),
        _ => LambdaSpec::XiPow((q - 1) / r),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub rows: Vec<CatalogRow>,
    pub warnings: Vec<String>,
}

fn instances(grid: &Grid) -> Vec<(PrimePower, u64, u64)> {
    let mut out = Vec::new();
    for &q in &grid.qs {
        let Ok(pq) = PrimePower::from_q(q) else { continue };
        let rs = match &grid.orders {
            Some(rs) => rs.iter().copied().filter(|r| *r > 0 && (q - 1) % r == 0).collect(),
            None => divisors(q - 1),
        };
        for n in grid.n_min.max(1)..=grid.n_max {
            if num_integer::gcd(n, q) != 1 {
                continue;
            }
            for &r in &rs {
                out.push((pq, n, r));
            }
        }
    }
    out
}

fn search_one(q: PrimePower, n: u64, r: u64, field_cap: u64, enum_cap: u64) -> SearchOutcome {
    let mut res = SearchOutcome::default();
    let qq = q.q as u64;
    let Ok(table) = cyclotomic_cosets(qq, r, n) else { return res };
    let hits: Vec<usize> = table
        .cosets
        .iter()
        .enumerate()
        .filter(|(t, c)| {
            let cd = CosetData { index: *t, rep: c.rep, a: c.a, k: c.k, elements: Vec::new() };
            bounds::two_weight_condition(q.p as u64, q.e, r, n, &cd).applicable
                || bounds::three_weight_condition(q.p as u64, q.e, r, n, &cd).applicable
        })
        .map(|(t, _)| t)
        .collect();
    if hits.is_empty() {
        return res;
    }
    let lambda = lambda_for_order(qq, r);
    let ring = match ConstaRing::new(q, n, lambda, field_cap) {
        Ok(r) => Arc::new(r),
        Err(e) => {
            res.warnings.push(format!("q={qq} n={n} lambda={lambda}: {e}"));
            return res;
        }
    };
    for t in hits {
        match catalog_row(&ring, t, enum_cap) {
            Ok((row, warn)) => {
                res.rows.push(row);
                res.warnings.extend(warn);
            }
            Err(e) => res.warnings.push(format!("q={qq} n={n} lambda={lambda} coset {t}: {e}")),
        }
    }
    res
}

/// Row for the irreducible code of coset `t`; the weight count is left empty
/// when the code is larger than `enum_cap`.
pub fn catalog_row(ring: &Arc<ConstaRing>, t: usize, enum_cap: u64) -> Result<(CatalogRow, Option<String>)> {
    let inp = BoundInputs::from_ring(ring, &[t])?;
    let methods = evaluate_methods(ring, &inp);
    let best = methods
        .iter()
        .filter(|m| matches!(m.role, Role::Exact | Role::Bound | Role::Guarantee))
        .filter_map(|m| {
            use num_traits::ToPrimitive;
            m.value.as_ref().and_then(|v| v.to_u64()).map(|v| (v, m.name.clone()))
        })
        .min();
    let code = build_code(ring, &[t])?;
    let mut warning = None;
    let ell = match code.enumerate_weights(enum_cap) {
        Ok(w) => Some(w.ell() as u64),
        Err(e @ Error::CapExceeded { .. }) => {
            warning = Some(format!("q={} n={} coset {t}: {e}", ring.qq(), ring.n));
            None
        }
        Err(e) => return Err(e),
    };
    let (best_bound, method) = match best {
        Some((v, name)) => (Some(v), name),
        None => (None, String::new()),
    };
    let c = &ring.table.cosets[t];
    let row = CatalogRow {
        q: ring.qq(),
        n: ring.n,
        lambda: ring.lambda_spec.to_string(),
        cosets: c.rep.to_string(),
        dim: c.k,
        ell,
        best_bound,
        method,
        tight: ell.is_some() && ell == best_bound,
    };
    Ok((row, warning))
}

/// Runs the grid. Rows come back sorted by key and free of duplicates.
pub fn search(grid: &Grid, field_cap: u64, enum_cap: u64) -> SearchOutcome {
    let jobs = instances(grid);
    #[cfg(feature = "parallel")]
    let parts: Vec<SearchOutcome> =
        jobs.par_iter().map(|&(q, n, r)| search_one(q, n, r, field_cap, enum_cap)).collect();
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<SearchOutcome> =
        jobs.iter().map(|&(q, n, r)| search_one(q, n, r, field_cap, enum_cap)).collect();
    let mut out = SearchOutcome::default();
    for p in parts {
        out.rows.extend(p.rows);
        out.warnings.extend(p.warnings);
    }
    out.rows = merge_rows(Vec::new(), out.rows);
    out
}

/// Union of two catalogs; on a key clash the existing row wins.
pub fn merge_rows(existing: Vec<CatalogRow>, new: Vec<CatalogRow>) -> Vec<CatalogRow> {
    let mut map = std::collections::BTreeMap::new();
    for row in existing.into_iter().chain(new) {
        map.entry(row.key()).or_insert(row);
    }
    map.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::DEFAULT_FIELD_CAP;

    #[test]
    fn ternary_grid_finds_length_eleven() {
        let grid = Grid { qs: vec![3], n_min: 1, n_max: 12, orders: Some(vec![2]) };
        let out = search(&grid, DEFAULT_FIELD_CAP, 1 << 20);
        let row = out.rows.iter().find(|r| r.n == 11 && r.cosets == "7").expect("length 11 hit");
        assert_eq!(row.lambda, "-1");
        assert_eq!(row.ell, Some(2));
        assert_eq!(row.dim, 5);
        assert!(out.rows.iter().all(|r| r.ell.map_or(true, |l| Some(l) <= r.best_bound)));
    }

    #[test]
    fn field_32_grid_finds_length_eleven() {
        let grid = Grid { qs: vec![32], n_min: 1, n_max: 20, orders: None };
        let out = search(&grid, DEFAULT_FIELD_CAP, 1 << 20);
        let row = out
            .rows
            .iter()
            .find(|r| r.n == 11 && r.lambda == "xi^1" && r.cosets == "1")
            .expect("length 11 hit");
        assert_eq!(row.ell, Some(2));
        assert_eq!(row.best_bound, Some(2));
        assert!(row.tight);
    }

    #[test]
    fn empty_grid() {
        let grid = Grid { qs: vec![], n_min: 1, n_max: 10, orders: None };
        assert!(search(&grid, DEFAULT_FIELD_CAP, 1 << 20).rows.is_empty());
    }

    #[test]
    fn merge_keeps_existing_and_sorts() {
        let row = |n, ell| CatalogRow {
            q: 3,
            n,
            lambda: "-1".into(),
            cosets: "1".into(),
            dim: 1,
            ell,
            best_bound: Some(3),
            method: "x".into(),
            tight: false,
        };
        let merged = merge_rows(vec![row(5, Some(1))], vec![row(5, Some(2)), row(2, None)]);
        assert_eq!(merged.len(), 2);
        assert_eq!(merged[0].n, 2);
        assert_eq!(merged[1].ell, Some(1));
    }
}
