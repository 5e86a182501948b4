//! Formula-versus-oracle comparison for a single code.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::bounds::{self, big_json, Big, BoundInputs, Check, CosetData};
use crate::code::{Code, ConstaRing, WeightDist, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::group::{self, CodewordSet, GroupKind, OrbitReport, DEFAULT_ORBIT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub enumeration: u64,
    pub orbit: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { enumeration: DEFAULT_ENUM_CAP, orbit: DEFAULT_ORBIT_CAP }
    }
}

/// How a method's value relates to the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// Equal to the orbit count of its group.
    Exact,
    /// At least the orbit count of its group.
    Bound,
    /// Claimed equal to the orbit count; mismatches are reported, not fatal.
    Open,
    /// Alternative reading of a formula, reported for comparison only.
    Variant,
    /// A promised maximum number of weights.
    Guarantee,
}

fn ser_big<S: Serializer>(v: &Option<Big>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(b) => big_json(b).serialize(s),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Method {
    pub name: String,
    pub role: Role,
    pub group: Option<GroupKind>,
    pub applicable: bool,
    pub reason: String,
    #[serde(serialize_with = "ser_big")]
    pub value: Option<Big>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub required: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetRow {
    pub cosets: Vec<usize>,
    #[serde(serialize_with = "ser_big")]
    pub mu_bound: Option<Big>,
    #[serde(serialize_with = "ser_big")]
    pub rho_sigma: Option<Big>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub q: u64,
    pub p: u64,
    pub e: u32,
    pub n: u64,
    pub lambda: String,
    pub r: u64,
    pub rn: u64,
    pub m: u64,
    pub dim: u64,
    pub cosets: Vec<CosetData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub params: Params,
    pub methods: Vec<Method>,
    pub subsets: Vec<SubsetRow>,
    pub ell: Option<u64>,
    pub weights: Option<WeightDist>,
    pub oracle: BTreeMap<String, u64>,
    pub verdicts: Vec<Verdict>,
    pub open_questions: Vec<String>,
}

impl BoundReport {
    /// True when every required verdict passes.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass || !v.required)
    }

    pub fn method(&self, name: &str) -> Option<&Method> {
        self.methods.iter().find(|m| m.name == name)
    }

    pub fn value(&self, name: &str) -> Option<u64> {
        use num_traits::ToPrimitive;
        self.method(name)?.value.as_ref()?.to_u64()
    }
}

fn method(
    name: &str,
    role: Role,
    group: Option<GroupKind>,
    shape: std::result::Result<(), String>,
    eval: impl FnOnce() -> Result<Big>,
) -> Method {
    let base = |applicable, reason: String, value| Method {
        name: name.to_string(),
        role,
        group,
        applicable,
        reason,
        value,
    };
    match shape {
        Err(reason) => base(false, reason, None),
        Ok(()) => match eval() {
            Ok(v) => base(true, String::new(), Some(v)),
            Err(e @ Error::NonIntegralResult(_)) => base(true, e.to_string(), None),
            Err(e) => base(false, e.to_string(), None),
        },
    }
}

fn ok<T>(r: &std::result::Result<T, String>) -> std::result::Result<(), String> {
    r.as_ref().map(|_| ()).map_err(|e| e.clone())
}

fn single_shape(inp: &BoundInputs) -> std::result::Result<&CosetData, String> {
    match inp.cosets.as_slice() {
        [c] => Ok(c),
        s => Err(format!("needs one coset, selection has {}", s.len())),
    }
}

fn pair_shape(inp: &BoundInputs) -> std::result::Result<(&CosetData, &CosetData), String> {
    match inp.cosets.as_slice() {
        [a, b] => Ok((a, b)),
        s => Err(format!("needs two cosets, selection has {}", s.len())),
    }
}

/// Second coset of the pair is the image of the first under `mu_a`.
fn image_pair<'a>(
    ring: &ConstaRing,
    inp: &'a BoundInputs,
    a: u64,
) -> std::result::Result<&'a CosetData, String> {
    let (t1, t2) = pair_shape(inp)?;
    let img = ring.table.multiplier_coset_image(a, t1.index).map_err(|e| e.to_string())?;
    if img == t2.index {
        Ok(t1)
    } else {
        Err(format!("coset {} is not the image of coset {} under mu_{a}", t2.index, t1.index))
    }
}

/// Every method with its applicability and value.
pub fn evaluate_methods(ring: &ConstaRing, inp: &BoundInputs) -> Vec<Method> {
    use GroupKind::*;
    let mut out = Vec::new();
    let single = single_shape(inp);
    out.push(method(
        "rho_sigma_irreducible",
        Role::Exact,
        Some(RhoSigma),
        ok(&single),
        || bounds::rho_sigma_orbits_irreducible(inp, single.clone().unwrap()),
    ));
    out.push(method(
        "mu_irreducible",
        Role::Exact,
        Some(MuRhoSigma),
        ok(&single),
        || bounds::mu_orbits_irreducible(inp, single.clone().unwrap()),
    ));
    out.push(method("mu_subset_bound", Role::Bound, Some(MuRhoSigma), Ok(()), || {
        bounds::mu_orbit_bound(inp)
    }));
    out.push(method("rho_sigma_subsets", Role::Open, Some(RhoSigma), Ok(()), || {
        bounds::rho_sigma_orbits(inp)
    }));

    let pair = pair_shape(inp);
    let divisible = pair.clone().and_then(|(a, b)| {
        bounds::divisible_order(a, b).map_err(|e| e.to_string())
    });
    out.push(method(
        "mu_pair_divisible",
        Role::Exact,
        Some(MuRhoSigma),
        ok(&divisible),
        || {
            let (a, b) = divisible.clone().unwrap();
            bounds::mu_orbits_pair_divisible(inp, a, b)
        },
    ));
    let unit = pair.clone().and_then(|(a, b)| match (a.k, b.k) {
        (1, _) => Ok((a, b)),
        (_, 1) => Ok((b, a)),
        _ => Err("neither coset has size 1".to_string()),
    });
    out.push(method("mu_pair_unit", Role::Exact, Some(MuRhoSigma), ok(&unit), || {
        let (a, b) = unit.clone().unwrap();
        bounds::mu_orbits_pair_unit(inp, a, b)
    }));
    let equal = pair.clone().and_then(|(a, b)| {
        if a.k == b.k {
            Ok((a, b))
        } else {
            Err("coset sizes differ".to_string())
        }
    });
    out.push(method("mu_pair_equal", Role::Exact, Some(MuRhoSigma), ok(&equal), || {
        let (a, b) = equal.clone().unwrap();
        bounds::mu_orbits_pair_equal(inp, a, b)
    }));

    let neg = if inp.r == 2 {
        image_pair(ring, inp, inp.rn - 1)
    } else {
        Err(format!("r = {} but the negation pair needs r = 2", inp.r))
    };
    out.push(method("neg_mu_pair", Role::Open, Some(NegMuRhoSigma), ok(&neg), || {
        bounds::neg_mu_orbits_pair(inp, neg.clone().unwrap())
    }));
    out.push(method(
        "neg_mu_pair_doubled",
        Role::Variant,
        Some(NegMuRhoSigma),
        ok(&neg),
        || bounds::neg_mu_orbits_pair_doubled(inp, neg.clone().unwrap()),
    ));

    for l0 in 0..2u8 {
        let shape = if inp.e % 2 != 0 {
            Err(format!("q = p^{} with odd exponent", inp.e))
        } else {
            group::frobenius_multiplier(ring, l0)
                .map_err(|e| e.to_string())
                .and_then(|b| image_pair(ring, inp, b))
        };
        out.push(method(
            &format!("frob{l0}_pair"),
            Role::Exact,
            Some(FrobRhoSigma(l0)),
            ok(&shape),
            || bounds::frob_orbits_pair(inp, shape.clone().unwrap(), l0),
        ));
    }

    for (name, f) in [
        ("two_weight_condition", bounds::two_weight_condition as fn(_, _, _, _, _) -> _),
        ("three_weight_condition", bounds::three_weight_condition),
    ] {
        let m = match &single {
            Err(reason) => Method {
                name: name.into(),
                role: Role::Guarantee,
                group: None,
                applicable: false,
                reason: reason.clone(),
                value: None,
            },
            Ok(c) => {
                let g: bounds::Guarantee = f(inp.p, inp.e, inp.r, inp.n, c);
                Method {
                    name: name.into(),
                    role: Role::Guarantee,
                    group: None,
                    applicable: g.applicable,
                    reason: g.reason,
                    value: g.applicable.then(|| Big::from(g.max_weights)),
                }
            }
        };
        out.push(m);
    }
    out
}

fn verdict(out: &mut Vec<Verdict>, check: String, pass: bool, required: bool) {
    out.push(Verdict { check, pass, required });
}

fn expected_order(inp: &BoundInputs, kind: GroupKind) -> u64 {
    let base = inp.n * (inp.q - 1);
    match kind {
        GroupKind::RhoSigma => base,
        GroupKind::MuRhoSigma => inp.m * base,
        GroupKind::NegMuRhoSigma | GroupKind::FrobRhoSigma(_) => 2 * inp.m * base,
    }
}

/// Assembles values, oracle counts and every check into one report.
pub fn compare_report(
    ring: &ConstaRing,
    selected: &[usize],
    weights: Option<&WeightDist>,
    oracles: &[OrbitReport],
) -> Result<BoundReport> {
    let inp = BoundInputs::from_ring(ring, selected)?;
    let methods = evaluate_methods(ring, &inp);
    let ell = weights.map(|w| w.ell() as u64);
    let mut verdicts = Vec::new();
    let mut open_questions = Vec::new();
    let oracle_of = |k: GroupKind| oracles.iter().find(|o| o.group == k);

    for o in oracles {
        let g = o.group;
        verdict(
            &mut verdicts,
            format!("{g}: direct count {} = Burnside count {}", o.orbit_count, o.burnside_count),
            o.orbit_count == o.burnside_count,
            true,
        );
        verdict(&mut verdicts, format!("{g}: every orbit has a single weight"), o.weight_homogeneous, true);
        if let Some(l) = ell {
            verdict(&mut verdicts, format!("{g}: ell {l} <= orbit count {}", o.orbit_count), l <= o.orbit_count, true);
            verdict(
                &mut verdicts,
                format!("{g}: ell = orbit count exactly when each weight class is one orbit"),
                (l == o.orbit_count) == o.single_orbit_per_weight,
                true,
            );
        }
        let need_unique = match g {
            GroupKind::RhoSigma | GroupKind::MuRhoSigma => true,
            GroupKind::NegMuRhoSigma => methods.iter().any(|m| m.name == "neg_mu_pair" && m.applicable),
            GroupKind::FrobRhoSigma(l0) => {
                let name = format!("frob{l0}_pair");
                methods.iter().any(|m| m.name == name && m.applicable)
            }
        };
        let expect = expected_order(&inp, g);
        verdict(
            &mut verdicts,
            format!("{g}: {} distinct elements from {} exponent tuples (expected {expect})", o.order, o.tuples),
            o.order == o.tuples && o.tuples == expect,
            need_unique,
        );
    }
    for (big, small) in [
        (GroupKind::MuRhoSigma, GroupKind::RhoSigma),
        (GroupKind::NegMuRhoSigma, GroupKind::MuRhoSigma),
        (GroupKind::FrobRhoSigma(0), GroupKind::MuRhoSigma),
        (GroupKind::FrobRhoSigma(1), GroupKind::MuRhoSigma),
    ] {
        if let (Some(a), Some(b)) = (oracle_of(big), oracle_of(small)) {
            verdict(
                &mut verdicts,
                format!("{big} count {} <= {small} count {}", a.orbit_count, b.orbit_count),
                a.orbit_count <= b.orbit_count,
                true,
            );
        }
    }

    for m in methods.iter().filter(|m| m.applicable) {
        let Some(v) = &m.value else {
            let required = matches!(m.role, Role::Exact | Role::Bound);
            verdict(&mut verdicts, format!("{}: evaluates exactly ({})", m.name, m.reason), false, required);
            if m.role == Role::Open {
                open_questions.push(format!("{}: {}", m.name, m.reason));
            }
            continue;
        };
        if let Some(o) = m.group.and_then(oracle_of) {
            let ov = Big::from(o.orbit_count);
            match m.role {
                Role::Exact | Role::Open | Role::Variant => {
                    let pass = *v == ov;
                    let rel = if pass { "equals" } else { "differs from" };
                    verdict(
                        &mut verdicts,
                        format!("{} = {v} {rel} {} orbit count {ov}", m.name, o.group),
                        pass,
                        m.role == Role::Exact,
                    );
                    if !pass && m.role == Role::Open {
                        let agree: Vec<&str> = methods
                            .iter()
                            .filter(|x| x.role == Role::Variant && x.group == m.group)
                            .filter(|x| x.value.as_ref() == Some(&ov))
                            .map(|x| x.name.as_str())
                            .collect();
                        let note = if agree.is_empty() {
                            String::new()
                        } else {
                            format!("; {} agrees", agree.join(", "))
                        };
                        open_questions.push(format!(
                            "{} gives {v} but the {} orbit count is {ov}{note}",
                            m.name, o.group
                        ));
                    }
                }
                Role::Bound => verdict(
                    &mut verdicts,
                    format!("{} = {v} {} {} orbit count {ov}", m.name, if *v >= ov { ">=" } else { "<" }, o.group),
                    *v >= ov,
                    true,
                ),
                Role::Guarantee => {}
            }
        }
        if let Some(l) = ell {
            let required = matches!(m.role, Role::Exact | Role::Bound | Role::Guarantee);
            let pass = *v >= Big::from(l);
            let rel = if pass { ">=" } else { "<" };
            verdict(&mut verdicts, format!("{} = {v} {rel} ell {l}", m.name), pass, required);
        }
    }

    let subset_list = bounds::subsets(&inp)?;
    let mut subsets = Vec::with_capacity(subset_list.len());
    for s in &subset_list {
        let mu = bounds::subset_bound(&inp, s).ok();
        let rs = bounds::rho_sigma_subset_term(&inp, s).ok();
        let idx: Vec<usize> = s.iter().map(|c| c.index).collect();
        if let (Some(a), Some(b)) = (&mu, &rs) {
            verdict(&mut verdicts, format!("subset {idx:?}: mu term {a} <= rho-sigma term {b}"), a <= b, true);
        }
        subsets.push(SubsetRow { cosets: idx, mu_bound: mu, rho_sigma: rs });
    }
    if let (Some(a), Some(b)) = (
        methods.iter().find(|m| m.name == "mu_subset_bound").and_then(|m| m.value.clone()),
        methods.iter().find(|m| m.name == "rho_sigma_subsets").and_then(|m| m.value.clone()),
    ) {
        verdict(&mut verdicts, format!("mu_subset_bound {a} <= rho_sigma_subsets {b}"), a <= b, true);
    }
    if let [c] = inp.cosets.as_slice() {
        let checks: Vec<Check> = bounds::irreducible_count_checks(&inp, c)?;
        for ch in checks {
            verdict(&mut verdicts, ch.check, ch.pass, true);
        }
    }

    let params = Params {
        q: inp.q,
        p: inp.p,
        e: inp.e,
        n: inp.n,
        lambda: ring.lambda_spec.to_string(),
        r: inp.r,
        rn: inp.rn,
        m: inp.m,
        dim: ring.dimension(&inp.cosets.iter().map(|c| c.index).collect::<Vec<_>>()),
        cosets: inp.cosets.clone(),
    };
    Ok(BoundReport {
        params,
        methods,
        subsets,
        ell,
        weights: weights.cloned(),
        oracle: oracles.iter().map(|o| (o.group.to_string(), o.orbit_count)).collect(),
        verdicts,
        open_questions,
    })
}

/// Groups of the family that act on the given code.
pub fn oracle_groups(code: &Code) -> Vec<GroupKind> {
    let ring = code.ring();
    let mut out = vec![GroupKind::RhoSigma, GroupKind::MuRhoSigma];
    let mut extra = vec![GroupKind::NegMuRhoSigma];
    if ring.q.e % 2 == 0 {
        extra.extend([GroupKind::FrobRhoSigma(0), GroupKind::FrobRhoSigma(1)]);
    }
    for kind in extra {
        if group::preserves(code, kind).unwrap_or(false) {
            out.push(kind);
        }
    }
    out
}

/// Enumerates the code, runs every applicable orbit oracle and compares.
pub fn verify_code(code: &Code, caps: Caps) -> Result<BoundReport> {
    let weights = code.enumerate_weights(caps.enumeration)?;
    let set = CodewordSet::new(code, caps.orbit)?;
    let oracles = oracle_groups(code)
        .into_iter()
        .map(|k| group::orbit_report(code, k, &set))
        .collect::<Result<Vec<_>>>()?;
    compare_report(code.ring(), code.selected(), Some(&weights), &oracles)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::code::build_code;
    use crate::gf::{PrimePower, DEFAULT_FIELD_CAP};

    fn verified(q: u64, n: u64, lambda: &str, cosets: &[usize]) -> BoundReport {
        let q = PrimePower::from_q(q).unwrap();
        let ring = Arc::new(ConstaRing::new(q, n, lambda.parse().unwrap(), DEFAULT_FIELD_CAP).unwrap());
        let code = build_code(&ring, cosets).unwrap();
        verify_code(&code, Caps::default()).unwrap()
    }

    #[test]
    fn pair_over_five_orders_the_counts() {
        let rep = verified(5, 39, "-1", &[0, 9]);
        assert!(rep.passed());
        assert_eq!(rep.value("rho_sigma_subsets"), Some(21));
        assert_eq!(rep.value("mu_pair_unit"), Some(13));
        assert_eq!(rep.ell, Some(9));
        assert_eq!(rep.oracle["mu-rho-sigma"], 13);
        assert!(rep.open_questions.is_empty());
    }

    #[test]
    fn frobenius_pair_zero() {
        let rep = verified(9, 40, "2", &[0, 1]);
        assert!(rep.passed());
        assert_eq!(rep.value("mu_pair_equal"), Some(14));
        assert_eq!(rep.value("frob0_pair"), Some(9));
        assert_eq!(rep.oracle["frob0-rho-sigma"], 9);
        assert_eq!(rep.ell, Some(2));
    }

    #[test]
    fn json_shape() {
        let rep = verified(3, 8, "-1", &[1]);
        let v = serde_json::to_value(&rep).unwrap();
        for key in ["params", "methods", "ell", "oracle", "verdicts"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let m = &v["methods"][0];
        assert!(m.get("name").is_some() && m.get("applicable").is_some() && m.get("value").is_some());
        assert!(v["verdicts"][0].get("check").is_some() && v["verdicts"][0].get("pass").is_some());
        assert_eq!(v["oracle"]["rho-sigma"], 5);
    }

    #[test]
    fn bounds_without_enumeration() {
        let q = PrimePower::from_q(3).unwrap();
        let ring = ConstaRing::new(q, 40, crate::code::LambdaSpec::Int(-1), DEFAULT_FIELD_CAP).unwrap();
        let rep = compare_report(&ring, &[3, 6], None, &[]).unwrap();
        assert_eq!(rep.value("mu_pair_equal"), Some(25));
        assert_eq!(rep.value("neg_mu_pair"), Some(19));
        assert_eq!(rep.value("neg_mu_pair_doubled"), Some(24));
        assert!(rep.ell.is_none() && rep.oracle.is_empty());
        assert!(rep.passed());
    }
}
