//! Monomial automorphisms `rho`, `sigma`, `mu_a` and brute-force orbit counts.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::code::{Code, Codeword, ConstaRing};
use crate::error::{Error, Result};
use crate::gf::Sym;
use crate::modring::mod_pow;

pub const DEFAULT_ORBIT_CAP: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    RhoSigma,
    MuRhoSigma,
    NegMuRhoSigma,
    /// Generated by `mu_b`, `rho`, `sigma` with `b = (-1)^l0 p^{e/2}`.
    FrobRhoSigma(u8),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::RhoSigma => f.write_str("rho-sigma"),
            GroupKind::MuRhoSigma => f.write_str("mu-rho-sigma"),
            GroupKind::NegMuRhoSigma => f.write_str("neg-mu-rho-sigma"),
            GroupKind::FrobRhoSigma(l0) => write!(f, "frob{l0}-rho-sigma"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rho-sigma" => Ok(GroupKind::RhoSigma),
            "mu-rho-sigma" => Ok(GroupKind::MuRhoSigma),
            "neg-mu-rho-sigma" => Ok(GroupKind::NegMuRhoSigma),
            "frob0-rho-sigma" => Ok(GroupKind::FrobRhoSigma(0)),
            "frob1-rho-sigma" => Ok(GroupKind::FrobRhoSigma(1)),
            other => Err(Error::InvalidParameter(format!("unknown group '{other}'"))),
        }
    }
}

impl Serialize for GroupKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Coordinate `i` moves to `perm[i]` and is multiplied by `xi^{scale[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub perm: Vec<u32>,
    pub scale: Vec<u32>,
}

impl Monomial {
    pub fn identity(n: usize) -> Monomial {
        Monomial { perm: (0..n as u32).collect(), scale: vec![0; n] }
    }

    /// `mu_a o rho^s o sigma^j`, with `a` a residue modulo rn.
    fn product(ring: &ConstaRing, a: u64, s: u64, j: u64) -> Monomial {
        let n = ring.n;
        let qm1 = ring.qq() - 1;
        let lam = ring.base.lambda_exp() as u64;
        let mut perm = Vec::with_capacity(n as usize);
        let mut scale = Vec::with_capacity(n as usize);
        for i in 0..n {
            let e = a * (i + s);
            perm.push((e % n) as u32);
            let sc = (j + lam * ((e / n) % qm1.max(1))) % qm1.max(1);
            scale.push(sc as u32);
        }
        Monomial { perm, scale }
    }

    pub fn apply(&self, ring: &ConstaRing, w: &[Sym], out: &mut [Sym]) {
        for i in 0..w.len() {
            out[self.perm[i] as usize] = ring.base.scale(w[i], self.scale[i]);
        }
    }

    pub fn fixes(&self, ring: &ConstaRing, w: &[Sym]) -> bool {
        (0..w.len()).all(|i| w[self.perm[i] as usize] == ring.base.scale(w[i], self.scale[i]))
    }

    /// `self o other`.
    pub fn compose(&self, other: &Monomial, qm1: u32) -> Monomial {
        let q = qm1.max(1);
        let perm = other.perm.iter().map(|&p| self.perm[p as usize]).collect();
        let scale = other
            .perm
            .iter()
            .zip(&other.scale)
            .map(|(&p, &s)| (s + self.scale[p as usize]) % q)
            .collect();
        Monomial { perm, scale }
    }
}

fn check_unit(ring: &ConstaRing, a: u64) -> Result<u64> {
    let a = a % ring.rn();
    if !ring.table.in_unit_subgroup(a) {
        return Err(Error::NotInUnitSubgroup(a, ring.r(), ring.rn()));
    }
    Ok(a)
}

pub fn rho(ring: &ConstaRing) -> Monomial {
    Monomial::product(ring, 1, 1, 0)
}

pub fn sigma(ring: &ConstaRing, j: u64) -> Monomial {
    Monomial::product(ring, 1, 0, j)
}

pub fn mu(ring: &ConstaRing, a: u64) -> Result<Monomial> {
    Ok(Monomial::product(ring, check_unit(ring, a)?, 0, 0))
}

fn act(ring: &ConstaRing, g: &Monomial, w: &Codeword) -> Codeword {
    let mut out = vec![0; w.0.len()];
    g.apply(ring, &w.0, &mut out);
    Codeword(out)
}

/// `(lambda w_{n-1}, w_0, ..., w_{n-2})`.
pub fn act_rho(ring: &ConstaRing, w: &Codeword) -> Codeword {
    act(ring, &rho(ring), w)
}

pub fn act_sigma(ring: &ConstaRing, w: &Codeword, j: u64) -> Codeword {
    act(ring, &sigma(ring, j), w)
}

pub fn act_mu(ring: &ConstaRing, w: &Codeword, a: u64) -> Result<Codeword> {
    Ok(act(ring, &mu(ring, a)?, w))
}

/// The multiplier of `GroupKind::FrobRhoSigma(l0)`, reduced modulo rn.
pub fn frobenius_multiplier(ring: &ConstaRing, l0: u8) -> Result<u64> {
    let e = ring.q.e;
    if e % 2 != 0 {
        return Err(Error::PreconditionFailed(format!("q = p^{e} with e odd")));
    }
    let rn = ring.rn();
    let half = mod_pow(ring.q.p as u64, (e / 2) as u64, rn);
    let b = if l0 % 2 == 0 { half } else { (rn - half) % rn };
    if !ring.table.in_unit_subgroup(b) {
        return Err(Error::PreconditionFailed(format!(
            "multiplier {b} not in the unit subgroup 1 + {}Z mod {rn}",
            ring.r()
        )));
    }
    Ok(b)
}

/// Exponent ranges `(multiplier generators with their ranges, n, q-1)`.
struct Layout {
    /// Multipliers each with an exponent range, outermost first.
    mults: Vec<(u64, u64)>,
    n: u64,
    qm1: u64,
}

impl Layout {
    fn new(ring: &ConstaRing, kind: GroupKind) -> Result<Layout> {
        let rn = ring.rn();
        let q = ring.qq() % rn.max(1);
        let m = ring.m();
        let mults = match kind {
            GroupKind::RhoSigma => vec![],
            GroupKind::MuRhoSigma => vec![(q, m)],
            GroupKind::NegMuRhoSigma => vec![(check_unit(ring, rn - 1)?, 2), (q, m)],
            GroupKind::FrobRhoSigma(l0) => vec![(frobenius_multiplier(ring, l0)?, 2 * m)],
        };
        Ok(Layout { mults, n: ring.n, qm1: ring.qq() - 1 })
    }

    fn tuples(&self) -> u64 {
        self.mults.iter().map(|&(_, r)| r).product::<u64>() * self.n * self.qm1
    }

    fn element(&self, ring: &ConstaRing, mut idx: u64) -> Monomial {
        let j = idx % self.qm1;
        idx /= self.qm1;
        let s = idx % self.n;
        idx /= self.n;
        let rn = ring.rn();
        let mut a = 1 % rn;
        for &(b, range) in self.mults.iter().rev() {
            let e = idx % range;
            idx /= range;
            a = (a as u128 * mod_pow(b, e, rn) as u128 % rn as u128) as u64;
        }
        Monomial::product(ring, a, s, j)
    }

    fn generators(&self, ring: &ConstaRing) -> Vec<Monomial> {
        let mut g: Vec<Monomial> = self
            .mults
            .iter()
            .map(|&(b, _)| Monomial::product(ring, b, 0, 0))
            .collect();
        g.push(rho(ring));
        if self.qm1 > 1 {
            g.push(sigma(ring, 1));
        }
        g
    }
}

/// Number of exponent tuples declared for the group.
pub fn declared_order(ring: &ConstaRing, kind: GroupKind) -> Result<u64> {
    Ok(Layout::new(ring, kind)?.tuples())
}

/// All group elements, one per exponent tuple, in tuple order.
pub fn group_elements(ring: &ConstaRing, kind: GroupKind) -> Result<Vec<Monomial>> {
    let lay = Layout::new(ring, kind)?;
    Ok((0..lay.tuples()).map(|i| lay.element(ring, i)).collect())
}

/// Whether every generator maps the code onto itself.
pub fn preserves(code: &Code, kind: GroupKind) -> Result<bool> {
    let ring = code.ring();
    let lay = Layout::new(ring, kind)?;
    for &(b, _) in &lay.mults {
        if !ring.table.selection_closed_under(b, code.selected())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether all exponent tuples give pairwise distinct maps on `F_q^n`
/// (compared on the standard basis, which determines a monomial map).
pub fn unique_factorization_check(ring: &ConstaRing, kind: GroupKind) -> Result<bool> {
    let elems = group_elements(ring, kind)?;
    let total = elems.len();
    let distinct: HashSet<Monomial> = elems.into_iter().collect();
    Ok(distinct.len() == total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightClass {
    pub weight: usize,
    pub codewords: u64,
    pub orbit_count_within: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub group: GroupKind,
    /// Number of distinct group elements.
    pub order: u64,
    pub tuples: u64,
    pub orbit_count: u64,
    pub burnside_count: u64,
    pub weight_homogeneous: bool,
    /// Whether each nonzero weight class is exactly one orbit.
    pub single_orbit_per_weight: bool,
    pub weight_classes: Vec<WeightClass>,
}

/// The nonzero codewords with their lexicographic visiting order.
pub struct CodewordSet {
    n: usize,
    flat: Vec<Sym>,
}

impl CodewordSet {
    pub fn new(code: &Code, cap: u64) -> Result<CodewordSet> {
        Ok(CodewordSet { n: code.len(), flat: code.all_codewords(cap)? })
    }

    pub fn len(&self) -> usize {
        self.flat.len() / self.n.max(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> &[Sym] {
        &self.flat[i * self.n..(i + 1) * self.n]
    }

    /// Nonzero codewords (index 0 is the zero word).
    fn nonzero(&self) -> impl Iterator<Item = &[Sym]> {
        self.flat.chunks(self.n).skip(1)
    }
}

fn require_preserved(code: &Code, kind: GroupKind) -> Result<()> {
    if !preserves(code, kind)? {
        return Err(Error::PreconditionFailed(format!(
            "{kind} does not preserve the code with cosets {:?}",
            code.selected()
        )));
    }
    Ok(())
}

/// Sum of `|Fix(g)|` over every exponent tuple, then divided exactly by the
/// tuple count. Each group element is hit equally often by the tuples, so
/// the average equals the average over the group.
pub fn orbit_count_burnside(code: &Code, kind: GroupKind, set: &CodewordSet) -> Result<u64> {
    let ring = code.ring();
    require_preserved(code, kind)?;
    let lay = Layout::new(ring, kind)?;
    let tuples = lay.tuples();
    let fixed = |i: u64| -> u64 {
        let g = lay.element(ring, i);
        set.nonzero().filter(|w| g.fixes(ring, w)).count() as u64
    };
    #[cfg(feature = "parallel")]
    let total: u128 = {
        use rayon::prelude::*;
        (0..tuples).into_par_iter().map(|i| fixed(i) as u128).sum()
    };
    #[cfg(not(feature = "parallel"))]
    let total: u128 = (0..tuples).map(|i| fixed(i) as u128).sum();
    if total % tuples as u128 != 0 {
        return Err(Error::NonIntegralAverage { num: total, den: tuples as u128 });
    }
    Ok((total / tuples as u128) as u64)
}

/// Orbit partition of the nonzero codewords by breadth-first closure under
/// the generators, seeded in lexicographic codeword order.
pub fn orbit_partition(code: &Code, kind: GroupKind, set: &CodewordSet) -> Result<Vec<Vec<u64>>> {
    let ring = code.ring();
    require_preserved(code, kind)?;
    let gens = Layout::new(ring, kind)?.generators(ring);
    let total = set.len();
    let mut order: Vec<usize> = (1..total).collect();
    order.sort_by(|&a, &b| set.get(a).cmp(set.get(b)));
    let mut seen = vec![false; total];
    let mut orbits = Vec::new();
    let mut buf = vec![0 as Sym; code.len()];
    for seed in order {
        if seen[seed] {
            continue;
        }
        seen[seed] = true;
        let mut orbit = vec![seed as u64];
        let mut queue = VecDeque::from([seed]);
        while let Some(cur) = queue.pop_front() {
            for g in &gens {
                g.apply(ring, set.get(cur), &mut buf);
                let idx = code.message_index(&buf).ok_or_else(|| {
                    Error::PreconditionFailed(format!("{kind} generator leaves the code"))
                })? as usize;
                if !seen[idx] {
                    seen[idx] = true;
                    orbit.push(idx as u64);
                    queue.push_back(idx);
                }
            }
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

pub fn orbit_count_direct(code: &Code, kind: GroupKind, set: &CodewordSet) -> Result<u64> {
    Ok(orbit_partition(code, kind, set)?.len() as u64)
}

/// Direct and Burnside counts with the per-weight orbit breakdown.
pub fn orbit_report(code: &Code, kind: GroupKind, set: &CodewordSet) -> Result<OrbitReport> {
    let ring = code.ring();
    let orbits = orbit_partition(code, kind, set)?;
    let burnside_count = orbit_count_burnside(code, kind, set)?;
    let weight = |i: u64| set.get(i as usize).iter().filter(|&&s| s != 0).count();
    let mut homogeneous = true;
    let mut classes: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
    for orbit in &orbits {
        let w = weight(orbit[0]);
        homogeneous &= orbit.iter().all(|&i| weight(i) == w);
        let e = classes.entry(w).or_default();
        e.0 += orbit.len() as u64;
        e.1 += 1;
    }
    let weight_classes: Vec<WeightClass> = classes
        .into_iter()
        .map(|(weight, (codewords, orbit_count_within))| WeightClass {
            weight,
            codewords,
            orbit_count_within,
        })
        .collect();
    let elems = group_elements(ring, kind)?;
    let tuples = elems.len() as u64;
    let order = elems.into_iter().collect::<HashSet<_>>().len() as u64;
    Ok(OrbitReport {
        group: kind,
        order,
        tuples,
        orbit_count: orbits.len() as u64,
        burnside_count,
        weight_homogeneous: homogeneous,
        single_orbit_per_weight: weight_classes.iter().all(|c| c.orbit_count_within == 1),
        weight_classes,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::code::build_code;
    use crate::gf::{PrimePower, DEFAULT_FIELD_CAP};

    fn ring(q: u64, n: u64, lambda: &str) -> Arc<ConstaRing> {
        Arc::new(
            ConstaRing::new(PrimePower::from_q(q).unwrap(), n, lambda.parse().unwrap(), DEFAULT_FIELD_CAP)
                .unwrap(),
        )
    }

    #[test]
    fn rho_shifts_with_twist() {
        let r = ring(3, 8, "-1");
        let w = Codeword(vec![1, 0, 0, 0, 0, 0, 0, 1]);
        let lam = r.base.lambda();
        assert_eq!(act_rho(&r, &w).0, vec![lam, 1, 0, 0, 0, 0, 0, 0]);
        let z = Codeword::zero(8);
        assert_eq!(act_rho(&r, &z), z);
        let mut v = w.clone();
        for _ in 0..8 {
            v = act_rho(&r, &v);
        }
        assert_eq!(v.0, w.0.iter().map(|&s| r.base.mul(s, lam)).collect::<Vec<_>>());
    }

    #[test]
    fn mu_identity_and_order() {
        let r = ring(3, 8, "-1");
        let w = Codeword(vec![1, 2, 0, 1, 0, 0, 2, 1]);
        assert_eq!(act_mu(&r, &w, 1).unwrap(), w);
        let mut v = w.clone();
        for _ in 0..r.m() {
            v = act_mu(&r, &v, 3).unwrap();
        }
        assert_eq!(v, w);
        assert!(matches!(act_mu(&r, &w, 2), Err(Error::NotInUnitSubgroup(..))));
        assert_eq!(act_sigma(&r, &w, 0), w);
    }

    #[test]
    fn group_orders_length_eight() {
        let r = ring(3, 8, "-1");
        assert_eq!(declared_order(&r, GroupKind::RhoSigma).unwrap(), 16);
        assert_eq!(declared_order(&r, GroupKind::MuRhoSigma).unwrap(), 64);
        assert!(unique_factorization_check(&r, GroupKind::RhoSigma).unwrap());
        assert!(unique_factorization_check(&r, GroupKind::MuRhoSigma).unwrap());
    }

    #[test]
    fn orbits_length_eight() {
        let r = ring(3, 8, "-1");
        let c = build_code(&r, &[1]).unwrap();
        let set = CodewordSet::new(&c, DEFAULT_ORBIT_CAP).unwrap();
        let rs = orbit_report(&c, GroupKind::RhoSigma, &set).unwrap();
        assert_eq!((rs.orbit_count, rs.burnside_count), (5, 5));
        let mu = orbit_report(&c, GroupKind::MuRhoSigma, &set).unwrap();
        assert_eq!((mu.orbit_count, mu.burnside_count), (2, 2));
        assert!(mu.weight_homogeneous && mu.single_orbit_per_weight);
        assert_eq!(mu.order, 64);
    }

    #[test]
    fn frobenius_needs_even_exponent() {
        let r = ring(3, 8, "-1");
        assert!(matches!(
            declared_order(&r, GroupKind::FrobRhoSigma(0)),
            Err(Error::PreconditionFailed(_))
        ));
        let r9 = ring(9, 40, "2");
        assert_eq!(frobenius_multiplier(&r9, 0).unwrap(), 3);
        assert_eq!(frobenius_multiplier(&r9, 1).unwrap(), 77);
    }

    #[test]
    fn group_names_round_trip() {
        for k in [
            GroupKind::RhoSigma,
            GroupKind::MuRhoSigma,
            GroupKind::NegMuRhoSigma,
            GroupKind::FrobRhoSigma(0),
            GroupKind::FrobRhoSigma(1),
        ] {
            assert_eq!(k.to_string().parse::<GroupKind>().unwrap(), k);
        }
    }
}
