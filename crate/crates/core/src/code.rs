//! Constacyclic codes `sum_{t in T} R e_t` given by a set of cyclotomic cosets.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{make_root_system, BaseField, FieldCtx, FieldElem, PrimePower, RootSystem, Sym};
use crate::modring::{cyclotomic_cosets, ord_mod, CosetTable};

pub const DEFAULT_ENUM_CAP: u64 = 1 << 26;

/// How the constant `lambda` is named on input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaSpec {
    /// An integer, read in the prime field (`1`, `-1`, `2`, ...).
    Int(i64),
    /// `xi^J` for the canonical generator `xi` of `F_q^*`.
    XiPow(u64),
}

impl FromStr for LambdaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidParameter(format!("cannot parse lambda '{s}'"));
        if t == "xi" || t == "theta" {
            return Ok(LambdaSpec::XiPow(1));
        }
        if let Some(j) = t.strip_prefix("xi^") {
            return j.trim().parse().map(LambdaSpec::XiPow).map_err(|_| bad());
        }
        t.parse().map(LambdaSpec::Int).map_err(|_| bad())
    }
}

impl fmt::Display for LambdaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaSpec::Int(c) => write!(f, "{c}"),
            LambdaSpec::XiPow(j) => write!(f, "xi^{j}"),
        }
    }
}

impl LambdaSpec {
    /// Multiplicative order of the named element in `F_q^*`.
    pub fn order(&self, q: PrimePower) -> Result<u64> {
        let qm1 = q.q as u64 - 1;
        match *self {
            LambdaSpec::XiPow(j) => Ok(qm1 / (j % qm1.max(1)).gcd(&qm1).max(1)),
            LambdaSpec::Int(c) => {
                let p = q.p as i64;
                let c = c.rem_euclid(p) as u64;
                if c == 0 {
                    return Err(Error::ZeroElement);
                }
                if p == 2 {
                    Ok(1)
                } else {
                    ord_mod(c, p as u64)
                }
            }
        }
    }
}

/// The ambient ring `F_q[x]/(x^n - lambda)` with its splitting field data.
#[derive(Debug)]
pub struct ConstaRing {
    pub q: PrimePower,
    pub n: u64,
    pub lambda_spec: LambdaSpec,
    pub field: FieldCtx,
    pub roots: RootSystem,
    pub table: CosetTable,
    pub base: BaseField,
}

impl ConstaRing {
    pub fn new(q: PrimePower, n: u64, lambda: LambdaSpec, field_cap: u64) -> Result<ConstaRing> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        let qq = q.q as u64;
        if n.gcd(&qq) != 1 {
            return Err(Error::NotCoprime(n, qq));
        }
        let r = lambda.order(q)?;
        let rn = r
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidParameter("rn too large".into()))?;
        let m = if rn == 1 { 1 } else { ord_mod(qq, rn)? };
        let degree = q.e as u64 * m;
        if degree > 64 {
            return Err(Error::CapExceeded {
                what: "field",
                size: u128::MAX,
                cap: field_cap as u128,
            });
        }
        let field = FieldCtx::build(q.p, degree as u32, field_cap)?;
        let lam = match lambda {
            LambdaSpec::Int(c) => field.from_int(c),
            LambdaSpec::XiPow(j) => field.pow(field.subfield_generator(qq)?, j as i64)?,
        };
        let roots = make_root_system(&field, qq, lam, n)?;
        debug_assert_eq!(roots.r, r);
        let table = cyclotomic_cosets(qq, r, n)?;
        let base = BaseField::new(&field, &roots)?;
        Ok(ConstaRing { q, n, lambda_spec: lambda, field, roots, table, base })
    }

    pub fn r(&self) -> u64 {
        self.roots.r
    }

    pub fn rn(&self) -> u64 {
        self.table.rn
    }

    pub fn m(&self) -> u64 {
        self.table.m
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn qq(&self) -> u64 {
        self.q.q as u64
    }

    /// Normalises a coset selection: sorted, deduplicated, validated.
    pub fn selection(&self, selected: &[usize]) -> Result<Vec<usize>> {
        if selected.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut s = selected.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&t| t >= self.table.len()) {
            return Err(Error::InvalidParameter(format!(
                "coset index {bad} out of range (table has {})",
                self.table.len()
            )));
        }
        Ok(s)
    }

    pub fn dimension(&self, selected: &[usize]) -> u64 {
        selected.iter().map(|&t| self.table.cosets[t].k).sum()
    }

    /// Product in the ring: polynomial product reduced by `x^n = lambda`.
    pub fn mul(&self, a: &[Sym], b: &[Sym]) -> Vec<Sym> {
        let n = self.n();
        let bf = &self.base;
        let lam = bf.lambda();
        let mut out = vec![0 as Sym; n];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let mut v = bf.mul(ai, bj);
                let mut pos = i + j;
                while pos >= n {
                    pos -= n;
                    v = bf.mul(v, lam);
                }
                out[pos] = bf.add(out[pos], v);
            }
        }
        out
    }
}

/// A vector over `F_q`, coordinate `i` holding the coefficient of `x^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(pub Vec<Sym>);

impl Codeword {
    pub fn zero(n: usize) -> Codeword {
        Codeword(vec![0; n])
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&s| s != 0).count()
    }
}

/// Row-reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<Vec<Sym>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(base: &BaseField, rows: &[Vec<Sym>]) -> Echelon {
        let mut basis: Vec<Vec<Sym>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for row in rows {
            let mut v = row.clone();
            reduce_against(base, &basis, &pivots, &mut v);
            let Some(p) = v.iter().position(|&s| s != 0) else { continue };
            let inv = base.inv(v[p]).expect("nonzero pivot");
            for s in v.iter_mut() {
                *s = base.mul(*s, inv);
            }
            for b in basis.iter_mut() {
                let f = b[p];
                if f != 0 {
                    for (x, &y) in b.iter_mut().zip(&v) {
                        *x = base.sub(*x, base.mul(f, y));
                    }
                }
            }
            basis.push(v);
            pivots.push(p);
        }
        Echelon { rows: basis, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, base: &BaseField, w: &[Sym]) -> bool {
        if let Some(first) = self.rows.first() {
            if first.len() != w.len() {
                return false;
            }
        }
        let mut v = w.to_vec();
        reduce_against(base, &self.rows, &self.pivots, &mut v);
        v.iter().all(|&s| s == 0)
    }
}

fn reduce_against(base: &BaseField, basis: &[Vec<Sym>], pivots: &[usize], v: &mut [Sym]) {
    for (b, &p) in basis.iter().zip(pivots) {
        let f = v[p];
        if f != 0 {
            for (x, &y) in v.iter_mut().zip(b) {
                if y != 0 {
                    *x = base.sub(*x, base.mul(f, y));
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Code {
    ring: Arc<ConstaRing>,
    selected: Vec<usize>,
    genpoly: Vec<Sym>,
    rows: Vec<Vec<Sym>>,
    echelon: Echelon,
}

pub fn build_code(ring: &Arc<ConstaRing>, selected: &[usize]) -> Result<Code> {
    let selected = ring.selection(selected)?;
    let f = &ring.field;
    let mut g = vec![FieldElem::ONE];
    for (t, coset) in ring.table.cosets.iter().enumerate() {
        if selected.binary_search(&t).is_ok() {
            continue;
        }
        for &j in &coset.elements {
            let root = f.pow(ring.roots.zeta, j as i64)?;
            let neg_root = f.neg(root);
            let mut next = vec![FieldElem::ZERO; g.len() + 1];
            for (i, &c) in g.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], c);
                next[i] = f.add(next[i], f.mul(c, neg_root));
            }
            g = next;
        }
    }
    let genpoly: Vec<Sym> = g
        .iter()
        .map(|&c| ring.base.from_field(c).ok_or(Error::SubfieldViolation))
        .collect::<Result<_>>()?;
    let n = ring.n();
    let k = n + 1 - genpoly.len();
    debug_assert_eq!(k as u64, ring.dimension(&selected));
    let rows: Vec<Vec<Sym>> = (0..k)
        .map(|i| {
            let mut row = vec![0; n];
            row[i..i + genpoly.len()].copy_from_slice(&genpoly);
            row
        })
        .collect();
    let echelon = Echelon::new(&ring.base, &rows);
    Ok(Code { ring: Arc::clone(ring), selected, genpoly, rows, echelon })
}

impl Code {
    pub fn ring(&self) -> &Arc<ConstaRing> {
        &self.ring
    }

    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.ring.n()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Ascending coefficients of the monic generator polynomial.
    pub fn genpoly(&self) -> &[Sym] {
        &self.genpoly
    }

    pub fn genmatrix(&self) -> &[Vec<Sym>] {
        &self.rows
    }

    /// `q^k`, or `None` if it overflows.
    pub fn size(&self) -> Option<u64> {
        (self.ring.qq()).checked_pow(self.dim() as u32)
    }

    pub fn check_cap(&self, what: &'static str, cap: u64) -> Result<u64> {
        match self.size() {
            Some(s) if s <= cap => Ok(s),
            s => Err(Error::CapExceeded {
                what,
                size: s.map_or(u128::MAX, |s| s as u128),
                cap: cap as u128,
            }),
        }
    }

    /// Message (coefficients over `F_q`, length k) times the generator matrix.
    pub fn encode(&self, msg: &[Sym]) -> Codeword {
        let bf = &self.ring.base;
        let mut c = vec![0; self.len()];
        for (row, &m) in self.rows.iter().zip(msg) {
            if m == 0 {
                continue;
            }
            for (x, &y) in c.iter_mut().zip(row) {
                *x = bf.add(*x, bf.mul(m, y));
            }
        }
        Codeword(c)
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        w.0.len() == self.len() && self.echelon.contains(&self.ring.base, &w.0)
    }

    /// Odometer index of a codeword, recovered from its top `k` coordinates;
    /// `None` when the vector is not in the code.
    pub fn message_index(&self, w: &[Sym]) -> Option<u64> {
        let bf = &self.ring.base;
        let k = self.dim();
        let d = self.genpoly.len() - 1;
        let mut msg = vec![0 as Sym; k];
        for j in (0..k).rev() {
            let mut v = w[d + j];
            for l in (j + 1)..k.min(j + d + 1) {
                v = bf.sub(v, bf.mul(msg[l], self.genpoly[d + j - l]));
            }
            msg[j] = v;
        }
        if self.encode(&msg).0 != w {
            return None;
        }
        let q = self.ring.qq();
        Some(msg.iter().rev().fold(0u64, |acc, &s| acc * q + s as u64))
    }

    /// Calls `f` on every codeword whose top message digit is `top`, in odometer
    /// order of the remaining digits.
    fn walk_chunk(&self, top: Sym, mut f: impl FnMut(&[Sym], usize)) {
        let bf = &self.ring.base;
        let q = self.ring.q.q as usize;
        let k = self.dim();
        let n = self.len();
        let glen = self.genpoly.len();
        let mut c = vec![0 as Sym; n];
        if top != 0 {
            for (x, &g) in c[k - 1..].iter_mut().zip(&self.genpoly) {
                *x = bf.mul(top, g);
            }
        }
        let mut weight = c.iter().filter(|&&s| s != 0).count();
        f(&c, weight);
        if k == 1 {
            return;
        }
        // steps[old] = (sym(old + 1) - sym(old)) * g, placed at offset i.
        let steps: Vec<Vec<Sym>> = (0..q)
            .map(|old| {
                let new = ((old + 1) % q) as Sym;
                let delta = bf.sub(new, old as Sym);
                self.genpoly.iter().map(|&g| bf.mul(delta, g)).collect()
            })
            .collect();
        let mut digits = vec![0usize; k - 1];
        loop {
            let mut i = 0;
            loop {
                if i == k - 1 {
                    return;
                }
                let old = digits[i];
                for (x, &y) in c[i..i + glen].iter_mut().zip(&steps[old]) {
                    let before = *x != 0;
                    *x = bf.add(*x, y);
                    let after = *x != 0;
                    weight = weight + after as usize - before as usize;
                }
                digits[i] = (old + 1) % q;
                if digits[i] != 0 {
                    break;
                }
                i += 1;
            }
            f(&c, weight);
        }
    }

    /// Every codeword, concatenated in odometer order (index = message index).
    pub fn all_codewords(&self, cap: u64) -> Result<Vec<Sym>> {
        let size = self.check_cap("code", cap)?;
        let mut out = Vec::with_capacity(size as usize * self.len());
        for top in 0..self.ring.q.q as usize {
            self.walk_chunk(top as Sym, |c, _| out.extend_from_slice(c));
        }
        Ok(out)
    }

    pub fn enumerate_weights(&self, cap: u64) -> Result<WeightDist> {
        self.check_cap("enumeration", cap)?;
        let n = self.len();
        let q = self.ring.q.q as usize;
        let chunk = |top: usize| {
            let mut counts = vec![0u64; n + 1];
            self.walk_chunk(top as Sym, |_, w| counts[w] += 1);
            counts
        };
        let merge = |mut a: Vec<u64>, b: Vec<u64>| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        };
        #[cfg(feature = "parallel")]
        let counts = {
            use rayon::prelude::*;
            (0..q).into_par_iter().map(chunk).reduce(|| vec![0u64; n + 1], merge)
        };
        #[cfg(not(feature = "parallel"))]
        let counts = (0..q).map(chunk).fold(vec![0u64; n + 1], merge);
        Ok(WeightDist { counts })
    }
}

/// Counts `A_0..A_n` of codewords per Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDist {
    pub counts: Vec<u64>,
}

impl WeightDist {
    /// Number of distinct nonzero weights.
    pub fn ell(&self) -> usize {
        self.counts.iter().skip(1).filter(|&&a| a > 0).count()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        (1..self.counts.len()).filter(|&i| self.counts[i] > 0).collect()
    }

    /// Rendering such as `1+16x^3+64x^6`.
    pub fn enumerator(&self) -> String {
        let mut terms = Vec::new();
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            terms.push(match (i, a) {
                (0, a) => a.to_string(),
                (1, 1) => "x".to_string(),
                (1, a) => format!("{a}x"),
                (i, 1) => format!("x^{i}"),
                (i, a) => format!("{a}x^{i}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl Serialize for WeightDist {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WeightDist", 3)?;
        st.serialize_field("counts", &self.counts)?;
        st.serialize_field("ell", &self.ell())?;
        st.serialize_field("enumerator", &self.enumerator())?;
        st.end()
    }
}

/// `e_t = (1/n) sum_{j in coset t} sum_l zeta^{-j l} x^l` over the splitting field.
pub fn primitive_idempotent(ring: &ConstaRing, t: usize) -> Result<Vec<FieldElem>> {
    let f = &ring.field;
    let n = ring.n;
    if n % ring.q.p as u64 == 0 {
        return Err(Error::CharDividesN(ring.q.p as u64, n));
    }
    let coset = ring
        .table
        .cosets
        .get(t)
        .ok_or_else(|| Error::InvalidParameter(format!("no coset with index {t}")))?;
    let n_inv = f.inv(f.from_int((n % ring.q.p as u64) as i64))?;
    let rn = ring.rn() as i64;
    (0..n as i64)
        .map(|l| {
            let mut acc = FieldElem::ZERO;
            for &j in &coset.elements {
                let e = (-(j as i64) * l).rem_euclid(rn);
                acc = f.add(acc, f.pow(ring.roots.zeta, e)?);
            }
            Ok(f.mul(acc, n_inv))
        })
        .collect()
}

/// The primitive idempotent as a word over `F_q`.
pub fn idempotent_word(ring: &ConstaRing, t: usize) -> Result<Codeword> {
    primitive_idempotent(ring, t)?
        .into_iter()
        .map(|c| ring.base.from_field(c).ok_or(Error::SubfieldViolation))
        .collect::<Result<Vec<_>>>()
        .map(Codeword)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(q: u64, n: u64, lambda: &str) -> Arc<ConstaRing> {
        Arc::new(
            ConstaRing::new(
                PrimePower::from_q(q).unwrap(),
                n,
                lambda.parse().unwrap(),
                crate::gf::DEFAULT_FIELD_CAP,
            )
            .unwrap(),
        )
    }

    #[test]
    fn lambda_parsing() {
        assert_eq!("1".parse::<LambdaSpec>().unwrap(), LambdaSpec::Int(1));
        assert_eq!("-1".parse::<LambdaSpec>().unwrap(), LambdaSpec::Int(-1));
        assert_eq!("xi^4".parse::<LambdaSpec>().unwrap(), LambdaSpec::XiPow(4));
        assert_eq!("xi".parse::<LambdaSpec>().unwrap(), LambdaSpec::XiPow(1));
        assert!("y^2".parse::<LambdaSpec>().is_err());
        let q9 = PrimePower::from_q(9).unwrap();
        assert_eq!(LambdaSpec::XiPow(4).order(q9).unwrap(), 2);
        assert_eq!(LambdaSpec::XiPow(0).order(q9).unwrap(), 1);
        assert_eq!(LambdaSpec::Int(2).order(q9).unwrap(), 2);
        assert_eq!(LambdaSpec::Int(3).order(q9), Err(Error::ZeroElement));
    }

    #[test]
    fn negacyclic_length_eight() {
        let r = ring(3, 8, "-1");
        let c = build_code(&r, &[1]).unwrap();
        assert_eq!(c.dim(), 4);
        let w = c.enumerate_weights(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(w.enumerator(), "1+16x^3+64x^6");
        assert_eq!(w.ell(), 2);
    }

    #[test]
    fn full_space() {
        let r = ring(3, 4, "-1");
        let all: Vec<usize> = (0..r.table.len()).collect();
        let c = build_code(&r, &all).unwrap();
        assert_eq!(c.genpoly(), &[1]);
        assert_eq!(c.dim(), 4);
        let w = c.enumerate_weights(DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(w.counts, vec![1, 8, 24, 32, 16]);
        assert_eq!(w.enumerator(), "1+8x+24x^2+32x^3+16x^4");
    }

    #[test]
    fn selection_errors() {
        let r = ring(3, 8, "-1");
        assert!(matches!(build_code(&r, &[]), Err(Error::EmptySelection)));
        assert!(build_code(&r, &[7]).is_err());
        let c = build_code(&r, &[1]).unwrap();
        assert!(c.enumerate_weights(10).unwrap_err().is_cap());
    }

    #[test]
    fn membership_and_indexing() {
        let r = ring(3, 8, "-1");
        let c = build_code(&r, &[1]).unwrap();
        assert!(c.contains(&Codeword::zero(8)));
        for row in c.genmatrix() {
            assert!(c.contains(&Codeword(row.clone())));
        }
        let mut e0 = vec![0; 8];
        e0[0] = 1;
        assert!(!c.contains(&Codeword(e0.clone())));
        assert_eq!(c.message_index(&e0), None);
        let all = c.all_codewords(1 << 20).unwrap();
        for (i, w) in all.chunks(8).enumerate() {
            assert_eq!(c.message_index(w), Some(i as u64));
        }
    }

    #[test]
    fn idempotents_of_length_eight() {
        let r = ring(3, 8, "-1");
        let e0 = idempotent_word(&r, 0).unwrap();
        let e1 = idempotent_word(&r, 1).unwrap();
        assert_eq!(r.mul(&e0.0, &e0.0), e0.0);
        assert_eq!(r.mul(&e0.0, &e1.0), vec![0; 8]);
        let sum: Vec<Sym> = e0.0.iter().zip(&e1.0).map(|(&a, &b)| r.base.add(a, b)).collect();
        let mut one = vec![0; 8];
        one[0] = 1;
        assert_eq!(sum, one);
    }

    #[test]
    fn genpoly_divides_defining_polynomial() {
        let r = ring(5, 39, "-1");
        let c = build_code(&r, &[0, 9]).unwrap();
        assert_eq!(c.dim(), 5);
        let bf = &r.base;
        let g = c.genpoly();
        let d = g.len() - 1;
        let mut rem = [0 as Sym; 40];
        rem[39] = 1;
        rem[0] = bf.neg(bf.lambda());
        for top in (d..rem.len()).rev() {
            let f = rem[top];
            if f != 0 {
                for (i, &gi) in g.iter().enumerate() {
                    let pos = top - d + i;
                    rem[pos] = bf.sub(rem[pos], bf.mul(f, gi));
                }
            }
        }
        assert!(rem.iter().all(|&s| s == 0));
    }
}
