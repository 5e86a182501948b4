//! Finite fields `F_{p^N}` realised with log/exp/Zech tables.
//!
//! Elements are stored as discrete logarithms relative to the canonical
//! primitive element: the smallest element (by base-`p` encoding of its
//! polynomial coordinates) whose order is `p^N - 1`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::modring::{factorize, is_prime};

pub const DEFAULT_FIELD_CAP: u64 = 1 << 22;
const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub p: u32,
    pub e: u32,
    pub q: u32,
}

impl PrimePower {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("exponent must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidParameter(format!("{p}^{e} is too large")))?;
        Ok(PrimePower { p, e, q: q as u32 })
    }

    pub fn from_q(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let f = factorize(q);
        if f.len() != 1 {
            return Err(Error::NotPrimePower(q));
        }
        PrimePower::new(f[0].0 as u32, f[0].1)
    }
}

impl FromStr for PrimePower {
    type Err = Error;

    /// Accepts `9` or `3^2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse prime power '{s}'"));
        match s.trim().split_once('^') {
            Some((p, e)) => {
                let p: u32 = p.trim().parse().map_err(|_| bad())?;
                let e: u32 = e.trim().parse().map_err(|_| bad())?;
                PrimePower::new(p, e)
            }
            None => PrimePower::from_q(s.trim().parse().map_err(|_| bad())?),
        }
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Either zero or a discrete log reduced modulo `p^N - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(NONE);
    pub const ONE: FieldElem = FieldElem(0);

    pub fn is_zero(self) -> bool {
        self.0 == NONE
    }

    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0)
    }
}

#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    degree: u32,
    size: u32,
    modulus: Vec<u32>,
    primitive_poly: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

pub fn build_field(p: u32, degree: u32) -> Result<FieldCtx> {
    FieldCtx::build(p, degree, DEFAULT_FIELD_CAP)
}

impl FieldCtx {
    pub fn build(p: u32, degree: u32, cap: u64) -> Result<FieldCtx> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if degree == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive".into()));
        }
        let size = (p as u128).checked_pow(degree.min(64)).unwrap_or(u128::MAX);
        let limit = cap.min(1 << 31) as u128;
        if degree > 64 || size > limit {
            return Err(Error::CapExceeded { what: "field", size, cap: cap as u128 });
        }
        let size = size as u32;
        let modulus = smallest_irreducible(p, degree as usize);
        let order = size - 1;
        let primes: Vec<u64> = factorize(order as u64).into_iter().map(|f| f.0).collect();
        let one = unit_poly(degree as usize);
        let mut primitive_poly = None;
        for enc in 1..size {
            let g = decode_poly(enc, p, degree as usize);
            let is_primitive = primes
                .iter()
                .all(|&l| poly_pow_mod(&g, order as u64 / l, &modulus, p) != one);
            if is_primitive {
                primitive_poly = Some(g);
                break;
            }
        }
        let primitive_poly = primitive_poly.expect("a finite field has a primitive element");

        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![NONE; size as usize];
        let mut cur = one;
        for i in 0..order {
            let enc = encode_poly(&cur, p);
            debug_assert_eq!(log[enc as usize], NONE, "primitive element repeats");
            exp.push(enc);
            log[enc as usize] = i;
            cur = mul_by_sparse(&cur, &primitive_poly, &modulus, p);
        }
        let zech = exp
            .iter()
            .map(|&v| {
                let c0 = v % p;
                log[(v - c0 + (c0 + 1) % p) as usize]
            })
            .collect();
        Ok(FieldCtx { p, degree, size, modulus, primitive_poly, exp, log, zech })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Order of the multiplicative group, `p^N - 1`.
    pub fn order(&self) -> u32 {
        self.size - 1
    }

    /// Ascending coefficients over `F_p`, monic of degree `N`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Polynomial coordinates of the canonical primitive element.
    pub fn primitive_coords(&self) -> &[u32] {
        &self.primitive_poly
    }

    pub fn exp_table(&self) -> &[u32] {
        &self.exp
    }

    pub fn primitive(&self) -> FieldElem {
        self.from_log(1)
    }

    pub fn from_log(&self, l: u64) -> FieldElem {
        FieldElem((l % self.order() as u64) as u32)
    }

    /// Base-`p` encoding `sum c_i p^i` of the polynomial coordinates.
    pub fn encode(&self, x: FieldElem) -> u32 {
        match x.log() {
            None => 0,
            Some(l) => self.exp[l as usize],
        }
    }

    pub fn decode(&self, enc: u32) -> Result<FieldElem> {
        if enc >= self.size {
            return Err(Error::InvalidParameter(format!("encoding {enc} out of range")));
        }
        Ok(FieldElem(self.log[enc as usize]))
    }

    pub fn coords(&self, x: FieldElem) -> Vec<u32> {
        decode_poly(self.encode(x), self.p, self.degree as usize)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, c: i64) -> FieldElem {
        let c = c.rem_euclid(self.p as i64) as u32;
        FieldElem(self.log[c as usize])
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let s = a.0 as u64 + b.0 as u64;
        FieldElem((s % self.order() as u64) as u32)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let o = self.order();
        let d = if b.0 >= a.0 { b.0 - a.0 } else { b.0 + (o - a.0) };
        let z = self.zech[d as usize];
        if z == NONE {
            FieldElem::ZERO
        } else {
            FieldElem(((a.0 as u64 + z as u64) % o as u64) as u32)
        }
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a.is_zero() || self.p == 2 {
            return a;
        }
        self.mul(a, FieldElem(self.order() / 2))
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        match a.log() {
            None => Err(Error::ZeroElement),
            Some(0) => Ok(a),
            Some(l) => Ok(FieldElem(self.order() - l)),
        }
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for a signed exponent; `0^0 = 1`, negative powers of zero fail.
    pub fn pow(&self, a: FieldElem, e: i64) -> Result<FieldElem> {
        match a.log() {
            None if e == 0 => Ok(FieldElem::ONE),
            None if e > 0 => Ok(FieldElem::ZERO),
            None => Err(Error::ZeroElement),
            Some(l) => {
                let o = self.order() as i128;
                Ok(FieldElem((l as i128 * e as i128).rem_euclid(o) as u32))
            }
        }
    }

    pub fn element_order(&self, x: FieldElem) -> Result<u64> {
        let l = x.log().ok_or(Error::ZeroElement)? as u64;
        let o = self.order() as u64;
        Ok(o / l.gcd(&o))
    }

    /// Whether `x` lies in the subgroup-with-zero of size `s`, i.e. the subfield
    /// `F_s` when `s` is a power of `p` dividing the field appropriately.
    pub fn subfield_membership(&self, x: FieldElem, s: u64) -> Result<bool> {
        let o = self.order() as u64;
        if s < 2 || o % (s - 1) != 0 {
            return Err(Error::BadSubfieldSize(s));
        }
        Ok(match x.log() {
            None => true,
            Some(l) => l as u64 % (o / (s - 1)) == 0,
        })
    }

    /// The canonical generator `g^{(p^N-1)/(s-1)}` of `F_s^*`.
    pub fn subfield_generator(&self, s: u64) -> Result<FieldElem> {
        let o = self.order() as u64;
        if s < 2 || o % (s - 1) != 0 {
            return Err(Error::BadSubfieldSize(s));
        }
        Ok(self.from_log(o / (s - 1)))
    }
}

fn unit_poly(n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[0] = 1;
    v
}

fn decode_poly(mut enc: u32, p: u32, n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    for c in v.iter_mut() {
        *c = enc % p;
        enc /= p;
    }
    v
}

fn encode_poly(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// `v * x mod f` for `v` of length `N` and monic `f` of degree `N`.
fn mul_by_x(v: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let n = v.len();
    let lead = v[n - 1] as u64;
    let mut out = vec![0u32; n];
    for i in (1..n).rev() {
        out[i] = v[i - 1];
    }
    if lead != 0 {
        let p = p as u64;
        for i in 0..n {
            let t = (out[i] as u64 + (p - lead) * f[i] as u64) % p;
            out[i] = t as u32;
        }
    }
    out
}

/// `v * g mod f`, cheap when `g` has low degree.
fn mul_by_sparse(v: &[u32], g: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let top = g.iter().rposition(|&c| c != 0).unwrap_or(0);
    let mut acc = vec![0u32; v.len()];
    let mut shifted = v.to_vec();
    for (j, &gj) in g.iter().enumerate().take(top + 1) {
        if gj != 0 {
            for (a, &s) in acc.iter_mut().zip(&shifted) {
                *a = ((*a as u64 + gj as u64 * s as u64) % p as u64) as u32;
            }
        }
        if j < top {
            shifted = mul_by_x(&shifted, f, p);
        }
    }
    acc
}

fn poly_pow_mod(g: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut acc = unit_poly(g.len());
    let mut base = g.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_by_sparse(&acc, &base, f, p);
        }
        base = mul_by_sparse(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

/// Remainder of `a` modulo the monic polynomial `b` (ascending coefficients).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    while r.len() > db {
        let lead = r.pop().expect("nonempty");
        if lead != 0 {
            let off = r.len() - db;
            for i in 0..db {
                r[off + i] = (r[off + i] + (p - lead) * b[i] as u64) % p;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Monic polynomials of degree `d` in lexicographic order of
/// `(c_0, c_1, ..., c_{d-1})`.
fn monic_candidates(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u64).pow(d as u32);
    (0..total).map(move |t| {
        let mut c = vec![0u32; d + 1];
        let mut t = t;
        for j in (0..d).rev() {
            c[j] = (t % p as u64) as u32;
            t /= p as u64;
        }
        c[d] = 1;
        c
    })
}

fn smallest_irreducible(p: u32, degree: usize) -> Vec<u32> {
    let mut lower: Vec<Vec<u32>> = Vec::new();
    for d in 1..=degree / 2 {
        let found: Vec<Vec<u32>> = monic_candidates(p, d)
            .filter(|c| has_no_factor(c, &lower, p))
            .collect();
        lower.extend(found);
    }
    monic_candidates(p, degree)
        .find(|c| has_no_factor(c, &lower, p))
        .expect("irreducible polynomials exist in every degree")
}

fn has_no_factor(c: &[u32], irreducibles: &[Vec<u32>], p: u32) -> bool {
    let d = c.len() - 1;
    irreducibles
        .iter()
        .take_while(|f| 2 * (f.len() - 1) <= d)
        .all(|f| poly_rem(c, f, p).iter().any(|&x| x != 0))
}

/// The rn-th root data for the ring `F_q[x]/(x^n - lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub q: u64,
    pub n: u64,
    pub r: u64,
    pub lambda: FieldElem,
    pub omega: FieldElem,
    /// Exponent `v` with `omega = g^v`.
    pub omega_exp: u64,
    pub zeta: FieldElem,
    pub xi: FieldElem,
}

pub fn make_root_system(ctx: &FieldCtx, q: u64, lambda: FieldElem, n: u64) -> Result<RootSystem> {
    let lam_log = lambda.log().ok_or(Error::ZeroElement)? as u64;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if !ctx.subfield_membership(lambda, q)? {
        return Err(Error::NotInSubfield(q));
    }
    if n.gcd(&q) != 1 {
        return Err(Error::NotCoprime(n, q));
    }
    let order = ctx.order() as u64;
    let r = ctx.element_order(lambda)?;
    let rn = r * n;
    if order % rn != 0 {
        return Err(Error::IncompatibleOrder { rn, order });
    }
    let step = order / r;
    let v = (1..=order.max(1))
        .find(|&v| v.gcd(&order) == 1 && (v as u128 * step as u128 % order as u128) as u64 == lam_log)
        .ok_or(Error::NoSolution)?;
    let omega = ctx.from_log(v);
    let zeta = ctx.pow(omega, (order / rn) as i64)?;
    let xi = ctx.pow(omega, (order / (q - 1)) as i64)?;
    Ok(RootSystem { q, n, r, lambda, omega, omega_exp: v, zeta, xi })
}

/// Compact symbol for an element of the base field `F_q`: 0 is zero and `1 + e`
/// stands for `xi^e` where `xi` is the root system's base-field generator.
pub type Sym = u16;

/// Log-indexed view of the base subfield `F_q` inside a field context.
#[derive(Clone, Debug)]
pub struct BaseField {
    q: u32,
    qm1: u32,
    stride: u32,
    big_log: Vec<u32>,
    from_big: Vec<u32>,
    zech: Vec<u32>,
    neg_exp: u32,
    lambda_exp: u32,
}

impl BaseField {
    pub fn new(ctx: &FieldCtx, roots: &RootSystem) -> Result<BaseField> {
        let q = roots.q;
        if q > u16::MAX as u64 + 1 {
            return Err(Error::InvalidParameter(format!("base field size {q} exceeds 65536")));
        }
        let order = ctx.order() as u64;
        if order % (q - 1) != 0 {
            return Err(Error::BadSubfieldSize(q));
        }
        let qm1 = (q - 1) as u32;
        let stride = (order / (q - 1)) as u32;
        let xi = roots.xi.log().ok_or(Error::ZeroElement)?;
        let big_log: Vec<u32> = (0..qm1)
            .map(|e| ((xi as u64 * e as u64) % order) as u32)
            .collect();
        let mut from_big = vec![NONE; qm1 as usize];
        for (e, &l) in big_log.iter().enumerate() {
            from_big[(l / stride) as usize] = e as u32;
        }
        let zech = big_log
            .iter()
            .map(|&l| match ctx.add(FieldElem::ONE, FieldElem(l)).log() {
                None => NONE,
                Some(s) => from_big[(s / stride) as usize],
            })
            .collect();
        let neg_exp = if q % 2 == 0 { 0 } else { qm1 / 2 };
        let lambda_exp = (qm1 as u64 / roots.r) as u32;
        Ok(BaseField { q: q as u32, qm1, stride, big_log, from_big, zech, neg_exp, lambda_exp })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Exponent `j` with `lambda = xi^j`.
    pub fn lambda_exp(&self) -> u32 {
        self.lambda_exp
    }

    pub fn lambda(&self) -> Sym {
        self.from_exp(self.lambda_exp as u64)
    }

    pub fn from_exp(&self, e: u64) -> Sym {
        (1 + e % self.qm1 as u64) as Sym
    }

    pub fn exp_of(&self, s: Sym) -> Option<u32> {
        (s != 0).then(|| s as u32 - 1)
    }

    pub fn to_field(&self, s: Sym) -> FieldElem {
        match self.exp_of(s) {
            None => FieldElem::ZERO,
            Some(e) => FieldElem(self.big_log[e as usize]),
        }
    }

    pub fn from_field(&self, x: FieldElem) -> Option<Sym> {
        match x.log() {
            None => Some(0),
            Some(l) if l % self.stride == 0 => {
                Some(1 + self.from_big[(l / self.stride) as usize] as Sym)
            }
            Some(_) => None,
        }
    }

    pub fn from_int(&self, ctx: &FieldCtx, c: i64) -> Sym {
        self.from_field(ctx.from_int(c)).expect("prime field lies in every subfield")
    }

    /// Multiply by `xi^e`.
    #[inline]
    pub fn scale(&self, s: Sym, e: u32) -> Sym {
        if s == 0 {
            0
        } else {
            (1 + (s as u32 - 1 + e) % self.qm1) as Sym
        }
    }

    #[inline]
    pub fn mul(&self, a: Sym, b: Sym) -> Sym {
        if a == 0 || b == 0 {
            0
        } else {
            self.scale(a, b as u32 - 1)
        }
    }

    #[inline]
    pub fn add(&self, a: Sym, b: Sym) -> Sym {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let (ea, eb) = (a as u32 - 1, b as u32 - 1);
        let d = if eb >= ea { eb - ea } else { eb + self.qm1 - ea };
        let z = self.zech[d as usize];
        if z == NONE {
            0
        } else {
            (1 + (ea + z) % self.qm1) as Sym
        }
    }

    #[inline]
    pub fn neg(&self, a: Sym) -> Sym {
        self.scale(a, self.neg_exp)
    }

    #[inline]
    pub fn sub(&self, a: Sym, b: Sym) -> Sym {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Sym) -> Result<Sym> {
        match self.exp_of(a) {
            None => Err(Error::ZeroElement),
            Some(e) => Ok((1 + (self.qm1 - e) % self.qm1) as Sym),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_of_two() {
        let f = build_field(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.size(), 2);
        assert_eq!(f.element_order(f.primitive()).unwrap(), 1);
        assert_eq!(f.add(FieldElem::ONE, FieldElem::ONE), FieldElem::ZERO);
    }

    #[test]
    fn moduli_are_smallest_irreducibles() {
        assert_eq!(build_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(build_field(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(build_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(build_field(2, 4).unwrap().modulus(), &[1, 0, 0, 1, 1]);
        assert_eq!(build_field(5, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn orders_and_primitivity() {
        let f81 = build_field(3, 4).unwrap();
        assert_eq!(f81.size(), 81);
        assert_eq!(f81.element_order(f81.primitive()).unwrap(), 80);
        assert_eq!(f81.element_order(FieldElem::ONE).unwrap(), 1);
        let f9 = build_field(3, 2).unwrap();
        assert_eq!(f9.element_order(f9.from_int(2)).unwrap(), 2);
        assert_eq!(f9.element_order(FieldElem::ZERO), Err(Error::ZeroElement));
        let f1024 = build_field(2, 10).unwrap();
        assert_eq!(f1024.element_order(f1024.primitive()).unwrap(), 1023);
    }

    #[test]
    fn caps_and_primes() {
        assert!(matches!(build_field(4, 2), Err(Error::NotPrime(4))));
        assert!(build_field(2, 23).unwrap_err().is_cap());
        assert!(FieldCtx::build(3, 5, 100).unwrap_err().is_cap());
    }

    #[test]
    fn subfields() {
        let f = build_field(3, 4).unwrap();
        assert!(f.subfield_membership(FieldElem::ZERO, 3).unwrap());
        let xi = f.subfield_generator(3).unwrap();
        assert!(f.subfield_membership(xi, 3).unwrap());
        let zeta = f.from_log(5);
        assert_eq!(f.element_order(zeta).unwrap(), 16);
        assert!(!f.subfield_membership(zeta, 3).unwrap());
        assert!(matches!(f.subfield_membership(xi, 4), Err(Error::BadSubfieldSize(4))));
        let members = (0..81)
            .filter(|&e| {
                let x = f.decode(e).unwrap();
                f.pow(x, 3).unwrap() == x
            })
            .count();
        assert_eq!(members, 3);
    }

    #[test]
    fn root_systems() {
        let f = build_field(3, 4).unwrap();
        let lam = f.from_int(-1);
        let rs = make_root_system(&f, 3, lam, 8).unwrap();
        assert_eq!(rs.r, 2);
        assert_eq!(f.pow(rs.zeta, 8).unwrap(), lam);
        assert_eq!(f.element_order(rs.zeta).unwrap(), 16);
        assert_eq!(f.element_order(rs.xi).unwrap(), 2);
        assert_eq!(f.element_order(rs.omega).unwrap(), 80);

        let cyc = make_root_system(&f, 3, FieldElem::ONE, 8).unwrap();
        assert_eq!(cyc.omega, f.primitive());
        assert_eq!(f.pow(cyc.zeta, 8).unwrap(), FieldElem::ONE);

        let f81 = build_field(3, 4).unwrap();
        let two = f81.from_int(2);
        let rs = make_root_system(&f81, 9, two, 40).unwrap();
        assert_eq!(rs.r, 2);
        assert_eq!(f81.pow(rs.zeta, 40).unwrap(), two);

        assert!(matches!(
            make_root_system(&f, 3, lam, 7),
            Err(Error::IncompatibleOrder { .. })
        ));
        assert!(matches!(make_root_system(&f, 3, lam, 6), Err(Error::NotCoprime(..))));
    }

    #[test]
    fn field_of_1024_for_length_eleven() {
        assert_eq!(crate::modring::ord_mod(32, 341).unwrap(), 2);
        let f = build_field(2, 10).unwrap();
        let theta = f.subfield_generator(32).unwrap();
        let rs = make_root_system(&f, 32, theta, 11).unwrap();
        assert_eq!(rs.r, 31);
        assert_eq!(f.pow(rs.zeta, 11).unwrap(), theta);
    }

    #[test]
    fn base_field_symbols() {
        let f = build_field(3, 4).unwrap();
        let rs = make_root_system(&f, 9, f.from_int(-1), 40).unwrap();
        let b = BaseField::new(&f, &rs).unwrap();
        for a in 0..9u16 {
            assert_eq!(b.from_field(b.to_field(a)), Some(a));
            for c in 0..9u16 {
                let big = f.add(b.to_field(a), b.to_field(c));
                assert_eq!(b.to_field(b.add(a, c)), big);
                let big = f.mul(b.to_field(a), b.to_field(c));
                assert_eq!(b.to_field(b.mul(a, c)), big);
            }
            assert_eq!(b.add(a, b.neg(a)), 0);
        }
        assert_eq!(b.to_field(b.lambda()), f.from_int(-1));
        assert_eq!(b.from_field(rs.zeta), None);
    }

    #[test]
    fn parse_prime_powers() {
        assert_eq!("9".parse::<PrimePower>().unwrap(), PrimePower { p: 3, e: 2, q: 9 });
        assert_eq!("2^5".parse::<PrimePower>().unwrap().q, 32);
        assert!("12".parse::<PrimePower>().is_err());
        assert!("4^2".parse::<PrimePower>().is_err());
        assert!("x".parse::<PrimePower>().is_err());
    }
}
