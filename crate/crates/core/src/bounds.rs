//! Closed-form orbit counts and upper bounds, in exact big-integer arithmetic.
//!
//! Every division is checked to be exact; a remainder is reported as
//! [`Error::NonIntegralResult`] rather than rounded.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::code::ConstaRing;
use crate::error::{Error, Result};
use crate::modring::{divisors, euler_phi, mod_inverse, ord_mod};

pub type Big = BigUint;

fn big(x: u64) -> Big {
    Big::from(x)
}

/// `q^e - 1`.
fn qpow_m1(q: u64, e: u64) -> Big {
    big(q).pow(e as u32) - Big::one()
}

fn gcd_all<'a>(vals: impl IntoIterator<Item = &'a Big>) -> Big {
    vals.into_iter().fold(Big::zero(), |g, v| g.gcd(v))
}

fn exact_div(a: &Big, b: &Big, what: &str) -> Result<Big> {
    if b.is_zero() {
        return Err(Error::NonIntegralResult(format!("{what}: division by zero")));
    }
    let (quo, rem) = a.div_rem(b);
    if !rem.is_zero() {
        return Err(Error::NonIntegralResult(format!("{what}: {a} / {b}")));
    }
    Ok(quo)
}

fn gcd_u(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetData {
    pub index: usize,
    pub rep: u64,
    pub a: u64,
    pub k: u64,
    #[serde(skip)]
    pub elements: Vec<u64>,
}

/// Parameters shared by every formula: `q = p^e`, `r`, `n`, `rn`, `m`, and the
/// selected cosets in table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundInputs {
    pub q: u64,
    pub p: u64,
    pub e: u32,
    pub r: u64,
    pub n: u64,
    pub rn: u64,
    pub m: u64,
    pub cosets: Vec<CosetData>,
}

impl BoundInputs {
    pub fn from_ring(ring: &ConstaRing, selected: &[usize]) -> Result<BoundInputs> {
        let selected = ring.selection(selected)?;
        let cosets = selected
            .iter()
            .map(|&t| {
                let c = &ring.table.cosets[t];
                CosetData { index: t, rep: c.rep, a: c.a, k: c.k, elements: c.elements.clone() }
            })
            .collect();
        Ok(BoundInputs {
            q: ring.qq(),
            p: ring.q.p as u64,
            e: ring.q.e,
            r: ring.r(),
            n: ring.n,
            rn: ring.rn(),
            m: ring.m(),
            cosets,
        })
    }

    fn unit(&self, c: &CosetData) -> u64 {
        1 + self.r * c.a
    }

    /// `(1 + r a) (q^k - 1) / (rn)`.
    fn scaled_rep(&self, c: &CosetData, what: &str) -> Result<Big> {
        exact_div(&(big(self.unit(c)) * qpow_m1(self.q, c.k)), &big(self.rn), what)
    }
}

/// Orbits of `<mu_q, rho, sigma>` on an irreducible code with coset `c`:
/// `(1/k) sum_{h | k} phi(k/h) gcd(q^h - 1, (q^k-1)/(q-1), (1+ra)(q^k-1)/(rn))`.
pub fn mu_orbits_irreducible(inp: &BoundInputs, c: &CosetData) -> Result<Big> {
    let k = c.k;
    if inp.m % k != 0 {
        return Err(Error::PreconditionFailed(format!("coset size {k} does not divide m = {}", inp.m)));
    }
    let qk = qpow_m1(inp.q, k);
    let norm = exact_div(&qk, &big(inp.q - 1), "(q^k-1)/(q-1)")?;
    let rep = inp.scaled_rep(c, "irreducible mu count")?;
    let mut sum = Big::zero();
    for h in divisors(k) {
        let g = gcd_all([&qpow_m1(inp.q, h), &norm, &rep]);
        sum += big(euler_phi(k / h)) * g;
    }
    exact_div(&sum, &big(k), "irreducible mu count")
}

/// Orbits of `<rho, sigma>` on an irreducible code:
/// `gcd((q^k-1)/(q-1), (1+ra)(q^k-1)/(rn))`.
pub fn rho_sigma_orbits_irreducible(inp: &BoundInputs, c: &CosetData) -> Result<Big> {
    let norm = exact_div(&qpow_m1(inp.q, c.k), &big(inp.q - 1), "(q^k-1)/(q-1)")?;
    Ok(norm.gcd(&inp.scaled_rep(c, "irreducible rho-sigma count")?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub pass: bool,
}

/// Inequalities linking the two irreducible counts, plus the equality on the
/// family where the gap is known exactly.
pub fn irreducible_count_checks(inp: &BoundInputs, c: &CosetData) -> Result<Vec<Check>> {
    let mu = mu_orbits_irreducible(inp, c)?;
    let rs = rho_sigma_orbits_irreducible(inp, c)?;
    let k = big(c.k);
    let one = Big::one();
    let lower = (&k - &one + &rs).div_ceil(&k);
    let mut out = vec![Check {
        check: format!("mu count {mu} >= ceil((k-1+{rs})/k) = {lower}"),
        pass: mu >= lower,
    }];
    let gap_max = (&k - &one) * (&rs - &one) / &k;
    let gap_ok = rs >= mu && (&rs - &mu) <= gap_max;
    out.push(Check {
        check: format!("0 <= {rs} - {mu} <= {gap_max}"),
        pass: gap_ok,
    });
    if let Some(nn) = sharp_family_n(inp, c) {
        let expect = big((c.k - 1) * (nn - 1) / c.k);
        let gap = if rs >= mu { &rs - &mu } else { Big::zero() };
        out.push(Check {
            check: format!("gap {gap} = (k-1)(N-1)/k = {expect} with N = {nn}"),
            pass: gap == expect && ((c.k - 1) * (nn - 1)) % c.k == 0,
        });
    }
    Ok(out)
}

/// `Some(N)` when k > 1 is prime, a = 0, n = (q^k-1)/(rN) with N > 1 and
/// gcd(q-1, N) = 1.
pub fn sharp_family_n(inp: &BoundInputs, c: &CosetData) -> Option<u64> {
    if c.k < 2 || !crate::modring::is_prime(c.k) || c.a != 0 {
        return None;
    }
    let qk = qpow_m1(inp.q, c.k);
    let (nn, rem) = qk.div_rem(&big(inp.rn));
    let nn = nn.to_u64()?;
    (rem.is_zero() && nn > 1 && gcd_u(inp.q - 1, nn) == 1).then_some(nn)
}

/// The per-`h` summand bounding the orbits on the part of the code whose
/// components are all nonzero exactly on `subset`.
pub fn subset_term(inp: &BoundInputs, subset: &[&CosetData], h: u64) -> Result<Big> {
    let q = inp.q;
    let i_big = big(q - 1);
    let it: Vec<Big> = subset
        .iter()
        .map(|c| exact_div(&qpow_m1(q, c.k), &qpow_m1(q, gcd_u(c.k, h)), "I_t"))
        .collect::<Result<_>>()?;
    let mut operands = vec![big(inp.n)];
    for (c, ic) in subset.iter().zip(&it) {
        let num = big(inp.unit(c)) * &i_big * ic;
        let den = big(inp.r) * i_big.gcd(ic);
        operands.push(exact_div(&num, &den, "subset term unit operand")?);
    }
    for i in 0..subset.len() {
        for j in (i + 1)..subset.len() {
            let diff = subset[j].a.abs_diff(subset[i].a);
            let num = big(diff) * &it[i] * &it[j];
            operands.push(exact_div(&num, &it[i].gcd(&it[j]), "subset term difference operand")?);
        }
    }
    let first = gcd_all(&operands);
    let second = it.iter().fold(i_big.clone(), |g, v| g.gcd(v));
    let prod = subset
        .iter()
        .fold(Big::one(), |acc, c| acc * qpow_m1(q, gcd_u(c.k, h)));
    Ok(first * second * prod)
}

/// `(1/(mn(q-1))) sum_{h<m} subset_term`.
pub fn subset_bound(inp: &BoundInputs, subset: &[&CosetData]) -> Result<Big> {
    let mut sum = Big::zero();
    for h in 0..inp.m {
        sum += subset_term(inp, subset, h)?;
    }
    exact_div(&sum, &big(inp.m * inp.n * (inp.q - 1)), "subset bound")
}

/// Nonempty subsets of the selection in ascending bitmask order.
pub fn subsets(inp: &BoundInputs) -> Result<Vec<Vec<&CosetData>>> {
    let s = inp.cosets.len();
    if s == 0 {
        return Err(Error::EmptySelection);
    }
    if s > 20 {
        return Err(Error::CapExceeded { what: "subset sum", size: 1 << s, cap: 1 << 20 });
    }
    Ok((1u64..(1 << s))
        .map(|mask| (0..s).filter(|i| mask >> i & 1 == 1).map(|i| &inp.cosets[i]).collect())
        .collect())
}

/// Upper bound on `<mu_q, rho, sigma>`-orbits for any selection.
pub fn mu_orbit_bound(inp: &BoundInputs) -> Result<Big> {
    let mut total = Big::zero();
    for s in subsets(inp)? {
        total += subset_bound(inp, &s)?;
    }
    Ok(total)
}

/// `prod (q^{k_i}-1) gcd(rn, (1+ra_1)(q-1), r(a_2-a_1), ...) / (rn(q-1))`.
pub fn rho_sigma_subset_term(inp: &BoundInputs, subset: &[&CosetData]) -> Result<Big> {
    let first = subset.first().ok_or(Error::EmptySelection)?;
    let mut ops = vec![big(inp.rn), big(inp.unit(first)) * big(inp.q - 1)];
    for c in &subset[1..] {
        ops.push(big(inp.r * c.a.abs_diff(first.a)));
    }
    let prod = subset.iter().fold(Big::one(), |acc, c| acc * qpow_m1(inp.q, c.k));
    exact_div(&(prod * gcd_all(&ops)), &big(inp.rn * (inp.q - 1)), "rho-sigma subset term")
}

/// Orbits of `<rho, sigma>` as a subset sum, for any selection.
pub fn rho_sigma_orbits(inp: &BoundInputs) -> Result<Big> {
    let mut total = Big::zero();
    for s in subsets(inp)? {
        total += rho_sigma_subset_term(inp, &s)?;
    }
    Ok(total)
}

/// Orders the pair so the first coset size divides the second.
pub fn divisible_order<'a>(
    a: &'a CosetData,
    b: &'a CosetData,
) -> Result<(&'a CosetData, &'a CosetData)> {
    if b.k % a.k == 0 {
        Ok((a, b))
    } else if a.k % b.k == 0 {
        Ok((b, a))
    } else {
        Err(Error::DivisibilityFailed(a.k, b.k))
    }
}

/// `<mu_q, rho, sigma>`-orbits on a two-coset code with `k_1 | k_2`.
pub fn mu_orbits_pair_divisible(inp: &BoundInputs, t1: &CosetData, t2: &CosetData) -> Result<Big> {
    if t2.k % t1.k != 0 {
        return Err(Error::DivisibilityFailed(t1.k, t2.k));
    }
    let q = inp.q;
    let s1 = mu_orbits_irreducible(inp, t1)?;
    let s2 = mu_orbits_irreducible(inp, t2)?;
    let qk1 = qpow_m1(q, t1.k);
    let qk2 = qpow_m1(q, t2.k);
    let qm1 = big(q - 1);
    let diff = big(t2.a.abs_diff(t1.a));
    let last = exact_div(&(diff * &qk1 * &qk2), &(big(inp.n) * &qm1), "pair difference operand")?;
    let rep2 = inp.scaled_rep(t2, "pair operand")?;
    let mut sum = Big::zero();
    for h in 0..inp.m {
        let g1 = qpow_m1(q, gcd_u(t1.k, h));
        let g2 = qpow_m1(q, gcd_u(t2.k, h));
        let a = exact_div(&(&qk1 * &g2), &(&qm1 * &g1), "pair norm operand")?;
        let c = exact_div(
            &(big(inp.unit(t1)) * &qk1 * &g2),
            &(big(inp.rn) * &g1),
            "pair first-rep operand",
        )?;
        let inner = gcd_all([&g2, &a, &rep2, &c]);
        sum += (g1 * inner).gcd(&last);
    }
    let s12 = exact_div(&sum, &big(inp.m), "pair cross term")?;
    Ok(s1 + s2 + s12)
}

/// `<mu_q, rho, sigma>`-orbits when the first coset has size 1.
pub fn mu_orbits_pair_unit(inp: &BoundInputs, t1: &CosetData, t2: &CosetData) -> Result<Big> {
    if t1.k != 1 {
        return Err(Error::ShapeMismatch(format!("first coset has size {}, expected 1", t1.k)));
    }
    let q = inp.q;
    let k = t2.k;
    let qk = qpow_m1(q, k);
    let norm = exact_div(&qk, &big(q - 1), "(q^k-1)/(q-1)")?;
    let rep2 = inp.scaled_rep(t2, "unit pair operand")?;
    let diff = exact_div(&(big(t2.a.abs_diff(t1.a)) * &qk), &big(inp.n), "unit pair difference")?;
    let mut sum = Big::zero();
    for h in divisors(k) {
        let qh = qpow_m1(q, h);
        let g = gcd_all([&qh, &norm, &rep2]) + qh.gcd(&diff);
        sum += big(euler_phi(k / h)) * g;
    }
    Ok(Big::one() + exact_div(&sum, &big(k), "unit pair count")?)
}

/// `<mu_q, rho, sigma>`-orbits on a two-coset code with equal sizes.
pub fn mu_orbits_pair_equal(inp: &BoundInputs, t1: &CosetData, t2: &CosetData) -> Result<Big> {
    if t1.k != t2.k {
        return Err(Error::ShapeMismatch(format!("coset sizes {} and {} differ", t1.k, t2.k)));
    }
    let q = inp.q;
    let k = t1.k;
    let qk = qpow_m1(q, k);
    let norm = exact_div(&qk, &big(q - 1), "(q^k-1)/(q-1)")?;
    let rep1 = inp.scaled_rep(t1, "equal pair operand")?;
    let rep2 = inp.scaled_rep(t2, "equal pair operand")?;
    let diff = exact_div(
        &(big(t2.a.abs_diff(t1.a)) * &qk * &qk),
        &(big(inp.n) * big(q - 1)),
        "equal pair difference",
    )?;
    let mut sum = Big::zero();
    for h in divisors(k) {
        let qh = qpow_m1(q, h);
        let g1 = gcd_all([&qh, &norm, &rep1]);
        let g2 = gcd_all([&qh, &norm, &rep2]);
        let g3 = (&qh * gcd_all([&qh, &norm, &rep1, &rep2])).gcd(&diff);
        sum += big(euler_phi(k / h)) * (g1 + g2 + g3);
    }
    exact_div(&sum, &big(k), "equal pair count")
}

fn coset_contains(c: &CosetData, x: u64) -> bool {
    c.elements.binary_search(&x).is_ok()
}

/// Per-`h` summands of the `mu_{-1}` extension count. With `doubled` the last
/// gcd operand carries an extra factor 2.
pub fn neg_mu_terms(inp: &BoundInputs, t: &CosetData, doubled: bool) -> Result<Vec<Big>> {
    if inp.r != 2 {
        return Err(Error::PreconditionFailed(format!("r = {} but the extension needs r = 2", inp.r)));
    }
    let rn = inp.rn;
    if coset_contains(t, (rn - inp.unit(t) % rn) % rn) {
        return Err(Error::PreconditionFailed("the coset is closed under negation".into()));
    }
    let q = inp.q;
    let k = t.k;
    let qk = qpow_m1(q, k);
    let qm1 = big(q - 1);
    let norm = exact_div(&qk, &qm1, "(q^k-1)/(q-1)")?;
    let rep = inp.scaled_rep(t, "negation operand")?;
    let factor = big(if doubled { 2 } else { 1 });
    let last = exact_div(
        &(factor * big(inp.unit(t)) * &qk * &qk),
        &(big(rn) * &qm1),
        "negation last operand",
    )?;
    let mut out = Vec::with_capacity(inp.m as usize);
    for h in 0..inp.m {
        let a = exact_div(
            &(big(inp.unit(t)) * qpow_m1(q, h) * &qk),
            &big(rn),
            "negation twisted operand",
        )?;
        let first = gcd_all([&qpow_m1(q, gcd_u(k, 2 * h)), &(big(2) * &norm), &a]);
        let gh = qpow_m1(q, gcd_u(k, h));
        let second = (&gh * gcd_all([&gh, &norm, &rep])).gcd(&last);
        out.push(first + second);
    }
    Ok(out)
}

fn neg_mu_total(inp: &BoundInputs, t: &CosetData, doubled: bool) -> Result<Big> {
    let terms = neg_mu_terms(inp, t, doubled)?;
    let sum: Big = terms.iter().sum();
    Ok(mu_orbits_irreducible(inp, t)? + exact_div(&sum, &big(2 * inp.m), "negation average")?)
}

/// `<mu_{-1}, mu_q, rho, sigma>`-orbits on `R e_t + mu_{-1}(R e_t)`.
pub fn neg_mu_orbits_pair(inp: &BoundInputs, t: &CosetData) -> Result<Big> {
    neg_mu_total(inp, t, false)
}

/// The same count with the doubled last operand.
pub fn neg_mu_orbits_pair_doubled(inp: &BoundInputs, t: &CosetData) -> Result<Big> {
    neg_mu_total(inp, t, true)
}

/// `b = (-1)^l0 p^{e/2}` mod rn and its inverse, with the preconditions of
/// the Frobenius-twisted count checked.
pub fn frob_multiplier(inp: &BoundInputs, t: &CosetData, l0: u8) -> Result<(u64, u64)> {
    if inp.e % 2 != 0 {
        return Err(Error::PreconditionFailed(format!("q = p^{} with odd exponent", inp.e)));
    }
    let rn = inp.rn;
    let half = crate::modring::mod_pow(inp.p, (inp.e / 2) as u64, rn);
    let b = if l0 % 2 == 0 { half } else { (rn - half) % rn };
    if b % inp.r != 1 % inp.r || gcd_u(b, rn) != 1 {
        return Err(Error::PreconditionFailed(format!("b = {b} not in 1 + {}Z units mod {rn}", inp.r)));
    }
    let binv = mod_inverse(b, rn).expect("unit");
    let image = (binv as u128 * inp.unit(t) as u128 % rn as u128) as u64;
    if coset_contains(t, image) {
        return Err(Error::PreconditionFailed("the coset is fixed by the multiplier".into()));
    }
    let ord = ord_mod(b, rn)?;
    if ord != 2 * inp.m {
        return Err(Error::PreconditionFailed(format!("ord(b) = {ord}, expected 2m = {}", 2 * inp.m)));
    }
    Ok((b, binv))
}

/// Per-`h` pairs of gcds in the Frobenius-twisted count.
pub fn frob_terms(inp: &BoundInputs, t: &CosetData, l0: u8) -> Result<Vec<(Big, Big)>> {
    let (_, binv) = frob_multiplier(inp, t, l0)?;
    let q = inp.q;
    let rn = inp.rn;
    let k = t.k;
    let qk = qpow_m1(q, k);
    let qm1 = big(q - 1);
    let norm = exact_div(&qk, &qm1, "(q^k-1)/(q-1)")?;
    let rep = inp.scaled_rep(t, "frobenius operand")?;
    let shift = (binv + rn - 1) % rn;
    let last = exact_div(
        &(big(shift) * big(inp.unit(t)) * &qk * &qk),
        &(big(rn) * &qm1),
        "frobenius last operand",
    )?;
    let mut out = Vec::with_capacity(inp.m as usize);
    for h in 0..inp.m {
        let res = (binv + crate::modring::mod_pow(q, h, rn)) % rn;
        let a = exact_div(&(big(res) * big(inp.unit(t)) * &qk), &big(rn), "frobenius twisted operand")?;
        let first = gcd_all([&qpow_m1(q, gcd_u(k, 2 * h + 1)), &(big(2) * &norm), &a]);
        let gh = qpow_m1(q, gcd_u(k, h));
        let second = (&gh * gcd_all([&gh, &norm, &rep])).gcd(&last);
        out.push((first, second));
    }
    Ok(out)
}

/// `<mu_b, rho, sigma>`-orbits on `R e_t + mu_b(R e_t)`.
pub fn frob_orbits_pair(inp: &BoundInputs, t: &CosetData, l0: u8) -> Result<Big> {
    let sum: Big = frob_terms(inp, t, l0)?.into_iter().map(|(a, b)| a + b).sum();
    Ok(mu_orbits_irreducible(inp, t)? + exact_div(&sum, &big(2 * inp.m), "frobenius average")?)
}

/// Outcome of a sufficient condition for a few-weight irreducible code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Guarantee {
    pub applicable: bool,
    pub reason: String,
    /// Maximum number of nonzero weights promised when applicable.
    pub max_weights: u64,
}

fn fail(reason: impl Into<String>, max_weights: u64) -> Guarantee {
    Guarantee { applicable: false, reason: reason.into(), max_weights }
}

/// Whether the conditions for at most two weights hold: `q = 2^{m'}` with
/// `m'` odd and `> 1`, `n = (q^2-1)/(3rN)` with `N | (q-1)/r`, and
/// `gcd(1+ra, (q+1)/3) = 1`.
pub fn two_weight_condition(p: u64, e: u32, r: u64, n: u64, c: &CosetData) -> Guarantee {
    let q = p.pow(e);
    if p != 2 || e % 2 == 0 || e < 3 {
        return fail("q must be 2^m' with m' odd and greater than 1", 2);
    }
    let num = (q as u128 * q as u128) - 1;
    let den = 3 * r as u128 * n as u128;
    if num % den != 0 {
        return fail("3rn does not divide q^2 - 1", 2);
    }
    let nn = (num / den) as u64;
    if (q - 1) % r != 0 || ((q - 1) / r) % nn != 0 {
        return fail(format!("N = {nn} does not divide (q-1)/r"), 2);
    }
    if gcd_u(1 + r * c.a, (q + 1) / 3) != 1 {
        return fail("gcd(1+ra, (q+1)/3) != 1", 2);
    }
    Guarantee { applicable: true, reason: format!("N = {nn}"), max_weights: 2 }
}

/// Whether the conditions for at most three weights hold, with `k` the coset
/// size.
pub fn three_weight_condition(p: u64, e: u32, r: u64, n: u64, c: &CosetData) -> Guarantee {
    let q = p.pow(e);
    let k = c.k;
    let s = 2 * k + 1;
    if q == 2 && k == 3 {
        return fail("(q, k) = (2, 3) is excluded", 3);
    }
    let is_prime = crate::modring::is_prime;
    if k % 2 == 0 || !is_prime(k) || !is_prime(s) {
        return fail("k and 2k+1 must both be odd primes", 3);
    }
    if gcd_u(q - 1, k) != 1 || gcd_u(q - 1, s) != 1 {
        return fail("q - 1 must be coprime to k and 2k+1", 3);
    }
    let qk = qpow_m1(q, k);
    if !(&qk % big(s)).is_zero() {
        return fail("q^k != 1 mod 2k+1", 3);
    }
    let den = big(s) * big(r) * big(n);
    if !(&qk % &den).is_zero() {
        return fail("(2k+1)rn does not divide q^k - 1", 3);
    }
    let nn = &qk / &den;
    if (q - 1) % r != 0 || !(big((q - 1) / r) % &nn).is_zero() {
        return fail(format!("N = {nn} does not divide (q-1)/r"), 3);
    }
    let cof = &qk / (big(s) * big(q - 1));
    if !big(1 + r * c.a).gcd(&cof).is_one() {
        return fail("gcd(1+ra, (q^k-1)/((2k+1)(q-1))) != 1", 3);
    }
    Guarantee { applicable: true, reason: format!("N = {nn}"), max_weights: 3 }
}

/// JSON rendering of a big integer: a number when it fits in 64 bits,
/// otherwise a decimal string.
pub fn big_json(v: &Big) -> serde_json::Value {
    match v.to_u64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cd(index: usize, r: u64, rn: u64, rep: u64, elements: &[u64]) -> CosetData {
        CosetData {
            index,
            rep,
            a: ((rep + rn - 1) % rn) / r,
            k: elements.len() as u64,
            elements: elements.to_vec(),
        }
    }

    fn inputs(q: u64, p: u64, e: u32, r: u64, n: u64, m: u64, cosets: Vec<CosetData>) -> BoundInputs {
        BoundInputs { q, p, e, r, n, rn: r * n, m, cosets }
    }

    #[test]
    fn irreducible_length_eight() {
        let c = cd(1, 2, 16, 5, &[5, 7, 13, 15]);
        let inp = inputs(3, 3, 1, 2, 8, 4, vec![c.clone()]);
        assert_eq!(mu_orbits_irreducible(&inp, &c).unwrap(), big(2));
        assert_eq!(rho_sigma_orbits_irreducible(&inp, &c).unwrap(), big(5));
        assert_eq!(mu_orbit_bound(&inp).unwrap(), big(2));
        assert_eq!(rho_sigma_orbits(&inp).unwrap(), big(5));
        assert!(irreducible_count_checks(&inp, &c).unwrap().iter().all(|v| v.pass));
    }

    #[test]
    fn pair_length_twenty() {
        let c1 = cd(1, 2, 40, 5, &[5, 15]);
        let c5 = cd(5, 2, 40, 25, &[25, 35]);
        let inp = inputs(3, 3, 1, 2, 20, 4, vec![c1.clone(), c5.clone()]);
        assert_eq!(rho_sigma_orbits(&inp).unwrap(), big(10));
        assert_eq!(mu_orbits_pair_equal(&inp, &c1, &c5).unwrap(), big(7));
        assert_eq!(mu_orbits_pair_divisible(&inp, &c1, &c5).unwrap(), big(7));
        assert_eq!(mu_orbit_bound(&inp).unwrap(), big(7));
        let terms: Vec<Big> = (0..4).map(|h| subset_term(&inp, &[&c1, &c5], h).unwrap()).collect();
        assert_eq!(terms, vec![big(320), big(80), big(320), big(80)]);
    }

    #[test]
    fn pair_length_thirty_nine() {
        let c0 = cd(0, 2, 78, 1, &[1, 5, 25, 47]);
        let c9 = cd(9, 2, 78, 39, &[39]);
        let inp = inputs(5, 5, 1, 2, 39, 4, vec![c0.clone(), c9.clone()]);
        assert_eq!(c9.a, 19);
        assert_eq!(rho_sigma_orbits(&inp).unwrap(), big(21));
        let (a, b) = divisible_order(&c0, &c9).unwrap();
        assert_eq!(a.index, 9);
        assert_eq!(mu_orbits_pair_divisible(&inp, a, b).unwrap(), big(13));
        assert_eq!(mu_orbits_pair_unit(&inp, &c9, &c0).unwrap(), big(13));
        assert!(mu_orbits_pair_unit(&inp, &c0, &c9).is_err());
    }

    #[test]
    fn negation_pair_length_forty() {
        let c3 = cd(3, 2, 80, 11, &[11, 19, 33, 57]);
        let c6 = cd(6, 2, 80, 23, &[23, 47, 61, 69]);
        let inp = inputs(3, 3, 1, 2, 40, 4, vec![c3.clone(), c6.clone()]);
        assert_eq!(mu_orbits_pair_equal(&inp, &c3, &c6).unwrap(), big(25));
        let terms = neg_mu_terms(&inp, &c3, false).unwrap();
        assert_eq!(terms, vec![big(120), big(4), big(16), big(4)]);
        assert_eq!(neg_mu_orbits_pair(&inp, &c3).unwrap(), big(19));
        assert_eq!(neg_mu_orbits_pair_doubled(&inp, &c3).unwrap(), big(24));
    }

    #[test]
    fn frobenius_pairs_over_nine() {
        let c0 = cd(0, 2, 80, 1, &[1, 9]);
        let c1 = cd(1, 2, 80, 3, &[3, 27]);
        let c17 = cd(17, 2, 80, 53, &[53, 77]);
        let inp0 = inputs(9, 3, 2, 2, 40, 2, vec![c0.clone(), c1.clone()]);
        assert_eq!(frob_multiplier(&inp0, &c0, 0).unwrap(), (3, 27));
        let t = frob_terms(&inp0, &c0, 0).unwrap();
        assert_eq!(t[0], (big(4), big(20)));
        assert_eq!(t[1], (big(4), big(4)));
        assert_eq!(frob_orbits_pair(&inp0, &c0, 0).unwrap(), big(9));
        assert_eq!(mu_orbits_pair_equal(&inp0, &c0, &c1).unwrap(), big(14));
        let inp1 = inputs(9, 3, 2, 2, 40, 2, vec![c0.clone(), c17.clone()]);
        assert_eq!(frob_multiplier(&inp1, &c0, 1).unwrap(), (77, 53));
        assert_eq!(frob_orbits_pair(&inp1, &c0, 1).unwrap(), big(14));
        assert_eq!(mu_orbits_pair_equal(&inp1, &c0, &c17).unwrap(), big(26));
    }

    #[test]
    fn few_weight_conditions() {
        let c = cd(0, 31, 341, 1, &[1, 32]);
        assert!(two_weight_condition(2, 5, 31, 11, &c).applicable);
        assert!(!two_weight_condition(2, 4, 15, 17, &c).applicable);
        let c = cd(1, 2, 22, 7, &[7, 13, 17, 19, 21]);
        assert!(three_weight_condition(3, 1, 2, 11, &c).applicable);
        let c = cd(1, 1, 7, 1, &[1, 2, 4]);
        assert!(!three_weight_condition(2, 1, 1, 7, &c).applicable);
    }
}
