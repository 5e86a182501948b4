//! Residue arithmetic and q-cyclotomic cosets inside `1 + rZ` modulo `rn`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

pub fn is_prime(b: u64) -> bool {
    if b < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= b {
        if b % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation by trial division, ascending primes.
pub fn factorize(mut b: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= b {
        if b % d == 0 {
            let mut e = 0;
            while b % d == 0 {
                b /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if b > 1 {
        out.push((b, 1));
    }
    out
}

pub fn euler_phi(b: u64) -> u64 {
    assert!(b >= 1, "euler_phi needs b >= 1");
    factorize(b)
        .into_iter()
        .fold(b, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(b: u64) -> Vec<u64> {
    assert!(b >= 1, "divisors needs b >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= b {
        if b % d == 0 {
            small.push(d);
            if d * d != b {
                large.push(b / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// gcd of absolute values; zeros are ignored, the empty list gives 0.
pub fn gcd_list(values: &[i64]) -> u64 {
    values
        .iter()
        .fold(0u64, |g, &v| g.gcd(&v.unsigned_abs()))
}

pub fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut base = (b % m) as u128;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let g = num_integer::Integer::extended_gcd(&((a % m) as i128), &(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `b` modulo `m`.
pub fn ord_mod(b: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("modulus {m} must exceed 1")));
    }
    if b.gcd(&m) != 1 {
        return Err(Error::NotAUnit(b, m));
    }
    let b = b % m;
    let mut x = b;
    let mut d = 1u64;
    while x != 1 {
        x = ((x as u128 * b as u128) % m as u128) as u64;
        d += 1;
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coset {
    pub rep: u64,
    pub a: u64,
    pub k: u64,
    pub elements: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    #[serde(skip)]
    pub q: u64,
    #[serde(skip)]
    pub r: u64,
    #[serde(skip)]
    pub n: u64,
    pub rn: u64,
    pub m: u64,
    pub cosets: Vec<Coset>,
    #[serde(skip)]
    index: Vec<u32>,
}

const NO_COSET: u32 = u32::MAX;

pub fn cyclotomic_cosets(q: u64, r: u64, n: u64) -> Result<CosetTable> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameter("r and n must be positive".into()));
    }
    let rn = r
        .checked_mul(n)
        .filter(|&v| v < u32::MAX as u64)
        .ok_or_else(|| Error::InvalidParameter("rn too large".into()))?;
    if q.gcd(&rn) != 1 {
        return Err(Error::NotCoprime(q, rn));
    }
    if (q - 1) % r != 0 {
        return Err(Error::InvalidParameter(format!("r = {r} does not divide q - 1")));
    }
    let m = if rn == 1 { 1 } else { ord_mod(q, rn)? };
    let mut index = vec![NO_COSET; rn as usize];
    let mut cosets = Vec::new();
    for x in 0..rn {
        if x % r != 1 % r || index[x as usize] != NO_COSET {
            continue;
        }
        let id = cosets.len() as u32;
        let mut elements = Vec::new();
        let mut y = x;
        loop {
            index[y as usize] = id;
            elements.push(y);
            y = ((y as u128 * q as u128) % rn as u128) as u64;
            if y == x {
                break;
            }
        }
        elements.sort_unstable();
        let a = ((x + rn - 1 % rn) % rn) / r;
        cosets.push(Coset { rep: x, a, k: elements.len() as u64, elements });
    }
    Ok(CosetTable { q, r, n, rn, m, cosets, index })
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index of the coset containing `residue` (reduced mod rn), if it lies in 1 + rZ.
    pub fn coset_of(&self, residue: u64) -> Option<usize> {
        let i = self.index[(residue % self.rn) as usize];
        (i != NO_COSET).then_some(i as usize)
    }

    pub fn in_unit_subgroup(&self, a: u64) -> bool {
        let a = a % self.rn;
        a % self.r == 1 % self.r && a.gcd(&self.rn) == 1
    }

    /// Coset index of the image of coset `t` under the multiplier `a`,
    /// i.e. the coset containing `a^{-1} * rep`.
    pub fn multiplier_coset_image(&self, a: u64, t: usize) -> Result<usize> {
        if !self.in_unit_subgroup(a) {
            return Err(Error::NotInUnitSubgroup(a, self.r, self.rn));
        }
        let coset = self
            .cosets
            .get(t)
            .ok_or_else(|| Error::InvalidParameter(format!("no coset with index {t}")))?;
        let inv = mod_inverse(a, self.rn).expect("unit checked");
        let y = ((inv as u128 * coset.rep as u128) % self.rn as u128) as u64;
        Ok(self.coset_of(y).expect("unit subgroup preserves 1 + rZ"))
    }

    /// Whether the index set is mapped onto itself by the multiplier `a`.
    pub fn selection_closed_under(&self, a: u64, selected: &[usize]) -> Result<bool> {
        for &t in selected {
            let img = self.multiplier_coset_image(a, t)?;
            if !selected.contains(&img) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(ord_mod(3, 16).unwrap(), 4);
        assert_eq!(ord_mod(17, 16).unwrap(), 1);
        assert_eq!(ord_mod(9, 80).unwrap(), 2);
        assert_eq!(ord_mod(32, 341).unwrap(), 2);
        assert_eq!(ord_mod(2, 4), Err(Error::NotAUnit(2, 4)));
    }

    #[test]
    fn small_number_theory() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(4), 2);
        assert_eq!(euler_phi(80), 32);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(gcd_list(&[40, 25]), 5);
        assert_eq!(gcd_list(&[]), 0);
        assert_eq!(gcd_list(&[0, -12, 0, 18]), 6);
        assert_eq!(gcd_list(&[7, 0]), 7);
        assert_eq!(mod_inverse(3, 80), Some(27));
        assert_eq!(mod_inverse(77, 80), Some(53));
        assert_eq!(mod_inverse(4, 80), None);
    }

    #[test]
    fn ternary_negacyclic_length_eight() {
        let t = cyclotomic_cosets(3, 2, 8).unwrap();
        assert_eq!(t.rn, 16);
        assert_eq!(t.m, 4);
        assert_eq!(t.cosets.len(), 2);
        assert_eq!(t.cosets[0].elements, vec![1, 3, 9, 11]);
        assert_eq!(t.cosets[1].elements, vec![5, 7, 13, 15]);
        assert_eq!((t.cosets[1].rep, t.cosets[1].a, t.cosets[1].k), (5, 2, 4));
    }

    #[test]
    fn ternary_length_forty() {
        let t = cyclotomic_cosets(3, 2, 40).unwrap();
        assert_eq!(t.cosets[3].elements, vec![11, 19, 33, 57]);
        assert_eq!(t.cosets[6].elements, vec![23, 47, 61, 69]);
        assert_eq!(t.multiplier_coset_image(79, 3).unwrap(), 6);
    }

    #[test]
    fn nonary_length_forty() {
        let t = cyclotomic_cosets(9, 2, 40).unwrap();
        assert_eq!(t.m, 2);
        assert_eq!(t.cosets[0].elements, vec![1, 9]);
        assert_eq!(t.cosets[1].elements, vec![3, 27]);
        assert_eq!(t.cosets[17].elements, vec![53, 77]);
        assert_eq!(t.multiplier_coset_image(3, 0).unwrap(), 1);
        assert_eq!(t.multiplier_coset_image(77, 0).unwrap(), 17);
        assert_eq!(t.multiplier_coset_image(1, 5).unwrap(), 5);
        assert!(matches!(t.multiplier_coset_image(2, 0), Err(Error::NotInUnitSubgroup(..))));
    }

    #[test]
    fn cyclic_length_two() {
        let t = cyclotomic_cosets(3, 1, 2).unwrap();
        assert_eq!(t.rn, 2);
        let all: Vec<_> = t.cosets.iter().map(|c| c.elements.clone()).collect();
        assert_eq!(all, vec![vec![0], vec![1]]);
        assert_eq!(t.cosets[0].a, 1);
        assert_eq!(t.cosets[1].a, 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(cyclotomic_cosets(3, 2, 6), Err(Error::NotCoprime(..))));
        assert!(cyclotomic_cosets(5, 3, 7).is_err());
    }
}
