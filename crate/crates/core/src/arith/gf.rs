//! Finite fields GF(p^e) with table-driven arithmetic.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` where
//! `c_i` are the coefficients of the polynomial representative modulo the
//! canonical defining polynomial. For `e = 1` this is the usual residue.

use serde::{Deserialize, Serialize};

use super::prime::{is_prime, primitive_root};
use crate::error::{Error, Result};

/// Largest supported field size; arithmetic tables are `O(q)`.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

pub type Fq = u32;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    /// Monic defining polynomial, coefficients `c_0..c_{e-1}` (leading 1 implicit).
    modulus: Vec<u32>,
    /// `exp[k] = x^k`, stored twice over for branch-free products.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Zech logarithms: `x^zech[k] = 1 + x^k` (`u32::MAX` encodes zero).
    zech: Vec<u32>,
}

/// Serialized field element: coefficient list in the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteFieldElem {
    pub p: u32,
    pub e: u32,
    pub coeffs: Vec<u32>,
}

fn mul_by_x(v: &mut [u32], modulus: &[u32], p: u32) {
    let e = v.len();
    let top = v[e - 1];
    for i in (1..e).rev() {
        v[i] = v[i - 1];
    }
    v[0] = 0;
    if top != 0 {
        for i in 0..e {
            v[i] = (v[i] + (p - top) * modulus[i] % p) % p;
        }
    }
}

fn encode(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

impl FiniteField {
    /// Builds GF(p^e) from its canonical defining polynomial: the least monic
    /// primitive polynomial of degree `e`, candidates ordered by the integer
    /// `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidInput("extension degree must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::InvalidInput(format!("GF({p}^{e}) is too large")))?
            as u32;
        if e == 1 {
            let g = primitive_root(p as u64) as u32;
            let modulus = vec![(p - g) % p];
            return Ok(Self::from_generator(p, q, modulus, g));
        }
        for cand in 0..q {
            let modulus: Vec<u32> = (0..e).map(|i| cand / p.pow(i) % p).collect();
            if modulus[0] == 0 {
                continue;
            }
            if let Some(field) = Self::try_primitive(p, e, q, &modulus) {
                return Ok(field);
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    fn try_primitive(p: u32, e: u32, q: u32, modulus: &[u32]) -> Option<Self> {
        let mut v = vec![0u32; e as usize];
        v[0] = 1;
        let mut exp = Vec::with_capacity(q as usize - 1);
        for _ in 0..q - 1 {
            exp.push(encode(&v, p));
            mul_by_x(&mut v, modulus, p);
            if encode(&v, p) == 1 && exp.len() < (q - 1) as usize {
                return None;
            }
        }
        if encode(&v, p) != 1 {
            return None;
        }
        Some(Self::build(p, e, q, modulus.to_vec(), exp))
    }

    fn from_generator(p: u32, q: u32, modulus: Vec<u32>, g: u32) -> Self {
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut x = 1u64;
        for _ in 0..q - 1 {
            exp.push(x as u32);
            x = x * g as u64 % p as u64;
        }
        Self::build(p, 1, q, modulus, exp)
    }

    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>, exp1: Vec<u32>) -> Self {
        let n = (q - 1) as usize;
        let mut log = vec![u32::MAX; q as usize];
        for (k, &a) in exp1.iter().enumerate() {
            log[a as usize] = k as u32;
        }
        let mut exp = exp1.clone();
        exp.extend_from_slice(&exp1);
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            exp,
            log,
            zech: Vec::new(),
        };
        let mut zech = vec![u32::MAX; n];
        for k in 0..n {
            let s = field.add_digits(field.exp[k], 1);
            zech[k] = if s == 0 { u32::MAX } else { field.log[s as usize] };
        }
        field.zech = zech;
        field
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.e {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.e
    }
    pub fn order(&self) -> u32 {
        self.q
    }
    /// Coefficients `c_0..c_{e-1}` of the monic defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.p == 2 {
            a ^ b
        } else if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if a == 0 {
            b
        } else if b == 0 {
            a
        } else {
            let la = self.log[a as usize];
            let lb = self.log[b as usize];
            let d = if lb >= la { lb - la } else { lb + self.q - 1 - la };
            let z = self.zech[d as usize];
            if z == u32::MAX {
                0
            } else {
                self.exp[(la + z) as usize]
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.p == 2 || a == 0 {
            a
        } else if self.e == 1 {
            self.p - a
        } else {
            let half = (self.q - 1) / 2;
            self.exp[(self.log[a as usize] + half) as usize]
        }
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Fq) -> Fq {
        assert!(a != 0, "inverse of zero in GF({})", self.q);
        let l = self.log[a as usize];
        self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
    }

    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fq, k: u64) -> Fq {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (k % (self.q as u64 - 1)) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Fq {
        n.rem_euclid(self.p as i64) as Fq
    }

    /// The fixed generator of the multiplicative group.
    pub fn generator(&self) -> Fq {
        self.exp[1 % (self.q as usize - 1).max(1)]
    }

    /// Discrete logarithm to the base [`Self::generator`]; `None` for zero.
    pub fn log(&self, a: Fq) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `generator^k`.
    pub fn exp(&self, k: u64) -> Fq {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// The canonical primitive `o`-th root of unity `generator^((q-1)/o)`.
    pub fn root_of_unity(&self, o: u64) -> Option<Fq> {
        let n = self.q as u64 - 1;
        n.is_multiple_of(o).then(|| self.exp(n / o))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fq) -> u64 {
        let n = self.q as u64 - 1;
        n / num_integer::gcd(n, self.log[a as usize] as u64)
    }

    pub fn coeffs(&self, a: Fq) -> Vec<u32> {
        (0..self.e).map(|i| a / self.p.pow(i) % self.p).collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fq> {
        if coeffs.len() != self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidInput(format!(
                "coefficient list {coeffs:?} is not an element of GF({}^{})",
                self.p, self.e
            )));
        }
        Ok(encode(coeffs, self.p))
    }

    pub fn to_elem(&self, a: Fq) -> FiniteFieldElem {
        FiniteFieldElem {
            p: self.p,
            e: self.e,
            coeffs: self.coeffs(a),
        }
    }

    pub fn from_elem(&self, x: &FiniteFieldElem) -> Result<Fq> {
        if x.p != self.p || x.e != self.e {
            return Err(Error::InvalidInput(format!(
                "element of GF({}^{}) used in GF({}^{})",
                x.p, x.e, self.p, self.e
            )));
        }
        self.from_coeffs(&x.coeffs)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.q
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e
    }
}
impl Eq for FiniteField {}

/// Smallest `e` such that GF(p^e) contains all `m`-th roots of unity (`p ∤ m`).
pub fn splitting_degree(p: u64, m: u64) -> u32 {
    super::prime::mult_order(p % m.max(1), m.max(1)) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.add(a, b), f.add_digits(a, b));
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
        }
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for (p, e) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 2), (7, 1)] {
            check_axioms(&FiniteField::new(p, e).unwrap());
        }
    }

    #[test]
    fn canonical_polynomials() {
        // x^2 + x + 1 over GF(2)
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1]);
        // x^3 + x + 1
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0]);
        // x^2 + x + 2 over GF(3)
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[2, 1]);
        // x - 2 over GF(5): 2 is the least primitive root
        assert_eq!(FiniteField::new(5, 1).unwrap().generator(), 2);
    }

    #[test]
    fn distributivity_gf64() {
        let f = FiniteField::new(2, 6).unwrap();
        for a in (0..64).step_by(5) {
            for b in 0..64 {
                for c in (0..64).step_by(7) {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(2, 21), 6);
        assert_eq!(splitting_degree(5, 6), 2);
        assert_eq!(splitting_degree(2, 3), 2);
        assert_eq!(splitting_degree(3, 1), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(2, 40).is_err());
        let f = FiniteField::new(3, 2).unwrap();
        assert!(f.from_coeffs(&[3, 0]).is_err());
    }
}
