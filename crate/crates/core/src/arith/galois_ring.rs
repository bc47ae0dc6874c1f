//! Galois rings GR(p^m, e) = (Z/p^m)[x]/(f) with `f` the canonical GF(p^e)
//! polynomial lifted coefficientwise: truncated Witt vectors of GF(p^e).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::gf::{FiniteField, Fq};
use super::prime::mul_mod;
use crate::error::{Error, Result};

/// Default Witt-vector precision.
pub const DEFAULT_PRECISION: u32 = 4;

#[derive(Debug, Clone)]
pub struct GaloisRing {
    field: Arc<FiniteField>,
    precision: u32,
    modulus: u64,
}

/// Serialized Galois-ring element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaloisRingElem {
    pub p: u32,
    pub m: u32,
    pub e: u32,
    pub coeffs: Vec<u64>,
}

pub type Gr = Vec<u64>;

impl GaloisRing {
    pub fn new(field: Arc<FiniteField>, precision: u32) -> Result<Self> {
        let p = field.characteristic() as u64;
        let modulus = (precision > 0)
            .then(|| p.checked_pow(precision))
            .flatten()
            .filter(|&m| m < (1 << 62))
            .ok_or_else(|| Error::InvalidInput(format!("precision {precision} unsupported")))?;
        Ok(GaloisRing {
            field,
            precision,
            modulus,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }
    pub fn precision(&self) -> u32 {
        self.precision
    }
    /// `p^m`, the characteristic of the ring.
    pub fn char_modulus(&self) -> u64 {
        self.modulus
    }
    fn e(&self) -> usize {
        self.field.degree() as usize
    }

    pub fn zero(&self) -> Gr {
        vec![0; self.e()]
    }
    pub fn one(&self) -> Gr {
        self.from_int(1)
    }
    pub fn from_int(&self, n: i64) -> Gr {
        let mut v = self.zero();
        v[0] = n.rem_euclid(self.modulus as i64) as u64;
        v
    }

    pub fn add(&self, a: &Gr, b: &Gr) -> Gr {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.modulus).collect()
    }
    pub fn neg(&self, a: &Gr) -> Gr {
        a.iter().map(|&x| (self.modulus - x) % self.modulus).collect()
    }
    pub fn sub(&self, a: &Gr, b: &Gr) -> Gr {
        self.add(a, &self.neg(b))
    }
    pub fn scale(&self, a: &Gr, c: u64) -> Gr {
        a.iter().map(|&x| mul_mod(x, c % self.modulus, self.modulus)).collect()
    }

    pub fn mul(&self, a: &Gr, b: &Gr) -> Gr {
        let e = self.e();
        let md = self.modulus;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, md)) % md;
            }
        }
        let f = self.field.modulus();
        for k in (e..2 * e - 1).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &c) in f.iter().enumerate() {
                let sub = mul_mod(top, c as u64, md);
                prod[k - e + i] = (prod[k - e + i] + md - sub) % md;
            }
        }
        prod.truncate(e);
        prod
    }

    pub fn pow(&self, a: &Gr, mut k: u64) -> Gr {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Reduction modulo `p` onto the residue field.
    pub fn residue(&self, a: &Gr) -> Fq {
        let p = self.field.characteristic() as u64;
        let coeffs: Vec<u32> = a.iter().map(|&x| (x % p) as u32).collect();
        self.field.from_coeffs(&coeffs).expect("reduced coefficients")
    }

    /// Coefficientwise lift of a residue-field element.
    pub fn lift(&self, a: Fq) -> Gr {
        self.field.coeffs(a).into_iter().map(u64::from).collect()
    }

    pub fn is_unit(&self, a: &Gr) -> bool {
        self.residue(a) != 0
    }

    pub fn inv(&self, a: &Gr) -> Option<Gr> {
        let r = self.residue(a);
        if r == 0 {
            return None;
        }
        let mut x = self.lift(self.field.inv(r));
        let two = self.from_int(2);
        for _ in 0..=self.precision.next_power_of_two().trailing_zeros() + 1 {
            let ax = self.mul(a, &x);
            x = self.mul(&x, &self.sub(&two, &ax));
        }
        debug_assert_eq!(self.mul(a, &x), self.one());
        Some(x)
    }

    /// Teichmüller representative: the unique `(q-1)`-th root of unity (or zero)
    /// reducing to `a`.
    pub fn teichmueller(&self, a: Fq) -> Gr {
        if a == 0 {
            return self.zero();
        }
        let q = self.field.order() as u64;
        let mut x = self.lift(a);
        for _ in 0..self.precision {
            x = self.pow(&x, q);
        }
        x
    }

    /// Ring map GR(p^m, e) -> GR(p^{m-1}, e).
    pub fn truncate(&self, a: &Gr) -> Result<(GaloisRing, Gr)> {
        let smaller = GaloisRing::new(self.field.clone(), self.precision - 1)?;
        let md = smaller.modulus;
        Ok((smaller, a.iter().map(|&x| x % md).collect()))
    }

    /// `p`-adic valuation (`precision` for zero).
    pub fn valuation(&self, a: &Gr) -> u32 {
        let p = self.field.characteristic() as u64;
        a.iter()
            .filter(|&&x| x != 0)
            .map(|&x| super::prime::valuation(x, p))
            .min()
            .unwrap_or(self.precision)
    }

    /// Divides by `p^k`; requires valuation at least `k`. The top `k` digits
    /// of precision are lost and filled with zero.
    pub fn div_p_pow(&self, a: &Gr, k: u32) -> Gr {
        let pk = (self.field.characteristic() as u64).pow(k);
        a.iter()
            .map(|&x| {
                debug_assert_eq!(x % pk, 0);
                x / pk
            })
            .collect()
    }

    pub fn to_elem(&self, a: &Gr) -> GaloisRingElem {
        GaloisRingElem {
            p: self.field.characteristic(),
            m: self.precision,
            e: self.field.degree(),
            coeffs: a.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u32, e: u32, m: u32) -> GaloisRing {
        GaloisRing::new(Arc::new(FiniteField::new(p, e).unwrap()), m).unwrap()
    }

    #[test]
    fn teichmueller_is_multiplicative_root_of_unity() {
        let r = ring(2, 3, 5);
        let f = r.field().clone();
        for a in 1..f.order() {
            let t = r.teichmueller(a);
            assert_eq!(r.residue(&t), a);
            assert_eq!(r.pow(&t, 7), r.one());
            for b in 1..f.order() {
                let tb = r.teichmueller(b);
                assert_eq!(r.mul(&t, &tb), r.teichmueller(f.mul(a, b)));
            }
        }
    }

    #[test]
    fn units_and_inverses() {
        let r = ring(3, 2, 4);
        let a = vec![4, 7];
        let ai = r.inv(&a).unwrap();
        assert_eq!(r.mul(&a, &ai), r.one());
        assert!(r.inv(&vec![3, 6]).is_none());
        assert_eq!(r.valuation(&vec![9, 18]), 2);
    }

    #[test]
    fn truncation_is_a_ring_map() {
        let r = ring(2, 2, 4);
        let a = vec![13, 6];
        let b = vec![7, 11];
        let (s, ta) = r.truncate(&a).unwrap();
        let (_, tb) = r.truncate(&b).unwrap();
        let (_, tab) = r.truncate(&r.mul(&a, &b)).unwrap();
        assert_eq!(s.mul(&ta, &tb), tab);
        let (_, tsum) = r.truncate(&r.add(&a, &b)).unwrap();
        assert_eq!(s.add(&ta, &tb), tsum);
    }
}
