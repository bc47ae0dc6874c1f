//! Exact arithmetic in cyclotomic fields Q(ζ_M).
//!
//! A [`CycNumber`] stores rational coordinates in the power basis
//! `1, ζ_M, ..., ζ_M^{φ(M)-1}` modulo the `M`-th cyclotomic polynomial, as a
//! vector of integer numerators over one positive common denominator. The roots
//! of unity of different conductors form a compatible system: `ζ_L^{L/M} = ζ_M`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::gf::{FiniteField, Fq};
use super::prime::{euler_phi, gcd, inv_mod, lcm, split_part};
use crate::error::{Error, Result};

fn poly_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (low to high) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let den = cyclotomic_polynomial(d);
        num = poly_div_exact(&num, &den);
    }
    let p = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

/// Folds exponents modulo `n` and reduces modulo Φ_n.
fn reduce(n: u64, mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    let n_us = n as usize;
    if coeffs.len() > n_us {
        let extra = coeffs.split_off(n_us);
        for (i, c) in extra.into_iter().enumerate() {
            coeffs[i % n_us] += c;
        }
    }
    let phi = euler_phi(n) as usize;
    let cp = cyclotomic_polynomial(n);
    for k in (phi..coeffs.len()).rev() {
        if coeffs[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut coeffs[k]);
        for (i, &d) in cp.iter().enumerate().take(phi) {
            if d != 0 {
                coeffs[k - phi + i] -= &c * d;
            }
        }
    }
    coeffs.resize(phi, BigInt::zero());
    coeffs
}

#[derive(Clone)]
pub struct CycNumber {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Serialized form: conductor plus exact rational power-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycValue {
    pub conductor: u64,
    pub coefficients: Vec<String>,
}

impl CycNumber {
    fn normalized(conductor: u64, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        let (num, den) = if g.is_one() || g.is_zero() {
            (num, den)
        } else {
            (num.into_iter().map(|c| c / &g).collect(), den / &g)
        };
        let (num, den) = if den.is_negative() {
            (num.into_iter().map(|c| -c).collect(), -den)
        } else {
            (num, den)
        };
        let den = if num.iter().all(Zero::is_zero) { BigInt::one() } else { den };
        CycNumber { conductor, num, den }
    }

    pub fn from_int(n: i64) -> Self {
        CycNumber {
            conductor: 1,
            num: vec![BigInt::from(n)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Self::normalized(1, vec![BigInt::from(num)], BigInt::from(den))
    }

    pub fn from_big_rational(r: &BigRational) -> Self {
        Self::normalized(1, vec![r.numer().clone()], r.denom().clone())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `ζ_M^k`.
    pub fn zeta(m: u64, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut v = vec![BigInt::zero(); m as usize];
        v[e] = BigInt::one();
        Self::normalized(m, reduce(m, v), BigInt::one())
    }

    /// `Σ_k mult[k] ζ_M^k` for integer multiplicities indexed by exponent.
    pub fn from_root_multiplicities(m: u64, mult: &[i64]) -> Self {
        let mut v = vec![BigInt::zero(); m as usize];
        for (k, &c) in mult.iter().enumerate() {
            v[k % m as usize] += c;
        }
        Self::normalized(m, reduce(m, v), BigInt::one())
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates as exact rationals.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn from_coefficients(conductor: u64, coeffs: &[BigRational]) -> Result<Self> {
        if conductor == 0 || coeffs.len() as u64 != euler_phi(conductor) {
            return Err(Error::InvalidInput(format!(
                "conductor {conductor} needs {} coefficients, got {}",
                euler_phi(conductor.max(1)),
                coeffs.len()
            )));
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::normalized(conductor, num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    /// The value as a rational number, if it is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// The value as a machine integer, if it is a rational integer.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_rational() && self.den.is_one() {
            self.num[0].to_i64()
        } else {
            None
        }
    }

    /// Re-expresses the number in Q(ζ_L) for a multiple `L` of the conductor.
    pub fn embed(&self, l: u64) -> Self {
        assert_eq!(l % self.conductor, 0, "{l} is not a multiple of {}", self.conductor);
        if l == self.conductor {
            return self.clone();
        }
        let step = (l / self.conductor) as usize;
        let mut v = vec![BigInt::zero(); l as usize];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        CycNumber {
            conductor: l,
            num: reduce(l, v),
            den: self.den.clone(),
        }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let l = lcm(a.conductor, b.conductor);
        (a.embed(l), b.embed(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        Self::normalized(a.conductor, num, &a.den * &b.den)
    }

    pub fn neg(&self) -> Self {
        CycNumber {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            return other.scale_rational(&self.num[0], &self.den);
        }
        if other.conductor == 1 {
            return self.scale_rational(&other.num[0], &other.den);
        }
        let (a, b) = Self::common(self, other);
        let n = a.num.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::normalized(a.conductor, reduce(a.conductor, prod), &a.den * &b.den)
    }

    fn scale_rational(&self, num: &BigInt, den: &BigInt) -> Self {
        Self::normalized(
            self.conductor,
            self.num.iter().map(|c| c * num).collect(),
            &self.den * den,
        )
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.scale_rational(&BigInt::from(k), &BigInt::one())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.conductor == 1 {
            return Some(Self::normalized(1, vec![self.den.clone()], self.num[0].clone()));
        }
        // Row i of the multiplication matrix is ζ^i · self.
        let phi = self.num.len();
        let rows: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| Self::zeta(self.conductor, i as i64).mul(self).coefficients())
            .collect();
        let mut target = vec![BigRational::zero(); phi];
        target[0] = BigRational::one();
        // y · rows = e_0  <=>  rows^T y^T = e_0^T
        let cols: Vec<Vec<BigRational>> = (0..phi)
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        let y = solve_rational(&cols, &target)?;
        Some(Self::from_coefficients(self.conductor, &y).expect("length matches"))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The Galois automorphism `ζ_M ↦ ζ_M^c` (`gcd(c, M) = 1`).
    pub fn galois(&self, c: i64) -> Self {
        let m = self.conductor;
        if m == 1 {
            return self.clone();
        }
        let c = c.rem_euclid(m as i64) as u64;
        assert_eq!(gcd(c, m), 1, "{c} is not a unit modulo {m}");
        let mut v = vec![BigInt::zero(); m as usize];
        for (i, x) in self.num.iter().enumerate() {
            v[(i as u64 * c % m) as usize] = x.clone();
        }
        CycNumber {
            conductor: m,
            num: reduce(m, v),
            den: self.den.clone(),
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// True iff the number lies in `Z[ζ_M]`. The power basis is an integral
    /// basis, so this is integrality of every coordinate.
    pub fn is_algebraic_integer(&self) -> bool {
        self.den.is_one()
    }

    /// True iff the number is fixed by every automorphism fixing `ζ_{M'}`,
    /// i.e. it lies in Q(ζ_{M'}). `M'` must divide the conductor.
    pub fn lies_in_conductor(&self, m_prime: u64) -> bool {
        let m = self.conductor;
        if m_prime == 0 || !m.is_multiple_of(m_prime) {
            return self.embed(lcm(m, m_prime.max(1))).lies_in_conductor(m_prime.max(1));
        }
        (1..m)
            .filter(|&c| gcd(c, m) == 1 && c % m_prime == 1 % m_prime)
            .all(|c| self.galois(c as i64) == *self)
    }

    /// Rewrites the number with conductor `M'` (a divisor of the conductor);
    /// `None` if it does not lie in Q(ζ_{M'}).
    pub fn descend(&self, m_prime: u64) -> Option<Self> {
        let m = self.conductor;
        if !m.is_multiple_of(m_prime) {
            return None;
        }
        if m == m_prime {
            return Some(self.clone());
        }
        let k = euler_phi(m_prime) as usize;
        let phi = self.num.len();
        let images: Vec<Vec<BigRational>> = (0..k)
            .map(|i| Self::zeta(m_prime, i as i64).embed(m).coefficients())
            .collect();
        let eqs: Vec<Vec<BigRational>> = (0..phi)
            .map(|j| images.iter().map(|r| r[j].clone()).collect())
            .collect();
        let y = solve_rational(&eqs, &self.coefficients())?;
        Some(Self::from_coefficients(m_prime, &y).expect("length matches"))
    }

    /// Rewrites the number over the smallest conductor containing it.
    pub fn minimize_conductor(&self) -> Self {
        let m = self.conductor;
        let mut best = self.clone();
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            if d % 4 == 2 {
                continue;
            }
            if let Some(x) = self.descend(d) {
                best = x;
                break;
            }
        }
        best
    }

    /// Image under the reduction map `Z_(p)[ζ_M] → GF(q)` that sends
    /// `ζ_{q-1}` to the field's generator and kills `p`-power roots of unity
    /// (the inverse of the Teichmüller lift on roots of unity).
    ///
    /// Requires the `p'`-part of the conductor to divide `q - 1` and the
    /// denominator to be prime to `p`.
    pub fn reduce_mod_p(&self, field: &FiniteField) -> Result<Fq> {
        let p = field.characteristic() as u64;
        let (pa, m_prime) = split_part(self.conductor, p);
        let q1 = field.order() as u64 - 1;
        if !q1.is_multiple_of(m_prime) {
            return Err(Error::InvalidInput(format!(
                "GF({}) lacks primitive {m_prime}-th roots of unity",
                field.order()
            )));
        }
        let den = big_mod(&self.den, p);
        if den == 0 {
            return Err(Error::NonIntegralSolution(format!(
                "denominator of {self} is divisible by {p}"
            )));
        }
        // ζ_M = ζ_{p^a}^{c1} ζ_{M'}^{c2} with c2 = (p^a)^{-1} mod M'.
        let c2 = if m_prime == 1 { 0 } else { inv_mod(pa % m_prime, m_prime).unwrap() };
        let zeta_image = field.exp(q1 / m_prime * c2);
        let mut acc = 0;
        let mut power = 1;
        for c in &self.num {
            let cm = big_mod(c, p);
            if cm != 0 {
                acc = field.add(acc, field.mul(field.from_int(cm as i64), power));
            }
            power = field.mul(power, zeta_image);
        }
        Ok(field.div(acc, field.from_int(den as i64)))
    }

    pub fn to_value(&self) -> CycValue {
        CycValue {
            conductor: self.conductor,
            coefficients: self
                .coefficients()
                .into_iter()
                .map(|c| c.to_string())
                .collect(),
        }
    }

    pub fn from_value(v: &CycValue) -> Result<Self> {
        let coeffs = v
            .coefficients
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|_| Error::InvalidInput(format!("bad rational '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coefficients(v.conductor, &coeffs)
    }
}

fn big_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Solves `A y = b` over Q (`A` given by rows, possibly overdetermined);
/// `None` if inconsistent or not uniquely solvable.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < cols || m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| m[i][cols].clone()).collect())
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Self::common(self, other);
        a.den == b.den && a.num == b.num
    }
}
impl Eq for CycNumber {}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coefficients().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => c.to_string(),
                1 => format!("{c}*z{}", self.conductor),
                _ => format!("{c}*z{}^{i}", self.conductor),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({self})")
    }
}

impl From<i64> for CycNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(168).len(), 49);
    }

    #[test]
    fn zeta_relations() {
        let i = CycNumber::zeta(4, 1);
        assert_eq!(i.mul(&i), CycNumber::from_int(-1));
        let w = CycNumber::zeta(3, 1);
        assert_eq!(CycNumber::one().add(&w).add(&w.mul(&w)), CycNumber::zero());
        // compatible system: ζ_12^4 = ζ_3
        assert_eq!(CycNumber::zeta(12, 4), w);
        assert_eq!(CycNumber::zeta(8, 2), i);
    }

    #[test]
    fn inverse_and_conductors() {
        let x = CycNumber::zeta(5, 1).add(&CycNumber::from_rational(1, 3));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), CycNumber::one());
        let s = CycNumber::zeta(8, 1).add(&CycNumber::zeta(8, 7)); // √2
        assert!(s.lies_in_conductor(8));
        assert!(!s.lies_in_conductor(4));
        assert_eq!(s.mul(&s), CycNumber::from_int(2));
        let i = CycNumber::zeta(8, 2);
        assert!(i.lies_in_conductor(4));
        assert_eq!(i.descend(4).unwrap().conductor(), 4);
        assert_eq!(i.minimize_conductor().conductor(), 4);
    }

    #[test]
    fn integrality() {
        assert!(!CycNumber::from_rational(1, 2).is_algebraic_integer());
        assert!(CycNumber::zeta(4, 1).is_algebraic_integer());
        assert!(CycNumber::zeta(4, 1).lies_in_conductor(4));
    }

    #[test]
    fn reduction_mod_p() {
        let f = FiniteField::new(2, 2).unwrap();
        // ζ_3 ↦ generator of GF(4)^×
        assert_eq!(CycNumber::zeta(3, 1).reduce_mod_p(&f).unwrap(), f.generator());
        // ζ_4 ↦ 1 in characteristic 2
        assert_eq!(CycNumber::zeta(4, 1).reduce_mod_p(&f).unwrap(), 1);
        // ζ_12 = ζ_4^{c1} ζ_3^{c2}, c2 = 4^{-1} mod 3 = 1
        assert_eq!(CycNumber::zeta(12, 1).reduce_mod_p(&f).unwrap(), f.generator());
        assert!(CycNumber::from_rational(1, 2).reduce_mod_p(&f).is_err());
    }

    #[test]
    fn value_round_trip() {
        let x = CycNumber::zeta(7, 3).add(&CycNumber::from_rational(-5, 4));
        assert_eq!(CycNumber::from_value(&x.to_value()).unwrap(), x);
    }
}
