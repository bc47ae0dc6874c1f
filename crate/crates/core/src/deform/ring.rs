//! Finite local coefficient rings: quotients of a truncated polynomial ring
//! `GR(p^m, e)[t_1, …, t_r] / (t)^cap` by an ideal inside the maximal ideal.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::howell::{Howell, Zpm};
use crate::arith::{FiniteField, Fq, GaloisRing};
use crate::error::{Error, Result};

/// Ring elements: canonical coordinate vectors, indexed by
/// `monomial * e + s` for the coefficient of `θ^s t^β`.
pub type Elem = Vec<u64>;

#[derive(Clone)]
pub struct LocalAlgebra {
    gr: GaloisRing,
    z: Zpm,
    nvars: usize,
    degree_cap: u32,
    monomials: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    ideal: Howell,
    name: String,
}

impl fmt::Debug for LocalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalAlgebra({})", self.name)
    }
}

fn monomials(nvars: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; nvars]];
    for d in 1..cap {
        let mut layer = Vec::new();
        let mut stack = vec![(Vec::new(), d)];
        while let Some((prefix, left)) = stack.pop() {
            if prefix.len() == nvars {
                if left == 0 {
                    layer.push(prefix);
                }
                continue;
            }
            for k in (0..=left).rev() {
                let mut next = prefix.clone();
                next.push(k);
                stack.push((next, left - k));
            }
        }
        layer.sort_by(|a, b| b.cmp(a));
        out.extend(layer);
    }
    if nvars == 0 {
        out.truncate(1);
    }
    out
}

impl LocalAlgebra {
    /// `GR(p^m, e)[t_1..t_r] / (t)^cap` with no further relations.
    pub fn ambient(field: Arc<FiniteField>, precision: u32, nvars: usize, degree_cap: u32) -> Result<Self> {
        if degree_cap == 0 {
            return Err(Error::InvalidInput("degree cap must be positive".into()));
        }
        let gr = GaloisRing::new(field.clone(), precision)?;
        let z = Zpm::new(field.characteristic() as u64, precision);
        let monomials = monomials(nvars, degree_cap);
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let ncols = monomials.len() * field.degree() as usize;
        Ok(LocalAlgebra {
            gr,
            z,
            nvars,
            degree_cap,
            monomials,
            index,
            ideal: Howell::new(z, ncols, Vec::new()),
            name: format!(
                "GR({}^{}, {})[t; {}]/(t)^{}",
                field.characteristic(),
                precision,
                field.degree(),
                nvars,
                degree_cap
            ),
        })
    }

    /// The residue field itself.
    pub fn residue_field(field: Arc<FiniteField>) -> Self {
        Self::ambient(field, 1, 0, 1).expect("valid").named("k")
    }

    /// `W(k)/p^m`.
    pub fn witt(field: Arc<FiniteField>, precision: u32) -> Result<Self> {
        let p = field.characteristic();
        Ok(Self::ambient(field, precision, 0, 1)?.named(&format!("W/{p}^{precision}")))
    }

    /// `k[t]/(t^cap)`; `cap = 2` gives the dual numbers.
    pub fn truncated_polynomial(field: Arc<FiniteField>, cap: u32) -> Result<Self> {
        Ok(Self::ambient(field, 1, 1, cap)?.named(&format!("k[t]/(t^{cap})")))
    }

    pub fn dual_numbers(field: Arc<FiniteField>) -> Self {
        Self::truncated_polynomial(field, 2).expect("valid").named("k[e]")
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Quotient by the ideal generated by `relations` (ambient vectors).
    pub fn quotient(&self, relations: &[Elem]) -> Result<Self> {
        let mut gens = self.ideal.rows.clone();
        for f in relations {
            if self.residue(f) != 0 {
                return Err(Error::InvalidInput("relation is a unit".into()));
            }
            for mono in 0..self.monomials.len() {
                for s in 0..self.e() {
                    let mut x = self.zero_raw();
                    x[mono * self.e() + s] = 1;
                    let prod = self.mul_raw(&x, f);
                    if prod.iter().any(|&c| c != 0) {
                        gens.push(prod);
                    }
                }
            }
        }
        let mut out = self.clone();
        out.ideal = Howell::new(self.z, self.ncols(), gens);
        out.name = format!("{}/({} relations)", self.name, relations.len());
        Ok(out)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.gr.field()
    }
    pub fn galois_ring(&self) -> &GaloisRing {
        &self.gr
    }
    pub fn zpm(&self) -> Zpm {
        self.z
    }
    pub fn p(&self) -> u64 {
        self.z.p
    }
    pub fn precision(&self) -> u32 {
        self.z.m
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }
    pub fn monomial_list(&self) -> &[Vec<u32>] {
        &self.monomials
    }
    pub fn ideal(&self) -> &Howell {
        &self.ideal
    }
    fn e(&self) -> usize {
        self.field().degree() as usize
    }
    pub fn ncols(&self) -> usize {
        self.monomials.len() * self.e()
    }

    /// Same ambient ring (coefficients, variables, truncation).
    pub fn same_ambient(&self, other: &LocalAlgebra) -> bool {
        self.field() == other.field()
            && self.z == other.z
            && self.nvars == other.nvars
            && self.degree_cap == other.degree_cap
    }

    /// Same ambient and same relation ideal.
    pub fn same_ring(&self, other: &LocalAlgebra) -> bool {
        self.same_ambient(other)
            && self.ideal.is_submodule_of(&other.ideal)
            && other.ideal.is_submodule_of(&self.ideal)
    }

    fn zero_raw(&self) -> Elem {
        vec![0; self.ncols()]
    }

    /// Canonical form of an ambient vector.
    pub fn reduce(&self, mut x: Elem) -> Elem {
        self.ideal.reduce(&mut x);
        x
    }

    pub fn zero(&self) -> Elem {
        self.zero_raw()
    }
    pub fn one(&self) -> Elem {
        self.from_int(1)
    }
    pub fn from_int(&self, n: i64) -> Elem {
        let mut x = self.zero_raw();
        x[0] = self.z.from_int(n);
        self.reduce(x)
    }
    pub fn from_gr(&self, c: &[u64]) -> Elem {
        let mut x = self.zero_raw();
        for (s, &v) in c.iter().enumerate() {
            x[s] = v % self.z.modulus;
        }
        self.reduce(x)
    }
    /// Teichmüller lift of a residue-field element.
    pub fn teichmueller(&self, a: Fq) -> Elem {
        self.from_gr(&self.gr.teichmueller(a))
    }
    /// Monomial `c · t^β`.
    pub fn monomial(&self, exps: &[u32], c: i64) -> Elem {
        let mut x = self.zero_raw();
        if let Some(&i) = self.index.get(exps) {
            x[i * self.e()] = self.z.from_int(c);
        }
        self.reduce(x)
    }
    pub fn var(&self, i: usize) -> Elem {
        let mut exps = vec![0; self.nvars];
        exps[i] = 1;
        self.monomial(&exps, 1)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(a.iter().zip(b).map(|(&x, &y)| self.z.add(x, y)).collect())
    }
    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(a.iter().zip(b).map(|(&x, &y)| self.z.sub(x, y)).collect())
    }
    pub fn neg(&self, a: &Elem) -> Elem {
        self.reduce(a.iter().map(|&x| self.z.neg(x)).collect())
    }
    pub fn scale_int(&self, a: &Elem, c: i64) -> Elem {
        let c = self.z.from_int(c);
        self.reduce(a.iter().map(|&x| self.z.mul(x, c)).collect())
    }

    fn coefficient(&self, a: &Elem, mono: usize) -> Vec<u64> {
        a[mono * self.e()..(mono + 1) * self.e()].to_vec()
    }

    fn mul_raw(&self, a: &Elem, b: &Elem) -> Elem {
        let e = self.e();
        let mut out = self.zero_raw();
        for (i, mi) in self.monomials.iter().enumerate() {
            let ca = self.coefficient(a, i);
            if ca.iter().all(|&x| x == 0) {
                continue;
            }
            for (j, mj) in self.monomials.iter().enumerate() {
                let cb = self.coefficient(b, j);
                if cb.iter().all(|&x| x == 0) {
                    continue;
                }
                let exps: Vec<u32> = mi.iter().zip(mj).map(|(x, y)| x + y).collect();
                let Some(&k) = self.index.get(&exps) else { continue };
                let prod = self.gr.mul(&ca, &cb);
                for s in 0..e {
                    out[k * e + s] = self.z.add(out[k * e + s], prod[s]);
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(self.mul_raw(a, b))
    }

    pub fn pow(&self, a: &Elem, mut k: u64) -> Elem {
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

    /// The residue map `π_R`.
    pub fn residue(&self, a: &Elem) -> Fq {
        self.gr.residue(&self.coefficient(a, 0))
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.residue(a) != 0
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        let r = self.residue(a);
        if r == 0 {
            return None;
        }
        let two = self.from_int(2);
        let mut x = self.teichmueller(self.field().inv(r));
        for _ in 0..128 {
            let next = self.mul(&x, &self.sub(&two, &self.mul(a, &x)));
            if next == x {
                return Some(x);
            }
            x = next;
        }
        unreachable!("maximal ideal is nilpotent")
    }

    /// Multiplication by a residue-field scalar through its Teichmüller lift.
    pub fn scale_residue(&self, a: &Elem, c: Fq) -> Elem {
        self.mul(a, &self.teichmueller(c))
    }

    /// Number of elements as a power of `p`.
    pub fn log_order(&self) -> u64 {
        self.ideal.quotient_log_order()
    }

    /// All elements in canonical form; `None` beyond `cap` elements.
    pub fn elements(&self, cap: u64) -> Option<Vec<Elem>> {
        let bounds = self.ideal.canonical_bounds();
        let total = bounds.iter().try_fold(1u64, |acc, &b| acc.checked_mul(b))?;
        if total > cap {
            return None;
        }
        let mut out = Vec::with_capacity(total as usize);
        let mut cur = vec![0u64; bounds.len()];
        loop {
            out.push(cur.clone());
            let mut i = 0;
            loop {
                if i == cur.len() {
                    return Some(out);
                }
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// Elements of the maximal ideal.
    pub fn maximal_ideal_elements(&self, cap: u64) -> Option<Vec<Elem>> {
        Some(self.elements(cap)?.into_iter().filter(|x| self.residue(x) == 0).collect())
    }

    /// Ambient vectors generating `m^k` as an ideal.
    pub fn maximal_power_generators(&self, k: u32) -> Vec<Elem> {
        let mut out = Vec::new();
        for (i, mono) in self.monomials.iter().enumerate() {
            let deg: u32 = mono.iter().sum();
            if deg > k {
                continue;
            }
            let a = k - deg;
            if a >= self.z.m {
                continue;
            }
            let mut x = self.zero_raw();
            x[i * self.e()] = self.z.p.pow(a);
            out.push(x);
        }
        out
    }

    /// Least `N` with `m^N = 0`.
    pub fn nilpotency_index(&self) -> u32 {
        let mut k = 1;
        loop {
            let gens = self.maximal_power_generators(k);
            if gens.iter().all(|g| self.ideal.contains(g)) {
                return k;
            }
            k += 1;
        }
    }

    /// Ring map from `self` to `target` sending `t_i` to `images[i]`
    /// and reducing Witt coefficients; defined on ambient vectors.
    pub fn evaluate(&self, x: &Elem, target: &LocalAlgebra, images: &[Elem]) -> Elem {
        let mut acc = target.zero();
        for (i, mono) in self.monomials.iter().enumerate() {
            let c = self.coefficient(x, i);
            if c.iter().all(|&v| v == 0) {
                continue;
            }
            let mut term = target.from_gr(&c);
            for (v, &k) in mono.iter().enumerate() {
                if k > 0 {
                    term = target.mul(&term, &target.pow(&images[v], k as u64));
                }
            }
            acc = target.add(&acc, &term);
        }
        acc
    }

    /// Human-readable polynomial form of an ambient vector.
    pub fn format(&self, x: &Elem) -> String {
        let names: Vec<String> = if self.nvars == 1 {
            vec!["t".into()]
        } else {
            (1..=self.nvars).map(|i| format!("t{i}")).collect()
        };
        let mut order: Vec<usize> = (0..self.monomials.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.monomials[i].iter().sum::<u32>()));
        let mut terms = Vec::new();
        for i in order {
            let c = self.coefficient(x, i);
            if c.iter().all(|&v| v == 0) {
                continue;
            }
            let coeff = if self.e() == 1 {
                c[0].to_string()
            } else {
                format!("({})", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            };
            let vars: Vec<String> = self.monomials[i]
                .iter()
                .zip(&names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
                .collect();
            let term = match (coeff.as_str(), vars.is_empty()) {
                (_, true) => coeff,
                ("1", false) => vars.join("*"),
                _ => format!("{coeff}*{}", vars.join("*")),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, e: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, e).unwrap())
    }

    #[test]
    fn orders_and_nilpotency() {
        let z8 = LocalAlgebra::witt(gf(2, 1), 3).unwrap();
        assert_eq!(z8.log_order(), 3);
        assert_eq!(z8.nilpotency_index(), 3);
        let k4e = LocalAlgebra::dual_numbers(gf(2, 2));
        assert_eq!(k4e.elements(1000).unwrap().len(), 16);
        assert_eq!(k4e.nilpotency_index(), 2);
        let xy = LocalAlgebra::ambient(gf(2, 1), 1, 2, 2).unwrap();
        assert_eq!(xy.log_order(), 3);
    }

    #[test]
    fn quotient_relation() {
        let amb = LocalAlgebra::ambient(gf(2, 1), 3, 1, 3).unwrap();
        let t = amb.var(0);
        let rel = amb.add(&amb.mul(&t, &t), &amb.scale_int(&t, 2));
        let r = amb.quotient(&[rel]).unwrap();
        let t2 = r.mul(&t, &t);
        assert_eq!(t2, r.neg(&r.scale_int(&t, 2)));
        let u = r.add(&r.one(), &t);
        let ui = r.inv(&u).unwrap();
        assert_eq!(r.mul(&u, &ui), r.one());
    }
}
