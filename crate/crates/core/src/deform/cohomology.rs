//! Cohomology of a finite group with coefficients in the adjoint module
//! `ad ρ̄ = Mat_n(k)` (action `g·X = ρ̄(g) X ρ̄(g)⁻¹`), from the normalized
//! inhomogeneous bar complex.

use serde::{Deserialize, Serialize};

use crate::arith::{FiniteField, Fq, Mat};
use crate::error::{Error, Result};
use crate::rep::MatRep;

/// Cap on the number of entries of the dense `C² → C³` matrix.
pub const BAR_COMPLEX_CAP: u64 = 50_000_000;

/// Span of a list of vectors, remembering how each basis row arose from the
/// inputs.
#[derive(Debug, Clone)]
struct TrackedSpan {
    rows: Vec<(Vec<Fq>, Vec<Fq>)>,
    pivots: Vec<usize>,
    inputs: usize,
}

impl TrackedSpan {
    fn new(inputs: usize) -> Self {
        TrackedSpan {
            rows: Vec::new(),
            pivots: Vec::new(),
            inputs,
        }
    }

    fn reduce(&self, v: &mut [Fq], comb: &mut [Fq], f: &FiniteField) {
        for ((row, rc), &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let nc = f.neg(c);
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.add(*x, f.mul(nc, y));
                }
            }
            for (x, &y) in comb.iter_mut().zip(rc) {
                if y != 0 {
                    *x = f.add(*x, f.mul(nc, y));
                }
            }
        }
    }

    /// Adds input number `i`; returns the kernel relation if it is dependent.
    fn push(&mut self, i: usize, v: Vec<Fq>, f: &FiniteField) -> Option<Vec<Fq>> {
        let mut v = v;
        let mut comb = vec![0; self.inputs];
        comb[i] = 1;
        self.reduce(&mut v, &mut comb, f);
        match v.iter().position(|&x| x != 0) {
            None => Some(comb),
            Some(pc) => {
                let inv = f.inv(v[pc]);
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                self.rows.push((v, comb));
                self.pivots.push(pc);
                None
            }
        }
    }

    /// Coefficients `a` with `Σ a_i input_i = v`, if `v` is in the span.
    fn solve(&self, v: &[Fq], f: &FiniteField) -> Option<Vec<Fq>> {
        let mut w = v.to_vec();
        let mut comb = vec![0; self.inputs];
        self.reduce(&mut w, &mut comb, f);
        if w.iter().any(|&x| x != 0) {
            return None;
        }
        Some(comb.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Dimensions and explicit bases of `Hⁱ(G, ad ρ̄)` for `i ≤ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub cochain_dims: [usize; 4],
    pub cocycles_1: Vec<Vec<Fq>>,
    pub coboundaries_1: Vec<Vec<Fq>>,
    pub cocycles_2: Vec<Vec<Fq>>,
    pub coboundaries_2: Vec<Vec<Fq>>,
}

/// The normalized bar complex of `ad ρ̄` together with solvers for class
/// coordinates in `H¹` and `H²`.
#[derive(Debug, Clone)]
pub struct BarComplex {
    residual: MatRep,
    n2: usize,
    nonid: Vec<usize>,
    pos: Vec<Option<usize>>,
    h0: usize,
    z1: Vec<Vec<Fq>>,
    b1: Vec<Vec<Fq>>,
    z2: Vec<Vec<Fq>>,
    b2: Vec<Vec<Fq>>,
    /// `B¹` rows, then the chosen `H¹` representatives.
    h1_span: TrackedSpan,
    h1_basis: Vec<Vec<Fq>>,
    /// `d¹` rows, then the chosen `H²` representatives.
    h2_span: TrackedSpan,
    h2_basis: Vec<Vec<Fq>>,
    d1_rows: usize,
}

impl BarComplex {
    pub fn new(residual: &MatRep) -> Result<Self> {
        let g = residual.group();
        let f = residual.field().clone();
        let n = residual.dim();
        let n2 = n * n;
        let order = g.order();
        let m = (order - 1) as u64;
        let entries = m.pow(5) * (n2 as u64).pow(2);
        if entries > BAR_COMPLEX_CAP {
            return Err(Error::BarComplexBudgetExceeded(format!(
                "|G| = {order}, n = {n}: {entries} matrix entries"
            )));
        }
        let nonid: Vec<usize> = (1..order).collect();
        let mut pos = vec![None; order];
        for (i, &x) in nonid.iter().enumerate() {
            pos[x] = Some(i);
        }
        let images = residual.images();
        let inverses: Vec<Mat> = images.iter().map(|a| a.inverse(&f).expect("invertible")).collect();
        // act[x][ab] = ρ(x) E_ab ρ(x)^{-1} flattened
        let act: Vec<Vec<Vec<Fq>>> = (0..order)
            .map(|x| {
                (0..n2)
                    .map(|ab| {
                        let (a, b) = (ab / n, ab % n);
                        let mut out = vec![0; n2];
                        for i in 0..n {
                            for j in 0..n {
                                out[i * n + j] = f.mul(images[x].get(i, a), inverses[x].get(b, j));
                            }
                        }
                        out
                    })
                    .collect()
            })
            .collect();
        let mm = nonid.len();
        let c2 = mm * mm * n2;
        let c3 = mm * mm * mm * n2;
        let add_into = |v: &mut [Fq], offset: usize, w: &[Fq], sign: bool| {
            for (k, &y) in w.iter().enumerate() {
                if y != 0 {
                    let y = if sign { y } else { f.neg(y) };
                    v[offset + k] = f.add(v[offset + k], y);
                }
            }
        };
        let unit = |ab: usize| {
            let mut u = vec![0; n2];
            u[ab] = 1;
            u
        };
        // d⁰
        let mut d0 = TrackedSpan::new(n2);
        let mut h0 = 0;
        for ab in 0..n2 {
            let mut v = vec![0; mm * n2];
            for (gi, &x) in nonid.iter().enumerate() {
                add_into(&mut v, gi * n2, &act[x][ab], true);
                add_into(&mut v, gi * n2, &unit(ab), false);
            }
            if d0.push(ab, v, &f).is_some() {
                h0 += 1;
            }
        }
        let b1: Vec<Vec<Fq>> = d0.rows.iter().map(|r| r.0.clone()).collect();
        // d¹
        let mut d1 = TrackedSpan::new(mm * n2);
        let mut z1 = Vec::new();
        let mut d1_images = Vec::with_capacity(mm * n2);
        for (hi, &h0e) in nonid.iter().enumerate() {
            for ab in 0..n2 {
                let mut v = vec![0; c2];
                for (gi, &x) in nonid.iter().enumerate() {
                    add_into(&mut v, (gi * mm + hi) * n2, &act[x][ab], true);
                    let y = g.mul(g.inv(x), h0e);
                    if let Some(yi) = pos[y] {
                        add_into(&mut v, (gi * mm + yi) * n2, &unit(ab), false);
                    }
                }
                for yi in 0..mm {
                    add_into(&mut v, (hi * mm + yi) * n2, &unit(ab), true);
                }
                d1_images.push(v.clone());
                if let Some(k) = d1.push(hi * n2 + ab, v, &f) {
                    z1.push(k);
                }
            }
        }
        let b2: Vec<Vec<Fq>> = d1.rows.iter().map(|r| r.0.clone()).collect();
        // d²
        let mut d2 = TrackedSpan::new(c2);
        let mut z2 = Vec::new();
        for gi in 0..mm {
            for hi in 0..mm {
                let (x, y) = (nonid[gi], nonid[hi]);
                for ab in 0..n2 {
                    let mut v = vec![0; c3];
                    let idx3 = |a: usize, b: usize, c: usize| ((a * mm + b) * mm + c) * n2;
                    // c = E_ab at (x, y); (dc)(g1,g2,g3) = g1·c(g2,g3) − c(g1g2,g3) + c(g1,g2g3) − c(g1,g2)
                    for (g1i, &g1) in nonid.iter().enumerate() {
                        add_into(&mut v, idx3(g1i, gi, hi), &act[g1][ab], true);
                    }
                    for (g1i, &g1) in nonid.iter().enumerate() {
                        let g2 = g.mul(g.inv(g1), x);
                        if let Some(g2i) = pos[g2] {
                            add_into(&mut v, idx3(g1i, g2i, hi), &unit(ab), false);
                        }
                    }
                    for (g3i, &g3) in nonid.iter().enumerate() {
                        let g2 = g.mul(y, g.inv(g3));
                        if let Some(g2i) = pos[g2] {
                            add_into(&mut v, idx3(gi, g2i, g3i), &unit(ab), true);
                        }
                    }
                    for g3i in 0..mm {
                        add_into(&mut v, idx3(gi, hi, g3i), &unit(ab), false);
                    }
                    if let Some(k) = d2.push((gi * mm + hi) * n2 + ab, v, &f) {
                        z2.push(k);
                    }
                }
            }
        }
        // H¹ complement of B¹ inside Z¹
        let mut h1_span = TrackedSpan::new(b1.len() + z1.len());
        for (i, v) in b1.iter().enumerate() {
            h1_span.push(i, v.clone(), &f);
        }
        let mut h1_basis = Vec::new();
        for v in &z1 {
            let i = b1.len() + h1_basis.len();
            if h1_span.push(i, v.clone(), &f).is_none() {
                h1_basis.push(v.clone());
            }
        }
        // H² complement of B² inside Z², spanned with all d¹ images
        let mut h2_span = TrackedSpan::new(d1_images.len() + z2.len());
        for (i, v) in d1_images.iter().enumerate() {
            h2_span.push(i, v.clone(), &f);
        }
        let mut h2_basis = Vec::new();
        for v in &z2 {
            let i = d1_images.len() + h2_basis.len();
            if h2_span.push(i, v.clone(), &f).is_none() {
                h2_basis.push(v.clone());
            }
        }
        Ok(BarComplex {
            residual: residual.clone(),
            n2,
            nonid,
            pos,
            h0,
            z1,
            b1,
            z2,
            b2,
            h1_span,
            h1_basis,
            h2_span,
            h2_basis,
            d1_rows: d1_images.len(),
        })
    }

    pub fn residual(&self) -> &MatRep {
        &self.residual
    }
    pub fn h0(&self) -> usize {
        self.h0
    }
    pub fn h1(&self) -> usize {
        self.h1_basis.len()
    }
    pub fn h2(&self) -> usize {
        self.h2_basis.len()
    }
    /// Cocycle representatives of an `H¹` basis.
    pub fn h1_basis(&self) -> &[Vec<Fq>] {
        &self.h1_basis
    }
    pub fn h2_basis(&self) -> &[Vec<Fq>] {
        &self.h2_basis
    }

    /// Position of `(g, entry)` in a 1-cochain vector; `None` for the identity.
    pub fn c1_index(&self, g: usize, entry: usize) -> Option<usize> {
        self.pos[g].map(|i| i * self.n2 + entry)
    }
    /// Position of `(g, h, entry)` in a 2-cochain vector.
    pub fn c2_index(&self, g: usize, h: usize, entry: usize) -> Option<usize> {
        let m = self.nonid.len();
        Some((self.pos[g]? * m + self.pos[h]?) * self.n2 + entry)
    }
    pub fn c1_dim(&self) -> usize {
        self.nonid.len() * self.n2
    }
    pub fn c2_dim(&self) -> usize {
        self.nonid.len() * self.nonid.len() * self.n2
    }

    /// `H¹` coordinates of a 1-cocycle.
    pub fn h1_coordinates(&self, cocycle: &[Fq]) -> Result<Vec<Fq>> {
        let f = self.residual.field();
        let a = self
            .h1_span
            .solve(cocycle, f)
            .ok_or_else(|| Error::InternalInconsistency("not a 1-cocycle".into()))?;
        Ok(a[self.b1.len()..self.b1.len() + self.h1()].to_vec())
    }

    /// `H²` coordinates of a 2-cocycle.
    pub fn h2_coordinates(&self, cocycle: &[Fq]) -> Result<Vec<Fq>> {
        let f = self.residual.field();
        let a = self
            .h2_span
            .solve(cocycle, f)
            .ok_or_else(|| Error::InternalInconsistency("not a 2-cocycle".into()))?;
        Ok(a[self.d1_rows..self.d1_rows + self.h2()].to_vec())
    }

    /// A 1-cochain `φ` with `dφ = c`, if `c` is a coboundary.
    pub fn solve_coboundary(&self, c: &[Fq]) -> Option<Vec<Fq>> {
        let f = self.residual.field();
        let a = self.h2_span.solve(c, f)?;
        if a[self.d1_rows..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(a[..self.d1_rows].to_vec())
    }

    /// The cocycle `Σ λ_i β_i` for `H¹` coordinates `λ`.
    pub fn h1_cocycle(&self, coords: &[Fq]) -> Vec<Fq> {
        let f = self.residual.field();
        let mut out = vec![0; self.c1_dim()];
        for (&c, b) in coords.iter().zip(&self.h1_basis) {
            for (x, &y) in out.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        out
    }

    pub fn report(&self) -> CohomologyReport {
        let mm = self.nonid.len();
        CohomologyReport {
            h0: self.h0,
            h1: self.h1(),
            h2: self.h2(),
            cochain_dims: [self.n2, mm * self.n2, mm * mm * self.n2, mm * mm * mm * self.n2],
            cocycles_1: self.z1.clone(),
            coboundaries_1: self.b1.clone(),
            cocycles_2: self.z2.clone(),
            coboundaries_2: self.b2.clone(),
        }
    }
}

/// `(h⁰, h¹, h²)` of `ad ρ̄` with explicit cocycle and coboundary bases.
pub fn cohomology_dims(residual: &MatRep) -> Result<CohomologyReport> {
    Ok(BarComplex::new(residual)?.report())
}
