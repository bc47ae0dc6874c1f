//! Howell normal form over `Z/p^m`, giving canonical reduction modulo a
//! submodule, kernels, and solutions of linear systems.

use crate::arith::prime::{inv_mod, mul_mod, valuation};

/// Arithmetic in `Z/p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Zpm {
    pub p: u64,
    pub m: u32,
    pub modulus: u64,
}

impl Zpm {
    pub fn new(p: u64, m: u32) -> Self {
        Zpm {
            p,
            m,
            modulus: p.pow(m),
        }
    }
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.modulus as u128) as u64
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.modulus - b % self.modulus)
    }
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }
    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.modulus as i64) as u64
    }
    /// `p`-adic valuation, `m` for zero.
    pub fn val(&self, a: u64) -> u32 {
        if a == 0 {
            self.m
        } else {
            valuation(a, self.p)
        }
    }
    pub fn unit_inv(&self, a: u64) -> u64 {
        inv_mod(a, self.modulus).expect("unit")
    }
}

/// Row-style Howell form: pivot `p^v` at column `col` for each row, entries
/// above pivots reduced into `[0, p^v)`.
#[derive(Debug, Clone)]
pub struct Howell {
    pub z: Zpm,
    pub ncols: usize,
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<(usize, u32)>,
}

impl Howell {
    pub fn new(z: Zpm, ncols: usize, generators: Vec<Vec<u64>>) -> Self {
        let mut pool: Vec<Vec<u64>> = generators
            .into_iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..ncols {
            let best = pool
                .iter()
                .enumerate()
                .filter(|(_, r)| r[col] != 0)
                .min_by_key(|(_, r)| z.val(r[col]))
                .map(|(i, _)| i);
            let Some(i) = best else { continue };
            let mut piv = pool.swap_remove(i);
            let v = z.val(piv[col]);
            let pv = z.p.pow(v);
            let u = z.unit_inv(piv[col] / pv);
            for x in piv.iter_mut() {
                *x = z.mul(*x, u);
            }
            for r in pool.iter_mut() {
                if r[col] != 0 {
                    let q = r[col] / pv;
                    for (x, &y) in r.iter_mut().zip(&piv) {
                        *x = z.sub(*x, z.mul(q, y));
                    }
                }
            }
            if v > 0 {
                let s = z.p.pow(z.m - v);
                let extra: Vec<u64> = piv.iter().map(|&x| z.mul(x, s)).collect();
                if extra.iter().any(|&x| x != 0) {
                    pool.push(extra);
                }
            }
            pool.retain(|r| r.iter().any(|&x| x != 0));
            rows.push(piv);
            pivots.push((col, v));
        }
        let mut h = Howell {
            z,
            ncols,
            rows,
            pivots,
        };
        for j in 0..h.rows.len() {
            for k in j + 1..h.rows.len() {
                let (col, v) = h.pivots[k];
                let q = h.rows[j][col] / z.p.pow(v);
                if q != 0 {
                    let (head, tail) = h.rows.split_at_mut(k);
                    for (x, &y) in head[j].iter_mut().zip(&tail[0]) {
                        *x = z.sub(*x, z.mul(q, y));
                    }
                }
            }
        }
        h
    }

    /// Canonical representative of `v` modulo the row span.
    pub fn reduce(&self, v: &mut [u64]) {
        let z = self.z;
        for (row, &(col, val)) in self.rows.iter().zip(&self.pivots) {
            let q = v[col] / z.p.pow(val);
            if q != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = z.sub(*x, z.mul(q, y));
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Number of elements of the quotient `(Z/p^m)^ncols / span`, as a base-`p` exponent.
    pub fn quotient_log_order(&self) -> u64 {
        let mut total = self.ncols as u64 * self.z.m as u64;
        for &(_, v) in &self.pivots {
            total -= (self.z.m - v) as u64;
        }
        total
    }

    /// Per-column bounds of canonical representatives.
    pub fn canonical_bounds(&self) -> Vec<u64> {
        let mut b = vec![self.z.modulus; self.ncols];
        for &(col, v) in &self.pivots {
            b[col] = self.z.p.pow(v);
        }
        b
    }

    pub fn is_submodule_of(&self, other: &Howell) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Relations among generators: the span of all `a` with `Σ a_l g_l = 0`.
pub fn left_kernel(z: Zpm, ncols: usize, generators: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let aug = augmented(z, ncols, generators);
    aug.rows
        .iter()
        .filter(|r| r[..ncols].iter().all(|&x| x == 0))
        .map(|r| r[ncols..].to_vec())
        .collect()
}

/// Solver for `x = Σ a_l g_l`.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    ncols: usize,
    aug: Howell,
}

impl SpanSolver {
    pub fn new(z: Zpm, ncols: usize, generators: &[Vec<u64>]) -> Self {
        SpanSolver {
            ncols,
            aug: augmented(z, ncols, generators),
        }
    }
    pub fn solve(&self, x: &[u64]) -> Option<Vec<u64>> {
        let z = self.aug.z;
        let mut w = x.to_vec();
        w.resize(self.aug.ncols, 0);
        self.aug.reduce(&mut w);
        if w[..self.ncols].iter().any(|&c| c != 0) {
            return None;
        }
        Some(w[self.ncols..].iter().map(|&c| z.neg(c)).collect())
    }
}

fn augmented(z: Zpm, ncols: usize, generators: &[Vec<u64>]) -> Howell {
    let l = generators.len();
    let rows = generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut r = g.clone();
            r.resize(ncols + l, 0);
            r[ncols + i] = 1;
            r
        })
        .collect();
    Howell::new(z, ncols + l, rows)
}
