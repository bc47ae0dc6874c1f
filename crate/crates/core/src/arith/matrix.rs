//! Dense matrices over a [`FiniteField`], row-vector convention.

use super::gf::{FiniteField, Fq};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Fq>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(n: usize, c: Fq) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Fq>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fq) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fq>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = f.add(*o, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat, f: &FiniteField) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: Fq, f: &FiniteField) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `v · self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[Fq], f: &FiniteField) -> Vec<Fq> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let brow = self.row(k);
            for (o, &b) in out.iter_mut().zip(brow) {
                if b != 0 {
                    *o = f.add(*o, f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut k: u64, f: &FiniteField) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            k >>= 1;
        }
        acc
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &FiniteField) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            let pivot_row: Vec<Fq> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                for (j, &pv) in (c..cols).zip(&pivot_row) {
                    if pv != 0 {
                        let x = &mut self.data[i * cols + j];
                        *x = f.add(*x, f.mul(nf, pv));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis (as rows) of `{x : self · x^T = 0}`.
    pub fn right_kernel(&self, f: &FiniteField) -> Vec<Vec<Fq>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let cols = self.cols;
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis (as rows) of `{v : v · self = 0}`.
    pub fn left_kernel(&self, f: &FiniteField) -> Vec<Vec<Fq>> {
        self.transpose().right_kernel(f)
    }

    pub fn inverse(&self, f: &FiniteField) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1;
        }
        let piv = aug.rref(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = aug.data[i * 2 * n + n + j];
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients low to high.
    pub fn charpoly(&self, f: &FiniteField) -> Vec<Fq> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut h = self.clone();
        // Hessenberg reduction by similarity.
        for c in 0..n.saturating_sub(2) {
            let Some(piv) = (c + 1..n).find(|&i| h.get(i, c) != 0) else {
                continue;
            };
            if piv != c + 1 {
                for j in 0..n {
                    h.data.swap(piv * n + j, (c + 1) * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + piv, i * n + c + 1);
                }
            }
            let inv = f.inv(h.get(c + 1, c));
            for i in c + 2..n {
                let m = f.mul(h.get(i, c), inv);
                if m == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(h.get(i, j), f.mul(m, h.get(c + 1, j)));
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, c + 1), f.mul(m, h.get(r, i)));
                    h.set(r, c + 1, v);
                }
            }
        }
        // Recurrence on leading principal minors of xI - H.
        let mut polys: Vec<Vec<Fq>> = vec![vec![1]];
        for k in 0..n {
            let mut next = vec![0; k + 2];
            for (i, &c) in polys[k].iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], c);
                next[i] = f.sub(next[i], f.mul(h.get(k, k), c));
            }
            let mut prod = 1;
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                if prod == 0 {
                    break;
                }
                let coef = f.mul(prod, h.get(i, k));
                if coef == 0 {
                    continue;
                }
                for (j, &c) in polys[i].iter().enumerate() {
                    next[j] = f.sub(next[j], f.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

pub fn poly_eval(poly: &[Fq], x: Fq, f: &FiniteField) -> Fq {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// An echelonized subspace of `GF(q)^n`, kept in reduced form.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub n: usize,
    pub basis: Vec<Vec<Fq>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(n: usize) -> Self {
        Subspace {
            n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &mut [Fq], f: &FiniteField) {
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in v.iter_mut().zip(b) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Fq], f: &FiniteField) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns the reduced new basis vector if the dimension grew.
    pub fn insert(&mut self, v: &[Fq], f: &FiniteField) -> Option<Vec<Fq>> {
        let mut w = v.to_vec();
        self.reduce(&mut w, f);
        let pc = w.iter().position(|&x| x != 0)?;
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for b in self.basis.iter_mut() {
            let c = b[pc];
            if c != 0 {
                let nc = f.neg(c);
                for (x, &y) in b.iter_mut().zip(&w) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(nc, y));
                    }
                }
            }
        }
        self.basis.push(w.clone());
        self.pivots.push(pc);
        Some(w)
    }

    /// Coordinates of `v` (assumed in the span) with respect to the basis.
    pub fn coordinates(&self, v: &[Fq]) -> Vec<Fq> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    pub fn to_mat(&self) -> Mat {
        if self.basis.is_empty() {
            return Mat::zeros(0, self.n);
        }
        Mat::from_rows(&self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let f = FiniteField::new(3, 1).unwrap();
        let a = Mat::from_rows(&[vec![1, 2], vec![0, 1]]);
        let ai = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&ai, &f), Mat::identity(2));
        let s = Mat::from_rows(&[vec![1, 2], vec![2, 1]]);
        assert!(s.inverse(&f).is_none());
        let k = s.right_kernel(&f);
        assert_eq!(k, vec![vec![1, 1]]);
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let f = FiniteField::new(7, 1).unwrap();
        let a = Mat::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![0, 1, 1]]);
        let cp = a.charpoly(&f);
        assert_eq!(cp.len(), 4);
        assert_eq!(cp[3], 1);
        // det(xI - A) at x = λ vanishes exactly where λI - A is singular.
        for x in 0..7 {
            let m = Mat::scalar(3, x).sub(&a, &f);
            assert_eq!(poly_eval(&cp, x, &f) == 0, m.rank(&f) < 3);
        }
    }
}
