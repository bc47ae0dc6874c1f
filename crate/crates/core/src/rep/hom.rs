//! Module homomorphisms, endomorphism rings and the stable endomorphism ring.

use super::matrep::MatRep;
use crate::arith::{Fq, Mat, Subspace};
use crate::exec::Exec;

/// Basis of `Hom_{kG}(V, W)`: matrices `X` with `ρ_V(g) X = X ρ_W(g)`.
pub fn hom_space(v: &MatRep, w: &MatRep) -> Vec<Mat> {
    let f = v.field();
    let (a, b) = (v.dim(), w.dim());
    let unknowns = a * b;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut eqs = Subspace::new(unknowns);
    for (rv, rw) in v.generator_images().iter().zip(w.generator_images()) {
        for r in 0..a {
            for c in 0..b {
                let mut row = vec![0 as Fq; unknowns];
                for k in 0..a {
                    let x = rv.get(r, k);
                    if x != 0 {
                        row[k * b + c] = f.add(row[k * b + c], x);
                    }
                }
                for k in 0..b {
                    let y = rw.get(k, c);
                    if y != 0 {
                        row[r * b + k] = f.sub(row[r * b + k], y);
                    }
                }
                eqs.insert(&row, f);
                if eqs.dim() == unknowns {
                    return Vec::new();
                }
            }
        }
    }
    let kernel = if eqs.dim() == 0 {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![0; unknowns];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        eqs.to_mat().right_kernel(f)
    };
    kernel
        .into_iter()
        .map(|x| Mat {
            rows: a,
            cols: b,
            data: x,
        })
        .collect()
}

pub fn hom_dim(v: &MatRep, w: &MatRep) -> usize {
    hom_space(v, w).len()
}

/// Basis of `End_{kG}(V)`.
pub fn end_ring(v: &MatRep) -> Vec<Mat> {
    hom_space(v, v)
}

/// Dimension of the image of the trace map `X ↦ Σ_g ρ(g)^{-1} X ρ(g)` on
/// `End_k(V)`, i.e. of the endomorphisms factoring through a projective.
pub fn projective_endomorphism_dim(v: &MatRep, exec: Exec) -> usize {
    let f = v.field();
    let n = v.dim();
    let g = v.group();
    let images = v.images();
    let traces = exec.map_range(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let mut acc = vec![0 as Fq; n * n];
        for x in 0..g.order() {
            let left = &images[g.inv(x)];
            let right = &images[x];
            for r in 0..n {
                let c = left.get(r, i);
                if c == 0 {
                    continue;
                }
                for s in 0..n {
                    let d = right.get(j, s);
                    if d != 0 {
                        acc[r * n + s] = f.add(acc[r * n + s], f.mul(c, d));
                    }
                }
            }
        }
        acc
    });
    let mut span = Subspace::new(n * n);
    for t in traces {
        span.insert(&t, f);
    }
    span.dim()
}

/// `dim End_{kG}(V) − dim PEnd_{kG}(V)`.
pub fn stable_end(v: &MatRep) -> usize {
    stable_end_with(v, Exec::default())
}

pub fn stable_end_with(v: &MatRep, exec: Exec) -> usize {
    end_ring(v).len() - projective_endomorphism_dim(v, exec)
}
