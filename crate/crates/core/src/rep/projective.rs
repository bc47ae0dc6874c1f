//! Projective indecomposable modules, projective covers, syzygies and Ext.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::brauer::{simples, SimpleModule};
use super::hom::hom_space;
use super::matrep::MatRep;
use crate::arith::matrix::poly_eval;
use crate::arith::{FiniteField, Fq, Mat, Subspace};
use crate::error::{Error, Result};
use crate::group::Group;

/// Largest group order for which the regular module is split into
/// projective indecomposables.
pub const PROJECTIVE_ORDER_CAP: usize = 400;
const SPLIT_ATTEMPTS: usize = 500;

/// Product in the group algebra, elements given by coefficient vectors.
pub fn group_algebra_mul(g: &Group, f: &FiniteField, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    let mut out = vec![0; g.order()];
    for (x, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (y, &cb) in b.iter().enumerate() {
            if cb != 0 {
                let z = g.mul(x, y);
                out[z] = f.add(out[z], f.mul(ca, cb));
            }
        }
    }
    out
}

/// A projective indecomposable `e kG` with `e` primitive.
#[derive(Debug, Clone)]
pub struct Pim {
    pub idempotent: Vec<Fq>,
    pub basis: Subspace,
    pub rep: MatRep,
}

/// Simples of `kG` together with their projective covers.
#[derive(Debug, Clone)]
pub struct ProjectiveData {
    pub simples: Vec<SimpleModule>,
    pub pims: Vec<Pim>,
}

struct Piece {
    e: Vec<Fq>,
    space: Subspace,
}

fn rank_vector(simples: &[SimpleModule], e: &[Fq]) -> Vec<usize> {
    simples
        .iter()
        .map(|s| s.rep.algebra_image(e).rank(s.rep.field()))
        .collect()
}

/// Splits the regular module until every simple has a primitive idempotent.
pub fn projective_indecomposables(g: &Arc<Group>, p: u64, seed: u64) -> Result<ProjectiveData> {
    check_order(g)?;
    projective_data_from(g, simples(g, p, seed)?, seed)
}

fn check_order(g: &Group) -> Result<()> {
    if g.order() > PROJECTIVE_ORDER_CAP {
        return Err(Error::ProjectiveCoverBudgetExceeded(format!(
            "group order {} exceeds {PROJECTIVE_ORDER_CAP}",
            g.order()
        )));
    }
    Ok(())
}

/// As [`projective_indecomposables`], reusing already computed simples.
pub fn projective_data_from(g: &Arc<Group>, simples: Vec<SimpleModule>, seed: u64) -> Result<ProjectiveData> {
    check_order(g)?;
    let field = simples[0].rep.field().clone();
    let f: &FiniteField = &field;
    let regular = MatRep::regular(g.clone(), field.clone());
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut one = vec![0; n];
    one[0] = 1;
    let mut work = vec![Piece {
        space: regular.spin(&[one.clone()]),
        e: one,
    }];
    let mut found: Vec<Option<Pim>> = vec![None; simples.len()];
    while let Some(piece) = work.pop() {
        let ranks = rank_vector(&simples, &piece.e);
        let total: usize = ranks.iter().sum();
        if total == 1 {
            let t = ranks.iter().position(|&r| r == 1).unwrap();
            if found[t].is_none() {
                found[t] = Some(Pim {
                    rep: regular.submodule(&piece.space),
                    idempotent: piece.e,
                    basis: piece.space,
                });
            }
            continue;
        }
        if !ranks.iter().zip(&found).any(|(&r, x)| r > 0 && x.is_none()) {
            continue;
        }
        let (a, b) = split_piece(g, f, &piece, &mut rng)?;
        work.push(a);
        work.push(b);
    }
    let pims = found
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::InternalInconsistency("missing projective indecomposable".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProjectiveData { simples, pims })
}

/// Fitting decomposition of `e kG` under left multiplication by `e a e - λ e`.
fn split_piece(g: &Group, f: &FiniteField, piece: &Piece, rng: &mut ChaCha8Rng) -> Result<(Piece, Piece)> {
    let n = g.order();
    let d = piece.space.dim();
    let q = f.order();
    for _ in 0..SPLIT_ATTEMPTS {
        let a: Vec<Fq> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        let b = group_algebra_mul(g, f, &group_algebra_mul(g, f, &piece.e, &a), &piece.e);
        let mut m = Mat::zeros(d, d);
        for (i, u) in piece.space.basis.iter().enumerate() {
            let img = group_algebra_mul(g, f, &b, u);
            for (j, c) in piece.space.coordinates(&img).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        let cp = m.charpoly(f);
        let roots: Vec<Fq> = f.elements().filter(|&x| poly_eval(&cp, x, f) == 0).collect();
        if roots.len() < 2 {
            continue;
        }
        let shifted = m.sub(&Mat::scalar(d, roots[0]), f).pow(d as u64, f);
        let mut image = Subspace::new(d);
        for row in shifted.row_vecs() {
            image.insert(&row, f);
        }
        let kernel = shifted.left_kernel(f);
        if image.dim() == 0 || kernel.is_empty() {
            continue;
        }
        // Coordinates of e split along image ⊕ kernel.
        let mut full = image.basis.clone();
        full.extend(kernel.iter().cloned());
        let basis = Mat::from_rows(&full);
        let inv = basis.inverse(f).ok_or(Error::SingularSystem)?;
        let e_coords = piece.space.coordinates(&piece.e);
        let mix = inv.vec_mul(&e_coords, f);
        let mut img_part = vec![0; d];
        for (k, row) in image.basis.iter().enumerate() {
            for (x, &y) in img_part.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(mix[k], y));
            }
        }
        let to_kg = |coords: &[Fq]| -> Vec<Fq> {
            let mut v = vec![0; n];
            for (c, u) in coords.iter().zip(&piece.space.basis) {
                if *c != 0 {
                    for (x, &y) in v.iter_mut().zip(u) {
                        *x = f.add(*x, f.mul(*c, y));
                    }
                }
            }
            v
        };
        let e1 = to_kg(&img_part);
        let e2: Vec<Fq> = piece.e.iter().zip(&e1).map(|(&x, &y)| f.sub(x, y)).collect();
        let make = |e: Vec<Fq>, coords: Vec<Vec<Fq>>| {
            let mut space = Subspace::new(n);
            for c in coords {
                space.insert(&to_kg(&c), f);
            }
            Piece { e, space }
        };
        return Ok((make(e1, image.basis.clone()), make(e2, kernel)));
    }
    Err(Error::ProjectiveCoverBudgetExceeded(
        "no splitting element found for a decomposable summand".into(),
    ))
}

/// A projective cover `π: P → V` with `P` a sum of projective indecomposables.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub cover: MatRep,
    /// `dim P × dim V` matrix of `π` in row convention.
    pub pi: Mat,
    /// Simple index of each indecomposable summand, in basis order.
    pub summands: Vec<usize>,
}

/// `V / rad V` multiplicities and the radical itself.
fn head(v: &MatRep, data: &ProjectiveData) -> (Vec<usize>, Subspace) {
    let f = v.field();
    let n = v.dim();
    let mut mults = Vec::new();
    let mut columns: Vec<Vec<Fq>> = Vec::new();
    for s in &data.simples {
        let homs = hom_space(v, &s.rep);
        mults.push(homs.len());
        for h in homs {
            for c in 0..h.cols {
                columns.push((0..n).map(|r| h.get(r, c)).collect());
            }
        }
    }
    let mut rad = Subspace::new(n);
    if columns.is_empty() {
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            rad.insert(&e, f);
        }
    } else {
        for k in Mat::from_rows(&columns).right_kernel(f) {
            rad.insert(&k, f);
        }
    }
    (mults, rad)
}

pub fn projective_cover(v: &MatRep, data: &ProjectiveData) -> Result<ProjectiveCover> {
    let f = v.field().clone();
    let n = v.dim();
    let g = v.group();
    let (mults, rad) = head(v, data);
    let mut span = rad.clone();
    let mut chosen: Vec<(usize, Vec<Fq>)> = Vec::new();
    for (t, &m) in mults.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let et = v.algebra_image(&data.pims[t].idempotent);
        let mut count = 0;
        for row in et.row_vecs() {
            if count == m {
                break;
            }
            if span.insert(&row, &f).is_some() {
                chosen.push((t, row));
                count += 1;
            }
        }
        if count != m {
            return Err(Error::InternalInconsistency("head generators not found".into()));
        }
    }
    let images = v.images();
    let mut cover: Option<MatRep> = None;
    let mut pi_rows: Vec<Vec<Fq>> = Vec::new();
    let mut summands = Vec::new();
    for (t, w) in &chosen {
        let orbit: Vec<Vec<Fq>> = (0..g.order()).map(|x| images[x].vec_mul(w, &f)).collect();
        let pim = &data.pims[*t];
        for u in &pim.basis.basis {
            let mut row = vec![0; n];
            for (x, &c) in u.iter().enumerate() {
                if c != 0 {
                    for (r, &o) in row.iter_mut().zip(&orbit[x]) {
                        *r = f.add(*r, f.mul(c, o));
                    }
                }
            }
            pi_rows.push(row);
        }
        summands.push(*t);
        cover = Some(match cover {
            None => pim.rep.clone(),
            Some(c) => c.direct_sum(&pim.rep),
        });
    }
    let cover = cover.unwrap_or_else(|| MatRep::trivial(g.clone(), f.clone(), 0));
    let pi = if pi_rows.is_empty() {
        Mat::zeros(0, n)
    } else {
        Mat::from_rows(&pi_rows)
    };
    if pi.rank(&f) != n {
        return Err(Error::InternalInconsistency("projective cover map is not surjective".into()));
    }
    Ok(ProjectiveCover { cover, pi, summands })
}

/// Kernel of the projective cover, with the inclusion's basis.
fn syzygy_with_basis(v: &MatRep, data: &ProjectiveData) -> Result<(ProjectiveCover, Subspace, MatRep)> {
    let pc = projective_cover(v, data)?;
    let f = v.field();
    let mut kernel = Subspace::new(pc.cover.dim());
    for k in pc.pi.left_kernel(f) {
        kernel.insert(&k, f);
    }
    let omega = pc.cover.submodule(&kernel);
    Ok((pc, kernel, omega))
}

/// `Ω(V)`, the kernel of a projective cover.
pub fn syzygy(v: &MatRep, data: &ProjectiveData) -> Result<MatRep> {
    Ok(syzygy_with_basis(v, data)?.2)
}

/// `dim Ext^n_{kG}(V, W)` by dimension shifting along a minimal projective
/// resolution.
pub fn ext_dim(v: &MatRep, w: &MatRep, n: usize, data: &ProjectiveData) -> Result<usize> {
    if n == 0 {
        return Ok(hom_space(v, w).len());
    }
    let mut m = v.clone();
    for _ in 1..n {
        m = syzygy(&m, data)?;
    }
    let (pc, kernel, omega) = syzygy_with_basis(&m, data)?;
    if omega.dim() == 0 {
        return Ok(0);
    }
    let f = v.field();
    let homs = hom_space(&omega, w).len();
    let inclusion = kernel.to_mat();
    let mut restricted = Subspace::new(omega.dim() * w.dim());
    for phi in hom_space(&pc.cover, w) {
        restricted.insert(&inclusion.mul(&phi, f).data, f);
    }
    Ok(homs - restricted.dim())
}
