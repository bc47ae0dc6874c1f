use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::{FiniteField, Fq, Mat, Subspace};
use crate::error::{Error, Result};
use crate::group::Group;

/// A representation `g ↦ ρ(g)` of a finite group on row vectors over
/// `GF(q)`, acting on the right: `v ↦ v ρ(g)`.
#[derive(Clone)]
pub struct MatRep {
    group: Arc<Group>,
    field: Arc<FiniteField>,
    dim: usize,
    gens: Vec<Mat>,
    images: Arc<OnceLock<Vec<Mat>>>,
}

impl fmt::Debug for MatRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatRep")
            .field("group_order", &self.group.order())
            .field("q", &self.field.order())
            .field("dim", &self.dim)
            .finish()
    }
}

/// Above this group order the homomorphism check is sampled rather than exhaustive.
const EXHAUSTIVE_CHECK_LIMIT: usize = 512;

impl MatRep {
    /// Builds and validates a representation from generator images.
    pub fn new(group: Arc<Group>, field: Arc<FiniteField>, gens: Vec<Mat>) -> Result<Self> {
        if gens.len() != group.generators().len() {
            return Err(Error::InvalidInput(format!(
                "expected {} generator matrices, got {}",
                group.generators().len(),
                gens.len()
            )));
        }
        let dim = gens.first().map_or(0, |m| m.rows);
        for m in &gens {
            if m.rows != dim || m.cols != dim {
                return Err(Error::InvalidInput("generator matrices must be square of equal size".into()));
            }
            if m.data.iter().any(|&x| x >= field.order()) {
                return Err(Error::InvalidInput("matrix entry outside the field".into()));
            }
            if m.inverse(&field).is_none() {
                return Err(Error::InvalidInput("generator matrix is singular".into()));
            }
        }
        let rep = Self::from_parts(group, field, gens, dim);
        rep.check_homomorphism()?;
        Ok(rep)
    }

    pub(crate) fn from_parts(
        group: Arc<Group>,
        field: Arc<FiniteField>,
        gens: Vec<Mat>,
        dim: usize,
    ) -> Self {
        MatRep {
            group,
            field,
            dim,
            gens,
            images: Arc::new(OnceLock::new()),
        }
    }

    fn check_homomorphism(&self) -> Result<()> {
        let g = &self.group;
        let n = g.order();
        let sample: Vec<usize> = if n <= EXHAUSTIVE_CHECK_LIMIT {
            (0..n).collect()
        } else {
            (0..n).step_by(n / EXHAUSTIVE_CHECK_LIMIT + 1).collect()
        };
        let images = self.images();
        for x in sample {
            for (s, gen) in g.generators().iter().zip(&self.gens) {
                if images[x].mul(gen, &self.field) != images[g.mul(x, *s)] {
                    return Err(Error::InvalidInput(
                        "generator matrices do not satisfy the group relations".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }
    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn generator_images(&self) -> &[Mat] {
        &self.gens
    }

    /// Images of all group elements, indexed like the group's element table.
    pub fn images(&self) -> &[Mat] {
        self.images.get_or_init(|| {
            let g = &self.group;
            let mut out = vec![Mat::identity(self.dim); g.order()];
            for x in 1..g.order() {
                let (parent, gi) = g.bfs_parent(x).unwrap();
                out[x] = out[parent].mul(&self.gens[gi], &self.field);
            }
            out
        })
    }

    /// Image of one element, via the breadth-first word when images are not cached.
    pub fn image(&self, x: usize) -> Mat {
        if let Some(all) = self.images.get() {
            return all[x].clone();
        }
        let mut word = Vec::new();
        let mut y = x;
        while let Some((parent, gi)) = self.group.bfs_parent(y) {
            word.push(gi);
            y = parent;
        }
        word.iter()
            .rev()
            .fold(Mat::identity(self.dim), |acc, &gi| acc.mul(&self.gens[gi], &self.field))
    }

    pub fn trivial(group: Arc<Group>, field: Arc<FiniteField>, dim: usize) -> Self {
        let gens = vec![Mat::identity(dim); group.generators().len()];
        Self::from_parts(group, field, gens, dim)
    }

    /// Permutation module on the natural domain of the group.
    pub fn permutation(group: Arc<Group>, field: Arc<FiniteField>) -> Self {
        let n = group.degree();
        let gens = group
            .generator_perms()
            .iter()
            .map(|p| {
                let mut m = Mat::zeros(n, n);
                for x in 0..n {
                    m.set(x, p.apply(x as u32) as usize, 1);
                }
                m
            })
            .collect();
        Self::from_parts(group, field, gens, n)
    }

    /// Right regular module: basis indexed by group elements, `e_x g = e_{xg}`.
    pub fn regular(group: Arc<Group>, field: Arc<FiniteField>) -> Self {
        let n = group.order();
        let gens = group
            .generators()
            .iter()
            .map(|&s| {
                let mut m = Mat::zeros(n, n);
                for x in 0..n {
                    m.set(x, group.mul(x, s), 1);
                }
                m
            })
            .collect();
        Self::from_parts(group, field, gens, n)
    }

    pub fn direct_sum(&self, other: &MatRep) -> MatRep {
        let (a, b) = (self.dim, other.dim);
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(x, y)| {
                let mut m = Mat::zeros(a + b, a + b);
                for i in 0..a {
                    for j in 0..a {
                        m.set(i, j, x.get(i, j));
                    }
                }
                for i in 0..b {
                    for j in 0..b {
                        m.set(a + i, a + j, y.get(i, j));
                    }
                }
                m
            })
            .collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens, a + b)
    }

    pub fn tensor(&self, other: &MatRep) -> MatRep {
        let (a, b) = (self.dim, other.dim);
        let f = &self.field;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(x, y)| {
                let mut m = Mat::zeros(a * b, a * b);
                for i in 0..a {
                    for j in 0..a {
                        let c = x.get(i, j);
                        if c == 0 {
                            continue;
                        }
                        for k in 0..b {
                            for l in 0..b {
                                m.set(i * b + k, j * b + l, f.mul(c, y.get(k, l)));
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens, a * b)
    }

    /// Contragredient module `g ↦ (ρ(g)^{-1})^T`.
    pub fn dual(&self) -> MatRep {
        let gens = self
            .gens
            .iter()
            .map(|m| m.inverse(&self.field).unwrap().transpose())
            .collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens, self.dim)
    }

    /// Conjugate by an invertible change of basis: `ρ'(g) = T ρ(g) T^{-1}`.
    pub fn conjugate(&self, t: &Mat) -> Result<MatRep> {
        let f = &self.field;
        let ti = t.inverse(f).ok_or(Error::SingularSystem)?;
        let gens = self.gens.iter().map(|m| t.mul(m, f).mul(&ti, f)).collect();
        Ok(Self::from_parts(self.group.clone(), self.field.clone(), gens, self.dim))
    }

    /// Matrix of the action of `ρ(g)` restricted to an invariant subspace.
    fn restrict(&self, m: &Mat, sub: &Subspace) -> Mat {
        let d = sub.dim();
        let mut out = Mat::zeros(d, d);
        for (a, b) in sub.basis.iter().enumerate() {
            let img = m.vec_mul(b, &self.field);
            for (c, x) in sub.coordinates(&img).into_iter().enumerate() {
                out.set(a, c, x);
            }
        }
        out
    }

    /// The submodule on an invariant subspace, in the subspace's echelon basis.
    pub fn submodule(&self, sub: &Subspace) -> MatRep {
        let gens = self.gens.iter().map(|m| self.restrict(m, sub)).collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens, sub.dim())
    }

    /// The quotient by an invariant subspace, with basis the standard vectors
    /// on the non-pivot columns.
    pub fn quotient(&self, sub: &Subspace) -> MatRep {
        let f = &self.field;
        let free: Vec<usize> = (0..self.dim).filter(|c| !sub.pivots.contains(c)).collect();
        let d = free.len();
        let gens = self
            .gens
            .iter()
            .map(|m| {
                let mut out = Mat::zeros(d, d);
                for (a, &col) in free.iter().enumerate() {
                    let mut img = m.row(col).to_vec();
                    sub.reduce(&mut img, f);
                    for (c, &fc) in free.iter().enumerate() {
                        out.set(a, c, img[fc]);
                    }
                }
                out
            })
            .collect();
        Self::from_parts(self.group.clone(), self.field.clone(), gens, d)
    }

    /// Smallest invariant subspace containing the given vectors.
    pub fn spin(&self, vectors: &[Vec<Fq>]) -> Subspace {
        spin_with(&self.gens, self.dim, vectors, &self.field)
    }

    /// Sum `Σ c_g ρ(g)` for a group-algebra element given by coefficients.
    pub fn algebra_image(&self, coeffs: &[Fq]) -> Mat {
        let f = &self.field;
        let images = self.images();
        let mut acc = Mat::zeros(self.dim, self.dim);
        for (x, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                acc = acc.add(&images[x].scale(c, f), f);
            }
        }
        acc
    }
}

pub(crate) fn spin_with(gens: &[Mat], dim: usize, vectors: &[Vec<Fq>], f: &FiniteField) -> Subspace {
    let mut sub = Subspace::new(dim);
    let mut queue: Vec<Vec<Fq>> = Vec::new();
    for v in vectors {
        if let Some(w) = sub.insert(v, f) {
            queue.push(w);
        }
    }
    while let Some(v) = queue.pop() {
        for m in gens {
            let img = m.vec_mul(&v, f);
            if let Some(w) = sub.insert(&img, f) {
                queue.push(w);
            }
        }
    }
    sub
}
