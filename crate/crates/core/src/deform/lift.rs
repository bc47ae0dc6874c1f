//! Matrices over local rings, lifts of residual representations, and small
//! extensions.

use std::sync::Arc;

use super::howell::{left_kernel, SpanSolver};
use super::ring::{Elem, LocalAlgebra};
use crate::arith::{Fq, Mat, Subspace};
use crate::error::{Error, Result};
use crate::rep::MatRep;

/// Square matrix over a [`LocalAlgebra`], row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RMat {
    pub n: usize,
    pub entries: Vec<Elem>,
}

impl RMat {
    pub fn zeros(r: &LocalAlgebra, n: usize) -> Self {
        RMat {
            n,
            entries: vec![r.zero(); n * n],
        }
    }
    pub fn identity(r: &LocalAlgebra, n: usize) -> Self {
        let mut m = Self::zeros(r, n);
        for i in 0..n {
            m.entries[i * n + i] = r.one();
        }
        m
    }
    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.n + j]
    }
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.entries[i * self.n + j] = x;
    }
    /// Entrywise Teichmüller lift of a residue-field matrix.
    pub fn teichmueller(r: &LocalAlgebra, m: &Mat) -> Self {
        let n = m.rows;
        let mut out = Self::zeros(r, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.teichmueller(m.get(i, j)));
            }
        }
        out
    }
    pub fn residue(&self, r: &LocalAlgebra) -> Mat {
        let mut m = Mat::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(i, j, r.residue(self.get(i, j)));
            }
        }
        m
    }
    pub fn mul(&self, other: &RMat, r: &LocalAlgebra) -> RMat {
        let n = self.n;
        let mut out = Self::zeros(r, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !r.is_zero(a) && !r.is_zero(b) {
                        acc = r.add(&acc, &r.mul(a, b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
    pub fn add(&self, other: &RMat, r: &LocalAlgebra) -> RMat {
        RMat {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| r.add(a, b)).collect(),
        }
    }
    pub fn sub(&self, other: &RMat, r: &LocalAlgebra) -> RMat {
        RMat {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| r.sub(a, b)).collect(),
        }
    }
    /// Inverse by Newton iteration from the residual inverse.
    pub fn inverse(&self, r: &LocalAlgebra) -> Option<RMat> {
        let f = r.field();
        let res_inv = self.residue(r).inverse(f)?;
        let mut x = RMat::teichmueller(r, &res_inv);
        let two = {
            let mut m = RMat::identity(r, self.n);
            for e in m.entries.iter_mut() {
                *e = r.scale_int(e, 2);
            }
            m
        };
        for _ in 0..128 {
            let next = x.mul(&two.sub(&self.mul(&x, r), r), r);
            if next == x {
                return Some(x);
            }
            x = next;
        }
        unreachable!("maximal ideal is nilpotent")
    }
    /// Reinterprets entries in another ring on the same ambient.
    pub fn transport(&self, target: &LocalAlgebra) -> RMat {
        RMat {
            n: self.n,
            entries: self.entries.iter().map(|x| target.reduce(x.clone())).collect(),
        }
    }
}

/// A lift of a residual representation to a local coefficient ring.
#[derive(Debug, Clone)]
pub struct Lift {
    ring: Arc<LocalAlgebra>,
    residual: MatRep,
    gens: Vec<RMat>,
}

impl Lift {
    /// Validates residues and multiplicativity over all group elements.
    pub fn new(ring: Arc<LocalAlgebra>, residual: MatRep, gens: Vec<RMat>) -> Result<Self> {
        if ring.field().as_ref() != residual.field().as_ref() {
            return Err(Error::InvalidInput("lift and residual fields differ".into()));
        }
        if gens.len() != residual.generator_images().len() {
            return Err(Error::InvalidInput("wrong number of generator images".into()));
        }
        for (m, rb) in gens.iter().zip(residual.generator_images()) {
            if m.n != residual.dim() || m.residue(&ring) != *rb {
                return Err(Error::InvalidInput("lift does not reduce to the residual representation".into()));
            }
        }
        let lift = Lift {
            ring,
            residual,
            gens,
        };
        if !lift.is_multiplicative() {
            return Err(Error::InvalidInput("generator images do not define a homomorphism".into()));
        }
        Ok(lift)
    }

    /// Constant lift of the residual representation through Teichmüller lifts
    /// (a lift only when it happens to be multiplicative).
    pub fn teichmueller(ring: Arc<LocalAlgebra>, residual: &MatRep) -> Result<Self> {
        let gens = residual
            .generator_images()
            .iter()
            .map(|m| RMat::teichmueller(&ring, m))
            .collect();
        Lift::new(ring, residual.clone(), gens)
    }

    pub fn ring(&self) -> &Arc<LocalAlgebra> {
        &self.ring
    }
    pub fn residual(&self) -> &MatRep {
        &self.residual
    }
    pub fn generator_images(&self) -> &[RMat] {
        &self.gens
    }
    pub fn dim(&self) -> usize {
        self.residual.dim()
    }

    /// Images of all group elements along the breadth-first tree.
    pub fn images(&self) -> Vec<RMat> {
        images_of(&self.ring, &self.residual, &self.gens)
    }

    fn is_multiplicative(&self) -> bool {
        let g = self.residual.group();
        let imgs = self.images();
        (0..g.order()).all(|x| {
            g.generators().iter().zip(&self.gens).all(|(&s, m)| imgs[x].mul(m, &self.ring) == imgs[g.mul(x, s)])
        })
    }
}

pub(crate) fn images_of(ring: &LocalAlgebra, residual: &MatRep, gens: &[RMat]) -> Vec<RMat> {
    let g = residual.group();
    let mut out = vec![RMat::identity(ring, residual.dim()); g.order()];
    for x in 1..g.order() {
        let (parent, gi) = g.bfs_parent(x).unwrap();
        out[x] = out[parent].mul(&gens[gi], ring);
    }
    out
}

/// Surjection `R₁ → R₀` of rings on one ambient whose kernel `I` satisfies
/// `I · m_{R₁} = 0`, with a residue-field basis of `I`.
#[derive(Debug, Clone)]
pub struct SmallExtension {
    pub r1: Arc<LocalAlgebra>,
    pub r0: Arc<LocalAlgebra>,
    /// Basis of the kernel as elements of `R₁`.
    pub kernel_basis: Vec<Elem>,
    gens: Vec<Elem>,
    solver: SpanSolver,
    relation_dim: usize,
    coordinate_change: Mat,
}

impl SmallExtension {
    pub fn new(r1: Arc<LocalAlgebra>, r0: Arc<LocalAlgebra>) -> Result<Self> {
        if !r1.same_ambient(&r0) || !r1.ideal().is_submodule_of(r0.ideal()) {
            return Err(Error::InvalidInput("not a quotient map on a common ambient".into()));
        }
        let f = r1.field().clone();
        let e = f.degree() as usize;
        let z = r1.zpm();
        let gens: Vec<Elem> = r0
            .ideal()
            .rows
            .iter()
            .map(|x| r1.reduce(x.clone()))
            .filter(|x| !r1.is_zero(x))
            .collect();
        let m_gens: Vec<Elem> = r1.maximal_power_generators(1).into_iter().map(|g| r1.reduce(g)).collect();
        if gens.iter().any(|x| m_gens.iter().any(|g| !r1.is_zero(&r1.mul(x, g)))) {
            return Err(Error::InvalidInput("kernel is not annihilated by the maximal ideal".into()));
        }
        let mut all = Vec::new();
        for x in &gens {
            for s in 0..e {
                let mut theta = vec![0u64; e];
                theta[s] = 1;
                all.push(r1.mul(x, &r1.from_gr(&theta)));
            }
        }
        all.extend(r1.ideal().rows.iter().cloned());
        let l = gens.len();
        let mut rel = Subspace::new(l);
        for a in left_kernel(z, r1.ncols(), &all) {
            rel.insert(&fp_to_k(&f, &a[..l * e]), &f);
        }
        let relation_dim = rel.dim();
        let mut rows = rel.basis.clone();
        let mut span = rel;
        let mut chosen = Vec::new();
        for i in 0..l {
            let mut unit = vec![0; l];
            unit[i] = 1;
            if span.insert(&unit, &f).is_some() {
                chosen.push(i);
                rows.push(unit);
            }
        }
        let coordinate_change = if l == 0 {
            Mat::zeros(0, 0)
        } else {
            Mat::from_rows(&rows).inverse(&f).expect("complement basis")
        };
        Ok(SmallExtension {
            kernel_basis: chosen.iter().map(|&i| gens[i].clone()).collect(),
            solver: SpanSolver::new(z, r1.ncols(), &all),
            r1,
            r0,
            gens,
            relation_dim,
            coordinate_change,
        })
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.len()
    }

    /// The map `α`.
    pub fn project(&self, x: &Elem) -> Elem {
        self.r0.reduce(x.clone())
    }

    /// Set-theoretic section: canonical representatives carried over.
    pub fn section(&self, x: &Elem) -> Elem {
        self.r1.reduce(x.clone())
    }

    pub fn in_kernel(&self, x: &Elem) -> bool {
        self.r0.reduce(x.clone()).iter().all(|&c| c == 0)
    }

    /// Residue-field coordinates of a kernel element.
    pub fn coordinates(&self, x: &Elem) -> Option<Vec<Fq>> {
        let f = self.r1.field();
        let e = f.degree() as usize;
        let a = self.solver.solve(x)?;
        let k = fp_to_k(f, &a[..self.gens.len() * e]);
        if k.is_empty() {
            return Some(Vec::new());
        }
        let y = self.coordinate_change.vec_mul(&k, f);
        Some(y[self.relation_dim..].to_vec())
    }

    /// `Σ λ_c · b_c` for the kernel basis.
    pub fn from_coordinates(&self, coords: &[Fq]) -> Elem {
        let r = &self.r1;
        coords
            .iter()
            .zip(&self.kernel_basis)
            .fold(r.zero(), |acc, (&c, b)| r.add(&acc, &r.scale_residue(b, c)))
    }
}

fn fp_to_k(f: &crate::arith::FiniteField, a: &[u64]) -> Vec<Fq> {
    let p = f.characteristic() as u64;
    let e = f.degree() as usize;
    a.chunks(e)
        .map(|c| {
            let coeffs: Vec<u32> = c.iter().map(|&x| (x % p) as u32).collect();
            f.from_coeffs(&coeffs).expect("reduced")
        })
        .collect()
}
