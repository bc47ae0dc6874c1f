//! Obstruction classes of small extensions and the tangent-space
//! correspondence over the dual numbers.

use std::sync::Arc;

use super::cohomology::BarComplex;
use super::lift::{Lift, RMat, SmallExtension};
use super::ring::LocalAlgebra;
use crate::arith::{Fq, Mat};
use crate::error::{Error, Result};
use crate::rep::MatRep;

/// Result of trying to lift through a small extension.
#[derive(Debug, Clone)]
pub struct Obstruction {
    /// `H²` coordinates of the obstruction, one vector per kernel basis element.
    pub class: Vec<Vec<Fq>>,
    /// The cocycle components in `C²(G, ad ρ̄)`, one per kernel basis element.
    pub cocycles: Vec<Vec<Fq>>,
    /// A lift over `R₁` when the class vanishes.
    pub lift: Option<Lift>,
}

impl Obstruction {
    pub fn vanishes(&self) -> bool {
        self.class.iter().all(|c| c.iter().all(|&x| x == 0))
    }
}

/// The canonical set-theoretic lift: entrywise section of every group element's image.
pub fn canonical_section(rho0: &Lift, ext: &SmallExtension) -> Vec<RMat> {
    rho0.images()
        .iter()
        .map(|m| RMat {
            n: m.n,
            entries: m.entries.iter().map(|x| ext.section(x)).collect(),
        })
        .collect()
}

/// Obstruction class of lifting `rho0` along `ext`.
pub fn obstruction_class(rho0: &Lift, ext: &SmallExtension, bar: &BarComplex) -> Result<Obstruction> {
    let gamma = canonical_section(rho0, ext);
    obstruction_class_from(rho0, ext, bar, &gamma)
}

/// Obstruction class computed from an arbitrary set-theoretic lift `gamma`
/// (indexed by group element, `gamma[0]` the identity matrix).
pub fn obstruction_class_from(
    rho0: &Lift,
    ext: &SmallExtension,
    bar: &BarComplex,
    gamma: &[RMat],
) -> Result<Obstruction> {
    if !rho0.ring().same_ring(&ext.r0) {
        return Err(Error::InvalidInput("lift is not defined over the target of the extension".into()));
    }
    let r1 = &ext.r1;
    let residual = rho0.residual();
    let g = residual.group();
    let n = residual.dim();
    let d = ext.kernel_dim();
    if gamma[0] != RMat::identity(r1, n) {
        return Err(Error::InvalidInput("set-theoretic lift must fix the identity".into()));
    }
    for (x, m) in gamma.iter().enumerate() {
        let back = RMat {
            n,
            entries: m.entries.iter().map(|e| ext.project(e)).collect(),
        };
        if back != rho0.images()[x] {
            return Err(Error::InvalidInput("set-theoretic lift does not reduce to the lift".into()));
        }
    }
    let inverses: Vec<RMat> = gamma.iter().map(|m| m.inverse(r1).expect("unit")).collect();
    let mut cocycles = vec![vec![0 as Fq; bar.c2_dim()]; d];
    let one = RMat::identity(r1, n);
    for x in 1..g.order() {
        for y in 1..g.order() {
            let c = gamma[g.mul(x, y)].mul(&inverses[y], r1).mul(&inverses[x], r1).sub(&one, r1);
            for (entry, val) in c.entries.iter().enumerate() {
                if r1.is_zero(val) {
                    continue;
                }
                let coords = ext
                    .coordinates(val)
                    .ok_or_else(|| Error::InternalInconsistency("cocycle value outside the kernel".into()))?;
                let idx = bar.c2_index(x, y, entry).unwrap();
                for (j, &cj) in coords.iter().enumerate() {
                    cocycles[j][idx] = cj;
                }
            }
        }
    }
    let class = cocycles
        .iter()
        .map(|c| bar.h2_coordinates(c))
        .collect::<Result<Vec<_>>>()?;
    let vanishes = class.iter().all(|c| c.iter().all(|&x| x == 0));
    let lift = if vanishes {
        let mut gens = Vec::new();
        for &s in g.generators() {
            let mut corr = RMat::identity(r1, n);
            for (j, c) in cocycles.iter().enumerate() {
                let phi = bar
                    .solve_coboundary(c)
                    .ok_or_else(|| Error::InternalInconsistency("zero class without a primitive".into()))?;
                for entry in 0..n * n {
                    let Some(idx) = bar.c1_index(s, entry) else { continue };
                    if phi[idx] != 0 {
                        let add = r1.scale_residue(&ext.kernel_basis[j], phi[idx]);
                        corr.entries[entry] = r1.add(&corr.entries[entry], &add);
                    }
                }
            }
            gens.push(corr.mul(&gamma[s], r1));
        }
        Some(Lift::new(r1.clone(), residual.clone(), gens)?)
    } else {
        None
    };
    Ok(Obstruction {
        class,
        cocycles,
        lift,
    })
}

fn dual_numbers_check(ring: &LocalAlgebra) -> Result<()> {
    if ring.nvars() != 1 || ring.degree_cap() != 2 || ring.precision() != 1 || !ring.ideal().rows.is_empty() {
        return Err(Error::InvalidInput("tangent correspondence needs the dual numbers k[e]".into()));
    }
    Ok(())
}

/// Forward map: a lift over `k[ε]` to the `H¹` coordinates of its cocycle.
pub fn tangent_class(lift: &Lift, bar: &BarComplex) -> Result<Vec<Fq>> {
    let ring = lift.ring();
    dual_numbers_check(ring)?;
    let f = ring.field().clone();
    let residual = lift.residual();
    let n = residual.dim();
    let eps = ring.var(0);
    let e = f.degree() as usize;
    let eps_pos = eps.iter().position(|&c| c == 1).unwrap();
    let images = lift.images();
    let res_images = residual.images();
    let mut beta = vec![0 as Fq; bar.c1_dim()];
    for x in 1..residual.group().order() {
        // Y(x): ε-coefficients; β(x) = Y(x) ρ̄(x)⁻¹
        let mut y = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = &images[x].entries[i * n + j];
                let coeffs: Vec<u32> = v[eps_pos..eps_pos + e].iter().map(|&c| c as u32).collect();
                y.set(i, j, f.from_coeffs(&coeffs)?);
            }
        }
        let b = y.mul(&res_images[x].inverse(&f).expect("invertible"), &f);
        for entry in 0..n * n {
            beta[bar.c1_index(x, entry).unwrap()] = b.get(entry / n, entry % n);
        }
    }
    bar.h1_coordinates(&beta)
}

/// Inverse map: the lift `g ↦ (1 + ε β(g)) ρ̄(g)` for the cocycle with the
/// given `H¹` coordinates.
pub fn lift_from_class(residual: &MatRep, coords: &[Fq], bar: &BarComplex) -> Result<Lift> {
    let f = residual.field().clone();
    let ring = Arc::new(LocalAlgebra::dual_numbers(f.clone()));
    let beta = bar.h1_cocycle(coords);
    let n = residual.dim();
    let eps = ring.var(0);
    let g = residual.group();
    let mut gens = Vec::new();
    for (&s, rb) in g.generators().iter().zip(residual.generator_images()) {
        let mut b = Mat::zeros(n, n);
        if bar.c1_index(s, 0).is_some() {
            for entry in 0..n * n {
                b.set(entry / n, entry % n, beta[bar.c1_index(s, entry).unwrap()]);
            }
        }
        let y = b.mul(rb, &f);
        let mut m = RMat::teichmueller(&ring, rb);
        for i in 0..n {
            for j in 0..n {
                let add = ring.scale_residue(&eps, y.get(i, j));
                m.set(i, j, ring.add(m.get(i, j), &add));
            }
        }
        gens.push(m);
    }
    Lift::new(ring, residual.clone(), gens)
}
