//! Brute-force enumeration of lifts and of isomorphisms between lifts.

use std::collections::HashMap;
use std::sync::Arc;

use super::lift::{images_of, Lift, RMat, SmallExtension};
use super::ring::{Elem, LocalAlgebra};
use crate::error::{Error, Result};
use crate::rep::{stable_end, MatRep};

pub const ORACLE_GROUP_CAP: usize = 8;
pub const ORACLE_DIM_CAP: usize = 2;
pub const ORACLE_RING_CAP: u64 = 256;
pub const ORACLE_SEARCH_CAP: u64 = 1 << 22;

fn check_caps(residual: &MatRep, ring: &LocalAlgebra) -> Result<()> {
    let order = residual.group().order();
    if order > ORACLE_GROUP_CAP || residual.dim() > ORACLE_DIM_CAP {
        return Err(Error::OracleBudgetExceeded(format!(
            "|G| = {order}, n = {} beyond the oracle caps",
            residual.dim()
        )));
    }
    if ring.elements(ORACLE_RING_CAP).is_none() {
        return Err(Error::OracleBudgetExceeded(format!("ring {} too large", ring.name())));
    }
    Ok(())
}

/// All tuples of matrices, one per generator, with entries drawn from the
/// given per-entry candidate lists.
fn product_search(
    choices: &[Vec<Vec<Elem>>],
    n: usize,
    mut visit: impl FnMut(&[RMat]) -> Result<()>,
) -> Result<()> {
    let per_gen: Vec<u64> = choices
        .iter()
        .map(|c| c.iter().map(|v| v.len() as u64).product())
        .collect();
    let total = per_gen.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x));
    if total.is_none_or(|t| t > ORACLE_SEARCH_CAP) {
        return Err(Error::OracleBudgetExceeded("search space too large".into()));
    }
    let flat: Vec<&Vec<Elem>> = choices.iter().flatten().collect();
    let mut idx = vec![0usize; flat.len()];
    loop {
        let mats: Vec<RMat> = idx
            .chunks(n * n)
            .enumerate()
            .map(|(gi, chunk)| RMat {
                n,
                entries: chunk
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| flat[gi * n * n + k][i].clone())
                    .collect(),
            })
            .collect();
        visit(&mats)?;
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(());
            }
            idx[k] += 1;
            if idx[k] < flat[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn is_hom(ring: &LocalAlgebra, residual: &MatRep, gens: &[RMat]) -> bool {
    let g = residual.group();
    let imgs = images_of(ring, residual, gens);
    (0..g.order()).all(|x| {
        g.generators()
            .iter()
            .zip(gens)
            .all(|(&s, m)| imgs[x].mul(m, ring) == imgs[g.mul(x, s)])
    })
}

fn conjugate_all(u: &RMat, u_inv: &RMat, gens: &[RMat], ring: &LocalAlgebra) -> Vec<RMat> {
    gens.iter().map(|m| u.mul(m, ring).mul(u_inv, ring)).collect()
}

/// Strict-equivalence classes of lifts of `residual` to `ring`, each given by
/// its least representative, sorted.
pub fn enumerate_lifts(residual: &MatRep, ring: Arc<LocalAlgebra>) -> Result<Vec<Lift>> {
    check_caps(residual, &ring)?;
    let n = residual.dim();
    let maximal = ring.maximal_ideal_elements(ORACLE_RING_CAP).expect("checked");
    let choices: Vec<Vec<Vec<Elem>>> = residual
        .generator_images()
        .iter()
        .map(|m| {
            (0..n * n)
                .map(|k| {
                    let base = ring.teichmueller(m.get(k / n, k % n));
                    let mut c: Vec<Elem> = maximal.iter().map(|x| ring.add(&base, x)).collect();
                    c.sort();
                    c
                })
                .collect()
        })
        .collect();
    let mut lifts: Vec<Vec<RMat>> = Vec::new();
    product_search(&choices, n, |gens| {
        if is_hom(&ring, residual, gens) {
            lifts.push(gens.to_vec());
        }
        Ok(())
    })?;
    lifts.sort();
    let index: HashMap<Vec<RMat>, usize> = lifts.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    // 1 + x E_ij generate the strict-equivalence group
    let mut conjugators = Vec::new();
    for x in maximal.iter().filter(|x| !ring.is_zero(x)) {
        for k in 0..n * n {
            let mut u = RMat::identity(&ring, n);
            u.entries[k] = ring.add(&u.entries[k], x);
            let ui = u.inverse(&ring).expect("unit");
            conjugators.push((u, ui));
        }
    }
    let mut parent: Vec<usize> = (0..lifts.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..lifts.len() {
        for (u, ui) in &conjugators {
            let other = conjugate_all(u, ui, &lifts[i], &ring);
            let j = *index
                .get(&other)
                .ok_or_else(|| Error::InternalInconsistency("conjugate of a lift is not a lift".into()))?;
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut reps = Vec::new();
    for i in 0..lifts.len() {
        if find(&mut parent, i) == i {
            reps.push(Lift::new(ring.clone(), residual.clone(), lifts[i].clone())?);
        }
    }
    Ok(reps)
}

/// Every lift of `rho0` through the small extension (no identification).
pub fn enumerate_lifts_through(rho0: &Lift, ext: &SmallExtension) -> Result<Vec<Lift>> {
    let residual = rho0.residual();
    check_caps(residual, &ext.r1)?;
    let n = residual.dim();
    let f = ext.r1.field();
    let d = ext.kernel_dim();
    let mut kernel = vec![ext.r1.zero()];
    for j in 0..d {
        let mut next = Vec::new();
        for x in &kernel {
            for c in f.elements() {
                let add = ext.r1.scale_residue(&ext.kernel_basis[j], c);
                next.push(ext.r1.add(x, &add));
            }
        }
        kernel = next;
    }
    let choices: Vec<Vec<Vec<Elem>>> = rho0
        .generator_images()
        .iter()
        .map(|m| {
            m.entries
                .iter()
                .map(|x| {
                    let base = ext.section(x);
                    kernel.iter().map(|k| ext.r1.add(&base, k)).collect()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    product_search(&choices, n, |gens| {
        if is_hom(&ext.r1, residual, gens) {
            out.push(Lift::new(ext.r1.clone(), residual.clone(), gens.to_vec())?);
        }
        Ok(())
    })?;
    Ok(out)
}

fn search_intertwiner(l1: &Lift, l2: &Lift, strict: bool) -> Result<bool> {
    let ring = l1.ring();
    if !ring.same_ring(l2.ring()) || l1.dim() != l2.dim() {
        return Err(Error::InvalidInput("lifts over different rings".into()));
    }
    check_caps(l1.residual(), ring)?;
    let n = l1.dim();
    let entries = if strict {
        ring.maximal_ideal_elements(ORACLE_RING_CAP).expect("checked")
    } else {
        ring.elements(ORACLE_RING_CAP).expect("checked")
    };
    let one = ring.one();
    let choices: Vec<Vec<Vec<Elem>>> = vec![(0..n * n)
        .map(|k| {
            if strict && k % (n + 1) == 0 {
                entries.iter().map(|x| ring.add(&one, x)).collect()
            } else {
                entries.clone()
            }
        })
        .collect()];
    let mut found = false;
    let res = product_search(&choices, n, |u| {
        if found {
            return Ok(());
        }
        let u = &u[0];
        if !strict && u.residue(ring).inverse(ring.field()).is_none() {
            return Ok(());
        }
        found = l1
            .generator_images()
            .iter()
            .zip(l2.generator_images())
            .all(|(a, b)| a.mul(u, ring) == u.mul(b, ring));
        Ok(())
    });
    res?;
    Ok(found)
}

/// Isomorphism of deformations: an `R`-linear equivariant isomorphism
/// reducing to the identity on the residual module.
pub fn lifts_isomorphic(l1: &Lift, l2: &Lift) -> Result<bool> {
    let strict = search_intertwiner(l1, l2, true)?;
    if stable_end(l1.residual()) == 1 {
        let plain = search_intertwiner(l1, l2, false)?;
        if plain != strict {
            return Err(Error::InternalInconsistency(
                "stable endomorphisms are scalar but isomorphism ignores the identification".into(),
            ));
        }
    }
    Ok(strict)
}

/// Isomorphism as `RG`-modules, ignoring the identification with the residual module.
pub fn modules_isomorphic(l1: &Lift, l2: &Lift) -> Result<bool> {
    search_intertwiner(l1, l2, false)
}
