//! Truncated versal deformation rings `W[[t_1..t_r]] / J` built by lifting
//! through a filtration of small extensions and absorbing obstructions into
//! relations.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cohomology::BarComplex;
use super::lift::{Lift, RMat, SmallExtension};
use super::obstruction::obstruction_class;
use super::ring::{Elem, LocalAlgebra};
use crate::error::{Error, Result};
use crate::rep::MatRep;

/// Cap on the ambient coordinate count of the truncated power-series ring.
pub const AMBIENT_CAP: usize = 4096;

#[derive(Debug, Clone)]
pub struct VersalPresentation {
    /// Number of variables, `dim H¹(G, ad ρ̄)`.
    pub r: usize,
    /// `dim H²(G, ad ρ̄)`, bounding the number of relations.
    pub s: usize,
    pub precision: u32,
    pub degree_cap: u32,
    /// Ambient truncation `W/p^m [t] / m^cap`.
    pub ambient: Arc<LocalAlgebra>,
    /// Relation generators as ambient vectors.
    pub relations: Vec<Elem>,
    /// The presented ring and the versal lift over it.
    pub ring: Arc<LocalAlgebra>,
    pub lift: Lift,
}

/// Serializable summary of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationData {
    pub r: usize,
    pub s: usize,
    pub precision: u32,
    pub degree_cap: u32,
    pub relations: Vec<String>,
    pub relation_coefficients: Vec<Vec<u64>>,
}

/// Makes the term of least valuation (then highest degree) have coefficient one.
fn normalize(amb: &LocalAlgebra, x: &Elem) -> Elem {
    let e = amb.field().degree() as usize;
    let gr = amb.galois_ring();
    let mut best: Option<(u32, std::cmp::Reverse<u32>, usize)> = None;
    for (i, mono) in amb.monomial_list().iter().enumerate() {
        let c = &x[i * e..(i + 1) * e];
        let v = gr.valuation(&c.to_vec());
        if v >= amb.precision() {
            continue;
        }
        let key = (v, std::cmp::Reverse(mono.iter().sum::<u32>()), i);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    let Some((v, _, i)) = best else { return x.clone() };
    let c = gr.div_p_pow(&x[i * e..(i + 1) * e].to_vec(), v);
    let u = gr.inv(&c).expect("unit part");
    amb.mul(x, &amb.from_gr(&u))
}

pub fn versal_presentation_truncated(
    residual: &MatRep,
    degree_cap: u32,
    precision: u32,
) -> Result<VersalPresentation> {
    let bar = BarComplex::new(residual)?;
    let r = bar.h1();
    let s = bar.h2();
    let f = residual.field().clone();
    if degree_cap < 2 || precision == 0 {
        return Err(Error::InvalidInput("degree cap must be at least 2".into()));
    }
    let bare = LocalAlgebra::ambient(f.clone(), precision, r, degree_cap)?;
    if bare.ncols() > AMBIENT_CAP {
        return Err(Error::CapExceeded(format!("{} ambient coordinates", bare.ncols())));
    }
    let amb = Arc::new(bare.quotient(&bare.maximal_power_generators(degree_cap))?);
    let n = residual.dim();
    // R₂ = k[t]/(t)²
    let mut first = vec![amb.from_int(amb.p() as i64)];
    for (i, mono) in amb.monomial_list().iter().enumerate() {
        if mono.iter().sum::<u32>() == 2 {
            let mut x = amb.zero();
            x[i * f.degree() as usize] = 1;
            first.push(x);
        }
    }
    let mut ring = Arc::new(amb.quotient(&first)?);
    let mut gens = Vec::new();
    for (&g, rb) in residual.group().generators().iter().zip(residual.generator_images()) {
        let mut m = RMat::teichmueller(&ring, rb);
        for (i, beta) in bar.h1_basis().iter().enumerate() {
            let mut b = crate::arith::Mat::zeros(n, n);
            if bar.c1_index(g, 0).is_some() {
                for entry in 0..n * n {
                    b.set(entry / n, entry % n, beta[bar.c1_index(g, entry).unwrap()]);
                }
            }
            let y = b.mul(rb, &f);
            let t = ring.var(i);
            for a in 0..n {
                for c in 0..n {
                    let add = ring.scale_residue(&t, y.get(a, c));
                    m.set(a, c, ring.add(m.get(a, c), &add));
                }
            }
        }
        gens.push(m);
    }
    let mut lift = Lift::new(ring.clone(), residual.clone(), gens)?;
    let m_gens = amb.maximal_power_generators(1);
    let mut relations: Vec<Elem> = Vec::new();
    for _ in 0..4 * amb.ncols() * amb.precision() as usize + 8 {
        let mut rels = Vec::new();
        for h in &ring.ideal().rows {
            for gm in &m_gens {
                rels.push(amb.mul(h, gm));
            }
        }
        let r1 = Arc::new(amb.quotient(&rels)?);
        if r1.log_order() == ring.log_order() {
            return finish(r, s, precision, degree_cap, amb, relations, ring, lift);
        }
        let ext = SmallExtension::new(r1.clone(), ring.clone())?;
        let ob = obstruction_class(&lift, &ext, &bar)?;
        let mut new_rel = Vec::new();
        for b in 0..s {
            let mut x = r1.zero();
            for (j, class) in ob.class.iter().enumerate() {
                if class[b] != 0 {
                    x = r1.add(&x, &r1.scale_residue(&ext.kernel_basis[j], class[b]));
                }
            }
            new_rel.push(x);
        }
        let next = Arc::new(r1.quotient(&new_rel)?);
        let stable = next.log_order() == ring.log_order();
        relations = new_rel;
        if stable {
            return finish(r, s, precision, degree_cap, amb, relations, ring, lift);
        }
        let ext2 = SmallExtension::new(next.clone(), ring.clone())?;
        let ob2 = obstruction_class(&lift, &ext2, &bar)?;
        lift = ob2
            .lift
            .ok_or_else(|| Error::InternalInconsistency("obstruction survives its own relations".into()))?;
        ring = next;
    }
    Err(Error::CapExceeded("presentation did not stabilize".into()))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    r: usize,
    s: usize,
    precision: u32,
    degree_cap: u32,
    amb: Arc<LocalAlgebra>,
    relations: Vec<Elem>,
    ring: Arc<LocalAlgebra>,
    lift: Lift,
) -> Result<VersalPresentation> {
    let mut rels: Vec<Elem> = relations
        .iter()
        .map(|x| amb.reduce(x.clone()))
        .filter(|x| !amb.is_zero(x))
        .map(|x| normalize(&amb, &x))
        .collect();
    rels.sort();
    rels.dedup();
    let check = amb.quotient(&rels)?;
    if !check.same_ring(&ring) {
        return Err(Error::InternalInconsistency("relations do not generate the relation ideal".into()));
    }
    Ok(VersalPresentation {
        r,
        s,
        precision,
        degree_cap,
        ambient: amb,
        relations: rels,
        ring,
        lift,
    })
}

impl VersalPresentation {
    pub fn data(&self) -> PresentationData {
        PresentationData {
            r: self.r,
            s: self.s,
            precision: self.precision,
            degree_cap: self.degree_cap,
            relations: self.relations.iter().map(|x| self.ambient.format(x)).collect(),
            relation_coefficients: self.relations.clone(),
        }
    }

    /// Number of residue-compatible algebra maps from the presented ring to `target`.
    pub fn count_maps_to(&self, target: &LocalAlgebra) -> Result<u64> {
        if target.field() != self.ambient.field() {
            return Err(Error::InvalidInput("target has a different residue field".into()));
        }
        if target.precision() > self.precision || target.nilpotency_index() > self.degree_cap {
            return Err(Error::CapExceeded(format!(
                "target {} is not within the truncation",
                target.name()
            )));
        }
        let maximal = target
            .maximal_ideal_elements(super::oracle::ORACLE_RING_CAP)
            .ok_or_else(|| Error::OracleBudgetExceeded(format!("ring {} too large", target.name())))?;
        let mut count = 0;
        let mut idx = vec![0usize; self.r];
        loop {
            let images: Vec<Elem> = idx.iter().map(|&i| maximal[i].clone()).collect();
            if self
                .relations
                .iter()
                .all(|f| target.is_zero(&self.ambient.evaluate(f, target, &images)))
            {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return Ok(count);
                }
                idx[k] += 1;
                if idx[k] < maximal.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}
