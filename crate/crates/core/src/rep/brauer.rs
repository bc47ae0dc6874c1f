//! Brauer characters and the simple modules of a group algebra.

use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::matrep::MatRep;
use super::meataxe::chop;
use crate::arith::gf::splitting_degree;
use crate::arith::prime::split_part;
use crate::arith::{CycNumber, CycValue, FiniteField, Mat};
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, PartialEq)]
pub struct BrauerCharacter {
    pub p: u64,
    pub degree: u64,
    /// Values on the `p`-regular classes, in class order.
    pub values: Vec<CycNumber>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerCharacterValue {
    pub p: u64,
    pub degree: u64,
    pub values: Vec<CycValue>,
}

impl BrauerCharacter {
    pub fn to_value(&self) -> BrauerCharacterValue {
        BrauerCharacterValue {
            p: self.p,
            degree: self.degree,
            values: self.values.iter().map(CycNumber::to_value).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.to_i64() == Some(1))
    }

    fn sort_key(&self) -> (u64, bool, Vec<(u64, Vec<BigRational>)>) {
        let values = self
            .values
            .iter()
            .map(|v| {
                let m = v.minimize_conductor();
                (m.conductor(), m.coefficients())
            })
            .collect();
        (self.degree, !self.is_trivial(), values)
    }
}

/// Degree `e` of the splitting field `GF(p^e)`: least `e` with `p^e ≡ 1`
/// modulo the `p'`-part of the exponent.
pub fn splitting_field(g: &Group, p: u64) -> Result<FiniteField> {
    let (_, m) = split_part(g.exponent(), p);
    FiniteField::new(p as u32, splitting_degree(p, m))
}

fn nullity(m: &Mat, f: &FiniteField) -> usize {
    m.rows - m.rank(f)
}

/// Brauer character of a module over a field containing the `o`-th roots of
/// unity for every `p`-regular element order `o`.
pub fn brauer_character(v: &MatRep) -> Result<BrauerCharacter> {
    let f = v.field();
    let g = v.group();
    let p = f.characteristic() as u64;
    let frame = g.classes();
    let n = v.dim();
    let mut values = Vec::new();
    for c in frame.p_regular(p) {
        let class = &frame.classes[c];
        let o = class.element_order;
        let z = f.root_of_unity(o).ok_or_else(|| {
            Error::InvalidInput(format!("field GF({}) lacks roots of unity of order {o}", f.order()))
        })?;
        let m = v.image(class.representative);
        let mut mult = vec![0i64; o as usize];
        let mut total = 0;
        for (k, slot) in mult.iter_mut().enumerate() {
            let lambda = f.pow(z, k as u64);
            let k_null = nullity(&m.sub(&Mat::scalar(n, lambda), f), f);
            *slot = k_null as i64;
            total += k_null;
        }
        if total != n {
            return Err(Error::InternalInconsistency(
                "p-regular element acts non-semisimply".into(),
            ));
        }
        values.push(CycNumber::from_root_multiplicities(o, &mult).minimize_conductor());
    }
    Ok(BrauerCharacter {
        p,
        degree: n as u64,
        values,
    })
}

#[derive(Debug, Clone)]
pub struct SimpleModule {
    pub rep: MatRep,
    pub brauer: BrauerCharacter,
}

fn derive_seed(seed: u64, k: u64) -> u64 {
    seed ^ k.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// The absolutely irreducible modules over the splitting field, one per
/// isomorphism class: degree first, trivial module first among equals.
///
/// Composition factors of the natural permutation module seed the search,
/// which then closes under tensor products until the count reaches the
/// number of `p`-regular classes.
pub fn simples(g: &Arc<Group>, p: u64, seed: u64) -> Result<Vec<SimpleModule>> {
    simples_over(g, Arc::new(splitting_field(g, p)?), seed)
}

/// As [`simples`], over a given field containing the splitting field.
pub fn simples_over(g: &Arc<Group>, field: Arc<FiniteField>, seed: u64) -> Result<Vec<SimpleModule>> {
    let p = field.characteristic() as u64;
    let target = g.classes().p_regular(p).len();
    let mut found: Vec<SimpleModule> = Vec::new();
    let mut chops = 0u64;
    let absorb = |v: &MatRep, found: &mut Vec<SimpleModule>, chops: &mut u64| -> Result<()> {
        let factors = if v.dim() == 1 {
            vec![(v.clone(), 1)]
        } else {
            *chops += 1;
            chop(v, derive_seed(seed, *chops))?
        };
        for (s, _) in factors {
            let b = brauer_character(&s)?;
            if !found.iter().any(|t| t.brauer == b) {
                found.push(SimpleModule { rep: s, brauer: b });
            }
        }
        Ok(())
    };
    let perm = MatRep::permutation(g.clone(), field.clone());
    absorb(&perm, &mut found, &mut chops)?;
    let mut i = 0;
    while found.len() < target && i < found.len() {
        for j in 0..=i {
            if found.len() >= target {
                break;
            }
            if found[i].brauer.is_trivial() || found[j].brauer.is_trivial() {
                continue;
            }
            let t = found[i].rep.tensor(&found[j].rep);
            absorb(&t, &mut found, &mut chops)?;
        }
        i += 1;
    }
    if found.len() != target {
        return Err(Error::InternalInconsistency(format!(
            "found {} simple modules, expected {target}",
            found.len()
        )));
    }
    found.sort_by_key(|a| a.brauer.sort_key());
    Ok(found)
}
