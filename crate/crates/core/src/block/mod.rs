//! Blocks of `kG`: central idempotents, defect groups, representation type
//! and Brauer correspondence for centralizers of `p`-elements.

mod shape;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use shape::{classify_2group, representation_type, RepresentationType, TwoGroupShape};

use crate::arith::prime::valuation;
use crate::arith::{CycNumber, FiniteField, Fq, FiniteFieldElem};
use crate::chartab::Character;
use crate::error::{Error, Result};
use crate::group::{Group, StructureConstants, Subgroup};
use crate::rep::SimpleModule;

#[derive(Debug, Clone)]
pub struct Block {
    /// Primitive central idempotent in the class-sum basis.
    pub idempotent: Vec<Fq>,
    /// `λ_B(K⁺)` for each class `K`.
    pub central_character: Vec<Fq>,
    pub characters: Vec<usize>,
    pub brauer_characters: Vec<usize>,
    pub defect: u32,
    /// Sorted elements of a defect group inside the fixed Sylow subgroup.
    pub defect_group: Vec<usize>,
    pub shape: Option<TwoGroupShape>,
    pub representation_type: RepresentationType,
}

#[derive(Debug, Clone)]
pub struct BlockSystem {
    pub p: u64,
    pub field: Arc<FiniteField>,
    pub blocks: Vec<Block>,
    pub character_block: Vec<usize>,
    pub brauer_block: Vec<usize>,
}

/// Serializable summary of a block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub idempotent: Vec<FiniteFieldElem>,
    pub characters: Vec<usize>,
    pub brauer_characters: Vec<usize>,
    pub defect: u32,
    pub defect_group_order: usize,
    pub defect_group_generators: Vec<String>,
    pub shape: Option<TwoGroupShape>,
    pub representation_type: RepresentationType,
}

impl BlockSystem {
    pub fn summaries(&self, g: &Group) -> Vec<BlockSummary> {
        self.blocks
            .iter()
            .map(|b| BlockSummary {
                idempotent: b.idempotent.iter().map(|&x| self.field.to_elem(x)).collect(),
                characters: b.characters.clone(),
                brauer_characters: b.brauer_characters.clone(),
                defect: b.defect,
                defect_group_order: b.defect_group.len(),
                defect_group_generators: g
                    .small_generating_set(&b.defect_group)
                    .into_iter()
                    .map(|x| g.element(x).to_string())
                    .collect(),
                shape: b.shape,
                representation_type: b.representation_type,
            })
            .collect()
    }

    pub fn principal(&self) -> &Block {
        &self.blocks[0]
    }
}

/// `(Σ a_i K_i)(Σ b_j K_j)` in the class algebra over `GF(q)`.
pub fn class_algebra_mul(sc: &StructureConstants, f: &FiniteField, a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    let r = sc.num_classes();
    let mut out = vec![0; r];
    for i in (0..r).filter(|&i| a[i] != 0) {
        for j in (0..r).filter(|&j| b[j] != 0) {
            let ab = f.mul(a[i], b[j]);
            for (k, o) in out.iter_mut().enumerate() {
                let c = sc.get(i, j, k);
                if c != 0 {
                    *o = f.add(*o, f.mul(ab, f.from_int(c as i64)));
                }
            }
        }
    }
    out
}

fn central_character(g: &Group, chi: &Character, f: &FiniteField) -> Result<Vec<Fq>> {
    let frame = g.classes();
    let deg = CycNumber::from_int(chi.degree as i64);
    frame
        .classes
        .iter()
        .enumerate()
        .map(|(k, class)| {
            let w = chi.values[k]
                .mul_int(class.size() as i64)
                .div(&deg)
                .expect("nonzero degree");
            w.reduce_mod_p(f)
        })
        .collect()
}

fn module_central_character(g: &Group, s: &SimpleModule) -> Vec<Fq> {
    let f = s.rep.field();
    let images = s.rep.images();
    g.classes()
        .classes
        .iter()
        .map(|class| {
            class
                .members
                .iter()
                .fold(0, |acc, &x| f.add(acc, images[x].get(0, 0)))
        })
        .collect()
}

/// Largest subgroup `D` of the fixed Sylow (up to conjugacy) with
/// `Br_D(e) ≠ 0`: some class in the support of `e` meets `C_G(D)`.
fn defect_group(g: &Group, candidates: &[Vec<usize>], idempotent: &[Fq]) -> Option<Vec<usize>> {
    let frame = g.classes();
    candidates
        .iter()
        .find(|d| {
            let gens = g.small_generating_set(d);
            frame.classes.iter().enumerate().any(|(k, class)| {
                idempotent[k] != 0
                    && class
                        .members
                        .iter()
                        .any(|&x| gens.iter().all(|&y| g.commute(x, y)))
            })
        })
        .cloned()
}

/// Blocks of `kG` over `field`, principal block first.
pub fn compute_blocks(
    g: &Group,
    field: Arc<FiniteField>,
    chars: &[Character],
    simples: &[SimpleModule],
) -> Result<BlockSystem> {
    let f: &FiniteField = &field;
    let p = f.characteristic() as u64;
    let frame = g.classes();
    let n = g.order() as u64;
    let a = valuation(n, p);
    let lambdas = chars
        .iter()
        .map(|c| central_character(g, c, f))
        .collect::<Result<Vec<_>>>()?;
    let mut keys: Vec<Vec<Fq>> = Vec::new();
    let mut character_block = Vec::with_capacity(chars.len());
    for l in &lambdas {
        match keys.iter().position(|k| k == l) {
            Some(b) => character_block.push(b),
            None => {
                character_block.push(keys.len());
                keys.push(l.clone());
            }
        }
    }
    let mut brauer_block = Vec::with_capacity(simples.len());
    for s in simples {
        let l = module_central_character(g, s);
        let b = keys
            .iter()
            .position(|k| *k == l)
            .ok_or_else(|| Error::InternalInconsistency("simple module matches no block".into()))?;
        brauer_block.push(b);
    }
    let sylow = g.sylow_elements(p);
    let mut candidates = g.conjugacy_representatives(&g.all_subgroups_of(&sylow));
    candidates.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    let inv_n = CycNumber::from_rational(1, n as i64);
    let mut blocks = Vec::new();
    for (b, key) in keys.into_iter().enumerate() {
        let members: Vec<usize> = (0..chars.len()).filter(|&i| character_block[i] == b).collect();
        let mut idempotent = Vec::with_capacity(frame.len());
        for k in 0..frame.len() {
            let mut acc = CycNumber::zero();
            for &i in &members {
                let chi = &chars[i];
                acc = acc.add(&chi.values[frame.inverse_class[k]].mul_int(chi.degree as i64));
            }
            idempotent.push(acc.mul(&inv_n).reduce_mod_p(f)?);
        }
        let min_nu = members
            .iter()
            .map(|&i| valuation(chars[i].degree, p))
            .min()
            .unwrap();
        let defect = a - min_nu;
        let d = defect_group(g, &candidates, &idempotent)
            .ok_or_else(|| Error::InternalInconsistency("block idempotent has no defect group".into()))?;
        if d.len() as u64 != p.pow(defect) {
            return Err(Error::InternalInconsistency(format!(
                "defect group of order {} but defect {defect}",
                d.len()
            )));
        }
        let dg = g.subgroup(&d).group;
        let (representation_type, shape) = representation_type(p, &dg)?;
        blocks.push(Block {
            idempotent,
            central_character: key,
            characters: members,
            brauer_characters: (0..simples.len()).filter(|&i| brauer_block[i] == b).collect(),
            defect,
            defect_group: d,
            shape,
            representation_type,
        });
    }
    Ok(BlockSystem {
        p,
        field,
        blocks,
        character_block,
        brauer_block,
    })
}

/// The block of `G` whose central character agrees with that of block `b`
/// of the centralizer `h` on every class sum of `G`.
pub fn brauer_correspondent(
    g: &Group,
    g_blocks: &BlockSystem,
    h: &Subgroup,
    h_blocks: &BlockSystem,
    b: usize,
) -> Result<usize> {
    let f = &g_blocks.field;
    assert!(**f == *h_blocks.field, "block systems over different fields");
    let hf = h.group.classes();
    let mut mu = vec![0; g.classes().len()];
    for (l, class) in hf.classes.iter().enumerate() {
        let k = g.class_of(h.embedding[class.representative]);
        mu[k] = f.add(mu[k], h_blocks.blocks[b].central_character[l]);
    }
    let matches: Vec<usize> = (0..g_blocks.blocks.len())
        .filter(|&i| g_blocks.blocks[i].central_character == mu)
        .collect();
    match matches.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::NoCorrespondent(b)),
    }
}
