//! Decomposition numbers, generalized decomposition numbers, heights and
//! Brauer's vanishing condition.

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::prime::valuation;
use crate::arith::{cyc_solve_many, CycNumber, CycValue};
use crate::block::{brauer_correspondent, Block};
use crate::chartab::Character;
use crate::error::{Error, Result};
use crate::system::ModularSystem;

/// `d_{μν}`: rows are ordinary characters, columns the simple modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionMatrix {
    pub p: u64,
    pub entries: Vec<Vec<i64>>,
}

impl DecompositionMatrix {
    /// Cartan matrix `DᵀD`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let cols = self.entries.first().map_or(0, Vec::len);
        (0..cols)
            .map(|a| {
                (0..cols)
                    .map(|b| self.entries.iter().map(|r| r[a] * r[b]).sum())
                    .collect()
            })
            .collect()
    }
}

/// Solves `A X = B` where `A[j][ν] = φ_ν(v_j)` and `B[j][μ] = ζ_μ(u v_j)`.
fn solve_slice(brauer: &[Vec<CycNumber>], targets: &[Vec<CycNumber>]) -> Result<Vec<Vec<CycNumber>>> {
    let l = brauer.len();
    let a: Vec<Vec<CycNumber>> = (0..l)
        .map(|j| brauer.iter().map(|phi| phi[j].clone()).collect())
        .collect();
    let b: Vec<Vec<CycNumber>> = (0..l)
        .map(|j| targets.iter().map(|z| z[j].clone()).collect())
        .collect();
    let x = cyc_solve_many(&a, &b)?;
    // x[ν][μ] → rows μ
    Ok((0..targets.len())
        .map(|mu| (0..l).map(|nu| x[nu][mu].clone()).collect())
        .collect())
}

pub fn decomposition_matrix(sys: &ModularSystem) -> Result<DecompositionMatrix> {
    let g = sys.group();
    let p = sys.p();
    let regular = g.classes().p_regular(p);
    let brauer: Vec<Vec<CycNumber>> = sys.simples()?.iter().map(|s| s.brauer.values.clone()).collect();
    let targets: Vec<Vec<CycNumber>> = sys
        .characters()?
        .iter()
        .map(|c| regular.iter().map(|&k| c.values[k].clone()).collect())
        .collect();
    let solved = solve_slice(&brauer, &targets)?;
    let entries = solved
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| match x.to_rational() {
                    Some(r) if r.is_integer() && !r.is_negative() => Ok(r.to_integer().to_i64().unwrap()),
                    _ => Err(Error::NonIntegralSolution(format!("decomposition number {x}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionMatrix { p, entries })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSlice {
    /// `u_i` as a group element index.
    pub u: usize,
    pub alpha: u32,
    /// `G`-classes of `u_i v_{i,j}`.
    pub classes: Vec<usize>,
    /// `d^i_{μν}`, rows `μ`, columns the simples of `C_G(u_i)`.
    pub entries: Vec<Vec<CycNumber>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenDecompositionTable {
    pub p: u64,
    pub slices: Vec<GenSlice>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSliceValue {
    pub u: String,
    pub alpha: u32,
    pub centralizer_order: usize,
    pub classes: Vec<usize>,
    pub entries: Vec<Vec<CycValue>>,
}

impl GenDecompositionTable {
    pub fn to_value(&self, sys: &ModularSystem) -> Vec<GenSliceValue> {
        self.slices
            .iter()
            .enumerate()
            .map(|(i, s)| GenSliceValue {
                u: sys.group().element(s.u).to_string(),
                alpha: s.alpha,
                centralizer_order: sys.frame().slots[i].centralizer.group.order(),
                classes: s.classes.clone(),
                entries: s
                    .entries
                    .iter()
                    .map(|r| r.iter().map(CycNumber::to_value).collect())
                    .collect(),
            })
            .collect()
    }
}

pub fn generalized_decomposition(sys: &ModularSystem) -> Result<GenDecompositionTable> {
    let p = sys.p();
    let chars = sys.characters()?;
    let frame = sys.frame();
    let n_slots = frame.slots.len();
    for i in 1..n_slots {
        sys.slot_system(i).simples()?;
    }
    let slices = sys
        .exec()
        .map_range(n_slots, |i| -> Result<GenSlice> {
            let slot = &frame.slots[i];
            let csys = sys.slot_system(i);
            let brauer: Vec<Vec<CycNumber>> =
                csys.simples()?.iter().map(|s| s.brauer.values.clone()).collect();
            let targets: Vec<Vec<CycNumber>> = chars
                .iter()
                .map(|c| slot.class_index.iter().map(|&k| c.values[k].clone()).collect())
                .collect();
            let entries = solve_slice(&brauer, &targets)?;
            let pa = p.pow(slot.alpha);
            for x in entries.iter().flatten() {
                if !x.is_algebraic_integer() || !x.lies_in_conductor(pa) {
                    return Err(Error::NonIntegralSolution(format!(
                        "generalized decomposition number {x} at u of order {pa}"
                    )));
                }
            }
            let entries = entries
                .into_iter()
                .map(|r| r.into_iter().map(|x| x.minimize_conductor()).collect())
                .collect();
            Ok(GenSlice {
                u: slot.u,
                alpha: slot.alpha,
                classes: slot.class_index.clone(),
                entries,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(GenDecompositionTable { p, slices })
}

/// `ν_p(χ(1)) − ν_p(|G|) + d(B)`.
pub fn character_height(sys: &ModularSystem, chi: usize, block: usize) -> Result<u32> {
    let blocks = sys.blocks()?;
    let b: &Block = &blocks.blocks[block];
    if !b.characters.contains(&chi) {
        return Err(Error::CharacterNotInBlock { character: chi, block });
    }
    let p = sys.p();
    let deg: &Character = &sys.characters()?[chi];
    let a = valuation(sys.group().order() as u64, p);
    let h = valuation(deg.degree, p) as i64 - a as i64 + b.defect as i64;
    if h < 0 {
        return Err(Error::InternalInconsistency(format!("negative height for character {chi}")));
    }
    Ok(h as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    /// Triples `(μ, i, ν)` where the blocks differ, all found to vanish.
    pub constrained: Vec<(usize, usize, usize)>,
    pub checked: usize,
}

/// Checks `d^i_{μν} = 0` whenever the Brauer correspondent of the block of
/// `φ^i_ν` differs from the block of `ζ_μ`.
pub fn verify_block_vanishing(sys: &ModularSystem, table: &GenDecompositionTable) -> Result<VanishingReport> {
    let g = sys.group();
    let g_blocks = sys.blocks()?;
    let frame = sys.frame();
    let mut constrained = Vec::new();
    let mut checked = 0;
    for (i, slice) in table.slices.iter().enumerate() {
        let csys = sys.slot_system(i);
        let c_blocks = csys.blocks()?;
        let centralizer = &frame.slots[i].centralizer;
        let correspondents: Vec<usize> = (0..c_blocks.blocks.len())
            .map(|b| brauer_correspondent(g, g_blocks, centralizer, c_blocks, b))
            .collect::<Result<_>>()?;
        for (mu, row) in slice.entries.iter().enumerate() {
            for (nu, x) in row.iter().enumerate() {
                checked += 1;
                let target = correspondents[c_blocks.brauer_block[nu]];
                if target != g_blocks.character_block[mu] {
                    if !x.is_zero() {
                        return Err(Error::VanishingViolated { mu, i, nu });
                    }
                    constrained.push((mu, i, nu));
                }
            }
        }
    }
    Ok(VanishingReport { constrained, checked })
}
