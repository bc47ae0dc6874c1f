//! A group together with a prime: lazily computed tables shared by the
//! block-theoretic and decomposition computations.

use std::sync::{Arc, OnceLock};

use crate::arith::prime::is_prime;
use crate::arith::FiniteField;
use crate::block::{compute_blocks, BlockSystem};
use crate::chartab::{character_table_with, Character};
use crate::decomp::{decomposition_matrix, generalized_decomposition, DecompositionMatrix, GenDecompositionTable};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{Group, PSingularFrame};
use crate::rep::{projective_data_from, simples_over, splitting_field, ProjectiveData, SimpleModule};

pub const DEFAULT_SEED: u64 = 0x5eed;

fn get_or_try<T>(cell: &OnceLock<T>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = init()?;
    let _ = cell.set(v);
    Ok(cell.get().unwrap())
}

#[derive(Debug)]
pub struct ModularSystem {
    group: Arc<Group>,
    p: u64,
    seed: u64,
    exec: Exec,
    field: Arc<FiniteField>,
    characters: OnceLock<Vec<Character>>,
    simples: OnceLock<Vec<SimpleModule>>,
    blocks: OnceLock<BlockSystem>,
    frame: OnceLock<PSingularFrame>,
    centralizers: OnceLock<Vec<ModularSystem>>,
    decomposition: OnceLock<DecompositionMatrix>,
    generalized: OnceLock<GenDecompositionTable>,
    projective: OnceLock<ProjectiveData>,
}

impl ModularSystem {
    pub fn new(group: Arc<Group>, p: u64, seed: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let field = Arc::new(splitting_field(&group, p)?);
        Ok(Self::with_field(group, field, seed))
    }

    /// A system over a given field, which must contain the splitting field.
    pub fn with_field(group: Arc<Group>, field: Arc<FiniteField>, seed: u64) -> Self {
        ModularSystem {
            p: field.characteristic() as u64,
            group,
            seed,
            exec: Exec::default(),
            field,
            characters: OnceLock::new(),
            simples: OnceLock::new(),
            blocks: OnceLock::new(),
            frame: OnceLock::new(),
            centralizers: OnceLock::new(),
            decomposition: OnceLock::new(),
            generalized: OnceLock::new(),
            projective: OnceLock::new(),
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }
    pub fn exec(&self) -> Exec {
        self.exec
    }
    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn characters(&self) -> Result<&[Character]> {
        get_or_try(&self.characters, || character_table_with(&self.group, self.exec)).map(Vec::as_slice)
    }

    pub fn simples(&self) -> Result<&[SimpleModule]> {
        get_or_try(&self.simples, || simples_over(&self.group, self.field.clone(), self.seed))
            .map(Vec::as_slice)
    }

    pub fn blocks(&self) -> Result<&BlockSystem> {
        get_or_try(&self.blocks, || {
            compute_blocks(&self.group, self.field.clone(), self.characters()?, self.simples()?)
        })
    }

    pub fn frame(&self) -> &PSingularFrame {
        self.frame.get_or_init(|| self.group.p_singular_frame(self.p))
    }

    /// Systems for `C_G(u_i)`, `i ≥ 1`, over the same field.
    fn centralizer_systems(&self) -> &[ModularSystem] {
        self.centralizers.get_or_init(|| {
            self.frame().slots[1..]
                .iter()
                .map(|s| {
                    ModularSystem::with_field(
                        Arc::new(s.centralizer.group.clone()),
                        self.field.clone(),
                        self.seed,
                    )
                    .with_exec(self.exec)
                })
                .collect()
        })
    }

    /// The system of `C_G(u_i)`; slot 0 is the group itself.
    pub fn slot_system(&self, i: usize) -> &ModularSystem {
        if i == 0 {
            self
        } else {
            &self.centralizer_systems()[i - 1]
        }
    }

    pub fn decomposition(&self) -> Result<&DecompositionMatrix> {
        get_or_try(&self.decomposition, || decomposition_matrix(self))
    }

    pub fn generalized_decomposition(&self) -> Result<&GenDecompositionTable> {
        get_or_try(&self.generalized, || generalized_decomposition(self))
    }

    pub fn projective_data(&self) -> Result<&ProjectiveData> {
        get_or_try(&self.projective, || {
            projective_data_from(&self.group, self.simples()?.to_vec(), self.seed)
        })
    }
}
