//! Modular representations over finite fields.

mod brauer;
mod hom;
mod matrep;
mod meataxe;
mod projective;

pub use brauer::{
    brauer_character, simples, simples_over, splitting_field, BrauerCharacter, BrauerCharacterValue,
    SimpleModule,
};
pub use hom::{end_ring, hom_dim, hom_space, projective_endomorphism_dim, stable_end, stable_end_with};
pub use matrep::MatRep;
pub use meataxe::{
    chop, chop_with_budget, composition_factors, find_submodule, is_irreducible, Split,
    DEFAULT_CHOP_BUDGET,
};
pub use projective::{
    ext_dim, group_algebra_mul, projective_cover, projective_data_from, projective_indecomposables, syzygy, Pim,
    ProjectiveCover, ProjectiveData, PROJECTIVE_ORDER_CAP,
};
