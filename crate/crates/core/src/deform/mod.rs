//! Deformations of residual representations over finite local rings.

pub mod cohomology;
pub mod howell;
pub mod lift;
pub mod obstruction;
pub mod oracle;
pub mod ring;
pub mod versal;

pub use cohomology::{cohomology_dims, BarComplex, CohomologyReport};
pub use lift::{Lift, RMat, SmallExtension};
pub use obstruction::{
    canonical_section, lift_from_class, obstruction_class, obstruction_class_from, tangent_class, Obstruction,
};
pub use oracle::{enumerate_lifts, enumerate_lifts_through, lifts_isomorphic, modules_isomorphic};
pub use ring::{Elem, LocalAlgebra};
pub use versal::{versal_presentation_truncated, PresentationData, VersalPresentation};
