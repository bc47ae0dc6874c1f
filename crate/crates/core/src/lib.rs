//! Exact computational modular representation theory of finite groups.

pub mod arith;
pub mod block;
pub mod chartab;
pub mod decomp;
pub mod deform;
pub mod error;
pub mod exec;
pub mod group;
pub mod rep;
pub mod system;
pub mod tame;

pub use error::{Error, ErrorKind, Result};
pub use exec::Exec;
pub use system::ModularSystem;
