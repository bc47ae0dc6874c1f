//! Front end for `modrep`: group and representation input files, JSON result
//! documents, and the result cache.

pub mod cache;
pub mod commands;
pub mod document;
pub mod groupfile;
pub mod repfile;

pub use commands::{execute, run, CliError, Command, Request};
pub use document::{Payload, ResultDocument};
