//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod decomposition_oracle;
