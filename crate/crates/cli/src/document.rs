//! The JSON result document written by every command.

use serde::{Deserialize, Serialize};

use modrep::block::BlockSummary;
use modrep::chartab::CharacterValue;
use modrep::decomp::GenSliceValue;
use modrep::deform::{CohomologyReport, PresentationData};
use modrep::rep::BrauerCharacterValue;
use modrep::tame::TameBlockReport;

pub const TOOL: &str = "modrep";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A matrix over `GF(p^e)`, each entry a coefficient list.
pub type FieldMatrix = Vec<Vec<Vec<u32>>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: Option<String>,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub representative: String,
    pub order: u64,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleValue {
    pub dim: usize,
    pub brauer: BrauerCharacterValue,
    pub generators: Vec<FieldMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterHeight {
    pub character: usize,
    pub block: usize,
    pub height: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformSummary {
    pub dim: usize,
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    pub stable_end: usize,
    /// `true` when the stable endomorphism ring is `k`, so the ring is universal.
    pub universal: bool,
    pub presentation: PresentationData,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Payload {
    Chartable {
        classes: Vec<ClassInfo>,
        characters: Vec<CharacterValue>,
    },
    Simples {
        modules: Vec<SimpleValue>,
    },
    Decomp {
        p_regular_classes: Vec<usize>,
        matrix: Vec<Vec<i64>>,
        cartan: Vec<Vec<i64>>,
    },
    Gendecomp {
        slices: Vec<GenSliceValue>,
    },
    Blocks {
        blocks: Vec<BlockSummary>,
        heights: Vec<CharacterHeight>,
    },
    Cohomology(CohomologyReport),
    Deform(DeformSummary),
    TameReport(TameBlockReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input_sha256: String,
    pub seed: u64,
    pub p: u64,
    pub e: u32,
    pub group: GroupSummary,
    pub payload: Payload,
}

impl ResultDocument {
    /// Canonical bytes: pretty JSON with a trailing newline.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s.into_bytes()
    }

    pub fn from_bytes(bytes: &[u8]) -> serde_json::Result<Self> {
        serde_json::from_slice(bytes)
    }
}

/// Machine-readable error report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDocument {
    pub tool: String,
    pub version: String,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub exit_code: i32,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub column: Option<usize>,
}
