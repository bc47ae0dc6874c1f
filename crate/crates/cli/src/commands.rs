//! Command execution, independent of argument parsing.

use std::fmt;
use std::sync::Arc;

use modrep::arith::{FiniteField, Mat};
use modrep::decomp::character_height;
use modrep::deform::{cohomology_dims, versal_presentation_truncated};
use modrep::group::{library, Group};
use modrep::rep::{stable_end, MatRep};
use modrep::tame::deformation_ring_report;
use modrep::{ErrorKind, ModularSystem};

use crate::cache::{cache_key, Cache, Lookup};
use crate::document::*;
use crate::groupfile::{self, GroupInput, ParseError};
use crate::repfile::{parse_polynomial, RepInput};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Chartable,
    Simples,
    Decomp,
    Gendecomp,
    Blocks,
    Cohomology,
    Deform,
    TameReport,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Chartable => "chartable",
            Command::Simples => "simples",
            Command::Decomp => "decomp",
            Command::Gendecomp => "gendecomp",
            Command::Blocks => "blocks",
            Command::Cohomology => "cohomology",
            Command::Deform => "deform",
            Command::TameReport => "tame-report",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Request {
    pub command: Command,
    /// Contents of the group file, or `lib:<name>` for a built-in group.
    pub group: String,
    pub p: u64,
    pub seed: u64,
    pub precision: u32,
    pub degree_cap: u32,
    /// Contents of a representation file.
    pub rep: Option<String>,
    pub three_tubes: Option<bool>,
    pub qn: Option<String>,
    pub block: Option<usize>,
}

impl Request {
    pub fn new(command: Command, group: impl Into<String>, p: u64) -> Self {
        Request {
            command,
            group: group.into(),
            p,
            seed: modrep::system::DEFAULT_SEED,
            precision: 4,
            degree_cap: 4,
            rep: None,
            three_tubes: None,
            qn: None,
            block: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(ParseError),
    Core(modrep::Error),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "group file {e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<modrep::Error> for CliError {
    fn from(e: modrep::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Budget => 3,
                ErrorKind::Internal => 4,
            },
        }
    }

    pub fn to_document(&self) -> ErrorDocument {
        let kind = match self.exit_code() {
            2 => "input",
            3 => "budget",
            _ => "internal",
        };
        let (line, column) = match self {
            CliError::Parse(e) => (Some(e.line), Some(e.column)),
            _ => (None, None),
        };
        ErrorDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            error: ErrorBody {
                kind: kind.into(),
                exit_code: self.exit_code(),
                message: self.to_string(),
                line,
                column,
            },
        }
    }
}

pub fn load_group(source: &str) -> Result<(GroupInput, Group), CliError> {
    let input = match source.strip_prefix("lib:") {
        Some(name) => {
            let g = library::by_name(name.trim()).ok_or_else(|| {
                CliError::Core(modrep::Error::InvalidInput(format!("unknown library group '{name}'")))
            })?;
            GroupInput {
                name: Some(name.trim().to_string()),
                degree: g.degree(),
                generators: g.generator_perms(),
            }
        }
        None => groupfile::parse(source)?,
    };
    let g = input.build()?;
    Ok((input, g))
}

fn field_matrix(f: &FiniteField, m: &Mat) -> FieldMatrix {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| f.coeffs(m.get(i, j))).collect())
        .collect()
}

fn residual(req: &Request, group: &Arc<Group>) -> Result<MatRep, CliError> {
    match &req.rep {
        Some(text) => {
            let r = RepInput::parse(text)?;
            if r.p as u64 != req.p {
                return Err(CliError::Core(modrep::Error::InvalidInput(format!(
                    "representation is over characteristic {}, not {}",
                    r.p, req.p
                ))));
            }
            Ok(r.build(group.clone())?)
        }
        None => Ok(MatRep::trivial(
            group.clone(),
            Arc::new(FiniteField::new(req.p as u32, 1)?),
            1,
        )),
    }
}

struct Prepared {
    input: GroupInput,
    group: Arc<Group>,
    sys: ModularSystem,
    input_sha256: String,
}

fn prepare(req: &Request) -> Result<Prepared, CliError> {
    let (input, group) = load_group(&req.group)?;
    let group = Arc::new(group);
    let sys = ModularSystem::new(group.clone(), req.p, req.seed)?;
    let input_sha256 = cache_key(&["group", &req.group, "rep", req.rep.as_deref().unwrap_or("")]);
    Ok(Prepared {
        input,
        group,
        sys,
        input_sha256,
    })
}

fn compute(req: &Request, pre: &Prepared) -> Result<(u32, Payload), CliError> {
    let sys = &pre.sys;
    let g = &pre.group;
    let e = sys.field().degree();
    let payload = match req.command {
        Command::Chartable => {
            let frame = g.classes();
            let classes = frame
                .representatives()
                .into_iter()
                .zip(frame.orders())
                .zip(frame.sizes())
                .map(|((r, order), size)| ClassInfo {
                    representative: g.element(r).to_string(),
                    order,
                    size,
                })
                .collect();
            Payload::Chartable {
                classes,
                characters: sys.characters()?.iter().map(|c| c.to_value()).collect(),
            }
        }
        Command::Simples => {
            let f = sys.field();
            let modules = sys
                .simples()?
                .iter()
                .map(|s| SimpleValue {
                    dim: s.rep.dim(),
                    brauer: s.brauer.to_value(),
                    generators: s.rep.generator_images().iter().map(|m| field_matrix(f, m)).collect(),
                })
                .collect();
            Payload::Simples { modules }
        }
        Command::Decomp => {
            let d = sys.decomposition()?;
            Payload::Decomp {
                p_regular_classes: g.classes().p_regular(req.p),
                matrix: d.entries.clone(),
                cartan: d.cartan(),
            }
        }
        Command::Gendecomp => Payload::Gendecomp {
            slices: sys.generalized_decomposition()?.to_value(sys),
        },
        Command::Blocks => {
            let bs = sys.blocks()?;
            let mut heights = Vec::new();
            for (chi, &b) in bs.character_block.iter().enumerate() {
                heights.push(CharacterHeight {
                    character: chi,
                    block: b,
                    height: character_height(sys, chi, b)?,
                });
            }
            Payload::Blocks {
                blocks: bs.summaries(g),
                heights,
            }
        }
        Command::Cohomology => {
            let rho = residual(req, g)?;
            return Ok((rho.field().degree(), Payload::Cohomology(cohomology_dims(&rho)?)));
        }
        Command::Deform => {
            let rho = residual(req, g)?;
            let c = cohomology_dims(&rho)?;
            let v = versal_presentation_truncated(&rho, req.degree_cap, req.precision)?;
            let se = stable_end(&rho);
            return Ok((
                rho.field().degree(),
                Payload::Deform(DeformSummary {
                    dim: rho.dim(),
                    h0: c.h0,
                    h1: c.h1,
                    h2: c.h2,
                    stable_end: se,
                    universal: se == 1,
                    presentation: v.data(),
                }),
            ));
        }
        Command::TameReport => {
            let qn = req.qn.as_deref().map(parse_polynomial).transpose()?;
            let block = match req.block {
                Some(b) => b,
                None => sys.blocks()?.character_block[0],
            };
            Payload::TameReport(deformation_ring_report(sys, block, req.three_tubes, qn.as_deref(), true)?)
        }
    };
    Ok((e, payload))
}

/// Computes the result document without touching any cache.
pub fn run(req: &Request) -> Result<ResultDocument, CliError> {
    let pre = prepare(req)?;
    document(req, &pre)
}

fn document(req: &Request, pre: &Prepared) -> Result<ResultDocument, CliError> {
    let (e, payload) = compute(req, pre)?;
    Ok(ResultDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        command: req.command.as_str().into(),
        input_sha256: pre.input_sha256.clone(),
        seed: req.seed,
        p: req.p,
        e,
        group: GroupSummary {
            name: pre.input.name.clone(),
            degree: pre.input.degree,
            order: pre.group.order(),
            generators: pre.input.generators.iter().map(|x| x.to_string()).collect(),
        },
        payload,
    })
}

fn request_key(req: &Request, pre: &Prepared) -> String {
    let parts = [
        TOOL.to_string(),
        VERSION.to_string(),
        req.command.as_str().to_string(),
        pre.input_sha256.clone(),
        req.p.to_string(),
        pre.sys.field().degree().to_string(),
        req.seed.to_string(),
        req.precision.to_string(),
        req.degree_cap.to_string(),
        format!("{:?}", req.three_tubes),
        format!("{:?}", req.qn),
        format!("{:?}", req.block),
    ];
    let refs: Vec<&str> = parts.iter().map(String::as_str).collect();
    cache_key(&refs)
}

/// Document bytes, served from `cache` when a verified entry exists.
pub fn execute(req: &Request, cache: Option<&Cache>, mut warn: impl FnMut(&str)) -> Result<Vec<u8>, CliError> {
    let pre = prepare(req)?;
    let key = request_key(req, &pre);
    if let Some(c) = cache {
        match c.load(&key) {
            Lookup::Hit(bytes) => match ResultDocument::from_bytes(&bytes) {
                Ok(doc) if doc.to_bytes() == bytes && doc.input_sha256 == pre.input_sha256 => return Ok(bytes),
                _ => warn("discarded cache entry that does not parse as a result document"),
            },
            Lookup::Corrupt(msg) => warn(&msg),
            Lookup::Miss => {}
        }
    }
    let bytes = document(req, &pre)?.to_bytes();
    if let Some(c) = cache {
        if let Err(e) = c.store(&key, &bytes) {
            warn(&format!("could not write cache entry: {e}"));
        }
    }
    Ok(bytes)
}
