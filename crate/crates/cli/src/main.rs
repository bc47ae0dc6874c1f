use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use modrep_cli::cache::Cache;
use modrep_cli::{execute, CliError, Command, Request};

#[derive(Parser)]
#[command(name = "modrep", version, about = "Exact modular representation theory of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Group file, or `lib:<name>` for a built-in group (s4, sl2_7, ...).
    #[arg(long)]
    group: String,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = modrep::system::DEFAULT_SEED)]
    seed: u64,
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    /// Cache directory; defaults to $MODREP_WORKSPACE.
    #[arg(long)]
    workspace: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct RepArgs {
    /// JSON generator matrices over GF(p^e); defaults to the trivial module.
    #[arg(long)]
    rep: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum YesNo {
    Yes,
    No,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ordinary character table.
    Chartable(Common),
    /// Absolutely irreducible modules and their Brauer characters.
    Simples(Common),
    /// Decomposition and Cartan matrices.
    Decomp(Common),
    /// Generalized decomposition numbers.
    Gendecomp(Common),
    /// Blocks, defects, defect groups and heights.
    Blocks(Common),
    /// Cohomology of the adjoint module in degrees 0, 1, 2.
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        rep: RepArgs,
    },
    /// Truncated versal deformation ring.
    Deform {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 4)]
        precision: u32,
        #[arg(long, default_value_t = 4)]
        degree_cap: u32,
    },
    /// Deformation-ring report for a tame 2-block.
    TameReport {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        three_tubes: Option<YesNo>,
        /// Externally supplied q_n, e.g. "t^3 + 2*t".
        #[arg(long)]
        qn: Option<String>,
        /// Block index; defaults to the principal block.
        #[arg(long)]
        block: Option<usize>,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn request(cmd: Cmd) -> Result<(Request, Common), CliError> {
    let (command, common) = match &cmd {
        Cmd::Chartable(c) => (Command::Chartable, c.clone()),
        Cmd::Simples(c) => (Command::Simples, c.clone()),
        Cmd::Decomp(c) => (Command::Decomp, c.clone()),
        Cmd::Gendecomp(c) => (Command::Gendecomp, c.clone()),
        Cmd::Blocks(c) => (Command::Blocks, c.clone()),
        Cmd::Cohomology { common, .. } => (Command::Cohomology, common.clone()),
        Cmd::Deform { common, .. } => (Command::Deform, common.clone()),
        Cmd::TameReport { common, .. } => (Command::TameReport, common.clone()),
    };
    let group = if common.group.starts_with("lib:") {
        common.group.clone()
    } else {
        read(&PathBuf::from(&common.group))?
    };
    let mut req = Request::new(command, group, common.p);
    req.seed = common.seed;
    match cmd {
        Cmd::Cohomology { rep, .. } => {
            req.rep = rep.rep.as_ref().map(read).transpose()?;
        }
        Cmd::Deform {
            rep,
            precision,
            degree_cap,
            ..
        } => {
            req.rep = rep.rep.as_ref().map(read).transpose()?;
            req.precision = precision;
            req.degree_cap = degree_cap;
        }
        Cmd::TameReport {
            three_tubes,
            qn,
            block,
            ..
        } => {
            req.three_tubes = three_tubes.map(|x| matches!(x, YesNo::Yes));
            req.qn = qn;
            req.block = block;
        }
        _ => {}
    }
    Ok((req, common))
}

fn main_inner(cli: Cli) -> Result<(), CliError> {
    let (req, common) = request(cli.command)?;
    let cache = if common.no_cache {
        None
    } else {
        Cache::locate(common.workspace.as_deref())
    };
    let bytes = execute(&req, cache.as_ref(), |w| eprintln!("warning: {w}"))?;
    match &common.out {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match main_inner(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let doc = e.to_document();
            eprintln!("{}", serde_json::to_string(&doc).expect("serializable"));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
