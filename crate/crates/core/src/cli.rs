//! The `filiform` command line.
//!
//! Exit codes: 0 success, 1 failed verification, 2 invalid input, 3 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{RowVector, VergneAlgebra};
use crate::classify::{enumerate, enumeration_json, extension_tree, label, to_dot};
use crate::cohomology::{betti, BettiTable};
use crate::error::Error;
use crate::extension::{decompose, partner, reduce};
use crate::verify::{self, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "filiform", version, about = "GF(2) cohomology of Vergne-type filiform Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti numbers of one algebra.
    Betti(BettiArgs),
    /// List every Vergne algebra of a dimension.
    Enumerate(EnumerateArgs),
    /// Write the extension tree as DOT.
    Tree(TreeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Partner algebra with equal Betti numbers.
    Pair(RowArgs),
    /// Truncation and the cocycle recovering the algebra from it.
    Reduce(RowArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    #[arg(long)]
    pub dim: usize,
    /// `m0`, `m2` or `row:<row>`, e.g. `row:[0,0,0,1,0,0,0]`.
    #[arg(long)]
    pub algebra: String,
    /// Also print dim H^k_m.
    #[arg(long)]
    pub graded: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub dim: usize,
    /// Also emit the extension tree.
    #[arg(long)]
    pub tree: bool,
    /// Largest dimension in the tree (defaults to --dim).
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// Where to write the DOT file; stdout when omitted.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    #[arg(long)]
    pub max_dim: usize,
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Thm1,
    Thm2,
    Diagrams,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 12)]
    pub max_dim: usize,
}

#[derive(Debug, Args)]
pub struct RowArgs {
    #[arg(long)]
    pub dim: usize,
    #[arg(long)]
    pub row: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

enum Failure {
    Input(Error),
    Usage(String),
    Io(std::io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Betti(a) => run_betti(&a, stdout),
        Command::Enumerate(a) => run_enumerate(&a, stdout),
        Command::Tree(a) => run_tree(&a, stdout),
        Command::Verify(a) => run_verify(&a, stdout),
        Command::Pair(a) => run_pair(&a, stdout),
        Command::Reduce(a) => run_reduce(&a, stdout),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID_INPUT
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID_INPUT
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_IO
        }
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
    }
}

fn parse_algebra(dim: usize, spec: &str) -> Result<VergneAlgebra, Error> {
    match spec.trim() {
        "m0" => VergneAlgebra::m0(dim),
        "m2" => VergneAlgebra::m2(dim),
        other => {
            let row = other.strip_prefix("row:").unwrap_or(other);
            VergneAlgebra::from_row(&RowVector::parse_with_dim(dim, row)?)
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn write_betti_text(out: &mut dyn Write, t: &BettiTable, graded: bool) -> std::io::Result<()> {
    writeln!(out, "betti: {}", join(&t.betti))?;
    writeln!(out, "cocycle_dims: {}", join(&t.cocycle_dims))?;
    if graded {
        for (&(k, m), &v) in &t.graded {
            writeln!(out, "H^{k}_{m} = {v}")?;
        }
    }
    Ok(())
}

fn run_betti(a: &BettiArgs, out: &mut dyn Write) -> Outcome {
    let g = parse_algebra(a.dim, &a.algebra)?;
    let t = betti(&g);
    match a.format {
        Format::Text => {
            writeln!(out, "algebra: {} {}", label(&g), g.row())?;
            write_betti_text(out, &t, a.graded)?;
        }
        Format::Json => {
            let mut v = t.to_json_value();
            if !a.graded {
                v.as_object_mut().expect("object").remove("graded");
            }
            writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?;
        }
        Format::Csv => out.write_all(t.to_csv().as_bytes())?,
    }
    Ok(())
}

fn write_dot(path: Option<&PathBuf>, dot: &str, out: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, dot)?,
        None => out.write_all(dot.as_bytes())?,
    }
    Ok(())
}

fn run_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Outcome {
    if a.format == Format::Csv {
        return Err(Failure::Usage("enumerate supports --format text or json".into()));
    }
    let algebras = enumerate(a.dim)?;
    match a.format {
        Format::Json => {
            let v = enumeration_json(a.dim, &algebras);
            writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?;
        }
        _ => {
            let v = enumeration_json(a.dim, &algebras);
            writeln!(out, "dimension {}: {} algebras", a.dim, algebras.len())?;
            for entry in v["algebras"].as_array().expect("array") {
                let b: Vec<String> = entry["betti"]
                    .as_array()
                    .expect("array")
                    .iter()
                    .map(|x| x.to_string())
                    .collect();
                writeln!(
                    out,
                    "{}\t{}\t{}",
                    entry["label"].as_str().expect("label"),
                    entry["row"].as_str().expect("row"),
                    b.join(" ")
                )?;
            }
        }
    }
    if a.tree {
        let max = a.max_dim.unwrap_or(a.dim);
        let tree = extension_tree(max)?;
        write_dot(a.dot.as_ref(), &to_dot(&tree), out)?;
    }
    Ok(())
}

fn run_tree(a: &TreeArgs, out: &mut dyn Write) -> Outcome {
    let tree = extension_tree(a.max_dim)?;
    write_dot(a.dot.as_ref(), &to_dot(&tree), out)
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    if a.max_dim < 5 {
        return Err(Failure::Usage(format!("--max-dim must be at least 5, got {}", a.max_dim)));
    }
    let mut reports: Vec<SuiteReport> = Vec::new();
    if matches!(a.suite, Suite::Thm1 | Suite::All) {
        reports.push(verify::model_pairs(a.max_dim)?);
    }
    if matches!(a.suite, Suite::Thm2 | Suite::All) {
        reports.push(verify::partner_pairs(a.max_dim)?);
    }
    if matches!(a.suite, Suite::Diagrams | Suite::All) {
        reports.push(verify::diagrams(a.max_dim)?);
    }
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    let ok = reports.iter().all(SuiteReport::passed);
    writeln!(out, "{}", if ok { "verification passed" } else { "verification FAILED" })?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn root_label(g: &VergneAlgebra) -> String {
    label(&decompose(g).root)
}

fn run_pair(a: &RowArgs, out: &mut dyn Write) -> Outcome {
    let g = parse_algebra(a.dim, &a.row)?;
    let p = partner(&g)?;
    let (bg, bp) = (betti(&g).betti, betti(&p).betti);
    match a.format {
        Format::Json => {
            let v = json!({
                "dimension": a.dim,
                "algebra": {"row": g.row().to_string(), "label": label(&g), "root": root_label(&g), "betti": bg},
                "partner": {"row": p.row().to_string(), "label": label(&p), "root": root_label(&p), "betti": bp},
                "betti_equal": bg == bp,
            });
            writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?;
        }
        _ => {
            writeln!(out, "algebra: {} {} root {}", label(&g), g.row(), root_label(&g))?;
            writeln!(out, "partner: {} {} root {}", label(&p), p.row(), root_label(&p))?;
            writeln!(out, "betti:   {}", join(&bg))?;
            writeln!(out, "partner betti: {}", join(&bp))?;
        }
    }
    Ok(())
}

fn run_reduce(a: &RowArgs, out: &mut dyn Write) -> Outcome {
    let g = parse_algebra(a.dim, &a.row)?;
    let (base, omega) = reduce(&g)?;
    match a.format {
        Format::Json => {
            let v = json!({
                "dimension": a.dim,
                "row": g.row().to_string(),
                "base": base.row().to_string(),
                "omega": omega.to_string(),
                "decomposition": decompose(&g).to_json_value(),
            });
            writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?;
        }
        _ => {
            writeln!(out, "base: {}", base.row())?;
            writeln!(out, "omega: {omega}")?;
        }
    }
    Ok(())
}
