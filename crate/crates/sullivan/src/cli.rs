//! Command surface. Exit codes: 0 all checks pass, 1 a mathematical check
//! failed or is obstructed, 2 parse or usage error, 3 unsupported (nonlinear
//! square, truncation exceeded, degree-one loop input).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sullivan_core::catalog::{self, EntryKind};
use sullivan_core::emap::{
    co_e_subset_criterion, e_subset_criterion, solve_square, witness_strings, CriterionVerdict, Direction,
    SquareOutcome, SquareProblem,
};
use sullivan_core::error::AlgebraError;

use crate::dsl::{self, Decl, Program, SourceFile};
use crate::reproduce;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sullivan", version, about = "Sullivan models, E-maps and co-E-maps over the rationals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Dir {
    E,
    Coe,
}

impl From<Dir> for Direction {
    fn from(d: Dir) -> Self {
        match d {
            Dir::E => Direction::E,
            Dir::Coe => Direction::CoE,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Validate the models and morphisms of a file
    Check {
        file: PathBuf,
        #[arg(long)]
        model: Option<String>,
    },
    /// Cohomology dimensions and representatives
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        model: String,
        /// Degree range `LO..HI`, inclusive
        #[arg(long)]
        degrees: String,
    },
    /// Print the free loop model of a model
    Loop {
        file: PathBuf,
        #[arg(long)]
        model: String,
    },
    /// Solve the commuting square for a bridge and a known automorphism
    SolveSquare {
        file: PathBuf,
        #[arg(long)]
        bridge: String,
        #[arg(long)]
        auto: String,
        #[arg(long, value_enum)]
        direction: Dir,
    },
    /// Sub-multiset criterion on odd degree lists
    Criterion {
        #[arg(long = "type", value_enum)]
        kind: Dir,
        #[arg(long, value_delimiter = ',')]
        a: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<u32>,
    },
    /// Browse the built-in models and morphisms
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Regenerate the reproduction report
    ReportPaper {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// List entries with parameters and citations
    List,
    /// Print an entry in the text format; example parameters are used when none are given
    Show { name: String, args: Vec<String> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Output {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn algebra_code(e: &AlgebraError) -> i32 {
    match e {
        AlgebraError::TruncationExceeded { .. } | AlgebraError::DegreeOneGenerator(_) => EXIT_UNSUPPORTED,
        AlgebraError::InvalidParameter(_) | AlgebraError::UnknownVariable(_) | AlgebraError::ModelMismatch => {
            EXIT_USAGE
        }
        _ => EXIT_CHECK_FAILED,
    }
}

fn algebra_err(e: AlgebraError) -> Output {
    Output::err(algebra_code(&e), format!("error: {}", e))
}

fn load(file: &PathBuf) -> Result<(SourceFile, Program), Output> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Output::err(EXIT_USAGE, format!("{}: {}", file.display(), e)))?;
    let parsed = dsl::parse_source(&text).map_err(|d| Output::err(EXIT_USAGE, format!("{}:{}", file.display(), d)))?;
    let prog = dsl::build_program(&parsed).map_err(|d| Output::err(EXIT_USAGE, format!("{}:{}", file.display(), d)))?;
    Ok((parsed, prog))
}

/// Runs the command line `argv` (program name first) and returns its exit
/// code and output.
pub fn run_command<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Output::ok(text),
                _ => Output::err(EXIT_USAGE, text),
            };
        }
    };
    match cli.cmd {
        Cmd::Check { file, model } => check(&file, model.as_deref()),
        Cmd::Cohomology { file, model, degrees } => cohomology(&file, &model, &degrees),
        Cmd::Loop { file, model } => loop_model(&file, &model),
        Cmd::SolveSquare {
            file,
            bridge,
            auto,
            direction,
        } => solve(&file, &bridge, &auto, direction.into()),
        Cmd::Criterion { kind, a, b } => criterion(kind.into(), &a, &b),
        Cmd::Catalog { action } => match action {
            CatalogCmd::List => catalog_list(),
            CatalogCmd::Show { name, args } => catalog_show(&name, &args),
        },
        Cmd::ReportPaper { out, format } => report_paper(out.as_ref(), format),
    }
}

fn check(file: &PathBuf, only: Option<&str>) -> Output {
    let (parsed, prog) = match load(file) {
        Ok(x) => x,
        Err(o) => return o,
    };
    if let Some(name) = only {
        if !prog.models.contains_key(name) {
            return Output::err(EXIT_USAGE, format!("no model named `{}`", name));
        }
    }
    let mut out = String::new();
    let mut failed = false;
    for d in &parsed.decls {
        match d {
            Decl::Model(m) if only.is_none_or(|n| n == m.name) => {
                let r = prog.models[&m.name].validate();
                let status = if r.is_valid() { "valid" } else { "invalid" };
                let _ = writeln!(
                    out,
                    "model {}: {}{}",
                    m.name,
                    status,
                    if r.minimal { ", minimal" } else { "" }
                );
                for v in &r.violations {
                    let _ = writeln!(out, "  {}", v);
                }
                failed |= !r.is_valid();
            }
            Decl::Morphism(m) if only.is_none() => {
                let r = prog.morphisms[&m.name].validate();
                let _ = writeln!(out, "morphism {}: {}", m.name, if r.is_valid() { "valid" } else { "invalid" });
                for v in &r.violations {
                    let _ = writeln!(out, "  {}", v);
                }
                failed |= !r.is_valid();
            }
            _ => {}
        }
    }
    Output::with(if failed { EXIT_CHECK_FAILED } else { EXIT_OK }, out)
}

fn parse_range(s: &str) -> Option<(u32, u32)> {
    let (lo, hi) = s.split_once("..")?;
    let lo = lo.trim().parse().ok()?;
    let hi = hi.trim().parse().ok()?;
    (lo <= hi).then_some((lo, hi))
}

fn cohomology(file: &PathBuf, name: &str, degrees: &str) -> Output {
    let (_, prog) = match load(file) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let Some(model) = prog.models.get(name) else {
        return Output::err(EXIT_USAGE, format!("no model named `{}`", name));
    };
    let Some((lo, hi)) = parse_range(degrees) else {
        return Output::err(EXIT_USAGE, format!("bad degree range `{}`, expected LO..HI", degrees));
    };
    if let Some(v) = model.validate().violations.first() {
        return Output::err(EXIT_CHECK_FAILED, format!("model {} is invalid: {}", name, v));
    }
    let mut out = String::new();
    for k in lo..=hi {
        match model.cohomology(k) {
            Ok(h) => {
                let reps: Vec<String> = h.representatives.iter().map(|p| format!("[{}]", p)).collect();
                let _ = write!(out, "H^{} = {}", k, h.dimension);
                if !reps.is_empty() {
                    let _ = write!(out, "  {}", reps.join(" "));
                }
                out.push('\n');
            }
            Err(e) => {
                let mut o = algebra_err(e);
                o.stdout = out;
                return o;
            }
        }
    }
    Output::ok(out)
}

fn loop_model(file: &PathBuf, name: &str) -> Output {
    let (_, prog) = match load(file) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let Some(model) = prog.models.get(name) else {
        return Output::err(EXIT_USAGE, format!("no model named `{}`", name));
    };
    match model.loop_model() {
        Ok(l) => {
            let decl = dsl::model_decl(&format!("{}_loop", name), &l);
            let valid = l.validate().is_valid();
            let text = format!("{}# D^2 = 0: {}\n", decl, valid);
            Output::with(if valid { EXIT_OK } else { EXIT_CHECK_FAILED }, text)
        }
        Err(e) => algebra_err(e),
    }
}

fn solve(file: &PathBuf, bridge: &str, auto: &str, direction: Direction) -> Output {
    let (_, prog) = match load(file) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let (Some(b), Some(k)) = (prog.morphisms.get(bridge), prog.morphisms.get(auto)) else {
        return Output::err(EXIT_USAGE, "bridge and known automorphism must be morphisms of the file");
    };
    let problem = match SquareProblem::new(b.clone(), k.clone(), direction) {
        Ok(p) => p,
        Err(e) => return algebra_err(e),
    };
    let outcome = match solve_square(&problem) {
        Ok(o) => o,
        Err(e) => return algebra_err(e),
    };
    let mut out = format!("verdict: {}\n", outcome.verdict());
    let code = match &outcome {
        SquareOutcome::Solved(s) => {
            let src = s.unknown.source();
            let _ = writeln!(
                out,
                "{}",
                dsl::morphism_decl("solution", "M", "M", &s.unknown).to_string().trim_end()
            );
            for (g, eta) in &s.primitives {
                let _ = writeln!(out, "primitive {}: {}", g, eta);
            }
            let _ = writeln!(out, "homotopy: {}", s.homotopy.verdict.as_str());
            let _ = src;
            EXIT_OK
        }
        SquareOutcome::NoSolution {
            generator,
            residual,
            reason,
        } => {
            let _ = writeln!(out, "generator: {}\nresidual: {}\nreason: {}", generator, residual, reason);
            EXIT_CHECK_FAILED
        }
        SquareOutcome::Unsupported { reason } => {
            let _ = writeln!(out, "reason: {}", reason);
            EXIT_UNSUPPORTED
        }
    };
    Output::with(code, out)
}

fn criterion(direction: Direction, a: &[u32], b: &[u32]) -> Output {
    let r = match direction {
        Direction::CoE => co_e_subset_criterion(a, b),
        Direction::E => e_subset_criterion(a, b),
    };
    match r {
        Ok(r) => {
            let mut out = format!("{}\n", r.verdict.as_str());
            for w in witness_strings(&r) {
                let _ = writeln!(out, "{}", w);
            }
            let code = if r.verdict == CriterionVerdict::Pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Output::with(code, out)
        }
        Err(e) => Output::err(EXIT_USAGE, format!("error: {}", e)),
    }
}

fn catalog_list() -> Output {
    let mut out = String::new();
    for e in catalog::ENTRIES {
        let kind = match e.kind {
            EntryKind::Model => "model",
            EntryKind::Morphism => "morphism",
        };
        let _ = writeln!(out, "{:<24} {:<9} ({})", e.name, kind, e.params.join("; "));
        let _ = writeln!(out, "{:<24} {}", "", e.citation);
    }
    Output::ok(out)
}

/// Text-format rendering of a catalog entry.
pub fn catalog_text(name: &str, args: &[&str]) -> Result<String, AlgebraError> {
    let entry = catalog::find(name)
        .ok_or_else(|| AlgebraError::InvalidParameter(format!("no catalog entry named {}", name)))?;
    let args: Vec<&str> = if args.is_empty() && !entry.params.is_empty() {
        entry.example.to_vec()
    } else {
        args.to_vec()
    };
    let mut header = name.to_string();
    for a in &args {
        header.push(' ');
        header.push_str(a);
    }
    let mut out = format!("# {}\n# {}\n", header, entry.citation);
    let model_name = |suffix: &str| format!("{}{}", name, suffix);
    match entry.kind {
        EntryKind::Model => {
            let m = catalog::catalog_model(name, &args)?;
            out.push_str(&dsl::model_decl(name, &m).to_string());
        }
        EntryKind::Morphism => {
            let f = catalog::catalog_morphism(name, &args)?;
            let (src, tgt) = if f.is_endomorphism() {
                (model_name("_model"), model_name("_model"))
            } else {
                (model_name("_source"), model_name("_target"))
            };
            out.push_str(&dsl::model_decl(&src, f.source()).to_string());
            if src != tgt {
                out.push('\n');
                out.push_str(&dsl::model_decl(&tgt, f.target()).to_string());
            }
            out.push('\n');
            out.push_str(&dsl::morphism_decl(name, &src, &tgt, &f).to_string());
        }
    }
    Ok(out)
}

fn catalog_show(name: &str, args: &[String]) -> Output {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    match catalog_text(name, &refs) {
        Ok(t) => Output::ok(t),
        Err(e) => Output::err(EXIT_USAGE, format!("error: {}", e)),
    }
}

fn report_paper(out: Option<&PathBuf>, format: Format) -> Output {
    let rep = reproduce::paper_report();
    let text = match format {
        Format::Text => rep.to_text(),
        Format::Json => rep.to_json(),
    };
    let code = if rep.mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    match out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Output::with(
                code,
                format!("wrote {} ({} entries, {} mismatches)\n", path.display(), rep.entries.len(), rep.mismatches.len()),
            ),
            Err(e) => Output::err(EXIT_USAGE, format!("{}: {}", path.display(), e)),
        },
        None => Output::with(code, text),
    }
}
