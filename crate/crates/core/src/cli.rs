//! The `wirecat` command line. `run` does all the work and returns the exit
//! status with both output streams, so it can be driven from tests.
//!
//! Exit statuses: 0 success or "equal", 1 "not equal" or a failing axiom,
//! 2 search budget exhausted, 3 bad input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::diagram::{canonical_braids, equal_with, EqualityConfig, Verdict};
use crate::dsl::{self, Document, DslError, Term};
use crate::examples::{self, loop_smc, ExampleError, SphereQ, Variant};
use crate::model::check::{check_quasistrict, check_stringent, check_symmetric};
use crate::model::quasi::{from_quasistrict, to_quasistrict, QuasiError};
use crate::model::table::TableError;
use crate::model::{eval1, eval2, Assignment, Model, ModelError, ModelFile, TableModel};
use crate::render::{render_diagram, render_script, Target};
use crate::signature::Signature;
use crate::twocell::{build_beta_fg, build_phi, TwoCellError};

pub const OK: i32 = 0;
pub const FALSE: i32 = 1;
pub const UNKNOWN: i32 = 2;
pub const INPUT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wirecat", version, about = "Wire diagrams for stringent symmetric monoidal 2-categories")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, Args)]
struct Opts {
    /// Signature file prepended to every term.
    #[arg(long, global = true)]
    sig: Option<PathBuf>,
    /// `q`, `deloop-p`, or a model file.
    #[arg(long, global = true)]
    model: Option<String>,
    /// Checker window for `q`.
    #[arg(long, global = true, default_value_t = 2)]
    window: i64,
    /// `literal` or `braid-trivial`, for `q`.
    #[arg(long, global = true, default_value = "literal")]
    variant: String,
    /// Generator values, `name=value` separated by commas or newlines, or a file of them.
    #[arg(long, global = true)]
    assign: Option<String>,
    /// Maximum number of diagrams explored by `check-equal`.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: usize,
    /// Extra slices allowed above the longer side during `check-equal`.
    #[arg(long, global = true, default_value_t = 4)]
    extra: usize,
    /// Print the move trace of a successful `check-equal`.
    #[arg(long, global = true)]
    trace: bool,
    #[arg(long, global = true, default_value = "ascii")]
    format: String,
    /// Write the main output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Derive quasistrict data even when the stringent checks fail.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a document and print it in canonical form.
    Parse { input: String },
    /// Print the braid-canonical form of a diagram.
    Normalize { input: String },
    /// Decide whether two diagrams are equal on the nose.
    CheckEqual { lhs: String, rhs: String },
    /// Replay a script and print its target.
    Apply { input: String },
    /// Evaluate a diagram or script in a model.
    Eval { input: String },
    /// Check the axioms of a model.
    CheckAxioms {
        /// `stringent`, `symmetric`, `quasistrict` or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Build Φ_{(f′,g′),(f,g)} from the diagrams f′ g′ f g.
    DerivePhi { fp: String, gp: String, f: String, g: String },
    /// Build β_{f,g}.
    DeriveBeta { f: String, g: String },
    /// Convert a model: `file`, `quasistrict`, `stringent` or `loop`.
    Convert {
        #[arg(long, default_value = "file")]
        to: String,
    },
    /// Draw a diagram or script.
    Render { input: String },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Dsl(#[from] DslError),
    #[error("{0}")]
    Table(#[from] TableError),
    #[error("{0}")]
    Example(#[from] ExampleError),
    #[error("{0}")]
    Model(#[from] ModelError),
    #[error("{0}")]
    Quasi(#[from] QuasiError),
    #[error("{0}")]
    Script(#[from] TwoCellError),
}

/// Quasistrict data, or `None` after reporting the failed prerequisites.
fn quasi_or_skip(
    m: &dyn Model,
    force: bool,
    w: &mut String,
) -> Result<Option<crate::model::QuasistrictData>, CliError> {
    match to_quasistrict(m, force) {
        Ok(q) => Ok(Some(q)),
        Err(QuasiError::PrereqFailed(ids)) => {
            writeln!(w, "conversion refused: the model fails {} (use --force)", ids.join(", ")).unwrap();
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

/// Exit status and output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { INPUT_ERROR } else { OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status, stdout: String::new(), stderr: text }
            } else {
                Outcome { status, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = Outcome::default();
    match dispatch(&cli, &mut out) {
        Ok(status) => out.status = status,
        Err(e) => {
            out.status = INPUT_ERROR;
            writeln!(out.stderr, "error: {e}").unwrap();
        }
    }
    if let Some(path) = &cli.opts.out {
        if out.status != INPUT_ERROR {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                out.status = INPUT_ERROR;
                writeln!(out.stderr, "error: {}: {e}", path.display()).unwrap();
            } else {
                out.stdout.clear();
            }
        }
    }
    out
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// A term argument is a file name if such a file exists, otherwise literal text.
fn text_of(arg: &str) -> Result<String, CliError> {
    let p = Path::new(arg);
    if p.is_file() {
        read(p)
    } else {
        Ok(arg.to_string())
    }
}

fn base_sig(o: &Opts) -> Result<Signature, CliError> {
    match &o.sig {
        Some(p) => Ok(dsl::parse_signature(&read(p)?)?),
        None => Ok(Signature::new()),
    }
}

fn document(o: &Opts, arg: &str) -> Result<Document, CliError> {
    Ok(dsl::parse_document(&text_of(arg)?, &base_sig(o)?)?)
}

fn diagram_arg(o: &Opts, arg: &str) -> Result<(Signature, crate::diagram::Diagram), CliError> {
    let doc = document(o, arg)?;
    match doc.term {
        Some(Term::Diagram(d)) => Ok((doc.sig, d)),
        Some(Term::Script(_)) => Err(CliError::Usage(format!("`{arg}`: expected a diagram, found a script"))),
        None => Err(CliError::Usage(format!("`{arg}`: expected a diagram"))),
    }
}

enum Loaded {
    Table(TableModel),
    Sphere(SphereQ),
}

impl Loaded {
    fn model(&self) -> &dyn Model {
        match self {
            Loaded::Table(m) => m,
            Loaded::Sphere(m) => m,
        }
    }

    fn to_file(&self) -> ModelFile {
        match self {
            Loaded::Table(m) => m.to_file(),
            Loaded::Sphere(m) => m.to_file(),
        }
    }
}

fn load_model(o: &Opts) -> Result<(Loaded, Option<ModelFile>), CliError> {
    let name = o.model.as_deref().ok_or_else(|| CliError::Usage("this command needs --model".into()))?;
    match name {
        "q" => Ok((Loaded::Sphere(SphereQ::new(o.window, o.variant.parse::<Variant>()?)?), None)),
        "deloop-p" => Ok((Loaded::Table(examples::deloop_p()), None)),
        path => {
            let f = ModelFile::parse(&read(Path::new(path))?)?;
            let m = match f.kind.as_str() {
                "table" => Loaded::Table(TableModel::from_file(&f)?),
                "sphere-q" => Loaded::Sphere(SphereQ::from_file(&f)?),
                other => return Err(TableError::UnknownKind(other.into()).into()),
            };
            Ok((m, Some(f)))
        }
    }
}

fn assignment(o: &Opts, m: &dyn Model, file: Option<&ModelFile>, sig: &Signature) -> Result<Assignment, CliError> {
    let mut asg = match file {
        Some(f) => f.assignment(m)?,
        None => Assignment::default(),
    };
    let Some(spec) = &o.assign else { return Ok(asg) };
    let text = text_of(spec)?;
    for item in text.split([',', '\n']).map(str::trim).filter(|s| !s.is_empty() && !s.starts_with('#')) {
        let (k, v) = item.split_once('=').ok_or_else(|| CliError::Usage(format!("--assign: `{item}` is not name=value")))?;
        let (k, v) = (k.trim(), v.trim());
        let unknown = || CliError::Usage(format!("--assign: `{v}` is not a value of the right kind in {}", m.name()));
        if sig.object(k).is_some() {
            asg.objects.insert(k.into(), m.parse_obj(v).ok_or_else(unknown)?);
        } else if sig.gen1(k).is_some() {
            asg.gens1.insert(k.into(), m.parse_cell1(v).ok_or_else(unknown)?);
        } else if sig.gen2(k).is_some() {
            asg.gens2.insert(k.into(), m.parse_cell2(v).ok_or_else(unknown)?);
        } else {
            return Err(CliError::Usage(format!("--assign: `{k}` is not declared")));
        }
    }
    Ok(asg)
}

fn dispatch(cli: &Cli, out: &mut Outcome) -> Result<i32, CliError> {
    let o = &cli.opts;
    let w = &mut out.stdout;
    match &cli.cmd {
        Command::Parse { input } => {
            let doc = document(o, input)?;
            w.push_str(&dsl::print_document(&doc));
            Ok(OK)
        }
        Command::Normalize { input } => {
            let (_, d) = diagram_arg(o, input)?;
            writeln!(w, "{}", dsl::print_diagram(&canonical_braids(&d))).unwrap();
            Ok(OK)
        }
        Command::CheckEqual { lhs, rhs } => {
            let (_, d1) = diagram_arg(o, lhs)?;
            let (_, d2) = diagram_arg(o, rhs)?;
            let cfg = EqualityConfig { extra_slices: o.extra, max_states: o.budget };
            match equal_with(&d1, &d2, &cfg) {
                Verdict::Equal(t) => {
                    writeln!(w, "equal ({} moves)", t.len()).unwrap();
                    if o.trace {
                        writeln!(w, "trace: {t}").unwrap();
                    }
                    Ok(OK)
                }
                Verdict::NotEqual => {
                    writeln!(w, "not equal").unwrap();
                    Ok(FALSE)
                }
                Verdict::Unknown { explored } => {
                    writeln!(w, "unknown (budget exhausted after {explored} diagrams)").unwrap();
                    Ok(UNKNOWN)
                }
            }
        }
        Command::Apply { input } => {
            let doc = document(o, input)?;
            let Some(Term::Script(s)) = doc.term else {
                return Err(CliError::Usage(format!("`{input}`: expected a script")));
            };
            writeln!(w, "{}", dsl::print_diagram(&s.replay()?)).unwrap();
            Ok(OK)
        }
        Command::Eval { input } => {
            let doc = document(o, input)?;
            let (loaded, file) = load_model(o)?;
            let m = loaded.model();
            let asg = assignment(o, m, file.as_ref(), &doc.sig)?;
            match doc.term {
                Some(Term::Diagram(d)) => writeln!(w, "{}", m.cell1_name(eval1(m, &asg, &d)?)).unwrap(),
                Some(Term::Script(s)) => writeln!(w, "{}", m.cell2_label(eval2(m, &asg, &s)?)).unwrap(),
                None => return Err(CliError::Usage(format!("`{input}`: nothing to evaluate"))),
            }
            Ok(OK)
        }
        Command::CheckAxioms { suite } => {
            let (loaded, _) = load_model(o)?;
            let m = loaded.model();
            let want = |s: &str| suite == "all" || suite == s;
            if !["all", "stringent", "symmetric", "quasistrict"].contains(&suite.as_str()) {
                return Err(CliError::Usage(format!("unknown suite `{suite}`")));
            }
            let mut passed = true;
            if want("stringent") {
                let r = check_stringent(m);
                passed &= r.passed();
                write!(w, "{r}").unwrap();
            }
            if want("symmetric") {
                let r = check_symmetric(m);
                passed &= r.passed();
                write!(w, "{r}").unwrap();
            }
            if want("quasistrict") {
                match to_quasistrict(m, o.force) {
                    Ok(q) => {
                        let r = check_quasistrict(m, &q);
                        passed &= r.passed();
                        write!(w, "{r}").unwrap();
                    }
                    Err(QuasiError::PrereqFailed(ids)) => {
                        writeln!(w, "quasistrict checks skipped: the model fails {} (use --force)", ids.join(", ")).unwrap();
                        passed = false;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(if passed { OK } else { FALSE })
        }
        Command::DerivePhi { fp, gp, f, g } => {
            let ds: Vec<_> = [fp, gp, f, g].into_iter().map(|a| diagram_arg(o, a)).collect::<Result<_, _>>()?;
            let s = build_phi(&ds[0].1, &ds[1].1, &ds[2].1, &ds[3].1)?;
            writeln!(w, "{}", dsl::print_script(&s)).unwrap();
            writeln!(w, "target {}", dsl::print_diagram(&s.replay()?)).unwrap();
            eval_derived(o, &ds[0].0, &s, w)?;
            Ok(OK)
        }
        Command::DeriveBeta { f, g } => {
            let (sig, df) = diagram_arg(o, f)?;
            let (_, dg) = diagram_arg(o, g)?;
            let s = build_beta_fg(&df, &dg)?;
            writeln!(w, "{}", dsl::print_script(&s)).unwrap();
            writeln!(w, "target {}", dsl::print_diagram(&s.replay()?)).unwrap();
            eval_derived(o, &sig, &s, w)?;
            Ok(OK)
        }
        Command::Convert { to } => {
            let (loaded, _) = load_model(o)?;
            let m = loaded.model();
            match to.as_str() {
                "file" => w.push_str(&loaded.to_file().to_text()),
                "quasistrict" => {
                    let Some(q) = quasi_or_skip(m, o.force, w)? else { return Ok(FALSE) };
                    for (&(fp, gp, f, g), &x) in &q.big_phi {
                        let n = |c| m.cell1_name(c);
                        writeln!(w, "Phi ({}, {}) ({}, {}) = {}", n(fp), n(gp), n(f), n(g), m.cell2_name(x)).unwrap();
                    }
                    for (&(f, g), &x) in &q.beta2 {
                        writeln!(w, "beta {} {} = {}", m.cell1_name(f), m.cell1_name(g), m.cell2_name(x)).unwrap();
                    }
                }
                "stringent" => {
                    let Some(q) = quasi_or_skip(m, o.force, w)? else { return Ok(FALSE) };
                    let back = from_quasistrict(m, &q);
                    let mut same = true;
                    for f in m.cells1() {
                        for g in m.cells1() {
                            let (a, b) = (m.phi(f, g), back.phi(f, g));
                            same &= a == b;
                            writeln!(w, "phi {} {} = {}", m.cell1_name(f), m.cell1_name(g), m.cell2_name(b)).unwrap();
                        }
                    }
                    writeln!(w, "{}", if same { "round trip: identical" } else { "round trip: DIFFERENT" }).unwrap();
                    return Ok(if same { OK } else { FALSE });
                }
                "loop" => {
                    let s = loop_smc(m)?;
                    writeln!(w, "smc {} unit {}", s.name, s.unit).unwrap();
                    for ((a, b), c) in &s.tensor {
                        writeln!(w, "tensor {a} {b} = {c}").unwrap();
                    }
                    for ((a, b), c) in &s.braiding {
                        writeln!(w, "sigma {a} {b} = {c}").unwrap();
                    }
                }
                other => return Err(CliError::Usage(format!("unknown conversion `{other}`"))),
            }
            Ok(OK)
        }
        Command::Render { input } => {
            let doc = document(o, input)?;
            let t: Target = o.format.parse().map_err(CliError::Usage)?;
            match doc.term {
                Some(Term::Diagram(d)) => w.push_str(&render_diagram(&d, t)),
                Some(Term::Script(s)) => w.push_str(&render_script(&s, t)),
                None => return Err(CliError::Usage(format!("`{input}`: nothing to render"))),
            }
            Ok(OK)
        }
    }
}

fn eval_derived(o: &Opts, sig: &Signature, s: &crate::twocell::Script, w: &mut String) -> Result<(), CliError> {
    if o.model.is_none() {
        return Ok(());
    }
    let (loaded, file) = load_model(o)?;
    let m = loaded.model();
    let asg = assignment(o, m, file.as_ref(), sig)?;
    writeln!(w, "value {}", m.cell2_name(eval2(m, &asg, s)?)).unwrap();
    Ok(())
}
