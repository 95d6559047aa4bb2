//! Command-line surface of `hopflab`.
//!
//! `run` parses arguments, dispatches to the engine and returns the exit code with the rendered
//! output, so the binary and the golden tests share one path.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopflab::bimodlab::{
    casimir_check, certificate_label, characters_check, closure, decompose_left, hilbert_check, hw_vectors_left,
    hw_monomial_basis, is_hw_bivector, is_simple, peter_weyl_check, verify_action_lemmas, verify_identities,
    weight_of, ActionSide, BimodError, FDBimodule, LemmaBounds, DEFAULT_CAP, DEFAULT_WORD_CAP,
};
use hopflab::expr::{format_poly, parse_expr, ExprError};
use hopflab::hopf::{act_left, act_right, pairing};
use hopflab::ncpoly::{cqsl2, double, hc, presentation, uqsl2, AlgebraError, NCPoly};
use hopflab::report::Report;
use hopflab::store::{load_module, save_module, StoreError};
use hopflab::tables::verify_action_tables;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hopflab", version, about = "Exact computations in the Heisenberg double of U_q(sl2)")]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Left,
    Right,
    Bi,
}

impl From<Side> for ActionSide {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => ActionSide::Left,
            Side::Right => ActionSide::Right,
            Side::Bi => ActionSide::Bi,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Normal form of an expression.
    Normalize {
        #[arg(long, default_value = "hc")]
        algebra: String,
        expr: String,
    },
    /// `x |> v` for x in the quantum double and v in HC.
    ActLeft { x: String, v: String },
    /// `v <| x` for v in HC and x in the quantum double.
    ActRight { v: String, x: String },
    /// Left and right weights of a homogeneous element.
    Weight { expr: String },
    /// Tests an element for being a highest-weight bivector, or lists hw monomials of a degree.
    Hw {
        expr: Option<String>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Smallest sub-bimodule containing the seeds.
    Closure {
        #[arg(long, required = true)]
        seed: Vec<String>,
        #[arg(long, value_enum, default_value_t = Side::Bi)]
        side: Side,
    },
    /// Splits the left action on the closure into simple summands.
    Decompose {
        #[arg(long, required = true)]
        seed: Vec<String>,
    },
    /// Simplicity certificate for the closure of the seeds.
    Simple {
        #[arg(long, required = true)]
        seed: Vec<String>,
        #[arg(long, value_enum, default_value_t = Side::Bi)]
        side: Side,
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        word_cap: usize,
    },
    /// Casimir eigenvalues on each left summand of the closure.
    Casimir {
        #[arg(long, required = true)]
        seed: Vec<String>,
    },
    /// Highest-weight counts per degree against both closed forms.
    Hilbert {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Named identity suites among highest-weight vectors.
    Identities {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Action lemmas on products of highest-weight vectors.
    Lemmas {
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Degree-n Peter-Weyl decomposition of products of H11 vectors.
    PeterWeyl {
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Hopf pairing of an element of C_q[SL2] with an element of U_q(sl2).
    Pairing { c: String, h: String },
    /// Printed generator-on-letter action tables against the engine.
    Tables,
    /// One-dimensional bimodules.
    Characters,
    /// Computes a closure and writes its archive.
    Save {
        #[arg(long, required = true)]
        seed: Vec<String>,
        #[arg(long, value_enum, default_value_t = Side::Bi)]
        side: Side,
        #[arg(long)]
        out: PathBuf,
    },
    /// Loads and revalidates an archive.
    Load { path: PathBuf },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bimod(#[from] BimodError),
    #[error(transparent)]
    Store(#[from] StoreError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Expr(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        }
    }
}

struct Output {
    format: Format,
    text: String,
    code: i32,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn record(&mut self, v: Value) {
        self.line(v.to_string());
    }

    /// Plain text line or a record, depending on the format.
    fn emit(&mut self, text: impl AsRef<str>, record: Value) {
        match self.format {
            Format::Text => self.line(text),
            Format::Records => self.record(record),
        }
    }

    fn report(&mut self, r: &Report) {
        match self.format {
            Format::Text => {
                let _ = write!(self.text, "{r}");
            }
            Format::Records => {
                self.record(json!({
                    "report": r.title,
                    "passed": r.passed(),
                    "items": r.items.len(),
                    "failed": r.failures().count(),
                }));
                for item in &r.items {
                    self.record(json!({
                        "report": r.title,
                        "name": item.name,
                        "params": item.params,
                        "status": item.status.label(),
                        "witness": item.witness,
                    }));
                }
            }
        }
        if !r.passed() {
            self.code = EXIT_FAIL;
        }
    }

    fn module(&mut self, m: &FDBimodule) {
        self.emit(format!("dimension {}", m.dim()), json!({"dimension": m.dim(), "side": m.side.name()}));
        for (i, b) in m.basis.iter().enumerate() {
            let text = format_poly(b);
            self.emit(format!("  [{i}] {text}"), json!({"index": i, "vector": text}));
        }
    }
}

fn cap_from(env: Option<&str>) -> Result<usize, CliError> {
    match env {
        None => Ok(DEFAULT_CAP),
        Some(s) => s
            .trim()
            .parse()
            .ok()
            .filter(|&c: &usize| c > 0)
            .ok_or_else(|| CliError::Usage(format!("HOPFLAB_CAP must be a positive integer, got `{s}`"))),
    }
}

fn seeds(texts: &[String]) -> Result<Vec<NCPoly>, CliError> {
    texts.iter().map(|t| Ok(parse_expr(t, hc())?)).collect()
}

fn dispatch(verb: Verb, cap: usize, out: &mut Output) -> Result<(), CliError> {
    match verb {
        Verb::Normalize { algebra, expr } => {
            let pres = presentation(&algebra).ok_or_else(|| CliError::Usage(format!("unknown algebra `{algebra}`")))?;
            let p = format_poly(&parse_expr(&expr, pres)?);
            out.emit(&p, json!({"algebra": algebra, "normal_form": p}));
        }
        Verb::ActLeft { x, v } => {
            let r = format_poly(&act_left(&parse_expr(&x, double())?, &parse_expr(&v, hc())?)?);
            out.emit(&r, json!({"action": "left", "result": r}));
        }
        Verb::ActRight { v, x } => {
            let r = format_poly(&act_right(&parse_expr(&v, hc())?, &parse_expr(&x, double())?)?);
            out.emit(&r, json!({"action": "right", "result": r}));
        }
        Verb::Weight { expr } => match weight_of(&parse_expr(&expr, hc())?)? {
            Some(w) => out.emit(format!("weight {w}"), json!({"left": w.left, "right": w.right})),
            None => {
                out.emit("not weight-homogeneous", json!({"homogeneous": false}));
                out.code = EXIT_FAIL;
            }
        },
        Verb::Hw { expr: Some(expr), degree: None } => {
            let v = parse_expr(&expr, hc())?;
            let hw = is_hw_bivector(&v)?;
            let w = weight_of(&v)?;
            let verdict = if hw { "PASS" } else { "FAIL" };
            let wt = w.map(|w| w.to_string()).unwrap_or_else(|| "none".into());
            out.emit(format!("{verdict} hw bivector, weight {wt}"), json!({"hw": hw, "weight": wt}));
            if !hw {
                out.code = EXIT_FAIL;
            }
        }
        Verb::Hw { expr: None, degree: Some(d) } => {
            let basis = hw_monomial_basis(d)?;
            let here: Vec<_> = basis.elements.iter().filter(|(m, _)| m.degree() == d).collect();
            out.emit(format!("degree {d}: {} monomials", here.len()), json!({"degree": d, "count": here.len()}));
            for (m, _) in here {
                out.emit(format!("  {m}"), json!({"monomial": m.to_string()}));
            }
        }
        Verb::Hw { .. } => return Err(CliError::Usage("hw takes either an expression or --degree".into())),
        Verb::Closure { seed, side } => out.module(&closure(&seeds(&seed)?, side.into(), cap)?),
        Verb::Decompose { seed } => {
            let m = closure(&seeds(&seed)?, ActionSide::Bi, cap)?;
            let parts = decompose_left(&m)?;
            let dims: Vec<String> = parts.iter().map(|p| p.dim().to_string()).collect();
            out.emit(
                format!("dimension {} = {}", m.dim(), dims.join(" + ")),
                json!({"dimension": m.dim(), "summands": parts.iter().map(FDBimodule::dim).collect::<Vec<_>>()}),
            );
            for (i, p) in parts.iter().enumerate() {
                let top = hw_left_weight(p)?;
                out.emit(
                    format!("  summand {i}: dim {}, highest weight {top}", p.dim()),
                    json!({"summand": i, "dim": p.dim(), "highest_weight": top}),
                );
            }
        }
        Verb::Simple { seed, side, word_cap } => {
            let m = closure(&seeds(&seed)?, side.into(), cap)?;
            let s = is_simple(&m, word_cap)?;
            let mut r = Report::new(format!("simplicity of a {}-dim module", m.dim()));
            r.check("simple", certificate_label(&s), s.is_simple(), || certificate_label(&s));
            out.report(&r);
        }
        Verb::Casimir { seed } => {
            let m = closure(&seeds(&seed)?, ActionSide::Bi, cap)?;
            out.report(&casimir_check(&m, &seed.join(", "))?);
        }
        Verb::Hilbert { max_degree } => out.report(&hilbert_check(max_degree)?),
        Verb::Identities { suite } => out.report(&verify_identities(&suite).map_err(|e| match e {
            BimodError::UnknownSuite(_) => CliError::Usage(e.to_string()),
            e => e.into(),
        })?),
        Verb::Lemmas { bound } => {
            out.report(&verify_action_lemmas(LemmaBounds { l: bound, m: bound, n: bound, s: bound }))
        }
        Verb::PeterWeyl { degree } => {
            let (report, _, _) = peter_weyl_check(degree, cap)?;
            out.report(&report);
        }
        Verb::Pairing { c, h } => {
            let val = pairing(&parse_expr(&c, cqsl2())?, &parse_expr(&h, uqsl2())?)?.to_string();
            out.emit(&val, json!({"pairing": val}));
        }
        Verb::Tables => out.report(&verify_action_tables()),
        Verb::Characters => out.report(&characters_check()),
        Verb::Save { seed, side, out: path } => {
            let m = closure(&seeds(&seed)?, side.into(), cap)?;
            save_module(&m, &path)?;
            let p = path.display().to_string();
            out.emit(format!("saved dimension {} to {p}", m.dim()), json!({"dimension": m.dim(), "path": p}));
        }
        Verb::Load { path } => {
            let (m, warnings) = load_module(&path)?;
            for w in &warnings {
                out.emit(format!("warning: {w}"), json!({"warning": w.to_string()}));
            }
            out.module(&m);
        }
    }
    Ok(())
}

fn hw_left_weight(m: &FDBimodule) -> Result<i64, CliError> {
    let mut top = None;
    for v in hw_vectors_left(m)? {
        top = top.max(weight_of(&v)?.map(|w| w.left));
    }
    Ok(top.unwrap_or_default())
}

/// Runs one command with an explicit `HOPFLAB_CAP` value.
pub fn run_with_cap(args: &[String], cap_env: Option<&str>) -> (i32, String) {
    let cli = match Cli::try_parse_from(std::iter::once("hopflab".to_string()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            return (code, e.render().to_string());
        }
    };
    let mut out = Output { format: cli.format, text: String::new(), code: EXIT_PASS };
    let result = cap_from(cap_env).and_then(|cap| dispatch(cli.verb, cap, &mut out));
    match result {
        Ok(()) => (out.code, out.text),
        Err(e) => {
            let code = e.exit_code();
            out.emit(format!("error: {e}"), json!({"error": e.to_string()}));
            (code, out.text)
        }
    }
}

/// Runs one command, reading `HOPFLAB_CAP` from the environment.
pub fn run(args: &[String]) -> (i32, String) {
    let cap = std::env::var("HOPFLAB_CAP").ok();
    run_with_cap(args, cap.as_deref())
}
