//! The `deduct` command line.
//!
//! Exit status is 0 on success, 1 when the input is well formed as a command
//! but fails in the domain (syntax or type errors in terms, mismatched
//! compositions, invalid JSON values), and 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::brauer::{appropriate, f_ab_fun, f_ab_rel, primes};
use crate::error::Error;
use crate::finfun::FinFun;
use crate::gen::{self, SplitEq};
use crate::radix::Radices;
use crate::render;
use crate::syntax::{
    conj_to_disj, eq_conj, eq_disj, eval_f, eval_h, infer_type_conj, infer_type_disj,
    parse_conj, parse_disj, synth_disj,
};

#[derive(Parser, Debug)]
#[command(name = "deduct", version, about = "Finite-function semantics for proof terms")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    Finfun,
    Spliteq,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a disjunctive term to its finite function.
    EvalDisj { term: String },
    /// Evaluate a conjunctive term, letters read as primes.
    EvalConj { term: String },
    /// Decide equality of two disjunctive terms.
    EqDisj { left: String, right: String },
    /// Decide equality of two conjunctive terms.
    EqConj { left: String, right: String },
    /// Build a disjunctive term denoting a function given as JSON.
    Synth { finfun: String },
    /// Compile a conjunctive term into a disjunctive one.
    Translate { term: String },
    /// Compose two split equivalences, the first one first.
    GenCompose { first: String, second: String },
    /// Represent a split equivalence between radix products.
    Represent {
        source_radices: String,
        target_radices: String,
        spliteq: String,
    },
    /// Print the first N primes.
    Primes { count: usize },
    /// Draw a function or split equivalence.
    Render { kind: RenderKind, file: String },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs one command; returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            if !text.ends_with('\n') {
                let _ = writeln!(out);
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// A file's contents when `arg` names an existing file, otherwise `arg` itself.
fn resolve(arg: &str) -> std::result::Result<String, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn from_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> std::result::Result<T, Failure> {
    let text = resolve(arg)?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::Domain(Error::Syntax {
            position: 0,
            message: format!("{what} is not valid JSON ({e})"),
        })
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Usage(format!("format {format:?} is not available for {command}").to_lowercase())
}

fn show_finfun(f: &FinFun, format: Format) -> String {
    match format {
        Format::Text => f.to_string(),
        Format::Json => to_json(f),
        Format::Dot => render::finfun_dot(f),
    }
}

fn show_spliteq(r: &SplitEq, format: Format) -> String {
    match format {
        Format::Text => format!("{r}\n{}", render::spliteq_text(r)),
        Format::Json => to_json(r),
        Format::Dot => render::spliteq_dot(r),
    }
}

fn verdict(equal: bool, format: Format, command: &str) -> Outcome {
    match format {
        Format::Text => Ok(if equal { "equal" } else { "unequal" }.to_string()),
        Format::Json => Ok(json!({ "equal": equal }).to_string()),
        Format::Dot => Err(unsupported(format, command)),
    }
}

fn execute(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::EvalDisj { term } => {
            let t = parse_disj(&resolve(term)?)?;
            Ok(show_finfun(&eval_f(&t)?, format))
        }
        Command::EvalConj { term } => {
            let t = parse_conj(&resolve(term)?)?;
            Ok(show_finfun(&eval_h(&t)?, format))
        }
        Command::EqDisj { left, right } => {
            let t1 = parse_disj(&resolve(left)?)?;
            let t2 = parse_disj(&resolve(right)?)?;
            verdict(eq_disj(&t1, &t2)?, format, "eq-disj")
        }
        Command::EqConj { left, right } => {
            let t1 = parse_conj(&resolve(left)?)?;
            let t2 = parse_conj(&resolve(right)?)?;
            verdict(eq_conj(&t1, &t2)?, format, "eq-conj")
        }
        Command::Synth { finfun } => {
            let f: FinFun = from_json(finfun, "function")?;
            let t = synth_disj(&f);
            match format {
                Format::Text => Ok(t.to_string()),
                Format::Json => Ok(json!({
                    "term": t.to_string(),
                    "src": f.src(),
                    "tgt": f.tgt(),
                })
                .to_string()),
                Format::Dot => Err(unsupported(format, "synth")),
            }
        }
        Command::Translate { term } => translate(&resolve(term)?, format),
        Command::GenCompose { first, second } => {
            let r: SplitEq = from_json(first, "split equivalence")?;
            let s: SplitEq = from_json(second, "split equivalence")?;
            Ok(show_spliteq(&gen::compose(&s, &r)?, format))
        }
        Command::Represent {
            source_radices,
            target_radices,
            spliteq,
        } => {
            let a = Radices::parse(source_radices)?;
            let b = Radices::parse(target_radices)?;
            let r: SplitEq = from_json(spliteq, "split equivalence")?;
            represent(&a, &b, &r, format)
        }
        Command::Primes { count } => {
            let ps = primes(*count);
            match format {
                Format::Text => Ok(ps
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")),
                Format::Json => Ok(to_json(&ps)),
                Format::Dot => Err(unsupported(format, "primes")),
            }
        }
        Command::Render { kind, file } => match kind {
            RenderKind::Finfun => {
                let f: FinFun = from_json(file, "function")?;
                Ok(match format {
                    Format::Text => render::finfun_text(&f),
                    _ => show_finfun(&f, format),
                })
            }
            RenderKind::Spliteq => {
                let r: SplitEq = from_json(file, "split equivalence")?;
                Ok(match format {
                    Format::Text => render::spliteq_text(&r),
                    _ => show_spliteq(&r, format),
                })
            }
        },
    }
}

fn translate(text: &str, format: Format) -> Outcome {
    let t = parse_conj(text)?;
    let (a, b) = infer_type_conj(&t)?;
    let h = eval_h(&t)?;
    let d = conj_to_disj(&t)?;
    let (n, m) = infer_type_disj(&d)?;
    let f = eval_f(&d)?;
    if f != h {
        return Err(Error::InternalInvariantViolation(format!(
            "translation of `{t}` denotes {f} instead of {h}"
        ))
        .into());
    }
    match format {
        Format::Text => Ok(format!(
            "conj: {t} : {a} -> {b}\n\
             disj: {d} : {n} -> {m}\n\
             H(term): {h}\n\
             F(image): {f}\n\
             F(image) = H(term): OK"
        )),
        Format::Json => Ok(json!({
            "conj": t.to_string(),
            "disj": d.to_string(),
            "h": h,
            "f": f,
            "check": "OK",
        })
        .to_string()),
        Format::Dot => Err(unsupported(format, "translate")),
    }
}

#[derive(Serialize)]
struct Representation {
    appropriate: bool,
    relation: crate::brauer::BinRel,
    function: Option<FinFun>,
    error: Option<String>,
}

fn represent(a: &Radices, b: &Radices, r: &SplitEq, format: Format) -> Outcome {
    let ok = appropriate(a, b, r)?;
    let relation = f_ab_rel(a, b, r)?;
    let (function, error) = match f_ab_fun(a, b, r) {
        Ok(f) => (Some(f), None),
        Err(e @ Error::NotAFunction { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let rep = Representation {
        appropriate: ok,
        relation,
        function,
        error,
    };
    match format {
        Format::Text => {
            let head = if rep.appropriate { "appropriate" } else { "not appropriate" };
            let status = match &rep.error {
                Some(e) => e.clone(),
                None => "relation is a function".to_string(),
            };
            let mut text = format!("{head}; {status}\nrelation {}", rep.relation);
            if let Some(f) = &rep.function {
                text.push_str(&format!("\nfunction {f}"));
            }
            Ok(text)
        }
        Format::Json => Ok(to_json(&rep)),
        Format::Dot => match &rep.function {
            Some(f) => Ok(render::finfun_dot(f)),
            None => Err(unsupported(format, "represent of a non-function")),
        },
    }
}
