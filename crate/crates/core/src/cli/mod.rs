//! Command-line front end. Results go to `out` as one pretty-printed JSON
//! document; diagnostics go to `err`.
//!
//! Exit status: 0 on success, 1 for bad input, 2 when an internal
//! consistency check fails (an inexact division the algebra guarantees, or
//! disagreeing constructions in `check`).

pub mod check;
pub mod parse;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::index::DeltaIndex;
use crate::parametric::{gcd_decision_tree, mult_decision_table, DecisionTree, MultTable};
use crate::ring::{Domain, Rational, Ring};
use crate::solvers::{multi_gcd, multiplicity};
use crate::subres::{subresultant, subresultant_root_oracle, Method, PolyTuple, SubresResult};
use crate::upoly::UPoly;

use check::{run_check, CheckConfig};
use parse::InputDoc;

#[derive(Parser, Debug)]
#[command(
    name = "multisubres",
    version,
    about = "Exact subresultants of several univariate polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// S_delta and s_delta of the tuple in INPUT.
    Subres {
        /// Comma-separated index tuple, one entry per F1..Ft.
        #[arg(long)]
        delta: DeltaIndex,
        /// sylvester, barnett, bezout or oracle (needs distinct rational roots of F0).
        #[arg(long, default_value = "sylvester")]
        method: Method,
        /// Input document, `-` for standard input.
        input: PathBuf,
    },
    /// Monic gcd and incremental cofactor degree of the tuple in INPUT.
    Gcd {
        #[arg(long, default_value = "sylvester")]
        method: Method,
        input: PathBuf,
    },
    /// Multiplicity structure of the single polynomial in INPUT.
    Mult {
        #[arg(long, default_value = "sylvester")]
        method: Method,
        input: PathBuf,
    },
    /// Guarded gcd branches for a tuple with parameter coefficients.
    ParamGcd {
        #[arg(long, default_value = "sylvester")]
        method: Method,
        /// Divide each condition by its rational content.
        #[arg(long)]
        strip_content: bool,
        input: PathBuf,
    },
    /// Multiplicity decision table for a generic polynomial.
    ParamMult {
        #[arg(long)]
        degree: usize,
        /// Coefficient names from x^0 upward; `degree` names make H monic.
        #[arg(long, value_delimiter = ',')]
        coeffs: Option<Vec<String>>,
        #[arg(long, default_value = "sylvester")]
        method: Method,
        #[arg(long)]
        strip_content: bool,
    },
    /// Seeded differential test of all constructions.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value_t = 3)]
        max_t: usize,
    },
}

#[derive(Serialize)]
struct ResultDoc {
    command: String,
    inputs: Value,
    outputs: Value,
    assumptions: Vec<String>,
}

/// Command failure with its exit status.
enum Failure {
    Input(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e)
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(doc) => {
            let text = serde_json::to_string_pretty(&doc).expect("result documents serialize");
            let _ = writeln!(out, "{text}");
            0
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command) -> std::result::Result<ResultDoc, Failure> {
    match command {
        Command::Subres {
            delta,
            method,
            input,
        } => {
            let doc = read_doc(&input)?;
            let parts: Vec<String> = delta.parts().iter().map(usize::to_string).collect();
            let echo = format!("subres --delta {} --method {method}", parts.join(","));
            let (outputs, assumptions) = if doc.is_parametric() {
                let f = PolyTuple::new(doc.polys.clone())?;
                if method == Method::RootOracle {
                    return Err(
                        Error::Unsupported("the root oracle needs rational input".into()).into(),
                    );
                }
                check_delta_shape(&delta, f.t())?;
                (
                    subres_json(&subresultant(&f, &delta, method)?),
                    vec![format!("{} != 0", f.lc0())],
                )
            } else {
                let f = PolyTuple::new(doc.rational_polys()?)?;
                check_delta_shape(&delta, f.t())?;
                let r = if method == Method::RootOracle {
                    oracle(&f, &delta)?
                } else {
                    subresultant(&f, &delta, method)?
                };
                (subres_json(&r), Vec::new())
            };
            Ok(ResultDoc {
                command: echo,
                inputs: inputs_json(&doc),
                outputs,
                assumptions,
            })
        }
        Command::Gcd { method, input } => {
            let doc = read_doc(&input)?;
            let f = PolyTuple::new(rational_only(&doc, "param-gcd")?)?;
            let g = multi_gcd(&f, method)?;
            let outputs = json!({
                "gcd": poly_json(&g.gcd),
                "delta": g.delta,
                "s_value": g.s_value.to_string(),
                "method": g.method,
            });
            Ok(ResultDoc {
                command: format!("gcd --method {method}"),
                inputs: inputs_json(&doc),
                outputs,
                assumptions: vec![],
            })
        }
        Command::Mult { method, input } => {
            let doc = read_doc(&input)?;
            let polys = rational_only(&doc, "param-mult")?;
            let [h] = polys.as_slice() else {
                return Err(Error::BadDimensions(format!(
                    "mult takes one polynomial, got {}",
                    polys.len()
                ))
                .into());
            };
            let r = multiplicity(h, method)?;
            let outputs =
                json!({ "multiplicities": r.multiplicities, "lambda": r.lambda, "method": method });
            Ok(ResultDoc {
                command: format!("mult --method {method}"),
                inputs: inputs_json(&doc),
                outputs,
                assumptions: vec![],
            })
        }
        Command::ParamGcd {
            method,
            strip_content,
            input,
        } => {
            let doc = read_doc(&input)?;
            let f = PolyTuple::new(doc.polys.clone())?;
            let mut tree = gcd_decision_tree(&f, method)?;
            if strip_content {
                tree = tree.without_content();
            }
            let assumptions = tree
                .assumptions
                .iter()
                .map(|a| format!("{a} != 0"))
                .collect();
            let echo = format!(
                "param-gcd --method {method}{}",
                if strip_content {
                    " --strip-content"
                } else {
                    ""
                }
            );
            Ok(ResultDoc {
                command: echo,
                inputs: inputs_json(&doc),
                outputs: tree_json(&tree),
                assumptions,
            })
        }
        Command::ParamMult {
            degree,
            coeffs,
            method,
            strip_content,
        } => {
            let mut table = mult_decision_table(degree, coeffs.as_deref(), method)?;
            if strip_content {
                table = table.without_content();
            }
            let assumptions = table
                .assumptions
                .iter()
                .map(|a| format!("{a} != 0"))
                .collect();
            let parameters: BTreeSet<&String> = table
                .poly
                .coeffs()
                .iter()
                .flat_map(|c| c.vars().iter())
                .collect();
            let inputs =
                json!({ "parameters": parameters, "polynomials": [table.poly.to_string()] });
            let mut echo = format!("param-mult --degree {degree} --method {method}");
            if let Some(c) = &coeffs {
                echo.push_str(&format!(" --coeffs {}", c.join(",")));
            }
            if strip_content {
                echo.push_str(" --strip-content");
            }
            Ok(ResultDoc {
                command: echo,
                inputs,
                outputs: table_json(&table),
                assumptions,
            })
        }
        Command::Check {
            seed,
            cases,
            max_degree,
            max_t,
        } => {
            if max_degree == 0 || max_t == 0 {
                return Err(Error::BadDimensions(
                    "--max-degree and --max-t must be positive".into(),
                )
                .into());
            }
            let cfg = CheckConfig {
                seed,
                cases,
                max_degree,
                max_t,
                ..CheckConfig::default()
            };
            let report = run_check(&cfg)?;
            if !report.failures.is_empty() {
                return Err(Failure::Internal(format!(
                    "{}; first: {}",
                    report.summary(),
                    report.failures[0]
                )));
            }
            let outputs = json!({ "summary": report.summary(), "report": report });
            let echo = format!(
                "check --seed {seed} --cases {cases} --max-degree {max_degree} --max-t {max_t}"
            );
            Ok(ResultDoc {
                command: echo,
                inputs: json!({}),
                outputs,
                assumptions: vec![],
            })
        }
    }
}

fn read_doc(path: &PathBuf) -> Result<InputDoc> {
    let mut text = String::new();
    let io = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    io.map_err(|e| Error::Unsupported(format!("cannot read {}: {e}", path.display())))?;
    InputDoc::parse(&text)
}

fn rational_only(doc: &InputDoc, alternative: &str) -> Result<Vec<UPoly<Rational>>> {
    if doc.is_parametric() {
        return Err(Error::Unsupported(format!(
            "input has parameters; use `{alternative}`"
        )));
    }
    doc.rational_polys()
}

fn check_delta_shape(delta: &DeltaIndex, t: usize) -> Result<()> {
    if delta.len() != t {
        return Err(Error::LengthMismatch(delta.len(), t));
    }
    Ok(())
}

/// Root oracle on a rational tuple whose `F0` splits into distinct
/// rational linear factors.
fn oracle(f: &PolyTuple<Rational>, delta: &DeltaIndex) -> Result<SubresResult<Rational>> {
    let roots = f.f0().rational_roots()?;
    if roots.iter().any(|(_, m)| *m > 1) || roots.len() != f.d0() {
        return Err(Error::Unsupported(
            "the oracle method needs F0 with distinct rational roots".into(),
        ));
    }
    let roots: Vec<Rational> = roots.into_iter().map(|(r, _)| r).collect();
    subresultant_root_oracle(&f.lc0(), &roots, f.rest(), delta)
}

fn inputs_json(doc: &InputDoc) -> Value {
    let digest = hex::encode(Sha256::digest(doc.canonical().as_bytes()));
    json!({
        "parameters": doc.parameters,
        "polynomials": doc.polys.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "sha256": digest,
    })
}

/// `{"text": ..., "coeffs": [low .. high]}`; both forms re-parse exactly.
fn poly_json<R: Ring>(p: &UPoly<R>) -> Value {
    json!({
        "text": p.to_string(),
        "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn subres_json<R: Domain>(r: &SubresResult<R>) -> Value {
    json!({
        "s_poly": poly_json(&r.s_poly),
        "s_principal": r.s_principal.to_string(),
        "delta": r.delta,
        "delta0": r.delta0,
        "epsilon": r.epsilon,
        "method": r.method,
    })
}

fn tree_json(tree: &DecisionTree) -> Value {
    let branches: Vec<Value> = tree
        .branches
        .iter()
        .map(|b| {
            json!({
                "delta": b.delta,
                "condition": b.condition.to_string(),
                "gcd_numerator": poly_json(&b.gcd_numerator),
                "gcd_denominator": b.gcd_denominator.to_string(),
                "dead": b.dead,
                "fallback": b.fallback,
            })
        })
        .collect();
    json!({ "branches": branches })
}

fn table_json(table: &MultTable) -> Value {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "lambda": r.lambda,
                "condition": r.condition.to_string(),
                "multiplicities": r.multiplicities,
                "dead": r.dead,
                "fallback": r.fallback,
            })
        })
        .collect();
    json!({ "rows": rows })
}
