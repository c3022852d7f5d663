//! Command-line surface: argument definitions, dispatch and rendering.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bundle::Ambient;
use crate::ce::{ce_rank, presentation, CeError, CeSetup, Genus};
use crate::exact::{format_rational, Rational};
use crate::pl::{self, BoundCase, PLProgram, PlError};
use crate::splitting::{
    codim_hurwitz4, codim_hurwitz5, codim_simultaneous, constraints_4, constraints_5,
    enumerate_strata4, SplittingError, SplittingType, StrataFilter,
};

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz-ce",
    version,
    about = "Exact intersection theory on Hurwitz spaces of low degree"
)]
pub struct Cli {
    /// Print a JSON record instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Truncation order of the coefficient ring (kappa, curve-class).
    #[arg(long, global = true, value_name = "N")]
    pub truncation: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GenusArgs {
    /// Specialize to this genus.
    #[arg(short = 'g', long, conflicts_with = "symbolic")]
    pub genus: Option<i64>,
    /// Keep the genus as a symbol `g`.
    #[arg(long)]
    pub symbolic: bool,
}

impl GenusArgs {
    fn genus(&self) -> Genus {
        match (self.genus, self.symbolic) {
            (Some(g), _) => Genus::Numeric(g),
            (None, true) => Genus::Symbolic,
            (None, false) => Genus::Unspecialized,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// κ_i as a polynomial in the CE classes.
    Kappa {
        #[arg(short, value_parser = clap::value_parser!(i64).range(3..=5))]
        k: i64,
        #[arg(short, value_parser = clap::value_parser!(u32))]
        i: u32,
        #[command(flatten)]
        genus: GenusArgs,
    },
    /// Class of the universal curve inside PE^∨.
    CurveClass {
        #[arg(short, value_parser = clap::value_parser!(i64).range(3..=5))]
        k: i64,
        #[command(flatten)]
        genus: GenusArgs,
    },
    /// Candidate splitting strata of degree 4 covers.
    Strata {
        #[arg(short, value_parser = clap::value_parser!(i64).range(4..=4))]
        k: i64,
        #[arg(short = 'g', long)]
        genus: i64,
        #[arg(long, default_value = "irreducible", value_parser = ["all", "irreducible", "non_factoring"])]
        filter: String,
    },
    /// Codimension of the locus of covers with given splitting types.
    SplittingCodim {
        #[arg(short, value_parser = clap::value_parser!(i64).range(4..=5))]
        k: i64,
        /// Splitting type of E, e.g. 2,3,4.
        #[arg(long)]
        e: SplittingType,
        /// Splitting type of F.
        #[arg(long)]
        f: SplittingType,
        /// Genus; derived from deg e when omitted.
        #[arg(short = 'g', long)]
        genus: Option<i64>,
    },
    /// Exact minimum of a piecewise-linear program.
    Minimize {
        #[arg(long, conflicts_with = "spec", required_unless_present = "spec",
              value_parser = ["lemma_b4", "lemma_coh4", "lemma_b5circ", "lemma_coh5"])]
        preset: Option<String>,
        /// JSON program file.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Codimension lower bound assembled from the matching program minimum.
    Bound {
        #[arg(short, value_parser = clap::value_parser!(i64).range(4..=5))]
        k: i64,
        #[arg(short = 'g', long)]
        genus: i64,
        #[arg(long, value_parser = ["B_circ", "H_circ"])]
        case: String,
    },
    /// Free generators of the Chow ring and the degree below which they
    /// satisfy no relations.
    Presentation {
        #[arg(short, value_parser = clap::value_parser!(i64).range(3..=5))]
        k: i64,
        #[arg(short = 'g', long)]
        genus: i64,
    },
    /// Rank of the i-th bundle in the resolution of a degree k cover.
    CeRank {
        #[arg(short)]
        i: i64,
        #[arg(short, value_parser = clap::value_parser!(i64).range(3..=5))]
        k: i64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub output: Value,
    pub citations: Vec<String>,
}

/// A finished command: the JSON record and its plain-text rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub result: CommandResult,
    pub text: String,
}

impl Outcome {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.result).expect("values serialize")
        } else {
            self.text.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl ToString) -> Self {
        CliError {
            code: 2,
            message: message.to_string(),
        }
    }

    fn failure(message: impl ToString) -> Self {
        CliError {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<CeError> for CliError {
    fn from(e: CeError) -> Self {
        match e {
            CeError::Exact(_) | CeError::Bundle(_) => CliError::failure(e),
            _ => CliError::usage(e),
        }
    }
}

impl From<SplittingError> for CliError {
    fn from(e: SplittingError) -> Self {
        CliError::usage(e)
    }
}

impl From<PlError> for CliError {
    fn from(e: PlError) -> Self {
        let code = match e {
            PlError::Infeasible | PlError::Unbounded => 3,
            PlError::NoFeasibleSample(_) => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn inputs<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs
        .into_iter()
        .filter(|(_, v)| !v.is_null())
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn genus_value(g: &Genus) -> Value {
    match g {
        Genus::Numeric(n) => json!(n),
        Genus::Symbolic => json!("g"),
        Genus::Unspecialized => Value::Null,
    }
}

fn format_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Kappa { k, i, genus } => {
            let d = cli.truncation.unwrap_or(i64::from(*i) + k + 2);
            let g = genus.genus();
            let setup = CeSetup::new(*k, g.clone(), d)?;
            let res = setup.kappa(*i)?;
            let text = res.polynomial.to_string();
            Ok(Outcome {
                result: CommandResult {
                    command: "kappa".into(),
                    inputs: inputs([
                        ("k", json!(k)),
                        ("i", json!(i)),
                        ("genus", genus_value(&g)),
                        ("truncation", json!(d)),
                    ]),
                    output: json!({
                        "polynomial": text,
                        "terms": res.polynomial.to_json(),
                        "degree": i,
                    }),
                    citations: vec![
                        "kappa_i = pi_* gamma_* ([C] * (zeta - 2z)^(i+1))".into(),
                        "a1' = g + k - 1".into(),
                    ],
                },
                text,
            })
        }
        Command::CurveClass { k, genus } => {
            let d = cli.truncation.unwrap_or(*k);
            let g = genus.genus();
            let setup = CeSetup::new(*k, g.clone(), d)?;
            let class = setup.curve_class();
            let pushed = class.push_gamma();
            let text = class.to_string();
            let coefficients: Vec<String> = class
                .coefficients()
                .iter()
                .map(ToString::to_string)
                .collect();
            let pushed_value = pushed.as_constant().map(|q| format_rational(&q));
            Ok(Outcome {
                result: CommandResult {
                    command: "curve-class".into(),
                    inputs: inputs([
                        ("k", json!(k)),
                        ("genus", genus_value(&g)),
                        ("truncation", json!(d)),
                    ]),
                    output: json!({
                        "class": text,
                        "zeta_coefficients": coefficients,
                        "gamma_push": pushed_value,
                    }),
                    citations: vec![
                        "[C] = sum_i (-1)^i ch_(k-2)(F_i(-i-1)) + (-1)^(k-2) ch_(k-2)(det E(-k))"
                            .into(),
                        "zeta^(k-1) + c_1(E^v) zeta^(k-2) + ... + c_(k-1)(E^v) = 0".into(),
                    ],
                },
                text,
            })
        }
        Command::Strata { k, genus, filter } => {
            let f: StrataFilter = filter.parse().map_err(CliError::usage)?;
            let rows = enumerate_strata4(*genus, f)?;
            let mut text = String::from("codim\te\tf\tH'\tH°");
            for r in &rows {
                text.push_str(&format!(
                    "\n{}\t{}\t{}\t{}\t{}",
                    r.codim,
                    r.e,
                    r.f,
                    if r.flags.in_h_prime { "yes" } else { "no" },
                    if r.flags.in_h_circ { "yes" } else { "no" },
                ));
            }
            Ok(Outcome {
                result: CommandResult {
                    command: "strata".into(),
                    inputs: inputs([
                        ("k", json!(k)),
                        ("genus", json!(genus)),
                        ("filter", json!(filter)),
                    ]),
                    output: json!({ "candidate_strata": rows }),
                    citations: vec![
                        "codim = h1(End e) + h1(End f) - h1(f^v (x) Sym^2 e)".into(),
                        "e1 + e2 + e3 = f1 + f2 = g + 3; e1 >= 1; 2e1 >= f1; 2e2 >= f2".into(),
                        "non-factoring: e1 + e3 >= f2".into(),
                    ],
                },
                text,
            })
        }
        Command::SplittingCodim { k, e, f, genus } => {
            let (codim, g, flags) = if *k == 4 {
                let flags = serde_json::to_value(constraints_4(e, f)?).expect("flags serialize");
                (
                    codim_hurwitz4(e, f)?,
                    genus.map(|g| json!(g)).unwrap_or(Value::Null),
                    flags,
                )
            } else {
                let g = genus.unwrap_or(e.degree() - 4);
                let flags = serde_json::to_value(constraints_5(e, f, g)?).expect("flags serialize");
                (codim_hurwitz5(e, f, g)?, json!(g), flags)
            };
            let citation = if *k == 4 {
                "codim = h1(End e) + h1(End f) - h1(f^v (x) Sym^2 e)"
            } else {
                "codim = h1(End e) + h1(End f) - h1(e (x) wedge^2 f (x) O(-g-4))"
            };
            Ok(Outcome {
                result: CommandResult {
                    command: "splitting-codim".into(),
                    inputs: inputs([
                        ("k", json!(k)),
                        ("e", json!(e.to_string())),
                        ("f", json!(f.to_string())),
                        ("genus", g),
                    ]),
                    output: json!({
                        "codim": codim,
                        "simultaneous_codim": codim_simultaneous(e, f),
                        "flags": flags,
                    }),
                    citations: vec![citation.into()],
                },
                text: codim.to_string(),
            })
        }
        Command::Minimize { preset, spec } => {
            let (program, source) = match (preset, spec) {
                (Some(name), _) => (pl::preset(name)?, json!({ "preset": name })),
                (None, Some(path)) => {
                    let raw = std::fs::read_to_string(path).map_err(|e| {
                        CliError::usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let value: Value = serde_json::from_str(&raw)
                        .map_err(|e| CliError::usage(format!("invalid JSON: {e}")))?;
                    (
                        PLProgram::from_json(&value)?,
                        json!({ "spec": path.display().to_string() }),
                    )
                }
                (None, None) => return Err(CliError::usage("need --preset or --spec")),
            };
            let sol = pl::solve(&program)?;
            let points: Vec<String> = sol.argmin_points.iter().map(|p| format_point(p)).collect();
            let text = format!(
                "min = {} at [{}]",
                format_rational(&sol.min_value),
                points.join(", ")
            );
            let mut input_map = BTreeMap::new();
            if let Value::Object(o) = source {
                input_map.extend(o);
            }
            Ok(Outcome {
                result: CommandResult {
                    command: "minimize".into(),
                    inputs: input_map,
                    output: serde_json::to_value(&sol).expect("solution serializes"),
                    citations: vec![
                        "extreme values of a piecewise-linear function are attained where boundary and breakpoint hyperplanes meet in a point".into(),
                    ],
                },
                text,
            })
        }
        Command::Bound { k, genus, case } => {
            let c: BoundCase = case.parse().map_err(CliError::usage)?;
            let value = pl::bound(*k, *genus, c)?;
            let citation = if *k == 4 {
                "codim >= (g+3) * min_D f - 4"
            } else {
                "codim >= (g+4) * min_D f - 16"
            };
            Ok(Outcome {
                result: CommandResult {
                    command: "bound".into(),
                    inputs: inputs([
                        ("k", json!(k)),
                        ("genus", json!(genus)),
                        ("case", json!(case)),
                    ]),
                    output: json!({ "bound": format_rational(&value) }),
                    citations: vec![citation.into()],
                },
                text: format_rational(&value),
            })
        }
        Command::Presentation { k, genus } => {
            let p = presentation(*k, *genus)?;
            let gens: Vec<String> = p
                .generators
                .iter()
                .map(|(n, d)| format!("{n} ({d})"))
                .collect();
            let text = format!(
                "generators: {}\nno relations below degree {}",
                gens.join(", "),
                p.truncation_bound
            );
            let gen_json: Vec<Value> = p
                .generators
                .iter()
                .map(|(n, d)| json!({ "name": n, "degree": d }))
                .collect();
            Ok(Outcome {
                result: CommandResult {
                    command: "presentation".into(),
                    inputs: inputs([("k", json!(k)), ("genus", json!(genus))]),
                    output: json!({
                        "generators": gen_json,
                        "truncation_bound": p.truncation_bound,
                    }),
                    citations: vec![
                        "relations among the CE generators start in degree g + k".into()
                    ],
                },
                text,
            })
        }
        Command::CeRank { i, k } => {
            let r = ce_rank(*i, *k)?;
            Ok(Outcome {
                result: CommandResult {
                    command: "ce-rank".into(),
                    inputs: inputs([("i", json!(i)), ("k", json!(k))]),
                    output: json!({ "rank": r }),
                    citations: vec![
                        "rank F_i = i(k-2-i)/(k-1) * binom(k, i+1) for i < k-2; F_(k-2) = det E"
                            .into(),
                    ],
                },
                text: r.to_string(),
            })
        }
    }
}
