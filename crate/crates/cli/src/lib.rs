//! Command-line front end: load algebras from the built-in catalog or from
//! JSON files, run the analyses, and emit deterministic reports.
//!
//! Exit codes: 0 = analysis completed (negative answers included), 1 = the
//! input was refused (parse failure, unknown catalog entry, invalid algebra
//! without --force), 2 = the search budget ran out before a decision.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use superiso::catalog;
use superiso::cohomcover::{
    build_cover, extension_to_doc, multiplier, verify_extension, ExtensionTag,
    RepresentativeChoice, ScalarCocycle2,
};
use superiso::factorset::{
    factor_set_from_doc, factor_set_from_section, factor_set_to_doc, reconstruct,
    reconstruction_isomorphism, validate_factor_set, FactorSetDoc,
};
use superiso::isoclinism::{
    check_witness, find_isoclinism, is_stem, stem_decompose, witness_coherence_check,
    IsoclinismOutcome,
};
use superiso::random::seeded_rng;
use superiso::superalg::json::{algebra_from_doc, algebra_to_doc, map_to_doc, AlgebraDoc};
use superiso::superalg::search::{find_isomorphism, Budget, IsomorphismOutcome};
use superiso::{Field, GradedDim, Parity, SuperAlgebra};

#[derive(Parser, Debug)]
#[command(
    name = "superiso",
    version,
    about = "exact isoclinism toolkit for finite-dimensional Lie superalgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// run analyses on algebras that fail validation; their reports carry a
    /// "flagged" validity marker
    #[arg(long, global = true)]
    pub force: bool,

    /// node budget for the isomorphism search
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    /// seed for randomized helpers (random section choice); analyses that
    /// use no randomness ignore it
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// also write the report to this file
    #[arg(long = "output-path", global = true)]
    pub output_path: Option<PathBuf>,

    /// cocycle representatives for cover: "canonical" or "variant:N"
    #[arg(long = "representative-choice", global = true, default_value = "canonical")]
    pub representative_choice: String,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// check the grading, skew, and Jacobi axioms and list every violation
    Validate { input: String },
    /// dimensions, brackets, center, and derived subalgebra
    Info { input: String },
    /// split into a stem part plus an abelian direct summand
    Stem { input: String },
    /// decide isoclinism between two algebras
    Isoclinic { left: String, right: String },
    /// decide graded isomorphism between two algebras
    Isomorphic { left: String, right: String },
    /// factor set over the central quotient from a section
    Factorset { input: String },
    /// rebuild an algebra from a factor-set JSON file
    Reconstruct { input: String },
    /// graded multiplier dimensions with representative cocycles
    Multiplier { input: String },
    /// central extension by the multiplier from chosen representatives
    Cover { input: String },
    /// built-in algebra catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// names, dimensions, and validity of every entry
    List,
    /// full JSON for one entry
    Show { name: String },
}

/// The report payload is deterministic: serde_json orders map keys and all
/// coefficients render through the field's canonical formatter. Wall time is
/// kept out of the serialized form so repeated runs emit identical bytes.
#[derive(Serialize, Debug)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub verb: String,
    pub inputs: Vec<String>,
    pub validity: Vec<String>,
    pub result: Value,
    #[serde(skip_serializing)]
    pub wall_ms: u128,
}

impl Report {
    /// Pretty JSON with every object's keys sorted, top level included.
    pub fn canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string_pretty(&value).expect("reports serialize")
    }
}

pub struct Outcome {
    pub exit: i32,
    pub report: Report,
}

struct Failure {
    exit: i32,
    message: String,
}

impl Failure {
    fn refusal(message: impl Into<String>) -> Failure {
        Failure {
            exit: 1,
            message: message.into(),
        }
    }
}

impl From<superiso::Error> for Failure {
    fn from(e: superiso::Error) -> Failure {
        Failure::refusal(e.to_string())
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let (verb, inputs) = describe(&cli.verb);
    let mut validity = Vec::new();
    let (exit, result) = match execute(cli, &mut validity) {
        Ok((exit, payload)) => (exit, payload),
        Err(f) => (f.exit, json!({ "error": f.message })),
    };
    Outcome {
        exit,
        report: Report {
            tool: "superiso".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            verb,
            inputs,
            validity,
            result,
            wall_ms: start.elapsed().as_millis(),
        },
    }
}

fn describe(verb: &Verb) -> (String, Vec<String>) {
    match verb {
        Verb::Validate { input } => ("validate".into(), vec![input.clone()]),
        Verb::Info { input } => ("info".into(), vec![input.clone()]),
        Verb::Stem { input } => ("stem".into(), vec![input.clone()]),
        Verb::Isoclinic { left, right } => ("isoclinic".into(), vec![left.clone(), right.clone()]),
        Verb::Isomorphic { left, right } => {
            ("isomorphic".into(), vec![left.clone(), right.clone()])
        }
        Verb::Factorset { input } => ("factorset".into(), vec![input.clone()]),
        Verb::Reconstruct { input } => ("reconstruct".into(), vec![input.clone()]),
        Verb::Multiplier { input } => ("multiplier".into(), vec![input.clone()]),
        Verb::Cover { input } => ("cover".into(), vec![input.clone()]),
        Verb::Catalog { action } => match action {
            CatalogAction::List => ("catalog".into(), vec!["list".into()]),
            CatalogAction::Show { name } => ("catalog".into(), vec!["show".into(), name.clone()]),
        },
    }
}

/// Reads an input as `catalog:NAME` or as a path to an algebra JSON file.
fn load_algebra(input: &str) -> Result<(String, SuperAlgebra), Failure> {
    if let Some(name) = input.strip_prefix("catalog:") {
        let a = catalog::get(name)?;
        return Ok((name.to_string(), a));
    }
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::refusal(format!("cannot read {input}: {e}")))?;
    let doc: AlgebraDoc = serde_json::from_str(&text)
        .map_err(|e| Failure::refusal(format!("{input}: {e}")))?;
    let (name, a) = algebra_from_doc(&doc)?;
    Ok((name, a))
}

/// Loads an algebra, records its validity marker, and refuses invalid input
/// unless forced. `validate` passes `gate = false`: it reports on invalid
/// algebras by design.
fn load_gated(
    input: &str,
    cli: &Cli,
    validity: &mut Vec<String>,
    gate: bool,
) -> Result<(String, SuperAlgebra), Failure> {
    let (name, a) = load_algebra(input)?;
    validity.push(marker(&a));
    if gate && !a.is_valid() && !cli.force {
        return Err(Failure::refusal(format!(
            "{input} fails validation; rerun with --force to analyze it anyway"
        )));
    }
    Ok((name, a))
}

fn marker(a: &SuperAlgebra) -> String {
    if a.is_valid() { "valid" } else { "flagged" }.to_string()
}

fn dim_json(d: GradedDim) -> Value {
    json!({ "even": d.even, "odd": d.odd })
}

fn scalars_json(f: Field, v: &[superiso::Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(f.format_scalar(s))).collect())
}

fn budget_of(cli: &Cli) -> Budget {
    cli.budget.map(Budget::nodes).unwrap_or_default()
}

fn execute(cli: &Cli, validity: &mut Vec<String>) -> Result<(i32, Value), Failure> {
    match &cli.verb {
        Verb::Validate { input } => {
            let (_, a) = load_gated(input, cli, validity, false)?;
            Ok((0, validate_payload(&a)))
        }
        Verb::Info { input } => {
            let (name, a) = load_gated(input, cli, validity, true)?;
            let doc = algebra_to_doc(&name, &a)?;
            Ok((
                0,
                json!({
                    "algebra": serde_json::to_value(doc).expect("docs serialize"),
                    "field": a.field().describe(),
                    "dim": dim_json(a.dim()),
                    "center_dim": dim_json(a.center().graded_dim()),
                    "derived_dim": dim_json(a.derived().graded_dim()),
                    "central_quotient_dim": dim_json(a.central_quotient().algebra.dim()),
                    "stem": is_stem(&a),
                    "valid": a.is_valid(),
                }),
            ))
        }
        Verb::Stem { input } => {
            let (name, a) = load_gated(input, cli, validity, true)?;
            let dec = stem_decompose(&a)?;
            if !dec.iso.is_isomorphism(&a, &dec.sum.algebra)? {
                return Err(Failure::refusal(
                    "stem decomposition failed re-verification",
                ));
            }
            let stem_doc = algebra_to_doc(&format!("{name}.stem"), &dec.stem.algebra)?;
            Ok((
                0,
                json!({
                    "stem": serde_json::to_value(stem_doc).expect("docs serialize"),
                    "stem_dim": dim_json(dec.stem.algebra.dim()),
                    "abelian_dim": dim_json(dec.abelian.dim()),
                    "iso": serde_json::to_value(map_to_doc(&dec.iso)).expect("docs serialize"),
                    "stem_is_stem": is_stem(&dec.stem.algebra),
                    "verified": true,
                }),
            ))
        }
        Verb::Isoclinic { left, right } => {
            let (_, a) = load_gated(left, cli, validity, true)?;
            let (_, b) = load_gated(right, cli, validity, true)?;
            match find_isoclinism(&a, &b, budget_of(cli))? {
                IsoclinismOutcome::Witness(w) => {
                    if !(check_witness(&w)? && witness_coherence_check(&w)?) {
                        return Err(Failure::refusal("isoclinism witness failed re-verification"));
                    }
                    Ok((
                        0,
                        json!({
                            "isoclinic": true,
                            "phi": serde_json::to_value(map_to_doc(&w.phi)).expect("docs serialize"),
                            "theta": serde_json::to_value(map_to_doc(&w.theta)).expect("docs serialize"),
                            "verified": true,
                        }),
                    ))
                }
                IsoclinismOutcome::NotIsoclinic(reason) => {
                    Ok((0, json!({ "isoclinic": false, "reason": reason })))
                }
                IsoclinismOutcome::Unknown(reason) => {
                    Ok((2, json!({ "isoclinic": Value::Null, "reason": reason })))
                }
            }
        }
        Verb::Isomorphic { left, right } => {
            let (_, a) = load_gated(left, cli, validity, true)?;
            let (_, b) = load_gated(right, cli, validity, true)?;
            match find_isomorphism(&a, &b, budget_of(cli))? {
                IsomorphismOutcome::Witness(w) => {
                    if !w.is_isomorphism(&a, &b)? {
                        return Err(Failure::refusal(
                            "isomorphism witness failed re-verification",
                        ));
                    }
                    Ok((
                        0,
                        json!({
                            "isomorphic": true,
                            "witness": serde_json::to_value(map_to_doc(&w)).expect("docs serialize"),
                            "verified": true,
                        }),
                    ))
                }
                IsomorphismOutcome::NotIsomorphic(reason) => {
                    Ok((0, json!({ "isomorphic": false, "reason": reason })))
                }
                IsomorphismOutcome::Unknown(reason) => {
                    Ok((2, json!({ "isomorphic": Value::Null, "reason": reason })))
                }
            }
        }
        Verb::Factorset { input } => {
            let (_, a) = load_gated(input, cli, validity, true)?;
            let z = a.center();
            let k = match cli.seed {
                None => z.complement_in(&a.full_space())?,
                Some(s) => z.random_complement_in(&a.full_space(), &mut seeded_rng(s))?,
            };
            let (r, t) = factor_set_from_section(&a, &k)?;
            let theta = reconstruction_isomorphism(&a, &k, &t, &r)?;
            Ok((
                0,
                json!({
                    "factor_set": serde_json::to_value(factor_set_to_doc(&r)?).expect("docs serialize"),
                    "section": serde_json::to_value(map_to_doc(&t)).expect("docs serialize"),
                    "valid": validate_factor_set(&r).is_valid(),
                    "reconstruction_iso": serde_json::to_value(map_to_doc(&theta)).expect("docs serialize"),
                    "reconstruction_verified": true,
                }),
            ))
        }
        Verb::Reconstruct { input } => {
            if input.starts_with("catalog:") {
                return Err(Failure::refusal(
                    "reconstruct takes a factor-set JSON file, not a catalog entry",
                ));
            }
            let text = fs::read_to_string(input)
                .map_err(|e| Failure::refusal(format!("cannot read {input}: {e}")))?;
            let doc: FactorSetDoc = serde_json::from_str(&text)
                .map_err(|e| Failure::refusal(format!("{input}: {e}")))?;
            let r = factor_set_from_doc(&doc)?;
            let flagged = !r.quotient.is_valid() || !r.center_space.is_valid();
            validity.push(if flagged { "flagged" } else { "valid" }.to_string());
            if flagged && !cli.force {
                return Err(Failure::refusal(format!(
                    "{input} carries a flagged algebra; rerun with --force to rebuild anyway"
                )));
            }
            let rec = reconstruct(&r)?;
            let doc = algebra_to_doc("reconstruction", &rec.algebra)?;
            Ok((
                0,
                json!({
                    "algebra": serde_json::to_value(doc).expect("docs serialize"),
                    "valid": rec.algebra.is_valid(),
                    "center_copy_dim": dim_json(rec.center_copy.graded_dim()),
                }),
            ))
        }
        Verb::Multiplier { input } => {
            let (_, a) = load_gated(input, cli, validity, true)?;
            let res = multiplier(&a)?;
            Ok((
                0,
                json!({
                    "dim": dim_json(res.graded_dim),
                    "even": cocycles_json(a.field(), &res.even_basis),
                    "odd": cocycles_json(a.field(), &res.odd_basis),
                }),
            ))
        }
        Verb::Cover { input } => {
            let (_, a) = load_gated(input, cli, validity, true)?;
            let choice = parse_choice(&cli.representative_choice, &a)?;
            let label = choice.label.clone();
            let ext = build_cover(&a, &choice)?;
            if verify_extension(&ext) != ext.kind {
                return Err(Failure::refusal("cover tags failed re-verification"));
            }
            let tags: Vec<&str> = ext.kind.iter().map(|t| t.label()).collect();
            Ok((
                0,
                json!({
                    "extension": serde_json::to_value(extension_to_doc(&ext)?).expect("docs serialize"),
                    "tags": tags,
                    "stem_cover": ext.kind.contains(&ExtensionTag::StemCover),
                    "choice": label,
                }),
            ))
        }
        Verb::Catalog { action } => match action {
            CatalogAction::List => {
                let mut names = catalog::names();
                names.sort_unstable();
                let mut entries = Vec::new();
                for n in names {
                    let a = catalog::get(n)?;
                    entries.push(json!({
                        "name": n,
                        "dim": dim_json(a.dim()),
                        "field": a.field().describe(),
                        "valid": a.is_valid(),
                    }));
                }
                Ok((0, json!({ "entries": entries })))
            }
            CatalogAction::Show { name } => {
                let a = catalog::get(name)?;
                validity.push(marker(&a));
                let doc = algebra_to_doc(name, &a)?;
                Ok((
                    0,
                    json!({
                        "algebra": serde_json::to_value(doc).expect("docs serialize"),
                        "valid": a.is_valid(),
                    }),
                ))
            }
        },
    }
}

fn validate_payload(a: &SuperAlgebra) -> Value {
    let f = a.field();
    let names = a.names();
    let rep = a.validation();
    let grading: Vec<Value> = rep
        .grading_violations
        .iter()
        .map(|v| {
            json!({
                "left": names[v.left],
                "right": names[v.right],
                "out": names[v.out],
                "value": f.format_scalar(&v.value),
            })
        })
        .collect();
    let skew: Vec<Value> = rep
        .skew_violations
        .iter()
        .map(|v| {
            json!({
                "left": names[v.left],
                "right": names[v.right],
                "residual": scalars_json(f, &v.residual),
            })
        })
        .collect();
    let jacobi: Vec<Value> = rep
        .jacobi_violations
        .iter()
        .map(|v| {
            json!({
                "x": names[v.x],
                "y": names[v.y],
                "z": names[v.z],
                "residual": scalars_json(f, &v.residual),
            })
        })
        .collect();
    json!({
        "valid": rep.is_valid(),
        "grading": grading,
        "skew": skew,
        "jacobi": jacobi,
    })
}

fn cocycles_json(f: Field, basis: &[ScalarCocycle2]) -> Value {
    Value::Array(basis.iter().map(|c| cocycle_json(f, c)).collect())
}

fn cocycle_json(f: Field, c: &ScalarCocycle2) -> Value {
    let m = c.coefficients();
    let mut entries = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = c.entry(i, j);
            if !f.is_zero(v) {
                entries.push(json!({ "i": i, "j": j, "value": f.format_scalar(v) }));
            }
        }
    }
    json!({
        "parity": match c.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        },
        "entries": entries,
    })
}

fn parse_choice(s: &str, l: &SuperAlgebra) -> Result<RepresentativeChoice, Failure> {
    if s == "canonical" {
        return Ok(RepresentativeChoice::canonical(l)?);
    }
    if let Some(k) = s.strip_prefix("variant:") {
        let k: u64 = k.parse().map_err(|_| {
            Failure::refusal(format!(
                "bad representative choice '{s}'; use canonical or variant:N"
            ))
        })?;
        return Ok(RepresentativeChoice::variant(l, k)?);
    }
    Err(Failure::refusal(format!(
        "bad representative choice '{s}'; use canonical or variant:N"
    )))
}
