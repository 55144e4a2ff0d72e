//! Command-line front end: `build`, `check`, `identity` and `export`.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails
//! with a certificate, 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::constructions::{from_spec, NAMES};
use crate::decomp::{
    bahturin_regev_check, detect_theta, find_witness, is_minimal, msquared_check,
    qc_relations_check, root_order_check, Decomposition, QcViolation, RegularityWitness,
    ThetaTable, WitnessOptions, WitnessStatus,
};
use crate::error::{Error, Result, ThetaFailure};
use crate::exactnum::Cyclotomic;
use crate::format::{
    construction_meta, read_decomposition, read_theta, report, scalar_value, theta_csv, to_pretty,
    to_value, AlgebraJson, AlgebraSource, CayleyJson, DecompositionJson, ElementJson, MetaJson,
    PolyJson, ThetaJson,
};
use crate::gradedgroup::{
    classify_abelian, realizability_check, reconstruct_group, set_grading_detect,
    RealizabilityVerdict, SetGrading, Side,
};
use crate::identities::{
    find_identity, verify_identity, IdentityVerification, DEFAULT_DEGREE_CAP, LARGE_DEGREE_CAP,
};

#[derive(Debug, Parser)]
#[command(
    name = "qcreg",
    version,
    about = "Regular quantum commutative decompositions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named construction as algebra and decomposition JSON.
    Build(BuildArgs),
    /// Run the check pipeline on a decomposition.
    Check(CheckArgs),
    /// Search for a multilinear identity forced by a commutation table.
    Identity(IdentityArgs),
    /// Convert a decomposition or construction to another format.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// Construction name; see `--list`.
    #[arg(required_unless_present = "list")]
    pub name: Option<String>,
    /// Print the construction names and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub n1: Option<usize>,
    #[arg(long)]
    pub n2: Option<usize>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Comma-separated exponents for `p-power`.
    #[arg(long)]
    pub exponents: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Group for `group-algebra`: `zN`, products like `z2xz4`, `dN`, `q8`.
    #[arg(long)]
    pub group: Option<String>,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Step {
    Theta,
    Qc,
    Witness,
    Minimality,
    Det,
    BahturinRegev,
    Msquared,
    RootOrder,
    SetGrading,
    Realizability,
    Reconstruct,
}

impl Step {
    pub const ALL: [Step; 11] = [
        Step::Theta,
        Step::Qc,
        Step::Witness,
        Step::Minimality,
        Step::Det,
        Step::BahturinRegev,
        Step::Msquared,
        Step::RootOrder,
        Step::SetGrading,
        Step::Realizability,
        Step::Reconstruct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Step::Theta => "theta",
            Step::Qc => "qc",
            Step::Witness => "witness",
            Step::Minimality => "minimality",
            Step::Det => "det",
            Step::BahturinRegev => "bahturin-regev",
            Step::Msquared => "msquared",
            Step::RootOrder => "root-order",
            Step::SetGrading => "set-grading",
            Step::Realizability => "realizability",
            Step::Reconstruct => "reconstruct",
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Decomposition JSON file, or a construction spec such as `pauli:2`.
    pub input: String,
    /// Run every step (the default when no `--step` is given).
    #[arg(long)]
    pub all: bool,
    /// Steps to run; repeatable.
    #[arg(long = "step", value_enum)]
    pub steps: Vec<Step>,
    /// Steps to leave out; repeatable.
    #[arg(long = "skip", value_enum)]
    pub skip: Vec<Step>,
    /// Allow the symbolic witness search.
    #[arg(long)]
    pub phase2: bool,
    /// Random witness attempts.
    #[arg(long, default_value_t = 64)]
    pub budget: usize,
    #[arg(long, env = "QCREG_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Order bound for root-order; defaults to the ambient matrix size when
    /// known, else the algebra dimension.
    #[arg(long)]
    pub bound: Option<u32>,
    /// Reconstruct the group even when the table is not minimal.
    #[arg(long)]
    pub force: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Also write the commutation table as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["m", "theta"])))]
pub struct IdentityArgs {
    /// Use the all-ones table of this size.
    #[arg(long)]
    pub m: Option<usize>,
    /// `grassmann`, a theta or decomposition JSON file, or a construction spec.
    #[arg(long)]
    pub theta: Option<String>,
    /// Degree.
    #[arg(long)]
    pub n: usize,
    /// Raise the degree cap.
    #[arg(long)]
    pub large: bool,
    /// Decomposition to substitute into: JSON file or construction spec.
    #[arg(long)]
    pub verify: Option<String>,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, env = "QCREG_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest basis checked exhaustively.
    #[arg(long, default_value_t = 6)]
    pub exhaustive_limit: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExportFormat {
    /// Decomposition with the algebra inline.
    Decomposition,
    Algebra,
    /// Detected commutation table as JSON.
    Theta,
    /// Detected commutation table as CSV.
    Csv,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Decomposition JSON file or construction spec.
    pub input: String,
    #[arg(long, value_enum, default_value = "decomposition")]
    pub format: ExportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// `Ok(true)` when everything passed, `Ok(false)` on a failed check.
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Build(a) => cmd_build(&a),
        Command::Check(a) => cmd_check(&a),
        Command::Identity(a) => cmd_identity(&a),
        Command::Export(a) => cmd_export(&a),
    }
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Error::Format(format!("{}: {e}", p.display())))
        }
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                Err(Error::Format(e.to_string()))
            }
            _ => Ok(()),
        },
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str, name: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::Format(format!("{name} needs --{flag}")))
}

/// Construction spec and file stem for the `build` arguments.
fn build_spec(a: &BuildArgs, name: &str) -> Result<(String, String)> {
    Ok(match name {
        "pauli" => {
            let n = need(&a.n, "n", name)?;
            (format!("pauli:{n}"), format!("pauli{n}"))
        }
        "example-6-1" | "example-6-2" => (name.to_string(), name.to_string()),
        "kronecker" => {
            let (n1, n2) = (need(&a.n1, "n1", name)?, need(&a.n2, "n2", name)?);
            (
                format!("kronecker:{n1}:{n2}"),
                format!("kronecker-{n1}-{n2}"),
            )
        }
        "p-power" => {
            let p = need(&a.p, "p", name)?;
            let e = need(&a.exponents, "exponents", name)?;
            (
                format!("p-power:{p}:{e}"),
                format!("p-power-{p}-{}", e.replace(',', "-")),
            )
        }
        "grassmann-z2" => {
            let k = need(&a.k, "k", name)?;
            (format!("grassmann-z2:{k}"), format!("grassmann-z2-{k}"))
        }
        "group-algebra" => {
            let g = need(&a.group, "group", name)?;
            (format!("group-algebra:{g}"), format!("group-algebra-{g}"))
        }
        "twisted" => {
            let n = need(&a.n, "n", name)?;
            (format!("twisted:{n}"), format!("twisted-{n}"))
        }
        _ => {
            return Err(Error::Format(format!(
                "unknown construction {name:?}; known: {}",
                NAMES.join(", ")
            )))
        }
    })
}

fn cmd_build(a: &BuildArgs) -> Result<bool> {
    if a.list {
        // a closed pipe is not an error here
        let _ = writeln!(std::io::stdout().lock(), "{}", NAMES.join("\n"));
        return Ok(true);
    }
    let name = a.name.as_deref().expect("clap requires a name");
    let (spec, stem) = build_spec(a, name)?;
    let c = from_spec(&spec)?;
    std::fs::create_dir_all(&a.out)
        .map_err(|e| Error::Format(format!("{}: {e}", a.out.display())))?;
    let alg_name = format!("{stem}.algebra.json");
    let alg_path = a.out.join(&alg_name);
    let dec_path = a.out.join(format!("{stem}.json"));
    write_or_print(
        Some(&alg_path),
        &to_pretty(&to_value(&AlgebraJson::from(c.algebra()))),
    )?;
    let dec = DecompositionJson::new(
        &c.decomposition,
        AlgebraSource::Path(alg_name),
        Some(construction_meta(&c)),
    );
    write_or_print(Some(&dec_path), &to_pretty(&to_value(&dec)))?;
    println!("{}", alg_path.display());
    println!("{}", dec_path.display());
    Ok(true)
}

/// A decomposition from a JSON file, or from a construction spec when the
/// argument names no file and does not end in `.json`.
fn load_input(input: &str) -> Result<(Decomposition, Option<MetaJson>)> {
    let path = Path::new(input);
    if path.exists() || input.ends_with(".json") {
        return read_decomposition(path);
    }
    let c = from_spec(input)?;
    let meta = construction_meta(&c);
    Ok((c.decomposition, Some(meta)))
}

fn theta_failure_value(e: &Error) -> Value {
    let detail = match e {
        Error::Theta(ThetaFailure::NotScalarMultiple { i, j, pair }) => {
            json!({"kind": "not-scalar-multiple", "components": [i, j], "pair": [pair.0, pair.1]})
        }
        Error::Theta(ThetaFailure::InconsistentScalar {
            i,
            j,
            first,
            second,
        }) => json!({
            "kind": "inconsistent-scalar",
            "components": [i, j],
            "first": [first.0, first.1],
            "second": [second.0, second.1],
        }),
        Error::Theta(ThetaFailure::OneSidedZero { i, j, pair }) => {
            json!({"kind": "one-sided-zero", "components": [i, j], "pair": [pair.0, pair.1]})
        }
        _ => json!({"kind": "error"}),
    };
    json!({"error": e.to_string(), "detail": detail})
}

fn skipped(step: Step, reason: &str) -> Value {
    json!({
        "check": step.name(),
        "pass": true,
        "status": "skipped",
        "certificate": {"reason": reason},
    })
}

fn outcome(step: Step, pass: bool, certificate: Value) -> Value {
    let mut v = report(step.name(), pass, certificate);
    v["status"] = json!(if pass { "pass" } else { "fail" });
    v
}

fn errored(step: Step, e: &Error) -> Value {
    outcome(step, false, json!({"error": e.to_string()}))
}

fn witness_value(w: &RegularityWitness) -> Value {
    json!({
        "status": w.status.as_str(),
        "phase": w.phase,
        "attempts": w.attempts,
        "note": w.note,
        "elements": w.elements.iter().map(|e| to_value(&ElementJson::from(e))).collect::<Vec<_>>(),
        "product": to_value(&ElementJson::from(&w.product)),
    })
}

fn set_grading_value(f: &SetGrading) -> Value {
    json!(f.table)
}

struct Pipeline<'a> {
    d: &'a Decomposition,
    meta: Option<&'a MetaJson>,
    args: &'a CheckArgs,
    theta: Option<ThetaTable>,
    witness: Option<RegularityWitness>,
    grading: Option<SetGrading>,
}

impl Pipeline<'_> {
    fn theta(&mut self) -> Value {
        match detect_theta(self.d) {
            Ok(t) => {
                let mut cert = json!({"theta": to_value(&ThetaJson::from(&t))});
                let mut pass = true;
                if let Some(expected) = self.meta.and_then(|m| m.expected_theta.as_ref()) {
                    let matches = ThetaTable::try_from(expected).is_ok_and(|e| e == t);
                    cert["matches_expected"] = json!(matches);
                    pass = matches;
                }
                self.theta = Some(t);
                outcome(Step::Theta, pass, cert)
            }
            Err(e) => outcome(Step::Theta, false, theta_failure_value(&e)),
        }
    }

    fn with_theta(&self, step: Step, f: impl FnOnce(&ThetaTable) -> Value) -> Value {
        match &self.theta {
            Some(t) => f(t),
            None => skipped(step, "no commutation table"),
        }
    }

    fn run(&mut self, step: Step) -> Value {
        match step {
            Step::Theta => self.theta(),
            Step::Qc => self.with_theta(step, |t| {
                let r = qc_relations_check(t);
                let violations: Vec<Value> = r
                    .violations
                    .iter()
                    .map(|v| match v {
                        QcViolation::DiagonalSquare(i) => json!({"diagonal_square": i}),
                        QcViolation::Reciprocal(i, j) => json!({"reciprocal": [i, j]}),
                    })
                    .collect();
                outcome(
                    step,
                    r.relations_hold(),
                    json!({
                        "violations": violations,
                        "diagonal_is_one": r.diagonal_is_one(),
                        "diagonal_not_one": r.diagonal_not_one,
                    }),
                )
            }),
            Step::Witness => {
                let opts = WitnessOptions {
                    budget: self.args.budget,
                    seed: self.args.seed,
                    phase2: self.args.phase2,
                    ..WitnessOptions::default()
                };
                let w = find_witness(self.d, &opts);
                let v = outcome(step, w.status == WitnessStatus::Found, witness_value(&w));
                self.witness = Some(w);
                v
            }
            Step::Minimality => self.with_theta(step, |t| match is_minimal(t) {
                Ok(r) => outcome(
                    step,
                    r.minimal,
                    json!({"duplicate_rows": r.duplicates.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>()}),
                ),
                Err(e) => errored(step, &e),
            }),
            Step::Det => self.with_theta(step, |t| match t.require_constrained().and_then(|_| t.matrix().det()) {
                Ok(det) => outcome(
                    step,
                    !det.is_zero(),
                    json!({"det": scalar_value(&det), "det_squared": scalar_value(&(&det * &det))}),
                ),
                Err(e) => errored(step, &e),
            }),
            Step::BahturinRegev => self.with_theta(step, |t| match bahturin_regev_check(t) {
                Ok(r) => outcome(
                    step,
                    r.pass && r.equivalence_holds,
                    json!({
                        "det": scalar_value(&r.det),
                        "det_squared": scalar_value(&r.det_squared),
                        "target": scalar_value(&r.target),
                        "minimal": r.minimal,
                        "equivalence_holds": r.equivalence_holds,
                    }),
                ),
                Err(e) => errored(step, &e),
            }),
            Step::Msquared => self.with_theta(step, |t| match msquared_check(t) {
                Ok(ok) => outcome(step, ok, json!({"m": t.m()})),
                Err(e) => errored(step, &e),
            }),
            Step::RootOrder => {
                let bound = self.args.bound.unwrap_or_else(|| {
                    self.meta
                        .and_then(|m| m.ambient_size)
                        .unwrap_or(self.d.algebra().dim() as u32)
                });
                self.with_theta(step, |t| {
                    let r = root_order_check(t, bound);
                    outcome(
                        step,
                        r.pass(),
                        json!({
                            "bound": r.bound,
                            "orders": r.orders,
                            "violations": r.violations.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
                        }),
                    )
                })
            }
            Step::SetGrading => match set_grading_detect(self.d) {
                Ok(f) => {
                    let v = outcome(
                        step,
                        true,
                        json!({"table": set_grading_value(&f), "total": f.is_total()}),
                    );
                    self.grading = Some(f);
                    v
                }
                Err(Error::NotASetGrading { i, j, components }) => outcome(
                    step,
                    false,
                    json!({"pair": [i, j], "components": components}),
                ),
                Err(e) => errored(step, &e),
            },
            Step::Realizability => {
                let Some(f) = &self.grading else {
                    return skipped(step, "no set grading");
                };
                let r = realizability_check(f);
                let cancellation: Vec<Value> = r
                    .cancellation
                    .iter()
                    .map(|c| {
                        json!({
                            "side": match c.side { Side::Right => "right", Side::Left => "left" },
                            "i": c.i,
                            "j": c.j,
                            "k": c.k,
                            "value": c.value,
                        })
                    })
                    .collect();
                let verdict = match &r.verdict {
                    RealizabilityVerdict::Realizable(g) => json!({
                        "realizable": to_value(&CayleyJson::from(g)),
                        "invariant_factors": classify_abelian(g).ok().map(|a| a.invariant_factors),
                    }),
                    RealizabilityVerdict::NecessaryConditionsHold => {
                        json!("necessary conditions hold")
                    }
                    RealizabilityVerdict::Violated(msg) => json!({"violated": msg}),
                };
                outcome(
                    step,
                    r.pass(),
                    json!({
                        "cancellation": cancellation,
                        "associativity": r.associativity.iter().map(|&(i, j, k)| [i, j, k]).collect::<Vec<_>>(),
                        "verdict": verdict,
                    }),
                )
            }
            Step::Reconstruct => {
                if self.d.component_dims().iter().any(|&k| k != 1) {
                    return skipped(step, "components are not one-dimensional");
                }
                let (Some(t), Some(w)) = (&self.theta, &self.witness) else {
                    return skipped(step, "needs the theta and witness steps");
                };
                match reconstruct_group(self.d, t, w, self.args.force) {
                    Ok(r) => {
                        let factors = classify_abelian(&r.group).ok().map(|a| a.invariant_factors);
                        outcome(
                            step,
                            r.bicharacter_violation.is_none(),
                            json!({
                                "group": to_value(&CayleyJson::from(&r.group)),
                                "invariant_factors": factors,
                                "center_dim": r.center_dim,
                                "bicharacter_violation": r.bicharacter_violation.map(|(i, j, k)| [i, j, k]),
                            }),
                        )
                    }
                    Err(e) => errored(step, &e),
                }
            }
        }
    }
}

fn selected_steps(a: &CheckArgs) -> Vec<Step> {
    let mut steps: Vec<Step> = if a.all || a.steps.is_empty() {
        Step::ALL.to_vec()
    } else {
        a.steps.clone()
    };
    // reconstruct consumes the theta table and the witness
    if steps.contains(&Step::Reconstruct) {
        steps.extend([Step::Theta, Step::Witness]);
    }
    if steps.contains(&Step::Realizability) {
        steps.push(Step::SetGrading);
    }
    let needs_theta = steps.iter().any(|s| {
        matches!(
            s,
            Step::Qc
                | Step::Minimality
                | Step::Det
                | Step::BahturinRegev
                | Step::Msquared
                | Step::RootOrder
        )
    });
    if needs_theta {
        steps.push(Step::Theta);
    }
    steps.sort();
    steps.dedup();
    steps.retain(|s| !a.skip.contains(s));
    steps
}

fn cmd_check(a: &CheckArgs) -> Result<bool> {
    let (d, meta) = load_input(&a.input)?;
    if !d.check_direct_sum() {
        return Err(Error::NotDirectSum);
    }
    let mut p = Pipeline {
        d: &d,
        meta: meta.as_ref(),
        args: a,
        theta: None,
        witness: None,
        grading: None,
    };
    let results: Vec<Value> = selected_steps(a).into_iter().map(|s| p.run(s)).collect();
    let pass = results.iter().all(|r| r["pass"] == json!(true));
    if let Some(path) = &a.csv {
        match &p.theta {
            Some(t) => write_or_print(Some(path), &theta_csv(t)?)?,
            None => eprintln!("no commutation table; {} not written", path.display()),
        }
    }
    let doc = json!({
        "input": a.input,
        "seed": a.seed,
        "pass": pass,
        "steps": results,
    });
    match &a.report {
        Some(path) => {
            write_or_print(Some(path), &to_pretty(&doc))?;
            for r in &results {
                println!(
                    "{}: {}",
                    r["check"].as_str().unwrap_or_default(),
                    r["status"].as_str().unwrap_or_default()
                );
            }
        }
        None => write_or_print(None, &to_pretty(&doc))?,
    }
    Ok(pass)
}

/// `[[1,1],[1,-1]]`, the parity table of the Grassmann algebra.
pub fn grassmann_theta() -> ThetaTable {
    ThetaTable::from_entries(vec![
        vec![Cyclotomic::one(), Cyclotomic::one()],
        vec![Cyclotomic::one(), Cyclotomic::from_int(-1)],
    ])
    .expect("square")
}

fn load_theta(src: &str) -> Result<ThetaTable> {
    if src == "grassmann" {
        return Ok(grassmann_theta());
    }
    let path = Path::new(src);
    if path.exists() {
        if let Ok(t) = read_theta(path) {
            return Ok(t);
        }
        let (d, _) = read_decomposition(path)?;
        return detect_theta(&d);
    }
    if src.ends_with(".json") {
        return Err(Error::Format(format!("{src}: no such file")));
    }
    detect_theta(&from_spec(src)?.decomposition)
}

fn verification_value(v: &IdentityVerification) -> Value {
    json!({
        "pass": v.pass(),
        "trials": v.trials,
        "random_violations": v.random_violations,
        "exhaustive_checked": v.exhaustive_checked,
        "exhaustive_violations": v.exhaustive_violations,
        "counterexample": v.counterexample.as_ref().map(|(ls, e)| json!({
            "components": ls,
            "value": to_value(&ElementJson::from(e)),
        })),
    })
}

fn cmd_identity(a: &IdentityArgs) -> Result<bool> {
    let t = match (&a.m, &a.theta) {
        (Some(m), _) => ThetaTable::from_entries(vec![vec![Cyclotomic::one(); *m]; *m])?,
        (None, Some(src)) => load_theta(src)?,
        (None, None) => unreachable!("clap requires a source"),
    };
    let cap = if a.large {
        LARGE_DEGREE_CAP
    } else {
        DEFAULT_DEGREE_CAP
    };
    let verify_on = a.verify.as_deref().map(load_input).transpose()?;
    let poly = find_identity(&t, a.n, cap)?;
    let mut doc = json!({
        "m": t.m(),
        "n": a.n,
        "identity": poly.as_ref().map(|p| to_value(&PolyJson::from(p))),
    });
    let mut pass = true;
    if let (Some(p), Some((d, _))) = (&poly, &verify_on) {
        if d.len() != t.m() {
            return Err(Error::DimensionMismatch {
                expected: t.m(),
                found: d.len(),
            });
        }
        let v = verify_identity(p, d, a.trials, a.seed, a.exhaustive_limit);
        pass = v.pass();
        doc["verification"] = verification_value(&v);
    }
    if poly.is_none() {
        eprintln!(
            "none: the system has only the zero solution in degree {}",
            a.n
        );
    }
    write_or_print(a.out.as_deref(), &to_pretty(&doc))?;
    Ok(pass)
}

fn cmd_export(a: &ExportArgs) -> Result<bool> {
    let (d, meta) = load_input(&a.input)?;
    let text = match a.format {
        ExportFormat::Decomposition => {
            let alg = AlgebraSource::Inline(AlgebraJson::from(d.algebra()));
            to_pretty(&to_value(&DecompositionJson::new(&d, alg, meta)))
        }
        ExportFormat::Algebra => to_pretty(&to_value(&AlgebraJson::from(d.algebra()))),
        ExportFormat::Theta => to_pretty(&to_value(&ThetaJson::from(&detect_theta(&d)?))),
        ExportFormat::Csv => theta_csv(&detect_theta(&d)?)?,
    };
    write_or_print(a.out.as_deref(), &text)?;
    Ok(true)
}
