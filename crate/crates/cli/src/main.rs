//! `nestspec`: construct threshold (NSG) and chain (DNG) graphs from
//! cell-size specs, compute their spectra exactly and numerically,
//! classify vertices as downer/neutral/Parter, verify the structural
//! theorems, and search for conjecture counterexamples.
//!
//! Exit codes: 0 success / all claims pass, 1 verification failure,
//! 2 parse or usage error, 3 eigenvalue-selector error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nestspec::exact::{exact_multiplicity, snap_to_algebraic, AlgebraicNumber, IntPoly};
use nestspec::graphs::{build, Family, GraphSpec};
use nestspec::numeric::{eig_sym_with, Tolerances};
use nestspec::verify::{
    all_passed, random_specs, run_claims, search_chain_neutrals, search_remark_mh, verify_tables,
    VerificationResult, CLAIM_NAMES,
};
use nestspec::vertex_types::{classify_all, classify_all_numeric, Route, VertexTypeReport};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nestspec",
    version,
    about = "Spectra and vertex types of threshold and chain graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print its edge list or JSON form
    Gen {
        /// Graph spec: nsg:2,2,2;2,3,2 | dng:1,1;1,1 | half:4
        spec: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Eigenvalues, clusters, multiplicities, mainness
    Spectrum {
        spec: String,
        /// Also report exact multiplicities for these eigenvalues
        /// (comma list of integers, `omega`, `-omega`, `phi`, `-phi`)
        #[arg(long)]
        exact: Option<String>,
        #[arg(long)]
        cluster_tol: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Downer/neutral/Parter report for one eigenvalue
    Classify {
        spec: String,
        /// Eigenvalue by value (float, `omega`, or `-omega`)
        #[arg(long, group = "selector", allow_hyphen_values = true)]
        value: Option<String>,
        /// Eigenvalue by position: 1-based, descending (lambda_i)
        #[arg(long, group = "selector")]
        index: Option<usize>,
        /// Eigenvalue by monic integer minimal polynomial, constant
        /// term first (x^2+x-1 is `-1,1,1`)
        #[arg(long, group = "selector", allow_hyphen_values = true)]
        minpoly: Option<String>,
        #[arg(long)]
        cluster_tol: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run theorem claims on one spec or a randomized suite
    Verify {
        spec: Option<String>,
        /// Restrict to one claim id
        #[arg(long)]
        claim: Option<String>,
        /// Verify this many random specs instead of one given spec
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_h: usize,
        #[arg(long, default_value_t = 4)]
        max_cell: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive searches over small specs
    Search {
        kind: SearchKind,
        #[arg(long, default_value_t = 4)]
        max_h: usize,
        #[arg(long, default_value_t = 2)]
        max_cell: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Nsg,
    Dng,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Nsg => Family::Nsg,
            FamilyArg::Dng => Family::Dng,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    ChainNeutrals,
    RemarkMh,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn selector(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<nestspec::Error> for Failure {
    fn from(e: nestspec::Error) -> Self {
        use nestspec::Error::*;
        let code = match e {
            NotAnEigenvalue { .. } | NotMonic | Reducible { .. } | NoIsolatedRoot { .. } => 3,
            IndexOutOfRange {
                what: "eigenvalue index",
                ..
            } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen { spec, output } => {
            let g = build(&GraphSpec::parse(&spec)?);
            let text = match output.format {
                Format::Json => format!("{}\n", g.to_json()),
                _ => g.edge_list_text(),
            };
            emit(&output, text)?;
            Ok(0)
        }
        Command::Spectrum {
            spec,
            exact,
            cluster_tol,
            output,
        } => cmd_spectrum(&spec, exact.as_deref(), cluster_tol, &output),
        Command::Classify {
            spec,
            value,
            index,
            minpoly,
            cluster_tol,
            output,
        } => cmd_classify(
            &spec,
            value.as_deref(),
            index,
            minpoly.as_deref(),
            cluster_tol,
            &output,
        ),
        Command::Verify {
            spec,
            claim,
            random,
            family,
            seed,
            max_h,
            max_cell,
            output,
        } => cmd_verify(
            spec.as_deref(),
            claim.as_deref(),
            random,
            family,
            seed,
            max_h,
            max_cell,
            &output,
        ),
        Command::Search {
            kind,
            max_h,
            max_cell,
            output,
        } => cmd_search(kind, max_h, max_cell, &output),
    }
}

fn tolerances(cluster_tol: Option<f64>) -> Tolerances {
    match cluster_tol {
        Some(t) => Tolerances::with_cluster_rel(t),
        None => Tolerances::default(),
    }
}

fn header_line(tol: &Tolerances) -> String {
    json!({
        "type": "header",
        "tolerances": {
            "cluster_rel": tol.cluster_rel,
            "residual_rel": tol.residual_rel,
            "mainness_rel": tol.mainness_rel,
        },
    })
    .to_string()
}

fn cmd_spectrum(
    spec: &str,
    exact: Option<&str>,
    cluster_tol: Option<f64>,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    let parsed = GraphSpec::parse(spec)?;
    let g = build(&parsed);
    let tol = tolerances(cluster_tol);
    let spectrum = eig_sym_with(&g, &tol);
    if output.format == Format::Csv {
        let mut text = String::from("value,multiplicity,main\n");
        for c in spectrum.clusters() {
            text.push_str(&format!(
                "{},{},{}\n",
                nestspec::sig12(c.value),
                c.multiplicity,
                c.main
            ));
        }
        emit(output, text)?;
        return Ok(0);
    }
    let mut body = spectrum.to_json();
    if let Some(list) = exact {
        let mut rows = Vec::new();
        for token in list.split(',') {
            let lambda = parse_eigenvalue_token(token.trim())?;
            rows.push(json!({
                "lambda": lambda.to_string(),
                "minpoly": lambda.minpoly().to_string(),
                "multiplicity": exact_multiplicity(&g, &lambda),
            }));
        }
        body["exact"] = json!(rows);
    }
    emit(output, format!("{}\n{}\n", header_line(&tol), body))?;
    Ok(0)
}

fn parse_eigenvalue_token(token: &str) -> Result<AlgebraicNumber, Failure> {
    match token {
        "omega" => Ok(AlgebraicNumber::omega()),
        "-omega" => Ok(AlgebraicNumber::minus_omega()),
        "phi" => Ok(AlgebraicNumber::golden()),
        "-phi" => Ok(AlgebraicNumber::minus_golden()),
        _ => token
            .parse::<i64>()
            .map(AlgebraicNumber::integer)
            .map_err(|_| {
                Failure::usage(format!(
                    "bad eigenvalue token '{token}': expected an integer, omega, -omega, phi or -phi"
                ))
            }),
    }
}

fn parse_minpoly(list: &str) -> Result<IntPoly, Failure> {
    let coeffs: Result<Vec<i64>, _> = list.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let mut coeffs =
        coeffs.map_err(|_| Failure::usage(format!("bad minpoly coefficient list '{list}'")))?;
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    // a leading -1 is just the mirrored monic polynomial
    if coeffs.last() == Some(&-1) {
        for c in &mut coeffs {
            *c = -*c;
        }
    }
    if coeffs.last() != Some(&1) {
        return Err(Failure::selector(format!(
            "minpoly '{list}' is not monic (leading coefficient must be ±1)"
        )));
    }
    Ok(IntPoly::from_i64(&coeffs))
}

fn cmd_classify(
    spec: &str,
    value: Option<&str>,
    index: Option<usize>,
    minpoly: Option<&str>,
    cluster_tol: Option<f64>,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    let parsed = GraphSpec::parse(spec)?;
    let g = build(&parsed);
    let tol = tolerances(cluster_tol);
    let spectrum = eig_sym_with(&g, &tol);
    let ct = spectrum.cluster_tol();

    // resolve the selector to a cluster value and, when possible, an
    // algebraic identity for the exact route
    let (target, algebraic): (f64, Option<AlgebraicNumber>) = if let Some(v) = value {
        let v = match v {
            "omega" => AlgebraicNumber::omega().approx(),
            "-omega" => AlgebraicNumber::minus_omega().approx(),
            _ => v
                .parse::<f64>()
                .map_err(|_| Failure::usage(format!("bad --value '{v}'")))?,
        };
        let cluster = spectrum
            .cluster_near(v)
            .ok_or_else(|| Failure::selector(format!("no eigenvalue within tolerance of {v}")))?;
        (cluster.value, snap_to_algebraic(cluster.value, ct))
    } else if let Some(i) = index {
        if i < 1 || i > g.order() {
            return Err(Failure::selector(format!(
                "lambda index {i} outside 1..={}",
                g.order()
            )));
        }
        let v = spectrum.lambda(i);
        (v, snap_to_algebraic(v, ct))
    } else if let Some(list) = minpoly {
        let poly = parse_minpoly(list)?;
        let scale = 1.0_f64.max(
            poly.coeffs()
                .iter()
                .map(|c| nestspec::exact::bigint_f64(c).abs())
                .fold(0.0, f64::max),
        );
        let cluster = spectrum
            .clusters()
            .iter()
            .find(|c| poly.eval_f64(c.value).abs() <= 1e-6 * scale)
            .ok_or_else(|| Failure::selector(format!("no eigenvalue is a root of '{poly}'")))?;
        let alg = AlgebraicNumber::new(poly, cluster.value, 1e-6).map_err(Failure::from)?;
        (cluster.value, Some(alg))
    } else {
        return Err(Failure::usage(
            "one of --value, --index, --minpoly is required",
        ));
    };

    let report = classify_with_routes(&g, target, algebraic.as_ref(), &tol)?;
    if output.format == Format::Csv {
        let mut text = String::from("id,cell,type\n");
        for (v, t) in report.per_vertex.iter().enumerate() {
            let cell = g
                .label(v)
                .map(|c| c.to_string())
                .unwrap_or_else(|| "-".into());
            text.push_str(&format!("{v},{cell},{t}\n"));
        }
        emit(output, text)?;
        return Ok(0);
    }
    emit(
        output,
        format!("{}\n{}\n", header_line(&tol), report.to_json(&g)),
    )?;
    Ok(0)
}

/// Exact route when an algebraic identity is known, cross-checked against
/// the numeric route; numeric route alone otherwise.
fn classify_with_routes(
    g: &nestspec::graphs::Graph,
    target: f64,
    algebraic: Option<&AlgebraicNumber>,
    tol: &Tolerances,
) -> Result<VertexTypeReport, Failure> {
    match algebraic {
        Some(lambda) => {
            let mut report = classify_all(g, lambda)?;
            let numeric = classify_all_numeric(g, target, tol)?;
            if numeric.per_vertex == report.per_vertex {
                report.route = Route::BothAgree;
            } else {
                report
                    .anomalies
                    .push("numeric route disagrees with exact route".into());
            }
            Ok(report)
        }
        None => Ok(classify_all_numeric(g, target, tol)?),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    spec: Option<&str>,
    claim: Option<&str>,
    random: Option<usize>,
    family: Option<FamilyArg>,
    seed: u64,
    max_h: usize,
    max_cell: usize,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    if let Some(c) = claim {
        if !CLAIM_NAMES.contains(&c) {
            return Err(Failure::usage(format!(
                "unknown claim '{c}'; known claims: {}",
                CLAIM_NAMES.join(", ")
            )));
        }
    }
    let mut results: Vec<VerificationResult> = Vec::new();
    match (spec, random) {
        (Some(s), None) => {
            let parsed = GraphSpec::parse(s)?;
            results.extend(run_claims(&parsed, claim)?);
        }
        (None, Some(count)) => {
            let family: Family = family
                .ok_or_else(|| Failure::usage("--random requires --family nsg|dng"))?
                .into();
            for sp in random_specs(family, count, max_h, max_cell, seed) {
                results.extend(run_claims(&sp, claim)?);
            }
        }
        (None, None) if claim == Some("tables") => {
            results.extend(verify_tables());
        }
        _ => {
            return Err(Failure::usage(
                "give exactly one of: a spec, --random N, or --claim tables",
            ))
        }
    }

    let text = match output.format {
        Format::Csv => {
            let mut t = String::from("claim,spec,status\n");
            for r in &results {
                t.push_str(&r.csv_row());
                t.push('\n');
            }
            t
        }
        _ => {
            let mut t = format!("{}\n", header_line(&tolerances(None)));
            for r in &results {
                t.push_str(&r.to_json().to_string());
                t.push('\n');
            }
            let passed = results.iter().filter(|r| r.passed()).count();
            t.push_str(
                &json!({
                    "type": "summary",
                    "claims": results.len(),
                    "passed": passed,
                    "failed": results.len() - passed,
                })
                .to_string(),
            );
            t.push('\n');
            t
        }
    };
    emit(output, text)?;
    Ok(if all_passed(&results) { 0 } else { 1 })
}

fn cmd_search(
    kind: SearchKind,
    max_h: usize,
    max_cell: usize,
    output: &OutputArgs,
) -> Result<u8, Failure> {
    let tol = tolerances(None);
    let mut lines = Vec::new();
    let mut csv = String::new();
    let findings_count;
    match kind {
        SearchKind::ChainNeutrals => {
            let findings = search_chain_neutrals(max_h, max_cell)?;
            findings_count = findings.len();
            csv.push_str("spec,lambda,multiplicity,vertices\n");
            for f in &findings {
                lines.push(f.to_json().to_string());
                let ids: Vec<String> = f.vertices.iter().map(|v| v.id.to_string()).collect();
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    f.spec,
                    nestspec::sig12(f.lambda),
                    f.multiplicity,
                    ids.join(" ")
                ));
            }
        }
        SearchKind::RemarkMh => {
            let findings = search_remark_mh(max_h, max_cell)?;
            findings_count = findings.len();
            csv.push_str("spec,lambda,multiplicity,v_h\n");
            for f in &findings {
                lines.push(f.to_json().to_string());
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    f.spec,
                    -(f.m_h as i64),
                    f.multiplicity,
                    f.verdict.as_str()
                ));
            }
        }
    }
    let text = match output.format {
        Format::Csv => csv,
        _ => {
            let mut t = format!("{}\n", header_line(&tol));
            for l in &lines {
                t.push_str(l);
                t.push('\n');
            }
            t.push_str(&json!({"type": "summary", "findings": findings_count}).to_string());
            t.push('\n');
            t
        }
    };
    emit(output, text)?;
    Ok(0)
}

fn emit(output: &OutputArgs, text: String) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("cannot write to stdout: {e}"))),
    }
}
