//! Command-line front end: spectral radii, binding numbers, matchings,
//! quotient matrices and the verification campaigns, with JSON-first output.
//!
//! Exit codes: 0 all pass, 1 capacity/runtime error, 2 usage/parse error,
//! 3 inconclusive under --strict, 4 verification failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use alpha_spectra::graph::{Graph, JoinFamilySpec};
use alpha_spectra::verifier::{self, Alpha, TheoremParams, VerificationReport};
use alpha_spectra::{binding, graph6, matching, spectral, symbolic, Error};

const EXIT_RUNTIME: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_VERIFY_FAIL: u8 = 4;

#[derive(Parser)]
#[command(name = "alpha-spectra", version, about = "Graph spectra and perfect-matching verification toolkit")]
struct Cli {
    /// Worker threads for parallel scans (default: env ALPHA_SPECTRA_WORKERS or all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GraphInput {
    /// graph6-encoded graph
    #[arg(long, conflicts_with = "family")]
    graph6: Option<String>,

    /// Clique-join family "s,p1,p2,...": apex size, then part sizes
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// A_alpha spectral radius of a graph or family member
    Radius {
        #[command(flatten)]
        input: GraphInput,
        /// alpha as "p/q" (exact) or a decimal
        #[arg(long, default_value = "0")]
        alpha: String,
    },
    /// Exact binding number
    Bind {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Maximum matching and perfect-matching status
    Matching {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Quotient matrix of a family's layout partition
    Quotient {
        /// Clique-join family "s,p1,p2,..."
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "0")]
        alpha: String,
    },
    /// Order threshold n(alpha) of the main theorem
    Threshold {
        /// alpha as exact "p/q" in [0, 1/2]
        #[arg(long)]
        alpha: String,
    },
    /// Run verification campaigns
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
        /// Treat inconclusive outcomes as a failure (exit 3)
        #[arg(long, global = true)]
        strict: bool,
        /// Write the JSON Lines report here instead of stdout
        #[arg(long, global = true)]
        output: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Exact polynomial identity suite
    Identities,
    /// Spectral ordering and hypothesis checks for one (n, alpha)
    Extremal {
        #[arg(long, default_value_t = 18)]
        n: usize,
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 1e-6)]
        margin: f64,
    },
    /// Randomized lemma suites (transfer monotonicity, interlacing)
    Lemmas {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Scan a graph6 corpus (stdin or --input)
    Scan {
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long)]
        input: Option<std::path::PathBuf>,
    },
}

fn parse_exact_alpha(s: &str) -> Result<Alpha, String> {
    let r = if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|e| format!("bad alpha numerator: {e}"))?;
        let q: i64 = q.trim().parse().map_err(|e| format!("bad alpha denominator: {e}"))?;
        if q <= 0 {
            return Err("alpha denominator must be positive".into());
        }
        Ratio::new(p, q)
    } else {
        let p: i64 = s.trim().parse().map_err(|_| format!("alpha '{s}' must be exact: integer or p/q"))?;
        Ratio::new(p, 1)
    };
    Ok(r)
}

/// Decimals are allowed for exploratory radius queries only.
fn parse_loose_alpha(s: &str) -> Result<f64, String> {
    if let Ok(a) = parse_exact_alpha(s) {
        return Ok(verifier::alpha_to_f64(a));
    }
    s.trim().parse::<f64>().map_err(|_| format!("alpha '{s}' is neither p/q nor a decimal"))
}

fn parse_family(s: &str) -> Result<JoinFamilySpec, String> {
    let nums: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse::<usize>()).collect();
    let nums = nums.map_err(|e| format!("bad family spec '{s}': {e}"))?;
    if nums.is_empty() {
        return Err("family spec needs at least an apex size".into());
    }
    JoinFamilySpec::new(nums[0], nums[1..].to_vec()).map_err(|e| e.to_string())
}

enum InputGraph {
    Plain(Graph),
    Family(JoinFamilySpec),
}

fn load_graph(input: &GraphInput) -> Result<InputGraph, (u8, String)> {
    match (&input.graph6, &input.family) {
        (Some(g6), None) => graph6::parse_graph6(g6.as_bytes())
            .map(InputGraph::Plain)
            .map_err(|e| (EXIT_USAGE, e.to_string())),
        (None, Some(f)) => parse_family(f).map(InputGraph::Family).map_err(|e| (EXIT_USAGE, e)),
        _ => Err((EXIT_USAGE, "exactly one of --graph6 or --family is required".into())),
    }
}

fn runtime_exit(e: &Error) -> u8 {
    match e {
        Error::Graph6 { .. } | Error::InvalidParameter(_) => EXIT_USAGE,
        _ => EXIT_RUNTIME,
    }
}

fn emit(format: Format, json: serde_json::Value, text: String) {
    match format {
        Format::Json => println!("{json}"),
        Format::Text => println!("{text}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let workers = cli.workers.or_else(|| {
        std::env::var("ALPHA_SPECTRA_WORKERS").ok().and_then(|v| v.parse().ok())
    });
    #[cfg(feature = "parallel")]
    if let Some(w) = workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = workers;

    match run(cli) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, (u8, String)> {
    match cli.command {
        Command::Radius { input, alpha } => {
            let af = parse_loose_alpha(&alpha).map_err(|e| (EXIT_USAGE, e))?;
            match load_graph(&input)? {
                InputGraph::Plain(g) => {
                    let rho = spectral::rho_alpha(&g, af).map_err(|e| (runtime_exit(&e), e.to_string()))?;
                    emit(
                        cli.format,
                        serde_json::json!({ "alpha": af, "rho": format!("{rho:.12e}") }),
                        format!("rho_alpha = {rho:.12}"),
                    );
                }
                InputGraph::Family(spec) => {
                    let full = verifier::rho_family_full(&spec, af)
                        .map_err(|e| (runtime_exit(&e), e.to_string()))?;
                    let quot = verifier::rho_family_quotient(&spec, af)
                        .map_err(|e| (runtime_exit(&e), e.to_string()))?;
                    emit(
                        cli.format,
                        serde_json::json!({
                            "alpha": af,
                            "rho_full": format!("{full:.12e}"),
                            "rho_quotient": format!("{quot:.12e}"),
                        }),
                        format!("rho_alpha = {full:.12} (full), {quot:.12} (quotient)"),
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bind { input } => {
            let g = match load_graph(&input)? {
                InputGraph::Plain(g) => g,
                InputGraph::Family(spec) => spec.build(),
            };
            let r = binding::binding_number(&g).map_err(|e| (runtime_exit(&e), e.to_string()))?;
            let witness: Vec<usize> = r.witness.iter().collect();
            emit(
                cli.format,
                serde_json::json!({
                    "bind": format!("{}/{}", r.value.numer(), r.value.denom()),
                    "witness": witness,
                }),
                format!("bind = {}/{} witness {witness:?}", r.value.numer(), r.value.denom()),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Matching { input } => {
            let g = match load_graph(&input)? {
                InputGraph::Plain(g) => g,
                InputGraph::Family(spec) => spec.build(),
            };
            let m = matching::max_matching(&g);
            emit(
                cli.format,
                serde_json::json!({
                    "size": m.size(),
                    "perfect": m.is_perfect(),
                    "edges": m.edges(),
                }),
                format!("matching number {} perfect {}", m.size(), m.is_perfect()),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { family, alpha } => {
            let spec = parse_family(&family).map_err(|e| (EXIT_USAGE, e))?;
            let af = parse_loose_alpha(&alpha).map_err(|e| (EXIT_USAGE, e))?;
            let g = spec.build();
            let m = spectral::alpha_matrix(&g, af).map_err(|e| (runtime_exit(&e), e.to_string()))?;
            let p = spectral::Partition::new(g.n(), spec.layout_cells())
                .map_err(|e| (runtime_exit(&e), e.to_string()))?;
            let q = spectral::quotient(&m.matrix, &p).map_err(|e| (runtime_exit(&e), e.to_string()))?;
            let r = q.matrix.order();
            let rows: Vec<Vec<f64>> =
                (0..r).map(|i| (0..r).map(|j| q.matrix.get(i, j)).collect()).collect();
            let top = spectral::quotient_largest_eigenvalue(&q)
                .map_err(|e| (runtime_exit(&e), e.to_string()))?;
            let equitable = spectral::is_equitable(&m.matrix, &p);
            emit(
                cli.format,
                serde_json::json!({
                    "cells": q.cell_sizes,
                    "matrix": rows,
                    "equitable": equitable,
                    "largest_eigenvalue": format!("{top:.12e}"),
                }),
                format!("quotient {rows:?}\ncells {:?} equitable {equitable}\nlargest eigenvalue {top:.12}", q.cell_sizes),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Threshold { alpha } => {
            let a = parse_exact_alpha(&alpha).map_err(|e| (EXIT_USAGE, e))?;
            let t = verifier::n_alpha_threshold(a).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            emit(
                cli.format,
                serde_json::json!({ "alpha": format!("{}/{}", a.numer(), a.denom()),
                                    "threshold": format!("{}/{}", t.numer(), t.denom()) }),
                format!("n(alpha) = {t}"),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { what, strict, output } => {
            let report = run_verify(what)?;
            let mut buf = Vec::new();
            report.write_jsonl(&mut buf).map_err(|e| (EXIT_RUNTIME, e.to_string()))?;
            match &output {
                Some(path) => std::fs::write(path, &buf).map_err(|e| (EXIT_RUNTIME, e.to_string()))?,
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(&buf).map_err(|e| (EXIT_RUNTIME, e.to_string()))?;
                }
            }
            let s = report.summary();
            eprintln!("pass {} fail {} inconclusive {}", s.pass, s.fail, s.inconclusive);
            if s.fail > 0 {
                Ok(ExitCode::from(EXIT_VERIFY_FAIL))
            } else if s.inconclusive > 0 && strict {
                Ok(ExitCode::from(EXIT_INCONCLUSIVE))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn run_verify(cmd: VerifyCommand) -> Result<VerificationReport, (u8, String)> {
    match cmd {
        VerifyCommand::Identities => Ok(identities_report()),
        VerifyCommand::Extremal { n, alpha, tol, margin } => {
            let a = parse_exact_alpha(&alpha).map_err(|e| (EXIT_USAGE, e))?;
            let params = TheoremParams::new(n, a, tol, margin).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let mut report =
                verifier::verify_extremal_ordering(&params).map_err(|e| (runtime_exit(&e), e.to_string()))?;
            if n <= binding::BINDING_SCAN_CAP {
                let hyp = verifier::verify_extremal_hypotheses(n)
                    .map_err(|e| (runtime_exit(&e), e.to_string()))?;
                report.merge(hyp);
            }
            Ok(report)
        }
        VerifyCommand::Lemmas { trials, seed } => {
            let mut report = verifier::verify_lemma_2_3(trials, seed);
            report.merge(interlacing_report(trials.min(1000), seed));
            Ok(report)
        }
        VerifyCommand::Scan { alpha, input } => {
            let a = parse_exact_alpha(&alpha).map_err(|e| (EXIT_USAGE, e))?;
            let text = match input {
                Some(path) => std::fs::read_to_string(path).map_err(|e| (EXIT_RUNTIME, e.to_string()))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| (EXIT_RUNTIME, e.to_string()))?;
                    buf
                }
            };
            Ok(verifier::scan_corpus(&text, a))
        }
    }
}

fn push_check(report: &mut VerificationReport, check: symbolic::IdentityCheck) {
    let status = if check.pass {
        verifier::ClaimStatus::Pass
    } else {
        verifier::ClaimStatus::Fail
    };
    let mut rec = verifier::ClaimRecord {
        schema: "v1",
        campaign: report.campaign.clone(),
        claim: check.name,
        status,
        margin: None,
        witness: None,
    };
    rec.witness = Some(serde_json::json!({ "detail": check.detail }));
    report.claims.push(rec);
}

fn identities_report() -> VerificationReport {
    let mut report = VerificationReport::new("symbolic_identities");
    push_check(&mut report, symbolic::verify_eq_3_3());
    push_check(&mut report, symbolic::verify_phi_bstar());
    let (_, f_check) = symbolic::derive_f();
    push_check(&mut report, f_check);
    for c in symbolic::verify_g_h_chain() {
        push_check(&mut report, c);
    }
    for c in symbolic::verify_fprime_half() {
        push_check(&mut report, c);
    }
    for c in symbolic::verify_claim2_margin() {
        push_check(&mut report, c);
    }
    let (_, _, hp_check) = symbolic::derive_h_prime();
    push_check(&mut report, hp_check);
    for c in symbolic::display_discrepancies() {
        push_check(&mut report, c);
    }
    report
}

fn interlacing_report(trials: usize, seed: u64) -> VerificationReport {
    use rand::{Rng, SeedableRng};
    let mut report = VerificationReport::new("lemma_interlacing");
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x1d);
    let mut failures = 0usize;
    for _ in 0..trials {
        let n = rng.gen_range(4..=12);
        let mut m = spectral::DenseMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-5.0..5.0);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        let t = rng.gen_range(1..n);
        let mut rows: Vec<usize> = (0..n).collect();
        for i in (1..rows.len()).rev() {
            rows.swap(i, rng.gen_range(0..=i));
        }
        rows.truncate(t);
        rows.sort_unstable();
        if !spectral::interlacing_check(&m, &rows).unwrap_or(false) {
            failures += 1;
        }
    }
    report.claims.push(if failures == 0 {
        verifier::ClaimRecord {
            schema: "v1",
            campaign: report.campaign.clone(),
            claim: format!("interlacing_{trials}_random_matrices"),
            status: verifier::ClaimStatus::Pass,
            margin: None,
            witness: None,
        }
    } else {
        verifier::ClaimRecord {
            schema: "v1",
            campaign: report.campaign.clone(),
            claim: format!("interlacing_{trials}_random_matrices"),
            status: verifier::ClaimStatus::Fail,
            margin: None,
            witness: Some(serde_json::json!({ "failures": failures })),
        }
    });
    report
}
