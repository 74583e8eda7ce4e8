//! Command line front end for `tight-sfs`.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use tight_sfs::classifier::{classify_with, ClassificationReport, ClassifyOptions};
use tight_sfs::seifert::parse_coefficients;
use tight_sfs::slope::parse_rational;
use tight_sfs::snf::smith_normal_form;
use tight_sfs::surgery::{
    h1_order, h1_order_closed_form, pipeline, presentation_matrix, to_integral,
};
use tight_sfs::{convergents, neg_cf, verify_sweep, CfMode, Error, SeifertInvariants};

#[derive(Parser)]
#[command(
    name = "tight-sfs",
    version,
    about = "Count tight contact structures with zero Giroux torsion on M(0; r1, r2, r3, r4)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify, certifying that the lower and upper bounds agree.
    Classify {
        /// Four fiber coefficients, e.g. -1/2,-1/2,-1/2,-3/5.
        #[arg(allow_hyphen_values = true)]
        fibers: String,
        #[arg(long)]
        json: bool,
        /// List every realization vector.
        #[arg(long)]
        enumerate: bool,
        /// Include the convex states and the shirt audit.
        #[arg(long)]
        explain: bool,
    },
    /// Negative continued fraction of a negative rational.
    Cf {
        #[arg(allow_hyphen_values = true)]
        rational: String,
        /// Require every quotient to be at most -2.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Surgery diagrams from the Seifert presentation to the integral plumbing.
    Diagram {
        #[arg(allow_hyphen_values = true)]
        fibers: String,
        #[arg(long)]
        json: bool,
    },
    /// Order of the first homology along the pipeline.
    H1 {
        #[arg(allow_hyphen_values = true)]
        fibers: String,
        #[arg(long)]
        json: bool,
    },
    /// Only the number of tight structures with zero Giroux torsion.
    Count {
        #[arg(allow_hyphen_values = true)]
        fibers: String,
    },
    /// Check both bounds and homology on every tuple with p_i <= N.
    Verify {
        #[arg(long)]
        max_p: i64,
        #[arg(long)]
        json: bool,
    },
}

fn invariants(fibers: &str) -> Result<SeifertInvariants, Error> {
    SeifertInvariants::from_coefficients(&parse_coefficients(fibers)?)
}

fn print_report(r: &ClassificationReport) {
    println!("M(0; {})  e0 = {}", r.input, r.e0);
    for (i, f) in r.fibers.iter().enumerate() {
        let cf: Vec<String> = f.cf.iter().map(i64::to_string).collect();
        println!(
            "  fiber {}: -{}/{} = [{}]  boundary slope {}",
            i + 1,
            f.q,
            f.p,
            cf.join(", "),
            f.normalized_boundary_slope
        );
    }
    println!(
        "tight structures with zero Giroux torsion: {}",
        r.count_zero_torsion
    );
    let b = &r.upper_bound_breakdown;
    let st: Vec<String> = b.solid_torus_counts.iter().map(u128::to_string).collect();
    println!(
        "  upper bound: shirt {} x solid tori {} = {}",
        b.shirt,
        st.join(" x "),
        b.total()
    );
    println!(
        "  bounds equal: {}  distinct Chern classes: {}",
        r.certificates.bounds_equal, r.certificates.distinct_chern
    );
    if !r.realization_vectors.is_empty() {
        println!("realization vectors (central first, chains root to leaf):");
        for v in &r.realization_vectors {
            println!("  {v:?}");
        }
    }
    if let Some(e) = &r.explanation {
        println!("pants states:");
        for (name, state) in &e.pants_states {
            println!("  {name}: {state}");
        }
        println!("shirt pictures:");
        for (n, state) in &e.shirt_pictures {
            println!("  {n}: {state}");
        }
        println!("  torsion: {}", e.torsion_witness);
        let c = &e.census;
        println!(
            "census: {} pairs, pictures {:?}, torsion pairs {}, overtwisted {}, after filter {:?}, classes {:?}",
            c.pairs,
            c.configurations,
            c.torsion_pairs.len(),
            c.overtwisted_pairs,
            c.after_filter,
            c.classes
        );
        let a = &e.shirt_audit;
        println!(
            "shirt audit at s = {}: {} candidates, {} sign matched, {} classes",
            a.s, a.raw, a.sign_matched, a.classes
        );
    }
    println!("{}", r.statements.stein_fillable);
    println!("{}", r.statements.torsion_family);
    println!("{}", r.statements.torsion_not_weakly_fillable);
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Classify {
            fibers,
            json,
            enumerate,
            explain,
        } => {
            let r = classify_with(
                &invariants(&fibers)?,
                ClassifyOptions { enumerate, explain },
            )?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&r).expect("serializable")
                );
            } else {
                print_report(&r);
            }
        }
        Command::Cf {
            rational,
            strict,
            json,
        } => {
            let mode = if strict {
                CfMode::Strict
            } else {
                CfMode::Relaxed
            };
            let cf = neg_cf(parse_rational(&rational)?, mode)?;
            if json {
                let c = convergents(&cf);
                let out = json!({ "coefficients": cf.coeffs(), "convergents": c });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializable")
                );
            } else {
                println!("{cf}");
            }
        }
        Command::Diagram { fibers, json } => {
            let pl = pipeline(&invariants(&fibers)?)?;
            if json {
                let stages: Vec<_> = pl
                    .stages
                    .iter()
                    .map(|d| json!({ "move": d.history.last(), "diagram": d.view() }))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&stages).expect("serializable")
                );
            } else {
                for d in &pl.stages {
                    match d.history.last() {
                        Some(m) => println!("{m}: {d}"),
                        None => println!("start: {d}"),
                    }
                }
            }
        }
        Command::H1 { fibers, json } => {
            let inv = invariants(&fibers)?;
            let pl = pipeline(&inv)?;
            let trace = pl.h1_trace();
            let factors = smith_normal_form(&presentation_matrix(&to_integral(pl.last()))?)
                .invariant_factors();
            let order = h1_order(pl.last());
            let closed = h1_order_closed_form(&inv);
            if json {
                let out = json!({ "order": order, "closed_form": closed, "invariant_factors": factors, "trace": trace });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializable")
                );
            } else {
                let nontrivial: Vec<String> = factors
                    .iter()
                    .filter(|&&f| f != 1)
                    .map(|f| format!("Z/{f}"))
                    .collect();
                println!("|H1| = {order}  ({})", nontrivial.join(" + "));
                println!("closed form: {closed}");
                println!("along the pipeline: {trace:?}");
            }
        }
        Command::Count { fibers } => {
            let r = classify_with(&invariants(&fibers)?, ClassifyOptions::default())?;
            println!("{}", r.count_zero_torsion);
        }
        Command::Verify { max_p, json } => {
            let s = verify_sweep(max_p);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&s).expect("serializable")
                );
            } else {
                println!(
                    "max p {}: {} cases, {} passed, {} failed, {} realization vectors",
                    s.max_p,
                    s.cases,
                    s.passed,
                    s.failures.len(),
                    s.vectors
                );
                for f in &s.failures {
                    println!("  {}: {}", f.input, f.reason);
                }
            }
            if !s.failures.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::UnsupportedRegime { .. } => 3,
                Error::BoundsMismatch { .. } => 1,
                _ => 2,
            })
        }
    }
}
