//! `csylv`: solve a·x + x·b = c in Cl(p,q), invert multivectors, search
//! grade-negation involutions for algebra centers, and verify the printed
//! center formulas.
//!
//! Exit codes: 0 success, 1 usage or parse errors, 2 mathematically
//! signalled failures (singular systems, non-invertible inputs, failed
//! verification).

mod expr;
mod output;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use serde_json::{json, Map, Value};

use clifford_sylvester::center_search::{search, SearchReport, SEARCH_SPACE, SIGN_FLIP_NOTE};
use clifford_sylvester::inversion::{inverse_with, InverseError};
use clifford_sylvester::sylvester::{solve_with, MethodPolicy};
use clifford_sylvester::table1::{check_row_sample, TABLE1};
use clifford_sylvester::{
    GradeNegationMap, Multivector, Rational, Scalar, Signature, DEFAULT_TOLERANCE,
};

use expr::parse_multivector;
use output::{
    algebra_json, multivector_json, print_error, print_solve_outcome_text, solve_outcome_json,
};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_MATH: i32 = 2;

#[derive(Parser)]
#[command(
    name = "csylv",
    version,
    about = "Sylvester equation a*x + x*b = c in Clifford algebras Cl(p,q): closed-form solver, multivector inverses, and involution center search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// b=a special case, then formula A, then formula B, then the oracle
    Auto,
    /// Closed formula with the inverse on the left
    A,
    /// Mirror formula with the inverse on the right
    B,
    /// Exact linear-system solve over the blade coefficients
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScalarArg {
    /// Exact arbitrary-precision rationals (default)
    Rational,
    /// Double-precision floats with tolerance-based singularity checks
    Float,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a*x + x*b = c
    Solve {
        /// Algebra signature as P,Q (e.g. 3,0)
        #[arg(long, value_parser = parse_algebra)]
        algebra: (u32, u32),
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = ScalarArg::Rational)]
        scalar: ScalarArg,
        /// Float-mode singularity tolerance
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Invert a multivector (requires p+q <= 3)
    Inverse {
        #[arg(long, value_parser = parse_algebra)]
        algebra: (u32, u32),
        #[arg(long)]
        a: String,
        #[arg(long, value_enum, default_value_t = ScalarArg::Rational)]
        scalar: ScalarArg,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Classify all grade-negation involutions of Cl(p,q) by the centers they produce
    CenterSearch {
        /// Search every signature with p+q = N
        #[arg(long)]
        n: Option<u32>,
        /// Search a single signature P,Q
        #[arg(long, value_parser = parse_algebra)]
        signature: Option<(u32, u32)>,
        #[arg(long)]
        json: bool,
    },
    /// Check the printed center formulas of the seven solvable algebras on random samples
    VerifyTable1 {
        /// Random samples per algebra
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
}

fn parse_algebra(s: &str) -> Result<(u32, u32), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q (e.g. 3,0), got '{s}'"))?;
    let parse = |v: &str| {
        v.trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid component '{v}' in algebra '{s}'"))
    };
    Ok((parse(p)?, parse(q)?))
}

fn main() {
    // Die quietly like other unix filters when the read end of a pipe goes
    // away, instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Solve { algebra, a, b, c, method, scalar, tolerance, json } => {
            let Some(sig) = signature_or_usage(algebra, json) else { return EXIT_USAGE };
            let tol = tolerance.unwrap_or(DEFAULT_TOLERANCE);
            let policy = match method {
                MethodArg::Auto => MethodPolicy::Auto,
                MethodArg::A => MethodPolicy::FormulaAOnly,
                MethodArg::B => MethodPolicy::FormulaBOnly,
                MethodArg::Oracle => MethodPolicy::OracleOnly,
            };
            if matches!(policy, MethodPolicy::FormulaAOnly | MethodPolicy::FormulaBOnly)
                && sig.n() > 3
            {
                print_error(json, "usage", "closed formulas require p+q <= 3", None);
                return EXIT_USAGE;
            }
            match scalar {
                ScalarArg::Rational => cmd_solve::<Rational>(sig, &a, &b, &c, policy, tol, json),
                ScalarArg::Float => cmd_solve::<f64>(sig, &a, &b, &c, policy, tol, json),
            }
        }
        Command::Inverse { algebra, a, scalar, tolerance, json } => {
            let Some(sig) = signature_or_usage(algebra, json) else { return EXIT_USAGE };
            if sig.n() > 3 {
                print_error(json, "usage", "inverse requires p+q <= 3", None);
                return EXIT_USAGE;
            }
            let tol = tolerance.unwrap_or(DEFAULT_TOLERANCE);
            match scalar {
                ScalarArg::Rational => cmd_inverse::<Rational>(sig, &a, tol, json),
                ScalarArg::Float => cmd_inverse::<f64>(sig, &a, tol, json),
            }
        }
        Command::CenterSearch { n, signature, json } => cmd_center_search(n, signature, json),
        Command::VerifyTable1 { samples, json } => cmd_verify_table1(samples, json),
    }
}

fn signature_or_usage((p, q): (u32, u32), json: bool) -> Option<Signature> {
    match Signature::new(p, q) {
        Ok(sig) => Some(sig),
        Err(e) => {
            print_error(json, "usage", &e.to_string(), None);
            None
        }
    }
}

fn parse_operand<S: Scalar>(
    name: &str,
    text: &str,
    sig: Signature,
    json: bool,
) -> Option<Multivector<S>> {
    match parse_multivector(text, sig) {
        Ok(mv) => Some(mv),
        Err(e) => {
            print_error(json, "parse", &format!("operand {name}: {e}"), Some(e.position));
            None
        }
    }
}

fn cmd_solve<S: Scalar>(
    sig: Signature,
    a_src: &str,
    b_src: &str,
    c_src: &str,
    policy: MethodPolicy,
    tol: f64,
    json: bool,
) -> i32 {
    let Some(a) = parse_operand::<S>("a", a_src, sig, json) else { return EXIT_USAGE };
    let Some(b) = parse_operand::<S>("b", b_src, sig, json) else { return EXIT_USAGE };
    let Some(c) = parse_operand::<S>("c", c_src, sig, json) else { return EXIT_USAGE };

    let out = solve_with(&a, &b, &c, policy, tol);
    if json {
        println!("{}", solve_outcome_json(sig, &out));
    } else {
        print_solve_outcome_text(&out);
    }
    if out.is_unique() {
        EXIT_OK
    } else {
        EXIT_MATH
    }
}

fn cmd_inverse<S: Scalar>(sig: Signature, a_src: &str, tol: f64, json: bool) -> i32 {
    let Some(a) = parse_operand::<S>("a", a_src, sig, json) else { return EXIT_USAGE };
    match inverse_with(&a, tol) {
        Ok(inv) => {
            if json {
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(sig),
                        "status": "ok",
                        "inverse": multivector_json(&inv),
                    })
                );
            } else {
                println!("status: ok");
                println!("inverse = {inv}");
            }
            EXIT_OK
        }
        Err(InverseError::NonInvertible) => {
            if json {
                println!(
                    "{}",
                    json!({ "algebra": algebra_json(sig), "status": "non_invertible" })
                );
            } else {
                println!("status: non_invertible");
            }
            EXIT_MATH
        }
        Err(e) => {
            print_error(json, "internal", &e.to_string(), None);
            EXIT_USAGE
        }
    }
}

fn search_report_json(report: &SearchReport) -> Value {
    let grades = |maps: &[GradeNegationMap]| -> Value {
        Value::Array(maps.iter().map(|m| json!(m.negated_grades())).collect())
    };
    let mut obj = Map::new();
    obj.insert("algebra".into(), algebra_json(report.sig));
    obj.insert("candidates_total".into(), json!(report.candidates_total));
    obj.insert("cen1_only".into(), grades(&report.cen1_only));
    obj.insert("both_centers".into(), grades(&report.both_centers));
    Value::Object(obj)
}

fn format_map_list(maps: &[GradeNegationMap]) -> String {
    if maps.is_empty() {
        return "(none)".into();
    }
    maps.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

fn cmd_center_search(n: Option<u32>, signature: Option<(u32, u32)>, json: bool) -> i32 {
    let sigs: Vec<Signature> = match (n, signature) {
        (Some(n), None) => {
            let sigs = Signature::all_with_dimension(n);
            if sigs.is_empty() {
                print_error(json, "usage", &format!("no supported signatures with p+q = {n}"), None);
                return EXIT_USAGE;
            }
            sigs
        }
        (maybe_n, Some(pq)) => {
            let Some(sig) = signature_or_usage(pq, json) else { return EXIT_USAGE };
            if let Some(n) = maybe_n {
                if n != sig.n() {
                    print_error(json, "usage", &format!("--n {n} contradicts --signature {sig}"), None);
                    return EXIT_USAGE;
                }
            }
            vec![sig]
        }
        (None, None) => {
            print_error(json, "usage", "pass --n N and/or --signature P,Q", None);
            return EXIT_USAGE;
        }
    };

    let reports: Vec<SearchReport> = sigs.into_iter().map(search).collect();
    if json {
        println!(
            "{}",
            json!({
                "search_space": SEARCH_SPACE,
                "sign_flip_note": SIGN_FLIP_NOTE,
                "reports": reports.iter().map(search_report_json).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("search space: {SEARCH_SPACE}");
        println!("note: {SIGN_FLIP_NOTE}");
        for r in &reports {
            println!("{}: {} candidates", r.sig, r.candidates_total);
            println!("  cen1 central for all a: {}", format_map_list(&r.cen1_only));
            println!("  both centers:           {}", format_map_list(&r.both_centers));
        }
    }
    EXIT_OK
}

fn cmd_verify_table1(samples: usize, json: bool) -> i32 {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0xC11F);
    let mut rows = Vec::new();
    let mut all_pass = true;
    for row in &TABLE1 {
        let sig = row.sig();
        let mut cen1_ok = true;
        let mut cen2_ok = true;
        let mut central_ok = true;
        for _ in 0..samples {
            let terms: Vec<(usize, i64)> =
                sig.blade_masks().map(|m| (m, rng.gen_range(-9..=9))).collect();
            let a = Multivector::<Rational>::from_terms(sig, &terms);
            let check = check_row_sample(row, &a);
            cen1_ok &= check.cen1_matches;
            cen2_ok &= check.cen2_matches;
            central_ok &= check.cen1_central && check.cen2_central;
        }
        let pass = cen1_ok && cen2_ok && central_ok;
        all_pass &= pass;
        if json {
            rows.push(json!({
                "algebra": algebra_json(sig),
                "cen1": cen1_ok,
                "cen2": cen2_ok,
                "central": central_ok,
                "pass": pass,
            }));
        } else {
            let flag = |ok: bool| if ok { "ok" } else { "FAIL" };
            println!(
                "{sig}: cen1 {}, cen2 {}, centrality {} ({samples} samples)  {}",
                flag(cen1_ok),
                flag(cen2_ok),
                flag(central_ok),
                if pass { "PASS" } else { "FAIL" }
            );
        }
    }
    if json {
        println!("{}", json!({ "samples": samples, "rows": rows, "pass": all_pass }));
    } else if all_pass {
        println!("all {} rows pass", TABLE1.len());
    } else {
        println!("verification FAILED");
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_MATH
    }
}
