//! Text and JSON rendering shared by the subcommands.
//!
//! JSON objects list every blade in ascending mask order (zeros included)
//! so downstream tools see a fixed shape; text mode drops zero terms.
//! Rational coefficients serialize as `"p/q"` strings to survive any JSON
//! reader untouched; floats serialize as numbers.

use clifford_sylvester::oracle::OracleStatus;
use clifford_sylvester::sylvester::SolveOutcome;
use clifford_sylvester::{BladeIndex, Multivector, Scalar, Signature};
use serde_json::{json, Map, Value};

pub fn scalar_json<S: Scalar>(c: &S) -> Value {
    if S::EXACT {
        Value::String(c.to_string())
    } else {
        serde_json::Number::from_f64(c.to_f64())
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }
}

pub fn multivector_json<S: Scalar>(x: &Multivector<S>) -> Value {
    let mut map = Map::new();
    for mask in x.sig().blade_masks() {
        map.insert(BladeIndex::new(mask).label(), scalar_json(x.coeff(mask)));
    }
    Value::Object(map)
}

pub fn algebra_json(sig: Signature) -> Value {
    json!([sig.p(), sig.q()])
}

pub fn diagnosis_str(status: OracleStatus) -> &'static str {
    match status {
        OracleStatus::Unique => "unique",
        OracleStatus::Underdetermined => "underdetermined",
        OracleStatus::Inconsistent => "inconsistent",
    }
}

pub fn solve_outcome_json<S: Scalar>(sig: Signature, out: &SolveOutcome<S>) -> Value {
    let mut obj = Map::new();
    obj.insert("algebra".into(), algebra_json(sig));
    let status = if out.is_unique() { "unique" } else { "singular" };
    obj.insert("status".into(), json!(status));
    if let Some(method) = out.method {
        obj.insert("method".into(), json!(method.as_str()));
    }
    if let Some(x) = &out.solution {
        obj.insert("x".into(), multivector_json(x));
    }
    if let Some(d) = &out.denominator {
        obj.insert("denominator".into(), multivector_json(d));
    }
    if let Some(diag) = out.diagnosis {
        obj.insert("diagnosis".into(), json!(diagnosis_str(diag)));
    }
    if let Some(nullity) = out.nullity {
        obj.insert("nullity".into(), json!(nullity));
    }
    Value::Object(obj)
}

pub fn print_solve_outcome_text<S: Scalar>(out: &SolveOutcome<S>) {
    if out.is_unique() {
        println!("status: unique");
        if let Some(method) = out.method {
            println!("method: {}", method.as_str());
        }
        println!("x = {}", out.solution.as_ref().expect("unique outcome has a solution"));
        if let Some(d) = &out.denominator {
            println!("denominator = {d}");
        }
    } else {
        println!("status: singular");
        match (out.diagnosis, out.nullity) {
            (Some(diag), Some(nullity)) => {
                println!("diagnosis: {} (nullity {nullity})", diagnosis_str(diag))
            }
            (Some(diag), None) => println!("diagnosis: {}", diagnosis_str(diag)),
            _ => {}
        }
        if let Some(d) = &out.denominator {
            println!("denominator = {d}");
        }
    }
}

/// Machine-readable error object for `--json` mode, printed on stdout.
pub fn print_error(json_mode: bool, kind: &str, message: &str, position: Option<usize>) {
    if json_mode {
        let mut err = Map::new();
        err.insert("kind".into(), json!(kind));
        err.insert("message".into(), json!(message));
        if let Some(p) = position {
            err.insert("position".into(), json!(p));
        }
        println!("{}", json!({ "error": Value::Object(err) }));
    } else {
        eprintln!("error: {message}");
    }
}
