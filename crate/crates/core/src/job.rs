//! JSON job files and reports for the command-line tool.
//!
//! A job is `{"command": ..., "payload": {...}, "seed": u64?, "mode": ...?}`.
//! The payload is validated against the command's schema before anything is
//! computed. Reports are JSON objects with sorted keys; exact values are
//! written as decimal strings, and wall-clock time only appears in
//! `timing_ms`.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cube::{delta, edges, epsilon_ij, graded_exchange_sign, CubeDocument, ObjectDocument};
use crate::error::{Error, Result};
use crate::euler::{intersection_number, koszul_length, ChiFunction, DegreeVector};
use crate::groebner::{MonomialOrder, QuotientAlgebra};
use crate::poly::{parse_polynomial, Rational};
use crate::resultant::{resultant, Mode, SystemFile};
use crate::selftest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Resultant,
    Intersection,
    Norm,
    CubeVerify,
    Selftest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default)]
    pub payload: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidJob(e.to_string()))
    }
}

/// Overrides from the command line; these win over the job file.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub mode: Option<Mode>,
    pub seed: Option<u64>,
}

/// Projective space (`n`) or a product of projective spaces (`product`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectionPayload {
    #[serde(default)]
    pub n: Option<u32>,
    #[serde(default)]
    pub product: Option<Vec<u32>>,
    pub degrees: Vec<DegreeVector>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormPayload {
    pub n_vars: usize,
    pub ideal: Vec<String>,
    pub element: String,
    #[serde(default)]
    pub order: MonomialOrder,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeVerifyPayload {
    pub cube: CubeDocument,
    /// Dimension of the projective space whose Euler characteristic is used
    /// for the `epsilon_ij` table; omitted means no table.
    #[serde(default)]
    pub chi_dimension: Option<u32>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelftestPayload {
    #[serde(default)]
    pub properties: Option<Vec<String>>,
}

/// Default seed of randomized suites when neither job nor flags give one.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub document: Value,
    pub exit_code: i32,
}

impl Report {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.document).expect("report serializes");
        s.push('\n');
        s
    }

    /// The report with `timing_ms` removed, for reproducibility checks.
    pub fn without_timing(&self) -> Value {
        let mut v = self.document.clone();
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timing_ms");
        }
        v
    }
}

/// `{"value": "p/q", "numerator": "p", "denominator": "q"}`.
pub fn rational_json(r: &Rational) -> Value {
    json!({
        "value": r.to_string(),
        "numerator": r.numer().to_string(),
        "denominator": r.denom().to_string(),
    })
}

fn payload<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    let v = if v.is_null() { json!({}) } else { v.clone() };
    serde_json::from_value(v).map_err(|e| Error::InvalidJob(format!("payload: {e}")))
}

/// Runs a job file's contents; malformed JSON becomes an input-error report.
pub fn run_text(text: &str, opts: RunOptions) -> Report {
    match JobSpec::from_json(text) {
        Ok(job) => run(&job, opts),
        Err(e) => error_report(None, &Value::Null, None, &e, 0.0),
    }
}

pub fn run(job: &JobSpec, opts: RunOptions) -> Report {
    let start = Instant::now();
    let seed = opts.seed.or(job.seed);
    let outcome = execute(job, opts.mode.or(job.mode).unwrap_or_default(), seed);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok((result, passed)) => {
            let mut doc = json!({
                "command": job.command,
                "input": job.payload,
                "status": if passed { "ok" } else { "failed" },
                "result": result,
                "timing_ms": ms,
            });
            if job.command == Command::Selftest {
                doc["seed"] = json!(seed.unwrap_or(DEFAULT_SEED));
            } else if let Some(s) = seed {
                doc["seed"] = json!(s);
            }
            Report {
                document: doc,
                exit_code: if passed { 0 } else { 1 },
            }
        }
        Err(e) => error_report(Some(job.command), &job.payload, seed, &e, ms),
    }
}

fn error_report(
    command: Option<Command>,
    input: &Value,
    seed: Option<u64>,
    e: &Error,
    ms: f64,
) -> Report {
    let mut doc = json!({
        "command": command,
        "input": input,
        "status": "error",
        "error": { "type": e.kind_name(), "message": e.to_string() },
        "timing_ms": ms,
    });
    if let Some(s) = seed {
        doc["seed"] = json!(s);
    }
    Report {
        document: doc,
        exit_code: if e.is_input_error() { 2 } else { 1 },
    }
}

/// Returns the result document and whether it counts as success.
fn execute(job: &JobSpec, mode: Mode, seed: Option<u64>) -> Result<(Value, bool)> {
    match job.command {
        Command::Resultant => {
            let file: SystemFile = payload(&job.payload)?;
            let sys = file.to_system()?;
            let v = resultant(&sys, mode)?;
            Ok((
                json!({
                    "mode": mode,
                    "method": v.method,
                    "degrees": sys.degrees(),
                    "degrees_certificate": v.degrees_certificate,
                    "value": rational_json(&v.value),
                }),
                true,
            ))
        }
        Command::Intersection => {
            let p: IntersectionPayload = payload(&job.payload)?;
            let chi = match (&p.n, &p.product) {
                (Some(n), None) => ChiFunction::projective(*n),
                (None, Some(dims)) => ChiFunction::projective_product(dims.clone()),
                _ => {
                    return Err(Error::InvalidJob(
                        "exactly one of \"n\" and \"product\" is required".into(),
                    ))
                }
            };
            if p.degrees.is_empty() {
                return Err(Error::InvalidJob("\"degrees\" must not be empty".into()));
            }
            let value = intersection_number(&chi, &p.degrees)?;
            let mut result = json!({ "value": rational_json(&value) });
            // monomial regular sequence witness on P^n
            if let Some(n) = p.n {
                let ds: Option<Vec<u32>> = p
                    .degrees
                    .iter()
                    .map(|d| u32::try_from(d.0[0]).ok().filter(|&x| x >= 1))
                    .collect();
                if let (true, Some(ds)) = (p.degrees.len() == n as usize, ds) {
                    result["koszul_length"] = json!(koszul_length(&ds));
                }
            }
            Ok((result, true))
        }
        Command::Norm => {
            let p: NormPayload = payload(&job.payload)?;
            let gens = p
                .ideal
                .iter()
                .map(|s| parse_polynomial(s, p.n_vars))
                .collect::<Result<Vec<_>>>()?;
            let element = parse_polynomial(&p.element, p.n_vars)?;
            let alg = QuotientAlgebra::from_generators(&gens, p.order)?;
            let value = alg.norm(&element)?;
            Ok((
                json!({
                    "order": p.order,
                    "groebner_basis": alg.groebner_basis().generators().iter().map(|g| g.to_text()).collect::<Vec<_>>(),
                    "basis": alg.basis().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "dimension": alg.dimension(),
                    "value": rational_json(&value),
                }),
                true,
            ))
        }
        Command::CubeVerify => {
            let p: CubeVerifyPayload = payload(&job.payload)?;
            let k = p.cube.to_arrangement()?;
            let d = delta(&k);
            let terms: Vec<Value> = d
                .terms()
                .map(|(o, c)| json!({ "object": ObjectDocument::from_object(o), "coefficient": c }))
                .collect();
            let standard = edges(&k).map(|(l0, es)| {
                json!({
                    "base": ObjectDocument::from_object(&l0),
                    "edges": es.iter().map(ObjectDocument::from_object).collect::<Vec<_>>(),
                })
            });
            let mut result = json!({
                "dimension": k.dimension(),
                "delta": terms,
                "delta_grade": d.grade(),
                "delta_collapsed": ObjectDocument::from_object(&d.collapse()),
                "standard": standard,
            });
            let mut passed = true;
            if let Some(n) = p.chi_dimension {
                let chi = ChiFunction::projective(n);
                result["chi_delta"] = match d.evaluate_chi(&chi) {
                    Ok(v) => rational_json(&v),
                    Err(e) => json!({ "error": e.kind_name() }),
                };
                let graded = k.with_chi_grades(&chi).ok();
                let mut table = Vec::new();
                for i in 0..k.dimension() {
                    for j in i + 1..k.dimension() {
                        let entry = match epsilon_ij(&k, i, j, &chi) {
                            Ok(sign) => {
                                let exchange = graded
                                    .as_ref()
                                    .and_then(|g| graded_exchange_sign(g, i, j).ok());
                                json!({ "i": i, "j": j, "epsilon": sign, "graded_exchange_sign": exchange })
                            }
                            Err(e) => {
                                passed = false;
                                json!({ "i": i, "j": j, "error": e.kind_name(), "message": e.to_string() })
                            }
                        };
                        table.push(entry);
                    }
                }
                result["epsilon_ij"] = Value::Array(table);
            }
            Ok((result, passed))
        }
        Command::Selftest => {
            let p: SelftestPayload = payload(&job.payload)?;
            let report = selftest::run(seed.unwrap_or(DEFAULT_SEED), p.properties.as_deref())?;
            let passed = report.passed();
            let table: BTreeMap<String, Value> = report
                .properties
                .iter()
                .enumerate()
                .map(|(i, pr)| {
                    (
                        format!("{i:02}_{}", pr.name),
                        json!({
                            "passed": pr.passed(),
                            "checked": pr.checked,
                            "failed": pr.failed,
                            "skipped": pr.skipped,
                            "failures": pr.failures,
                        }),
                    )
                })
                .collect();
            Ok((json!({ "passed": passed, "properties": table }), passed))
        }
    }
}
