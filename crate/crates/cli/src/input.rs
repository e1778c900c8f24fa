//! Job descriptions from command-line flags or JSON documents.

use num_complex::Complex64;
use satake_core::exactmath::{parse_rational, Polynomial, Rational};
use satake_core::invariants::{IgusaInvariants, SiegelForms};
use satake_core::satake::PowerSums;
use serde_json::{Map, Value};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Kummer1,
    Kummer23,
    Alternate,
    AlternateFtheory,
    Standard,
}

impl Model {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "kummer1" => Model::Kummer1,
            "kummer23" => Model::Kummer23,
            "alternate" => Model::Alternate,
            "alternate-ftheory" => Model::AlternateFtheory,
            "standard" => Model::Standard,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::Kummer1 => "kummer1",
            Model::Kummer23 => "kummer23",
            Model::Alternate => "alternate",
            Model::AlternateFtheory => "alternate-ftheory",
            Model::Standard => "standard",
        }
    }
}

#[derive(Debug, Clone)]
pub enum Point {
    Rosenhain([Rational; 3]),
    Sextic(Polynomial<Rational>),
    Igusa(IgusaInvariants),
    Siegel(SiegelForms),
    PowerSums(PowerSums),
}

#[derive(Debug, Clone, Default)]
pub struct Job {
    pub point: Option<Point>,
    pub tau: Option<[f64; 6]>,
    pub theta_values: Option<[Complex64; 10]>,
    /// A Satake sextic supplied by the caller, ascending coefficients.
    pub claim: Option<Polynomial<Rational>>,
    pub tol: Option<f64>,
    pub theta_radius: Option<u32>,
    pub model: Option<Model>,
}

const POINT_FIELDS: [&str; 5] = ["rosenhain", "sextic", "igusa", "siegel", "power_sums"];
const FIELDS: [&str; 11] = [
    "rosenhain",
    "sextic",
    "igusa",
    "siegel",
    "power_sums",
    "tau",
    "theta_values",
    "claim",
    "tol",
    "theta_radius",
    "model",
];

fn schema(pointer: String, message: impl Into<String>) -> Failure {
    Failure::Schema {
        pointer,
        message: message.into(),
    }
}

fn rational_at(v: &Value, ptr: &str) -> Result<Rational, Failure> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| schema(ptr.into(), e.to_string())),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            parse_rational(&n.to_string()).map_err(|e| schema(ptr.into(), e.to_string()))
        }
        Value::Number(_) => Err(schema(
            ptr.into(),
            "exact fields take integers or \"p/q\" strings, not floats",
        )),
        _ => Err(schema(ptr.into(), "expected a rational")),
    }
}

fn float_at(v: &Value, ptr: &str) -> Result<f64, Failure> {
    let x = match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => s.trim().parse::<f64>().ok(),
        _ => None,
    };
    match x {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(schema(ptr.into(), "expected a finite number")),
    }
}

fn array_at<'a>(v: &'a Value, ptr: &str, len: Option<usize>) -> Result<&'a Vec<Value>, Failure> {
    let a = v
        .as_array()
        .ok_or_else(|| schema(ptr.into(), "expected an array"))?;
    if let Some(n) = len {
        if a.len() != n {
            return Err(schema(
                ptr.into(),
                format!("expected {n} entries, found {}", a.len()),
            ));
        }
    }
    Ok(a)
}

fn rationals<const N: usize>(v: &Value, ptr: &str) -> Result<[Rational; N], Failure> {
    let a = array_at(v, ptr, Some(N))?;
    let mut out = Vec::with_capacity(N);
    for (i, x) in a.iter().enumerate() {
        out.push(rational_at(x, &format!("{ptr}/{i}"))?);
    }
    Ok(out.try_into().expect("length checked"))
}

fn rational_list(v: &Value, ptr: &str) -> Result<Vec<Rational>, Failure> {
    let a = array_at(v, ptr, None)?;
    a.iter()
        .enumerate()
        .map(|(i, x)| rational_at(x, &format!("{ptr}/{i}")))
        .collect()
}

fn parse_point(key: &str, v: &Value, ptr: &str) -> Result<Point, Failure> {
    Ok(match key {
        "rosenhain" => Point::Rosenhain(rationals::<3>(v, ptr)?),
        "igusa" => {
            let [i2, i4, i6, i10] = rationals::<4>(v, ptr)?;
            Point::Igusa(IgusaInvariants::new(i2, i4, i6, i10))
        }
        "siegel" => {
            let [a, b, c, d] = rationals::<4>(v, ptr)?;
            Point::Siegel(SiegelForms::new(a, b, c, d))
        }
        "power_sums" => {
            let [s2, s3, s5, s6] = rationals::<4>(v, ptr)?;
            Point::PowerSums(PowerSums::from_free(s2, s3, s5, s6))
        }
        "sextic" => {
            let c = rational_list(v, ptr)?;
            if !(6..=7).contains(&c.len()) {
                return Err(schema(
                    ptr.into(),
                    "a quintic or sextic takes 6 or 7 ascending coefficients",
                ));
            }
            Point::Sextic(Polynomial::new(c))
        }
        _ => unreachable!("not a point field"),
    })
}

/// Parses one job object; `base` is the JSON pointer of the object itself.
pub fn parse_job(v: &Value, base: &str) -> Result<Job, Failure> {
    let obj: &Map<String, Value> = v
        .as_object()
        .ok_or_else(|| schema(base.to_string(), "expected an object"))?;
    for k in obj.keys() {
        if !FIELDS.contains(&k.as_str()) {
            return Err(schema(format!("{base}/{k}"), "unknown field"));
        }
    }
    let mut job = Job::default();
    let present: Vec<&str> = POINT_FIELDS
        .iter()
        .copied()
        .filter(|k| obj.contains_key(*k))
        .collect();
    if present.len() > 1 {
        return Err(schema(
            format!("{base}/{}", present[1]),
            format!("only one of {} may be given", POINT_FIELDS.join(", ")),
        ));
    }
    if let Some(k) = present.first() {
        job.point = Some(parse_point(k, &obj[*k], &format!("{base}/{k}"))?);
    }
    if let Some(t) = obj.get("tau") {
        let ptr = format!("{base}/tau");
        let a = array_at(t, &ptr, Some(6))?;
        let mut out = [0.0; 6];
        for (i, x) in a.iter().enumerate() {
            out[i] = float_at(x, &format!("{ptr}/{i}"))?;
        }
        job.tau = Some(out);
    }
    if let Some(t) = obj.get("theta_values") {
        let ptr = format!("{base}/theta_values");
        let a = array_at(t, &ptr, Some(10))?;
        let mut out = [Complex64::new(0.0, 0.0); 10];
        for (i, x) in a.iter().enumerate() {
            let p = format!("{ptr}/{i}");
            let pair = array_at(x, &p, Some(2))?;
            out[i] = Complex64::new(
                float_at(&pair[0], &format!("{p}/0"))?,
                float_at(&pair[1], &format!("{p}/1"))?,
            );
        }
        job.theta_values = Some(out);
    }
    if job.tau.is_some() && job.theta_values.is_some() {
        return Err(schema(
            format!("{base}/theta_values"),
            "give either tau or theta_values",
        ));
    }
    if let Some(c) = obj.get("claim") {
        let ptr = format!("{base}/claim");
        let c = rational_list(c, &ptr)?;
        if c.len() != 7 {
            return Err(schema(
                ptr,
                "a Satake sextic takes 7 ascending coefficients",
            ));
        }
        job.claim = Some(Polynomial::new(c));
    }
    if let Some(t) = obj.get("tol") {
        let ptr = format!("{base}/tol");
        let t = float_at(t, &ptr)?;
        if t <= 0.0 {
            return Err(schema(ptr, "tolerance must be positive"));
        }
        job.tol = Some(t);
    }
    if let Some(r) = obj.get("theta_radius") {
        let ptr = format!("{base}/theta_radius");
        match r.as_u64() {
            Some(n) if (1..=1000).contains(&n) => job.theta_radius = Some(n as u32),
            _ => return Err(schema(ptr, "theta radius must be an integer in 1..=1000")),
        }
    }
    if let Some(m) = obj.get("model") {
        let ptr = format!("{base}/model");
        let s = m
            .as_str()
            .ok_or_else(|| schema(ptr.clone(), "expected a string"))?;
        job.model = Some(Model::parse(s).ok_or_else(|| {
            schema(
                ptr,
                "model must be kummer1, kummer23, alternate, alternate-ftheory or standard",
            )
        })?);
    }
    Ok(job)
}

/// Comma-separated flag value as a JSON array of strings.
pub fn split_flag(s: &str) -> Value {
    Value::Array(
        s.split(',')
            .map(|p| Value::String(p.trim().to_string()))
            .collect(),
    )
}

/// Ten `re,im` pairs from a flat comma-separated list.
pub fn pairs_flag(s: &str) -> Value {
    let parts: Vec<Value> = s
        .split(',')
        .map(|p| Value::String(p.trim().to_string()))
        .collect();
    if !parts.len().is_multiple_of(2) {
        // keep the odd length visible to the schema check
        return Value::Array(parts);
    }
    Value::Array(parts.chunks(2).map(|c| Value::Array(c.to_vec())).collect())
}
