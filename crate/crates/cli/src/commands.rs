//! One function per subcommand, each returning the fields of the result
//! envelope.

use num_complex::Complex64;
use satake_core::exactmath::{format_rational, Polynomial, Rational};
use satake_core::fibrations::{
    alternate_model, alternate_model_ftheory, classify_fibers, degeneration_flags,
    degeneration_flags_siegel, kumfib2_model, kummer_quartic_model, standard_model, FiberCensus,
    FiberLocation, FibrationParams, WeierstrassModel,
};
use satake_core::invariants::{
    absolute_invariants, chi35_squared, humbert_predicates, igusa_from_rosenhain,
    igusa_from_sextic, igusa_from_siegel, q_polynomial, siegel_from_igusa, AbsoluteInvariants,
    IgusaInvariants, RosenhainCurve, SiegelForms,
};
use satake_core::satake::{
    check_discriminant_identity, fit_power_sum_rescaling, igusa_from_power_sums, phi_map_igusa,
    power_sums_from_igusa, roundtrip, satake_roots, satake_sextic, PowerSums,
};
use satake_core::thetafn::{
    check_frobenius, even_theta_constants, rosenhain_from_theta, satake_from_theta, PeriodMatrix,
    ThetaConstants, DEFAULT_THETA_RADIUS,
};
use satake_core::Error;
use serde_json::{json, Map, Value};

use crate::input::{Job, Model, Point};
use crate::Failure;

pub type Fields = Map<String, Value>;

pub const DEFAULT_ROUNDTRIP_TOL: f64 = 1e-8;
pub const DEFAULT_FROBENIUS_TOL: f64 = 1e-10;

fn q(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn c(z: &Complex64) -> Value {
    json!([z.re, z.im])
}

fn poly(p: &Polynomial<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(q).collect())
}

fn igusa_json(i: &IgusaInvariants) -> Value {
    json!({ "I2": q(&i.i2), "I4": q(&i.i4), "I6": q(&i.i6), "I10": q(&i.i10) })
}

fn absolute_json(j: &AbsoluteInvariants) -> Value {
    json!({ "j1": q(&j.j1), "j2": q(&j.j2), "j3": q(&j.j3) })
}

fn siegel_json(s: &SiegelForms) -> Value {
    json!({ "psi4": q(&s.psi4), "psi6": q(&s.psi6), "chi10": q(&s.chi10), "chi12": q(&s.chi12) })
}

fn missing(field: &str, why: &str) -> Failure {
    Failure::Schema {
        pointer: format!("/{field}"),
        message: why.to_string(),
    }
}

fn point(job: &Job) -> Result<&Point, Failure> {
    job.point.as_ref().ok_or_else(|| {
        missing(
            "rosenhain",
            "a curve is required: one of rosenhain, sextic, igusa, siegel, power_sums",
        )
    })
}

fn igusa_of(p: &Point) -> Result<IgusaInvariants, Failure> {
    Ok(match p {
        Point::Rosenhain(l) => igusa_from_rosenhain(l),
        Point::Sextic(f) => igusa_from_sextic(f)?,
        Point::Igusa(i) => i.clone(),
        Point::Siegel(s) => igusa_from_siegel(s)?,
        Point::PowerSums(ps) => igusa_from_power_sums(ps)?,
    })
}

fn siegel_of(p: &Point) -> Result<SiegelForms, Failure> {
    match p {
        Point::Siegel(s) => Ok(s.clone()),
        other => Ok(siegel_from_igusa(&igusa_of(other)?)),
    }
}

pub fn igusa(job: &Job) -> Result<Fields, Failure> {
    let inv = igusa_of(point(job)?)?;
    let mut m = igusa_json(&inv).as_object().cloned().expect("object");
    m.insert("degenerate".into(), json!(inv.is_degenerate()));
    m.insert(
        "absolute".into(),
        match absolute_invariants(&inv) {
            Ok(j) => absolute_json(&j),
            Err(_) => Value::Null,
        },
    );
    m.insert("siegel".into(), siegel_json(&siegel_from_igusa(&inv)));
    Ok(m)
}

pub fn satake_sextic_cmd(job: &Job) -> Result<Fields, Failure> {
    let p = point(job)?;
    let (ps, inv) = match p {
        Point::PowerSums(ps) => {
            ps.validate()?;
            let inv = match igusa_from_power_sums(ps) {
                Ok(i) => Some(i),
                Err(Error::InversionSingular(_)) => None,
                Err(e) => return Err(e.into()),
            };
            (ps.clone(), inv)
        }
        other => {
            let inv = igusa_of(other)?;
            (power_sums_from_igusa(&inv), Some(inv))
        }
    };
    let f = satake_sextic(&ps)?;
    let mut m = Fields::new();
    let names = ["s1", "s2", "s3", "s4", "s5", "s6"];
    let sums: Map<String, Value> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.to_string(), q(&ps.s[i])))
        .collect();
    m.insert("power_sums".into(), Value::Object(sums));
    m.insert("coefficients".into(), poly(&f));
    m.insert("discriminant".into(), q(&f.discriminant()?));
    match &inv {
        Some(inv) => {
            let rep = check_discriminant_identity(&f, inv)?;
            m.insert("Q".into(), q(&rep.q));
            m.insert("discriminant_identity".into(), json!(rep.holds));
        }
        None => {
            m.insert("Q".into(), Value::Null);
            m.insert("discriminant_identity".into(), Value::Null);
        }
    }
    m.insert(
        "roots".into(),
        Value::Array(satake_roots(&f)?.iter().map(c).collect()),
    );
    if let Some(claim) = &job.claim {
        let inv = inv
            .as_ref()
            .ok_or_else(|| missing("claim", "a claimed sextic needs invertible power sums"))?;
        check_discriminant_identity(claim, inv)?;
        if claim != &f {
            return Err(Error::IdentityViolation(
                "claimed Satake sextic differs from the computed one".into(),
            )
            .into());
        }
        m.insert("claim_verified".into(), json!(true));
    }
    Ok(m)
}

pub fn phi(job: &Job) -> Result<Fields, Failure> {
    let inv = igusa_of(point(job)?)?;
    let r = phi_map_igusa(&inv)?;
    let j = absolute_invariants(&inv)?;
    let p = &r.polynomials;
    let mut m = Fields::new();
    m.insert("j".into(), absolute_json(&j));
    m.insert("j_image".into(), absolute_json(&r.j_image));
    m.insert(
        "polynomials".into(),
        json!({ "q": q(&p.q), "m": q(&p.m), "g1": q(&p.g1), "g2": q(&p.g2), "g3": q(&p.g3) }),
    );
    m.insert("K".into(), q(&r.k));
    m.insert("L".into(), q(&r.l));
    m.insert("M".into(), q(&r.big_m));
    m.insert("Q_source".into(), q(&r.q_source));
    m.insert("Q_image".into(), q(&r.q_image));
    m.insert("N_squared".into(), q(&r.n_squared));
    m.insert("N".into(), r.n.as_ref().map_or(Value::Null, q));
    m.insert("siegel".into(), siegel_json(&r.siegel));
    m.insert("siegel_image".into(), siegel_json(&r.siegel_image));
    Ok(m)
}

fn location_json(l: &FiberLocation) -> Value {
    match l {
        FiberLocation::Rational(r) => json!({ "kind": "rational", "value": q(r) }),
        FiberLocation::Algebraic { poly: p, approx } => {
            json!({ "kind": "algebraic", "poly": poly(p), "approx": c(approx) })
        }
        FiberLocation::Numeric(z) => json!({ "kind": "numeric", "approx": c(z) }),
        FiberLocation::Infinity => json!({ "kind": "infinity" }),
    }
}

fn census_json(census: &FiberCensus) -> Vec<(String, Value)> {
    let fibers: Vec<Value> = census
        .fibers
        .iter()
        .map(|f| {
            json!({
                "type": f.fiber_type.to_string(),
                "location": location_json(&f.location),
                "orders": { "g2": f.orders.g2, "g3": f.orders.g3, "disc": f.orders.disc },
            })
        })
        .collect();
    vec![
        ("fibers".into(), Value::Array(fibers)),
        ("euler_sum".into(), json!(census.euler_sum)),
        ("summary".into(), json!(census.summary())),
    ]
}

pub fn fibration(job: &Job) -> Result<Fields, Failure> {
    let model = job.model.ok_or_else(|| {
        missing(
            "model",
            "choose a model: kummer1, kummer23, alternate, alternate-ftheory, standard",
        )
    })?;
    let p = point(job)?;
    let mut m = Fields::new();
    let w: WeierstrassModel = match model {
        Model::Kummer1 => {
            let Point::Rosenhain(l) = p else {
                return Err(missing("rosenhain", "model kummer1 needs Rosenhain roots"));
            };
            kummer_quartic_model(&RosenhainCurve::new(l.clone())?).jacobian()
        }
        Model::Kummer23 => kumfib2_model(&igusa_of(p)?),
        Model::AlternateFtheory => {
            let s = siegel_of(p)?;
            let f = degeneration_flags_siegel(&s);
            m.insert(
                "degenerations".into(),
                json!({ "su2_enhancement": f.su2_enhancement, "type_iii": f.type_iii, "so32_enhancement": f.so32_enhancement }),
            );
            alternate_model_ftheory(&s)
        }
        Model::Alternate | Model::Standard => {
            let params = FibrationParams::from_igusa(&igusa_of(p)?);
            let f = degeneration_flags(&params);
            m.insert(
                "degenerations".into(),
                json!({ "su2_enhancement": f.su2_enhancement, "type_iii": f.type_iii, "so32_enhancement": f.so32_enhancement }),
            );
            let [a, b, cc, d, e] = params.as_array();
            m.insert(
                "params".into(),
                json!({ "a": q(&a), "b": q(&b), "c": q(&cc), "d": q(&d), "e": q(&e) }),
            );
            if model == Model::Alternate {
                alternate_model(&params)
            } else {
                standard_model(&params)
            }
        }
    };
    m.insert("model".into(), json!(model.name()));
    m.insert("height".into(), json!(w.height));
    m.insert(
        "weierstrass".into(),
        json!({ "A": poly(&w.a), "B": poly(&w.b), "C": poly(&w.c) }),
    );
    let census = classify_fibers(&w)?;
    m.extend(census_json(&census));
    Ok(m)
}

fn complex_abs(j: &AbsoluteInvariants<Complex64>) -> Value {
    json!({ "j1": c(&j.j1), "j2": c(&j.j2), "j3": c(&j.j3) })
}

pub fn roundtrip_cmd(job: &Job) -> Result<Fields, Failure> {
    let Point::Rosenhain(l) = point(job)? else {
        return Err(missing(
            "rosenhain",
            "roundtrip starts from Rosenhain roots",
        ));
    };
    let tol = job.tol.unwrap_or(DEFAULT_ROUNDTRIP_TOL);
    let rt = roundtrip(l)?;
    if !(rt.max_rel_err <= tol) {
        return Err(Failure::Tolerance(format!(
            "reconstructed invariants differ by {:e}, above the tolerance {tol:e}",
            rt.max_rel_err
        )));
    }
    let mut m = Fields::new();
    m.insert("max_rel_err".into(), json!(rt.max_rel_err));
    m.insert("tol".into(), json!(tol));
    m.insert("ordering".into(), json!(rt.ordering));
    m.insert(
        "roots".into(),
        Value::Array(rt.roots.iter().map(c).collect()),
    );
    m.insert(
        "lambda".into(),
        Value::Array(rt.lambda.iter().map(c).collect()),
    );
    m.insert("original".into(), absolute_json(&rt.original));
    m.insert("reconstructed".into(), complex_abs(&rt.reconstructed));
    Ok(m)
}

pub fn theta(job: &Job) -> Result<Fields, Failure> {
    let tol = job.tol.unwrap_or(DEFAULT_FROBENIUS_TOL);
    let mut m = Fields::new();
    let tc = match (&job.tau, &job.theta_values) {
        (Some(t), None) => {
            let radius = job.theta_radius.unwrap_or(DEFAULT_THETA_RADIUS);
            let tau = PeriodMatrix::new(
                Complex64::new(t[0], t[1]),
                Complex64::new(t[2], t[3]),
                Complex64::new(t[4], t[5]),
            )?;
            m.insert("theta_radius".into(), json!(radius));
            even_theta_constants(&tau, radius)?
        }
        (None, Some(v)) => ThetaConstants::from_values(*v),
        _ => {
            return Err(missing(
                "tau",
                "give tau (re1,im1,rez,imz,re2,im2) or theta_values",
            ))
        }
    };
    m.insert(
        "theta".into(),
        Value::Array(tc.theta.iter().map(c).collect()),
    );
    m.insert("max_tail".into(), json!(tc.max_tail));
    m.insert("precision_warning".into(), json!(tc.precision_warning));
    let rep = check_frobenius(&tc, tol);
    m.insert(
        "frobenius".into(),
        json!({
            "identities": rep.identities,
            "reductions": rep.reductions,
            "max_residual": rep.max_residual(),
            "tol": tol,
        }),
    );
    if !rep.passes() {
        return Err(Failure::Tolerance(format!(
            "Frobenius residual {:e} above the tolerance {tol:e}",
            rep.max_residual()
        )));
    }
    let x = satake_from_theta(&tc);
    m.insert(
        "satake".into(),
        json!({
            "x": x.x.iter().map(c).collect::<Vec<_>>(),
            "sum_abs": x.sum().norm(),
            "quartic_defect": x.quartic_defect(),
        }),
    );
    match rosenhain_from_theta(&tc) {
        Ok(l) => {
            let source = power_sums_from_igusa(&igusa_from_rosenhain(&l));
            let fit = fit_power_sum_rescaling(&source, &PowerSums::of_roots(&x.x))?;
            m.insert("rosenhain".into(), Value::Array(l.iter().map(c).collect()));
            m.insert(
                "rescaling".into(),
                json!({ "r2": c(&fit.r2), "residuals": fit.residuals }),
            );
            m.insert("degenerate".into(), Value::Null);
        }
        Err(Error::DegeneratePoint(why)) => {
            m.insert("rosenhain".into(), Value::Null);
            m.insert("rescaling".into(), Value::Null);
            m.insert("degenerate".into(), json!(why));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(m)
}

pub fn predicates(job: &Job) -> Result<Fields, Failure> {
    let s = siegel_of(point(job)?)?;
    let h = humbert_predicates(&s);
    let f = degeneration_flags_siegel(&s);
    let mut m = Fields::new();
    m.insert("siegel".into(), siegel_json(&s));
    m.insert("on_h1".into(), json!(h.on_h1));
    m.insert("on_h4".into(), json!(h.on_h4));
    m.insert("Q".into(), q(&q_polynomial(&s)));
    m.insert("chi35_squared".into(), q(&chi35_squared(&s)));
    m.insert("su2_enhancement".into(), json!(f.su2_enhancement));
    m.insert("type_iii".into(), json!(f.type_iii));
    m.insert("so32_enhancement".into(), json!(f.so32_enhancement));
    Ok(m)
}
