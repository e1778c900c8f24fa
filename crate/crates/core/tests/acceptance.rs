//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{random_triples, rng};
use num_traits::Zero;
use rand::Rng;
use satake_core::exactmath::{pow2_3, rat, rational_sqrt, Complex, Polynomial, Rational};
use satake_core::fibrations::*;
use satake_core::invariants::*;
use satake_core::satake::*;
use satake_core::thetafn::*;
use satake_core::Error;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn triples20() -> Vec<[Rational; 3]> {
    random_triples(101, 20, 50)
}

fn triples10() -> Vec<[Rational; 3]> {
    random_triples(102, 10, 50)
}

fn ac1() -> Check {
    for l in triples20() {
        let inv = igusa_from_rosenhain(&l);
        let f = satake_sextic(&power_sums_from_igusa(&inv)).map_err(e2s)?;
        let disc = f.discriminant().map_err(e2s)?;
        let q = q_polynomial(&siegel_from_igusa(&inv));
        ensure(disc == pow2_3(52, 21) * &q, || {
            format!("{l:?}: disc != 2^52 3^21 Q")
        })?;
        ensure(!q.is_zero(), || format!("{l:?}: Q = 0"))?;
    }
    Ok("20 triples, exact".into())
}

/// `-j2^2 j1 + 6 j2 j3 j1 - 9 j3^2 j1 + j2^3 + 540 j1^2`
fn fifth_root(j: &AbsoluteInvariants) -> Rational {
    let AbsoluteInvariants { j1, j2, j3 } = j;
    let k = |n: i64| rat(n, 1);
    -(j2 * j2 * j1) + k(6) * j2 * j3 * j1 - k(9) * j3 * j3 * j1 + j2 * j2 * j2 + k(540) * j1 * j1
}

fn ac2() -> Check {
    for l in triples20() {
        let inv = igusa_from_rosenhain(&l);
        let j = absolute_invariants(&inv).map_err(e2s)?;
        let res = phi_map(&j).map_err(e2s)?;
        let p = &res.polynomials;
        ensure(!p.q.is_zero(), || format!("{l:?}: q = 0"))?;
        let f = satake_sextic_from_siegel(&siegel_from_igusa(&inv));
        let oracle = absolute_invariants(&igusa_from_sextic(&f).map_err(e2s)?).map_err(e2s)?;
        ensure(res.j_image == oracle, || {
            format!("{l:?}: polynomial and oracle paths differ")
        })?;
        ensure(p.g1 == fifth_root(&j).pow(5), || {
            format!("{l:?}: g1 is not the fifth power")
        })?;
        let q_src = q_polynomial(&siegel_from_igusa(&inv));
        let lhs = &q_src / inv.i2.pow(30);
        let rhs = pow2_3(-63, 0) * &p.q / j.j1.pow(15);
        ensure(lhs == rhs, || format!("{l:?}: Q I2^-30 != 2^-63 j1^-15 q"))?;
    }
    Ok("20 triples, exact".into())
}

fn ac3() -> Check {
    for l in triples20() {
        let inv = igusa_from_rosenhain(&l);
        let res = phi_map_igusa(&inv).map_err(e2s)?;
        // the image forms describe the image curve
        let image = absolute_invariants(&igusa_from_siegel(&res.siegel_image).map_err(e2s)?)
            .map_err(e2s)?;
        ensure(image == res.j_image, || {
            format!("{l:?}: image forms are not at the image point")
        })?;
        let q = q_polynomial(&siegel_from_igusa(&inv));
        let ratio = q_polynomial(&res.siegel_image) / (pow2_3(210, 132) * q.pow(3));
        let n = rational_sqrt(&ratio).ok_or_else(|| format!("{l:?}: ratio is not a square"))?;
        ensure(&n * &n == ratio, || format!("{l:?}: square root check"))?;
    }
    Ok("20 triples, exact".into())
}

fn ac4() -> Check {
    use KodairaType::*;
    let expected: [(&str, Vec<(KodairaType, usize)>); 4] = [
        ("KumFib2", vec![(I(2), 6), (IStar(5), 1), (I(1), 1)]),
        ("alternate", vec![(I(1), 6), (IStar(10), 1), (I(2), 1)]),
        ("standard", vec![(I(1), 5), (IIStar, 1), (IIIStar, 1)]),
        ("Kummer", vec![(I(2), 6), (IStar(0), 2)]),
    ];
    for l in triples10() {
        let inv = igusa_from_rosenhain(&l);
        let p = FibrationParams::from_igusa(&inv);
        let curve = RosenhainCurve::new(l.clone()).map_err(e2s)?;
        let models = [
            kumfib2_model(&inv),
            alternate_model(&p),
            standard_model(&p),
            kummer_quartic_model(&curve).jacobian(),
        ];
        for (m, (name, want)) in models.iter().zip(expected.iter()) {
            let c = classify_fibers(m).map_err(e2s)?;
            ensure(c.is(want) && c.euler_sum == 24, || {
                format!(
                    "{l:?}: {name} census {} (Euler {})",
                    c.summary(),
                    c.euler_sum
                )
            })?;
        }
    }
    Ok("10 triples, 4 models".into())
}

fn ac5() -> Check {
    use KodairaType::*;
    let f = Polynomial::from_i64s(&[-36, 0, 49, 0, -14, 0, 1]);
    let inv = igusa_from_sextic(&f).map_err(e2s)?;
    let s = siegel_from_igusa(&inv);
    ensure(q_polynomial(&s).is_zero(), || "even sextic: Q != 0".into())?;
    let c = classify_fibers(&alternate_model(&FibrationParams::from_igusa(&inv))).map_err(e2s)?;
    ensure(c.is(&[(I(1), 4), (I(2), 2), (IStar(10), 1)]), || {
        format!("even sextic census {}", c.summary())
    })?;

    let base = siegel_from_igusa(&igusa_from_rosenhain(&[rat(2, 1), rat(3, 1), rat(5, 1)]));
    let s0 = SiegelForms::new(
        base.psi4.clone(),
        base.psi6.clone(),
        rat(0, 1),
        base.chi12.clone(),
    );
    let c = classify_fibers(&alternate_model_ftheory(&s0)).map_err(e2s)?;
    ensure(c.counts().get(&IStar(12)) == Some(&1), || {
        format!("chi10 = 0 census {}", c.summary())
    })?;

    for l in random_triples(103, 5, 50) {
        type_iii_identity(&siegel_from_igusa(&igusa_from_rosenhain(&l))).map_err(e2s)?;
    }
    // a point on the type-III locus: solve psi6 from the Siegel expression
    let (psi4, chi10, chi12) = (rat(3, 1), rat(-2, 1), rat(5, 7));
    let psi6 = (rat(27, 1) * chi12.pow(3) - rat(9, 1) * &psi4 * chi10.pow(2) * &chi12)
        / (rat(2, 1) * chi10.pow(3));
    let s3 = SiegelForms::new(psi4, psi6, chi10, chi12);
    type_iii_identity(&s3).map_err(e2s)?;
    let p3 = FibrationParams::from_siegel(&s3).map_err(e2s)?;
    ensure(degeneration_flags(&p3).type_iii, || {
        "type-III flag not raised".into()
    })?;
    let c = classify_fibers(&alternate_model(&p3)).map_err(e2s)?;
    ensure(c.counts().contains_key(&III), || {
        format!("type-III census {}", c.summary())
    })?;
    Ok(format!(
        "even sextic, chi10 = 0, type III ({})",
        c.summary()
    ))
}

fn ac6() -> Check {
    let sub = Polynomial::new(vec![rat(0, 1), rat(-1, 3)]);
    let k729 = Polynomial::constant(rat(729, 1));
    for l in triples10() {
        let inv = igusa_from_rosenhain(&l);
        let p = FibrationParams::from_igusa(&inv);
        let f = satake_sextic_from_siegel(&siegel_from_igusa(&inv));
        let b = &k729 * &kumfib2_model(&inv).b.compose(&sub);
        ensure(b == f, || format!("{l:?}: KumFib2 B(-x/3) differs"))?;
        let disc = alternate_model(&p).discriminant();
        let e = p.e_poly();
        let radicand = disc
            .div_exact(&(&Polynomial::constant(rat(16, 1)) * &(&e * &e)))
            .map_err(e2s)?;
        ensure(&k729 * &radicand.compose(&sub) == f, || {
            format!("{l:?}: alternate radicand differs")
        })?;
        satake_positions(&inv).map_err(e2s)?;
    }
    Ok("10 triples, exact".into())
}

fn random_tau(r: &mut impl Rng) -> PeriodMatrix {
    loop {
        let y1 = r.gen_range(0.8..=2.0);
        let y2 = r.gen_range(0.8..=2.0);
        let y12 = r.gen_range(-0.4..=0.4);
        let re = |r: &mut dyn rand::RngCore| r.gen_range(-0.5..=0.5);
        if let Ok(t) = PeriodMatrix::new(
            Complex::new(re(r), y1),
            Complex::new(re(r), y12),
            Complex::new(re(r), y2),
        ) {
            return t;
        }
    }
}

fn ac7() -> Check {
    let mut r = rng(104);
    let mut worst = [0.0f64; 4];
    let mut used = 0;
    while used < 5 {
        let tau = random_tau(&mut r);
        let tc = even_theta_constants(&tau, DEFAULT_THETA_RADIUS).map_err(e2s)?;
        let lambda = match rosenhain_from_theta(&tc) {
            Ok(l) => l,
            Err(Error::DegeneratePoint(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        used += 1;
        let frob = check_frobenius(&tc, 1e-10);
        let x = satake_from_theta(&tc);
        let sum = x.sum().norm();
        let defect = x.quartic_defect();
        let source = power_sums_from_igusa(&igusa_from_rosenhain(&lambda));
        let fit = fit_power_sum_rescaling(&source, &PowerSums::of_roots(&x.x)).map_err(e2s)?;
        let vals = [frob.max_residual(), sum, defect, fit.max_residual()];
        for (w, v) in worst.iter_mut().zip(vals) {
            *w = w.max(v);
        }
    }
    let [f, s, d, p] = worst;
    let msg = format!("frobenius {f:.1e}, sum {s:.1e}, quartic {d:.1e}, rescaling {p:.1e}");
    ensure(f <= 1e-10 && s <= 1e-12 && d <= 1e-9 && p <= 1e-7, || {
        msg.clone()
    })?;
    Ok(msg)
}

fn ac8() -> Check {
    let mut worst = 0.0f64;
    for l in triples10() {
        let rt = roundtrip(&l).map_err(e2s)?;
        worst = worst.max(rt.max_rel_err);
        ensure(rt.max_rel_err <= 1e-8, || {
            format!("{l:?}: relative error {:.2e}", rt.max_rel_err)
        })?;
    }
    Ok(format!("worst relative error {worst:.1e}"))
}

fn ac9() -> Check {
    for l in triples10() {
        let curve = RosenhainCurve::new(l.clone()).map_err(e2s)?;
        let mut roots = vec![rat(0, 1), rat(1, 1)];
        roots.extend(l.iter().cloned());
        let f = Polynomial::from_roots(&roots);
        let expected: Bivariate = Polynomial::new(vec![
            -f,
            Polynomial::zero(),
            Polynomial::constant(rat(1, 1)),
        ]);
        let lim = sextic_recovery_limit(&curve).map_err(e2s)?;
        ensure(lim == expected, || {
            format!("{l:?}: limit is not eta^2 - F(xi)")
        })?;
    }
    Ok("10 triples, exact".into())
}

fn ac10(others_pass: bool) -> Check {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md"))
        .map_err(|e| format!("README.md: {e}"))?;
    let documented = ["degree 16", "Mordell-Weil", "physics"]
        .iter()
        .all(|k| readme.contains(k));
    ensure(documented, || {
        "README does not document the excluded claims".into()
    })?;
    ensure(others_pass, || "a substitute criterion failed".into())?;
    Ok("excluded claims documented; substitutes 1-9 pass".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check, Duration); 9] = [
        ("discriminant identity", ac1, Duration::from_secs(10)),
        ("Phi dual path", ac2, Duration::from_secs(30)),
        ("perfect square", ac3, Duration::from_secs(10)),
        ("fiber census", ac4, Duration::from_secs(30)),
        ("degenerations", ac5, Duration::from_secs(10)),
        ("Satake positions", ac6, Duration::from_secs(5)),
        ("theta loop", ac7, Duration::from_secs(20)),
        ("round trip", ac8, Duration::from_secs(20)),
        ("sextic recovery", ac9, Duration::from_secs(5)),
    ];
    let mut all = true;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let el = start.elapsed();
        let timed = el <= *budget;
        let ok = out.is_ok() && timed;
        all &= ok;
        let detail = match out {
            Ok(m) => m,
            Err(m) => m,
        };
        let budget_note = if timed {
            String::new()
        } else {
            format!(" over budget {budget:?}")
        };
        println!(
            "AC{} {} {name}: {detail} [{:.2}s{budget_note}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            el.as_secs_f64()
        );
    }
    let out = ac10(all);
    let ok = out.is_ok();
    println!(
        "AC10 {} excluded claims: {}",
        if ok { "PASS" } else { "FAIL" },
        out.unwrap_or_else(|e| e)
    );
    if !(all && ok) {
        std::process::exit(1);
    }
}
