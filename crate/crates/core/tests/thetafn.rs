use std::f64::consts::PI;

use satake_core::exactmath::{rat, Complex, Rational, Scalar};
use satake_core::invariants::igusa_from_rosenhain;
use satake_core::satake::{
    fit_power_sum_rescaling, power_sums_from_igusa, reconstruct_from_satake_roots, PowerSums,
};
use satake_core::thetafn::*;
use satake_core::Error;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// One-variable theta with characteristic `[a; b]`, `a, b` in `{0, 1/2}`.
fn theta1d(a: f64, b: f64, tau: Complex) -> Complex {
    (-40i64..=40)
        .map(|n| {
            let v = n as f64 + a;
            (Complex::new(0.0, PI) * tau * (v * v) + Complex::new(0.0, 2.0 * PI * v * b)).exp()
        })
        .sum()
}

fn product_oracle(ch: ThetaCharacteristic, t1: Complex, t2: Complex) -> Complex {
    let [a1, a2] = ch.a();
    let [b1, b2] = ch.b();
    theta1d(a1, b1, t1) * theta1d(a2, b2, t2)
}

fn generic_tau() -> PeriodMatrix {
    PeriodMatrix::new(c(1.0, 2.0), c(0.0, 1.0 / 3.0), c(0.0, 1.5)).unwrap()
}

#[test]
fn diagonal_values() {
    let tau = PeriodMatrix::diagonal(c(0.0, 1.0), c(0.0, 1.0)).unwrap();
    let v = theta_constant(EVEN_CHARACTERISTICS[0], &tau, 12).unwrap();
    assert!((v.value - c(1.1803406, 0.0)).norm() < 1e-7);
    assert!(!v.precision_warning);
    let ch = ThetaCharacteristic::try_new([0, 0], [1, 1]).unwrap();
    let v = theta_constant(ch, &tau, 12).unwrap();
    assert!((v.value - c(0.8346268, 0.0)).norm() < 1e-7);
    // closed form pi^(1/2) / Gamma(3/4)^2 for the genus-one value, squared
    let gamma34 = 1.225_416_702_465_177_6_f64;
    let g1 = PI.sqrt().sqrt() / gamma34;
    assert!((theta1d(0.0, 0.0, c(0.0, 1.0)).re - g1).abs() < 1e-12);
}

#[test]
fn even_constants_match_products() {
    for (t1, t2) in [
        (c(0.0, 1.0), c(0.0, 1.0)),
        (c(0.0, 1.0), c(0.0, 2.0)),
        (c(0.3, 1.1), c(-0.2, 0.9)),
    ] {
        let tau = PeriodMatrix::diagonal(t1, t2).unwrap();
        let tc = even_theta_constants(&tau, 12).unwrap();
        for (k, ch) in EVEN_CHARACTERISTICS.iter().enumerate() {
            let o = product_oracle(*ch, t1, t2);
            assert!(
                (tc.theta[k] - o).norm() < 1e-12 * o.norm().max(1.0),
                "theta_{}",
                k + 1
            );
        }
    }
}

#[test]
fn odd_constants_vanish() {
    let tau = generic_tau();
    for ch in ODD_CHARACTERISTICS {
        assert!(!ch.is_even());
        assert!(theta_constant(ch, &tau, 10).unwrap().value.norm() < 1e-12);
    }
    assert!(EVEN_CHARACTERISTICS.iter().all(|ch| ch.is_even()));
}

#[test]
fn invalid_inputs() {
    assert!(matches!(
        PeriodMatrix::diagonal(c(0.0, -1.0), c(0.0, 1.0)),
        Err(Error::Domain(_))
    ));
    assert!(PeriodMatrix::new(c(0.0, 1.0), c(0.0, 1.0), c(0.0, 1.0)).is_err());
    assert!(ThetaCharacteristic::try_new([2, 0], [0, 0]).is_err());
    assert!(theta_constant(EVEN_CHARACTERISTICS[0], &generic_tau(), 0).is_err());
}

#[test]
fn small_radius_warns() {
    let tau = PeriodMatrix::diagonal(c(0.0, 0.3), c(0.0, 0.3)).unwrap();
    assert!(
        theta_constant(EVEN_CHARACTERISTICS[0], &tau, 1)
            .unwrap()
            .precision_warning
    );
}

#[test]
fn frobenius_identities() {
    for tau in [
        PeriodMatrix::diagonal(c(0.0, 1.0), c(0.0, 1.0)).unwrap(),
        generic_tau(),
    ] {
        let tc = even_theta_constants(&tau, 12).unwrap();
        let rep = check_frobenius(&tc, 1e-10);
        assert!(rep.passes(), "{rep:?}");
    }
    let mut tc = even_theta_constants(&generic_tau(), 12).unwrap();
    tc.theta[0] += c(1e-3, 0.0);
    assert!(check_frobenius(&tc, 1e-10).max_residual() > 1e-4);
}

#[test]
fn reduction_residuals_vanish_by_construction() {
    let base = [
        c(1.3, 0.1),
        c(0.7, -0.2),
        c(0.9, 0.05),
        c(0.4, 0.3),
        c(0.2, -0.1),
    ];
    let t4 = reduce_fourth_powers(&base);
    let tc = ThetaConstants::from_values(t4.map(|v| v.powf(0.25)));
    let rep = check_frobenius(&tc, 1e-10);
    assert!(
        rep.reductions.iter().all(|r| *r < 1e-14),
        "{:?}",
        rep.reductions
    );
}

#[test]
fn satake_coordinates_by_hand() {
    let t4 = reduce_fourth_powers(&[1, 1, 1, 1, 0].map(|v| rat(v, 1)));
    let x = satake_from_theta4(&t4);
    assert_eq!(x.x, [2, -1, -1, -1, -1, 2].map(|v| rat(v, 1)));
    assert_eq!(x.sum(), rat(0, 1));
    let back = theta4_from_satake(&x);
    assert_eq!(back[0], rat(1, 1));
    assert_eq!(back[..5], t4[..5]);
    let zero = SatakeCoordinates {
        x: std::array::from_fn(|_| rat(0, 1)),
    };
    assert!(theta4_from_satake(&zero).iter().all(|v| *v == rat(0, 1)));
}

#[test]
fn satake_inverse_is_exact() {
    let base: [Rational; 5] = [rat(3, 2), rat(-1, 7), rat(5, 3), rat(2, 9), rat(-4, 5)];
    let t4 = reduce_fourth_powers(&base);
    assert_eq!(theta4_from_satake(&satake_from_theta4(&t4)), t4);
}

#[test]
fn numeric_satake_coordinates() {
    for tau in [
        PeriodMatrix::diagonal(c(0.0, 1.0), c(0.0, 1.0)).unwrap(),
        generic_tau(),
    ] {
        let tc = even_theta_constants(&tau, 12).unwrap();
        let x = satake_from_theta(&tc);
        let scale = x.x.iter().map(|v| v.norm()).fold(0.0, f64::max);
        assert!(x.sum().norm() <= 1e-12 * scale.max(1.0));
        assert!(x.quartic_defect() <= 1e-9);
        let back = theta4_from_satake(&x);
        for (a, b) in back.iter().zip(tc.fourth_powers()) {
            assert!((a - b).norm() <= 1e-12 * scale.max(1.0));
        }
    }
}

#[test]
fn rosenhain_from_product_tau_is_degenerate() {
    let tau = PeriodMatrix::diagonal(c(0.0, 1.0), c(0.0, 1.0)).unwrap();
    let tc = even_theta_constants(&tau, 12).unwrap();
    assert!(matches!(
        rosenhain_from_theta(&tc),
        Err(Error::DegeneratePoint(_))
    ));
}

#[test]
fn rosenhain_paths_agree() {
    let tc = even_theta_constants(&generic_tau(), 12).unwrap();
    let l = rosenhain_from_theta(&tc).unwrap();
    let l4 = rosenhain_from_theta4(&tc.fourth_powers()).unwrap();
    for i in 0..3 {
        assert!((l[i] - l4[i]).norm() <= 1e-9 * l[i].norm().max(1.0));
        assert!((l[i] - c(0.0, 0.0)).norm() > 1e-6 && (l[i] - c(1.0, 0.0)).norm() > 1e-6);
        for j in i + 1..3 {
            assert!((l[i] - l[j]).norm() > 1e-6);
        }
    }
    let x = satake_from_theta(&tc);
    let via_roots = reconstruct_from_satake_roots(&x.x, [0, 1, 2, 3, 4, 5]).unwrap();
    for i in 0..3 {
        let err = (via_roots[i] - l4[i]).norm() / l4[i].norm().max(1.0);
        assert!(err <= 1e-10, "{err:e}");
    }
}

#[test]
fn symmetric_fourth_powers() {
    let t4: [Rational; 10] = std::array::from_fn(|_| rat(3, 1));
    assert_eq!(rosenhain_from_theta4(&t4).unwrap()[0], rat(1, 2));
}

#[test]
fn theta_power_sums_match_lambda_power_sums_up_to_scale() {
    let tc = even_theta_constants(&generic_tau(), 12).unwrap();
    let x = satake_from_theta(&tc);
    let l = rosenhain_from_theta(&tc).unwrap();
    let source = power_sums_from_igusa(&igusa_from_rosenhain(&l));
    let target = PowerSums::of_roots(&x.x);
    let fit = fit_power_sum_rescaling(&source, &target).unwrap();
    assert!(fit.max_residual() <= 1e-7, "{fit:?}");
    assert!(fit.r2.magnitude() > 0.0);
}
