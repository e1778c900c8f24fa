#![allow(dead_code)]

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use satake_core::exactmath::{rat, Rational};
use satake_core::fibrations::{degeneration_flags, standard_model, FibrationParams};
use satake_core::invariants::{igusa_from_rosenhain, q_polynomial, siegel_from_igusa};

pub const SEED: u64 = 0x5a7a_6e5e;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// A rational with numerator in `[-h, h]` and denominator in `[1, h]`.
pub fn rational(r: &mut impl Rng, h: i64) -> Rational {
    rat(r.gen_range(-h..=h), r.gen_range(1..=h))
}

fn valid(l: &[Rational; 3]) -> bool {
    let zero = rat(0, 1);
    let one = rat(1, 1);
    l.iter().all(|v| *v != zero && *v != one) && l[0] != l[1] && l[0] != l[2] && l[1] != l[2]
}

/// Avoids every special locus the censuses and the map `Phi` care about.
pub fn generic(l: &[Rational; 3]) -> bool {
    if !valid(l) {
        return false;
    }
    // I2 positions of the Kummer quartic fibration: l_i and l_i l_j
    let pos = [
        l[0].clone(),
        l[1].clone(),
        l[2].clone(),
        &l[0] * &l[1],
        &l[0] * &l[2],
        &l[1] * &l[2],
    ];
    for i in 0..6 {
        for j in i + 1..6 {
            if pos[i] == pos[j] {
                return false;
            }
        }
    }
    let inv = igusa_from_rosenhain(l);
    if inv.i2.is_zero() || inv.i4.is_zero() || q_polynomial(&siegel_from_igusa(&inv)).is_zero() {
        return false;
    }
    let p = FibrationParams::from_igusa(&inv);
    let f = degeneration_flags(&p);
    if f.su2_enhancement || f.type_iii || f.so32_enhancement || p.d.is_zero() || p.b.is_zero() {
        return false;
    }
    // the five I1 fibers of the standard model are distinct
    let disc = standard_model(&p).discriminant();
    let rest: Vec<_> = disc.coeffs()[9..].to_vec();
    let rest = satake_core::exactmath::Polynomial::new(rest);
    !rest.coeff(0).is_zero() && rest.is_squarefree()
}

pub fn random_triples(stream: u64, n: usize, h: i64) -> Vec<[Rational; 3]> {
    let mut r = rng(stream);
    let mut out = Vec::new();
    while out.len() < n {
        let l = [
            rational(&mut r, h),
            rational(&mut r, h),
            rational(&mut r, h),
        ];
        if generic(&l) {
            out.push(l);
        }
    }
    out
}

pub fn ints(v: &[i64]) -> [Rational; 3] {
    [rat(v[0], 1), rat(v[1], 1), rat(v[2], 1)]
}
