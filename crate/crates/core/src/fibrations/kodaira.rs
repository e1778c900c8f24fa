//! Kodaira fiber types read off from vanishing orders of `g2`, `g3` and the
//! discriminant.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::WeierstrassModel;
use crate::error::{Error, Result};
use crate::exactmath::{
    complex_roots, to_complex, Complex, Polynomial, Rational, Ring, RootOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    /// `I_n`; `I_0` is a smooth fiber.
    I(usize),
    /// `I_n^*`.
    IStar(usize),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    pub fn euler_number(&self) -> usize {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        let t = match s {
            "II" => KodairaType::II,
            "III" => KodairaType::III,
            "IV" => KodairaType::IV,
            "IV*" => KodairaType::IVStar,
            "III*" => KodairaType::IIIStar,
            "II*" => KodairaType::IIStar,
            _ => {
                let rest = s.strip_prefix('I')?;
                match rest.strip_suffix('*') {
                    Some(n) => KodairaType::IStar(n.parse().ok()?),
                    None => KodairaType::I(rest.parse().ok()?),
                }
            }
        };
        Some(t)
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::II => f.write_str("II"),
            KodairaType::III => f.write_str("III"),
            KodairaType::IV => f.write_str("IV"),
            KodairaType::IVStar => f.write_str("IV*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IIStar => f.write_str("II*"),
        }
    }
}

/// Vanishing orders at a point; `None` stands for an identically zero form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VanishingOrders {
    pub g2: Option<usize>,
    pub g3: Option<usize>,
    pub disc: usize,
}

impl fmt::Display for VanishingOrders {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = |v: Option<usize>| v.map_or("inf".to_string(), |n| n.to_string());
        write!(f, "({}, {}, {})", o(self.g2), o(self.g3), self.disc)
    }
}

/// The Kodaira table. `Ok(None)` means a smooth fiber.
pub fn kodaira_type(orders: VanishingOrders, location: &str) -> Result<Option<KodairaType>> {
    let big = usize::MAX;
    let v2 = orders.g2.unwrap_or(big);
    let v3 = orders.g3.unwrap_or(big);
    let vd = orders.disc;
    let non_minimal = || Error::NonMinimal {
        location: location.to_string(),
        orders: orders.to_string(),
    };
    if v2 >= 4 && v3 >= 6 {
        return Err(non_minimal());
    }
    if vd == 0 {
        return Ok(None);
    }
    let t = match (v2, v3, vd) {
        (0, 0, n) => KodairaType::I(n),
        (a, 1, 2) if a >= 1 => KodairaType::II,
        (1, b, 3) if b >= 2 => KodairaType::III,
        (a, 2, 4) if a >= 2 => KodairaType::IV,
        (a, b, 6) if a >= 2 && b >= 3 => KodairaType::IStar(0),
        (2, 3, n) if n > 6 => KodairaType::IStar(n - 6),
        (a, 4, 8) if a >= 3 => KodairaType::IVStar,
        (3, b, 9) if b >= 5 => KodairaType::IIIStar,
        (a, 5, 10) if a >= 4 => KodairaType::IIStar,
        _ => return Err(non_minimal()),
    };
    Ok(Some(t))
}

#[derive(Debug, Clone, PartialEq)]
pub enum FiberLocation {
    Rational(Rational),
    /// A root of an irreducible-over-the-computation factor of degree > 1;
    /// conjugate roots share `poly`.
    Algebraic {
        poly: Polynomial<Rational>,
        approx: Complex,
    },
    /// Located only numerically.
    Numeric(Complex),
    Infinity,
}

impl fmt::Display for FiberLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberLocation::Rational(r) => write!(f, "t = {r}"),
            FiberLocation::Algebraic { approx, .. } | FiberLocation::Numeric(approx) => {
                write!(f, "t ~ {:.6}{:+.6}i", approx.re, approx.im)
            }
            FiberLocation::Infinity => f.write_str("t = infinity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KodairaFiber {
    pub fiber_type: KodairaType,
    pub location: FiberLocation,
    pub orders: VanishingOrders,
}

/// All singular fibers of a model, one entry per point of the base.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberCensus {
    pub fibers: Vec<KodairaFiber>,
    pub euler_sum: usize,
    pub height: u32,
}

impl FiberCensus {
    pub fn counts(&self) -> BTreeMap<KodairaType, usize> {
        let mut m = BTreeMap::new();
        for f in &self.fibers {
            *m.entry(f.fiber_type).or_insert(0) += 1;
        }
        m
    }

    /// True when the census has exactly these types with these counts.
    pub fn is(&self, expected: &[(KodairaType, usize)]) -> bool {
        let mut want = BTreeMap::new();
        for &(t, n) in expected {
            *want.entry(t).or_insert(0) += n;
        }
        want == self.counts()
    }

    /// `6xI2 + I5* + I1` style summary, most frequent first.
    pub fn summary(&self) -> String {
        let mut items: Vec<_> = self.counts().into_iter().collect();
        items.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        items
            .iter()
            .map(|(t, n)| {
                if *n == 1 {
                    t.to_string()
                } else {
                    format!("{n}x{t}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Splits a squarefree `h` by the vanishing order of `g` at its roots.
fn split_by_order(
    h: &Polynomial<Rational>,
    g: &Polynomial<Rational>,
) -> Result<Vec<(Polynomial<Rational>, Option<usize>)>> {
    if g.degree().is_none() {
        return Ok(vec![(h.clone(), None)]);
    }
    let mut out = Vec::new();
    let mut cur = h.monic();
    let mut deriv = g.clone();
    let mut k = 0;
    while cur.degree().unwrap_or(0) > 0 {
        let common = cur.gcd(&deriv);
        let exact = cur.div_exact(&common)?;
        if exact.degree().unwrap_or(0) > 0 {
            out.push((exact, Some(k)));
        }
        cur = common;
        deriv = deriv.derivative();
        k += 1;
    }
    Ok(out)
}

/// Continued-fraction convergents of the real part, smallest denominators
/// first; each is only a candidate and must be confirmed exactly.
fn rational_candidates(z: Complex) -> Vec<Rational> {
    if z.im.abs() > 1e-6 * z.re.abs().max(1.0) || !z.re.is_finite() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::from(1), BigInt::from(z.re.floor() as i64));
    let (mut k0, mut k1) = (BigInt::from(0), BigInt::from(1));
    let mut frac = z.re - z.re.floor();
    out.push(Rational::new(h1.clone(), k1.clone()));
    for _ in 0..40 {
        if frac.abs() < 1e-13 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let a = BigInt::from(a as i64);
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        out.push(Rational::new(h1.clone(), k1.clone()));
        if k1 > BigInt::from(1_000_000_000_000i64) {
            break;
        }
    }
    out
}

/// Rational roots of a squarefree `h` (found numerically, confirmed exactly)
/// and the remaining cofactor with numeric approximations of its roots.
fn locate_roots(
    h: &Polynomial<Rational>,
) -> Result<(Vec<Rational>, Polynomial<Rational>, Vec<Complex>)> {
    let mut rest = h.monic();
    let mut rational = Vec::new();
    if rest.degree() == Some(1) {
        rational.push(-rest.coeff(0));
        return Ok((
            rational,
            Polynomial::constant(Rational::from_i64(1)),
            Vec::new(),
        ));
    }
    let approx = complex_roots(&rest.map(to_complex), RootOptions::default())?;
    for z in approx {
        for q in rational_candidates(z) {
            if rest.degree().unwrap_or(0) >= 1 && rest.eval(&q) == Rational::from_i64(0) {
                let lin = Polynomial::new(vec![-q.clone(), Rational::from_i64(1)]);
                rest = rest.div_exact(&lin)?;
                rational.push(q);
                break;
            }
        }
    }
    let others = match rest.degree() {
        Some(d) if d >= 1 => complex_roots(&rest.map(to_complex), RootOptions::default())?,
        _ => Vec::new(),
    };
    Ok((rational, rest, others))
}

fn order_at_infinity(p: &Polynomial<Rational>, weight: u32, what: &str) -> Result<Option<usize>> {
    match p.degree() {
        None => Ok(None),
        Some(d) if d as u32 <= weight => Ok(Some(weight as usize - d)),
        Some(d) => Err(Error::domain(format!(
            "{what} has degree {d}, above {weight} allowed by the model height"
        ))),
    }
}

fn location_rank(l: &FiberLocation) -> (u8, f64, f64) {
    match l {
        FiberLocation::Rational(r) => (0, to_complex(r).re, 0.0),
        FiberLocation::Algebraic { approx, .. } => (1, approx.re, approx.im),
        FiberLocation::Numeric(z) => (2, z.re, z.im),
        FiberLocation::Infinity => (3, 0.0, 0.0),
    }
}

fn finish(mut fibers: Vec<KodairaFiber>, height: u32) -> Result<FiberCensus> {
    fibers.sort_by(|a, b| {
        let (ka, xa, ya) = location_rank(&a.location);
        let (kb, xb, yb) = location_rank(&b.location);
        ka.cmp(&kb).then(xa.total_cmp(&xb)).then(ya.total_cmp(&yb))
    });
    let euler_sum: usize = fibers.iter().map(|f| f.fiber_type.euler_number()).sum();
    if euler_sum != 12 * height as usize {
        return Err(Error::violation(format!(
            "Euler numbers sum to {euler_sum}, expected {}",
            12 * height
        )));
    }
    Ok(FiberCensus {
        fibers,
        euler_sum,
        height,
    })
}

/// Exact classification over the rationals, including the fiber at infinity.
pub fn classify_fibers(m: &WeierstrassModel) -> Result<FiberCensus> {
    let (g2, g3) = m.short_form();
    let disc = m.discriminant();
    if disc.degree().is_none() {
        return Err(Error::domain("discriminant vanishes identically"));
    }
    let k = m.height;
    let mut fibers = Vec::new();
    for (piece, vd) in disc.squarefree_decomposition() {
        for (h2, v2) in split_by_order(&piece, &g2)? {
            for (h, v3) in split_by_order(&h2, &g3)? {
                let orders = VanishingOrders {
                    g2: v2,
                    g3: v3,
                    disc: vd,
                };
                let (rational, rest, approx) = locate_roots(&h)?;
                for q in rational {
                    let loc = FiberLocation::Rational(q);
                    if let Some(t) = kodaira_type(orders, &loc.to_string())? {
                        fibers.push(KodairaFiber {
                            fiber_type: t,
                            location: loc,
                            orders,
                        });
                    }
                }
                for z in approx {
                    let loc = FiberLocation::Algebraic {
                        poly: rest.clone(),
                        approx: z,
                    };
                    if let Some(t) = kodaira_type(orders, &loc.to_string())? {
                        fibers.push(KodairaFiber {
                            fiber_type: t,
                            location: loc,
                            orders,
                        });
                    }
                }
            }
        }
    }
    let orders = VanishingOrders {
        g2: order_at_infinity(&g2, 4 * k, "g2")?,
        g3: order_at_infinity(&g3, 6 * k, "g3")?,
        disc: order_at_infinity(&disc, 12 * k, "discriminant")?.expect("nonzero"),
    };
    if let Some(t) = kodaira_type(orders, "t = infinity")? {
        fibers.push(KodairaFiber {
            fiber_type: t,
            location: FiberLocation::Infinity,
            orders,
        });
    }
    finish(fibers, k)
}

/// Sum of the terms with every coefficient that cancels to rounding level
/// relative to the terms set to zero.
fn cancel(terms: &[Polynomial<Complex>]) -> Polynomial<Complex> {
    let n = terms.iter().map(|t| t.coeffs().len()).max().unwrap_or(0);
    let coeffs = (0..n)
        .map(|i| {
            let sum: Complex = terms.iter().map(|t| t.coeff(i)).sum();
            let size = terms.iter().map(|t| t.coeff(i).norm()).fold(0.0, f64::max);
            if sum.norm() <= 1e-11 * size {
                Complex::new(0.0, 0.0)
            } else {
                sum
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Classification of a model with floating-point coefficients: roots of the
/// discriminant closer than `cluster_tol` (relative to the root size) are
/// merged and orders are counted as the number of roots of `g2`, `g3` in the
/// cluster. A root of multiplicity `k` splits by roughly `eps^(1/k)` in
/// double precision, so `cluster_tol` around `1e-5` suits fibers up to `I2`.
pub fn classify_fibers_numeric(
    m: &WeierstrassModel<Complex>,
    cluster_tol: f64,
) -> Result<FiberCensus> {
    let c = |v: f64| Polynomial::constant(Complex::new(v, 0.0));
    let a2 = &m.a * &m.a;
    let g2 = cancel(&[&c(4.0 / 3.0) * &a2, &c(-4.0) * &m.b]);
    let g3 = cancel(&[
        &(&c(4.0 / 3.0) * &m.a) * &m.b,
        &c(-4.0) * &m.c,
        &c(-8.0 / 27.0) * &(&a2 * &m.a),
    ]);
    let disc = cancel(&[g2.pow(3), &c(-27.0) * &g3.pow(2)]);
    let k = m.height;
    let deg = |p: &Polynomial<Complex>| p.degree();
    if deg(&disc).is_none() {
        return Err(Error::domain("discriminant vanishes identically"));
    }
    let roots_of = |p: &Polynomial<Complex>| -> Result<Option<Vec<Complex>>> {
        match p.degree() {
            None => Ok(None),
            Some(0) => Ok(Some(Vec::new())),
            Some(_) => Ok(Some(complex_roots(p, RootOptions::default())?)),
        }
    };
    let d_roots = roots_of(&disc)?.expect("nonzero");
    let r2 = roots_of(&g2)?;
    let r3 = roots_of(&g3)?;
    let mut clusters: Vec<Vec<Complex>> = Vec::new();
    for z in d_roots {
        let tol = cluster_tol * z.norm().max(1.0);
        match clusters
            .iter_mut()
            .find(|c| c.iter().any(|w| (w - z).norm() <= tol))
        {
            Some(c) => c.push(z),
            None => clusters.push(vec![z]),
        }
    }
    let mut fibers = Vec::new();
    for c in clusters {
        let center = c.iter().sum::<Complex>() / c.len() as f64;
        let tol = cluster_tol * center.norm().max(1.0);
        let count = |rs: &Option<Vec<Complex>>| {
            rs.as_ref()
                .map(|v| v.iter().filter(|w| (*w - center).norm() <= tol).count())
        };
        let orders = VanishingOrders {
            g2: count(&r2),
            g3: count(&r3),
            disc: c.len(),
        };
        let loc = FiberLocation::Numeric(center);
        if let Some(t) = kodaira_type(orders, &loc.to_string())? {
            fibers.push(KodairaFiber {
                fiber_type: t,
                location: loc,
                orders,
            });
        }
    }
    let inf = |p: &Polynomial<Complex>, w: u32| -> Result<Option<usize>> {
        match p.degree() {
            None => Ok(None),
            Some(d) if d as u32 <= w => Ok(Some(w as usize - d)),
            Some(_) => Err(Error::domain("degree above the model height")),
        }
    };
    let orders = VanishingOrders {
        g2: inf(&g2, 4 * k)?,
        g3: inf(&g3, 6 * k)?,
        disc: inf(&disc, 12 * k)?.expect("nonzero"),
    };
    if let Some(t) = kodaira_type(orders, "t = infinity")? {
        fibers.push(KodairaFiber {
            fiber_type: t,
            location: FiberLocation::Infinity,
            orders,
        });
    }
    finish(fibers, k)
}
