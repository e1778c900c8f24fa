//! Binary forms and transvectants.

use crate::exactmath::Scalar;

/// Binary form `sum a_i x^i y^(n-i)` of degree `n = a.len() - 1`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct BinaryForm<T> {
    pub a: Vec<T>,
}

impl<T: Scalar> BinaryForm<T> {
    pub fn new(a: Vec<T>) -> Self {
        assert!(!a.is_empty());
        BinaryForm { a }
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    fn dx(&self) -> Self {
        if self.degree() == 0 {
            return BinaryForm::new(vec![T::zero()]);
        }
        BinaryForm::new(
            (1..self.a.len())
                .map(|i| self.a[i].clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    fn dy(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return BinaryForm::new(vec![T::zero()]);
        }
        BinaryForm::new(
            (0..n)
                .map(|i| self.a[i].clone() * T::from_i64((n - i) as i64))
                .collect(),
        )
    }

    fn derive(&self, kx: usize, ky: usize) -> Self {
        let mut f = self.clone();
        for _ in 0..kx {
            f = f.dx();
        }
        for _ in 0..ky {
            f = f.dy();
        }
        f
    }

    fn mul(&self, g: &Self) -> Self {
        let mut out = vec![T::zero(); self.a.len() + g.a.len() - 1];
        for (i, a) in self.a.iter().enumerate() {
            for (j, b) in g.a.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm::new(out)
    }

    fn add_scaled(&mut self, g: &Self, c: &T) {
        for (a, b) in self.a.iter_mut().zip(&g.a) {
            *a = a.clone() + c.clone() * b.clone();
        }
    }

    /// The constant of a degree-zero form.
    pub fn value(&self) -> T {
        assert_eq!(self.degree(), 0, "not an invariant");
        self.a[0].clone()
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn binomial(n: usize, k: usize) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(f, g)_k = (m-k)!(n-k)!/(m! n!) sum_i (-1)^i C(k,i) d^k f/dx^(k-i) dy^i * d^k g/dx^i dy^(k-i)`.
pub(crate) fn transvectant<T: Scalar>(
    f: &BinaryForm<T>,
    g: &BinaryForm<T>,
    k: usize,
) -> BinaryForm<T> {
    let (m, n) = (f.degree(), g.degree());
    assert!(k <= m && k <= n);
    let mut acc = BinaryForm::new(vec![T::zero(); m + n - 2 * k + 1]);
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let term = f.derive(k - i, i).mul(&g.derive(i, k - i));
        acc.add_scaled(&term, &T::from_i64(sign * binomial(k, i)));
    }
    let norm =
        T::from_i64(factorial(m - k) * factorial(n - k)) / T::from_i64(factorial(m) * factorial(n));
    BinaryForm::new(acc.a.into_iter().map(|c| c * norm.clone()).collect())
}

/// Clebsch's invariants `A, B, C, D` of a binary sextic.
pub(crate) fn clebsch_invariants<T: Scalar>(f: &BinaryForm<T>) -> [T; 4] {
    assert_eq!(f.degree(), 6);
    let i = transvectant(f, f, 4);
    let delta = transvectant(&i, &i, 2);
    let y1 = transvectant(f, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    [
        transvectant(f, f, 6).value(),
        transvectant(&i, &i, 4).value(),
        transvectant(&i, &delta, 4).value(),
        transvectant(&y3, &y1, 2).value(),
    ]
}
