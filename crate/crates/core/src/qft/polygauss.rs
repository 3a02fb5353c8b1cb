//! Closed-form polynomial × Gaussian functions and their transforms.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::qsignal::{GridSpec, QSignal};
use crate::quaternion::Quaternion;

use super::hermite::{eval_poly, hermite_factor};

/// Real bivariate polynomial `Σ c[m][n] x1^m x2^n`, dense coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2 {
    coeffs: Vec<Vec<f64>>,
}

impl Poly2 {
    /// Rows are powers of `x1`, columns powers of `x2`; ragged rows are
    /// padded with zeros.
    pub fn new(coeffs: Vec<Vec<f64>>) -> Result<Self> {
        if coeffs.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::Argument(
                "polynomial coefficients must be finite".into(),
            ));
        }
        let width = coeffs.iter().map(Vec::len).max().unwrap_or(0);
        let coeffs = coeffs
            .into_iter()
            .map(|mut row| {
                row.resize(width, 0.0);
                row
            })
            .collect();
        Ok(Self { coeffs })
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn monomial(m: usize, n: usize, c: f64) -> Self {
        let mut coeffs = vec![vec![0.0; n + 1]; m + 1];
        coeffs[m][n] = c;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Vec<f64>] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize, n: usize) -> f64 {
        self.coeffs
            .get(m)
            .and_then(|r| r.get(n))
            .copied()
            .unwrap_or(0.0)
    }

    fn add_term(&mut self, m: usize, n: usize, c: f64) {
        if self.coeffs.len() <= m {
            let width = self.coeffs.first().map_or(0, Vec::len);
            self.coeffs.resize(m + 1, vec![0.0; width]);
        }
        if self.coeffs[0].len() <= n {
            for row in &mut self.coeffs {
                row.resize(n + 1, 0.0);
            }
        }
        self.coeffs[m][n] += c;
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(m, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0.0)
                .map(move |(n, &c)| (m, n, c))
        })
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms().map(|(m, n, _)| m + n).max()
    }

    pub fn is_zero(&self) -> bool {
        self.terms().next().is_none()
    }

    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, row| acc * x1 + eval_poly(row, x2))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c * s).collect())
                .collect(),
        }
    }

    /// `P(a x)`.
    pub fn dilate(&self, a: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, row)| {
                row.iter()
                    .enumerate()
                    .map(|(n, &c)| c * a.powi((m + n) as i32))
                    .collect()
            })
            .collect();
        Self { coeffs }
    }
}

/// `P(x) e^{-πα|x|²}` with real `P` and `α > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyGauss {
    poly: Poly2,
    alpha: f64,
}

impl PolyGauss {
    pub fn new(poly: Poly2, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::Argument(format!(
                "Gaussian width must be positive, got {alpha}"
            )));
        }
        Ok(Self { poly, alpha })
    }

    /// `x1^m x2^n e^{-πα|x|²}`.
    pub fn monomial(m: usize, n: usize, alpha: f64) -> Result<Self> {
        Self::new(Poly2::monomial(m, n, 1.0), alpha)
    }

    pub fn gaussian(alpha: f64) -> Result<Self> {
        Self::monomial(0, 0, alpha)
    }

    pub fn poly(&self) -> &Poly2 {
        &self.poly
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        self.poly.eval(x1, x2) * (-PI * self.alpha * (x1 * x1 + x2 * x2)).exp()
    }

    /// `ln |f(x)|`, finite far beyond where `eval` underflows.
    pub fn ln_abs(&self, x1: f64, x2: f64) -> f64 {
        self.poly.eval(x1, x2).abs().ln() - PI * self.alpha * (x1 * x1 + x2 * x2)
    }

    /// Exact point evaluation on a grid.
    pub fn sample(&self, grid: GridSpec) -> QSignal {
        QSignal::from_real_fn(grid, |x1, x2| self.eval(x1, x2))
    }

    /// `x ↦ f(a x)`, again of this form: `P(a x) e^{-π α a² |x|²}`.
    pub fn dilate(&self, a: f64) -> Result<Self> {
        check_dilation(a)?;
        Self::new(self.poly.dilate(a), self.alpha * a * a)
    }
}

/// `Q(ξ) e^{-πγ|ξ|²}` with a quaternion polynomial
/// `Q = Q0 + i Q1 + j Q2 + k Q3`; the transform of a [`PolyGauss`].
#[derive(Debug, Clone, PartialEq)]
pub struct QPolyGauss {
    components: [Poly2; 4],
    gamma: f64,
}

impl QPolyGauss {
    pub fn new(components: [Poly2; 4], gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(Error::Argument(format!(
                "Gaussian width must be positive, got {gamma}"
            )));
        }
        Ok(Self { components, gamma })
    }

    pub fn components(&self) -> &[Poly2; 4] {
        &self.components
    }

    /// Width `γ` in `e^{-πγ|ξ|²}`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn degree(&self) -> Option<usize> {
        self.components.iter().filter_map(Poly2::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly2::is_zero)
    }

    pub fn eval_poly(&self, x1: f64, x2: f64) -> Quaternion {
        let c = &self.components;
        Quaternion::new(
            c[0].eval(x1, x2),
            c[1].eval(x1, x2),
            c[2].eval(x1, x2),
            c[3].eval(x1, x2),
        )
    }

    pub fn eval(&self, x1: f64, x2: f64) -> Quaternion {
        self.eval_poly(x1, x2)
            .scale((-PI * self.gamma * (x1 * x1 + x2 * x2)).exp())
    }

    /// `ln |F(ξ)|_Q`.
    pub fn ln_modulus(&self, x1: f64, x2: f64) -> f64 {
        self.eval_poly(x1, x2).modulus().ln() - PI * self.gamma * (x1 * x1 + x2 * x2)
    }

    pub fn sample(&self, grid: GridSpec) -> QSignal {
        QSignal::from_fn(grid, |x1, x2| self.eval(x1, x2))
    }
}

/// Closed-form two-sided transform of `P(x) e^{-πα|x|²}`.
///
/// Each monomial maps as
/// `x1^m x2^n e^{-πα|x|²} ↦ (2π)^{-(m+n)} i^m ∂^m_{ξ1} ∂^n_{ξ2} [α^{-1} e^{-π|ξ|²/α}] j^n`
/// and `∂^m e^{-πu²/α} = α^{-m/2} P_m(u/√α) e^{-πu²/α}` with the
/// Hermite factors `P_m`. The result has width `1/α` and the same degree.
pub fn qft_polygauss(f: &PolyGauss) -> QPolyGauss {
    let alpha = f.alpha;
    let root = alpha.sqrt();
    let mut components: [Poly2; 4] = std::array::from_fn(|_| Poly2::zero());
    for (m, n, c) in f.poly.terms() {
        let (unit_idx, unit_sign) = unit_of(m, n);
        let scale = c * unit_sign / alpha * (2.0 * PI).powi(-((m + n) as i32));
        let pm = hermite_factor(m);
        let pn = hermite_factor(n);
        for (p, &a) in pm.iter().enumerate().filter(|(_, a)| **a != 0.0) {
            for (q, &b) in pn.iter().enumerate().filter(|(_, b)| **b != 0.0) {
                // P_m(ξ1/√α) contributes a ξ1^p / √α^p; the derivative adds √α^{-m}
                let w = a * b * root.powi(-((p + q + m + n) as i32));
                components[unit_idx].add_term(p, q, scale * w);
            }
        }
    }
    QPolyGauss {
        components,
        gamma: 1.0 / alpha,
    }
}

/// `i^m j^n` as (component index, sign).
fn unit_of(m: usize, n: usize) -> (usize, f64) {
    let mut q = Quaternion::ONE;
    for _ in 0..m % 4 {
        q = q * Quaternion::I;
    }
    for _ in 0..n % 4 {
        q = q * Quaternion::J;
    }
    let c = q.to_array();
    let idx = (0..4).find(|&k| c[k] != 0.0).expect("unit quaternion");
    (idx, c[idx])
}

fn check_dilation(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "dilation factor must be positive, got {a}"
        )))
    }
}

/// `x ↦ f(a x)` for a sampled signal, resampled to the nearest grid point
/// (zero where `a x` leaves the grid).
pub fn dilate(f: &QSignal, a: f64) -> Result<QSignal> {
    check_dilation(a)?;
    let grid = *f.grid();
    Ok(QSignal::from_fn(grid, |x1, x2| {
        match (grid.nearest1(a * x1), grid.nearest2(a * x2)) {
            (Some(i1), Some(i2)) => f.get(i1, i2),
            _ => Quaternion::ZERO,
        }
    }))
}

/// Spectrum predicted for `f(a·)` from the spectrum `F` of `f`:
/// `F{f(a·)}(ξ) = a^{-2} F(ξ/a)`.
pub fn dilation_spectrum(spectrum: &QPolyGauss, a: f64) -> Result<QPolyGauss> {
    check_dilation(a)?;
    let components =
        std::array::from_fn(|k| spectrum.components[k].dilate(1.0 / a).scaled(a.powi(-2)));
    QPolyGauss::new(components, spectrum.gamma / (a * a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_is_fixed_point() {
        let s = qft_polygauss(&PolyGauss::gaussian(1.0).unwrap());
        assert_eq!(s.gamma(), 1.0);
        assert_eq!(s.components()[0].coeffs(), &[vec![1.0]]);
        assert!(s.components()[1..].iter().all(Poly2::is_zero));
    }

    #[test]
    fn first_moment() {
        // F{x1 e^{-π|x|²}} = (1/2π) i P_1(ξ1) e^{-π|ξ|²} = -i ξ1 e^{-π|ξ|²}
        let s = qft_polygauss(&PolyGauss::monomial(1, 0, 1.0).unwrap());
        assert!(s.components()[0].is_zero());
        assert!((s.components()[1].coeff(1, 0) + 1.0).abs() < 1e-15);
        // x2 sits on the right: -ξ2 j
        let s = qft_polygauss(&PolyGauss::monomial(0, 1, 1.0).unwrap());
        assert!((s.components()[2].coeff(0, 1) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn degree_and_width() {
        let f = PolyGauss::monomial(1, 1, 2.0).unwrap();
        let s = qft_polygauss(&f);
        assert_eq!(s.degree(), Some(2));
        assert_eq!(s.gamma(), 0.5);
        // i j = k
        assert!(!s.components()[3].is_zero());
        let zero = PolyGauss::new(Poly2::zero(), 1.0).unwrap();
        assert_eq!(qft_polygauss(&zero).degree(), None);
    }

    #[test]
    fn units() {
        assert_eq!(unit_of(0, 0), (0, 1.0));
        assert_eq!(unit_of(1, 1), (3, 1.0));
        assert_eq!(unit_of(2, 1), (2, -1.0));
        assert_eq!(unit_of(3, 2), (1, 1.0));
    }

    #[test]
    fn poly_algebra() {
        let p = Poly2::new(vec![vec![1.0, 2.0], vec![3.0]]).unwrap();
        assert_eq!(p.eval(2.0, 5.0), 1.0 + 2.0 * 5.0 + 3.0 * 2.0);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.dilate(2.0).eval(1.0, 1.0), p.eval(2.0, 2.0));
        assert!(Poly2::new(vec![vec![f64::NAN]]).is_err());
    }

    #[test]
    fn dilation_arguments() {
        let g = GridSpec::square(4, 1.0).unwrap();
        let f = QSignal::delta(g);
        assert_eq!(dilate(&f, 1.0).unwrap(), f);
        assert!(matches!(dilate(&f, 0.0), Err(Error::Argument(_))));
        assert!(matches!(dilate(&f, -1.0), Err(Error::Argument(_))));
        assert!(PolyGauss::gaussian(1.0).unwrap().dilate(-2.0).is_err());
        assert!(PolyGauss::gaussian(0.0).is_err());
    }

    #[test]
    fn symbolic_dilation_law() {
        let f = PolyGauss::new(
            Poly2::new(vec![vec![0.5, -1.0], vec![2.0, 0.0, 1.5]]).unwrap(),
            1.3,
        )
        .unwrap();
        for a in [0.5, 1.0, 2.0] {
            let lhs = qft_polygauss(&f.dilate(a).unwrap());
            let rhs = dilation_spectrum(&qft_polygauss(&f), a).unwrap();
            assert!((lhs.gamma() - rhs.gamma()).abs() < 1e-14);
            for (x1, x2) in [(0.0, 0.0), (0.3, -0.7), (1.1, 0.4)] {
                assert!(lhs.eval(x1, x2).max_abs_diff(rhs.eval(x1, x2)) < 1e-12);
            }
        }
    }
}
