//! Self-checks of the transform identities on built-in fixtures.
//!
//! Each check measures one error and compares it with a tolerance; the
//! CLI's `check-lemma` and the acceptance suite both go through here.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::fixtures::{noise, real_noise};
use crate::qft::{
    convolve, dilation_spectrum, parity_split_x1, qft_direct, qft_fast, qft_inverse, qft_polygauss,
    PolyGauss,
};
use crate::qsignal::{relative_frobenius, GridSpec, QSignal, QSpectrum};
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    Plancherel,
    Inverse,
    Convolution,
    Gaussian,
    ModuleLaw,
    PolyGauss,
    Dilation,
}

impl Lemma {
    pub const ALL: [Lemma; 7] = [
        Lemma::Plancherel,
        Lemma::Inverse,
        Lemma::Convolution,
        Lemma::Gaussian,
        Lemma::ModuleLaw,
        Lemma::PolyGauss,
        Lemma::Dilation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::Plancherel => "plancherel",
            Lemma::Inverse => "inverse",
            Lemma::Convolution => "convolution",
            Lemma::Gaussian => "gaussian",
            Lemma::ModuleLaw => "module-law",
            Lemma::PolyGauss => "polygauss",
            Lemma::Dilation => "dilation",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == name)
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            Lemma::Plancherel | Lemma::Inverse => 1e-9,
            Lemma::Convolution => 1e-8,
            Lemma::Gaussian => 1e-6,
            Lemma::ModuleLaw => 1e-10,
            Lemma::PolyGauss | Lemma::Dilation => 1e-5,
        }
    }

    /// Runs the check with the default tolerance, or `tolerance` if given.
    pub fn run(self, tolerance: Option<f64>) -> Result<LemmaCheck> {
        let tolerance = tolerance.unwrap_or(self.default_tolerance());
        if !(tolerance >= 0.0) {
            return Err(Error::Argument(format!(
                "tolerance must be >= 0, got {tolerance}"
            )));
        }
        let (error, measured, details) = match self {
            Lemma::Plancherel => plancherel(),
            Lemma::Inverse => inverse(),
            Lemma::Convolution => convolution()?,
            Lemma::Gaussian => gaussian(),
            Lemma::ModuleLaw => module_law(),
            Lemma::PolyGauss => polygauss(),
            Lemma::Dilation => dilation()?,
        };
        Ok(LemmaCheck {
            lemma: self,
            measured,
            error,
            tolerance,
            details,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaCheck {
    pub lemma: Lemma,
    /// What `error` measures.
    pub measured: &'static str,
    pub error: f64,
    pub tolerance: f64,
    pub details: Vec<String>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.error <= self.tolerance
    }
}

impl fmt::Display for LemmaCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {}: {} = {:.3e} (tolerance {:.1e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.lemma.name(),
            self.measured,
            self.error,
            self.tolerance
        )?;
        for d in &self.details {
            writeln!(f, "  {d}")?;
        }
        Ok(())
    }
}

/// Square grid of `n` points per axis, wide enough in both domains for
/// `e^{-πα|x|²}` and its transform: half-widths `X` and `n/(4X)` leave the
/// same Gaussian tail `e^{-nπ/4}` at both edges.
pub fn matched_grid(alpha: f64, n: usize) -> GridSpec {
    let half = (n as f64 / (4.0 * alpha)).sqrt();
    GridSpec::centered_box(n, half).expect("valid grid")
}

/// Relative gap between `‖f‖₂` and the `L²` aggregate of `‖F{f}‖_Q`.
pub fn plancherel_gap(f: &QSignal) -> f64 {
    let l2 = f.l2_norm();
    let module = qft_fast(f)
        .module_l2()
        .expect("fast spectra keep components");
    (l2 - module).abs() / l2
}

/// Relative Frobenius error of `F^{-1} F f`.
pub fn round_trip_error(f: &QSignal) -> f64 {
    relative_frobenius(qft_inverse(&qft_fast(f)).samples(), f.samples())
}

/// Pointwise `max |F{i f j} - i F{f} j|`.
pub fn module_law_error(f: &QSignal) -> f64 {
    let (i, j) = (Quaternion::I, Quaternion::J);
    let lhs = qft_fast(&f.sandwich(i, j));
    let rhs = qft_fast(f).to_signal().sandwich(i, j);
    lhs.to_signal().max_abs_diff(&rhs).expect("same grid")
}

fn product(a: &QSpectrum, b: &QSpectrum) -> Vec<Quaternion> {
    a.samples()
        .iter()
        .zip(b.samples())
        .map(|(&p, &q)| p * q)
        .collect()
}

fn max_diff(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(p, q)| p.max_abs_diff(*q))
        .fold(0.0, f64::max)
}

/// `max |F{f*g} - F{f}·F{g}|` pointwise.
pub fn product_rule_residual(f: &QSignal, g: &QSignal) -> Result<f64> {
    let lhs = qft_fast(&convolve(f, g)?);
    Ok(max_diff(
        lhs.samples(),
        &product(&qft_fast(f), &qft_fast(g)),
    ))
}

/// Residual of `F{f*g} = F{f}F{g_e} + F{f(x1,-x2)}F{g_o}`, where `g_e`, `g_o`
/// are the even and odd parts of `g` in `x1`.
pub fn split_rule_residual(f: &QSignal, g: &QSignal) -> Result<f64> {
    let lhs = qft_fast(&convolve(f, g)?);
    let (g_e, g_o) = parity_split_x1(g);
    let a = product(&qft_fast(f), &qft_fast(&g_e));
    let b = product(&qft_fast(&f.reflect2()), &qft_fast(&g_o));
    let rhs: Vec<Quaternion> = a.iter().zip(&b).map(|(&p, &q)| p + q).collect();
    Ok(max_diff(lhs.samples(), &rhs))
}

/// Max pointwise error of the sampled Gaussian's spectrum on `[-6, 6]²`.
pub fn gaussian_error(n: usize) -> f64 {
    let grid = GridSpec::centered_box(n, 6.0).expect("valid grid");
    let f = QSignal::from_real_fn(grid, |a, b| (-PI * (a * a + b * b)).exp());
    let want = QSignal::from_real_fn(grid.dual(), |a, b| (-PI * (a * a + b * b)).exp());
    qft_direct(&f)
        .to_signal()
        .max_abs_diff(&want)
        .expect("same grid")
}

/// Closed-form spectrum of `x1^m x2^n e^{-πα|x|²}` against the direct sum;
/// `+inf` when the degree is not preserved.
pub fn polygauss_error(m: usize, n: usize, alpha: f64, points: usize) -> f64 {
    let f = PolyGauss::monomial(m, n, alpha).expect("positive width");
    let closed = qft_polygauss(&f);
    if closed.degree() != f.degree() {
        return f64::INFINITY;
    }
    let grid = matched_grid(alpha, points);
    let direct = qft_direct(&f.sample(grid));
    direct
        .to_signal()
        .max_abs_diff(&closed.sample(grid.dual()))
        .expect("same grid")
}

const CHECK_GRID: usize = 32;

fn plancherel() -> (f64, &'static str, Vec<String>) {
    let grid = GridSpec::square(CHECK_GRID, 0.25).expect("valid grid");
    let err = (1..=5)
        .map(|seed| plancherel_gap(&noise(grid, seed)))
        .fold(0.0, f64::max);
    (
        err,
        "max relative norm gap",
        vec![format!(
            "5 seeded quaternion noise signals on {CHECK_GRID}x{CHECK_GRID}"
        )],
    )
}

fn inverse() -> (f64, &'static str, Vec<String>) {
    let grid = GridSpec::square(CHECK_GRID, 0.25).expect("valid grid");
    let mut err = (1..=5)
        .map(|seed| round_trip_error(&noise(grid, seed)))
        .fold(0.0, f64::max);
    let delta = QSignal::delta(grid);
    err = err.max(round_trip_error(&delta));
    (
        err,
        "max relative round-trip error",
        vec![format!(
            "5 noise signals and a delta on {CHECK_GRID}x{CHECK_GRID}"
        )],
    )
}

fn convolution() -> Result<(f64, &'static str, Vec<String>)> {
    let grid = GridSpec::square(16, 0.25).expect("valid grid");
    let (f, g) = (real_noise(grid, 1), real_noise(grid, 2));
    let stated = product_rule_residual(&f, &g)?;
    let split = split_rule_residual(&f, &g)?;
    let (g_even, _) = parity_split_x1(&g);
    let even = product_rule_residual(&f, &g_even)?;
    let details = vec![
        format!("real pair, product rule F{{f}}F{{g}}: residual {stated:.3e}"),
        format!("same pair, x1-parity split of g: residual {split:.3e}"),
        format!("g even in x1 (product rule exact there): residual {even:.3e}"),
    ];
    Ok((stated, "max |F{f*g} - F{f}F{g}| for a real pair", details))
}

fn gaussian() -> (f64, &'static str, Vec<String>) {
    (
        gaussian_error(64),
        "max pointwise error",
        vec!["e^{-pi|x|^2} sampled 64x64 on [-6,6]^2".into()],
    )
}

fn module_law() -> (f64, &'static str, Vec<String>) {
    let grid = GridSpec::square(CHECK_GRID, 0.25).expect("valid grid");
    let err = (1..=3)
        .map(|seed| module_law_error(&real_noise(grid, seed)))
        .fold(0.0, f64::max);
    (
        err,
        "max |F{i f j} - i F{f} j|",
        vec![format!("3 real noise signals on {CHECK_GRID}x{CHECK_GRID}")],
    )
}

fn polygauss() -> (f64, &'static str, Vec<String>) {
    let mut worst: (f64, String) = (0.0, String::new());
    for alpha in [0.5, 1.0, 2.0] {
        for m in 0..=4 {
            for n in 0..=4 - m {
                let err = polygauss_error(m, n, alpha, 40);
                if err > worst.0 || err.is_nan() {
                    worst = (err, format!("worst case x1^{m} x2^{n}, alpha={alpha}"));
                }
            }
        }
    }
    (
        worst.0,
        "max pointwise error vs direct sum",
        vec!["all m+n <= 4, alpha in {0.5, 1, 2}".into(), worst.1],
    )
}

fn dilation() -> Result<(f64, &'static str, Vec<String>)> {
    let mut err: f64 = 0.0;
    let mut details = Vec::new();
    for (m, n, alpha, a) in [(0, 0, 1.0, 2.0), (1, 0, 1.0, 0.5), (1, 2, 0.8, 1.5)] {
        let f = PolyGauss::monomial(m, n, alpha)?;
        let g = f.dilate(a)?;
        let grid = matched_grid(g.alpha(), 40);
        let direct = qft_direct(&g.sample(grid));
        let law = dilation_spectrum(&qft_polygauss(&f), a)?;
        let e = direct.to_signal().max_abs_diff(&law.sample(grid.dual()))?;
        details.push(format!(
            "x1^{m} x2^{n} e^(-pi*{alpha}|x|^2), a={a}: {e:.3e}"
        ));
        err = err.max(e);
    }
    Ok((err, "max |F{f(a.)} - a^-2 F{f}(./a)|", details))
}
