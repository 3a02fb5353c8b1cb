//! What a certificate is run on, and its reduction to radial data.
//!
//! Every hypothesis integrand depends on `x` only through `|f(x)|` and
//! `|x|`, so both sides of a subject reduce to weighted radial nodes
//! `(r, ln w)`: analytic subjects by midpoint radii and an angular
//! quadrature, sampled ones by grouping grid points of equal radius
//! (which is an exact regrouping of the Riemann sum).

use std::f64::consts::TAU;

use crate::error::Result;
use crate::parallel;
use crate::qft::{qft_fast, qft_polygauss, PolyGauss, QPolyGauss};
use crate::qsignal::{GridSpec, QSignal, QSpectrum};

/// Radial step for analytic subjects.
pub(crate) const RADIAL_STEP: f64 = 1.0 / 64.0;
/// Angular nodes per circle for analytic subjects.
pub(crate) const ANGLES: usize = 64;

/// Which pointwise size of the spectrum enters the hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpectrumNorm {
    /// `‖F{f}(y)‖_Q`, root-sum-square of the component spectra.
    #[default]
    Module,
    /// `|F{f}(y)|_Q`, the plain quaternion modulus.
    Modulus,
}

impl SpectrumNorm {
    pub fn name(self) -> &'static str {
        match self {
            Self::Module => "module",
            Self::Modulus => "modulus",
        }
    }
}

#[derive(Debug, Clone)]
enum Data {
    Analytic {
        f: PolyGauss,
        spectrum: QPolyGauss,
    },
    Sampled {
        signal: QSignal,
        spectrum: QSpectrum,
    },
}

/// A signal together with its spectrum.
#[derive(Debug, Clone)]
pub struct Subject {
    data: Data,
    norm: SpectrumNorm,
    label: Option<String>,
}

impl Subject {
    /// Closed-form subject; the spectrum comes from `qft_polygauss`.
    pub fn analytic(f: PolyGauss) -> Self {
        let spectrum = qft_polygauss(&f);
        Self {
            data: Data::Analytic { f, spectrum },
            norm: SpectrumNorm::Module,
            label: None,
        }
    }

    /// Sampled subject; the spectrum comes from `qft_fast`.
    pub fn sampled(signal: QSignal) -> Self {
        let spectrum = qft_fast(&signal);
        Self {
            data: Data::Sampled { signal, spectrum },
            norm: SpectrumNorm::Module,
            label: None,
        }
    }

    /// Sampled subject with a precomputed spectrum on the dual grid.
    pub fn sampled_with_spectrum(signal: QSignal, spectrum: QSpectrum) -> Result<Self> {
        signal.grid().dual().require_match(spectrum.grid())?;
        Ok(Self {
            data: Data::Sampled { signal, spectrum },
            norm: SpectrumNorm::Module,
            label: None,
        })
    }

    pub fn with_norm(mut self, norm: SpectrumNorm) -> Self {
        self.norm = norm;
        self
    }

    pub fn norm(&self) -> SpectrumNorm {
        self.norm
    }

    /// Name shown in reports instead of the generated description.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn describe(&self) -> String {
        if let Some(label) = &self.label {
            return label.clone();
        }
        match &self.data {
            Data::Analytic { f, .. } => match f.degree() {
                Some(k) => format!(
                    "polynomial of degree {k} times exp(-pi*{}*|x|^2)",
                    f.alpha()
                ),
                None => "zero".into(),
            },
            Data::Sampled { signal, .. } => {
                let g = signal.grid();
                format!(
                    "sampled {}x{} grid, spacing ({}, {})",
                    g.n1, g.n2, g.d1, g.d2
                )
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Analytic { f, .. } => f.is_zero(),
            Data::Sampled { signal, .. } => signal.is_zero(),
        }
    }

    pub fn is_analytic(&self) -> bool {
        matches!(self.data, Data::Analytic { .. })
    }

    /// The closed form, for analytic subjects.
    pub fn polygauss(&self) -> Option<&PolyGauss> {
        match &self.data {
            Data::Analytic { f, .. } => Some(f),
            Data::Sampled { .. } => None,
        }
    }

    pub fn signal(&self) -> Option<&QSignal> {
        match &self.data {
            Data::Sampled { signal, .. } => Some(signal),
            Data::Analytic { .. } => None,
        }
    }

    /// Radius ladder for the signal side: the given analytic ladder, or
    /// fractions of the largest disk inside a sampled grid.
    pub(crate) fn ladder_x(&self, analytic: &[f64]) -> Vec<f64> {
        match &self.data {
            Data::Analytic { .. } => analytic.to_vec(),
            Data::Sampled { signal, .. } => grid_ladder(signal.grid()),
        }
    }

    pub(crate) fn ladder_y(&self, analytic: &[f64]) -> Vec<f64> {
        match &self.data {
            Data::Analytic { .. } => analytic.to_vec(),
            Data::Sampled { spectrum, .. } => grid_ladder(spectrum.grid()),
        }
    }

    /// Signal side and spectrum side.
    pub(crate) fn sides(&self) -> Result<(Side<'_>, Side<'_>)> {
        match &self.data {
            Data::Analytic { f, spectrum } => {
                // f is real, so the module norm of its spectrum is the modulus
                Ok((
                    Side::Analytic(Box::new(|a, b| f.ln_abs(a, b))),
                    Side::Analytic(Box::new(|a, b| spectrum.ln_modulus(a, b))),
                ))
            }
            Data::Sampled { signal, spectrum } => {
                let x = signal.samples().iter().map(|q| q.modulus().ln()).collect();
                let y = match self.norm {
                    SpectrumNorm::Module => spectrum.module_norm()?,
                    SpectrumNorm::Modulus => spectrum.modulus(),
                };
                Ok((
                    Side::Sampled {
                        grid: *signal.grid(),
                        ln_abs: x,
                    },
                    Side::Sampled {
                        grid: *spectrum.grid(),
                        ln_abs: y.into_iter().map(f64::ln).collect(),
                    },
                ))
            }
        }
    }
}

fn grid_ladder(grid: &GridSpec) -> Vec<f64> {
    let r = grid.inscribed_radius();
    [0.125, 0.25, 0.5, 1.0].iter().map(|s| s * r).collect()
}

/// `ln Σ exp(v)`, `-inf` for an empty or all-zero sum.
pub(crate) fn log_sum_exp(values: impl IntoIterator<Item = f64> + Clone) -> f64 {
    let max = values.clone().into_iter().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY || !max.is_finite() {
        return max;
    }
    max + values
        .into_iter()
        .map(|v| (v - max).exp())
        .sum::<f64>()
        .ln()
}

pub(crate) enum Side<'a> {
    /// `ln |g(x1, x2)|` of a closed form.
    Analytic(Box<dyn Fn(f64, f64) -> f64 + Sync + 'a>),
    /// `ln |g|` on every grid point.
    Sampled { grid: GridSpec, ln_abs: Vec<f64> },
}

/// Sorted radial nodes `r` with log weights `ln ∫_{shell} |g|^power`.
#[derive(Debug, Clone)]
pub(crate) struct Radial {
    pub r: Vec<f64>,
    pub ln_w: Vec<f64>,
}

impl Radial {
    /// Number of leading nodes inside radius `R`.
    pub fn count_within(&self, radius: f64) -> usize {
        self.r.partition_point(|&r| r <= radius * (1.0 + 1e-12))
    }
}

/// A sample point with its radius and `ln |g|`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Point {
    pub r: f64,
    pub ln_abs: f64,
    pub at: (f64, f64),
}

impl Side<'_> {
    pub fn radial(&self, power: f64, r_max: f64) -> Radial {
        match self {
            Side::Analytic(g) => {
                let n = (r_max / RADIAL_STEP).round() as usize;
                let dtheta = TAU / ANGLES as f64;
                let ln_w = parallel::map_indices(n, |i| {
                    let r = (i as f64 + 0.5) * RADIAL_STEP;
                    let angular = log_sum_exp((0..ANGLES).map(|k| {
                        let t = (k as f64 + 0.5) * dtheta;
                        power * g(r * t.cos(), r * t.sin())
                    }));
                    angular + (dtheta * r * RADIAL_STEP).ln()
                });
                let r = (0..n).map(|i| (i as f64 + 0.5) * RADIAL_STEP).collect();
                Radial { r, ln_w }
            }
            Side::Sampled { grid, ln_abs } => {
                let mut pts: Vec<(f64, f64)> = (0..grid.n1)
                    .flat_map(|i1| (0..grid.n2).map(move |i2| (i1, i2)))
                    .map(|(i1, i2)| {
                        let (a, b) = grid.point(i1, i2);
                        (a.hypot(b), power * ln_abs[grid.index(i1, i2)])
                    })
                    .filter(|&(r, _)| r <= r_max * (1.0 + 1e-12))
                    .collect();
                pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
                let area = grid.cell_area().ln();
                let mut radial = Radial {
                    r: Vec::new(),
                    ln_w: Vec::new(),
                };
                let mut start = 0;
                while start < pts.len() {
                    let r = pts[start].0;
                    let end = start + pts[start..].partition_point(|p| p.0 == r);
                    radial.r.push(r);
                    radial
                        .ln_w
                        .push(log_sum_exp(pts[start..end].iter().map(|p| p.1)) + area);
                    start = end;
                }
                radial
            }
        }
    }

    /// Points to take suprema over, ordered by radius.
    pub fn points(&self, r_max: f64) -> Vec<Point> {
        let mut pts = match self {
            Side::Analytic(g) => {
                let n = (r_max / RADIAL_STEP).round() as usize;
                let dtheta = TAU / ANGLES as f64;
                let rings = parallel::map_indices(n + 1, |i| {
                    let r = i as f64 * RADIAL_STEP;
                    (0..ANGLES)
                        .map(|k| {
                            let (s, c) = (k as f64 * dtheta).sin_cos();
                            let at = (r * c, r * s);
                            Point {
                                r,
                                ln_abs: g(at.0, at.1),
                                at,
                            }
                        })
                        .collect::<Vec<_>>()
                });
                rings.into_iter().flatten().collect::<Vec<_>>()
            }
            Side::Sampled { grid, ln_abs } => (0..grid.n1)
                .flat_map(|i1| (0..grid.n2).map(move |i2| (i1, i2)))
                .map(|(i1, i2)| {
                    let at = grid.point(i1, i2);
                    Point {
                        r: at.0.hypot(at.1),
                        ln_abs: ln_abs[grid.index(i1, i2)],
                        at,
                    }
                })
                .filter(|p| p.r <= r_max * (1.0 + 1e-12))
                .collect(),
        };
        pts.sort_by(|a, b| a.r.total_cmp(&b.r));
        pts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qft::PolyGauss;
    use crate::{Error, Quaternion};

    #[test]
    fn log_sum_exp_cases() {
        assert_eq!(log_sum_exp(Vec::<f64>::new()), f64::NEG_INFINITY);
        assert_eq!(log_sum_exp(vec![f64::NEG_INFINITY; 3]), f64::NEG_INFINITY);
        assert!((log_sum_exp(vec![0.0, 0.0]) - 2f64.ln()).abs() < 1e-15);
        assert!((log_sum_exp(vec![1000.0, 1000.0]) - (1000.0 + 2f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn analytic_radial_mass() {
        // ∫ e^{-π|x|²} dx = 1
        let s = Subject::analytic(PolyGauss::gaussian(1.0).unwrap());
        let (x, _) = s.sides().unwrap();
        let rad = x.radial(1.0, 8.0);
        assert_eq!(rad.r.len(), 512);
        let total = log_sum_exp(rad.ln_w.iter().copied()).exp();
        assert!((total - 1.0).abs() < 1e-4, "{total}");
    }

    #[test]
    fn sampled_radial_is_a_regrouping() {
        let grid = GridSpec::square(9, 0.5).unwrap();
        let signal = QSignal::from_fn(grid, |a, b| Quaternion::new(a, b, 1.0, a * b));
        let l1 = signal.l1_norm();
        let s = Subject::sampled(signal);
        let (x, _) = s.sides().unwrap();
        let rad = x.radial(1.0, 100.0);
        let total = log_sum_exp(rad.ln_w.iter().copied()).exp();
        assert!((total - l1).abs() < 1e-12 * l1);
        assert!(rad.r.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn module_norm_needs_components() {
        let grid = GridSpec::square(4, 1.0).unwrap();
        let signal = QSignal::delta(grid);
        let spectrum = qft_fast(&signal).without_components();
        let s = Subject::sampled_with_spectrum(signal.clone(), spectrum.clone()).unwrap();
        assert!(matches!(s.sides(), Err(Error::State(_))));
        let s = Subject::sampled_with_spectrum(signal, spectrum)
            .unwrap()
            .with_norm(SpectrumNorm::Modulus);
        assert!(s.sides().is_ok());
    }

    #[test]
    fn spectrum_grid_must_be_dual() {
        let grid = GridSpec::square(4, 1.0).unwrap();
        // the dual of a 4x4 grid at spacing 1 has spacing 1/4
        let wrong = QSpectrum::new(grid, vec![Quaternion::ONE; 16]).unwrap();
        assert!(Subject::sampled_with_spectrum(QSignal::delta(grid), wrong).is_err());
    }
}
