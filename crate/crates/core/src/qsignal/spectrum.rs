use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

use super::grid::GridSpec;
use super::signal::QSignal;

/// Samples of a two-sided transform on a dual grid.
///
/// `components[m]` holds the transform of the real component `f_m` alone;
/// the pointwise module `‖F{f}(ξ)‖_Q` is built from them.
#[derive(Debug, Clone, PartialEq)]
pub struct QSpectrum {
    grid: GridSpec,
    samples: Vec<Quaternion>,
    components: Option<Box<[Vec<Quaternion>; 4]>>,
}

impl QSpectrum {
    /// A spectrum known only through its combined samples.
    pub fn new(grid: GridSpec, samples: Vec<Quaternion>) -> Result<Self> {
        check_len(&grid, &samples)?;
        Ok(Self {
            grid,
            samples,
            components: None,
        })
    }

    pub fn with_components(
        grid: GridSpec,
        samples: Vec<Quaternion>,
        components: [Vec<Quaternion>; 4],
    ) -> Result<Self> {
        check_len(&grid, &samples)?;
        for c in &components {
            check_len(&grid, c)?;
        }
        Ok(Self {
            grid,
            samples,
            components: Some(Box::new(components)),
        })
    }

    #[inline]
    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    #[inline]
    pub fn samples(&self) -> &[Quaternion] {
        &self.samples
    }

    #[inline]
    pub fn get(&self, i1: usize, i2: usize) -> Quaternion {
        self.samples[self.grid.index(i1, i2)]
    }

    pub fn components(&self) -> Option<&[Vec<Quaternion>; 4]> {
        self.components.as_deref()
    }

    pub fn has_components(&self) -> bool {
        self.components.is_some()
    }

    pub fn without_components(mut self) -> Self {
        self.components = None;
        self
    }

    fn require_components(&self) -> Result<&[Vec<Quaternion>; 4]> {
        self.components().ok_or_else(|| {
            Error::State(
                "spectrum has no component transforms; recompute it with components retained \
                 (qft_fast / qft_direct keep them)"
                    .into(),
            )
        })
    }

    /// Pointwise quaternion modulus `|F{f}(ξ)|_Q`.
    pub fn modulus(&self) -> Vec<f64> {
        self.samples.iter().map(|q| q.modulus()).collect()
    }

    /// Pointwise module `‖F{f}(ξ)‖_Q = sqrt(Σ_m |F{f_m}(ξ)|_Q²)`.
    pub fn module_norm(&self) -> Result<Vec<f64>> {
        let c = self.require_components()?;
        Ok((0..self.samples.len())
            .map(|n| (0..4).map(|m| c[m][n].norm_sqr()).sum::<f64>().sqrt())
            .collect())
    }

    /// `‖F{f}‖_{2,Q}`: grid L² aggregate of the pointwise module.
    pub fn module_l2(&self) -> Result<f64> {
        let norms = self.module_norm()?;
        Ok((norms.iter().map(|v| v * v).sum::<f64>() * self.grid.cell_area()).sqrt())
    }

    /// Sum of two spectra on the same grid; components are kept only when
    /// both operands carry them.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.grid.require_match(&other.grid)?;
        let add = |a: &[Quaternion], b: &[Quaternion]| -> Vec<Quaternion> {
            a.iter().zip(b).map(|(&p, &q)| p + q).collect()
        };
        let components = match (self.components(), other.components()) {
            (Some(a), Some(b)) => Some(Box::new([
                add(&a[0], &b[0]),
                add(&a[1], &b[1]),
                add(&a[2], &b[2]),
                add(&a[3], &b[3]),
            ])),
            _ => None,
        };
        Ok(Self {
            grid: self.grid,
            samples: add(&self.samples, &other.samples),
            components,
        })
    }

    /// Multiplies samples and components by a real scalar.
    pub fn scale(&self, s: f64) -> Self {
        let scale =
            |v: &[Quaternion]| -> Vec<Quaternion> { v.iter().map(|q| q.scale(s)).collect() };
        Self {
            grid: self.grid,
            samples: scale(&self.samples),
            components: self
                .components()
                .map(|c| Box::new([scale(&c[0]), scale(&c[1]), scale(&c[2]), scale(&c[3])])),
        }
    }

    /// Reinterprets the samples as a signal on the frequency grid, for
    /// export and for feeding the transform back into itself.
    pub fn to_signal(&self) -> QSignal {
        QSignal::new(self.grid, self.samples.clone()).expect("lengths checked at construction")
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.grid.require_match(&other.grid)?;
        Ok(super::signal::max_abs_diff(&self.samples, &other.samples))
    }
}

fn check_len(grid: &GridSpec, v: &[Quaternion]) -> Result<()> {
    if v.len() == grid.len() {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "{} spectrum samples for a {}x{} grid",
            v.len(),
            grid.n1,
            grid.n2
        )))
    }
}
