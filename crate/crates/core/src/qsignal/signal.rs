use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

use super::grid::GridSpec;

/// Quaternion-valued samples on a [`GridSpec`], row-major with `x1` outer.
#[derive(Debug, Clone, PartialEq)]
pub struct QSignal {
    grid: GridSpec,
    samples: Vec<Quaternion>,
}

impl QSignal {
    pub fn new(grid: GridSpec, samples: Vec<Quaternion>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::Argument(format!(
                "{} samples for a {}x{} grid",
                samples.len(),
                grid.n1,
                grid.n2
            )));
        }
        Ok(Self { grid, samples })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self {
            grid,
            samples: vec![Quaternion::ZERO; grid.len()],
        }
    }

    /// Evaluates `f(x1, x2)` at every grid point.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64, f64) -> Quaternion) -> Self {
        let mut samples = Vec::with_capacity(grid.len());
        for i1 in 0..grid.n1 {
            let x1 = grid.coord1(i1);
            for i2 in 0..grid.n2 {
                samples.push(f(x1, grid.coord2(i2)));
            }
        }
        Self { grid, samples }
    }

    pub fn from_real_fn(grid: GridSpec, f: impl Fn(f64, f64) -> f64) -> Self {
        Self::from_fn(grid, |x1, x2| Quaternion::from_real(f(x1, x2)))
    }

    /// Discrete unit impulse at the origin: `1 / (d1 d2)` at `x = 0`.
    pub fn delta(grid: GridSpec) -> Self {
        let mut s = Self::zeros(grid);
        let idx = grid.index(grid.origin1(), grid.origin2());
        s.samples[idx] = Quaternion::from_real(1.0 / grid.cell_area());
        s
    }

    /// Inverse of [`QSignal::component_split`]: `f0 + i f1 + j f2 + k f3`.
    pub fn from_components(grid: GridSpec, parts: [Vec<f64>; 4]) -> Result<Self> {
        if parts.iter().any(|p| p.len() != grid.len()) {
            return Err(Error::Argument(
                "component length does not match grid".into(),
            ));
        }
        let samples = (0..grid.len())
            .map(|n| Quaternion::new(parts[0][n], parts[1][n], parts[2][n], parts[3][n]))
            .collect();
        Ok(Self { grid, samples })
    }

    #[inline]
    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    #[inline]
    pub fn samples(&self) -> &[Quaternion] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Quaternion> {
        self.samples
    }

    #[inline]
    pub fn get(&self, i1: usize, i2: usize) -> Quaternion {
        self.samples[self.grid.index(i1, i2)]
    }

    /// The four real component arrays `f0..f3` with `f = f0 + i f1 + j f2 + k f3`.
    pub fn component_split(&self) -> [Vec<f64>; 4] {
        let mut out: [Vec<f64>; 4] = Default::default();
        for part in out.iter_mut() {
            part.reserve_exact(self.samples.len());
        }
        for q in &self.samples {
            for (part, c) in out.iter_mut().zip(q.to_array()) {
                part.push(c);
            }
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.samples
            .iter()
            .all(|q| q.q1 == 0.0 && q.q2 == 0.0 && q.q3 == 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.samples.iter().all(|q| q.is_zero())
    }

    /// `|f|_{1,Q}`: Riemann sum of `|f(x)|_Q`.
    pub fn l1_norm(&self) -> f64 {
        self.samples.iter().map(|q| q.modulus()).sum::<f64>() * self.grid.cell_area()
    }

    /// `|f|_{2,Q}`: square root of the Riemann sum of `|f(x)|_Q²`.
    pub fn l2_norm(&self) -> f64 {
        (self.samples.iter().map(|q| q.norm_sqr()).sum::<f64>() * self.grid.cell_area()).sqrt()
    }

    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> Self {
        Self {
            grid: self.grid,
            samples: self.samples.iter().map(|&q| f(q)).collect(),
        }
    }

    /// `left · f(x) · right` at every sample.
    pub fn sandwich(&self, left: Quaternion, right: Quaternion) -> Self {
        self.map(|q| left * q * right)
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|q| q.scale(s))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.grid.require_match(&other.grid)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(&a, &b)| a + b)
            .collect();
        Ok(Self {
            grid: self.grid,
            samples,
        })
    }

    /// `x ↦ f(-x1, x2)` on the periodic grid.
    pub fn reflect1(&self) -> Self {
        let g = self.grid;
        let mut out = self.samples.clone();
        for i1 in 0..g.n1 {
            let src = g.mirror1(i1);
            out[g.index(i1, 0)..g.index(i1, 0) + g.n2]
                .copy_from_slice(&self.samples[g.index(src, 0)..g.index(src, 0) + g.n2]);
        }
        Self {
            grid: g,
            samples: out,
        }
    }

    /// `x ↦ f(x1, -x2)` on the periodic grid.
    pub fn reflect2(&self) -> Self {
        let g = self.grid;
        let mut out = self.samples.clone();
        for i1 in 0..g.n1 {
            for i2 in 0..g.n2 {
                out[g.index(i1, i2)] = self.samples[g.index(i1, g.mirror2(i2))];
            }
        }
        Self {
            grid: g,
            samples: out,
        }
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.grid.require_match(&other.grid)?;
        Ok(max_abs_diff(&self.samples, &other.samples))
    }
}

pub(crate) fn max_abs_diff(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    a.iter()
        .zip(b)
        .fold(0.0_f64, |m, (&p, &q)| m.max(p.max_abs_diff(q)))
}

/// `‖a − b‖_F / ‖b‖_F` over quaternion arrays (absolute when `b` is zero).
pub fn relative_frobenius(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(&p, &q)| (p - q).norm_sqr()).sum();
    let den: f64 = b.iter().map(|q| q.norm_sqr()).sum();
    if den == 0.0 {
        num.sqrt()
    } else {
        (num / den).sqrt()
    }
}
