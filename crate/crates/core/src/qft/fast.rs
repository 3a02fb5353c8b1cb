//! FFT-based two-sided transform.
//!
//! For a real array `a`, write `α = 2π ξ1 x1`, `β = 2π ξ2 x2` and
//! `G(ξ1, ξ2) = Σ a e^{-iα} e^{-iβ}` (one complex 2D FFT). With
//! `G' (ξ1, ξ2) = G(ξ1, -ξ2)` the four parity channels are
//!
//! ```text
//! Σ a cos α cos β = Re(G + G')/2     Σ a sin α sin β = Re(G' - G)/2
//! Σ a sin α cos β = -Im(G + G')/2    Σ a cos α sin β = Im(G' - G)/2
//! ```
//!
//! and the two-sided transform of `a` is
//! `cc - i·sc - j·cs + k·ss`. The inverse uses conjugate phases and ends
//! up with the same assembly. A quaternion signal is split into its four
//! real components, packed two per complex FFT, and recombined as
//! `F{f0} + i F{f1} + F{f2} j + i F{f3} j`.

use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::parallel;
use crate::qsignal::{GridSpec, QSignal, QSpectrum};
use crate::quaternion::Quaternion;

struct Plan2d {
    rows: Arc<dyn Fft<f64>>,
    cols: Arc<dyn Fft<f64>>,
}

impl Plan2d {
    fn new(grid: &GridSpec, direction: FftDirection) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            rows: planner.plan_fft(grid.n2, direction),
            cols: planner.plan_fft(grid.n1, direction),
        }
    }

    /// In-place 2D FFT of a row-major `n1 × n2` buffer.
    fn process(&self, grid: &GridSpec, data: &mut [Complex64]) {
        let (n1, n2) = (grid.n1, grid.n2);
        let rows = &self.rows;
        parallel::for_each_chunk_mut(data, n2, |_, row| {
            let mut scratch = vec![Complex64::default(); rows.get_inplace_scratch_len()];
            rows.process_with_scratch(row, &mut scratch);
        });
        let mut t = transpose(data, n1, n2);
        let cols = &self.cols;
        parallel::for_each_chunk_mut(&mut t, n1, |_, col| {
            let mut scratch = vec![Complex64::default(); cols.get_inplace_scratch_len()];
            cols.process_with_scratch(col, &mut scratch);
        });
        data.copy_from_slice(&transpose(&t, n2, n1));
    }
}

fn transpose(data: &[Complex64], rows: usize, cols: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::default(); data.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = data[r * cols + c];
        }
    }
    out
}

/// Centered-index 2D DFT of `a + i·b` for two real arrays.
fn centered_fft(grid: &GridSpec, plan: &Plan2d, a: &[f64], b: &[f64]) -> Vec<Complex64> {
    let (n1, n2) = (grid.n1, grid.n2);
    let (c1, c2) = (grid.origin1(), grid.origin2());
    // FFT index m' holds grid index (m' + c) mod n
    let mut buf = vec![Complex64::default(); grid.len()];
    for p1 in 0..n1 {
        let i1 = (p1 + c1) % n1;
        for p2 in 0..n2 {
            let i2 = (p2 + c2) % n2;
            let n = i1 * n2 + i2;
            buf[p1 * n2 + p2] = Complex64::new(a[n], b[n]);
        }
    }
    plan.process(grid, &mut buf);
    // output grid index k holds FFT index (k - c) mod n
    let mut out = vec![Complex64::default(); grid.len()];
    for k1 in 0..n1 {
        let p1 = (k1 + n1 - c1) % n1;
        for k2 in 0..n2 {
            let p2 = (k2 + n2 - c2) % n2;
            out[k1 * n2 + k2] = buf[p1 * n2 + p2];
        }
    }
    out
}

/// Two-sided transforms of two real arrays from one complex FFT.
fn real_pair(
    grid: &GridSpec,
    plan: &Plan2d,
    a: &[f64],
    b: &[f64],
) -> (Vec<Quaternion>, Vec<Quaternion>) {
    let z = centered_fft(grid, plan, a, b);
    let n2 = grid.n2;
    let mirror = |k1: usize, k2: usize| grid.mirror1(k1) * n2 + grid.mirror2(k2);
    // Hermitian separation: Ga(k) = (Z(k) + conj Z(-k))/2, Gb(k) = (Z(k) - conj Z(-k))/(2i)
    let ga = |k1: usize, k2: usize| {
        let (p, q) = (z[k1 * n2 + k2], z[mirror(k1, k2)].conj());
        (p + q) * 0.5
    };
    let gb = |k1: usize, k2: usize| {
        let (p, q) = (z[k1 * n2 + k2], z[mirror(k1, k2)].conj());
        (p - q) * Complex64::new(0.0, -0.5)
    };
    let assemble = |g: Complex64, g_flip: Complex64| {
        Quaternion::new(
            0.5 * (g.re + g_flip.re),
            0.5 * (g.im + g_flip.im),
            0.5 * (g.im - g_flip.im),
            0.5 * (g_flip.re - g.re),
        )
    };
    let mut qa = Vec::with_capacity(grid.len());
    let mut qb = Vec::with_capacity(grid.len());
    for k1 in 0..grid.n1 {
        for k2 in 0..n2 {
            let k2f = grid.mirror2(k2);
            qa.push(assemble(ga(k1, k2), ga(k1, k2f)));
            qb.push(assemble(gb(k1, k2), gb(k1, k2f)));
        }
    }
    (qa, qb)
}

fn two_sided_fft(
    grid: &GridSpec,
    samples: &[Quaternion],
    direction: FftDirection,
    area: f64,
) -> (Vec<Quaternion>, [Vec<Quaternion>; 4]) {
    let plan = Plan2d::new(grid, direction);
    let parts: Vec<Vec<f64>> = (0..4)
        .map(|m| samples.iter().map(|q| q.to_array()[m] * area).collect())
        .collect();
    let zero = |p: &[f64]| p.iter().all(|&v| v == 0.0);
    let mut spectra: [Vec<Quaternion>; 4] = Default::default();
    for pair in [(0, 1), (2, 3)] {
        let (a, b) = (&parts[pair.0], &parts[pair.1]);
        if zero(a) && zero(b) {
            spectra[pair.0] = vec![Quaternion::ZERO; grid.len()];
            spectra[pair.1] = vec![Quaternion::ZERO; grid.len()];
        } else {
            let (qa, qb) = real_pair(grid, &plan, a, b);
            spectra[pair.0] = qa;
            spectra[pair.1] = qb;
        }
    }
    let (i, j) = (Quaternion::I, Quaternion::J);
    let full = (0..grid.len())
        .map(|n| spectra[0][n] + i * spectra[1][n] + spectra[2][n] * j + i * spectra[3][n] * j)
        .collect();
    (full, spectra)
}

/// Two-sided QFT via complex 2D FFTs; matches [`super::qft_direct`].
pub fn qft_fast(f: &QSignal) -> QSpectrum {
    let grid = f.grid();
    let (full, parts) = two_sided_fft(grid, f.samples(), FftDirection::Forward, grid.cell_area());
    QSpectrum::with_components(grid.dual(), full, parts).expect("sizes match by construction")
}

/// Inverse two-sided QFT, `f(x) = Σ_ξ e^{i2πξ1x1} F(ξ) e^{j2πξ2x2} dξ`.
pub fn qft_inverse(spectrum: &QSpectrum) -> QSignal {
    let grid = spectrum.grid();
    let (full, _) = two_sided_fft(
        grid,
        spectrum.samples(),
        FftDirection::Inverse,
        grid.cell_area(),
    );
    QSignal::new(grid.dual(), full).expect("sizes match by construction")
}
