//! Reference evaluation of the two-sided sums, straight from the definition.
//!
//! `O((n1 n2)²)`; kept as the oracle the fast path is checked against.

use std::f64::consts::TAU;

use crate::parallel;
use crate::qsignal::{GridSpec, QSignal, QSpectrum};
use crate::quaternion::Quaternion;

/// `(cos, sin)` of `2π (k - c)(m - c) / n` for all `k, m`, reduced exactly
/// modulo `n` before scaling.
fn phase_table(n: usize) -> Vec<(f64, f64)> {
    let c = (n / 2) as i64;
    let n_i = n as i64;
    let mut table = Vec::with_capacity(n * n);
    for k in 0..n_i {
        for m in 0..n_i {
            let r = ((k - c) * (m - c)).rem_euclid(n_i);
            let (s, co) = (TAU * r as f64 / n as f64).sin_cos();
            table.push((co, s));
        }
    }
    table
}

/// Evaluates `Σ_x e^{σ i 2π ξ1 x1} · f(x) · e^{σ j 2π ξ2 x2} · area` on the
/// dual grid, plus the same sum for each real component of `f` alone.
/// `sign` is `-1` for the forward transform and `+1` for the inverse.
fn two_sided_sum(
    grid: &GridSpec,
    samples: &[Quaternion],
    sign: f64,
    area: f64,
) -> (Vec<Quaternion>, [Vec<Quaternion>; 4]) {
    let (n1, n2) = (grid.n1, grid.n2);
    let t1 = phase_table(n1);
    let t2 = phase_table(n2);
    let live: Vec<bool> = (0..4)
        .map(|m| samples.iter().any(|q| q.to_array()[m] != 0.0))
        .collect();

    // one output row (fixed k1) per task
    let rows = parallel::map_indices(n1, |k1| {
        let mut full = vec![Quaternion::ZERO; n2];
        let mut parts = [
            vec![Quaternion::ZERO; n2],
            vec![Quaternion::ZERO; n2],
            vec![Quaternion::ZERO; n2],
            vec![Quaternion::ZERO; n2],
        ];
        for k2 in 0..n2 {
            let mut acc = Quaternion::ZERO;
            let mut acc_parts = [Quaternion::ZERO; 4];
            for m1 in 0..n1 {
                let (c1, s1) = t1[k1 * n1 + m1];
                let left = Quaternion::new(c1, sign * s1, 0.0, 0.0);
                for m2 in 0..n2 {
                    let (c2, s2) = t2[k2 * n2 + m2];
                    let right = Quaternion::new(c2, 0.0, sign * s2, 0.0);
                    let f = samples[m1 * n2 + m2];
                    acc += left * f * right;
                    let kernel = left * right;
                    let fc = f.to_array();
                    for m in 0..4 {
                        if live[m] {
                            acc_parts[m] += kernel.scale(fc[m]);
                        }
                    }
                }
            }
            full[k2] = acc.scale(area);
            for m in 0..4 {
                parts[m][k2] = acc_parts[m].scale(area);
            }
        }
        (full, parts)
    });

    let mut full = Vec::with_capacity(grid.len());
    let mut parts: [Vec<Quaternion>; 4] = Default::default();
    for (row, row_parts) in rows {
        full.extend(row);
        for (dst, src) in parts.iter_mut().zip(row_parts) {
            dst.extend(src);
        }
    }
    (full, parts)
}

/// Two-sided QFT by direct summation of the defining Riemann sum.
pub fn qft_direct(f: &QSignal) -> QSpectrum {
    let grid = f.grid();
    let (full, parts) = two_sided_sum(grid, f.samples(), -1.0, grid.cell_area());
    QSpectrum::with_components(grid.dual(), full, parts).expect("sizes match by construction")
}

/// Inverse transform by direct summation; oracle for [`super::qft_inverse`].
pub fn qft_inverse_direct(spectrum: &QSpectrum) -> QSignal {
    let grid = spectrum.grid();
    let (full, _) = two_sided_sum(grid, spectrum.samples(), 1.0, grid.cell_area());
    QSignal::new(grid.dual(), full).expect("sizes match by construction")
}
