use crate::error::Result;
use crate::parallel;
use crate::qsignal::QSignal;
use crate::quaternion::Quaternion;

/// Circular convolution `(f*g)(x) = Σ_t f(t) g(x - t) d1 d2`.
///
/// Both signals must share a grid; `x - t` wraps around the grid period.
/// The product keeps the order `f(t) g(x - t)`.
pub fn convolve(f: &QSignal, g: &QSignal) -> Result<QSignal> {
    let grid = *f.grid();
    grid.require_match(g.grid())?;
    let (n1, n2) = (grid.n1, grid.n2);
    let (c1, c2) = (grid.origin1(), grid.origin2());
    let (fs, gs) = (f.samples(), g.samples());
    let area = grid.cell_area();
    let rows = parallel::map_indices(n1, |m1| {
        (0..n2)
            .map(|m2| {
                let mut acc = Quaternion::ZERO;
                for j1 in 0..n1 {
                    // x - t lands on index (m - j + c) mod n
                    let r1 = (m1 + n1 + c1 - j1) % n1;
                    for j2 in 0..n2 {
                        let r2 = (m2 + n2 + c2 - j2) % n2;
                        acc += fs[j1 * n2 + j2] * gs[r1 * n2 + r2];
                    }
                }
                acc.scale(area)
            })
            .collect::<Vec<_>>()
    });
    QSignal::new(grid, rows.into_iter().flatten().collect())
}

/// Splits `g` into its even and odd parts in `x1`.
pub fn parity_split_x1(g: &QSignal) -> (QSignal, QSignal) {
    let r = g.reflect1();
    let even = g.add(&r).expect("same grid").scale(0.5);
    let odd = g.add(&r.scale(-1.0)).expect("same grid").scale(0.5);
    (even, odd)
}
