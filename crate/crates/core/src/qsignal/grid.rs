use crate::error::{Error, Result};

/// Uniform 2D grid centered at the origin.
///
/// Axis `k` has `n_k` points `x = (m - ⌊n_k/2⌋) · d_k`, `m = 0..n_k`, so the
/// origin is always a grid point. The dual (frequency) grid has the same
/// counts and spacing `1 / (n_k d_k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub n1: usize,
    pub n2: usize,
    pub d1: f64,
    pub d2: f64,
}

impl GridSpec {
    pub fn new(n1: usize, n2: usize, d1: f64, d2: f64) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::Argument(format!(
                "grid counts must be positive, got {n1}x{n2}"
            )));
        }
        if !(d1 > 0.0 && d1.is_finite() && d2 > 0.0 && d2.is_finite()) {
            return Err(Error::Argument(format!(
                "grid spacing must be positive and finite, got ({d1}, {d2})"
            )));
        }
        Ok(Self { n1, n2, d1, d2 })
    }

    pub fn square(n: usize, d: f64) -> Result<Self> {
        Self::new(n, n, d, d)
    }

    /// `n × n` grid covering `[-half_width, half_width)` on both axes.
    pub fn centered_box(n: usize, half_width: f64) -> Result<Self> {
        Self::square(n, 2.0 * half_width / n as f64)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn origin1(&self) -> usize {
        self.n1 / 2
    }

    #[inline]
    pub fn origin2(&self) -> usize {
        self.n2 / 2
    }

    #[inline]
    pub fn index(&self, i1: usize, i2: usize) -> usize {
        i1 * self.n2 + i2
    }

    #[inline]
    pub fn coord1(&self, i1: usize) -> f64 {
        (i1 as f64 - self.origin1() as f64) * self.d1
    }

    #[inline]
    pub fn coord2(&self, i2: usize) -> f64 {
        (i2 as f64 - self.origin2() as f64) * self.d2
    }

    #[inline]
    pub fn point(&self, i1: usize, i2: usize) -> (f64, f64) {
        (self.coord1(i1), self.coord2(i2))
    }

    /// Area element `d1 · d2` used by every Riemann sum.
    #[inline]
    pub fn cell_area(&self) -> f64 {
        self.d1 * self.d2
    }

    pub fn extent(&self) -> (f64, f64) {
        (self.n1 as f64 * self.d1, self.n2 as f64 * self.d2)
    }

    /// Frequency grid paired with this one by the discrete transform.
    pub fn dual(&self) -> Self {
        let (l1, l2) = self.extent();
        Self {
            n1: self.n1,
            n2: self.n2,
            d1: 1.0 / l1,
            d2: 1.0 / l2,
        }
    }

    /// Index of `-x1` (periodic wrap when `-x1` falls off the grid).
    #[inline]
    pub fn mirror1(&self, i1: usize) -> usize {
        (2 * self.origin1() + self.n1 - i1) % self.n1
    }

    #[inline]
    pub fn mirror2(&self, i2: usize) -> usize {
        (2 * self.origin2() + self.n2 - i2) % self.n2
    }

    /// Radius of the largest origin-centered disk whose grid points are
    /// all on the grid.
    pub fn inscribed_radius(&self) -> f64 {
        let r1 = self.origin1().min(self.n1 - 1 - self.origin1()) as f64 * self.d1;
        let r2 = self.origin2().min(self.n2 - 1 - self.origin2()) as f64 * self.d2;
        r1.min(r2)
    }

    /// Nearest grid index on axis 1 for coordinate `x1`, if on the grid.
    pub fn nearest1(&self, x1: f64) -> Option<usize> {
        nearest(x1, self.d1, self.origin1(), self.n1)
    }

    pub fn nearest2(&self, x2: f64) -> Option<usize> {
        nearest(x2, self.d2, self.origin2(), self.n2)
    }

    /// Same counts and spacings up to a relative `1e-12`.
    pub fn matches(&self, other: &Self) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs());
        self.n1 == other.n1
            && self.n2 == other.n2
            && close(self.d1, other.d1)
            && close(self.d2, other.d2)
    }

    pub(crate) fn require_match(&self, other: &Self) -> Result<()> {
        if self.matches(other) {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "grid mismatch: {}x{} @ ({}, {}) vs {}x{} @ ({}, {})",
                self.n1, self.n2, self.d1, self.d2, other.n1, other.n2, other.d1, other.d2
            )))
        }
    }
}

fn nearest(x: f64, d: f64, origin: usize, n: usize) -> Option<usize> {
    let m = (x / d).round() + origin as f64;
    if m >= 0.0 && m < n as f64 {
        Some(m as usize)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_are_centered() {
        let g = GridSpec::centered_box(64, 6.0).unwrap();
        assert_eq!(g.d1, 0.1875);
        assert_eq!(g.coord1(0), -6.0);
        assert_eq!(g.coord1(32), 0.0);
        assert_eq!(g.coord2(63), 5.8125);
        let odd = GridSpec::square(5, 1.0).unwrap();
        assert_eq!(
            (odd.coord1(0), odd.coord1(2), odd.coord1(4)),
            (-2.0, 0.0, 2.0)
        );
    }

    #[test]
    fn dual_spacing() {
        let g = GridSpec::new(8, 4, 0.5, 0.25).unwrap();
        let d = g.dual();
        assert_eq!((d.d1, d.d2), (0.25, 1.0));
        assert_eq!((d.n1, d.n2), (8, 4));
    }

    #[test]
    fn mirrors() {
        let g = GridSpec::square(4, 1.0).unwrap();
        // coordinates -2,-1,0,1 ; -(-2) = 2 wraps to -2
        assert_eq!(
            (0..4).map(|i| g.mirror1(i)).collect::<Vec<_>>(),
            vec![0, 3, 2, 1]
        );
        let g = GridSpec::square(5, 1.0).unwrap();
        assert_eq!(
            (0..5).map(|i| g.mirror2(i)).collect::<Vec<_>>(),
            vec![4, 3, 2, 1, 0]
        );
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GridSpec::new(0, 4, 1.0, 1.0).is_err());
        assert!(GridSpec::new(4, 4, 0.0, 1.0).is_err());
        assert!(GridSpec::new(4, 4, 1.0, f64::NAN).is_err());
        assert!(GridSpec::new(1, 1, 1.0, 1.0).is_ok());
    }

    #[test]
    fn nearest_index() {
        let g = GridSpec::square(8, 0.5).unwrap();
        assert_eq!(g.nearest1(0.0), Some(4));
        assert_eq!(g.nearest1(-2.0), Some(0));
        assert_eq!(g.nearest1(1.74), Some(7));
        assert_eq!(g.nearest1(1.76), None);
        assert_eq!(g.inscribed_radius(), 1.5);
    }
}
