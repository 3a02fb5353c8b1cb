//! Real quaternions `q = q0 + i q1 + j q2 + k q3` with Hamilton's product.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A quaternion with four `f64` components, scalar first.
///
/// No normalization is ever applied implicitly; unit quaternions are just
/// quaternions whose modulus happens to be one.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Self { q0, q1, q2, q3 }
    }

    #[inline]
    pub const fn from_real(a: f64) -> Self {
        Self::new(a, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub fn from_array(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    #[inline]
    pub fn to_array(self) -> [f64; 4] {
        [self.q0, self.q1, self.q2, self.q3]
    }

    /// `cos θ + axis · sin θ` for a pure unit `axis`.
    #[inline]
    pub fn exp_axis(axis: Self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c, axis.q1 * s, axis.q2 * s, axis.q3 * s)
    }

    /// Scalar part `Sc(q)`.
    #[inline]
    pub fn scalar(self) -> f64 {
        self.q0
    }

    /// Vector (pure) part `Vec(q)`.
    #[inline]
    pub fn vector(self) -> Self {
        Self::new(0.0, self.q1, self.q2, self.q3)
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
    }

    /// `|q|_Q`, computed without intermediate overflow.
    #[inline]
    pub fn modulus(self) -> f64 {
        self.q0.hypot(self.q1).hypot(self.q2.hypot(self.q3))
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.q0 == 0.0 && self.q1 == 0.0 && self.q2 == 0.0 && self.q3 == 0.0
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)
    }

    /// `q̄ / |q|²`. Fails on the zero quaternion.
    pub fn inverse(self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::Domain("inverse of the zero quaternion".into()));
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Polar form `q = |q| (cos θ + μ sin θ)` with `θ ∈ [0, π]`.
    ///
    /// For real `q` the axis is fixed to `i`, giving `θ = 0` for positive and
    /// `θ = π` for negative scalars.
    pub fn polar(self) -> Result<Polar> {
        let modulus = self.modulus();
        if modulus == 0.0 {
            return Err(Error::Domain("polar form of the zero quaternion".into()));
        }
        let v = self.vector();
        let vn = v.modulus();
        let angle = vn.atan2(self.q0);
        let axis = if vn == 0.0 {
            Self::I
        } else {
            v.scale(1.0 / vn)
        };
        Ok(Polar {
            modulus,
            axis,
            angle,
        })
    }

    /// Componentwise maximum absolute difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        (self - other)
            .to_array()
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// The inner involution `-u q u` for a pure unit `u`.
    #[inline]
    pub fn involution(self, u: Self) -> Self {
        -(u * self * u)
    }
}

/// Result of [`Quaternion::polar`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    pub modulus: f64,
    pub axis: Quaternion,
    pub angle: f64,
}

impl Polar {
    pub fn reconstruct(&self) -> Quaternion {
        Quaternion::exp_axis(self.axis, self.angle).scale(self.modulus)
    }
}

impl Mul for Quaternion {
    type Output = Self;

    #[inline]
    fn mul(self, r: Self) -> Self {
        let (a0, a1, a2, a3) = (self.q0, self.q1, self.q2, self.q3);
        let (b0, b1, b2, b3) = (r.q0, r.q1, r.q2, r.q3);
        Self::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;

    #[inline]
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl MulAssign for Quaternion {
    #[inline]
    fn mul_assign(&mut self, r: Self) {
        *self = *self * r;
    }
}

impl Add for Quaternion {
    type Output = Self;

    #[inline]
    fn add(self, r: Self) -> Self {
        Self::new(
            self.q0 + r.q0,
            self.q1 + r.q1,
            self.q2 + r.q2,
            self.q3 + r.q3,
        )
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, r: Self) {
        self.q0 += r.q0;
        self.q1 += r.q1;
        self.q2 += r.q2;
        self.q3 += r.q3;
    }
}

impl Sub for Quaternion {
    type Output = Self;

    #[inline]
    fn sub(self, r: Self) -> Self {
        Self::new(
            self.q0 - r.q0,
            self.q1 - r.q1,
            self.q2 - r.q2,
            self.q3 - r.q3,
        )
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, r: Self) {
        *self = *self - r;
    }
}

impl Neg for Quaternion {
    type Output = Self;

    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.q0, -self.q1, -self.q2, -self.q3)
    }
}

impl std::iter::Sum for Quaternion {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Quaternion {
    /// Always writes all four terms, e.g. `1-2i+0j+0.5k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q0)?;
        for (c, unit) in [(self.q1, 'i'), (self.q2, 'j'), (self.q3, 'k')] {
            if c.is_sign_negative() {
                write!(f, "-{}{unit}", -c)?;
            } else {
                write!(f, "+{c}{unit}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    /// Parses `a+bi+cj+dk` with any subset of the terms, in any order.
    /// A bare unit means coefficient one (`i`, `-k`).
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse {
                offset: 0,
                message: "empty quaternion literal".into(),
            });
        }
        let bytes = s.as_bytes();
        let mut starts = vec![0usize];
        for idx in 1..bytes.len() {
            let b = bytes[idx];
            let prev = bytes[idx - 1];
            if (b == b'+' || b == b'-') && prev != b'e' && prev != b'E' {
                starts.push(idx);
            }
        }
        starts.push(bytes.len());

        let mut out = [0.0; 4];
        let mut seen = [false; 4];
        for w in starts.windows(2) {
            let term = &s[w[0]..w[1]];
            let (body, slot) = match term.chars().last() {
                Some('i') => (&term[..term.len() - 1], 1),
                Some('j') => (&term[..term.len() - 1], 2),
                Some('k') => (&term[..term.len() - 1], 3),
                _ => (term, 0),
            };
            let coeff = match body {
                "" | "+" if slot != 0 => 1.0,
                "-" if slot != 0 => -1.0,
                _ => body.parse::<f64>().map_err(|e| Error::Parse {
                    offset: w[0],
                    message: format!("bad coefficient {body:?}: {e}"),
                })?,
            };
            if seen[slot] {
                return Err(Error::Parse {
                    offset: w[0],
                    message: format!("repeated term {term:?}"),
                });
            }
            seen[slot] = true;
            out[slot] = coeff;
        }
        Ok(Self::from_array(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    /// Hamilton's table on basis indices (0=1, 1=i, 2=j, 3=k): (sign, index).
    const TABLE: [[(f64, usize); 4]; 4] = [
        [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
        [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
        [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
        [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
    ];

    fn table_mul(p: Quaternion, q: Quaternion) -> Quaternion {
        let (a, b) = (p.to_array(), q.to_array());
        let mut out = [0.0; 4];
        for (r, row) in TABLE.iter().enumerate() {
            for (c, &(sign, idx)) in row.iter().enumerate() {
                out[idx] += sign * a[r] * b[c];
            }
        }
        Quaternion::from_array(out)
    }

    fn q() -> impl Strategy<Value = Quaternion> {
        prop::array::uniform4(-10.0..10.0f64).prop_map(Quaternion::from_array)
    }

    #[test]
    fn basis_products() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        for u in [Q::I, Q::J, Q::K] {
            assert_eq!(u * u, -Q::ONE);
        }
        let p = Q::new(1.5, -2.0, 0.25, 7.0);
        assert_eq!(p * Q::ONE, p);
    }

    #[test]
    fn expanded_product() {
        let p = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        let q = Quaternion::new(1.0, 0.0, 1.0, 0.0);
        assert_eq!(p * q, table_mul(p, q));
        assert_eq!(p * q, Quaternion::new(1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Quaternion::I.conj(), -Quaternion::I);
        let p = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        let q = Quaternion::new(1.0, 0.0, 1.0, 0.0);
        let lhs = (p * q).conj();
        let rhs = table_mul(q.conj(), p.conj());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Quaternion::new(1.0, -1.0, -1.0, -1.0));
    }

    #[test]
    fn modulus_values() {
        assert_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).modulus(), 2.0);
        assert_eq!(Quaternion::ZERO.modulus(), 0.0);
        assert_eq!(
            Quaternion::new(1e200, 1e200, 0.0, 0.0).modulus(),
            1e200 * SQRT_2
        );
    }

    #[test]
    fn inverses() {
        assert_eq!(Quaternion::I.inverse().unwrap(), -Quaternion::I);
        assert_eq!(
            Quaternion::from_real(2.0).inverse().unwrap(),
            Quaternion::from_real(0.5)
        );
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        let inv = q.inverse().unwrap();
        assert_eq!(inv, Quaternion::new(0.25, -0.25, -0.25, -0.25));
        assert!((table_mul(q, inv)).max_abs_diff(Quaternion::ONE) < 1e-15);
        assert!(matches!(Quaternion::ZERO.inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn polar_examples() {
        let p = Quaternion::I.polar().unwrap();
        assert_eq!((p.modulus, p.axis), (1.0, Quaternion::I));
        assert!((p.angle - FRAC_PI_2).abs() < 1e-15);

        let p = Quaternion::from_real(-3.0).polar().unwrap();
        assert_eq!((p.modulus, p.axis, p.angle), (3.0, Quaternion::I, PI));

        let p = Quaternion::from_real(2.0).polar().unwrap();
        assert_eq!((p.axis, p.angle), (Quaternion::I, 0.0));

        let q = Quaternion::new(1.0, 0.0, 0.0, 1.0);
        let p = q.polar().unwrap();
        assert!((p.modulus - SQRT_2).abs() < 1e-15);
        assert_eq!(p.axis, Quaternion::K);
        assert!((p.angle - FRAC_PI_4).abs() < 1e-15);
        assert!(p.reconstruct().max_abs_diff(q) < 1e-15);

        assert!(matches!(Quaternion::ZERO.polar(), Err(Error::Domain(_))));
    }

    #[test]
    fn text_form() {
        let cases = [
            ("1+2i+3j+4k", Quaternion::new(1.0, 2.0, 3.0, 4.0)),
            ("i", Quaternion::I),
            ("-k", -Quaternion::K),
            ("-3", Quaternion::from_real(-3.0)),
            ("1+k", Quaternion::new(1.0, 0.0, 0.0, 1.0)),
            ("2.5e-3-0.5j", Quaternion::new(2.5e-3, 0.0, -0.5, 0.0)),
            ("4k + 1e+2", Quaternion::new(100.0, 0.0, 0.0, 4.0)),
        ];
        for (text, want) in cases {
            assert_eq!(text.parse::<Quaternion>().unwrap(), want, "{text}");
        }
        assert!("1+i+i".parse::<Quaternion>().is_err());
        assert!("".parse::<Quaternion>().is_err());
        assert!("1+xi".parse::<Quaternion>().is_err());
        assert_eq!(
            Quaternion::new(1.0, -2.0, 0.0, 0.5).to_string(),
            "1-2i+0j+0.5k"
        );
    }

    proptest! {
        #[test]
        fn product_matches_table(p in q(), r in q()) {
            prop_assert!((p * r).max_abs_diff(table_mul(p, r)) < 1e-12);
        }

        #[test]
        fn multiplicative_modulus(p in q(), r in q()) {
            let lhs = (p * r).modulus();
            let rhs = p.modulus() * r.modulus();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-12));
        }

        #[test]
        fn anti_involution(p in q(), r in q()) {
            prop_assert!((p * r).conj().max_abs_diff(r.conj() * p.conj()) < 1e-12);
            prop_assert_eq!(p.conj().conj(), p);
        }

        #[test]
        fn associative(p in q(), r in q(), s in q()) {
            let scale = p.modulus() * r.modulus() * s.modulus();
            prop_assert!(((p * r) * s).max_abs_diff(p * (r * s)) <= 1e-12 * scale.max(1.0));
        }

        #[test]
        fn inverse_both_sides(p in q()) {
            prop_assume!(p.modulus() > 1e-3);
            let inv = p.inverse().unwrap();
            prop_assert!((p * inv).max_abs_diff(Quaternion::ONE) < 1e-12);
            prop_assert!((inv * p).max_abs_diff(Quaternion::ONE) < 1e-12);
        }

        #[test]
        fn polar_round_trip(p in q()) {
            prop_assume!(!p.is_zero());
            let polar = p.polar().unwrap();
            prop_assert!((0.0..=PI).contains(&polar.angle));
            if p.vector().modulus() > 0.0 {
                prop_assert!((polar.axis * polar.axis).max_abs_diff(-Quaternion::ONE) < 1e-12);
            }
            prop_assert!(polar.reconstruct().max_abs_diff(p) < 1e-10);
        }

        #[test]
        fn display_parse_round_trip(p in q()) {
            prop_assert_eq!(p.to_string().parse::<Quaternion>().unwrap(), p);
        }
    }
}
