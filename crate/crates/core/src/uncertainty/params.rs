use crate::error::{Error, Result};

/// Tolerance on `1/p + 1/q = 1` and on the critical products `αβ`.
pub const EXPONENT_TOL: f64 = 1e-12;

fn nonnegative(name: &str, v: f64) -> Result<f64> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Argument(format!(
            "{name} must be finite and >= 0, got {v}"
        )))
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Argument(format!(
            "{name} must be finite and > 0, got {v}"
        )))
    }
}

fn conjugate_pair(p: f64, q: f64) -> Result<(f64, f64)> {
    if !(p > 1.0 && p.is_finite() && q > 1.0 && q.is_finite()) {
        return Err(Error::Argument(format!(
            "p and q must lie in (1, inf), got p={p}, q={q}"
        )));
    }
    let gap = 1.0 / p + 1.0 / q - 1.0;
    if gap.abs() > EXPONENT_TOL {
        return Err(Error::Argument(format!(
            "1/p + 1/q must equal 1 (off by {gap:e})"
        )));
    }
    Ok((p, q))
}

/// The exponent `q` with `1/p + 1/q = 1`.
pub fn conjugate_exponent(p: f64) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::Argument(format!("p must lie in (1, inf), got {p}")));
    }
    Ok(p / (p - 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeurlingParams {
    pub d: f64,
}

impl BeurlingParams {
    pub fn new(d: f64) -> Result<Self> {
        Ok(Self {
            d: nonnegative("d", d)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardyParams {
    pub d: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl HardyParams {
    pub fn new(d: f64, alpha: f64, beta: f64) -> Result<Self> {
        Ok(Self {
            d: nonnegative("d", d)?,
            alpha: positive("alpha", alpha)?,
            beta: positive("beta", beta)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GelfandShilovParams {
    pub d: u32,
    pub alpha: f64,
    pub beta: f64,
    pub p: f64,
    pub q: f64,
}

impl GelfandShilovParams {
    pub fn new(d: u32, alpha: f64, beta: f64, p: f64, q: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !(v >= 1.0 && v.is_finite()) {
                return Err(Error::Argument(format!(
                    "{name} must be finite and >= 1, got {v}"
                )));
            }
        }
        let (p, q) = conjugate_pair(p, q)?;
        Ok(Self {
            d,
            alpha,
            beta,
            p,
            q,
        })
    }

    /// Accepts a real `d` as long as it is a nonnegative integer.
    pub fn from_real_d(d: f64, alpha: f64, beta: f64, p: f64, q: f64) -> Result<Self> {
        if !(d >= 0.0 && d.fract() == 0.0 && d <= u32::MAX as f64) {
            return Err(Error::Argument(format!(
                "d must be a nonnegative integer, got {d}"
            )));
        }
        Self::new(d as u32, alpha, beta, p, q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CowlingPriceParams {
    pub d: f64,
    pub alpha: f64,
    pub beta: f64,
    pub p: f64,
    pub q: f64,
}

impl CowlingPriceParams {
    pub fn new(d: f64, alpha: f64, beta: f64, p: f64, q: f64) -> Result<Self> {
        let (p, q) = conjugate_pair(p, q)?;
        Ok(Self {
            d: nonnegative("d", d)?,
            alpha: positive("alpha", alpha)?,
            beta: positive("beta", beta)?,
            p,
            q,
        })
    }
}
