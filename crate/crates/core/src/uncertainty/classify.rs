//! Finite-or-infinite decisions from values on a radius ladder.
//!
//! Integrals: a last relative increment below [`STABLE_INCREMENT`] is
//! convergent outright. Otherwise the shell increments
//! `Δ_k = P_k - P_{k-1}` decide: their exponent
//! `ln(Δ_K / Δ_{K-1}) / ln(R_K / R_{K-1})` is about `-(s - 1)` for a tail
//! decaying like `r^{-s}`, so a flat or growing shell (exponent
//! `≥ DIVERGENT_SHELL`, every increment positive) is divergent and a
//! clearly shrinking one (`≤ CONVERGENT_SHELL`) convergent. The band in
//! between is reported as inconclusive rather than guessed.
//!
//! Suprema: the running sup `C_k` is bounded when its growth exponent
//! `ln(C_K / C_{K-1}) / ln(R_K / R_{K-1})` is at most [`BOUNDED_GROWTH`]
//! and unbounded from [`UNBOUNDED_GROWTH`] on.

use std::fmt;

pub const STABLE_INCREMENT: f64 = 1e-3;
pub const DIVERGENT_SHELL: f64 = -0.15;
pub const CONVERGENT_SHELL: f64 = -0.3;
pub const BOUNDED_GROWTH: f64 = 0.2;
pub const UNBOUNDED_GROWTH: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Integral finite, or sup constant bounded.
    Convergent,
    /// Integral infinite, or sup constant unbounded.
    Divergent,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Convergent => "convergent",
            Verdict::Divergent => "divergent",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    /// Divergent beats inconclusive beats convergent.
    pub fn combine(self, other: Self) -> Self {
        use Verdict::*;
        match (self, other) {
            (Divergent, _) | (_, Divergent) => Divergent,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Convergent,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    pub verdict: Verdict,
    /// `P_K / P_{K-1} - 1` (integrals) or `C_K / C_{K-1} - 1` (suprema).
    pub relative_increment: f64,
    /// Shell exponent (integrals) or growth exponent (suprema) over the
    /// last rung.
    pub exponent: Option<f64>,
    /// Least-squares slope of `ln value` against `ln R`.
    pub slope: Option<f64>,
}

/// `ln(e^a - e^b)` for `a ≥ b`.
fn ln_diff(a: f64, b: f64) -> f64 {
    if b == f64::NEG_INFINITY {
        a
    } else {
        a + (-(b - a).exp()).ln_1p()
    }
}

fn relative_increment(ln_prev: f64, ln_last: f64) -> f64 {
    match (ln_prev == f64::NEG_INFINITY, ln_last == f64::NEG_INFINITY) {
        (true, true) => 0.0,
        (true, false) => f64::INFINITY,
        _ => (ln_last - ln_prev).exp_m1(),
    }
}

fn loglog_slope(radii: &[f64], ln_values: &[f64]) -> Option<f64> {
    if radii.len() < 2 || ln_values.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let xs: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (
        xs.iter().sum::<f64>() / n,
        ln_values.iter().sum::<f64>() / n,
    );
    let sxy: f64 = xs
        .iter()
        .zip(ln_values)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    Some(sxy / sxx)
}

/// Classifies nested partial integrals given as `ln P_k` on increasing radii.
pub fn classify_integral(radii: &[f64], ln_values: &[f64]) -> Diagnostics {
    assert!(
        radii.len() == ln_values.len() && radii.len() >= 3,
        "need at least three rungs"
    );
    let k = radii.len() - 1;
    let slope = loglog_slope(radii, ln_values);
    let done = |verdict, relative_increment, exponent| Diagnostics {
        verdict,
        relative_increment,
        exponent,
        slope,
    };

    if ln_values.iter().all(|&v| v == f64::NEG_INFINITY) {
        return done(Verdict::Convergent, 0.0, None);
    }
    if ln_values.iter().any(|v| v.is_nan()) {
        return done(Verdict::Inconclusive, f64::NAN, None);
    }
    if ln_values.iter().any(|&v| v == f64::INFINITY) {
        return done(Verdict::Divergent, f64::INFINITY, None);
    }
    let rel = relative_increment(ln_values[k - 1], ln_values[k]);
    let shells: Vec<f64> = ln_values.windows(2).map(|w| ln_diff(w[1], w[0])).collect();
    let (last, prev) = (shells[k - 1], shells[k - 2]);
    let exponent = if last == f64::NEG_INFINITY && prev == f64::NEG_INFINITY {
        None
    } else {
        Some((last - prev) / (radii[k] / radii[k - 1]).ln())
    };
    if rel < STABLE_INCREMENT {
        return done(Verdict::Convergent, rel, exponent);
    }
    let increasing = shells.iter().all(|v| v.is_finite());
    let verdict = match exponent {
        Some(e) if increasing && e >= DIVERGENT_SHELL => Verdict::Divergent,
        Some(e) if e <= CONVERGENT_SHELL => Verdict::Convergent,
        _ => Verdict::Inconclusive,
    };
    done(verdict, rel, exponent)
}

/// Classifies a running supremum given as `ln C_k` on increasing radii.
pub fn classify_supremum(radii: &[f64], ln_values: &[f64]) -> Diagnostics {
    assert!(
        radii.len() == ln_values.len() && radii.len() >= 2,
        "need at least two rungs"
    );
    let k = radii.len() - 1;
    let slope = loglog_slope(radii, ln_values);
    let (prev, last) = (ln_values[k - 1], ln_values[k]);
    if last == f64::NEG_INFINITY {
        return Diagnostics {
            verdict: Verdict::Convergent,
            relative_increment: 0.0,
            exponent: None,
            slope,
        };
    }
    if ln_values.iter().any(|v| v.is_nan()) {
        return Diagnostics {
            verdict: Verdict::Inconclusive,
            relative_increment: f64::NAN,
            exponent: None,
            slope,
        };
    }
    let rel = relative_increment(prev, last);
    let growth = (last - prev) / (radii[k] / radii[k - 1]).ln();
    let verdict = if last == f64::INFINITY || growth >= UNBOUNDED_GROWTH {
        Verdict::Divergent
    } else if growth <= BOUNDED_GROWTH {
        Verdict::Convergent
    } else {
        Verdict::Inconclusive
    };
    Diagnostics {
        verdict,
        relative_increment: rel,
        exponent: growth.is_finite().then_some(growth),
        slope,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LADDER: [f64; 4] = [2.0, 4.0, 8.0, 16.0];

    fn ln(v: &[f64]) -> Vec<f64> {
        v.iter().map(|x| x.ln()).collect()
    }

    #[test]
    fn zero_is_convergent() {
        let d = classify_integral(&LADDER, &[f64::NEG_INFINITY; 4]);
        assert_eq!(d.verdict, Verdict::Convergent);
    }

    #[test]
    fn stabilized_is_convergent() {
        let d = classify_integral(&LADDER, &ln(&[1.0, 1.5, 1.6, 1.6001]));
        assert_eq!(d.verdict, Verdict::Convergent);
        assert!(d.relative_increment < 1e-3);
    }

    #[test]
    fn power_tails() {
        // P(R) = 1 - R^{-s}: shell exponent -s
        for (s, want) in [
            (0.5, Verdict::Convergent),
            (1.0, Verdict::Convergent),
            (0.2, Verdict::Inconclusive),
        ] {
            let p: Vec<f64> = LADDER.iter().map(|r| 10.0 - r.powf(-s)).collect();
            let d = classify_integral(&LADDER, &ln(&p));
            assert!((d.exponent.unwrap() + s).abs() < 1e-9);
            assert_eq!(d.verdict, want, "s={s}");
        }
        // log growth and power growth diverge
        for p in [
            LADDER.map(f64::ln),
            LADDER.map(|r| r.powf(0.3)),
            LADDER.map(|r| r * r),
        ] {
            assert_eq!(
                classify_integral(&LADDER, &ln(&p)).verdict,
                Verdict::Divergent
            );
        }
    }

    #[test]
    fn huge_values_stay_finite_in_logs() {
        let ln_p: Vec<f64> = LADDER.iter().map(|r| 3.0 * r * r).collect();
        let d = classify_integral(&LADDER, &ln_p);
        assert_eq!(d.verdict, Verdict::Divergent);
        assert!(d.slope.unwrap() > 0.1);
    }

    #[test]
    fn suprema() {
        let bounded: Vec<f64> = LADDER.iter().map(|r| (r / (1.0 + r)).ln()).collect();
        assert_eq!(
            classify_supremum(&LADDER, &bounded).verdict,
            Verdict::Convergent
        );
        let linear: Vec<f64> = LADDER.iter().map(|r| r.ln()).collect();
        assert_eq!(
            classify_supremum(&LADDER, &linear).verdict,
            Verdict::Divergent
        );
        let gaussian: Vec<f64> = LADDER
            .iter()
            .map(|r| 0.5 * std::f64::consts::PI * r * r)
            .collect();
        assert_eq!(
            classify_supremum(&LADDER, &gaussian).verdict,
            Verdict::Divergent
        );
        assert_eq!(
            classify_supremum(&LADDER, &[f64::NEG_INFINITY; 4]).verdict,
            Verdict::Convergent
        );
    }

    #[test]
    fn combine_order() {
        use Verdict::*;
        assert_eq!(Convergent.combine(Convergent), Convergent);
        assert_eq!(Convergent.combine(Inconclusive), Inconclusive);
        assert_eq!(Inconclusive.combine(Divergent), Divergent);
    }
}
