use std::f64::consts::PI;

use super::classify::{classify_integral, classify_supremum, Verdict};
use super::params::{
    BeurlingParams, CowlingPriceParams, GelfandShilovParams, HardyParams, EXPONENT_TOL,
};
use super::report::{CertificateReport, Conclusion, Rung, Series, SeriesKind, Theorem};
use super::subject::{log_sum_exp, Radial, Side, Subject};
use crate::error::{Error, Result};
use crate::parallel;

/// Ladder for integrals of closed-form subjects.
pub const LADDER: [f64; 4] = [2.0, 4.0, 8.0, 16.0];
/// Ladder for Hardy suprema of closed-form subjects. The polynomial
/// factor `r^k (1+r)^{-d}` only settles for `r ≫ d`, so the sup ladder
/// runs further out than the integral one; the evaluation stays in log
/// space, where this costs nothing in accuracy.
pub const SUP_LADDER: [f64; 6] = [2.0, 4.0, 8.0, 16.0, 32.0, 64.0];

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "truncation radius must be positive and finite, got {r}"
        )))
    }
}

/// `ln` of the Beurling double sum over nodes inside `rx` and `ry`.
fn beurling_ln(x: &Radial, y: &Radial, d: f64, rx: f64, ry: f64) -> f64 {
    let (nx, ny) = (x.count_within(rx), y.count_within(ry));
    let rows = parallel::map_indices(nx, |i| {
        let (r, lw) = (x.r[i], x.ln_w[i]);
        if lw == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        log_sum_exp((0..ny).map(|j| {
            let s = y.r[j];
            lw + y.ln_w[j] + 2.0 * PI * r * s - d * (1.0 + r + s).ln()
        }))
    });
    log_sum_exp(rows)
}

/// Nodes up to the largest radius of a ladder.
fn radial_for(side: &Side<'_>, power: f64, ladder: &[f64]) -> Radial {
    side.radial(power, ladder.iter().copied().fold(0.0, f64::max))
}

/// `∫_{|x|≤R} |g|^power e^{weight(|x|)} dx` on each rung, in logs.
fn single_series(
    label: &'static str,
    side: &Side<'_>,
    power: f64,
    weight: impl Fn(f64) -> f64,
    ladder: &[f64],
) -> Series {
    let radial = radial_for(side, power, ladder);
    let terms: Vec<f64> = radial
        .r
        .iter()
        .zip(&radial.ln_w)
        .map(|(&r, &w)| w + weight(r))
        .collect();
    let ln_values: Vec<f64> = ladder
        .iter()
        .map(|&rad| log_sum_exp(terms[..radial.count_within(rad)].iter().copied()))
        .collect();
    let diagnostics = classify_integral(ladder, &ln_values);
    let rungs = ladder
        .iter()
        .zip(ln_values)
        .map(|(&radius, ln_value)| Rung {
            radius,
            radius_y: None,
            ln_value,
            attained_at: None,
        })
        .collect();
    Series {
        label,
        kind: SeriesKind::Integral,
        rungs,
        diagnostics,
    }
}

/// Running `sup_{|x|≤R} |g(x)| e^{weight(|x|)}` on each rung, in logs.
fn sup_series(
    label: &'static str,
    side: &Side<'_>,
    weight: impl Fn(f64) -> f64,
    ladder: &[f64],
) -> Series {
    let points = side.points(ladder.iter().copied().fold(0.0, f64::max));
    let mut rungs = Vec::with_capacity(ladder.len());
    let mut best = (f64::NEG_INFINITY, None);
    let mut next = 0;
    for &radius in ladder {
        while next < points.len() && points[next].r <= radius * (1.0 + 1e-12) {
            let p = &points[next];
            let w = weight(p.r);
            let v = p.ln_abs + w;
            // ties within the rounding of the cancelling terms keep the innermost point
            let tie = 64.0 * f64::EPSILON * (p.ln_abs.abs() + w.abs()).max(1.0);
            if v > best.0 + tie || best.1.is_none() && v > f64::NEG_INFINITY {
                best = (v, Some(p.at));
            }
            next += 1;
        }
        rungs.push(Rung {
            radius,
            radius_y: None,
            ln_value: best.0,
            attained_at: best.1,
        });
    }
    let ln_values: Vec<f64> = rungs.iter().map(|r| r.ln_value).collect();
    let diagnostics = classify_supremum(ladder, &ln_values);
    Series {
        label,
        kind: SeriesKind::Supremum,
        rungs,
        diagnostics,
    }
}

/// Largest integer strictly below `bound`; `None` when `bound ≤ 0`.
pub fn largest_integer_below(bound: f64) -> Option<u32> {
    (bound > 0.0).then(|| (bound.ceil() - 1.0) as u32)
}

fn poly_or_zero(bound: f64, width: Option<f64>) -> Conclusion {
    match largest_integer_below(bound) {
        Some(max_degree) => Conclusion::PolyTimesGaussian { max_degree, width },
        None => Conclusion::Zero,
    }
}

fn ladders(subject: &Subject, analytic: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let (lx, ly) = (subject.ladder_x(analytic), subject.ladder_y(analytic));
    if lx[0] <= 0.0 || ly[0] <= 0.0 {
        return Err(Error::Argument(
            "grid too small for a radius ladder (needs at least 3 points per axis)".into(),
        ));
    }
    Ok((lx, ly))
}

/// Turns series into a report: overall verdict, then the statement's
/// conclusion if the hypothesis holds.
fn finish(
    theorem: Theorem,
    params: Vec<(&'static str, f64)>,
    subject: &Subject,
    series: Vec<Series>,
    case: Conclusion,
) -> CertificateReport {
    let verdict = series
        .iter()
        .fold(Verdict::Convergent, |v, s| v.combine(s.verdict()));
    let mut notes = Vec::new();
    let conclusion = match verdict {
        Verdict::Convergent if subject.is_zero() => {
            notes.push("subject is identically zero; every conclusion holds trivially".into());
            Conclusion::Zero
        }
        Verdict::Convergent => {
            if case == Conclusion::Zero {
                notes.push("hypothesis appears to hold for a nonzero subject although the statement forces zero".into());
            }
            case
        }
        Verdict::Divergent => {
            notes.push("hypothesis fails; the statement draws no conclusion".into());
            Conclusion::Unconstrained
        }
        Verdict::Inconclusive => {
            notes.push("ladder values do not settle the hypothesis either way".into());
            Conclusion::Unconstrained
        }
    };
    if theorem != Theorem::Hardy {
        notes.push(format!(
            "statements disagree on degree bounds; this one uses {}",
            theorem.degree_bound()
        ));
    }
    let fixture_consistent = subject.polygauss().map(|f| match conclusion {
        Conclusion::Zero => f.is_zero(),
        Conclusion::Unconstrained => true,
        Conclusion::PolyTimesGaussian { max_degree, width } => {
            let width_ok = width.map_or(true, |w| (w - PI * f.alpha()).abs() <= 1e-9 * w);
            f.is_zero() || (width_ok && f.degree().is_some_and(|k| k as u32 <= max_degree))
        }
    });
    CertificateReport {
        theorem,
        params,
        norm: subject.norm(),
        subject: subject.describe(),
        series,
        verdict,
        conclusion,
        fixture_consistent,
        notes,
    }
}

/// The Beurling double integral truncated to `|x|, |y| ≤ R`.
///
/// Returns `+inf` when the sum overflows `f64`; see
/// [`beurling_integral_ln`] for the logarithm.
pub fn beurling_integral(subject: &Subject, params: &BeurlingParams, radius: f64) -> Result<f64> {
    Ok(beurling_integral_ln(subject, params, radius)?.exp())
}

/// `ln` of [`beurling_integral`]; `-inf` for a zero integral.
pub fn beurling_integral_ln(
    subject: &Subject,
    params: &BeurlingParams,
    radius: f64,
) -> Result<f64> {
    check_radius(radius)?;
    let (x, y) = subject.sides()?;
    let (rx, ry) = (x.radial(1.0, radius), y.radial(1.0, radius));
    Ok(beurling_ln(&rx, &ry, params.d, radius, radius))
}

/// Runs the Beurling integral over the ladder and reports the class the
/// statement forces.
pub fn beurling_certify(subject: &Subject, params: &BeurlingParams) -> Result<CertificateReport> {
    let (lx, ly) = ladders(subject, &LADDER)?;
    let (x, y) = subject.sides()?;
    let (rx, ry) = (radial_for(&x, 1.0, &lx), radial_for(&y, 1.0, &ly));
    let ln_values: Vec<f64> = lx
        .iter()
        .zip(&ly)
        .map(|(&a, &b)| beurling_ln(&rx, &ry, params.d, a, b))
        .collect();
    let diagnostics = classify_integral(&lx, &ln_values);
    let split = !subject.is_analytic();
    let rungs = lx
        .iter()
        .zip(&ly)
        .zip(ln_values)
        .map(|((&radius, &ry), ln_value)| Rung {
            radius,
            radius_y: split.then_some(ry),
            ln_value,
            attained_at: None,
        })
        .collect();
    let series = vec![Series {
        label: "double integral",
        kind: SeriesKind::Integral,
        rungs,
        diagnostics,
    }];
    let case = if params.d <= 2.0 {
        Conclusion::Zero
    } else {
        poly_or_zero((params.d - 2.0) / 2.0, None)
    };
    Ok(finish(
        Theorem::Beurling,
        vec![("d", params.d)],
        subject,
        series,
        case,
    ))
}

/// Minimal constants in the two Gaussian decay bounds, on growing disks.
pub fn hardy_check(subject: &Subject, params: &HardyParams) -> Result<CertificateReport> {
    let (lx, ly) = ladders(subject, &SUP_LADDER)?;
    let (x, y) = subject.sides()?;
    let HardyParams { d, alpha, beta } = *params;
    let series = vec![
        sup_series("sup f", &x, |r| PI * alpha * r * r - d * r.ln_1p(), &lx),
        sup_series("sup F", &y, |r| PI * beta * r * r - d * r.ln_1p(), &ly),
    ];
    let ab = alpha * beta;
    let case = if ab > 1.0 + EXPONENT_TOL {
        Conclusion::Zero
    } else if (ab - 1.0).abs() <= EXPONENT_TOL {
        Conclusion::PolyTimesGaussian {
            max_degree: d.floor() as u32,
            width: Some(PI * alpha),
        }
    } else {
        Conclusion::Unconstrained
    };
    Ok(finish(
        Theorem::Hardy,
        vec![("d", d), ("alpha", alpha), ("beta", beta)],
        subject,
        series,
        case,
    ))
}

pub fn gelfand_shilov_check(
    subject: &Subject,
    params: &GelfandShilovParams,
) -> Result<CertificateReport> {
    let (lx, ly) = ladders(subject, &LADDER)?;
    let (x, y) = subject.sides()?;
    let GelfandShilovParams {
        d,
        alpha,
        beta,
        p,
        q,
    } = *params;
    let d = d as f64;
    let (cx, cy) = (2.0 * PI * alpha.powf(p) / p, 2.0 * PI * beta.powf(q) / q);
    let series = vec![
        single_series(
            "x-integral",
            &x,
            1.0,
            |r| cx * r.powf(p) - d * r.ln_1p(),
            &lx,
        ),
        single_series(
            "y-integral",
            &y,
            1.0,
            |r| cy * r.powf(q) - d * r.ln_1p(),
            &ly,
        ),
    ];
    let off_diagonal = (p - 2.0).abs() > EXPONENT_TOL || (q - 2.0).abs() > EXPONENT_TOL;
    let case = if off_diagonal || alpha * beta > 1.0 + EXPONENT_TOL {
        Conclusion::Zero
    } else {
        poly_or_zero(d - 2.0, Some(PI * alpha * alpha))
    };
    let params = vec![
        ("d", d),
        ("alpha", alpha),
        ("beta", beta),
        ("p", p),
        ("q", q),
    ];
    Ok(finish(
        Theorem::GelfandShilov,
        params,
        subject,
        series,
        case,
    ))
}

pub fn cowling_price_check(
    subject: &Subject,
    params: &CowlingPriceParams,
) -> Result<CertificateReport> {
    let (lx, ly) = ladders(subject, &LADDER)?;
    let (x, y) = subject.sides()?;
    let CowlingPriceParams {
        d,
        alpha,
        beta,
        p,
        q,
    } = *params;
    let series = vec![
        single_series(
            "x-integral",
            &x,
            p,
            |r| p * (2.0 * PI * alpha * r * r - d * r.ln_1p()),
            &lx,
        ),
        single_series(
            "y-integral",
            &y,
            q,
            |r| q * (2.0 * PI * beta * r * r - d * r.ln_1p()),
            &ly,
        ),
    ];
    let ab = alpha * beta;
    let case = if ab > 0.25 + EXPONENT_TOL {
        Conclusion::Zero
    } else if (ab - 0.25).abs() <= EXPONENT_TOL {
        poly_or_zero(((d - 2.0) / p).min((d - 2.0) / q), Some(2.0 * PI * alpha))
    } else {
        Conclusion::Unconstrained
    };
    let params = vec![
        ("d", d),
        ("alpha", alpha),
        ("beta", beta),
        ("p", p),
        ("q", q),
    ];
    Ok(finish(Theorem::CowlingPrice, params, subject, series, case))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_below() {
        assert_eq!(largest_integer_below(1.5), Some(1));
        assert_eq!(largest_integer_below(1.0), Some(0));
        assert_eq!(largest_integer_below(0.5), Some(0));
        assert_eq!(largest_integer_below(3.0), Some(2));
        assert_eq!(largest_integer_below(0.0), None);
        assert_eq!(largest_integer_below(-1.0), None);
    }

    #[test]
    fn radius_validation() {
        let s = Subject::analytic(crate::qft::PolyGauss::gaussian(1.0).unwrap());
        let p = BeurlingParams::new(3.0).unwrap();
        assert!(beurling_integral(&s, &p, 0.0).is_err());
        assert!(beurling_integral(&s, &p, f64::NAN).is_err());
    }
}
