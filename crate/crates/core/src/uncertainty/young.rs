use super::params::EXPONENT_TOL;
use crate::error::{Error, Result};

/// `(α^p/p)|x|^p + (β^q/q)|y|^q - αβ|x||y|`, nonnegative by Young's
/// inequality for conjugate `p, q`.
pub fn young_slack(x: f64, y: f64, alpha: f64, beta: f64, p: f64, q: f64) -> Result<f64> {
    if !(p > 1.0 && q > 1.0 && (1.0 / p + 1.0 / q - 1.0).abs() <= EXPONENT_TOL) {
        return Err(Error::Argument(format!(
            "p={p}, q={q} are not conjugate exponents"
        )));
    }
    if !(alpha >= 0.0 && beta >= 0.0) {
        return Err(Error::Argument("alpha and beta must be nonnegative".into()));
    }
    let (x, y) = (x.abs(), y.abs());
    Ok((alpha * x).powf(p) / p + (beta * y).powf(q) / q - alpha * beta * x * y)
}

/// Whether `αβ|x||y| ≤ (α^p/p)|x|^p + (β^q/q)|y|^q`, up to a relative
/// rounding slack of `1e-12`.
pub fn young_bound_check(x: f64, y: f64, alpha: f64, beta: f64, p: f64, q: f64) -> Result<bool> {
    let slack = young_slack(x, y, alpha, beta, p, q)?;
    let scale = (alpha * beta * x.abs() * y.abs()).max(1.0);
    Ok(slack >= -1e-12 * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn equality_cases() {
        assert_eq!(young_slack(0.0, 0.0, 1.0, 1.0, 2.0, 2.0).unwrap(), 0.0);
        for x in [0.3, 1.0, 7.5, -2.0] {
            assert_eq!(young_slack(x, x.abs(), 1.0, 1.0, 2.0, 2.0).unwrap(), 0.0);
        }
        // equality for general p when (αx)^p = (βy)^q
        let (p, q) = (3.0, 1.5);
        let ax: f64 = 1.7;
        let by = ax.powf(p / q);
        assert!(young_slack(ax, by, 1.0, 1.0, p, q).unwrap().abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(young_bound_check(1.0, 1.0, 1.0, 1.0, 2.0, 3.0).is_err());
        assert!(young_bound_check(1.0, 1.0, 1.0, 1.0, 1.0, f64::INFINITY).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn holds_on_random_tuples(
            x in -20.0..20.0f64, y in -20.0..20.0f64,
            alpha in 0.0..5.0f64, beta in 0.0..5.0f64, p in 1.05..8.0f64,
        ) {
            let q = p / (p - 1.0);
            prop_assert!(young_bound_check(x, y, alpha, beta, p, q).unwrap());
        }
    }
}
