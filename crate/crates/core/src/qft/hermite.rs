use std::f64::consts::PI;

/// Coefficients (ascending powers) of `P_m` with
/// `d^m/dx^m e^{-πx²} = e^{-πx²} P_m(x)`.
///
/// Built from `P_0 = 1`, `P_{m+1}(x) = -2πx P_m(x) + P_m'(x)`.
pub fn hermite_factor(m: usize) -> Vec<f64> {
    let mut p = vec![1.0];
    for _ in 0..m {
        let mut next = vec![0.0; p.len() + 1];
        for (k, &c) in p.iter().enumerate() {
            next[k + 1] -= 2.0 * PI * c;
            if k > 0 {
                next[k - 1] += k as f64 * c;
            }
        }
        p = next;
    }
    p
}

/// Horner evaluation of an ascending coefficient list.
pub fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        assert_eq!(hermite_factor(0), vec![1.0]);
        assert_eq!(hermite_factor(1), vec![0.0, -2.0 * PI]);
        // P_2 = 4π²x² - 2π
        let p2 = hermite_factor(2);
        assert_eq!(p2.len(), 3);
        assert!((p2[0] + 2.0 * PI).abs() < 1e-15);
        assert_eq!(p2[1], 0.0);
        assert!((p2[2] - 4.0 * PI * PI).abs() < 1e-12);
    }

    #[test]
    fn degree_and_parity() {
        for m in 0..8 {
            let p = hermite_factor(m);
            assert_eq!(p.len(), m + 1);
            assert_ne!(p[m], 0.0);
            for (k, c) in p.iter().enumerate() {
                if (k + m) % 2 == 1 {
                    assert_eq!(*c, 0.0);
                }
            }
        }
    }
}
