//! Named built-in inputs: `gaussian`, `delta`, `zero`,
//! `polygauss:m,n,alpha` and `noise:seed`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qft::{Poly2, PolyGauss};
use crate::qsignal::{GridSpec, QSignal};
use crate::quaternion::Quaternion;
use crate::uncertainty::Subject;

pub const FIXTURE_NAMES: &str = "gaussian, delta, zero, polygauss:m,n,alpha, noise:seed";

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Fixture {
    /// `e^{-π|x|²}`.
    Gaussian,
    /// Unit-mass spike at the origin.
    Delta,
    Zero,
    /// `x1^m x2^n e^{-πα|x|²}`.
    PolyGauss {
        m: usize,
        n: usize,
        alpha: f64,
    },
    /// Quaternion samples uniform in `[-1, 1)` per component.
    Noise {
        seed: u64,
    },
}

impl Fixture {
    /// The closed form, where there is one.
    pub fn closed_form(&self) -> Option<PolyGauss> {
        match *self {
            Fixture::Gaussian => Some(PolyGauss::gaussian(1.0).expect("positive width")),
            Fixture::Zero => Some(PolyGauss::new(Poly2::zero(), 1.0).expect("positive width")),
            Fixture::PolyGauss { m, n, alpha } => PolyGauss::monomial(m, n, alpha).ok(),
            Fixture::Delta | Fixture::Noise { .. } => None,
        }
    }

    pub fn sample(&self, grid: GridSpec) -> QSignal {
        match *self {
            Fixture::Delta => QSignal::delta(grid),
            Fixture::Noise { seed } => noise(grid, seed),
            _ => self
                .closed_form()
                .expect("closed-form fixture")
                .sample(grid),
        }
    }

    /// Closed-form subject where possible, sampled on `grid` otherwise.
    pub fn subject(&self, grid: GridSpec) -> Subject {
        let subject = match self.closed_form() {
            Some(f) => Subject::analytic(f),
            None => Subject::sampled(self.sample(grid)),
        };
        subject.with_label(self.to_string())
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::Gaussian => f.write_str("gaussian"),
            Fixture::Delta => f.write_str("delta"),
            Fixture::Zero => f.write_str("zero"),
            Fixture::PolyGauss { m, n, alpha } => write!(f, "polygauss:{m},{n},{alpha}"),
            Fixture::Noise { seed } => write!(f, "noise:{seed}"),
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Argument(format!("unknown fixture '{s}'; valid: {FIXTURE_NAMES}"));
        let (head, args) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        match (head, args) {
            ("gaussian", None) => Ok(Fixture::Gaussian),
            ("delta", None) => Ok(Fixture::Delta),
            ("zero", None) => Ok(Fixture::Zero),
            ("noise", Some(seed)) => seed
                .trim()
                .parse()
                .map(|seed| Fixture::Noise { seed })
                .map_err(|_| unknown()),
            ("polygauss", Some(args)) => {
                let parts: Vec<&str> = args.split(',').map(str::trim).collect();
                let [m, n, alpha] = parts[..] else {
                    return Err(unknown());
                };
                let (m, n) = (
                    m.parse().map_err(|_| unknown())?,
                    n.parse().map_err(|_| unknown())?,
                );
                let alpha: f64 = alpha.parse().map_err(|_| unknown())?;
                if !(alpha > 0.0 && alpha.is_finite()) {
                    return Err(Error::Argument(format!(
                        "polygauss width must be positive, got {alpha}"
                    )));
                }
                Ok(Fixture::PolyGauss { m, n, alpha })
            }
            _ => Err(unknown()),
        }
    }
}

/// Deterministic quaternion noise.
pub fn noise(grid: GridSpec, seed: u64) -> QSignal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = (0..grid.len())
        .map(|_| Quaternion::from_array([(); 4].map(|_| rng.gen_range(-1.0..1.0))))
        .collect();
    QSignal::new(grid, samples).expect("one sample per point")
}

/// Deterministic real-valued noise.
pub fn real_noise(grid: GridSpec, seed: u64) -> QSignal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    QSignal::from_components(
        grid,
        [
            (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect(),
            vec![0.0; grid.len()],
            vec![0.0; grid.len()],
            vec![0.0; grid.len()],
        ],
    )
    .expect("one sample per point")
}

/// 64 × 64 samples on `[-6, 6)²`.
pub fn default_grid() -> GridSpec {
    GridSpec::centered_box(64, 6.0).expect("valid grid")
}
