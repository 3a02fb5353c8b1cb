//! Two-sided quaternion Fourier transform on sampled 2D signals, with
//! numerical certificates for Beurling, Hardy, Gelfand–Shilov and
//! Cowling–Price type uncertainty conditions.
//!
//! * [`quaternion`]: Hamilton arithmetic.
//! * [`qsignal`]: grids, sampled signals and spectra, norms, file formats.
//! * [`qft`]: direct and FFT transforms, inverse, convolution, closed forms.
//! * [`uncertainty`]: hypothesis checks and the conclusions they force.
//! * [`fixtures`] and [`checks`]: named inputs and lemma checks shared by
//!   the CLI and the test suites.

pub mod checks;
pub mod error;
pub mod fixtures;
mod parallel;
pub mod qft;
pub mod qsignal;
pub mod quaternion;
pub mod uncertainty;

pub use error::{Error, Result};
pub use parallel::worker_count;
pub use qsignal::{GridSpec, QSignal, QSpectrum};
pub use quaternion::Quaternion;
