//! Sampled quaternion signals, their spectra, norms, and file formats.

mod grid;
pub mod io;
mod signal;
mod spectrum;

pub use grid::GridSpec;
pub use signal::{relative_frobenius, QSignal};
pub use spectrum::QSpectrum;
