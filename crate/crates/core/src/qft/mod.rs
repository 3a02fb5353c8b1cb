//! The two-sided quaternion Fourier transform
//! `F{f}(ξ) = ∫ e^{-i2πξ1x1} f(x) e^{-j2πξ2x2} dx` and its calculus.

mod convolve;
mod direct;
mod fast;
mod hermite;
mod polygauss;

pub use convolve::{convolve, parity_split_x1};
pub use direct::{qft_direct, qft_inverse_direct};
pub use fast::{qft_fast, qft_inverse};
pub use hermite::{eval_poly, hermite_factor};
pub use polygauss::{dilate, dilation_spectrum, qft_polygauss, Poly2, PolyGauss, QPolyGauss};
