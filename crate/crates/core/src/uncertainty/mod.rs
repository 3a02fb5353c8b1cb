//! Numerical certificates for the uncertainty statements.
//!
//! Each check evaluates the statement's hypothesis on a ladder of
//! truncation radii, classifies it as finite or not (see [`classify`]),
//! and reports the class of functions the statement then forces. The
//! spectrum enters through `‖F{f}‖_Q` unless the subject asks for the
//! plain modulus.

mod certify;
pub mod classify;
mod params;
mod report;
mod subject;
mod young;

pub use certify::{
    beurling_certify, beurling_integral, beurling_integral_ln, cowling_price_check,
    gelfand_shilov_check, hardy_check, largest_integer_below, LADDER, SUP_LADDER,
};
pub use classify::{Diagnostics, Verdict};
pub use params::{
    conjugate_exponent, BeurlingParams, CowlingPriceParams, GelfandShilovParams, HardyParams,
    EXPONENT_TOL,
};
pub use report::{CertificateReport, Conclusion, Rung, Series, SeriesKind, Theorem};
pub use subject::{SpectrumNorm, Subject};
pub use young::{young_bound_check, young_slack};
