//! Numerical toolkit for the class of analytic functions whose logarithmic
//! derivative `z f'(z) / f(z)` stays inside the two-sided sector
//! `-πα₁/2 < arg w < πα₂/2` on the unit disc.
//!
//! The crate is organized bottom-up:
//!
//! * [`series`] – truncated complex power series algebra.
//! * [`precise`] – big-integer fixed point used where double precision
//!   cancels catastrophically (the coefficient sums of the generator).
//! * [`generator`] – class parameters, the generator `G`, its coefficients
//!   `λ_n`, the integrated generator `G̃` and the sector `Ω`.
//! * [`membership`] – disc-sampling checks of the argument condition.
//! * [`bounds`] – closed-form real-part, growth, logarithmic-coefficient and
//!   coefficient bounds.
//! * [`extremal`] – extremal functions and logarithmic coefficients.
//! * [`verify`] – seeded invariant suites shared by the CLI and the bindings.

// negated comparisons are deliberate: NaN must fail them
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod extremal;
pub mod generator;
pub mod membership;
pub mod precise;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use bounds::{BoundEntry, BoundKind, BoundTable};
pub use extremal::NormalizedFunction;
pub use generator::ClassParams;
pub use membership::{AnalyticFunction, ArgWindowReport, Jet, SampleGrid};
pub use series::TruncatedSeries;
pub use verify::VerifyReport;
