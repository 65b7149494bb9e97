//! Disc-sampling checks of the two-sided argument condition
//! `−πα₁/2 < arg{z f′(z)/f(z)} < πα₂/2`.
//!
//! Sampling can only exhibit violations. A report with no violations is
//! serialized as `"no-violation-on-grid"`, never as proof of membership.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::{self, ClassParams};
use crate::series::{TruncatedSeries, CONSTANT_TERM_TOL};

pub const STATUS_NO_VIOLATION: &str = "no-violation-on-grid";
pub const STATUS_VIOLATED: &str = "violated";

/// Default slack (radians) on both window edges.
pub const DEFAULT_ARG_SLACK: f64 = 1e-9;

/// Relative threshold under which `|f(z)|/|z|` or `|f′(z)|` counts as a zero.
pub const DEFAULT_ZERO_GUARD: f64 = 1e-10;

/// `f`, `f′` and `f″` at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub f: Complex64,
    pub df: Complex64,
    pub d2f: Complex64,
}

/// A pointwise evaluator for an analytic function on the sampled sub-disc.
pub trait AnalyticFunction: Sync {
    fn jet(&self, z: Complex64) -> Result<Jet>;
}

impl<F: AnalyticFunction + ?Sized> AnalyticFunction for &F {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        (**self).jet(z)
    }
}

impl<F: AnalyticFunction + ?Sized + Send> AnalyticFunction for Box<F> {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        (**self).jet(z)
    }
}

/// `f(z) = z`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Identity;

impl AnalyticFunction for Identity {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        Ok(Jet {
            f: z,
            df: Complex64::new(1.0, 0.0),
            d2f: Complex64::new(0.0, 0.0),
        })
    }
}

/// `f(z) = z/(1 − z)^{2β}` in closed form; `β = 1` is the Koebe function.
#[derive(Debug, Clone, Copy)]
pub struct KoebeBeta {
    pub beta: f64,
}

impl AnalyticFunction for KoebeBeta {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisc { modulus: z.norm() });
        }
        let b2 = 2.0 * self.beta;
        let u = 1.0 - z;
        let base = u.powf(-b2);
        Ok(Jet {
            f: z * base,
            df: base / u * (1.0 + (b2 - 1.0) * z),
            d2f: b2 * base / (u * u) * (2.0 + (b2 - 1.0) * z),
        })
    }
}

/// `f(z) = z exp G̃(z)`, for which `z f′/f = G` and
/// `f″ = e^{G̃}(G (G − 1)/z + G′)`.
#[derive(Debug, Clone, Copy)]
pub struct Extremal {
    pub params: ClassParams,
}

impl AnalyticFunction for Extremal {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        let g_tilde = generator::g_tilde_eval(&self.params, z)?;
        let g = generator::g_eval_unchecked(&self.params, z);
        let dg = generator::g_derivative_unchecked(&self.params, z);
        let e = g_tilde.exp();
        let dg_tilde = if z.norm() == 0.0 {
            self.params.p() * (1.0 + self.params.c())
        } else {
            (g - 1.0) / z
        };
        Ok(Jet {
            f: z * e,
            df: e * g,
            d2f: e * (dg_tilde * g + dg),
        })
    }
}

/// A truncated series treated as the polynomial it represents.
#[derive(Debug, Clone)]
pub struct Polynomial {
    series: TruncatedSeries,
    first: TruncatedSeries,
    second: TruncatedSeries,
}

impl Polynomial {
    pub fn new(series: TruncatedSeries) -> Self {
        let first = series.derivative();
        let second = first.derivative();
        Self {
            series,
            first,
            second,
        }
    }
}

impl AnalyticFunction for Polynomial {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        Ok(Jet {
            f: self.series.horner(z),
            df: self.first.horner(z),
            d2f: self.second.horner(z),
        })
    }
}

/// The rotation `f_μ(z) = f(μz)/μ` for `|μ| = 1`.
#[derive(Debug, Clone, Copy)]
pub struct Rotated<F> {
    pub inner: F,
    pub mu: Complex64,
}

impl<F: AnalyticFunction> AnalyticFunction for Rotated<F> {
    fn jet(&self, z: Complex64) -> Result<Jet> {
        let j = self.inner.jet(self.mu * z)?;
        Ok(Jet {
            f: j.f / self.mu,
            df: j.df,
            d2f: j.d2f * self.mu,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    radii: Vec<f64>,
    angles_per_radius: usize,
}

impl SampleGrid {
    pub fn new(radii: Vec<f64>, angles_per_radius: usize) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::InvalidGrid("no radii".into()));
        }
        if let Some(r) = radii.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
            return Err(Error::InvalidGrid(format!("radius {r} not in (0, 1)")));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("radii must be strictly increasing".into()));
        }
        if angles_per_radius < 8 {
            return Err(Error::InvalidGrid(format!(
                "need at least 8 angles per radius, got {angles_per_radius}"
            )));
        }
        Ok(Self {
            radii,
            angles_per_radius,
        })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles_per_radius(&self) -> usize {
        self.angles_per_radius
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles_per_radius
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sample `i`, radius-major: radius `i / M`, angle `2π (i mod M) / M`.
    pub fn point(&self, i: usize) -> Complex64 {
        let m = self.angles_per_radius;
        let r = self.radii[i / m];
        Complex64::from_polar(r, 2.0 * PI * (i % m) as f64 / m as f64)
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.len()).map(move |i| self.point(i))
    }

    pub fn max_radius(&self) -> f64 {
        *self.radii.last().expect("grid has radii")
    }
}

impl Default for SampleGrid {
    /// Radii `0.1, 0.2, …, 0.9, 0.95, 0.99` with 720 angles each.
    fn default() -> Self {
        let mut radii: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
        radii.extend([0.95, 0.99]);
        Self::new(radii, 720).expect("default grid is valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub z: Complex64,
    pub arg: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArgWindowReport {
    pub total_samples: usize,
    pub violations: Vec<Violation>,
    pub min_arg: f64,
    pub max_arg: f64,
    pub passed: bool,
}

impl ArgWindowReport {
    pub fn status(&self) -> &'static str {
        if self.passed {
            STATUS_NO_VIOLATION
        } else {
            STATUS_VIOLATED
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    fn from_samples(samples: Vec<(Complex64, Complex64)>, params: &ClassParams, slack: f64) -> Self {
        let mut violations = Vec::new();
        let mut min_arg = f64::INFINITY;
        let mut max_arg = f64::NEG_INFINITY;
        for (z, w) in &samples {
            let arg = principal_arg(*w);
            min_arg = min_arg.min(arg);
            max_arg = max_arg.max(arg);
            let inside = generator::omega_contains_with_slack(params, *w, slack).unwrap_or(false);
            if !inside {
                violations.push(Violation { z: *z, arg });
            }
        }
        Self {
            total_samples: samples.len(),
            passed: violations.is_empty(),
            violations,
            min_arg,
            max_arg,
        }
    }
}

impl Serialize for ArgWindowReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            re: f64,
            im: f64,
            arg: f64,
        }
        let rows: Vec<Row> = self
            .violations
            .iter()
            .map(|v| Row {
                re: v.z.re,
                im: v.z.im,
                arg: v.arg,
            })
            .collect();
        let mut s = serializer.serialize_struct("ArgWindowReport", 5)?;
        s.serialize_field("status", self.status())?;
        s.serialize_field("total", &self.total_samples)?;
        s.serialize_field("min_arg", &self.min_arg)?;
        s.serialize_field("max_arg", &self.max_arg)?;
        s.serialize_field("violations", &rows)?;
        s.end()
    }
}

/// Argument in `(−π, π]`.
fn principal_arg(w: Complex64) -> f64 {
    let a = w.arg();
    if a <= -PI {
        PI
    } else {
        a
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOptions {
    pub slack: f64,
    pub zero_guard: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            slack: DEFAULT_ARG_SLACK,
            zero_guard: DEFAULT_ZERO_GUARD,
        }
    }
}

/// Series of `z f′(z)/f(z)` for normalized `f`, formed as
/// `(z·f′) · reciprocal(f/z)`; the order drops by one.
pub fn ratio_series(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    if f.order() < 1
        || f.coeff(0).norm() > CONSTANT_TERM_TOL
        || (f.coeff(1) - 1.0).norm() > CONSTANT_TERM_TOL
    {
        return Err(Error::NotNormalized);
    }
    let quotient = f.div_z()?;
    Ok(&f.derivative() * &quotient.reciprocal()?)
}

/// Evaluates `z f′/f` at every grid point and tests it against the window.
pub fn check_membership<F: AnalyticFunction>(
    f: &F,
    params: &ClassParams,
    grid: &SampleGrid,
) -> Result<ArgWindowReport> {
    check_membership_with(f, params, grid, &CheckOptions::default())
}

pub fn check_membership_with<F: AnalyticFunction>(
    f: &F,
    params: &ClassParams,
    grid: &SampleGrid,
    options: &CheckOptions,
) -> Result<ArgWindowReport> {
    let samples = evaluate(grid, |z| {
        let j = f.jet(z)?;
        if !(j.f.norm() > options.zero_guard * z.norm()) {
            return Err(Error::ZeroOfF { z });
        }
        Ok(z * j.df / j.f)
    })?;
    Ok(ArgWindowReport::from_samples(samples, params, options.slack))
}

/// Evaluates `1 + z f″/f′` on a grid inside `|z| ≤ 1/(1 + 2cos(πθ/2))` and
/// tests it against the window.
pub fn check_convexity_condition<F: AnalyticFunction>(
    f: &F,
    params: &ClassParams,
    grid: &SampleGrid,
) -> Result<ArgWindowReport> {
    check_convexity_condition_with(f, params, grid, &CheckOptions::default())
}

pub fn check_convexity_condition_with<F: AnalyticFunction>(
    f: &F,
    params: &ClassParams,
    grid: &SampleGrid,
    options: &CheckOptions,
) -> Result<ArgWindowReport> {
    let max = params.validity_radius();
    let r = grid.max_radius();
    if r > max * (1.0 + 4.0 * f64::EPSILON) {
        return Err(Error::RadiusOutOfRange { r, max });
    }
    let samples = evaluate(grid, |z| {
        let j = f.jet(z)?;
        if !(j.df.norm() > options.zero_guard) {
            return Err(Error::ZeroOfFPrime { z });
        }
        Ok(1.0 + z * j.d2f / j.df)
    })?;
    Ok(ArgWindowReport::from_samples(samples, params, options.slack))
}

/// Evaluates in parallel; results (and the first error) are taken in grid
/// index order so reports do not depend on scheduling.
fn evaluate<E>(grid: &SampleGrid, eval: E) -> Result<Vec<(Complex64, Complex64)>>
where
    E: Fn(Complex64) -> Result<Complex64> + Sync,
{
    let results: Vec<Result<(Complex64, Complex64)>> = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let z = grid.point(i);
            let w = eval(z)?;
            if !(w.re.is_finite() && w.im.is_finite()) {
                return Err(Error::EvaluationFailure(format!("non-finite value at z = {z}")));
            }
            Ok((z, w))
        })
        .collect();
    results.into_iter().collect()
}
