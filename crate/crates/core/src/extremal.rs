//! Extremal functions and logarithmic coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{self, ClassParams};
use crate::series::{TruncatedSeries, CONSTANT_TERM_TOL};

/// `f(z) = z + a₂z² + …` with `f(0) = 0` and `f′(0) = 1` held exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedFunction {
    series: TruncatedSeries,
    label: String,
}

impl NormalizedFunction {
    /// Wraps a series whose first two coefficients are exactly `0` and `1`.
    pub fn new(series: TruncatedSeries, label: impl Into<String>) -> Result<Self> {
        if series.order() < 1
            || series.coeff(0) != Complex64::new(0.0, 0.0)
            || series.coeff(1) != Complex64::new(1.0, 0.0)
        {
            return Err(Error::NotNormalized);
        }
        Ok(Self {
            series,
            label: label.into(),
        })
    }

    /// Builds `z · g(z)` from a series `g` with `g(0) = 1`. The leading two
    /// coefficients are set, not rescaled.
    pub fn from_quotient(quotient: &TruncatedSeries, label: impl Into<String>) -> Result<Self> {
        let q0 = quotient.coeff(0);
        if (q0 - 1.0).norm() > CONSTANT_TERM_TOL {
            return Err(Error::ConstantTermNotOne { value: q0 });
        }
        let mut coeffs = quotient.mul_z().into_coeffs();
        coeffs[0] = Complex64::new(0.0, 0.0);
        coeffs[1] = Complex64::new(1.0, 0.0);
        Ok(Self {
            series: TruncatedSeries::new(coeffs)?,
            label: label.into(),
        })
    }

    /// The identity `f(z) = z` at the given order (at least 1).
    pub fn identity(order: usize) -> Self {
        Self {
            series: TruncatedSeries::identity(order),
            label: "identity".into(),
        }
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.series
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// `a_n`, with `a₁ = 1`.
    pub fn a(&self, n: usize) -> Complex64 {
        self.series.coeff(n)
    }

    /// `f(z)/z`, of order one less.
    pub fn quotient(&self) -> TruncatedSeries {
        self.series.div_z().expect("normalized series vanish at the origin")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "label": self.label, "coeffs": self.series })
    }
}

/// `z ↦ z exp G̃(z)` truncated at `order`; its log-derivative
/// `z f′/f` equals `G` exactly.
pub fn extremal_series(params: &ClassParams, order: usize) -> Result<NormalizedFunction> {
    if order < 1 {
        return Err(Error::OrderTooLow { order, needed: 1 });
    }
    let quotient = if order == 1 {
        TruncatedSeries::one(0)
    } else {
        generator::g_tilde_series(params, order - 1)?.exp()?
    };
    NormalizedFunction::from_quotient(&quotient, "extremal")
}

/// `z ↦ z exp(G̃(zᵏ)/k)`, whose log-derivative is `G(zᵏ)`. For `k = 1` this is
/// [`extremal_series`]; for general `k` its `k`-th logarithmic coefficient is
/// `λ₁/(2k)`, so it attains the logarithmic-coefficient bound at index `k`.
pub fn rotated_extremal_series(
    params: &ClassParams,
    k: usize,
    order: usize,
) -> Result<NormalizedFunction> {
    if k == 0 {
        return Err(Error::OrderTooLow { order: 0, needed: 1 });
    }
    if order < 1 {
        return Err(Error::OrderTooLow { order, needed: 1 });
    }
    let q_order = order - 1;
    let inner_order = q_order / k;
    let mut log_quotient = vec![Complex64::new(0.0, 0.0); q_order + 1];
    if inner_order >= 1 {
        let g_tilde = generator::g_tilde_series(params, inner_order)?;
        for j in 1..=inner_order {
            log_quotient[j * k] = g_tilde.coeff(j) / k as f64;
        }
    }
    let quotient = TruncatedSeries::new(log_quotient)?.exp()?;
    NormalizedFunction::from_quotient(&quotient, format!("extremal-rotated:{k}"))
}

/// `z/(1 − z)^{2β}` truncated at `order`.
pub fn koebe_beta_series(beta: f64, order: usize) -> Result<NormalizedFunction> {
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::ParamOutOfRange {
            name: "beta",
            value: beta,
            range: "(0, 1]",
        });
    }
    if order < 1 {
        return Err(Error::OrderTooLow { order, needed: 1 });
    }
    let mut one_minus_z = TruncatedSeries::one(order - 1).into_coeffs();
    if order >= 2 {
        one_minus_z[1] = Complex64::new(-1.0, 0.0);
    }
    let quotient = TruncatedSeries::new(one_minus_z)?.pow(-2.0 * beta)?;
    NormalizedFunction::from_quotient(&quotient, format!("koebe-beta:{beta}"))
}

/// `γ₁..γ_{n_max}` from `log(f(z)/z) = Σ 2γ_n zⁿ`. Needs `order ≥ n_max + 1`.
pub fn log_coeffs(f: &NormalizedFunction, n_max: usize) -> Result<Vec<Complex64>> {
    if f.order() < n_max + 1 {
        return Err(Error::OrderTooLow {
            order: f.order(),
            needed: n_max + 1,
        });
    }
    let log = f.quotient().log()?;
    Ok((1..=n_max).map(|n| log.coeff(n) / 2.0).collect())
}

/// `γ₁ = a₂/2` and `γ₂ = (a₃ − a₂²/2)/2`.
pub fn first_log_coeffs_from_a(a2: Complex64, a3: Complex64) -> (Complex64, Complex64) {
    (a2 / 2.0, (a3 - a2 * a2 / 2.0) / 2.0)
}
