//! Closed-form bounds for members of the class.
//!
//! Every bound is written in terms of `k = cos(πθ/2) = |1 + c|/2`. With
//! `c = e^{iπθ}` this is the factor the coefficient estimates actually use
//! (`|λ₁| = (α₁ + α₂)k`), so `gamma_bound(n)·2n = |λ₁|` holds exactly and
//! every `α₁ = α₂` specialization is unchanged.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{self, ClassParams};

/// Relative slack admitted at the right end of the real-part lower bound's
/// domain, so that `r = 1/(1 + 2k)` computed by the caller is accepted.
const ENDPOINT_SLACK: f64 = 4.0 * f64::EPSILON;

/// Lower bound for `Re{z f′/f}` on `|z| = r ≤ 1/(2k + 1)`:
/// `((1 − (2k + 1) r)/(1 − r))^p`.
pub fn re_lower_bound(params: &ClassParams, r: f64) -> Result<f64> {
    let max = params.validity_radius();
    if !(r >= 0.0 && r <= max * (1.0 + ENDPOINT_SLACK)) {
        return Err(Error::RadiusOutOfRange { r, max });
    }
    let k = params.half_angle_cos();
    let numerator = 1.0 - (2.0 * k + 1.0) * r;
    // the endpoint itself rounds to a tiny positive numerator, which a small
    // exponent p would inflate
    if numerator <= ENDPOINT_SLACK {
        return Ok(0.0);
    }
    Ok((numerator / (1.0 - r)).powf(params.p()))
}

/// Upper bound for `Re{z f′/f}` on `|z| = r < 1`:
/// `((1 + (2k − 1) r)/(1 − r))^p`.
pub fn re_upper_bound(params: &ClassParams, r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::RadiusOutOfRange { r, max: 1.0 });
    }
    let k = params.half_angle_cos();
    Ok(((1.0 + (2.0 * k - 1.0) * r) / (1.0 - r)).powf(params.p()))
}

/// Growth bounds `(r·exp Re G̃(−r), r·exp Re G̃(r))` for `|f(z)|` on `|z| = r`.
///
/// For `α₁ ≠ α₂` the values `G̃(±r)` are not real; only their real parts
/// enter and the imaginary parts are logged at debug level.
pub fn growth_bounds(params: &ClassParams, r: f64) -> Result<(f64, f64)> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::RadiusOutOfRange { r, max: 1.0 });
    }
    let minus = generator::g_tilde_eval_real(params, -r)?;
    let plus = generator::g_tilde_eval_real(params, r)?;
    log_imaginary_channel(params, r, minus, plus);
    Ok((r * minus.re.exp(), r * plus.re.exp()))
}

fn log_imaginary_channel(params: &ClassParams, r: f64, minus: Complex64, plus: Complex64) {
    if minus.im != 0.0 || plus.im != 0.0 {
        log::debug!(
            "growth bounds at r = {r} for ({}, {}): Im G̃(−r) = {:e}, Im G̃(r) = {:e}",
            params.alpha1(),
            params.alpha2(),
            minus.im,
            plus.im
        );
    }
}

/// `|γ_n| ≤ |λ₁| / (2n) = (α₁ + α₂) cos(πθ/2) / (2n)`.
pub fn gamma_bound(params: &ClassParams, n: usize) -> f64 {
    assert!(n >= 1, "logarithmic coefficients start at n = 1");
    params.lambda1_modulus() / (2.0 * n as f64)
}

/// `|a_n| ≤ A` for `n = 2` and `A/(n−1) ∏_{k=2}^{n−1} (1 + A/(k−1))` for
/// `n ≥ 3`, where `A = (α₁ + α₂) cos(πθ/2)`.
pub fn coeff_bound(params: &ClassParams, n: usize) -> f64 {
    assert!(n >= 2, "coefficient bounds start at n = 2");
    let a = params.lambda1_modulus();
    let product = (2..n).fold(1.0, |acc, k| acc * (1.0 + a / (k - 1) as f64));
    a / (n - 1) as f64 * product
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    ReLower,
    ReUpper,
    GrowthLower,
    GrowthUpper,
    Gamma,
    Coeff,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::ReLower => "re_lower",
            BoundKind::ReUpper => "re_upper",
            BoundKind::GrowthLower => "growth_lower",
            BoundKind::GrowthUpper => "growth_upper",
            BoundKind::Gamma => "gamma",
            BoundKind::Coeff => "coeff",
        }
    }

    /// The upper-bound kind paired with a lower-bound kind, if any.
    pub fn upper_partner(self) -> Option<BoundKind> {
        match self {
            BoundKind::ReLower => Some(BoundKind::ReUpper),
            BoundKind::GrowthLower => Some(BoundKind::GrowthUpper),
            _ => None,
        }
    }
}

/// One row: the index or radius, the bound, and for two-sided families the
/// paired upper bound. `None` marks a value outside the formula's domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub at: f64,
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value_upper: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundTable {
    pub kind: BoundKind,
    pub params: ClassParams,
    pub entries: Vec<BoundEntry>,
}

impl BoundTable {
    /// Real-part bounds; `kind` is `re_lower` with the upper bound paired.
    /// Radii outside a formula's domain give `None` in that column.
    pub fn real_part(params: &ClassParams, radii: &[f64]) -> Self {
        let entries = radii
            .iter()
            .map(|&r| BoundEntry {
                at: r,
                value: re_lower_bound(params, r).ok(),
                value_upper: re_upper_bound(params, r).ok(),
            })
            .collect();
        Self {
            kind: BoundKind::ReLower,
            params: *params,
            entries,
        }
    }

    pub fn growth(params: &ClassParams, radii: &[f64]) -> Self {
        let entries = radii
            .iter()
            .map(|&r| {
                let pair = growth_bounds(params, r).ok();
                BoundEntry {
                    at: r,
                    value: pair.map(|p| p.0),
                    value_upper: pair.map(|p| p.1),
                }
            })
            .collect();
        Self {
            kind: BoundKind::GrowthLower,
            params: *params,
            entries,
        }
    }

    pub fn gamma(params: &ClassParams, n_max: usize) -> Self {
        Self {
            kind: BoundKind::Gamma,
            params: *params,
            entries: (1..=n_max)
                .map(|n| BoundEntry {
                    at: n as f64,
                    value: Some(gamma_bound(params, n)),
                    value_upper: None,
                })
                .collect(),
        }
    }

    pub fn coeff(params: &ClassParams, n_max: usize) -> Self {
        Self {
            kind: BoundKind::Coeff,
            params: *params,
            entries: (2..=n_max)
                .map(|n| BoundEntry {
                    at: n as f64,
                    value: Some(coeff_bound(params, n)),
                    value_upper: None,
                })
                .collect(),
        }
    }

    pub fn is_two_sided(&self) -> bool {
        self.kind.upper_partner().is_some()
    }

    /// Checks the table invariants: finite nonnegative values and ordered
    /// pairs (strict for growth).
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for e in &self.entries {
            for v in [e.value, e.value_upper].into_iter().flatten() {
                if !(v.is_finite() && v >= 0.0) {
                    return Err(format!("value {v} at {} is not finite and nonnegative", e.at));
                }
            }
            if let (Some(lo), Some(hi)) = (e.value, e.value_upper) {
                let ordered = match self.kind {
                    BoundKind::GrowthLower => lo < hi,
                    _ => lo <= hi,
                };
                if !ordered {
                    return Err(format!("bounds out of order at {}: {lo} vs {hi}", e.at));
                }
            }
        }
        Ok(())
    }

    /// CSV with columns `index_or_radius,value[,value_upper]`; missing values
    /// are empty fields. Numbers use 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if self.is_two_sided() {
            out.push_str("index_or_radius,value,value_upper\n");
        } else {
            out.push_str("index_or_radius,value\n");
        }
        for e in &self.entries {
            let at = if matches!(self.kind, BoundKind::Gamma | BoundKind::Coeff) {
                format!("{}", e.at as u64)
            } else {
                format_sig(e.at)
            };
            let _ = write!(out, "{at},{}", e.value.map(format_sig).unwrap_or_default());
            if self.is_two_sided() {
                let _ = write!(out, ",{}", e.value_upper.map(format_sig).unwrap_or_default());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut row = serde_json::Map::new();
                let key = if matches!(self.kind, BoundKind::Gamma | BoundKind::Coeff) {
                    serde_json::json!(e.at as u64)
                } else {
                    json_sig(e.at)
                };
                row.insert("index_or_radius".into(), key);
                row.insert("value".into(), e.value.map(json_sig).unwrap_or(serde_json::Value::Null));
                if self.is_two_sided() {
                    row.insert(
                        "value_upper".into(),
                        e.value_upper.map(json_sig).unwrap_or(serde_json::Value::Null),
                    );
                }
                serde_json::Value::Object(row)
            })
            .collect();
        serde_json::json!({
            "kind": self.kind.name(),
            "alpha1": self.params.alpha1(),
            "alpha2": self.params.alpha2(),
            "entries": rows,
        })
    }
}

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros removed,
/// scientific notation outside `[1e-5, 1e12)`. Always uses `.` as the decimal
/// separator.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if !(-5..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// A JSON number rounded to 12 significant digits.
pub fn json_sig(x: f64) -> serde_json::Value {
    let rounded: f64 = format_sig(x).parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded)
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}
