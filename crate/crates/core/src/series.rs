//! Truncated complex power series about the origin.
//!
//! A [`TruncatedSeries`] of order `N` stores `c₀..c_N`. Binary operations on
//! series of orders `N₁` and `N₂` produce order `min(N₁, N₂)`; nothing is ever
//! silently extended. Every operation is a pure function of its inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the truncation order.
pub const DEFAULT_MAX_ORDER: usize = 256;

/// Absolute tolerance for the `c₀ = 1` / `c₀ = 0` preconditions.
pub const CONSTANT_TERM_TOL: f64 = 1e-12;

/// Default threshold below which a constant term is treated as zero when
/// forming a reciprocal.
pub const DEFAULT_RECIPROCAL_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series from `c₀..c_N`, rejecting empty input, non-finite
    /// entries, and orders above [`DEFAULT_MAX_ORDER`].
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::with_max_order(coeffs, DEFAULT_MAX_ORDER)
    }

    pub fn with_max_order(coeffs: Vec<Complex64>, max_order: usize) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some(index) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFiniteCoefficient { index });
        }
        let order = coeffs.len() - 1;
        if order > max_order {
            return Err(Error::OrderTooLarge {
                order,
                max: max_order,
            });
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Internal constructor for results of operations on valid series.
    pub(crate) fn from_vec_unchecked(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_vec_unchecked(vec![Complex64::new(0.0, 0.0); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// The series `z` (order ≥ 1).
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order.max(1));
        s.coeffs[1] = Complex64::new(1.0, 0.0);
        s
    }

    /// `1 + z + z² + … + z^N`.
    pub fn geometric(order: usize) -> Self {
        Self::from_vec_unchecked(vec![Complex64::new(1.0, 0.0); order + 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs[n]
    }

    /// Keeps `c₀..c_order`; an order above the current one is an error.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderTooLow {
                order: self.order(),
                needed: order,
            });
        }
        Ok(Self::from_vec_unchecked(self.coeffs[..=order].to_vec()))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_vec_unchecked(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Self {
        let n = self.order().min(other.order());
        let coeffs = match op {
            ArithOp::Add => (0..=n).map(|i| self.coeffs[i] + other.coeffs[i]).collect(),
            ArithOp::Sub => (0..=n).map(|i| self.coeffs[i] - other.coeffs[i]).collect(),
            ArithOp::Mul => (0..=n)
                .map(|i| {
                    (0..=i)
                        .map(|k| self.coeffs[k] * other.coeffs[i - k])
                        .sum::<Complex64>()
                })
                .collect(),
        };
        Self::from_vec_unchecked(coeffs)
    }

    pub fn reciprocal(&self) -> Result<Self> {
        self.reciprocal_with(DEFAULT_RECIPROCAL_EPS)
    }

    /// Returns `b` with `a·b = 1 + O(z^{N+1})`; fails when `|c₀| ≤ eps`.
    pub fn reciprocal_with(&self, eps: f64) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() <= eps {
            return Err(Error::NearZeroConstantTerm { value: a0 });
        }
        let inv0 = a0.inv();
        let mut b = Vec::with_capacity(self.coeffs.len());
        b.push(inv0);
        for n in 1..=self.order() {
            let acc: Complex64 = (1..=n).map(|k| self.coeffs[k] * b[n - k]).sum();
            b.push(-acc * inv0);
        }
        Ok(Self::from_vec_unchecked(b))
    }

    /// `a / b`, computed as `a · reciprocal(b)`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.reciprocal()?)
    }

    /// Principal-branch logarithm of a series with `c₀ = 1`.
    pub fn log(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if (a0 - 1.0).norm() > CONSTANT_TERM_TOL {
            return Err(Error::ConstantTermNotOne { value: a0 });
        }
        // n L_n a₀ = n a_n − Σ_{k=1}^{n−1} k L_k a_{n−k}
        let n_max = self.order();
        let mut l = vec![Complex64::new(0.0, 0.0); n_max + 1];
        for n in 1..=n_max {
            let mut acc = self.coeffs[n] * n as f64;
            for (k, lk) in l.iter().enumerate().take(n).skip(1) {
                acc -= lk * self.coeffs[n - k] * k as f64;
            }
            l[n] = acc / (a0 * n as f64);
        }
        Ok(Self::from_vec_unchecked(l))
    }

    /// Exponential of a series with `c₀ = 0`; the result has `c₀ = 1`.
    pub fn exp(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() > CONSTANT_TERM_TOL {
            return Err(Error::ConstantTermNotZero { value: a0 });
        }
        let n_max = self.order();
        let mut e = vec![Complex64::new(0.0, 0.0); n_max + 1];
        e[0] = Complex64::new(1.0, 0.0);
        for n in 1..=n_max {
            let acc: Complex64 = (1..=n)
                .map(|k| self.coeffs[k] * e[n - k] * k as f64)
                .sum();
            e[n] = acc / n as f64;
        }
        Ok(Self::from_vec_unchecked(e))
    }

    /// Principal-branch real power `a^p = exp(p · log a)` for `c₀ = 1`.
    pub fn pow(&self, p: f64) -> Result<Self> {
        let mut l = self.log()?.scale(Complex64::new(p, 0.0));
        l.coeffs[0] = Complex64::new(0.0, 0.0);
        l.exp()
    }

    /// Termwise derivative. The order drops by one; a constant (order 0)
    /// maps to the zero series of order 0.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_vec_unchecked(
            (1..=self.order())
                .map(|n| self.coeffs[n] * n as f64)
                .collect(),
        )
    }

    /// `∫₀ᶻ a(t)/t dt = Σ_{n≥1} (c_n / n) zⁿ` for `c₀ = 0`.
    pub fn integrate_dz_over_z(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() > CONSTANT_TERM_TOL {
            return Err(Error::ConstantTermNotZero { value: a0 });
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(Complex64::new(0.0, 0.0));
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c / n as f64),
        );
        Ok(Self::from_vec_unchecked(out))
    }

    /// Hadamard (termwise) product.
    pub fn hadamard(&self, other: &Self) -> Self {
        Self::from_vec_unchecked(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    /// `outer ∘ inner`, truncated to the smaller order. `inner` must vanish
    /// at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let i0 = inner.coeffs[0];
        if i0.norm() > CONSTANT_TERM_TOL {
            return Err(Error::InnerConstantNonzero { value: i0 });
        }
        let n = self.order().min(inner.order());
        let mut inner = inner.truncate(n)?;
        inner.coeffs[0] = Complex64::new(0.0, 0.0);
        let mut acc = Self::constant(self.coeffs[n], n);
        for k in (0..n).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(acc)
    }

    /// Multiplies by `z`; the order grows by one.
    pub fn mul_z(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Complex64::new(0.0, 0.0));
        out.extend_from_slice(&self.coeffs);
        Self::from_vec_unchecked(out)
    }

    /// Divides by `z` for `c₀ = 0`; the order drops by one.
    pub fn div_z(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() > CONSTANT_TERM_TOL {
            return Err(Error::ConstantTermNotZero { value: a0 });
        }
        if self.order() == 0 {
            return Err(Error::OrderTooLow {
                order: 0,
                needed: 1,
            });
        }
        Ok(Self::from_vec_unchecked(self.coeffs[1..].to_vec()))
    }

    /// Horner evaluation of the truncated polynomial at `|z| < 1`, paired with
    /// the crude tail estimate `|c_N|·|z|^N / (1 − |z|)`.
    pub fn eval_at(&self, z: Complex64) -> Result<(Complex64, f64)> {
        let r = z.norm();
        if r >= 1.0 {
            return Err(Error::OutsideDisc { modulus: r });
        }
        let value = self.horner(z);
        let n = self.order();
        let tail = self.coeffs[n].norm() * r.powi(n as i32) / (1.0 - r);
        Ok((value, tail))
    }

    /// Horner evaluation with no disc restriction.
    pub fn horner(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Largest coefficient-wise distance to `other` over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Parses the JSON array-of-`[re, im]`-pairs format.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSeriesData(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("series serialization is infallible")
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("order", &self.order())
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&[c.re, c.im])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<[f64; 2]> = Vec::deserialize(deserializer)?;
        let coeffs = pairs
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        TruncatedSeries::new(coeffs).map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                self.arith(rhs, $op)
            }
        }

        impl $trait for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                self.arith(&rhs, $op)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn real(coeffs: &[f64]) -> TruncatedSeries {
        TruncatedSeries::from_real(coeffs).unwrap()
    }

    fn assert_coeffs(s: &TruncatedSeries, expected: &[f64], tol: f64) {
        assert_eq!(s.order() + 1, expected.len(), "order mismatch: {s:?}");
        for (n, (a, b)) in s.coeffs().iter().zip(expected).enumerate() {
            assert!(
                (a - c(*b)).norm() <= tol,
                "coefficient {n}: got {a}, expected {b}"
            );
        }
    }

    /// Direct convolution, independent of `arith`.
    fn convolve(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
        let mut out = vec![0.0; n + 1];
        for (i, x) in a.iter().enumerate().take(n + 1) {
            for (j, y) in b.iter().enumerate().take(n + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn rejects_bad_construction() {
        assert_eq!(TruncatedSeries::new(vec![]), Err(Error::EmptySeries));
        assert_eq!(
            TruncatedSeries::from_real(&[1.0, f64::NAN]),
            Err(Error::NonFiniteCoefficient { index: 1 })
        );
        assert!(matches!(
            TruncatedSeries::new(vec![c(0.0); 300]),
            Err(Error::OrderTooLarge { order: 299, max: 256 })
        ));
        assert!(TruncatedSeries::with_max_order(vec![c(0.0); 300], 512).is_ok());
    }

    #[test]
    fn binomial_square() {
        let a = real(&[1.0, 1.0, 0.0]);
        assert_coeffs(&(&a * &a), &[1.0, 2.0, 1.0], 0.0);
    }

    #[test]
    fn add_zero_is_identity() {
        let s = real(&[0.3, -1.5, 2.0]);
        assert_eq!(&s + &TruncatedSeries::zero(2), s);
    }

    #[test]
    fn geometric_times_one_minus_z_telescopes() {
        let g = TruncatedSeries::geometric(8);
        let one_minus_z = real(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let expected = convolve(&[1.0; 9], &[1.0, -1.0], 8);
        assert_coeffs(&(&g * &one_minus_z), &expected, 0.0);
        assert_coeffs(&(&g * &one_minus_z), &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0], 0.0);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = real(&[1.0, 2.0, 3.0, 4.0]);
        let b = real(&[1.0, 1.0]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(a.hadamard(&b).order(), 1);
    }

    #[test]
    fn reciprocal_examples() {
        let r = real(&[1.0, -1.0, 0.0, 0.0, 0.0]).reciprocal().unwrap();
        assert_coeffs(&r, &[1.0; 5], 0.0);
        assert_coeffs(&real(&[1.0]).reciprocal().unwrap(), &[1.0], 0.0);
        assert!(matches!(
            real(&[1e-13, 1.0]).reciprocal(),
            Err(Error::NearZeroConstantTerm { .. })
        ));
        assert!(real(&[1e-13, 1.0]).reciprocal_with(1e-14).is_ok());
    }

    #[test]
    fn log_examples() {
        let l = real(&[1.0, 1.0, 0.0, 0.0]).log().unwrap();
        assert_coeffs(&l, &[0.0, 1.0, -0.5, 1.0 / 3.0], 1e-15);
        assert_coeffs(&real(&[1.0]).log().unwrap(), &[0.0], 0.0);

        // 1/(1−z)² has log −2 log(1−z) = Σ 2zⁿ/n.
        let koebe_ratio: Vec<f64> = (0..=6).map(|n| (n + 1) as f64).collect();
        let l = real(&koebe_ratio).log().unwrap();
        let oracle: Vec<f64> = (0..=6)
            .map(|n| if n == 0 { 0.0 } else { 2.0 / n as f64 })
            .collect();
        assert_coeffs(&l, &oracle, 1e-14);

        assert!(matches!(
            real(&[2.0, 1.0]).log(),
            Err(Error::ConstantTermNotOne { .. })
        ));
    }

    #[test]
    fn exp_examples() {
        let e = real(&[0.0, 1.0, 0.0, 0.0, 0.0]).exp().unwrap();
        assert_coeffs(&e, &[1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0], 1e-16);
        assert_coeffs(&real(&[0.0]).exp().unwrap(), &[1.0], 0.0);

        let minus_two_log: Vec<f64> = (0..=8)
            .map(|n| if n == 0 { 0.0 } else { 2.0 / n as f64 })
            .collect();
        let e = real(&minus_two_log).exp().unwrap();
        let oracle: Vec<f64> = (0..=8).map(|n| (n + 1) as f64).collect();
        assert_coeffs(&e, &oracle, 1e-13);

        assert!(matches!(
            real(&[0.5, 1.0]).exp(),
            Err(Error::ConstantTermNotZero { .. })
        ));
    }

    #[test]
    fn pow_examples() {
        let p = real(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0]).pow(-1.0).unwrap();
        assert_coeffs(&p, &[1.0; 6], 1e-14);

        let a = real(&[1.0, 0.4, -0.2, 0.7]);
        assert!(a.pow(1.0).unwrap().max_abs_diff(&a) < 1e-14);

        // generalized binomial oracle for (1−z)^{−2β}
        let beta = 0.7;
        let mut one_minus_z = vec![0.0; 11];
        one_minus_z[0] = 1.0;
        one_minus_z[1] = -1.0;
        let p = real(&one_minus_z).pow(-2.0 * beta).unwrap();
        let mut expected = Vec::new();
        let mut term = 1.0;
        for n in 0..=10 {
            if n > 0 {
                term *= (2.0 * beta + (n - 1) as f64) / n as f64;
            }
            expected.push(term);
        }
        assert_coeffs(&p, &expected, 1e-13);

        assert!(real(&[0.0, 1.0]).pow(0.5).is_err());
    }

    #[test]
    fn derivative_examples() {
        assert_coeffs(&real(&[0.0, 1.0, 2.0]).derivative(), &[1.0, 4.0], 0.0);
        assert_coeffs(&real(&[3.0]).derivative(), &[0.0], 0.0);
        assert_coeffs(&real(&[3.0, 0.0, 0.0]).derivative(), &[0.0, 0.0], 0.0);
    }

    #[test]
    fn derivative_of_integral_is_input_over_z() {
        let a = real(&[0.0, 1.5, -2.0, 0.25, 4.0]);
        let d = a.integrate_dz_over_z().unwrap().derivative();
        // (Σ c_n zⁿ/n)' = Σ c_n z^{n−1} = a/z
        let a_over_z = a.div_z().unwrap();
        assert!(d.max_abs_diff(&a_over_z) < 1e-15);
    }

    #[test]
    fn integrate_examples() {
        // 2z/(1−z) → Σ 2zⁿ/n
        let two_z_geo = real(&[0.0, 2.0, 2.0, 2.0, 2.0, 2.0]);
        assert_coeffs(
            &two_z_geo.integrate_dz_over_z().unwrap(),
            &[0.0, 2.0, 1.0, 2.0 / 3.0, 0.5, 0.4],
            1e-16,
        );
        assert_coeffs(
            &real(&[0.0, 1.0]).integrate_dz_over_z().unwrap(),
            &[0.0, 1.0],
            0.0,
        );
        assert_coeffs(&real(&[0.0]).integrate_dz_over_z().unwrap(), &[0.0], 0.0);
        assert!(matches!(
            real(&[1.0, 1.0]).integrate_dz_over_z(),
            Err(Error::ConstantTermNotZero { .. })
        ));
    }

    #[test]
    fn hadamard_examples() {
        let a = real(&[1.0, 2.0, 3.0]);
        assert_coeffs(&a.hadamard(&real(&[1.0, 1.0, 1.0])), &[1.0, 2.0, 3.0], 0.0);
        assert_coeffs(&a.hadamard(&TruncatedSeries::zero(2)), &[0.0; 3], 0.0);
    }

    #[test]
    fn compose_examples() {
        let outer = real(&[1.0, 1.0, 0.0]);
        let inner = real(&[0.0, 0.0, 1.0]);
        assert_coeffs(&outer.compose(&inner).unwrap(), &[1.0, 0.0, 1.0], 0.0);

        let a = real(&[0.5, -1.0, 2.0, 3.0]);
        let z = TruncatedSeries::identity(3);
        assert!(a.compose(&z).unwrap().max_abs_diff(&a) < 1e-15);

        // exp ∘ log(1+z) = 1 + z
        let n = 16;
        let mut exp_coeffs = vec![1.0];
        for k in 1..=n {
            let prev: f64 = exp_coeffs[k - 1];
            exp_coeffs.push(prev / k as f64);
        }
        let exp_series = real(&exp_coeffs);
        let mut one_plus_z = vec![0.0; n + 1];
        one_plus_z[0] = 1.0;
        one_plus_z[1] = 1.0;
        let log1p = real(&one_plus_z).log().unwrap();
        let composed = exp_series.compose(&log1p).unwrap();
        assert!(composed.max_abs_diff(&real(&one_plus_z)) < 1e-12);

        assert!(matches!(
            outer.compose(&real(&[0.1, 1.0])),
            Err(Error::InnerConstantNonzero { .. })
        ));
    }

    #[test]
    fn eval_examples() {
        let (v, _) = real(&[1.0, 1.0, 1.0]).eval_at(c(0.0)).unwrap();
        assert_eq!(v, c(1.0));

        let (v, tail) = TruncatedSeries::geometric(40).eval_at(c(0.5)).unwrap();
        assert!((v - c(2.0)).norm() < 1e-9);
        assert!(tail > 0.0 && tail < 1e-9);

        let s = real(&[0.3, -1.0, 0.25, 2.0]);
        let z = Complex64::new(0.3, 0.4);
        let (v1, _) = s.eval_at(z).unwrap();
        let (v2, _) = s.eval_at(z.conj()).unwrap();
        assert!((v1.conj() - v2).norm() < 1e-15);

        assert!(matches!(
            s.eval_at(Complex64::new(0.6, 0.8)),
            Err(Error::OutsideDisc { .. })
        ));
    }

    #[test]
    fn json_format_is_pairs_by_degree() {
        let s = TruncatedSeries::new(vec![Complex64::new(1.0, 0.0), Complex64::new(0.5, -2.0)])
            .unwrap();
        assert_eq!(s.to_json(), "[[1.0,0.0],[0.5,-2.0]]");
        assert_eq!(TruncatedSeries::from_json("[[1.0,0.0],[0.5,-2.0]]").unwrap(), s);
        assert!(TruncatedSeries::from_json("[]").is_err());
        assert!(TruncatedSeries::from_json("[[1.0]]").is_err());
    }
}
