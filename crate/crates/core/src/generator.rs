//! Class parameters, the generator `G(z) = ((1 + cz)/(1 − z))^p`, its Taylor
//! coefficients `λ_n`, the integrated generator `G̃(z) = Σ λ_n zⁿ / n`, and
//! the target sector `Ω = {−πα₁/2 < arg w < πα₂/2}`.
//!
//! Here `p = (α₁ + α₂)/2`, `θ = (α₂ − α₁)/(α₂ + α₁)` and `c = e^{iπθ}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precise::{self, FixedComplex};
use crate::series::{TruncatedSeries, DEFAULT_MAX_ORDER};

/// Target for the estimated remainder of the `G̃` sums.
pub const TAIL_TOL: f64 = 1e-12;

/// Maximum number of terms the scalar `G̃` sums may use.
pub const DEFAULT_TAIL_TERMS: usize = 8192;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassParams {
    alpha1: f64,
    alpha2: f64,
    theta: f64,
    c: Complex64,
    p: f64,
}

impl ClassParams {
    pub fn new(alpha1: f64, alpha2: f64) -> Result<Self> {
        for (name, value) in [("alpha1", alpha1), ("alpha2", alpha2)] {
            if !(value > 0.0 && value <= 1.0) {
                return Err(Error::ParamOutOfRange {
                    name,
                    value,
                    range: "(0, 1]",
                });
            }
        }
        let theta = (alpha2 - alpha1) / (alpha2 + alpha1);
        let c = if theta == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new((PI * theta).cos(), (PI * theta).sin())
        };
        Ok(Self {
            alpha1,
            alpha2,
            theta,
            c,
            p: (alpha1 + alpha2) / 2.0,
        })
    }

    /// The symmetric case `α₁ = α₂ = β`.
    pub fn symmetric(beta: f64) -> Result<Self> {
        Self::new(beta, beta)
    }

    pub fn alpha1(&self) -> f64 {
        self.alpha1
    }

    pub fn alpha2(&self) -> f64 {
        self.alpha2
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// Exponent `(α₁ + α₂)/2` of the generator.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// `cos(πθ/2) = |1 + c|/2`, the factor every bound is built on.
    pub fn half_angle_cos(&self) -> f64 {
        (PI * self.theta / 2.0).cos()
    }

    /// `(α₁ + α₂)·cos(πθ/2) = |λ₁|`.
    pub fn lambda1_modulus(&self) -> f64 {
        (self.alpha1 + self.alpha2) * self.half_angle_cos()
    }

    /// `1 / (1 + 2cos(πθ/2))`, the radius below which the real-part lower
    /// bound and the convexity sufficient condition hold.
    pub fn validity_radius(&self) -> f64 {
        1.0 / (1.0 + 2.0 * self.half_angle_cos())
    }

    /// Open argument window `(−πα₁/2, πα₂/2)`.
    pub fn window(&self) -> (f64, f64) {
        (-PI * self.alpha1 / 2.0, PI * self.alpha2 / 2.0)
    }

    /// Parameters with `α₁` and `α₂` exchanged.
    pub fn swapped(&self) -> Self {
        Self::new(self.alpha2, self.alpha1).expect("swapped parameters stay in range")
    }
}

pub fn make_params(alpha1: f64, alpha2: f64) -> Result<ClassParams> {
    ClassParams::new(alpha1, alpha2)
}

/// Generalized binomial coefficient `binom(p, k)` as the falling-factorial
/// product `∏_{j<k} (p − j) / k!`, accumulated left to right.
pub fn gen_binomial(p: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (p - j as f64) / (j + 1) as f64)
}

/// `λ₁..λ_{n_max}` from the finite double-binomial sum
/// `λ_n = Σ_{k=1}^{n} binom(n−1, k−1) binom(p, k) (1+c)^k`.
///
/// The sum is evaluated in big-integer fixed point: the summands reach
/// `~3ⁿ` while `|λ_n| ≤ 2`.
pub fn lambda_coeffs(params: &ClassParams, n_max: usize) -> Vec<Complex64> {
    if n_max == 0 {
        return Vec::new();
    }
    let bits = precise::bits_for(n_max, 2.0);
    let one_plus_c = FixedComplex::from_complex(1.0 + params.c, bits);
    let p = precise::scale_f64(params.p, bits);

    // b_k = binom(p, k) (1 + c)^k via the falling-factorial product; p − j is
    // formed in fixed point so every factor sees the same p
    let mut b = Vec::with_capacity(n_max + 1);
    b.push(FixedComplex::one(bits));
    for k in 1..=n_max {
        let factor = &p - precise::scale_int((k - 1) as i64, bits);
        let next = b[k - 1]
            .mul_real(&factor)
            .div_int(k as i64)
            .mul(&one_plus_c);
        b.push(next);
    }

    (1..=n_max)
        .map(|n| {
            let row = precise::binomial_row(n - 1);
            let mut acc = FixedComplex::zero(bits);
            for k in 1..=n {
                acc += &b[k].mul_int(&row[k - 1]);
            }
            acc.to_complex()
        })
        .collect()
}

/// `λ_n = (α₁+α₂)(1+c)/2 · ₂F₁(1−n, 1−p; 2; 1+c)`.
pub fn lambda_via_2f1(params: &ClassParams, n: usize) -> Complex64 {
    assert!(n >= 1, "λ_n is defined for n ≥ 1");
    let prefactor = (params.alpha1 + params.alpha2) * (1.0 + params.c) / 2.0;
    prefactor * precise::hyp2f1_terminating(n - 1, 1.0 - params.p, 2.0, 1.0 + params.c)
}

/// Streams `λ₁, λ₂, …` in `f64` from the three-term recurrence implied by
/// `(1 + (c−1)z − cz²) G′ = p(1+c) G`:
///
/// `(n+1) λ_{n+1} = (p(1+c) − (c−1)n) λ_n + c(n−1) λ_{n−1}`, `λ₀ = 1`.
///
/// Both characteristic roots (`1` and `−c`) have modulus one, so the forward
/// recursion is stable; it is what the long scalar `G̃` sums use.
#[derive(Debug, Clone)]
pub struct LambdaRecurrence {
    p_one_plus_c: Complex64,
    c: Complex64,
    prev: Complex64,
    current: Complex64,
    n: usize,
}

impl LambdaRecurrence {
    pub fn new(params: &ClassParams) -> Self {
        Self {
            p_one_plus_c: params.p * (1.0 + params.c),
            c: params.c,
            prev: Complex64::new(0.0, 0.0),
            current: Complex64::new(1.0, 0.0),
            n: 0,
        }
    }
}

impl Iterator for LambdaRecurrence {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let n = self.n as f64;
        let next = ((self.p_one_plus_c - (self.c - 1.0) * n) * self.current
            + self.c * (n - 1.0) * self.prev)
            / (n + 1.0);
        self.prev = self.current;
        self.current = next;
        self.n += 1;
        Some(next)
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > DEFAULT_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: DEFAULT_MAX_ORDER,
        });
    }
    Ok(())
}

/// `G(z) = 1 + Σ λ_n zⁿ` truncated at `order`.
pub fn g_series(params: &ClassParams, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(1.0, 0.0));
    coeffs.extend(lambda_coeffs(params, order));
    TruncatedSeries::new(coeffs)
}

/// `G` built through the series engine as `((1 + cz)·(1 − z)^{-1})^p`.
pub fn g_series_via_mobius(params: &ClassParams, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let mut numerator = TruncatedSeries::one(order).into_coeffs();
    let mut denominator = numerator.clone();
    if order >= 1 {
        numerator[1] = params.c;
        denominator[1] = Complex64::new(-1.0, 0.0);
    }
    let mobius = TruncatedSeries::new(numerator)?.div(&TruncatedSeries::new(denominator)?)?;
    mobius.pow(params.p)
}

fn check_disc(z: Complex64) -> Result<()> {
    let modulus = z.norm();
    if !(modulus < 1.0) {
        return Err(Error::OutsideDisc { modulus });
    }
    Ok(())
}

/// Principal-branch value `exp(p · Log((1 + cz)/(1 − z)))`.
///
/// The Möbius factor maps the disc onto a half-plane whose boundary passes
/// through the origin at angle `πθ/2 ± π/2`, so its argument stays in
/// `(−π, π)` and the principal logarithm is continuous there.
pub fn g_eval(params: &ClassParams, z: Complex64) -> Result<Complex64> {
    check_disc(z)?;
    Ok(g_eval_unchecked(params, z))
}

pub(crate) fn g_eval_unchecked(params: &ClassParams, z: Complex64) -> Complex64 {
    let mobius = (1.0 + params.c * z) / (1.0 - z);
    (params.p * mobius.ln()).exp()
}

/// `G′(z) = p(1+c) G(z) / ((1 + cz)(1 − z))`.
pub(crate) fn g_derivative_unchecked(params: &ClassParams, z: Complex64) -> Complex64 {
    params.p * (1.0 + params.c) * g_eval_unchecked(params, z) / ((1.0 + params.c * z) * (1.0 - z))
}

/// `G̃(z) = Σ_{n≥1} λ_n zⁿ / n` truncated at `order`.
pub fn g_tilde_series(params: &ClassParams, order: usize) -> Result<TruncatedSeries> {
    let g = g_series(params, order)?;
    let shifted = &g - &TruncatedSeries::one(order);
    shifted.integrate_dz_over_z()
}

/// Sums `Σ λ_n zⁿ / n` until the remainder estimate drops below
/// [`TAIL_TOL`] or `max_terms` is reached.
///
/// While every `|λ_n|` seen so far is at most 2 the remainder after `N`
/// terms is bounded by `2|z|^{N+1} / ((N+1)(1 − |z|))`. If that bound is ever
/// observed to fail the estimate switches to a ratio test on the last terms.
pub fn g_tilde_sum(params: &ClassParams, z: Complex64, max_terms: usize) -> Result<Complex64> {
    check_disc(z)?;
    let r = z.norm();
    if r == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    let mut bounded = true;
    let mut prev_term = 0.0f64;
    let mut tail = f64::INFINITY;
    for (idx, lambda) in LambdaRecurrence::new(params).take(max_terms).enumerate() {
        let n = idx + 1;
        power *= z;
        let term = lambda * power / n as f64;
        sum += term;
        if lambda.norm() > 2.0 + 1e-9 {
            bounded = false;
        }
        let term_mod = term.norm();
        tail = if bounded {
            2.0 * r.powi(n as i32 + 1) / ((n + 1) as f64 * (1.0 - r))
        } else {
            let q = if prev_term > 0.0 { term_mod / prev_term } else { 1.0 };
            if q < 1.0 {
                term_mod * q / (1.0 - q)
            } else {
                f64::INFINITY
            }
        };
        prev_term = term_mod;
        if tail < TAIL_TOL {
            return Ok(sum);
        }
    }
    Err(Error::TailNotConverged {
        r,
        tail,
        terms: max_terms,
    })
}

/// `G̃(z)` at a point of the disc.
pub fn g_tilde_eval(params: &ClassParams, z: Complex64) -> Result<Complex64> {
    g_tilde_sum(params, z, DEFAULT_TAIL_TERMS)
}

/// `G̃(r)` for real `r ∈ (−1, 1)`; complex when `α₁ ≠ α₂`.
pub fn g_tilde_eval_real(params: &ClassParams, r: f64) -> Result<Complex64> {
    g_tilde_sum(params, Complex64::new(r, 0.0), DEFAULT_TAIL_TERMS)
}

/// Whether `arg w` lies strictly inside `(−πα₁/2, πα₂/2)`.
pub fn omega_contains(params: &ClassParams, w: Complex64) -> Result<bool> {
    omega_contains_with_slack(params, w, 0.0)
}

/// Like [`omega_contains`], with the window widened by `slack` radians on
/// both edges.
pub fn omega_contains_with_slack(params: &ClassParams, w: Complex64, slack: f64) -> Result<bool> {
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let (lo, hi) = params.window();
    let arg = w.arg();
    Ok(lo - slack < arg && arg < hi + slack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn random_params(rng: &mut ChaCha8Rng) -> ClassParams {
        let a1 = 1.0 - rng.random::<f64>();
        let a2 = 1.0 - rng.random::<f64>();
        ClassParams::new(a1, a2).unwrap()
    }

    #[test]
    fn make_params_examples() {
        let p = make_params(1.0, 1.0).unwrap();
        assert_eq!((p.theta(), p.c(), p.p()), (0.0, Complex64::new(1.0, 0.0), 1.0));

        let p = make_params(0.5, 0.5).unwrap();
        assert_eq!((p.theta(), p.c(), p.p()), (0.0, Complex64::new(1.0, 0.0), 0.5));

        let p = make_params(0.5, 1.0).unwrap();
        assert!((p.theta() - 1.0 / 3.0).abs() < 1e-15);
        assert!(close(p.c(), Complex64::from_polar(1.0, PI / 3.0), 1e-15));
        assert_eq!(p.p(), 0.75);
        assert!((p.c().norm() - 1.0).abs() < 1e-14);

        for (a1, a2) in [(0.0, 0.5), (0.5, 0.0), (1.1, 0.5), (0.5, f64::NAN), (-0.2, 0.3)] {
            assert!(matches!(
                make_params(a1, a2),
                Err(Error::ParamOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn gen_binomial_matches_integer_binomials() {
        assert_eq!(gen_binomial(5.0, 2), 10.0);
        assert_eq!(gen_binomial(1.0, 3), 0.0);
        assert_eq!(gen_binomial(0.5, 0), 1.0);
        assert!((gen_binomial(0.5, 2) + 0.125).abs() < 1e-16);
    }

    #[test]
    fn lambda_symmetric_unit_is_two() {
        let params = make_params(1.0, 1.0).unwrap();
        for (n, l) in lambda_coeffs(&params, 64).iter().enumerate() {
            assert!(close(*l, Complex64::new(2.0, 0.0), 1e-10), "λ_{} = {l}", n + 1);
        }
        assert!(close(lambda_via_2f1(&params, 5), Complex64::new(2.0, 0.0), 1e-12));
    }

    #[test]
    fn lambda_one_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let params = random_params(&mut rng);
            let expected = (1.0 + params.c()) * params.p();
            assert!(close(lambda_coeffs(&params, 1)[0], expected, 1e-15));
            assert!(close(lambda_via_2f1(&params, 1), expected, 1e-15));
        }
    }

    #[test]
    fn lambda_real_in_symmetric_case() {
        let params = ClassParams::symmetric(0.37).unwrap();
        for l in lambda_coeffs(&params, 40) {
            assert_eq!(l.im, 0.0);
        }
    }

    #[test]
    fn lambda_sum_matches_brute_force_float_sum_for_small_n() {
        // for small n the plain f64 double sum has no cancellation trouble
        let params = make_params(0.5, 1.0).unwrap();
        let lambdas = lambda_coeffs(&params, 6);
        for n in 1..=6 {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 1..=n {
                let binom_int = gen_binomial((n - 1) as f64, k - 1);
                acc += binom_int * gen_binomial(params.p(), k) * (1.0 + params.c()).powi(k as i32);
            }
            assert!(close(lambdas[n - 1], acc, 1e-12), "n = {n}");
        }
    }

    #[test]
    fn lambda_dual_formula_mixed_params() {
        let params = make_params(0.5, 1.0).unwrap();
        let l3 = lambda_coeffs(&params, 3)[2];
        let via = lambda_via_2f1(&params, 3);
        assert!((l3 - via).norm() <= 1e-10 * l3.norm());
    }

    #[test]
    fn lambda_swap_conjugates() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let params = random_params(&mut rng);
            let a = lambda_coeffs(&params, 30);
            let b = lambda_coeffs(&params.swapped(), 30);
            assert!(close(params.swapped().c(), params.c().conj(), 1e-15));
            for (x, y) in a.iter().zip(&b) {
                assert!(close(x.conj(), *y, 1e-12));
            }
        }
    }

    #[test]
    fn recurrence_matches_double_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let params = random_params(&mut rng);
            let exact = lambda_coeffs(&params, 256);
            for (n, (x, y)) in exact.iter().zip(LambdaRecurrence::new(&params)).enumerate() {
                assert!(close(*x, y, 1e-12), "n = {}: {x} vs {y}", n + 1);
            }
        }
    }

    #[test]
    fn lambda_modulus_at_most_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let params = random_params(&mut rng);
            for l in lambda_coeffs(&params, 64) {
                assert!(l.norm() <= 2.0 + 1e-12);
            }
        }
    }

    #[test]
    fn g_series_examples() {
        let params = make_params(0.3, 0.8).unwrap();
        let g0 = g_series(&params, 0).unwrap();
        assert_eq!(g0.coeffs(), &[Complex64::new(1.0, 0.0)]);

        let unit = make_params(1.0, 1.0).unwrap();
        let g = g_series(&unit, 4).unwrap();
        let expected = TruncatedSeries::from_real(&[1.0, 2.0, 2.0, 2.0, 2.0]).unwrap();
        assert!(g.max_abs_diff(&expected) < 1e-14);

        let g = g_series(&params, 10).unwrap();
        assert!(close(g.coeff(1), lambda_via_2f1(&params, 1), 1e-15));
        let mobius = g_series_via_mobius(&params, 10).unwrap();
        assert!(g.max_abs_diff(&mobius) < 1e-10);

        assert!(g_series(&params, 257).is_err());
    }

    #[test]
    fn g_eval_examples() {
        let unit = make_params(1.0, 1.0).unwrap();
        assert_eq!(g_eval(&unit, Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(1.0, 0.0));
        assert!(close(g_eval(&unit, Complex64::new(0.5, 0.0)).unwrap(), Complex64::new(3.0, 0.0), 1e-15));
        assert!(matches!(
            g_eval(&unit, Complex64::new(1.0, 0.0)),
            Err(Error::OutsideDisc { .. })
        ));

        let params = make_params(0.4, 0.9).unwrap();
        let g = g_series(&params, 64).unwrap();
        for k in 0..16 {
            let z = Complex64::from_polar(0.7, k as f64 * PI / 8.0);
            let (v, _) = g.eval_at(z).unwrap();
            assert!(close(g_eval(&params, z).unwrap(), v, 1e-8));
        }
    }

    #[test]
    fn g_derivative_matches_series() {
        let params = make_params(0.6, 0.2).unwrap();
        let dg = g_series(&params, 80).unwrap().derivative();
        let z = Complex64::new(0.2, -0.3);
        assert!(close(g_derivative_unchecked(&params, z), dg.horner(z), 1e-12));
    }

    #[test]
    fn g_tilde_series_examples() {
        let unit = make_params(1.0, 1.0).unwrap();
        let gt = g_tilde_series(&unit, 10).unwrap();
        assert_eq!(gt.coeff(0), Complex64::new(0.0, 0.0));
        for n in 1..=10 {
            assert!(close(gt.coeff(n), Complex64::new(2.0 / n as f64, 0.0), 1e-14));
        }
        let params = make_params(0.25, 0.75).unwrap();
        let gt = g_tilde_series(&params, 12).unwrap();
        let lambdas = lambda_coeffs(&params, 12);
        assert_eq!(gt.coeff(1), lambdas[0]);
        for n in 1..=12 {
            assert!(close(gt.coeff(n) * n as f64, lambdas[n - 1], 1e-15));
        }
    }

    #[test]
    fn g_tilde_is_hadamard_with_log_kernel() {
        let params = make_params(0.45, 0.95).unwrap();
        let order = 20;
        let g_minus_one = &g_series(&params, order).unwrap() - &TruncatedSeries::one(order);
        let kernel: Vec<f64> = (0..=order)
            .map(|k| if k == 0 { 0.0 } else { 1.0 / k as f64 })
            .collect();
        let kernel = TruncatedSeries::from_real(&kernel).unwrap();
        let via = g_minus_one.hadamard(&kernel);
        assert!(via.max_abs_diff(&g_tilde_series(&params, order).unwrap()) < 1e-15);
    }

    #[test]
    fn g_tilde_real_examples() {
        let unit = make_params(1.0, 1.0).unwrap();
        assert_eq!(g_tilde_eval_real(&unit, 0.0).unwrap(), Complex64::new(0.0, 0.0));
        let v = g_tilde_eval_real(&unit, 0.5).unwrap();
        assert!((v.re + 2.0 * 0.5f64.ln()).abs() < 1e-9 && v.im == 0.0);
        let v = g_tilde_eval_real(&unit, -0.5).unwrap();
        assert!((v.re + 2.0 * 1.5f64.ln()).abs() < 1e-9);
        assert!(matches!(
            g_tilde_eval_real(&unit, 0.99999),
            Err(Error::TailNotConverged { .. })
        ));
        assert!(matches!(
            g_tilde_eval_real(&unit, -1.0),
            Err(Error::OutsideDisc { .. })
        ));
    }

    #[test]
    fn g_tilde_pointwise_matches_quadrature() {
        // G̃(z) = ∫₀¹ (G(sz) − 1)/s ds, composite Simpson on a fine mesh
        let params = make_params(0.3, 0.9).unwrap();
        let z = Complex64::from_polar(0.8, 2.0);
        let m = 20_000;
        let h = 1.0 / m as f64;
        let integrand = |s: f64| {
            if s == 0.0 {
                lambda_coeffs(&params, 1)[0] * z
            } else {
                (g_eval(&params, z * s).unwrap() - 1.0) / s
            }
        };
        let mut acc = integrand(0.0) + integrand(1.0);
        for i in 1..m {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * integrand(i as f64 * h);
        }
        let quad = acc * h / 3.0;
        assert!(close(g_tilde_eval(&params, z).unwrap(), quad, 1e-10));
    }

    #[test]
    fn omega_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let params = random_params(&mut rng);
            assert!(omega_contains(&params, Complex64::new(1.0, 0.0)).unwrap());
            assert!(!omega_contains(&params, Complex64::new(-1.0, 0.0)).unwrap());
        }
        let unit = make_params(1.0, 1.0).unwrap();
        assert!(!omega_contains(&unit, Complex64::new(0.0, 1.0)).unwrap());
        assert!(omega_contains_with_slack(&unit, Complex64::new(0.0, 1.0), 1e-9).unwrap());
        assert_eq!(omega_contains(&unit, Complex64::new(0.0, 0.0)), Err(Error::ZeroArgument));
    }

    #[test]
    fn generator_maps_disc_into_sector() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let params = random_params(&mut rng);
            for ri in 1..=19 {
                for k in 0..64 {
                    let z = Complex64::from_polar(ri as f64 * 0.05, k as f64 * PI / 32.0);
                    let w = g_eval(&params, z).unwrap();
                    assert!(omega_contains(&params, w).unwrap(), "{params:?} z={z}");
                }
            }
        }
    }
}
