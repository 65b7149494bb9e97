//! Seeded invariant suites.
//!
//! Each suite exercises the properties the corresponding module promises,
//! records every case, and collects failures with the expected value, the
//! observed value and the tolerance. Output depends only on the seed.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{self, BoundTable};
use crate::error::{Error, Result};
use crate::extremal;
use crate::generator::{self, ClassParams};
use crate::membership::{self, Extremal, KoebeBeta, Polynomial, Rotated, SampleGrid};
use crate::series::TruncatedSeries;

pub const DEFAULT_SEED: u64 = 20_171_204;

pub const SUITES: [&str; 5] = ["series", "generator", "membership", "bounds", "extremal"];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseFailure {
    pub case: String,
    pub expected: String,
    pub observed: String,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<CaseFailure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(suite: &str, parts: Vec<VerifyReport>) -> Self {
        let mut out = VerifyReport {
            suite: suite.to_string(),
            cases_run: 0,
            failures: Vec::new(),
            wall_time: Duration::ZERO,
        };
        for p in parts {
            out.cases_run += p.cases_run;
            out.wall_time += p.wall_time;
            out.failures.extend(p.failures.into_iter().map(|mut f| {
                f.case = format!("{}/{}", p.suite, f.case);
                f
            }));
        }
        out
    }
}

struct Recorder {
    suite: &'static str,
    cases: usize,
    failures: Vec<CaseFailure>,
}

impl Recorder {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, case: String, expected: String, observed: String, tolerance: f64) {
        self.failures.push(CaseFailure {
            case,
            expected,
            observed,
            tolerance,
        });
    }

    /// `|observed − expected| ≤ tol`.
    fn close(&mut self, case: impl Into<String>, expected: f64, observed: f64, tol: f64) {
        self.cases += 1;
        if !((observed - expected).abs() <= tol) {
            self.fail(case.into(), format!("{expected:e}"), format!("{observed:e}"), tol);
        }
    }

    /// `observed ≤ limit + tol`.
    fn at_most(&mut self, case: impl Into<String>, observed: f64, limit: f64, tol: f64) {
        self.cases += 1;
        if !(observed <= limit + tol) {
            self.fail(case.into(), format!("<= {limit:e}"), format!("{observed:e}"), tol);
        }
    }

    fn holds(&mut self, case: impl Into<String>, ok: bool, expected: &str, observed: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(case.into(), expected.to_string(), observed(), 0.0);
        }
    }

    /// Records an operation error as a failed case.
    fn ok<T>(&mut self, case: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(case.to_string(), "success".into(), e.to_string(), 0.0);
                None
            }
        }
    }

    fn finish(self, started: Instant) -> VerifyReport {
        VerifyReport {
            suite: self.suite.to_string(),
            cases_run: self.cases,
            failures: self.failures,
            wall_time: started.elapsed(),
        }
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str, seed: u64) -> Result<VerifyReport> {
    match name {
        "series" => Ok(series_suite(seed)),
        "generator" => Ok(generator_suite(seed)),
        "membership" => Ok(membership_suite(seed)),
        "bounds" => Ok(bounds_suite(seed)),
        "extremal" => Ok(extremal_suite(seed)),
        "all" => Ok(VerifyReport::merge(
            "all",
            SUITES.iter().map(|s| run_suite(s, seed).expect("known suite")).collect(),
        )),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

pub fn random_params(rng: &mut ChaCha8Rng) -> ClassParams {
    let a1 = 1.0 - rng.random::<f64>();
    let a2 = 1.0 - rng.random::<f64>();
    ClassParams::new(a1, a2).expect("draws lie in (0, 1]")
}

fn random_complex(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let rho = radius * rng.random::<f64>().sqrt();
    Complex64::from_polar(rho, 2.0 * PI * rng.random::<f64>())
}

/// Random series of the given order with `|c_n| ≤ scale · decay^n` and the
/// constant term forced to `c0`.
fn random_series(rng: &mut ChaCha8Rng, order: usize, scale: f64, decay: f64, c0: f64) -> TruncatedSeries {
    let mut coeffs: Vec<Complex64> = (0..=order)
        .map(|n| random_complex(rng, scale * decay.powi(n as i32)))
        .collect();
    coeffs[0] = Complex64::new(c0, 0.0);
    TruncatedSeries::new(coeffs).expect("random coefficients are finite")
}

fn series_suite(seed: u64) -> VerifyReport {
    let started = Instant::now();
    let mut rec = Recorder::new("series");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for trial in 0..20 {
        let order = [8, 16, 32, 64][trial % 4];
        // exp ∘ log on c₀ = 1 series, log ∘ exp on c₀ = 0 series
        // |a − 1| < 1 on the closed disc keeps log a well conditioned
        let a = random_series(&mut rng, order, 0.45, 0.5, 1.0);
        if let Some(back) = rec.ok("exp_log", a.log().and_then(|l| l.exp())) {
            let scale = a.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
            rec.at_most(format!("exp_log[{trial}]"), back.max_abs_diff(&a) / scale, 1e-10, 0.0);
        }
        let b = random_series(&mut rng, order, 10.0, 0.5, 0.0);
        if let Some(back) = rec.ok("log_exp", b.exp().and_then(|e| e.log())) {
            rec.at_most(format!("log_exp[{trial}]"), back.max_abs_diff(&b), 1e-10, 0.0);
        }

        let p = 4.0 * rng.random::<f64>() - 2.0;
        let c = random_series(&mut rng, order, 1.0, 0.7, 1.0);
        if let Some(prod) = rec.ok("pow", c.pow(p).and_then(|x| Ok(&x * &c.pow(-p)?))) {
            rec.at_most(
                format!("pow_inverse[{trial}]"),
                prod.max_abs_diff(&TruncatedSeries::one(order)),
                1e-10,
                0.0,
            );
        }

        if let Some(int) = rec.ok("integrate", b.integrate_dz_over_z()) {
            let worst = (1..=order)
                .map(|n| (int.coeff(n) * n as f64 - b.coeff(n)).norm() / b.coeff(n).norm().max(1e-300))
                .fold(0.0, f64::max);
            rec.at_most(format!("integrate_times_n[{trial}]"), worst, 1e-14, 0.0);
        }

        let c0: f64 = rng.random();
        let x = random_series(&mut rng, order, 1.0, 0.9, c0);
        let c0: f64 = rng.random();
        let y = random_series(&mut rng, order, 1.0, 0.9, c0);
        let c0: f64 = rng.random();
        let w = random_series(&mut rng, order, 1.0, 0.9, c0);
        let k = random_complex(&mut rng, 3.0);
        let lin = (&x.scale(k) + &y).derivative();
        let sep = &x.derivative().scale(k) + &y.derivative();
        rec.at_most(format!("derivative_linear[{trial}]"), lin.max_abs_diff(&sep), 1e-12, 0.0);

        rec.at_most(
            format!("cauchy_commutative[{trial}]"),
            (&x * &y).max_abs_diff(&(&y * &x)),
            1e-12,
            0.0,
        );
        rec.at_most(
            format!("cauchy_associative[{trial}]"),
            (&(&x * &y) * &w).max_abs_diff(&(&x * &(&y * &w))),
            1e-12,
            0.0,
        );
        rec.holds(
            format!("hadamard_commutative[{trial}]"),
            x.hadamard(&y) == y.hadamard(&x),
            "exact equality",
            || "differs".into(),
        );
        let lhs = x.hadamard(&(&y + &w));
        let rhs = &x.hadamard(&y) + &x.hadamard(&w);
        rec.at_most(format!("hadamard_distributes[{trial}]"), lhs.max_abs_diff(&rhs), 1e-15, 0.0);
    }
    rec.finish(started)
}

fn generator_suite(seed: u64) -> VerifyReport {
    let started = Instant::now();
    let mut rec = Recorder::new("generator");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);

    // dual-formula agreement
    for draw in 0..100 {
        let params = random_params(&mut rng);
        let lambdas = generator::lambda_coeffs(&params, 40);
        let worst = (1..=40)
            .map(|n| {
                let a = lambdas[n - 1];
                (a - generator::lambda_via_2f1(&params, n)).norm() / (1.0 + a.norm())
            })
            .fold(0.0, f64::max);
        rec.at_most(format!("lambda_dual_formula[{draw}]"), worst, 1e-10, 0.0);
    }

    rec.close(
        "lambda_unit_params",
        0.0,
        generator::lambda_coeffs(&ClassParams::new(1.0, 1.0).unwrap(), 64)
            .iter()
            .map(|l| (l - 2.0).norm())
            .fold(0.0, f64::max),
        1e-10,
    );

    for draw in 0..10 {
        let params = random_params(&mut rng);
        let Some(g) = rec.ok("g_series", generator::g_series(&params, 64)) else {
            continue;
        };
        let mut worst = 0.0f64;
        for ri in 1..=7 {
            for k in 0..32 {
                let z = Complex64::from_polar(ri as f64 * 0.1, 2.0 * PI * k as f64 / 32.0);
                let closed = generator::g_eval(&params, z).expect("inside the disc");
                worst = worst.max((closed - g.horner(z)).norm());
            }
        }
        rec.at_most(format!("closed_form_vs_series[{draw}]"), worst, 1e-8, 0.0);

        if let Some(m) = rec.ok("g_series_via_mobius", generator::g_series_via_mobius(&params, 64)) {
            rec.at_most(format!("mobius_agreement[{draw}]"), g.max_abs_diff(&m), 1e-10, 0.0);
        }

        let swapped = generator::lambda_coeffs(&params.swapped(), 40);
        let direct = generator::lambda_coeffs(&params, 40);
        let worst = direct
            .iter()
            .zip(&swapped)
            .map(|(a, b)| (a.conj() - b).norm())
            .fold(0.0, f64::max);
        rec.at_most(format!("swap_conjugates[{draw}]"), worst, 1e-12, 0.0);

        if let Some(gt) = rec.ok("g_tilde_series", generator::g_tilde_series(&params, 64)) {
            let worst = (1..=64)
                .map(|n| (gt.coeff(n) * n as f64 - g.coeff(n)).norm())
                .fold(0.0, f64::max);
            rec.at_most(format!("g_tilde_times_n[{draw}]"), worst, 1e-14, 0.0);
        }

        let mut outside = 0usize;
        for ri in 1..=19 {
            for k in 0..72 {
                let z = Complex64::from_polar(ri as f64 * 0.05, 2.0 * PI * k as f64 / 72.0);
                let w = generator::g_eval(&params, z).expect("inside the disc");
                if !generator::omega_contains(&params, w).unwrap_or(false) {
                    outside += 1;
                }
            }
        }
        rec.holds(format!("image_in_sector[{draw}]"), outside == 0, "0 points outside", || {
            format!("{outside} points outside")
        });
    }
    rec.finish(started)
}

fn membership_suite(seed: u64) -> VerifyReport {
    let started = Instant::now();
    let mut rec = Recorder::new("membership");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x85eb_ca6b);

    // rotation covariance on a full angular grid
    let grid = SampleGrid::new(vec![0.2, 0.5, 0.8, 0.95], 96).expect("valid grid");
    for trial in 0..6 {
        let params = random_params(&mut rng);
        let beta = 0.2 + 0.8 * rng.random::<f64>();
        let shift = 1 + (rng.random::<f64>() * 95.0) as usize;
        let mu = Complex64::from_polar(1.0, 2.0 * PI * shift as f64 / 96.0);
        let f = KoebeBeta { beta };
        let sorted_args = |g: &dyn membership::AnalyticFunction| -> Vec<f64> {
            let mut v: Vec<f64> = grid
                .points()
                .map(|z| {
                    let j = g.jet(z).expect("inside the disc");
                    (z * j.df / j.f).arg()
                })
                .collect();
            v.sort_by(f64::total_cmp);
            v
        };
        let a = sorted_args(&f);
        let b = sorted_args(&Rotated { inner: f, mu });
        let worst = a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        rec.at_most(format!("rotation_permutation[{trial}]"), worst, 1e-10, 0.0);
        let r1 = membership::check_membership(&f, &params, &grid);
        let r2 = membership::check_membership(&Rotated { inner: f, mu }, &params, &grid);
        if let (Some(r1), Some(r2)) = (rec.ok("check", r1), rec.ok("check", r2)) {
            rec.holds(format!("rotation_status[{trial}]"), r1.passed == r2.passed, "same status", || {
                format!("{} vs {}", r1.passed, r2.passed)
            });
        }
    }

    // refinement keeps violations
    let coarse = SampleGrid::new(vec![0.5, 0.9], 16).expect("valid grid");
    let fine = SampleGrid::new(vec![0.3, 0.5, 0.7, 0.9, 0.97], 64).expect("valid grid");
    for beta in [0.6, 0.8, 1.0] {
        let params = ClassParams::symmetric(beta * 0.5).expect("in range");
        let f = KoebeBeta { beta };
        let a = rec.ok("check", membership::check_membership(&f, &params, &coarse));
        let b = rec.ok("check", membership::check_membership(&f, &params, &fine));
        if let (Some(a), Some(b)) = (a, b) {
            rec.holds(format!("coarse_fails[{beta}]"), !a.passed, "violated", || "passed".into());
            let kept = a.violations.iter().all(|v| {
                b.violations.iter().any(|w| (w.z - v.z).norm() < 1e-12)
            });
            rec.holds(format!("refinement_keeps_violations[{beta}]"), kept && !b.passed, "superset", || {
                "violation lost".into()
            });
        }
    }

    // window monotonicity: passing with (α₁, α₂) implies passing with larger α's
    let grid = SampleGrid::new(vec![0.2, 0.5, 0.8, 0.95], 120).expect("valid grid");
    for trial in 0..6 {
        let params = random_params(&mut rng);
        let wider = ClassParams::new(
            params.alpha1() + (1.0 - params.alpha1()) * rng.random::<f64>(),
            params.alpha2() + (1.0 - params.alpha2()) * rng.random::<f64>(),
        )
        .expect("in range");
        let f = Extremal { params };
        if let (Some(a), Some(b)) = (
            rec.ok("check", membership::check_membership(&f, &params, &grid)),
            rec.ok("check", membership::check_membership(&f, &wider, &grid)),
        ) {
            rec.holds(format!("window_monotone[{trial}]"), !a.passed || b.passed, "wider window passes", || {
                format!("{} violations", b.violations.len())
            });
        }
    }

    // ratio_series vs pointwise z f'/f
    for trial in 0..5 {
        let params = random_params(&mut rng);
        let Some(f) = rec.ok("extremal", extremal::extremal_series(&params, 48)) else {
            continue;
        };
        let Some(ratio) = rec.ok("ratio", membership::ratio_series(f.series())) else {
            continue;
        };
        let poly = Polynomial::new(f.series().clone());
        let mut worst = 0.0f64;
        for k in 0..32 {
            let z = Complex64::from_polar(0.5, 2.0 * PI * k as f64 / 32.0);
            let j = membership::AnalyticFunction::jet(&poly, z).expect("polynomial");
            worst = worst.max((ratio.horner(z) - z * j.df / j.f).norm());
        }
        rec.at_most(format!("ratio_series_pointwise[{trial}]"), worst, 1e-8, 0.0);
    }
    rec.finish(started)
}

fn bounds_suite(seed: u64) -> VerifyReport {
    let started = Instant::now();
    let mut rec = Recorder::new("bounds");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc2b2_ae35);

    let mut param_set = vec![
        ClassParams::new(1.0, 1.0).unwrap(),
        ClassParams::new(0.3, 0.9).unwrap(),
        ClassParams::new(0.5, 0.5).unwrap(),
    ];
    param_set.extend((0..5).map(|_| random_params(&mut rng)));

    for (i, params) in param_set.iter().enumerate() {
        let rmax = params.validity_radius();
        // monotonicity by finite differences on 10³ points
        let mut upper_ok = true;
        let mut lower_ok = true;
        let mut prev_u = f64::NEG_INFINITY;
        let mut prev_l = f64::INFINITY;
        for j in 0..1000 {
            let ru = 0.999 * j as f64 / 999.0;
            let u = bounds::re_upper_bound(params, ru).expect("r < 1");
            upper_ok &= u > prev_u;
            prev_u = u;
            let rl = rmax * j as f64 / 999.0;
            let l = bounds::re_lower_bound(params, rl).expect("r within validity radius");
            lower_ok &= l < prev_l;
            prev_l = l;
        }
        rec.holds(format!("re_upper_increasing[{i}]"), upper_ok, "strictly increasing", || "not monotone".into());
        rec.holds(format!("re_lower_decreasing[{i}]"), lower_ok, "strictly decreasing", || "not monotone".into());

        rec.close(format!("re_lower_endpoint[{i}]"), 0.0, bounds::re_lower_bound(params, rmax).unwrap_or(f64::NAN), 0.0);
        rec.close(format!("re_lower_center[{i}]"), 1.0, bounds::re_lower_bound(params, 0.0).unwrap_or(f64::NAN), 0.0);
        rec.close(format!("re_upper_center[{i}]"), 1.0, bounds::re_upper_bound(params, 0.0).unwrap_or(f64::NAN), 0.0);

        // the bounds bound Re G on |z| = r
        for j in 1..=6 {
            let r = rmax * j as f64 / 6.0 * 0.999;
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for k in 0..10_000 {
                let z = Complex64::from_polar(r, 2.0 * PI * k as f64 / 10_000.0);
                let re = generator::g_eval(params, z).expect("inside the disc").re;
                lo = lo.min(re);
                hi = hi.max(re);
            }
            let lb = bounds::re_lower_bound(params, r).expect("in range");
            let ub = bounds::re_upper_bound(params, r).expect("in range");
            rec.at_most(format!("re_lower_below_generator[{i},{j}]"), lb, lo, 1e-6);
            rec.at_most(format!("generator_below_re_upper[{i},{j}]"), hi, ub, 1e-6);
        }

        let lambda1 = generator::lambda_coeffs(params, 1)[0].norm();
        let worst = (1..=64)
            .map(|n| (bounds::gamma_bound(params, n) * 2.0 * n as f64 - lambda1).abs())
            .fold(0.0, f64::max);
        rec.at_most(format!("gamma_times_2n_is_lambda1[{i}]"), worst, 1e-12, 0.0);

        // coeff_bound(n+1)/coeff_bound(n) = (n − 1 + A)/n, nondecreasing iff A ≥ 1
        let a = params.lambda1_modulus();
        let mut worst = 0.0f64;
        let mut monotone = true;
        for n in 2..20 {
            let ratio = bounds::coeff_bound(params, n + 1) / bounds::coeff_bound(params, n);
            worst = worst.max((ratio - (n as f64 - 1.0 + a) / n as f64).abs());
            monotone &= ratio >= 1.0 - 1e-15;
        }
        rec.at_most(format!("coeff_bound_ratio[{i}]"), worst, 1e-13, 0.0);
        if a >= 1.0 {
            rec.holds(format!("coeff_bound_nondecreasing_in_n[{i}]"), monotone, "nondecreasing", || {
                "decreasing step".into()
            });
        }

        for table in [
            BoundTable::real_part(params, &[0.0, 0.1, 0.2, 0.3, 0.5, 0.9]),
            BoundTable::growth(params, &[0.05, 0.25, 0.5, 0.75, 0.95]),
            BoundTable::gamma(params, 16),
            BoundTable::coeff(params, 16),
        ] {
            let verdict = table.check_invariants();
            rec.holds(format!("table_invariants[{i},{}]", table.kind.name()), verdict.is_ok(), "ok", || {
                verdict.unwrap_err()
            });
        }
    }

    // coeff_bound nondecreasing in each αᵢ
    let mut ok = true;
    for n in [2, 3, 5, 10, 20] {
        for &other in &[0.1, 0.5, 1.0] {
            let mut prev1 = 0.0;
            let mut prev2 = 0.0;
            for j in 1..=50 {
                let a = j as f64 / 50.0;
                let b1 = bounds::coeff_bound(&ClassParams::new(a, other).unwrap(), n);
                let b2 = bounds::coeff_bound(&ClassParams::new(other, a).unwrap(), n);
                ok &= b1 >= prev1 - 1e-14 && b2 >= prev2 - 1e-14;
                prev1 = b1;
                prev2 = b2;
            }
        }
    }
    rec.holds("coeff_bound_nondecreasing_in_alpha", ok, "nondecreasing", || "decreasing step".into());

    // growth bounds: lower < upper on r ∈ [0.05, 0.95]
    for (i, params) in param_set.iter().enumerate() {
        for j in 0..=18 {
            let r = 0.05 + 0.05 * j as f64;
            if let Some((lo, hi)) = rec.ok("growth", bounds::growth_bounds(params, r)) {
                rec.holds(format!("growth_ordered[{i},{j}]"), lo < hi, "lower < upper", || format!("{lo} vs {hi}"));
            }
        }
    }
    rec.finish(started)
}

fn extremal_suite(seed: u64) -> VerifyReport {
    let started = Instant::now();
    let mut rec = Recorder::new("extremal");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x27d4_eb2f);

    // Attainment. z·exp G̃(z) has γ_n = λ_n/(2n): equal to the bound at n = 1
    // for every parameter pair and at every n for α₁ = α₂ = 1. The rotated
    // extremal z·exp(G̃(zⁿ)/n) attains the bound at index n.
    for beta in [0.3, 0.7, 1.0] {
        let params = ClassParams::symmetric(beta).unwrap();
        if let Some(f) = rec.ok("extremal", extremal::extremal_series(&params, 33)) {
            if let Some(g) = rec.ok("log_coeffs", extremal::log_coeffs(&f, 32)) {
                rec.close(format!("gamma1_attained[{beta}]"), bounds::gamma_bound(&params, 1), g[0].norm(), 1e-10);
                if beta == 1.0 {
                    for n in 1..=32 {
                        rec.close(format!("koebe_gamma_attained[{n}]"), 1.0 / n as f64, g[n - 1].norm(), 1e-10);
                    }
                }
            }
        }
        for n in 1..=32 {
            if let Some(f) = rec.ok("rotated", extremal::rotated_extremal_series(&params, n, 33)) {
                if let Some(g) = rec.ok("log_coeffs", extremal::log_coeffs(&f, 32)) {
                    rec.close(
                        format!("rotated_gamma_attained[{beta},{n}]"),
                        beta / n as f64,
                        g[n - 1].norm(),
                        1e-10,
                    );
                }
            }
        }
    }

    // domination
    for draw in 0..100 {
        let params = random_params(&mut rng);
        let Some(f) = rec.ok("extremal", extremal::extremal_series(&params, 33)) else {
            continue;
        };
        if let Some(g) = rec.ok("log_coeffs", extremal::log_coeffs(&f, 32)) {
            let worst = g
                .iter()
                .enumerate()
                .map(|(i, gi)| gi.norm() - bounds::gamma_bound(&params, i + 1))
                .fold(f64::NEG_INFINITY, f64::max);
            rec.at_most(format!("gamma_dominated[{draw}]"), worst, 0.0, 1e-10);
        }
        if draw < 20 {
            let ratio = membership::ratio_series(f.series());
            let g = generator::g_series(&params, 32);
            if let (Some(ratio), Some(g)) = (rec.ok("ratio", ratio), rec.ok("g_series", g)) {
                rec.at_most(format!("extremal_realizes_generator[{draw}]"), ratio.max_abs_diff(&g), 1e-9, 0.0);
            }
        }
    }

    // membership of extremals on the default grid
    let grid = SampleGrid::default();
    for (a1, a2) in [(0.3, 0.3), (0.7, 0.7), (1.0, 1.0), (0.2, 0.9)] {
        let params = ClassParams::new(a1, a2).unwrap();
        if let Some(r) = rec.ok("check", membership::check_membership(&Extremal { params }, &params, &grid)) {
            rec.holds(format!("extremal_member[{a1},{a2}]"), r.passed, "no violation", || {
                format!("{} violations", r.violations.len())
            });
        }
    }
    let unit = ClassParams::new(1.0, 1.0).unwrap();
    if let Some(r) = rec.ok("check", membership::check_membership(&KoebeBeta { beta: 1.0 }, &unit, &grid)) {
        rec.holds("koebe_member", r.passed, "no violation", || format!("{} violations", r.violations.len()));
    }

    // coefficient domination with equality for z/(1 − z)^{2β}
    for beta in [0.1, 0.3, 0.5, 0.7, 0.9, 1.0] {
        let params = ClassParams::symmetric(beta).unwrap();
        if let Some(f) = rec.ok("koebe_beta", extremal::koebe_beta_series(beta, 20)) {
            rec.close(format!("a2_attained[{beta}]"), bounds::coeff_bound(&params, 2), f.a(2).norm(), 1e-12);
            for n in 2..=20 {
                let bound = bounds::coeff_bound(&params, n);
                rec.at_most(format!("a_n_dominated[{beta},{n}]"), f.a(n).norm(), bound, 1e-12 * bound);
            }
        }
    }
    rec.finish(started)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert_eq!(
            run_suite("nope", 1).unwrap_err(),
            Error::UnknownSuite("nope".into())
        );
    }

    #[test]
    fn every_suite_passes_with_default_seed() {
        for suite in SUITES {
            let report = run_suite(suite, DEFAULT_SEED).unwrap();
            assert!(report.cases_run > 0);
            assert!(report.passed(), "{suite}: {:#?}", report.failures);
        }
    }

    #[test]
    fn generator_suite_includes_dual_formula_checks() {
        let report = run_suite("generator", 3).unwrap();
        assert!(report.cases_run >= 100);
    }
}
