use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Value};
use starlike_core::bounds::{self, BoundTable};
use starlike_core::extremal::{self, NormalizedFunction};
use starlike_core::generator::{self, ClassParams};
use starlike_core::membership::{self, AnalyticFunction, ArgWindowReport, SampleGrid};
use starlike_core::series::{TruncatedSeries, DEFAULT_MAX_ORDER};
use starlike_core::verify::{self, DEFAULT_SEED, SUITES};
use starlike_core::Error;

use crate::args::{BoundFamily, Common, Condition, Format, PlotKind};
use crate::table::Table;

const DEFAULT_RADII: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, parameters, or files; exit status 2.
    Usage(String),
    /// The computation ran and found a failure; exit status 1.
    Semantic(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Rendered output plus whether the command's check passed.
#[derive(Debug)]
pub struct Rendered {
    pub text: String,
    pub passed: bool,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

fn render_table(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => pretty(&table.to_json()),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serializable");
    s.push('\n');
    s
}

fn params(common: &Common) -> Result<ClassParams, CliError> {
    Ok(ClassParams::new(common.alpha1, common.alpha2)?)
}

fn check_index(name: &str, n: usize) -> Result<(), CliError> {
    if n == 0 || n > DEFAULT_MAX_ORDER {
        return Err(CliError::Usage(format!("--{name} must lie in [1, {DEFAULT_MAX_ORDER}], got {n}")));
    }
    Ok(())
}

fn param_meta(table: Table, p: &ClassParams) -> Table {
    table.meta("alpha1", p.alpha1()).meta("alpha2", p.alpha2())
}

pub fn lambda(common: &Common) -> Result<Rendered, CliError> {
    let p = params(common)?;
    check_index("n-max", common.n_max)?;
    let lambdas = generator::lambda_coeffs(&p, common.n_max);
    let mut t = param_meta(Table::new("lambda", &["n", "re", "im", "abs", "residual"]), &p);
    for (i, l) in lambdas.iter().enumerate() {
        let n = i + 1;
        let residual = (l - generator::lambda_via_2f1(&p, n)).norm();
        t.push(vec![n.into(), l.re.into(), l.im.into(), l.norm().into(), residual.into()]);
    }
    Ok(Rendered::ok(render_table(&t, common.format.unwrap_or(Format::Csv))))
}

pub fn bounds(common: &Common, which: BoundFamily) -> Result<Rendered, CliError> {
    let p = params(common)?;
    let table = match which {
        BoundFamily::Re => BoundTable::real_part(&p, &common.radii(&DEFAULT_RADII)),
        BoundFamily::Growth => BoundTable::growth(&p, &common.radii(&DEFAULT_RADII)),
        BoundFamily::Gamma => {
            check_index("n-max", common.n_max)?;
            BoundTable::gamma(&p, common.n_max)
        }
        BoundFamily::Coeff => {
            check_index("n-max", common.n_max)?;
            BoundTable::coeff(&p, common.n_max)
        }
    };
    for e in &table.entries {
        if e.value.is_none() {
            log::warn!("r = {} lies outside the domain of the {} bound", e.at, table.kind.name());
        }
        if table.is_two_sided() && e.value_upper.is_none() {
            log::warn!("r = {} lies outside the domain of the upper bound", e.at);
        }
    }
    let text = match common.format.unwrap_or(Format::Csv) {
        Format::Csv => table.to_csv(),
        Format::Json => pretty(&table.to_json()),
    };
    Ok(Rendered::ok(text))
}

/// Resolves `identity | koebe | koebe-beta:β | extremal | series:PATH`.
fn resolve_function(
    builtin: Option<&str>,
    series: Option<&Path>,
    p: &ClassParams,
) -> Result<Box<dyn AnalyticFunction + Send>, CliError> {
    if let Some(path) = series {
        return load_series(path);
    }
    let choice = builtin.ok_or_else(|| CliError::Usage("one of --builtin or --series is required".into()))?;
    match choice {
        "identity" => Ok(Box::new(membership::Identity)),
        "koebe" => Ok(Box::new(membership::KoebeBeta { beta: 1.0 })),
        "extremal" => Ok(Box::new(membership::Extremal { params: *p })),
        _ => {
            if let Some(beta) = choice.strip_prefix("koebe-beta:") {
                let beta: f64 = beta
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid β in {choice:?}")))?;
                if !(beta > 0.0 && beta <= 1.0) {
                    return Err(CliError::Usage(format!("β must lie in (0, 1], got {beta}")));
                }
                Ok(Box::new(membership::KoebeBeta { beta }))
            } else if let Some(path) = choice.strip_prefix("series:") {
                load_series(Path::new(path))
            } else {
                Err(CliError::Usage(format!("unknown builtin {choice:?}")))
            }
        }
    }
}

fn load_series(path: &Path) -> Result<Box<dyn AnalyticFunction + Send>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let series = TruncatedSeries::from_json(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let f = NormalizedFunction::new(series, path.display().to_string())
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(Box::new(membership::Polynomial::new(f.series().clone())))
}

pub fn check(
    common: &Common,
    builtin: Option<&str>,
    series: Option<&Path>,
    condition: Condition,
) -> Result<Rendered, CliError> {
    let p = params(common)?;
    let f = resolve_function(builtin, series, &p)?;
    let grid = match (&common.r_list, common.r) {
        (None, None) if common.angles == 720 => match condition {
            Condition::Starlike => SampleGrid::default(),
            Condition::Convexity => convexity_grid(&p, common.angles)?,
        },
        (None, None) => match condition {
            Condition::Starlike => SampleGrid::new(SampleGrid::default().radii().to_vec(), common.angles)?,
            Condition::Convexity => convexity_grid(&p, common.angles)?,
        },
        _ => SampleGrid::new(common.radii(&[]), common.angles)?,
    };
    let report = match condition {
        Condition::Starlike => membership::check_membership(&f, &p, &grid),
        Condition::Convexity => membership::check_convexity_condition(&f, &p, &grid),
    };
    let report = report.map_err(|e| match e {
        Error::RadiusOutOfRange { .. } | Error::InvalidGrid(_) => CliError::Usage(e.to_string()),
        other => CliError::Semantic(other.to_string()),
    })?;
    Ok(Rendered {
        text: render_report(&report, common.format.unwrap_or(Format::Json)),
        passed: report.passed,
    })
}

/// Ten radii evenly spaced up to the validity radius.
fn convexity_grid(p: &ClassParams, angles: usize) -> Result<SampleGrid, CliError> {
    let max = p.validity_radius();
    Ok(SampleGrid::new((1..=10).map(|i| max * i as f64 / 10.0).collect(), angles)?)
}

fn render_report(report: &ArgWindowReport, format: Format) -> String {
    match format {
        Format::Json => {
            let v: Value = serde_json::from_str(&report.to_json_string()).expect("report JSON is valid");
            pretty(&v)
        }
        Format::Csv => {
            let mut t = Table::new("check", &["re", "im", "arg"]);
            for v in &report.violations {
                t.push(vec![v.z.re.into(), v.z.im.into(), v.arg.into()]);
            }
            format!(
                "# status={} total={} min_arg={} max_arg={}\n{}",
                report.status(),
                report.total_samples,
                bounds::format_sig(report.min_arg),
                bounds::format_sig(report.max_arg),
                t.to_csv()
            )
        }
    }
}

pub fn extremal(common: &Common) -> Result<Rendered, CliError> {
    let p = params(common)?;
    check_index("order", common.order)?;
    // one extra degree so γ_n is available on every printed row
    let f = extremal::extremal_series(&p, (common.order + 1).min(DEFAULT_MAX_ORDER))?;
    let gammas = extremal::log_coeffs(&f, f.order() - 1)?;
    let mut t = param_meta(
        Table::new(
            "extremal",
            &["n", "a_re", "a_im", "a_abs", "gamma_re", "gamma_im", "gamma_abs", "gamma_bound"],
        ),
        &p,
    );
    for n in 1..=common.order {
        let a = f.a(n);
        let g = gammas.get(n - 1).copied();
        t.push(vec![
            n.into(),
            a.re.into(),
            a.im.into(),
            a.norm().into(),
            g.map(|g| g.re).into(),
            g.map(|g| g.im).into(),
            g.map(|g| g.norm()).into(),
            bounds::gamma_bound(&p, n).into(),
        ]);
    }
    Ok(Rendered::ok(render_table(&t, common.format.unwrap_or(Format::Csv))))
}

pub fn plotdata(common: &Common, what: PlotKind) -> Result<Rendered, CliError> {
    let p = params(common)?;
    if common.angles < 2 {
        return Err(CliError::Usage("--angles must be at least 2".into()));
    }
    let m = common.angles;
    let t = match what {
        PlotKind::OmegaBoundary => {
            let reach = common.r.unwrap_or(4.0);
            let (lo, hi) = p.window();
            let mut t = param_meta(Table::new("omega-boundary", &["ray", "t", "re", "im"]), &p);
            for (name, angle) in [("lower", lo), ("upper", hi)] {
                for i in 0..m {
                    let s = reach * i as f64 / (m - 1) as f64;
                    let w = Complex64::from_polar(s, angle);
                    t.push(vec![name.into(), s.into(), w.re.into(), w.im.into()]);
                }
            }
            t
        }
        PlotKind::GImage => {
            let mut t = param_meta(Table::new("g-image", &["r", "phi", "re", "im"]), &p);
            for r in common.radii(&[0.5]) {
                for i in 0..m {
                    let phi = 2.0 * PI * i as f64 / m as f64;
                    let w = generator::g_eval(&p, Complex64::from_polar(r, phi))?;
                    t.push(vec![r.into(), phi.into(), w.re.into(), w.im.into()]);
                }
            }
            t
        }
        PlotKind::GrowthAnnulus => {
            let mut t = param_meta(
                Table::new("growth-annulus", &["r", "bound", "radius", "phi", "re", "im"]),
                &p,
            );
            for r in common.radii(&DEFAULT_RADII) {
                let (lo, hi) = match bounds::growth_bounds(&p, r) {
                    Ok(pair) => pair,
                    Err(e) => {
                        log::warn!("skipping r = {r}: {e}");
                        continue;
                    }
                };
                for (name, rho) in [("lower", lo), ("upper", hi)] {
                    for i in 0..m {
                        let phi = 2.0 * PI * i as f64 / m as f64;
                        let w = Complex64::from_polar(rho, phi);
                        t.push(vec![
                            r.into(),
                            name.into(),
                            rho.into(),
                            phi.into(),
                            w.re.into(),
                            w.im.into(),
                        ]);
                    }
                }
            }
            t
        }
    };
    Ok(Rendered::ok(render_table(&t, common.format.unwrap_or(Format::Csv))))
}

pub fn verify(suites: &[String], seed: Option<u64>, format: Option<Format>) -> Result<Rendered, CliError> {
    for s in suites {
        if s != "all" && !SUITES.contains(&s.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown suite {s:?}; expected one of {}, all",
                SUITES.join(", ")
            )));
        }
    }
    let names: Vec<&str> = if suites.iter().any(|s| s == "all") {
        SUITES.to_vec()
    } else {
        let mut v: Vec<&str> = SUITES.iter().copied().filter(|s| suites.iter().any(|x| x == s)).collect();
        v.dedup();
        v
    };
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let mut reports = Vec::new();
    for name in names {
        let report = verify::run_suite(name, seed)?;
        eprintln!(
            "{name}: {} cases, {} failures, {:.3} s",
            report.cases_run,
            report.failures.len(),
            report.wall_time.as_secs_f64()
        );
        reports.push(report);
    }
    let passed = reports.iter().all(|r| r.passed());
    let text = match format.unwrap_or(Format::Json) {
        Format::Json => pretty(&json!({
            "seed": seed,
            "passed": passed,
            "suites": reports,
        })),
        Format::Csv => {
            let mut t = Table::new("verify", &["suite", "cases_run", "failures"]);
            for r in &reports {
                t.push(vec![r.suite.as_str().into(), r.cases_run.into(), r.failures.len().into()]);
            }
            t.to_csv()
        }
    };
    Ok(Rendered { text, passed })
}

