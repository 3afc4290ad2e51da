use std::fmt;
use std::io::Write;
use std::thread;

use serde::Serialize;
use serde_json::{json, Value};
use solvext_core::models::{
    bound_levels, construction_residuals, eigenstate, energy, harmonic_reduced_residual,
    p_polynomial, p_polynomial_closed, potential, validate_spec, wavefunction_raw, xi_ode_residual,
    Level, ModelError, ModelFamily, ModelSpec, Rejection,
};
use solvext_core::poly::{laguerre_identity_residuals, relative_residual};
use solvext_core::spectral::{
    compare_spectrum, gram_matrix, normalization, schrodinger_residual, GramSpace, Grid,
    SpectralError,
};

use crate::config::{Command, CommandConfig, FamilyArg, Format, Quantity, DEFAULT_VERIFY_NMAX};
use crate::output::{open_output, write_json, Cell, SpecInfo, Table, SCHEMA_VERSION};

pub const GRAM_TOL: f64 = 1e-8;
pub const ETA_AGREEMENT_TOL: f64 = 1e-9;
pub const RESIDUAL_TOL: f64 = 1e-3;
pub const ALGEBRAIC_TOL: f64 = 1e-10;
const NORMALIZATION_TOL: f64 = 1e-10;
const IDENTITY_MAX_N: usize = 12;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Inadmissible(Rejection),
    Runtime(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Runtime(_) => 1,
            CliError::Inadmissible(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Inadmissible(r) => write!(f, "inadmissible: {r}"),
            CliError::Runtime(e) => write!(f, "error: {e:#}"),
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::Rejected(r) => CliError::Inadmissible(r),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::Model(m) => m.into(),
            SpectralError::InvalidGrid => CliError::Usage(e.to_string()),
            other => CliError::Runtime(anyhow::anyhow!(other.to_string())),
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Runtime(e)
    }
}

impl From<crate::config::UsageError> for CliError {
    fn from(e: crate::config::UsageError) -> Self {
        CliError::Usage(e.0)
    }
}

/// Runs one invocation. `Ok(false)` means a verification check failed.
pub fn run(config: &CommandConfig) -> Result<bool, CliError> {
    config.check()?;
    match config.command {
        Command::Validate => validate(config),
        Command::Tabulate { quantity, level } => tabulate(config, quantity, level.0).map(|_| true),
        Command::Spectrum => spectrum(config).map(|_| true),
        Command::Verify => verify(config),
    }
}

fn build_spec(config: &CommandConfig) -> Result<ModelSpec, CliError> {
    Ok(validate_spec(
        config.family.into(),
        config.ell,
        config.alpha,
    )?)
}

fn emit(
    config: &CommandConfig,
    f: impl FnOnce(&mut dyn Write) -> anyhow::Result<()>,
) -> Result<(), CliError> {
    let mut out = open_output(config.output.as_deref())?;
    f(&mut *out)?;
    out.flush().map_err(anyhow::Error::from)?;
    Ok(())
}

#[derive(Serialize)]
struct ValidateReport {
    schema_version: u32,
    spec: SpecInfo,
    admissible: bool,
    reason: Option<&'static str>,
    xi_zero: Option<f64>,
}

fn validate(config: &CommandConfig) -> Result<bool, CliError> {
    let result = build_spec(config);
    let rejection = match &result {
        Ok(_) => None,
        Err(CliError::Inadmissible(r)) => Some(*r),
        Err(_) => return result.map(|_| true),
    };
    let report = ValidateReport {
        schema_version: SCHEMA_VERSION,
        spec: SpecInfo::from_config(config),
        admissible: rejection.is_none(),
        reason: rejection.map(|r| r.reason.code()),
        xi_zero: rejection.and_then(|r| r.xi_zero),
    };
    emit(config, |out| match config.format {
        Format::Json => write_json(&report, out),
        Format::Csv => {
            writeln!(out, "{}", report.reason.unwrap_or("admissible"))?;
            Ok(())
        }
    })?;
    result.map(|_| true)
}

fn tabulate(config: &CommandConfig, quantity: Quantity, level: Level) -> Result<(), CliError> {
    let spec = build_spec(config)?;
    let grid = config.grid(Grid::default_for(&spec))?;
    let info = SpecInfo::from_config(config);
    let table = match quantity {
        Quantity::Potential => {
            let mut t = Table::new(info, vec!["x", "V"]);
            for x in grid.points() {
                t.rows.push(vec![
                    Cell::Num(x),
                    Cell::Num(finite(potential(&spec, x), x)?),
                ]);
            }
            t
        }
        Quantity::Wavefunction => {
            let state = eigenstate(&spec, level)?;
            let norm = normalization(&spec, &state, NORMALIZATION_TOL)?;
            let mut t = Table::new(info, vec!["x", "phi"]);
            for x in grid.points() {
                let v = norm * wavefunction_raw(&spec, &state, x);
                t.rows.push(vec![Cell::Num(x), Cell::Num(finite(v, x)?)]);
            }
            t
        }
    };
    emit(config, |out| table.write(config.format, out))
}

fn finite(v: f64, x: f64) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Usage(format!(
            "value is not finite at x = {x}; narrow the grid"
        )))
    }
}

fn spectrum(config: &CommandConfig) -> Result<(), CliError> {
    let spec = build_spec(config)?;
    let levels = bound_levels(&spec, config.nmax)?;
    let morse = spec.family() == ModelFamily::MorseRational;
    let mut columns = vec!["level", "energy"];
    if morse {
        columns.extend(["cutoff", "threshold"]);
    }
    let mut table = Table::new(SpecInfo::from_config(config), columns);
    for level in levels {
        let mut row = vec![
            Cell::Text(level.to_string()),
            Cell::Num(energy(&spec, level)?),
        ];
        if let (Some(c), Some(t)) = (spec.bound_cutoff(), spec.threshold()) {
            row.extend([Cell::Num(c), Cell::Num(t)]);
        }
        table.rows.push(row);
    }
    emit(config, |out| table.write(config.format, out))
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub metric: f64,
    pub tolerance: f64,
    pub details: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub spec: SpecInfo,
    pub checks: Vec<Check>,
    pub pass: bool,
}

fn errored(name: &'static str, tolerance: f64, e: impl fmt::Display) -> Check {
    Check {
        name,
        pass: false,
        metric: f64::NAN,
        tolerance,
        details: json!({ "error": e.to_string() }),
    }
}

fn grid_json(g: &Grid) -> Value {
    json!({ "xmin": g.xmin(), "xmax": g.xmax(), "n_points": g.n_points() })
}

fn level_names(levels: &[Level]) -> Vec<String> {
    levels.iter().map(Level::to_string).collect()
}

fn spectrum_check(spec: &ModelSpec, grid: &Grid, nmax: Option<u32>, tol: f64) -> Check {
    match compare_spectrum(spec, grid, nmax, tol) {
        Ok(rep) => Check {
            name: "spectrum",
            pass: rep.pass,
            metric: rep.max_error,
            tolerance: tol,
            details: json!({
                "levels": level_names(&rep.levels),
                "analytic": rep.analytic,
                "numeric": rep.numeric,
                "abs_error": rep.abs_error,
                "grid": grid_json(grid),
                "cutoff": rep.cutoff,
                "failure": rep.failure.map(|f| f.code()),
            }),
        },
        Err(e) => errored("spectrum", tol, e),
    }
}

fn gram_checks(spec: &ModelSpec, levels: &[Level]) -> Vec<Check> {
    let gx = match gram_matrix(spec, levels, GramSpace::X) {
        Ok(g) => g,
        Err(e) => {
            return vec![
                errored("gram", GRAM_TOL, &e),
                errored("gram-eta-measure", ETA_AGREEMENT_TOL, &e),
            ]
        }
    };
    let n = levels.len();
    let diag: Vec<f64> = (0..n).map(|i| gx.get(i, i)).collect();
    let offdiag = gx.max_offdiag();
    let gram = Check {
        name: "gram",
        pass: offdiag < GRAM_TOL && gx.diagonal_positive() && gx.is_symmetric(GRAM_TOL),
        metric: offdiag,
        tolerance: GRAM_TOL,
        details: json!({
            "space": GramSpace::X.name(),
            "levels": level_names(levels),
            "diagonal": diag,
        }),
    };
    let eta = match gram_matrix(spec, levels, GramSpace::EtaMeasure) {
        Ok(ge) => {
            let mut worst = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    let d = (gx.get(i, j) - ge.get(i, j)).abs() / (diag[i] * diag[j]).sqrt();
                    worst = worst.max(d);
                }
            }
            Check {
                name: "gram-eta-measure",
                pass: worst < ETA_AGREEMENT_TOL,
                metric: worst,
                tolerance: ETA_AGREEMENT_TOL,
                details: json!({ "space": GramSpace::EtaMeasure.name() }),
            }
        }
        Err(e) => errored("gram-eta-measure", ETA_AGREEMENT_TOL, e),
    };
    vec![gram, eta]
}

fn residual_check(spec: &ModelSpec, levels: &[Level], grid: &Grid) -> Check {
    let mut per_level = serde_json::Map::new();
    let mut worst = 0.0f64;
    for &level in levels {
        match eigenstate(spec, level) {
            Ok(state) => {
                let r = schrodinger_residual(spec, &state, grid);
                worst = worst.max(r);
                per_level.insert(level.to_string(), json!(r));
            }
            Err(e) => return errored("schrodinger-residual", RESIDUAL_TOL, e),
        }
    }
    Check {
        name: "schrodinger-residual",
        pass: worst < RESIDUAL_TOL,
        metric: worst,
        tolerance: RESIDUAL_TOL,
        details: json!({ "grid": grid_json(grid), "levels": per_level }),
    }
}

fn excited(levels: &[Level]) -> impl Iterator<Item = u32> + '_ {
    levels.iter().filter_map(|l| match l {
        Level::Excited(n) => Some(*n),
        Level::Ground => None,
    })
}

fn algebraic_check(spec: &ModelSpec, levels: &[Level]) -> Check {
    let compute = || -> Result<Value, CliError> {
        let mut parts = serde_json::Map::new();
        parts.insert("xi-ode".into(), json!(xi_ode_residual(spec)));
        let mut construction = 0.0f64;
        let mut closed = 0.0f64;
        let mut reduced = 0.0f64;
        for n in excited(levels) {
            let r = construction_residuals(spec, n)?;
            construction = construction.max(r.operator).max(r.assembly);
            match spec.family() {
                ModelFamily::MorseRational => {
                    let (a, b) = (p_polynomial(spec, n)?, p_polynomial_closed(spec, n)?);
                    closed = closed.max(relative_residual(&(&a - &b), &[&a, &b]));
                }
                ModelFamily::HarmonicRational => {
                    reduced = reduced.max(harmonic_reduced_residual(spec, n)?);
                }
            }
        }
        parts.insert("construction".into(), json!(construction));
        match spec.family() {
            ModelFamily::MorseRational => parts.insert("closed-form".into(), json!(closed)),
            ModelFamily::HarmonicRational => parts.insert("reduced-form".into(), json!(reduced)),
        };
        let a = spec.alpha().unwrap_or(-0.5);
        let mut identities = 0.0f64;
        for n in 1..=IDENTITY_MAX_N {
            let r = laguerre_identity_residuals(n, a).map_err(ModelError::from)?;
            identities = identities.max(r.max());
        }
        parts.insert("laguerre-identities".into(), json!(identities));
        Ok(Value::Object(parts))
    };
    match compute() {
        Ok(details) => {
            let metric = details
                .as_object()
                .map(|m| m.values().filter_map(Value::as_f64).fold(0.0, f64::max))
                .unwrap_or(f64::NAN);
            Check {
                name: "algebraic",
                pass: metric < ALGEBRAIC_TOL,
                metric,
                tolerance: ALGEBRAIC_TOL,
                details,
            }
        }
        Err(e) => errored("algebraic", ALGEBRAIC_TOL, e),
    }
}

fn degree_check(spec: &ModelSpec, levels: &[Level]) -> Check {
    let mut mismatches = Vec::new();
    for n in excited(levels) {
        match p_polynomial(spec, n) {
            Ok(p) if p.degree() == Some((spec.ell() + n + 1) as usize) => {}
            Ok(p) => mismatches.push(json!({ "n": n, "degree": p.degree() })),
            Err(e) => return errored("degree-law", 0.0, e),
        }
    }
    Check {
        name: "degree-law",
        pass: mismatches.is_empty(),
        metric: mismatches.len() as f64,
        tolerance: 0.0,
        details: json!({ "mismatches": mismatches }),
    }
}

/// Runs every check for one spec, concurrently, and orders them by name.
pub fn verification_report(config: &CommandConfig) -> Result<Report, CliError> {
    let spec = build_spec(config)?;
    let nmax = match (config.nmax, config.family) {
        (None, FamilyArg::Ho) => Some(DEFAULT_VERIFY_NMAX),
        (n, _) => n,
    };
    let levels = bound_levels(&spec, nmax)?;
    let grid = config.grid(Grid::default_for(&spec))?;
    let residual_grid = grid.refined();
    let (spec, levels) = (&spec, &levels[..]);
    let mut checks: Vec<Check> = thread::scope(|s| {
        let jobs = [
            s.spawn(move || vec![spectrum_check(spec, &grid, nmax, config.tol)]),
            s.spawn(move || gram_checks(spec, levels)),
            s.spawn(move || vec![residual_check(spec, levels, &residual_grid)]),
            s.spawn(move || vec![algebraic_check(spec, levels), degree_check(spec, levels)]),
        ];
        jobs.into_iter()
            .flat_map(|j| j.join().expect("verification job panicked"))
            .collect()
    });
    checks.sort_by(|a, b| a.name.cmp(b.name));
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        spec: SpecInfo::from_config(config),
        checks,
        pass,
    })
}

fn verify(config: &CommandConfig) -> Result<bool, CliError> {
    let report = verification_report(config)?;
    emit(config, |out| match config.format {
        Format::Json => write_json(&report, out),
        Format::Csv => {
            let mut t = Table::new(
                report.spec.clone(),
                vec!["name", "pass", "metric", "tolerance"],
            );
            for c in &report.checks {
                t.rows.push(vec![
                    Cell::Text(c.name.into()),
                    Cell::Text(c.pass.to_string()),
                    Cell::Num(c.metric),
                    Cell::Num(c.tolerance),
                ]);
            }
            t.write(Format::Csv, out)
        }
    })?;
    Ok(report.pass)
}
