//! Command-line front end.
//!
//! Exit codes: 0 success, 1 property violation, 2 usage or config error,
//! 3 I/O failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::analysis::{
    anticorrelation_violation, check_identity, dual_path_residual, find_local_minima, sweep,
    threshold_angle, Quantity, Spacing, SweepRow, SweepSpec, AUDIT_TOL, DEFAULT_AUDIT_FRACTION,
};
use crate::naqc::{naqc_bound, Measure};
use crate::oscillation::{
    preset, presets, scenario, scenarios, sin2_2theta, ExperimentPreset, Model, OscParams,
    ParamsConfig, ProbabilityPair, TangentReading,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// CSV header, in column order.
pub const CSV_COLUMNS: [&str; 12] = [
    "L_m", "P_surv", "P_trans", "U", "U_bound", "N_l1", "N_re", "N_sk", "att_l1", "att_re",
    "att_sk", "model",
];

const DEFAULT_POINTS: usize = 1001;
const IDENTITY_TOL: f64 = 1e-9;
const UNITARITY_TOL: f64 = 1e-12;
const HIERARCHY_TOL: f64 = 1e-12;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Violation(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => EXIT_VIOLATION,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Violation(m) | CliError::Io(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn io_err(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "nunaqc",
    version,
    about = "Entropic uncertainty and NAQC along neutrino oscillations"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the experiment presets and stored scenarios.
    Presets {
        #[arg(long, value_enum, default_value_t = Format::Csv, hide_default_value = true)]
        format: Format,
    },
    /// Evaluate a distance sweep and write one row per baseline.
    Sweep(RunArgs),
    /// Check the identities, hierarchy and unitarity along sweeps.
    Check {
        #[command(flatten)]
        run: RunArgs,
        /// Perturbs the probabilities of the given row before checking.
        #[arg(long, hide = true)]
        corrupt_row: Option<usize>,
    },
    /// Mixing angle above which the large-distance NAQC reaches its bound.
    Threshold {
        /// l1, re or sk; all three when omitted.
        #[arg(long)]
        measure: Option<Measure>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Local minima of a quantity along a sweep.
    Minima {
        #[command(flatten)]
        run: RunArgs,
        /// n_re, n_l1, n_sk or u.
        #[arg(long, default_value = "n_re")]
        quantity: Quantity,
    },
}

#[derive(Debug, Args, Default)]
struct RunArgs {
    /// JSON config file; command-line flags take precedence.
    #[arg(long, env = "NUNAQC_CONFIG")]
    config: Option<PathBuf>,
    /// Preset or scenario name (dayabay, kamland, minos, theta20).
    #[arg(long)]
    experiment: Option<String>,
    #[arg(long, group = "angle")]
    theta_rad: Option<f64>,
    #[arg(long = "sin2-2theta", group = "angle")]
    sin2_2theta: Option<f64>,
    #[arg(long = "tan2-theta", group = "angle")]
    tan2_theta: Option<f64>,
    /// How a tan² value is read: theta or two_theta.
    #[arg(long)]
    tan_reading: Option<TangentReading>,
    #[arg(long = "dm2-ev2")]
    dm2_ev2: Option<f64>,
    #[arg(long)]
    energy_mev: Option<f64>,
    #[arg(long)]
    sigma_x_m: Option<f64>,
    #[arg(long)]
    xi: Option<f64>,
    #[arg(long)]
    lmin_m: Option<f64>,
    #[arg(long)]
    lmax_m: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// linear or log.
    #[arg(long)]
    spacing: Option<Spacing>,
    /// wavepacket or planewave.
    #[arg(long)]
    model: Option<Model>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Share of rows recomputed through the matrix pipeline.
    #[arg(long)]
    audit_fraction: Option<f64>,
    /// Audit every row.
    #[arg(long)]
    full_audit: bool,
}

/// Contents of a JSON config file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub experiment: Option<String>,
    #[serde(flatten)]
    pub params: ParamsConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spacing: Option<Spacing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<Model>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit_fraction: Option<f64>,
}

impl RunConfig {
    /// Fields set in `other` win.
    pub fn overlay(&self, other: &RunConfig) -> RunConfig {
        RunConfig {
            experiment: other.experiment.clone().or_else(|| self.experiment.clone()),
            params: self.params.overlay(&other.params),
            points: other.points.or(self.points),
            spacing: other.spacing.or(self.spacing),
            model: other.model.or(self.model),
            out: other.out.clone().or_else(|| self.out.clone()),
            format: other.format.or(self.format),
            audit_fraction: other.audit_fraction.or(self.audit_fraction),
        }
    }

    fn is_empty(&self) -> bool {
        *self == RunConfig::default()
    }

    pub fn load(path: &Path) -> CliResult<RunConfig> {
        let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

impl RunArgs {
    fn to_config(&self) -> RunConfig {
        RunConfig {
            experiment: self.experiment.clone(),
            params: ParamsConfig {
                theta_rad: self.theta_rad,
                sin2_2theta: self.sin2_2theta,
                tan2_theta: self.tan2_theta,
                tan_reading: self.tan_reading,
                dm2_ev2: self.dm2_ev2,
                energy_mev: self.energy_mev,
                sigma_x_m: self.sigma_x_m,
                xi: self.xi,
                lmin_m: self.lmin_m,
                lmax_m: self.lmax_m,
                ..Default::default()
            },
            points: self.points,
            spacing: self.spacing,
            model: self.model,
            out: self.out.clone(),
            format: self.format,
            audit_fraction: if self.full_audit {
                Some(1.0)
            } else {
                self.audit_fraction
            },
        }
    }

    fn merged(&self) -> CliResult<RunConfig> {
        let file = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        Ok(file.overlay(&self.to_config()))
    }
}

fn find_experiment(name: &str) -> CliResult<ExperimentPreset> {
    preset(name).or_else(|_| scenario(name)).map_err(usage)
}

/// A fully specified sweep plus a label for reports.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub label: String,
    pub spec: SweepSpec,
}

/// Turns a merged config into a sweep. An experiment supplies the mixing
/// parameters; combining it with an explicit angle or `dm2` is an error.
pub fn resolve(config: &RunConfig) -> CliResult<Resolved> {
    let (label, params) = match &config.experiment {
        Some(name) => {
            if config.params.has_angle() || config.params.dm2_ev2.is_some() {
                return Err(usage(
                    "give either an experiment or explicit mixing parameters, not both",
                ));
            }
            let base = find_experiment(name)?;
            (base.name.clone(), base.config.overlay(&config.params))
        }
        None => ("custom".to_string(), config.params.clone()),
    };
    let osc = params.to_params().map_err(usage)?;
    let l_max = params
        .lmax_m
        .ok_or_else(|| usage("lmax_m is required without an experiment"))?;
    let spec = SweepSpec {
        params: osc,
        l_min: params.lmin_m.unwrap_or(0.0),
        l_max,
        points: config.points.unwrap_or(DEFAULT_POINTS),
        spacing: config.spacing.unwrap_or_default(),
        model: config.model.unwrap_or_default(),
        audit_fraction: config.audit_fraction.unwrap_or(DEFAULT_AUDIT_FRACTION),
    };
    spec.validate().map_err(usage)?;
    Ok(Resolved { label, spec })
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Header plus one line per row, LF-terminated, 17 significant digits.
pub fn write_csv(rows: &[SweepRow], w: &mut impl Write) -> io::Result<()> {
    let mut out = String::with_capacity(256 * (rows.len() + 1));
    out.push_str(&CSV_COLUMNS.join(","));
    out.push('\n');
    for r in rows {
        let floats = [
            r.l,
            r.probs.survival(),
            r.probs.transition(),
            r.eur.u,
            r.eur.u_bound,
            r.naqc.n_l1,
            r.naqc.n_re,
            r.naqc.n_sk,
        ];
        for x in floats {
            out.push_str(&fmt_f64(x));
            out.push(',');
        }
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.naqc.attained_l1, r.naqc.attained_re, r.naqc.attained_sk, r.model
        );
    }
    w.write_all(out.as_bytes())
}

fn rows_json(rows: &[SweepRow]) -> serde_json::Value {
    let rows: Vec<_> = rows
        .iter()
        .map(|r| {
            json!({
                "L_m": r.l,
                "P_surv": r.probs.survival(),
                "P_trans": r.probs.transition(),
                "U": r.eur.u,
                "U_bound": r.eur.u_bound,
                "N_l1": r.naqc.n_l1,
                "N_re": r.naqc.n_re,
                "N_sk": r.naqc.n_sk,
                "att_l1": r.naqc.attained_l1,
                "att_re": r.naqc.attained_re,
                "att_sk": r.naqc.attained_sk,
                "model": r.model,
            })
        })
        .collect();
    serde_json::Value::Array(rows)
}

fn params_json(p: &OscParams) -> serde_json::Value {
    json!({
        "theta_rad": p.theta(),
        "dm2_ev2": p.dm2(),
        "energy_mev": p.energy(),
        "sigma_x_m": p.sigma_x(),
        "xi": p.xi(),
        "oscillation_length_m": p.oscillation_length(),
        "coherence_length_m": p.coherence_length(),
    })
}

fn bounds_json() -> serde_json::Value {
    json!({
        "l1": naqc_bound(Measure::L1),
        "re": naqc_bound(Measure::Re),
        "sk": naqc_bound(Measure::Sk),
    })
}

/// Writes to `path`, or to `stdout` when no path is given.
fn emit(path: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| io_err(p, e)),
        None => stdout
            .write_all(bytes)
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn cmd_presets(format: Format, stdout: &mut dyn Write) -> CliResult<()> {
    let all: Vec<(&str, ExperimentPreset)> = presets()
        .into_iter()
        .map(|p| ("preset", p))
        .chain(scenarios().into_iter().map(|s| ("scenario", s)))
        .collect();
    let text = match format {
        Format::Json => {
            let entries: Vec<_> = all
                .iter()
                .map(|(kind, p)| {
                    let params = p.params().expect("presets are valid");
                    json!({
                        "kind": kind,
                        "name": p.name,
                        "config": p.config,
                        "theta_rad": p.theta(),
                        "sin2_2theta": sin2_2theta(p.theta()),
                        "oscillation_length_m": params.oscillation_length(),
                        "coherence_length_m": params.coherence_length(),
                    })
                })
                .collect();
            let doc = json!({
                "presets": entries,
                "bounds": bounds_json(),
                "csv_columns": CSV_COLUMNS,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut t = String::new();
            let _ = writeln!(
                t,
                "{:<9} {:<16} {:>7} {:>10} {:>9} {:>8} {:>9} {:>4} {:>9} {:>11} {:>11}",
                "name",
                "quoted",
                "value",
                "theta_rad",
                "dm2_eV2",
                "E_MeV",
                "sigma_m",
                "xi",
                "Lmax_m",
                "Losc_m",
                "Lcoh_m"
            );
            for (_, p) in &all {
                let params = p.params().expect("presets are valid");
                let (what, value) = p.quoted_angle();
                let (_, lmax) = p.baseline_range();
                let _ = writeln!(
                    t,
                    "{:<9} {:<16} {:>7} {:>10.6} {:>9.3e} {:>8} {:>9.2e} {:>4} {:>9.2e} {:>11.4e} {:>11.4e}",
                    p.name,
                    what,
                    if value.to_string().len() <= 7 { value.to_string() } else { format!("{value:.5}") },
                    p.theta(),
                    p.dm2(),
                    params.energy(),
                    params.sigma_x(),
                    params.xi(),
                    lmax,
                    params.oscillation_length(),
                    params.coherence_length(),
                );
            }
            t.push('\n');
            for (_, p) in &all {
                if p.config.tan2_theta.is_some() {
                    let alt = p.with_tangent_reading(TangentReading::TwoTheta);
                    let _ = writeln!(
                        t,
                        "{}: AMBIGUOUS tan^2 parameterization: read as tan^2(theta) -> theta = {:.6} rad; \
                         --tan-reading two_theta reads tan^2(2 theta) -> theta = {:.6} rad",
                        p.name,
                        p.theta(),
                        alt.theta()
                    );
                }
                let _ = writeln!(
                    t,
                    "{}: {}; {}",
                    p.name,
                    p.channel,
                    p.config.note.as_deref().unwrap_or("")
                );
            }
            t
        }
    };
    emit(None, text.as_bytes(), stdout)
}

fn cmd_sweep(args: &RunArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let config = args.merged()?;
    let resolved = resolve(&config)?;
    let rows = sweep(&resolved.spec).map_err(|e| match e {
        crate::Error::AuditMismatch { .. } => CliError::Violation(e.to_string()),
        other => usage(other),
    })?;
    let bytes = match config.format.unwrap_or_default() {
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).map_err(|e| CliError::Io(e.to_string()))?;
            buf
        }
        Format::Json => {
            let doc = json!({
                "experiment": resolved.label,
                "model": resolved.spec.model,
                "params": params_json(&resolved.spec.params),
                "bounds": bounds_json(),
                "rows": rows_json(&rows),
            });
            (serde_json::to_string_pretty(&doc).expect("serializable") + "\n").into_bytes()
        }
    };
    emit(config.out.as_deref(), &bytes, stdout)
}

/// Maximum residuals over one checked sweep.
#[derive(Debug, Default, Clone, Serialize)]
pub struct CheckReport {
    pub label: String,
    pub model: String,
    pub rows: usize,
    pub unitarity: f64,
    pub eur_identity: f64,
    pub naqc_identity: f64,
    pub dual_path: f64,
    pub hierarchy_violations: usize,
    pub anticorrelation_violation: Option<usize>,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_rows(label: &str, model: Model, rows: &[SweepRow]) -> CheckReport {
    let mut rep = CheckReport {
        label: label.to_string(),
        model: model.to_string(),
        rows: rows.len(),
        ..Default::default()
    };
    for (i, r) in rows.iter().enumerate() {
        let (p, q) = (r.probs.survival(), r.probs.transition());
        let unitarity = (p + q - 1.0).abs();
        rep.unitarity = rep.unitarity.max(unitarity);
        if unitarity > UNITARITY_TOL || !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) {
            rep.violations
                .push(format!("row {i}: P_surv + P_trans - 1 = {:e}", p + q - 1.0));
            continue;
        }
        match check_identity(&r.probs).and_then(|id| Ok((id, dual_path_residual(&r.probs)?))) {
            Ok((id, dual)) => {
                rep.eur_identity = rep.eur_identity.max(id.eur_residual);
                rep.naqc_identity = rep.naqc_identity.max(id.naqc_residual);
                rep.dual_path = rep.dual_path.max(dual);
                if id.max_residual() > IDENTITY_TOL {
                    rep.violations.push(format!(
                        "row {i}: identity residual {:e}",
                        id.max_residual()
                    ));
                }
                if dual > AUDIT_TOL {
                    rep.violations
                        .push(format!("row {i}: dual-path residual {dual:e}"));
                }
            }
            Err(e) => rep.violations.push(format!("row {i}: {e}")),
        }
        if r.naqc.n_l1 < r.naqc.n_re - HIERARCHY_TOL || r.naqc.n_l1 < r.naqc.n_sk - HIERARCHY_TOL {
            rep.hierarchy_violations += 1;
            rep.violations
                .push(format!("row {i}: N_l1 below N_re or N_sk"));
        }
    }
    rep.anticorrelation_violation = anticorrelation_violation(rows);
    if let Some(i) = rep.anticorrelation_violation {
        rep.violations
            .push(format!("rows {i}-{}: U and N_re move the same way", i + 1));
    }
    rep
}

fn corrupt(rows: &mut [SweepRow], index: usize) -> CliResult<()> {
    let row = rows
        .get_mut(index)
        .ok_or_else(|| usage(format!("corrupt row {index} is out of range")))?;
    let p = row.probs.survival();
    let shifted = if p > 0.5 { p - 1e-3 } else { p + 1e-3 };
    row.probs = ProbabilityPair::new_unchecked(shifted, row.probs.transition());
    Ok(())
}

fn cmd_check(args: &RunArgs, corrupt_row: Option<usize>, stdout: &mut dyn Write) -> CliResult<()> {
    let config = args.merged()?;
    let targets: Vec<RunConfig> = if config.experiment.is_none() && !config.params.has_angle() && {
        let mut bare = config.clone();
        bare.model = None;
        bare.points = None;
        bare.format = None;
        bare.out = None;
        bare.audit_fraction = None;
        bare.is_empty()
    } {
        presets()
            .into_iter()
            .map(|p| RunConfig {
                experiment: Some(p.name),
                ..config.clone()
            })
            .collect()
    } else {
        vec![config.clone()]
    };
    let models = match config.model {
        Some(m) => vec![m],
        None => vec![Model::WavePacket, Model::PlaneWave],
    };

    let mut reports = Vec::new();
    for target in &targets {
        for &model in &models {
            let resolved = resolve(&RunConfig {
                model: Some(model),
                audit_fraction: Some(0.0),
                ..target.clone()
            })?;
            let mut rows = sweep(&resolved.spec).map_err(usage)?;
            if let Some(i) = corrupt_row {
                corrupt(&mut rows, i)?;
            }
            reports.push(check_rows(&resolved.label, model, &rows));
        }
    }

    let mut text = String::new();
    match config.format.unwrap_or_default() {
        Format::Json => {
            text = serde_json::to_string_pretty(&reports).expect("serializable") + "\n";
        }
        Format::Csv => {
            for r in &reports {
                let _ = writeln!(
                    text,
                    "{} {} rows={} max|P+Q-1|={:.3e} max|U-2U_b|={:.3e} max|U-2(3-N_re)|={:.3e} \
                     max dual-path={:.3e} hierarchy violations={} anticorrelation={} -> {}",
                    r.label,
                    r.model,
                    r.rows,
                    r.unitarity,
                    r.eur_identity,
                    r.naqc_identity,
                    r.dual_path,
                    r.hierarchy_violations,
                    r.anticorrelation_violation
                        .map_or("ok".to_string(), |i| format!("row {i}")),
                    if r.passed() { "PASS" } else { "FAIL" }
                );
                for v in r.violations.iter().take(5) {
                    let _ = writeln!(text, "  {v}");
                }
            }
        }
    }
    emit(config.out.as_deref(), text.as_bytes(), stdout)?;
    if reports.iter().all(CheckReport::passed) {
        Ok(())
    } else {
        Err(CliError::Violation("check failed".into()))
    }
}

fn cmd_threshold(
    measure: Option<Measure>,
    format: Option<Format>,
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let measures = measure.map_or(Measure::ALL.to_vec(), |m| vec![m]);
    let results = measures
        .iter()
        .map(|&m| threshold_angle(m).map_err(|e| CliError::Violation(e.to_string())))
        .collect::<CliResult<Vec<_>>>()?;
    let mut text = String::new();
    match format.unwrap_or_default() {
        Format::Json => text = serde_json::to_string_pretty(&results).expect("serializable") + "\n",
        Format::Csv => {
            for t in &results {
                if t.degenerate {
                    let _ = writeln!(
                        text,
                        "{}: degenerate threshold 0 rad (0 deg); any theta > 0 exceeds the bound {}",
                        t.measure, t.bound
                    );
                } else {
                    let _ = writeln!(
                        text,
                        "{}: theta = {:.12} rad = {:.9} deg, asymptotic N = {:.12}, bound = {:.12}",
                        t.measure,
                        t.theta,
                        t.theta.to_degrees(),
                        t.asymptotic_naqc,
                        t.bound
                    );
                }
            }
        }
    }
    emit(None, text.as_bytes(), stdout)
}

fn cmd_minima(args: &RunArgs, quantity: Quantity, stdout: &mut dyn Write) -> CliResult<()> {
    let config = args.merged()?;
    let resolved = resolve(&config)?;
    let losc = resolved.spec.params.oscillation_length();
    let minima = find_local_minima(&resolved.spec, quantity).map_err(|e| match e {
        crate::Error::NoInteriorMinimum => CliError::Violation(e.to_string()),
        other => usage(other),
    })?;
    let mut text = String::new();
    match config.format.unwrap_or_default() {
        Format::Json => {
            let doc = json!({
                "experiment": resolved.label,
                "quantity": quantity,
                "model": resolved.spec.model,
                "oscillation_length_m": losc,
                "minima": minima,
            });
            text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
        }
        Format::Csv => {
            text.push_str("L_m,L_over_Losc,value\n");
            for m in &minima {
                let _ = writeln!(
                    text,
                    "{},{},{}",
                    fmt_f64(m.l),
                    fmt_f64(m.l / losc),
                    fmt_f64(m.value)
                );
            }
        }
    }
    emit(config.out.as_deref(), text.as_bytes(), stdout)
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Presets { format } => cmd_presets(*format, stdout),
        Command::Sweep(args) => cmd_sweep(args, stdout),
        Command::Check { run, corrupt_row } => cmd_check(run, *corrupt_row, stdout),
        Command::Threshold { measure, format } => cmd_threshold(*measure, *format, stdout),
        Command::Minima { run, quantity } => cmd_minima(run, *quantity, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}
