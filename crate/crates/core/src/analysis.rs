//! Distance sweeps, asymptotic limits, threshold mixing angles and minima of
//! the oscillating curves.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::eur::{eur_closed, eur_general, EurResult};
use crate::flavorstate::{amplitudes_from_probabilities, bipartite_state};
use crate::naqc::{naqc_bound, naqc_closed, naqc_general_all, naqc_triple, Measure, NaqcTriple};
use crate::oscillation::{sin2_2theta, transition_probability, Model, OscParams, ProbabilityPair};
use crate::qmat::DensityMatrix;

/// Largest allowed closed-vs-general discrepancy on an audited row.
pub const AUDIT_TOL: f64 = 1e-9;
/// Default share of sweep rows recomputed through the matrix pipeline.
pub const DEFAULT_AUDIT_FRACTION: f64 = 0.01;
/// Differences at or below this count as no change for the anti-correlation check.
pub const SIGN_DEAD_BAND: f64 = 1e-12;
/// Stopping tolerance of the threshold bisection, in NAQC units.
pub const THRESHOLD_TOL: f64 = 1e-10;
/// Golden-section stopping width relative to the oscillation length.
pub const MINIMUM_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

impl std::str::FromStr for Spacing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(invalid("spacing", format!("unknown spacing `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub params: OscParams,
    pub l_min: f64,
    pub l_max: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub model: Model,
    /// Share of rows audited through the general path; 0 disables, 1 audits all.
    pub audit_fraction: f64,
}

impl SweepSpec {
    pub fn new(params: OscParams, l_min: f64, l_max: f64, points: usize) -> Self {
        Self {
            params,
            l_min,
            l_max,
            points,
            spacing: Spacing::Linear,
            model: Model::WavePacket,
            audit_fraction: DEFAULT_AUDIT_FRACTION,
        }
    }

    pub fn with_model(self, model: Model) -> Self {
        Self { model, ..self }
    }

    pub fn with_spacing(self, spacing: Spacing) -> Self {
        Self { spacing, ..self }
    }

    pub fn with_audit_fraction(self, audit_fraction: f64) -> Self {
        Self {
            audit_fraction,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSweep(msg));
        if !(self.l_min.is_finite() && self.l_max.is_finite()) {
            return bad("baseline bounds must be finite".into());
        }
        if self.l_min < 0.0 {
            return bad(format!("l_min = {} is negative", self.l_min));
        }
        if self.l_min >= self.l_max {
            return bad(format!(
                "l_min = {} is not below l_max = {}",
                self.l_min, self.l_max
            ));
        }
        if self.points < 2 {
            return bad(format!("points = {} (need at least 2)", self.points));
        }
        if self.spacing == Spacing::Log && self.l_min <= 0.0 {
            return bad("log spacing needs l_min > 0".into());
        }
        if !(0.0..=1.0).contains(&self.audit_fraction) {
            return bad(format!(
                "audit fraction {} is outside [0, 1]",
                self.audit_fraction
            ));
        }
        Ok(())
    }

    /// Baselines in increasing order. Both endpoints are hit exactly.
    pub fn grid(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let last = self.points - 1;
        let at = |i: usize| {
            if i == 0 {
                return self.l_min;
            }
            if i == last {
                return self.l_max;
            }
            let f = i as f64 / last as f64;
            match self.spacing {
                Spacing::Linear => self.l_min + (self.l_max - self.l_min) * f,
                Spacing::Log => (self.l_min.ln() + (self.l_max.ln() - self.l_min.ln()) * f).exp(),
            }
        };
        Ok((0..self.points).map(at).collect())
    }

    /// Every `audit_stride`-th row (from the first) is audited.
    pub fn audit_stride(&self) -> Option<usize> {
        (self.audit_fraction > 0.0).then(|| (1.0 / self.audit_fraction).ceil().max(1.0) as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub l: f64,
    pub probs: ProbabilityPair,
    pub eur: EurResult,
    pub naqc: NaqcTriple,
    pub model: Model,
    /// Closed-vs-general residual when this row was audited.
    pub audit_residual: Option<f64>,
}

/// The flavor state with a real, non-negative transition amplitude.
pub fn flavor_state(probs: &ProbabilityPair) -> Result<DensityMatrix> {
    bipartite_state(&amplitudes_from_probabilities(probs, 0.0)?)
}

/// Largest disagreement between the closed forms and the matrix pipeline over
/// `U`, `U_b` and the three NAQC values.
pub fn dual_path_residual(probs: &ProbabilityPair) -> Result<f64> {
    let rho = flavor_state(probs)?;
    let (ge, ce) = (eur_general(&rho)?, eur_closed(probs));
    let gn = naqc_general_all(&rho)?;
    let cn = Measure::ALL.map(|m| naqc_closed(probs, m));
    let pairs = [(ge.u, ce.u), (ge.u_bound, ce.u_bound)]
        .into_iter()
        .chain(gn.into_iter().zip(cn));
    Ok(pairs.map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
}

/// Closed-form row at one baseline.
pub fn evaluate(params: &OscParams, l: f64, model: Model) -> Result<SweepRow> {
    let probs = transition_probability(params, l, model)?;
    Ok(SweepRow {
        l,
        probs,
        eur: eur_closed(&probs),
        naqc: naqc_triple(&probs),
        model,
        audit_residual: None,
    })
}

pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let grid = spec.grid()?;
    let stride = spec.audit_stride();
    grid.par_iter()
        .enumerate()
        .map(|(i, &l)| {
            let mut row = evaluate(&spec.params, l, spec.model)?;
            if stride.is_some_and(|k| i % k == 0) {
                let residual = dual_path_residual(&row.probs)?;
                if residual > AUDIT_TOL {
                    return Err(Error::AuditMismatch { l, residual });
                }
                row.audit_residual = Some(residual);
            }
            Ok(row)
        })
        .collect()
}

/// Large-distance limit: the interference terms vanish and
/// `P_trans = sin²2θ / 2`.
pub fn asymptotic_probabilities(theta: f64) -> Result<ProbabilityPair> {
    ProbabilityPair::from_survival(1.0 - 0.5 * sin2_2theta(theta))
}

pub fn asymptotic_naqc(theta: f64, measure: Measure) -> Result<f64> {
    Ok(naqc_closed(&asymptotic_probabilities(theta)?, measure))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Threshold {
    pub measure: Measure,
    /// Radians in `[0, π/4]`.
    pub theta: f64,
    pub asymptotic_naqc: f64,
    pub bound: f64,
    /// Set when every `θ > 0` already exceeds the bound, so the threshold is 0.
    pub degenerate: bool,
}

/// Smallest mixing angle whose large-distance NAQC reaches the bound.
///
/// The asymptotic value increases monotonically on `[0, π/4]`, so bisection on
/// that branch finds the root. For `sk` the value at `θ = 0` already equals
/// the bound and the threshold is reported as degenerate.
pub fn threshold_angle(measure: Measure) -> Result<Threshold> {
    let bound = naqc_bound(measure);
    let f = |theta: f64| asymptotic_naqc(theta, measure).map(|n| n - bound);
    let (mut lo, mut hi) = (0.0, std::f64::consts::FRAC_PI_4);
    if f(lo)? >= -THRESHOLD_TOL {
        return Ok(Threshold {
            measure,
            theta: 0.0,
            asymptotic_naqc: asymptotic_naqc(0.0, measure)?,
            bound,
            degenerate: true,
        });
    }
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let v = f(mid)?;
        // Keep narrowing well past the tolerance; the loop ends when the
        // bracket collapses to adjacent floats.
        if v == 0.0 || mid <= lo || mid >= hi {
            break;
        }
        if v < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let asymptotic = asymptotic_naqc(mid, measure)?;
    if (asymptotic - bound).abs() > THRESHOLD_TOL {
        return Err(invalid(
            "threshold",
            format!("bisection stalled {:e} from the bound", asymptotic - bound),
        ));
    }
    Ok(Threshold {
        measure,
        theta: mid,
        asymptotic_naqc: asymptotic,
        bound,
        degenerate: false,
    })
}

/// Curve whose minima [`find_local_minima`] locates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    NRe,
    NL1,
    NSk,
    U,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::NRe => "n_re",
            Quantity::NL1 => "n_l1",
            Quantity::NSk => "n_sk",
            Quantity::U => "u",
        }
    }

    pub fn of(self, probs: &ProbabilityPair) -> f64 {
        match self {
            Quantity::NRe => naqc_closed(probs, Measure::Re),
            Quantity::NL1 => naqc_closed(probs, Measure::L1),
            Quantity::NSk => naqc_closed(probs, Measure::Sk),
            Quantity::U => eur_closed(probs).u,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Quantity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "n_re" => Ok(Quantity::NRe),
            "n_l1" => Ok(Quantity::NL1),
            "n_sk" => Ok(Quantity::NSk),
            "u" => Ok(Quantity::U),
            other => Err(invalid("quantity", format!("unknown quantity `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Minimum {
    pub l: f64,
    pub value: f64,
}

fn golden_section(f: impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, tol: f64) -> Result<f64> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    Ok(0.5 * (a + b))
}

/// Interior local minima of `quantity` along the sweep, refined on the
/// continuous curve.
pub fn find_local_minima(spec: &SweepSpec, quantity: Quantity) -> Result<Vec<Minimum>> {
    let grid = spec.grid()?;
    let value = |l: f64| -> Result<f64> {
        Ok(quantity.of(&transition_probability(&spec.params, l, spec.model)?))
    };
    let sampled: Vec<f64> = grid.iter().map(|&l| value(l)).collect::<Result<_>>()?;
    let tol = spec.params.oscillation_length() * MINIMUM_REL_TOL;
    let mut out = Vec::new();
    for i in 1..grid.len() - 1 {
        let (prev, here, next) = (sampled[i - 1], sampled[i], sampled[i + 1]);
        // A flat stretch counts once, at its left edge.
        if here < prev && here <= next && here < next.max(prev) {
            let l = golden_section(value, grid[i - 1], grid[i + 1], tol)?;
            let v = value(l)?;
            // The refined point can only improve on the sample.
            let (l, v) = if v <= here { (l, v) } else { (grid[i], here) };
            out.push(Minimum { l, value: v });
        }
    }
    if out.is_empty() {
        return Err(Error::NoInteriorMinimum);
    }
    Ok(out)
}

/// Residuals of `U = 2U_b = 2(3 - N_re)` from the matrix pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityReport {
    pub u: f64,
    pub u_bound: f64,
    pub n_re: f64,
    /// `|U - 2 U_b|`.
    pub eur_residual: f64,
    /// `|U - 2(3 - N_re)|`.
    pub naqc_residual: f64,
}

impl IdentityReport {
    pub fn max_residual(&self) -> f64 {
        self.eur_residual.max(self.naqc_residual)
    }
}

pub fn check_identity(probs: &ProbabilityPair) -> Result<IdentityReport> {
    let rho = flavor_state(probs)?;
    let eur = eur_general(&rho)?;
    let n_re = naqc_general_all(&rho)?[1];
    Ok(IdentityReport {
        u: eur.u,
        u_bound: eur.u_bound,
        n_re,
        eur_residual: (eur.u - 2.0 * eur.u_bound).abs(),
        naqc_residual: (eur.u - 2.0 * (3.0 - n_re)).abs(),
    })
}

fn dead_band_sign(x: f64) -> i8 {
    if x.abs() <= SIGN_DEAD_BAND {
        0
    } else if x > 0.0 {
        1
    } else {
        -1
    }
}

/// First index `i` where `U` and `N_re` move the same way between rows `i`
/// and `i + 1`, or where one moves by more than `1e-9` while the other sits
/// in the dead band.
pub fn anticorrelation_violation(rows: &[SweepRow]) -> Option<usize> {
    rows.windows(2).position(|w| {
        let du = w[1].eur.u - w[0].eur.u;
        let dn = w[1].naqc.n_re - w[0].naqc.n_re;
        let (su, sn) = (dead_band_sign(du), dead_band_sign(dn));
        match (su, sn) {
            (0, 0) => false,
            (0, _) => dn.abs() > 1e-9,
            (_, 0) => du.abs() > 1e-9,
            _ => su == sn,
        }
    })
}
