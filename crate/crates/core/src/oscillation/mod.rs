//! Two-flavor oscillation probabilities in the plane-wave and Gaussian
//! wave-packet pictures.
//!
//! Public inputs use laboratory units (MeV, eV², meters). The phase and
//! damping exponents are evaluated in natural units after a single conversion
//! through `ħc`.

mod presets;

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::qmat::{ComplexMatrix, DensityMatrix};

pub use presets::{
    preset, presets, scenario, scenarios, ExperimentPreset, ParamsConfig, TangentReading,
};

/// `ħc` in MeV·fm.
pub const HBAR_C_MEV_FM: f64 = 197.3269804;
/// `ħc` in eV·m.
pub const HBAR_C_EV_M: f64 = HBAR_C_MEV_FM * 1e-9;

const UNITARITY_TOL: f64 = 1e-12;

/// Propagation model for the mass eigenstates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    #[default]
    WavePacket,
    PlaneWave,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::WavePacket => "wavepacket",
            Model::PlaneWave => "planewave",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "wavepacket" => Ok(Model::WavePacket),
            "planewave" => Ok(Model::PlaneWave),
            other => Err(invalid("model", format!("unknown model `{other}`"))),
        }
    }
}

/// The ways a mixing angle is quoted in the literature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngleSpec {
    Theta(f64),
    Sin2TwoTheta(f64),
    Tan2Theta(f64),
    Tan2TwoTheta(f64),
}

impl AngleSpec {
    pub fn theta(self) -> Result<f64> {
        match self {
            AngleSpec::Theta(t) => Ok(t),
            AngleSpec::Sin2TwoTheta(x) => theta_from_sin2_2theta(x),
            AngleSpec::Tan2Theta(x) => theta_from_tan2_theta(x),
            AngleSpec::Tan2TwoTheta(x) => theta_from_tan2_2theta(x),
        }
    }
}

/// Inverts `sin²2θ`, returning the branch `θ ∈ [0, π/4]`.
pub fn theta_from_sin2_2theta(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(invalid("sin2_2theta", format!("{x} is outside [0, 1]")));
    }
    Ok(0.5 * x.sqrt().asin())
}

/// Inverts `tan²θ`, returning `θ ∈ [0, π/2)`.
pub fn theta_from_tan2_theta(x: f64) -> Result<f64> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(invalid(
            "tan2_theta",
            format!("{x} must be finite and >= 0"),
        ));
    }
    Ok(x.sqrt().atan())
}

/// Inverts `tan²2θ`, returning `θ ∈ [0, π/4)`.
pub fn theta_from_tan2_2theta(x: f64) -> Result<f64> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(invalid(
            "tan2_2theta",
            format!("{x} must be finite and >= 0"),
        ));
    }
    Ok(0.5 * x.sqrt().atan())
}

pub fn sin2_2theta(theta: f64) -> f64 {
    let s = (2.0 * theta).sin();
    s * s
}

/// Physics inputs for one oscillation channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscParams {
    theta: f64,
    dm2: f64,
    energy: f64,
    sigma_x: f64,
    xi: f64,
}

impl OscParams {
    /// `theta` in radians, `dm2` in eV², `energy` in MeV, `sigma_x` in meters.
    pub fn new(theta: f64, dm2: f64, energy: f64, sigma_x: f64, xi: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return Err(invalid("theta", format!("{theta} is outside [0, pi/2]")));
        }
        if !(dm2 > 0.0 && dm2.is_finite()) {
            return Err(invalid("dm2", format!("{dm2} must be positive")));
        }
        if !(energy > 0.0 && energy.is_finite()) {
            return Err(invalid("energy", format!("{energy} must be positive")));
        }
        if !(sigma_x >= 0.0 && sigma_x.is_finite()) {
            return Err(invalid("sigma_x", format!("{sigma_x} must be >= 0")));
        }
        if !xi.is_finite() {
            return Err(invalid("xi", "must be finite"));
        }
        Ok(Self {
            theta,
            dm2,
            energy,
            sigma_x,
            xi,
        })
    }

    /// Combines separate production and detection widths:
    /// `σ_x² = σ_P² + σ_D²` and `ξ² σ_x² = ξ_P² σ_P² + ξ_D² σ_D²`.
    ///
    /// With both widths zero the localization term vanishes and `ξ` is set to 0.
    pub fn from_split_widths(
        theta: f64,
        dm2: f64,
        energy: f64,
        production: Localization,
        detection: Localization,
    ) -> Result<Self> {
        let (sp, sd) = (production.sigma_x, detection.sigma_x);
        if !(sp >= 0.0 && sd >= 0.0) {
            return Err(invalid("sigma_x", "widths must be >= 0"));
        }
        let sigma_x = sp.hypot(sd);
        let xi = if sigma_x > 0.0 {
            (production.xi * sp).hypot(detection.xi * sd) / sigma_x
        } else {
            0.0
        };
        Self::new(theta, dm2, energy, sigma_x, xi)
    }

    pub fn with_theta(self, theta: f64) -> Result<Self> {
        Self::new(theta, self.dm2, self.energy, self.sigma_x, self.xi)
    }

    pub fn with_xi(self, xi: f64) -> Result<Self> {
        Self::new(self.theta, self.dm2, self.energy, self.sigma_x, xi)
    }

    pub fn with_sigma_x(self, sigma_x: f64) -> Result<Self> {
        Self::new(self.theta, self.dm2, self.energy, sigma_x, self.xi)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn dm2(&self) -> f64 {
        self.dm2
    }
    pub fn energy(&self) -> f64 {
        self.energy
    }
    pub fn sigma_x(&self) -> f64 {
        self.sigma_x
    }
    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn oscillation_length(&self) -> f64 {
        osc_length_signed(self.energy, self.dm2)
    }

    pub fn coherence_length(&self) -> f64 {
        coh_length(self.energy, self.dm2, self.sigma_x)
    }
}

/// Width and localization parameter of a production or detection process.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Localization {
    pub sigma_x: f64,
    pub xi: f64,
}

/// Survival and transition probabilities at one baseline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityPair {
    survival: f64,
    transition: f64,
}

impl ProbabilityPair {
    pub fn new(survival: f64, transition: f64) -> Result<Self> {
        let bad = || Error::InvalidProbabilities {
            survival,
            transition,
        };
        let in_range = |p: f64| (-UNITARITY_TOL..=1.0 + UNITARITY_TOL).contains(&p);
        if !in_range(survival) || !in_range(transition) {
            return Err(bad());
        }
        if (survival + transition - 1.0).abs() > UNITARITY_TOL {
            return Err(bad());
        }
        Ok(Self {
            survival: survival.clamp(0.0, 1.0),
            transition: transition.clamp(0.0, 1.0),
        })
    }

    pub fn from_survival(survival: f64) -> Result<Self> {
        Self::new(survival, 1.0 - survival)
    }

    /// Skips validation. Only for negative-control checks that need a
    /// deliberately broken pair.
    #[doc(hidden)]
    pub fn new_unchecked(survival: f64, transition: f64) -> Self {
        Self {
            survival,
            transition,
        }
    }

    pub fn survival(&self) -> f64 {
        self.survival
    }

    pub fn transition(&self) -> f64 {
        self.transition
    }
}

/// Rows are flavors (α, β), columns are mass states (1, 2).
pub fn mixing_matrix(theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    [[c, s], [-s, c]]
}

fn osc_length_signed(energy_mev: f64, dm2: f64) -> f64 {
    4.0 * PI * energy_mev * 1e6 * HBAR_C_EV_M / dm2
}

fn coh_length(energy_mev: f64, dm2: f64, sigma_x: f64) -> f64 {
    let e_ev = energy_mev * 1e6;
    // The ħc converting σ_x to eV⁻¹ cancels the one converting the result back to meters.
    4.0 * SQRT_2 * e_ev * e_ev * sigma_x / dm2.abs()
}

/// `L_osc = 4πE/Δm²` in meters.
pub fn oscillation_length(energy_mev: f64, dm2: f64) -> Result<f64> {
    check_positive("energy", energy_mev)?;
    check_positive("dm2", dm2)?;
    Ok(osc_length_signed(energy_mev, dm2))
}

/// `L_coh = 4√2 E² σ_x / |Δm²|` in meters.
pub fn coherence_length(energy_mev: f64, dm2: f64, sigma_x: f64) -> Result<f64> {
    check_positive("energy", energy_mev)?;
    check_positive("dm2", dm2)?;
    if sigma_x.is_nan() || sigma_x < 0.0 {
        return Err(invalid("sigma_x", format!("{sigma_x} must be >= 0")));
    }
    Ok(coh_length(energy_mev, dm2, sigma_x))
}

fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("{v} must be positive")))
    }
}

fn check_baseline(l: f64) -> Result<()> {
    if l >= 0.0 && l.is_finite() {
        Ok(())
    } else {
        Err(invalid("L", format!("{l} must be finite and >= 0")))
    }
}

/// Mass-squared splitting `Δm²_jk = m_j² - m_k²` for the two-state system,
/// with `m_2² - m_1² = dm2`.
fn splitting(dm2: f64, j: usize, k: usize) -> f64 {
    const MASS_SQ_INDEX: [f64; 2] = [0.0, 1.0];
    dm2 * (MASS_SQ_INDEX[j] - MASS_SQ_INDEX[k])
}

/// Exponent of the `(j, k)` interference term.
///
/// `localization_coeff` multiplies `2π²(σ_x / L_osc_jk)²`.
fn interference_exponent(
    params: &OscParams,
    l: f64,
    j: usize,
    k: usize,
    model: Model,
    localization_coeff: f64,
) -> Complex64 {
    let dm2_jk = splitting(params.dm2, j, k);
    if dm2_jk == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let losc = osc_length_signed(params.energy, dm2_jk);
    let phase = -2.0 * PI * l / losc;
    let damping = match model {
        Model::PlaneWave => 0.0,
        Model::WavePacket => {
            let lcoh = coh_length(params.energy, dm2_jk, params.sigma_x);
            let decoherence = if l == 0.0 {
                0.0
            } else {
                let r = l / lcoh;
                r * r
            };
            let loc = params.sigma_x / losc;
            decoherence + 2.0 * PI * PI * localization_coeff * loc * loc
        }
    };
    Complex64::new(-damping, phase)
}

fn flavor_probability(params: &OscParams, l: f64, model: Model, to: usize) -> f64 {
    let u = mixing_matrix(params.theta);
    let loc = (1.0 - params.xi) * (1.0 - params.xi);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..2 {
        for k in 0..2 {
            let weight = u[0][j] * u[0][k] * u[to][j] * u[to][k];
            sum += weight * interference_exponent(params, l, j, k, model, loc).exp();
        }
    }
    sum.re
}

/// Survival and transition probabilities at baseline `l` (meters).
pub fn transition_probability(params: &OscParams, l: f64, model: Model) -> Result<ProbabilityPair> {
    check_baseline(l)?;
    let survival = flavor_probability(params, l, model, 0);
    let transition = flavor_probability(params, l, model, 1);
    ProbabilityPair::new(survival, transition)
}

/// Wave-packet probabilities, including decoherence and localization damping.
pub fn transition_probability_wp(params: &OscParams, l: f64) -> Result<ProbabilityPair> {
    transition_probability(params, l, Model::WavePacket)
}

/// Plane-wave probabilities: the same sum with both damping exponents dropped.
pub fn transition_probability_pw(params: &OscParams, l: f64) -> Result<ProbabilityPair> {
    transition_probability(params, l, Model::PlaneWave)
}

/// Time-averaged 2×2 mass-basis density matrix of a neutrino produced as
/// flavor α, at distance `x` from the source.
///
/// Only the production process is described here, so `params.sigma_x()` and
/// `params.xi()` are read as the production width and localization
/// parameter; the localization damping carries `ξ²`.
pub fn mass_basis_density(params: &OscParams, x: f64) -> Result<DensityMatrix> {
    check_baseline(x)?;
    let u = mixing_matrix(params.theta);
    let coeff = params.xi * params.xi;
    let m = ComplexMatrix::from_fn(2, |j, k| {
        u[0][j] * u[0][k] * interference_exponent(params, x, j, k, Model::WavePacket, coeff).exp()
    })?;
    DensityMatrix::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    fn minos_like(theta: f64) -> OscParams {
        OscParams::new(theta, 2.32e-3, 1000.0, 1.0e-15, 0.0).unwrap()
    }

    #[test]
    fn mixing_matrix_examples() {
        assert_eq!(mixing_matrix(0.0), [[1.0, 0.0], [-0.0, 1.0]]);
        let m = mixing_matrix(FRAC_PI_4);
        let h = 0.5_f64.sqrt();
        for (got, want) in m.iter().flatten().zip([h, h, -h, h]) {
            assert!((got - want).abs() < 1e-15);
        }
        for theta in [0.1, 0.7, 1.3] {
            let u = mixing_matrix(theta);
            for i in 0..2 {
                for j in 0..2 {
                    let dot: f64 = (0..2).map(|k| u[i][k] * u[j][k]).sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn angle_parameterizations() {
        let t = theta_from_sin2_2theta(0.084).unwrap();
        assert!((sin2_2theta(t) - 0.084).abs() < 1e-15);
        assert!((theta_from_sin2_2theta(1.0).unwrap() - FRAC_PI_4).abs() < 1e-15);
        let t = theta_from_tan2_theta(0.47).unwrap();
        assert!((t.tan().powi(2) - 0.47).abs() < 1e-14);
        let t = theta_from_tan2_2theta(0.47).unwrap();
        assert!(((2.0 * t).tan().powi(2) - 0.47).abs() < 1e-14);
        assert!(theta_from_sin2_2theta(1.2).is_err());
        assert!(theta_from_tan2_theta(-1.0).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(OscParams::new(-0.1, 1e-3, 1.0, 0.0, 0.0).is_err());
        assert!(OscParams::new(1.6, 1e-3, 1.0, 0.0, 0.0).is_err());
        assert!(OscParams::new(0.1, 0.0, 1.0, 0.0, 0.0).is_err());
        assert!(OscParams::new(0.1, 1e-3, -1.0, 0.0, 0.0).is_err());
        assert!(OscParams::new(0.1, 1e-3, 1.0, -1e-12, 0.0).is_err());
        assert!(OscParams::new(0.1, 1e-3, 1.0, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn split_widths_combine_in_quadrature() {
        let p = OscParams::from_split_widths(
            0.3,
            1e-3,
            10.0,
            Localization {
                sigma_x: 3e-13,
                xi: 0.2,
            },
            Localization {
                sigma_x: 4e-13,
                xi: 0.5,
            },
        )
        .unwrap();
        assert!((p.sigma_x() - 5e-13).abs() < 1e-27);
        let want = ((0.2f64 * 3.0).powi(2) + (0.5f64 * 4.0).powi(2)).sqrt() / 5.0;
        assert!((p.xi() - want).abs() < 1e-15);
        let none = OscParams::from_split_widths(
            0.3,
            1e-3,
            10.0,
            Localization::default(),
            Localization::default(),
        )
        .unwrap();
        assert_eq!((none.sigma_x(), none.xi()), (0.0, 0.0));
    }

    #[test]
    fn oscillation_length_values() {
        let l = oscillation_length(1000.0, 2.32e-3).unwrap();
        // Oracle: 4π·ħc·E/Δm² evaluated independently.
        // E·ħc = 1e9 eV × 1.973269804e-7 eV·m.
        let oracle = 4.0 * PI * 197.3269804 / 2.32e-3;
        assert!((l - oracle).abs() / oracle < 1e-14);
        assert!((l - 1.069e6).abs() / 1.069e6 < 1e-3);
        // The conventional phase 1.26693·Δm²[eV²]·L[km]/E[GeV] reaches π at L_osc.
        let km = l / 1e3;
        assert!((1.266_932_7 * 2.32e-3 * km / 1.0 - PI).abs() < 1e-6);
        assert!((oscillation_length(2000.0, 2.32e-3).unwrap() / l - 2.0).abs() < 1e-14);
        assert!((oscillation_length(1000.0, 4.64e-3).unwrap() / l - 0.5).abs() < 1e-14);
        assert!(oscillation_length(0.0, 1e-3).is_err());
        assert!(oscillation_length(1.0, -1e-3).is_err());
    }

    #[test]
    fn coherence_length_scaling() {
        let base = coherence_length(1000.0, 2.32e-3, 1e-15).unwrap();
        assert!((coherence_length(1000.0, 2.32e-3, 2e-15).unwrap() / base - 2.0).abs() < 1e-14);
        assert!((coherence_length(2000.0, 2.32e-3, 1e-15).unwrap() / base - 4.0).abs() < 1e-14);
        for dm2 in [1e-5, 2.32e-3, 0.1] {
            let ratio = coherence_length(1000.0, dm2, 1e-15).unwrap()
                / oscillation_length(1000.0, dm2).unwrap();
            let want = SQRT_2 * 1000.0 * 1e-15 / (PI * HBAR_C_MEV_FM * 1e-15);
            assert!((ratio - want).abs() / want < 1e-13);
        }
        assert!(coherence_length(0.0, 1e-3, 1.0).is_err());
    }

    #[test]
    fn zero_baseline_and_no_mixing() {
        let p = OscParams::new(0.6, 2.32e-3, 1000.0, 0.0, 1.0).unwrap();
        let pair = transition_probability_wp(&p, 0.0).unwrap();
        assert!(pair.transition().abs() < 1e-15);
        let p0 = minos_like(0.0);
        for l in [0.0, 1e5, 3.3e6, 1e9] {
            assert_eq!(transition_probability_wp(&p0, l).unwrap().survival(), 1.0);
        }
        assert!(transition_probability_wp(&p0, -1.0).is_err());
    }

    #[test]
    fn deep_decoherence_limit() {
        for theta in [0.2, FRAC_PI_4, 1.1] {
            let p = minos_like(theta);
            let l = 50.0 * p.coherence_length();
            let pair = transition_probability_wp(&p, l).unwrap();
            let want = 0.5 * sin2_2theta(theta);
            assert!((pair.transition() - want).abs() < 1e-12);
        }
    }

    #[test]
    fn plane_wave_landmarks() {
        let p = minos_like(FRAC_PI_4);
        let losc = p.oscillation_length();
        let half = transition_probability_pw(&p, 0.5 * losc).unwrap();
        assert!((half.transition() - 1.0).abs() < 1e-12);
        let full = transition_probability_pw(&p, losc).unwrap();
        assert!(full.transition().abs() < 1e-12);
    }

    #[test]
    fn mass_density_examples() {
        let rho = mass_basis_density(&minos_like(0.0), 2e6).unwrap();
        let want = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap();
        assert!(rho.max_abs_diff(&want) < 1e-15);

        let p = minos_like(0.5);
        let far = mass_basis_density(&p, 40.0 * p.coherence_length()).unwrap();
        assert!(far[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn mass_density_projects_onto_flavor_probability() {
        // With ξ_P = 1/2 the production-only localization factor ξ_P² equals
        // the (1 - ξ)² of the flavor probability.
        for &(theta, xi, sigma) in &[(0.3, 0.5, 1e-15), (1.0, 0.5, 3e-15), (0.7, 0.0, 1e-30)] {
            let p = OscParams::new(theta, 2.32e-3, 1000.0, sigma, xi).unwrap();
            let u = mixing_matrix(theta);
            for l in [0.0, 2.1e5, 1.7e6, 4.4e6] {
                let rho = mass_basis_density(&p, l).unwrap();
                let projected: f64 = (0..2)
                    .flat_map(|j| (0..2).map(move |k| (j, k)))
                    .map(|(j, k)| (u[1][j] * rho[(j, k)] * u[1][k]).re)
                    .sum();
                let want = transition_probability_wp(&p, l).unwrap().transition();
                assert!((projected - want).abs() < 1e-12, "theta {theta} L {l}");
            }
        }
    }

    proptest! {
        #[test]
        fn unitarity_and_range(theta in 0.0..FRAC_PI_2, l in 0.0f64..5e7, sigma in 0.0f64..1e-14, xi in 0.0f64..1.0) {
            let p = OscParams::new(theta, 2.32e-3, 1000.0, sigma, xi).unwrap();
            for model in [Model::WavePacket, Model::PlaneWave] {
                let s = flavor_probability(&p, l, model, 0);
                let t = flavor_probability(&p, l, model, 1);
                prop_assert!((s + t - 1.0).abs() <= 1e-12);
                prop_assert!((-1e-15..=1.0 + 1e-15).contains(&s));
                prop_assert!((-1e-15..=1.0 + 1e-15).contains(&t));
            }
        }

        #[test]
        fn plane_wave_matches_closed_form(theta in 0.0..FRAC_PI_2, l in 0.0f64..2e7) {
            let p = minos_like(theta);
            let pair = transition_probability_pw(&p, l).unwrap();
            let oracle = sin2_2theta(theta) * (PI * l / p.oscillation_length()).sin().powi(2);
            prop_assert!((pair.transition() - oracle).abs() <= 1e-12);
        }

        #[test]
        fn plane_wave_is_periodic(theta in 0.0..FRAC_PI_2, frac in 0.0f64..1.0, n in 1u32..5) {
            let p = minos_like(theta);
            let losc = p.oscillation_length();
            let a = transition_probability_pw(&p, frac * losc).unwrap().transition();
            let b = transition_probability_pw(&p, (frac + n as f64) * losc).unwrap().transition();
            prop_assert!((a - b).abs() <= 1e-12);
        }

        #[test]
        fn wave_packet_reduces_to_plane_wave(theta in 0.0..FRAC_PI_2, frac in 0.0f64..1e-4) {
            // (L/L_coh)² < 1e-8 and the localization term is zero at ξ = 1.
            let p = OscParams::new(theta, 2.32e-3, 1000.0, 1e-15, 1.0).unwrap();
            let l = frac * p.coherence_length();
            let wp = transition_probability_wp(&p, l).unwrap();
            let pw = transition_probability_pw(&p, l).unwrap();
            prop_assert!((wp.transition() - pw.transition()).abs() <= 1e-6);
        }

        #[test]
        fn mass_density_is_a_state(theta in 0.0..FRAC_PI_2, l in 0.0f64..2e7, xi in 0.0f64..1.0) {
            let p = OscParams::new(theta, 2.32e-3, 1000.0, 2e-15, xi).unwrap();
            let rho = mass_basis_density(&p, l).unwrap();
            prop_assert!(rho.is_hermitian(1e-15));
            prop_assert!((rho.trace().re - 1.0).abs() <= 1e-12);
        }
    }
}
