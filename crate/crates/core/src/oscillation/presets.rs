use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{AngleSpec, OscParams};
use crate::error::{invalid, Error, Result};

const PRESETS_JSON: &str = include_str!("../../presets.json");

/// How a quoted `tan²` value is read.
///
/// KamLAND's 0.47 is conventionally `tan²θ₁₂`; [`TangentReading::Theta`] is
/// the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TangentReading {
    #[default]
    Theta,
    TwoTheta,
}

impl fmt::Display for TangentReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TangentReading::Theta => "tan^2(theta)",
            TangentReading::TwoTheta => "tan^2(2 theta)",
        })
    }
}

impl std::str::FromStr for TangentReading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" => Ok(TangentReading::Theta),
            "two_theta" => Ok(TangentReading::TwoTheta),
            other => Err(invalid("tan_reading", format!("unknown reading `{other}`"))),
        }
    }
}

/// One entry of a preset or config file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ParamsConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub channel: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_rad: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sin2_2theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tan2_theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tan_reading: Option<TangentReading>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dm2_ev2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energy_mev: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_x_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmin_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lmax_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ParamsConfig {
    pub fn has_angle(&self) -> bool {
        self.theta_rad.is_some() || self.sin2_2theta.is_some() || self.tan2_theta.is_some()
    }

    /// The single angle key present, interpreted per `tan_reading`.
    pub fn angle(&self) -> Result<AngleSpec> {
        let given = [
            self.theta_rad.map(AngleSpec::Theta),
            self.sin2_2theta.map(AngleSpec::Sin2TwoTheta),
            self.tan2_theta
                .map(|x| match self.tan_reading.unwrap_or_default() {
                    TangentReading::Theta => AngleSpec::Tan2Theta(x),
                    TangentReading::TwoTheta => AngleSpec::Tan2TwoTheta(x),
                }),
        ];
        let mut present = given.into_iter().flatten();
        match (present.next(), present.next()) {
            (Some(a), None) => Ok(a),
            (None, _) => Err(invalid(
                "angle",
                "one of theta_rad, sin2_2theta, tan2_theta is required",
            )),
            (Some(_), Some(_)) => Err(invalid(
                "angle",
                "only one of theta_rad, sin2_2theta, tan2_theta may be given",
            )),
        }
    }

    pub fn to_params(&self) -> Result<OscParams> {
        let need = |name: &'static str, v: Option<f64>| v.ok_or_else(|| invalid(name, "missing"));
        OscParams::new(
            self.angle()?.theta()?,
            need("dm2_ev2", self.dm2_ev2)?,
            need("energy_mev", self.energy_mev)?,
            need("sigma_x_m", self.sigma_x_m)?,
            self.xi.unwrap_or(0.0),
        )
    }

    /// Fields set in `other` replace those in `self`. Setting any angle key in
    /// `other` replaces the whole angle.
    pub fn overlay(&self, other: &ParamsConfig) -> ParamsConfig {
        let mut out = self.clone();
        if other.has_angle() {
            out.theta_rad = other.theta_rad;
            out.sin2_2theta = other.sin2_2theta;
            out.tan2_theta = other.tan2_theta;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { out.$f = other.$f.clone(); } )* };
        }
        take!(
            name,
            channel,
            tan_reading,
            dm2_ev2,
            energy_mev,
            sigma_x_m,
            xi,
            lmin_m,
            lmax_m,
            note
        );
        out
    }
}

#[derive(Debug, Deserialize)]
struct PresetFile {
    presets: Vec<ParamsConfig>,
    scenarios: Vec<ParamsConfig>,
}

fn preset_file() -> &'static PresetFile {
    static FILE: OnceLock<PresetFile> = OnceLock::new();
    FILE.get_or_init(|| serde_json::from_str(PRESETS_JSON).expect("embedded presets.json is valid"))
}

/// A named experiment (or stored scenario) with its quoted mixing parameters
/// and default wave-packet and baseline settings.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPreset {
    pub name: String,
    pub channel: String,
    pub config: ParamsConfig,
}

impl ExperimentPreset {
    fn from_config(config: &ParamsConfig) -> Self {
        Self {
            name: config.name.clone().unwrap_or_default(),
            channel: config.channel.clone().unwrap_or_default(),
            config: config.clone(),
        }
    }

    pub fn angle(&self) -> AngleSpec {
        self.config
            .angle()
            .expect("presets carry exactly one angle")
    }

    pub fn theta(&self) -> f64 {
        self.angle().theta().expect("preset angle is valid")
    }

    pub fn dm2(&self) -> f64 {
        self.config.dm2_ev2.expect("presets carry dm2")
    }

    /// Mixing parameters as quoted, e.g. `("sin^2(2 theta)", 0.084)`.
    pub fn quoted_angle(&self) -> (String, f64) {
        match self.angle() {
            AngleSpec::Theta(t) => ("theta [rad]".into(), t),
            AngleSpec::Sin2TwoTheta(x) => ("sin^2(2 theta)".into(), x),
            AngleSpec::Tan2Theta(x) => (TangentReading::Theta.to_string(), x),
            AngleSpec::Tan2TwoTheta(x) => (TangentReading::TwoTheta.to_string(), x),
        }
    }

    pub fn with_tangent_reading(&self, reading: TangentReading) -> Self {
        let mut out = self.clone();
        if out.config.tan2_theta.is_some() {
            out.config.tan_reading = Some(reading);
        }
        out
    }

    /// Full parameters with the default energy, width and ξ.
    pub fn params(&self) -> Result<OscParams> {
        self.config.to_params()
    }

    pub fn baseline_range(&self) -> (f64, f64) {
        (
            self.config.lmin_m.unwrap_or(0.0),
            self.config.lmax_m.unwrap_or(0.0),
        )
    }
}

pub fn presets() -> Vec<ExperimentPreset> {
    preset_file()
        .presets
        .iter()
        .map(ExperimentPreset::from_config)
        .collect()
}

/// Looks up `dayabay`, `kamland` or `minos`.
pub fn preset(name: &str) -> Result<ExperimentPreset> {
    presets()
        .into_iter()
        .find(|p| p.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

pub fn scenarios() -> Vec<ExperimentPreset> {
    preset_file()
        .scenarios
        .iter()
        .map(ExperimentPreset::from_config)
        .collect()
}

pub fn scenario(name: &str) -> Result<ExperimentPreset> {
    scenarios()
        .into_iter()
        .find(|p| p.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}
