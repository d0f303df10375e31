//! Coherence measures and the non-local advantage of quantum coherence.
//!
//! The NAQC of a two-qubit state averages the coherence of mode B's
//! conditional states, after projective Pauli measurements `Π_i^± = (I ± σ_i)/2`
//! on mode A, in the eigenbases of the two other Pauli operators:
//!
//! `N = ½ Σ_{i≠j, a=±} p_{B|Π_i^a} C^{σ_j}(ρ_{B|Π_i^a})`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::flavorstate::BlochDecomposition;
use crate::oscillation::ProbabilityPair;
use crate::qmat::{
    binary_entropy, identity2, pauli, pauli_eigenbasis, re, shannon_entropy, sqrt_psd, tensor,
    Axis, ComplexMatrix, DensityMatrix, SQRT_SNAP_TOL,
};

/// Branches with `p_{B|Π} <` this are skipped; their conditional state is undefined.
pub const ZERO_BRANCH_TOL: f64 = 1e-14;

/// Below this `|2λ - 1|` the skew-information Bloch formula is evaluated in
/// its regularized form.
const SKEW_SINGULAR_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    L1,
    Re,
    Sk,
}

impl Measure {
    pub const ALL: [Measure; 3] = [Measure::L1, Measure::Re, Measure::Sk];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::L1 => "l1",
            Measure::Re => "re",
            Measure::Sk => "sk",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Measure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l1" => Ok(Measure::L1),
            "re" => Ok(Measure::Re),
            "sk" => Ok(Measure::Sk),
            other => Err(invalid("measure", format!("unknown measure `{other}`"))),
        }
    }
}

fn in_eigenbasis(rho: &DensityMatrix, axis: Axis) -> ComplexMatrix {
    rho.matrix().conjugated_by(&pauli_eigenbasis(axis))
}

/// Sum of off-diagonal magnitudes in the eigenbasis of `σ_axis`.
pub fn coherence_l1(rho: &DensityMatrix, axis: Axis) -> f64 {
    let m = in_eigenbasis(rho, axis);
    let n = m.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .map(|(i, j)| m[(i, j)].norm())
        .sum()
}

/// `S(ρ_diag) - S(ρ)` with the diagonal taken in the eigenbasis of `σ_axis`.
pub fn coherence_re(rho: &DensityMatrix, axis: Axis) -> f64 {
    let diag: Vec<f64> = in_eigenbasis(rho, axis)
        .diagonal()
        .iter()
        .map(|z| z.re)
        .collect();
    shannon_entropy(&diag) - rho.entropy()
}

/// Skew information `-½ Tr([√ρ, σ_axis]²)`.
pub fn coherence_sk(rho: &DensityMatrix, axis: Axis) -> Result<f64> {
    if rho.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: rho.dim(),
        });
    }
    let comm = sqrt_psd(rho.matrix())?.commutator(&pauli(axis));
    Ok(-0.5 * (comm * comm).trace().re)
}

pub fn coherence(rho: &DensityMatrix, axis: Axis, measure: Measure) -> Result<f64> {
    match measure {
        Measure::L1 => Ok(coherence_l1(rho, axis)),
        Measure::Re => Ok(coherence_re(rho, axis)),
        Measure::Sk => coherence_sk(rho, axis),
    }
}

/// One outcome of a Pauli measurement on mode A.
#[derive(Debug, Clone, Copy)]
pub struct ConditionalBranch {
    pub probability: f64,
    /// `None` when the branch probability is below [`ZERO_BRANCH_TOL`].
    pub state: Option<DensityMatrix>,
}

/// Conditional states of mode B after measuring `Π_axis^±` on A, `+` first.
pub fn conditional_states(rho: &DensityMatrix, axis: Axis) -> Result<[ConditionalBranch; 2]> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    let branch = |sign: f64| -> Result<ConditionalBranch> {
        let proj = (identity2() + pauli(axis).scale(re(sign))).scale(re(0.5));
        let proj = tensor(&proj, &identity2())?;
        let post = proj * *rho.matrix() * proj;
        let probability = post.trace().re;
        if probability < ZERO_BRANCH_TOL {
            return Ok(ConditionalBranch {
                probability: probability.max(0.0),
                state: None,
            });
        }
        let reduced = ComplexMatrix::from_fn(2, |i, j| {
            (0..2)
                .map(|a| post[(2 * a + i, 2 * a + j)])
                .sum::<num_complex::Complex64>()
                / probability
        })?;
        Ok(ConditionalBranch {
            probability,
            state: Some(DensityMatrix::new(reduced)?),
        })
    };
    Ok([branch(1.0)?, branch(-1.0)?])
}

/// NAQC of an arbitrary two-qubit state for all three measures, `[l1, re, sk]`.
pub fn naqc_general_all(rho: &DensityMatrix) -> Result<[f64; 3]> {
    let mut total = [0.0; 3];
    for i in Axis::ALL {
        for branch in conditional_states(rho, i)? {
            let Some(state) = branch.state else { continue };
            for j in Axis::ALL.into_iter().filter(|&j| j != i) {
                for (slot, m) in total.iter_mut().zip(Measure::ALL) {
                    *slot += branch.probability * coherence(&state, j, m)?;
                }
            }
        }
    }
    Ok(total.map(|t| 0.5 * t))
}

pub fn naqc_general(rho: &DensityMatrix, measure: Measure) -> Result<f64> {
    let all = naqc_general_all(rho)?;
    Ok(match measure {
        Measure::L1 => all[0],
        Measure::Re => all[1],
        Measure::Sk => all[2],
    })
}

/// NAQC of the flavor state from the oscillation probabilities alone.
pub fn naqc_closed(probs: &ProbabilityPair, measure: Measure) -> f64 {
    let (p, q) = (probs.survival(), probs.transition());
    match measure {
        Measure::L1 => 2.0 + 2.0 * (p * q).sqrt(),
        Measure::Re => 2.0 + binary_entropy(p),
        Measure::Sk => 2.0 + 4.0 * p * q,
    }
}

/// Single-qubit bound on the summed coherence over three mutually unbiased
/// bases. `C_re` is kept at the literal 2.23.
pub fn naqc_bound(measure: Measure) -> f64 {
    match measure {
        Measure::L1 => 6f64.sqrt(),
        Measure::Re => 2.23,
        Measure::Sk => 2.0,
    }
}

/// Attainment is strict: a value equal to its bound is not attained.
pub fn attains(value: f64, measure: Measure) -> bool {
    value > naqc_bound(measure)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NaqcTriple {
    pub n_l1: f64,
    pub n_re: f64,
    pub n_sk: f64,
    pub attained_l1: bool,
    pub attained_re: bool,
    pub attained_sk: bool,
}

impl NaqcTriple {
    pub fn from_values([n_l1, n_re, n_sk]: [f64; 3]) -> Self {
        Self {
            n_l1,
            n_re,
            n_sk,
            attained_l1: attains(n_l1, Measure::L1),
            attained_re: attains(n_re, Measure::Re),
            attained_sk: attains(n_sk, Measure::Sk),
        }
    }

    pub fn value(&self, measure: Measure) -> f64 {
        match measure {
            Measure::L1 => self.n_l1,
            Measure::Re => self.n_re,
            Measure::Sk => self.n_sk,
        }
    }
}

pub fn naqc_triple(probs: &ProbabilityPair) -> NaqcTriple {
    NaqcTriple::from_values(Measure::ALL.map(|m| naqc_closed(probs, m)))
}

/// NAQC from the Bloch coefficients through the per-axis conditional
/// coherence formulas, without forming any conditional density matrix.
///
/// After `Π_k^a` on A, B's Bloch vector is `b_i = α_i / γ` with
/// `α_i = s_i + a t_ki` and `γ = 1 + a r_k`; the branch probability is `γ/2`.
pub fn naqc_from_bloch(d: &BlochDecomposition, measure: Measure) -> f64 {
    let mut total = 0.0;
    for k in 0..3 {
        for sign in [1.0, -1.0] {
            let gamma = 1.0 + sign * d.r[k];
            let probability = 0.5 * gamma;
            if probability < ZERO_BRANCH_TOL {
                continue;
            }
            let alpha: [f64; 3] = std::array::from_fn(|i| d.s[i] + sign * d.t[k][i]);
            let alpha_sq: f64 = alpha.iter().map(|a| a * a).sum();
            let lambda_plus = 0.5 + alpha_sq.sqrt() / (2.0 * gamma);
            for j in (0..3).filter(|&j| j != k) {
                let transverse: f64 = (0..3)
                    .filter(|&i| i != j)
                    .map(|i| alpha[i] * alpha[i])
                    .sum();
                let c = match measure {
                    Measure::L1 => (transverse / (gamma * gamma)).sqrt(),
                    Measure::Re => {
                        let beta_plus = 0.5 + alpha[j] / (2.0 * gamma);
                        binary_entropy(beta_plus) - binary_entropy(lambda_plus)
                    }
                    Measure::Sk => {
                        let x = (2.0 * lambda_plus - 1.0).powi(2);
                        // 1 - x = 4λ⁺λ⁻ is the determinant term; snap rounding noise on pure states.
                        let det = 1.0 - x;
                        let root = if det <= 4.0 * SQRT_SNAP_TOL {
                            0.0
                        } else {
                            det.sqrt()
                        };
                        let ratio = if (2.0 * lambda_plus - 1.0).abs() < SKEW_SINGULAR_TOL {
                            1.0 / (1.0 + root)
                        } else {
                            (1.0 - root) / x
                        };
                        transverse * ratio / (gamma * gamma)
                    }
                };
                total += probability * c;
            }
        }
    }
    0.5 * total
}
