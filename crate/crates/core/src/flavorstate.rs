//! The two-mode flavor state of a neutrino and its Bloch decomposition.
//!
//! Mode A is the left tensor factor. The α-flavor amplitude sits on `|10⟩`
//! and the β-flavor amplitude on `|01⟩`, so the state is
//! `a_ab|01⟩ + a_aa|10⟩`. Alice measures mode A; mode B is the memory.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oscillation::ProbabilityPair;
use crate::qmat::{c, identity2, pauli, re, tensor, Axis, ComplexMatrix, DensityMatrix};

const NORM_TOL: f64 = 1e-12;

/// Amplitudes `a_αα`, `a_αβ` of the evolved flavor state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlavorAmplitudes {
    a_aa: Complex64,
    a_ab: Complex64,
}

impl FlavorAmplitudes {
    pub fn new(a_aa: Complex64, a_ab: Complex64) -> Result<Self> {
        let norm = a_aa.norm_sqr() + a_ab.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { a_aa, a_ab })
    }

    pub fn a_aa(&self) -> Complex64 {
        self.a_aa
    }

    pub fn a_ab(&self) -> Complex64 {
        self.a_ab
    }
}

/// `a_aa = √P_αα`, `a_ab = √P_αβ e^{iφ}`.
pub fn amplitudes_from_probabilities(
    probs: &ProbabilityPair,
    phase: f64,
) -> Result<FlavorAmplitudes> {
    let (s, t) = (probs.survival(), probs.transition());
    if !(0.0..=1.0).contains(&s) || !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidProbabilities {
            survival: s,
            transition: t,
        });
    }
    FlavorAmplitudes::new(re(s.sqrt()), Complex64::from_polar(t.sqrt(), phase))
}

/// Rank-one two-mode state supported on `{|01⟩, |10⟩}`.
pub fn bipartite_state(amps: &FlavorAmplitudes) -> Result<DensityMatrix> {
    let zero = c(0.0, 0.0);
    DensityMatrix::pure(&[zero, amps.a_ab, amps.a_aa, zero])
}

/// `ρ = ¼(I + r·σ⊗I + I⊗s·σ + Σ t_ij σ_i⊗σ_j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochDecomposition {
    pub r: [f64; 3],
    pub s: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl BlochDecomposition {
    pub fn reconstruct(&self) -> Result<ComplexMatrix> {
        let i2 = identity2();
        let mut m = ComplexMatrix::identity(4)?;
        for a in Axis::ALL {
            let k = a.index();
            m = m + tensor(&pauli(a), &i2)?.scale(re(self.r[k]));
            m = m + tensor(&i2, &pauli(a))?.scale(re(self.s[k]));
            for b in Axis::ALL {
                m = m + tensor(&pauli(a), &pauli(b))?.scale(re(self.t[k][b.index()]));
            }
        }
        Ok(m.scale(re(0.25)))
    }
}

fn expectation(rho: &DensityMatrix, op: &ComplexMatrix) -> f64 {
    (*rho.matrix() * *op).trace().re
}

pub fn bloch_decompose(rho: &DensityMatrix) -> Result<BlochDecomposition> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
        });
    }
    let i2 = identity2();
    let mut out = BlochDecomposition {
        r: [0.0; 3],
        s: [0.0; 3],
        t: [[0.0; 3]; 3],
    };
    for a in Axis::ALL {
        let k = a.index();
        out.r[k] = expectation(rho, &tensor(&pauli(a), &i2)?);
        out.s[k] = expectation(rho, &tensor(&i2, &pauli(a))?);
        for b in Axis::ALL {
            out.t[k][b.index()] = expectation(rho, &tensor(&pauli(a), &pauli(b))?);
        }
    }
    Ok(out)
}
