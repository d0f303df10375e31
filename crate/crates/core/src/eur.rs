//! Quantum-memory-assisted entropic uncertainty for Pauli measurements on
//! mode A with mode B as the memory.

use serde::Serialize;

use crate::error::Result;
use crate::oscillation::ProbabilityPair;
use crate::qmat::{
    binary_entropy, identity2, partial_trace, pauli_eigenbasis, tensor, Axis, ComplexMatrix,
    DensityMatrix, Subsystem,
};

/// Entropies in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EurResult {
    /// `S(P|B) + S(R|B)`.
    pub u: f64,
    /// `-log₂ c(P, R) + S(A|B)`.
    pub u_bound: f64,
    pub s_xb: f64,
    pub s_yb: f64,
    pub s_ab: f64,
}

fn projector_on_a(axis: Axis, outcome: usize) -> Result<ComplexMatrix> {
    let v = pauli_eigenbasis(axis);
    let ket = [v[(0, outcome)], v[(1, outcome)]];
    tensor(&ComplexMatrix::projector(&ket)?, &identity2())
}

/// State after a non-selective measurement of `axis` on mode A.
pub fn measured_state(rho: &DensityMatrix, axis: Axis) -> Result<DensityMatrix> {
    let mut out = ComplexMatrix::zeros(4)?;
    for outcome in 0..2 {
        let p = projector_on_a(axis, outcome)?;
        out = out + p * *rho.matrix() * p;
    }
    DensityMatrix::new(out)
}

/// `max_{j,k} |⟨ψ_j|φ_k⟩|²` over the eigenbases of two Pauli operators.
pub fn max_overlap(p: Axis, r: Axis) -> f64 {
    let (u, v) = (pauli_eigenbasis(p), pauli_eigenbasis(r));
    let overlap = u.adjoint() * v;
    (0..2)
        .flat_map(|j| (0..2).map(move |k| (j, k)))
        .map(|(j, k)| overlap[(j, k)].norm_sqr())
        .fold(0.0, f64::max)
}

/// Overlap of the σ_x and σ_y eigenbases, ½.
pub fn max_overlap_pauli() -> f64 {
    max_overlap(Axis::X, Axis::Y)
}

/// Uncertainty for an arbitrary pair of Pauli observables, all from matrices.
pub fn eur_general_pair(rho: &DensityMatrix, p: Axis, r: Axis) -> Result<EurResult> {
    let s_b = partial_trace(rho, Subsystem::B)?.entropy();
    let s_pb = measured_state(rho, p)?.entropy() - s_b;
    let s_rb = measured_state(rho, r)?.entropy() - s_b;
    let s_ab = rho.entropy() - s_b;
    Ok(EurResult {
        u: s_pb + s_rb,
        u_bound: -max_overlap(p, r).log2() + s_ab,
        s_xb: s_pb,
        s_yb: s_rb,
        s_ab,
    })
}

/// Uncertainty for `(σ_x, σ_y)` from the 4×4 state.
pub fn eur_general(rho: &DensityMatrix) -> Result<EurResult> {
    eur_general_pair(rho, Axis::X, Axis::Y)
}

/// Closed form for the flavor state: `U = 2(1 - h(P))`, `U_b = 1 - h(P)`.
pub fn eur_closed(probs: &ProbabilityPair) -> EurResult {
    let h = binary_entropy(probs.survival());
    EurResult {
        u: 2.0 * (1.0 - h),
        u_bound: 1.0 - h,
        s_xb: 1.0 - h,
        s_yb: 1.0 - h,
        s_ab: -h,
    }
}

/// The bound with its second term taken literally as `P_αα log₂ P_αβ`.
///
/// Only used to report how far that variant sits from [`eur_closed`]; it is
/// `-∞` whenever `P_αβ = 0 < P_αα`.
pub fn printed_bound_variant(probs: &ProbabilityPair) -> f64 {
    let (p, q) = (probs.survival(), probs.transition());
    let xlogy = |x: f64, y: f64| if x == 0.0 { 0.0 } else { x * y.log2() };
    xlogy(p, p) + xlogy(p, q) + 1.0
}

/// `printed_bound_variant - eur_closed().u_bound`.
pub fn printed_bound_discrepancy(probs: &ProbabilityPair) -> f64 {
    printed_bound_variant(probs) - eur_closed(probs).u_bound
}
