//! Two-flavor neutrino oscillations in the wave-packet picture, and the
//! entropic uncertainty and non-local advantage of quantum coherence (NAQC)
//! of the resulting two-mode flavor state.
//!
//! Layers, bottom up:
//!
//! - [`qmat`]: 2×2 / 4×4 complex matrices, partial traces, spectra, entropies.
//! - [`oscillation`]: mixing, oscillation and coherence lengths, probabilities.
//! - [`flavorstate`]: the two-mode flavor state and its Bloch decomposition.
//! - [`eur`]: entropic uncertainty with a quantum memory.
//! - [`naqc`]: l1-norm, relative-entropy and skew-information coherence and NAQC.
//! - [`analysis`]: baseline sweeps, thresholds, minima, identity checks.
//! - [`cli`]: the `nunaqc` command-line front end.
//!
//! Quantities with a closed form in the probabilities are also computed from
//! the 4×4 density matrix, and the two routes are cross-checked.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod eur;
pub mod flavorstate;
pub mod naqc;
pub mod oscillation;
pub mod qmat;

pub use error::{Error, Result};
