//! Dense complex matrices for one and two qubits.
//!
//! Everything here is fixed-size: a [`ComplexMatrix`] is either 2×2 or 4×4,
//! stored row-major. For two qubits the basis order is
//! `{|00⟩, |01⟩, |10⟩, |11⟩}` with subsystem A the left tensor factor, so the
//! flat index of `|a b⟩` is `2a + b`.
//!
//! Entropies are in bits throughout the crate.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Hermiticity tolerance on `max |M - M†|`.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Tolerance on `|tr ρ - 1|`.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalues in `[-EIGEN_CLAMP_TOL, 0)` are treated as zero.
pub const EIGEN_CLAMP_TOL: f64 = 1e-10;
/// Eigenvalues at or below this are zero for the square root. Rounding leaves
/// ~1e-17 where a pure state has an exact zero, and `√` would inflate that
/// to ~1e-8.
pub const SQRT_SNAP_TOL: f64 = 1e-14;

const MAX_DIM: usize = 4;
const MAX_JACOBI_SWEEPS: usize = 64;

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Pauli axis, also used to name a measurement basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

/// Which factor of a two-qubit system to keep in a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A 2×2 or 4×4 complex matrix, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [Complex64; MAX_DIM * MAX_DIM],
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok(Self {
            dim,
            data: [Complex64::new(0.0, 0.0); MAX_DIM * MAX_DIM],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = re(1.0);
        }
        Ok(m)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        Ok(m)
    }

    /// Builds a matrix from row slices; the number of rows fixes the dimension.
    pub fn from_rows(rows: &[&[Complex64]]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zeros(dim)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for (j, z) in row.iter().enumerate() {
                m[(i, j)] = *z;
            }
        }
        Ok(m)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = re(*d);
        }
        Ok(m)
    }

    /// `|ψ⟩⟨ψ|` for a state vector of length 2 or 4.
    pub fn projector(psi: &[Complex64]) -> Result<Self> {
        Self::from_fn(psi.len(), |i, j| psi[i] * psi[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjoint(&self) -> Self {
        let mut m = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut m = *self;
        m.data.iter_mut().for_each(|z| *z *= k);
        m
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// `U† M U`.
    pub fn conjugated_by(&self, u: &Self) -> Self {
        u.adjoint() * *self * *u
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    fn entries(&self) -> &[Complex64] {
        &self.data[..self.dim * self.dim]
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = self;
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = (0..n).map(|k| self[(i, k)] * rhs[(k, j)]).sum();
            }
        }
        out
    }
}

impl Add for ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix sum");
        for (a, b) in self.data.iter_mut().zip(rhs.data.iter()) {
            *a += b;
        }
        self
    }
}

impl Sub for ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix difference");
        for (a, b) in self.data.iter_mut().zip(rhs.data.iter()) {
            *a -= b;
        }
        self
    }
}

/// Pauli matrix with `σ_z|0⟩ = |0⟩`.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    let (o, l, i) = (re(0.0), re(1.0), c(0.0, 1.0));
    let rows: [[Complex64; 2]; 2] = match axis {
        Axis::X => [[o, l], [l, o]],
        Axis::Y => [[o, -i], [i, o]],
        Axis::Z => [[l, o], [o, -l]],
    };
    ComplexMatrix::from_rows(&[&rows[0], &rows[1]]).expect("2x2")
}

pub fn identity2() -> ComplexMatrix {
    ComplexMatrix::identity(2).expect("2x2")
}

/// Orthonormal eigenvectors of the Pauli operator as columns, `+1` first.
pub fn pauli_eigenbasis(axis: Axis) -> ComplexMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let rows: [[Complex64; 2]; 2] = match axis {
        Axis::X => [[re(h), re(h)], [re(h), re(-h)]],
        Axis::Y => [[re(h), re(h)], [c(0.0, h), c(0.0, -h)]],
        Axis::Z => [[re(1.0), re(0.0)], [re(0.0), re(1.0)]],
    };
    ComplexMatrix::from_rows(&[&rows[0], &rows[1]]).expect("2x2")
}

/// Kronecker product `a ⊗ b` of two 2×2 matrices.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    for m in [a, b] {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: m.dim(),
            });
        }
    }
    ComplexMatrix::from_fn(4, |r, s| a[(r / 2, s / 2)] * b[(r % 2, s % 2)])
}

/// Hermitian, unit-trace, positive-semidefinite matrix with its spectrum
/// computed once at construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    spectrum: [f64; MAX_DIM],
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let defect = matrix.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian(defect));
        }
        let tr = matrix.trace().re;
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidTrace(tr));
        }
        let eig = eigenvalues_hermitian(&matrix)?;
        let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -EIGEN_CLAMP_TOL {
            return Err(Error::NotPositive(min));
        }
        let mut spectrum = [0.0; MAX_DIM];
        for (s, e) in spectrum.iter_mut().zip(&eig) {
            *s = if *e < 0.0 { 0.0 } else { *e };
        }
        Ok(Self { matrix, spectrum })
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(ComplexMatrix::identity(dim)?.scale(re(1.0 / dim as f64)))
    }

    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        Self::new(ComplexMatrix::projector(psi)?)
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Eigenvalues in descending order, negatives clamped to zero.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectrum[..self.dim()]
    }

    pub fn entropy(&self) -> f64 {
        shannon_entropy(self.eigenvalues())
    }
}

impl std::ops::Deref for DensityMatrix {
    type Target = ComplexMatrix;
    fn deref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// Reduced state of the kept subsystem of a two-qubit density matrix.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    let m = rho.matrix();
    if m.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: m.dim(),
        });
    }
    let reduced = ComplexMatrix::from_fn(2, |i, j| match keep {
        Subsystem::B => (0..2).map(|a| m[(2 * a + i, 2 * a + j)]).sum(),
        Subsystem::A => (0..2).map(|b| m[(2 * i + b, 2 * j + b)]).sum(),
    })?;
    DensityMatrix::new(reduced)
}

/// Real eigenvalues of a Hermitian matrix, descending.
pub fn eigenvalues_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    if m.dim() == 2 {
        let (a, d, b) = (m[(0, 0)].re, m[(1, 1)].re, m[(0, 1)]);
        let mean = 0.5 * (a + d);
        let radius = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
        return Ok(vec![mean + radius, mean - radius]);
    }
    Ok(eigh(m)?.0)
}

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues (descending) and the unitary whose columns
/// are the matching eigenvectors.
pub fn eigh(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim();
    let mut a = *m;
    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    for i in 0..n {
        a[(i, i)] = re(a[(i, i)].re);
        for j in (i + 1)..n {
            let z = 0.5 * (a[(i, j)] + a[(j, i)].conj());
            a[(i, j)] = z;
            a[(j, i)] = z.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n)?;
    let scale = a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();

    let off = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[(i, j)].norm_sqr();
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_JACOBI_SWEEPS {
        if off(&a) <= f64::EPSILON * 1e-3 * scale.max(f64::MIN_POSITIVE) {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
                if app.abs() + 1e3 * mag == app.abs() && aqq.abs() + 1e3 * mag == aqq.abs() {
                    a[(p, q)] = re(0.0);
                    a[(q, p)] = re(0.0);
                    continue;
                }
                let phase = apq / mag;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let cos = 1.0 / (t * t + 1.0).sqrt();
                let sin = t * cos;
                let mut u = ComplexMatrix::identity(n)?;
                u[(p, p)] = re(cos);
                u[(p, q)] = re(sin);
                u[(q, p)] = phase.conj() * (-sin);
                u[(q, q)] = phase.conj() * cos;
                a = a.conjugated_by(&u);
                a[(p, q)] = re(0.0);
                a[(q, p)] = re(0.0);
                a[(p, p)] = re(a[(p, p)].re);
                a[(q, q)] = re(a[(q, q)].re);
                v = v * u;
            }
        }
    }
    if !converged {
        let residual = off(&a);
        if residual > 1e-14 * scale.max(1.0) {
            return Err(Error::NoConvergence(residual));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |r, col| v[(r, order[col])])?;
    Ok((values, vectors))
}

/// `-Σ p log₂ p` with `0 log 0 = 0`; tiny negative entries are treated as zero.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// `h(p) = -p log₂ p - (1-p) log₂(1-p)`.
pub fn binary_entropy(p: f64) -> f64 {
    shannon_entropy(&[p, 1.0 - p])
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    rho.entropy()
}

/// Unique positive-semidefinite square root of a 2×2 PSD matrix.
///
/// Uses `√M = (M + √det M · I) / √(tr M + 2√det M)`.
pub fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    if m.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: m.dim(),
        });
    }
    let eig = eigenvalues_hermitian(m)?;
    if eig[1] < -EIGEN_CLAMP_TOL {
        return Err(Error::NotPositive(eig[1]));
    }
    let snap = |x: f64| if x <= SQRT_SNAP_TOL { 0.0 } else { x };
    let (hi, lo) = (snap(eig[0]), snap(eig[1]));
    let det = (hi * lo).sqrt();
    let norm = (hi + lo + 2.0 * det).sqrt();
    if norm == 0.0 {
        return ComplexMatrix::zeros(2);
    }
    let mut out = *m;
    if lo == 0.0 && eig[1] != 0.0 {
        // Rank one after snapping: √M = M / √tr M, with M replaced by its
        // rank-one part.
        let (_, v) = eigh(m)?;
        let top = [v[(0, 0)], v[(1, 0)]];
        out = ComplexMatrix::projector(&top)?.scale(re(hi));
    }
    out[(0, 0)] += det;
    out[(1, 1)] += det;
    Ok(out.scale(re(1.0 / norm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn random_density(entries: &[f64]) -> DensityMatrix {
        // G G† / tr(G G†) for a 4x4 G built from 32 reals.
        let g = ComplexMatrix::from_fn(4, |i, j| {
            c(entries[2 * (4 * i + j)], entries[2 * (4 * i + j) + 1])
        })
        .unwrap();
        let m = g * g.adjoint();
        let tr = m.trace().re;
        DensityMatrix::new(m.scale(re(1.0 / tr))).unwrap()
    }

    #[test]
    fn pauli_matrices() {
        let x = pauli(Axis::X);
        assert_eq!(x[(0, 1)], re(1.0));
        assert_eq!(x[(1, 0)], re(1.0));
        assert_eq!(x[(0, 0)], re(0.0));
        let y = pauli(Axis::Y);
        assert_eq!(y[(0, 1)], c(0.0, -1.0));
        assert_eq!(y[(1, 0)], c(0.0, 1.0));
        let z = pauli(Axis::Z);
        assert_eq!(z.diagonal(), vec![re(1.0), re(-1.0)]);
        for axis in Axis::ALL {
            let p = pauli(axis);
            assert!((p * p).max_abs_diff(&identity2()) == 0.0);
        }
    }

    #[test]
    fn eigenbasis_columns_are_eigenvectors() {
        for axis in Axis::ALL {
            let v = pauli_eigenbasis(axis);
            let d = pauli(axis).conjugated_by(&v);
            let want = ComplexMatrix::from_real_diagonal(&[1.0, -1.0]).unwrap();
            assert!(d.max_abs_diff(&want) < 1e-15, "{axis}");
        }
    }

    #[test]
    fn tensor_products() {
        let i2 = identity2();
        assert_eq!(
            tensor(&i2, &i2).unwrap(),
            ComplexMatrix::identity(4).unwrap()
        );
        let zi = tensor(&pauli(Axis::Z), &i2).unwrap();
        assert_eq!(
            zi,
            ComplexMatrix::from_real_diagonal(&[1.0, 1.0, -1.0, -1.0]).unwrap()
        );
        let xx = tensor(&pauli(Axis::X), &pauli(Axis::X)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i + j == 3 { 1.0 } else { 0.0 };
                assert_eq!(xx[(i, j)], re(want));
            }
        }
        let four = ComplexMatrix::identity(4).unwrap();
        assert!(matches!(
            tensor(&four, &i2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn partial_trace_examples() {
        // |10⟩⟨10|: A in |1⟩, B in |0⟩.
        let rho = DensityMatrix::pure(&[re(0.0), re(0.0), re(1.0), re(0.0)]).unwrap();
        let b = partial_trace(&rho, Subsystem::B).unwrap();
        assert_eq!(
            *b.matrix(),
            ComplexMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap()
        );
        let a = partial_trace(&rho, Subsystem::A).unwrap();
        assert_eq!(
            *a.matrix(),
            ComplexMatrix::from_real_diagonal(&[0.0, 1.0]).unwrap()
        );

        let mixed = DensityMatrix::maximally_mixed(4).unwrap();
        let a = partial_trace(&mixed, Subsystem::A).unwrap();
        assert!(a.max_abs_diff(&identity2().scale(re(0.5))) < 1e-16);

        let two = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(partial_trace(&two, Subsystem::A).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let d = ComplexMatrix::from_real_diagonal(&[0.3, 0.7]).unwrap();
        let e = eigenvalues_hermitian(&d).unwrap();
        assert!(close(e[0], 0.7, 1e-15) && close(e[1], 0.3, 1e-15));
        let p = ComplexMatrix::from_fn(2, |_, _| re(0.5)).unwrap();
        let e = eigenvalues_hermitian(&p).unwrap();
        assert!(close(e[0], 1.0, 1e-15) && close(e[1], 0.0, 1e-15));

        // Dephased (σ_x on A) flavor state with P_αα = 0.6.
        let (s, t) = (0.6_f64, 0.4_f64);
        let x = (s * t).sqrt();
        let mut m = ComplexMatrix::from_real_diagonal(&[s, t, s, t]).unwrap();
        m[(0, 3)] = re(x);
        m[(3, 0)] = re(x);
        m[(1, 2)] = re(x);
        m[(2, 1)] = re(x);
        let e = eigenvalues_hermitian(&m.scale(re(0.5))).unwrap();
        for (got, want) in e.iter().zip([0.5, 0.5, 0.0, 0.0]) {
            assert!(close(*got, want, 1e-14), "{e:?}");
        }

        let mut bad = identity2();
        bad[(0, 1)] = re(0.1);
        assert!(matches!(
            eigenvalues_hermitian(&bad),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn entropy_examples() {
        let pure = DensityMatrix::pure(&[re(0.6), c(0.0, 0.8)]).unwrap();
        assert!(close(von_neumann_entropy(&pure), 0.0, 1e-12));
        let half = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(close(von_neumann_entropy(&half), 1.0, 1e-15));
        let quarter = DensityMatrix::maximally_mixed(4).unwrap();
        assert!(close(von_neumann_entropy(&quarter), 2.0, 1e-14));
    }

    #[test]
    fn density_validation() {
        let mut m = ComplexMatrix::from_real_diagonal(&[0.5, 0.5]).unwrap();
        m[(0, 1)] = re(0.2);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian(_))));
        let m = ComplexMatrix::from_real_diagonal(&[0.5, 0.6]).unwrap();
        assert!(matches!(DensityMatrix::new(m), Err(Error::InvalidTrace(_))));
        let m = ComplexMatrix::from_real_diagonal(&[1.1, -0.1]).unwrap();
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotPositive(_))));
        // Drift inside the clamp window is accepted and clamped.
        let m = ComplexMatrix::from_real_diagonal(&[1.0 + 5e-13, -5e-13]).unwrap();
        let rho = DensityMatrix::new(m).unwrap();
        assert_eq!(rho.eigenvalues()[1], 0.0);
        assert!(ComplexMatrix::zeros(3).is_err());
    }

    #[test]
    fn sqrt_examples() {
        let i2 = identity2();
        assert!(sqrt_psd(&i2).unwrap().max_abs_diff(&i2) < 1e-15);
        let d = ComplexMatrix::from_real_diagonal(&[0.25, 0.0]).unwrap();
        let want = ComplexMatrix::from_real_diagonal(&[0.5, 0.0]).unwrap();
        assert!(sqrt_psd(&d).unwrap().max_abs_diff(&want) < 1e-15);
        let neg = ComplexMatrix::from_real_diagonal(&[1.0, -0.5]).unwrap();
        assert!(matches!(sqrt_psd(&neg), Err(Error::NotPositive(_))));
        assert_eq!(
            sqrt_psd(&ComplexMatrix::zeros(2).unwrap()).unwrap(),
            ComplexMatrix::zeros(2).unwrap()
        );
    }

    #[test]
    fn jacobi_matches_nalgebra() {
        use nalgebra::Matrix4;
        let vals: Vec<f64> = (0..32)
            .map(|k| ((k * 37 % 11) as f64 - 5.0) / 3.0)
            .collect();
        let rho = random_density(&vals);
        let ours = eigenvalues_hermitian(rho.matrix()).unwrap();
        let na = Matrix4::from_fn(|i, j| {
            let z = rho[(i, j)];
            nalgebra::Complex::new(z.re, z.im)
        });
        let mut theirs: Vec<f64> = na.symmetric_eigenvalues().iter().copied().collect();
        theirs.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in ours.iter().zip(&theirs) {
            assert!(close(*a, *b, 1e-13), "{ours:?} vs {theirs:?}");
        }
    }

    proptest! {
        #[test]
        fn partial_trace_preserves_trace(v in prop::collection::vec(-1.0f64..1.0, 32)) {
            prop_assume!(v.iter().any(|x| x.abs() > 1e-3));
            let rho = random_density(&v);
            for keep in [Subsystem::A, Subsystem::B] {
                let r = partial_trace(&rho, keep).unwrap();
                prop_assert!((r.trace().re - 1.0).abs() <= 1e-12);
            }
        }

        #[test]
        fn spectrum_sums_to_one_and_eigenvectors_solve(v in prop::collection::vec(-1.0f64..1.0, 32)) {
            prop_assume!(v.iter().any(|x| x.abs() > 1e-3));
            let rho = random_density(&v);
            let (vals, vecs) = eigh(rho.matrix()).unwrap();
            prop_assert!((vals.iter().sum::<f64>() - 1.0).abs() <= 1e-10);
            let d = rho.matrix().conjugated_by(&vecs);
            let want = ComplexMatrix::from_real_diagonal(&vals).unwrap();
            prop_assert!(d.max_abs_diff(&want) <= 1e-12);
        }

        #[test]
        fn entropy_invariant_under_basis_permutation(
            v in prop::collection::vec(-1.0f64..1.0, 32),
            perm in Just([0usize, 1, 2, 3]).prop_shuffle(),
        ) {
            prop_assume!(v.iter().any(|x| x.abs() > 1e-3));
            let rho = random_density(&v);
            let permuted = ComplexMatrix::from_fn(4, |i, j| rho[(perm[i], perm[j])]).unwrap();
            let permuted = DensityMatrix::new(permuted).unwrap();
            prop_assert!((rho.entropy() - permuted.entropy()).abs() <= 1e-12);
        }

        #[test]
        fn sqrt_squares_back(v in prop::collection::vec(-1.0f64..1.0, 8)) {
            let g = ComplexMatrix::from_fn(2, |i, j| c(v[4 * i + 2 * j], v[4 * i + 2 * j + 1])).unwrap();
            let m = g * g.adjoint();
            let s = sqrt_psd(&m).unwrap();
            prop_assert!((s * s).max_abs_diff(&m) <= 1e-10);
            prop_assert!(eigenvalues_hermitian(&s).unwrap()[1] >= -1e-12);
        }
    }
}
