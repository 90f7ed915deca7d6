//! Dense complex linear algebra: tensor products, partial traces, Hermitian
//! eigendecomposition, and the trace norm.
//!
//! Everything here operates on row-major [`ComplexMatrix`] values. The
//! eigendecomposition is deterministic: eigenvalues are reported in
//! non-increasing order, degenerate clusters are ordered by a fixed tie rule,
//! and each eigenvector carries a fixed global phase, so repeated runs build
//! identical decompositions.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance used when enforcing Hermiticity of inputs.
pub const HERMITICITY_TOL: f64 = 1e-10;

/// Eigenvalue gap below which two eigenvalues are treated as degenerate for
/// ordering purposes.
pub const DEGENERACY_GAP: f64 = 1e-9;

/// Largest row or column count a `kron` result may have by default.
pub const DEFAULT_MAX_KRON_DIM: usize = 1 << 16;

/// Which tensor factor `partial_trace` keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    First,
    Second,
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from a row-major entry list.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("rows and cols must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "entry count {} does not match {}x{}",
                entries.len(),
                rows,
                cols
            )));
        }
        let m = Self {
            rows,
            cols,
            entries,
        };
        m.check_finite()?;
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::ONE;
        }
        m
    }

    /// Diagonal matrix from real entries.
    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut m = Self::zeros(dim, dim);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * dim + i] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.cols + col] = value;
    }

    fn check_finite(&self) -> Result<()> {
        for (idx, z) in self.entries.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite {
                    row: idx / self.cols,
                    col: idx % self.cols,
                });
            }
        }
        Ok(())
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        // i-k-j order keeps the inner loop contiguous in both operands.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[i * self.cols + k];
                if a == Complex64::ZERO {
                    continue;
                }
                let row_b = &other.entries[k * other.cols..(k + 1) * other.cols];
                let row_out = &mut out.entries[i * other.cols..(i + 1) * other.cols];
                for (o, &b) in row_out.iter_mut().zip(row_b) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot combine {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.rows, other.rows);
        debug_assert_eq!(self.cols, other.cols);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest deviation from Hermitian symmetry, max over (i, j) of
    /// |m[i,j] - conj(m[j,i])|.
    pub fn hermiticity_error(&self) -> f64 {
        debug_assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Largest entrywise deviation of `self† self` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let gram = self
            .dagger()
            .matmul(self)
            .expect("square product always well-formed");
        gram.max_abs_diff(&Self::identity(self.cols))
    }

    /// Returns the symmetrized matrix (m + m†)/2, rejecting asymmetry above
    /// `HERMITICITY_TOL`.
    pub fn enforce_hermitian(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "Hermitian matrix must be square, got {}x{}",
                self.rows, self.cols
            )));
        }
        let asymmetry = self.hermiticity_error();
        if asymmetry > HERMITICITY_TOL {
            return Err(Error::NotHermitian {
                asymmetry,
                tol: HERMITICITY_TOL,
            });
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * 0.5
        }))
    }

    fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j))
    }
}

/// Serialized form: `{rows, cols, entries: [[re, im], ...]}` row-major.
impl Serialize for ComplexMatrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            entries: Vec<[f64; 2]>,
        }
        Repr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rows: usize,
            cols: usize,
            entries: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let entries = repr
            .entries
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        ComplexMatrix::from_entries(repr.rows, repr.cols, entries).map_err(serde::de::Error::custom)
    }
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in
/// non-increasing order, matching orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    vectors: ComplexMatrix,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// The j-th eigenvector (column j of the vector matrix).
    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        (0..self.vectors.rows())
            .map(|i| self.vectors.get(i, j))
            .collect()
    }

    /// Matrix whose column j is the eigenvector for eigenvalue j.
    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Rebuilds the source matrix as sum_j lambda_j v_j v_j^dagger.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.dim();
        ComplexMatrix::from_fn(d, d, |i, j| {
            (0..d)
                .map(|k| {
                    self.vectors.get(i, k) * self.vectors.get(j, k).conj() * self.eigenvalues[k]
                })
                .sum()
        })
    }
}

/// Kronecker product with the default size cap.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    kron_with_limit(a, b, DEFAULT_MAX_KRON_DIM)
}

/// Kronecker product; errors if either result dimension exceeds `max_dim`.
pub fn kron_with_limit(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    max_dim: usize,
) -> Result<ComplexMatrix> {
    let rows = a.rows().checked_mul(b.rows()).unwrap_or(usize::MAX);
    let cols = a.cols().checked_mul(b.cols()).unwrap_or(usize::MAX);
    for dim in [rows, cols] {
        if dim > max_dim {
            return Err(Error::SizeLimit { dim, max: max_dim });
        }
    }
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let aij = a.get(i, j);
            if aij == Complex64::ZERO {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, aij * b.get(k, l));
                }
            }
        }
    }
    Ok(out)
}

/// Partial trace of a square matrix on a bipartite space of dimension
/// `dim_first * dim_second`, keeping the requested factor.
pub fn partial_trace(
    joint: &ComplexMatrix,
    dim_first: usize,
    dim_second: usize,
    keep: Keep,
) -> Result<ComplexMatrix> {
    let dim = dim_first * dim_second;
    if !joint.is_square() || joint.rows() != dim {
        return Err(Error::Shape(format!(
            "partial trace expects a {dim}x{dim} matrix, got {}x{}",
            joint.rows(),
            joint.cols()
        )));
    }
    match keep {
        Keep::First => {
            let mut out = ComplexMatrix::zeros(dim_first, dim_first);
            for i in 0..dim_first {
                for j in 0..dim_first {
                    let mut acc = Complex64::ZERO;
                    for k in 0..dim_second {
                        acc += joint.get(i * dim_second + k, j * dim_second + k);
                    }
                    out.set(i, j, acc);
                }
            }
            Ok(out)
        }
        Keep::Second => {
            let mut out = ComplexMatrix::zeros(dim_second, dim_second);
            for k in 0..dim_second {
                for l in 0..dim_second {
                    let mut acc = Complex64::ZERO;
                    for i in 0..dim_first {
                        acc += joint.get(i * dim_second + k, i * dim_second + l);
                    }
                    out.set(k, l, acc);
                }
            }
            Ok(out)
        }
    }
}

/// Hermitian eigendecomposition with deterministic ordering.
///
/// Inputs with asymmetry below [`HERMITICITY_TOL`] are symmetrized first;
/// anything worse is rejected. Eigenvalues come back in non-increasing order.
/// Within a degenerate cluster (gap below [`DEGENERACY_GAP`]) eigenvectors are
/// ordered by the index of their largest-magnitude component, and each vector
/// is rephased so that component is real and positive.
pub fn eigh(h: &ComplexMatrix) -> Result<Spectrum> {
    let sym = h.enforce_hermitian()?;
    let dim = sym.rows();
    let eig = sym.to_nalgebra().symmetric_eigen();

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .expect("eigenvalues are finite")
    });

    let mut eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut columns: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&k| eig.eigenvectors.column(k).iter().copied().collect())
        .collect();

    // Fix a global phase per vector: largest-magnitude component real positive.
    let mut anchors = Vec::with_capacity(dim);
    for col in &mut columns {
        let anchor = argmax_abs(col);
        let z = col[anchor];
        if z.norm() > 0.0 {
            let phase = z.conj() / z.norm();
            for c in col.iter_mut() {
                *c *= phase;
            }
        }
        anchors.push(anchor);
    }

    // Order degenerate clusters by the anchor index.
    let mut start = 0;
    while start < dim {
        let mut end = start + 1;
        while end < dim && (eigenvalues[end - 1] - eigenvalues[end]).abs() < DEGENERACY_GAP {
            end += 1;
        }
        if end - start > 1 {
            let mut idx: Vec<usize> = (start..end).collect();
            idx.sort_by_key(|&k| anchors[k]);
            let vals: Vec<f64> = idx.iter().map(|&k| eigenvalues[k]).collect();
            let cols: Vec<Vec<Complex64>> = idx.iter().map(|&k| columns[k].clone()).collect();
            eigenvalues[start..end].copy_from_slice(&vals);
            columns[start..end].clone_from_slice(&cols);
        }
        start = end;
    }

    let vectors = ComplexMatrix::from_fn(dim, dim, |i, j| columns[j][i]);
    Ok(Spectrum {
        eigenvalues,
        vectors,
    })
}

fn argmax_abs(v: &[Complex64]) -> usize {
    let mut best = 0;
    let mut best_mag = v[0].norm_sqr();
    for (i, z) in v.iter().enumerate().skip(1) {
        let mag = z.norm_sqr();
        if mag > best_mag {
            best = i;
            best_mag = mag;
        }
    }
    best
}

/// Quantum total-variation distance between Hermitian operators: half the
/// sum of the absolute eigenvalues of the difference.
pub fn trace_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square() {
        return Err(Error::Shape(format!(
            "trace distance needs equal square shapes, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut diff = a.sub(b)?.enforce_hermitian()?;
    // Canonical sign so that (a, b) and (b, a) run the identical computation.
    if let Some(z) = diff.entries().iter().find(|z| z.re != 0.0 || z.im != 0.0) {
        if z.re < 0.0 || (z.re == 0.0 && z.im < 0.0) {
            diff = diff.scale(-Complex64::ONE);
        }
    }
    let dim = diff.rows();
    let abs_sum = match dim {
        1 => diff.get(0, 0).re.abs(),
        2 => {
            // Closed form for 2x2 Hermitian eigenvalues.
            let a00 = diff.get(0, 0).re;
            let a11 = diff.get(1, 1).re;
            let off = diff.get(0, 1).norm_sqr();
            let mid = 0.5 * (a00 + a11);
            let rad = (0.25 * (a00 - a11).powi(2) + off).sqrt();
            (mid + rad).abs() + (mid - rad).abs()
        }
        _ => eigh(&diff)?.eigenvalues().iter().map(|l| l.abs()).sum(),
    };
    Ok(0.5 * abs_sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kron_identity_case() {
        let i2 = ComplexMatrix::identity(2);
        let out = kron(&i2, &i2).unwrap();
        assert_eq!(out, ComplexMatrix::identity(4));
    }

    #[test]
    fn kron_projector_product() {
        let p = ComplexMatrix::diagonal(&[1.0, 0.0]);
        let out = kron(&p, &p).unwrap();
        assert_eq!(out, ComplexMatrix::diagonal(&[1.0, 0.0, 0.0, 0.0]));
    }

    #[test]
    fn kron_entrywise_product() {
        let a = ComplexMatrix::diagonal(&[0.6, 0.4]);
        let b = ComplexMatrix::diagonal(&[0.9, 0.1]);
        let out = kron(&a, &b).unwrap();
        let expected = ComplexMatrix::diagonal(&[0.54, 0.06, 0.36, 0.04]);
        assert!(out.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn kron_size_limit() {
        let a = ComplexMatrix::identity(300);
        let err = kron_with_limit(&a, &a, 1 << 16).unwrap_err();
        assert!(matches!(err, Error::SizeLimit { .. }));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho_s = ComplexMatrix::diagonal(&[0.7, 0.3]);
        let rho_e = ComplexMatrix::diagonal(&[0.5, 0.25, 0.25]);
        let joint = kron(&rho_s, &rho_e).unwrap();
        let reduced = partial_trace(&joint, 2, 3, Keep::First).unwrap();
        assert!(reduced.max_abs_diff(&rho_s) < 1e-15);
        let reduced_e = partial_trace(&joint, 2, 3, Keep::Second).unwrap();
        assert!(reduced_e.max_abs_diff(&rho_e) < 1e-15);
    }

    #[test]
    fn partial_trace_maximally_mixed() {
        let joint = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        let reduced = partial_trace(&joint, 2, 2, Keep::First).unwrap();
        assert!(reduced.max_abs_diff(&ComplexMatrix::identity(2).scale(c(0.5, 0.0))) < 1e-15);
    }

    #[test]
    fn partial_trace_bell_state() {
        // |Phi+> = (|00> + |11>)/sqrt(2)
        let mut proj = ComplexMatrix::zeros(4, 4);
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                proj.set(i, j, c(0.5, 0.0));
            }
        }
        let reduced = partial_trace(&proj, 2, 2, Keep::First).unwrap();
        assert!(reduced.max_abs_diff(&ComplexMatrix::identity(2).scale(c(0.5, 0.0))) < 1e-15);
    }

    #[test]
    fn partial_trace_shape_error() {
        let joint = ComplexMatrix::identity(5);
        assert!(matches!(
            partial_trace(&joint, 2, 2, Keep::First),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn eigh_diagonal_reorder() {
        let s = eigh(&ComplexMatrix::diagonal(&[0.1, 0.9])).unwrap();
        assert_eq!(s.eigenvalues(), &[0.9, 0.1]);
        // Eigenvector of 0.9 is e_1, rephased positive.
        assert!((s.vector(0)[1] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn eigh_degenerate_identity() {
        let s = eigh(&ComplexMatrix::identity(3).scale(c(1.0 / 3.0, 0.0))).unwrap();
        for l in s.eigenvalues() {
            assert!((l - 1.0 / 3.0).abs() < 1e-14);
        }
        // Tie rule orders the degenerate cluster as e_0, e_1, e_2.
        let id = ComplexMatrix::identity(3);
        assert!(s.vectors().max_abs_diff(&id) < 1e-12);
    }

    #[test]
    fn eigh_two_by_two_closed_form() {
        let h = ComplexMatrix::from_fn(2, 2, |_, _| c(0.5, 0.0));
        let s = eigh(&h).unwrap();
        assert!((s.eigenvalues()[0] - 1.0).abs() < 1e-12);
        assert!(s.eigenvalues()[1].abs() < 1e-12);
        let v = s.vector(0);
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((v[0] - c(inv_sqrt2, 0.0)).norm() < 1e-12);
        assert!((v[1] - c(inv_sqrt2, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn eigh_rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m.set(0, 1, c(0.5, 0.0));
        assert!(matches!(eigh(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn eigh_reconstruction_random() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for dim in [3usize, 8, 17] {
            let g = ComplexMatrix::from_fn(dim, dim, |_, _| {
                c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            });
            let h = g.add(&g.dagger()).unwrap().scale(c(0.5, 0.0));
            let s = eigh(&h).unwrap();
            assert!(s.reconstruct().max_abs_diff(&h) < 1e-10);
            assert!(s.vectors().unitarity_error() < 1e-10);
            for w in s.eigenvalues().windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn trace_distance_identical() {
        let rho = ComplexMatrix::diagonal(&[0.3, 0.7]);
        assert_eq!(trace_distance(&rho, &rho).unwrap(), 0.0);
    }

    #[test]
    fn trace_distance_orthogonal_pure() {
        let a = ComplexMatrix::diagonal(&[1.0, 0.0]);
        let b = ComplexMatrix::diagonal(&[0.0, 1.0]);
        assert!((trace_distance(&a, &b).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn trace_distance_diagonal_case() {
        let a = ComplexMatrix::diagonal(&[0.9, 0.1]);
        let b = ComplexMatrix::diagonal(&[0.5, 0.5]);
        assert!((trace_distance(&a, &b).unwrap() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn trace_distance_symmetric_exactly() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for dim in [2usize, 3, 5] {
            let g = ComplexMatrix::from_fn(dim, dim, |_, _| {
                c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            });
            let a = g.add(&g.dagger()).unwrap().scale(c(0.5, 0.0));
            let h = ComplexMatrix::from_fn(dim, dim, |_, _| {
                c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            });
            let b = h.add(&h.dagger()).unwrap().scale(c(0.5, 0.0));
            let d_ab = trace_distance(&a, &b).unwrap();
            let d_ba = trace_distance(&b, &a).unwrap();
            assert_eq!(d_ab, d_ba);
        }
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = ComplexMatrix::from_fn(2, 3, |i, j| c(i as f64, j as f64));
        let text = serde_json::to_string(&m).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn matrix_rejects_non_finite() {
        let err =
            ComplexMatrix::from_entries(1, 2, vec![c(1.0, 0.0), c(f64::NAN, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NonFinite { row: 0, col: 1 }));
    }
}
