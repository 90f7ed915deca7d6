//! Density operators and pure states: validation with clip-and-renormalize
//! repair, entropy and purity, and reproducible random generation.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{eigh, ComplexMatrix, Spectrum};

/// Default tolerance for density-operator invariants.
pub const DENSITY_TOL: f64 = 1e-10;

/// A trace-one positive-semidefinite Hermitian matrix.
///
/// Construction always goes through [`validate`], which repairs eigenvalues
/// in `[-tol, 0)` by clipping to zero and renormalizing the trace; the
/// magnitude of that repair is kept in `correction`.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    dim: usize,
    matrix: ComplexMatrix,
    correction: f64,
}

impl DensityOperator {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Largest entrywise change applied by validation repair.
    pub fn correction(&self) -> f64 {
        self.correction
    }

    /// Projector onto a pure state, as a density operator.
    pub fn from_pure(state: &PureState) -> Self {
        Self {
            dim: state.dim(),
            matrix: state.projector(),
            correction: 0.0,
        }
    }

    /// Diagonal density operator from a probability vector; the entries must
    /// already satisfy the invariants to `DENSITY_TOL`.
    pub fn from_probabilities(probs: &[f64]) -> Result<Self> {
        validate(&ComplexMatrix::diagonal(probs), DENSITY_TOL)
    }

    pub fn spectrum(&self) -> Spectrum {
        eigh(&self.matrix).expect("validated density operators are Hermitian")
    }
}

/// Serialized form: `{dim, entries: [[re, im], ...]}` row-major;
/// deserialization re-validates.
impl Serialize for DensityOperator {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            dim: usize,
            entries: Vec<[f64; 2]>,
        }
        Repr {
            dim: self.dim,
            entries: self.matrix.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DensityOperator {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            dim: usize,
            entries: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let entries = repr
            .entries
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        let matrix = ComplexMatrix::from_entries(repr.dim, repr.dim, entries)
            .map_err(serde::de::Error::custom)?;
        validate(&matrix, DENSITY_TOL).map_err(serde::de::Error::custom)
    }
}

/// A unit-norm complex vector.
#[derive(Debug, Clone)]
pub struct PureState {
    dim: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps an amplitude vector, requiring unit norm to 1e-12.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Domain("pure state needs at least one amplitude".into()));
        }
        let norm = norm2(&amplitudes);
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "pure state norm {norm} deviates from 1 beyond 1e-12"
            )));
        }
        Ok(Self {
            dim: amplitudes.len(),
            amplitudes,
        })
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm2(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Domain("cannot normalize a zero or non-finite vector".into()));
        }
        let scaled = amplitudes.into_iter().map(|z| z / norm).collect();
        Ok(Self {
            dim: 0,
            amplitudes: scaled,
        }
        .fix_dim())
    }

    fn fix_dim(mut self) -> Self {
        self.dim = self.amplitudes.len();
        self
    }

    /// Computational basis state |k>.
    pub fn basis_state(dim: usize, k: usize) -> Self {
        let mut amplitudes = vec![Complex64::ZERO; dim];
        amplitudes[k] = Complex64::ONE;
        Self { dim, amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// The rank-one projector |psi><psi|.
    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim, self.dim, |i, j| {
            self.amplitudes[i] * self.amplitudes[j].conj()
        })
    }
}

impl Serialize for PureState {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            dim: usize,
            amplitudes: Vec<[f64; 2]>,
        }
        Repr {
            dim: self.dim,
            amplitudes: self.amplitudes.iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PureState {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            amplitudes: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let amplitudes = repr
            .amplitudes
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        PureState::new(amplitudes).map_err(serde::de::Error::custom)
    }
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Validates a matrix as a density operator.
///
/// Eigenvalues in `[-tol, 0)` are clipped to zero and the trace renormalized;
/// an eigenvalue below `-tol`, a trace off by more than `tol`, or asymmetry
/// above `tol` is an error naming the violated invariant.
pub fn validate(rho: &ComplexMatrix, tol: f64) -> Result<DensityOperator> {
    if !rho.is_square() {
        return Err(Error::Shape(format!(
            "density operator must be square, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let asymmetry = rho.hermiticity_error();
    if asymmetry > tol {
        return Err(Error::InvalidDensity {
            invariant: "hermiticity",
            detail: format!("asymmetry {asymmetry:.3e} exceeds tolerance {tol:.3e}"),
        });
    }
    let sym = ComplexMatrix::from_fn(rho.rows(), rho.cols(), |i, j| {
        (rho.get(i, j) + rho.get(j, i).conj()) * 0.5
    });
    let spectrum = eigh(&sym)?;
    let eigenvalues = spectrum.eigenvalues();
    let min_eig = eigenvalues.last().copied().unwrap_or(0.0);
    if min_eig < -tol {
        return Err(Error::InvalidDensity {
            invariant: "positivity",
            detail: format!("minimum eigenvalue {min_eig:.3e} below -{tol:.3e}"),
        });
    }
    let trace: f64 = eigenvalues.iter().sum();
    if (trace - 1.0).abs() > tol {
        return Err(Error::InvalidDensity {
            invariant: "unit trace",
            detail: format!("trace {trace} deviates from 1 beyond {tol:.3e}"),
        });
    }

    let matrix = if min_eig < 0.0 {
        // Rebuild from the clipped, renormalized spectrum.
        let clipped: Vec<f64> = eigenvalues.iter().map(|&l| l.max(0.0)).collect();
        let total: f64 = clipped.iter().sum();
        let dim = sym.rows();
        ComplexMatrix::from_fn(dim, dim, |i, j| {
            (0..dim)
                .map(|k| {
                    spectrum.vectors().get(i, k)
                        * spectrum.vectors().get(j, k).conj()
                        * (clipped[k] / total)
                })
                .sum()
        })
    } else {
        sym.scale(Complex64::new(1.0 / trace, 0.0))
    };
    let correction = rho.max_abs_diff(&matrix);
    Ok(DensityOperator {
        dim: matrix.rows(),
        matrix,
        correction,
    })
}

/// Von Neumann entropy in bits: -sum_j lambda_j log2 lambda_j.
pub fn von_neumann_entropy(rho: &DensityOperator) -> f64 {
    let s: f64 = rho
        .spectrum()
        .eigenvalues()
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| -l * l.log2())
        .sum();
    s.max(0.0)
}

/// Purity Tr(rho^2); equals sum of squared entry magnitudes for Hermitian rho.
pub fn purity(rho: &DensityOperator) -> f64 {
    rho.matrix().entries().iter().map(|z| z.norm_sqr()).sum()
}

/// Seeded random density operator of the given rank: G G^dag normalized,
/// with G a dim x rank matrix of standard complex Gaussians.
pub fn random_density(dim: usize, rank: usize, seed: u64) -> Result<DensityOperator> {
    if rank == 0 || rank > dim {
        return Err(Error::Domain(format!(
            "rank {rank} out of range 1..={dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = StandardNormal;
    let g = ComplexMatrix::from_fn(dim, rank, |_, _| {
        Complex64::new(normal.sample(&mut rng), normal.sample(&mut rng))
    });
    let gram = g.matmul(&g.dagger()).expect("shapes agree");
    let trace = gram.trace().re;
    validate(&gram.scale(Complex64::new(1.0 / trace, 0.0)), DENSITY_TOL)
}

/// Seeded Haar-random pure state.
pub fn random_pure(dim: usize, seed: u64) -> PureState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = StandardNormal;
    let v: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(normal.sample(&mut rng), normal.sample(&mut rng)))
        .collect();
    PureState::normalized(v).expect("Gaussian vector is nonzero almost surely")
}

/// Thermal state exp(-beta h) / Z of a Hermitian Hamiltonian.
pub fn gibbs(h: &ComplexMatrix, beta: f64) -> Result<DensityOperator> {
    if !beta.is_finite() {
        return Err(Error::Domain("beta must be finite".into()));
    }
    let spectrum = eigh(h)?;
    let e_min = spectrum
        .eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = spectrum
        .eigenvalues()
        .iter()
        .map(|&e| (-beta * (e - e_min)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    let dim = h.rows();
    let matrix = ComplexMatrix::from_fn(dim, dim, |i, j| {
        (0..dim)
            .map(|k| {
                spectrum.vectors().get(i, k) * spectrum.vectors().get(j, k).conj() * (weights[k] / z)
            })
            .sum()
    });
    validate(&matrix, DENSITY_TOL)
}
