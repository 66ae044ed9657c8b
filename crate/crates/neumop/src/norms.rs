//! Diagonally weighted vector norms, induced matrix norms, logarithmic
//! norms, and weak pairings for the l1, l2, and linf families.
//!
//! Conventions: the l1 family weighs components as `||[eta] x||_1`, the linf
//! family as `||[eta]^{-1} x||_inf`. The l2 family carries no weights and is
//! kept as the Euclidean baseline. The weak pairing generalizes the inner
//! product; it is compatible with its norm (`pairing(x, x) = ||x||^2`) and
//! satisfies Lumer's equality `mu(A) = sup_x pairing(Ax, x) / ||x||^2`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Relative tolerance for membership in the linf argmax index set of a
/// floating-point vector. Exact ties pass trivially.
const ARGMAX_REL_TOL: f64 = 1e-12;

/// Strictly positive per-coordinate weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    eta: DVector<f64>,
}

impl WeightVector {
    pub fn new(eta: DVector<f64>) -> Result<Self> {
        if eta.is_empty() {
            return Err(Error::param("weight vector must be nonempty"));
        }
        if eta.iter().any(|&w| !(w > 0.0) || !w.is_finite()) {
            return Err(Error::param("weights must be strictly positive and finite"));
        }
        Ok(WeightVector { eta })
    }

    pub fn from_slice(eta: &[f64]) -> Result<Self> {
        Self::new(DVector::from_row_slice(eta))
    }

    pub fn ones(n: usize) -> Self {
        WeightVector {
            eta: DVector::from_element(n, 1.0),
        }
    }

    pub fn len(&self) -> usize {
        self.eta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eta.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.eta.iter().all(|&w| w == 1.0)
    }

    pub fn max(&self) -> f64 {
        self.eta.max()
    }

    pub fn min(&self) -> f64 {
        self.eta.min()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.eta[i]
    }

    pub fn as_vector(&self) -> &DVector<f64> {
        &self.eta
    }
}

/// The three norm families the library supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormFamily {
    L1,
    L2,
    LInf,
}

impl NormFamily {
    /// True for the diagonally weighted l1/linf geometries, the ones with
    /// the improved step-size ranges and contraction factors.
    pub fn is_diagonal(self) -> bool {
        matches!(self, NormFamily::L1 | NormFamily::LInf)
    }
}

impl std::fmt::Display for NormFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormFamily::L1 => write!(f, "l1"),
            NormFamily::L2 => write!(f, "l2"),
            NormFamily::LInf => write!(f, "linf"),
        }
    }
}

/// A norm family together with its weights; selects the vector norm, induced
/// matrix norm, log norm, and weak pairing.
#[derive(Debug, Clone, PartialEq)]
pub struct NormSpec {
    family: NormFamily,
    weights: WeightVector,
}

impl NormSpec {
    pub fn new(family: NormFamily, weights: WeightVector) -> Result<Self> {
        if family == NormFamily::L2 && !weights.is_unit() {
            return Err(Error::param("the l2 family supports only unit weights"));
        }
        Ok(NormSpec { family, weights })
    }

    pub fn l1(weights: WeightVector) -> Self {
        NormSpec {
            family: NormFamily::L1,
            weights,
        }
    }

    pub fn linf(weights: WeightVector) -> Self {
        NormSpec {
            family: NormFamily::LInf,
            weights,
        }
    }

    /// Unweighted linf norm in dimension `n`.
    pub fn linf_unit(n: usize) -> Self {
        Self::linf(WeightVector::ones(n))
    }

    pub fn l1_unit(n: usize) -> Self {
        Self::l1(WeightVector::ones(n))
    }

    pub fn l2(n: usize) -> Self {
        NormSpec {
            family: NormFamily::L2,
            weights: WeightVector::ones(n),
        }
    }

    pub fn family(&self) -> NormFamily {
        self.family
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    fn check_vector(&self, x: &DVector<f64>) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::dim(self.dim(), x.len()));
        }
        Ok(())
    }

    fn check_matrix(&self, a: &DMatrix<f64>) -> Result<()> {
        if a.nrows() != a.ncols() {
            return Err(Error::dim(a.nrows(), a.ncols()));
        }
        if a.nrows() != self.dim() {
            return Err(Error::dim(self.dim(), a.nrows()));
        }
        Ok(())
    }

    /// Weighted vector norm. Zero exactly when `x` is zero.
    pub fn vector_norm(&self, x: &DVector<f64>) -> Result<f64> {
        self.check_vector(x)?;
        let eta = self.weights.as_vector();
        Ok(match self.family {
            NormFamily::L1 => x.iter().zip(eta.iter()).map(|(xi, w)| w * xi.abs()).sum(),
            NormFamily::L2 => x.norm(),
            NormFamily::LInf => x
                .iter()
                .zip(eta.iter())
                .map(|(xi, w)| xi.abs() / w)
                .fold(0.0, f64::max),
        })
    }

    /// Induced operator norm: weighted column sums for l1, weighted row sums
    /// for linf, largest singular value for l2.
    pub fn induced_matrix_norm(&self, a: &DMatrix<f64>) -> Result<f64> {
        self.check_matrix(a)?;
        let eta = self.weights.as_vector();
        let n = self.dim();
        Ok(match self.family {
            NormFamily::L1 => (0..n)
                .map(|j| (0..n).map(|i| eta[i] / eta[j] * a[(i, j)].abs()).sum())
                .fold(0.0, f64::max),
            NormFamily::L2 => spectral_norm(a),
            NormFamily::LInf => (0..n)
                .map(|i| (0..n).map(|j| eta[j] / eta[i] * a[(i, j)].abs()).sum())
                .fold(0.0, f64::max),
        })
    }

    /// Logarithmic norm (matrix measure); may be negative.
    ///
    /// l1: `max_j (a_jj + sum_{i != j} |a_ij| eta_i / eta_j)`,
    /// linf: `max_i (a_ii + sum_{j != i} |a_ij| eta_j / eta_i)`,
    /// l2: `lambda_max(A + A^T) / 2`.
    pub fn log_norm(&self, a: &DMatrix<f64>) -> Result<f64> {
        self.check_matrix(a)?;
        let eta = self.weights.as_vector();
        let n = self.dim();
        Ok(match self.family {
            NormFamily::L1 => (0..n)
                .map(|j| {
                    a[(j, j)]
                        + (0..n)
                            .filter(|&i| i != j)
                            .map(|i| eta[i] / eta[j] * a[(i, j)].abs())
                            .sum::<f64>()
                })
                .fold(f64::NEG_INFINITY, f64::max),
            NormFamily::L2 => {
                let sym = (a + a.transpose()) * 0.5;
                sym.symmetric_eigen().eigenvalues.max()
            }
            NormFamily::LInf => (0..n)
                .map(|i| {
                    a[(i, i)]
                        + (0..n)
                            .filter(|&j| j != i)
                            .map(|j| eta[j] / eta[i] * a[(i, j)].abs())
                            .sum::<f64>()
                })
                .fold(f64::NEG_INFINITY, f64::max),
        })
    }

    /// Weak pairing of `x` against `y`.
    ///
    /// l1: `||y||_{1,[eta]} * sign(y)^T [eta] x`;
    /// linf: `max_{i in argmax |y_i|/eta_i} eta_i^{-2} y_i x_i`;
    /// l2: the inner product.
    pub fn weak_pairing(&self, x: &DVector<f64>, y: &DVector<f64>) -> Result<f64> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let eta = self.weights.as_vector();
        Ok(match self.family {
            NormFamily::L1 => {
                let norm_y = self.vector_norm(y)?;
                let signed: f64 = x
                    .iter()
                    .zip(y.iter())
                    .zip(eta.iter())
                    .map(|((xi, yi), w)| sign(*yi) * w * xi)
                    .sum();
                norm_y * signed
            }
            NormFamily::L2 => x.dot(y),
            NormFamily::LInf => {
                let scaled_max = y
                    .iter()
                    .zip(eta.iter())
                    .map(|(yi, w)| yi.abs() / w)
                    .fold(0.0, f64::max);
                let threshold = scaled_max * (1.0 - ARGMAX_REL_TOL);
                let mut best = f64::NEG_INFINITY;
                for i in 0..y.len() {
                    if y[i].abs() / eta[i] >= threshold {
                        best = best.max(y[i] * x[i] / (eta[i] * eta[i]));
                    }
                }
                best
            }
        })
    }
}

/// The sign map with `sign(0) = 0`.
pub fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Largest singular value, via the symmetric eigendecomposition of `A^T A`.
fn spectral_norm(a: &DMatrix<f64>) -> f64 {
    let gram = a.transpose() * a;
    gram.symmetric_eigen().eigenvalues.max().max(0.0).sqrt()
}

/// For the unweighted linf family, a unit vector attaining Lumer's equality
/// `pairing(Ax, x) = mu_inf(A)` : pick the row `i` attaining the log norm,
/// set `x_i = 1` and `x_j = sign(a_ij)` elsewhere (zero entries get +1).
pub fn linf_lumer_witness(a: &DMatrix<f64>) -> DVector<f64> {
    let n = a.nrows();
    let row = (0..n)
        .max_by(|&p, &q| {
            let term = |i: usize| {
                a[(i, i)]
                    + (0..n)
                        .filter(|&j| j != i)
                        .map(|j| a[(i, j)].abs())
                        .sum::<f64>()
            };
            term(p).total_cmp(&term(q))
        })
        .expect("nonempty matrix");
    DVector::from_fn(n, |j, _| {
        if j == row {
            1.0
        } else if a[(row, j)] < 0.0 {
            -1.0
        } else {
            1.0
        }
    })
}
