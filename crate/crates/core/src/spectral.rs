//! Floating-point spectra of `L` and `Q`, and the exact characteristic
//! polynomial of `Q`.
//!
//! Eigenvalues are only ever a cross-check here. Anything that can be stated
//! over the integers (minors, characteristic coefficients) is computed
//! exactly and compared against the floating-point side with a tolerance.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::{laplacian, signless_laplacian, IntMatrix, MatrixError};
use crate::subgraph::{count_spanning_trees_enum, EnumError};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Relative tolerance for products and sums of eigenvalues.
pub const PRODUCT_RELATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SpectrumKind {
    Laplacian,
    SignlessLaplacian,
    Other,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending.
    pub values: Vec<f64>,
    pub kind: SpectrumKind,
    pub tolerance: f64,
}

impl Spectrum {
    pub fn smallest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// Elementwise comparison of two ascending spectra.
    pub fn approx_eq(&self, other: &Spectrum) -> bool {
        let tol = self.tolerance.max(other.tolerance);
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| (a - b).abs() <= tol)
    }

    /// `e_k` of the eigenvalues: the sum of all products of `k` of them.
    pub fn elementary_symmetric(&self, k: usize) -> f64 {
        let mut e = vec![0.0; self.values.len() + 1];
        e[0] = 1.0;
        for (count, &x) in self.values.iter().enumerate() {
            for j in (1..=count + 1).rev() {
                e[j] += e[j - 1] * x;
            }
        }
        e.get(k).copied().unwrap_or(0.0)
    }
}

pub fn to_dmatrix(m: &IntMatrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), &m.to_f64())
}

pub fn eigenvalues(m: &IntMatrix, kind: SpectrumKind, tolerance: f64) -> Result<Spectrum, SpectralError> {
    if !m.is_symmetric() {
        return Err(SpectralError::NotSymmetric);
    }
    let mut values: Vec<f64> = if m.rows() == 0 {
        Vec::new()
    } else {
        SymmetricEigen::new(to_dmatrix(m)).eigenvalues.iter().copied().collect()
    };
    values.sort_by(f64::total_cmp);
    Ok(Spectrum { values, kind, tolerance })
}

pub fn laplacian_spectrum(g: &Graph) -> Spectrum {
    eigenvalues(&laplacian(g), SpectrumKind::Laplacian, DEFAULT_TOLERANCE).expect("L is symmetric")
}

pub fn signless_spectrum(g: &Graph) -> Spectrum {
    eigenvalues(&signless_laplacian(g), SpectrumKind::SignlessLaplacian, DEFAULT_TOLERANCE)
        .expect("Q is symmetric")
}

#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteSpectra {
    pub laplacian: Spectrum,
    pub signless: Spectrum,
    pub spectra_equal: bool,
    pub bipartite: bool,
}

impl BipartiteSpectra {
    /// The spectra agree exactly when the graph is bipartite.
    pub fn holds(&self) -> bool {
        self.spectra_equal == self.bipartite
    }
}

pub fn bipartite_spectral_check(g: &Graph) -> BipartiteSpectra {
    let laplacian = laplacian_spectrum(g);
    let signless = signless_spectrum(g);
    let spectra_equal = laplacian.approx_eq(&signless);
    BipartiteSpectra { laplacian, signless, spectra_equal, bipartite: g.is_bipartite() }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmallestSignless {
    pub smallest: f64,
    /// Gap between the two smallest eigenvalues (infinite for `n < 2`).
    pub gap: f64,
    pub near_zero: bool,
    pub bipartite: bool,
}

impl SmallestSignless {
    /// For a connected graph: smallest eigenvalue is 0 iff bipartite, and
    /// then 0 is simple.
    pub fn holds(&self, tolerance: f64) -> bool {
        self.near_zero == self.bipartite && (!self.near_zero || self.gap > tolerance)
    }
}

pub fn smallest_signless_eigenvalue(g: &Graph) -> SmallestSignless {
    let s = signless_spectrum(g);
    let smallest = s.smallest().unwrap_or(0.0);
    let gap = if s.values.len() >= 2 { s.values[1] - s.values[0] } else { f64::INFINITY };
    SmallestSignless { smallest, gap, near_zero: smallest.abs() <= s.tolerance, bipartite: g.is_bipartite() }
}

/// Three evaluations of the spanning-tree count.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeCountForms {
    pub enumerated: u64,
    /// `det(L(i))` for every vertex `i`.
    pub minors: Vec<BigInt>,
    /// `μ₂ ··· μₙ / n`.
    pub eigen: f64,
}

impl TreeCountForms {
    pub fn holds(&self) -> bool {
        let t = BigInt::from(self.enumerated);
        self.minors.iter().all(|d| *d == t) && relative_close(self.eigen, self.enumerated as f64)
    }
}

pub fn relative_close(approx: f64, exact: f64) -> bool {
    (approx - exact).abs() <= PRODUCT_RELATIVE_TOLERANCE * exact.abs().max(1.0)
}

pub fn mtt_eigen_form(g: &Graph) -> Result<TreeCountForms, SpectralError> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(EnumError::Disconnected.into());
    }
    let enumerated = count_spanning_trees_enum(g)?;
    let l = laplacian(g);
    let minors = (0..n).map(|i| l.principal_deleted(i).and_then(|m| m.det())).collect::<Result<_, _>>()?;
    let spectrum = laplacian_spectrum(g);
    let eigen = spectrum.values.iter().skip(1).product::<f64>() / n as f64;
    Ok(TreeCountForms { enumerated, minors, eigen })
}

/// Coefficients `a₁..aₙ` of `det(xI - M) = xⁿ + a₁xⁿ⁻¹ + … + aₙ` by
/// Faddeev–LeVerrier. Every division is exact over the integers.
pub fn charpoly_coefficients(m: &IntMatrix) -> Result<Vec<BigInt>, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut coeffs = Vec::with_capacity(n);
    let mut aux = IntMatrix::zeros(n, n);
    let mut prev = BigInt::one();
    for k in 1..=n {
        aux = &(m * &aux) + &scaled_identity(n, &prev);
        let t = (m * &aux).trace();
        let a = -(t / BigInt::from(k));
        coeffs.push(a.clone());
        prev = a;
    }
    Ok(coeffs)
}

fn scaled_identity(n: usize, c: &BigInt) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { BigInt::zero() })
}

/// Exact characteristic-coefficient identities of `Q`: `a₁ = -2m`,
/// `a₂ = 2m² - m - ½Σdᵢ²` and `aₙ = (-1)ⁿ det(Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharpolyCheck {
    pub coefficients: Vec<BigInt>,
    /// Observed `(a₁, a₂, aₙ)`; missing coefficients are zero.
    pub observed: [BigInt; 3],
    pub expected: [BigInt; 3],
}

impl CharpolyCheck {
    pub fn holds(&self) -> bool {
        self.observed == self.expected
    }
}

pub fn charpoly_check(g: &Graph) -> CharpolyCheck {
    let q = signless_laplacian(g);
    let coefficients = charpoly_coefficients(&q).expect("Q is square");
    let n = g.vertex_count();
    let m = BigInt::from(g.edge_count());
    let sum_sq: BigInt = (0..n).map(|v| BigInt::from(g.degree(v) * g.degree(v))).sum();
    let det = q.det().expect("Q is square");
    let get = |k: usize| if k >= 1 && k <= n { coefficients[k - 1].clone() } else { BigInt::zero() };
    // Σdᵢ² = Σdᵢ (mod 2) = 2m (mod 2), so the halving is exact
    let a2 = BigInt::from(2) * &m * &m - &m - sum_sq / 2;
    let an = if n.is_multiple_of(2) { det } else { -det };
    let expected = [
        if n >= 1 { -BigInt::from(2) * &m } else { BigInt::zero() },
        if n >= 2 { a2 } else { BigInt::zero() },
        if n >= 1 { an } else { BigInt::zero() },
    ];
    CharpolyCheck { observed: [get(1), get(2), get(n)], expected, coefficients }
}

/// `Σᵢ det(Q(i))` exactly and `e_{n-1}(λ)` from the spectrum.
pub fn minor_sum_vs_eigen(g: &Graph) -> (BigInt, f64) {
    let q = signless_laplacian(g);
    let n = g.vertex_count();
    let exact = (0..n).map(|i| q.principal_deleted(i).unwrap().det().unwrap()).sum();
    let eigen = signless_spectrum(g).elementary_symmetric(n.saturating_sub(1));
    (exact, eigen)
}

pub fn bigint_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
