//! Dense matrices over arbitrary-precision integers and the graph matrices
//! built on them.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::combin::Combinations;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("index {index} out of range for dimension {len}", index = .index + 1)]
    IndexOutOfRange { index: usize, len: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// How one axis of a submatrix is chosen. Index lists are sets: order and
/// repeats in the input are ignored and the original order is kept.
#[derive(Debug, Clone, Copy)]
pub enum Select<'a> {
    All,
    Keep(&'a [usize]),
    Delete(&'a [usize]),
}

impl Select<'_> {
    fn resolve(&self, len: usize) -> Result<Vec<usize>, MatrixError> {
        let (list, keep) = match *self {
            Select::All => return Ok((0..len).collect()),
            Select::Keep(list) => (list, true),
            Select::Delete(list) => (list, false),
        };
        let mut mark = vec![!keep; len];
        for &index in list {
            if index >= len {
                return Err(MatrixError::IndexOutOfRange { index, len });
            }
            mark[index] = keep;
        }
        Ok((0..len).filter(|&k| mark[k]).collect())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from row slices; panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row.iter().map(|&x| x.into()));
        }
        IntMatrix { rows: rows.len(), cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.entries.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn submatrix(&self, rows: Select<'_>, cols: Select<'_>) -> Result<Self, MatrixError> {
        let r = rows.resolve(self.rows)?;
        let c = cols.resolve(self.cols)?;
        Ok(Self::from_fn(r.len(), c.len(), |i, j| self[(r[i], c[j])].clone()))
    }

    /// `M[I; J]`: rows `I`, columns `J`.
    pub fn keep(&self, rows: &[usize], cols: &[usize]) -> Result<Self, MatrixError> {
        self.submatrix(Select::Keep(rows), Select::Keep(cols))
    }

    /// `M(I; J)`: rows `I` and columns `J` removed.
    pub fn delete(&self, rows: &[usize], cols: &[usize]) -> Result<Self, MatrixError> {
        self.submatrix(Select::Delete(rows), Select::Delete(cols))
    }

    /// `M(I; J]`: rows `I` removed, columns `J` kept.
    pub fn delete_rows_keep_cols(&self, rows: &[usize], cols: &[usize]) -> Result<Self, MatrixError> {
        self.submatrix(Select::Delete(rows), Select::Keep(cols))
    }

    /// `M(i)`: the principal submatrix with row and column `i` removed.
    pub fn principal_deleted(&self, i: usize) -> Result<Self, MatrixError> {
        self.delete(&[i], &[i])
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = &pivot_row[k];
            for row in bottom.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let v = &row[j] * pivot - &lead * &pivot_row[j];
                    // exact: every intermediate is a minor of the input
                    row[j] = v / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = pivot.clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.shape(), rhs.shape());
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.shape(), rhs.shape());
        IntMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", (0..self.rows).map(|i| self.row(i).to_vec()).collect::<Vec<_>>())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn degree_matrix(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::from(g.degree(i)) } else { BigInt::zero() })
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.vertex_count();
    IntMatrix::from_fn(n, n, |i, j| BigInt::from(g.has_edge(i, j) as u8))
}

/// Vertex-by-edge 0/1 matrix; column `j` marks the endpoints of edge `j`.
pub fn incidence_matrix(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.vertex_count(), g.edge_count());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        m[(u, j)] = BigInt::one();
        m[(v, j)] = BigInt::one();
    }
    m
}

pub fn laplacian(g: &Graph) -> IntMatrix {
    &degree_matrix(g) - &adjacency_matrix(g)
}

pub fn signless_laplacian(g: &Graph) -> IntMatrix {
    &degree_matrix(g) + &adjacency_matrix(g)
}

/// Both sides of the Cauchy–Binet expansion for `k x n` matrices `a`, `b`:
/// `det(a bᵀ)` and the sum over `k`-subsets `S` of columns of
/// `det(a(;S]) det(b(;S])`.
pub fn cauchy_binet_check(a: &IntMatrix, b: &IntMatrix) -> Result<(BigInt, BigInt), MatrixError> {
    if a.shape() != b.shape() || a.rows() > a.cols() {
        return Err(MatrixError::ShapeMismatch { left: a.shape(), right: b.shape() });
    }
    let lhs = (a * &b.transpose()).det()?;
    let mut rhs = BigInt::zero();
    let mut subsets = Combinations::new(a.cols(), a.rows());
    while let Some(s) = subsets.next_subset() {
        let da = a.submatrix(Select::All, Select::Keep(s))?.det()?;
        if !da.is_zero() {
            rhs += da * b.submatrix(Select::All, Select::Keep(s))?.det()?;
        }
    }
    Ok((lhs, rhs))
}

/// Largest absolute entry, used to scale spectral tolerances.
pub fn max_abs_entry(m: &IntMatrix) -> BigInt {
    m.entries.iter().map(|x| x.abs()).max().unwrap_or_default()
}
