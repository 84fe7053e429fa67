use std::fmt;

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`FpMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Full solution set of `m x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<u32>,
    pub kernel: Subspace,
}

impl FpMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from raw residues; entries are reduced mod p.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        let p = field.modulus();
        let data = data.into_iter().map(|x| x % p).collect();
        FpMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Build from signed integer rows. Ragged input is an error.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(FpMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose rows are the given vectors (all of length `cols`).
    pub fn from_row_vectors(field: Field, cols: usize, vectors: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols, "row vector length mismatch");
            data.extend_from_slice(v);
        }
        FpMatrix {
            field,
            rows: vectors.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column vector length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.modulus();
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }
    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }
    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_field(&self, other: &FpMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        Ok(())
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Matrix product. Panics on shape or modulus mismatch.
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        self.try_mul(other).expect("matrix product")
    }

    pub fn try_mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.field.modulus() as u64;
        let n = other.cols;
        let mut acc = vec![0u64; n];
        let mut out = Vec::with_capacity(self.rows * n);
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * n..(k + 1) * n];
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot += a * b as u64;
                }
            }
            out.extend(acc.iter().map(|&x| (x % p) as u32));
        }
        Ok(FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: n,
            data: out,
        })
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        self.with_data(data)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: u32, other: &FpMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    fn with_data(&self, data: Vec<u32>) -> FpMatrix {
        FpMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        FpMatrix {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &FpMatrix) -> FpMatrix {
        let mut m = Self::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * m.cols + j] = self.get(i, j);
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.data[(self.rows + i) * m.cols + self.cols + j] = other.get(i, j);
            }
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &FpMatrix) -> FpMatrix {
        let f = self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.data[(i * other.rows + k) * cols + j * other.cols + l] =
                            f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        m
    }

    /// Select the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        let mut m = Self::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.data[i * cols.len() + jj] = self.get(i, j);
            }
        }
        m
    }

    /// Reduced row echelon form, pivot columns and rank.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.modulus();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            if inv != 1 {
                for j in c..cols {
                    let x = &mut self.data[r * cols + j];
                    *x = f.mul(*x, inv);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[c];
                if factor == 0 {
                    return;
                }
                let neg = (p - factor) as u64;
                for j in c..cols {
                    if prow[j] != 0 {
                        row[j] = ((row[j] as u64 + neg * prow[j] as u64) % p as u64) as u32;
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let id = FpMatrix::identity(self.field, self.rows);
        let x = self.solve_matrix(&id)?;
        (self.mul(&x) == id).then_some(x)
    }

    /// Row space as a canonical subspace of `F_p^cols`.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }

    /// Column space as a canonical subspace of `F_p^rows`.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }

    /// `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace {
        self.row_space().perp()
    }

    /// Solve `self · x = b`; `None` iff `b` is outside the column space.
    pub fn solve_affine(&self, b: &[u32]) -> Option<AffineSolution> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let bcol = FpMatrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        let x = self.solve_matrix(&bcol)?;
        Some(AffineSolution {
            particular: x.column(0),
            kernel: self.kernel(),
        })
    }

    /// One solution `X` of `self · X = rhs`, or `None` when inconsistent.
    pub fn solve_matrix(&self, rhs: &FpMatrix) -> Option<FpMatrix> {
        assert_eq!(rhs.rows, self.rows, "right-hand side row mismatch");
        let n = self.cols;
        let aug = self.hstack(rhs);
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = FpMatrix::zeros(self.field, n, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[c * rhs.cols + j] = matrix.get(r, n + j);
            }
        }
        Some(x)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FpMatrix {}x{} over {} [",
            self.rows, self.cols, self.field
        )?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = FpMatrix::identity(f(5), 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_zero_has_no_pivots() {
        let z = FpMatrix::zeros(f(2), 2, 4);
        let r = z.rref();
        assert!(r.matrix.is_zero());
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = FpMatrix::from_rows(f(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        let r = m.rref();
        assert_eq!(
            r.matrix,
            FpMatrix::from_rows(f(5), &[vec![1, 2], vec![0, 0]]).unwrap()
        );
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FpMatrix::identity(f(3), 3).kernel().dim(), 0);
        let k = FpMatrix::zeros(f(2), 2, 3).kernel();
        assert_eq!(k.dim(), 3);
        let k = FpMatrix::from_rows(f(2), &[vec![1, 1]]).unwrap().kernel();
        assert_eq!(k.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn solve_affine_examples() {
        let field = f(7);
        let id = FpMatrix::identity(field, 3);
        let sol = id.solve_affine(&[3, 4, 5]).unwrap();
        assert_eq!(sol.particular, vec![3, 4, 5]);
        assert_eq!(sol.kernel.dim(), 0);

        let z = FpMatrix::zeros(field, 2, 2);
        assert!(z.solve_affine(&[1, 0]).is_none());

        let m = FpMatrix::from_rows(f(2), &[vec![1, 1]]).unwrap();
        let sol = m.solve_affine(&[1]).unwrap();
        assert_eq!(sol.particular, vec![1, 0]);
        assert_eq!(sol.kernel.basis_vectors(), vec![vec![1, 1]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(FpMatrix::from_rows(f(3), &[vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let a = FpMatrix::identity(f(3), 2);
        let b = FpMatrix::identity(f(5), 2);
        assert_eq!(a.try_mul(&b), Err(Error::ModulusMismatch(3, 5)));
    }

    #[test]
    fn kron_shape() {
        let a = FpMatrix::identity(f(3), 2);
        let b = FpMatrix::from_rows(f(3), &[vec![1, 2, 0]]).unwrap();
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 6));
        assert_eq!(k.row(1), &[0, 0, 0, 1, 2, 0]);
    }
}
