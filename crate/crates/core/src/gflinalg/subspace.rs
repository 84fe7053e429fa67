use std::fmt;

use super::field::Field;
use super::matrix::FpMatrix;
use crate::error::{Error, Result};

/// A subspace of `F_p^n` held by its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// bases are equal entry by entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: FpMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: FpMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_matrix(m: &FpMatrix) -> Self {
        let mut r = m.clone();
        let pivots = r.rref_in_place();
        let rank = pivots.len();
        let data = r.as_slice()[..rank * m.cols()].to_vec();
        Subspace {
            ambient: m.cols(),
            basis: FpMatrix::from_vec(m.field(), rank, m.cols(), data),
            pivots,
        }
    }

    pub fn from_vectors(field: Field, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        Self::from_matrix(&FpMatrix::from_row_vectors(field, ambient, vectors))
    }

    /// The span of coordinate vectors `e_i` for `i` in `indices`.
    pub fn coordinate(field: Field, ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<u32>> = indices
            .iter()
            .map(|&i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Self::from_vectors(field, ambient, &vs)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_vector(&self, i: usize) -> &[u32] {
        self.basis.row(i)
    }
    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vectors()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::ModulusMismatch(
                self.field().modulus(),
                other.field().modulus(),
            ));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// `v` minus its projection along the pivot coordinates.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field();
        let mut w = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let a = w[c];
            if a == 0 {
                continue;
            }
            let na = f.neg(a);
            for (x, &b) in w.iter_mut().zip(self.basis.row(r)) {
                if b != 0 {
                    *x = f.add(*x, f.mul(na, b));
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        assert_eq!(coeffs.len(), self.dim());
        let f = self.field();
        let mut out = vec![0; self.ambient];
        for (r, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (x, &b) in out.iter_mut().zip(self.basis.row(r)) {
                *x = f.add(*x, f.mul(c, b));
            }
        }
        out
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.dim() <= self.dim()
            && (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    /// Panicking form of [`Subspace::contains`] for same-ambient operands.
    pub fn includes(&self, other: &Subspace) -> bool {
        self.contains(other).expect("subspace containment")
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let sum = self.sum(other)?;
        let meet = if self.is_full() {
            other.clone()
        } else if other.is_full() {
            self.clone()
        } else {
            self.perp().sum(&other.perp())?.perp()
        };
        assert_eq!(
            sum.dim() + meet.dim(),
            self.dim() + other.dim(),
            "modular dimension law violated"
        );
        Ok(meet)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn perp(&self) -> Subspace {
        let f = self.field();
        let n = self.ambient;
        let mut is_pivot = vec![false; n];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let vs: Vec<Vec<u32>> = (0..n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; n];
                v[free] = 1;
                for (r, &c) in self.pivots.iter().enumerate() {
                    v[c] = f.neg(self.basis.get(r, free));
                }
                v
            })
            .collect();
        Subspace::from_vectors(f, n, &vs)
    }

    /// Indices of the coordinate vectors spanning a complement: the non-pivot columns.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Image under `m` (an `n' × ambient` matrix acting on columns).
    pub fn image(&self, m: &FpMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vs: Vec<Vec<u32>> = (0..self.dim())
            .map(|i| m.mul_vec(self.basis.row(i)))
            .collect();
        Subspace::from_vectors(self.field(), m.rows(), &vs)
    }

    /// Whether `m` maps this subspace into itself.
    pub fn is_invariant(&self, m: &FpMatrix) -> bool {
        (0..self.dim()).all(|i| self.contains_vector(&m.mul_vec(self.basis.row(i))))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}^{}, basis {:?})",
            self.dim(),
            self.field(),
            self.ambient,
            self.basis_vectors()
        )
    }
}

/// Incrementally maintained semi-echelon basis.
///
/// Each stored row has a unit pivot and zeros at the pivots of every row
/// stored before it, so reducing a vector in insertion order clears all
/// pivots.
#[derive(Clone, Debug)]
pub struct RowReducer {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(field: Field, ambient: usize) -> Self {
        RowReducer {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    fn reduce_in_place(&self, w: &mut [u32]) {
        let f = self.field;
        let p = f.modulus() as u64;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = w[c];
            if a == 0 {
                continue;
            }
            let na = (p - a as u64) % p;
            for (x, &b) in w.iter_mut().zip(row) {
                if b != 0 {
                    *x = ((*x as u64 + na * b as u64) % p) as u32;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Insert `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        if self.rows.len() == self.ambient {
            return false;
        }
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[c]);
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(c);
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.ambient, &self.rows)
    }
}

/// Coordinates relative to an arbitrary linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinates {
    field: Field,
    vectors: Vec<Vec<u32>>,
    columns: Vec<usize>,
    inverse: FpMatrix,
}

impl Coordinates {
    /// Fails if `vectors` are linearly dependent.
    pub fn new(field: Field, ambient: usize, vectors: Vec<Vec<u32>>) -> Result<Self> {
        let r = vectors.len();
        let m = FpMatrix::from_row_vectors(field, ambient, &vectors);
        let rr = m.rref();
        if rr.rank != r {
            return Err(Error::Degenerate("family is linearly dependent".into()));
        }
        let columns = rr.pivots;
        // square r×r block of m on the pivot columns; its transpose maps coords to values there
        let block = m.select_columns(&columns).transpose();
        let inverse = block
            .solve_matrix(&FpMatrix::identity(field, r))
            .expect("pivot block is invertible");
        Ok(Coordinates {
            field,
            vectors,
            columns,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    /// Coordinates of `v`, assuming `v` lies in the span.
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        let sel: Vec<u32> = self.columns.iter().map(|&c| v[c]).collect();
        self.inverse.mul_vec(&sel)
    }

    /// Coordinates of `v`, or `None` when `v` lies outside the span.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c = self.coords_unchecked(v);
        (self.combine(&c) == v).then_some(c)
    }

    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.vectors.first().map_or(0, |v| v.len());
        let mut out = vec![0; n];
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            if *c == 0 {
                continue;
            }
            for (x, &b) in out.iter_mut().zip(v) {
                *x = f.add(*x, f.mul(*c, b));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn equal_subspaces() {
        let u = Subspace::from_vectors(f(5), 3, &[vec![1, 2, 3], vec![0, 1, 1]]);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert!(u.contains(&u).unwrap());
    }

    #[test]
    fn complementary_coordinate_subspaces() {
        let u = Subspace::coordinate(f(2), 4, &[0, 1]);
        let v = Subspace::coordinate(f(2), 4, &[2, 3]);
        assert!(u.sum(&v).unwrap().is_full());
        assert!(u.intersect(&v).unwrap().is_zero());
    }

    #[test]
    fn two_lines_in_plane() {
        let u = Subspace::from_vectors(f(3), 2, &[vec![1, 1]]);
        let v = Subspace::from_vectors(f(3), 2, &[vec![1, 2]]);
        assert_eq!(u.sum(&v).unwrap().dim(), 2);
        assert_eq!(u.intersect(&v).unwrap().dim(), 0);
        assert!(!u.contains(&v).unwrap());
    }

    #[test]
    fn ambient_mismatch() {
        let u = Subspace::zero(f(3), 2);
        let v = Subspace::zero(f(3), 3);
        assert!(u.sum(&v).is_err());
    }

    #[test]
    fn perp_is_involutive() {
        let u = Subspace::from_vectors(f(7), 4, &[vec![1, 2, 0, 3], vec![0, 0, 1, 5]]);
        assert_eq!(u.perp().perp(), u);
        assert_eq!(u.perp().dim(), 2);
    }

    #[test]
    fn row_reducer_matches_rref() {
        let field = f(5);
        let vs = vec![vec![1, 2, 3], vec![0, 1, 1], vec![1, 3, 4], vec![0, 0, 0]];
        let mut rr = RowReducer::new(field, 3);
        let inserted: Vec<bool> = vs.iter().map(|v| rr.insert(v)).collect();
        assert_eq!(inserted, vec![true, true, false, false]);
        assert_eq!(rr.to_subspace(), Subspace::from_vectors(field, 3, &vs));
    }

    #[test]
    fn coordinates_round_trip() {
        let field = f(3);
        let c = Coordinates::new(field, 3, vec![vec![1, 1, 0], vec![0, 1, 2]]).unwrap();
        let v = c.combine(&[2, 1]);
        assert_eq!(c.coords(&v), Some(vec![2, 1]));
        assert_eq!(c.coords(&[1, 0, 0]), None);
        assert!(Coordinates::new(field, 2, vec![vec![1, 1], vec![2, 2]]).is_err());
    }
}
