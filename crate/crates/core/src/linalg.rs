//! Dense exact matrices and subspaces, backed by a sparse echelon engine.
//!
//! All routines use the same pivot convention: the leftmost nonzero column, with the
//! topmost candidate row, and free variables set to zero when solving.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};

/// A sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row);
        }
        Matrix {
            field,
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn from_sparse_rows(field: FieldSpec, cols: usize, rows: &[SparseRow]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row {
                m[(r, *c)] = v.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn sparse_row(&self, r: usize) -> SparseRow {
        to_sparse(self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(
            v.len(),
            self.cols,
            "vector length differs from column count"
        );
        (0..self.rows)
            .map(|r| dot(self.row(r), v, self.field))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend_from_slice(other.row(r));
                row
            })
            .collect();
        Matrix::from_rows(self.field, self.cols + other.cols, rows)
    }

    /// Reduced row-echelon form with zero rows dropped.
    pub fn rref(&self) -> Matrix {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in 0..self.rows {
            basis.insert(self.sparse_row(r));
        }
        basis.into_rref_matrix()
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in 0..self.rows {
            basis.insert(self.sparse_row(r));
        }
        basis.rank()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let mut basis = EchelonBasis::new(self.field, self.cols);
        for r in 0..self.rows {
            basis.insert(self.sparse_row(r));
        }
        basis.kernel()
    }

    /// One solution of `self · x = b`, or `None` when inconsistent. Free variables are zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(
            b.len(),
            self.rows,
            "right-hand side length differs from row count"
        );
        let aug = self.hstack(&Matrix::from_rows(
            self.field,
            1,
            b.iter().map(|v| vec![v.clone()]).collect(),
        ));
        let reduced = aug.rref();
        let mut x = vec![self.field.zero(); self.cols];
        for r in 0..reduced.rows() {
            let row = reduced.row(r);
            let pivot = row.iter().position(|v| !v.is_zero()).unwrap();
            if pivot == self.cols {
                return None;
            }
            x[pivot] = row[self.cols].clone();
        }
        Some(x)
    }

    /// Two-sided inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let reduced = self.hstack(&Matrix::identity(self.field, n)).rref();
        if reduced.rows() != n || (0..n).any(|r| !reduced[(r, r)].is_one()) {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = reduced[(r, n + c)].clone();
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{} [", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn to_sparse(dense: &[Scalar]) -> SparseRow {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn to_dense(field: FieldSpec, len: usize, sparse: &SparseRow) -> Vec<Scalar> {
    let mut v = vec![field.zero(); len];
    for (i, s) in sparse {
        v[*i] = s.clone();
    }
    v
}

/// `a + factor · b` for sparse rows.
fn axpy(a: &SparseRow, factor: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, factor * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(factor * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained row-echelon basis of a row space.
///
/// Rows are kept sparse with a unit pivot; [`EchelonBasis::into_rref`] back-substitutes
/// into reduced form. Memory stays bounded by the rank, so arbitrarily long row streams
/// (e.g. cocycle systems) can be fed without materialising them.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl EchelonBasis {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        EchelonBasis {
            field,
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Reduces `row` against the current pivots (leading entries only).
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut start = 0;
        loop {
            let Some(pos) = row[start..]
                .iter()
                .position(|(c, _)| self.pivots.contains_key(c))
            else {
                return row;
            };
            let (col, coeff) = row[start + pos].clone();
            let pivot_row = &self.pivots[&col];
            row = axpy(&row, &(-&coeff), pivot_row);
            start = row.partition_point(|(c, _)| *c < col);
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, v)| *c < self.cols && !v.is_zero()));
        let row = self.reduce(row);
        let Some((lead, lead_val)) = row.first().cloned() else {
            return false;
        };
        let inv = lead_val.inv();
        let row = row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced rows ordered by pivot column.
    pub fn into_rref(mut self) -> Vec<SparseRow> {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for (idx, &col) in cols.iter().enumerate().rev() {
            let pivot_row = self.pivots[&col].clone();
            for &other in &cols[..idx] {
                let row = self.pivots.get_mut(&other).unwrap();
                if let Ok(p) = row.binary_search_by_key(&col, |(c, _)| *c) {
                    let coeff = -&row[p].1;
                    *row = axpy(row, &coeff, &pivot_row);
                }
            }
        }
        self.pivots.into_values().collect()
    }

    pub fn into_rref_matrix(self) -> Matrix {
        let field = self.field;
        let cols = self.cols;
        Matrix::from_sparse_rows(field, cols, &self.into_rref())
    }

    /// Basis of the solutions `x` of `row · x = 0` for every row in the span, one vector
    /// per free column, with that free coordinate equal to one.
    pub fn kernel(self) -> Subspace {
        let field = self.field;
        let cols = self.cols;
        let rref = self.into_rref();
        let pivot_cols: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![false; cols];
        for &p in &pivot_cols {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (row, &p) in rref.iter().zip(&pivot_cols) {
                if let Ok(pos) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v[p] = -&row[pos].1;
                }
            }
            vectors.push(v);
        }
        Subspace::span(field, cols, vectors)
    }
}

/// A subspace of `field^ambient_dim`, stored as an RREF basis with no zero rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        Self::from_basis_rows(Matrix::from_rows(field, ambient_dim, vectors))
    }

    pub fn span_sparse(
        field: FieldSpec,
        ambient_dim: usize,
        vectors: impl IntoIterator<Item = SparseRow>,
    ) -> Self {
        let mut basis = EchelonBasis::new(field, ambient_dim);
        for v in vectors {
            basis.insert(v);
        }
        Subspace {
            ambient_dim,
            basis: basis.into_rref_matrix(),
        }
    }

    /// Row space of `m`.
    pub fn from_basis_rows(m: Matrix) -> Self {
        Subspace {
            ambient_dim: m.cols(),
            basis: m.rref(),
        }
    }

    /// Coordinate subspace spanned by the given standard basis vectors.
    pub fn coordinate(field: FieldSpec, ambient_dim: usize, coords: &[usize]) -> Self {
        Self::span_sparse(
            field,
            ambient_dim,
            coords.iter().map(|&c| vec![(c, field.one())]),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| self.basis.row(r).iter().position(|v| !v.is_zero()).unwrap())
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(())
    }

    fn echelon(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new(self.field(), self.ambient_dim);
        for r in 0..self.dim() {
            basis.insert(self.basis.sparse_row(r));
        }
        basis
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        Ok(Subspace::from_basis_rows(self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of `[Aᵀ | -Bᵀ]`: combinations of rows of `a` that are
    /// also combinations of rows of `b`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        self.check_ambient(other)?;
        let field = self.field();
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Ok(Subspace::zero(field, self.ambient_dim));
        }
        let system = self
            .basis
            .transpose()
            .hstack(&other.basis.transpose().scale(&-field.one()));
        let kernel = system.nullspace();
        let vectors = kernel
            .basis_vectors()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![field.zero(); self.ambient_dim];
                for (r, c) in coeffs[..da].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (slot, b) in v.iter_mut().zip(self.basis.row(r)) {
                        *slot += &(c * b);
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(field, self.ambient_dim, vectors))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, v.len()));
        }
        Ok(self.echelon().contains(to_sparse(v)))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, Error> {
        self.check_ambient(other)?;
        let echelon = self.echelon();
        Ok((0..other.dim()).all(|r| echelon.contains(other.basis.sparse_row(r))))
    }

    /// Coordinate complement spanned by the standard basis vectors at the non-pivot
    /// columns of the RREF basis.
    pub fn complement(&self) -> Subspace {
        Subspace::coordinate(
            self.field(),
            self.ambient_dim,
            &self.complement_coordinates(),
        )
    }

    pub fn complement_coordinates(&self) -> Vec<usize> {
        let pivots = self.pivot_columns();
        (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .collect()
    }

    /// Coordinates of `v` (which must lie in the subspace) with respect to the RREF basis.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivot_columns().iter().map(|&p| v[p].clone()).collect();
        let field = self.field();
        let mut rebuilt = vec![field.zero(); self.ambient_dim];
        for (r, c) in coords.iter().enumerate() {
            for (slot, b) in rebuilt.iter_mut().zip(self.basis.row(r)) {
                *slot += &(c * b);
            }
        }
        (rebuilt == v).then_some(coords)
    }

    /// `v` reduced modulo the subspace: zero at every pivot column.
    pub fn residue(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (r, p) in self.pivot_columns().into_iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (slot, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *slot -= &(&c * b);
                }
            }
        }
        out
    }

    /// Image of the subspace under a linear map given as a `target × ambient` matrix.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient_dim);
        let vectors = self.basis_vectors().iter().map(|v| map.apply(v)).collect();
        Subspace::span(self.field(), map.rows(), vectors)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}; {:?})",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let q = FieldSpec::Rationals;
        let m = Matrix::from_i64(q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::from_i64(q, &[&[1, -1], &[-1, 2]]));
        assert_eq!(m.mul(&inv), Matrix::identity(q, 2));
        assert!(Matrix::from_i64(q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(Matrix::from_i64(FieldSpec::Prime(3), &[&[1, 1], &[1, 4]])
            .inverse()
            .is_none());
    }

    const Q: FieldSpec = FieldSpec::Rationals;
    const F5: FieldSpec = FieldSpec::Prime(5);

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(id.rref(), id);
        assert_eq!(Matrix::zeros(Q, 2, 3).rref().rows(), 0);
        let m = Matrix::from_i64(Q, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), Matrix::from_i64(Q, &[&[1, 2]]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 4).rank(), 4);
        assert_eq!(Matrix::zeros(Q, 3, 3).rank(), 0);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::zeros(Q, 2, 2).nullspace().dim(), 2);
        assert!(Matrix::identity(Q, 3).nullspace().is_zero());
        let ns = Matrix::from_i64(F5, &[&[1, 1]]).nullspace();
        assert_eq!(ns.basis(), &Matrix::from_i64(F5, &[&[1, 4]]));
    }

    #[test]
    fn solve_examples() {
        let m = Matrix::from_i64(F5, &[&[2]]);
        assert_eq!(m.solve(&[F5.one()]), Some(vec![F5.from_i64(3)]));
        let b: Vec<Scalar> = [3, -1, 7].iter().map(|&v| Q.from_i64(v)).collect();
        assert_eq!(Matrix::identity(Q, 3).solve(&b), Some(b.clone()));
        let m = Matrix::from_i64(Q, &[&[1], &[1]]);
        assert_eq!(m.solve(&[Q.zero(), Q.one()]), None);
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let m = Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 0, 1]]);
        let x = m.solve(&[Q.from_i64(2), Q.from_i64(5)]).unwrap();
        assert_eq!(x, vec![Q.from_i64(2), Q.zero(), Q.from_i64(5)]);
    }

    #[test]
    fn subspace_lattice_examples() {
        let v = Subspace::span(Q, 3, vec![vec![Q.one(), Q.from_i64(2), Q.zero()]]);
        let zero = Subspace::zero(Q, 3);
        assert_eq!(v.sum(&zero).unwrap(), v);
        assert_eq!(v.intersect(&v).unwrap(), v);
        let e1 = Subspace::coordinate(Q, 2, &[0]);
        let e2 = Subspace::coordinate(Q, 2, &[1]);
        assert!(e1.sum(&e2).unwrap().is_full());
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(
            e1.sum(&Subspace::zero(Q, 3)),
            Err(Error::AmbientMismatch(2, 3))
        );
    }

    #[test]
    fn complement_uses_non_pivot_coordinates() {
        let v = Subspace::span(Q, 3, vec![vec![Q.zero(), Q.one(), Q.one()]]);
        assert_eq!(v.complement_coordinates(), vec![0, 2]);
        let c = v.complement();
        assert!(v.sum(&c).unwrap().is_full());
        assert!(v.intersect(&c).unwrap().is_zero());
    }

    #[test]
    fn coordinates_round_trip() {
        let v = Subspace::span(
            Q,
            3,
            vec![
                vec![Q.one(), Q.zero(), Q.from_i64(2)],
                vec![Q.zero(), Q.one(), Q.from_i64(3)],
            ],
        );
        let w = vec![Q.from_i64(2), Q.from_i64(-1), Q.from_i64(1)];
        assert_eq!(
            v.coordinates_of(&w),
            Some(vec![Q.from_i64(2), Q.from_i64(-1)])
        );
        assert_eq!(v.coordinates_of(&[Q.one(), Q.one(), Q.one()]), None);
    }
}
