//! Diassociative algebras stored as a pair of structure-constant tensors.

use std::fmt;

use crate::error::Error;
use crate::linalg::{to_sparse, Matrix, SparseRow, Subspace};
use crate::scalar::{FieldSpec, Scalar};

/// One of the two products of a dialgebra: `⊣` (left) or `⊢` (right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Product {
    Left,
    Right,
}

impl Product {
    pub const BOTH: [Product; 2] = [Product::Left, Product::Right];

    pub fn index(self) -> usize {
        match self {
            Product::Left => 0,
            Product::Right => 1,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Product::Left => "left",
            Product::Right => "right",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Product::Left => "⊣",
            Product::Right => "⊢",
        }
    }
}

/// A finite-dimensional algebra with two bilinear products,
/// `e_i ∗ e_j = Σ_k c∗[i][j][k] e_k`.
///
/// Construction does not check the dialgebra identities; [`Algebra::check_axioms`] does,
/// and [`Algebra::validated`] wraps the two.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    left: Vec<Scalar>,
    right: Vec<Scalar>,
}

impl Algebra {
    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        let n3 = dim * dim * dim;
        Algebra {
            field,
            dim,
            left: vec![field.zero(); n3],
            right: vec![field.zero(); n3],
        }
    }

    /// Builds an algebra from sparse constants `(product, i, j, k, value)` with 0-based indices.
    pub fn from_constants(
        field: FieldSpec,
        dim: usize,
        constants: impl IntoIterator<Item = (Product, usize, usize, usize, Scalar)>,
    ) -> Self {
        let mut alg = Self::zero(field, dim);
        for (p, i, j, k, v) in constants {
            alg.set_constant(p, i, j, k, v);
        }
        alg
    }

    /// Shorthand for integer constants.
    pub fn from_int_constants(
        field: FieldSpec,
        dim: usize,
        constants: &[(Product, usize, usize, usize, i64)],
    ) -> Self {
        Self::from_constants(
            field,
            dim,
            constants
                .iter()
                .map(|&(p, i, j, k, v)| (p, i, j, k, field.from_i64(v))),
        )
    }

    pub fn validated(self) -> Result<Self, Error> {
        let report = self.check_axioms();
        if report.passed() {
            Ok(self)
        } else {
            Err(Error::AxiomFailure(report.violations.len()))
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    fn tensor(&self, p: Product) -> &[Scalar] {
        match p {
            Product::Left => &self.left,
            Product::Right => &self.right,
        }
    }

    pub fn constant(&self, p: Product, i: usize, j: usize, k: usize) -> &Scalar {
        &self.tensor(p)[self.offset(i, j, k)]
    }

    pub fn set_constant(&mut self, p: Product, i: usize, j: usize, k: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "constant from a different field");
        let at = self.offset(i, j, k);
        match p {
            Product::Left => self.left[at] = v,
            Product::Right => self.right[at] = v,
        }
    }

    /// Nonzero constants sorted by `(product, i, j, k)`.
    pub fn nonzero_constants(&self) -> Vec<(Product, usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let v = self.constant(p, i, j, k);
                        if !v.is_zero() {
                            out.push((p, i, j, k, v.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    /// `e_i ∗ e_j` as a coordinate vector.
    pub fn basis_product(&self, p: Product, i: usize, j: usize) -> &[Scalar] {
        let at = self.offset(i, j, 0);
        &self.tensor(p)[at..at + self.dim]
    }

    pub fn multiply(&self, p: Product, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = xi * yj;
                for (slot, c) in out.iter_mut().zip(self.basis_product(p, i, j)) {
                    if !c.is_zero() {
                        *slot += &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    /// `v ∗ e_k` for a coordinate vector `v`.
    fn multiply_right_basis(&self, p: Product, v: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (m, vm) in v.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (slot, c) in out.iter_mut().zip(self.basis_product(p, m, k)) {
                if !c.is_zero() {
                    *slot += &(vm * c);
                }
            }
        }
        out
    }

    /// `e_i ∗ v` for a coordinate vector `v`.
    fn multiply_left_basis(&self, p: Product, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (m, vm) in v.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (slot, c) in out.iter_mut().zip(self.basis_product(p, i, m)) {
                if !c.is_zero() {
                    *slot += &(vm * c);
                }
            }
        }
        out
    }

    /// Checks associativity of both products and the three mixed identities on every
    /// basis triple, collecting every violation.
    pub fn check_axioms(&self) -> AxiomReport {
        use Product::{Left as L, Right as R};
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij_l = self.basis_product(L, i, j);
                let ij_r = self.basis_product(R, i, j);
                for k in 0..n {
                    let jk_l = self.basis_product(L, j, k);
                    let jk_r = self.basis_product(R, j, k);
                    let checks = [
                        (
                            Identity::LeftAssociative,
                            self.multiply_right_basis(L, ij_l, k),
                            self.multiply_left_basis(L, i, jk_l),
                        ),
                        (
                            Identity::RightAssociative,
                            self.multiply_right_basis(R, ij_r, k),
                            self.multiply_left_basis(R, i, jk_r),
                        ),
                        (
                            Identity::LeftIgnoresInner,
                            self.multiply_left_basis(L, i, jk_l),
                            self.multiply_left_basis(L, i, jk_r),
                        ),
                        (
                            Identity::MixedAssociative,
                            self.multiply_right_basis(L, ij_r, k),
                            self.multiply_left_basis(R, i, jk_l),
                        ),
                        (
                            Identity::RightIgnoresInner,
                            self.multiply_right_basis(R, ij_l, k),
                            self.multiply_right_basis(R, ij_r, k),
                        ),
                    ];
                    for (identity, lhs, rhs) in checks {
                        if lhs != rhs {
                            violations.push(AxiomViolation {
                                identity,
                                triple: (i, j, k),
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        AxiomReport { violations }
    }

    /// `S ◊ T = S ⊣ T + S ⊢ T`.
    pub fn diamond(&self, s: &Subspace, t: &Subspace) -> Result<Subspace, Error> {
        for sub in [s, t] {
            if sub.ambient_dim() != self.dim {
                return Err(Error::AmbientMismatch(self.dim, sub.ambient_dim()));
            }
        }
        let sv = s.basis_vectors();
        let tv = t.basis_vectors();
        let mut products: Vec<SparseRow> = Vec::new();
        for x in &sv {
            for y in &tv {
                for p in Product::BOTH {
                    products.push(to_sparse(&self.multiply(p, x, y)));
                }
            }
        }
        Ok(Subspace::span_sparse(self.field, self.dim, products))
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    /// The derived ideal `L' = L ◊ L`.
    pub fn derived(&self) -> Subspace {
        let n = self.dim;
        let products = (0..n).flat_map(|i| {
            (0..n).flat_map(move |j| {
                Product::BOTH
                    .into_iter()
                    .map(move |p| to_sparse(self.basis_product(p, i, j)))
            })
        });
        Subspace::span_sparse(self.field, n, products)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().dim() == self.dim
    }

    pub fn require_perfect(&self) -> Result<(), Error> {
        let derived = self.derived().dim();
        if derived == self.dim {
            Ok(())
        } else {
            Err(Error::NotPerfect {
                dim: self.dim,
                derived,
            })
        }
    }

    /// The two-sided annihilator under both products.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(4 * n * n);
        for p in Product::BOTH {
            for j in 0..n {
                for k in 0..n {
                    // (z ∗ e_j)_k and (e_j ∗ z)_k as linear forms in z
                    rows.push((0..n).map(|i| self.constant(p, i, j, k).clone()).collect());
                    rows.push((0..n).map(|i| self.constant(p, j, i, k).clone()).collect());
                }
            }
        }
        Matrix::from_rows(self.field, n, rows).nullspace()
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, Error> {
        let full = self.full_space();
        let spread = self.diamond(s, &full)?.sum(&self.diamond(&full, s)?)?;
        s.contains_subspace(&spread)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, Error> {
        s.contains_subspace(&self.diamond(s, s)?)
    }

    /// Quotient by a two-sided ideal, on the coordinate complement of the ideal's pivots.
    /// Returns the quotient and the projection `L → L/I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, LinearMap), Error> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let keep = ideal.complement_coordinates();
        let m = keep.len();
        let n = self.dim;
        let reduce = |v: &[Scalar]| -> Vec<Scalar> {
            let residue = ideal.residue(v);
            keep.iter().map(|&c| residue[c].clone()).collect()
        };
        let mut projection = Matrix::zeros(self.field, m, n);
        for j in 0..n {
            let mut e = vec![self.field.zero(); n];
            e[j] = self.field.one();
            for (r, v) in reduce(&e).into_iter().enumerate() {
                projection[(r, j)] = v;
            }
        }
        let mut quotient = Algebra::zero(self.field, m);
        for p in Product::BOTH {
            for (a, &i) in keep.iter().enumerate() {
                for (b, &j) in keep.iter().enumerate() {
                    for (c, v) in reduce(self.basis_product(p, i, j)).into_iter().enumerate() {
                        quotient.set_constant(p, a, b, c, v);
                    }
                }
            }
        }
        Ok((quotient, LinearMap::new(n, m, projection)))
    }

    /// Block-diagonal direct sum with no cross products.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra, Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let shift = self.dim;
        let constants = self.nonzero_constants().into_iter().chain(
            other
                .nonzero_constants()
                .into_iter()
                .map(|(p, i, j, k, v)| (p, i + shift, j + shift, k + shift, v)),
        );
        Ok(Algebra::from_constants(
            self.field,
            self.dim + other.dim,
            constants,
        ))
    }

    /// Checks `f(x ∗ y) = f(x) ∗ f(y)` on all basis pairs under both products.
    pub fn is_homomorphism(&self, f: &LinearMap, target: &Algebra) -> bool {
        self.homomorphism_defect(f, target).is_none()
    }

    /// First basis pair `(product, i, j)` where `f` fails to be multiplicative.
    pub fn homomorphism_defect(
        &self,
        f: &LinearMap,
        target: &Algebra,
    ) -> Option<(Product, usize, usize)> {
        assert_eq!(f.source_dim(), self.dim, "map source differs from algebra");
        assert_eq!(
            f.target_dim(),
            target.dim,
            "map target differs from algebra"
        );
        let images: Vec<Vec<Scalar>> = (0..self.dim).map(|i| f.matrix().column(i)).collect();
        for p in Product::BOTH {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let lhs = f.apply(self.basis_product(p, i, j));
                    let rhs = target.multiply(p, &images[i], &images[j]);
                    if lhs != rhs {
                        return Some((p, i, j));
                    }
                }
            }
        }
        None
    }

    /// Dimension of the space of homomorphisms to the one-dimensional abelian algebra.
    pub fn hom_to_field_dim(&self) -> usize {
        self.dim - self.derived().dim()
    }

    pub fn multiplication_operators(&self, a: &[Scalar]) -> MultiplicationOperators {
        let n = self.dim;
        let build = |p: Product, on_left: bool| {
            let columns: Vec<Vec<Scalar>> = (0..n)
                .map(|x| {
                    if on_left {
                        self.multiply_right_basis(p, a, x)
                    } else {
                        self.multiply_left_basis(p, x, a)
                    }
                })
                .collect();
            Matrix::from_rows(self.field, n, columns).transpose()
        };
        MultiplicationOperators {
            left_left: build(Product::Left, true),
            left_right: build(Product::Right, true),
            right_left: build(Product::Left, false),
            right_right: build(Product::Right, false),
        }
    }

    /// The same algebra written in a new basis whose vectors are the rows of `basis`
    /// (old coordinates). `basis` must be invertible.
    pub fn change_basis(&self, basis: &Matrix) -> Result<Algebra, Error> {
        let n = self.dim;
        if basis.rows() != n || basis.cols() != n || basis.rank() != n {
            return Err(Error::ShapeMismatch(
                "change of basis must be invertible".into(),
            ));
        }
        let to_new = basis.transpose();
        let vectors = basis.row_vectors();
        let mut out = Algebra::zero(self.field, n);
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    let prod = self.multiply(p, &vectors[i], &vectors[j]);
                    let coords = to_new.solve(&prod).expect("basis is invertible");
                    for (k, v) in coords.into_iter().enumerate() {
                        out.set_constant(p, i, j, k, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The subalgebra carried by `s`, written on its RREF basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Algebra, Error> {
        if !self.is_subalgebra(s)? {
            return Err(Error::ShapeMismatch(
                "subspace is not closed under products".into(),
            ));
        }
        let vectors = s.basis_vectors();
        let m = vectors.len();
        let mut out = Algebra::zero(self.field, m);
        for p in Product::BOTH {
            for a in 0..m {
                for b in 0..m {
                    let prod = self.multiply(p, &vectors[a], &vectors[b]);
                    let coords = s.coordinates_of(&prod).expect("closed under products");
                    for (c, v) in coords.into_iter().enumerate() {
                        out.set_constant(p, a, b, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reinterprets every constant in another field. Constants must be representable there.
    pub fn convert_field(&self, field: FieldSpec) -> Result<Algebra, Error> {
        let mut out = Algebra::zero(field, self.dim);
        for (p, i, j, k, v) in self.nonzero_constants() {
            let (num, den) = v.to_ratio();
            out.set_constant(p, i, j, k, field.from_ratio(&num, &den)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra<{}>(dim {}", self.field, self.dim)?;
        for (p, i, j, k, v) in self.nonzero_constants() {
            write!(f, "; e{}{}e{}: {}·e{}", i + 1, p.symbol(), j + 1, v, k + 1)?;
        }
        write!(f, ")")
    }
}

/// The five defining identities of a dialgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `(x ⊣ y) ⊣ z = x ⊣ (y ⊣ z)`
    LeftAssociative,
    /// `(x ⊢ y) ⊢ z = x ⊢ (y ⊢ z)`
    RightAssociative,
    /// `x ⊣ (y ⊣ z) = x ⊣ (y ⊢ z)`
    LeftIgnoresInner,
    /// `(x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)`
    MixedAssociative,
    /// `(x ⊣ y) ⊢ z = (x ⊢ y) ⊢ z`
    RightIgnoresInner,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::LeftAssociative,
        Identity::RightAssociative,
        Identity::LeftIgnoresInner,
        Identity::MixedAssociative,
        Identity::RightIgnoresInner,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            Identity::LeftAssociative => "(x⊣y)⊣z = x⊣(y⊣z)",
            Identity::RightAssociative => "(x⊢y)⊢z = x⊢(y⊢z)",
            Identity::LeftIgnoresInner => "x⊣(y⊣z) = x⊣(y⊢z)",
            Identity::MixedAssociative => "(x⊢y)⊣z = x⊢(y⊣z)",
            Identity::RightIgnoresInner => "(x⊣y)⊢z = (x⊢y)⊢z",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub identity: Identity,
    /// 0-based basis indices `(x, y, z)`.
    pub triple: (usize, usize, usize),
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, identity: Identity) -> bool {
        self.violations.iter().any(|v| v.identity == identity)
    }
}

/// A linear map given by a `target_dim × source_dim` matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    source_dim: usize,
    target_dim: usize,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source_dim: usize, target_dim: usize, matrix: Matrix) -> Self {
        assert_eq!(
            (matrix.rows(), matrix.cols()),
            (target_dim, source_dim),
            "matrix shape must be target × source"
        );
        LinearMap {
            source_dim,
            target_dim,
            matrix,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::new(n, n, Matrix::identity(field, n))
    }

    pub fn zero(field: FieldSpec, source_dim: usize, target_dim: usize) -> Self {
        Self::new(
            source_dim,
            target_dim,
            Matrix::zeros(field, target_dim, source_dim),
        )
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        assert_eq!(inner.target_dim, self.source_dim, "maps do not compose");
        LinearMap::new(
            inner.source_dim,
            self.target_dim,
            self.matrix.mul(&inner.matrix),
        )
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(
            self.source_dim,
            self.target_dim,
            self.matrix.add(&other.matrix),
        )
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.nullspace()
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_basis_rows(self.matrix.transpose())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target_dim
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source_dim
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim
            && self.matrix == Matrix::identity(self.matrix.field(), self.source_dim)
    }
}

/// Left and right multiplication by a fixed element under each product:
/// `λ∗_a(x) = a ∗ x`, `ρ∗_a(x) = x ∗ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationOperators {
    pub left_left: Matrix,
    pub left_right: Matrix,
    pub right_left: Matrix,
    pub right_right: Matrix,
}

impl MultiplicationOperators {
    pub fn all(&self) -> [&Matrix; 4] {
        [
            &self.left_left,
            &self.left_right,
            &self.right_left,
            &self.right_right,
        ]
    }

    pub fn all_zero(&self) -> bool {
        self.all().iter().all(|m| m.is_zero())
    }
}
