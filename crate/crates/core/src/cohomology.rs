//! Second cohomology with central (trivially acted) coefficients.
//!
//! A cochain pair `(f⊣, f⊢)` of bilinear maps `L × L → 𝔽ᵏ` defines the algebra
//! `𝔽ᵏ ⊕ L` with `(a, x) ∗ (b, y) = (f∗(x, y), x ∗ y)`. It is a 2-cocycle exactly when that
//! algebra is a dialgebra; expanding the five identities on the kernel coordinates gives,
//! for all basis triples `(x, y, z)`:
//!
//! * `f⊣(x⊣y, z) = f⊣(x, y⊣z)`
//! * `f⊣(x, y⊣z) = f⊣(x, y⊢z)`
//! * `f⊣(x⊢y, z) = f⊢(x, y⊣z)`
//! * `f⊢(x⊣y, z) = f⊢(x⊢y, z)`
//! * `f⊢(x⊢y, z) = f⊢(x, y⊢z)`
//!
//! Coboundaries are `δg = (g∘⊣, g∘⊢)` for linear `g: L → 𝔽ᵏ`.

use std::collections::BTreeMap;

use rand::Rng;

use crate::algebra::{Algebra, LinearMap, Product};
use crate::error::Error;
use crate::linalg::{to_dense, to_sparse, EchelonBasis, Matrix, SparseRow, Subspace};
use crate::scalar::{FieldSpec, Scalar};

/// Two bilinear maps `L × L → 𝔽ᵏ`, flattened in coordinate order `(product, i, j, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CochainPair {
    field: FieldSpec,
    base_dim: usize,
    coeff_dim: usize,
    values: Vec<Scalar>,
}

impl CochainPair {
    pub fn zero(field: FieldSpec, base_dim: usize, coeff_dim: usize) -> Self {
        CochainPair {
            field,
            base_dim,
            coeff_dim,
            values: vec![field.zero(); coordinate_count(base_dim, coeff_dim)],
        }
    }

    pub fn from_vector(
        field: FieldSpec,
        base_dim: usize,
        coeff_dim: usize,
        values: Vec<Scalar>,
    ) -> Result<Self, Error> {
        if values.len() != coordinate_count(base_dim, coeff_dim) {
            return Err(Error::ShapeMismatch(format!(
                "cochain vector has {} entries, expected {}",
                values.len(),
                coordinate_count(base_dim, coeff_dim)
            )));
        }
        Ok(CochainPair {
            field,
            base_dim,
            coeff_dim,
            values,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    pub fn as_vector(&self) -> &[Scalar] {
        &self.values
    }

    pub fn index(&self, p: Product, i: usize, j: usize, c: usize) -> usize {
        coordinate(self.base_dim, self.coeff_dim, p, i, j, c)
    }

    pub fn get(&self, p: Product, i: usize, j: usize, c: usize) -> &Scalar {
        &self.values[self.index(p, i, j, c)]
    }

    pub fn set(&mut self, p: Product, i: usize, j: usize, c: usize, v: Scalar) {
        let at = self.index(p, i, j, c);
        self.values[at] = v;
    }

    /// `f∗(e_i, e_j)` as a vector in `𝔽ᵏ`.
    pub fn value(&self, p: Product, i: usize, j: usize) -> &[Scalar] {
        let at = self.index(p, i, j, 0);
        &self.values[at..at + self.coeff_dim]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries `(product, i, j, c, value)` in coordinate order.
    pub fn nonzero_entries(&self) -> Vec<(Product, usize, usize, usize, Scalar)> {
        let (n, k) = (self.base_dim, self.coeff_dim);
        let mut out = Vec::new();
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    for c in 0..k {
                        let v = self.get(p, i, j, c);
                        if !v.is_zero() {
                            out.push((p, i, j, c, v.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    fn check_shape(&self, other: &CochainPair) {
        assert_eq!(
            (self.base_dim, self.coeff_dim),
            (other.base_dim, other.coeff_dim),
            "cochain shapes differ"
        );
    }

    pub fn add(&self, other: &CochainPair) -> CochainPair {
        self.check_shape(other);
        CochainPair {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &CochainPair) -> CochainPair {
        self.check_shape(other);
        CochainPair {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        }
    }

    /// Post-composes with a linear map `𝔽ᵏ → 𝔽ᵐ`.
    pub fn push_forward(&self, map: &LinearMap) -> CochainPair {
        assert_eq!(map.source_dim(), self.coeff_dim);
        let n = self.base_dim;
        let mut out = CochainPair::zero(self.field, n, map.target_dim());
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    for (c, v) in map.apply(self.value(p, i, j)).into_iter().enumerate() {
                        out.set(p, i, j, c, v);
                    }
                }
            }
        }
        out
    }

    /// Stacks scalar-valued cochains into one cochain with values in `𝔽^len`.
    pub fn stack(field: FieldSpec, base_dim: usize, parts: &[CochainPair]) -> CochainPair {
        let k = parts.len();
        let mut out = CochainPair::zero(field, base_dim, k);
        for (c, part) in parts.iter().enumerate() {
            assert_eq!((part.base_dim, part.coeff_dim), (base_dim, 1));
            for p in Product::BOTH {
                for i in 0..base_dim {
                    for j in 0..base_dim {
                        out.set(p, i, j, c, part.get(p, i, j, 0).clone());
                    }
                }
            }
        }
        out
    }

    /// The scalar-valued component `c`.
    pub fn component(&self, c: usize) -> CochainPair {
        let n = self.base_dim;
        let mut out = CochainPair::zero(self.field, n, 1);
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    out.set(p, i, j, 0, self.get(p, i, j, c).clone());
                }
            }
        }
        out
    }
}

pub fn coordinate_count(base_dim: usize, coeff_dim: usize) -> usize {
    2 * base_dim * base_dim * coeff_dim
}

/// Flat index of `f∗(e_i, e_j)_c`.
pub fn coordinate(n: usize, k: usize, p: Product, i: usize, j: usize, c: usize) -> usize {
    ((p.index() * n + i) * n + j) * k + c
}

/// Linear constraints on cochain coordinates, one row per (basis triple, constraint
/// family, coefficient index); identically zero rows are skipped.
fn cocycle_rows(l: &Algebra, k: usize) -> impl Iterator<Item = SparseRow> + '_ {
    use Product::{Left as L, Right as R};
    let n = l.dim();
    let field = l.field();
    let idx = move |p, i, j, c| coordinate(n, k, p, i, j, c);
    // f_p(u ∗ v, w) with u ∗ v = Σ_m c_q[u][v][m] e_m
    let first_slot = move |acc: &mut BTreeMap<usize, Scalar>,
                           sign: &Scalar,
                           f: Product,
                           q: Product,
                           u: usize,
                           v: usize,
                           w: usize,
                           c: usize| {
        for (m, coeff) in l.basis_product(q, u, v).iter().enumerate() {
            if !coeff.is_zero() {
                *acc.entry(idx(f, m, w, c)).or_insert_with(|| field.zero()) += &(sign * coeff);
            }
        }
    };
    // f_p(u, v ∗ w)
    let second_slot = move |acc: &mut BTreeMap<usize, Scalar>,
                            sign: &Scalar,
                            f: Product,
                            q: Product,
                            u: usize,
                            v: usize,
                            w: usize,
                            c: usize| {
        for (m, coeff) in l.basis_product(q, v, w).iter().enumerate() {
            if !coeff.is_zero() {
                *acc.entry(idx(f, u, m, c)).or_insert_with(|| field.zero()) += &(sign * coeff);
            }
        }
    };
    let plus = field.one();
    let minus = -field.one();
    (0..n).flat_map(move |x| {
        let (plus, minus) = (plus.clone(), minus.clone());
        (0..n).flat_map(move |y| {
            let (plus, minus) = (plus.clone(), minus.clone());
            (0..n).flat_map(move |z| {
                let (plus, minus) = (plus.clone(), minus.clone());
                (0..5).flat_map(move |family| {
                    let (plus, minus) = (plus.clone(), minus.clone());
                    (0..k).filter_map(move |c| {
                        let mut acc = BTreeMap::new();
                        match family {
                            0 => {
                                first_slot(&mut acc, &plus, L, L, x, y, z, c);
                                second_slot(&mut acc, &minus, L, L, x, y, z, c);
                            }
                            1 => {
                                second_slot(&mut acc, &plus, L, L, x, y, z, c);
                                second_slot(&mut acc, &minus, L, R, x, y, z, c);
                            }
                            2 => {
                                first_slot(&mut acc, &plus, L, R, x, y, z, c);
                                second_slot(&mut acc, &minus, R, L, x, y, z, c);
                            }
                            3 => {
                                first_slot(&mut acc, &plus, R, L, x, y, z, c);
                                first_slot(&mut acc, &minus, R, R, x, y, z, c);
                            }
                            _ => {
                                first_slot(&mut acc, &plus, R, R, x, y, z, c);
                                second_slot(&mut acc, &minus, R, R, x, y, z, c);
                            }
                        }
                        let row: SparseRow =
                            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                        (!row.is_empty()).then_some(row)
                    })
                })
            })
        })
    })
}

/// The cocycle constraints on the `2n²k` cochain coordinates, as a matrix whose rows are
/// the distinct nonzero constraints in sorted order.
pub fn cocycle_system(l: &Algebra, k: usize) -> Result<Matrix, Error> {
    require_axioms(l)?;
    let mut rows: Vec<SparseRow> = cocycle_rows(l, k).collect();
    rows.sort();
    rows.dedup();
    Ok(Matrix::from_sparse_rows(
        l.field(),
        coordinate_count(l.dim(), k),
        &rows,
    ))
}

fn require_axioms(l: &Algebra) -> Result<(), Error> {
    let report = l.check_axioms();
    if report.passed() {
        Ok(())
    } else {
        Err(Error::AxiomFailure(report.violations.len()))
    }
}

/// Whether `f` satisfies every cocycle constraint.
pub fn is_cocycle(l: &Algebra, f: &CochainPair) -> bool {
    assert_eq!(f.base_dim, l.dim(), "cochain base differs from algebra");
    let field = l.field();
    cocycle_rows(l, f.coeff_dim).all(|row| {
        let mut acc = field.zero();
        for (c, v) in &row {
            acc += &(v * &f.values[*c]);
        }
        acc.is_zero()
    })
}

/// Cocycles for scalar coefficients, computed by streaming the constraint rows.
fn scalar_cocycles(l: &Algebra) -> Subspace {
    let mut basis = EchelonBasis::new(l.field(), coordinate_count(l.dim(), 1));
    for row in cocycle_rows(l, 1) {
        basis.insert(row);
    }
    basis.kernel()
}

/// Cocycles with values in `𝔽ᵏ`: the constraints never mix coefficient indices, so this
/// is `k` coordinate-shifted copies of the scalar solution space.
pub fn cocycle_space(l: &Algebra, k: usize) -> Result<Subspace, Error> {
    require_axioms(l)?;
    let scalar = scalar_cocycles(l);
    Ok(replicate(&scalar, l.dim(), k))
}

fn replicate(scalar: &Subspace, n: usize, k: usize) -> Subspace {
    let field = scalar.field();
    let vectors = (0..k).flat_map(|c| {
        scalar.basis_vectors().into_iter().map(move |v| {
            to_sparse(&v)
                .into_iter()
                .map(|(idx, val)| (idx * k + c, val))
                .collect::<SparseRow>()
        })
    });
    Subspace::span_sparse(field, coordinate_count(n, k), vectors)
}

/// `δg = (g∘⊣, g∘⊢)` for `g: L → 𝔽ᵏ`.
pub fn coboundary(l: &Algebra, g: &LinearMap) -> CochainPair {
    assert_eq!(g.source_dim(), l.dim());
    let n = l.dim();
    let k = g.target_dim();
    let mut out = CochainPair::zero(l.field(), n, k);
    for p in Product::BOTH {
        for i in 0..n {
            for j in 0..n {
                for (c, v) in g.apply(l.basis_product(p, i, j)).into_iter().enumerate() {
                    out.set(p, i, j, c, v);
                }
            }
        }
    }
    out
}

/// The matrix of `g ↦ δg`, with `g` flattened as `(basis index m, coefficient c)`.
fn coboundary_operator(l: &Algebra, k: usize) -> Matrix {
    let n = l.dim();
    let mut m = Matrix::zeros(l.field(), coordinate_count(n, k), n * k);
    for p in Product::BOTH {
        for i in 0..n {
            for j in 0..n {
                for (basis_idx, coeff) in l.basis_product(p, i, j).iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for c in 0..k {
                        m[(coordinate(n, k, p, i, j, c), basis_idx * k + c)] = coeff.clone();
                    }
                }
            }
        }
    }
    m
}

/// Span of all coboundaries `δg`.
pub fn coboundary_space(l: &Algebra, k: usize) -> Subspace {
    let op = coboundary_operator(l, k);
    Subspace::from_basis_rows(op.transpose())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub field: FieldSpec,
    pub base_dim: usize,
    pub coeff_dim: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub z2_dim: usize,
    pub b2_dim: usize,
    pub h2_dim: usize,
    /// Cocycles whose classes form a basis of `H²`.
    pub representatives: Vec<CochainPair>,
}

/// `H²(L, 𝔽ᵏ)` with representatives chosen from the RREF basis of `Z²` in coordinate order.
pub fn h2(l: &Algebra, k: usize) -> Result<CohomologyResult, Error> {
    h2_in_order(l, k, None)
}

/// Like [`h2`], but representatives are selected after permuting the cochain coordinates
/// by `order` (`order[new] = old`). Different orders give different, equally valid
/// representative bases.
pub fn h2_in_order(
    l: &Algebra,
    k: usize,
    order: Option<&[usize]>,
) -> Result<CohomologyResult, Error> {
    let n = l.dim();
    let field = l.field();
    let len = coordinate_count(n, k);
    let cocycles = cocycle_space(l, k)?;
    let coboundaries = coboundary_space(l, k);
    debug_assert!(cocycles.contains_subspace(&coboundaries).unwrap());

    let identity: Vec<usize> = (0..len).collect();
    let order = order.unwrap_or(&identity);
    if order.len() != len {
        return Err(Error::ShapeMismatch(
            "coordinate order has wrong length".into(),
        ));
    }
    let permute = |v: &[Scalar]| -> Vec<Scalar> { order.iter().map(|&o| v[o].clone()).collect() };
    let mut unpermute_slots = vec![0; len];
    for (new, &old) in order.iter().enumerate() {
        unpermute_slots[old] = new;
    }

    let permuted_cocycles = Subspace::span(
        field,
        len,
        cocycles
            .basis_vectors()
            .iter()
            .map(|v| permute(v))
            .collect(),
    );
    let mut quotient_basis = EchelonBasis::new(field, len);
    for v in coboundaries.basis_vectors() {
        quotient_basis.insert(to_sparse(&permute(&v)));
    }
    let mut representatives = Vec::new();
    for v in permuted_cocycles.basis_vectors() {
        if quotient_basis.insert(to_sparse(&v)) {
            let original: Vec<Scalar> = unpermute_slots.iter().map(|&s| v[s].clone()).collect();
            representatives.push(CochainPair::from_vector(field, n, k, original)?);
        }
    }

    let z2_dim = cocycles.dim();
    let b2_dim = coboundaries.dim();
    debug_assert_eq!(representatives.len(), z2_dim - b2_dim);
    Ok(CohomologyResult {
        field,
        base_dim: n,
        coeff_dim: k,
        cocycles,
        coboundaries,
        z2_dim,
        b2_dim,
        h2_dim: z2_dim - b2_dim,
        representatives,
    })
}

/// The multiplier, computed as `H²(L, 𝔽)`.
pub fn multiplier(l: &Algebra) -> Result<CohomologyResult, Error> {
    h2(l, 1)
}

/// The `g` with `f = δg`, if any. Fails when `f` is not a cocycle.
pub fn is_coboundary(l: &Algebra, f: &CochainPair) -> Result<Option<LinearMap>, Error> {
    if f.base_dim != l.dim() {
        return Err(Error::ShapeMismatch(
            "cochain base differs from algebra".into(),
        ));
    }
    if !is_cocycle(l, f) {
        return Err(Error::NotACocycle);
    }
    let n = l.dim();
    let k = f.coeff_dim;
    let Some(g) = coboundary_operator(l, k).solve(&f.values) else {
        return Ok(None);
    };
    let mut m = Matrix::zeros(l.field(), k, n);
    for basis_idx in 0..n {
        for c in 0..k {
            m[(c, basis_idx)] = g[basis_idx * k + c].clone();
        }
    }
    Ok(Some(LinearMap::new(n, k, m)))
}

/// A random element of `Z²(L, 𝔽ᵏ)`: a combination of the cocycle basis with coefficients
/// drawn uniformly from the field (from `-3..=3` over ℚ).
pub fn random_cocycle<R: Rng>(l: &Algebra, k: usize, rng: &mut R) -> Result<CochainPair, Error> {
    let field = l.field();
    let z2 = cocycle_space(l, k)?;
    let len = coordinate_count(l.dim(), k);
    let mut acc = vec![field.zero(); len];
    for v in z2.basis_vectors() {
        let coeff = random_scalar(field, rng);
        if coeff.is_zero() {
            continue;
        }
        for (slot, x) in acc.iter_mut().zip(&v) {
            *slot += &(&coeff * x);
        }
    }
    CochainPair::from_vector(field, l.dim(), k, acc)
}

pub fn random_scalar<R: Rng>(field: FieldSpec, rng: &mut R) -> Scalar {
    match field {
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-3..=3)),
        FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

/// Dense view of a sparse row; used by tests that evaluate constraints directly.
pub fn cochain_from_sparse(
    field: FieldSpec,
    base_dim: usize,
    coeff_dim: usize,
    row: &SparseRow,
) -> CochainPair {
    let len = coordinate_count(base_dim, coeff_dim);
    CochainPair::from_vector(field, base_dim, coeff_dim, to_dense(field, len, row))
        .expect("length matches")
}
