//! Central extensions `0 → A → H → L → 0` and the constructions built on them.
//!
//! Every extension is stored in the canonical layout: the total algebra `H` has the
//! kernel `A = 𝔽ᵏ` on its first `k` coordinates and a lift of the base basis on the last
//! `n`. Projection, embedding and the canonical section are then coordinate maps, and the
//! cocycle is read off the structure constants of `H`.

use crate::algebra::{Algebra, LinearMap, Product};
use crate::cohomology::{coboundary, h2_in_order, is_coboundary, multiplier, CochainPair};
use crate::error::Error;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralExtension {
    base: Algebra,
    kernel_dim: usize,
    total: Algebra,
    projection: LinearMap,
    embedding: LinearMap,
    section: LinearMap,
    cocycle: CochainPair,
}

/// `𝔽ᵏ ⊕ L` with `(a, x) ∗ (b, y) = (f∗(x, y), x ∗ y)`, without checking the axioms.
pub fn extension_algebra(l: &Algebra, f: &CochainPair) -> Result<Algebra, Error> {
    if f.base_dim() != l.dim() || f.field() != l.field() {
        return Err(Error::ShapeMismatch(
            "cochain does not match the base algebra".into(),
        ));
    }
    let (n, k) = (l.dim(), f.coeff_dim());
    let mut total = Algebra::zero(l.field(), n + k);
    for (p, i, j, m, v) in l.nonzero_constants() {
        total.set_constant(p, k + i, k + j, k + m, v);
    }
    for (p, i, j, c, v) in f.nonzero_entries() {
        total.set_constant(p, k + i, k + j, c, v);
    }
    Ok(total)
}

fn coordinate_maps(field: FieldSpec, n: usize, k: usize) -> (LinearMap, LinearMap, LinearMap) {
    let mut projection = Matrix::zeros(field, n, n + k);
    let mut section = Matrix::zeros(field, n + k, n);
    for i in 0..n {
        projection[(i, k + i)] = field.one();
        section[(k + i, i)] = field.one();
    }
    let mut embedding = Matrix::zeros(field, n + k, k);
    for a in 0..k {
        embedding[(a, a)] = field.one();
    }
    (
        LinearMap::new(n + k, n, projection),
        LinearMap::new(k, n + k, embedding),
        LinearMap::new(n, n + k, section),
    )
}

impl CentralExtension {
    /// The extension of `l` by `𝔽ᵏ` defined by a 2-cocycle, with the canonical section
    /// `x ↦ (0, x)`. Fails when `f` is not a cocycle (the total violates the axioms).
    pub fn from_cocycle(l: &Algebra, f: &CochainPair) -> Result<Self, Error> {
        let total = extension_algebra(l, f)?;
        if !total.check_axioms().passed() {
            return Err(Error::NotACocycle);
        }
        let (projection, embedding, section) = coordinate_maps(l.field(), l.dim(), f.coeff_dim());
        Ok(CentralExtension {
            base: l.clone(),
            kernel_dim: f.coeff_dim(),
            total,
            projection,
            embedding,
            section,
            cocycle: f.clone(),
        })
    }

    /// `0 → 0 → L → L → 0`.
    pub fn identity(l: &Algebra) -> Self {
        Self::from_cocycle(l, &CochainPair::zero(l.field(), l.dim(), 0))
            .expect("zero cochain is a cocycle")
    }

    /// The extension `0 → ker π → H → L → 0` of a surjective homomorphism `π: H → L`,
    /// rewritten in the canonical layout. Also returns the frame: the rows are the new
    /// basis of `H` in its original coordinates (kernel RREF basis first, then the
    /// deterministic preimages of the basis of `L`).
    ///
    /// The kernel is not required to be central; see [`CentralExtension::is_central`].
    pub fn from_surjection(
        total: &Algebra,
        projection: &LinearMap,
        base: &Algebra,
    ) -> Result<(Self, Matrix), Error> {
        let field = total.field();
        if base.field() != field {
            return Err(Error::FieldMismatch(field, base.field()));
        }
        if projection.source_dim() != total.dim() || projection.target_dim() != base.dim() {
            return Err(Error::ShapeMismatch(
                "projection does not match the algebras".into(),
            ));
        }
        if let Some((p, i, j)) = total.homomorphism_defect(projection, base) {
            return Err(Error::NotHomomorphism(format!(
                "projection fails on e{}{}e{}",
                i + 1,
                p.symbol(),
                j + 1
            )));
        }
        if !projection.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let (n, k) = (base.dim(), total.dim() - base.dim());
        let mut rows = projection.kernel().basis_vectors();
        for i in 0..n {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            rows.push(
                projection
                    .matrix()
                    .solve(&e)
                    .expect("projection is surjective"),
            );
        }
        let frame = Matrix::from_rows(field, total.dim(), rows);
        let rebased = total.change_basis(&frame)?;
        let mut cocycle = CochainPair::zero(field, n, k);
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    for c in 0..k {
                        cocycle.set(p, i, j, c, rebased.constant(p, k + i, k + j, c).clone());
                    }
                }
            }
        }
        let (projection, embedding, section) = coordinate_maps(field, n, k);
        let ext = CentralExtension {
            base: base.clone(),
            kernel_dim: k,
            total: rebased,
            projection,
            embedding,
            section,
            cocycle,
        };
        Ok((ext, frame))
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field()
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel_dim
    }

    pub fn total(&self) -> &Algebra {
        &self.total
    }

    pub fn projection(&self) -> &LinearMap {
        &self.projection
    }

    pub fn embedding(&self) -> &LinearMap {
        &self.embedding
    }

    pub fn section(&self) -> &LinearMap {
        &self.section
    }

    pub fn cocycle(&self) -> &CochainPair {
        &self.cocycle
    }

    /// The embedded kernel as a subspace of the total algebra.
    pub fn kernel(&self) -> Subspace {
        self.embedding.image()
    }

    pub fn is_central(&self) -> bool {
        self.total
            .center()
            .contains_subspace(&self.kernel())
            .expect("same ambient space")
    }

    fn require_central(&self) -> Result<(), Error> {
        if self.is_central() {
            Ok(())
        } else {
            Err(Error::NotCentral)
        }
    }

    /// Whether `s` is a linear map `L → H` with `π ∘ s = id`.
    pub fn is_section(&self, s: &LinearMap) -> bool {
        s.source_dim() == self.base.dim()
            && s.target_dim() == self.total.dim()
            && self.projection.compose(s).is_identity()
    }

    /// The defect `s(x) ∗ s(y) − s(x ∗ y)` of a section, in kernel coordinates. Uses the
    /// canonical section when `s` is `None`.
    pub fn to_cocycle(&self, s: Option<&LinearMap>) -> Result<CochainPair, Error> {
        let s = s.unwrap_or(&self.section);
        if !self.is_section(s) {
            return Err(Error::InvalidSection);
        }
        let (n, k) = (self.base.dim(), self.kernel_dim);
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| s.matrix().column(i)).collect();
        let mut out = CochainPair::zero(self.field(), n, k);
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.total.multiply(p, &images[i], &images[j]);
                    let rhs = s.apply(self.base.basis_product(p, i, j));
                    for c in 0..k {
                        out.set(p, i, j, c, &lhs[c] - &rhs[c]);
                    }
                    debug_assert!((k..k + n).all(|c| lhs[c] == rhs[c]));
                }
            }
        }
        Ok(out)
    }

    /// A section that is also a homomorphism, if one exists: `β = μ + ι∘g` where
    /// `δg` is the cocycle of the canonical section `μ`.
    pub fn splits(&self) -> Result<Option<LinearMap>, Error> {
        self.require_central()?;
        let f = self.to_cocycle(None)?;
        let Some(g) = is_coboundary(&self.base, &f)? else {
            return Ok(None);
        };
        let beta = self.section.add(&self.embedding.compose(&g));
        if !self.is_section(&beta) || !self.base.is_homomorphism(&beta, &self.total) {
            return Err(Error::Postcondition(
                "splitting map is not a homomorphic section".into(),
            ));
        }
        Ok(Some(beta))
    }

    /// The same extension viewed over an isomorphic copy of the base, `iso: L → L₂`.
    pub fn over_base(
        &self,
        iso: &LinearMap,
        new_base: &Algebra,
    ) -> Result<CentralExtension, Error> {
        if !iso.is_injective() || !self.base.is_homomorphism(iso, new_base) {
            return Err(Error::NotHomomorphism(
                "base change is not an isomorphism".into(),
            ));
        }
        Ok(Self::from_surjection(&self.total, &iso.compose(&self.projection), new_base)?.0)
    }

    /// Same base and kernel dimension, with cocycles differing by a coboundary.
    pub fn is_equivalent(&self, other: &CentralExtension) -> Result<bool, Error> {
        if self.base != other.base || self.kernel_dim != other.kernel_dim {
            return Ok(false);
        }
        let diff = self.cocycle.sub(&other.cocycle);
        Ok(is_coboundary(&self.base, &diff)?.is_some())
    }
}

/// The isomorphism taking original coordinates of a total algebra to the coordinates of
/// the frame returned by [`CentralExtension::from_surjection`].
pub fn frame_coordinates(frame: &Matrix) -> LinearMap {
    let n = frame.rows();
    let inv = frame.transpose().inverse().expect("frame is a basis");
    LinearMap::new(n, n, inv)
}

/// A morphism of extensions over the identity of the base: `τ: H → H₁` with `π₁∘τ = π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringMorphism {
    pub map: LinearMap,
    /// `τ` restricted to the kernels, `A → A₁`.
    pub restriction: LinearMap,
}

impl CoveringMorphism {
    /// Checks that `τ` is a homomorphism commuting with the projections and restricting to
    /// `restriction` on the kernel.
    pub fn verify(&self, source: &CentralExtension, target: &CentralExtension) -> bool {
        let tau = &self.map;
        tau.source_dim() == source.total.dim()
            && tau.target_dim() == target.total.dim()
            && source.total.is_homomorphism(tau, &target.total)
            && target.projection.compose(tau) == source.projection
            && tau.compose(&source.embedding) == target.embedding.compose(&self.restriction)
    }

    pub fn compose(&self, inner: &CoveringMorphism) -> CoveringMorphism {
        CoveringMorphism {
            map: self.map.compose(&inner.map),
            restriction: self.restriction.compose(&inner.restriction),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringSolution {
    /// One covering morphism (free parameters zero), if any exists.
    pub witness: Option<CoveringMorphism>,
    /// Dimension of the space of differences of covering morphisms; zero means any
    /// covering morphism is unique.
    pub solution_space_dim: usize,
}

impl CoveringSolution {
    pub fn covers(&self) -> bool {
        self.witness.is_some()
    }

    pub fn uniquely_covers(&self) -> bool {
        self.covers() && self.solution_space_dim == 0
    }
}

/// Solves for covering morphisms `E → E₁`.
///
/// Any `τ` with `π₁∘τ = π` has the form `(a, x) ↦ (φ(a) + t(x), x)`. Kernels being
/// central, `τ` is a homomorphism iff `φ(f∗(x, y)) + t(x ∗ y) = f₁∗(x, y)` on basis
/// pairs, which is linear in `(φ, t)`.
pub fn find_covering(
    e: &CentralExtension,
    e1: &CentralExtension,
) -> Result<CoveringSolution, Error> {
    if e.base != e1.base {
        return Err(Error::TowerMismatch(
            "extensions have different bases".into(),
        ));
    }
    e.require_central()?;
    e1.require_central()?;
    let field = e.field();
    let (n, k, k1) = (e.base.dim(), e.kernel_dim, e1.kernel_dim);
    let unknowns = k1 * (k + n);
    let phi = |a1: usize, a: usize| a1 * k + a;
    let t = |a1: usize, m: usize| k1 * k + a1 * n + m;

    let mut system = Matrix::zeros(field, 2 * n * n * k1, unknowns);
    let mut rhs = Vec::with_capacity(2 * n * n * k1);
    let mut row = 0;
    for p in Product::BOTH {
        for i in 0..n {
            for j in 0..n {
                let f = e.cocycle.value(p, i, j);
                let prod = e.base.basis_product(p, i, j);
                for a1 in 0..k1 {
                    for (a, v) in f.iter().enumerate() {
                        system[(row, phi(a1, a))] = v.clone();
                    }
                    for (m, v) in prod.iter().enumerate() {
                        system[(row, t(a1, m))] = v.clone();
                    }
                    rhs.push(e1.cocycle.get(p, i, j, a1).clone());
                    row += 1;
                }
            }
        }
    }

    let solution_space_dim = system.nullspace().dim();
    let witness = system.solve(&rhs).map(|x| {
        let mut tau = Matrix::zeros(field, k1 + n, k + n);
        let mut restriction = Matrix::zeros(field, k1, k);
        for a1 in 0..k1 {
            for a in 0..k {
                tau[(a1, a)] = x[phi(a1, a)].clone();
                restriction[(a1, a)] = x[phi(a1, a)].clone();
            }
            for m in 0..n {
                tau[(a1, k + m)] = x[t(a1, m)].clone();
            }
        }
        for m in 0..n {
            tau[(k1 + m, k + m)] = field.one();
        }
        CoveringMorphism {
            map: LinearMap::new(k + n, k1 + n, tau),
            restriction: LinearMap::new(k, k1, restriction),
        }
    });
    if let Some(w) = &witness {
        if !w.verify(e, e1) {
            return Err(Error::Postcondition(
                "covering witness fails verification".into(),
            ));
        }
    }
    Ok(CoveringSolution {
        witness,
        solution_space_dim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub algebra: Algebra,
    /// `T` as a subspace of `L ⊕ S`.
    pub subspace: Subspace,
    pub to_first: LinearMap,
    pub to_second: LinearMap,
}

/// `T = {(a, b) ∈ L × S : ψ(a) = μ(b)}` for surjective homomorphisms `ψ: L → H`,
/// `μ: S → H`, with componentwise products.
pub fn pullback(
    psi: &LinearMap,
    mu: &LinearMap,
    l: &Algebra,
    s: &Algebra,
    target: &Algebra,
) -> Result<Pullback, Error> {
    for (name, map, src) in [("ψ", psi, l), ("μ", mu, s)] {
        if map.source_dim() != src.dim() || map.target_dim() != target.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{name} does not match its algebras"
            )));
        }
        if !src.is_homomorphism(map, target) {
            return Err(Error::NotHomomorphism(format!(
                "{name} is not multiplicative"
            )));
        }
        if !map.is_surjective() {
            return Err(Error::NotSurjective);
        }
    }
    let field = l.field();
    let product = l.direct_sum(s)?;
    let condition = psi.matrix().hstack(&mu.matrix().scale(&-field.one()));
    let subspace = condition.nullspace();
    if !product.is_subalgebra(&subspace)? {
        return Err(Error::Postcondition(
            "pullback is not closed under products".into(),
        ));
    }
    let algebra = product.subalgebra(&subspace)?;
    let basis_cols = subspace.basis().transpose();
    let (nl, ns, dt) = (l.dim(), s.dim(), subspace.dim());
    let mut first = Matrix::zeros(field, nl, dt);
    let mut second = Matrix::zeros(field, ns, dt);
    for c in 0..dt {
        for r in 0..nl {
            first[(r, c)] = basis_cols[(r, c)].clone();
        }
        for r in 0..ns {
            second[(r, c)] = basis_cols[(nl + r, c)].clone();
        }
    }
    let to_first = LinearMap::new(dt, nl, first);
    let to_second = LinearMap::new(dt, ns, second);
    debug_assert!(algebra.is_homomorphism(&to_first, l));
    debug_assert!(algebra.is_homomorphism(&to_second, s));
    Ok(Pullback {
        algebra,
        subspace,
        to_first,
        to_second,
    })
}

/// Composes `E₁: B → G → L` with `E₂: C → L → H` into `A → G → H`, `A = ker(ψ∘φ)`.
/// The total `G` must be perfect; the result is checked to be central.
pub fn compose(e1: &CentralExtension, e2: &CentralExtension) -> Result<CentralExtension, Error> {
    if e1.base != e2.total {
        return Err(Error::TowerMismatch(
            "base of the first extension is not the total of the second".into(),
        ));
    }
    e1.total.require_perfect()?;
    let pi = e2.projection.compose(&e1.projection);
    let (composite, _) = CentralExtension::from_surjection(&e1.total, &pi, &e2.base)?;
    if !composite.is_central() {
        return Err(Error::Postcondition(
            "composite extension is not central".into(),
        ));
    }
    Ok(composite)
}

/// Why an extension is (or is not) certified universal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalityCertificate {
    pub central: bool,
    pub total_perfect: bool,
    pub total_multiplier_dim: usize,
    pub universal: bool,
    pub reasons: Vec<String>,
}

/// Certifies universality through: a universal extension has a perfect total; a perfect
/// algebra with trivial multiplier has only split central extensions, so its identity
/// extension is universal; and a central extension whose perfect total has a universal
/// identity extension is itself universal.
pub fn certify_universal(e: &CentralExtension) -> Result<UniversalityCertificate, Error> {
    let central = e.is_central();
    let derived = e.total.derived().dim();
    let total_perfect = derived == e.total.dim();
    let total_multiplier_dim = multiplier(&e.total)?.h2_dim;
    let mut reasons = Vec::new();
    if central {
        reasons.push("kernel lies in the center of the total algebra".to_string());
    } else {
        reasons.push("kernel is not central".to_string());
    }
    if total_perfect {
        reasons.push("total algebra is perfect".to_string());
    } else {
        reasons.push(format!(
            "total algebra is not perfect (dim H' = {derived} < dim H = {}); universal extensions have perfect totals",
            e.total.dim()
        ));
    }
    if total_multiplier_dim == 0 {
        reasons.push(
            "total algebra has trivial multiplier, so all its central extensions split".to_string(),
        );
    } else {
        reasons.push(format!(
            "total algebra has multiplier of dimension {total_multiplier_dim}"
        ));
    }
    let universal = central && total_perfect && total_multiplier_dim == 0;
    if universal {
        reasons.push(
            "identity extension of the total is universal; composing it with this central extension preserves universality"
                .to_string(),
        );
    }
    Ok(UniversalityCertificate {
        central,
        total_perfect,
        total_multiplier_dim,
        universal,
        reasons,
    })
}

/// The universal central extension of a perfect algebra: the kernel is `𝔽ᵏ`,
/// `k = dim M(L)`, and the cocycle stacks a basis of `H²(L, 𝔽)`.
pub fn universal_central_extension(l: &Algebra) -> Result<CentralExtension, Error> {
    universal_central_extension_in_order(l, None)
}

/// As [`universal_central_extension`], choosing the `H²` representatives after permuting
/// the cochain coordinates by `order`.
pub fn universal_central_extension_in_order(
    l: &Algebra,
    order: Option<&[usize]>,
) -> Result<CentralExtension, Error> {
    l.require_perfect()?;
    let h = h2_in_order(l, 1, order)?;
    let f = CochainPair::stack(l.field(), l.dim(), &h.representatives);
    let e = CentralExtension::from_cocycle(l, &f)?;
    let cert = certify_universal(&e)?;
    if !cert.universal {
        return Err(Error::Postcondition(format!(
            "constructed extension is not universal: {}",
            cert.reasons.join("; ")
        )));
    }
    Ok(e)
}

/// Checks on the cover `C` of a perfect algebra `L` and the multiplier `M` embedded in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningPairReport {
    pub cover: Algebra,
    pub multiplier_dim: usize,
    /// `C / M` has exactly the structure constants of `L`.
    pub quotient_is_base: bool,
    pub kernel_in_center: bool,
    pub kernel_in_derived: bool,
    pub cover_perfect: bool,
    pub cover_multiplier_dim: usize,
    /// `dim M(C / M)`; equals `multiplier_dim` when the central-quotient statement holds.
    pub quotient_multiplier_dim: usize,
}

impl DefiningPairReport {
    pub fn all_passed(&self) -> bool {
        self.quotient_is_base
            && self.kernel_in_center
            && self.kernel_in_derived
            && self.cover_perfect
            && self.cover_multiplier_dim == 0
            && self.quotient_multiplier_dim == self.multiplier_dim
    }
}

pub fn verify_cover_properties(l: &Algebra) -> Result<DefiningPairReport, Error> {
    let e = universal_central_extension(l)?;
    let cover = e.total().clone();
    let kernel = e.kernel();
    let (quotient, _) = cover.quotient(&kernel)?;
    let kernel_in_center = cover.center().contains_subspace(&kernel)?;
    let kernel_in_derived = cover.derived().contains_subspace(&kernel)?;
    Ok(DefiningPairReport {
        multiplier_dim: e.kernel_dim(),
        quotient_is_base: &quotient == l,
        kernel_in_center,
        kernel_in_derived,
        cover_perfect: cover.is_perfect(),
        cover_multiplier_dim: multiplier(&cover)?.h2_dim,
        quotient_multiplier_dim: multiplier(&quotient)?.h2_dim,
        cover,
    })
}

/// `x ↦ δg`-shifted section: `s + ι∘g`.
pub fn shifted_section(e: &CentralExtension, g: &LinearMap) -> LinearMap {
    e.section.add(&e.embedding.compose(g))
}

/// The coboundary of `g` over the extension's base.
pub fn section_change_cocycle(e: &CentralExtension, g: &LinearMap) -> CochainPair {
    coboundary(&e.base, g)
}
