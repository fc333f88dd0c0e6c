//! Concrete checks of the structural statements about central extensions, covers and
//! multipliers of perfect dialgebras, evaluated on one input algebra.
//!
//! Each row either passes, fails with a reason, or is skipped when the statement's
//! hypotheses do not hold for the input (so it says nothing about it).

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, LinearMap};
use crate::cohomology::{h2, multiplier, random_cocycle, CochainPair};
use crate::error::Error;
use crate::extensions::{
    certify_universal, compose, find_covering, frame_coordinates, pullback,
    universal_central_extension, universal_central_extension_in_order, verify_cover_properties,
    CentralExtension,
};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub label: &'static str,
    pub statement: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Number of random central extensions sampled per row that needs them.
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            samples: 8,
        }
    }
}

pub const STATEMENTS: [(&str, &str); 13] = [
    (
        "uce-unique-iso",
        "two universal central extensions of L are isomorphic over L, kernel onto kernel",
    ),
    (
        "uce-perfect",
        "a universal central extension has perfect total and base",
    ),
    (
        "perfect-cover-unique",
        "an extension with perfect total that covers another covers it uniquely",
    ),
    (
        "split-iff-universal",
        "for perfect L, 0→0→L→L→0 is universal iff every central extension of L splits",
    ),
    (
        "composite-central",
        "composing central extensions over a perfect total gives a central extension",
    ),
    (
        "composite-universal",
        "composing a universal extension with a central one gives a universal extension",
    ),
    (
        "trivial-universal-transfer",
        "if 0→0→H→L→0 is universal then so is 0→0→L→L→0",
    ),
    (
        "cover-construction",
        "the universal extension's total C is a perfect cover: C/M ≅ L, M ⊆ Z(C) ∩ C′",
    ),
    (
        "cover-universal",
        "the cover extension of a perfect algebra is universal",
    ),
    (
        "kernel-is-multiplier",
        "the kernel of a universal central extension has dimension dim M(L)",
    ),
    (
        "vanishing-h2",
        "perfect L with M(L) = 0 has H²(L, A) = 0 for central A",
    ),
    (
        "central-quotient",
        "perfect L with M(L) = 0 and central Z satisfies dim M(L/Z) = dim Z",
    ),
    (
        "cover-perfect-trivial-multiplier",
        "the cover C of a perfect algebra satisfies C = C′ and M(C) = 0",
    ),
];

struct Context {
    l: Algebra,
    perfect: bool,
    multiplier_dim: usize,
    uce: Option<CentralExtension>,
    samples: Vec<CentralExtension>,
}

fn row(label: &'static str, outcome: Outcome, detail: impl Into<String>) -> Row {
    let statement = STATEMENTS
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, s)| *s)
        .expect("known label");
    Row {
        label,
        statement,
        outcome,
        detail: detail.into(),
    }
}

fn check(label: &'static str, ok: bool, detail: impl Into<String>) -> Row {
    row(
        label,
        if ok { Outcome::Pass } else { Outcome::Fail },
        detail,
    )
}

fn not_perfect(label: &'static str) -> Row {
    row(label, Outcome::Skip, "L is not perfect")
}

/// Random central extensions of `l` by `𝔽ᵏ` with `k` cycling through 1 and 2, plus the
/// split extension by `𝔽`.
pub fn sample_extensions(
    l: &Algebra,
    seed: u64,
    count: usize,
) -> Result<Vec<CentralExtension>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![CentralExtension::from_cocycle(
        l,
        &CochainPair::zero(l.field(), l.dim(), 1),
    )?];
    for i in 0..count {
        let f = random_cocycle(l, 1 + i % 2, &mut rng)?;
        out.push(CentralExtension::from_cocycle(l, &f)?);
    }
    Ok(out)
}

/// Runs every row on `l`. Errors only on malformed input (axiom failure).
pub fn verify_theorems(l: &Algebra, options: SuiteOptions) -> Result<Vec<Row>, Error> {
    let report = l.check_axioms();
    if !report.passed() {
        return Err(Error::AxiomFailure(report.violations.len()));
    }
    let perfect = l.is_perfect();
    let ctx = Context {
        l: l.clone(),
        perfect,
        multiplier_dim: multiplier(l)?.h2_dim,
        uce: if perfect {
            Some(universal_central_extension(l)?)
        } else {
            None
        },
        samples: sample_extensions(l, options.seed, options.samples)?,
    };
    Ok(vec![
        uce_unique_iso(&ctx)?,
        uce_perfect(&ctx)?,
        perfect_cover_unique(&ctx)?,
        split_iff_universal(&ctx)?,
        composite_central(&ctx)?,
        composite_universal(&ctx)?,
        trivial_universal_transfer(&ctx)?,
        cover_construction(&ctx)?,
        cover_universal(&ctx)?,
        kernel_is_multiplier(&ctx)?,
        vanishing_h2(&ctx)?,
        central_quotient(&ctx)?,
        cover_perfect_trivial_multiplier(&ctx)?,
    ])
}

pub fn all_passed(rows: &[Row]) -> bool {
    rows.iter().all(|r| r.outcome != Outcome::Fail)
}

/// Builds a universal central extension whose `H²` representatives are picked in reverse
/// cochain coordinate order, so the two constructions differ whenever they can.
pub fn reversed_uce(l: &Algebra) -> Result<CentralExtension, Error> {
    let len = crate::cohomology::coordinate_count(l.dim(), 1);
    let order: Vec<usize> = (0..len).rev().collect();
    universal_central_extension_in_order(l, Some(&order))
}

/// Checks two universal extensions of the same algebra are isomorphic over it: unique
/// coverings both ways, mutually inverse, with the kernel restriction onto.
pub fn check_mutual_isomorphism(
    a: &CentralExtension,
    b: &CentralExtension,
) -> Result<Result<(), String>, Error> {
    let ab = find_covering(a, b)?;
    let ba = find_covering(b, a)?;
    let (Some(f), Some(g)) = (&ab.witness, &ba.witness) else {
        return Ok(Err("a covering morphism is missing".into()));
    };
    if ab.solution_space_dim != 0 || ba.solution_space_dim != 0 {
        return Ok(Err("covering morphisms are not unique".into()));
    }
    if !g.compose(f).map.is_identity() || !f.compose(g).map.is_identity() {
        return Ok(Err("covering morphisms are not mutually inverse".into()));
    }
    if !f.restriction.is_surjective() || !g.restriction.is_surjective() {
        return Ok(Err("kernel restriction is not onto".into()));
    }
    Ok(Ok(()))
}

fn uce_unique_iso(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "uce-unique-iso";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    let other = reversed_uce(&ctx.l)?;
    Ok(match check_mutual_isomorphism(uce, &other)? {
        Ok(()) => check(
            LABEL,
            true,
            format!(
                "kernel dim {}; cocycles {}",
                uce.kernel_dim(),
                if uce.cocycle() == other.cocycle() {
                    "coincide"
                } else {
                    "differ"
                }
            ),
        ),
        Err(why) => check(LABEL, false, why),
    })
}

/// `L ⊕ L/L′ → L`: a central extension with kernel `0 ⊕ L/L′`.
pub fn abelianization_extension(l: &Algebra) -> Result<CentralExtension, Error> {
    let (ab, _) = l.quotient(&l.derived())?;
    let total = l.direct_sum(&ab)?;
    let n = l.dim();
    let mut proj = Matrix::zeros(l.field(), n, total.dim());
    for i in 0..n {
        proj[(i, i)] = l.field().one();
    }
    let (e, _) =
        CentralExtension::from_surjection(&total, &LinearMap::new(total.dim(), n, proj), l)?;
    Ok(e)
}

fn uce_perfect(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "uce-perfect";
    if let Some(uce) = &ctx.uce {
        return Ok(check(
            LABEL,
            uce.total().is_perfect() && ctx.perfect,
            format!("total dim {} perfect", uce.total().dim()),
        ));
    }
    // The identity extension of a non-perfect L admits several coverings of L ⊕ L/L′.
    let id = CentralExtension::identity(&ctx.l);
    let aux = abelianization_extension(&ctx.l)?;
    let sol = find_covering(&id, &aux)?;
    let cert = certify_universal(&id)?;
    Ok(check(
        LABEL,
        aux.is_central() && sol.covers() && sol.solution_space_dim > 0 && !cert.universal,
        format!(
            "identity extension covers L ⊕ L/L′ in a {}-dimensional family, so it is not universal",
            sol.solution_space_dim
        ),
    ))
}

fn perfect_cover_unique(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "perfect-cover-unique";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    let mut sources = vec![uce.clone(), CentralExtension::identity(&ctx.l)];
    sources.extend(
        ctx.samples
            .iter()
            .filter(|e| e.total().is_perfect())
            .cloned(),
    );
    let mut covered = 0;
    for source in &sources {
        for target in &ctx.samples {
            let sol = find_covering(source, target)?;
            if sol.covers() {
                if sol.solution_space_dim != 0 {
                    return Ok(check(
                        LABEL,
                        false,
                        "a perfect-total extension covers non-uniquely",
                    ));
                }
                covered += 1;
            }
        }
    }
    Ok(check(
        LABEL,
        true,
        format!(
            "{covered} coverings from {} perfect-total sources, all unique",
            sources.len()
        ),
    ))
}

fn split_iff_universal(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "split-iff-universal";
    if !ctx.perfect {
        return Ok(not_perfect(LABEL));
    }
    let id = CentralExtension::identity(&ctx.l);
    let universal = certify_universal(&id)?.universal;
    let mut split = 0;
    for e in &ctx.samples {
        if e.splits()?.is_some() {
            split += 1;
        }
    }
    let all_split = split == ctx.samples.len();
    if ctx.multiplier_dim == 0 {
        let covers_all = ctx
            .samples
            .iter()
            .map(|e| find_covering(&id, e).map(|s| s.uniquely_covers()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .all(|b| b);
        return Ok(check(
            LABEL,
            universal && all_split && covers_all,
            format!(
                "identity extension universal; {split}/{} sampled extensions split",
                ctx.samples.len()
            ),
        ));
    }
    let rep = &h2(&ctx.l, 1)?.representatives[0];
    let witness = CentralExtension::from_cocycle(&ctx.l, rep)?;
    let non_split = witness.splits()?.is_none();
    let uncovered = !find_covering(&id, &witness)?.covers();
    Ok(check(
        LABEL,
        !universal && non_split && uncovered,
        "identity extension not universal; an H² representative gives a non-split extension it cannot cover",
    ))
}

/// The quotient `L → L/Z(L)` as an extension, with the coordinate change from `L` to the
/// extension's (rebased) total algebra.
pub fn center_quotient_extension(l: &Algebra) -> Result<(CentralExtension, LinearMap), Error> {
    let (q, p) = l.quotient(&l.center())?;
    let (e, frame) = CentralExtension::from_surjection(l, &p, &q)?;
    Ok((e, frame_coordinates(&frame)))
}

/// `C → L → L/Z(L)` for a universal `C → L`.
fn center_tower(uce: &CentralExtension) -> Result<(CentralExtension, CentralExtension), Error> {
    let (down, sigma) = center_quotient_extension(uce.base())?;
    Ok((uce.over_base(&sigma, down.total())?, down))
}

fn composite_central(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "composite-central";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    let (upper, down) = center_tower(uce)?;
    let first = compose(&upper, &down)?;
    let second = compose(&CentralExtension::identity(uce.total()), uce)?;
    Ok(check(
        LABEL,
        first.is_central() && second.is_central(),
        format!(
            "C → L → L/Z(L) has central kernel of dim {}; C → C → L has kernel dim {}",
            first.kernel_dim(),
            second.kernel_dim()
        ),
    ))
}

fn composite_universal(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "composite-universal";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    let (upper, psi_ext) = center_tower(uce)?;
    let composite = compose(&upper, &psi_ext)?;
    let h = psi_ext.base();
    let cert = certify_universal(&composite)?;
    let mut targets = sample_extensions(h, 1, 2)?;
    targets.push(reversed_uce(h)?);
    let mut ok = cert.universal;
    let mut dims_ok = true;
    for e4 in &targets {
        ok &= find_covering(&composite, e4)?.uniquely_covers();
        let l = psi_ext.total();
        let t = pullback(psi_ext.projection(), e4.projection(), l, e4.total(), h)?;
        dims_ok &= t.algebra.dim() == l.dim() + e4.total().dim() - h.dim();
    }
    Ok(check(
        LABEL,
        ok && dims_ok,
        format!(
            "C → L/Z(L) certified universal and uniquely covers {} extensions; pullback dimensions {}",
            targets.len(),
            if dims_ok { "match" } else { "mismatch" }
        ),
    ))
}

fn trivial_universal_transfer(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "trivial-universal-transfer";
    if !ctx.perfect {
        return Ok(not_perfect(LABEL));
    }
    // H = L with its basis reversed, φ: H → L the isomorphism
    let n = ctx.l.dim();
    let field = ctx.l.field();
    let mut rev = Matrix::zeros(field, n, n);
    for i in 0..n {
        rev[(i, n - 1 - i)] = field.one();
    }
    let h = ctx.l.change_basis(&rev)?;
    let phi = LinearMap::new(n, n, rev.transpose());
    let (e, _) = CentralExtension::from_surjection(&h, &phi, &ctx.l)?;
    let hyp = certify_universal(&e)?.universal;
    if !hyp {
        return Ok(row(
            LABEL,
            Outcome::Skip,
            "0→0→H→L→0 is not universal since M(L) ≠ 0",
        ));
    }
    let id = CentralExtension::identity(&ctx.l);
    let mut split = true;
    for target in &ctx.samples {
        split &= find_covering(&e, target)?.covers() && target.splits()?.is_some();
    }
    Ok(check(
        LABEL,
        certify_universal(&id)?.universal && split,
        "0→0→H→L→0 universal; every sampled extension splits and the identity extension is universal",
    ))
}

fn cover_construction(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "cover-construction";
    if !ctx.perfect {
        return Ok(not_perfect(LABEL));
    }
    let r = verify_cover_properties(&ctx.l)?;
    Ok(check(
        LABEL,
        r.quotient_is_base && r.kernel_in_center && r.kernel_in_derived && r.cover_perfect,
        format!(
            "C/M = L: {}, M ⊆ Z(C): {}, M ⊆ C′: {}, C perfect: {}",
            r.quotient_is_base, r.kernel_in_center, r.kernel_in_derived, r.cover_perfect
        ),
    ))
}

fn cover_universal(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "cover-universal";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    let cert = certify_universal(uce)?;
    let mut covered = true;
    for target in &ctx.samples {
        covered &= find_covering(uce, target)?.uniquely_covers();
    }
    Ok(check(
        LABEL,
        cert.universal && covered,
        format!(
            "certified; uniquely covers all {} sampled extensions",
            ctx.samples.len()
        ),
    ))
}

fn kernel_is_multiplier(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "kernel-is-multiplier";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    let other = reversed_uce(&ctx.l)?;
    Ok(check(
        LABEL,
        uce.kernel_dim() == ctx.multiplier_dim && other.kernel_dim() == ctx.multiplier_dim,
        format!(
            "kernel dim {} = dim M(L) {}",
            uce.kernel_dim(),
            ctx.multiplier_dim
        ),
    ))
}

fn vanishing_h2(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "vanishing-h2";
    if !ctx.perfect {
        return Ok(not_perfect(LABEL));
    }
    if ctx.multiplier_dim != 0 {
        return Ok(row(LABEL, Outcome::Skip, "M(L) ≠ 0"));
    }
    let dims: Vec<usize> = (1..=3)
        .map(|k| h2(&ctx.l, k).map(|r| r.h2_dim))
        .collect::<Result<_, _>>()?;
    Ok(check(
        LABEL,
        dims.iter().all(|&d| d == 0),
        format!("dim H²(L, 𝔽ᵏ) for k = 1, 2, 3: {dims:?}"),
    ))
}

/// `dim M(L/Z)` against `dim Z` for a central ideal `Z` of `L`.
pub fn central_quotient_dims(
    l: &Algebra,
    z: &crate::linalg::Subspace,
) -> Result<(usize, usize), Error> {
    let (q, _) = l.quotient(z)?;
    Ok((multiplier(&q)?.h2_dim, z.dim()))
}

fn central_quotient(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "central-quotient";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    // always applicable to the cover with its embedded multiplier
    let (mc, zc) = central_quotient_dims(uce.total(), &uce.kernel())?;
    let mut ok = mc == zc;
    let mut detail = format!("cover: dim M(C/M) = {mc}, dim M = {zc}");
    if ctx.multiplier_dim == 0 {
        let z = ctx.l.center();
        let (ml, zl) = central_quotient_dims(&ctx.l, &z)?;
        ok &= ml == zl;
        detail.push_str(&format!("; L: dim M(L/Z(L)) = {ml}, dim Z(L) = {zl}"));
    }
    Ok(check(LABEL, ok, detail))
}

fn cover_perfect_trivial_multiplier(ctx: &Context) -> Result<Row, Error> {
    const LABEL: &str = "cover-perfect-trivial-multiplier";
    let Some(uce) = &ctx.uce else {
        return Ok(not_perfect(LABEL));
    };
    let c = uce.total();
    let mc = multiplier(c)?.h2_dim;
    Ok(check(
        LABEL,
        c.is_perfect() && mc == 0,
        format!(
            "dim C = {}, dim C′ = {}, dim M(C) = {mc}",
            c.dim(),
            c.derived().dim()
        ),
    ))
}
