//! Generators for the example algebras used by tests and the CLI, and the named catalog.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Product};
use crate::cohomology::random_scalar;
use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};

/// The `n`-dimensional algebra with all products zero.
pub fn gen_abelian(field: FieldSpec, n: usize) -> Algebra {
    Algebra::zero(field, n)
}

/// An associative algebra turned into a dialgebra by using its product for both `⊣` and
/// `⊢`. `table` lists `(i, j, k, c)` meaning `e_i e_j` has `c` at `e_k` (0-based).
pub fn gen_double_assoc(
    field: FieldSpec,
    n: usize,
    table: &[(usize, usize, usize, Scalar)],
) -> Result<Algebra, Error> {
    let mut alg = Algebra::zero(field, n);
    for (i, j, k, c) in table {
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::InvalidParameter(format!(
                "table index ({i}, {j}, {k}) outside dimension {n}"
            )));
        }
        for p in Product::BOTH {
            alg.set_constant(p, *i, *j, *k, c.clone());
        }
    }
    if !alg.check_axioms().passed() {
        return Err(Error::InvalidParameter("table is not associative".into()));
    }
    Ok(alg)
}

fn matrix_unit_table(field: FieldSpec, m: usize) -> Vec<(usize, usize, usize, Scalar)> {
    let unit = |a: usize, b: usize| a * m + b;
    let mut table = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for d in 0..m {
                table.push((unit(a, b), unit(b, d), unit(a, d), field.one()));
            }
        }
    }
    table
}

/// The `m × m` matrix algebra with both products equal to matrix multiplication, on the
/// matrix units `E_ab` ordered row-major.
pub fn gen_matrix_double(field: FieldSpec, m: usize) -> Result<Algebra, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "matrix size must be positive".into(),
        ));
    }
    gen_double_assoc(field, m * m, &matrix_unit_table(field, m))
}

/// `span{t, …, tⁿ}` with `tᵃ ∗ tᵇ = tᵃ⁺ᵇ` (zero past `tⁿ`) for both products.
pub fn gen_truncated_poly(field: FieldSpec, n: usize) -> Result<Algebra, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "truncation degree must be positive".into(),
        ));
    }
    let mut table = Vec::new();
    for a in 1..=n {
        for b in 1..=n - a {
            if a + b <= n {
                table.push((a - 1, b - 1, a + b - 1, field.one()));
            }
        }
    }
    gen_double_assoc(field, n, &table)
}

/// `A ⊕ A` for `A = M_m(𝔽)`, with `(a, u) ⊣ (b, v) = (ab, ub)` and
/// `(a, u) ⊢ (b, v) = (ab, av)`: the algebra part first, the bimodule part second.
/// Perfect, and not of the doubled form.
pub fn gen_hemisemidirect(field: FieldSpec, m: usize) -> Result<Algebra, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "matrix size must be positive".into(),
        ));
    }
    let shift = m * m;
    let mut alg = Algebra::zero(field, 2 * shift);
    for (x, y, z, c) in matrix_unit_table(field, m) {
        alg.set_constant(Product::Left, x, y, z, c.clone());
        alg.set_constant(Product::Right, x, y, z, c.clone());
        alg.set_constant(Product::Left, x + shift, y, z + shift, c.clone());
        alg.set_constant(Product::Right, x, y + shift, z + shift, c);
    }
    alg.validated()
}

/// `span X` with `x ⊣ y = x` and `x ⊢ y = y` for basis elements.
pub fn gen_projections(field: FieldSpec, n: usize) -> Result<Algebra, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("set size must be positive".into()));
    }
    let mut alg = Algebra::zero(field, n);
    for x in 0..n {
        for y in 0..n {
            alg.set_constant(Product::Left, x, y, x, field.one());
            alg.set_constant(Product::Right, x, y, y, field.one());
        }
    }
    Ok(alg)
}

/// The algebra of the `r × c` rectangular band, `s_ij s_kl = s_il`, doubled. Perfect with
/// an `(r-1)(c-1)`-dimensional center.
pub fn gen_rect_band(field: FieldSpec, r: usize, c: usize) -> Result<Algebra, Error> {
    if r == 0 || c == 0 {
        return Err(Error::InvalidParameter(
            "band dimensions must be positive".into(),
        ));
    }
    let mut table = Vec::new();
    for i in 0..r {
        for j in 0..c {
            for k in 0..r {
                for l in 0..c {
                    table.push((i * c + j, k * c + l, i * c + l, field.one()));
                }
            }
        }
    }
    gen_double_assoc(field, r * c, &table)
}

/// [`gen_rect_band`] modulo its center.
pub fn gen_rect_band_quotient(field: FieldSpec, r: usize, c: usize) -> Result<Algebra, Error> {
    let band = gen_rect_band(field, r, c)?;
    let (quotient, _) = band.quotient(&band.center())?;
    Ok(quotient)
}

/// `D ⊗ A` for a dialgebra `D` and an associative algebra `A` given in doubled form:
/// `(d ⊗ a) ∗ (d' ⊗ a') = (d ∗ d') ⊗ aa'`, basis `d_i ⊗ a_x` at index `i·dim A + x`.
pub fn gen_tensor(d: &Algebra, a: &Algebra) -> Result<Algebra, Error> {
    if d.field() != a.field() {
        return Err(Error::FieldMismatch(d.field(), a.field()));
    }
    let m = a.dim();
    let doubled = (0..m).all(|x| {
        (0..m)
            .all(|y| a.basis_product(Product::Left, x, y) == a.basis_product(Product::Right, x, y))
    });
    if !doubled {
        return Err(Error::InvalidParameter(
            "second factor must have equal products".into(),
        ));
    }
    let mut out = Algebra::zero(d.field(), d.dim() * m);
    for (p, i, j, k, c) in d.nonzero_constants() {
        for (_, x, y, z, e) in a
            .nonzero_constants()
            .into_iter()
            .filter(|t| t.0 == Product::Left)
        {
            out.set_constant(p, i * m + x, j * m + y, k * m + z, &c * &e);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomOptions {
    /// Probability that a given structure constant is nonzero.
    pub density: f64,
    /// Rejection-sampling budget.
    pub max_attempts: usize,
    /// Also reject algebras whose products all vanish.
    pub require_nonabelian: bool,
}

impl Default for RandomOptions {
    fn default() -> Self {
        RandomOptions {
            density: 0.1,
            max_attempts: 100_000,
            require_nonabelian: true,
        }
    }
}

/// A random dialgebra: sparse random structure constants, rejected until the axioms hold.
/// Deterministic for a fixed seed.
pub fn gen_random(
    field: FieldSpec,
    n: usize,
    seed: u64,
    options: RandomOptions,
) -> Result<Algebra, Error> {
    if !(0.0..=1.0).contains(&options.density) {
        return Err(Error::InvalidParameter("density must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..options.max_attempts {
        let mut alg = Algebra::zero(field, n);
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if rng.gen_bool(options.density) {
                            let v = random_scalar(field, &mut rng);
                            alg.set_constant(p, i, j, k, v);
                        }
                    }
                }
            }
        }
        if options.require_nonabelian && alg.nonzero_constants().is_empty() {
            continue;
        }
        if alg.check_axioms().passed() {
            return Ok(alg);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no dialgebra found in {} attempts",
        options.max_attempts
    )))
}

/// Recorded invariants of a catalog algebra (over ℚ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedInvariants {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub perfect: bool,
    pub multiplier_dim: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Generator call that reproduces the entry, e.g. `matrix 2`.
    pub generator: &'static str,
    pub expected: ExpectedInvariants,
}

impl CatalogEntry {
    pub fn build(&self, field: FieldSpec) -> Result<Algebra, Error> {
        let mut parts = self.generator.split_whitespace();
        let family = parts.next().unwrap_or_default();
        let params: Vec<&str> = parts.collect();
        generate(family, &params, field)
    }
}

/// Runs a generator by family name: `abelian n`, `k1`, `matrix m`, `truncpoly n`,
/// `hemisemidirect m`, `projections n`, `rectband r c`, `rectquot r c`,
/// `projquot n r c` (projections ⊗ rectquot), `sum <family> <param> <family> <param>`,
/// `random n seed`.
pub fn generate(family: &str, params: &[&str], field: FieldSpec) -> Result<Algebra, Error> {
    let num = |idx: usize| -> Result<usize, Error> {
        params
            .get(idx)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidParameter(format!("{family}: missing numeric parameter")))
    };
    match family {
        "abelian" => Ok(gen_abelian(field, num(0)?)),
        "matrix" => gen_matrix_double(field, num(0)?),
        "truncpoly" => gen_truncated_poly(field, num(0)?),
        "hemisemidirect" => gen_hemisemidirect(field, num(0)?),
        "k1" => gen_matrix_double(field, 1),
        "projections" => gen_projections(field, num(0)?),
        "rectband" => gen_rect_band(field, num(0)?, num(1)?),
        "rectquot" => gen_rect_band_quotient(field, num(0)?, num(1)?),
        "projquot" => gen_tensor(
            &gen_projections(field, num(0)?)?,
            &gen_rect_band_quotient(field, num(1)?, num(2)?)?,
        ),
        "random" => gen_random(field, num(0)?, num(1)? as u64, RandomOptions::default()),
        "sum" => {
            if params.len() != 4 {
                return Err(Error::InvalidParameter(
                    "sum takes <family> <param> <family> <param>".into(),
                ));
            }
            let a = generate(params[0], &params[1..2], field)?;
            let b = generate(params[2], &params[3..4], field)?;
            a.direct_sum(&b)
        }
        other => Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
    }
}

const fn inv(
    dim: usize,
    derived_dim: usize,
    center_dim: usize,
    perfect: bool,
    multiplier_dim: Option<usize>,
) -> ExpectedInvariants {
    ExpectedInvariants {
        dim,
        derived_dim,
        center_dim,
        perfect,
        multiplier_dim,
    }
}

/// The named example algebras.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "d1",
            generator: "abelian 1",
            expected: inv(1, 0, 1, false, Some(2)),
        },
        CatalogEntry {
            name: "ab2",
            generator: "abelian 2",
            expected: inv(2, 0, 2, false, Some(8)),
        },
        CatalogEntry {
            name: "k1",
            generator: "k1",
            expected: inv(1, 1, 0, true, Some(0)),
        },
        CatalogEntry {
            name: "n2",
            generator: "truncpoly 2",
            expected: inv(2, 1, 1, false, Some(2)),
        },
        CatalogEntry {
            name: "n3",
            generator: "truncpoly 3",
            expected: inv(3, 2, 1, false, Some(2)),
        },
        CatalogEntry {
            name: "k1d1",
            generator: "sum k1 1 abelian 1",
            expected: inv(2, 1, 1, false, Some(2)),
        },
        CatalogEntry {
            name: "k1k1",
            generator: "sum k1 1 k1 1",
            expected: inv(2, 2, 0, true, Some(0)),
        },
        CatalogEntry {
            name: "hs1",
            generator: "hemisemidirect 1",
            expected: inv(2, 2, 0, true, Some(0)),
        },
        CatalogEntry {
            name: "proj2",
            generator: "projections 2",
            expected: inv(2, 2, 0, true, Some(0)),
        },
        CatalogEntry {
            name: "rq22",
            generator: "rectquot 2 2",
            expected: inv(3, 3, 0, true, Some(1)),
        },
        CatalogEntry {
            name: "m2d",
            generator: "matrix 2",
            expected: inv(4, 4, 0, true, Some(0)),
        },
        CatalogEntry {
            name: "rb22",
            generator: "rectband 2 2",
            expected: inv(4, 4, 1, true, Some(0)),
        },
        CatalogEntry {
            name: "rq23",
            generator: "rectquot 2 3",
            expected: inv(4, 4, 0, true, Some(2)),
        },
        CatalogEntry {
            name: "rq33",
            generator: "rectquot 3 3",
            expected: inv(5, 5, 0, true, Some(4)),
        },
        CatalogEntry {
            name: "rb23",
            generator: "rectband 2 3",
            expected: inv(6, 6, 2, true, Some(0)),
        },
        CatalogEntry {
            name: "p2rq22",
            generator: "projquot 2 2 2",
            expected: inv(6, 6, 0, true, Some(2)),
        },
        CatalogEntry {
            name: "hs2",
            generator: "hemisemidirect 2",
            expected: inv(8, 8, 0, true, Some(0)),
        },
        CatalogEntry {
            name: "m3d",
            generator: "matrix 3",
            expected: inv(9, 9, 0, true, Some(0)),
        },
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn generator_examples() {
        let m2d = gen_matrix_double(Q, 2).unwrap();
        assert!(m2d.is_perfect());
        assert_eq!(m2d.dim(), 4);
        let n2 = gen_truncated_poly(Q, 2).unwrap();
        assert_eq!(
            n2,
            Algebra::from_int_constants(
                Q,
                2,
                &[(Product::Left, 0, 0, 1, 1), (Product::Right, 0, 0, 1, 1)]
            )
        );
        assert_eq!(gen_abelian(Q, 1), Algebra::zero(Q, 1));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(gen_matrix_double(Q, 0).is_err());
        assert!(gen_truncated_poly(Q, 0).is_err());
        let not_assoc = [(0, 0, 1, Q.one()), (1, 0, 0, Q.one())];
        assert!(gen_double_assoc(Q, 2, &not_assoc).is_err());
        assert!(gen_double_assoc(Q, 1, &[(0, 0, 3, Q.one())]).is_err());
        assert!(generate("nope", &[], Q).is_err());
        assert!(generate("matrix", &[], Q).is_err());
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        let f3 = FieldSpec::Prime(3);
        let a = gen_random(f3, 3, 7, RandomOptions::default()).unwrap();
        let b = gen_random(f3, 3, 7, RandomOptions::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.check_axioms().passed());
        assert!(!a.nonzero_constants().is_empty());
    }

    #[test]
    fn band_families() {
        let rb = gen_rect_band(Q, 2, 3).unwrap();
        assert!(rb.is_perfect());
        assert_eq!(rb.center().dim(), 2);
        let rq = gen_rect_band_quotient(Q, 2, 3).unwrap();
        assert_eq!(rq.dim(), 4);
        assert!(rq.is_perfect());
        let proj = gen_projections(Q, 3).unwrap();
        assert!(proj.check_axioms().passed());
        let t = gen_tensor(&proj, &rq).unwrap();
        assert_eq!(t.dim(), 12);
        assert!(t.check_axioms().passed());
        assert!(gen_tensor(&rq, &proj).is_err());
    }

    #[test]
    fn catalog_invariants_match() {
        for entry in catalog() {
            let l = entry.build(Q).unwrap();
            let e = entry.expected;
            assert!(l.check_axioms().passed(), "{}", entry.name);
            assert_eq!(l.dim(), e.dim, "{}", entry.name);
            assert_eq!(l.derived().dim(), e.derived_dim, "{}", entry.name);
            assert_eq!(l.center().dim(), e.center_dim, "{}", entry.name);
            assert_eq!(l.is_perfect(), e.perfect, "{}", entry.name);
        }
    }

    #[test]
    fn hemisemidirect_is_perfect_dialgebra() {
        let hs = gen_hemisemidirect(Q, 1).unwrap();
        assert!(hs.check_axioms().passed());
        assert!(hs.is_perfect());
        assert_ne!(
            hs.basis_product(Product::Left, 1, 0),
            hs.basis_product(Product::Right, 1, 0)
        );
    }
}
