//! Brute-force oracles over small prime fields, written with plain integer tables and no
//! linear algebra, checked against the library.

use dialgebra::catalog::{catalog, gen_matrix_double};
use dialgebra::cohomology::{
    coordinate_count, h2, is_coboundary, is_cocycle, multiplier, CochainPair,
};
use dialgebra::extensions::{extension_algebra, CentralExtension};
use dialgebra::{Algebra, FieldSpec, Identity, Product};

/// Structure constants mod p: `t[side][(i*n + j)*n + k]`, side 0 = ⊣, 1 = ⊢.
#[derive(Clone)]
struct Table {
    n: usize,
    p: u32,
    t: [Vec<u32>; 2],
}

fn residue(s: &dialgebra::Scalar) -> u32 {
    let (num, den) = s.to_ratio();
    assert_eq!(den, 1.into());
    u32::try_from(num).unwrap()
}

impl Table {
    fn of(a: &Algebra) -> Table {
        let FieldSpec::Prime(p) = a.field() else {
            panic!("prime field only")
        };
        let n = a.dim();
        let mut t = [vec![0; n * n * n], vec![0; n * n * n]];
        for (prod, i, j, k, v) in a.nonzero_constants() {
            t[prod.index()][(i * n + j) * n + k] = residue(&v);
        }
        Table { n, p, t }
    }

    fn to_algebra(&self) -> Algebra {
        let field = FieldSpec::Prime(self.p);
        let mut a = Algebra::zero(field, self.n);
        for (side, prod) in Product::BOTH.iter().enumerate() {
            for (idx, &v) in self.t[side].iter().enumerate() {
                let (i, j, k) = (idx / (self.n * self.n), idx / self.n % self.n, idx % self.n);
                a.set_constant(*prod, i, j, k, field.from_i64(v as i64));
            }
        }
        a
    }

    fn mul(&self, side: usize, x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = self.n;
        let mut out = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                let c = x[i] * y[j] % self.p;
                if c == 0 {
                    continue;
                }
                for k in 0..n {
                    out[k] = (out[k] + c * self.t[side][(i * n + j) * n + k]) % self.p;
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// Which of the five identities fail somewhere, in declaration order.
    fn failing_identities(&self) -> [bool; 5] {
        let (l, r) = (0, 1);
        let mut bad = [false; 5];
        for a in 0..self.n {
            for b in 0..self.n {
                for c in 0..self.n {
                    let (x, y, z) = (self.basis(a), self.basis(b), self.basis(c));
                    let m = |s, u: &[u32], v: &[u32]| self.mul(s, u, v);
                    bad[0] |= m(l, &m(l, &x, &y), &z) != m(l, &x, &m(l, &y, &z));
                    bad[1] |= m(r, &m(r, &x, &y), &z) != m(r, &x, &m(r, &y, &z));
                    bad[2] |= m(l, &x, &m(l, &y, &z)) != m(l, &x, &m(r, &y, &z));
                    bad[3] |= m(l, &m(r, &x, &y), &z) != m(r, &x, &m(l, &y, &z));
                    bad[4] |= m(r, &m(l, &x, &y), &z) != m(r, &m(r, &x, &y), &z);
                }
            }
        }
        bad
    }

    /// Scalar cochain `f[side][i*n + j]` evaluated bilinearly.
    fn eval(&self, f: &[Vec<u32>; 2], side: usize, x: &[u32], y: &[u32]) -> u32 {
        let mut acc = 0;
        for i in 0..self.n {
            for j in 0..self.n {
                acc = (acc + x[i] * y[j] % self.p * f[side][i * self.n + j]) % self.p;
            }
        }
        acc
    }

    /// The five linearized identities on all basis triples.
    fn is_cocycle(&self, f: &[Vec<u32>; 2]) -> bool {
        let (l, r) = (0, 1);
        for a in 0..self.n {
            for b in 0..self.n {
                for c in 0..self.n {
                    let (x, y, z) = (self.basis(a), self.basis(b), self.basis(c));
                    let e = |s, u: &[u32], v: &[u32]| self.eval(f, s, u, v);
                    let m = |s, u: &[u32], v: &[u32]| self.mul(s, u, v);
                    if e(l, &m(l, &x, &y), &z) != e(l, &x, &m(l, &y, &z))
                        || e(l, &x, &m(l, &y, &z)) != e(l, &x, &m(r, &y, &z))
                        || e(l, &m(r, &x, &y), &z) != e(r, &x, &m(l, &y, &z))
                        || e(r, &m(l, &x, &y), &z) != e(r, &m(r, &x, &y), &z)
                        || e(r, &m(r, &x, &y), &z) != e(r, &x, &m(r, &y, &z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `δg(x, y) = g(x ∗ y)` for `g: L → 𝔽` given by its values on the basis.
    fn coboundary(&self, g: &[u32]) -> [Vec<u32>; 2] {
        let n = self.n;
        let mut out = [vec![0; n * n], vec![0; n * n]];
        for side in 0..2 {
            for i in 0..n {
                for j in 0..n {
                    let prod = self.mul(side, &self.basis(i), &self.basis(j));
                    out[side][i * n + j] =
                        prod.iter().zip(g).map(|(a, b)| a * b).sum::<u32>() % self.p;
                }
            }
        }
        out
    }
}

/// Every vector in `𝔽_pᵈ`, in lexicographic order.
fn all_vectors(p: u32, d: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn split_cochain(n: usize, flat: &[u32]) -> [Vec<u32>; 2] {
    [flat[..n * n].to_vec(), flat[n * n..].to_vec()]
}

fn to_cochain(table: &Table, f: &[Vec<u32>; 2]) -> CochainPair {
    let field = FieldSpec::Prime(table.p);
    let n = table.n;
    let mut out = CochainPair::zero(field, n, 1);
    for (side, prod) in Product::BOTH.iter().enumerate() {
        for idx in 0..n * n {
            out.set(
                *prod,
                idx / n,
                idx % n,
                0,
                field.from_i64(f[side][idx] as i64),
            );
        }
    }
    out
}

/// All dialgebras over F₂ of the given dimension, by exhaustive search.
fn all_dialgebras_f2(n: usize) -> Vec<Table> {
    let len = n * n * n;
    all_vectors(2, 2 * len)
        .into_iter()
        .map(|v| Table {
            n,
            p: 2,
            t: [v[..len].to_vec(), v[len..].to_vec()],
        })
        .filter(|t| t.failing_identities() == [false; 5])
        .collect()
}

fn small_catalog_f2() -> Vec<(String, Algebra)> {
    catalog()
        .into_iter()
        .filter(|e| e.expected.dim <= 2)
        .map(|e| (e.name.to_string(), e.build(FieldSpec::Prime(2)).unwrap()))
        .collect()
}

#[test]
fn cocycle_membership_matches_total_axioms_exhaustively() {
    for (name, l) in small_catalog_f2() {
        let table = Table::of(&l);
        let n = l.dim();
        for flat in all_vectors(2, 2 * n * n) {
            let f = split_cochain(n, &flat);
            let cochain = to_cochain(&table, &f);
            let oracle = table.is_cocycle(&f);
            let total_ok = extension_algebra(&l, &cochain)
                .unwrap()
                .check_axioms()
                .passed();
            assert_eq!(is_cocycle(&l, &cochain), oracle, "{name} {flat:?}");
            assert_eq!(total_ok, oracle, "{name} {flat:?}");
        }
    }
}

#[test]
fn multiplier_matches_counting_over_all_f2_dialgebras_of_dim_at_most_two() {
    let mut seen = 0;
    for n in 1..=2 {
        for table in all_dialgebras_f2(n) {
            let l = table.to_algebra();
            let z: Vec<_> = all_vectors(2, 2 * n * n)
                .into_iter()
                .map(|flat| split_cochain(n, &flat))
                .filter(|f| table.is_cocycle(f))
                .collect();
            let mut b: Vec<_> = all_vectors(2, n)
                .iter()
                .map(|g| table.coboundary(g))
                .collect();
            b.sort();
            b.dedup();
            let ratio = z.len() / b.len();
            assert_eq!(z.len() % b.len(), 0);
            let h2_dim = ratio.trailing_zeros() as usize;
            assert_eq!(1 << h2_dim, ratio);
            let computed = multiplier(&l).unwrap();
            assert_eq!(computed.h2_dim, h2_dim, "{:?}", table.t);
            assert_eq!(1usize << computed.z2_dim, z.len());
            assert_eq!(1usize << computed.b2_dim, b.len());
            seen += 1;
        }
    }
    assert!(seen > 10, "only {seen} dialgebras enumerated");
}

#[test]
fn frozen_small_multipliers_agree_with_counting() {
    for (name, l) in small_catalog_f2() {
        let expected = catalog()
            .into_iter()
            .find(|e| e.name == name)
            .unwrap()
            .expected;
        let table = Table::of(&l);
        let n = l.dim();
        let z = all_vectors(2, 2 * n * n)
            .into_iter()
            .filter(|flat| table.is_cocycle(&split_cochain(n, flat)))
            .count();
        let mut b: Vec<_> = all_vectors(2, n)
            .iter()
            .map(|g| table.coboundary(g))
            .collect();
        b.sort();
        b.dedup();
        assert_eq!(
            Some((z / b.len()).trailing_zeros() as usize),
            expected.multiplier_dim,
            "{name}"
        );
    }
}

#[test]
fn round_trip_and_splitting_exhaustively_over_f2() {
    for (name, l) in small_catalog_f2() {
        let table = Table::of(&l);
        let n = l.dim();
        for flat in all_vectors(2, 2 * n * n) {
            let f = split_cochain(n, &flat);
            if !table.is_cocycle(&f) {
                continue;
            }
            let cochain = to_cochain(&table, &f);
            let e = CentralExtension::from_cocycle(&l, &cochain).unwrap();
            assert!(e.is_central());
            assert_eq!(e.to_cocycle(None).unwrap(), cochain, "{name}");
            // a homomorphic section x ↦ (g(x), x) exists iff f = δg for some g
            let oracle = all_vectors(2, n).iter().any(|g| table.coboundary(g) == f);
            let split = e.splits().unwrap();
            assert_eq!(split.is_some(), oracle, "{name} {flat:?}");
            assert_eq!(is_coboundary(&l, &cochain).unwrap().is_some(), oracle);
        }
    }
}

#[test]
fn every_central_extension_of_k1_over_f2_splits() {
    let k1 = gen_matrix_double(FieldSpec::Prime(2), 1).unwrap();
    for k in 1..=2 {
        let len = coordinate_count(1, k);
        for flat in all_vectors(2, len) {
            let field = FieldSpec::Prime(2);
            let values = flat.iter().map(|&v| field.from_i64(v as i64)).collect();
            let f = CochainPair::from_vector(field, 1, k, values).unwrap();
            if let Ok(e) = CentralExtension::from_cocycle(&k1, &f) {
                assert!(e.splits().unwrap().is_some(), "{flat:?}");
            }
        }
    }
}

#[test]
fn mutated_constants_match_oracle_identities() {
    let identities = [
        Identity::LeftAssociative,
        Identity::RightAssociative,
        Identity::LeftIgnoresInner,
        Identity::MixedAssociative,
        Identity::RightIgnoresInner,
    ];
    for p in [2u32, 3] {
        let field = FieldSpec::Prime(p);
        for entry in catalog().into_iter().filter(|e| e.expected.dim <= 4) {
            let base = Table::of(&entry.build(field).unwrap());
            let len = base.n * base.n * base.n;
            for side in 0..2 {
                for idx in 0..len {
                    let mut t = base.clone();
                    t.t[side][idx] = (t.t[side][idx] + 1) % p;
                    let report = t.to_algebra().check_axioms();
                    let oracle = t.failing_identities();
                    assert_eq!(report.passed(), oracle == [false; 5]);
                    for (id, bad) in identities.iter().zip(oracle) {
                        assert_eq!(
                            report.violated(*id),
                            bad,
                            "{} {side} {idx} {id:?}",
                            entry.name
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn h2_dimension_scales_with_coefficients() {
    for entry in catalog().into_iter().filter(|e| e.expected.dim <= 3) {
        let l = entry.build(FieldSpec::Prime(5)).unwrap();
        let m = multiplier(&l).unwrap().h2_dim;
        assert_eq!(h2(&l, 2).unwrap().h2_dim, 2 * m, "{}", entry.name);
    }
}
