use dialgebra::catalog::{gen_random, RandomOptions};
use dialgebra::cohomology::{coboundary, coboundary_space, cocycle_space, random_cocycle};
use dialgebra::extensions::CentralExtension;
use dialgebra::{Algebra, FieldSpec, LinearMap, Matrix, Subspace};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![
        FieldSpec::Rationals,
        FieldSpec::Prime(2),
        FieldSpec::Prime(3),
        FieldSpec::Prime(7),
    ])
}

fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (field_strategy(), 1..=max_rows, 1..=max_cols).prop_flat_map(|(field, r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(c).collect();
            Matrix::from_i64(field, &rows)
        })
    })
}

fn two_subspaces() -> impl Strategy<Value = (Subspace, Subspace)> {
    (field_strategy(), 1usize..7).prop_flat_map(|(field, n)| {
        let vecs = || prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..5);
        (vecs(), vecs()).prop_map(move |(a, b)| {
            let span = |vs: Vec<Vec<i64>>| {
                Subspace::span(
                    field,
                    n,
                    vs.into_iter()
                        .map(|v| v.into_iter().map(|x| field.from_i64(x)).collect())
                        .collect(),
                )
            };
            (span(a), span(b))
        })
    })
}

fn algebra_strategy() -> impl Strategy<Value = Algebra> {
    (field_strategy(), 1usize..4, any::<u64>()).prop_map(|(field, n, seed)| {
        let opts = RandomOptions {
            density: 0.2,
            max_attempts: 50_000,
            require_nonabelian: false,
        };
        gen_random(field, n, seed, opts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix_strategy(6, 6)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert_eq!(r.rank(), m.rank());
    }

    #[test]
    fn rank_nullity(m in matrix_strategy(6, 7)) {
        let kernel = m.nullspace();
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for v in kernel.basis_vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn solve_returns_solutions(m in matrix_strategy(5, 5), pick in prop::collection::vec(-2i64..=2, 5)) {
        let field = m.field();
        let x: Vec<_> = pick.iter().take(m.cols()).map(|&v| field.from_i64(v)).collect();
        let x: Vec<_> = x.into_iter().chain(std::iter::repeat(field.zero())).take(m.cols()).collect();
        let b = m.apply(&x);
        let sol = m.solve(&b).expect("consistent by construction");
        prop_assert_eq!(m.apply(&sol), b);
    }

    #[test]
    fn grassmann_identity((u, w) in two_subspaces()) {
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u).unwrap() && sum.contains_subspace(&w).unwrap());
        prop_assert!(u.contains_subspace(&meet).unwrap() && w.contains_subspace(&meet).unwrap());
    }

    #[test]
    fn complement_is_direct((u, _) in two_subspaces()) {
        let c = u.complement();
        prop_assert_eq!(u.dim() + c.dim(), u.ambient_dim());
        prop_assert!(u.intersect(&c).unwrap().is_zero());
    }

    #[test]
    fn center_and_derived_are_ideals(a in algebra_strategy()) {
        let z = a.center();
        let d = a.derived();
        prop_assert!(a.is_ideal(&z).unwrap());
        prop_assert!(a.is_ideal(&d).unwrap());
        prop_assert_eq!(a.hom_to_field_dim(), a.dim() - d.dim());
    }

    #[test]
    fn derived_of_quotient_is_image_of_derived(a in algebra_strategy()) {
        let (q, p) = a.quotient(&a.center()).unwrap();
        prop_assert!(q.check_axioms().passed());
        prop_assert!(a.is_homomorphism(&p, &q));
        prop_assert_eq!(q.derived(), a.derived().image_under(p.matrix()));
    }

    #[test]
    fn diamond_is_monotone(a in algebra_strategy(), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = a.dim();
        let pick = |rng: &mut ChaCha8Rng| -> Vec<usize> { (0..n).filter(|_| rng.gen_bool(0.5)).collect() };
        let s_small = Subspace::coordinate(a.field(), n, &pick(&mut rng));
        let extra = pick(&mut rng);
        let s_big = s_small.sum(&Subspace::coordinate(a.field(), n, &extra)).unwrap();
        let full = a.full_space();
        let small = a.diamond(&s_small, &full).unwrap();
        let big = a.diamond(&s_big, &full).unwrap();
        prop_assert!(big.contains_subspace(&small).unwrap());
        prop_assert!(a.derived().contains_subspace(&big).unwrap());
    }

    #[test]
    fn coboundaries_are_cocycles(a in algebra_strategy()) {
        let z = cocycle_space(&a, 1).unwrap();
        let b = coboundary_space(&a, 1);
        prop_assert!(z.contains_subspace(&b).unwrap());
        // g ↦ δg has kernel {g : g(L′) = 0}
        prop_assert_eq!(b.dim(), a.derived().dim());
    }

    #[test]
    fn section_change_shifts_by_coboundary(a in algebra_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_cocycle(&a, 2, &mut rng).unwrap();
        let e = CentralExtension::from_cocycle(&a, &f).unwrap();
        prop_assert!(e.is_central());
        prop_assert_eq!(e.to_cocycle(None).unwrap(), f.clone());
        let g_vals: Vec<_> = (0..2 * a.dim())
            .map(|_| dialgebra::cohomology::random_scalar(a.field(), &mut rng))
            .collect();
        let g = LinearMap::new(a.dim(), 2, Matrix::from_rows(a.field(), a.dim(), g_vals.chunks(a.dim()).map(|c| c.to_vec()).collect()));
        let s = e.section().add(&e.embedding().compose(&g));
        prop_assert_eq!(e.to_cocycle(Some(&s)).unwrap(), f.sub(&coboundary(&a, &g)));
    }

    #[test]
    fn surjection_round_trip(a in algebra_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_cocycle(&a, 1, &mut rng).unwrap();
        let e = CentralExtension::from_cocycle(&a, &f).unwrap();
        let (again, frame) = CentralExtension::from_surjection(e.total(), e.projection(), &a).unwrap();
        prop_assert!(again.is_central());
        prop_assert!(again.is_equivalent(&e).unwrap());
        prop_assert_eq!(frame.rank(), e.total().dim());
    }
}
