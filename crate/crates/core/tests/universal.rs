//! Covering, splitting and universality over the perfect catalog algebras.

use dialgebra::catalog::{catalog, catalog_entry};
use dialgebra::cohomology::{h2, multiplier};
use dialgebra::extensions::{
    certify_universal, compose, find_covering, frame_coordinates, pullback,
    universal_central_extension, verify_cover_properties, CentralExtension,
};
use dialgebra::theorems::{
    center_quotient_extension, check_mutual_isomorphism, reversed_uce, sample_extensions,
};
use dialgebra::{Algebra, FieldSpec, LinearMap, Subspace};

const Q: FieldSpec = FieldSpec::Rationals;

fn perfect_catalog(field: FieldSpec, max_dim: usize) -> Vec<(&'static str, Algebra)> {
    catalog()
        .into_iter()
        .filter(|e| e.expected.perfect && e.expected.dim <= max_dim)
        .map(|e| (e.name, e.build(field).unwrap()))
        .collect()
}

fn build(name: &str) -> Algebra {
    catalog_entry(name).unwrap().build(Q).unwrap()
}

#[test]
fn independent_universal_extensions_are_isomorphic() {
    for (name, l) in perfect_catalog(Q, 6) {
        let a = universal_central_extension(&l).unwrap();
        let b = reversed_uce(&l).unwrap();
        assert_eq!(check_mutual_isomorphism(&a, &b).unwrap(), Ok(()), "{name}");
    }
    // the two constructions really differ somewhere
    let l = build("rq23");
    assert_ne!(
        universal_central_extension(&l).unwrap().cocycle(),
        reversed_uce(&l).unwrap().cocycle()
    );
}

#[test]
fn perfect_total_covers_uniquely() {
    for (name, l) in perfect_catalog(FieldSpec::Prime(5), 6) {
        let uce = universal_central_extension(&l).unwrap();
        let targets = sample_extensions(&l, 11, 6).unwrap();
        for source in [&uce, &CentralExtension::identity(&l)] {
            assert!(source.total().is_perfect());
            for t in &targets {
                let sol = find_covering(source, t).unwrap();
                if sol.covers() {
                    assert_eq!(sol.solution_space_dim, 0, "{name}");
                }
            }
        }
        for t in &targets {
            assert!(find_covering(&uce, t).unwrap().uniquely_covers(), "{name}");
        }
    }
}

#[test]
fn non_perfect_total_covers_non_uniquely() {
    let d1 = build("d1");
    let e = CentralExtension::identity(&d1);
    let target =
        CentralExtension::from_cocycle(&d1, &h2(&d1, 1).unwrap().representatives[0]).unwrap();
    let split = sample_extensions(&d1, 0, 0).unwrap().remove(0);
    assert!(!find_covering(&e, &target).unwrap().covers());
    let sol = find_covering(&e, &split).unwrap();
    assert!(sol.covers() && sol.solution_space_dim > 0);
}

#[test]
fn splitting_matches_multiplier() {
    let f5 = FieldSpec::Prime(5);
    for (name, l) in perfect_catalog(f5, 6) {
        let m = multiplier(&l).unwrap();
        let id = CentralExtension::identity(&l);
        assert_eq!(
            certify_universal(&id).unwrap().universal,
            m.h2_dim == 0,
            "{name}"
        );
        if m.h2_dim == 0 {
            for e in sample_extensions(&l, 5, 10).unwrap() {
                assert!(e.splits().unwrap().is_some(), "{name}");
            }
        } else {
            for rep in &m.representatives {
                let e = CentralExtension::from_cocycle(&l, rep).unwrap();
                assert!(e.splits().unwrap().is_none(), "{name}");
            }
        }
    }
}

#[test]
fn composites_over_perfect_totals_are_central() {
    for (name, l) in perfect_catalog(Q, 6) {
        let uce = universal_central_extension(&l).unwrap();
        let (down, sigma) = center_quotient_extension(&l).unwrap();
        let upper = uce.over_base(&sigma, down.total()).unwrap();
        let composite = compose(&upper, &down).unwrap();
        assert!(composite.is_central(), "{name}");
        assert_eq!(composite.kernel_dim(), uce.kernel_dim() + down.kernel_dim());
        assert!(certify_universal(&composite).unwrap().universal, "{name}");
    }
    // the doubled rectangular band has a nontrivial center to divide out
    let rb = build("rb22");
    let (down, sigma) = center_quotient_extension(&rb).unwrap();
    assert_eq!(down.kernel_dim(), 1);
    let upper = universal_central_extension(&rb)
        .unwrap()
        .over_base(&sigma, down.total())
        .unwrap();
    let composite = compose(&upper, &down).unwrap();
    assert!(composite.is_central());
}

#[test]
fn non_perfect_tower_is_rejected_and_really_non_central() {
    // N3 → N3/⟨t³⟩ → N3/⟨t², t³⟩: both steps central, G = N3 is not perfect
    let n3 = build("n3");
    let (n2, p1) = n3.quotient(&Subspace::coordinate(Q, 3, &[2])).unwrap();
    let (e1, _) = CentralExtension::from_surjection(&n3, &p1, &n2).unwrap();
    let (d1, p2) = n2.quotient(&n2.derived()).unwrap();
    let (e2, frame) = CentralExtension::from_surjection(&n2, &p2, &d1).unwrap();
    let e1 = e1
        .over_base(&frame_coordinates(&frame), e2.total())
        .unwrap();
    assert!(e1.is_central() && e2.is_central());
    assert!(matches!(
        compose(&e1, &e2),
        Err(dialgebra::Error::NotPerfect { .. })
    ));
    // direct construction: kernel ⟨t², t³⟩ of N3 → D1 is not central (t ⊣ t² = t³)
    let pi = p2.compose(&p1);
    let (direct, _) = CentralExtension::from_surjection(&n3, &pi, &d1).unwrap();
    assert_eq!(direct.kernel_dim(), 2);
    assert!(!direct.is_central());
}

#[test]
fn compose_rejects_non_perfect_middle() {
    let n2 = build("n2");
    let id = CentralExtension::identity(&n2);
    assert!(matches!(
        compose(&id, &id),
        Err(dialgebra::Error::NotPerfect { .. })
    ));
    let k1 = build("k1");
    let rq = build("rq22");
    assert!(matches!(
        compose(
            &CentralExtension::identity(&k1),
            &CentralExtension::identity(&rq)
        ),
        Err(dialgebra::Error::TowerMismatch(_))
    ));
}

#[test]
fn kernel_dimension_is_multiplier() {
    for (name, l) in perfect_catalog(Q, 9) {
        let e = universal_central_extension(&l).unwrap();
        let frozen = catalog_entry(name)
            .unwrap()
            .expected
            .multiplier_dim
            .unwrap();
        assert_eq!(e.kernel_dim(), frozen, "{name}");
        assert_eq!(e.kernel_dim(), multiplier(&l).unwrap().h2_dim, "{name}");
    }
}

#[test]
fn cover_reports_pass_and_m2d_is_frozen() {
    for (name, l) in perfect_catalog(Q, 6) {
        let r = verify_cover_properties(&l).unwrap();
        assert!(r.all_passed(), "{name}: {r:?}");
    }
    let r = verify_cover_properties(&build("m2d")).unwrap();
    assert_eq!(
        (r.cover.dim(), r.multiplier_dim, r.cover_multiplier_dim),
        (4, 0, 0)
    );
    let r = verify_cover_properties(&build("p2rq22")).unwrap();
    assert_eq!(
        (r.cover.dim(), r.multiplier_dim, r.quotient_multiplier_dim),
        (8, 2, 2)
    );
    assert!(verify_cover_properties(&build("n2")).is_err());
}

#[test]
fn central_quotient_of_trivial_multiplier_algebras() {
    for (name, l) in perfect_catalog(Q, 6) {
        if multiplier(&l).unwrap().h2_dim != 0 {
            continue;
        }
        let z = l.center();
        let (q, _) = l.quotient(&z).unwrap();
        assert_eq!(multiplier(&q).unwrap().h2_dim, z.dim(), "{name}");
    }
    // rectband 2 2 has a 1-dimensional center and its quotient is rectquot 2 2
    let rb = build("rb22");
    let (q, _) = rb.quotient(&rb.center()).unwrap();
    assert_eq!(multiplier(&q).unwrap().h2_dim, 1);
}

#[test]
fn pullback_dimension_identity() {
    let l = build("rb22");
    let (down, _) = center_quotient_extension(&l).unwrap();
    let (l, h) = (down.total().clone(), down.base());
    for e4 in sample_extensions(h, 2, 4).unwrap() {
        let t = pullback(down.projection(), e4.projection(), &l, e4.total(), h).unwrap();
        assert_eq!(t.algebra.dim(), l.dim() + e4.total().dim() - h.dim());
        assert!(t.algebra.check_axioms().passed());
    }
    let id = LinearMap::identity(Q, l.dim());
    let diag = pullback(&id, &id, &l, &l, &l).unwrap();
    assert_eq!(diag.algebra.dim(), l.dim());
}
