//! Whole-family checks over enumerated descriptors.

use eqsurf_core::checks::{forgetful_les_check, rho_localization_check};
use eqsurf_core::decomposition::{compare_in_window, equals_in_window};
use eqsurf_core::engine::{decompose, rep_sphere, surgery_increment, top_class_report};
use eqsurf_core::surface::{
    enumerate_descriptors, invariants, parse, underlying_cohomology, validate, AttachKind,
};
use eqsurf_core::{Graded, Window};

fn les_window() -> Window {
    Window::new(-4, 5, -6, 6).unwrap()
}

#[test]
fn enumeration_is_valid_and_deterministic() {
    let a = enumerate_descriptors(8);
    assert!(a.len() >= 24, "only {} descriptors", a.len());
    assert_eq!(a, enumerate_descriptors(8));
    for d in &a {
        assert!(validate(d).is_empty(), "{d}");
    }
}

#[test]
fn enumeration_is_closed_under_attachments() {
    let all = enumerate_descriptors(8);
    for d in &all {
        for k in AttachKind::ALL {
            if let Some(n) = d.attach(k) {
                if n.beta <= 8 {
                    assert!(all.contains(&n), "{d} + {k:?} = {n} missing");
                }
            }
        }
    }
}

#[test]
fn unit_and_quotient_shape() {
    for d in enumerate_descriptors(8) {
        let dec = decompose(&d).unwrap();
        assert_eq!(
            dec.group_at(0, 0),
            eqsurf_core::FinAbGroup::integers(),
            "{d}"
        );
        for p in -4..=1 {
            assert!(dec.group_at(p, 0).is_torsion_free(), "{d} at ({p},0)");
        }
    }
}

#[test]
fn rho_is_iso_above_degree_two() {
    let w = Window::default();
    for d in enumerate_descriptors(8) {
        let dec = decompose(&d).unwrap();
        for at in w.iter().filter(|at| at.p >= 3) {
            assert!(dec.act_rho(at.p, at.q).is_iso(), "{d} at {at}");
        }
    }
}

#[test]
fn forgetful_sequence_feasible_everywhere() {
    for d in enumerate_descriptors(8) {
        let dec = decompose(&d).unwrap();
        let u = underlying_cohomology(&d);
        let r = forgetful_les_check(&dec, |n| u.surface_degree(n), &les_window());
        assert!(r.passed(), "{d}: {:?}", r.failures.first());
    }
}

#[test]
fn localization_matches_fixed_set() {
    for d in enumerate_descriptors(8) {
        let dec = decompose(&d).unwrap();
        let u = underlying_cohomology(&d);
        let ranks = [u.fixed[0].rank(), u.fixed[1].rank()];
        let r = rho_localization_check(&dec, &ranks, &Window::default());
        assert!(r.passed(), "{d}");
        assert!(
            r.unstable().is_empty(),
            "{d} unstable at {:?}",
            r.unstable()
        );
    }
}

#[test]
fn top_class_predicates() {
    for d in enumerate_descriptors(8).into_iter().filter(|d| !d.free) {
        let r = top_class_report(&d).unwrap();
        assert!(r.predicates_hold, "{d}: {r:?}");
        assert!(r.below_zero);
        assert_eq!(r.k_min_codim == 1, d.c() >= 1);
    }
}

#[test]
fn surgery_additivity() {
    let w = Window::new(-5, 6, -5, 6).unwrap();
    for d in enumerate_descriptors(6) {
        for k in AttachKind::ALL {
            let (Some(inc), Some(next)) = (surgery_increment(&d, k), d.attach(k)) else {
                continue;
            };
            let lhs = decompose(&next).unwrap();
            let rhs = decompose(&d).unwrap().direct_sum(&inc);
            let diff = compare_in_window(&lhs, &rhs, &w);
            assert!(diff.is_empty(), "{d} + {k:?}: {}", diff[0]);
        }
    }
}

#[test]
fn spheres_agree_with_representation_spheres() {
    let w = Window::default();
    let s21 = decompose(&invariants(&parse("S21").unwrap()).unwrap()).unwrap();
    assert!(equals_in_window(&s21, &rep_sphere(2, 1).unwrap(), &w));
    let s22 = decompose(&invariants(&parse("S22").unwrap()).unwrap()).unwrap();
    assert!(equals_in_window(&s22, &rep_sphere(2, 2).unwrap(), &w));
}

#[test]
fn genus_exponent_follows_quotient() {
    // the quotient is a torus, so H^{1,0} = H^1(quotient) has rank 2g for g = 1
    let d = invariants(&parse("S22 #2 T(1)").unwrap()).unwrap();
    let dec = decompose(&d).unwrap();
    assert_eq!(dec.group_at(1, 0), eqsurf_core::FinAbGroup::free(2));
}
