//! Mesh models against known cohomology and against the engine.

use eqsurf_core::surface::{
    enumerate_with_witnesses, invariants, parse, Character, Descriptor, FreeType,
};
use eqsurf_core::{FinAbGroup, Graded, Window};
use eqsurf_oracle::checks::{check_euler, check_invariants, check_quotient_lemma, Model};
use eqsurf_oracle::dump::dump;
use eqsurf_oracle::mesh::closed_surface;
use eqsurf_oracle::{
    fixed_components, mesh_invariants, triangulate, EquivariantComplex, FixedComponent, CORPUS,
};

fn z() -> FinAbGroup {
    FinAbGroup::integers()
}

fn model(s: &str) -> Model {
    Model::build(&parse(s).unwrap()).unwrap()
}

#[test]
fn closed_surfaces_have_known_cohomology() {
    for g in 0..=3u32 {
        let h = closed_surface(true, g)
            .regularize()
            .complex()
            .integral_cohomology();
        assert_eq!(
            h.degrees,
            [z(), FinAbGroup::free(2 * g as usize), z()],
            "T_{g}"
        );
    }
    for r in 1..=3u32 {
        let h = closed_surface(false, r)
            .regularize()
            .complex()
            .integral_cohomology();
        assert_eq!(
            h.degrees,
            [z(), FinAbGroup::free(r as usize - 1), FinAbGroup::cyclic(2)],
            "N_{r}"
        );
    }
}

#[test]
fn quotients_of_free_bases() {
    assert_eq!(
        model("S2a").quotient.degrees,
        [z(), FinAbGroup::zero(), FinAbGroup::cyclic(2)]
    );
    assert_eq!(
        model("T1rot").quotient.degrees,
        [z(), FinAbGroup::free(2), z()]
    );
    assert_eq!(
        model("T1anti").quotient.degrees,
        [z(), z(), FinAbGroup::cyclic(2)]
    );
}

#[test]
fn fixed_sets_of_examples() {
    let comps = |s: &str| fixed_components(&triangulate(&parse(s).unwrap()).unwrap()).unwrap();
    assert!(comps("S2a").is_empty());
    let s21 = comps("S21");
    assert!(matches!(
        s21[..],
        [FixedComponent::Circle {
            two_sided: true,
            ..
        }]
    ));
    let fm = comps("S22 + 1[FM]");
    assert_eq!(fm.len(), 2);
    assert!(fm.iter().any(|c| matches!(c, FixedComponent::Point { .. })));
    assert!(fm.iter().any(|c| matches!(
        c,
        FixedComponent::Circle {
            two_sided: false,
            ..
        }
    )));
}

#[test]
fn named_mesh_invariants() {
    let mi = |s: &str| mesh_invariants(&triangulate(&parse(s).unwrap()).unwrap()).unwrap();
    assert_eq!(mi("S22"), Descriptor::nonfree(true, 0, 2, 0, 0));
    assert_eq!(mi("S22 + 1[FM]"), Descriptor::nonfree(false, 1, 1, 0, 1));
    assert_eq!(
        mi("S2a #2 T(1)"),
        Descriptor::free_orientable(4, Character::Reversing)
    );
    assert_eq!(
        mi("T1rot"),
        Descriptor::free_orientable(2, Character::Preserving)
    );
    assert_eq!(
        mi("S2a #2 N(1)"),
        Descriptor::free_nonorientable(2, FreeType::Sphere)
    );
    assert_eq!(
        mi("T1anti #2 N(1)"),
        Descriptor::free_nonorientable(4, FreeType::Torus)
    );
    assert_eq!(
        mi("S2a #2 N(2)"),
        Descriptor::free_nonorientable(4, FreeType::Sphere)
    );
}

#[test]
fn witnesses_match_mesh_invariants() {
    for (d, e) in enumerate_with_witnesses(6) {
        let r = check_invariants(&e).unwrap();
        assert_eq!(r.mesh, d, "{e}");
    }
}

#[test]
fn corpus_surfaces_match_mesh_invariants() {
    for s in CORPUS.iter().filter(|s| !matches!(**s, "X(3)" | "X(4)")) {
        let r = check_invariants(&parse(s).unwrap()).unwrap();
        assert!(r.passed(), "{s}: {} vs {}", r.expected, r.mesh);
    }
    // the singular spaces still carry the base descriptor's counts
    for k in [3u32, 4] {
        let e = parse(&format!("X({k})")).unwrap();
        let m = mesh_invariants(&triangulate(&e).unwrap()).unwrap();
        assert_eq!((m.beta, m.f, m.c()), (invariants(&e).unwrap().beta, 2, 0));
    }
}

#[test]
fn corpus_passes_quotient_lemma() {
    for s in CORPUS {
        let r = check_quotient_lemma(&parse(s).unwrap()).unwrap();
        assert!(r.passed(), "{s}: {:?}", r);
    }
}

#[test]
fn xk_quotient_torsion() {
    for n in 1..=3u32 {
        let m = model(&format!("X({})", 2 * n));
        assert_eq!(m.quotient.degrees[2], FinAbGroup::cyclic(2 * n as u64));
        assert_eq!(
            m.engine().unwrap().group_at(2, 0),
            FinAbGroup::cyclic(2 * n as u64)
        );
    }
}

#[test]
fn corpus_passes_les_and_localization() {
    let les = Window::new(-4, 5, -6, 6).unwrap();
    for s in CORPUS {
        let m = model(s);
        let r = m.forgetful_les(&les).unwrap();
        assert!(r.passed(), "{s}: {:?}", r.failures.first());
        let rho = m.rho_localization(&Window::default()).unwrap();
        assert!(rho.passed(), "{s}");
    }
}

#[test]
fn euler_relation_everywhere() {
    for s in CORPUS {
        let r = check_euler(&parse(s).unwrap()).unwrap();
        assert!(r.passed(), "{s}: {r:?}");
    }
    let r = check_euler(&parse("S22 + 1[FM]").unwrap()).unwrap();
    assert_eq!((r.chi, r.chi_quotient, r.chi_fixed), (1, 1, 1));
}

#[test]
fn generated_complexes_are_structurally_sound() {
    for s in CORPUS {
        let c = triangulate(&parse(s).unwrap()).unwrap();
        let sigma = [0, 1, 2].map(|d| c.sigma(d).to_vec());
        assert_eq!(
            EquivariantComplex::new(c.complex().clone(), sigma).unwrap(),
            c
        );
        let d1 = c.complex().boundary(1);
        let d2 = c.complex().boundary(2);
        assert_eq!(d1.mul(&d2).nonzeros().count(), 0, "{s}");
    }
}

#[test]
fn dump_is_deterministic() {
    let e = parse("S22 + 1[FM]").unwrap();
    let a = dump(&triangulate(&e).unwrap());
    assert_eq!(a, dump(&triangulate(&e).unwrap()));
    assert!(a.starts_with("cells "));
}
