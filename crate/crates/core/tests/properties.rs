//! Property tests for the exact algebra, the catalog tables and the DSL.

use eqsurf_core::decomposition::equals_in_window;
use eqsurf_core::group::{FinAbGroup, GroupHom};
use eqsurf_core::snf::{smith_form, smith_form_sparse, IntMatrix, SparseMatrix};
use eqsurf_core::surface::{invariants, parse, AttachKind, Base, Closed, SurfaceExpr};
use eqsurf_core::{Decomposition, Graded, StandardModule, Window};
use proptest::prelude::*;

fn catalog() -> Vec<StandardModule> {
    let mut v = vec![StandardModule::m(), StandardModule::m2()];
    for n in 0..5 {
        v.push(StandardModule::a(n));
        v.push(StandardModule::f(n));
    }
    for n in 1..4 {
        v.push(StandardModule::d4n(n).unwrap());
    }
    v.push(StandardModule::torsion_cone(3).unwrap());
    v.push(StandardModule::torsion_cone(5).unwrap());
    v
}

fn test_window() -> Window {
    Window::new(-6, 8, -9, 9).unwrap()
}

/// Reduces every entry modulo the corresponding target order.
fn reduced(h: &GroupHom) -> Vec<i64> {
    let m = h.matrix();
    let mut out = Vec::new();
    for r in 0..m.rows() {
        let t = h.target_orders()[r] as i64;
        for c in 0..m.cols() {
            out.push(if t == 0 {
                m.get(r, c)
            } else {
                m.get(r, c).rem_euclid(t)
            });
        }
    }
    out
}

#[test]
fn rho_and_x_commute() {
    for m in catalog() {
        for at in test_window().iter() {
            let (p, q) = (at.p, at.q);
            let left = m.act_x(p + 1, q + 1).compose(&m.act_rho(p, q));
            let right = m.act_rho(p, q + 2).compose(&m.act_x(p, q));
            assert_eq!(reduced(&left), reduced(&right), "{m} at {at}");
        }
    }
}

#[test]
fn twice_rho_vanishes() {
    for m in catalog() {
        for at in test_window().iter() {
            let h = m.act_rho(at.p, at.q);
            if h.matrix().rows() == 1 && h.matrix().cols() == 1 {
                let t = h.target_orders()[0] as i64;
                let v = 2 * h.matrix().get(0, 0);
                assert!(if t == 0 { v == 0 } else { v % t == 0 }, "{m} at {at}");
            }
        }
    }
}

#[test]
fn antipodal_modules_split() {
    let w = Window::square(-6, 6).unwrap();
    for n in 0..5u32 {
        let eps = if n % 2 == 0 { 1 } else { 0 };
        let split = Decomposition::single(StandardModule::f(n)).with(
            n as i64,
            eps,
            StandardModule::f(0),
            1,
        );
        assert!(
            equals_in_window(&Decomposition::single(StandardModule::a(n)), &split, &w),
            "A({n})"
        );
    }
    let a0 = Decomposition::single(StandardModule::a(0));
    assert!(!equals_in_window(
        &a0,
        &Decomposition::single(StandardModule::f(0)),
        &Window::square(-3, 3).unwrap()
    ));
}

#[test]
fn truncated_modules_are_x_periodic() {
    for i in 0..5u32 {
        let f = StandardModule::f(i);
        for at in test_window().iter() {
            if at.p < 0 || at.p > i as i64 {
                assert!(f.group_at(at.p, at.q).is_zero());
            } else if !f.group_at(at.p, at.q).is_zero() {
                assert!(f.act_x(at.p, at.q).is_iso(), "F({i}) at {at}");
            }
        }
    }
}

#[test]
fn rho_is_iso_from_degree_three() {
    // modules with top degree above two end at p = n, where ρ dies
    for m in catalog()
        .into_iter()
        .filter(|m| !matches!(m.tag().name(), "A" | "F") || m.param() <= 2)
    {
        for at in test_window().iter().filter(|at| at.p >= 3) {
            assert!(m.act_rho(at.p, at.q).is_iso(), "{m} at {at}");
        }
    }
}

#[test]
fn x_is_iso_except_named_cases() {
    for m in catalog() {
        for at in test_window().iter() {
            let h = m.act_x(at.p, at.q);
            let both = !m.group_at(at.p, at.q).is_zero() && !m.group_at(at.p, at.q + 2).is_zero();
            let named = matches!(
                (m.tag().name(), at.p, at.q),
                ("M" | "M2" | "TorsionCone", 0, -2) | ("D4n", 1, -1)
            );
            if both && !named {
                assert!(h.is_iso(), "{m} at {at}");
            }
            if !both {
                assert!(h.is_zero());
            }
        }
    }
}

fn arb_orders() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(prop_oneof![Just(0u64), 1u64..13], 0..6)
}

fn arb_module() -> impl Strategy<Value = StandardModule> {
    prop::sample::select(catalog())
}

fn arb_decomposition() -> impl Strategy<Value = Decomposition> {
    prop::collection::vec((arb_module(), -2i64..3, -2i64..3, 1u32..3), 0..4).prop_map(|v| {
        Decomposition::from_summands(
            v.into_iter()
                .map(|(m, a, b, k)| eqsurf_core::Summand::new(a, b, m, k)),
        )
    })
}

fn arb_expr() -> impl Strategy<Value = SurfaceExpr> {
    let base = prop::sample::select(vec![
        Base::S2a,
        Base::S21,
        Base::S22,
        Base::T1rot,
        Base::T1anti,
        Base::X(2),
    ]);
    let step = prop_oneof![
        (1u32..3).prop_map(|g| (0u8, g, AttachKind::Fm)),
        (1u32..3).prop_map(|r| (1u8, r, AttachKind::Fm)),
        (1u32..3, prop::sample::select(AttachKind::ALL.to_vec())).prop_map(|(n, k)| (2u8, n, k)),
    ];
    (base, prop::collection::vec(step, 0..4)).prop_map(|(b, steps)| {
        let mut e = SurfaceExpr::base(b);
        for (op, n, k) in steps {
            e = match op {
                0 => e.conn_sum2(Closed::T(n)),
                1 => e.conn_sum2(Closed::N(n)),
                _ => e.attach(n, k),
            };
        }
        e
    })
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(orders in arb_orders()) {
        let g = FinAbGroup::from_cyclic_orders(&orders);
        prop_assert_eq!(g.canonical(), g.clone());
        prop_assert_eq!(FinAbGroup::new(g.rank(), g.torsion().to_vec()).unwrap(), g.clone());
        let finite: u64 = orders.iter().filter(|&&o| o > 0).product();
        prop_assert_eq!(g.torsion_order(), finite);
    }

    #[test]
    fn direct_sum_is_commutative(a in arb_orders(), b in arb_orders()) {
        let (ga, gb) = (FinAbGroup::from_cyclic_orders(&a), FinAbGroup::from_cyclic_orders(&b));
        prop_assert_eq!(ga.direct_sum(&gb), gb.direct_sum(&ga));
    }

    #[test]
    fn sparse_and_dense_smith_agree(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..6)) {
        let dense = IntMatrix::from_rows(&rows);
        let mut sp = SparseMatrix::new(dense.rows(), dense.cols());
        for r in 0..dense.rows() {
            for c in 0..dense.cols() {
                if dense.get(r, c) != 0 {
                    sp.add(r, c, dense.get(r, c));
                }
            }
        }
        prop_assert_eq!(smith_form(&dense), smith_form_sparse(&sp));
        prop_assert_eq!(smith_form(&dense), smith_form(&dense.transpose()));
    }

    #[test]
    fn finite_hom_orders_multiply(
        src in prop::collection::vec(2u64..9, 1..4),
        tgt in prop::collection::vec(2u64..9, 1..4),
        seed in prop::collection::vec(-8i64..9, 16),
    ) {
        // entries chosen so that each column is well defined: scale by t/gcd(s,t)
        let mut m = IntMatrix::zeros(tgt.len(), src.len());
        for (r, &t) in tgt.iter().enumerate() {
            for (c, &s) in src.iter().enumerate() {
                let g = num_gcd(s, t);
                m.set(r, c, seed[(r * 4 + c) % 16] * (t / g) as i64);
            }
        }
        let h = GroupHom::new(src.clone(), tgt.clone(), m).unwrap();
        let s = h.signature();
        let order = |v: &[u64]| v.iter().product::<u64>();
        prop_assert_eq!(s.kernel.torsion_order() * s.image.torsion_order(), order(&src));
        prop_assert_eq!(s.image.torsion_order() * s.cokernel.torsion_order(), order(&tgt));
    }

    #[test]
    fn shifting_translates_groups(d in arb_decomposition(), a in -3i64..4, b in -3i64..4, p in -4i64..5, q in -4i64..5) {
        prop_assert_eq!(d.shift(a, b).group_at(p, q), d.group_at(p - a, q - b));
        prop_assert_eq!(d.shift(a, b).shift(-a, -b), d.clone());
    }

    #[test]
    fn sums_add_groups(d1 in arb_decomposition(), d2 in arb_decomposition(), p in -4i64..5, q in -4i64..5) {
        let s = d1.direct_sum(&d2);
        prop_assert_eq!(s.group_at(p, q), d1.group_at(p, q).direct_sum(&d2.group_at(p, q)));
        prop_assert_eq!(d1.direct_sum(&Decomposition::zero()), d1.clone());
    }

    #[test]
    fn expressions_round_trip(e in arb_expr()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn beta_plus_f_parity_is_stable(e in arb_expr()) {
        if let Ok(d) = invariants(&e) {
            if !d.free {
                prop_assert_eq!((d.beta + d.f) % 2, 0);
            }
        }
    }

    #[test]
    fn antitube_counts_commute(e in arb_expr(), a in 1u32..3, b in 1u32..3) {
        let one = e.clone().attach(a, AttachKind::S10At).attach(b, AttachKind::S11At);
        let two = e.attach(b, AttachKind::S11At).attach(a, AttachKind::S10At);
        if let (Ok(x), Ok(y)) = (invariants(&one), invariants(&two)) {
            prop_assert_eq!((x.beta, x.f, x.c_plus, x.c_minus), (y.beta, y.f, y.c_plus, y.c_minus));
        }
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}
