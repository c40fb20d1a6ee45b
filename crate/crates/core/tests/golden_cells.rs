//! Golden cell tables over fixed windows.
//!
//! Each table lists every nonzero cell in its window; all other cells must
//! vanish.

use eqsurf_core::engine::evaluate;
use eqsurf_core::surface::parse;
use eqsurf_core::{Decomposition, FinAbGroup, Graded, StandardModule, Window};

#[derive(Clone, Copy)]
enum Cell {
    Z,
    Z2,
}

fn group(c: Cell) -> FinAbGroup {
    match c {
        Cell::Z => FinAbGroup::integers(),
        Cell::Z2 => FinAbGroup::cyclic(2),
    }
}

fn check_cells(d: &impl Graded, window: &Window, cells: &[(i64, i64, Cell)]) -> usize {
    let mut checked = 0;
    for at in window.iter() {
        let expected = cells
            .iter()
            .find(|&&(p, q, _)| (p, q) == (at.p, at.q))
            .map(|&(_, _, c)| group(c))
            .unwrap_or_else(FinAbGroup::zero);
        assert_eq!(d.group_at(at.p, at.q), expected, "at {at}");
        checked += 1;
    }
    checked
}

fn m_cells() -> Vec<(i64, i64, Cell)> {
    use Cell::*;
    vec![
        (0, 4, Z),
        (0, 2, Z),
        (0, 0, Z),
        (0, -2, Z),
        (0, -4, Z),
        (0, -3, Z2),
        (0, -5, Z2),
        (1, 1, Z2),
        (1, 3, Z2),
        (1, 5, Z2),
        (2, 2, Z2),
        (2, 4, Z2),
        (3, 3, Z2),
        (3, 5, Z2),
        (4, 4, Z2),
        (5, 5, Z2),
        (-1, -4, Z2),
        (-2, -5, Z2),
    ]
}

#[test]
fn point_module_cells() {
    let m = Decomposition::single(StandardModule::m());
    let w = Window::square(-5, 5).unwrap();
    assert_eq!(check_cells(&m, &w, &m_cells()), 121);
}

#[test]
fn point_module_structure_maps() {
    let m = StandardModule::m();
    // x·θ = 2 on the cone generator
    let x = m.act_x(0, -2);
    assert!(x.is_injective() && !x.is_surjective());
    assert_eq!(x.cokernel(), FinAbGroup::cyclic(2));
    assert!(m.act_rho(0, 0).is_surjective());
    for (p, q) in [(1, 1), (2, 2), (-2, -5), (-1, -4)] {
        assert!(m.act_rho(p, q).is_iso(), "ρ at ({p},{q})");
    }
    for (p, q) in [(0, 2), (0, -4)] {
        assert!(m.act_x(p, q).is_iso(), "x at ({p},{q})");
    }
}

fn antisphere_cells(n: i64) -> Vec<(i64, i64, Cell)> {
    let mut cells = Vec::new();
    for q in -6..=6i64 {
        match n {
            0 => cells.push((0, q, Cell::Z)),
            _ => {
                if q % 2 == 0 {
                    cells.push((0, q, Cell::Z));
                }
                for p in 1..n {
                    if (q - p) % 2 == 0 {
                        cells.push((p, q, Cell::Z2));
                    }
                }
                // top column: torsion on the diagonal, integers on the opposite parity
                if (q - n) % 2 == 0 {
                    cells.push((n, q, Cell::Z2));
                } else {
                    cells.push((n, q, Cell::Z));
                }
            }
        }
    }
    cells
}

#[test]
fn antipodal_sphere_cells() {
    let w = Window::new(-2, 5, -5, 5).unwrap();
    for n in 0..=3u32 {
        let a = Decomposition::single(StandardModule::a(n));
        check_cells(&a, &w, &antisphere_cells(n as i64));
    }
}

#[test]
fn antipodal_two_sphere_is_a2() {
    let e = evaluate(&parse("S2a").unwrap()).unwrap();
    assert_eq!(e, Decomposition::single(StandardModule::a(2)));
    assert_eq!(e.to_string(), "A(2)");
    check_cells(
        &e,
        &Window::new(-2, 5, -5, 5).unwrap(),
        &antisphere_cells(2),
    );
}
