//! Consistency checks between a decomposition and non-equivariant data.
//!
//! These take the non-equivariant side as plain groups so that it can come
//! either from a descriptor's standard tables or from a triangulation.

use crate::decomposition::{localized_point, rho_stable_diagonal, Graded, StableDiagonal};
use crate::grading::{Bidegree, Window};
use crate::group::{ses_exists, FinAbGroup};

/// One bidegree where the forgetful sequence cannot be exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LesFailure {
    pub at: Bidegree,
    pub coker: FinAbGroup,
    pub middle: FinAbGroup,
    pub ker: FinAbGroup,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LesReport {
    pub checked: usize,
    pub failures: Vec<LesFailure>,
}

impl LesReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// At each `(p, q)` of the window, decides whether some short exact
/// sequence `0 → coker ρ_{p,q} → H^{p+1} → ker ρ_{p+1,q} → 0` exists,
/// where `surface(n)` is the integral cohomology of the underlying space.
pub fn forgetful_les_check(
    d: &impl Graded,
    surface: impl Fn(i64) -> FinAbGroup,
    window: &Window,
) -> LesReport {
    let mut report = LesReport::default();
    for at in window.iter() {
        let coker = d.act_rho(at.p, at.q).cokernel();
        let ker = d.act_rho(at.p + 1, at.q).kernel();
        let middle = surface(at.p + 1);
        report.checked += 1;
        let reason = match ses_exists(&coker, &middle, &ker) {
            Ok(true) => continue,
            Ok(false) => "no short exact sequence with these terms".to_string(),
            Err(e) => e.to_string(),
        };
        report.failures.push(LesFailure {
            at,
            coker,
            middle,
            ker,
            reason,
        });
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalComparison {
    pub c: i64,
    pub engine: StableDiagonal,
    pub expected: FinAbGroup,
}

impl DiagonalComparison {
    pub fn agrees(&self) -> bool {
        !self.engine.stabilized || self.engine.group == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RhoReport {
    pub diagonals: Vec<DiagonalComparison>,
}

impl RhoReport {
    /// True when every stabilized diagonal matches.
    pub fn passed(&self) -> bool {
        self.diagonals.iter().all(DiagonalComparison::agrees)
    }

    /// Diagonals that did not stabilize inside the window.
    pub fn unstable(&self) -> Vec<i64> {
        self.diagonals
            .iter()
            .filter(|x| !x.engine.stabilized)
            .map(|x| x.c)
            .collect()
    }
}

/// Expected ρ-localization on diagonal `c` for a fixed set whose integral
/// cohomology has ranks `fixed_ranks[i]` in degree `i`.
pub fn localized_expectation(c: i64, fixed_ranks: &[usize]) -> FinAbGroup {
    let mut orders = Vec::new();
    for (i, &r) in fixed_ranks.iter().enumerate() {
        let g = localized_point(c + i as i64);
        for _ in 0..r {
            orders.extend(g.generator_orders());
        }
    }
    FinAbGroup::from_cyclic_orders(&orders)
}

/// Compares stable ρ-diagonals for every offset in the window's q-range.
pub fn rho_localization_check(
    d: &impl Graded,
    fixed_ranks: &[usize],
    window: &Window,
) -> RhoReport {
    let diagonals = window
        .q_range()
        .map(|c| DiagonalComparison {
            c,
            engine: rho_stable_diagonal(d, c, window),
            expected: localized_expectation(c, fixed_ranks),
        })
        .collect();
    RhoReport { diagonals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::rep_sphere;

    #[test]
    fn sphere_with_two_points() {
        let d = rep_sphere(2, 2).unwrap();
        let r = rho_localization_check(&d, &[2, 0], &Window::default());
        assert!(r.passed());
        assert_eq!(
            r.diagonals.iter().find(|x| x.c == 0).unwrap().engine.group,
            FinAbGroup::from_cyclic_orders(&[2, 2])
        );
    }

    #[test]
    fn wrong_fixed_set_is_detected() {
        let d = rep_sphere(2, 2).unwrap();
        assert!(!rho_localization_check(&d, &[1, 1], &Window::default()).passed());
    }

    #[test]
    fn les_on_sphere() {
        let d = rep_sphere(2, 1).unwrap();
        let h = |n: i64| {
            if n == 0 || n == 2 {
                FinAbGroup::integers()
            } else {
                FinAbGroup::zero()
            }
        };
        assert!(forgetful_les_check(&d, h, &Window::default()).passed());
        let wrong = |n: i64| {
            if n == 0 {
                FinAbGroup::integers()
            } else {
                FinAbGroup::zero()
            }
        };
        assert!(!forgetful_les_check(&d, wrong, &Window::default()).passed());
    }
}
