//! Closed-form cohomology of surfaces and the auxiliary spaces.
//!
//! All answers are unreduced: nonfree surfaces carry one extra unshifted
//! `M` summand for the basepoint, so `H^{0,0} = ℤ` throughout.

use crate::decomposition::{Decomposition, Graded};
use crate::group::FinAbGroup;
use crate::module::StandardModule;
use crate::surface::{
    invariants, validate, AttachKind, Base, Character, Descriptor, FreeType, SurfaceCase,
    SurfaceError, SurfaceExpr, Violation,
};
use std::fmt;
use thiserror::Error;

fn joined(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.0.as_str())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("descriptor `{descriptor}` is not realizable: {}", joined(.violations))]
    Invalid {
        descriptor: Descriptor,
        violations: Vec<Violation>,
    },
    #[error("exponent {name} = {value} is negative for `{descriptor}`")]
    NegativeExponent {
        name: &'static str,
        value: i64,
        descriptor: Descriptor,
    },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("S^{{{p},{q}}} needs p >= q >= 0")]
    SphereOutOfRange { p: i64, q: i64 },
    #[error("X(k) needs k >= 2, got {0}")]
    XkOutOfRange(u32),
    #[error(
        "the pinched space is tabulated only for nonfree surfaces and the two free tori, not `{0}`"
    )]
    PinchedUnsupported(Descriptor),
    #[error("top class report needs a nonfree surface, got `{0}`")]
    FreeDescriptor(Descriptor),
    #[error("free orbit product needs torsion-free input; degree {0} has torsion")]
    TorsionInput(usize),
}

const M: StandardModule = StandardModule::m();
const A0: StandardModule = StandardModule::a(0);

fn d4() -> StandardModule {
    StandardModule::d4n(1).expect("n = 1 is in range")
}

/// Cohomology of a realizable descriptor.
pub fn decompose(d: &Descriptor) -> Result<Decomposition, EngineError> {
    let violations = validate(d);
    if !violations.is_empty() {
        return Err(EngineError::Invalid {
            descriptor: *d,
            violations,
        });
    }
    let exp = |name: &'static str, value: i64| {
        u32::try_from(value).map_err(|_| EngineError::NegativeExponent {
            name,
            value,
            descriptor: *d,
        })
    };
    let beta = d.beta as i64;
    let (f, c) = (d.f as i64, d.c() as i64);
    let out = match d.case() {
        SurfaceCase::FreeOrientable if beta % 4 == 2 => {
            let eps = if d.character == Some(Character::Preserving) {
                0
            } else {
                1
            };
            Decomposition::single(StandardModule::a(1))
                .with(1, eps, StandardModule::a(1), 1)
                .with(1, 0, A0, exp("β/2 − 1", beta / 2 - 1)?)
        }
        SurfaceCase::FreeOrientable => {
            Decomposition::single(StandardModule::a(2)).with(1, 0, A0, exp("β/2", beta / 2)?)
        }
        SurfaceCase::FreeNonorientable if d.free_type == Some(FreeType::Torus) => {
            Decomposition::single(StandardModule::a(1))
                .with(1, 0, StandardModule::f(1), 1)
                .with(1, 1, StandardModule::f(1), 1)
                .with(1, 0, A0, exp("β/2 − 2", beta / 2 - 2)?)
        }
        SurfaceCase::FreeNonorientable => Decomposition::single(StandardModule::f(2))
            .with(1, 0, StandardModule::f(1), 1)
            .with(1, 0, A0, exp("β/2 − 1", beta / 2 - 1)?),
        SurfaceCase::OrientablePoints => Decomposition::single(M)
            .with(1, 1, M, exp("F − 2", f - 2)?)
            .with(1, 0, A0, exp("(β − F)/2 + 1", (beta - f) / 2 + 1)?)
            .with(2, 2, M, 1),
        SurfaceCase::OrientableCircles => Decomposition::single(M)
            .with(1, 0, M, exp("C − 1", c - 1)?)
            .with(1, 1, M, exp("C − 1", c - 1)?)
            .with(1, 0, A0, exp("(β − 2C)/2 + 1", (beta - 2 * c) / 2 + 1)?)
            .with(2, 1, M, 1),
        SurfaceCase::NonorientablePoints => Decomposition::single(M)
            .with(1, 0, A0, exp("(β − F)/2", (beta - f) / 2)?)
            .with(1, 1, M, exp("F − 2", f - 2)?)
            .with(1, 1, d4(), 1),
        SurfaceCase::NonorientableCircles => Decomposition::single(M)
            .with(1, 0, A0, exp("(β − 2C)/2", (beta - 2 * c) / 2)?)
            .with(1, 0, M, exp("C − 1", c - 1)?)
            .with(1, 1, M, exp("C − 1", c - 1)?)
            .with(1, 0, d4(), 1),
        SurfaceCase::NonorientableMixed => Decomposition::single(M)
            .with(
                1,
                0,
                A0,
                exp("(β − F − 2C)/2 + 1", (beta - f - 2 * c) / 2 + 1)?,
            )
            .with(1, 0, M, exp("C − 1", c - 1)?)
            .with(1, 1, M, exp("F + C − 2", f + c - 2)?)
            .with(2, 1, StandardModule::m2(), 1),
    };
    Ok(out)
}

/// Cohomology of an expression. Bare `X(k)` is answered directly since it
/// is a surface only for `k = 2`.
pub fn evaluate(e: &SurfaceExpr) -> Result<Decomposition, EngineError> {
    if let SurfaceExpr::Base(Base::X(k)) = e {
        return cohomology_of_xk(*k);
    }
    decompose(&invariants(e)?)
}

/// Representation sphere `S^{p,q}`.
pub fn rep_sphere(p: i64, q: i64) -> Result<Decomposition, EngineError> {
    if !(p >= q && q >= 0) {
        return Err(EngineError::SphereOutOfRange { p, q });
    }
    Ok(Decomposition::single(M).with(p, q, M, 1))
}

/// Product of a free orbit with a space whose integral cohomology is `h`
/// (`h[i]` in degree `i`).
pub fn free_orbit_product(h: &[FinAbGroup]) -> Result<Decomposition, EngineError> {
    let mut d = Decomposition::zero();
    for (i, g) in h.iter().enumerate() {
        if !g.is_torsion_free() {
            return Err(EngineError::TorsionInput(i));
        }
        d = d.with(i as i64, 0, A0, g.rank() as u32);
    }
    Ok(d)
}

/// Cofiber of the inclusion of a free orbit.
pub fn pinched(d: &Descriptor) -> Result<Decomposition, EngineError> {
    if !d.free {
        return Ok(decompose(d)?.with(1, 1, M, 1));
    }
    let a1 = StandardModule::a(1);
    if *d == Descriptor::free_orientable(2, Character::Preserving) {
        Ok(Decomposition::single(M).with(1, 0, A0, 1).with(1, 0, a1, 1))
    } else if *d == Descriptor::free_orientable(2, Character::Reversing) {
        Ok(Decomposition::single(M).with(1, 0, A0, 1).with(1, 1, a1, 1))
    } else {
        Err(EngineError::PinchedUnsupported(*d))
    }
}

/// Two mapping cylinders of degree-`k` maps glued along a reflected circle.
pub fn cohomology_of_xk(k: u32) -> Result<Decomposition, EngineError> {
    if k < 2 {
        return Err(EngineError::XkOutOfRange(k));
    }
    if k.is_multiple_of(2) {
        let d = StandardModule::d4n(k / 2).expect("k/2 >= 1");
        Ok(Decomposition::single(M).with(1, 1, d, 1))
    } else {
        let cone = StandardModule::torsion_cone(k).expect("odd k >= 3");
        Ok(Decomposition::single(M)
            .with(1, 1, M, 1)
            .with(2, 0, cone, 1))
    }
}

/// Summands that one surgery adds, when the additivity rule applies.
pub fn surgery_increment(d: &Descriptor, kind: AttachKind) -> Option<Decomposition> {
    let c = d.c();
    match kind {
        AttachKind::S10At if c >= 1 => {
            Some(Decomposition::zero().with(1, 0, M, 1).with(1, 1, M, 1))
        }
        AttachKind::S11At if !d.free && c == 0 => Some(Decomposition::zero().with(1, 1, M, 2)),
        AttachKind::Fm if c >= 1 && d.f >= 1 => Some(Decomposition::zero().with(1, 0, M, 1)),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TopSummandKind {
    /// A free top class: one summand `Σ^{2,k} M`.
    FreeTop,
    /// A ℤ/4 tower in degree 2.
    Z4Top,
    /// A ℤ/2 tower in degree 2.
    Z2Top,
}

impl fmt::Display for TopSummandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TopSummandKind::FreeTop => "FreeTop",
            TopSummandKind::Z4Top => "Z4Top",
            TopSummandKind::Z2Top => "Z2Top",
        })
    }
}

/// Where the top class of a nonfree surface lives and what it generates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopClassReport {
    /// Smallest codimension of a fixed component: 1 with circles, else 2.
    pub k_min_codim: u8,
    pub summand_kind: TopSummandKind,
    /// Group at `(2, k)`.
    pub top_group: FinAbGroup,
    /// Whether the group at `(2, k-1)` vanishes.
    pub below_zero: bool,
    /// Whether the decomposition has the shape the kind predicts.
    pub predicates_hold: bool,
}

pub fn top_class_report(d: &Descriptor) -> Result<TopClassReport, EngineError> {
    if d.free {
        return Err(EngineError::FreeDescriptor(*d));
    }
    let dec = decompose(d)?;
    let k: u8 = if d.c() >= 1 { 1 } else { 2 };
    let kind = match d.case() {
        SurfaceCase::OrientablePoints | SurfaceCase::OrientableCircles => TopSummandKind::FreeTop,
        SurfaceCase::NonorientablePoints | SurfaceCase::NonorientableCircles => {
            TopSummandKind::Z4Top
        }
        _ => TopSummandKind::Z2Top,
    };
    let top_group = dec.group_at(2, k as i64);
    let below_zero = dec.group_at(2, k as i64 - 1).is_zero();
    let shape = match kind {
        TopSummandKind::FreeTop => dec.count(2, k as i64, M) == 1,
        TopSummandKind::Z4Top => top_group.torsion().iter().filter(|&&t| t % 4 == 0).count() == 1,
        TopSummandKind::Z2Top => {
            top_group.torsion().iter().all(|&t| t == 2) && !top_group.torsion().is_empty()
        }
    };
    Ok(TopClassReport {
        k_min_codim: k,
        summand_kind: kind,
        top_group,
        below_zero,
        predicates_hold: shape && below_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::parse;

    fn eval(s: &str) -> Decomposition {
        evaluate(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn named_answers() {
        let a1 = StandardModule::a(1);
        assert_eq!(eval("T1rot"), Decomposition::single(a1).with(1, 0, a1, 1));
        assert_eq!(
            eval("S2a #2 N(1)"),
            Decomposition::single(StandardModule::f(2)).with(1, 0, StandardModule::f(1), 1)
        );
        assert_eq!(
            eval("S22 + 1[FM]"),
            Decomposition::single(M).with(2, 1, StandardModule::m2(), 1)
        );
        assert_eq!(eval("S22"), rep_sphere(2, 2).unwrap());
        assert_eq!(eval("S21"), rep_sphere(2, 1).unwrap());
        assert_eq!(eval("S2a"), Decomposition::single(StandardModule::a(2)));
    }

    #[test]
    fn xk_family() {
        let x4 = cohomology_of_xk(4).unwrap();
        assert!(x4.group_at(2, 2).torsion().contains(&8));
        assert_eq!(
            cohomology_of_xk(3).unwrap().group_at(2, 0),
            FinAbGroup::cyclic(3)
        );
        assert!(cohomology_of_xk(1).is_err());
        assert_eq!(
            eval("X(2)"),
            decompose(&invariants(&parse("X(2)").unwrap()).unwrap()).unwrap()
        );
    }

    #[test]
    fn auxiliary_spaces() {
        let circle = free_orbit_product(&[FinAbGroup::integers(), FinAbGroup::integers()]).unwrap();
        assert_eq!(circle, Decomposition::single(A0).with(1, 0, A0, 1));
        assert!(free_orbit_product(&[FinAbGroup::cyclic(2)]).is_err());
        assert!(rep_sphere(1, 2).is_err());
        assert_eq!(
            rep_sphere(2, 2).unwrap().group_at(2, 0),
            FinAbGroup::integers()
        );
        let anti = Descriptor::free_orientable(2, Character::Reversing);
        assert_eq!(pinched(&anti).unwrap().count(1, 1, StandardModule::a(1)), 1);
        assert!(pinched(&Descriptor::free_orientable(0, Character::Reversing)).is_err());
    }

    #[test]
    fn top_classes() {
        let r = top_class_report(&invariants(&parse("S22").unwrap()).unwrap()).unwrap();
        assert_eq!(
            (r.k_min_codim, r.summand_kind),
            (2, TopSummandKind::FreeTop)
        );
        assert_eq!(r.top_group, FinAbGroup::from_cyclic_orders(&[0, 2]));
        let r = top_class_report(&invariants(&parse("S22 + 1[FM]").unwrap()).unwrap()).unwrap();
        assert_eq!((r.k_min_codim, r.summand_kind), (1, TopSummandKind::Z2Top));
        assert_eq!(r.top_group, FinAbGroup::cyclic(2));
        assert!(r.predicates_hold);
    }

    #[test]
    fn negative_exponents_are_errors() {
        let bad = Descriptor::nonfree(true, 0, 4, 0, 0);
        assert!(matches!(decompose(&bad), Err(EngineError::Invalid { .. })));
    }
}
