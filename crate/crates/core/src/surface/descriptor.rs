//! Classifying invariants of a surface with involution.

use super::expr::{AttachKind, Base, Closed, SurfaceExpr};
use crate::group::FinAbGroup;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("FM surgery in `{0}` needs an isolated fixed point, but none is left")]
    NoIsolatedFixedPoint(String),
    #[error("X({0}) is not a surface for k >= 3; surgery on it is undefined")]
    NotASurface(u32),
}

/// Whether a free involution of an orientable surface preserves orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Character {
    Preserving,
    Reversing,
}

/// Which free orientable base a free nonorientable surface is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeType {
    Sphere,
    Torus,
}

/// Invariants of a surface with a nontrivial involution.
///
/// `character` is set only for free orientable surfaces and `free_type`
/// only for free nonorientable ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Descriptor {
    pub free: bool,
    pub orientable: bool,
    /// Dimension of mod-2 first cohomology of the underlying surface.
    pub beta: u32,
    /// Isolated fixed points.
    pub f: u32,
    /// Fixed circles with trivial normal bundle.
    pub c_plus: u32,
    /// Fixed circles with Möbius normal bundle.
    pub c_minus: u32,
    pub character: Option<Character>,
    pub free_type: Option<FreeType>,
}

/// Which closed-form branch a descriptor falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceCase {
    FreeOrientable,
    FreeNonorientable,
    /// Orientable with isolated fixed points only.
    OrientablePoints,
    /// Orientable with fixed circles only.
    OrientableCircles,
    /// Nonorientable, isolated fixed points only.
    NonorientablePoints,
    /// Nonorientable, two-sided fixed circles only.
    NonorientableCircles,
    /// Nonorientable with mixed fixed dimensions or a one-sided circle.
    NonorientableMixed,
}

impl Descriptor {
    pub fn free_orientable(beta: u32, character: Character) -> Self {
        Descriptor {
            free: true,
            orientable: true,
            beta,
            f: 0,
            c_plus: 0,
            c_minus: 0,
            character: Some(character),
            free_type: None,
        }
    }

    pub fn free_nonorientable(beta: u32, free_type: FreeType) -> Self {
        Descriptor {
            free: true,
            orientable: false,
            beta,
            f: 0,
            c_plus: 0,
            c_minus: 0,
            character: None,
            free_type: Some(free_type),
        }
    }

    pub fn nonfree(orientable: bool, beta: u32, f: u32, c_plus: u32, c_minus: u32) -> Self {
        Descriptor {
            free: false,
            orientable,
            beta,
            f,
            c_plus,
            c_minus,
            character: None,
            free_type: None,
        }
    }

    /// Number of fixed circles.
    pub fn c(&self) -> u32 {
        self.c_plus + self.c_minus
    }

    /// Orientation behaviour of the involution on an orientable surface.
    /// For nonfree surfaces it is read off the fixed set: isolated points
    /// force preserving, circles force reversing.
    pub fn effective_character(&self) -> Option<Character> {
        if !self.orientable {
            return None;
        }
        if self.free {
            return self.character;
        }
        if self.f > 0 {
            Some(Character::Preserving)
        } else if self.c() > 0 {
            Some(Character::Reversing)
        } else {
            None
        }
    }

    pub fn case(&self) -> SurfaceCase {
        match (self.free, self.orientable) {
            (true, true) => SurfaceCase::FreeOrientable,
            (true, false) => SurfaceCase::FreeNonorientable,
            (false, true) if self.f > 0 => SurfaceCase::OrientablePoints,
            (false, true) => SurfaceCase::OrientableCircles,
            (false, false) if self.c() == 0 => SurfaceCase::NonorientablePoints,
            (false, false) if self.f == 0 && self.c_minus == 0 => SurfaceCase::NonorientableCircles,
            (false, false) => SurfaceCase::NonorientableMixed,
        }
    }

    pub fn underlying(&self) -> UnderlyingSurface {
        if self.orientable {
            UnderlyingSurface {
                orientable: true,
                genus: self.beta / 2,
            }
        } else {
            UnderlyingSurface {
                orientable: false,
                genus: self.beta,
            }
        }
    }

    /// Applies one surgery to the descriptor.
    pub fn attach(&self, kind: AttachKind) -> Option<Descriptor> {
        let ch = self.effective_character();
        let mut d = Descriptor {
            free: false,
            character: None,
            free_type: None,
            ..*self
        };
        match kind {
            AttachKind::S10At => {
                d.orientable = ch == Some(Character::Reversing);
                d.beta += 2;
                d.c_plus += 1;
            }
            AttachKind::S11At => {
                d.orientable = ch == Some(Character::Preserving);
                d.beta += 2;
                d.f += 2;
            }
            AttachKind::Fm => {
                if self.f == 0 {
                    return None;
                }
                d.orientable = false;
                d.beta += 1;
                d.f -= 1;
                d.c_minus += 1;
            }
        }
        Some(d)
    }

    /// Double connected sum with a closed surface.
    pub fn conn_sum2(&self, y: Closed) -> Descriptor {
        let mut d = *self;
        match y {
            Closed::T(g) => d.beta += 4 * g,
            Closed::N(r) => {
                if d.free && d.orientable {
                    d.free_type = Some(if d.beta.is_multiple_of(4) {
                        FreeType::Sphere
                    } else {
                        FreeType::Torus
                    });
                    d.character = None;
                }
                d.orientable = false;
                d.beta += 2 * r;
            }
        }
        d
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} beta={}",
            if self.free { "free" } else { "nonfree" },
            if self.orientable {
                "orientable"
            } else {
                "nonorientable"
            },
            self.beta
        )?;
        if !self.free {
            write!(f, " F={} C+={} C-={}", self.f, self.c_plus, self.c_minus)?;
        }
        match self.character {
            Some(Character::Preserving) => f.write_str(" preserving")?,
            Some(Character::Reversing) => f.write_str(" reversing")?,
            None => {}
        }
        match self.free_type {
            Some(FreeType::Sphere) => f.write_str(" sphere-type")?,
            Some(FreeType::Torus) => f.write_str(" torus-type")?,
            None => {}
        }
        Ok(())
    }
}

/// The underlying surface: orientable of genus `g` or `N_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnderlyingSurface {
    pub orientable: bool,
    /// Orientable genus, or number of crosscaps.
    pub genus: u32,
}

/// Descriptor of a base surface.
pub fn base_invariants(b: Base) -> Descriptor {
    match b {
        Base::S2a => Descriptor::free_orientable(0, Character::Reversing),
        Base::T1rot => Descriptor::free_orientable(2, Character::Preserving),
        Base::T1anti => Descriptor::free_orientable(2, Character::Reversing),
        Base::S21 => Descriptor::nonfree(true, 0, 0, 1, 0),
        Base::S22 => Descriptor::nonfree(true, 0, 2, 0, 0),
        // Klein bottle for k = 2; for odd k the mod-2 restriction to the
        // middle circle is onto and one class dies
        Base::X(k) => Descriptor::nonfree(false, if k % 2 == 0 { 2 } else { 1 }, 2, 0, 0),
    }
}

/// Descriptor of an expression, applying surgeries innermost first.
pub fn invariants(e: &SurfaceExpr) -> Result<Descriptor, SurfaceError> {
    match e {
        SurfaceExpr::Base(b) => Ok(base_invariants(*b)),
        SurfaceExpr::ConnSum2(inner, y) => {
            reject_singular_base(inner)?;
            Ok(invariants(inner)?.conn_sum2(*y))
        }
        SurfaceExpr::Attach(inner, n, kind) => {
            reject_singular_base(inner)?;
            let mut d = invariants(inner)?;
            for _ in 0..*n {
                d = d
                    .attach(*kind)
                    .ok_or_else(|| SurfaceError::NoIsolatedFixedPoint(e.to_string()))?;
            }
            Ok(d)
        }
    }
}

fn reject_singular_base(inner: &SurfaceExpr) -> Result<(), SurfaceError> {
    match inner.root() {
        Base::X(k) if k >= 3 => Err(SurfaceError::NotASurface(k)),
        _ => Ok(()),
    }
}

/// A failed realizability condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation(pub String);

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Necessary conditions for a descriptor to come from a surface.
pub fn validate(d: &Descriptor) -> Vec<Violation> {
    let mut v = Vec::new();
    let mut need = |ok: bool, msg: &str| {
        if !ok {
            v.push(Violation(msg.to_string()));
        }
    };
    let beta = d.beta as i64;
    let (f, cp, cm) = (d.f as i64, d.c_plus as i64, d.c_minus as i64);
    let c = cp + cm;
    if d.free {
        need(f == 0 && c == 0, "free actions have no fixed points");
        need(beta % 2 == 0, "free ⇒ β even");
        if d.orientable {
            need(
                d.character.is_some(),
                "free orientable surfaces carry an orientation character",
            );
            need(
                d.free_type.is_none(),
                "free type applies only to nonorientable surfaces",
            );
            need(
                beta % 4 != 0 || d.character == Some(Character::Reversing),
                "free orientable with β ≡ 0 mod 4 must reverse orientation",
            );
        } else {
            need(
                d.character.is_none(),
                "orientation character applies only to orientable surfaces",
            );
            need(
                d.free_type.is_some(),
                "free nonorientable surfaces carry a free type",
            );
            need(beta >= 2, "free nonorientable ⇒ β ≥ 2");
            need(
                d.free_type != Some(FreeType::Torus) || beta >= 4,
                "torus-type free nonorientable ⇒ β ≥ 4",
            );
        }
        return v;
    }
    need(
        d.character.is_none() && d.free_type.is_none(),
        "character and free type apply only to free actions",
    );
    need(f + c >= 1, "nonfree actions have a fixed point or circle");
    need((beta - f) % 2 == 0, "nonfree ⇒ β ≡ F mod 2");
    if d.orientable {
        need(
            cm == 0,
            "orientable surfaces have no one-sided fixed circles",
        );
        need(
            !(f > 0 && c > 0),
            "orientable actions cannot mix isolated points and circles",
        );
        if f > 0 {
            need(f % 2 == 0, "orientable with isolated points ⇒ F even");
            need(beta >= f - 2, "orientable with isolated points ⇒ β ≥ F − 2");
            need(
                (beta - f).rem_euclid(4) == 2,
                "orientable with isolated points ⇒ β − F ≡ 2 mod 4",
            );
        }
        if c > 0 {
            need(beta % 2 == 0, "orientable with fixed circles ⇒ β even");
            need(
                beta >= 2 * c - 2,
                "orientable with fixed circles ⇒ β ≥ 2C − 2",
            );
        }
    } else {
        match d.case() {
            SurfaceCase::NonorientablePoints => {
                need(beta >= f, "exponent (β − F)/2 must be nonnegative");
                need(f >= 2, "exponent F − 2 must be nonnegative");
            }
            SurfaceCase::NonorientableCircles => {
                need(beta >= 2 * c, "exponent (β − 2C)/2 must be nonnegative");
            }
            _ => {
                need(
                    beta + 2 >= f + 2 * c,
                    "exponent (β − F − 2C)/2 + 1 must be nonnegative",
                );
                need(c >= 1, "exponent C − 1 must be nonnegative");
                need(f + c >= 2, "exponent F + C − 2 must be nonnegative");
            }
        }
        need(f != 1 || cm >= 1, "F = 1 requires a one-sided fixed circle");
        need(
            !(cm >= 1 && f == 0 && cp == 0) || cm >= 2,
            "only one-sided circles and no points ⇒ C₋ ≥ 2",
        );
    }
    v
}

/// Integral cohomology of the underlying surface and of the fixed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingCohomology {
    /// `H^0, H^1, H^2` of the underlying surface.
    pub surface: [FinAbGroup; 3],
    /// `H^0, H^1` of the fixed set.
    pub fixed: [FinAbGroup; 2],
}

impl UnderlyingCohomology {
    /// `H^n` of the surface, zero outside `0..=2`.
    pub fn surface_degree(&self, n: i64) -> FinAbGroup {
        usize::try_from(n)
            .ok()
            .and_then(|i| self.surface.get(i).cloned())
            .unwrap_or_default()
    }
}

pub fn underlying_cohomology(d: &Descriptor) -> UnderlyingCohomology {
    let u = d.underlying();
    let surface = if u.orientable {
        [
            FinAbGroup::integers(),
            FinAbGroup::free(2 * u.genus as usize),
            FinAbGroup::integers(),
        ]
    } else {
        [
            FinAbGroup::integers(),
            FinAbGroup::free(u.genus.saturating_sub(1) as usize),
            FinAbGroup::cyclic(2),
        ]
    };
    let c = d.c() as usize;
    UnderlyingCohomology {
        surface,
        fixed: [FinAbGroup::free(d.f as usize + c), FinAbGroup::free(c)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::expr::parse;

    fn inv(s: &str) -> Descriptor {
        invariants(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn surgery_bookkeeping() {
        let d = inv("S22 + 2[S11-AT]");
        assert_eq!((d.f, d.beta, d.orientable), (6, 4, true));
        let d = inv("S22 + 1[FM]");
        assert_eq!((d.f, d.c_minus, d.beta, d.orientable), (1, 1, 1, false));
        let d = inv("S2a #2 T(1)");
        assert_eq!(d, Descriptor::free_orientable(4, Character::Reversing));
        let d = inv("T1rot #2 N(1)");
        assert_eq!(d, inv("T1anti #2 N(1)"));
        assert_eq!(d.free_type, Some(FreeType::Torus));
        assert_eq!(inv("S2a #2 N(2)").free_type, Some(FreeType::Sphere));
    }

    #[test]
    fn fm_needs_a_point() {
        let e = parse("S22 + 1[FM] + 1[FM]").unwrap();
        assert!(invariants(&e).is_ok());
        let e = parse("S22 + 3[FM]").unwrap();
        assert!(matches!(
            invariants(&e),
            Err(SurfaceError::NoIsolatedFixedPoint(_))
        ));
        assert!(invariants(&parse("S21 + 1[FM]").unwrap()).is_err());
    }

    #[test]
    fn singular_spaces_reject_surgery() {
        assert!(invariants(&parse("X(3)").unwrap()).is_ok());
        assert_eq!(
            invariants(&parse("X(3) #2 T(1)").unwrap()),
            Err(SurfaceError::NotASurface(3))
        );
    }

    #[test]
    fn validation_examples() {
        assert!(validate(&Descriptor::nonfree(false, 1, 1, 0, 1)).is_empty());
        let v = validate(&Descriptor::nonfree(true, 2, 2, 1, 0));
        assert!(v.iter().any(|x| x.0.contains("cannot mix")));
        let v = validate(&Descriptor::free_orientable(3, Character::Reversing));
        assert!(v.iter().any(|x| x.0 == "free ⇒ β even"));
        assert!(!validate(&Descriptor::free_orientable(4, Character::Preserving)).is_empty());
    }

    #[test]
    fn underlying_tables() {
        let u = underlying_cohomology(&Descriptor::free_orientable(4, Character::Reversing));
        assert_eq!(u.surface[1], FinAbGroup::free(4));
        let u = underlying_cohomology(&Descriptor::nonfree(false, 1, 1, 0, 1));
        assert_eq!(u.surface[2], FinAbGroup::cyclic(2));
        let u = underlying_cohomology(&Descriptor::nonfree(true, 0, 2, 0, 0));
        assert_eq!(u.fixed, [FinAbGroup::free(2), FinAbGroup::zero()]);
    }
}
