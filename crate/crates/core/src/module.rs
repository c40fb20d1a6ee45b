//! The catalog of standard modules over the cohomology ring of a point.
//!
//! Every catalog module has at most one cyclic generator in each bidegree,
//! so a table is a partial map `(p, q) -> order` together with the scalar
//! by which ρ (degree `(1,1)`) and x (degree `(0,2)`) act on generators.

use crate::group::{FinAbGroup, GroupHom};
use crate::snf::IntMatrix;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("D4n requires n >= 1, got {0}")]
    D4nParameter(u32),
    #[error("TorsionCone requires an odd k >= 3, got {0}")]
    TorsionConeParameter(u32),
    #[error("unknown module name {0:?}")]
    UnknownName(String),
    #[error("module {0} takes no parameter")]
    UnexpectedParameter(&'static str),
}

/// Catalog families, in canonical sort order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleTag {
    M,
    M2,
    A,
    F,
    D4n,
    TorsionCone,
}

impl ModuleTag {
    pub const ALL: [ModuleTag; 6] = [
        ModuleTag::M,
        ModuleTag::M2,
        ModuleTag::A,
        ModuleTag::F,
        ModuleTag::D4n,
        ModuleTag::TorsionCone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModuleTag::M => "M",
            ModuleTag::M2 => "M2",
            ModuleTag::A => "A",
            ModuleTag::F => "F",
            ModuleTag::D4n => "D4n",
            ModuleTag::TorsionCone => "TorsionCone",
        }
    }

    pub fn from_name(s: &str) -> Option<ModuleTag> {
        ModuleTag::ALL.into_iter().find(|t| t.name() == s)
    }

    pub fn has_parameter(self) -> bool {
        !matches!(self, ModuleTag::M | ModuleTag::M2)
    }
}

/// One member of the catalog; the parameter is validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardModule {
    tag: ModuleTag,
    param: u32,
}

const fn even(n: i64) -> bool {
    n.rem_euclid(2) == 0
}

impl StandardModule {
    pub const fn m() -> Self {
        StandardModule {
            tag: ModuleTag::M,
            param: 0,
        }
    }

    pub const fn m2() -> Self {
        StandardModule {
            tag: ModuleTag::M2,
            param: 0,
        }
    }

    /// Cohomology of the antipodal `n`-sphere.
    pub const fn a(n: u32) -> Self {
        StandardModule {
            tag: ModuleTag::A,
            param: n,
        }
    }

    /// `x^{-1} M / (ρ^{i+1})`.
    pub const fn f(i: u32) -> Self {
        StandardModule {
            tag: ModuleTag::F,
            param: i,
        }
    }

    pub fn d4n(n: u32) -> Result<Self, ModuleError> {
        if n == 0 {
            return Err(ModuleError::D4nParameter(n));
        }
        Ok(StandardModule {
            tag: ModuleTag::D4n,
            param: n,
        })
    }

    /// `M / k` for odd `k >= 3`.
    pub fn torsion_cone(k: u32) -> Result<Self, ModuleError> {
        if k < 3 || k.is_multiple_of(2) {
            return Err(ModuleError::TorsionConeParameter(k));
        }
        Ok(StandardModule {
            tag: ModuleTag::TorsionCone,
            param: k,
        })
    }

    pub fn from_parts(tag: ModuleTag, param: u32) -> Result<Self, ModuleError> {
        match tag {
            ModuleTag::M | ModuleTag::M2 if param != 0 => {
                Err(ModuleError::UnexpectedParameter(tag.name()))
            }
            ModuleTag::M => Ok(Self::m()),
            ModuleTag::M2 => Ok(Self::m2()),
            ModuleTag::A => Ok(Self::a(param)),
            ModuleTag::F => Ok(Self::f(param)),
            ModuleTag::D4n => Self::d4n(param),
            ModuleTag::TorsionCone => Self::torsion_cone(param),
        }
    }

    pub fn tag(&self) -> ModuleTag {
        self.tag
    }

    /// Family parameter; `0` for `M` and `M2`.
    pub fn param(&self) -> u32 {
        self.param
    }

    /// Cyclic order of the generator at `(p, q)`: `None` for the zero
    /// group, `Some(0)` for ℤ, `Some(n)` for ℤ/n.
    pub fn order_at(&self, p: i64, q: i64) -> Option<u64> {
        let n = self.param as i64;
        match self.tag {
            ModuleTag::M => match p {
                0 if even(q) => Some(0),
                0 if q <= -3 => Some(2),
                p if p >= 1 && q >= p && even(q - p) => Some(2),
                p if p <= -1 && q <= p - 3 && !even(q - p) => Some(2),
                _ => None,
            },
            ModuleTag::M2 => ((0 <= p && p <= q) || (p <= 0 && q <= p - 2)).then_some(2),
            ModuleTag::F => f_order(n, p, q),
            ModuleTag::A => {
                let eps = if n % 2 == 0 { 1 } else { 0 };
                f_order(n, p, q).or_else(|| f_order(0, p - n, q - eps))
            }
            ModuleTag::D4n => match p {
                0 if even(q) => Some(0),
                1 if q >= 1 && !even(q) => Some(4 * n as u64),
                1 if q <= -1 && !even(q) => Some(2 * n as u64),
                p if p >= 2 && q >= p && even(q - p) => Some(2),
                p if p <= 1 && q <= p - 3 && !even(q - p) => Some(2),
                _ => None,
            },
            ModuleTag::TorsionCone => (p == 0 && even(q)).then_some(n as u64),
        }
    }

    /// Scalar by which ρ sends the generator at `(p, q)` to the one at
    /// `(p+1, q+1)`; zero when either group vanishes.
    pub fn rho_coefficient(&self, p: i64, q: i64) -> i64 {
        if self.order_at(p, q).is_none() || self.order_at(p + 1, q + 1).is_none() {
            return 0;
        }
        match self.tag {
            // the two summands of A(n) sit in disjoint parities, and the
            // shifted F(0) never reaches a nonzero target
            ModuleTag::M | ModuleTag::M2 | ModuleTag::F | ModuleTag::A => 1,
            ModuleTag::D4n if p == 0 && even(q) => {
                let n = self.param as i64;
                if q >= 0 {
                    2 * n
                } else {
                    n
                }
            }
            ModuleTag::D4n => 1,
            ModuleTag::TorsionCone => 0,
        }
    }

    /// Scalar by which x sends the generator at `(p, q)` to the one at
    /// `(p, q+2)`; zero when either group vanishes.
    pub fn x_coefficient(&self, p: i64, q: i64) -> i64 {
        if self.order_at(p, q).is_none() || self.order_at(p, q + 2).is_none() {
            return 0;
        }
        match (self.tag, p, q) {
            (ModuleTag::M | ModuleTag::TorsionCone, 0, -2) => 2,
            (ModuleTag::M2, 0, -2) => 0,
            (ModuleTag::D4n, 1, -1) => 2,
            _ => 1,
        }
    }

    pub fn group_at(&self, p: i64, q: i64) -> FinAbGroup {
        FinAbGroup::cyclic(self.order_at(p, q).map_or(1, |o| o))
    }

    fn generators(&self, p: i64, q: i64) -> Vec<u64> {
        self.order_at(p, q).into_iter().collect()
    }

    fn one_by_one(&self, from: (i64, i64), to: (i64, i64), coeff: i64) -> GroupHom {
        let source = self.generators(from.0, from.1);
        let target = self.generators(to.0, to.1);
        let mut m = IntMatrix::zeros(target.len(), source.len());
        if !source.is_empty() && !target.is_empty() {
            m.set(0, 0, coeff);
        }
        GroupHom::new(source, target, m).expect("catalog action tables are well defined")
    }

    pub fn act_rho(&self, p: i64, q: i64) -> GroupHom {
        self.one_by_one((p, q), (p + 1, q + 1), self.rho_coefficient(p, q))
    }

    pub fn act_x(&self, p: i64, q: i64) -> GroupHom {
        self.one_by_one((p, q), (p, q + 2), self.x_coefficient(p, q))
    }

    /// Name of the canonical generator at `(p, q)` as a monomial.
    pub fn generator_label(&self, p: i64, q: i64) -> Option<String> {
        self.order_at(p, q)?;
        let label = match self.tag {
            ModuleTag::M | ModuleTag::TorsionCone => match p {
                0 if q >= 0 => monomial(&[("x", q / 2)]),
                0 if even(q) => divided("θ", &[("x", (-q - 2) / 2)]),
                0 => divided("μ", &[("x", (-q - 3) / 2)]),
                p if p > 0 => monomial(&[("ρ", p), ("x", (q - p) / 2)]),
                p => divided("μ", &[("ρ", -p), ("x", (p - 3 - q) / 2)]),
            },
            ModuleTag::M2 if q >= p => monomial(&[("ρ", p), ("τ", q - p)]),
            ModuleTag::M2 => divided("θ", &[("ρ", -p), ("τ", p - 2 - q)]),
            ModuleTag::D4n => match p {
                0 if q >= 0 => monomial(&[("x", q / 2), ("α0", 1)]),
                0 => format!("α{}", -q / 2),
                1 if q >= 1 => monomial(&[("x", (q - 1) / 2), ("β", 1)]),
                1 if !even(q) => divided("β", &[("x", (1 - q) / 2)]),
                p if p >= 2 => monomial(&[("ρ", p - 1), ("x", (q - p) / 2), ("β", 1)]),
                p => divided("λ", &[("ρ", 1 - p), ("x", (p - 3 - q) / 2)]),
            },
            ModuleTag::F => monomial(&[("ρ", p), ("x", (q - p).div_euclid(2))]),
            ModuleTag::A => {
                let n = self.param as i64;
                if f_order(n, p, q).is_some() {
                    monomial(&[("ρ", p), ("x", (q - p).div_euclid(2))])
                } else {
                    // unit of the shifted F(0) summand
                    monomial(&[("ι", 1), ("x", (q - p).div_euclid(2))])
                }
            }
        };
        Some(label)
    }
}

fn power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

fn monomial(factors: &[(&str, i64)]) -> String {
    let s: String = factors.iter().map(|&(v, e)| power(v, e)).collect();
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

fn divided(numerator: &str, denominator: &[(&str, i64)]) -> String {
    let parts: Vec<String> = denominator
        .iter()
        .filter(|f| f.1 != 0)
        .map(|&(v, e)| power(v, e))
        .collect();
    match parts.len() {
        0 => numerator.to_string(),
        1 => format!("{numerator}/{}", parts[0]),
        _ => format!("{numerator}/({})", parts.concat()),
    }
}

/// Table of `F(i)`.
fn f_order(i: i64, p: i64, q: i64) -> Option<u64> {
    match p {
        0 if even(q) => Some(0),
        p if 1 <= p && p <= i && even(q - p) => Some(2),
        _ => None,
    }
}

impl fmt::Display for StandardModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tag.has_parameter() {
            write!(f, "{}({})", self.tag.name(), self.param)
        } else {
            f.write_str(self.tag.name())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_ranges() {
        assert!(StandardModule::d4n(0).is_err());
        assert!(StandardModule::torsion_cone(4).is_err());
        assert!(StandardModule::torsion_cone(1).is_err());
        assert!(StandardModule::torsion_cone(5).is_ok());
        assert!(StandardModule::from_parts(ModuleTag::M, 1).is_err());
    }

    #[test]
    fn point_ring_generators() {
        let m = StandardModule::m();
        assert_eq!(m.generator_label(0, 0).as_deref(), Some("1"));
        assert_eq!(m.generator_label(0, 4).as_deref(), Some("x^2"));
        assert_eq!(m.generator_label(0, -2).as_deref(), Some("θ"));
        assert_eq!(m.generator_label(0, -5).as_deref(), Some("μ/x"));
        assert_eq!(m.generator_label(2, 4).as_deref(), Some("ρ^2x"));
        assert_eq!(m.generator_label(-2, -5).as_deref(), Some("μ/ρ^2"));
        assert_eq!(m.generator_label(-1, -6).as_deref(), Some("μ/(ρx)"));
        assert_eq!(m.generator_label(0, 1), None);
    }

    #[test]
    fn a_summands_use_disjoint_parities() {
        for n in 0..5u32 {
            let a = StandardModule::a(n);
            for p in -3..8 {
                for q in -8..9 {
                    let both = f_order(n as i64, p, q).is_some()
                        && f_order(0, p - n as i64, q - if n % 2 == 0 { 1 } else { 0 }).is_some();
                    assert!(!both, "A({n}) overlap at ({p},{q})");
                    let _ = a.order_at(p, q);
                }
            }
        }
    }

    #[test]
    fn d4n_relations() {
        let d = StandardModule::d4n(3).unwrap();
        assert_eq!(d.order_at(1, 1), Some(12));
        assert_eq!(d.order_at(1, -1), Some(6));
        assert_eq!(d.rho_coefficient(0, 0), 6);
        assert_eq!(d.rho_coefficient(0, -2), 3);
        assert_eq!(d.x_coefficient(1, -1), 2);
        assert_eq!(d.x_coefficient(0, -2), 1);
    }
}
