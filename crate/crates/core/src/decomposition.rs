//! Formal direct sums of shifted catalog modules.

use crate::grading::{Bidegree, Window};
use crate::group::{FinAbGroup, GroupHom, HomSignature};
use crate::module::StandardModule;
use std::fmt;

/// Anything with bigraded groups and ρ, x actions.
pub trait Graded {
    /// Cyclic orders of the generators at `(p, q)` (`0` for ℤ), in the
    /// basis that `act_rho` and `act_x` are written in.
    fn generators_at(&self, p: i64, q: i64) -> Vec<u64>;

    /// Multiplication by ρ from `(p, q)` to `(p+1, q+1)`.
    fn act_rho(&self, p: i64, q: i64) -> GroupHom;

    /// Multiplication by x from `(p, q)` to `(p, q+2)`.
    fn act_x(&self, p: i64, q: i64) -> GroupHom;

    fn group_at(&self, p: i64, q: i64) -> FinAbGroup {
        FinAbGroup::from_cyclic_orders(&self.generators_at(p, q))
    }
}

impl Graded for StandardModule {
    fn generators_at(&self, p: i64, q: i64) -> Vec<u64> {
        self.order_at(p, q).into_iter().collect()
    }

    fn act_rho(&self, p: i64, q: i64) -> GroupHom {
        StandardModule::act_rho(self, p, q)
    }

    fn act_x(&self, p: i64, q: i64) -> GroupHom {
        StandardModule::act_x(self, p, q)
    }
}

/// `multiplicity` copies of `Σ^{shift} module`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub shift: Bidegree,
    pub module: StandardModule,
    pub multiplicity: u32,
}

impl Summand {
    pub fn new(a: i64, b: i64, module: StandardModule, multiplicity: u32) -> Self {
        Summand {
            shift: Bidegree::new(a, b),
            module,
            multiplicity,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Bidegree { p, q } = self.shift;
        if (p, q) != (0, 0) {
            write!(f, "Σ^{{{p},{q}}}")?;
        }
        write!(f, "{}", self.module)?;
        if self.multiplicity > 1 {
            write!(f, "^{}", self.multiplicity)?;
        }
        Ok(())
    }
}

/// A canonical formal direct sum: summands sorted by shift, then module,
/// with equal terms merged and zero multiplicities dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Decomposition {
    summands: Vec<Summand>,
}

impl Decomposition {
    pub fn zero() -> Self {
        Decomposition::default()
    }

    pub fn from_summands(items: impl IntoIterator<Item = Summand>) -> Self {
        let mut v: Vec<Summand> = items.into_iter().filter(|s| s.multiplicity > 0).collect();
        v.sort_by_key(|s| (s.shift, s.module));
        let mut out: Vec<Summand> = Vec::with_capacity(v.len());
        for s in v {
            match out.last_mut() {
                Some(last) if last.shift == s.shift && last.module == s.module => {
                    last.multiplicity += s.multiplicity
                }
                _ => out.push(s),
            }
        }
        Decomposition { summands: out }
    }

    pub fn single(module: StandardModule) -> Self {
        Decomposition::from_summands([Summand::new(0, 0, module, 1)])
    }

    /// Appends `multiplicity` copies of `Σ^{a,b} module`.
    pub fn with(self, a: i64, b: i64, module: StandardModule, multiplicity: u32) -> Self {
        self.direct_sum(&Decomposition::from_summands([Summand::new(
            a,
            b,
            module,
            multiplicity,
        )]))
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn shift(&self, a: i64, b: i64) -> Decomposition {
        Decomposition {
            summands: self
                .summands
                .iter()
                .map(|s| Summand {
                    shift: s.shift.shifted(a, b),
                    ..*s
                })
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Decomposition) -> Decomposition {
        Decomposition::from_summands(self.summands.iter().chain(&other.summands).copied())
    }

    /// Number of summands `Σ^{a,b} module`, counted with multiplicity.
    pub fn count(&self, a: i64, b: i64, module: StandardModule) -> u32 {
        self.summands
            .iter()
            .filter(|s| s.shift == Bidegree::new(a, b) && s.module == module)
            .map(|s| s.multiplicity)
            .sum()
    }

    fn action(&self, p: i64, q: i64, rho: bool) -> GroupHom {
        let mut parts = Vec::new();
        for s in &self.summands {
            let (sp, sq) = (p - s.shift.p, q - s.shift.q);
            let h = if rho {
                s.module.act_rho(sp, sq)
            } else {
                s.module.act_x(sp, sq)
            };
            for _ in 0..s.multiplicity {
                parts.push(h.clone());
            }
        }
        if parts.is_empty() {
            return GroupHom::zero(Vec::new(), Vec::new());
        }
        GroupHom::block_sum(&parts)
    }
}

impl Graded for Decomposition {
    fn generators_at(&self, p: i64, q: i64) -> Vec<u64> {
        let mut out = Vec::new();
        for s in &self.summands {
            if let Some(o) = s.module.order_at(p - s.shift.p, q - s.shift.q) {
                out.extend(std::iter::repeat_n(o, s.multiplicity as usize));
            }
        }
        out
    }

    fn act_rho(&self, p: i64, q: i64) -> GroupHom {
        self.action(p, q, true)
    }

    fn act_x(&self, p: i64, q: i64) -> GroupHom {
        self.action(p, q, false)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// What differed at a bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MismatchKind {
    Group,
    Rho,
    X,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub at: Bidegree,
    pub kind: MismatchKind,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            MismatchKind::Group => "group",
            MismatchKind::Rho => "rho",
            MismatchKind::X => "x",
        };
        write!(f, "{what} at {}: {} vs {}", self.at, self.left, self.right)
    }
}

fn describe(s: &HomSignature) -> String {
    format!(
        "im {} ker {} coker {}",
        s.image.ascii(),
        s.kernel.ascii(),
        s.cokernel.ascii()
    )
}

/// Compares groups and the isomorphism type (image, kernel, cokernel) of
/// both actions at every bidegree of the window. Returns all mismatches;
/// an empty list means equal in the window.
pub fn compare_in_window(
    left: &impl Graded,
    right: &impl Graded,
    window: &Window,
) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for at in window.iter() {
        let (gl, gr) = (left.group_at(at.p, at.q), right.group_at(at.p, at.q));
        if gl != gr {
            out.push(Mismatch {
                at,
                kind: MismatchKind::Group,
                left: gl.ascii(),
                right: gr.ascii(),
            });
            continue;
        }
        let pairs = [
            (
                MismatchKind::Rho,
                left.act_rho(at.p, at.q),
                right.act_rho(at.p, at.q),
            ),
            (
                MismatchKind::X,
                left.act_x(at.p, at.q),
                right.act_x(at.p, at.q),
            ),
        ];
        for (kind, hl, hr) in pairs {
            let (sl, sr) = (hl.signature(), hr.signature());
            if sl != sr {
                out.push(Mismatch {
                    at,
                    kind,
                    left: describe(&sl),
                    right: describe(&sr),
                });
            }
        }
    }
    out
}

pub fn equals_in_window(left: &impl Graded, right: &impl Graded, window: &Window) -> bool {
    compare_in_window(left, right, window).is_empty()
}

/// Value of ρ-localization along one diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableDiagonal {
    pub group: FinAbGroup,
    /// False when the window's p-range ends before three consecutive
    /// isomorphisms are seen; `group` is then the last group reached.
    pub stabilized: bool,
}

/// Number of trailing consecutive ρ-isomorphisms required for stability.
pub const STABLE_RUN: usize = 3;

/// Follows ρ along `q = p + c` across the window's p-range.
pub fn rho_stable_diagonal(d: &impl Graded, c: i64, window: &Window) -> StableDiagonal {
    let (p0, p1, _, _) = window.bounds();
    let mut run = 0usize;
    let mut run_start = p1;
    for p in p0..p1 {
        if d.act_rho(p, p + c).is_iso() {
            if run == 0 {
                run_start = p;
            }
            run += 1;
        } else {
            run = 0;
        }
    }
    if run >= STABLE_RUN {
        StableDiagonal {
            group: d.group_at(run_start, run_start + c),
            stabilized: true,
        }
    } else {
        StableDiagonal {
            group: d.group_at(p1, p1 + c),
            stabilized: false,
        }
    }
}

/// The ρ-localized point ring along diagonal `c`: ℤ/2 for even `c >= 0`.
pub fn localized_point(c: i64) -> FinAbGroup {
    if c >= 0 && c % 2 == 0 {
        FinAbGroup::cyclic(2)
    } else {
        FinAbGroup::zero()
    }
}
