//! Consistency checks between engine answers and triangulated models.

use crate::complex::{CohomologyTable, EquivariantComplex};
use crate::invariants::{mesh_invariants, InvariantError};
use crate::mesh::MeshError;
use crate::triangulate::triangulate;
use eqsurf_core::checks::{forgetful_les_check, rho_localization_check, LesReport, RhoReport};
use eqsurf_core::engine::{evaluate, EngineError};
use eqsurf_core::surface::{invariants, Descriptor, SurfaceError, SurfaceExpr};
use eqsurf_core::{Decomposition, FinAbGroup, Graded, Window};
use thiserror::Error;

/// Expressions covering every branch of the closed-form answer plus the
/// `X(k)` spaces.
pub const CORPUS: [&str; 12] = [
    "S2a",
    "T1rot",
    "T1anti",
    "S2a #2 N(1)",
    "S22",
    "S21 + 1[S10-AT]",
    "S22 #2 N(1)",
    "S21 #2 N(1)",
    "S22 + 1[FM]",
    "X(2)",
    "X(3)",
    "X(4)",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// A triangulated expression with the cohomology of its pieces.
#[derive(Debug, Clone)]
pub struct Model {
    pub expr: SurfaceExpr,
    pub complex: EquivariantComplex,
    pub surface: CohomologyTable,
    pub quotient: CohomologyTable,
    pub fixed: CohomologyTable,
}

impl Model {
    pub fn build(e: &SurfaceExpr) -> Result<Self, CheckError> {
        let complex = triangulate(e)?;
        Ok(Model {
            expr: e.clone(),
            surface: complex.complex().integral_cohomology(),
            quotient: complex.quotient().integral_cohomology(),
            fixed: complex.fixed_subcomplex().integral_cohomology(),
            complex,
        })
    }

    pub fn engine(&self) -> Result<Decomposition, CheckError> {
        Ok(evaluate(&self.expr)?)
    }

    pub fn quotient_lemma(&self) -> Result<QuotientReport, CheckError> {
        let engine = self.engine()?;
        Ok(QuotientReport {
            engine: [0, 1, 2].map(|p| engine.group_at(p, 0)),
            mesh: self.quotient.degrees.clone(),
        })
    }

    pub fn forgetful_les(&self, window: &Window) -> Result<LesReport, CheckError> {
        Ok(forgetful_les_check(
            &self.engine()?,
            |n| self.surface.degree(n),
            window,
        ))
    }

    pub fn rho_localization(&self, window: &Window) -> Result<RhoReport, CheckError> {
        let r = self.fixed.ranks();
        Ok(rho_localization_check(&self.engine()?, &r[..2], window))
    }

    pub fn euler(&self) -> EulerReport {
        let x = self.complex.complex();
        EulerReport {
            chi: x.euler_characteristic(),
            chi_quotient: self.complex.quotient().euler_characteristic(),
            chi_fixed: self.complex.fixed_subcomplex().euler_characteristic(),
            beta: self.complex.complex().mod2_first_betti() as i64,
            closed_surface: is_closed_surface(&self.complex),
        }
    }

    pub fn invariants(&self) -> Result<InvariantsReport, CheckError> {
        Ok(InvariantsReport {
            expected: invariants(&self.expr)?,
            mesh: mesh_invariants(&self.complex)?,
        })
    }
}

fn is_closed_surface(c: &EquivariantComplex) -> bool {
    let x = c.complex();
    let mut count = vec![0usize; x.edges().len()];
    x.triangles().iter().flatten().for_each(|&e| count[e] += 1);
    count.iter().all(|&n| n == 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    /// Engine groups at `(p, 0)` for `p = 0, 1, 2`.
    pub engine: [FinAbGroup; 3],
    /// Integral cohomology of the quotient complex.
    pub mesh: [FinAbGroup; 3],
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.engine == self.mesh
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerReport {
    pub chi: i64,
    pub chi_quotient: i64,
    pub chi_fixed: i64,
    pub beta: i64,
    /// Whether every edge lies on two triangles; `χ = 2 − β` is checked
    /// only then.
    pub closed_surface: bool,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.chi == 2 * self.chi_quotient - self.chi_fixed
            && (!self.closed_surface || self.chi == 2 - self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantsReport {
    pub expected: Descriptor,
    pub mesh: Descriptor,
}

impl InvariantsReport {
    pub fn passed(&self) -> bool {
        self.expected == self.mesh
    }
}

pub fn check_quotient_lemma(e: &SurfaceExpr) -> Result<QuotientReport, CheckError> {
    Model::build(e)?.quotient_lemma()
}

pub fn check_forgetful_les(e: &SurfaceExpr, window: &Window) -> Result<LesReport, CheckError> {
    Model::build(e)?.forgetful_les(window)
}

pub fn check_rho_localization(e: &SurfaceExpr, window: &Window) -> Result<RhoReport, CheckError> {
    Model::build(e)?.rho_localization(window)
}

pub fn check_euler(e: &SurfaceExpr) -> Result<EulerReport, CheckError> {
    Ok(Model::build(e)?.euler())
}

pub fn check_invariants(e: &SurfaceExpr) -> Result<InvariantsReport, CheckError> {
    Model::build(e)?.invariants()
}
