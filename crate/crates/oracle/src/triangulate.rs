//! Meshes for surface expressions.

use crate::complex::EquivariantComplex;
use crate::mesh::{self, Antitube, Mesh, MeshError};
use eqsurf_core::surface::{AttachKind, Base, Closed, SurfaceExpr};

pub fn base_mesh(b: Base) -> Mesh {
    match b {
        Base::S2a => mesh::sphere_antipodal(),
        Base::S21 => mesh::sphere_reflection(),
        Base::S22 => mesh::sphere_half_turn(),
        Base::T1rot => mesh::torus_rotation(),
        Base::T1anti => mesh::torus_glide(),
        Base::X(k) => mesh::xk(k),
    }
}

/// Simplicial model of `e`, before regularization.
pub fn build_mesh(e: &SurfaceExpr) -> Result<Mesh, MeshError> {
    match e {
        SurfaceExpr::Base(b) => Ok(base_mesh(*b)),
        SurfaceExpr::ConnSum2(inner, y) => {
            let (piece, times) = match y {
                Closed::T(g) => (mesh::torus7(), *g),
                Closed::N(r) => (mesh::projective_plane6(), *r),
            };
            let mut m = build_mesh(inner)?;
            for _ in 0..times {
                m = m.conn_sum2(&piece)?;
            }
            Ok(m)
        }
        SurfaceExpr::Attach(inner, n, kind) => {
            let mut m = build_mesh(inner)?;
            for _ in 0..*n {
                m = match kind {
                    AttachKind::S10At => m.antitube(Antitube::Reflection)?,
                    AttachKind::S11At => m.antitube(Antitube::HalfTurn)?,
                    AttachKind::Fm => m.fm()?,
                };
            }
            Ok(m)
        }
    }
}

/// Regular equivariant Δ-complex realizing `e`.
pub fn triangulate(e: &SurfaceExpr) -> Result<EquivariantComplex, MeshError> {
    Ok(build_mesh(e)?.regularize())
}
