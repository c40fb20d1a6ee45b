//! Triangulated models of surfaces with involution and exact integral
//! cohomology, used as ground truth for the closed-form engine.

pub mod checks;
pub mod complex;
pub mod dump;
pub mod invariants;
pub mod mesh;
pub mod triangulate;

pub use checks::{CheckError, Model, CORPUS};
pub use complex::{CohomologyTable, ComplexError, DeltaComplex, EquivariantComplex};
pub use invariants::{fixed_components, mesh_invariants, FixedComponent};
pub use mesh::{Mesh, MeshError};
pub use triangulate::triangulate;
