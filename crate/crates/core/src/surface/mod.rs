//! Surfaces with involution built by equivariant surgery.

mod descriptor;
mod enumerate;
mod expr;

pub use descriptor::{
    base_invariants, invariants, underlying_cohomology, validate, Character, Descriptor, FreeType,
    SurfaceCase, SurfaceError, UnderlyingCohomology, UnderlyingSurface, Violation,
};
pub use enumerate::{enumerate_descriptors, enumerate_with_witnesses, SEED_BASES};
pub use expr::{parse, AttachKind, Base, Closed, ParseError, SurfaceExpr};
