//! RO(C₂)-graded Bredon cohomology of surfaces with involution.
//!
//! Layers, bottom up:
//! - exact integer algebra: [`exact`], [`snf`], [`group`];
//! - the bigraded catalog: [`grading`], [`module`], [`decomposition`], [`chart`];
//! - surfaces and their cohomology: [`surface`], [`engine`], [`checks`].

pub mod chart;
pub mod checks;
pub mod decomposition;
pub mod engine;
pub mod exact;
pub mod grading;
pub mod group;
pub mod module;
pub mod snf;
pub mod surface;

pub use decomposition::{Decomposition, Graded, Summand};
pub use grading::{Bidegree, Window};
pub use group::{FinAbGroup, GroupHom, HomSignature};
pub use module::{ModuleTag, StandardModule};
