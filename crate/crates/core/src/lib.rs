//! Combinatorial models of homotopy links in stratified simplicial complexes.
//!
//! The crate is organised bottom-up: [`poset`] and [`flags`] describe the
//! stratification target, [`complex`] and [`cells`] the stratified spaces,
//! [`neighborhoods`] the link and neighborhood models, [`homology`] the exact
//! homology engine and [`geometry`] the rational coordinate calculus on a
//! single stratified simplex. [`verify`] ties these together.

pub mod cells;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod flags;
pub mod format;
pub mod geometry;
pub mod homology;
pub mod neighborhoods;
pub mod poset;
pub mod verify;

pub use cells::{CellSpec, DeltaComplex};
pub use complex::{glue, Gluing, Simplex, StratComplex, Subcomplex, Subdivision};
pub use error::{Error, Result};
pub use flags::{Flag, RegularFlag, Restriction};
pub use poset::{Label, Poset};
