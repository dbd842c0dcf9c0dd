//! Two-dimensional commutative hypercomplex number systems.
//!
//! A system is fixed by six structural constants describing the products of
//! the basis elements `E1`, `E2`:
//!
//! ```text
//! E1·E1 = a11 E1 + b11 E2
//! E1·E2 = a12 E1 + b12 E2 = E2·E1
//! E2·E2 = a22 E1 + b22 E2
//! ```
//!
//! The crate multiplies in such systems, decides whether a constant unit
//! exists, classifies unital systems as complex, dual or double numbers,
//! and builds explicit basis transitions between isomorphic systems.

pub mod classify;
mod element;
mod error;
mod roots;
mod table;
mod tolerance;
pub mod transforms;
mod unit;
pub mod verify;

pub use classify::{classify, discriminant, find_idempotents, find_nilpotents, normal_form, IsoClass, NormalForm};
pub use element::Element;
pub use error::{HnsError, Result};
pub use table::{is_canonical, multiply, StructuralConstants};
pub use tolerance::Tolerance;
pub use transforms::{change_basis, compose_transform, BasisTransform, TransitionChain};
pub use unit::{has_constant_unit, unit_candidate, unit_element, UnitSolution, DEFAULT_PROBES};
pub use verify::{brute_force_units, verify_isomorphism, GridSpec, IsoReport};
