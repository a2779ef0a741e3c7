//! Exact computations for gentle algebras presented by quivers with
//! length-2 monomial relations.
//!
//! The toolkit builds the Cohen-Macaulay Auslander presentation of a
//! gentle algebra, enumerates strings and bands, computes Cartan and
//! Coxeter data exactly over the integers and rationals, handles
//! Fomin-Zelevinsky mutation for cluster-tilted quivers of type A, and
//! counts Ringel-Hall numbers over prime fields.

pub mod cluster;
pub mod cm;
pub mod coxeter;
pub mod error;
pub mod generate;
pub mod hall;
pub mod json;
pub mod linalg;
pub mod quiver;
pub mod reproduce;
pub mod strings;

pub use error::{Error, Result};
pub use quiver::{Composite, GentlePresentation, Path, Quiver, ValidationReport};
