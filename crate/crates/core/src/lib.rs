//! Fox colorings of classical and virtual tangle diagrams.
//!
//! An m-string tangle diagram carries ring elements on its arcs subject to
//! the relation x + z = 2y at each classical crossing; the 2m endpoint
//! colors form the boundary color vector. This crate decides which boundary
//! vectors are realizable over Z and Z/pZ (p odd, possibly composite),
//! constructs explicit witness diagrams, and exposes the braid-group
//! machinery on integer vectors that the constructions run on.
//!
//! All arithmetic is exact: vector entries and colorings are arbitrary
//! precision integers, and all witness words and compiled diagrams are
//! mechanically re-checked before they are returned.

pub mod error;
pub mod hurwitz;
pub mod ring;
pub mod vectors;

pub use error::{Error, Result};
pub use ring::RingSpec;
pub use vectors::{AssociatedDecomposition, BoundaryVector, InvariantReport};
