//! Finite lattices and the integral (weight-zero Rota-Baxter) operators,
//! derivations and derived semiring structures on them.
//!
//! The crate provides:
//!
//! - construction and validation of finite lattices ([`FiniteLattice`]),
//!   with a catalog of builtins (chains, diamonds, the pentagon, the
//!   8-element nonmodular witness, subset lattices, products, files);
//! - operators on a lattice ([`LatticeMap`]) with the Rota-Baxter,
//!   derivation, meet-translation and related predicates, plus the named
//!   operator families;
//! - exhaustive enumeration of operator classes with an independent
//!   brute-force oracle ([`enumerate`]);
//! - classification up to lattice automorphism ([`classify`]);
//! - Novikov, associative and dendriform semiring tables derived from
//!   operators, with axiom checkers ([`derived`]);
//! - a registry of executable checks ([`checks`]) behind the `latrb` CLI.

pub mod catalog;
pub mod checks;
pub mod classify;
pub mod counts;
pub mod derived;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod lattice;
pub mod ops;

pub use catalog::LatticeSpec;
pub use error::{Error, ParamError, Result};
pub use families::FamilySpec;
pub use lattice::FiniteLattice;
pub use ops::LatticeMap;
