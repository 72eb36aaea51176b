//! Operators on a lattice and the predicates that classify them.
//!
//! A [`LatticeMap`] is a total self-map of a lattice's element set, stored as
//! its image array. All predicates are pure table walks; none of them is
//! cached on the map, and every membership test reports a first-failure
//! witness where one is meaningful.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// A total self-map on a lattice's element set.
///
/// Equality, ordering and hashing are entrywise on the image array; callers
/// that mix maps over different lattices get a `MixedLattices` error from the
/// operations that care.
#[derive(Clone)]
pub struct LatticeMap<'a> {
    lattice: &'a FiniteLattice,
    image: Vec<usize>,
}

impl fmt::Debug for LatticeMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("LatticeMap").field(&self.image).finish()
    }
}

impl PartialEq for LatticeMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image
    }
}

impl Eq for LatticeMap<'_> {}

impl PartialOrd for LatticeMap<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LatticeMap<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.image.cmp(&other.image)
    }
}

/// Which Rota-Baxter axiom a pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RbAxiom {
    /// `P(x ∨ y) = P(x) ∨ P(y)` failed.
    JoinLinearity,
    /// `P(x) ∧ P(y) = P(P(x) ∧ y) ∨ P(x ∧ P(y))` failed.
    MeetEquation,
}

impl fmt::Display for RbAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RbAxiom::JoinLinearity => write!(f, "join linearity"),
            RbAxiom::MeetEquation => write!(f, "meet equation"),
        }
    }
}

/// Lexicographically first pair witnessing a Rota-Baxter failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RbFailure {
    pub x: usize,
    pub y: usize,
    pub axiom: RbAxiom,
}

impl<'a> LatticeMap<'a> {
    /// Builds a map from an explicit image array, validating every entry.
    pub fn new(lattice: &'a FiniteLattice, image: Vec<usize>) -> Result<Self> {
        if image.len() != lattice.size() {
            return Err(Error::ImageLengthMismatch {
                expected: lattice.size(),
                got: image.len(),
            });
        }
        for &v in &image {
            lattice.check_index(v)?;
        }
        Ok(LatticeMap { lattice, image })
    }

    /// Internal constructor for images already known to be valid.
    pub(crate) fn from_raw(lattice: &'a FiniteLattice, image: Vec<usize>) -> Self {
        debug_assert_eq!(image.len(), lattice.size());
        LatticeMap { lattice, image }
    }

    pub fn identity(lattice: &'a FiniteLattice) -> Self {
        LatticeMap {
            image: lattice.elements().collect(),
            lattice,
        }
    }

    /// The constant map with value `a`.
    pub fn constant(lattice: &'a FiniteLattice, a: usize) -> Result<Self> {
        lattice.check_index(a)?;
        Ok(LatticeMap {
            lattice,
            image: vec![a; lattice.size()],
        })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    pub fn lattice(&self) -> &'a FiniteLattice {
        self.lattice
    }

    /// Distinct image values, ascending.
    pub fn image_set(&self) -> Vec<usize> {
        let mut set = self.image.clone();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// The set `{x : f(x) = x}`, ascending. For idempotent maps this equals
    /// the image set.
    pub fn fix_points(&self) -> Vec<usize> {
        self.lattice
            .elements()
            .filter(|&x| self.image[x] == x)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &fx)| fx == x)
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.lattice.size()
    }

    pub fn is_surjective(&self) -> bool {
        // For a self-map on a finite set they coincide, but both directions
        // of the contract are exercised independently.
        self.image_set().len() == self.lattice.size()
    }

    /// `x ≤ y ⟹ f(x) ≤ f(y)` over all pairs.
    pub fn is_isotone(&self) -> bool {
        raw_is_isotone(self.lattice, &self.image)
    }

    /// `f(f(x)) = f(x)` for all `x`.
    pub fn is_idempotent(&self) -> bool {
        raw_is_idempotent(&self.image)
    }

    /// `f(x ∨ y) = f(x) ∨ f(y)` over all pairs.
    pub fn is_join_linear(&self) -> bool {
        raw_is_join_linear(self.lattice, &self.image)
    }

    /// `d(x ∧ y) = (d(x) ∧ y) ∨ (x ∧ d(y))` over all pairs.
    pub fn is_derivation(&self) -> bool {
        raw_is_derivation(self.lattice, &self.image)
    }

    /// `d(x ∧ y) = x ∧ d(y)` over all pairs.
    pub fn is_meet_translation(&self) -> bool {
        raw_is_meet_translation(self.lattice, &self.image)
    }

    /// Join linearity together with the derivation law.
    pub fn is_szasz_derivation(&self) -> bool {
        raw_is_join_linear(self.lattice, &self.image)
            && raw_is_derivation(self.lattice, &self.image)
    }

    /// Both Rota-Baxter axioms over all pairs.
    pub fn is_rota_baxter(&self) -> bool {
        raw_is_rota_baxter(self.lattice, &self.image)
    }

    /// Lexicographically first failing pair and the axiom it violates, or
    /// `None` if the map is a Rota-Baxter operator.
    pub fn rota_baxter_failure(&self) -> Option<RbFailure> {
        let l = self.lattice;
        let f = &self.image;
        for x in 0..l.size() {
            for y in 0..l.size() {
                if f[l.join(x, y)] != l.join(f[x], f[y]) {
                    return Some(RbFailure {
                        x,
                        y,
                        axiom: RbAxiom::JoinLinearity,
                    });
                }
                let lhs = l.meet(f[x], f[y]);
                let rhs = l.join(f[l.meet(f[x], y)], f[l.meet(x, f[y])]);
                if lhs != rhs {
                    return Some(RbFailure {
                        x,
                        y,
                        axiom: RbAxiom::MeetEquation,
                    });
                }
            }
        }
        None
    }
}

pub(crate) fn raw_is_isotone(l: &FiniteLattice, f: &[usize]) -> bool {
    for x in 0..l.size() {
        for y in 0..l.size() {
            if l.leq(x, y) && !l.leq(f[x], f[y]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn raw_is_idempotent(f: &[usize]) -> bool {
    f.iter().all(|&v| f[v] == v)
}

pub(crate) fn raw_is_join_linear(l: &FiniteLattice, f: &[usize]) -> bool {
    for x in 0..l.size() {
        for y in 0..l.size() {
            if f[l.join(x, y)] != l.join(f[x], f[y]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn raw_is_derivation(l: &FiniteLattice, f: &[usize]) -> bool {
    for x in 0..l.size() {
        for y in 0..l.size() {
            if f[l.meet(x, y)] != l.join(l.meet(f[x], y), l.meet(x, f[y])) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn raw_is_meet_translation(l: &FiniteLattice, f: &[usize]) -> bool {
    for x in 0..l.size() {
        for y in 0..l.size() {
            if f[l.meet(x, y)] != l.meet(x, f[y]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn raw_is_rota_baxter(l: &FiniteLattice, f: &[usize]) -> bool {
    for x in 0..l.size() {
        for y in 0..l.size() {
            if f[l.join(x, y)] != l.join(f[x], f[y]) {
                return false;
            }
            if l.meet(f[x], f[y]) != l.join(f[l.meet(f[x], y)], f[l.meet(x, f[y])]) {
                return false;
            }
        }
    }
    true
}
