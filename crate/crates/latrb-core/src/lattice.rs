//! Finite lattices with precomputed order and operation tables.
//!
//! Elements are dense indices `0..size`; display labels are optional and
//! carry no semantics. A [`FiniteLattice`] is validated eagerly at
//! construction: the cover relation must be acyclic and every pair of
//! elements must have a unique greatest lower bound and least upper bound.
//! All downstream code may therefore assume it is working with a lattice.

use std::collections::HashSet;

use crate::error::{Error, ParamError, Result};

/// An immutable finite lattice.
///
/// The order matrix and the meet/join tables are built once; every query is
/// a table lookup. Instances are safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<bool>,
    meet_table: Vec<usize>,
    join_table: Vec<usize>,
    bottom: Option<usize>,
    top: Option<usize>,
    labels: Option<Vec<String>>,
    covers: Vec<(usize, usize)>,
}

impl FiniteLattice {
    /// Builds a lattice from a Hasse diagram given as `(lower, upper)` cover
    /// pairs. The stored cover list is normalized to the transitive
    /// reduction of the resulting order.
    pub fn build_from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        Self::build_with_labels(size, covers, None)
    }

    /// Same as [`build_from_covers`](Self::build_from_covers) with optional
    /// display labels, one per element.
    pub fn build_with_labels(
        size: usize,
        covers: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyLattice);
        }
        if let Some(ref ls) = labels {
            if ls.len() != size {
                return Err(Error::BadSpec(format!(
                    "{} labels supplied for {} elements",
                    ls.len(),
                    size
                )));
            }
        }
        let mut seen = HashSet::new();
        for &(lo, hi) in covers {
            for index in [lo, hi] {
                if index >= size {
                    return Err(Error::IndexOutOfRange { index, size });
                }
            }
            if lo == hi {
                return Err(Error::CyclicCovers);
            }
            if !seen.insert((lo, hi)) {
                return Err(Error::DuplicateCover { lo, hi });
            }
        }

        // Strict order: transitive closure of the cover relation.
        let mut lt = vec![false; size * size];
        for &(lo, hi) in covers {
            lt[lo * size + hi] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if lt[i * size + k] {
                    for j in 0..size {
                        if lt[k * size + j] {
                            lt[i * size + j] = true;
                        }
                    }
                }
            }
        }
        for x in 0..size {
            if lt[x * size + x] {
                return Err(Error::CyclicCovers);
            }
        }
        let mut leq = lt.clone();
        for x in 0..size {
            leq[x * size + x] = true;
        }
        let le = |x: usize, y: usize| leq[x * size + y];

        // Every pair must have a unique greatest lower bound and least upper
        // bound; the tables are filled while we verify this.
        let mut meet_table = vec![0usize; size * size];
        let mut join_table = vec![0usize; size * size];
        for x in 0..size {
            for y in 0..size {
                let glb = (0..size).filter(|&z| le(z, x) && le(z, y)).find(|&m| {
                    (0..size)
                        .filter(|&z| le(z, x) && le(z, y))
                        .all(|z| le(z, m))
                });
                let lub = (0..size).filter(|&z| le(x, z) && le(y, z)).find(|&m| {
                    (0..size)
                        .filter(|&z| le(x, z) && le(y, z))
                        .all(|z| le(m, z))
                });
                match (glb, lub) {
                    (Some(m), Some(j)) => {
                        meet_table[x * size + y] = m;
                        join_table[x * size + y] = j;
                    }
                    _ => {
                        return Err(Error::NotALattice {
                            x: x.min(y),
                            y: x.max(y),
                        })
                    }
                }
            }
        }

        // A finite lattice always has a bottom and a top; they are derived,
        // never supplied.
        let bottom = (0..size).find(|&b| (0..size).all(|x| le(b, x)));
        let top = (0..size).find(|&t| (0..size).all(|x| le(x, t)));
        debug_assert!(bottom.is_some() && top.is_some());

        // Transitive reduction of the strict order.
        let mut reduced = Vec::new();
        for x in 0..size {
            for y in 0..size {
                if lt[x * size + y] && !(0..size).any(|z| lt[x * size + z] && lt[z * size + y]) {
                    reduced.push((x, y));
                }
            }
        }
        reduced.sort_unstable();

        Ok(FiniteLattice {
            size,
            leq,
            meet_table,
            join_table,
            bottom,
            top,
            labels,
            covers: reduced,
        })
    }

    /// Componentwise-order product of two lattices. Element `(i, j)` of the
    /// product gets index `i * b.size() + j` (row-major on component
    /// indices) and the label `(la,lb)`.
    pub fn product(a: &FiniteLattice, b: &FiniteLattice) -> Result<Self> {
        let size = a.size * b.size;
        let idx = |i: usize, j: usize| i * b.size + j;
        let mut covers = Vec::new();
        for &(lo, hi) in &a.covers {
            for j in 0..b.size {
                covers.push((idx(lo, j), idx(hi, j)));
            }
        }
        for i in 0..a.size {
            for &(lo, hi) in &b.covers {
                covers.push((idx(i, lo), idx(i, hi)));
            }
        }
        let mut labels = Vec::with_capacity(size);
        for i in 0..a.size {
            for j in 0..b.size {
                labels.push(format!("({},{})", a.label(i), b.label(j)));
            }
        }
        Self::build_with_labels(size, &covers, Some(labels))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.size {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                size: self.size,
            })
        }
    }

    /// `x ≤ y` in the lattice order. Panics on out-of-range indices.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    /// `x < y` (strict).
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Greatest lower bound. Table lookup; panics on out-of-range indices.
    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet_table[x * self.size + y]
    }

    /// Least upper bound. Table lookup; panics on out-of-range indices.
    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join_table[x * self.size + y]
    }

    /// Checked variant of [`meet`](Self::meet) for untrusted indices.
    pub fn try_meet(&self, x: usize, y: usize) -> Result<usize> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.meet(x, y))
    }

    /// Checked variant of [`join`](Self::join) for untrusted indices.
    pub fn try_join(&self, x: usize, y: usize) -> Result<usize> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.join(x, y))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(ls) => ls[x].clone(),
            None => x.to_string(),
        }
    }

    /// Hasse diagram edges `(lower, upper)`, sorted; always the transitive
    /// reduction of the order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, hi)| hi == x)
            .map(|&(lo, _)| lo)
            .collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(lo, _)| lo == x)
            .map(|&(_, hi)| hi)
            .collect()
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        match self.bottom {
            Some(b) => self.upper_covers(b),
            None => Vec::new(),
        }
    }

    pub fn is_atom(&self, x: usize) -> bool {
        self.atoms().contains(&x)
    }

    /// All `z` with `z ≤ x`, ascending.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&z| self.leq(z, x)).collect()
    }

    /// All `z` with `x ≤ z`, ascending.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&z| self.leq(x, z)).collect()
    }

    /// Structural equality ignoring labels: same size and same order matrix.
    pub fn same_structure(&self, other: &FiniteLattice) -> bool {
        self.size == other.size && self.leq == other.leq
    }

    /// Every pair of elements is comparable.
    pub fn is_chain(&self) -> bool {
        for x in 0..self.size {
            for y in 0..x {
                if !self.comparable(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// `(x ∨ y) ∧ z = (x ∧ z) ∨ (y ∧ z)` for all triples.
    pub fn is_distributive(&self) -> bool {
        for x in 0..self.size {
            for y in 0..self.size {
                for z in 0..self.size {
                    if self.meet(self.join(x, y), z) != self.join(self.meet(x, z), self.meet(y, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `x ≤ y ⟹ x ∨ (y ∧ z) = y ∧ (x ∨ z)` for all triples.
    pub fn is_modular(&self) -> bool {
        for x in 0..self.size {
            for y in 0..self.size {
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..self.size {
                    if self.join(x, self.meet(y, z)) != self.meet(y, self.join(x, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First triple `(x, y, a)` in lexicographic order violating
    /// `(x∨a) ∧ (y∨a) = ((x∨a)∧y) ∨ (x∧(y∨a)) ∨ a`, or `None` if the
    /// identity holds throughout.
    pub fn weak_modular_counterexample(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.size {
            for y in 0..self.size {
                for a in 0..self.size {
                    let xa = self.join(x, a);
                    let ya = self.join(y, a);
                    let lhs = self.meet(xa, ya);
                    let rhs = self.join(self.join(self.meet(xa, y), self.meet(x, ya)), a);
                    if lhs != rhs {
                        return Some((x, y, a));
                    }
                }
            }
        }
        None
    }

    /// Whether the weak modular identity holds for all triples.
    pub fn weak_modular_identity(&self) -> bool {
        self.weak_modular_counterexample().is_none()
    }

    /// True iff every `z ≤ a` is comparable with `b`. Requires `b < a`.
    pub fn comparability_below(&self, a: usize, b: usize) -> Result<bool> {
        self.check_index(a)?;
        self.check_index(b)?;
        if !self.lt(b, a) {
            return Err(Error::BadParams(ParamError::OrderViolation {
                lower: b,
                upper: a,
                relation: "<",
            }));
        }
        Ok((0..self.size)
            .filter(|&z| self.leq(z, a))
            .all(|z| self.comparable(z, b)))
    }

    /// All lattice automorphisms as permutation words, sorted
    /// lexicographically. Always contains the identity.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut perm = vec![0usize; self.size];
        let mut used = vec![false; self.size];
        self.automorphism_search(0, &mut perm, &mut used, &mut out);
        out.sort_unstable();
        out
    }

    fn automorphism_search(
        &self,
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == self.size {
            out.push(perm.clone());
            return;
        }
        'candidate: for c in 0..self.size {
            if used[c] {
                continue;
            }
            // An order-isomorphism in both directions on the assigned prefix.
            for (j, &pj) in perm.iter().enumerate().take(i) {
                if self.leq(j, i) != self.leq(pj, c) || self.leq(i, j) != self.leq(c, pj) {
                    continue 'candidate;
                }
            }
            perm[i] = c;
            used[c] = true;
            self.automorphism_search(i + 1, perm, used, out);
            used[c] = false;
        }
    }
}

/// Searches for an injective map `h` from `pattern` into `host` with
/// `h(x ∨ y) = h(x) ∨ h(y)` and `h(x ∧ y) = h(x) ∧ h(y)` for all pairs.
///
/// Backtracking over partial injections, pruning on order and meet/join
/// consistency; returns the lexicographically first witness (as a map from
/// pattern indices to host indices) or `None` if no embedding exists.
pub fn sublattice_embedding(pattern: &FiniteLattice, host: &FiniteLattice) -> Option<Vec<usize>> {
    if pattern.size() > host.size() {
        return None;
    }
    let mut map = vec![0usize; pattern.size()];
    let mut used = vec![false; host.size()];
    if embed_search(pattern, host, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn embed_search(
    pattern: &FiniteLattice,
    host: &FiniteLattice,
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if i == pattern.size() {
        return embedding_preserves_ops(pattern, host, map);
    }
    'candidate: for c in 0..host.size() {
        if used[c] {
            continue;
        }
        for (j, &mj) in map.iter().enumerate().take(i) {
            if pattern.leq(j, i) != host.leq(mj, c) || pattern.leq(i, j) != host.leq(c, mj) {
                continue 'candidate;
            }
        }
        // Meet/join consistency on every pair whose bound is already placed.
        let value = |e: usize, c: usize, map: &[usize]| if e == i { c } else { map[e] };
        for x in 0..=i {
            for y in x..=i {
                let hx = value(x, c, map);
                let hy = value(y, c, map);
                let m = pattern.meet(x, y);
                if m <= i && host.meet(hx, hy) != value(m, c, map) {
                    continue 'candidate;
                }
                let j = pattern.join(x, y);
                if j <= i && host.join(hx, hy) != value(j, c, map) {
                    continue 'candidate;
                }
            }
        }
        map[i] = c;
        used[c] = true;
        if embed_search(pattern, host, i + 1, map, used) {
            used[c] = false;
            return true;
        }
        used[c] = false;
    }
    false
}

/// Re-checks meet/join preservation of a candidate embedding directly.
pub fn embedding_preserves_ops(
    pattern: &FiniteLattice,
    host: &FiniteLattice,
    map: &[usize],
) -> bool {
    for x in 0..pattern.size() {
        for y in 0..pattern.size() {
            if map[pattern.meet(x, y)] != host.meet(map[x], map[y])
                || map[pattern.join(x, y)] != host.join(map[x], map[y])
            {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::LatticeSpec;

    fn n8() -> FiniteLattice {
        LatticeSpec::N8.build().unwrap()
    }

    fn diamond(n: usize) -> FiniteLattice {
        LatticeSpec::M(n).build().unwrap()
    }

    fn chain(n: usize) -> FiniteLattice {
        LatticeSpec::Chain(n).build().unwrap()
    }

    #[test]
    fn two_chain_from_covers() {
        let l = FiniteLattice::build_from_covers(2, &[(0, 1)]).unwrap();
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.bottom(), Some(0));
        assert_eq!(l.top(), Some(1));
    }

    #[test]
    fn n8_meets_and_joins() {
        // Elements: 0, a, b, c, u, v, w, 1 = indices 0..=7.
        let l = n8();
        assert_eq!(l.join(1, 2), 4); // a ∨ b = u
        assert_eq!(l.join(3, 2), 6); // c ∨ b = w
        assert_eq!(l.meet(l.join(1, 2), l.join(3, 2)), 5); // (a∨b) ∧ (c∨b) = v
    }

    #[test]
    fn fork_is_not_a_lattice() {
        let err = FiniteLattice::build_from_covers(3, &[(0, 1), (0, 2)]).unwrap_err();
        assert_eq!(err, Error::NotALattice { x: 1, y: 2 });
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            FiniteLattice::build_from_covers(2, &[(0, 1), (0, 1)]).unwrap_err(),
            Error::DuplicateCover { lo: 0, hi: 1 }
        );
        assert_eq!(
            FiniteLattice::build_from_covers(2, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::CyclicCovers
        );
        assert_eq!(
            FiniteLattice::build_from_covers(2, &[(0, 2)]).unwrap_err(),
            Error::IndexOutOfRange { index: 2, size: 2 }
        );
        assert_eq!(
            FiniteLattice::build_from_covers(0, &[]).unwrap_err(),
            Error::EmptyLattice
        );
        assert_eq!(
            FiniteLattice::build_from_covers(1, &[(0, 0)]).unwrap_err(),
            Error::CyclicCovers
        );
    }

    #[test]
    fn diamond_meets() {
        let l = diamond(5);
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 4);
        let c = chain(4);
        assert_eq!(c.meet(1, 3), 1);
        assert_eq!(c.join(1, 3), 3);
    }

    #[test]
    fn checked_lookups_reject_bad_indices() {
        let l = diamond(5);
        assert_eq!(l.try_meet(1, 2), Ok(0));
        assert_eq!(l.try_join(1, 2), Ok(4));
        assert_eq!(
            l.try_meet(1, 5),
            Err(Error::IndexOutOfRange { index: 5, size: 5 })
        );
        assert_eq!(
            l.try_join(7, 0),
            Err(Error::IndexOutOfRange { index: 7, size: 5 })
        );
    }

    #[test]
    fn lattice_law_triple_loops() {
        for spec in ["chain:5", "m:5", "n5", "n8", "bool:3"] {
            let l = LatticeSpec::parse(spec).unwrap().build().unwrap();
            let n = l.size();
            for x in 0..n {
                assert_eq!(l.meet(x, x), x);
                assert_eq!(l.join(x, x), x);
                for y in 0..n {
                    assert_eq!(l.meet(x, y), l.meet(y, x));
                    assert_eq!(l.join(x, y), l.join(y, x));
                    assert_eq!(l.meet(x, l.join(x, y)), x);
                    assert_eq!(l.join(x, l.meet(x, y)), x);
                    for z in 0..n {
                        assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
                        assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn property_predicates() {
        for n in 1..=6 {
            let l = chain(n);
            assert!(l.is_chain() && l.is_distributive() && l.is_modular());
        }
        let m5 = diamond(5);
        assert!(m5.is_modular() && !m5.is_distributive() && !m5.is_chain());
        // Direct witness: (b1 ∨ b2) ∧ b3 = b3 but (b1 ∧ b3) ∨ (b2 ∧ b3) = 0.
        assert_eq!(m5.meet(m5.join(1, 2), 3), 3);
        assert_eq!(m5.join(m5.meet(1, 3), m5.meet(2, 3)), 0);
        assert!(!n8().is_modular());
        let n5 = LatticeSpec::N5.build().unwrap();
        assert!(!n5.is_modular() && !n5.is_distributive());
        // Distributive implies modular on the whole catalog.
        for spec in crate::catalog::default_catalog() {
            let l = spec.build().unwrap();
            if l.is_distributive() {
                assert!(l.is_modular(), "{spec}");
            }
        }
    }

    #[test]
    fn weak_modular_identity_examples() {
        assert!(diamond(5).weak_modular_identity());
        assert!(chain(4).weak_modular_identity());
        // The n8 witness triple is (a, c, b) in its element order.
        assert_eq!(n8().weak_modular_counterexample(), Some((1, 3, 2)));
        // The pentagon is nonmodular yet satisfies the identity.
        assert!(LatticeSpec::N5.build().unwrap().weak_modular_identity());
    }

    #[test]
    fn comparability_below_examples() {
        let c5 = chain(5);
        assert!(c5.comparability_below(3, 1).unwrap());
        let m5 = diamond(5);
        assert!(!m5.comparability_below(4, 1).unwrap());
        assert!(m5.comparability_below(1, 0).unwrap());
        assert!(matches!(
            m5.comparability_below(1, 2),
            Err(Error::BadParams(ParamError::OrderViolation { .. }))
        ));
    }

    #[test]
    fn covers_are_the_transitive_reduction() {
        // A redundant edge is normalized away.
        let l = FiniteLattice::build_from_covers(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(l.covers(), &[(0, 1), (1, 2)]);
        for spec in crate::catalog::default_catalog() {
            let l = spec.build().unwrap();
            let mut reduction = Vec::new();
            for x in l.elements() {
                for y in l.elements() {
                    if l.lt(x, y) && !l.elements().any(|z| l.lt(x, z) && l.lt(z, y)) {
                        reduction.push((x, y));
                    }
                }
            }
            reduction.sort_unstable();
            assert_eq!(l.covers(), reduction.as_slice(), "{spec}");
        }
    }

    #[test]
    fn automorphism_counts() {
        for n in 1..=5 {
            assert_eq!(chain(n).automorphisms().len(), 1);
        }
        assert_eq!(diamond(5).automorphisms().len(), 6);
        assert_eq!(
            LatticeSpec::Bool(2).build().unwrap().automorphisms().len(),
            2
        );
        assert_eq!(n8().automorphisms().len(), 2);
    }

    #[test]
    fn automorphisms_by_permutation_brute_force() {
        // Independent oracle: try all size! permutations on small lattices.
        fn all_perms(n: usize) -> Vec<Vec<usize>> {
            if n == 1 {
                return vec![vec![0]];
            }
            let mut out = Vec::new();
            for p in all_perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        for spec in ["m:5", "bool:2", "n5", "chain:4"] {
            let l = LatticeSpec::parse(spec).unwrap().build().unwrap();
            let mut expected: Vec<Vec<usize>> = all_perms(l.size())
                .into_iter()
                .filter(|p| {
                    l.elements().all(|x| {
                        l.elements().all(|y| {
                            p[l.meet(x, y)] == l.meet(p[x], p[y])
                                && p[l.join(x, y)] == l.join(p[x], p[y])
                        })
                    })
                })
                .collect();
            expected.sort_unstable();
            assert_eq!(l.automorphisms(), expected, "{spec}");
        }
    }

    #[test]
    fn automorphisms_form_a_group() {
        for spec in ["m:5", "bool:2", "n8", "prod(chain:2,chain:3)"] {
            let l = LatticeSpec::parse(spec).unwrap().build().unwrap();
            let autos = l.automorphisms();
            assert!(
                autos.contains(&l.elements().collect::<Vec<_>>()),
                "{spec}: identity"
            );
            for f in &autos {
                let mut inverse = vec![0usize; l.size()];
                for x in l.elements() {
                    inverse[f[x]] = x;
                }
                assert!(autos.contains(&inverse), "{spec}: inverses");
                for g in &autos {
                    let composed: Vec<usize> = l.elements().map(|x| f[g[x]]).collect();
                    assert!(autos.contains(&composed), "{spec}: closure");
                }
            }
        }
    }

    #[test]
    fn embedding_examples() {
        let pattern = n8();
        let identity: Vec<usize> = (0..8).collect();
        assert_eq!(sublattice_embedding(&pattern, &pattern), Some(identity));
        assert_eq!(sublattice_embedding(&pattern, &chain(8)), None);
        assert_eq!(sublattice_embedding(&pattern, &diamond(6)), None);
        // Found embeddings survive the direct re-check.
        let two = chain(2);
        let h = sublattice_embedding(&two, &diamond(5)).unwrap();
        assert!(embedding_preserves_ops(&two, &diamond(5), &h));
    }

    #[test]
    fn product_is_row_major() {
        let a = chain(2);
        let b = chain(3);
        let p = FiniteLattice::product(&a, &b).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(p.label(0), "(0,0)");
        assert_eq!(p.label(5), "(1,2)");
        // (1,0) ∨ (0,2) = (1,2): indices 3 ∨ 2 = 5.
        assert_eq!(p.join(3, 2), 5);
        assert!(p.is_distributive());
    }

    #[test]
    fn bool2_is_isomorphic_to_m4() {
        // Brute-force isomorphism search between the two constructions.
        let b = LatticeSpec::Bool(2).build().unwrap();
        let m = diamond(4);
        let found = sublattice_embedding(&b, &m).expect("an embedding between equal sizes");
        assert!(embedding_preserves_ops(&b, &m, &found));
        assert_eq!(found.len(), m.size());
    }

    #[test]
    fn labels_must_match_size() {
        assert!(matches!(
            FiniteLattice::build_with_labels(2, &[(0, 1)], Some(vec!["x".into()])),
            Err(Error::BadSpec(_))
        ));
    }
}
