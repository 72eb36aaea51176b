//! Classification of operators up to lattice automorphism.
//!
//! Two operators `P`, `P'` on the same lattice are isomorphic when some
//! automorphism `f` satisfies `f ∘ P = P' ∘ f`; orbits are computed by
//! conjugating with each automorphism explicitly. The automorphism groups at
//! desk scale are tiny, so no canonical-form machinery is needed.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::counts;
use crate::enumerate::{enumerate, Limits, Predicate};
use crate::error::{Error, Result};
use crate::families::{make_family, FamilySpec};
use crate::lattice::FiniteLattice;
use crate::ops::LatticeMap;

/// One orbit: its lexicographically minimal member and the orbit size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub representative: Vec<usize>,
    pub orbit_size: usize,
}

/// A partition of an operator list into orbits under the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClassification {
    /// Orbits sorted by representative.
    pub classes: Vec<IsoClass>,
    /// Number of operators classified.
    pub total: usize,
    pub class_count: usize,
}

/// The classification fragment of the enumeration JSON document.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationJson {
    pub class_count: usize,
    pub classes: Vec<IsoClass>,
}

impl IsoClassification {
    pub fn to_json(&self) -> ClassificationJson {
        ClassificationJson {
            class_count: self.class_count,
            classes: self.classes.clone(),
        }
    }
}

/// The conjugate `f ∘ P ∘ f⁻¹` of an image array by a permutation.
pub fn conjugate_image(f: &[usize], p: &[usize]) -> Vec<usize> {
    let mut q = vec![0usize; p.len()];
    for x in 0..p.len() {
        q[f[x]] = f[p[x]];
    }
    q
}

/// Partitions `ops` (distinct maps over `l`) into isomorphism classes.
pub fn classify(l: &FiniteLattice, ops: &[LatticeMap]) -> Result<IsoClassification> {
    for op in ops {
        if !std::ptr::eq(op.lattice(), l) && !op.lattice().same_structure(l) {
            return Err(Error::MixedLattices);
        }
        if op.image().len() != l.size() {
            return Err(Error::MixedLattices);
        }
    }
    let autos = l.automorphisms();
    let index: HashMap<&[usize], usize> = ops
        .iter()
        .enumerate()
        .map(|(i, op)| (op.image(), i))
        .collect();
    let mut claimed = vec![false; ops.len()];
    let mut classes = Vec::new();
    for (i, op) in ops.iter().enumerate() {
        if claimed[i] {
            continue;
        }
        // Conjugating by the whole group yields the whole orbit in one pass.
        let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &autos {
            let q = conjugate_image(f, op.image());
            if let Some(&j) = index.get(q.as_slice()) {
                claimed[j] = true;
                orbit.insert(q);
            }
        }
        let representative = orbit
            .iter()
            .next()
            .cloned()
            .expect("the identity automorphism keeps the operator in its own orbit");
        classes.push(IsoClass {
            representative,
            orbit_size: orbit.len(),
        });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(IsoClassification {
        class_count: classes.len(),
        total: ops.len(),
        classes,
    })
}

/// True iff the orbit of `p` under automorphism conjugation is `{p}`.
pub fn rigidity_check(l: &FiniteLattice, p: &LatticeMap) -> bool {
    l.automorphisms()
        .iter()
        .all(|f| conjugate_image(f, p.image()) == *p.image())
}

/// Orbit size of a single operator under the full automorphism group.
pub fn orbit_size(l: &FiniteLattice, p: &LatticeMap) -> usize {
    let orbit: BTreeSet<Vec<usize>> = l
        .automorphisms()
        .iter()
        .map(|f| conjugate_image(f, p.image()))
        .collect();
    orbit.len()
}

/// Per-case census of the Rota-Baxter operators on the diamond lattice,
/// bucketed by the shape of the fix-point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondCensus {
    pub n: usize,
    pub total: usize,
    /// One-point fix set: constants.
    pub constants: usize,
    /// Fix set `{bottom, top}`: step operators sending a down-set to bottom.
    pub fix_bottom_top: usize,
    /// Fix set `{middle, top}`: join-with-a-middle operators.
    pub fix_middle_top: usize,
    /// Fix set `{bottom, middle}`: inner derivations (possible only for
    /// diamonds with at most two middles).
    pub fix_bottom_middle: usize,
    /// Fix set `{bottom, middle, top}`: atom-pinning operators.
    pub fix_bottom_middle_top: usize,
    /// Bottom, top and at least two (not all) middles fixed; every non-fixed
    /// middle maps to the top.
    pub fix_large: usize,
    pub identity: usize,
    /// Operators that failed the shape dictated by their fix set.
    pub violations: Vec<String>,
}

impl DiamondCensus {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// All two-point fix-set shapes combined.
    pub fn two_fixpoint_total(&self) -> usize {
        self.fix_bottom_top + self.fix_middle_top + self.fix_bottom_middle
    }

    pub fn bucket_sum(&self) -> usize {
        self.constants
            + self.two_fixpoint_total()
            + self.fix_bottom_middle_top
            + self.fix_large
            + self.identity
    }

    /// Compares the census against the closed-form case counts.
    pub fn matches_expected(&self) -> bool {
        let expected = counts::diamond_case_counts(self.n);
        self.constants as u64 == expected.constants
            && self.two_fixpoint_total() as u64 == expected.two_fixpoint
            && self.fix_bottom_middle_top as u64 == expected.three_fixpoint
            && self.fix_large as u64 == expected.large_fix
            && self.identity as u64 == expected.identity
            && self.total as u64 == expected.total()
    }
}

/// Enumerates the Rota-Baxter operators on the diamond lattice with `n`
/// elements and buckets each one by its fix-point set, verifying that the
/// operator has the unique form its bucket dictates.
pub fn diamond_structure_report(n: usize, limits: &Limits) -> Result<DiamondCensus> {
    if n < 3 {
        return Err(Error::BadSpec(format!("m:{n} requires n >= 3")));
    }
    let l = crate::catalog::LatticeSpec::M(n).build()?;
    let ops = enumerate(&l, Predicate::Rbo, limits)?;
    let bottom = l.bottom().expect("bounded");
    let top = l.top().expect("bounded");

    let mut constants = 0;
    let mut fix_bottom_top = 0;
    let mut fix_middle_top = 0;
    let mut fix_bottom_middle = 0;
    let mut fix_bottom_middle_top = 0;
    let mut fix_large = 0;
    let mut identity = 0;
    let mut violations: Vec<String> = Vec::new();

    for p in &ops {
        let fix = p.fix_points();
        let has_bottom = fix.contains(&bottom);
        let has_top = fix.contains(&top);
        let middles: Vec<usize> = fix
            .iter()
            .copied()
            .filter(|&x| x != bottom && x != top)
            .collect();
        let mut violation = |msg: &str| violations.push(format!("{:?}: {msg}", p.image()));

        if fix.len() == l.size() {
            identity += 1;
            if !p.is_identity() {
                violation("full fix set but not the identity");
            }
        } else if fix.len() == 1 {
            constants += 1;
            let c = LatticeMap::constant(&l, fix[0]).expect("valid element");
            if p.image() != c.image() {
                violation("one-point fix set but not constant");
            }
        } else if has_bottom && has_top && middles.is_empty() {
            fix_bottom_top += 1;
            let matches_step = l.elements().filter(|&a| a != top).any(|a| {
                make_family(&l, &FamilySpec::Step { a, b: bottom })
                    .map(|m| m.image() == p.image())
                    .unwrap_or(false)
            });
            if !matches_step {
                violation("fix {bottom, top} but not a bottom-step operator");
            }
        } else if !has_bottom && has_top && middles.len() == 1 {
            fix_middle_top += 1;
            let psi = make_family(&l, &FamilySpec::Psi { a: middles[0] }).expect("valid");
            if p.image() != psi.image() {
                violation("fix {middle, top} but not join-with-middle");
            }
        } else if has_bottom && !has_top && middles.len() == 1 {
            fix_bottom_middle += 1;
            let inner = make_family(&l, &FamilySpec::Inner { u: middles[0] }).expect("valid");
            if p.image() != inner.image() {
                violation("fix {bottom, middle} but not an inner derivation");
            }
            if n >= 5 {
                violation("fix {bottom, middle} operator must not exist for n >= 5");
            }
        } else if has_bottom && has_top && middles.len() == 1 {
            fix_bottom_middle_top += 1;
            let pinned = make_family(&l, &FamilySpec::PAtom { a: middles[0] }).expect("atom");
            if p.image() != pinned.image() {
                violation("fix {bottom, middle, top} but not atom-pinning");
            }
        } else if has_bottom && has_top && middles.len() >= 2 {
            fix_large += 1;
            let sends_rest_to_top = l.elements().all(|x| fix.contains(&x) || p.apply(x) == top);
            if !sends_rest_to_top {
                violation("large fix set but a non-fixed element avoids the top");
            }
        } else {
            violation(&format!("unexpected fix-set shape {fix:?}"));
        }
    }

    let mut census = DiamondCensus {
        n,
        total: ops.len(),
        constants,
        fix_bottom_top,
        fix_middle_top,
        fix_bottom_middle,
        fix_bottom_middle_top,
        fix_large,
        identity,
        violations,
    };
    if census.bucket_sum() != census.total {
        census
            .violations
            .push("bucket counts do not sum to the operator total".into());
    }
    Ok(census)
}
