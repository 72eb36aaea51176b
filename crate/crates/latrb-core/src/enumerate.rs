//! Exhaustive operator enumeration.
//!
//! Rota-Baxter operators are isotone and idempotent, so the `rbo`, `ido` and
//! `ieo` predicates are enumerated by backtracking over isotone maps only:
//! elements are assigned along a fixed linear extension, and the candidate
//! set for `f(x)` is the up-set of the join of the images of `x`'s lower
//! covers. Derivations need not be isotone, so `do`, `szasz`,
//! `meet-translation` and `all` scan the full map space.
//!
//! [`brute_force_oracle`] is deliberately kept independent of this machinery:
//! it walks all `size^size` maps and evaluates the defining axioms inline,
//! with no pruning, so its output can serve as ground truth for
//! [`enumerate`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::ops::{self, LatticeMap};

/// The operator classes the enumerators understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    /// Rota-Baxter operators.
    Rbo,
    /// Derivations (differential operators).
    Derivation,
    /// Isotone derivations.
    IsotoneDerivation,
    /// Isotone idempotent operators.
    IsotoneIdempotent,
    /// Maps satisfying both join linearity and the derivation law.
    Szasz,
    /// Meet-translations.
    MeetTranslation,
    /// Every map.
    All,
}

impl Predicate {
    pub const ALL_PREDICATES: [Predicate; 7] = [
        Predicate::Rbo,
        Predicate::Derivation,
        Predicate::IsotoneDerivation,
        Predicate::IsotoneIdempotent,
        Predicate::Szasz,
        Predicate::MeetTranslation,
        Predicate::All,
    ];

    /// Whether enumeration may restrict the search to isotone maps.
    pub fn isotone_backed(self) -> bool {
        matches!(
            self,
            Predicate::Rbo | Predicate::IsotoneDerivation | Predicate::IsotoneIdempotent
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::Rbo => "rbo",
            Predicate::Derivation => "do",
            Predicate::IsotoneDerivation => "ido",
            Predicate::IsotoneIdempotent => "ieo",
            Predicate::Szasz => "szasz",
            Predicate::MeetTranslation => "meet-translation",
            Predicate::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "rbo" => Ok(Predicate::Rbo),
            "do" => Ok(Predicate::Derivation),
            "ido" => Ok(Predicate::IsotoneDerivation),
            "ieo" => Ok(Predicate::IsotoneIdempotent),
            "szasz" => Ok(Predicate::Szasz),
            "meet-translation" => Ok(Predicate::MeetTranslation),
            "all" => Ok(Predicate::All),
            _ => Err(Error::BadSpec(format!("unknown predicate `{s}`"))),
        }
    }
}

impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Size limits for the two enumeration strategies. Exceeding a limit is an
/// error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum lattice size for isotone-backed enumeration.
    pub isotone: usize,
    /// Maximum lattice size for full map-space scans.
    pub full_scan: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            isotone: 12,
            full_scan: 7,
        }
    }
}

/// A linear extension of the lattice order: Kahn's algorithm over the cover
/// relation, always taking the smallest available index.
pub fn linear_extension(l: &FiniteLattice) -> Vec<usize> {
    let n = l.size();
    let mut indegree = vec![0usize; n];
    for &(_, hi) in l.covers() {
        indegree[hi] += 1;
    }
    let mut ready: std::collections::BTreeSet<usize> =
        (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&x) = ready.iter().next() {
        ready.remove(&x);
        order.push(x);
        for &(lo, hi) in l.covers() {
            if lo == x {
                indegree[hi] -= 1;
                if indegree[hi] == 0 {
                    ready.insert(hi);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    order
}

/// Calls `visit` once for every isotone self-map of `l`.
fn for_each_isotone<F: FnMut(&[usize])>(l: &FiniteLattice, visit: &mut F) {
    let n = l.size();
    let order = linear_extension(l);
    let lower_covers: Vec<Vec<usize>> = (0..n).map(|x| l.lower_covers(x)).collect();
    let mut image = vec![0usize; n];

    fn descend<F: FnMut(&[usize])>(
        l: &FiniteLattice,
        order: &[usize],
        lower_covers: &[Vec<usize>],
        depth: usize,
        image: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if depth == order.len() {
            visit(image);
            return;
        }
        let x = order[depth];
        // Lower covers of x precede it in the extension, so their images are
        // already fixed; f(x) must dominate their join.
        let floor = lower_covers[x]
            .iter()
            .fold(None, |acc: Option<usize>, &y| match acc {
                None => Some(image[y]),
                Some(v) => Some(l.join(v, image[y])),
            });
        match floor {
            None => {
                for c in 0..l.size() {
                    image[x] = c;
                    descend(l, order, lower_covers, depth + 1, image, visit);
                }
            }
            Some(b) => {
                for c in 0..l.size() {
                    if l.leq(b, c) {
                        image[x] = c;
                        descend(l, order, lower_covers, depth + 1, image, visit);
                    }
                }
            }
        }
    }

    descend(l, &order, &lower_covers, 0, &mut image, visit);
}

/// Calls `visit` once for every self-map of an `n`-element set, in
/// lexicographic order of the image array.
fn for_each_map<F: FnMut(&[usize])>(n: usize, visit: &mut F) {
    let mut image = vec![0usize; n];
    loop {
        visit(&image);
        let mut pos = n - 1;
        loop {
            image[pos] += 1;
            if image[pos] < n {
                break;
            }
            image[pos] = 0;
            if pos == 0 {
                return;
            }
            pos -= 1;
        }
    }
}

fn predicate_holds(l: &FiniteLattice, f: &[usize], pred: Predicate) -> bool {
    match pred {
        Predicate::Rbo => ops::raw_is_rota_baxter(l, f),
        Predicate::Derivation => ops::raw_is_derivation(l, f),
        Predicate::IsotoneDerivation => ops::raw_is_isotone(l, f) && ops::raw_is_derivation(l, f),
        Predicate::IsotoneIdempotent => ops::raw_is_isotone(l, f) && ops::raw_is_idempotent(f),
        Predicate::Szasz => ops::raw_is_join_linear(l, f) && ops::raw_is_derivation(l, f),
        Predicate::MeetTranslation => ops::raw_is_meet_translation(l, f),
        Predicate::All => true,
    }
}

/// Enumerates all maps on `l` satisfying `pred`, sorted lexicographically by
/// image array. Deterministic for a given lattice and predicate.
pub fn enumerate<'a>(
    l: &'a FiniteLattice,
    pred: Predicate,
    limits: &Limits,
) -> Result<Vec<LatticeMap<'a>>> {
    let n = l.size();
    let mut found: Vec<Vec<usize>> = Vec::new();
    if pred.isotone_backed() {
        if n > limits.isotone {
            return Err(Error::SizeLimitExceeded {
                size: n,
                limit: limits.isotone,
            });
        }
        for_each_isotone(l, &mut |image| {
            let keep = match pred {
                Predicate::Rbo => ops::raw_is_rota_baxter(l, image),
                Predicate::IsotoneDerivation => ops::raw_is_derivation(l, image),
                Predicate::IsotoneIdempotent => ops::raw_is_idempotent(image),
                _ => unreachable!("not an isotone-backed predicate"),
            };
            if keep {
                found.push(image.to_vec());
            }
        });
        // The backtracking order follows the linear extension, not the
        // element order, so sort for the canonical output.
        found.sort_unstable();
    } else {
        if n > limits.full_scan {
            return Err(Error::SizeLimitExceeded {
                size: n,
                limit: limits.full_scan,
            });
        }
        for_each_map(n, &mut |image| {
            if predicate_holds(l, image, pred) {
                found.push(image.to_vec());
            }
        });
        // Already lexicographic by generation order.
    }
    Ok(found
        .into_iter()
        .map(|image| LatticeMap::from_raw(l, image))
        .collect())
}

/// Scans all `size^size` maps and filters them by evaluating the defining
/// axioms directly, with no pruning. Output format is identical to
/// [`enumerate`].
pub fn brute_force_oracle<'a>(
    l: &'a FiniteLattice,
    pred: Predicate,
    limits: &Limits,
) -> Result<Vec<LatticeMap<'a>>> {
    let n = l.size();
    if n > limits.full_scan {
        return Err(Error::SizeLimitExceeded {
            size: n,
            limit: limits.full_scan,
        });
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    for_each_map(n, &mut |f| {
        if oracle_accepts(l, f, pred) {
            found.push(f.to_vec());
        }
    });
    Ok(found
        .into_iter()
        .map(|image| LatticeMap::from_raw(l, image))
        .collect())
}

/// Direct axiom evaluation, written out law by law so the oracle shares no
/// code with the predicate implementations it cross-checks.
fn oracle_accepts(l: &FiniteLattice, f: &[usize], pred: Predicate) -> bool {
    let n = l.size();
    match pred {
        Predicate::All => true,
        Predicate::Rbo => {
            for x in 0..n {
                for y in 0..n {
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
        Predicate::Derivation => {
            for x in 0..n {
                for y in 0..n {
                    if f[l.meet(x, y)] != l.join(l.meet(f[x], y), l.meet(x, f[y])) {
                        return false;
                    }
                }
            }
            true
        }
        Predicate::IsotoneDerivation => {
            for x in 0..n {
                for y in 0..n {
                    if l.leq(x, y) && !l.leq(f[x], f[y]) {
                        return false;
                    }
                    if f[l.meet(x, y)] != l.join(l.meet(f[x], y), l.meet(x, f[y])) {
                        return false;
                    }
                }
            }
            true
        }
        Predicate::IsotoneIdempotent => {
            for x in 0..n {
                if f[f[x]] != f[x] {
                    return false;
                }
                for y in 0..n {
                    if l.leq(x, y) && !l.leq(f[x], f[y]) {
                        return false;
                    }
                }
            }
            true
        }
        Predicate::Szasz => {
            for x in 0..n {
                for y in 0..n {
                    if f[l.join(x, y)] != l.join(f[x], f[y]) {
                        return false;
                    }
                    if f[l.meet(x, y)] != l.join(l.meet(f[x], y), l.meet(x, f[y])) {
                        return false;
                    }
                }
            }
            true
        }
        Predicate::MeetTranslation => {
            for x in 0..n {
                for y in 0..n {
                    if f[l.meet(x, y)] != l.meet(x, f[y]) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// JSON document for an enumeration run, as emitted by the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct EnumerationJson {
    pub lattice: String,
    pub predicate: String,
    pub count: usize,
    pub operators: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<crate::classify::ClassificationJson>,
}
