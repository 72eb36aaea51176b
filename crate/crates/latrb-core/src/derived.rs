//! Binary operations derived from derivations and Rota-Baxter operators,
//! with axiom checkers for the Novikov, associative and dendriform semiring
//! laws.
//!
//! The semiring addition is the lattice join throughout; none of the
//! definitions used here require an additive identity, so none is imposed.
//! Preconditions (distributivity, Rota-Baxter / isotone-derivation
//! membership) are enforced at table construction, so the checkers only ever
//! run on tables their hypotheses license. Checkers walk full triple loops
//! and report a first-failure witness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::ops::LatticeMap;

/// An `n × n` operation table over a lattice carrier.
#[derive(Clone, PartialEq, Eq)]
pub struct BinOpTable<'a> {
    lattice: &'a FiniteLattice,
    table: Vec<usize>,
}

impl std::fmt::Debug for BinOpTable<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BinOpTable")
            .field("size", &self.lattice.size())
            .field("table", &self.table)
            .finish()
    }
}

impl<'a> BinOpTable<'a> {
    pub fn from_fn(lattice: &'a FiniteLattice, op: impl Fn(usize, usize) -> usize) -> Self {
        let n = lattice.size();
        let mut table = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + y] = op(x, y);
            }
        }
        BinOpTable { lattice, table }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.lattice.size() + y]
    }

    pub fn lattice(&self) -> &'a FiniteLattice {
        self.lattice
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.lattice.size();
        (0..n)
            .map(|x| self.table[x * n..(x + 1) * n].to_vec())
            .collect()
    }

    /// JSON form: `{"lattice": "<spec>", "op": "...", "table": [[...],…]}`.
    pub fn to_json(&self, lattice_spec: &str, op: &str) -> String {
        let doc = BinOpTableJson {
            lattice: lattice_spec.to_string(),
            op: op.to_string(),
            table: self.rows(),
        };
        serde_json::to_string_pretty(&doc).expect("table serialization cannot fail")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BinOpTableJson {
    pub lattice: String,
    pub op: String,
    pub table: Vec<Vec<usize>>,
}

/// First triple (or pair) violating a semiring law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub elements: Vec<usize>,
}

impl std::fmt::Display for LawViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "law `{}` fails at {:?}", self.law, self.elements)
    }
}

/// Outcome of an axiom sweep: `Ok(())` or the first violated law.
pub type LawCheck = std::result::Result<(), LawViolation>;

fn require_distributive(l: &FiniteLattice) -> Result<()> {
    if l.is_distributive() {
        Ok(())
    } else {
        Err(Error::NotDistributive)
    }
}

fn require_isotone_derivation(d: &LatticeMap) -> Result<()> {
    if d.is_isotone() && d.is_derivation() {
        Ok(())
    } else {
        Err(Error::NotIsotoneDerivation)
    }
}

fn require_rota_baxter(p: &LatticeMap) -> Result<()> {
    if p.is_rota_baxter() {
        Ok(())
    } else {
        Err(Error::NotRotaBaxter)
    }
}

/// Table for `x ◁ y := d(x) ∧ y`. Requires a distributive lattice and an
/// isotone derivation.
pub fn novikov_table<'a>(l: &'a FiniteLattice, d: &LatticeMap) -> Result<BinOpTable<'a>> {
    require_distributive(l)?;
    require_isotone_derivation(d)?;
    Ok(BinOpTable::from_fn(l, |x, y| l.meet(d.apply(x), y)))
}

/// Verifies the left Novikov semiring laws for `t` over all triples:
/// both sides of the sum identity, the right-commutation identity, and
/// distributivity of the operation over join on both sides.
pub fn check_novikov(t: &BinOpTable) -> LawCheck {
    let l = t.lattice();
    let n = l.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = l.join(t.get(t.get(x, y), z), t.get(t.get(y, x), z));
                let rhs = l.join(t.get(x, t.get(y, z)), t.get(y, t.get(x, z)));
                if lhs != rhs {
                    return Err(LawViolation {
                        law: "novikov sum identity",
                        elements: vec![x, y, z],
                    });
                }
                if t.get(t.get(x, y), z) != t.get(t.get(x, z), y) {
                    return Err(LawViolation {
                        law: "right commutation",
                        elements: vec![x, y, z],
                    });
                }
                if t.get(l.join(x, y), z) != l.join(t.get(x, z), t.get(y, z)) {
                    return Err(LawViolation {
                        law: "left distributivity over join",
                        elements: vec![x, y, z],
                    });
                }
                if t.get(x, l.join(y, z)) != l.join(t.get(x, y), t.get(x, z)) {
                    return Err(LawViolation {
                        law: "right distributivity over join",
                        elements: vec![x, y, z],
                    });
                }
            }
        }
    }
    Ok(())
}

/// Verifies that `d` is a homomorphism from `(L, ∨, ∧)` to `(L, ∨, ◁)`:
/// `d(x ∨ y) = d(x) ∨ d(y)` and `d(x ∧ y) = d(x) ◁ d(y)` for all pairs.
/// Requires a distributive lattice with a top and an isotone derivation.
pub fn novikov_homomorphism_check(l: &FiniteLattice, d: &LatticeMap) -> Result<LawCheck> {
    let t = novikov_table(l, d)?;
    for x in 0..l.size() {
        for y in 0..l.size() {
            if d.apply(l.join(x, y)) != l.join(d.apply(x), d.apply(y)) {
                return Ok(Err(LawViolation {
                    law: "join homomorphism",
                    elements: vec![x, y],
                }));
            }
            if d.apply(l.meet(x, y)) != t.get(d.apply(x), d.apply(y)) {
                return Ok(Err(LawViolation {
                    law: "meet-to-derived homomorphism",
                    elements: vec![x, y],
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// Table for `x ∗ y := (x ∧ P(y)) ∨ (P(x) ∧ y)`. Requires a distributive
/// lattice and a Rota-Baxter operator.
pub fn star_table<'a>(l: &'a FiniteLattice, p: &LatticeMap) -> Result<BinOpTable<'a>> {
    require_distributive(l)?;
    require_rota_baxter(p)?;
    Ok(BinOpTable::from_fn(l, |x, y| {
        l.join(l.meet(x, p.apply(y)), l.meet(p.apply(x), y))
    }))
}

/// Verifies that `(L, ∨, ∗)` is a commutative associative semiring,
/// that `P(x ∗ y) = P(x) ∧ P(y)`, and that `P` is a homomorphism from
/// `(L, ∨, ∗)` to `(L, ∨, ∧)`.
pub fn check_star_semiring(l: &FiniteLattice, p: &LatticeMap) -> Result<LawCheck> {
    let t = star_table(l, p)?;
    let n = l.size();
    for x in 0..n {
        for y in 0..n {
            if t.get(x, y) != t.get(y, x) {
                return Ok(Err(LawViolation {
                    law: "commutativity",
                    elements: vec![x, y],
                }));
            }
            if p.apply(t.get(x, y)) != l.meet(p.apply(x), p.apply(y)) {
                return Ok(Err(LawViolation {
                    law: "operator image of the product",
                    elements: vec![x, y],
                }));
            }
            if p.apply(l.join(x, y)) != l.join(p.apply(x), p.apply(y)) {
                return Ok(Err(LawViolation {
                    law: "join homomorphism",
                    elements: vec![x, y],
                }));
            }
            for z in 0..n {
                if t.get(t.get(x, y), z) != t.get(x, t.get(y, z)) {
                    return Ok(Err(LawViolation {
                        law: "associativity",
                        elements: vec![x, y, z],
                    }));
                }
                if t.get(x, l.join(y, z)) != l.join(t.get(x, y), t.get(x, z)) {
                    return Ok(Err(LawViolation {
                        law: "distributivity over join",
                        elements: vec![x, y, z],
                    }));
                }
                if t.get(l.join(x, y), z) != l.join(t.get(x, z), t.get(y, z)) {
                    return Ok(Err(LawViolation {
                        law: "distributivity over join (left)",
                        elements: vec![x, y, z],
                    }));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Tables for `x ≺ y := x ∧ P(y)` and `x ≻ y := P(x) ∧ y`. Requires a
/// distributive lattice and a Rota-Baxter operator.
pub fn dendriform_tables<'a>(
    l: &'a FiniteLattice,
    p: &LatticeMap,
) -> Result<(BinOpTable<'a>, BinOpTable<'a>)> {
    require_distributive(l)?;
    require_rota_baxter(p)?;
    let prec = BinOpTable::from_fn(l, |x, y| l.meet(x, p.apply(y)));
    let succ = BinOpTable::from_fn(l, |x, y| l.meet(p.apply(x), y));
    Ok((prec, succ))
}

/// Verifies the dendriform semiring laws with join as the addition, plus
/// distributivity of both operations over join on both sides.
pub fn check_dendriform(l: &FiniteLattice, p: &LatticeMap) -> Result<LawCheck> {
    let (prec, succ) = dendriform_tables(l, p)?;
    let n = l.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let sum_yz = l.join(prec.get(y, z), succ.get(y, z));
                if prec.get(prec.get(x, y), z) != prec.get(x, sum_yz) {
                    return Ok(Err(LawViolation {
                        law: "left-left compatibility",
                        elements: vec![x, y, z],
                    }));
                }
                if prec.get(succ.get(x, y), z) != succ.get(x, prec.get(y, z)) {
                    return Ok(Err(LawViolation {
                        law: "middle compatibility",
                        elements: vec![x, y, z],
                    }));
                }
                let sum_xy = l.join(prec.get(x, y), succ.get(x, y));
                if succ.get(x, succ.get(y, z)) != succ.get(sum_xy, z) {
                    return Ok(Err(LawViolation {
                        law: "right-right compatibility",
                        elements: vec![x, y, z],
                    }));
                }
                for (name, t) in [("prec", &prec), ("succ", &succ)] {
                    if t.get(l.join(x, y), z) != l.join(t.get(x, z), t.get(y, z))
                        || t.get(x, l.join(y, z)) != l.join(t.get(x, y), t.get(x, z))
                    {
                        return Ok(Err(LawViolation {
                            law: match name {
                                "prec" => "prec distributivity over join",
                                _ => "succ distributivity over join",
                            },
                            elements: vec![x, y, z],
                        }));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}
