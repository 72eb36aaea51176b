//! Named operator families.
//!
//! Each family constructor builds the exact piecewise map from its
//! definition after validating the family's own preconditions. Construction
//! never pre-filters by Rota-Baxter membership: the `phi` and `tauAB`
//! families are Rota-Baxter exactly when every element below `a` is
//! comparable with `b`, and callers must be able to build the failing side
//! of that equivalence.
//!
//! String grammar: `identity`, `const:A`, `tau`, `step:A:B`, `tauA:A`,
//! `patom:A`, `phi:A:B`, `tauAB:A:B`, `psi:A`, `inner:U` with element
//! indices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParamError, Result};
use crate::lattice::FiniteLattice;
use crate::ops::LatticeMap;

/// A named operator-family descriptor with its element parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// `x ↦ x`.
    Identity,
    /// `x ↦ a`.
    Constant { a: usize },
    /// `0 ↦ 0`, everything else to the top.
    Tau,
    /// `x ↦ b` for `x ≤ a`, top otherwise; needs `b ≤ a`.
    Step { a: usize, b: usize },
    /// `x ↦ x` for `x ≤ a`, top otherwise.
    TauA { a: usize },
    /// Bottom and the atom `a` fixed, everything else to the top.
    PAtom { a: usize },
    /// `x ↦ b` for `x ≤ b`; `x ↦ x` for `b < x ≤ a`; top otherwise.
    /// Needs `b < a < top`.
    Phi { a: usize, b: usize },
    /// `x ↦ x` for `x ≤ b`; `x ↦ b` for `b < x ≤ a`; top otherwise.
    /// Needs `b < a`.
    TauAB { a: usize, b: usize },
    /// `x ↦ x ∨ a`.
    Psi { a: usize },
    /// The inner derivation `x ↦ x ∧ u`.
    Inner { u: usize },
}

impl FamilySpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or("");
        let args: Vec<&str> = parts.collect();
        let arg = |i: usize| -> Result<usize> {
            args.get(i)
                .ok_or_else(|| Error::BadSpec(format!("family `{s}` is missing a parameter")))?
                .parse()
                .map_err(|_| Error::BadSpec(format!("bad element index in `{s}`")))
        };
        let expect_args = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::BadSpec(format!(
                    "family `{name}` takes {n} parameter(s), got {}",
                    args.len()
                )))
            }
        };
        match name {
            "identity" => {
                expect_args(0)?;
                Ok(FamilySpec::Identity)
            }
            "const" => {
                expect_args(1)?;
                Ok(FamilySpec::Constant { a: arg(0)? })
            }
            "tau" => {
                expect_args(0)?;
                Ok(FamilySpec::Tau)
            }
            "step" => {
                expect_args(2)?;
                Ok(FamilySpec::Step {
                    a: arg(0)?,
                    b: arg(1)?,
                })
            }
            "tauA" => {
                expect_args(1)?;
                Ok(FamilySpec::TauA { a: arg(0)? })
            }
            "patom" => {
                expect_args(1)?;
                Ok(FamilySpec::PAtom { a: arg(0)? })
            }
            "phi" => {
                expect_args(2)?;
                Ok(FamilySpec::Phi {
                    a: arg(0)?,
                    b: arg(1)?,
                })
            }
            "tauAB" => {
                expect_args(2)?;
                Ok(FamilySpec::TauAB {
                    a: arg(0)?,
                    b: arg(1)?,
                })
            }
            "psi" => {
                expect_args(1)?;
                Ok(FamilySpec::Psi { a: arg(0)? })
            }
            "inner" => {
                expect_args(1)?;
                Ok(FamilySpec::Inner { u: arg(0)? })
            }
            _ => Err(Error::BadSpec(format!("unknown operator family `{s}`"))),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Identity => write!(f, "identity"),
            FamilySpec::Constant { a } => write!(f, "const:{a}"),
            FamilySpec::Tau => write!(f, "tau"),
            FamilySpec::Step { a, b } => write!(f, "step:{a}:{b}"),
            FamilySpec::TauA { a } => write!(f, "tauA:{a}"),
            FamilySpec::PAtom { a } => write!(f, "patom:{a}"),
            FamilySpec::Phi { a, b } => write!(f, "phi:{a}:{b}"),
            FamilySpec::TauAB { a, b } => write!(f, "tauAB:{a}:{b}"),
            FamilySpec::Psi { a } => write!(f, "psi:{a}"),
            FamilySpec::Inner { u } => write!(f, "inner:{u}"),
        }
    }
}

fn order_violation(lower: usize, upper: usize, relation: &'static str) -> Error {
    Error::BadParams(ParamError::OrderViolation {
        lower,
        upper,
        relation,
    })
}

/// Builds the piecewise map for a family instance on `l`.
pub fn make_family<'a>(l: &'a FiniteLattice, spec: &FamilySpec) -> Result<LatticeMap<'a>> {
    let top = l.top().expect("a validated finite lattice has a top");
    let bottom = l.bottom().expect("a validated finite lattice has a bottom");
    let image: Vec<usize> = match *spec {
        FamilySpec::Identity => l.elements().collect(),
        FamilySpec::Constant { a } => {
            l.check_index(a)?;
            vec![a; l.size()]
        }
        FamilySpec::Tau => l
            .elements()
            .map(|x| if x == bottom { bottom } else { top })
            .collect(),
        FamilySpec::Step { a, b } => {
            l.check_index(a)?;
            l.check_index(b)?;
            if !l.leq(b, a) {
                return Err(order_violation(b, a, "<="));
            }
            l.elements()
                .map(|x| if l.leq(x, a) { b } else { top })
                .collect()
        }
        FamilySpec::TauA { a } => {
            l.check_index(a)?;
            l.elements()
                .map(|x| if l.leq(x, a) { x } else { top })
                .collect()
        }
        FamilySpec::PAtom { a } => {
            l.check_index(a)?;
            if !l.is_atom(a) {
                return Err(Error::BadParams(ParamError::NotAnAtom(a)));
            }
            l.elements()
                .map(|x| {
                    if x == bottom {
                        bottom
                    } else if x == a {
                        a
                    } else {
                        top
                    }
                })
                .collect()
        }
        FamilySpec::Phi { a, b } => {
            l.check_index(a)?;
            l.check_index(b)?;
            if !l.lt(b, a) {
                return Err(order_violation(b, a, "<"));
            }
            if a == top {
                return Err(Error::BadParams(ParamError::NotBelowTop(a)));
            }
            l.elements()
                .map(|x| {
                    if l.leq(x, b) {
                        b
                    } else if l.lt(b, x) && l.leq(x, a) {
                        x
                    } else {
                        top
                    }
                })
                .collect()
        }
        FamilySpec::TauAB { a, b } => {
            l.check_index(a)?;
            l.check_index(b)?;
            if !l.lt(b, a) {
                return Err(order_violation(b, a, "<"));
            }
            l.elements()
                .map(|x| {
                    if l.leq(x, b) {
                        x
                    } else if l.lt(b, x) && l.leq(x, a) {
                        b
                    } else {
                        top
                    }
                })
                .collect()
        }
        FamilySpec::Psi { a } => {
            l.check_index(a)?;
            l.elements().map(|x| l.join(x, a)).collect()
        }
        FamilySpec::Inner { u } => {
            l.check_index(u)?;
            l.elements().map(|x| l.meet(x, u)).collect()
        }
    };
    LatticeMap::new(l, image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::LatticeSpec;

    fn build(spec: &str) -> FiniteLattice {
        LatticeSpec::parse(spec).unwrap().build().unwrap()
    }

    #[test]
    fn step_on_a_chain() {
        let c5 = build("chain:5");
        let m = make_family(&c5, &FamilySpec::Step { a: 2, b: 1 }).unwrap();
        assert_eq!(m.image(), &[1, 1, 1, 4, 4]);
    }

    #[test]
    fn atom_pin_on_the_diamond() {
        let m5 = build("m:5");
        let m = make_family(&m5, &FamilySpec::PAtom { a: 1 }).unwrap();
        assert_eq!(m.image(), &[0, 1, 4, 4, 4]);
    }

    #[test]
    fn phi_on_the_diamond() {
        let m5 = build("m:5");
        // 0 < b1 < 1, so phi:1:0 is admissible and pins {0, b1}.
        let m = make_family(&m5, &FamilySpec::Phi { a: 1, b: 0 }).unwrap();
        assert_eq!(m.image(), &[0, 1, 4, 4, 4]);
        // a = top violates a < 1.
        assert_eq!(
            make_family(&m5, &FamilySpec::Phi { a: 4, b: 0 }).unwrap_err(),
            Error::BadParams(ParamError::NotBelowTop(4))
        );
    }

    #[test]
    fn band_operator_shape() {
        let c5 = build("chain:5");
        let m = make_family(&c5, &FamilySpec::TauAB { a: 3, b: 1 }).unwrap();
        assert_eq!(m.image(), &[0, 1, 1, 1, 4]);
    }

    #[test]
    fn precondition_violations() {
        let m5 = build("m:5");
        assert_eq!(
            make_family(&m5, &FamilySpec::Step { a: 1, b: 2 }).unwrap_err(),
            Error::BadParams(ParamError::OrderViolation {
                lower: 2,
                upper: 1,
                relation: "<="
            })
        );
        assert_eq!(
            make_family(&m5, &FamilySpec::PAtom { a: 4 }).unwrap_err(),
            Error::BadParams(ParamError::NotAnAtom(4))
        );
        assert_eq!(
            make_family(&m5, &FamilySpec::TauAB { a: 1, b: 1 }).unwrap_err(),
            Error::BadParams(ParamError::OrderViolation {
                lower: 1,
                upper: 1,
                relation: "<"
            })
        );
        assert!(matches!(
            make_family(&m5, &FamilySpec::Constant { a: 9 }),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn psi_and_inner_shapes() {
        let m5 = build("m:5");
        let psi = make_family(&m5, &FamilySpec::Psi { a: 1 }).unwrap();
        assert_eq!(psi.image(), &[1, 1, 4, 4, 4]);
        let inner = make_family(&m5, &FamilySpec::Inner { u: 1 }).unwrap();
        assert_eq!(inner.image(), &[0, 1, 0, 0, 1]);
    }

    #[test]
    fn tau_equals_bottom_step() {
        for spec in ["chain:4", "m:5", "bool:2", "n8"] {
            let l = LatticeSpec::parse(spec).unwrap().build().unwrap();
            let tau = make_family(&l, &FamilySpec::Tau).unwrap();
            let step = make_family(
                &l,
                &FamilySpec::Step {
                    a: l.bottom().unwrap(),
                    b: l.bottom().unwrap(),
                },
            )
            .unwrap();
            assert_eq!(tau, step, "{spec}");
        }
    }

    #[test]
    fn grammar_round_trip() {
        for text in [
            "identity",
            "const:3",
            "tau",
            "step:2:1",
            "tauA:2",
            "patom:1",
            "phi:3:1",
            "tauAB:3:1",
            "psi:2",
            "inner:4",
        ] {
            let spec = FamilySpec::parse(text).unwrap();
            assert_eq!(spec.to_string(), text);
        }
        for text in ["", "const", "step:1", "psi:1:2", "frob:1", "const:x"] {
            assert!(FamilySpec::parse(text).is_err(), "{text:?} should fail");
        }
    }
}
