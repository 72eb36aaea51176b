//! Builtin lattice constructors, the lattice-spec string grammar and the
//! JSON file format.
//!
//! Spec grammar: `chain:N`, `m:N` (diamond with `N-2` incomparable middle
//! elements, `N ≥ 3`), `n5` (pentagon), `n8` (the 8-element nonmodular
//! witness lattice), `bool:K` (subset lattice of a `K`-set),
//! `prod(SPEC,SPEC)` and `file:PATH`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// A parsed descriptor of a builtin (or file-backed) lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeSpec {
    Chain(usize),
    M(usize),
    N5,
    N8,
    Bool(usize),
    Prod(Box<LatticeSpec>, Box<LatticeSpec>),
    File(PathBuf),
}

impl LatticeSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("prod(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::BadSpec(format!("unbalanced parentheses in `{s}`")))?;
            let (a, b) = split_top_level(inner).ok_or_else(|| {
                Error::BadSpec(format!("prod needs two comma-separated specs in `{s}`"))
            })?;
            return Ok(LatticeSpec::Prod(
                Box::new(LatticeSpec::parse(a)?),
                Box::new(LatticeSpec::parse(b)?),
            ));
        }
        if s == "n5" {
            return Ok(LatticeSpec::N5);
        }
        if s == "n8" {
            return Ok(LatticeSpec::N8);
        }
        if let Some(rest) = s.strip_prefix("chain:") {
            let n = parse_count(rest, s)?;
            return Ok(LatticeSpec::Chain(n));
        }
        if let Some(rest) = s.strip_prefix("m:") {
            let n = parse_count(rest, s)?;
            if n < 3 {
                return Err(Error::BadSpec(format!("m:{n} requires n >= 3")));
            }
            return Ok(LatticeSpec::M(n));
        }
        if let Some(rest) = s.strip_prefix("bool:") {
            let k = parse_count(rest, s)?;
            return Ok(LatticeSpec::Bool(k));
        }
        if let Some(rest) = s.strip_prefix("file:") {
            if rest.is_empty() {
                return Err(Error::BadSpec("file: needs a path".into()));
            }
            return Ok(LatticeSpec::File(PathBuf::from(rest)));
        }
        Err(Error::BadSpec(format!("unrecognized lattice spec `{s}`")))
    }

    /// Number of elements of the described lattice (files are loaded).
    pub fn size(&self) -> Result<usize> {
        Ok(match self {
            LatticeSpec::Chain(n) => *n,
            LatticeSpec::M(n) => *n,
            LatticeSpec::N5 => 5,
            LatticeSpec::N8 => 8,
            LatticeSpec::Bool(k) => 1usize << k,
            LatticeSpec::Prod(a, b) => a.size()? * b.size()?,
            LatticeSpec::File(_) => self.build()?.size(),
        })
    }

    /// Constructs the described lattice.
    pub fn build(&self) -> Result<FiniteLattice> {
        match self {
            LatticeSpec::Chain(n) => chain(*n),
            LatticeSpec::M(n) => diamond(*n),
            LatticeSpec::N5 => pentagon(),
            LatticeSpec::N8 => nonmodular_n8(),
            LatticeSpec::Bool(k) => boolean(*k),
            LatticeSpec::Prod(a, b) => FiniteLattice::product(&a.build()?, &b.build()?),
            LatticeSpec::File(path) => {
                let text = std::fs::read_to_string(path)?;
                lattice_from_json(&text)
            }
        }
    }
}

impl FromStr for LatticeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LatticeSpec::parse(s)
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeSpec::Chain(n) => write!(f, "chain:{n}"),
            LatticeSpec::M(n) => write!(f, "m:{n}"),
            LatticeSpec::N5 => write!(f, "n5"),
            LatticeSpec::N8 => write!(f, "n8"),
            LatticeSpec::Bool(k) => write!(f, "bool:{k}"),
            LatticeSpec::Prod(a, b) => write!(f, "prod({a},{b})"),
            LatticeSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn parse_count(text: &str, whole: &str) -> Result<usize> {
    let n: usize = text
        .parse()
        .map_err(|_| Error::BadSpec(format!("bad count in `{whole}`")))?;
    if n == 0 {
        return Err(Error::BadSpec(format!(
            "count must be positive in `{whole}`"
        )));
    }
    Ok(n)
}

/// Splits `a,b` at the single top-level comma, respecting nested `prod(..)`.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// The `n`-element total order `0 < 1 < … < n-1`.
fn chain(n: usize) -> Result<FiniteLattice> {
    let covers: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteLattice::build_with_labels(n, &covers, Some(labels))
}

/// The diamond lattice with bottom `0`, top `n-1`, and `n-2` pairwise
/// incomparable middle elements `b1 … b(n-2)`.
fn diamond(n: usize) -> Result<FiniteLattice> {
    if n < 3 {
        return Err(Error::BadSpec(format!("m:{n} requires n >= 3")));
    }
    let top = n - 1;
    let mut covers = Vec::new();
    for b in 1..top {
        covers.push((0, b));
        covers.push((b, top));
    }
    let mut labels = vec!["0".to_string()];
    labels.extend((1..top).map(|b| format!("b{b}")));
    labels.push("1".to_string());
    FiniteLattice::build_with_labels(n, &covers, Some(labels))
}

/// The pentagon: `0 < a < b < 1` alongside `0 < c < 1`.
fn pentagon() -> Result<FiniteLattice> {
    FiniteLattice::build_with_labels(
        5,
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        Some(
            vec!["0", "a", "b", "c", "1"]
                .into_iter()
                .map(String::from)
                .collect(),
        ),
    )
}

/// The 8-element nonmodular lattice `{0, a, b, c, u, v, w, 1}` with covers
/// `0⋖a, 0⋖b, 0⋖c, a⋖u, b⋖v, c⋖w, v⋖u, v⋖w, u⋖1, w⋖1`.
fn nonmodular_n8() -> Result<FiniteLattice> {
    FiniteLattice::build_with_labels(
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (2, 5),
            (3, 6),
            (5, 4),
            (5, 6),
            (4, 7),
            (6, 7),
        ],
        Some(
            vec!["0", "a", "b", "c", "u", "v", "w", "1"]
                .into_iter()
                .map(String::from)
                .collect(),
        ),
    )
}

/// The subset lattice of a `k`-element set, elements encoded as bitmasks.
fn boolean(k: usize) -> Result<FiniteLattice> {
    let size = 1usize << k;
    let mut covers = Vec::new();
    for m in 0..size {
        for bit in 0..k {
            if m & (1 << bit) == 0 {
                covers.push((m, m | (1 << bit)));
            }
        }
    }
    let labels = (0..size).map(|m| format!("{m:0k$b}")).collect();
    FiniteLattice::build_with_labels(size, &covers, Some(labels))
}

/// JSON lattice file: `{"size": n, "covers": [[lo,hi],…], "labels": […]}`,
/// covers given lower-to-upper; labels optional.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFileJson {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

pub fn lattice_from_json(text: &str) -> Result<FiniteLattice> {
    let file: LatticeFileJson =
        serde_json::from_str(text).map_err(|e| Error::BadSpec(format!("bad lattice file: {e}")))?;
    FiniteLattice::build_with_labels(file.size, &file.covers, file.labels)
}

pub fn lattice_to_json(l: &FiniteLattice) -> String {
    let file = LatticeFileJson {
        size: l.size(),
        covers: l.covers().to_vec(),
        labels: l.labels().map(|ls| ls.to_vec()),
    };
    serde_json::to_string_pretty(&file).expect("serializing a lattice file cannot fail")
}

/// The default catalog used by the check harness: chains 1..=7, diamonds
/// m:3..=7, the pentagon, the n8 witness, bool:1..=3 and prod(chain:2,chain:3).
/// Together these cover chains, distributive, modular-nondistributive and
/// nonmodular lattices.
pub fn default_catalog() -> Vec<LatticeSpec> {
    let mut specs: Vec<LatticeSpec> = (1..=7).map(LatticeSpec::Chain).collect();
    specs.extend((3..=7).map(LatticeSpec::M));
    specs.push(LatticeSpec::N5);
    specs.push(LatticeSpec::N8);
    specs.extend((1..=3).map(LatticeSpec::Bool));
    specs.push(LatticeSpec::Prod(
        Box::new(LatticeSpec::Chain(2)),
        Box::new(LatticeSpec::Chain(3)),
    ));
    specs
}
