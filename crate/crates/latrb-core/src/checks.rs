//! The check registry: every structural theorem the toolkit verifies is a
//! named, executable check over a configured lattice catalog.
//!
//! Checks are deterministic: reports are sorted by (check id, lattice spec)
//! and contain no volatile data, so repeated runs produce identical output.
//! Expected counts come either from closed-form formulas in [`counts`] or
//! from the pinned regression file `data/expected_counts.json`, which was
//! generated once by the brute-force oracle (see the `regen_expected`
//! example) and is re-verified on every run.

use std::collections::HashSet;
use std::sync::LazyLock;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::catalog::{default_catalog, LatticeSpec};
use crate::classify::{classify, diamond_structure_report, orbit_size, rigidity_check};
use crate::counts;
use crate::derived::{
    check_dendriform, check_novikov, check_star_semiring, dendriform_tables,
    novikov_homomorphism_check, novikov_table, star_table, BinOpTable,
};
use crate::enumerate::{brute_force_oracle, enumerate, Limits, Predicate};
use crate::error::{Error, Result};
use crate::families::{make_family, FamilySpec};
use crate::lattice::{embedding_preserves_ops, sublattice_embedding, FiniteLattice};
use crate::ops::{LatticeMap, RbAxiom};

/// All registered check ids, in registry order.
pub const CHECK_IDS: &[&str] = &[
    "rbo-basic-facts",
    "fix-sublattice",
    "injective-iff-identity",
    "meet-translation-equiv",
    "szasz-intersection",
    "distributive-iff-inner-rbo",
    "ido-subset-rbo-iff-distributive",
    "family-membership",
    "n8-three-way-equivalence",
    "chain-iff-ieo",
    "chain-fibonacci-count",
    "chain-class-rigidity",
    "mn-count",
    "mn-classes",
    "mn-structure",
    "rigidity-suite",
    "novikov-suite",
    "star-semiring-suite",
    "dendriform-suite",
    "oracle-crosscheck",
];

/// Full map-space sweeps are limited to this size even when the full-scan
/// limit allows more; larger lattices are covered by enumerated-set checks.
const POINTWISE_SCAN_MAX: usize = 5;

/// Lattices up to this size take part in the enumerate-vs-oracle crosscheck.
const ORACLE_CROSSCHECK_MAX: usize = 6;

/// Configuration for a check run: enumeration limits and the catalog.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub limits: Limits,
    pub catalog: Vec<LatticeSpec>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            limits: Limits::default(),
            catalog: default_catalog(),
        }
    }
}

/// Optional JSON config file: `{"isotone_limit": N, "full_scan_limit": N,
/// "catalog": ["chain:1", …]}`, every field optional.
#[derive(Debug, Clone, Deserialize)]
pub struct ConfigFileJson {
    pub isotone_limit: Option<usize>,
    pub full_scan_limit: Option<usize>,
    pub catalog: Option<Vec<String>>,
}

pub fn config_from_json(text: &str) -> Result<CheckConfig> {
    let file: ConfigFileJson =
        serde_json::from_str(text).map_err(|e| Error::BadSpec(format!("bad config file: {e}")))?;
    let mut cfg = CheckConfig::default();
    if let Some(n) = file.isotone_limit {
        cfg.limits.isotone = n;
    }
    if let Some(n) = file.full_scan_limit {
        cfg.limits.full_scan = n;
    }
    if let Some(specs) = file.catalog {
        cfg.catalog = specs
            .iter()
            .map(|s| LatticeSpec::parse(s))
            .collect::<Result<_>>()?;
    }
    Ok(cfg)
}

/// Outcome of one check on one lattice.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub lattice: String,
    pub passed: bool,
    pub detail: String,
    /// Wall-clock time; excluded from serialized output so that repeated
    /// runs are byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// A pinned regression value with its provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PinnedEntry {
    pub spec: String,
    pub predicate: String,
    pub count: usize,
    pub provenance: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PinnedCounts {
    pub entries: Vec<PinnedEntry>,
}

static PINNED: LazyLock<PinnedCounts> = LazyLock::new(|| {
    serde_json::from_str(include_str!("../data/expected_counts.json"))
        .expect("the bundled expected-counts file is well-formed")
});

/// The pinned regression values bundled with the crate.
pub fn pinned_counts() -> &'static PinnedCounts {
    &PINNED
}

/// Runs one registered check. Reports are sorted by lattice spec.
pub fn run_check(id: &str, cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = match id {
        "rbo-basic-facts" => check_rbo_basic_facts(cfg)?,
        "fix-sublattice" => check_fix_sublattice(cfg)?,
        "injective-iff-identity" => check_injective_iff_identity(cfg)?,
        "meet-translation-equiv" => check_meet_translation_equiv(cfg)?,
        "szasz-intersection" => check_szasz_intersection(cfg)?,
        "distributive-iff-inner-rbo" => check_distributive_iff_inner_rbo(cfg)?,
        "ido-subset-rbo-iff-distributive" => check_ido_subset_rbo(cfg)?,
        "family-membership" => check_family_membership(cfg)?,
        "n8-three-way-equivalence" => check_three_way_equivalence(cfg)?,
        "chain-iff-ieo" => check_chain_iff_ieo(cfg)?,
        "chain-fibonacci-count" => check_chain_fibonacci_count(cfg)?,
        "chain-class-rigidity" => check_chain_class_rigidity(cfg)?,
        "mn-count" => check_mn_count(cfg)?,
        "mn-classes" => check_mn_classes(cfg)?,
        "mn-structure" => check_mn_structure(cfg)?,
        "rigidity-suite" => check_rigidity_suite(cfg)?,
        "novikov-suite" => check_novikov_suite(cfg)?,
        "star-semiring-suite" => check_star_semiring_suite(cfg)?,
        "dendriform-suite" => check_dendriform_suite(cfg)?,
        "oracle-crosscheck" => check_oracle_crosscheck(cfg)?,
        other => return Err(Error::UnknownCheck(other.to_string())),
    };
    reports.sort_by(|a, b| a.lattice.cmp(&b.lattice));
    Ok(reports)
}

/// Runs every registered check; reports sorted by (check id, lattice spec).
pub fn run_all(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for id in CHECK_IDS {
        reports.extend(run_check(id, cfg)?);
    }
    reports.sort_by(|a, b| {
        (a.check.as_str(), a.lattice.as_str()).cmp(&(b.check.as_str(), b.lattice.as_str()))
    });
    Ok(reports)
}

fn report(
    check: &str,
    lattice: &str,
    started: Instant,
    outcome: std::result::Result<String, String>,
) -> CheckReport {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckReport {
        check: check.to_string(),
        lattice: lattice.to_string(),
        passed,
        detail,
        elapsed: started.elapsed(),
    }
}

/// Catalog sweep helper: one report per catalog lattice.
fn sweep<F>(check: &'static str, cfg: &CheckConfig, mut eval: F) -> Result<Vec<CheckReport>>
where
    F: FnMut(&LatticeSpec, &FiniteLattice) -> Result<std::result::Result<String, String>>,
{
    let mut reports = Vec::new();
    for spec in &cfg.catalog {
        let started = Instant::now();
        let l = spec.build()?;
        let outcome = eval(spec, &l)?;
        reports.push(report(check, &spec.to_string(), started, outcome));
    }
    Ok(reports)
}

fn images(ops: &[LatticeMap]) -> Vec<Vec<usize>> {
    ops.iter().map(|m| m.image().to_vec()).collect()
}

// ---------------------------------------------------------------------------
// operator facts
// ---------------------------------------------------------------------------

fn check_rbo_basic_facts(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("rbo-basic-facts", cfg, |_, l| {
        let ops = enumerate(l, Predicate::Rbo, &cfg.limits)?;
        let mut bad = Vec::new();
        for p in &ops {
            if !p.is_isotone() {
                bad.push(format!("{:?} is not isotone", p.image()));
            }
            if !p.is_idempotent() {
                bad.push(format!("{:?} is not idempotent", p.image()));
            }
            if p.fix_points() != p.image_set() {
                bad.push(format!(
                    "{:?} has fix points differing from its image",
                    p.image()
                ));
            }
            for x in l.elements() {
                let px = p.apply(x);
                if p.apply(l.meet(x, px)) != px || p.apply(l.join(x, px)) != px {
                    bad.push(format!("{:?} fails the absorption facts at {x}", p.image()));
                }
            }
            for x in l.elements() {
                for y in l.elements() {
                    let lhs = p.apply(l.meet(p.apply(x), y));
                    if !l.leq(lhs, l.meet(p.apply(x), p.apply(y))) {
                        bad.push(format!(
                            "{:?} fails the domination fact at ({x},{y})",
                            p.image()
                        ));
                    }
                }
            }
        }
        Ok(if bad.is_empty() {
            Ok(format!("{} operators satisfy the basic facts", ops.len()))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_fix_sublattice(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("fix-sublattice", cfg, |_, l| {
        let ops = enumerate(l, Predicate::Rbo, &cfg.limits)?;
        let mut bad = Vec::new();
        for p in &ops {
            let fix = p.fix_points();
            for &a in &fix {
                for &b in &fix {
                    if !fix.contains(&l.meet(a, b)) || !fix.contains(&l.join(a, b)) {
                        bad.push(format!("fix set of {:?} is not a sublattice", p.image()));
                    }
                }
            }
        }
        Ok(if bad.is_empty() {
            Ok(format!("{} fix-point sets are sublattices", ops.len()))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_injective_iff_identity(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("injective-iff-identity", cfg, |_, l| {
        let ops = enumerate(l, Predicate::Rbo, &cfg.limits)?;
        let mut bad = Vec::new();
        for p in &ops {
            if p.is_injective() != p.is_identity() || p.is_surjective() != p.is_identity() {
                bad.push(format!(
                    "{:?}: injective/surjective/identity disagree",
                    p.image()
                ));
            }
        }
        Ok(if bad.is_empty() {
            Ok(format!(
                "{} operators: injective ⟺ surjective ⟺ identity",
                ops.len()
            ))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn inner_image(l: &FiniteLattice, u: usize) -> Vec<usize> {
    l.elements().map(|x| l.meet(x, u)).collect()
}

fn check_meet_translation_equiv(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("meet-translation-equiv", cfg, |_, l| {
        let n = l.size();
        let top = l.top().expect("bounded");
        let mut bad = Vec::new();
        let mut parts = Vec::new();

        if n <= POINTWISE_SCAN_MAX.min(cfg.limits.full_scan) {
            let all = enumerate(l, Predicate::All, &cfg.limits)?;
            for f in &all {
                let mt = f.is_meet_translation();
                let ido = f.is_derivation() && f.is_isotone();
                let inner_form = (0..n).all(|x| f.apply(x) == l.meet(x, f.apply(top)));
                if mt != ido || ido != inner_form {
                    bad.push(format!(
                        "{:?}: equivalence fails on the full scan",
                        f.image()
                    ));
                }
            }
            parts.push(format!("{} maps scanned pointwise", all.len()));
        } else if n <= cfg.limits.full_scan {
            let mt = enumerate(l, Predicate::MeetTranslation, &cfg.limits)?;
            let ido = enumerate(l, Predicate::IsotoneDerivation, &cfg.limits)?;
            if mt != ido {
                bad.push("meet-translations differ from isotone derivations".to_string());
            }
            let derivations = enumerate(l, Predicate::Derivation, &cfg.limits)?;
            for d in &derivations {
                if d.is_join_linear() && !d.is_meet_translation() {
                    bad.push(format!(
                        "join-linear derivation {:?} is not a meet-translation",
                        d.image()
                    ));
                }
            }
            for d in &mt {
                if *d.image() != inner_image(l, d.apply(top)) {
                    bad.push(format!("meet-translation {:?} is not inner", d.image()));
                }
            }
            parts.push(format!(
                "{} meet-translations = isotone derivations; {} derivations checked",
                mt.len(),
                derivations.len()
            ));
        }

        // On every bounded lattice the isotone derivations are exactly the
        // inner maps x ↦ x ∧ u.
        let ido = enumerate(l, Predicate::IsotoneDerivation, &cfg.limits)?;
        let mut inner_images: Vec<Vec<usize>> = (0..n).map(|u| inner_image(l, u)).collect();
        inner_images.sort_unstable();
        inner_images.dedup();
        if images(&ido) != inner_images {
            bad.push("isotone derivations differ from the inner maps".to_string());
        }
        for d in &ido {
            for x in l.elements() {
                if !l.leq(d.apply(x), x) {
                    bad.push(format!(
                        "isotone derivation {:?} exceeds its argument",
                        d.image()
                    ));
                }
                for y in l.elements() {
                    if d.apply(l.meet(x, y)) != l.meet(d.apply(x), d.apply(y)) {
                        bad.push(format!(
                            "isotone derivation {:?} is not meet-multiplicative",
                            d.image()
                        ));
                    }
                }
            }
        }
        parts.push(format!("{} isotone derivations are all inner", ido.len()));

        Ok(if bad.is_empty() {
            Ok(parts.join("; "))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_szasz_intersection(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("szasz-intersection", cfg, |_, l| {
        let n = l.size();
        let mut bad = Vec::new();
        let detail;
        if n <= POINTWISE_SCAN_MAX.min(cfg.limits.full_scan) {
            let all = enumerate(l, Predicate::All, &cfg.limits)?;
            for f in &all {
                if f.is_szasz_derivation() != (f.is_derivation() && f.is_rota_baxter()) {
                    bad.push(format!("{:?}: pointwise equivalence fails", f.image()));
                }
            }
            detail = format!("{} maps scanned pointwise", all.len());
        } else if n <= cfg.limits.full_scan {
            let szasz = images(&enumerate(l, Predicate::Szasz, &cfg.limits)?);
            let derivations: HashSet<Vec<usize>> =
                images(&enumerate(l, Predicate::Derivation, &cfg.limits)?)
                    .into_iter()
                    .collect();
            let rbo = images(&enumerate(l, Predicate::Rbo, &cfg.limits)?);
            let intersection: Vec<Vec<usize>> = rbo
                .into_iter()
                .filter(|f| derivations.contains(f))
                .collect();
            if szasz != intersection {
                bad.push("enumerated sets violate szasz = do ∩ rbo".to_string());
            }
            detail = format!("{} maps in the intersection", szasz.len());
        } else {
            let rbo = enumerate(l, Predicate::Rbo, &cfg.limits)?;
            for p in &rbo {
                if p.is_szasz_derivation() != p.is_derivation() {
                    bad.push(format!(
                        "{:?}: rbo member breaks the equivalence",
                        p.image()
                    ));
                }
            }
            detail = format!("{} rbo members checked", rbo.len());
        }
        Ok(if bad.is_empty() {
            Ok(detail)
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_distributive_iff_inner_rbo(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("distributive-iff-inner-rbo", cfg, |_, l| {
        let all_inner_rb = l.elements().all(|u| {
            make_family(l, &FamilySpec::Inner { u })
                .expect("inner is total")
                .is_rota_baxter()
        });
        let distributive = l.is_distributive();
        Ok(if distributive == all_inner_rb {
            Ok(format!(
                "distributive={distributive}, all inner derivations Rota-Baxter={all_inner_rb}"
            ))
        } else {
            Err(format!(
                "distributive={distributive} but all-inner-rb={all_inner_rb}"
            ))
        })
    })
}

fn check_ido_subset_rbo(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("ido-subset-rbo-iff-distributive", cfg, |_, l| {
        let ido = enumerate(l, Predicate::IsotoneDerivation, &cfg.limits)?;
        let rbo: HashSet<Vec<usize>> = images(&enumerate(l, Predicate::Rbo, &cfg.limits)?)
            .into_iter()
            .collect();
        let subset = ido.iter().all(|d| rbo.contains(d.image()));
        let distributive = l.is_distributive();
        Ok(if subset == distributive {
            Ok(format!(
                "{} isotone derivations, contained in rbo: {subset}",
                ido.len()
            ))
        } else {
            Err(format!(
                "distributive={distributive} but ido ⊆ rbo is {subset}"
            ))
        })
    })
}

// ---------------------------------------------------------------------------
// families and lattice characterizations
// ---------------------------------------------------------------------------

fn check_family_membership(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("family-membership", cfg, |spec, l| {
        let n = l.size();
        let top = l.top().expect("bounded");
        let mut bad = Vec::new();
        let mut always = 0usize;
        let mut conditional = 0usize;

        let expect_rb = |fam: FamilySpec, bad: &mut Vec<String>| {
            let m = make_family(l, &fam).expect("admissible parameters");
            if !m.is_rota_baxter() {
                bad.push(format!("{fam} should be Rota-Baxter"));
            }
        };

        expect_rb(FamilySpec::Identity, &mut bad);
        expect_rb(FamilySpec::Tau, &mut bad);
        always += 2;
        for a in 0..n {
            expect_rb(FamilySpec::Constant { a }, &mut bad);
            expect_rb(FamilySpec::TauA { a }, &mut bad);
            always += 2;
            for b in 0..n {
                if l.leq(b, a) {
                    expect_rb(FamilySpec::Step { a, b }, &mut bad);
                    always += 1;
                }
            }
        }
        for a in l.atoms() {
            expect_rb(FamilySpec::PAtom { a }, &mut bad);
            always += 1;
        }

        // phi and tauAB are Rota-Baxter exactly when every element below `a`
        // is comparable with `b`.
        for a in 0..n {
            for b in 0..n {
                if !l.lt(b, a) {
                    continue;
                }
                let cond = l.comparability_below(a, b)?;
                if a != top {
                    let phi = make_family(l, &FamilySpec::Phi { a, b })?;
                    if phi.is_rota_baxter() != cond {
                        bad.push(format!(
                            "phi:{a}:{b} membership disagrees with the comparability condition"
                        ));
                    }
                    conditional += 1;
                }
                let band = make_family(l, &FamilySpec::TauAB { a, b })?;
                if band.is_rota_baxter() != cond {
                    bad.push(format!(
                        "tauAB:{a}:{b} membership disagrees with the comparability condition"
                    ));
                }
                conditional += 1;
            }
        }

        if l.is_modular() {
            for a in 0..n {
                expect_rb(FamilySpec::Psi { a }, &mut bad);
                always += 1;
            }
        }

        if *spec == LatticeSpec::N8 {
            // psi at the middle atom b (index 2) must fail with the witness
            // pair (a, c) = (1, 3) on the meet equation.
            let psi = make_family(l, &FamilySpec::Psi { a: 2 })?;
            match psi.rota_baxter_failure() {
                Some(w) if w.x == 1 && w.y == 3 && w.axiom == RbAxiom::MeetEquation => {}
                other => bad.push(format!(
                    "psi:2 on n8: expected witness (1, 3), got {other:?}"
                )),
            }
        }

        Ok(if bad.is_empty() {
            Ok(format!(
                "{always} unconditional members, {conditional} conditional instances"
            ))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_three_way_equivalence(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let pattern = LatticeSpec::N8.build()?;
    sweep("n8-three-way-equivalence", cfg, |spec, l| {
        let weak_modular = l.weak_modular_identity();
        let all_psi_rb = l.elements().all(|a| {
            make_family(l, &FamilySpec::Psi { a })
                .expect("psi is total")
                .is_rota_baxter()
        });
        let embedding = sublattice_embedding(&pattern, l);
        let mut bad = Vec::new();
        if let Some(h) = &embedding {
            if !embedding_preserves_ops(&pattern, l, h) {
                bad.push("returned embedding fails the direct re-check".to_string());
            }
        }
        let no_embedding = embedding.is_none();
        if weak_modular != all_psi_rb || all_psi_rb != no_embedding {
            bad.push(format!(
                "three-way equivalence broken: weak-modular={weak_modular}, all-psi-rb={all_psi_rb}, no-embedding={no_embedding}"
            ));
        }
        if *spec == LatticeSpec::N8 {
            if weak_modular {
                bad.push("the witness lattice should fail the identity".to_string());
            }
            match l.weak_modular_counterexample() {
                Some((1, 3, 2)) => {}
                other => bad.push(format!("expected counterexample (1, 3, 2), got {other:?}")),
            }
        }
        Ok(if bad.is_empty() {
            Ok(format!(
                "weak-modular={weak_modular}, all-psi-rb={all_psi_rb}, no-embedding={no_embedding}"
            ))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_chain_iff_ieo(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("chain-iff-ieo", cfg, |_, l| {
        let rbo = enumerate(l, Predicate::Rbo, &cfg.limits)?;
        let ieo = enumerate(l, Predicate::IsotoneIdempotent, &cfg.limits)?;
        let ieo_set: HashSet<&[usize]> = ieo.iter().map(|m| m.image()).collect();
        if !rbo.iter().all(|p| ieo_set.contains(p.image())) {
            return Ok(Err("rbo is not contained in ieo".to_string()));
        }
        let equal = rbo == ieo;
        let chain = l.is_chain();
        Ok(if equal == chain {
            Ok(format!(
                "chain={chain}; |rbo|={}, |ieo|={}",
                rbo.len(),
                ieo.len()
            ))
        } else {
            Err(format!(
                "chain={chain} but rbo=ieo is {equal} (|rbo|={}, |ieo|={})",
                rbo.len(),
                ieo.len()
            ))
        })
    })
}

// ---------------------------------------------------------------------------
// counting and classification
// ---------------------------------------------------------------------------

fn check_chain_fibonacci_count(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 1..=6 {
        let started = Instant::now();
        let spec = LatticeSpec::Chain(n);
        let l = spec.build()?;
        let rbo = enumerate(&l, Predicate::Rbo, &cfg.limits)?;
        let ieo = enumerate(&l, Predicate::IsotoneIdempotent, &cfg.limits)?;
        let oracle = brute_force_oracle(&l, Predicate::Rbo, &cfg.limits)?;
        let expected = counts::chain_rbo_count(n) as usize;
        let outcome = if rbo.len() == expected && ieo.len() == expected && oracle == rbo {
            Ok(format!("|rbo| = |ieo| = {expected}, oracle agrees"))
        } else {
            Err(format!(
                "expected {expected}, got |rbo|={}, |ieo|={}, |oracle|={}",
                rbo.len(),
                ieo.len(),
                oracle.len()
            ))
        };
        reports.push(report(
            "chain-fibonacci-count",
            &spec.to_string(),
            started,
            outcome,
        ));
    }
    Ok(reports)
}

fn check_chain_class_rigidity(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 1..=6 {
        let started = Instant::now();
        let spec = LatticeSpec::Chain(n);
        let l = spec.build()?;
        let rbo = enumerate(&l, Predicate::Rbo, &cfg.limits)?;
        let classification = classify(&l, &rbo)?;
        let expected = counts::chain_class_count(n) as usize;
        let singletons = classification.classes.iter().all(|c| c.orbit_size == 1);
        let outcome =
            if singletons && classification.class_count == expected && l.automorphisms().len() == 1
            {
                Ok(format!("{expected} singleton classes, rigid chain"))
            } else {
                Err(format!(
                "expected {expected} singleton classes, got {} classes (singletons: {singletons})",
                classification.class_count
            ))
            };
        reports.push(report(
            "chain-class-rigidity",
            &spec.to_string(),
            started,
            outcome,
        ));
    }
    Ok(reports)
}

fn check_mn_count(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 3..=7 {
        let started = Instant::now();
        let spec = LatticeSpec::M(n);
        let l = spec.build()?;
        let rbo = enumerate(&l, Predicate::Rbo, &cfg.limits)?;
        let expected = counts::diamond_rbo_count(n) as usize;
        let outcome = if rbo.len() == expected {
            Ok(format!("|rbo| = {expected}"))
        } else {
            Err(format!("expected {expected}, got {}", rbo.len()))
        };
        reports.push(report("mn-count", &spec.to_string(), started, outcome));
    }
    Ok(reports)
}

fn check_mn_classes(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 3..=7 {
        let started = Instant::now();
        let spec = LatticeSpec::M(n);
        let l = spec.build()?;
        let rbo = enumerate(&l, Predicate::Rbo, &cfg.limits)?;
        let classification = classify(&l, &rbo)?;
        let expected = counts::diamond_class_count(n) as usize;
        let group_order: usize = (1..=n.saturating_sub(2)).product();
        let sizes_ok = classification
            .classes
            .iter()
            .map(|c| c.orbit_size)
            .sum::<usize>()
            == classification.total
            && classification
                .classes
                .iter()
                .all(|c| group_order.is_multiple_of(c.orbit_size));
        let outcome = if classification.class_count == expected && sizes_ok {
            Ok(format!(
                "{expected} classes over {} operators",
                classification.total
            ))
        } else {
            Err(format!(
                "expected {expected} classes, got {} (orbit sizes consistent: {sizes_ok})",
                classification.class_count
            ))
        };
        reports.push(report("mn-classes", &spec.to_string(), started, outcome));
    }
    Ok(reports)
}

fn check_mn_structure(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 3..=7 {
        let started = Instant::now();
        let spec = LatticeSpec::M(n);
        let census = diamond_structure_report(n, &cfg.limits)?;
        let outcome = if census.ok() && census.matches_expected() {
            Ok(format!(
                "constants={}, two-fix={}, three-fix={}, large-fix={}, identity={}, total={}",
                census.constants,
                census.two_fixpoint_total(),
                census.fix_bottom_middle_top,
                census.fix_large,
                census.identity,
                census.total
            ))
        } else {
            Err(format!(
                "census mismatch: {census:?} (violations: {})",
                census.violations.join("; ")
            ))
        };
        reports.push(report("mn-structure", &spec.to_string(), started, outcome));
    }
    Ok(reports)
}

fn check_rigidity_suite(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("rigidity-suite", cfg, |spec, l| {
        let bottom = l.bottom().expect("bounded");
        let top = l.top().expect("bounded");
        let mut bad = Vec::new();
        for fam in [
            FamilySpec::Identity,
            FamilySpec::Constant { a: bottom },
            FamilySpec::Tau,
            FamilySpec::Constant { a: top },
        ] {
            let p = make_family(l, &fam)?;
            if !rigidity_check(l, &p) {
                bad.push(format!("{fam} is not rigid"));
            }
        }
        let mut detail = "identity, bottom/top constants and tau are rigid".to_string();
        if let LatticeSpec::M(n) = spec {
            // Middle-parameterized operators form a single orbit of size n-2.
            let middles = n - 2;
            for fam in [
                FamilySpec::Constant { a: 1 },
                FamilySpec::Psi { a: 1 },
                FamilySpec::Step { a: 1, b: bottom },
                FamilySpec::PAtom { a: 1 },
            ] {
                let p = make_family(l, &fam)?;
                let got = orbit_size(l, &p);
                if got != middles {
                    bad.push(format!("{fam}: orbit size {got}, expected {middles}"));
                }
            }
            detail = format!("{detail}; middle-parameterized orbits have size {middles}");
        }
        Ok(if bad.is_empty() {
            Ok(detail)
        } else {
            Err(bad.join("; "))
        })
    })
}

// ---------------------------------------------------------------------------
// derived structures
// ---------------------------------------------------------------------------

fn check_novikov_suite(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("novikov-suite", cfg, |_, l| {
        if !l.is_distributive() {
            // Hypothesis violations must be rejected at construction.
            let d = make_family(
                l,
                &FamilySpec::Inner {
                    u: l.bottom().expect("bounded"),
                },
            )?;
            return Ok(match novikov_table(l, &d) {
                Err(Error::NotDistributive) => {
                    Ok("not distributive; table construction rejected".to_string())
                }
                other => Err(format!(
                    "expected a distributivity rejection, got {other:?}"
                )),
            });
        }
        let mut bad = Vec::new();
        let meet_table = BinOpTable::from_fn(l, |x, y| l.meet(x, y));
        if let Err(v) = check_novikov(&meet_table) {
            bad.push(format!("meet table: {v}"));
        }
        let ido = enumerate(l, Predicate::IsotoneDerivation, &cfg.limits)?;
        for d in &ido {
            let t = novikov_table(l, d)?;
            if let Err(v) = check_novikov(&t) {
                bad.push(format!("derivation {:?}: {v}", d.image()));
            }
            if let Err(v) = novikov_homomorphism_check(l, d)? {
                bad.push(format!(
                    "derivation {:?}: homomorphism fails: {v}",
                    d.image()
                ));
            }
        }
        Ok(if bad.is_empty() {
            Ok(format!(
                "meet table and {} derived tables are Novikov",
                ido.len()
            ))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_star_semiring_suite(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("star-semiring-suite", cfg, |_, l| {
        if !l.is_distributive() {
            let p = LatticeMap::identity(l);
            return Ok(match star_table(l, &p) {
                Err(Error::NotDistributive) => {
                    Ok("not distributive; table construction rejected".to_string())
                }
                other => Err(format!(
                    "expected a distributivity rejection, got {other:?}"
                )),
            });
        }
        let rbo = enumerate(l, Predicate::Rbo, &cfg.limits)?;
        let mut bad = Vec::new();
        for p in &rbo {
            if let Err(v) = check_star_semiring(l, p)? {
                bad.push(format!("operator {:?}: {v}", p.image()));
            }
        }
        Ok(if bad.is_empty() {
            Ok(format!(
                "{} operators yield associative semirings",
                rbo.len()
            ))
        } else {
            Err(bad.join("; "))
        })
    })
}

fn check_dendriform_suite(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    sweep("dendriform-suite", cfg, |_, l| {
        if !l.is_distributive() {
            let p = LatticeMap::identity(l);
            return Ok(match dendriform_tables(l, &p) {
                Err(Error::NotDistributive) => {
                    Ok("not distributive; table construction rejected".to_string())
                }
                other => Err(format!(
                    "expected a distributivity rejection, got {other:?}"
                )),
            });
        }
        let rbo = enumerate(l, Predicate::Rbo, &cfg.limits)?;
        let mut bad = Vec::new();
        for p in &rbo {
            if let Err(v) = check_dendriform(l, p)? {
                bad.push(format!("operator {:?}: {v}", p.image()));
            }
            // The two dendriform halves must collapse onto the star product.
            let (prec, succ) = dendriform_tables(l, p)?;
            let star = star_table(l, p)?;
            for x in l.elements() {
                for y in l.elements() {
                    if l.join(prec.get(x, y), succ.get(x, y)) != star.get(x, y) {
                        bad.push(format!(
                            "operator {:?}: halves do not sum to the star product at ({x},{y})",
                            p.image()
                        ));
                    }
                }
            }
        }
        Ok(if bad.is_empty() {
            Ok(format!(
                "{} operators yield dendriform semirings",
                rbo.len()
            ))
        } else {
            Err(bad.join("; "))
        })
    })
}

// ---------------------------------------------------------------------------
// oracle equivalence and pinned regressions
// ---------------------------------------------------------------------------

fn check_oracle_crosscheck(cfg: &CheckConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for spec in &cfg.catalog {
        let l = spec.build()?;
        if l.size() > ORACLE_CROSSCHECK_MAX.min(cfg.limits.full_scan) {
            continue;
        }
        let started = Instant::now();
        let mut bad = Vec::new();
        let mut checked = 0usize;
        for pred in Predicate::ALL_PREDICATES {
            let fast = enumerate(&l, pred, &cfg.limits)?;
            let slow = brute_force_oracle(&l, pred, &cfg.limits)?;
            if fast != slow {
                bad.push(format!(
                    "{pred}: enumerate ({}) and oracle ({}) disagree",
                    fast.len(),
                    slow.len()
                ));
            }
            checked += fast.len();
        }
        let outcome = if bad.is_empty() {
            Ok(format!(
                "all predicates agree with the oracle ({checked} operators)"
            ))
        } else {
            Err(bad.join("; "))
        };
        reports.push(report(
            "oracle-crosscheck",
            &spec.to_string(),
            started,
            outcome,
        ));
    }

    for entry in &pinned_counts().entries {
        let started = Instant::now();
        let spec = LatticeSpec::parse(&entry.spec)?;
        let l = spec.build()?;
        let actual = if entry.predicate == "automorphisms" {
            l.automorphisms().len()
        } else {
            let pred = Predicate::parse(&entry.predicate)?;
            let via_enumerate = enumerate(&l, pred, &cfg.limits)?.len();
            // Within the scan limit the oracle re-derives the pinned value.
            if l.size() <= cfg.limits.full_scan {
                let via_oracle = brute_force_oracle(&l, pred, &cfg.limits)?.len();
                if via_oracle != via_enumerate {
                    reports.push(report(
                        "oracle-crosscheck",
                        &entry.spec,
                        started,
                        Err(format!(
                            "pinned {}: enumerate {via_enumerate} vs oracle {via_oracle}",
                            entry.predicate
                        )),
                    ));
                    continue;
                }
            }
            via_enumerate
        };
        let outcome = if actual == entry.count {
            Ok(format!(
                "pinned {} = {} re-verified",
                entry.predicate, entry.count
            ))
        } else {
            Err(format!(
                "pinned {} = {}, recomputed {actual}",
                entry.predicate, entry.count
            ))
        };
        reports.push(report("oracle-crosscheck", &entry.spec, started, outcome));
    }
    Ok(reports)
}
