//! Acceptance suite: every release-gating criterion as one test, each
//! printing a single pass line with its measured numbers (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::collections::HashSet;
use std::time::{Duration, Instant};

use latrb_core::catalog::{default_catalog, LatticeSpec};
use latrb_core::checks::{pinned_counts, run_check, CheckConfig};
use latrb_core::classify::{classify, diamond_structure_report};
use latrb_core::counts;
use latrb_core::derived::{
    check_dendriform, check_novikov, check_star_semiring, novikov_homomorphism_check, novikov_table,
};
use latrb_core::enumerate::{brute_force_oracle, enumerate, Limits, Predicate};
use latrb_core::families::{make_family, FamilySpec};
use latrb_core::lattice::sublattice_embedding;
use latrb_core::ops::RbAxiom;

fn limits() -> Limits {
    Limits::default()
}

fn assert_within(elapsed: Duration, budget_secs: u64, what: &str) {
    assert!(
        elapsed < Duration::from_secs(budget_secs),
        "{what} took {elapsed:?}, budget {budget_secs}s"
    );
}

/// Criterion 1: |RBO(chain(n))| = F(2n) = 1, 3, 8, 21, 55, 144 for n = 1..6,
/// via both the backtracking enumerator and the brute-force oracle; < 10 s.
#[test]
fn criterion_01_fibonacci_chain_counts() {
    let started = Instant::now();
    let expected = [1usize, 3, 8, 21, 55, 144];
    let mut got = Vec::new();
    for n in 1..=6 {
        let l = LatticeSpec::Chain(n).build().unwrap();
        let fast = enumerate(&l, Predicate::Rbo, &limits()).unwrap();
        let slow = brute_force_oracle(&l, Predicate::Rbo, &limits()).unwrap();
        assert_eq!(fast, slow, "chain:{n}: enumerator and oracle disagree");
        assert_eq!(fast.len(), expected[n - 1], "chain:{n}");
        assert_eq!(fast.len() as u64, counts::chain_rbo_count(n), "chain:{n}");
        got.push(fast.len());
    }
    assert_within(started.elapsed(), 10, "criterion 1");
    println!(
        "criterion 01 PASS: chain rbo counts {got:?} in {:?}",
        started.elapsed()
    );
}

/// Criterion 2: on chains 1..6 the class count equals the operator count and
/// every orbit is a singleton.
#[test]
fn criterion_02_chain_classification() {
    let started = Instant::now();
    for n in 1..=6 {
        let l = LatticeSpec::Chain(n).build().unwrap();
        let ops = enumerate(&l, Predicate::Rbo, &limits()).unwrap();
        let c = classify(&l, &ops).unwrap();
        assert_eq!(c.class_count, ops.len(), "chain:{n}");
        assert!(c.classes.iter().all(|cl| cl.orbit_size == 1), "chain:{n}");
    }
    println!(
        "criterion 02 PASS: chains 1..6 classify into singleton orbits in {:?}",
        started.elapsed()
    );
}

/// Criterion 3: |RBO(M_n)| = 8, 14, 19, 30, 49 and class counts
/// 8, 9, 9, 10, 11 for n = 3..7; < 30 s.
#[test]
fn criterion_03_diamond_counts_and_classes() {
    let started = Instant::now();
    let expected_ops = [8usize, 14, 19, 30, 49];
    let expected_classes = [8usize, 9, 9, 10, 11];
    for n in 3..=7 {
        let l = LatticeSpec::M(n).build().unwrap();
        let ops = enumerate(&l, Predicate::Rbo, &limits()).unwrap();
        assert_eq!(ops.len(), expected_ops[n - 3], "m:{n} operator count");
        assert_eq!(ops.len() as u64, counts::diamond_rbo_count(n), "m:{n}");
        let c = classify(&l, &ops).unwrap();
        assert_eq!(c.class_count, expected_classes[n - 3], "m:{n} class count");
        assert_eq!(
            c.class_count as u64,
            counts::diamond_class_count(n),
            "m:{n}"
        );
    }
    assert_within(started.elapsed(), 30, "criterion 3");
    println!(
        "criterion 03 PASS: diamond counts {expected_ops:?}, classes {expected_classes:?} in {:?}",
        started.elapsed()
    );
}

/// Criterion 4: the per-case census of RBO(M_n) matches the closed-form
/// decomposition for n = 4..6: constants n; two-fixpoint 7 (n=4) or 2n-3;
/// three-fixpoint n-2; large-fix 2^(n-2)-n; identity 1.
#[test]
fn criterion_04_diamond_case_census() {
    let started = Instant::now();
    for n in 4..=6usize {
        let census = diamond_structure_report(n, &limits()).unwrap();
        assert!(census.ok(), "m:{n} violations: {:?}", census.violations);
        let expected_two_fix = if n == 4 { 7 } else { 2 * n - 3 };
        assert_eq!(census.constants, n, "m:{n} constants");
        assert_eq!(
            census.two_fixpoint_total(),
            expected_two_fix,
            "m:{n} two-fixpoint"
        );
        assert_eq!(census.fix_bottom_middle_top, n - 2, "m:{n} three-fixpoint");
        assert_eq!(census.fix_large, (1 << (n - 2)) - n, "m:{n} large-fix");
        assert_eq!(census.identity, 1, "m:{n} identity");
        assert_eq!(
            census.total,
            census.constants + expected_two_fix + (n - 2) + ((1 << (n - 2)) - n) + 1,
            "m:{n} total"
        );
    }
    println!(
        "criterion 04 PASS: diamond case census matches for n=4..6 in {:?}",
        started.elapsed()
    );
}

/// Criterion 5: structural equivalences over the full catalog, exhaustively:
/// chain ⟺ RBO = IEO; distributive ⟺ every inner derivation Rota-Baxter;
/// the three-way nonmodular-witness equivalence; < 60 s total.
#[test]
fn criterion_05_structural_equivalences() {
    let started = Instant::now();
    let pattern = LatticeSpec::N8.build().unwrap();
    for spec in default_catalog() {
        let l = spec.build().unwrap();

        let rbo = enumerate(&l, Predicate::Rbo, &limits()).unwrap();
        let ieo = enumerate(&l, Predicate::IsotoneIdempotent, &limits()).unwrap();
        assert_eq!(rbo == ieo, l.is_chain(), "{spec}: chain ⟺ rbo = ieo");

        let all_inner_rb = l.elements().all(|u| {
            make_family(&l, &FamilySpec::Inner { u })
                .unwrap()
                .is_rota_baxter()
        });
        assert_eq!(
            all_inner_rb,
            l.is_distributive(),
            "{spec}: distributive ⟺ inner rbo"
        );

        let weak_modular = l.weak_modular_identity();
        let all_psi_rb = l.elements().all(|a| {
            make_family(&l, &FamilySpec::Psi { a })
                .unwrap()
                .is_rota_baxter()
        });
        let no_embedding = sublattice_embedding(&pattern, &l).is_none();
        assert_eq!(
            weak_modular, all_psi_rb,
            "{spec}: identity ⟺ psi membership"
        );
        assert_eq!(
            all_psi_rb, no_embedding,
            "{spec}: psi membership ⟺ no embedding"
        );
        if spec == LatticeSpec::N8 {
            assert!(
                !weak_modular && !all_psi_rb && !no_embedding,
                "n8 fails all three"
            );
        }
    }
    assert_within(started.elapsed(), 60, "criterion 5");
    println!(
        "criterion 05 PASS: structural equivalences hold on the catalog in {:?}",
        started.elapsed()
    );
}

/// Criterion 6: on every catalog lattice of size ≤ 5 the full map-space scan
/// confirms SZASZ = DO ∩ RBO as sets; exact.
#[test]
fn criterion_06_szasz_intersection() {
    let started = Instant::now();
    let mut scanned = 0usize;
    for spec in default_catalog() {
        let l = spec.build().unwrap();
        if l.size() > 5 {
            continue;
        }
        let szasz: Vec<Vec<usize>> = enumerate(&l, Predicate::Szasz, &limits())
            .unwrap()
            .iter()
            .map(|m| m.image().to_vec())
            .collect();
        let derivations: HashSet<Vec<usize>> = enumerate(&l, Predicate::Derivation, &limits())
            .unwrap()
            .iter()
            .map(|m| m.image().to_vec())
            .collect();
        let rbo: Vec<Vec<usize>> = enumerate(&l, Predicate::Rbo, &limits())
            .unwrap()
            .iter()
            .map(|m| m.image().to_vec())
            .collect();
        let intersection: Vec<Vec<usize>> = rbo
            .iter()
            .filter(|f| derivations.contains(*f))
            .cloned()
            .collect();
        assert_eq!(szasz, intersection, "{spec}: szasz = do ∩ rbo");

        // Pointwise over the whole map space as well.
        for f in enumerate(&l, Predicate::All, &limits()).unwrap() {
            assert_eq!(
                f.is_szasz_derivation(),
                f.is_derivation() && f.is_rota_baxter(),
                "{spec}: pointwise at {:?}",
                f.image()
            );
            scanned += 1;
        }
    }
    println!(
        "criterion 06 PASS: szasz intersection over {scanned} maps in {:?}",
        started.elapsed()
    );
}

/// Criterion 7: the family iff-suite over the whole catalog and every
/// admissible parameter pair.
#[test]
fn criterion_07_family_iff_suite() {
    let started = Instant::now();
    for spec in default_catalog() {
        let l = spec.build().unwrap();
        let top = l.top().unwrap();

        for a in l.elements() {
            for b in l.elements() {
                if l.leq(b, a) {
                    let step = make_family(&l, &FamilySpec::Step { a, b }).unwrap();
                    assert!(step.is_rota_baxter(), "{spec}: step:{a}:{b}");
                }
                if l.lt(b, a) {
                    let comparable = l.comparability_below(a, b).unwrap();
                    if a != top {
                        let phi = make_family(&l, &FamilySpec::Phi { a, b }).unwrap();
                        assert_eq!(phi.is_rota_baxter(), comparable, "{spec}: phi:{a}:{b}");
                    }
                    let band = make_family(&l, &FamilySpec::TauAB { a, b }).unwrap();
                    assert_eq!(band.is_rota_baxter(), comparable, "{spec}: tauAB:{a}:{b}");
                }
            }
            let tau_a = make_family(&l, &FamilySpec::TauA { a }).unwrap();
            assert!(tau_a.is_rota_baxter(), "{spec}: tauA:{a}");
        }
        for a in l.atoms() {
            let pinned = make_family(&l, &FamilySpec::PAtom { a }).unwrap();
            assert!(pinned.is_rota_baxter(), "{spec}: patom:{a}");
        }
        if l.is_modular() {
            for a in l.elements() {
                let psi = make_family(&l, &FamilySpec::Psi { a }).unwrap();
                assert!(psi.is_rota_baxter(), "{spec}: psi:{a}");
            }
        }
    }
    // The join-with-b operator fails on the nonmodular witness at (a, c).
    let n8 = LatticeSpec::N8.build().unwrap();
    let psi = make_family(&n8, &FamilySpec::Psi { a: 2 }).unwrap();
    let failure = psi.rota_baxter_failure().expect("psi:2 must fail on n8");
    assert_eq!((failure.x, failure.y), (1, 3));
    assert_eq!(failure.axiom, RbAxiom::MeetEquation);
    println!(
        "criterion 07 PASS: family iff-suite over the catalog in {:?}",
        started.elapsed()
    );
}

/// Criterion 8: Novikov axioms for every (distributive L, isotone derivation),
/// star and dendriform axioms for every (distributive L, Rota-Baxter P);
/// exhaustive triple loops; < 60 s.
#[test]
fn criterion_08_derived_structure_suites() {
    let started = Instant::now();
    let mut novikov_cases = 0usize;
    let mut operator_cases = 0usize;
    for spec in default_catalog() {
        let l = spec.build().unwrap();
        if !l.is_distributive() {
            continue;
        }
        for d in enumerate(&l, Predicate::IsotoneDerivation, &limits()).unwrap() {
            let t = novikov_table(&l, &d).unwrap();
            assert_eq!(
                check_novikov(&t),
                Ok(()),
                "{spec}: novikov for {:?}",
                d.image()
            );
            assert_eq!(
                novikov_homomorphism_check(&l, &d).unwrap(),
                Ok(()),
                "{spec}: homomorphism for {:?}",
                d.image()
            );
            novikov_cases += 1;
        }
        for p in enumerate(&l, Predicate::Rbo, &limits()).unwrap() {
            assert_eq!(
                check_star_semiring(&l, &p).unwrap(),
                Ok(()),
                "{spec}: star for {:?}",
                p.image()
            );
            assert_eq!(
                check_dendriform(&l, &p).unwrap(),
                Ok(()),
                "{spec}: dendriform for {:?}",
                p.image()
            );
            operator_cases += 1;
        }
    }
    assert!(novikov_cases > 0 && operator_cases > 0);
    assert_within(started.elapsed(), 60, "criterion 8");
    println!(
        "criterion 08 PASS: {novikov_cases} derivation cases, {operator_cases} operator cases in {:?}",
        started.elapsed()
    );
}

/// Criterion 9: enumerate and the brute-force oracle produce identical sorted
/// operator lists for every predicate on every catalog lattice of size ≤ 6.
#[test]
fn criterion_09_oracle_equivalence() {
    let started = Instant::now();
    let mut lattices = 0usize;
    for spec in default_catalog() {
        let l = spec.build().unwrap();
        if l.size() > 6 {
            continue;
        }
        for pred in Predicate::ALL_PREDICATES {
            let fast = enumerate(&l, pred, &limits()).unwrap();
            let slow = brute_force_oracle(&l, pred, &limits()).unwrap();
            assert_eq!(fast, slow, "{spec}/{pred}");
        }
        lattices += 1;
    }
    assert!(
        lattices >= 12,
        "expected most of the catalog under the size bound"
    );
    println!(
        "criterion 09 PASS: oracle equivalence on {lattices} lattices in {:?}",
        started.elapsed()
    );
}

/// Criterion 10: the pinned regression values are re-verified exactly, and
/// the registry check that guards them passes.
#[test]
fn criterion_10_pinned_regressions() {
    let started = Instant::now();
    let pinned = pinned_counts();
    let want = |spec: &str, predicate: &str| -> usize {
        pinned
            .entries
            .iter()
            .find(|e| e.spec == spec && e.predicate == predicate)
            .unwrap_or_else(|| panic!("missing pinned entry {spec}/{predicate}"))
            .count
    };

    for spec_text in ["n5", "n8", "bool:3"] {
        let l = LatticeSpec::parse(spec_text).unwrap().build().unwrap();
        let rbo = enumerate(&l, Predicate::Rbo, &limits()).unwrap();
        assert_eq!(rbo.len(), want(spec_text, "rbo"), "{spec_text}");
    }
    let n8 = LatticeSpec::N8.build().unwrap();
    assert_eq!(n8.automorphisms().len(), want("n8", "automorphisms"));

    // The n5 value is also reproducible by the oracle within default limits.
    let n5 = LatticeSpec::N5.build().unwrap();
    assert_eq!(
        brute_force_oracle(&n5, Predicate::Rbo, &limits())
            .unwrap()
            .len(),
        want("n5", "rbo")
    );

    let reports = run_check("oracle-crosscheck", &CheckConfig::default()).unwrap();
    assert!(reports.iter().all(|r| r.passed), "{reports:?}");
    println!(
        "criterion 10 PASS: pinned values re-verified in {:?}",
        started.elapsed()
    );
}

/// The registry mirrors the criteria: every registered check passes on the
/// default configuration.
#[test]
fn registry_runs_green() {
    let started = Instant::now();
    let cfg = CheckConfig::default();
    for id in latrb_core::checks::CHECK_IDS {
        let reports = run_check(id, &cfg).unwrap();
        assert!(!reports.is_empty(), "{id} produced no reports");
        for r in &reports {
            assert!(r.passed, "{id}/{}: {}", r.lattice, r.detail);
        }
    }
    println!(
        "registry PASS: all {} checks green in {:?}",
        latrb_core::checks::CHECK_IDS.len(),
        started.elapsed()
    );
}
