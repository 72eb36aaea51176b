//! Regenerates `data/expected_counts.json`.
//!
//! The pinned counts have no closed form, so they are derived once by the
//! brute-force oracle (full `size^size` scan, direct axiom evaluation, no
//! pruning) and committed with provenance. Run with:
//!
//! ```text
//! cargo run --release -p latrb-core --example regen_expected
//! ```

use latrb_core::catalog::LatticeSpec;
use latrb_core::checks::{PinnedCounts, PinnedEntry};
use latrb_core::enumerate::{brute_force_oracle, Limits, Predicate};

fn main() {
    // The two 8-element lattices need a raised scan limit: 8^8 maps.
    let limits = Limits {
        isotone: 12,
        full_scan: 8,
    };
    let mut entries = Vec::new();

    for spec_text in ["n5", "n8", "bool:3"] {
        let spec = LatticeSpec::parse(spec_text).expect("builtin spec");
        let l = spec.build().expect("builtin lattice");
        let rbo = brute_force_oracle(&l, Predicate::Rbo, &limits).expect("within the raised limit");
        entries.push(PinnedEntry {
            spec: spec_text.to_string(),
            predicate: "rbo".to_string(),
            count: rbo.len(),
            provenance: format!(
                "brute-force oracle: full {0}^{0} map scan with direct axiom evaluation \
                 (examples/regen_expected.rs)",
                l.size()
            ),
        });
        eprintln!("{spec_text}: |rbo| = {}", rbo.len());
    }

    let n8 = LatticeSpec::N8.build().expect("builtin lattice");
    let autos = n8.automorphisms();
    entries.push(PinnedEntry {
        spec: "n8".to_string(),
        predicate: "automorphisms".to_string(),
        count: autos.len(),
        provenance: "exhaustive permutation backtracking over order-isomorphisms \
                     (examples/regen_expected.rs)"
            .to_string(),
    });
    eprintln!("n8: |aut| = {}", autos.len());

    let doc = PinnedCounts { entries };
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/expected_counts.json");
    std::fs::write(path, serde_json::to_string_pretty(&doc).unwrap() + "\n")
        .expect("write expected-counts file");
    eprintln!("wrote {path}");
}
