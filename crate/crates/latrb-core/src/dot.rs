//! DOT rendering of Hasse diagrams.

use crate::lattice::FiniteLattice;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the Hasse diagram: one node per element (using labels), one edge
/// per cover oriented lower-to-upper, ranked bottom-to-top. Byte-stable for
/// identical input.
pub fn export_dot(l: &FiniteLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in l.elements() {
        out.push_str(&format!("  n{x} [label=\"{}\"];\n", escape(&l.label(x))));
    }
    for &(lo, hi) in l.covers() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::LatticeSpec;

    fn counts(dot: &str) -> (usize, usize) {
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        (nodes, edges)
    }

    #[test]
    fn chain_two_nodes_one_edge() {
        let l = LatticeSpec::Chain(2).build().unwrap();
        assert_eq!(counts(&export_dot(&l)), (2, 1));
    }

    #[test]
    fn n8_has_ten_covers() {
        let l = LatticeSpec::N8.build().unwrap();
        assert_eq!(counts(&export_dot(&l)), (8, 10));
    }

    #[test]
    fn diamond_five_elements_six_covers() {
        let l = LatticeSpec::M(5).build().unwrap();
        assert_eq!(counts(&export_dot(&l)), (5, 6));
    }

    #[test]
    fn byte_stable() {
        let l = LatticeSpec::N8.build().unwrap();
        assert_eq!(export_dot(&l), export_dot(&l));
        let relabeled = LatticeSpec::N8.build().unwrap();
        assert_eq!(export_dot(&l), export_dot(&relabeled));
    }
}
