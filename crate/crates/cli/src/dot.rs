//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use lpa_core::{Graph, PairLattice};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Nodes in lattice order; primes double-circled, maximals filled.
pub fn hasse(name: &str, g: &Graph, lat: &PairLattice, prime: &[bool], maximal: &[bool]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, p) in lat.elements().iter().enumerate() {
        let mut attrs = vec![format!("label=\"{}\"", escape(&p.display(g).to_string()))];
        if prime[i] {
            attrs.push("shape=doublecircle".into());
        }
        if maximal[i] {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgray".into());
        }
        writeln!(out, "  n{i} [{}];", attrs.join(", ")).unwrap();
    }
    for i in 0..lat.len() {
        for j in lat.upper_covers(i) {
            writeln!(out, "  n{i} -> n{j};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
