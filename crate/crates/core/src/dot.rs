//! Deterministic DOT emission for quivers, extension-compatibility graphs,
//! Gabriel quivers and the exchange structure on tilting sets. Node and edge
//! order is fixed so identical inputs yield byte-identical output.

use crate::algebra::GabrielQuiver;
use crate::cluster::{ClusterObject, TiltingSet};
use crate::quiver::ValuedQuiver;
use crate::rep::Catalog;

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

/// The quiver itself as a digraph; valued arrows carry their pair as label.
pub fn quiver_dot(q: &ValuedQuiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in 0..q.rank() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", v + 1, v + 1));
    }
    let mut arrows: Vec<_> = q.arrows().to_vec();
    arrows.sort_by_key(|a| (a.from, a.to));
    for a in arrows {
        if a.val == (1, 1) {
            out.push_str(&format!("  v{} -> v{};\n", a.from + 1, a.to + 1));
        } else {
            out.push_str(&format!(
                "  v{} -> v{} [label=\"({},{})\"];\n",
                a.from + 1,
                a.to + 1,
                a.val.0,
                a.val.1
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// The extension-compatibility graph on cluster indecomposables: an
/// undirected edge wherever all extensions vanish.
pub fn ext_graph_dot(cat: &Catalog, objects: &[ClusterObject], ext: &[Vec<usize>]) -> String {
    let _ = cat;
    let mut out = String::from("graph ext_compatibility {\n");
    for (i, o) in objects.iter().enumerate() {
        out.push_str(&format!("  o{} [label=\"{}\"];\n", i, escape(&o.describe())));
    }
    for i in 0..objects.len() {
        for j in i + 1..objects.len() {
            if ext[i][j] == 0 && ext[j][i] == 0 {
                out.push_str(&format!("  o{i} -- o{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// The exchange structure: tilting sets joined when they share all but one
/// indecomposable.
pub fn exchange_dot(sets: &[TiltingSet]) -> String {
    let mut out = String::from("graph exchange {\n");
    for (i, s) in sets.iter().enumerate() {
        out.push_str(&format!("  t{} [label=\"{}\"];\n", i, escape(&s.describe())));
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let shared = sets[i]
                .objects
                .iter()
                .filter(|o| sets[j].objects.contains(o))
                .count();
            if shared + 1 == sets[i].objects.len() {
                out.push_str(&format!("  t{i} -- t{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// A Gabriel quiver as a digraph, with one edge line per arrow.
pub fn gabriel_dot(name: &str, g: &GabrielQuiver) -> String {
    let mut out = format!("digraph {name} {{\n");
    for v in 0..g.vertex_count {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", v + 1, v + 1));
    }
    for (i, j, count) in g.arrows() {
        for _ in 0..count {
            out.push_str(&format!("  v{} -> v{};\n", i + 1, j + 1));
        }
    }
    out.push_str("}\n");
    out
}
