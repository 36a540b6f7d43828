//! DOT export of the weak-order graph, following the drawing conventions
//! of the source figure: solid arrows for right moves, dashed for left and
//! one-coordinate moves, red for noncompact, blue for complex stable, and
//! green for closure covers that no move realizes.

use std::fmt::Write;

use orbit_atlas_core::monoid::{ActionLabel, OrbitGraph, RootType};
use orbit_atlas_core::perm::Perm;

/// Letter name of a permutation in degree 3: reduced words in the two
/// generators, written `s` and `t`, with `e` for the identity.
fn letters3(p: &Perm) -> String {
    let word = p.reduced_word();
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|&k| if k == 1 { 's' } else { 't' }).collect()
}

fn node_label(g: &OrbitGraph, v: usize) -> String {
    let p = &g.nodes()[v];
    if g.n() == 3 {
        format!("({},{})", letters3(p.w()), letters3(p.u()))
    } else {
        format!("({},{})", p.w(), p.u())
    }
}

/// Edge label in degree 3: the two simple roots are written α and β, and
/// the root acting on the untwisted second coordinate alone is α².
fn edge_label3(label: ActionLabel, i: usize) -> String {
    match label {
        ActionLabel::Right(k) | ActionLabel::Left(k) => {
            if k == 1 { "α" } else { "β" }.to_string()
        }
        ActionLabel::FirstOnly => (if i == 2 { "α" } else { "β" }).to_string(),
        ActionLabel::SecondOnly => "α²".to_string(),
    }
}

fn edge_style(label: ActionLabel) -> &'static str {
    match label {
        ActionLabel::Right(_) => "solid",
        _ => "dashed",
    }
}

fn edge_color(rt: RootType) -> &'static str {
    match rt {
        RootType::Noncompact => "red",
        RootType::ComplexStable => "blue",
        RootType::RealOrComplexUnstable => "gray",
    }
}

/// Renders the graph as a DOT digraph, byte-deterministically.
pub fn graph_to_dot(g: &OrbitGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph weak_order {\n");
    out.push_str("  // solid = right move, dashed = left or one-coordinate move\n");
    out.push_str("  // red = noncompact, blue = complex stable, green = closure-only cover\n");
    out.push_str("  rankdir = BT;\n");
    out.push_str("  node [shape = plaintext];\n");
    for v in 0..g.nodes().len() {
        writeln!(out, "  n{} [label=\"{}\"];", v, node_label(g, v)).unwrap();
    }
    let max_level = g.levels().iter().copied().max().unwrap_or(0);
    for level in 0..=max_level {
        let row: Vec<String> = (0..g.nodes().len())
            .filter(|&v| g.levels()[v] == level)
            .map(|v| format!("n{}", v))
            .collect();
        writeln!(out, "  {{ rank = same; {}; }}", row.join("; ")).unwrap();
    }
    for e in g.edges() {
        let label = if g.n() == 3 {
            edge_label3(e.label, g.i())
        } else {
            e.label.name()
        };
        writeln!(
            out,
            "  n{} -> n{} [label=\"{}\", style={}, color={}];",
            e.src,
            e.dst,
            label,
            edge_style(e.label),
            edge_color(e.root_type)
        )
        .unwrap();
    }
    for (a, b) in g.closure_only_edges() {
        writeln!(out, "  n{} -> n{} [style=solid, color=green];", a, b).unwrap();
    }
    out.push_str("}\n");
    out
}
