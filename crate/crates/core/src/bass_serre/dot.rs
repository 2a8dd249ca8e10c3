use std::fmt::Write;

use super::graph::{GraphOfGroups, Side};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph: boxes for `A`-side vertices, ellipses for `B`-side,
/// double outline on nonterminal vertices. Output follows the input order.
pub fn dot_export(g: &GraphOfGroups) -> String {
    let nonterminal = g.nonterminal_vertices();
    let mut out = String::from("digraph G {\n");
    if !g.vertices.is_empty() {
        out.push_str("  rankdir=LR;\n");
    }
    for v in &g.vertices {
        let shape = match v.side {
            Some(Side::A) => "box",
            Some(Side::B) => "ellipse",
            None => "circle",
        };
        let mut attrs = format!("label={}, shape={shape}", quote(&v.group.name));
        if nonterminal.contains(&v.id.as_str()) {
            attrs.push_str(", peripheries=2, class=\"nonterminal\"");
        }
        writeln!(out, "  {} [{attrs}];", quote(&v.id)).unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "  {} -> {} [label={}, id={}];",
            quote(&e.from),
            quote(&e.to),
            quote(&e.group.name),
            quote(&e.id)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
