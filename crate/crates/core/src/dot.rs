//! DOT rendering of Hasse diagrams.

use crate::hasse::HasseDiagram;

fn quoted(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders a Hasse diagram as a DOT digraph: one node per condensation
/// class and one `"<lower>" -> "<upper>";` line per covering edge,
/// oriented bottom-to-top so lesser classes sit lower on the page.
pub fn hasse_to_dot(diagram: &HasseDiagram) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for class in 0..diagram.classes().len() {
        out.push_str("  ");
        out.push_str(&quoted(&diagram.class_name(class)));
        out.push_str(";\n");
    }
    for (lower, upper) in diagram.edge_names() {
        out.push_str("  ");
        out.push_str(&quoted(&lower));
        out.push_str(" -> ");
        out.push_str(&quoted(&upper));
        out.push_str(";\n");
    }
    out.push_str("}\n");
    out
}
