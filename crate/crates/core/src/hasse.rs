//! Covering diagrams of the order induced by a preorder.
//!
//! Covering relations are only well defined on partial orders, so points
//! are first condensed into classes of mutually related points; on a T0
//! preorder every class is a singleton and the diagram is the familiar
//! one on the points themselves.

use crate::part::Part;
use crate::preorder::Preorder;
use crate::shape::Shape;

/// The covering-edge diagram of a preorder's condensation. Classes are
/// held in canonical part order; an edge `(lower, upper)` holds indices
/// into the class list and means the upper class covers the lower one,
/// with no class strictly between.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    shape: Shape,
    classes: Vec<Part>,
    edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Condensation classes in canonical order; every point is in exactly
    /// one class.
    pub fn classes(&self) -> &[Part] {
        &self.classes
    }

    /// Covering edges as `(lower, upper)` indices into [`Self::classes`],
    /// sorted by that order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Covering edges rendered as class-name pairs.
    pub fn edge_names(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(lower, upper)| (self.class_name(lower), self.class_name(upper)))
            .collect()
    }

    /// Display name of a class: the bare label for a singleton, the
    /// brace-joined member labels otherwise.
    pub fn class_name(&self, class: usize) -> String {
        let part = self.classes[class];
        if part.cardinality() == 1 {
            let p = part.members().next().expect("nonempty class");
            self.shape.label(p).to_owned()
        } else {
            self.shape.part_string(part)
        }
    }
}

/// Condenses `preorder` into classes of mutually related points and
/// returns the covering edges of the resulting partial order.
pub fn hasse_diagram(preorder: &Preorder) -> HasseDiagram {
    let n = preorder.shape().point_count();
    let mut classes: Vec<Part> = (0..n)
        .map(|p| preorder.down_set(p).intersection(preorder.up_set(p)))
        .collect();
    classes.sort();
    classes.dedup();

    // Any member represents its class in the condensed order.
    let rep: Vec<usize> = classes
        .iter()
        .map(|c| c.members().next().expect("nonempty class"))
        .collect();
    let strictly_less = |a: usize, b: usize| a != b && preorder.le(rep[a], rep[b]);

    let mut edges = Vec::new();
    for lower in 0..classes.len() {
        for upper in 0..classes.len() {
            if !strictly_less(lower, upper) {
                continue;
            }
            let covered = (0..classes.len())
                .any(|mid| strictly_less(lower, mid) && strictly_less(mid, upper));
            if !covered {
                edges.push((lower, upper));
            }
        }
    }
    HasseDiagram {
        shape: preorder.shape().clone(),
        classes,
        edges,
    }
}
