//! Minimal bases: the smallest families of opens that generate a topology.

use crate::part::Part;
use crate::shape::Shape;
use crate::topology::{union_closure, Topology};

/// A family of open parts, including the empty part, whose subcollection
/// unions generate a topology. Produced by [`Topology::minimal_basis`], the
/// elements are the distinct minimal open parts and no proper subfamily
/// (beyond dropping the empty part) generates the same topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    shape: Shape,
    elements: Vec<Part>,
}

impl Basis {
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Elements in canonical order, the empty part first.
    pub fn elements(&self) -> &[Part] {
        &self.elements
    }

    /// The topology generated by all subcollection unions of the elements.
    pub fn generate(&self) -> Topology {
        Topology::from_opens_unchecked(self.shape.clone(), union_closure(&self.elements))
    }
}

impl Topology {
    /// The unique minimal basis: the distinct minimal open parts of all
    /// points, together with the empty part.
    pub fn minimal_basis(&self) -> Basis {
        let mut elements: Vec<Part> = (0..self.shape().point_count())
            .map(|p| self.minimal_open_part(p).expect("index in range"))
            .collect();
        elements.push(Part::EMPTY);
        elements.sort();
        elements.dedup();
        Basis {
            shape: self.shape().clone(),
            elements,
        }
    }
}
