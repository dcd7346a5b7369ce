//! Separation axioms, discreteness, and connectedness.

use crate::part::Part;
use crate::topology::Topology;

/// T0 separation: distinct points have distinct minimal open parts.
/// Equivalent to the induced preorder being a partial order.
pub fn is_t0(topology: &Topology) -> bool {
    let n = topology.shape().point_count();
    let mut minimal: Vec<Part> = (0..n)
        .map(|p| topology.minimal_open_part(p).expect("index in range"))
        .collect();
    minimal.sort();
    minimal.dedup();
    minimal.len() == n
}

/// Discreteness: the minimal open part of every point is the point itself.
pub fn is_discrete(topology: &Topology) -> bool {
    let shape = topology.shape();
    (0..shape.point_count()).all(|p| {
        topology.minimal_open_part(p).expect("index in range")
            == shape.singleton(p).expect("index in range")
    })
}

/// T1 separation: every point is both open and closed. On finite
/// topologies this coincides with [`is_discrete`]; the two are computed
/// through different criteria and the test suite asserts they agree.
pub fn is_t1(topology: &Topology) -> bool {
    let shape = topology.shape();
    (0..shape.point_count()).all(|p| {
        let singleton = shape.singleton(p).expect("index in range");
        topology.contains_open(singleton) && topology.contains_open(shape.complement(singleton))
    })
}

/// Connectedness: no open other than the empty and full parts has an open
/// complement.
pub fn is_connected(topology: &Topology) -> bool {
    let shape = topology.shape();
    let full = shape.full();
    topology
        .opens()
        .iter()
        .filter(|&&open| !open.is_empty() && open != full)
        .all(|&open| !topology.contains_open(shape.complement(open)))
}

/// Partition of the shape into maximal connected parts, in canonical
/// order. Computed as reachability components of the comparability graph
/// of the induced preorder, which for finite topologies agrees with the
/// clopen-based notion used by [`is_connected`].
pub fn connected_components(topology: &Topology) -> Vec<Part> {
    let order = topology.to_preorder();
    let n = topology.shape().point_count();
    let adjacent: Vec<Part> = (0..n)
        .map(|p| order.down_set(p).union(order.up_set(p)))
        .collect();
    let mut components = Vec::new();
    let mut seen = Part::EMPTY;
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut component = topology.shape().singleton(start).expect("index in range");
        loop {
            let grown = component
                .members()
                .fold(component, |acc, p| acc.union(adjacent[p]));
            if grown == component {
                break;
            }
            component = grown;
        }
        seen = seen.union(component);
        components.push(component);
    }
    components.sort();
    components
}
