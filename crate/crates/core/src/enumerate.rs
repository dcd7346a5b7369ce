//! Exhaustive enumeration of all labeled topologies on a few points.

use thiserror::Error;

use crate::analysis::is_t0;
use crate::part::Part;
use crate::preorder::Preorder;
use crate::shape::Shape;
use crate::topology::Topology;

/// Cap for the preorder-scan route; the candidate space is `2^(n²-n)`.
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// Cap for the family-scan route; the candidate space is `2^(2^n)`.
pub const MAX_FAMILY_SCAN_POINTS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration supports 1..={max} points, got {n}")]
    UnsupportedSize { n: usize, max: usize },
}

fn enumeration_shape(n: usize) -> Shape {
    Shape::new((1..=n).map(|i| format!("p{i}"))).expect("generated labels are valid")
}

/// Deterministic enumeration order: open count, then the canonical order
/// of the open families.
fn sort_canonically(topologies: &mut [Topology]) {
    topologies.sort_by(|a, b| (a.open_count(), a.opens()).cmp(&(b.open_count(), b.opens())));
}

/// Every distinct labeled topology on `n` points (labels `p1..pn`),
/// exactly once, obtained by scanning all reflexive relation matrices for
/// transitivity and taking the induced order topology of each survivor.
/// With `t0_only`, only topologies satisfying T0 are yielded.
///
/// Topologies and preorders are in bijection here, so distinctness comes
/// for free; [`enumerate_topologies_by_family_scan`] checks the same sets
/// from the opposite direction.
pub fn enumerate_topologies(
    n: usize,
    t0_only: bool,
) -> Result<impl Iterator<Item = Topology>, EnumerationError> {
    if n == 0 || n > MAX_ENUMERATION_POINTS {
        return Err(EnumerationError::UnsupportedSize {
            n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    let shape = enumeration_shape(n);
    // Bit b of a candidate toggles the off-diagonal cell free_cells[b],
    // where (q, p) set means q ⪯ p.
    let free_cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|q| (0..n).filter(move |&p| p != q).map(move |p| (q, p)))
        .collect();
    let mut below = vec![0u32; n];
    let mut topologies = Vec::new();
    for candidate in 0u64..(1u64 << free_cells.len()) {
        for (p, row) in below.iter_mut().enumerate() {
            *row = 1 << p;
        }
        for (bit, &(q, p)) in free_cells.iter().enumerate() {
            if candidate >> bit & 1 == 1 {
                below[p] |= 1 << q;
            }
        }
        if !is_transitive(&below) {
            continue;
        }
        let order = Preorder::from_below_unchecked(shape.clone(), below.clone());
        let topology = order.to_topology();
        if !t0_only || is_t0(&topology) {
            topologies.push(topology);
        }
    }
    sort_canonically(&mut topologies);
    Ok(topologies.into_iter())
}

fn is_transitive(below: &[u32]) -> bool {
    below.iter().all(|&row| {
        let mut q = row;
        loop {
            if q == 0 {
                return true;
            }
            let i = q.trailing_zeros() as usize;
            if below[i] & !row != 0 {
                return false;
            }
            q &= q - 1;
        }
    })
}

/// Every distinct labeled topology on `n` points by direct scan of all
/// `2^(2^n)` part families, keeping those that satisfy the topology
/// axioms. Independent of the preorder route and only feasible for
/// `n <= 4`.
pub fn enumerate_topologies_by_family_scan(
    n: usize,
) -> Result<impl Iterator<Item = Topology>, EnumerationError> {
    if n == 0 || n > MAX_FAMILY_SCAN_POINTS {
        return Err(EnumerationError::UnsupportedSize {
            n,
            max: MAX_FAMILY_SCAN_POINTS,
        });
    }
    let shape = enumeration_shape(n);
    let part_count = 1usize << n;
    let full = (part_count - 1) as u32;
    let mut topologies = Vec::new();
    // A family is a bit set over part masks: bit m set means the part
    // with member mask m belongs to the family.
    for family in 0u64..(1u64 << part_count) {
        if family & 1 == 0 || family >> full & 1 == 0 {
            continue;
        }
        let members: Vec<u32> = (0..part_count as u32)
            .filter(|&m| family >> m & 1 == 1)
            .collect();
        let closed = members.iter().enumerate().all(|(i, &a)| {
            members[i..]
                .iter()
                .all(|&b| family >> (a | b) & 1 == 1 && family >> (a & b) & 1 == 1)
        });
        if closed {
            let opens = members.into_iter().map(Part::from_bits).collect();
            topologies.push(Topology::from_opens_unchecked(shape.clone(), opens));
        }
    }
    sort_canonically(&mut topologies);
    Ok(topologies.into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_four_points() {
        let all: Vec<usize> = (1..=4)
            .map(|n| enumerate_topologies(n, false).unwrap().count())
            .collect();
        assert_eq!(all, vec![1, 4, 29, 355]);
        let t0: Vec<usize> = (1..=4)
            .map(|n| enumerate_topologies(n, true).unwrap().count())
            .collect();
        assert_eq!(t0, vec![1, 3, 19, 219]);
    }

    #[test]
    fn single_point_has_one_topology() {
        let mut topologies = enumerate_topologies(1, false).unwrap();
        let only = topologies.next().unwrap();
        assert_eq!(only.open_count(), 2);
        assert!(topologies.next().is_none());
    }

    #[test]
    fn routes_agree_on_three_points() {
        let by_preorder: Vec<Topology> = enumerate_topologies(3, false).unwrap().collect();
        let by_scan: Vec<Topology> = enumerate_topologies_by_family_scan(3).unwrap().collect();
        assert_eq!(by_preorder, by_scan);
        assert_eq!(by_preorder.len(), 29);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let mut seen = std::collections::HashSet::new();
        for topology in enumerate_topologies(3, false).unwrap() {
            assert!(seen.insert(topology.opens().to_vec()));
        }
    }

    #[test]
    fn unsupported_sizes_are_rejected() {
        assert!(matches!(
            enumerate_topologies(6, false),
            Err(EnumerationError::UnsupportedSize { n: 6, max: 5 })
        ));
        assert!(matches!(
            enumerate_topologies(0, false),
            Err(EnumerationError::UnsupportedSize { n: 0, .. })
        ));
        assert!(matches!(
            enumerate_topologies_by_family_scan(5),
            Err(EnumerationError::UnsupportedSize { n: 5, max: 4 })
        ));
    }

    #[test]
    fn t0_filter_matches_predicate() {
        for topology in enumerate_topologies(3, true).unwrap() {
            assert!(is_t0(&topology));
        }
    }
}
