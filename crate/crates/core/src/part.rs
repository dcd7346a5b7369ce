//! Parts: subsets of a shape's points, stored as bit masks.

use std::cmp::Ordering;

/// A subset of a shape's points. Bit `i` stands for the point with index
/// `i`, index 0 in the least significant bit. The part relation is subset
/// inclusion, sum is union, product is intersection, and the empty part
/// plays the role of the empty shape.
///
/// `Ord` is the canonical part order used everywhere for deterministic
/// output: ascending cardinality, ties broken by ascending bit value. It is
/// a total order and deliberately not the subset relation; use
/// [`Part::is_subset_of`] for that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part(u32);

impl Part {
    pub const EMPTY: Part = Part(0);

    pub(crate) fn from_bits(bits: u32) -> Part {
        Part(bits)
    }

    pub(crate) fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        index < 32 && self.0 >> index & 1 == 1
    }

    pub fn is_subset_of(self, other: Part) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Part) -> Part {
        Part(self.0 | other.0)
    }

    pub fn intersection(self, other: Part) -> Part {
        Part(self.0 & other.0)
    }

    /// Points of `self` not in `other`.
    pub fn minus(self, other: Part) -> Part {
        Part(self.0 & !other.0)
    }

    /// Member indices in ascending order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }
}

impl Ord for Part {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.count_ones(), self.0).cmp(&(other.0.count_ones(), other.0))
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
