//! Finite topologies on labeled point sets.
//!
//! A [`Shape`] is an ordered finite set of labeled points; its parts are
//! exactly the subsets of those points ([`Part`]). A [`Topology`] is a
//! family of parts that contains the empty and full parts and is closed
//! under pairwise union and intersection. On a finite point set such a
//! topology and a [`Preorder`] on the points are two presentations of the
//! same structure:
//!
//! * a preorder induces the topology whose minimal open part for `p` is
//!   the down-set `{ q : q ⪯ p }`, with opens all unions of those parts
//!   ([`Preorder::to_topology`]);
//! * a topology induces the preorder `q ⪯ p` iff `q` lies in the minimal
//!   open part of `p` ([`Topology::to_preorder`]).
//!
//! The two constructions are mutually inverse, which the test suite checks
//! exhaustively on small point counts.
//!
//! On top of the correspondence the crate provides separation and
//! connectedness analysis ([`analysis`]), continuity checks for point maps
//! ([`continuity`]), covering diagrams of the induced order ([`hasse`]),
//! exhaustive enumeration of all topologies on a few points
//! ([`enumerate`]), builders that induce topologies from directed graphs,
//! derivation traces, and relation matrices ([`build`]), and line-oriented
//! text formats plus DOT output ([`formats`], [`dot`]).
//!
//! ```
//! use pointtopo::{analysis, Preorder, Shape};
//!
//! let shape = Shape::new(["a", "b", "c"]).unwrap();
//! let order = Preorder::closure_from_pairs(&shape, &[("a", "b"), ("b", "c")]).unwrap();
//! let topo = order.to_topology();
//! assert_eq!(topo.open_count(), 4); // 0, {a}, {a,b}, {a,b,c}
//! assert!(analysis::is_t0(&topo));
//! assert!(analysis::is_connected(&topo));
//! assert_eq!(topo.to_preorder(), order);
//! ```

pub mod analysis;
pub mod basis;
pub mod build;
pub mod continuity;
pub mod dot;
pub mod enumerate;
pub mod formats;
pub mod hasse;
pub mod part;
pub mod preorder;
pub mod shape;
pub mod topology;

#[cfg(test)]
pub(crate) mod fixtures;

pub use basis::Basis;
pub use part::Part;
pub use preorder::{Preorder, PreorderError};
pub use shape::{Shape, ShapeError, MAX_POINTS};
pub use topology::{axiom_report, union_closure, AxiomReport, Topology, TopologyError};
