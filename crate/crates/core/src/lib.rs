//! Exact tropical (min-plus) linear algebra and tropical convex geometry for
//! finite-type single-agent mechanism design.
//!
//! The crate decides incentive compatibility of outcome functions, computes
//! the full set of incentive-compatible payments as a polytrope, tests weak
//! monotonicity, revenue equivalence and realizability of candidate
//! allocation matrices, and enumerates every IC outcome function of a finite
//! type multiset together with the basic cells of its hyperplane arrangement.
//!
//! Everything is computed over arbitrary-precision rationals: the geometric
//! predicates (sector membership, covectors, tropical singularity) all hinge
//! on exact equality, so no floating point is used anywhere.
//!
//! Module map:
//! - [`rational`]: exact scalar type, parsing and canonical display
//! - [`tropical`]: square matrices, minimum cycle mean (Karp), Kleene
//!   closure (Floyd–Warshall), critical graphs
//! - [`graph`]: directed graphs and strongly connected components
//! - [`polytrope`]: points of tropical affine space and difference-constraint
//!   solution sets (eigenspaces, payment sets, basic cells)
//! - [`geometry`]: exact planar geometry and Hausdorff distance for m = 3
//! - [`mechanism`]: allocation matrices, IC/weak-monotonicity/revenue
//!   equivalence tests, realizability and realization
//! - [`arrangement`]: covectors, genericity, exhaustive enumeration of IC
//!   outcome functions and basic cells, generic perturbations and the
//!   Hausdorff convergence harness

pub mod arrangement;
pub mod geometry;
pub mod graph;
pub mod mechanism;
pub mod polytrope;
pub mod rational;
pub mod tropical;

pub use arrangement::{
    basic_cells, covector, enumerate_ic_outcomes, generic_perturbation, is_generic,
    is_re_type_space, ArrangementError, BasicCell, BasicCellSet, Covector, EnumerationOptions,
};
pub use geometry::{hausdorff_distance_2d, HausdorffDistance, HausdorffError, PlanePoint};
pub use graph::DiGraph;
pub use mechanism::{
    allocation_matrix, boundary_slacks, graph_of_p, ic_payments, is_ic, is_realizable,
    is_revenue_equivalent_mechanism, is_weakly_monotone, realize, sector_membership,
    MechanismError, NotRealizable, OutcomeFunction, SectorMembership, TypeSpace,
};
pub use polytrope::{Point, Polytrope};
pub use rational::Rational;
pub use tropical::{NegativeCycle, SquareMatrix};
