//! Classification of finite directed graphs by the algebraic properties of
//! their Leavitt path algebras, the associated Lie algebras and talented
//! monoids.
//!
//! Every verdict is computed from the graph combinatorially. Where a property
//! has both a graph-level and a monoid-level characterization, both are
//! implemented independently so they can be checked against each other.

pub mod closure;
pub mod corpus;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod lie;
pub mod linalg;
pub mod monoid;
pub mod random;
pub mod report;
pub mod suite;
pub mod vertex_set;

pub use closure::{hsat_closure, hsat_lattice, HsatLattice, LatticeConfig, LatticeMode};
pub use cycles::{gk_dimension, Cycle, GkDimension, GkValue};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphBuilder, VertexClassification};
pub use lie::{LieSimpleVerdict, LieVerdict, VertexWeightVector};
pub use linalg::FieldChar;
pub use monoid::{CompositionSeries, MonoidElement, QuotientType, TriState};
pub use report::ClassificationReport;
pub use vertex_set::VertexSet;
