//! Ideal structure of Leavitt path algebras `L_K(E)` of finite graphs.
//!
//! Everything is computed at the level of representations: graded ideals are
//! named by admissible pairs `(H, S)`, and an arbitrary ideal is a graded
//! part together with polynomial generators on exitless cycles of the
//! quotient graph.

pub mod corpus;
pub mod error;
pub mod graph;
pub mod ideals;
pub mod io;
pub mod lattice;
pub mod laurent;
pub mod oracles;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Check, Cycle, Graph, Multiplicity, VertexClass, VertexSet};
pub use ideals::IdealRep;
pub use lattice::{AdmissiblePair, PairLattice, QuotientGraph};
pub use laurent::{FieldTag, LaurentPoly};
