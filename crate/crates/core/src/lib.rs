//! Exact computations with quivers, path algebras and their radicals,
//! Gabriel quivers, Vquivers and finite categories over the rationals.

pub mod adjunction;
pub mod algebra;
pub mod bound;
pub mod category;
pub mod corpus;
pub mod format;
pub mod gallery;
pub mod linalg;
pub mod quiver;
pub mod repcat;
pub mod vquiver;

pub use adjunction::{AdjunctionError, GabrielVquiver};
pub use algebra::{AlgebraError, AlgebraHom, SCAlgebra};
pub use bound::{BoundError, RelationSet};
pub use category::{CategoryError, FinCategory, FinFunctor, Poset};
pub use format::FormatError;
pub use gallery::{run_gallery, GalleryItem};
pub use linalg::{LinalgError, Matrix, Scalar, Subspace, Vector};
pub use quiver::{Path, Quiver, QuiverError};
pub use repcat::{AlgebraModule, QuiverRep, RepError};
pub use vquiver::{Vquiver, VquiverError, VquiverMap};
