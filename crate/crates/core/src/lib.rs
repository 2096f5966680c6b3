//! Exact computation of Milnor and Tjurina numbers of matrix singularities.
//!
//! The crate works over the rationals. Local algebra uses standard bases for a local
//! degree order (computed from homogenized generators), global algebra Buchberger's
//! algorithm.

pub mod complexes;
pub mod dim;
pub mod error;
pub mod families;
pub mod groebner;
pub mod invariants;
pub mod matalg;
pub mod poly;

pub use dim::Dim;
pub use error::{Error, Result};
pub use families::{catalog, parse_family, parse_poly, FamilySpec};
pub use groebner::{ModuleBasis, MonomialOrder};
pub use invariants::{analyze, verify_identity, Check, Germ, IdentityId, InvariantReport, Verdict};
pub use matalg::{MatrixFamily, MatrixKind, PolyMatrix};
pub use poly::{ExpVec, Poly, SubstitutionMap};
