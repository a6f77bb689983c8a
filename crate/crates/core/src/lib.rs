//! Exact-arithmetic toolkit for tensor-product multiplicities of simple
//! algebraic groups and the orbit geometry they control: primitivity and
//! invariant-freeness of dominant-weight tuples, open orbits in multiple
//! flag varieties and quiver representation spaces, separation indices of
//! reflection groups, and the supporting rational polyhedral geometry.

pub mod rat;
pub mod linalg;
pub mod lp;
pub mod rootsys;
pub mod charcache;
pub mod chars;
pub mod cones;
pub mod sep;
pub mod quiver;
pub mod flagorbit;

pub use rootsys::{DominantWeight, Family, RootSystem, SimpleType, WeylElement};
