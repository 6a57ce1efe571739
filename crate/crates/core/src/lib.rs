//! Exact arithmetic for non-associative and hom-associative rings: the
//! Cayley–Dickson tower, structure-constant algebras with a twisting map,
//! Ore extensions, finite-dimensional hom-modules and the octonionic Weyl
//! algebra.

pub mod exactnum;
pub mod homring;
pub mod hommodule;
pub mod linalg;
mod render;
pub mod ring;
pub mod ore;
pub mod weyl;
