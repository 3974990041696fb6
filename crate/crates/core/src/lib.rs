//! Exact-arithmetic structure theory for the rank-one parabolic geometries:
//! root catalogs, Weyl machinery, highest-weight cohomology, integral
//! structure constants, polynomial realizations, and the group-cohomology
//! side. Everything is computed over the rationals; nothing is floated.

pub mod bigcell;
pub mod catalog;
pub mod ce;
pub mod chevalley;
pub mod gamma;
pub mod kostant;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod roots;
pub mod verify;
pub mod weight;
pub mod weyl;

pub use catalog::{AlgebraId, Family, RankOneDatum};
pub use rat::{rat_str, Rat};
pub use weight::Weight;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
