//! Exact computations in untwisted affine root systems: finite and affine Weyl
//! groups, inversion sets, real biconvex sets and their `(K, u, y)`
//! parametrization, and infinite reduced words with the Weyl group action.

pub mod affine;
pub mod biconvex;
pub mod cartan;
pub mod error;
pub mod finweyl;
pub mod vector;
pub mod verify;
pub mod words;

pub use cartan::{root_system, CartanData, CartanType, RootSystem, Sign, SubSystem};
pub use error::{Error, Result};
pub use vector::{RootVec, Subset, MAX_RANK};
