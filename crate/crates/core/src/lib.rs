//! Representation-theoretic machinery behind the stable-rationality levels of
//! quotients `V/G` for classical groups and `G2`: exact dimensions and weight
//! multiplicities, branching laws, E/R tables, level certifiers, Weyl-orbit
//! counting for `O_{2n}` and a small exterior-algebra kit.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod error;
pub mod group;
pub mod roots;
pub mod weyl;
pub mod freudenthal;
pub mod partition;
pub mod branching;
pub mod classify;
pub mod reduction;
pub mod orbits;
pub mod harmonic;

pub use error::{Error, Result};
pub use group::{DominantWeight, Family, GroupDesc, Label, RepSum};
