//! Toggle-group dynamics on order ideals of posets embedded in the plane.

// Grid code indexes several arrays by the same coordinates.
#![allow(clippy::needless_range_loop)]

pub mod bijections;
pub mod bitset;
pub mod cli;
pub mod csp;
pub mod error;
pub mod families;
pub mod poset;
pub mod toggles;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use poset::{LinearExtension, OrderIdeal, Poset, DEFAULT_CAP};
