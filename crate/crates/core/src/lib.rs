#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod group;
pub mod hwmodule;
pub mod integrality;
pub mod linalg;
pub mod rational;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Q;
pub use rootdata::{CartanType, RootId, RootSystem};
