pub mod actions;
pub mod classify;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod parabolic;
pub mod rootsys;
pub mod spacedb;

pub use error::{Error, Result};
