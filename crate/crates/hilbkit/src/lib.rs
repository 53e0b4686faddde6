//! IO, command line and parallel drivers around [`hilbkit_core`].

pub use hilbkit_core;

pub mod cli;
pub mod json;
pub mod parallel;
pub mod sampling;
