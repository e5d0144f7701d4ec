//! File formats, b-file fetching and the command-line front end for
//! [`hoflab_core`].

pub mod cli;
pub mod fetch;
pub mod parallel;
pub mod report;

pub use hoflab_core;
