//! The `latbij` command line and its supporting pieces, built on
//! [`lattice_bijections_core`].

pub mod cli;
pub mod json;
pub mod parallel;
pub mod render;
pub mod sample;

pub use lattice_bijections_core as core;
