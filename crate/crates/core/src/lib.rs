//! Spanning trees of Jahangir graphs `J(n, m)`.
//!
//! Three independent engines count the trees: cyclic gap signatures
//! ([`combinatorics`]), the Laplacian first minor ([`matrix_tree`]) and
//! explicit enumeration ([`enumeration`]). [`cycles`] checks the cycle
//! structure of `J(2, m)` and [`asymptotics`] studies how the counts grow.

pub mod asymptotics;
pub mod cli;
pub mod combinatorics;
pub mod cycles;
pub mod decimal;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod matrix_tree;

pub use error::{Error, Result};
pub use graph::{build_jahangir, JahangirParams, LabeledGraph};
