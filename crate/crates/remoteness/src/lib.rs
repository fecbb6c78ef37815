//! Catalog, reports and command-line front end for remoteness computations.

pub mod catalog;
pub mod cli;
pub mod io;
pub mod report;
