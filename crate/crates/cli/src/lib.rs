//! Command-line front end for the `witten` crate: argument dispatch, result
//! records in text, JSON and CSV, character-table files and the verification
//! suites.

pub mod checks;
pub mod cli;
pub mod record;
pub mod table;

pub use cli::run;
