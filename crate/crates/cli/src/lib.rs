//! Command-line front end: census listings, classification tables, group reports and
//! the verification suite, with a plain-file result cache.

pub mod cache;
pub mod commands;
pub mod config;
pub mod selector;
pub mod verify;

pub use cache::Cache;
pub use config::{Format, RunConfig};
pub use selector::{Selector, SelectorError};
