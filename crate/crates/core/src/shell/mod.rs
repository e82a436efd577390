//! Catalog ingestion, the command-line front end, and report output.

pub mod catalog;
pub mod cli;
pub mod report;

pub use catalog::{
    demo_catalog, load_catalog, parse_catalog, Catalog, CatalogEntry, EntryError, LoadOptions,
};
pub use cli::{run, Cli};
pub use report::{full_report, Report, Settings};
