//! Corpus, serialization, reports and claim drivers for the `leibniz` CLI.

pub mod corpus;
pub mod drivers;
pub mod format;
pub mod report;
