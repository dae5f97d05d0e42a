//! File formats, reports and command pipelines over `ttrec-core`.

pub mod commands;
pub mod fixtures;
pub mod json;
pub mod report;
