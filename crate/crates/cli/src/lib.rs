//! File format, object conversions and reports behind the `zinbiel` binary.

pub mod format;
pub mod objects;
pub mod report;
