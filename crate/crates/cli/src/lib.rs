//! File format and DOT export behind the `bitour` command.

pub mod document;

pub use document::{export_dot, parse_document, DigraphDocument, FormatError};
