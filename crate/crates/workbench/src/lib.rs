//! Library side of the `cliffbench` tool: expression language, table
//! documents, the verification suite and the report builders.

pub mod args;
pub mod error;
pub mod eval;
pub mod expr;
pub mod reports;
pub mod sample;
pub mod suite;
pub mod table_doc;

pub use error::WorkbenchError;
