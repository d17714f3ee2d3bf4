//! Reference tables: text format, label resolution, verification, operator
//! cache and table output.

pub mod cache;
pub mod corpus;
pub mod emit;
pub mod resolve;
pub mod verify;

pub use corpus::{Corpus, Label, ReferenceRow, ReferenceTable};
pub use verify::{verify_corpus, verify_table, RowStatus, VerificationReport};
