pub mod chevalley;
pub mod coset;
pub mod error;
pub mod giambelli;
pub mod graded;
pub mod linalg;
pub mod localization;
pub mod poly;
pub mod rational;
pub mod refdata;
pub mod ringrecon;
pub mod rootsystem;

pub use error::{Error, Result};
