//! Command-line front end for `fibluc-core`: parallel grid runners, the
//! identity corpus, JSON reports and the `fibluc` subcommands.

pub mod cli;
pub mod corpus;
pub mod json;
pub mod runner;

pub use cli::{run, Outcome};
pub use corpus::{Corpus, CorpusEntry, CorpusError, DEFAULT_CORPUS};
