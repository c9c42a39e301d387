//! Library side of the `motivic` command-line tool: the bundled example
//! corpus, the structured run report, and the built-in golden-example suite.

pub mod corpus;
pub mod report;
pub mod selftest;
