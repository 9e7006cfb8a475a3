//! Command-line front end: orbit figures, point and algebra reports, and the
//! built-in verification suite.

pub mod config;
pub mod orbit;
pub mod report;
pub mod verify;
