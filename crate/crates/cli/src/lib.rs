//! Scenario runner, bundled fixtures and acceptance checks.

pub mod check;
pub mod fixtures;
pub mod random;
pub mod runner;
pub mod scenario;
