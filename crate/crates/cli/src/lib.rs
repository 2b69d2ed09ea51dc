//! Scenario files, query execution and report rendering for the `orbisurf`
//! command.

pub mod oracle;
pub mod query;
pub mod report;
pub mod run;
pub mod scenario;

pub use report::{Report, Value};
pub use run::run;
pub use scenario::{parse_scenario, render_scenario, ErrorKind, Scenario, ScenarioError};
