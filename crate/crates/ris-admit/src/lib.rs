//! Deterministic simulator and optimizer for panel-assisted user admission
//! in a sectored edge-computing cell.
//!
//! A scenario is a seeded population of users around one base station with
//! an optional reflecting panel. The admission pipeline filters users by
//! angular reachability, clusters them into groups, divides the panel's
//! elements across groups by priority, and then greedily admits users one at
//! a time, maximizing a weighted objective of per-user utility, panel usage,
//! and rejection penalty under bandwidth, deadline, and compute constraints.
//!
//! The crate splits into:
//!
//! - [`geometry`]: points and angular deviation from the panel axis.
//! - [`rng`]: the seeded sampling layer; its exact output sequence is a
//!   stability contract.
//! - [`workload`]: service classes, scenario configuration, and the scenario
//!   generator.
//! - [`channel`]: direct and reflected link rates and the delay model.
//! - [`admission`]: the pipeline above plus the greedy loop.
//! - [`oracle`]: exhaustive reference solver for small instances.
//! - [`experiment`]: sweep harness with CSV/JSON reporting.
//!
//! Everything is deterministic: the same configuration and seed produce
//! byte-identical scenarios, decisions, and reports.

pub mod admission;
pub mod channel;
pub mod error;
pub mod experiment;
pub mod geometry;
pub mod oracle;
pub mod rng;
pub mod workload;

pub use admission::{run_admission_control, AdmissionResult, Thresholds, UtilityWeights};
pub use channel::ChannelConfig;
pub use error::{Error, Result};
pub use oracle::exhaustive_optimal;
pub use workload::{generate_scenario, Scenario, ScenarioConfig};
