//! Experiment harness for `polyalg-core`: JSON configs, seeded named random
//! streams, generators, the six experiment commands and their reports.
//!
//! ```no_run
//! use polyalg::config::{Command, ExperimentConfig};
//!
//! let mut config = ExperimentConfig::new(Command::Lattice, 3);
//! config.trials = 10;
//! let report = polyalg::commands::run(&config).unwrap();
//! assert_eq!(report.exit_code(), 0);
//! ```

pub mod commands;
pub mod config;
pub mod error;
pub mod float;
pub mod generate;
pub mod report;
pub mod rng;

pub use commands::run;
pub use config::{Command, ExperimentConfig, Mode};
pub use error::{HarnessError, Result};
pub use report::{ExperimentReport, Verdict};
