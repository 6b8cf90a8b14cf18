//! Instance files, reports, certificates and command dispatch for `simatroid`.

pub mod certificate;
pub mod commands;
pub mod instance;
pub mod report;

pub use certificate::{parse_certificates, Body, Certificate};
pub use commands::{generate, run_command, Command, Options, Output};
pub use instance::{gen_random, parse_instance, Density, Instance, ParseError};
pub use report::{Decision, Report};
