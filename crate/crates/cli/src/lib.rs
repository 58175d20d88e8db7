//! Command-line front end for `moore-core`: a JSON machine file format and
//! the `moore` command.

pub mod app;
pub mod format;

pub use app::{execute, ExitStatus};
pub use format::{parse_machine_file, serialize, FormatError, MachineFile};
