//! A small session language over the closure library, with text and JSON
//! output.

pub mod exec;
pub mod session;

pub use exec::{execute, succeeded, ExecConfig, OutputRecord, Status};
pub use session::{parse_session, Diagnostic, Session};
