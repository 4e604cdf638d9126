//! Library surface of the command-line tool, shared with the acceptance
//! suite.

pub mod config;
pub mod report;
pub mod verify;

pub use config::RunConfig;
pub use report::{Report, Status};
pub use verify::{expected_claim_ids, verify_paper, OP_ROSTER};
