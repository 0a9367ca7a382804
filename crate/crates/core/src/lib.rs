pub mod chargroups;
pub mod chow;
pub mod covers;
pub mod error;
pub mod exact;
pub mod forms;
pub mod picard;

pub use error::{Error, Result};
