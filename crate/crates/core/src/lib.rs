pub mod algebra;
pub mod asymptotics;
pub mod error;
pub mod fixed_points;
pub mod floer;
pub mod report;
mod serde_int;
pub mod surface;
pub mod zeta;

pub use error::{Error, Result};
