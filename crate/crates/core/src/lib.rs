pub mod bicomplex;
pub mod cli;
pub mod cochain;
pub mod error;
pub mod exactla;
pub mod geomodels;
pub mod random;
pub mod report;
mod serde_util;
pub mod spectral;
pub mod tensorops;
pub mod truncation;
pub mod verify;

pub use error::{Error, Result};
