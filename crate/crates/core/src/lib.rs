pub mod arith;
pub mod cf;
pub mod checks;
pub mod constants;
pub mod dimension;
pub mod error;
pub mod lemmas;
pub mod spectra;
pub mod words;

pub use error::{Error, Result};
