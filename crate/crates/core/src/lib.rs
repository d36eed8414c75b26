pub mod complexes;
pub mod coxeter;
pub mod error;
pub mod labeling;
pub mod par;
pub mod scalar;
pub mod scan;
pub mod theorems;

pub use error::{Error, Result};
