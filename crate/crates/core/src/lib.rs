pub mod algebra;
pub mod error;
pub mod exec;
pub mod fib;
pub mod functional;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
