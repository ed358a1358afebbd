//! Exact rational tools for invariant Lorentz forms on isotropy quotients of so(1,n) and so(2,n).

pub mod catalog;
pub mod cli;
pub mod error;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sample;
pub mod signature;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::Mat;
pub use rational::Rat;
pub use signature::{signature, Signature};
