//! Exact computer algebra for Sullivan models of the 4-sphere, its loop spaces and
//! toroidifications, together with the E_k Cartan data acting on them.

pub mod action;
pub mod adjunction;
pub mod algebra;
pub mod derivation;
pub mod dgca;
pub mod error;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod weights;

pub use error::{Error, Result};
