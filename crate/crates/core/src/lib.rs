//! Exact certification of polynomial inequalities and resultant
//! computations, plus the pinching-coefficient pipeline built on top of them.
//!
//! Everything is computed over the rationals: there is no floating point in
//! any certified path. Floats appear only in the optimizer, where they rank
//! candidates that are then re-verified exactly.

pub mod exactnum;
pub mod multipoly;
pub mod elimination;
pub mod realroots;
pub mod symmetric;
pub mod lemmas;
pub mod pinching;
pub mod cli;
