//! Text formats, a parallel executor and the command-line front end for
//! [`neighborly_core`].

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod sample;

pub use parallel::Parallel;
