//! Sequence engines over exact and modular carriers, plus the registry of
//! exact identities relating them.

mod bernoulli;
mod cache;
mod eulerian;
mod harmonic;
pub mod identities;
mod zigzag;

pub use bernoulli::{bernoulli_exact, bernoulli_mod, divided_bernoulli, divided_genocchi, BERNOULLI_CAP};
pub use cache::{SequenceCache, TableStore, EULERIAN_ROW, HARMONIC, ZIGZAG, ZIGZAG_LONG};
pub use eulerian::{
    alternating_row_sum, eulerian_closed, eulerian_mod, eulerian_row, eulerian_row_mod, even_ascent_count,
    generalized_eulerian_row, multiset_count, EulerianTable, GENERALIZED_EULERIAN_CAP,
};
pub use identities::{identity_instances, sweep_identity, verify_identity, IdentityCaps, IdentityId, IdentityResult, IdentitySweep};
pub use harmonic::{harmonic_table, power_sum, HarmonicTable};
pub use zigzag::{
    euler_number, euler_numbers, generalized_euler, genocchi_from_tangent, genocchi_number, genocchi_numbers,
    tangent_number, zigzag, ZigzagMod,
};

use thiserror::Error;

use crate::arith::ArithError;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("no integer solution for E^({i})({n},{m})")]
    NonIntegerSolution { n: u64, i: u64, m: u64 },
    #[error("index {0} is even; tangent numbers live at odd indices")]
    EvenIndex(usize),
    #[error("inexact division while deriving G_{0}")]
    InexactDivision(usize),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
