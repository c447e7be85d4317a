//! Graph algebras, the sign monoid `W_n` and its action on strips and crowns,
//! and exact checks on truncated Loday representations.
//!
//! Everything is generic over a [`field::Field`]; the aliases below are the
//! fields the command-line tool is compiled for.

pub mod algebra;
pub mod error;
pub mod field;
pub mod graphs;
pub mod harness;
pub mod linalg;
pub mod loday;
pub mod monoid;

use serde::{Deserialize, Serialize};

pub use error::Error;
pub use field::{Field, FieldSpec, Fp};

pub type Rational = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

pub type RationalMatrix = linalg::Matrix<Rational>;
pub type F2Matrix = linalg::Matrix<F2>;

/// Resource limits; exceeding one is an error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest `d^p` for a tensor power that is materialised or streamed.
    pub max_tensor_dim: u128,
    /// Largest number of projective points enumerated for reconstruction.
    pub max_proj_points: u128,
    /// Largest graph handed to the isomorphism search.
    pub max_graph_size: usize,
    /// Largest `n` for which `W_n` is enumerated.
    pub max_level: usize,
    /// Largest `p` for which `Ω(⟨p⟩, ⟨q⟩)` is enumerated.
    pub max_surjection_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_tensor_dim: 1 << 20,
            max_proj_points: algebra::DEFAULT_PROJ_CAP,
            max_graph_size: graphs::DEFAULT_GRAPH_CAP,
            max_level: monoid::DEFAULT_LEVEL_CAP,
            max_surjection_size: 6,
        }
    }
}
