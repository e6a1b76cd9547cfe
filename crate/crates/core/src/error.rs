//! Error type shared by all modules.

use crate::rootsys::Family;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family:?}: requires {constraint}")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },

    #[error("cannot parse root system specifier {0:?} (expected e.g. \"A2\", \"E6\", \"G2\")")]
    ParseSpec(String),

    #[error("coordinate vector has length {got}, expected rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight [{0}] is not dominant")]
    NonDominant(String),

    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("index {0} is not a minuscule index (not in J)")]
    NotMinusculeIndex(usize),

    #[error("{0} is not prime")]
    NotPrime(i64),

    #[error(
        "level {level} violates the standing assumption l > h (Coxeter number h = {coxeter}); \
         pass the closed-alcove flag to allow l = h"
    )]
    LevelTooSmall { level: i64, coxeter: i64 },

    #[error("affine elements have mismatched levels {0} and {1}")]
    LevelMismatch(i64, i64),

    #[error("BFS orbit oracle is limited to rank <= {max_rank} and level <= {max_level}")]
    OracleOutOfRange { max_rank: usize, max_level: i64 },
}
