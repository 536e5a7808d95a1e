//! Matrix-keyed ternary sign sequences and the machinery around them.
//!
//! The pipeline: indices 0..3^k-1 are written in balanced ternary, each
//! digit vector is transformed by a secret k x k integer matrix, the sign
//! function collapses every component to {-1, 0, 1}, and the shifted
//! digits are reassembled into an integer sequence r. Grouping the indices
//! of r by value equality ("basins") yields a permutation of [0, 3^k - 1]
//! that serves as a poly-alphabetic substitution subkey. A statistical
//! battery (chi-square uniformity, pair coordinates, repetition count,
//! LZ78 compressibility) measures the quality of generated sequences.
//!
//! Everything is integer-exact and deterministic: the same key yields the
//! same sequence, permutation, and ciphertext on every platform. All
//! operations are pure functions over immutable values, so concurrent use
//! needs no synchronization.

pub mod basin;
pub mod cipher;
pub mod error;
pub mod gamma;
pub mod key;
pub mod rng;
pub mod sequence;
pub mod stats;
pub mod ternary;

pub use basin::{basin_of, invert, permutation_from_sequence, preimages, BasinPermutation};
pub use cipher::{decode_text, decrypt, encode_text, encrypt, CharPolicy, SymbolText};
pub use error::{Error, Result};
pub use key::KeyMatrix;
pub use rng::SplitMix64;
pub use sequence::{generate_sequence, row_transform, sign, SubKeySequence};
pub use stats::{
    analyze, chi_square_uniform, lz_compressibility, pair_points, repetition_stat, TestReport,
};
pub use ternary::{from_balanced_digits, to_balanced_digits, BalancedDigits};
