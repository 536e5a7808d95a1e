//! The secret key: a k x k integer matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Largest entry magnitude accepted by the key contract.
pub const MAX_ENTRY: i64 = (1 << 31) - 1;

/// A k x k signed integer matrix used as the secret key.
///
/// `digits` is the number of ternary digits k; the generated sequence has
/// 3^k entries. Construction validates shape, digit count, and entry
/// magnitude, so a `KeyMatrix` value is always well-formed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawKeyMatrix", into = "RawKeyMatrix")]
pub struct KeyMatrix {
    digits: u32,
    entries: Vec<Vec<i64>>,
}

/// Wire form of the key file: `{"digits": k, "matrix": [[..], ..]}`.
#[derive(Serialize, Deserialize)]
struct RawKeyMatrix {
    digits: u32,
    matrix: Vec<Vec<i64>>,
}

impl TryFrom<RawKeyMatrix> for KeyMatrix {
    type Error = Error;

    fn try_from(raw: RawKeyMatrix) -> Result<Self> {
        KeyMatrix::new(raw.digits, raw.matrix)
    }
}

impl From<KeyMatrix> for RawKeyMatrix {
    fn from(key: KeyMatrix) -> Self {
        RawKeyMatrix {
            digits: key.digits,
            matrix: key.entries,
        }
    }
}

impl KeyMatrix {
    /// Validates and wraps a k x k entry matrix.
    pub fn new(digits: u32, entries: Vec<Vec<i64>>) -> Result<Self> {
        if digits < 2 {
            return Err(Error::DigitsTooSmall { digits });
        }
        let k = digits as usize;
        if entries.len() != k {
            return Err(Error::KeyShape {
                digits,
                rows: entries.len(),
                bad_row: entries.len(),
                bad_len: 0,
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != k {
                return Err(Error::KeyShape {
                    digits,
                    rows: entries.len(),
                    bad_row: i,
                    bad_len: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v.abs() > MAX_ENTRY {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
            }
        }
        Ok(Self { digits, entries })
    }

    /// Deterministic random key: every entry drawn uniform from `[lo, hi)`
    /// with a SplitMix64 generator seeded by `seed`. Identical arguments
    /// give an identical key on every platform.
    pub fn random(seed: u64, digits: u32, lo: i64, hi: i64) -> Result<Self> {
        if digits < 2 {
            return Err(Error::DigitsTooSmall { digits });
        }
        if lo >= hi || lo.abs() > MAX_ENTRY || hi.abs() > MAX_ENTRY + 1 {
            return Err(Error::EntryOutOfRange {
                row: 0,
                col: 0,
                value: if lo >= hi { lo } else { hi },
            });
        }
        let k = digits as usize;
        let mut rng = SplitMix64::new(seed);
        let entries = (0..k)
            .map(|_| (0..k).map(|_| rng.uniform_i64(lo, hi)).collect())
            .collect();
        Self::new(digits, entries)
    }

    /// Number of ternary digits k.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Sequence length 3^k, or an error when it exceeds the platform word.
    pub fn alphabet_size(&self) -> Result<usize> {
        3usize
            .checked_pow(self.digits)
            .ok_or(Error::AlphabetTooLarge {
                digits: self.digits,
            })
    }

    /// Row `i` of the matrix.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    /// All rows, in order.
    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.iter().map(|r| r.as_slice())
    }

    /// The key with every entry negated.
    pub fn negated(&self) -> Self {
        Self {
            digits: self.digits,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|&v| -v).collect())
                .collect(),
        }
    }
}
