//! Balanced-ternary encoding of sequence indices.
//!
//! Index n in [0, 3^k - 1] is written as k ordinary base-3 digits, most
//! significant first, then every digit is shifted by -1 into {-1, 0, 1}.
//! The shift makes the map antisymmetric: the encoding of 3^k - 1 - n is
//! the element-wise negation of the encoding of n.

use crate::error::{Error, Result};

/// A length-k digit vector over {-1, 0, 1}, most significant digit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BalancedDigits(Vec<i8>);

impl BalancedDigits {
    /// Validates that every element lies in {-1, 0, 1}.
    pub fn new(digits: Vec<i8>) -> Result<Self> {
        for &d in &digits {
            if !(-1..=1).contains(&d) {
                return Err(Error::InvalidBalancedDigit { value: d });
            }
        }
        Ok(Self(digits))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn digits(&self) -> &[i8] {
        &self.0
    }

    /// Element-wise negation; the encoding of the complementary index.
    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|&d| -d).collect())
    }
}

/// Returns 3^k, or an error if it overflows the platform word.
pub fn alphabet_size(digits: u32) -> Result<usize> {
    3usize
        .checked_pow(digits)
        .ok_or(Error::AlphabetTooLarge { digits })
}

/// Encodes `n` as k balanced-ternary digits, most significant first.
pub fn to_balanced_digits(n: usize, digits: u32) -> Result<BalancedDigits> {
    let modulus = alphabet_size(digits)?;
    if n >= modulus {
        return Err(Error::IndexOutOfRange { index: n, modulus });
    }
    let k = digits as usize;
    let mut out = vec![0i8; k];
    let mut rest = n;
    for slot in out.iter_mut().rev() {
        *slot = (rest % 3) as i8 - 1;
        rest /= 3;
    }
    Ok(BalancedDigits(out))
}

/// Exact inverse of [`to_balanced_digits`]: reads the digits (shifted back
/// by +1) as a base-3 number.
pub fn from_balanced_digits(d: &BalancedDigits) -> usize {
    d.digits()
        .iter()
        .fold(0usize, |acc, &digit| acc * 3 + (digit + 1) as usize)
}
