//! The subkey sequence generator.
//!
//! For each index n in [0, 3^k - 1]: encode n in balanced ternary, dot the
//! digit vector against each row of the key matrix, reduce every component
//! with the sign function, shift the signs by +1 into {0, 1, 2}, and read
//! the result as a base-3 number. The output r is a length-3^k sequence
//! with r[n] in [0, 3^k - 1].
//!
//! Because sign is odd and the balanced encoding negates under index
//! complement, every generated sequence satisfies
//! `r[N-1-n] = N-1 - r[n]` and fixes the center index (N-1)/2.

use crate::error::{Error, Result};
use crate::key::KeyMatrix;
use crate::ternary::{to_balanced_digits, BalancedDigits};

/// Sign of `x`: -1, 0, or +1.
pub fn sign(x: i64) -> i64 {
    x.signum()
}

/// Dots the digit vector against each ROW of the key matrix, returning one
/// component per row. Arithmetic is checked; overflow is an error rather
/// than wraparound.
pub fn row_transform(t: &BalancedDigits, key: &KeyMatrix) -> Result<Vec<i64>> {
    let k = key.digits() as usize;
    if t.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            actual: t.len(),
        });
    }
    key.rows()
        .map(|row| {
            let mut acc = 0i64;
            for (&digit, &entry) in t.digits().iter().zip(row) {
                let term = entry.checked_mul(digit as i64).ok_or(Error::Overflow)?;
                acc = acc.checked_add(term).ok_or(Error::Overflow)?;
            }
            Ok(acc)
        })
        .collect()
}

/// The generated subkey sequence r, with its digit count for provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubKeySequence {
    values: Vec<usize>,
    digits: u32,
}

impl SubKeySequence {
    /// Wraps a raw value vector, checking length and value range.
    pub fn new(values: Vec<usize>, digits: u32) -> Result<Self> {
        if digits < 2 {
            return Err(Error::DigitsTooSmall { digits });
        }
        let n = crate::ternary::alphabet_size(digits)?;
        if values.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= n) {
            return Err(Error::ValueOutOfRange {
                value: bad,
                alphabet: n,
            });
        }
        Ok(Self { values, digits })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Number of distinct values present in the sequence. A quality
    /// metric; no key is rejected on its account.
    pub fn distinct_value_count(&self) -> usize {
        let mut seen = vec![false; self.values.len()];
        let mut count = 0;
        for &v in &self.values {
            if !seen[v] {
                seen[v] = true;
                count += 1;
            }
        }
        count
    }

    /// Number of indices n with r[n] = n. The center index is always a
    /// fixed point.
    pub fn fixed_point_count(&self) -> usize {
        self.values
            .iter()
            .enumerate()
            .filter(|&(n, &v)| n == v)
            .count()
    }
}

/// Runs the full generator for one key.
pub fn generate_sequence(key: &KeyMatrix) -> Result<SubKeySequence> {
    let n = key.alphabet_size()?;
    let k = key.digits();
    let mut values = Vec::with_capacity(n);
    for index in 0..n {
        let t = to_balanced_digits(index, k)?;
        let product = row_transform(&t, key)?;
        let value = product
            .iter()
            .fold(0usize, |acc, &c| acc * 3 + (sign(c) + 1) as usize);
        values.push(value);
    }
    SubKeySequence::new(values, k)
}
