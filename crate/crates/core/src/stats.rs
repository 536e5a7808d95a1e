//! Statistical battery for integer sequences: chi-square uniformity,
//! consecutive-pair coordinates, adjacent-repetition count, and an LZ78
//! compressibility estimate.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::reg_gamma_upper;

/// Results of the full battery over one sequence.
///
/// `low_expected_count` is set when the per-symbol expected count
/// len/N falls below 5, where the chi-square approximation is weak.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub chi_square: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
    pub pair_points: Vec<(usize, usize)>,
    pub repetition_count: usize,
    pub repetition_expected: f64,
    pub lz_phrase_count: usize,
    pub compression_ratio: f64,
    pub low_expected_count: bool,
}

fn check_alphabet(seq: &[usize], alphabet_size: usize) -> Result<()> {
    if alphabet_size < 2 {
        return Err(Error::AlphabetTooSmall {
            alphabet: alphabet_size,
        });
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= alphabet_size) {
        return Err(Error::ValueOutOfRange {
            value: bad,
            alphabet: alphabet_size,
        });
    }
    Ok(())
}

/// Goodness-of-fit against the uniform distribution over all
/// `alphabet_size` symbols, zero counts included. Returns
/// (chi_square, degrees_of_freedom, p_value) with df = N - 1 and the
/// p-value taken from the upper tail of the chi-square distribution.
pub fn chi_square_uniform(seq: &[usize], alphabet_size: usize) -> Result<(f64, usize, f64)> {
    if seq.is_empty() {
        return Err(Error::SequenceTooShort { len: 0, min: 1 });
    }
    check_alphabet(seq, alphabet_size)?;
    let mut counts = vec![0usize; alphabet_size];
    for &v in seq {
        counts[v] += 1;
    }
    let expected = seq.len() as f64 / alphabet_size as f64;
    let chi_square: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    let df = alphabet_size - 1;
    Ok((chi_square, df, p_value(chi_square, df)?))
}

/// Upper-tail probability of a chi-square statistic with `df` degrees of
/// freedom: Q(df/2, chi_square/2).
pub fn p_value(chi_square: f64, df: usize) -> Result<f64> {
    assert!(df >= 1, "p_value requires df >= 1");
    assert!(chi_square >= 0.0, "chi-square statistic cannot be negative");
    reg_gamma_upper(df as f64 / 2.0, chi_square / 2.0)
}

/// Non-overlapping consecutive pairs (seq[0],seq[1]), (seq[2],seq[3]), ...
/// An odd trailing element is dropped.
pub fn pair_points(seq: &[usize]) -> Result<Vec<(usize, usize)>> {
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            min: 2,
        });
    }
    Ok(seq.chunks_exact(2).map(|c| (c[0], c[1])).collect())
}

/// Count of positions with seq[i] = seq[i-1], plus the uniform-model
/// expectation (len - 1) / N.
pub fn repetition_stat(seq: &[usize], alphabet_size: usize) -> Result<(usize, f64)> {
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            min: 2,
        });
    }
    check_alphabet(seq, alphabet_size)?;
    let count = seq.windows(2).filter(|w| w[0] == w[1]).count();
    let expected = (seq.len() - 1) as f64 / alphabet_size as f64;
    Ok((count, expected))
}

/// LZ78 incremental parse: each phrase is the longest previously seen
/// phrase extended by one symbol; a trailing incomplete phrase counts as
/// one. Returns (phrase_count, phrase_count / len). Lower ratios mean the
/// sequence compresses further, i.e. is less random.
pub fn lz_compressibility(seq: &[usize]) -> Result<(usize, f64)> {
    if seq.is_empty() {
        return Err(Error::SequenceTooShort { len: 0, min: 1 });
    }
    // Phrase trie: node -> (symbol -> node). Node 0 is the empty phrase.
    let mut children: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default()];
    let mut node = 0usize;
    let mut phrases = 0usize;
    for &s in seq {
        match children[node].get(&s) {
            Some(&next) => node = next,
            None => {
                phrases += 1;
                let next = children.len();
                children[node].insert(s, next);
                children.push(Default::default());
                node = 0;
            }
        }
    }
    if node != 0 {
        phrases += 1;
    }
    Ok((phrases, phrases as f64 / seq.len() as f64))
}

/// Runs the whole battery and assembles a [`TestReport`].
pub fn analyze(seq: &[usize], alphabet_size: usize) -> Result<TestReport> {
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            min: 2,
        });
    }
    let (chi_square, degrees_of_freedom, p) = chi_square_uniform(seq, alphabet_size)?;
    let pair_points = pair_points(seq)?;
    let (repetition_count, repetition_expected) = repetition_stat(seq, alphabet_size)?;
    let (lz_phrase_count, compression_ratio) = lz_compressibility(seq)?;
    Ok(TestReport {
        chi_square,
        degrees_of_freedom,
        p_value: p,
        pair_points,
        repetition_count,
        repetition_expected,
        lz_phrase_count,
        compression_ratio,
        low_expected_count: (seq.len() as f64 / alphabet_size as f64) < 5.0,
    })
}
