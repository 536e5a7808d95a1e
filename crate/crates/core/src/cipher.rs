//! Poly-alphabetic substitution keyed by a basin permutation.
//!
//! With permutation P over N = 3^k symbols, position i of the message
//! encrypts as `c_i = P[(p_i + i) mod N]` and decrypts as
//! `p_i = (P^-1[c_i] - i) mod N`. The position shift makes equal plaintext
//! symbols encrypt differently at different positions. The construction is
//! an artifact choice layered on the generated subkey; it carries no
//! security claim.
//!
//! A character alphabet is defined for k = 3 only: A-Z (case-folded) map
//! to 0-25 and space to 26. Other digit counts work on raw symbol
//! sequences.

use crate::basin::{invert, BasinPermutation};
use crate::error::{Error, Result};

/// Symbol alphabet size for the k = 3 text mapping.
const TEXT_ALPHABET: usize = 27;

/// A message as a sequence of symbols over a 3^k alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolText {
    symbols: Vec<usize>,
    alphabet_digits: u32,
}

impl SymbolText {
    /// Validates every symbol against the 3^k alphabet.
    pub fn new(symbols: Vec<usize>, alphabet_digits: u32) -> Result<Self> {
        let n = crate::ternary::alphabet_size(alphabet_digits)?;
        if let Some(&bad) = symbols.iter().find(|&&s| s >= n) {
            return Err(Error::ValueOutOfRange {
                value: bad,
                alphabet: n,
            });
        }
        Ok(Self {
            symbols,
            alphabet_digits,
        })
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn alphabet_digits(&self) -> u32 {
        self.alphabet_digits
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

/// How [`encode_text`] treats characters outside the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CharPolicy {
    /// Error on the first unmappable character, naming its position.
    #[default]
    Strict,
    /// Silently drop unmappable characters.
    Lenient,
}

fn char_symbol(ch: char) -> Option<usize> {
    match ch {
        'A'..='Z' => Some(ch as usize - 'A' as usize),
        'a'..='z' => Some(ch as usize - 'a' as usize),
        ' ' => Some(26),
        _ => None,
    }
}

/// Maps text onto the 27-symbol alphabet (A-Z case-folded, space = 26).
/// Only defined for k = 3.
pub fn encode_text(text: &str, digits: u32, policy: CharPolicy) -> Result<SymbolText> {
    if digits != 3 {
        return Err(Error::UnsupportedTextAlphabet { digits });
    }
    let mut symbols = Vec::with_capacity(text.len());
    for (position, ch) in text.chars().enumerate() {
        match char_symbol(ch) {
            Some(s) => symbols.push(s),
            None => match policy {
                CharPolicy::Strict => return Err(Error::UnmappableChar { ch, position }),
                CharPolicy::Lenient => {}
            },
        }
    }
    SymbolText::new(symbols, 3)
}

/// Inverse of [`encode_text`]: symbols back to uppercase text.
pub fn decode_text(text: &SymbolText) -> Result<String> {
    if text.alphabet_digits() != 3 {
        return Err(Error::UnsupportedTextAlphabet {
            digits: text.alphabet_digits(),
        });
    }
    Ok(text
        .symbols()
        .iter()
        .map(|&s| {
            debug_assert!(s < TEXT_ALPHABET);
            if s == 26 {
                ' '
            } else {
                (b'A' + s as u8) as char
            }
        })
        .collect())
}

fn check_digits(text: &SymbolText, subkey: &BasinPermutation) -> Result<usize> {
    if text.alphabet_digits() != subkey.source_digits() {
        return Err(Error::KeyMismatch {
            text_digits: text.alphabet_digits(),
            key_digits: subkey.source_digits(),
        });
    }
    Ok(subkey.len())
}

/// Encrypts position-wise: `c_i = P[(p_i + i) mod N]`.
pub fn encrypt(plain: &SymbolText, subkey: &BasinPermutation) -> Result<SymbolText> {
    let n = check_digits(plain, subkey)?;
    let order = subkey.order();
    let symbols = plain
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, &p)| order[(p + i % n) % n])
        .collect();
    SymbolText::new(symbols, plain.alphabet_digits())
}

/// Exact inverse of [`encrypt`]: `p_i = (P^-1[c_i] - i) mod N`.
pub fn decrypt(cipher: &SymbolText, subkey: &BasinPermutation) -> Result<SymbolText> {
    let n = check_digits(cipher, subkey)?;
    let inverse = invert(subkey);
    let symbols = cipher
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, &c)| (inverse[c] + n - i % n) % n)
        .collect();
    SymbolText::new(symbols, cipher.alphabet_digits())
}
