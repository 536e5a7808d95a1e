//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors reported by key construction, sequence generation, basin
/// traversal, the statistical tests, and the cipher.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Digit count below the supported minimum of 2.
    #[error("digit count must be at least 2, got {digits}")]
    DigitsTooSmall { digits: u32 },

    /// Key entries do not form a k x k matrix.
    #[error("key matrix must be {digits}x{digits}, got {rows} rows and row {bad_row} has {bad_len} entries")]
    KeyShape {
        digits: u32,
        rows: usize,
        bad_row: usize,
        bad_len: usize,
    },

    /// Key entry magnitude exceeds the 2^31 - 1 contract.
    #[error("key entry at ({row},{col}) is {value}, outside |entry| <= 2^31 - 1")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },

    /// Index outside [0, 3^k - 1].
    #[error("index {index} out of range for alphabet of size {modulus}")]
    IndexOutOfRange { index: usize, modulus: usize },

    /// Balanced-ternary digit outside {-1, 0, 1}.
    #[error("balanced digit {value} is outside {{-1, 0, 1}}")]
    InvalidBalancedDigit { value: i8 },

    /// Vector length does not match the key's digit count.
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// Integer overflow in the key transform.
    #[error("integer overflow in key transform")]
    Overflow,

    /// 3^k does not fit the platform word.
    #[error("3^{digits} overflows the platform word size")]
    AlphabetTooLarge { digits: u32 },

    /// Sequence value outside [0, N - 1].
    #[error("value {value} out of range for alphabet of size {alphabet}")]
    ValueOutOfRange { value: usize, alphabet: usize },

    /// Basin traversal started from an index that was already consumed.
    #[error("basin start {index} was already visited")]
    AlreadyVisited { index: usize },

    /// Sequence shorter than the operation requires.
    #[error("sequence of length {len} is too short, need at least {min}")]
    SequenceTooShort { len: usize, min: usize },

    /// Alphabet size below 2.
    #[error("alphabet size must be at least 2, got {alphabet}")]
    AlphabetTooSmall { alphabet: usize },

    /// Character with no symbol assignment, in strict mode.
    #[error("unmappable character {ch:?} at position {position}")]
    UnmappableChar { ch: char, position: usize },

    /// Text alphabet is only defined for k = 3.
    #[error("text encoding is defined for 3 digits only, got {digits}")]
    UnsupportedTextAlphabet { digits: u32 },

    /// Message and subkey disagree on the alphabet.
    #[error("digit mismatch: message uses {text_digits} digits, subkey uses {key_digits}")]
    KeyMismatch { text_digits: u32, key_digits: u32 },

    /// Incomplete gamma evaluation failed to converge.
    #[error("incomplete gamma did not converge for a={a}, x={x}")]
    GammaNonConvergence { a: f64, x: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Distinguishes overflow from the other validation failures; the CLI
    /// maps the two classes to different exit codes.
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow)
    }
}
