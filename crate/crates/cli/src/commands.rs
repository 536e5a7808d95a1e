//! One function per subcommand. Outputs are written atomically; status
//! goes to stderr so stdout stays clean for pipelines (demo excepted).

use std::path::Path;

use tsf_core::{
    analyze as run_battery, decode_text, decrypt as cipher_decrypt, encode_text,
    encrypt as cipher_encrypt, generate_sequence, pair_points, permutation_from_sequence,
    row_transform, sign, to_balanced_digits, BasinPermutation, CharPolicy, KeyMatrix,
    SubKeySequence, SymbolText,
};

use crate::io::{
    pairs_csv, parse_sequence_csv, parse_symbols_line, read_file, sequence_csv, symbols_line,
    write_atomic,
};
use crate::svg::scatter_svg;
use crate::{CliError, Format, MAX_CLI_DIGITS};

fn check_cli_digits(digits: u32) -> Result<(), CliError> {
    if !(2..=MAX_CLI_DIGITS).contains(&digits) {
        return Err(CliError::validation(format!(
            "digit count {digits} outside the supported range 2..={MAX_CLI_DIGITS}"
        )));
    }
    Ok(())
}

fn load_key(path: &Path) -> Result<KeyMatrix, CliError> {
    let contents = read_file(path)?;
    // Syntax errors are file errors; a well-formed file with a bad matrix
    // is a validation error.
    let value: serde_json::Value = serde_json::from_str(&contents)
        .map_err(|e| CliError::invalid_file(path, &format!("not valid JSON: {e}")))?;
    let key: KeyMatrix = serde_json::from_value(value)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    check_cli_digits(key.digits())?;
    Ok(key)
}

fn load_sequence(path: &Path) -> Result<Vec<usize>, CliError> {
    let contents = read_file(path)?;
    parse_sequence_csv(path, &contents)
}

fn subkey_for(path: &Path) -> Result<BasinPermutation, CliError> {
    let key = load_key(path)?;
    let r = generate_sequence(&key)?;
    Ok(permutation_from_sequence(&r))
}

pub fn keygen(seed: u64, digits: u32, lo: i64, hi: i64, out: &Path) -> Result<(), CliError> {
    check_cli_digits(digits)?;
    if lo >= hi {
        return Err(CliError::validation(format!(
            "empty entry range: lo ({lo}) must be strictly below hi ({hi})"
        )));
    }
    let key = KeyMatrix::random(seed, digits, lo, hi)?;
    let json = serde_json::to_string_pretty(&key).expect("key serializes");
    write_atomic(out, format!("{json}\n").as_bytes())?;
    eprintln!("wrote {digits}x{digits} key to {}", out.display());
    Ok(())
}

pub fn gen(key_path: &Path, out: &Path) -> Result<(), CliError> {
    let key = load_key(key_path)?;
    let r = generate_sequence(&key)?;
    write_atomic(out, sequence_csv(r.values()).as_bytes())?;
    eprintln!(
        "wrote {} values to {} ({} distinct, {} fixed)",
        r.len(),
        out.display(),
        r.distinct_value_count(),
        r.fixed_point_count()
    );
    Ok(())
}

pub fn perm(key_path: &Path, out: &Path, csv: Option<&Path>) -> Result<(), CliError> {
    let subkey = subkey_for(key_path)?;
    let json = serde_json::to_string_pretty(&subkey).expect("permutation serializes");
    write_atomic(out, format!("{json}\n").as_bytes())?;
    if let Some(csv_path) = csv {
        write_atomic(csv_path, sequence_csv(subkey.order()).as_bytes())?;
    }
    eprintln!(
        "wrote permutation of {} ({} basins) to {}",
        subkey.len(),
        subkey.basins().len(),
        out.display()
    );
    Ok(())
}

pub fn analyze(input: &Path, alphabet_size: usize, out: &Path) -> Result<(), CliError> {
    let seq = load_sequence(input)?;
    let report = run_battery(&seq, alphabet_size)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    write_atomic(out, format!("{json}\n").as_bytes())?;
    eprintln!("wrote report to {}", out.display());
    Ok(())
}

pub fn plot(input: &Path, out: &Path) -> Result<(), CliError> {
    let seq = load_sequence(input)?;
    let pairs = pair_points(&seq)?;
    let csv_path = out.with_extension("csv");
    write_atomic(out, scatter_svg(&pairs).as_bytes())?;
    write_atomic(&csv_path, pairs_csv(&pairs).as_bytes())?;
    eprintln!(
        "wrote {} points to {} and {}",
        pairs.len(),
        out.display(),
        csv_path.display()
    );
    Ok(())
}

fn read_message(
    path: &Path,
    digits: u32,
    format: Format,
    lenient: bool,
) -> Result<SymbolText, CliError> {
    let contents = read_file(path)?;
    match format {
        Format::Text => {
            let policy = if lenient {
                CharPolicy::Lenient
            } else {
                CharPolicy::Strict
            };
            Ok(encode_text(&contents, digits, policy)?)
        }
        Format::Symbols => {
            let symbols = parse_symbols_line(path, &contents)?;
            Ok(SymbolText::new(symbols, digits)?)
        }
    }
}

fn write_message(path: &Path, message: &SymbolText, format: Format) -> Result<(), CliError> {
    let contents = match format {
        Format::Text => decode_text(message)?,
        Format::Symbols => symbols_line(message.symbols()),
    };
    write_atomic(path, contents.as_bytes())
}

pub fn encrypt(
    key_path: &Path,
    input: &Path,
    out: &Path,
    format: Format,
    lenient: bool,
) -> Result<(), CliError> {
    let subkey = subkey_for(key_path)?;
    let plain = read_message(input, subkey.source_digits(), format, lenient)?;
    let cipher = cipher_encrypt(&plain, &subkey)?;
    write_message(out, &cipher, format)?;
    eprintln!("encrypted {} symbols to {}", cipher.len(), out.display());
    Ok(())
}

pub fn decrypt(key_path: &Path, input: &Path, out: &Path, format: Format) -> Result<(), CliError> {
    let subkey = subkey_for(key_path)?;
    let cipher = read_message(input, subkey.source_digits(), format, false)?;
    let plain = cipher_decrypt(&cipher, &subkey)?;
    write_message(out, &plain, format)?;
    eprintln!("decrypted {} symbols to {}", plain.len(), out.display());
    Ok(())
}

fn join_row(row: &[i64]) -> String {
    row.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_usize(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// The built-in 3x3 worked example with every intermediate rendered for
/// manual comparison.
pub fn demo_report() -> Result<String, CliError> {
    let key = KeyMatrix::new(3, vec![vec![2, 5, -6], vec![3, 1, 3], vec![4, -2, -3]])
        .expect("built-in key is valid");
    let n = key.alphabet_size()?;
    let balanced: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            to_balanced_digits(i, key.digits())
                .expect("index in range")
                .digits()
                .iter()
                .map(|&d| d as i64)
                .collect()
        })
        .collect();
    let products: Vec<Vec<i64>> = balanced
        .iter()
        .map(|digits| {
            let t = tsf_core::BalancedDigits::new(digits.iter().map(|&d| d as i8).collect())
                .expect("digits are balanced");
            row_transform(&t, &key).expect("built-in key cannot overflow")
        })
        .collect();

    let mut out = String::new();
    out.push_str(&format!("step 2-3: indices 0..{} in ternary\n", n - 1));
    for row in &balanced {
        let plain: Vec<i64> = row.iter().map(|&d| d + 1).collect();
        out.push_str(&join_row(&plain));
        out.push('\n');
    }

    out.push_str("\nstep 4: subtract 1 from every digit\n");
    for row in &balanced {
        out.push_str(&join_row(row));
        out.push('\n');
    }

    out.push_str("\nstep 5: key matrix\n");
    for row in key.rows() {
        out.push_str(&join_row(row));
        out.push('\n');
    }

    out.push_str("\nstep 6: products with the key rows\n");
    for row in &products {
        out.push_str(&join_row(row));
        out.push('\n');
    }

    out.push_str("\nstep 7: signs\n");
    for row in &products {
        let signs: Vec<i64> = row.iter().map(|&v| sign(v)).collect();
        out.push_str(&join_row(&signs));
        out.push('\n');
    }

    let r: SubKeySequence = generate_sequence(&key)?;
    out.push_str("\nstep 8-9: subkey sequence r\n");
    out.push_str(&join_usize(r.values()));
    out.push('\n');

    let subkey = permutation_from_sequence(&r);
    out.push_str("\nstep 10: basins by value equality\n");
    for (i, basin) in subkey.basins().iter().enumerate() {
        out.push_str(&format!("b({i}): {}\n", join_usize(basin)));
    }
    out.push_str(&format!("\npermutation: {}\n", join_usize(subkey.order())));
    Ok(out)
}

pub fn demo() -> Result<(), CliError> {
    let report = demo_report()?;
    // A closed pipe downstream (demo | head) is not an error.
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(report.as_bytes());
    Ok(())
}
