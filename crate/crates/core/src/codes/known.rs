use super::code::BinaryCode;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Names accepted by [`known_code`]; `i2^r` takes any `r ≥ 1`.
pub const KNOWN_CODE_NAMES: [&str; 3] = ["repetition2", "i2^r", "extended_hamming8"];

/// Largest `r` accepted for `i2^r`.
const MAX_I2_POWER: usize = 1 << 16;

/// `{00, 11}^⊕r`.
pub fn i2_power(r: usize) -> BinaryCode {
    let n = 2 * r;
    let rows = (0..r).map(|i| Gf2Vector::from_support(n, [2 * i, 2 * i + 1])).collect();
    BinaryCode::new(&Gf2Matrix::from_rows(n, rows))
}

/// The [8, 4, 4] extended Hamming code.
pub fn extended_hamming8() -> BinaryCode {
    BinaryCode::parse(&["11110000", "00111100", "00001111", "01010101"]).expect("valid rows")
}

pub fn known_code(name: &str) -> Result<BinaryCode> {
    match name {
        "repetition2" => return Ok(i2_power(1)),
        "extended_hamming8" => return Ok(extended_hamming8()),
        _ => {}
    }
    if let Some(r) = name.strip_prefix("i2^") {
        if let Ok(r) = r.parse::<usize>() {
            if (1..=MAX_I2_POWER).contains(&r) {
                return Ok(i2_power(r));
            }
        }
    }
    Err(Error::UnknownCode(name.to_string()))
}

/// Names of the known codes of the given length, in matching priority.
pub fn known_code_candidates(length: usize) -> Vec<String> {
    let mut out = Vec::new();
    if length == 2 {
        out.push("repetition2".to_string());
    }
    if length == 8 {
        out.push("extended_hamming8".to_string());
    }
    if length >= 2 && length.is_multiple_of(2) && length / 2 <= MAX_I2_POWER {
        out.push(format!("i2^{}", length / 2));
    }
    out
}
