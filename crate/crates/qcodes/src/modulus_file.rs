//! Primitive-polynomial overrides, one `m:mask` per line. The mask is either
//! a string of 0/1 coefficients, lowest degree first (`11001` is
//! `1 + z + z^4`), or a `0x` hex integer with bit `i` the coefficient of `z^i`.
//! Blank lines and `#` comments are ignored.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModulusFileError {
    #[error("line {line}: expected `m:mask`")]
    Syntax { line: usize },
    #[error("line {line}: bad mask `{mask}`")]
    Mask { line: usize, mask: String },
    #[error("line {line}: m = {m} given twice")]
    Duplicate { line: usize, m: u32 },
}

pub fn parse_mask(mask: &str) -> Option<u32> {
    if let Some(hex) = mask.strip_prefix("0x").or_else(|| mask.strip_prefix("0X")) {
        return u32::from_str_radix(hex, 16).ok();
    }
    if mask.is_empty() || mask.len() > 32 {
        return None;
    }
    mask.chars().rev().try_fold(0u32, |acc, c| match c {
        '0' => Some(acc << 1),
        '1' => Some((acc << 1) | 1),
        _ => None,
    })
}

pub fn parse(text: &str) -> Result<BTreeMap<u32, u32>, ModulusFileError> {
    let mut out = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (m, mask) = body.split_once(':').ok_or(ModulusFileError::Syntax { line })?;
        let m: u32 = m.trim().parse().map_err(|_| ModulusFileError::Syntax { line })?;
        let mask = mask.trim();
        let value = parse_mask(mask).ok_or_else(|| ModulusFileError::Mask {
            line,
            mask: mask.into(),
        })?;
        if out.insert(m, value).is_some() {
            return Err(ModulusFileError::Duplicate { line, m });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks() {
        assert_eq!(parse_mask("11001"), Some(0x13));
        assert_eq!(parse_mask("0x13"), Some(0x13));
        assert_eq!(parse_mask("1102"), None);
        assert_eq!(parse_mask(""), None);
    }

    #[test]
    fn file() {
        let text = "# moduli\n2: 11001\n\n3:0x43  # z^6 + z + 1\n";
        let map = parse(text).unwrap();
        assert_eq!(map.get(&2), Some(&0x13));
        assert_eq!(map.get(&3), Some(&0x43));
        assert_eq!(parse("2 11001"), Err(ModulusFileError::Syntax { line: 1 }));
        assert_eq!(parse("2:1\n2:1"), Err(ModulusFileError::Duplicate { line: 2, m: 2 }));
    }
}
