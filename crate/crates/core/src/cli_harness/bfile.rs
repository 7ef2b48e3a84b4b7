use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exactmath::{format_rational, Rational};

/// OEIS b-file: one `index value` pair per line, strictly increasing indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BFile {
    entries: Vec<(u64, BigInt)>,
}

#[derive(Debug, thiserror::Error)]
pub enum BFileError {
    #[error("cannot read b-file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

impl BFile {
    pub fn new(entries: Vec<(u64, BigInt)>) -> Result<BFile, BFileError> {
        if let Some(w) = entries.windows(2).position(|w| w[0].0 >= w[1].0) {
            return Err(BFileError::Malformed {
                line: w + 2,
                message: "indices must be strictly increasing".into(),
            });
        }
        Ok(BFile { entries })
    }

    /// Consecutive indices starting at `offset`.
    pub fn from_values(offset: u64, values: impl IntoIterator<Item = BigInt>) -> BFile {
        BFile { entries: values.into_iter().zip(offset..).map(|(v, i)| (i, v)).collect() }
    }

    /// Lines must match `^\d+ -?\d+$`; lines starting with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<BFile, BFileError> {
        let mut entries = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: &str| BFileError::Malformed { line: k + 1, message: message.into() };
            let (index, value) = line.split_once(' ').ok_or_else(|| bad("expected 'index value'"))?;
            let digits = value.strip_prefix('-').unwrap_or(value);
            if !is_digits(index) || !is_digits(digits) {
                return Err(bad("expected 'index value' with decimal integers"));
            }
            let index: u64 = index.parse().map_err(|_| bad("index out of range"))?;
            let value: BigInt = value.parse().map_err(|_| bad("malformed value"))?;
            if entries.last().is_some_and(|&(prev, _)| prev >= index) {
                return Err(bad("indices must be strictly increasing"));
            }
            entries.push((index, value));
        }
        Ok(BFile { entries })
    }

    pub fn read(path: &Path) -> Result<BFile, BFileError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn entries(&self) -> &[(u64, BigInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in &self.entries {
            writeln!(f, "{i} {v}")?;
        }
        Ok(())
    }
}

/// Outcome of checking a b-file against generated terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match { count: usize },
    Mismatch { index: u64, expected: BigInt, got: Rational },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Match { count } => write!(f, "OK {count} terms"),
            Verdict::Mismatch { index, expected, got } => write!(
                f,
                "MISMATCH at index {index}: b-file has {expected}, derived {}",
                format_rational(got)
            ),
        }
    }
}

/// Compares entries whose index `i` satisfies `offset ≤ i < offset + terms.len()`
/// with `terms[i − offset]`.
pub fn compare(bfile: &BFile, terms: &[Rational], offset: u64) -> Verdict {
    let mut count = 0;
    for (index, value) in &bfile.entries {
        let Some(k) = index.checked_sub(offset).and_then(|k| k.to_usize()) else {
            continue;
        };
        let Some(got) = terms.get(k) else {
            break;
        };
        if !(got.is_integer() && got.numer() == value) {
            return Verdict::Mismatch { index: *index, expected: value.clone(), got: got.clone() };
        }
        count += 1;
    }
    Verdict::Match { count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn parse_and_write_round_trip() {
        let text = "# central trinomial\n0 1\n1 1\n2 3\n3 -7\n";
        let b = BFile::parse(text).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(BFile::parse(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn malformed_lines() {
        for bad in ["0 1\n1  2\n", "0 1\n1 x\n", "a 1\n", "0 1\n0 2\n", "0 +1\n", "0 1 2\n"] {
            assert!(matches!(BFile::parse(bad), Err(BFileError::Malformed { .. })), "{bad:?}");
        }
    }

    #[test]
    fn comparison_with_offset() {
        let b = BFile::parse("1 1\n2 1\n3 2\n4 5\n").unwrap();
        let terms = [1, 1, 2, 5, 14].map(int);
        assert_eq!(compare(&b, &terms, 1), Verdict::Match { count: 4 });
        assert!(matches!(compare(&b, &terms, 0), Verdict::Mismatch { index: 2, .. }));
        assert!(matches!(compare(&b, &[int(1), rat(1, 2)], 1), Verdict::Mismatch { index: 2, .. }));
    }
}
