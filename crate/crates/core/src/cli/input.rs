//! Coefficient lists from `--coeffs` or a file, one per line.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use crate::poly_core::{parse_polynomial, Polynomial};

/// One input line. `line` is 1-based within the file (1 for `--coeffs`).
#[derive(Clone, Debug)]
pub struct InputLine {
    pub line: usize,
    pub text: String,
    pub parsed: Result<Parsed, String>,
}

#[derive(Clone, Debug)]
pub struct Parsed {
    pub polynomial: Polynomial,
    /// Number of entries as written, before trailing zeros are dropped.
    pub entries: usize,
}

impl Parsed {
    /// Index of a written zero leading coefficient, which normalization
    /// would otherwise hide.
    pub fn dropped_zero(&self) -> Option<usize> {
        (self.entries > self.polynomial.coeffs().len()).then(|| self.polynomial.coeffs().len())
    }
}

pub fn parse_line(line: usize, text: &str) -> InputLine {
    let parsed = parse_polynomial(text)
        .map(|polynomial| Parsed {
            polynomial,
            entries: text.split(',').count(),
        })
        .map_err(|e| e.to_string());
    InputLine {
        line,
        text: text.trim().to_string(),
        parsed,
    }
}

/// Blank lines and `#` comments are skipped but still counted.
pub fn parse_batch(content: &str) -> Vec<InputLine> {
    content
        .lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_line(i + 1, l))
        .collect()
}

/// `-` reads standard input.
pub fn read_source(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_keeps_line_numbers_and_errors() {
        let lines = parse_batch("1,1,1\n\n# note\n1, 0/0\n1,2,0\n");
        assert_eq!(
            lines.iter().map(|l| l.line).collect::<Vec<_>>(),
            vec![1, 4, 5]
        );
        assert!(lines[0].parsed.is_ok());
        assert!(lines[1]
            .parsed
            .as_ref()
            .unwrap_err()
            .starts_with("parse error at column 4 (entry 1): zero denominator"));
        assert_eq!(lines[2].parsed.as_ref().unwrap().dropped_zero(), Some(2));
    }
}
