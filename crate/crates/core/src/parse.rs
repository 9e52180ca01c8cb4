//! Text syntax for matrices, compositions, permutations and linear
//! combinations of them.
//!
//! ```text
//! matrix       [1 0;0 2]      []
//! composition  (1,2,1)        ()
//! permutation  (3,1,2)
//! lincomb      2*[1 0;0 1] - 1/2*[2] + [1 1]
//! ```

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::{parse_rational, LinComb, Rational};
use crate::matrices::{Composition, Matrix, PackedMatrix};
use crate::nsymqsym::Permutation;

fn offset_error(input: &str, pos: usize, msg: impl Into<String>) -> Error {
    Error::parse(input, pos, msg)
}

/// Parses `"[a b; c d]"` or `"[]"`.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let inner = body
        .strip_prefix('[')
        .ok_or_else(|| offset_error(text, lead, "expected `[`"))?
        .strip_suffix(']')
        .ok_or_else(|| offset_error(text, lead + body.len(), "expected `]`"))?;
    let base = lead + 1;
    if inner.trim().is_empty() {
        return Ok(Matrix::empty());
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut row_start = 0;
    for (r, row_text) in inner.split(';').enumerate() {
        let mut row = Vec::new();
        let mut cursor = 0;
        for token in row_text.split_whitespace() {
            let at = row_text[cursor..].find(token).unwrap() + cursor;
            cursor = at + token.len();
            let pos = base + row_start + at;
            if token.starts_with('-') {
                return Err(offset_error(text, pos, format!("negative entry `{token}`")));
            }
            let v = token
                .parse::<u64>()
                .map_err(|_| offset_error(text, pos, format!("invalid entry `{token}`")))?;
            row.push(v);
        }
        if row.is_empty() {
            return Err(offset_error(
                text,
                base + row_start,
                format!("empty row {}", r + 1),
            ));
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(offset_error(
                    text,
                    base + row_start,
                    format!("ragged row at row {}", r + 1),
                ));
            }
        }
        rows.push(row);
        row_start += row_text.len() + 1;
    }
    Matrix::from_rows(&rows)
}

/// Parses a matrix and checks it has no zero row or column.
pub fn parse_packed(text: &str) -> Result<PackedMatrix> {
    PackedMatrix::new(parse_matrix(text)?)
}

fn parse_tuple(text: &str, what: &str) -> Result<Vec<u64>> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let inner = body
        .strip_prefix('(')
        .ok_or_else(|| offset_error(text, lead, format!("expected `(` to open a {what}")))?
        .strip_suffix(')')
        .ok_or_else(|| offset_error(text, lead + body.len(), "expected `)`"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut at = lead + 1;
    for token in inner.split(',') {
        let t = token.trim();
        let v = t
            .parse::<u64>()
            .map_err(|_| offset_error(text, at, format!("invalid {what} entry `{t}`")))?;
        out.push(v);
        at += token.len() + 1;
    }
    Ok(out)
}

/// Parses `"(a,b,c)"` or `"()"`.
pub fn parse_composition(text: &str) -> Result<Composition> {
    let parts = parse_tuple(text, "composition")?;
    if parts.contains(&0) {
        return Err(offset_error(text, 0, "composition parts must be positive"));
    }
    Composition::new(parts)
}

/// Parses a one-line permutation word such as `"(3,1,2)"`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let word = parse_tuple(text, "permutation")?;
    Permutation::new(word.into_iter().map(|v| v as usize).collect())
}

/// Parses `c1*K1 + c2*K2 - …` where each key is delimited by brackets or
/// parentheses and parsed with `key`. A bare key has coefficient 1.
pub fn parse_lincomb<K: Ord + Clone>(
    text: &str,
    key: impl Fn(&str) -> Result<K>,
) -> Result<LinComb<K>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut out = LinComb::zero();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(offset_error(text, pos, "empty input"));
    }
    if text[pos..].trim() == "0" {
        return Ok(out);
    }
    let mut first = true;
    while pos < bytes.len() {
        // Sign.
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(offset_error(
                text,
                pos,
                format!("expected `+` or `-`, found `{}`", &text[pos..pos + 1]),
            ));
        }
        first = false;
        // Optional coefficient followed by `*`.
        let mut coeff = Rational::one();
        if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                pos += 1;
            }
            coeff = parse_rational(&text[start..pos]).map_err(|_| {
                offset_error(
                    text,
                    start,
                    format!("invalid coefficient `{}`", &text[start..pos]),
                )
            })?;
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'*' {
                return Err(offset_error(text, pos, "expected `*` after coefficient"));
            }
            pos += 1;
            skip_ws(&mut pos);
        }
        // Key.
        let (open, close) = match bytes.get(pos) {
            Some(b'[') => (b'[', b']'),
            Some(b'(') => (b'(', b')'),
            Some(_) => {
                let tok: String = text[pos..]
                    .chars()
                    .take_while(|c| !c.is_whitespace())
                    .collect();
                return Err(offset_error(text, pos, format!("unexpected token `{tok}`")));
            }
            None => return Err(offset_error(text, pos, "expected a term")),
        };
        let start = pos;
        let end = text[start..]
            .bytes()
            .position(|b| b == close)
            .map(|i| start + i + 1)
            .ok_or_else(|| offset_error(text, start, format!("unclosed `{}`", open as char)))?;
        let k = key(&text[start..end]).map_err(|e| match e {
            Error::Parse {
                position, message, ..
            } => offset_error(text, start + position, message),
            other => other,
        })?;
        out.add_term(k, if negative { -coeff } else { coeff });
        pos = end;
        skip_ws(&mut pos);
    }
    Ok(out)
}
