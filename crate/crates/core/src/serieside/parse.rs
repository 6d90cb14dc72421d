//! Generator expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := [coeff '*'] 't' ['^' int] | coeff
//! coeff := int | int '/' int
//! int   := ['-'] digits
//! ```
//!
//! Whitespace is insignificant. A single leading sign before the first term
//! is also accepted (`-t^3`). Generator lists are comma separated.

use num_bigint::BigInt;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::exactalg::FieldSpec;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
    offset: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, offset: usize) -> Self {
        Cursor {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
            offset,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Column (in characters of the full input) of the next token.
    fn column(&self) -> usize {
        let byte = self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i);
        self.offset + self.src[..byte].chars().count()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let negative = self.eat('-');
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected digits"));
        }
        let n: BigInt = digits.parse().expect("ascii digits");
        Ok(if negative { -n } else { n })
    }

    fn small_int(&mut self) -> Result<i64> {
        let col = self.column();
        let n = self.int()?;
        i64::try_from(n).map_err(|_| Error::Parse {
            position: col,
            message: "exponent out of range".into(),
        })
    }
}

/// Parses one series expression.
pub fn parse_series(text: &str, field: FieldSpec) -> Result<TruncatedSeries> {
    parse_at(text, field, 0)
}

fn parse_at(text: &str, field: FieldSpec, offset: usize) -> Result<TruncatedSeries> {
    let mut cur = Cursor::new(text, offset);
    if cur.peek().is_none() {
        return Err(cur.error("empty expression"));
    }
    let mut out = TruncatedSeries::zero(field);
    let mut sign = if cur.eat('-') {
        -1
    } else {
        cur.eat('+');
        1
    };
    loop {
        let (exp, coeff) = term(&mut cur, field)?;
        let coeff = if sign < 0 { -&coeff } else { coeff };
        out.add_term(exp, coeff);
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.pos += 1;
                sign = 1;
            }
            Some('-') => {
                cur.pos += 1;
                sign = -1;
            }
            Some(c) => return Err(cur.error(format!("unexpected `{c}`"))),
        }
    }
    Ok(out)
}

fn term(cur: &mut Cursor<'_>, field: FieldSpec) -> Result<(i64, crate::exactalg::Scalar)> {
    if cur.peek() == Some('t') {
        cur.pos += 1;
        return Ok((exponent(cur)?, field.one()));
    }
    let col = cur.column();
    let num = cur.int()?;
    let den = if cur.eat('/') { cur.int()? } else { BigInt::from(1) };
    let coeff = field.from_ratio(&num, &den).map_err(|e| match e {
        Error::Coefficient { field, value } => Error::Parse {
            position: col,
            message: format!("coefficient {value} is not an element of {field}"),
        },
        other => other,
    })?;
    if cur.eat('*') {
        if !cur.eat('t') {
            return Err(cur.error("expected `t` after `*`"));
        }
        return Ok((exponent(cur)?, coeff));
    }
    Ok((0, coeff))
}

fn exponent(cur: &mut Cursor<'_>) -> Result<i64> {
    if cur.eat('^') {
        cur.small_int()
    } else {
        Ok(1)
    }
}

/// Parses a comma-separated list of generator expressions. Error positions
/// refer to the whole list.
pub fn parse_generator_list(text: &str, field: FieldSpec) -> Result<Vec<TruncatedSeries>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_at(piece, field, offset)?);
        offset += piece.chars().count() + 1;
    }
    Ok(out)
}
