//! Token syntax for singular braid words.
//!
//! ```text
//! word := term*        separated by whitespace or '.'
//! term := ('s' | 't') index ('^' integer)?  |  'e'
//! ```
//!
//! `s1^-2` stands for two letters `σ_1⁻¹`; `e` is the empty word. Unicode
//! input (`σ₁⁻¹ τ₂`) is accepted and normalized to the ASCII form.

use crate::braid::BraidLetter;
use crate::error::{check_index, check_strands, Error, Result};
use crate::singular::{SingularLetter, SingularWord};

const MAX_EXPONENT: u64 = 1_000_000;

fn subscript_digit(c: char) -> Option<char> {
    ('₀'..='₉')
        .position(|d| d == c)
        .map(|i| char::from(b'0' + i as u8))
}

fn superscript_digit(c: char) -> Option<char> {
    match c {
        '⁰' => Some('0'),
        '¹' => Some('1'),
        '²' => Some('2'),
        '³' => Some('3'),
        '⁴'..='⁹' => Some(char::from(b'4' + (c as u32 - '⁴' as u32) as u8)),
        _ => None,
    }
}

/// ASCII characters paired with the byte offset they came from.
fn normalize(text: &str) -> Vec<(char, usize)> {
    let mut out = Vec::with_capacity(text.len());
    let mut in_superscript = false;
    for (pos, c) in text.char_indices() {
        let sup = superscript_digit(c).or(if c == '⁻' { Some('-') } else { None });
        match sup {
            Some(d) => {
                if !in_superscript {
                    out.push(('^', pos));
                    in_superscript = true;
                }
                out.push((d, pos));
                continue;
            }
            None => in_superscript = false,
        }
        let mapped = match c {
            'σ' => 's',
            'τ' => 't',
            _ => subscript_digit(c).unwrap_or(c),
        };
        out.push((mapped, pos));
    }
    out
}

struct Cursor {
    chars: Vec<(char, usize)>,
    at: usize,
    len: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(c, _)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(_, p)| p)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos(),
            message: message.into(),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.at;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.error("number too large"))?;
            self.at += 1;
        }
        if self.at == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }
}

/// Parses a word over `strands` strands. `τ` with a negative exponent is
/// represented as [`SingularLetter::TauInv`] so that callers can report it.
pub fn parse_word(text: &str, strands: usize) -> Result<SingularWord> {
    check_strands(strands)?;
    let mut cur = Cursor {
        chars: normalize(text),
        at: 0,
        len: text.len(),
    };
    let mut letters = Vec::new();
    loop {
        while matches!(cur.peek(), Some(c) if c.is_whitespace() || c == '.') {
            cur.at += 1;
        }
        let Some(head) = cur.peek() else { break };
        let singular = match head {
            's' => false,
            't' => true,
            'e' => {
                cur.at += 1;
                if matches!(cur.peek(), Some(c) if !(c.is_whitespace() || c == '.')) {
                    return Err(cur.error("unexpected character after 'e'"));
                }
                continue;
            }
            other => return Err(cur.error(format!("expected 's', 't' or 'e', found '{other}'"))),
        };
        cur.at += 1;
        let index_pos = cur.pos();
        let index = cur.number()? as usize;
        check_index(index, strands).map_err(|e| match e {
            Error::IndexOutOfRange { .. } => e,
            _ => Error::Syntax {
                position: index_pos,
                message: e.to_string(),
            },
        })?;
        let mut exp: i64 = 1;
        if cur.peek() == Some('^') {
            cur.at += 1;
            let negative = cur.peek() == Some('-');
            if negative {
                cur.at += 1;
            }
            let magnitude = cur.number()?;
            if magnitude > MAX_EXPONENT {
                return Err(cur.error("exponent too large"));
            }
            exp = if negative {
                -(magnitude as i64)
            } else {
                magnitude as i64
            };
        }
        if matches!(cur.peek(), Some(c) if !(c.is_whitespace() || c == '.' || c == 's' || c == 't'))
        {
            return Err(cur.error("unexpected character"));
        }
        if singular && exp == 0 {
            return Err(Error::Syntax {
                position: index_pos,
                message: "singular letter with exponent 0".into(),
            });
        }
        let letter = match (singular, exp > 0) {
            (false, true) => SingularLetter::Sigma(BraidLetter::pos(index)),
            (false, false) => SingularLetter::Sigma(BraidLetter::neg(index)),
            (true, true) => SingularLetter::Tau(index),
            (true, false) => SingularLetter::TauInv(index),
        };
        letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
    }
    SingularWord::new(strands, letters)
}

/// Canonical token form, inverse to [`parse_word`].
pub fn format_word(w: &SingularWord) -> String {
    w.to_string()
}
