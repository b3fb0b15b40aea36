//! Surface syntax for families: `C[s1,...,sk]` (even valency) and
//! `C2[s1,...,sk]` (odd valency, the graphs C_{2n}(s₁,…,s_k,n)).
//! Whitespace-insensitive; errors carry the byte position and expectation.

use std::fmt;

use crate::family::{CirculantFamily, FamilyKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: &'static str,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn describe_here(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("{:?}", c as char),
            None => "end of input".to_string(),
        }
    }

    fn error(&mut self, expected: &'static str) -> ParseError {
        self.skip_ws();
        ParseError {
            position: self.pos,
            expected,
            found: self.describe_here(),
        }
    }

    fn expect(&mut self, c: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let mut value: u64 = 0;
                while let Some(d) = self.text.get(self.pos).copied() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((d - b'0') as u64))
                        .ok_or(ParseError {
                            position: start,
                            expected: "a jump small enough to fit 64 bits",
                            found: "oversized integer".to_string(),
                        })?;
                    self.pos += 1;
                }
                Ok(value)
            }
            _ => Err(self.error("a positive integer")),
        }
    }
}

/// Parses a family spec. Jump-list shape violations (zero, non-increasing)
/// are reported as parse errors at the offending jump.
pub fn parse_family_spec(text: &str) -> Result<CirculantFamily, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect(b'C', "'C' or 'C2'")?;
    let kind = if cur.peek() == Some(b'2') {
        cur.pos += 1;
        FamilyKind::OddValency
    } else {
        FamilyKind::EvenValency
    };
    cur.expect(b'[', "'['")?;
    let mut jumps: Vec<u64> = Vec::new();
    loop {
        let at = {
            cur.skip_ws();
            cur.pos
        };
        let jump = cur.integer()?;
        if jump == 0 {
            return Err(ParseError {
                position: at,
                expected: "a jump of at least 1",
                found: "0".to_string(),
            });
        }
        if let Some(&last) = jumps.last() {
            if jump <= last {
                return Err(ParseError {
                    position: at,
                    expected: "a jump in strictly increasing order",
                    found: jump.to_string(),
                });
            }
        }
        jumps.push(jump);
        match cur.peek() {
            Some(b',') => {
                cur.pos += 1;
            }
            Some(b']') => {
                cur.pos += 1;
                break;
            }
            _ => return Err(cur.error("',' or ']'")),
        }
    }
    if cur.peek().is_some() {
        return Err(cur.error("end of input"));
    }
    CirculantFamily::new(kind, jumps).map_err(|_| ParseError {
        position: 0,
        expected: "a valid jump list",
        found: text.to_string(),
    })
}
