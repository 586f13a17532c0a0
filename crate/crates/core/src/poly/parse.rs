//! Text grammar for integer polynomials:
//!
//! ```text
//! poly := ['+'|'-'] term (('+'|'-') term)*
//! term := INT | [INT] 'x' ['^' UINT]
//! ```
//!
//! Whitespace is ignored and repeated powers are summed.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;
use crate::error::{Error, Result};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }
}

/// Parse text such as `x^5 + 2x + 2` into a canonical polynomial.
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            None if first => return cur.err("empty polynomial"),
            None => return cur.err("expected term after sign"),
            _ if first => false,
            Some(c) => return cur.err(format!("expected '+' or '-', found '{}'", c as char)),
        };
        let (mut c, k) = term(&mut cur)?;
        if negative {
            c = -c;
        }
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += c;
        first = false;
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

fn term(cur: &mut Cursor<'_>) -> Result<(BigInt, usize)> {
    let coeff = cur.digits();
    if cur.peek() == Some(b'x') {
        cur.pos += 1;
        let c = match coeff {
            Some(d) => d.parse::<BigInt>().unwrap(),
            None => BigInt::from(1),
        };
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            let Some(e) = cur.digits() else {
                return cur.err("expected exponent after '^'");
            };
            let Ok(e) = e.parse::<usize>() else {
                return cur.err("exponent too large");
            };
            if e > 1 << 16 {
                return cur.err("exponent too large");
            }
            return Ok((c, e));
        }
        return Ok((c, 1));
    }
    match coeff {
        Some(d) => Ok((d.parse::<BigInt>().unwrap(), 0)),
        None => match cur.peek() {
            Some(c) => cur.err(format!("unexpected '{}'", c as char)),
            None => cur.err("expected term"),
        },
    }
}
