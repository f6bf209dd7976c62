//! Text syntax: `c` or a sum of terms `c*z^j`, where `z` is a primitive root of unity of a
//! stated conductor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{is_negative, Cyclotomic};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad cyclotomic value `{token}` at offset {offset}: {message}")]
pub struct CycloParseError {
    pub token: String,
    pub offset: usize,
    pub message: String,
}

pub(crate) fn emit(v: &Cyclotomic, n: u64) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (j, c)) in v.terms_at(n).iter().enumerate() {
        if i > 0 && !is_negative(c) {
            out.push('+');
        }
        if *j == 0 {
            out.push_str(&c.to_string());
        } else {
            out.push_str(&format!("{c}*z^{j}"));
        }
    }
    out
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    token: &'a str,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> CycloParseError {
        CycloParseError { token: self.token.to_string(), offset: self.pos, message: message.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>, CycloParseError> {
        let Some(num) = self.digits() else { return Ok(None) };
        let num: BigInt = num.parse().unwrap();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let Some(den) = self.digits() else { return Err(self.err("expected denominator")) };
            let den: BigInt = den.parse().unwrap();
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    fn exponent(&mut self) -> Result<u64, CycloParseError> {
        if self.peek() != Some(b'z') {
            return Err(self.err("expected `z`"));
        }
        self.pos += 1;
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let Some(d) = self.digits() else { return Err(self.err("expected exponent")) };
        d.parse().map_err(|_| self.err("exponent too large"))
    }
}

/// Parse a value whose `z` denotes a primitive `n`-th root of unity.
pub fn parse_value(token: &str, n: u64) -> Result<Cyclotomic, CycloParseError> {
    let mut p = Parser { s: token.as_bytes(), pos: 0, token };
    if n == 0 {
        return Err(p.err("conductor must be positive"));
    }
    if token.is_empty() {
        return Err(p.err("empty value"));
    }
    let mut dense = vec![BigRational::zero(); n as usize];
    let mut first = true;
    while p.pos < p.s.len() {
        let negative = match p.peek() {
            Some(b'+') if !first => {
                p.pos += 1;
                false
            }
            Some(b'-') => {
                p.pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(p.err("expected `+` or `-`")),
        };
        first = false;
        let coeff = p.coefficient()?;
        let exp = match (coeff.is_some(), p.peek()) {
            (true, Some(b'*')) => {
                p.pos += 1;
                p.exponent()?
            }
            (true, _) => 0,
            (false, Some(b'z')) => p.exponent()?,
            (false, _) => return Err(p.err("expected a coefficient or `z`")),
        };
        let mut c = coeff.unwrap_or_else(BigRational::one);
        if negative {
            c = -c;
        }
        dense[(exp % n) as usize] += c;
        if let Some(b) = p.peek() {
            if b != b'+' && b != b'-' {
                return Err(p.err(format!("unexpected character `{}`", b as char)));
            }
        }
    }
    Ok(Cyclotomic::from_dense(n, dense))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_gauss_period() {
        let v = parse_value("1*z^1+1*z^2+1*z^4", 7).unwrap();
        assert_eq!(v.to_text(7), "1*z^1+1*z^2+1*z^4");
        assert_eq!(v.to_text(21), "1*z^3+1*z^6+1*z^12");
        assert_eq!(parse_value("1*z^3+1*z^6+1*z^12", 21).unwrap(), v);
    }

    #[test]
    fn rationals_and_signs() {
        assert_eq!(parse_value("-3", 5).unwrap(), Cyclotomic::from_integer(-3));
        assert_eq!(parse_value("0", 1).unwrap().to_text(1), "0");
        let v = parse_value("z+z^2", 3).unwrap();
        assert_eq!(v, Cyclotomic::from_integer(-1));
        let w = parse_value("-1/2*z^1", 4).unwrap();
        assert_eq!(w.to_text(4), "-1/2*z^1");
        assert_eq!(parse_value("2-1*z^1", 3).unwrap().to_text(3), "-3*z^1-2*z^2");
    }

    #[test]
    fn bad_tokens() {
        assert!(parse_value("", 3).is_err());
        assert!(parse_value("1*", 3).is_err());
        assert!(parse_value("1*y^2", 3).is_err());
        assert!(parse_value("1/0", 3).is_err());
        assert!(parse_value("1++2", 3).is_err());
        assert!(parse_value("abc", 3).is_err());
    }
}
