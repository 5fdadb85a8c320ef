//! Parser for cyclotomic scalars written on the command line.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := rational ['*' power] | power
//! power   := 'eta' ['^' ['-'] digits]
//! rational:= digits ['/' digits]
//! ```
//!
//! Examples: `1/2`, `-3`, `eta`, `2/3*eta^2 - 1`, `1 - eta^-1`.

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn keyword(&mut self, kw: &str) -> bool {
        if self.s[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }
}

fn err(src: &str, what: &str) -> Error {
    Error::Parse(format!("{what} in scalar {src:?}"))
}

fn parse_power(cur: &mut Cursor<'_>, src: &str) -> Result<i64> {
    if !cur.keyword("eta") {
        return Err(err(src, "expected 'eta'"));
    }
    if !cur.eat(b'^') {
        return Ok(1);
    }
    let neg = cur.eat(b'-');
    let d = cur.digits().ok_or_else(|| err(src, "expected exponent"))?;
    let e: i64 = d.parse().map_err(|_| err(src, "exponent overflow"))?;
    Ok(if neg { -e } else { e })
}

fn parse_term(cur: &mut Cursor<'_>, ell: u32, src: &str) -> Result<Cyclotomic> {
    if cur.peek() == Some(b'e') {
        let m = parse_power(cur, src)?;
        return Ok(Cyclotomic::eta_pow(ell, m));
    }
    let p = cur.digits().ok_or_else(|| err(src, "expected number or 'eta'"))?;
    let mut r: Rational = p.parse()?;
    if cur.eat(b'/') {
        let q = cur.digits().ok_or_else(|| err(src, "expected denominator"))?;
        r = format!("{p}/{q}").parse()?;
    }
    if cur.eat(b'*') {
        let m = parse_power(cur, src)?;
        return Ok(Cyclotomic::eta_pow(ell, m).scale(&r));
    }
    Ok(Cyclotomic::from_rational(ell, r))
}

/// Parses one scalar of Q(η_ℓ).
pub fn parse_cyclotomic(src: &str, ell: u32) -> Result<Cyclotomic> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err(src, "empty expression"));
    }
    let mut cur = Cursor {
        s: compact.as_bytes(),
        pos: 0,
    };
    let mut sign_neg = cur.eat(b'-');
    if !sign_neg {
        cur.eat(b'+');
    }
    let mut acc = Cyclotomic::zero(ell);
    loop {
        let t = parse_term(&mut cur, ell, src)?;
        acc = if sign_neg { &acc - &t } else { &acc + &t };
        match cur.peek() {
            None => break,
            Some(b'+') => sign_neg = false,
            Some(b'-') => sign_neg = true,
            Some(_) => return Err(err(src, "unexpected character")),
        }
        cur.pos += 1;
    }
    Ok(acc)
}

/// Parses a comma-separated list of scalars; an empty string yields an empty list.
pub fn parse_cyclotomic_list(src: &str, ell: u32) -> Result<Vec<Cyclotomic>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    src.split(',').map(|s| parse_cyclotomic(s, ell)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_forms() {
        assert_eq!(
            parse_cyclotomic("1/2", 3).unwrap(),
            Cyclotomic::from_rational(3, Rational::new(1, 2).unwrap())
        );
        assert_eq!(parse_cyclotomic("-3", 3).unwrap(), Cyclotomic::from_int(3, -3));
        assert_eq!(parse_cyclotomic("eta", 5).unwrap(), Cyclotomic::eta_pow(5, 1));
        assert_eq!(parse_cyclotomic("eta^-1", 5).unwrap(), Cyclotomic::eta_pow(5, 4));
    }

    #[test]
    fn sums() {
        let z = parse_cyclotomic(" 2/3*eta^2 - 1 + eta ", 5).unwrap();
        let want = &(&Cyclotomic::eta_pow(5, 2).scale(&Rational::new(2, 3).unwrap()) - &Cyclotomic::one(5))
            + &Cyclotomic::eta_pow(5, 1);
        assert_eq!(z, want);
        // display output parses back
        assert_eq!(parse_cyclotomic(&z.to_string(), 5).unwrap(), z);
    }

    #[test]
    fn lists_and_errors() {
        let v = parse_cyclotomic_list("1, eta, 1/2*eta^2", 3).unwrap();
        assert_eq!(v.len(), 3);
        assert!(parse_cyclotomic_list("", 3).unwrap().is_empty());
        assert!(parse_cyclotomic("", 3).is_err());
        assert!(parse_cyclotomic("1/", 3).is_err());
        assert!(parse_cyclotomic("x", 3).is_err());
        assert!(parse_cyclotomic("1 +", 3).is_err());
        assert!(parse_cyclotomic("1/0", 3).is_err());
    }
}
