//! Text forms for blades and multivector expressions.
//!
//! ```text
//! expr   := [+|-] term { (+|-) term }
//! term   := factor { * factor }
//! factor := scalar | ( scalar ) | e<k> | i
//! ```
//!
//! A run of generators with strictly increasing indices (`e1*e3`) denotes
//! the basis blade `e_x` itself; everything else in a term is multiplied
//! left to right with the twisted product. For Clifford cochains the two
//! readings coincide. Complex scalars with both parts must be parenthesized.

use std::sync::Arc;

use crate::algebra::{Multivector, TwistedAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar_at, Scalar};

/// Parses `1` or `e<i>*e<j>*...` with strictly increasing indices.
pub fn parse_blade(s: &str, n: usize) -> Result<u32> {
    let t = s.trim();
    if t == "1" {
        return Ok(0);
    }
    if t.is_empty() {
        return Err(Error::parse(0, "empty blade"));
    }
    let mut mask = 0u32;
    let mut last = 0usize;
    let mut pos = 0usize;
    for part in t.split('*') {
        let p = part.trim();
        let idx = p
            .strip_prefix('e')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::parse(pos, format!("expected e<k>, found {p:?}")))?;
        if idx == 0 || idx > n {
            return Err(Error::parse(pos, format!("unknown generator e{idx} for n = {n}")));
        }
        if idx <= last {
            return Err(Error::parse(pos, "blade generators must be strictly increasing"));
        }
        last = idx;
        mask |= 1 << (idx - 1);
        pos += part.len() + 1;
    }
    Ok(mask)
}

enum Factor {
    Scalar(Scalar),
    Generator(usize),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                let start = self.pos + 1;
                let close = self.src[start..]
                    .find(')')
                    .map(|k| start + k)
                    .ok_or_else(|| Error::parse(self.pos, "unclosed parenthesis"))?;
                let inner = &self.src[start..close];
                let value: Scalar = inner.trim().parse().map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::parse(start + pos, msg),
                    other => other,
                })?;
                self.pos = close + 1;
                Ok(Factor::Scalar(value))
            }
            Some(b'e') => {
                let start = self.pos;
                let mut end = start + 1;
                let bytes = self.src.as_bytes();
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let idx: usize = self.src[start + 1..end]
                    .parse()
                    .map_err(|_| Error::parse(start, "expected generator index after 'e'"))?;
                if idx == 0 || idx > self.n {
                    return Err(Error::parse(
                        start,
                        format!("unknown generator e{idx} for n = {}", self.n),
                    ));
                }
                self.pos = end;
                Ok(Factor::Generator(idx))
            }
            Some(c) if c.is_ascii_digit() || c == b'i' => {
                // unsigned literal: digits[/digits][i] or i
                let (value, end) = parse_scalar_at(self.src, self.pos)?;
                // a bare literal never swallows a following "+..." part: that
                // would be a sum of terms
                let text = &self.src[self.pos..end];
                let cut = text
                    .bytes()
                    .skip(1)
                    .position(|b| b == b'+' || b == b'-')
                    .map(|k| k + 1);
                if let Some(k) = cut {
                    let (v, e) = parse_scalar_at(&self.src[..self.pos + k], self.pos)?;
                    self.pos = e;
                    return Ok(Factor::Scalar(v));
                }
                self.pos = end;
                Ok(Factor::Scalar(value))
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected {:?}", c as char))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn term(&mut self, alg: &Arc<TwistedAlgebra>) -> Result<Multivector> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        let mut acc = alg.one();
        let mut run: u32 = 0;
        let mut last = 0usize;
        for f in factors {
            match f {
                Factor::Generator(k) if k > last => {
                    run |= 1 << (k - 1);
                    last = k;
                }
                Factor::Generator(k) => {
                    acc = acc.try_mul(&alg.basis(run))?;
                    run = 1 << (k - 1);
                    last = k;
                }
                Factor::Scalar(c) => {
                    acc = acc.scale(&c);
                }
            }
        }
        if run != 0 {
            acc = acc.try_mul(&alg.basis(run))?;
        }
        Ok(acc)
    }

    fn expr(&mut self, alg: &Arc<TwistedAlgebra>) -> Result<Multivector> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Err(Error::parse(self.pos, "empty expression"));
        }
        let mut total = alg.zero();
        let mut negative = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negative = c == b'-';
            self.pos += 1;
        }
        loop {
            let t = self.term(alg)?;
            total = if negative {
                total.try_sub(&t)?
            } else {
                total.try_add(&t)?
            };
            self.skip_ws();
            match self.peek() {
                Some(c @ (b'+' | b'-')) => {
                    negative = c == b'-';
                    self.pos += 1;
                }
                None => break,
                Some(c) => {
                    return Err(Error::parse(self.pos, format!("unexpected {:?}", c as char)))
                }
            }
        }
        Ok(total)
    }
}

/// Parses a multivector expression in `alg`.
pub fn parse_expression(src: &str, alg: &Arc<TwistedAlgebra>) -> Result<Multivector> {
    let mut p = Parser {
        src,
        pos: 0,
        n: alg.dim(),
    };
    p.expr(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::{Cochain, Signature};

    fn alg(sig: &str) -> Arc<TwistedAlgebra> {
        TwistedAlgebra::new(Cochain::clifford(&sig.parse::<Signature>().unwrap()))
    }

    #[test]
    fn examples() {
        let a = alg("--");
        let v = parse_expression("e1*e2 - e2*e1", &a).unwrap();
        assert_eq!(v, a.term(0b11, Scalar::from_int(2)));
        assert_eq!(parse_expression("1", &a).unwrap(), a.one());
        assert!(matches!(parse_expression("e3", &a), Err(Error::Parse { pos: 0, .. })));
        assert!(parse_expression("", &a).is_err());
        assert!(parse_expression("   ", &a).is_err());
    }

    #[test]
    fn scalars_and_signs() {
        let a = alg("+-+");
        let v = parse_expression("-1/2i*e1 + (3/2+1i)*e2*e3 - 2", &a).unwrap();
        assert_eq!(v.coeff(0b001), "-1/2i".parse().unwrap());
        assert_eq!(v.coeff(0b110), "3/2+1i".parse().unwrap());
        assert_eq!(v.coeff(0), Scalar::from_int(-2));
        // e2*e1 is a product, not a blade
        let w = parse_expression("e2*e1", &a).unwrap();
        assert_eq!(w, a.term(0b011, Scalar::from_int(-1)));
        // literal followed by a sum stays a sum
        let u = parse_expression("2+e1", &a).unwrap();
        assert_eq!(u.coeff(0), Scalar::from_int(2));
        assert_eq!(u.coeff(1), Scalar::one());
        let i = parse_expression("i*e1*e1", &a).unwrap();
        assert_eq!(i, a.scalar(Scalar::i()));
    }

    #[test]
    fn display_round_trips() {
        let a = alg("+-+");
        for src in ["1/2 + (2-1i)*e1*e2 - 3i*e3 - e1*e3", "0", "-e1", "7/3i + e1*e2*e3"] {
            let v = parse_expression(src, &a).unwrap();
            assert_eq!(v.to_string(), src);
            assert_eq!(parse_expression(&v.to_string(), &a).unwrap(), v);
        }
    }

    #[test]
    fn malformed_inputs() {
        let a = alg("++");
        for bad in ["e", "e1*", "(1+i", "1/0*e1", "e1 e2", "*e1", "e0"] {
            assert!(parse_expression(bad, &a).is_err(), "{bad}");
        }
    }

    #[test]
    fn blades() {
        assert_eq!(parse_blade("1", 3).unwrap(), 0);
        assert_eq!(parse_blade("e1*e3", 3).unwrap(), 0b101);
        assert!(parse_blade("e3*e1", 3).is_err());
        assert!(parse_blade("e4", 3).is_err());
        assert!(parse_blade("", 3).is_err());
    }
}
