//! Gaussian rationals `Q(i)`, the coefficient field of every algebra here.
//!
//! Text form is `a/b+c/di`: a real part, an imaginary part suffixed with
//! `i`, or both joined by `+`/`-`. `Display` and `FromStr` round-trip.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::{rational_sqrt, Rational};

/// An element `re + im*i` of `Q(i)` in canonical reduced form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar {
            re: Rational::from_int(v),
            im: Rational::zero(),
        }
    }

    /// The real rational `numer/denom`.
    pub fn ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar {
            re: Rational::new(numer.into(), denom.into()),
            im: Rational::zero(),
        })
    }

    /// `(rn/rd) + (in_/id)*i`.
    pub fn gaussian(rn: i64, rd: i64, in_: i64, id: i64) -> Result<Self> {
        let re = Scalar::ratio(rn, rd)?;
        let im = Scalar::ratio(in_, id)?;
        Ok(re + im * Scalar::i())
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar {
            re: Rational::new(numer, denom),
            im: Rational::zero(),
        })
    }

    /// `+1` or `-1`.
    pub fn sign(negative: bool) -> Self {
        Scalar::from_int(if negative { -1 } else { 1 })
    }

    /// `i^k`, reduced by `k mod 4`.
    pub fn i_power(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Scalar::from_int(1),
            1 => Scalar::i(),
            2 => Scalar::from_int(-1),
            _ => -Scalar::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for `+1` and `-1`.
    pub fn is_unit_sign(&self) -> bool {
        self.im.is_zero() && self.re.abs().is_one()
    }

    /// Complex conjugate `re - im*i`.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Real and imaginary parts as decimal text, for diagnostics.
    pub fn parts_text(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }

    /// Approximate value, for display only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// `|z|^2 = re^2 + im^2`, as a real scalar.
    pub fn norm_sqr(&self) -> Scalar {
        Scalar {
            re: &(&self.re * &self.re) + &(&self.im * &self.im),
            im: Rational::zero(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.im.is_zero() {
            let re = self.re.recip().ok_or(Error::DivisionByZero)?;
            return Ok(Scalar {
                re,
                im: Rational::zero(),
            });
        }
        let n = &(&self.re * &self.re) + &(&self.im * &self.im);
        let inv_n = n.recip().ok_or(Error::DivisionByZero)?;
        Ok(Scalar {
            re: &self.re * &inv_n,
            im: -&(&self.im * &inv_n),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root in `Q(i)`, if one exists. Of the two roots, the one
    /// with positive real part (or positive imaginary part when the real part
    /// is zero) is returned.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.im.is_zero() {
            return if self.re.is_negative() {
                rational_sqrt(&-&self.re).map(|r| Scalar {
                    re: Rational::zero(),
                    im: r,
                })
            } else {
                rational_sqrt(&self.re).map(|r| Scalar {
                    re: r,
                    im: Rational::zero(),
                })
            };
        }
        // (p + qi)^2 = a + bi  =>  p^2 = (a + |z|)/2, q = b / 2p
        let modulus = rational_sqrt(&(&(&self.re * &self.re) + &(&self.im * &self.im)))?;
        let half = Rational::new(1.into(), 2.into());
        let p = rational_sqrt(&(&(&self.re + &modulus) * &half))?;
        let q = &(&self.im * &half) * &p.recip()?;
        Some(Scalar { re: p, im: q })
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Scalar {
                re: &self.re * &rhs.re,
                im: Rational::zero(),
            },
            (true, false) => Scalar {
                re: &self.re * &rhs.re,
                im: &self.re * &rhs.im,
            },
            (false, true) => Scalar {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            },
            (false, false) => Scalar {
                re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
                im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
            },
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -&self.im)
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// Parses `[-]int[/int]` starting at `pos`; returns the value and the end.
fn parse_rational(s: &str, pos: usize) -> Result<(Rational, usize)> {
    let bytes = s.as_bytes();
    let mut i = pos;
    let neg = bytes.get(i) == Some(&b'-');
    if neg {
        i += 1;
    }
    let digits = |start: usize| {
        let mut j = start;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    let end = digits(i);
    if end == i {
        return Err(Error::parse(i, "expected digits"));
    }
    let numer: BigInt = s[i..end].parse().map_err(|_| Error::parse(i, "bad integer"))?;
    let mut denom = BigInt::from(1);
    let mut j = end;
    if bytes.get(j) == Some(&b'/') {
        let dend = digits(j + 1);
        if dend == j + 1 {
            return Err(Error::parse(j + 1, "expected denominator digits"));
        }
        denom = s[j + 1..dend]
            .parse()
            .map_err(|_| Error::parse(j + 1, "bad integer"))?;
        if denom == BigInt::from(0) {
            return Err(Error::parse(j + 1, "zero denominator"));
        }
        j = dend;
    }
    let numer = if neg { -numer } else { numer };
    Ok((Rational::new(numer, denom), j))
}

/// Parses one real-or-imaginary part: `[-]rat`, `[-]rat i`, `[-]i`.
fn parse_part(s: &str, pos: usize) -> Result<(Rational, bool, usize)> {
    let bytes = s.as_bytes();
    let neg = bytes.get(pos) == Some(&b'-');
    let start = if neg { pos + 1 } else { pos };
    if bytes.get(start) == Some(&b'i') {
        let v = if neg {
            Rational::from_int(-1)
        } else {
            Rational::one()
        };
        return Ok((v, true, start + 1));
    }
    let (v, end) = parse_rational(s, pos)?;
    if bytes.get(end) == Some(&b'i') {
        Ok((v, true, end + 1))
    } else {
        Ok((v, false, end))
    }
}

/// Parses a scalar literal embedded in a larger string; returns the end index.
pub(crate) fn parse_scalar_at(s: &str, pos: usize) -> Result<(Scalar, usize)> {
    let (first, first_imag, end) = parse_part(s, pos)?;
    if first_imag {
        return Ok((
            Scalar {
                re: Rational::zero(),
                im: first,
            },
            end,
        ));
    }
    let bytes = s.as_bytes();
    if let Some(&op @ (b'+' | b'-')) = bytes.get(end) {
        // only a trailing imaginary part may follow a real part
        let sign_pos = if op == b'-' { end } else { end + 1 };
        if let Ok((second, true, end2)) = parse_part(s, sign_pos) {
            return Ok((
                Scalar {
                    re: first,
                    im: second,
                },
                end2,
            ));
        }
    }
    Ok((
        Scalar {
            re: first,
            im: Rational::zero(),
        },
        end,
    ))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(0, "empty scalar"));
        }
        let (v, end) = parse_scalar_at(t, 0)?;
        if end != t.len() {
            return Err(Error::parse(end, "trailing characters in scalar"));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn field_examples() {
        assert_eq!(s("1+1i") * s("1-1i"), s("2"));
        assert_eq!(Scalar::i() * Scalar::i(), s("-1"));
        let q = s("3/2+1/2i").checked_div(&Scalar::i()).unwrap();
        assert_eq!(q, s("1/2-3/2i"));
        assert_eq!(q * Scalar::i(), s("3/2+1/2i"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(Scalar::ratio(1, 0).is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    fn i_power_values() {
        assert_eq!(Scalar::i_power(0), s("1"));
        assert_eq!(Scalar::i_power(2), s("-1"));
        assert_eq!(Scalar::i_power(3), s("-1i"));
        assert_eq!(Scalar::i_power(-1), s("-1i"));
        for k in -8..=8 {
            for m in -8..=8 {
                assert_eq!(Scalar::i_power(k) * Scalar::i_power(m), Scalar::i_power(k + m));
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(s("1+1i").conj(), s("1-1i"));
        let a = s("3/7-2i");
        assert_eq!(a.conj().conj(), a);
        let (x, y) = (s("1+1i"), s("2-1i"));
        assert_eq!((&x * &y).conj(), x.conj() * y.conj());
        // (1+i)(2-i) = 3+i
        assert_eq!(&x * &y, s("3+1i"));
    }

    #[test]
    fn text_form() {
        for text in ["0", "1", "-1/2i", "3/2+1i", "3/2-1i", "-7", "2/3i"] {
            assert_eq!(s(text).to_string(), text);
        }
        assert_eq!(s("i"), Scalar::i());
        assert_eq!(s("-i"), -Scalar::i());
        assert_eq!(s("4/6"), s("2/3"));
        assert_eq!(s(" 1 "), Scalar::one());
        assert!("".parse::<Scalar>().is_err());
        assert!("1+".parse::<Scalar>().is_err());
        assert!("1/".parse::<Scalar>().is_err());
        assert!("1i+2".parse::<Scalar>().is_err());
    }

    #[test]
    fn sqrt_in_gaussian_rationals() {
        assert_eq!(s("-1").sqrt(), Some(Scalar::i()));
        assert_eq!(s("9/4").sqrt(), Some(s("3/2")));
        assert_eq!(s("2").sqrt(), None);
        // (1+i)^2 = 2i
        assert_eq!(s("2i").sqrt(), Some(s("1+1i")));
        assert_eq!(s("-3+4i").sqrt(), Some(s("1+2i")));
        assert_eq!(s("1i").sqrt(), None);
    }

    #[test]
    fn big_values_stay_exact() {
        let big = Scalar::from_int(i64::MAX);
        let p = big.pow(5);
        let back = p.checked_div(&big.pow(4)).unwrap();
        assert_eq!(back, big);
        assert_eq!(p.to_string().parse::<Scalar>().unwrap(), p);
    }
}
