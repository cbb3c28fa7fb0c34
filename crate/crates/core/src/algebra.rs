//! The twisted group algebra `k_F Z_2^n` and its elements.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::{full_mask, GroupElement};
use crate::scalar::Scalar;

/// `k_F Z_2^n`: the group algebra's vector space with product
/// `e_x . e_y = F(x, y) e_{x+y}`. Non-cocycle cochains are allowed; the
/// result is then a quasialgebra and `is_associative` reports false.
pub struct TwistedAlgebra {
    cochain: Cochain,
    associative: OnceLock<Result<bool>>,
}

impl TwistedAlgebra {
    pub fn new(cochain: Cochain) -> Arc<Self> {
        Arc::new(TwistedAlgebra {
            cochain,
            associative: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.cochain.dim()
    }

    /// Number of basis blades, `2^n`.
    pub fn size(&self) -> usize {
        1usize << self.dim()
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    /// `dF == 1`, checked exhaustively on first use and cached.
    pub fn is_associative(&self) -> Result<bool> {
        self.associative
            .get_or_init(|| self.cochain.is_cocycle())
            .clone()
    }

    pub fn zero(self: &Arc<Self>) -> Multivector {
        Multivector {
            algebra: Arc::clone(self),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(self: &Arc<Self>, c: Scalar) -> Multivector {
        self.term(0, c)
    }

    pub fn one(self: &Arc<Self>) -> Multivector {
        self.scalar(Scalar::one())
    }

    /// The basis blade `e_x`.
    pub fn blade(self: &Arc<Self>, x: GroupElement) -> Result<Multivector> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(self.term(x.mask(), Scalar::one()))
    }

    /// The blade with raw mask `x`; panics if `x >= 2^n`.
    pub fn basis(self: &Arc<Self>, x: u32) -> Multivector {
        assert!(x & !full_mask(self.dim()) == 0, "mask {x:#b} out of range");
        self.term(x, Scalar::one())
    }

    /// The generator `e_i`, 1-based.
    pub fn generator(self: &Arc<Self>, i: usize) -> Result<Multivector> {
        self.blade(GroupElement::generator(i, self.dim())?)
    }

    /// `c e_x` for a raw mask.
    pub fn term(self: &Arc<Self>, x: u32, c: Scalar) -> Multivector {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(x, c);
        }
        Multivector {
            algebra: Arc::clone(self),
            coeffs,
        }
    }

    /// Builds an element from `(mask, coefficient)` pairs; repeated masks add.
    pub fn from_terms(
        self: &Arc<Self>,
        terms: impl IntoIterator<Item = (u32, Scalar)>,
    ) -> Result<Multivector> {
        let mut out = self.zero();
        for (x, c) in terms {
            if x & !full_mask(self.dim()) != 0 {
                return Err(Error::MaskOutOfRange { mask: x, n: self.dim() });
            }
            out.add_term(x, &c);
        }
        Ok(out)
    }

    /// Full `2^n x 2^n` blade product table: entry `(x, y)` is `F(x, y)`
    /// (the product is `F(x,y) e_{x^y}`).
    pub fn product_table(&self) -> Result<Vec<Scalar>> {
        self.cochain.table()
    }
}

impl fmt::Debug for TwistedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistedAlgebra")
            .field("n", &self.dim())
            .field("cochain", &self.cochain)
            .finish()
    }
}

/// Display form of a blade: `1` for the identity, else `e1*e3` style.
pub fn blade_name(x: u32) -> String {
    if x == 0 {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut rest = x;
    while rest != 0 {
        let i = rest.trailing_zeros();
        parts.push(format!("e{}", i + 1));
        rest &= rest - 1;
    }
    parts.join("*")
}

/// An element of a twisted group algebra, as a sparse blade expansion.
#[derive(Clone)]
pub struct Multivector {
    algebra: Arc<TwistedAlgebra>,
    coeffs: BTreeMap<u32, Scalar>,
}

impl Multivector {
    pub fn algebra(&self) -> &Arc<TwistedAlgebra> {
        &self.algebra
    }

    pub fn coeff(&self, x: u32) -> Scalar {
        self.coeffs.get(&x).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.coeffs.iter().map(|(x, c)| (*x, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// The scalar value if this is `c * 1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// `(x, c)` if this is a single nonzero term `c e_x`.
    pub fn as_term(&self) -> Option<(u32, Scalar)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(x, c)| (*x, c.clone()))
        } else {
            None
        }
    }

    /// Dense coefficient vector of length `2^n`.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.algebra.size()];
        for (x, c) in &self.coeffs {
            v[*x as usize] = c.clone();
        }
        v
    }

    pub(crate) fn add_term(&mut self, x: u32, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(x).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&x);
        }
    }

    /// True when `self` lives in `alg` (same handle or an equal cochain).
    pub fn belongs_to(&self, alg: &Arc<TwistedAlgebra>) -> bool {
        Arc::ptr_eq(&self.algebra, alg) || self.algebra.cochain == alg.cochain
    }

    pub(crate) fn same_algebra(&self, other: &Multivector) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra)
            || self.algebra.cochain == other.algebra.cochain
        {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (x, c) in &other.coeffs {
            out.add_term(*x, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Multivector) -> Result<Multivector> {
        self.try_add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        let mut out = self.algebra.zero();
        if c.is_zero() {
            return out;
        }
        for (x, v) in &self.coeffs {
            out.coeffs.insert(*x, v * c);
        }
        out
    }

    /// The twisted product, the bilinear extension of
    /// `e_x . e_y = F(x, y) e_{x+y}`.
    pub fn try_mul(&self, other: &Multivector) -> Result<Multivector> {
        self.same_algebra(other)?;
        let f = self.algebra.cochain();
        let mut out = self.algebra.zero();
        for (x, a) in &self.coeffs {
            for (y, b) in &other.coeffs {
                let c = &(a * b) * &f.value(*x, *y);
                out.add_term(x ^ y, &c);
            }
        }
        Ok(out)
    }

    /// Applies `e_x -> d(x) e_x` for a diagonal map `d`.
    pub fn map_diagonal(&self, d: impl Fn(u32) -> Scalar) -> Multivector {
        let mut out = self.algebra.zero();
        for (x, c) in &self.coeffs {
            out.add_term(*x, &(c * &d(*x)));
        }
        out
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> Multivector {
        let mut out = self.algebra.zero();
        for (x, c) in &self.coeffs {
            out.coeffs.insert(*x, c.conj());
        }
        out
    }
}

impl PartialEq for Multivector {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other).is_ok() && self.coeffs == other.coeffs
    }
}

impl fmt::Display for Multivector {
    /// Ascending blade order; `0` for the zero element. Complex coefficients
    /// with both parts are parenthesized so the output parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (x, c)) in self.coeffs.iter().enumerate() {
            let text = c.to_string();
            let compound = !c.is_real() && !c.parts_text().0.eq("0");
            let (negative, body) = if compound {
                (false, format!("({text})"))
            } else if let Some(rest) = text.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, text)
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            match (*x, body.as_str()) {
                (0, _) => write!(f, "{body}")?,
                (_, "1") => write!(f, "{}", blade_name(*x))?,
                _ => write!(f, "{body}*{}", blade_name(*x))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({self})")
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, rhs: &'a Multivector) -> Multivector {
        self.try_add(rhs).expect("multivectors from different algebras")
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &'a Multivector) -> Multivector {
        self.try_sub(rhs).expect("multivectors from different algebras")
    }
}

impl<'a> Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &'a Multivector) -> Multivector {
        self.try_mul(rhs).expect("multivectors from different algebras")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(&Scalar::from_int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::Signature;

    fn clifford(sig: &str) -> Arc<TwistedAlgebra> {
        TwistedAlgebra::new(Cochain::clifford(&sig.parse::<Signature>().unwrap()))
    }

    #[test]
    fn generator_relations_small() {
        let c01 = clifford("-");
        let e1 = c01.generator(1).unwrap();
        assert_eq!(&e1 * &e1, c01.scalar(Scalar::from_int(-1)));

        let sig: Signature = "3,-1/2".parse().unwrap();
        let alg = TwistedAlgebra::new(Cochain::clifford(&sig));
        let (e1, e2) = (alg.generator(1).unwrap(), alg.generator(2).unwrap());
        assert!((&(&e1 * &e2) + &(&e2 * &e1)).is_zero());
        let e12 = &e1 * &e2;
        let q1q2 = sig.q(1) * sig.q(2);
        assert_eq!(&e12 * &e12, alg.scalar(-q1q2));
        assert_eq!(&e12 * &e1, alg.term(0b10, -sig.q(1).clone()));
        assert_eq!(&e12 * &e2, alg.term(0b01, sig.q(2).clone()));
    }

    #[test]
    fn linear_ops() {
        let alg = clifford("++");
        let e1 = alg.basis(1);
        let e2 = alg.basis(2);
        assert_eq!(&e1 + &e1, alg.term(1, Scalar::from_int(2)));
        assert!(e1.scale(&Scalar::zero()).is_zero());
        let back = &(&e1 + &e2) + &e2.scale(&Scalar::from_int(-1));
        assert_eq!(back, e1);
        assert_eq!(back.num_terms(), 1);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = clifford("++");
        let b = clifford("+-");
        assert_eq!(a.basis(1).try_mul(&b.basis(1)), Err(Error::AlgebraMismatch));
        assert_eq!(a.basis(1).try_add(&b.basis(1)), Err(Error::AlgebraMismatch));
        // structurally equal algebras are compatible
        let a2 = clifford("++");
        assert!(a.basis(1).try_add(&a2.basis(2)).is_ok());
    }

    #[test]
    fn display_is_deterministic() {
        let alg = clifford("+++");
        assert_eq!(alg.zero().to_string(), "0");
        let m = alg
            .from_terms([
                (0b101, Scalar::from_int(-1)),
                (0, Scalar::ratio(1, 2).unwrap()),
                (0b011, "2-1i".parse().unwrap()),
                (0b100, "-3i".parse().unwrap()),
            ])
            .unwrap();
        assert_eq!(m.to_string(), "1/2 + (2-1i)*e1*e2 - 3i*e3 - e1*e3");
        assert_eq!(alg.basis(0b101).to_string(), "e1*e3");
        assert_eq!(alg.one().to_string(), "1");
    }

    #[test]
    fn associativity_flag() {
        assert_eq!(clifford("+-+").is_associative(), Ok(true));
        let f = Cochain::tabulate(2, |x, y| {
            if x == 1 && y == 1 { Scalar::from_int(2) } else { Scalar::one() }
        })
        .unwrap();
        assert_eq!(TwistedAlgebra::new(f).is_associative(), Ok(false));
    }
}
