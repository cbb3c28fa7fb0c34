//! The Euclidean Dirac operator on polynomial quaternion-valued spinors
//! `psi: Q(i)^4 -> C(0,2)`, with components in the basis `1, e1, e2, e3 = e1 e2`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Multivector, TwistedAlgebra};
use crate::cochain::{Cochain, Signature};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar_at, Scalar};

/// Exponents of `x1, x2, x3, x4`.
pub type Exponents = [u32; 4];

/// The quaternions `C(0,2)`.
pub fn quaternions() -> Arc<TwistedAlgebra> {
    static H: OnceLock<Arc<TwistedAlgebra>> = OnceLock::new();
    H.get_or_init(|| TwistedAlgebra::new(Cochain::clifford(&Signature::split(0, 2))))
        .clone()
}

/// A scalar polynomial in `x1..x4`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<Exponents, Scalar>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn monomial(e: Exponents, c: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(e, &c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, e: Exponents, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero();
        for (e, v) in &self.0 {
            out.add_term(*e, &(v * c));
        }
        out
    }

    /// Pointwise complex conjugation of the coefficients.
    pub fn conj(&self) -> Poly {
        Poly(self.0.iter().map(|(e, c)| (*e, c.conj())).collect())
    }

    /// `d/dx_a` for `a` in `1..=4`.
    pub fn derivative(&self, a: usize) -> Poly {
        let k = a - 1;
        let mut out = Poly::zero();
        for (e, c) in &self.0 {
            if e[k] == 0 {
                continue;
            }
            let mut d = *e;
            d[k] -= 1;
            out.add_term(d, &(c * &Scalar::from_int(e[k] as i64)));
        }
        out
    }
}

/// `nabla_1 = d1 + i d3` and `nabla_2 = d2 + i d4`; `bar` uses `-i`.
fn nabla(p: &Poly, k: usize, bar: bool) -> Poly {
    let i = if bar { -Scalar::i() } else { Scalar::i() };
    p.derivative(k).add(&p.derivative(k + 2).scale(&i))
}

/// A finite sum of monomials times quaternions.
#[derive(Clone, PartialEq)]
pub struct PolySpinor {
    terms: BTreeMap<Exponents, Multivector>,
}

impl PolySpinor {
    pub fn zero() -> Self {
        PolySpinor {
            terms: BTreeMap::new(),
        }
    }

    /// `x^e` times `value`, which must lie in [`quaternions`].
    pub fn monomial(e: Exponents, value: Multivector) -> Result<Self> {
        let mut out = PolySpinor::zero();
        out.add_monomial(e, &value)?;
        Ok(out)
    }

    /// `c x^e` times the basis quaternion with mask `blade` (0..4).
    pub fn basis_term(e: Exponents, blade: u32, c: Scalar) -> Self {
        let h = quaternions();
        let mut out = PolySpinor::zero();
        out.add_monomial(e, &h.term(blade, c)).expect("same algebra");
        out
    }

    /// Assembles `psi_0 + psi_1 e1 + psi_2 e2 + psi_3 e3`.
    pub fn from_components(c: &[Poly; 4]) -> Self {
        let mut out = PolySpinor::zero();
        for (blade, p) in c.iter().enumerate() {
            for (e, v) in p.terms() {
                out.add_monomial(*e, &quaternions().term(blade as u32, v.clone()))
                    .expect("same algebra");
            }
        }
        out
    }

    /// The four scalar components.
    pub fn components(&self) -> [Poly; 4] {
        let mut out: [Poly; 4] = Default::default();
        for (e, v) in &self.terms {
            for (blade, c) in v.terms() {
                out[blade as usize].add_term(*e, c);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Multivector)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_monomial(&mut self, e: Exponents, v: &Multivector) -> Result<()> {
        if !v.belongs_to(&quaternions()) {
            return Err(Error::AlgebraMismatch);
        }
        if v.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old.try_add(v)?,
            None => v.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &PolySpinor) -> PolySpinor {
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.add_monomial(*e, v).expect("same algebra");
        }
        out
    }

    pub fn sub(&self, other: &PolySpinor) -> PolySpinor {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> PolySpinor {
        let mut out = PolySpinor::zero();
        for (e, v) in &self.terms {
            out.add_monomial(*e, &v.scale(c)).expect("same algebra");
        }
        out
    }

    /// Left multiplication by a quaternion.
    pub fn left_mul(&self, q: &Multivector) -> Result<PolySpinor> {
        let mut out = PolySpinor::zero();
        for (e, v) in &self.terms {
            out.add_monomial(*e, &q.try_mul(v)?)?;
        }
        Ok(out)
    }

    /// The part whose quaternion component is the blade `blade`.
    pub fn homogeneous_part(&self, blade: u32) -> PolySpinor {
        let mut out = PolySpinor::zero();
        for (e, v) in &self.terms {
            let c = v.coeff(blade);
            if !c.is_zero() {
                out.add_monomial(*e, &quaternions().term(blade, c)).expect("same algebra");
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
}

impl fmt::Debug for PolySpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolySpinor({self})")
    }
}

fn monomial_text(e: &Exponents) -> Vec<String> {
    e.iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(k, &p)| {
            if p == 1 {
                format!("x{}", k + 1)
            } else {
                format!("x{}^{p}", k + 1)
            }
        })
        .collect()
}

impl fmt::Display for PolySpinor {
    /// Terms `coeff*x1^2*x3*e2`, ordered by monomial then component.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, v) in &self.terms {
            for (blade, c) in v.terms() {
                let mut factors = monomial_text(e);
                if blade != 0 {
                    factors.push(format!("e{blade}"));
                }
                let text = c.to_string();
                let compound = !c.is_real() && c.parts_text().0 != "0";
                let (negative, coef) = if compound {
                    (false, format!("({text})"))
                } else if let Some(rest) = text.strip_prefix('-') {
                    (true, rest.to_string())
                } else {
                    (false, text)
                };
                let body = if factors.is_empty() {
                    coef
                } else if coef == "1" {
                    factors.join("*")
                } else {
                    format!("{coef}*{}", factors.join("*"))
                };
                match (first, negative) {
                    (true, true) => write!(f, "-{body}")?,
                    (true, false) => write!(f, "{body}")?,
                    (false, true) => write!(f, " - {body}")?,
                    (false, false) => write!(f, " + {body}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

/// Parses sums of terms like `3/2*x1^2*x3*e2`, `(1+1i)*x4`, `-e3`.
/// Components are `1`, `e1`, `e2`, `e3`; `e3` is `e1 e2`.
pub fn parse_spinor(src: &str) -> Result<PolySpinor> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let digits = |pos: &mut usize| -> Option<u32> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        src[start..*pos].parse().ok()
    };
    skip(&mut pos);
    if pos == bytes.len() {
        return Err(Error::parse(pos, "empty spinor"));
    }
    let mut out = PolySpinor::zero();
    let mut negative = false;
    if matches!(bytes[pos], b'+' | b'-') {
        negative = bytes[pos] == b'-';
        pos += 1;
    }
    loop {
        let mut coef = Scalar::sign(negative);
        let mut exps = [0u32; 4];
        let mut blade: Option<u32> = None;
        loop {
            skip(&mut pos);
            let start = pos;
            match bytes.get(pos) {
                Some(b'(') => {
                    let close = src[pos..]
                        .find(')')
                        .map(|k| pos + k)
                        .ok_or_else(|| Error::parse(pos, "unclosed parenthesis"))?;
                    let v: Scalar = src[pos + 1..close].trim().parse().map_err(|e| match e {
                        Error::Parse { pos: p, msg } => Error::parse(start + 1 + p, msg),
                        other => other,
                    })?;
                    coef *= &v;
                    pos = close + 1;
                }
                Some(b'x') => {
                    pos += 1;
                    let k = digits(&mut pos)
                        .filter(|k| (1..=4).contains(k))
                        .ok_or_else(|| Error::parse(start, "expected x1..x4"))?;
                    let mut p = 1;
                    if bytes.get(pos) == Some(&b'^') {
                        pos += 1;
                        p = digits(&mut pos).ok_or_else(|| Error::parse(pos, "expected exponent"))?;
                    }
                    exps[k as usize - 1] += p;
                }
                Some(b'e') => {
                    pos += 1;
                    let k = digits(&mut pos)
                        .filter(|k| (1..=3).contains(k))
                        .ok_or_else(|| Error::parse(start, "expected component e1, e2 or e3"))?;
                    if blade.replace(k).is_some() {
                        return Err(Error::parse(start, "more than one component in a term"));
                    }
                }
                Some(c) if c.is_ascii_digit() || *c == b'i' => {
                    let (v, end) = parse_scalar_at(src, pos)?;
                    // stop a literal at a sign: that starts the next term
                    let cut = src[pos..end]
                        .bytes()
                        .skip(1)
                        .position(|b| b == b'+' || b == b'-')
                        .map(|k| k + 1);
                    let (v, end) = match cut {
                        Some(k) => parse_scalar_at(&src[..pos + k], pos)?,
                        None => (v, end),
                    };
                    coef *= &v;
                    pos = end;
                }
                Some(c) => return Err(Error::parse(pos, format!("unexpected {:?}", *c as char))),
                None => return Err(Error::parse(pos, "unexpected end of input")),
            }
            skip(&mut pos);
            if bytes.get(pos) == Some(&b'*') {
                pos += 1;
            } else {
                break;
            }
        }
        out = out.add(&PolySpinor::basis_term(exps, blade.unwrap_or(0), coef));
        skip(&mut pos);
        match bytes.get(pos) {
            None => break,
            Some(c @ (b'+' | b'-')) => {
                negative = *c == b'-';
                pos += 1;
            }
            Some(c) => return Err(Error::parse(pos, format!("unexpected {:?}", *c as char))),
        }
    }
    Ok(out)
}

/// `d psi / dx_a` for `a` in `1..=4`.
pub fn partial_derivative(psi: &PolySpinor, a: usize) -> Result<PolySpinor> {
    if !(1..=4).contains(&a) {
        return Err(Error::MaskOutOfRange { mask: a as u32, n: 4 });
    }
    let mut out = PolySpinor::zero();
    for (e, v) in &psi.terms {
        let k = a - 1;
        if e[k] == 0 {
            continue;
        }
        let mut d = *e;
        d[k] -= 1;
        out.add_monomial(d, &v.scale(&Scalar::from_int(e[k] as i64)))?;
    }
    Ok(out)
}

/// `D psi = e1 (d1 + i d3 (-1)^{|psi|_1}) psi + e2 (d2 + i d4 (-1)^{|psi|_2}) psi`,
/// applied to each `Z_2^2`-homogeneous part.
pub fn dirac_apply(psi: &PolySpinor) -> Result<PolySpinor> {
    let h = quaternions();
    let mut out = PolySpinor::zero();
    for blade in 0..4u32 {
        let part = psi.homogeneous_part(blade);
        if part.is_zero() {
            continue;
        }
        for k in 0..2usize {
            let sign = Scalar::sign((blade >> k) & 1 == 1);
            let inner = partial_derivative(&part, k + 1)?
                .add(&partial_derivative(&part, k + 3)?.scale(&(&Scalar::i() * &sign)));
            out = out.add(&inner.left_mul(&h.basis(1 << k))?);
        }
    }
    Ok(out)
}

/// The component formulas
/// `(D psi)_0 = -nb_1 psi_1 - nb_2 psi_2`, `(D psi)_1 = n_1 psi_0 + nb_2 psi_3`,
/// `(D psi)_2 = n_2 psi_0 - nb_1 psi_3`, `(D psi)_3 = n_1 psi_2 - n_2 psi_1`,
/// with `n = nabla` and `nb = nabla bar`.
pub fn dirac_component_form(psi: &PolySpinor) -> PolySpinor {
    let [p0, p1, p2, p3] = psi.components();
    let d0 = nabla(&p1, 1, true)
        .add(&nabla(&p2, 2, true))
        .scale(&Scalar::from_int(-1));
    let d1 = nabla(&p0, 1, false).add(&nabla(&p3, 2, true));
    let d2 = nabla(&p0, 2, false).sub(&nabla(&p3, 1, true));
    let d3 = nabla(&p2, 1, false).sub(&nabla(&p1, 2, false));
    PolySpinor::from_components(&[d0, d1, d2, d3])
}

type Vec3 = [Poly; 3];

/// `(nabla_1, nabla_2, 0)` or its bar applied to a scalar.
fn grad(p: &Poly, bar: bool) -> Vec3 {
    [nabla(p, 1, bar), nabla(p, 2, bar), Poly::zero()]
}

/// `D . u` with the third operator component zero.
fn div(u: &Vec3, bar: bool) -> Poly {
    nabla(&u[0], 1, bar).add(&nabla(&u[1], 2, bar))
}

/// `D x u` with the third operator component zero.
fn curl(u: &Vec3, bar: bool) -> Vec3 {
    let d = |p: &Poly, k: usize| if k == 2 { Poly::zero() } else { nabla(p, k + 1, bar) };
    [
        d(&u[2], 1).sub(&d(&u[1], 2)),
        d(&u[0], 2).sub(&d(&u[2], 0)),
        d(&u[1], 0).sub(&d(&u[0], 1)),
    ]
}

/// `(D psi)_0 = -nabla_bar . v` and `vec(D psi) = nabla psi_0 + nabla_bar x conj(v)`
/// for `v = (psi_1, psi_2, conj(psi_3))`; the third output entry is
/// conjugated back into a component.
pub fn dirac_curl_form(psi: &PolySpinor) -> PolySpinor {
    let [p0, p1, p2, p3] = psi.components();
    let v: Vec3 = [p1, p2, p3.conj()];
    let vbar: Vec3 = [v[0].conj(), v[1].conj(), v[2].conj()];
    let d0 = div(&v, true).scale(&Scalar::from_int(-1));
    let g = grad(&p0, false);
    let c = curl(&vbar, true);
    let out = [g[0].add(&c[0]), g[1].add(&c[1]), g[2].add(&c[2])];
    PolySpinor::from_components(&[d0, out[0].clone(), out[1].clone(), out[2].conj()])
}

/// `sum_a d_a^2 psi`.
pub fn laplacian(psi: &PolySpinor) -> Result<PolySpinor> {
    let mut out = PolySpinor::zero();
    for a in 1..=4 {
        out = out.add(&partial_derivative(&partial_derivative(psi, a)?, a)?);
    }
    Ok(out)
}

/// All exponent vectors of total degree at most `d`.
pub fn monomials_up_to(d: u32) -> Vec<Exponents> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                for e in 0..=d - a - b - c {
                    out.push([a, b, c, e]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> PolySpinor {
        parse_spinor(s).unwrap()
    }

    #[test]
    fn derivatives() {
        assert_eq!(partial_derivative(&sp("x1^2"), 1).unwrap(), sp("2*x1"));
        assert!(partial_derivative(&sp("x1*e1"), 3).unwrap().is_zero());
        let p = sp("x1^2*x2 + 3*x2^3*x1*e2");
        let a = partial_derivative(&partial_derivative(&p, 1).unwrap(), 2).unwrap();
        let b = partial_derivative(&partial_derivative(&p, 2).unwrap(), 1).unwrap();
        assert_eq!(a, b);
        assert!(partial_derivative(&p, 5).is_err());
    }

    #[test]
    fn dirac_examples() {
        assert_eq!(dirac_apply(&sp("x1")).unwrap(), sp("e1"));
        let once = dirac_apply(&sp("x1^2")).unwrap();
        assert_eq!(once, sp("2*x1*e1"));
        assert_eq!(dirac_apply(&once).unwrap(), sp("-2"));
        assert_eq!(dirac_apply(&sp("x1*e1")).unwrap(), sp("-1"));
    }

    #[test]
    fn component_examples() {
        assert_eq!(dirac_component_form(&sp("x1*e1")), sp("-1"));
        assert_eq!(dirac_component_form(&sp("x3")).components()[1], Poly::monomial([0; 4], Scalar::i()));
        let out = dirac_component_form(&sp("x2*e3"));
        assert_eq!(out.components()[1], Poly::monomial([0; 4], Scalar::one()));
        assert_eq!(out, dirac_apply(&sp("x2*e3")).unwrap());
    }

    #[test]
    fn curl_examples() {
        assert_eq!(dirac_curl_form(&sp("x1*e1")).components()[0], Poly::monomial([0; 4], -Scalar::one()));
        let psi = sp("x1*x2 + i*x3^2");
        let out = dirac_curl_form(&psi);
        let g = grad(&psi.components()[0], false);
        assert_eq!(out.components()[1], g[0]);
        assert_eq!(out.components()[2], g[1]);
        let psi = sp("(1+2i)*x1*x4*e3 - 1/2i*x2^2*e1 + x3*e2");
        assert_eq!(dirac_curl_form(&psi), dirac_component_form(&psi));
        assert_eq!(dirac_apply(&psi).unwrap(), dirac_component_form(&psi));
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(laplacian(&sp("x1^2")).unwrap(), sp("2"));
        assert!(laplacian(&sp("x1*x2*e3")).unwrap().is_zero());
        let psi = sp("x1^2*e2 + x3^3*e1");
        assert_eq!(laplacian(&psi).unwrap(), sp("2*e2 + 6*x3*e1"));
    }

    #[test]
    fn square_is_minus_laplacian_on_a_sample() {
        for e in monomials_up_to(2) {
            for blade in 0..4 {
                let psi = PolySpinor::basis_term(e, blade, Scalar::one());
                let dd = dirac_apply(&dirac_apply(&psi).unwrap()).unwrap();
                let lap = laplacian(&psi).unwrap().scale(&Scalar::from_int(-1));
                assert_eq!(dd, lap, "{psi}");
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "-1", "x1", "2*x1*e1", "(1+1i)*x2^3*x4 - 1/2i*x1*e3", "1i*e2"] {
            let p = sp(s);
            assert_eq!(p.to_string(), s);
            assert_eq!(sp(&p.to_string()), p);
        }
        for bad in ["", "x5", "e4", "x1*e1*e2", "x1 x2", "(1+i"] {
            assert!(parse_spinor(bad).is_err(), "{bad}");
        }
    }
}
