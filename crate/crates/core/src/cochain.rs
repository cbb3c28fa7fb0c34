//! Normalized 2-cochains on `Z_2^n`, their coboundary and braiding.
//!
//! A cochain `F` is a nowhere-zero function with `F(0, y) = F(x, 0) = 1`.
//! The twisted product is `e_x . e_y = F(x, y) e_{x+y}`; its associator is
//! the coboundary
//!
//! ```text
//! dF(x, y, z) = F(x, y) F(x+y, z) / (F(y, z) F(x, y+z))
//! ```
//!
//! and its braiding is `R(x, y) = F(x, y) / F(y, x)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{self, check_same, full_mask, ordered_pair_parity, rho, GroupElement, MAX_DIM};
use crate::scalar::Scalar;

/// Dense tables are capped here: `2^n x 2^n` entries.
pub const MAX_TABLE_DIM: usize = 12;
/// Exhaustive `8^n` checks are capped here.
pub const MAX_EXHAUSTIVE_DIM: usize = 12;

/// The diagonal values `q_i = q(e_i)` of a quadratic form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    q: Vec<Scalar>,
    /// Bit `i` set iff `q_{i+1} = -1`; only meaningful when `unit`.
    neg_mask: u32,
    unit: bool,
}

impl Signature {
    pub fn new(q: Vec<Scalar>) -> Result<Self> {
        if q.len() > MAX_DIM {
            return Err(Error::TooLarge {
                what: "signature length",
                n: q.len(),
                limit: MAX_DIM,
            });
        }
        if let Some(i) = q.iter().position(Scalar::is_zero) {
            return Err(Error::ZeroSignature { index: i + 1 });
        }
        let unit = q.iter().all(Scalar::is_unit_sign);
        let neg_mask = q
            .iter()
            .enumerate()
            .filter(|(_, v)| unit && v.is_unit_sign() && !v.is_one())
            .fold(0u32, |m, (i, _)| m | (1 << i));
        Ok(Signature { q, neg_mask, unit })
    }

    /// A `+-1` signature: `negative[i]` means `q_{i+1} = -1`.
    pub fn from_signs(negative: &[bool]) -> Self {
        Signature::new(negative.iter().map(|&b| Scalar::sign(b)).collect())
            .expect("signs are nonzero")
    }

    /// `C(r, s)`: `r` entries `+1` followed by `s` entries `-1`.
    pub fn split(r: usize, s: usize) -> Self {
        let mut signs = vec![false; r];
        signs.extend(std::iter::repeat(true).take(s));
        Signature::from_signs(&signs)
    }

    /// The `+-1` signature on `n` generators whose negative entries are the set
    /// bits of `neg_mask`.
    pub fn from_neg_mask(n: usize, neg_mask: u32) -> Self {
        let signs: Vec<bool> = (0..n).map(|i| (neg_mask >> i) & 1 == 1).collect();
        Signature::from_signs(&signs)
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    /// `q_i`, 1-based.
    pub fn q(&self, i: usize) -> &Scalar {
        &self.q[i - 1]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.q
    }

    /// True when every `q_i` is `+1` or `-1`.
    pub fn is_unit(&self) -> bool {
        self.unit
    }

    pub fn neg_mask(&self) -> Option<u32> {
        self.unit.then_some(self.neg_mask)
    }

    /// Counts of `+1` and `-1` entries, for `+-1` signatures.
    pub fn counts(&self) -> Option<(usize, usize)> {
        self.unit.then(|| {
            let s = self.neg_mask.count_ones() as usize;
            (self.q.len() - s, s)
        })
    }

    /// `prod_i q_i^{x_i}`.
    pub fn product_over(&self, x: u32) -> Scalar {
        if self.unit {
            return Scalar::sign(rho(x & self.neg_mask) & 1 == 1);
        }
        let mut acc = Scalar::one();
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc = &acc * &self.q[i];
            rest &= rest - 1;
        }
        acc
    }

    pub fn concat(&self, other: &Signature) -> Result<Signature> {
        let mut q = self.q.clone();
        q.extend(other.q.iter().cloned());
        Signature::new(q)
    }

    pub fn negated(&self) -> Signature {
        Signature::new(self.q.iter().map(|v| -v).collect()).expect("nonzero stays nonzero")
    }

    /// Reorders generators: entry `i` of the result is `q_{perm[i]+1}`.
    pub fn permuted(&self, perm: &[usize]) -> Signature {
        Signature::new(perm.iter().map(|&p| self.q[p].clone()).collect())
            .expect("permutation of a valid signature")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit {
            for v in &self.q {
                write!(f, "{}", if v.is_one() { '+' } else { '-' })?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.q.iter().map(Scalar::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature({self})")
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Either `+-+-` shorthand, optionally comma-separated, or a
    /// comma-separated list of scalars.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Signature::new(Vec::new());
        }
        if t.chars().all(|c| matches!(c, '+' | '-' | ',' | ' ')) {
            let signs: Vec<bool> = t.chars().filter(|c| matches!(c, '+' | '-')).map(|c| c == '-').collect();
            return Ok(Signature::from_signs(&signs));
        }
        let mut q = Vec::new();
        let mut offset = 0;
        for part in t.split(',') {
            let v: Scalar = part.parse().map_err(|e| match e {
                Error::Parse { pos, msg } => Error::parse(offset + pos, msg),
                other => other,
            })?;
            q.push(v);
            offset += part.len() + 1;
        }
        Signature::new(q)
    }
}

/// A `Z_2`-valued function `xi` on `Z_2^n` (the exponent of a sign grading).
#[derive(Clone, PartialEq, Debug)]
pub enum XiFn {
    Zero,
    /// `xi = rho mod 2`.
    Rho,
    Bits(Arc<Vec<bool>>),
    /// `xi_bar(x, x_top) = xi(x) + x_top`, with `x_top` at bit `parent_n`.
    Step { parent: Arc<XiFn>, parent_n: usize },
}

impl XiFn {
    pub fn eval(&self, x: u32) -> bool {
        match self {
            XiFn::Zero => false,
            XiFn::Rho => rho(x) & 1 == 1,
            XiFn::Bits(b) => b[x as usize],
            XiFn::Step { parent, parent_n } => {
                let top = (x >> parent_n) & 1 == 1;
                parent.eval(x & full_mask(*parent_n)) ^ top
            }
        }
    }
}

/// A `Z_2`-valued function `f` on pairs, defining the cochain `(-1)^f`.
#[derive(Clone, PartialEq, Debug)]
pub enum SignFn {
    Zero,
    /// Dense row-major `2^n x 2^n` table.
    Bits(Arc<Vec<bool>>),
    /// One doubling step in sign form:
    /// `f_bar((x,a),(y,b)) = f(x,y) + a (b eps + xi(y))`.
    Step(Arc<SignStep>),
}

#[derive(Clone, PartialEq, Debug)]
pub struct SignStep {
    pub parent: SignFn,
    pub parent_xi: XiFn,
    pub parent_n: usize,
    pub epsilon: bool,
}

impl SignFn {
    pub fn eval(&self, n: usize, x: u32, y: u32) -> bool {
        match self {
            SignFn::Zero => false,
            SignFn::Bits(b) => b[((x as usize) << n) | y as usize],
            SignFn::Step(step) => {
                let pn = step.parent_n;
                let low = full_mask(pn);
                let (xl, yl) = (x & low, y & low);
                let a = (x >> pn) & 1 == 1;
                let b = (y >> pn) & 1 == 1;
                let mut v = step.parent.eval(pn, xl, yl);
                if a {
                    v ^= (b && step.epsilon) ^ step.parent_xi.eval(yl);
                }
                v
            }
        }
    }
}

/// A grading function `s : Z_2^n -> k*` with `s(0) = 1`.
#[derive(Clone, PartialEq, Debug)]
pub enum Grading {
    Trivial,
    /// `s(x) = (-1)^{x . m}`; the parity grading is `m = (1,...,1)`.
    Character(u32),
    /// `s(x) = (-1)^{xi(x)}`.
    Sign(XiFn),
    Table(Arc<Vec<Scalar>>),
    /// `s_bar(x) = s(x)`, `s_bar(x v) = -s(x)`, with `v` at bit `parent_n`.
    Extended {
        parent: Arc<Grading>,
        parent_n: usize,
    },
}

impl Grading {
    /// `s(x) = (-1)^{rho(x)}`.
    pub fn parity(n: usize) -> Self {
        Grading::Character(full_mask(n))
    }

    /// Dense grading from values; checks `s(0) = 1` and nowhere-zero.
    pub fn from_values(n: usize, values: Vec<Scalar>) -> Result<Self> {
        if n > MAX_TABLE_DIM {
            return Err(Error::TooLarge {
                what: "dense grading",
                n,
                limit: MAX_TABLE_DIM,
            });
        }
        if values.len() != 1usize << n {
            return Err(Error::InvalidGrading(format!(
                "expected {} values, got {}",
                1usize << n,
                values.len()
            )));
        }
        if !values[0].is_one() {
            return Err(Error::InvalidGrading("s(0) != 1".into()));
        }
        if let Some(x) = values.iter().position(Scalar::is_zero) {
            return Err(Error::InvalidGrading(format!("s({x:#b}) = 0")));
        }
        Ok(Grading::Table(Arc::new(values)))
    }

    pub fn eval(&self, x: u32) -> Scalar {
        match self {
            Grading::Trivial => Scalar::one(),
            Grading::Character(m) => Scalar::sign(rho(x & m) & 1 == 1),
            Grading::Sign(xi) => Scalar::sign(xi.eval(x)),
            Grading::Table(t) => t[x as usize].clone(),
            Grading::Extended { parent, parent_n } => {
                let v = parent.eval(x & full_mask(*parent_n));
                if (x >> parent_n) & 1 == 1 {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// True when every value is `+1` or `-1`.
    pub fn is_unit_valued(&self, n: usize) -> bool {
        match self {
            Grading::Trivial | Grading::Character(_) | Grading::Sign(_) => true,
            Grading::Extended { parent, parent_n } => parent.is_unit_valued(*parent_n),
            Grading::Table(t) => t.iter().take(1 << n).all(Scalar::is_unit_sign),
        }
    }

    /// Checks that `s` is a character with `s^2 = 1`; returns a failing pair.
    pub fn involutive_character_witness(&self, n: usize) -> Option<(u32, u32)> {
        let size = 1u32 << n;
        let values: Vec<Scalar> = (0..size).map(|x| self.eval(x)).collect();
        for x in 0..size {
            let v = &values[x as usize];
            if !(v * v).is_one() {
                return Some((x, x));
            }
            for y in 0..size {
                if v * &values[y as usize] != values[(x ^ y) as usize] {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Values on all of `Z_2^n`.
    pub fn values(&self, n: usize) -> Vec<Scalar> {
        (0..(1u32 << n)).map(|x| self.eval(x)).collect()
    }
}

/// Cochain produced by one doubling step from `(F, s, q)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Extension {
    pub parent: Cochain,
    pub grading: Grading,
    pub q: Scalar,
}

/// Composite cochain on `Z_2^{n+m}` from cochains on `Z_2^n` and `Z_2^m`.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorPair {
    pub left: Cochain,
    pub right: Cochain,
    /// Super tensor product (Koszul sign `(-1)^{rho(x') rho(y)}`) when true;
    /// ordinary tensor product otherwise.
    pub graded: bool,
}

#[derive(Clone, PartialEq, Debug)]
pub enum CochainKind {
    /// `F(x,y) = (-1)^{sum_{j<i} x_i y_j} prod_i q_i^{x_i y_i}`.
    Clifford(Signature),
    /// `F(x,y) = (-1)^{f(x,y)}`.
    Sign(SignFn),
    /// Dense row-major table of `2^n x 2^n` values.
    Table(Arc<Vec<Scalar>>),
    /// Four-case doubling of a parent cochain.
    Extended(Arc<Extension>),
    Tensor(Arc<TensorPair>),
    /// `F'(x,y) = F(x,y) mu^{x . y}`.
    PairingTwist { base: Arc<Cochain>, mu: Scalar },
}

#[derive(Clone, PartialEq, Debug)]
pub struct Cochain {
    n: usize,
    kind: CochainKind,
}

impl Cochain {
    pub fn clifford(sig: &Signature) -> Self {
        Cochain {
            n: sig.len(),
            kind: CochainKind::Clifford(sig.clone()),
        }
    }

    /// The constant cochain `F = 1` (the untwisted group algebra).
    pub fn trivial(n: usize) -> Self {
        Cochain {
            n,
            kind: CochainKind::Sign(SignFn::Zero),
        }
    }

    pub fn sign(n: usize, f: SignFn) -> Self {
        Cochain {
            n,
            kind: CochainKind::Sign(f),
        }
    }

    /// A dense cochain; checks normalization and that it is nowhere zero.
    pub fn from_table(n: usize, values: Vec<Scalar>) -> Result<Self> {
        if n > MAX_TABLE_DIM {
            return Err(Error::TooLarge {
                what: "dense cochain table",
                n,
                limit: MAX_TABLE_DIM,
            });
        }
        let size = 1usize << n;
        if values.len() != size * size {
            return Err(Error::Inconsistent(format!(
                "table has {} entries, expected {}",
                values.len(),
                size * size
            )));
        }
        for x in 0..size {
            for y in 0..size {
                let v = &values[x * size + y];
                if v.is_zero() || ((x == 0 || y == 0) && !v.is_one()) {
                    return Err(Error::InvalidCochain {
                        x: x as u32,
                        y: y as u32,
                    });
                }
            }
        }
        Ok(Cochain {
            n,
            kind: CochainKind::Table(Arc::new(values)),
        })
    }

    /// A dense table built by evaluating `f` on all pairs.
    pub fn tabulate(n: usize, f: impl Fn(u32, u32) -> Scalar) -> Result<Self> {
        if n > MAX_TABLE_DIM {
            return Err(Error::TooLarge {
                what: "dense cochain table",
                n,
                limit: MAX_TABLE_DIM,
            });
        }
        let size = 1u32 << n;
        let mut values = Vec::with_capacity((size * size) as usize);
        for x in 0..size {
            for y in 0..size {
                values.push(f(x, y));
            }
        }
        Cochain::from_table(n, values)
    }

    pub fn extended(parent: &Cochain, grading: &Grading, q: Scalar) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if parent.n + 1 > MAX_DIM {
            return Err(Error::TooLarge {
                what: "doubling",
                n: parent.n + 1,
                limit: MAX_DIM,
            });
        }
        Ok(Cochain {
            n: parent.n + 1,
            kind: CochainKind::Extended(Arc::new(Extension {
                parent: parent.clone(),
                grading: grading.clone(),
                q,
            })),
        })
    }

    pub fn tensor(left: &Cochain, right: &Cochain, graded: bool) -> Result<Self> {
        let n = left.n + right.n;
        if n > MAX_DIM {
            return Err(Error::TooLarge {
                what: "tensor product",
                n,
                limit: MAX_DIM,
            });
        }
        Ok(Cochain {
            n,
            kind: CochainKind::Tensor(Arc::new(TensorPair {
                left: left.clone(),
                right: right.clone(),
                graded,
            })),
        })
    }

    /// `F'(x,y) = F(x,y) mu^{x . y}` for `mu = +-1`.
    pub fn pairing_twist(base: &Cochain, mu: Scalar) -> Result<Self> {
        if !mu.is_unit_sign() {
            return Err(Error::NotUnitSign(format!("mu = {mu}")));
        }
        Ok(Cochain {
            n: base.n,
            kind: CochainKind::PairingTwist {
                base: Arc::new(base.clone()),
                mu,
            },
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &CochainKind {
        &self.kind
    }

    pub fn signature(&self) -> Option<&Signature> {
        match &self.kind {
            CochainKind::Clifford(sig) => Some(sig),
            _ => None,
        }
    }

    pub fn extension(&self) -> Option<&Extension> {
        match &self.kind {
            CochainKind::Extended(ext) => Some(ext),
            _ => None,
        }
    }

    /// `F(x, y)` on raw masks. Masks must be below `2^n`.
    pub fn value(&self, x: u32, y: u32) -> Scalar {
        match &self.kind {
            CochainKind::Clifford(sig) => {
                let negative = ordered_pair_parity(x, y);
                if sig.unit {
                    Scalar::sign(negative ^ (rho(x & y & sig.neg_mask) & 1 == 1))
                } else {
                    let p = sig.product_over(x & y);
                    if negative {
                        -p
                    } else {
                        p
                    }
                }
            }
            CochainKind::Sign(f) => Scalar::sign(f.eval(self.n, x, y)),
            CochainKind::Table(t) => t[((x as usize) << self.n) | y as usize].clone(),
            CochainKind::Extended(ext) => {
                let pn = self.n - 1;
                let low = full_mask(pn);
                let (xl, yl) = (x & low, y & low);
                let xv = (x >> pn) & 1 == 1;
                let yv = (y >> pn) & 1 == 1;
                let base = ext.parent.value(xl, yl);
                match (xv, yv) {
                    (false, _) => base,
                    (true, false) => &ext.grading.eval(yl) * &base,
                    (true, true) => &(&ext.q * &ext.grading.eval(yl)) * &base,
                }
            }
            CochainKind::Tensor(pair) => {
                let ln = pair.left.n;
                let low = full_mask(ln);
                let (xl, yl, xh, yh) = (x & low, y & low, x >> ln, y >> ln);
                let v = &pair.left.value(xl, yl) * &pair.right.value(xh, yh);
                if pair.graded && (rho(xh) * rho(yl)) & 1 == 1 {
                    -v
                } else {
                    v
                }
            }
            CochainKind::PairingTwist { base, mu } => {
                let v = base.value(x, y);
                if group::dot(x, y) & 1 == 1 {
                    &v * mu
                } else {
                    v
                }
            }
        }
    }

    fn check(&self, x: GroupElement) -> Result<()> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// `F(x, y)`.
    pub fn eval(&self, x: GroupElement, y: GroupElement) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.value(x.mask(), y.mask()))
    }

    /// `dF(x, y, z)` on raw masks.
    pub fn coboundary_value(&self, x: u32, y: u32, z: u32) -> Scalar {
        let num = &self.value(x, y) * &self.value(x ^ y, z);
        let den = &self.value(y, z) * &self.value(x, y ^ z);
        num.checked_div(&den).expect("cochains are nowhere zero")
    }

    /// The coboundary (associator) `dF(x, y, z)`.
    pub fn coboundary3(&self, x: GroupElement, y: GroupElement, z: GroupElement) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        Ok(self.coboundary_value(x.mask(), y.mask(), z.mask()))
    }

    /// `R(x, y) = F(x, y) / F(y, x)` on raw masks.
    pub fn braiding_value(&self, x: u32, y: u32) -> Scalar {
        self.value(x, y)
            .checked_div(&self.value(y, x))
            .expect("cochains are nowhere zero")
    }

    pub fn braiding(&self, x: GroupElement, y: GroupElement) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.braiding_value(x.mask(), y.mask()))
    }

    /// All values, row-major; only for `n <= 12`.
    pub fn table(&self) -> Result<Vec<Scalar>> {
        if self.n > MAX_TABLE_DIM {
            return Err(Error::TooLarge {
                what: "dense cochain table",
                n: self.n,
                limit: MAX_TABLE_DIM,
            });
        }
        let size = 1u32 << self.n;
        let mut out = Vec::with_capacity((size as usize) * (size as usize));
        for x in 0..size {
            for y in 0..size {
                out.push(self.value(x, y));
            }
        }
        Ok(out)
    }

    /// Exhaustive search for a triple with `dF != 1`.
    pub fn cocycle_witness(&self) -> Result<Option<(u32, u32, u32)>> {
        if self.n > MAX_EXHAUSTIVE_DIM {
            return Err(Error::TooLarge {
                what: "exhaustive cocycle check",
                n: self.n,
                limit: MAX_EXHAUSTIVE_DIM,
            });
        }
        let size = 1u32 << self.n;
        // Materialize small tables; compare F(x,y)F(x+y,z) with F(y,z)F(x,y+z)
        // to avoid divisions in the inner loop.
        if self.n <= 8 {
            let t = self.table()?;
            let at = |a: u32, b: u32| &t[((a as usize) << self.n) | b as usize];
            for x in 0..size {
                for y in 0..size {
                    let fxy = at(x, y);
                    for z in 0..size {
                        let lhs = fxy * at(x ^ y, z);
                        let rhs = at(y, z) * at(x, y ^ z);
                        if lhs != rhs {
                            return Ok(Some((x, y, z)));
                        }
                    }
                }
            }
        } else {
            for x in 0..size {
                for y in 0..size {
                    let fxy = self.value(x, y);
                    for z in 0..size {
                        let lhs = &fxy * &self.value(x ^ y, z);
                        let rhs = &self.value(y, z) * &self.value(x, y ^ z);
                        if lhs != rhs {
                            return Ok(Some((x, y, z)));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// True iff `dF = 1` on all `8^n` triples.
    pub fn is_cocycle(&self) -> Result<bool> {
        Ok(self.cocycle_witness()?.is_none())
    }

    /// Checks normalization and nowhere-zero exhaustively; returns a bad pair.
    pub fn validity_witness(&self) -> Option<(u32, u32)> {
        let size = 1u32 << self.n.min(MAX_TABLE_DIM);
        for x in 0..size {
            for y in 0..size {
                let v = self.value(x, y);
                if v.is_zero() || ((x == 0 || y == 0) && !v.is_one()) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

/// `ds(x, y) = s(x) s(y) / s(x + y)` for `s : Z_2^n -> k*` with `s(0) = 1`.
pub fn character_coboundary(
    s: impl Fn(u32) -> Scalar,
    x: GroupElement,
    y: GroupElement,
) -> Result<Scalar> {
    check_same(x, y)?;
    if !s(0).is_one() {
        return Err(Error::InvalidGrading("s(0) != 1".into()));
    }
    let (sx, sy, sxy) = (s(x.mask()), s(y.mask()), s(x.mask() ^ y.mask()));
    for (label, v) in [("s(x)", &sx), ("s(y)", &sy), ("s(x+y)", &sxy)] {
        if v.is_zero() {
            return Err(Error::InvalidGrading(format!("{label} = 0")));
        }
    }
    (&sx * &sy).checked_div(&sxy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(mask: u32, n: usize) -> GroupElement {
        GroupElement::new(mask, n).unwrap()
    }

    fn perturbed(c: Scalar) -> Cochain {
        // F = 1 except F((1,0),(1,0)) = c
        Cochain::tabulate(2, |x, y| if x == 1 && y == 1 { c.clone() } else { Scalar::one() })
            .unwrap()
    }

    #[test]
    fn clifford_examples() {
        let f = Cochain::clifford(&"++".parse().unwrap());
        assert_eq!(f.eval(g(0b01, 2), g(0b10, 2)).unwrap(), Scalar::one());
        assert_eq!(f.eval(g(0b10, 2), g(0b01, 2)).unwrap(), -Scalar::one());
        let q1: Scalar = "3/2".parse().unwrap();
        let q2: Scalar = "-2+1i".parse().unwrap();
        let f = Cochain::clifford(&Signature::new(vec![q1.clone(), q2.clone()]).unwrap());
        assert_eq!(f.value(0b11, 0b11), -(q1 * q2));
        let f3 = Cochain::clifford(&"+++".parse().unwrap());
        assert_eq!(f3.value(0b011, 0b101), -Scalar::one());
    }

    #[test]
    fn zero_signature_rejected() {
        assert_eq!(
            "1,0,1".parse::<Signature>(),
            Err(Error::ZeroSignature { index: 2 })
        );
    }

    #[test]
    fn dimension_mismatch() {
        let f = Cochain::clifford(&"++".parse().unwrap());
        assert!(matches!(
            f.eval(g(1, 3), g(1, 2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(f.coboundary3(g(1, 2), g(1, 2), g(1, 3)).is_err());
    }

    #[test]
    fn coboundary_examples() {
        let f = Cochain::clifford(&"+-+".parse().unwrap());
        for x in 0..8 {
            for y in 0..8 {
                for z in 0..8 {
                    assert!(f.coboundary_value(x, y, z).is_one());
                }
            }
        }
        assert!(Cochain::trivial(3).coboundary_value(5, 3, 6).is_one());
        let c: Scalar = "5/3+1i".parse().unwrap();
        let p = perturbed(c.clone());
        assert_eq!(p.coboundary3(g(1, 2), g(1, 2), g(2, 2)).unwrap(), c);
        assert_eq!(perturbed(Scalar::from_int(2)).cocycle_witness().unwrap().is_some(), true);
    }

    #[test]
    fn n1_normalized_tables_are_cocycles() {
        for c in ["2", "-1", "1/3i", "7-2i"] {
            let f = Cochain::from_table(
                1,
                vec![Scalar::one(), Scalar::one(), Scalar::one(), c.parse().unwrap()],
            )
            .unwrap();
            assert!(f.is_cocycle().unwrap());
        }
    }

    #[test]
    fn table_validation() {
        assert!(matches!(
            Cochain::tabulate(1, |x, y| if x == 1 && y == 0 { Scalar::from_int(2) } else { Scalar::one() }),
            Err(Error::InvalidCochain { x: 1, y: 0 })
        ));
        assert!(matches!(
            Cochain::tabulate(1, |x, y| if x == 1 && y == 1 { Scalar::zero() } else { Scalar::one() }),
            Err(Error::InvalidCochain { .. })
        ));
        assert!(matches!(
            Cochain::trivial(13).table(),
            Err(Error::TooLarge { .. })
        ));
        assert!(Cochain::trivial(13).is_cocycle().is_err());
    }

    #[test]
    fn braiding_examples() {
        let f = Cochain::clifford(&"++".parse().unwrap());
        assert_eq!(f.braiding(g(1, 2), g(2, 2)).unwrap(), -Scalar::one());
        for x in 0..4 {
            assert!(f.braiding_value(0, x).is_one());
            assert!(f.braiding_value(x, x).is_one());
        }
    }

    #[test]
    fn character_coboundary_examples() {
        let n = 3;
        let one = |_| Scalar::one();
        let quarter = |x: u32| Scalar::i_power(-(rho(x) as i64));
        let chi = |x: u32| Scalar::sign(rho(x & 0b101) & 1 == 1);
        for x in GroupElement::all(n) {
            for y in GroupElement::all(n) {
                assert!(character_coboundary(one, x, y).unwrap().is_one());
                assert!(character_coboundary(chi, x, y).unwrap().is_one());
                assert_eq!(
                    character_coboundary(quarter, x, y).unwrap(),
                    Scalar::sign(x.dot(y) & 1 == 1)
                );
            }
        }
        let bad = |x: u32| if x == 3 { Scalar::zero() } else { Scalar::one() };
        assert!(character_coboundary(bad, g(1, 2), g(2, 2)).is_err());
        let unnormalized = |_| Scalar::from_int(2);
        assert!(character_coboundary(unnormalized, g(1, 2), g(2, 2)).is_err());
    }

    #[test]
    fn signature_text() {
        let s: Signature = "+-".parse().unwrap();
        assert_eq!(s.to_string(), "+-");
        assert_eq!(s.counts(), Some((1, 1)));
        let t: Signature = "1,-1,2".parse().unwrap();
        assert_eq!(t.to_string(), "1,-1,2");
        assert!(!t.is_unit());
        assert_eq!(t.product_over(0b111), Scalar::from_int(-2));
        assert!("".parse::<Signature>().unwrap().is_empty());
        assert_eq!("+, -,+".parse::<Signature>().unwrap(), "+-+".parse().unwrap());
        assert!("1,x".parse::<Signature>().is_err());
    }

    #[test]
    fn grading_checks() {
        assert!(Grading::parity(3).involutive_character_witness(3).is_none());
        let t = Grading::from_values(1, vec![Scalar::one(), Scalar::i()]).unwrap();
        assert!(t.involutive_character_witness(1).is_some());
        assert!(!t.is_unit_valued(1));
        assert!(Grading::from_values(1, vec![Scalar::from_int(2), Scalar::one()]).is_err());
        assert!(Grading::from_values(1, vec![Scalar::one(), Scalar::zero()]).is_err());
        let e = Grading::Extended {
            parent: Arc::new(Grading::Trivial),
            parent_n: 1,
        };
        assert_eq!(e.eval(0b10), -Scalar::one());
        assert_eq!(e.eval(0b01), Scalar::one());
    }
}
