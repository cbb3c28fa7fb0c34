//! Super and ordinary tensor products of twisted algebras, and the twist
//! `F'(x,y) = F(x,y) mu^{x.y}` relating them.

use std::sync::Arc;

use crate::algebra::TwistedAlgebra;
use crate::clifford::CliffordAlgebra;
use crate::cochain::{Cochain, Signature};
use crate::error::{Error, Result};
use crate::group::{full_mask, rho};
use crate::scalar::Scalar;

/// `A (x)^ B` on `Z_2^{n+m}`, with
/// `F((x,x'),(y,y')) = F(x,y) F'(x',y') (-1)^{rho(x') rho(y)}`.
/// The second factor occupies the high bits.
pub fn super_tensor(a: &CliffordAlgebra, b: &CliffordAlgebra) -> Result<Arc<TwistedAlgebra>> {
    Ok(TwistedAlgebra::new(Cochain::tensor(
        a.algebra().cochain(),
        b.algebra().cochain(),
        true,
    )?))
}

/// The ordinary tensor product `A (x) B`, with
/// `F((x,x'),(y,y')) = F(x,y) F'(x',y')`.
pub fn ordinary_tensor(a: &Cochain, b: &Cochain) -> Result<Arc<TwistedAlgebra>> {
    Ok(TwistedAlgebra::new(Cochain::tensor(a, b, false)?))
}

/// `mu = (-1)^{m(2m-1)} q_1 ... q_{2m}` for an even-length `+-1` signature.
pub fn periodicity_mu(sig: &Signature) -> Result<Scalar> {
    if sig.len() % 2 == 1 {
        return Err(Error::OddFactor(sig.len()));
    }
    if !sig.is_unit() {
        return Err(Error::NotUnitSign(format!("signature {sig}")));
    }
    let m = sig.len() / 2;
    let p = sig.product_over(full_mask(sig.len()));
    Ok(if (m * (2 * m).saturating_sub(1)) % 2 == 1 { -p } else { p })
}

/// `F'(x,y) = F(x,y) mu^{(rho(xy) - rho(x) - rho(y))/2} = F(x,y) mu^{x.y}`
/// for the `2m`-dimensional factor with signature `sig`.
pub fn periodicity_twist(f: &Cochain, sig: &Signature) -> Result<Cochain> {
    let mu = periodicity_mu(sig)?;
    if mu.is_one() {
        return Ok(f.clone());
    }
    Cochain::pairing_twist(f, mu)
}

/// Outcome of [`periodicity_iso_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct IsoCheck {
    pub mu: Scalar,
    pub holds: bool,
    /// A basis pair `(u, v)` of the super tensor product with
    /// `phi(uv) != phi(u) phi(v)`.
    pub witness: Option<(u32, u32)>,
}

/// Builds `k_F G (x)^ C` and `k_F' G (x) C` and checks that
/// `phi(e_x (x) c) = e_x (x) gamma^{rho(x)} c` is multiplicative on all basis
/// pairs.
pub fn periodicity_iso_check(kfg: &CliffordAlgebra, c: &CliffordAlgebra) -> Result<IsoCheck> {
    let n = kfg.dim();
    let m2 = c.dim();
    let mu = periodicity_mu(c.signature())?;
    let f = kfg.algebra().cochain();
    let left = Cochain::tensor(f, c.algebra().cochain(), true)?;
    let right = Cochain::tensor(&periodicity_twist(f, c.signature())?, c.algebra().cochain(), false)?;
    if left.dim() > crate::cochain::MAX_TABLE_DIM {
        return Err(Error::TooLarge {
            what: "periodicity isomorphism check",
            n: left.dim(),
            limit: crate::cochain::MAX_TABLE_DIM,
        });
    }

    // gamma^k for k = 0..=n, each a single term of C
    let gamma = c.gamma();
    let mut powers = vec![c.algebra().one()];
    for k in 1..=n {
        powers.push(&powers[k - 1] * &gamma);
    }
    let size = 1u32 << (n + m2);
    let low = full_mask(n);
    let image: Vec<(u32, Scalar)> = (0..size)
        .map(|u| {
            let (x, cm) = (u & low, u >> n);
            let t = &powers[rho(x) as usize] * &c.basis(cm);
            let (cm2, coef) = t.as_term().expect("blade products are single terms");
            (x | (cm2 << n), coef)
        })
        .collect();

    let lt = left.table()?;
    let rt = right.table()?;
    let dim = n + m2;
    for u in 0..size {
        let (pu, cu) = &image[u as usize];
        for v in 0..size {
            let (pv, cv) = &image[v as usize];
            let (puv, cuv) = &image[(u ^ v) as usize];
            debug_assert_eq!(pu ^ pv, *puv);
            let lhs = cuv * &lt[((u as usize) << dim) | v as usize];
            let rhs = &(cu * cv) * &rt[((*pu as usize) << dim) | *pv as usize];
            if lhs != rhs {
                return Ok(IsoCheck {
                    mu,
                    holds: false,
                    witness: Some((u, v)),
                });
            }
        }
    }
    Ok(IsoCheck {
        mu,
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::character_coboundary;
    use crate::process::cochain_difference;

    fn cl(s: &str) -> CliffordAlgebra {
        CliffordAlgebra::new(&s.parse().unwrap())
    }

    #[test]
    fn super_tensor_is_concatenation() {
        let t = super_tensor(&cl("-"), &cl("-")).unwrap();
        let want = Cochain::clifford(&"--".parse().unwrap());
        assert_eq!(cochain_difference(t.cochain(), &want).unwrap(), None);
        // (1 (x) e1') (e1 (x) 1) = -(e1 (x) e1')
        let p = &t.basis(0b10) * &t.basis(0b01);
        assert_eq!(p, -&t.basis(0b11));
        let t = super_tensor(&cl("+-"), &cl("-+-")).unwrap();
        let want = Cochain::clifford(&"+--+-".parse().unwrap());
        assert_eq!(cochain_difference(t.cochain(), &want).unwrap(), None);
    }

    #[test]
    fn twist_examples() {
        let f = Cochain::clifford(&"+-+".parse().unwrap());
        assert_eq!(periodicity_twist(&f, &"+-".parse().unwrap()).unwrap(), f);
        let quat: Signature = "--".parse().unwrap();
        assert_eq!(periodicity_mu(&quat).unwrap(), Scalar::from_int(-1));
        let twisted = periodicity_twist(&f, &quat).unwrap();
        let flipped = Cochain::clifford(&"-+-".parse().unwrap());
        assert_eq!(cochain_difference(&twisted, &flipped).unwrap(), None);
        assert!(twisted.is_cocycle().unwrap());
        let s = |x: u32| Scalar::i_power(-(x.count_ones() as i64));
        for x in crate::GroupElement::all(3) {
            for y in crate::GroupElement::all(3) {
                let want = &f.eval(x, y).unwrap() * &character_coboundary(s, x, y).unwrap();
                assert_eq!(twisted.eval(x, y).unwrap(), want);
            }
        }
        assert!(matches!(
            periodicity_twist(&f, &"+--".parse().unwrap()),
            Err(Error::OddFactor(3))
        ));
    }

    #[test]
    fn iso_holds() {
        for g in ["", "+", "-+", "+--"] {
            for c in ["++", "+-", "--", "-+--"] {
                let r = periodicity_iso_check(&cl(g), &cl(c)).unwrap();
                assert!(r.holds, "{g} {c} {:?}", r.witness);
            }
        }
    }
}
