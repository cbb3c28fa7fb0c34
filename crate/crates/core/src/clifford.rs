//! `C(V, q)` in its twisted presentation, with the structure maps that are
//! diagonal on blades.

use std::sync::Arc;

use crate::algebra::{Multivector, TwistedAlgebra};
use crate::cochain::{Cochain, Signature};
use crate::error::{Error, Result};
use crate::group::{dot, full_mask, rho, GroupElement};
use crate::scalar::Scalar;

/// A twisted algebra whose cochain is the Clifford closed form.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra {
    sig: Signature,
    algebra: Arc<TwistedAlgebra>,
}

/// `theta(x) = (-1)^{rho(x)(rho(x)-1)/2}`, as "is negative".
pub fn theta_negative(x: u32) -> bool {
    rho(x) % 4 >= 2
}

/// `(-1)^{rho(x)(rho(y)+1) + x.y}`, the sign of `ad_{e_x}` on `e_y`.
pub fn adjoint_negative(x: u32, y: u32) -> bool {
    (rho(x) * (rho(y) + 1) + dot(x, y)) % 2 == 1
}

impl CliffordAlgebra {
    pub fn new(sig: &Signature) -> Self {
        CliffordAlgebra {
            sig: sig.clone(),
            algebra: TwistedAlgebra::new(Cochain::clifford(sig)),
        }
    }

    /// `C(r, s)`: `r` generators squaring to `+1`, then `s` to `-1`.
    pub fn split(r: usize, s: usize) -> Self {
        Self::new(&Signature::split(r, s))
    }

    pub fn algebra(&self) -> &Arc<TwistedAlgebra> {
        &self.algebra
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn dim(&self) -> usize {
        self.sig.len()
    }

    /// `q_i`, 1-based.
    pub fn q(&self, i: usize) -> &Scalar {
        self.sig.q(i)
    }

    pub fn basis(&self, x: u32) -> Multivector {
        self.algebra.basis(x)
    }

    pub fn generator(&self, i: usize) -> Result<Multivector> {
        self.algebra.generator(i)
    }

    /// `gamma = e_{(1,...,1)} = e_1 ... e_n`.
    pub fn gamma(&self) -> Multivector {
        self.algebra.basis(full_mask(self.dim()))
    }

    fn check(&self, a: &Multivector) -> Result<()> {
        if a.belongs_to(&self.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn mask(&self, x: GroupElement) -> Result<u32> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(x.mask())
    }

    /// The order-reversing anti-involution, `e_x -> theta(x) e_x`.
    pub fn theta_involution(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        Ok(a.map_diagonal(|x| Scalar::sign(theta_negative(x))))
    }

    /// The grading automorphism, `e_x -> (-1)^{rho(x)} e_x`.
    pub fn sigma_automorphism(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        Ok(a.map_diagonal(|x| Scalar::sign(rho(x) % 2 == 1)))
    }

    /// `gamma^2 = (-1)^{n(n-1)/2} prod_i q_i`.
    pub fn top_square(&self) -> Scalar {
        let n = self.dim();
        let s = self.sig.product_over(full_mask(n));
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// `e_x^{-1} = e_x / F(x, x)`.
    pub fn basis_inverse(&self, x: GroupElement) -> Result<Multivector> {
        let m = self.mask(x)?;
        let f = self.algebra.cochain().value(m, m);
        Ok(self.algebra.term(m, f.inv()?))
    }

    /// `lambda(e_x) = (-1)^{rho(x)} prod_i q_i^{x_i}`.
    pub fn lambda_norm(&self, x: GroupElement) -> Result<Scalar> {
        let m = self.mask(x)?;
        let p = self.sig.product_over(m);
        Ok(if rho(m) % 2 == 1 { -p } else { p })
    }

    /// `ad_{e_x}(a) = sigma(e_x) a e_x^{-1}`, evaluated blade by blade with
    /// the closed-form sign.
    pub fn adjoint_action(&self, x: GroupElement, a: &Multivector) -> Result<Multivector> {
        let m = self.mask(x)?;
        self.check(a)?;
        Ok(a.map_diagonal(|y| Scalar::sign(adjoint_negative(m, y))))
    }

    /// `s` with `e_x e_y = s e_y e_x`, read off the braiding.
    pub fn commute_sign(&self, x: GroupElement, y: GroupElement) -> Result<i8> {
        let r = self.algebra.cochain().braiding(x, y)?;
        let negative = r == Scalar::from_int(-1);
        debug_assert!(negative || r.is_one());
        debug_assert_eq!(negative, (x.dot(y) + x.rho() * y.rho()) % 2 == 1);
        Ok(if negative { -1 } else { 1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(s: &str) -> CliffordAlgebra {
        CliffordAlgebra::new(&s.parse().unwrap())
    }

    fn g(mask: u32, n: usize) -> GroupElement {
        GroupElement::new(mask, n).unwrap()
    }

    #[test]
    fn theta_examples() {
        let c = cl("+++");
        assert_eq!(c.theta_involution(&c.basis(0b001)).unwrap(), c.basis(0b001));
        assert_eq!(c.theta_involution(&c.basis(0b011)).unwrap(), -&c.basis(0b011));
        assert_eq!(c.theta_involution(&c.basis(0b111)).unwrap(), -&c.basis(0b111));
        // e1e2 reversed is e2e1
        let e1 = c.basis(1);
        let e2 = c.basis(2);
        assert_eq!(c.theta_involution(&(&e1 * &e2)).unwrap(), &e2 * &e1);
    }

    #[test]
    fn sigma_examples() {
        let c = cl("+-");
        assert_eq!(c.sigma_automorphism(&c.basis(1)).unwrap(), -&c.basis(1));
        assert_eq!(c.sigma_automorphism(&c.basis(3)).unwrap(), c.basis(3));
        let gamma = c.gamma();
        let ginv = c.basis_inverse(GroupElement::top(2)).unwrap();
        let conj = &(&ginv * &c.basis(1)) * &gamma;
        assert_eq!(conj, c.sigma_automorphism(&c.basis(1)).unwrap());
    }

    #[test]
    fn top_square_examples() {
        assert_eq!(cl("--").top_square(), Scalar::from_int(-1));
        assert_eq!(cl("3/2").top_square(), Scalar::ratio(3, 2).unwrap());
        assert_eq!(cl("++++").top_square(), Scalar::one());
        for s in ["", "+", "-", "+-", "-+-", "++--", "-+-+-"] {
            let c = cl(s);
            let g = c.gamma();
            assert_eq!(&g * &g, c.algebra().scalar(c.top_square()), "{s}");
        }
    }

    #[test]
    fn inverse_and_lambda() {
        let c = cl("-");
        assert_eq!(c.basis_inverse(g(1, 1)).unwrap(), -&c.basis(1));
        assert_eq!(c.lambda_norm(g(0, 1)).unwrap(), Scalar::one());
        assert_eq!(c.lambda_norm(g(1, 1)).unwrap(), Scalar::one());
        let c = cl("2,-1/3,i");
        for x in GroupElement::all(3) {
            let inv = c.basis_inverse(x).unwrap();
            let e = c.basis(x.mask());
            assert_eq!(&e * &inv, c.algebra().one());
            let th = c.theta_involution(&e).unwrap();
            let q = c.signature().product_over(x.mask());
            assert_eq!(inv, th.scale(&q.inv().unwrap()));
            let direct = &e * &c.sigma_automorphism(&th).unwrap();
            assert_eq!(direct, c.algebra().scalar(c.lambda_norm(x).unwrap()));
        }
    }

    #[test]
    fn adjoint_examples() {
        let c = cl("+-");
        assert_eq!(c.adjoint_action(g(0, 2), &c.basis(2)).unwrap(), c.basis(2));
        assert_eq!(c.adjoint_action(g(1, 2), &c.basis(1)).unwrap(), -&c.basis(1));
        assert_eq!(c.adjoint_action(g(1, 2), &c.basis(2)).unwrap(), c.basis(2));
        for x in 0..4u32 {
            let inv = c.basis_inverse(g(x, 2)).unwrap();
            let sx = c.sigma_automorphism(&c.basis(x)).unwrap();
            for y in 0..4u32 {
                let direct = &(&sx * &c.basis(y)) * &inv;
                assert_eq!(c.adjoint_action(g(x, 2), &c.basis(y)).unwrap(), direct);
            }
        }
    }

    #[test]
    fn commute_sign_examples() {
        let c = cl("++");
        assert_eq!(c.commute_sign(g(0, 2), g(3, 2)).unwrap(), 1);
        assert_eq!(c.commute_sign(g(1, 2), g(2, 2)).unwrap(), -1);
        // e1 (e1 e2) = e2 while (e1 e2) e1 = -e2
        assert_eq!(c.commute_sign(g(1, 2), g(3, 2)).unwrap(), -1);
        let lhs = &c.basis(1) * &c.basis(3);
        let rhs = &c.basis(3) * &c.basis(1);
        assert_eq!(lhs, -&rhs);
    }

    #[test]
    fn mismatched_inputs() {
        let a = cl("++");
        let b = cl("+-");
        assert!(matches!(a.theta_involution(&b.basis(1)), Err(Error::AlgebraMismatch)));
        assert!(a.lambda_norm(g(1, 3)).is_err());
    }
}
