//! The doubling `A -> A + Av`: cochain extension, closed forms for the new
//! associator and braiding, alternativity, iteration from the ground field
//! and extension of representations.
//!
//! The new generator `v` is appended as the most significant bit, so for an
//! algebra on `Z_2^n` the element `xv` has mask `x | 2^n`.

use std::sync::Arc;

use crate::algebra::TwistedAlgebra;
use crate::cochain::{Cochain, Grading, SignFn, SignStep, Signature, XiFn, MAX_EXHAUSTIVE_DIM};
use crate::error::{Error, Result};
use crate::group::{full_mask, GroupElement};
use crate::linalg::{commutant_dim, intertwiners, Matrix};
use crate::scalar::Scalar;

/// Largest `n` for the exhaustive alternativity check.
pub const MAX_ALTERNATIVITY_DIM: usize = 8;

/// A twisted algebra together with a grading function `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebraSpec {
    cochain: Cochain,
    grading: Grading,
}

impl GradedAlgebraSpec {
    pub fn new(cochain: Cochain, grading: Grading) -> Result<Self> {
        if let Grading::Table(t) = &grading {
            if t.len() != 1usize << cochain.dim() {
                return Err(Error::InvalidGrading(format!(
                    "grading has {} values for n = {}",
                    t.len(),
                    cochain.dim()
                )));
            }
        }
        Ok(GradedAlgebraSpec { cochain, grading })
    }

    /// `C(V, q)` with its parity grading `s = (-1)^rho`.
    pub fn clifford(sig: &Signature) -> Self {
        GradedAlgebraSpec {
            cochain: Cochain::clifford(sig),
            grading: Grading::parity(sig.len()),
        }
    }

    pub fn dim(&self) -> usize {
        self.cochain.dim()
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn s(&self, x: u32) -> Scalar {
        self.grading.eval(x)
    }

    pub fn algebra(&self) -> Arc<TwistedAlgebra> {
        TwistedAlgebra::new(self.cochain.clone())
    }

    /// `Some((x, y))` where `s(x)s(y) != s(x+y)` or `s(x)^2 != 1`.
    pub fn involutive_character_witness(&self) -> Option<(u32, u32)> {
        self.grading.involutive_character_witness(self.dim())
    }

    fn require_involutive_character(&self) -> Result<()> {
        match self.involutive_character_witness() {
            None => Ok(()),
            Some((x, y)) => Err(Error::NotInvolutiveCharacter(format!(
                "s fails at x = {x:#b}, y = {y:#b}"
            ))),
        }
    }
}

/// One doubling step: `F_bar(x, yv) = F(x, y)`, `F_bar(xv, y) = s(y) F(x, y)`,
/// `F_bar(xv, yv) = q s(y) F(x, y)`, `s_bar(xv) = -s(x)`.
pub fn process_once(spec: &GradedAlgebraSpec, q: Scalar) -> Result<GradedAlgebraSpec> {
    let cochain = Cochain::extended(&spec.cochain, &spec.grading, q)?;
    Ok(GradedAlgebraSpec {
        cochain,
        grading: Grading::Extended {
            parent: Arc::new(spec.grading.clone()),
            parent_n: spec.dim(),
        },
    })
}

fn parent_parts(spec: &GradedAlgebraSpec, x: GroupElement) -> Result<(u32, bool)> {
    if x.dim() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: x.dim(),
        });
    }
    let pn = spec.dim() - 1;
    Ok((x.mask() & full_mask(pn), (x.mask() >> pn) & 1 == 1))
}

/// The associator of a processed algebra from the parent's data:
/// `phi_bar = phi(x, y, z)`, times `s(y)s(z)/s(yz)` when the first
/// argument carries `v`. Requires a `+-1`-valued grading.
pub fn closed_associator(
    spec: &GradedAlgebraSpec,
    x: GroupElement,
    y: GroupElement,
    z: GroupElement,
) -> Result<Scalar> {
    let ext = spec.cochain.extension().ok_or(Error::NotProcessed)?;
    let pn = spec.dim() - 1;
    if !ext.grading.is_unit_valued(pn) {
        return Err(Error::GeneralGrading(
            "closed associator is only available for +-1-valued s".into(),
        ));
    }
    let (xl, xv) = parent_parts(spec, x)?;
    let (yl, _) = parent_parts(spec, y)?;
    let (zl, _) = parent_parts(spec, z)?;
    let phi = ext.parent.coboundary_value(xl, yl, zl);
    if !xv {
        return Ok(phi);
    }
    let s = &ext.grading;
    let factor = (&s.eval(yl) * &s.eval(zl)).checked_div(&s.eval(yl ^ zl))?;
    Ok(&phi * &factor)
}

/// The braiding of a processed algebra:
/// `R_bar(xv, y) = s(y) R`, `R_bar(x, yv) = R / s(x)`,
/// `R_bar(xv, yv) = R s(y) / s(x)`.
pub fn closed_braiding(spec: &GradedAlgebraSpec, x: GroupElement, y: GroupElement) -> Result<Scalar> {
    let ext = spec.cochain.extension().ok_or(Error::NotProcessed)?;
    let (xl, xv) = parent_parts(spec, x)?;
    let (yl, yv) = parent_parts(spec, y)?;
    let mut r = ext.parent.braiding_value(xl, yl);
    if xv {
        r *= &ext.grading.eval(yl);
    }
    if yv {
        r = r.checked_div(&ext.grading.eval(xl))?;
    }
    Ok(r)
}

/// Processes `spec` with `q` and reports whether the result is associative,
/// checking that this agrees with the parent. `s` must be a character with
/// `s^2 = 1`.
pub fn associativity_preserved(spec: &GradedAlgebraSpec, q: Scalar) -> Result<bool> {
    spec.require_involutive_character()?;
    let bar = process_once(spec, q)?;
    let child = bar.cochain.is_cocycle()?;
    let parent = spec.cochain.is_cocycle()?;
    if child != parent {
        return Err(Error::Inconsistent(format!(
            "processed associativity {child} differs from parent {parent}"
        )));
    }
    Ok(child)
}

/// Outcome of [`alternativity_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternativity {
    pub alternative: bool,
    /// A failing triple and which identity failed (1 or 2).
    pub witness: Option<(u32, u32, u32, u8)>,
}

/// Checks, for every triple,
/// `phi(x,y,z) + R(z,y) phi(x,z,y) = 1 + R(z,y)` and
/// `phi^-1(x,y,z) + R(y,x) phi^-1(y,x,z) = 1 + R(y,x)`.
pub fn alternativity_check(f: &Cochain) -> Result<Alternativity> {
    let n = f.dim();
    if n > MAX_ALTERNATIVITY_DIM {
        return Err(Error::TooLarge {
            what: "alternativity check",
            n,
            limit: MAX_ALTERNATIVITY_DIM,
        });
    }
    let size = 1u32 << n;
    let t = f.table()?;
    let at = |a: u32, b: u32| &t[((a as usize) << n) | b as usize];
    let phi = |x: u32, y: u32, z: u32| -> Scalar {
        let num = at(x, y) * at(x ^ y, z);
        let den = at(y, z) * at(x, y ^ z);
        num.checked_div(&den).expect("cochains are nowhere zero")
    };
    let braid = |x: u32, y: u32| at(x, y).checked_div(at(y, x)).expect("nonzero");
    let one = Scalar::one();
    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                let rzy = braid(z, y);
                let lhs = &phi(x, y, z) + &(&rzy * &phi(x, z, y));
                if lhs != &one + &rzy {
                    return Ok(Alternativity {
                        alternative: false,
                        witness: Some((x, y, z, 1)),
                    });
                }
                let ryx = braid(y, x);
                let lhs = &phi(x, y, z).inv()? + &(&ryx * &phi(y, x, z).inv()?);
                if lhs != &one + &ryx {
                    return Ok(Alternativity {
                        alternative: false,
                        witness: Some((x, y, z, 2)),
                    });
                }
            }
        }
    }
    Ok(Alternativity {
        alternative: true,
        witness: None,
    })
}

/// The grading condition for alternativity of the processed algebra: for all
/// triples, `phi(x,y,z) = 1` or `s(x) = s(y) = s(z) = 1`. Returns a
/// violating triple.
pub fn grading_condition_witness(spec: &GradedAlgebraSpec) -> Result<Option<(u32, u32, u32)>> {
    let n = spec.dim();
    if n > MAX_ALTERNATIVITY_DIM {
        return Err(Error::TooLarge {
            what: "alternativity condition",
            n,
            limit: MAX_ALTERNATIVITY_DIM,
        });
    }
    let size = 1u32 << n;
    let s: Vec<bool> = (0..size).map(|x| spec.s(x).is_one()).collect();
    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                if s[x as usize] && s[y as usize] && s[z as usize] {
                    continue;
                }
                if !spec.cochain.coboundary_value(x, y, z).is_one() {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

/// The predicted verdict for the processed algebra: the parent is
/// alternative and the grading condition holds.
pub fn predicted_alternative(spec: &GradedAlgebraSpec) -> Result<bool> {
    Ok(alternativity_check(&spec.cochain)?.alternative && grading_condition_witness(spec)?.is_none())
}

/// Iterates the doubling from the ground field in sign form, one step per
/// entry: `f_bar((x,a),(y,b)) = f(x,y) + a (b eps + xi(y))`,
/// `xi_bar(x, a) = xi(x) + a`. Entry `true` means `q = -1`.
pub fn iterate_from_field(epsilons: &[bool]) -> Result<GradedAlgebraSpec> {
    if epsilons.len() > crate::group::MAX_DIM {
        return Err(Error::TooLarge {
            what: "iterated doubling",
            n: epsilons.len(),
            limit: crate::group::MAX_DIM,
        });
    }
    let mut f = SignFn::Zero;
    let mut xi = XiFn::Zero;
    for (n, &epsilon) in epsilons.iter().enumerate() {
        f = SignFn::Step(Arc::new(SignStep {
            parent: f,
            parent_xi: xi.clone(),
            parent_n: n,
            epsilon,
        }));
        xi = XiFn::Step {
            parent: Arc::new(xi),
            parent_n: n,
        };
    }
    GradedAlgebraSpec::new(Cochain::sign(epsilons.len(), f), Grading::Sign(xi))
}

/// [`iterate_from_field`] with `eps_i` read off a `+-1` signature.
pub fn iterate_signature(sig: &Signature) -> Result<GradedAlgebraSpec> {
    let mask = sig
        .neg_mask()
        .ok_or_else(|| Error::NotUnitSign(format!("signature {sig}")))?;
    let eps: Vec<bool> = (0..sig.len()).map(|i| (mask >> i) & 1 == 1).collect();
    iterate_from_field(&eps)
}

/// Repeated [`process_once`] from the ground field with the given `q`s.
pub fn iterate_process(qs: &[Scalar]) -> Result<GradedAlgebraSpec> {
    let mut spec = GradedAlgebraSpec::new(Cochain::trivial(0), Grading::Trivial)?;
    for q in qs {
        spec = process_once(&spec, q.clone())?;
    }
    Ok(spec)
}

/// First pair where the two cochains differ, checked exhaustively.
pub fn cochain_difference(a: &Cochain, b: &Cochain) -> Result<Option<(u32, u32)>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    if a.dim() > MAX_EXHAUSTIVE_DIM {
        return Err(Error::TooLarge {
            what: "exhaustive cochain comparison",
            n: a.dim(),
            limit: MAX_EXHAUSTIVE_DIM,
        });
    }
    let size = 1u32 << a.dim();
    for x in 0..size {
        for y in 0..size {
            if a.value(x, y) != b.value(x, y) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Matrices `pi(e_x)` for every blade of a graded twisted algebra, satisfying
/// `pi(e_x) pi(e_y) = F(x, y) pi(e_{x+y})` and `pi(1) = id`.
#[derive(Clone, Debug)]
pub struct Representation {
    spec: GradedAlgebraSpec,
    matrices: Vec<Matrix>,
}

impl Representation {
    pub fn new(spec: GradedAlgebraSpec, matrices: Vec<Matrix>) -> Result<Self> {
        if let Some(msg) = relation_failure(&spec, &matrices) {
            return Err(Error::BadRepresentation(msg));
        }
        Ok(Representation { spec, matrices })
    }

    /// The one-dimensional representation of the ground field.
    pub fn ground_field() -> Self {
        let spec = GradedAlgebraSpec::new(Cochain::trivial(0), Grading::Trivial)
            .expect("trivial spec is valid");
        Representation {
            spec,
            matrices: vec![Matrix::identity(1)],
        }
    }

    pub fn spec(&self) -> &GradedAlgebraSpec {
        &self.spec
    }

    /// Dimension of the represented space.
    pub fn degree(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn matrix(&self, x: u32) -> &Matrix {
        &self.matrices[x as usize]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Images of the generators `e_1, ..., e_n`.
    pub fn generator_matrices(&self) -> Vec<Matrix> {
        (0..self.spec.dim()).map(|i| self.matrices[1 << i].clone()).collect()
    }

    /// Dimension of the commutant of the image; 1 certifies irreducibility.
    pub fn commutant_dim(&self) -> Result<usize> {
        commutant_dim(&self.matrices)
    }
}

fn relation_failure(spec: &GradedAlgebraSpec, matrices: &[Matrix]) -> Option<String> {
    let size = 1usize << spec.dim();
    if matrices.len() != size {
        return Some(format!("expected {size} blade matrices, got {}", matrices.len()));
    }
    let d = matrices[0].rows();
    if matrices.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Some("matrices must all be square of the same size".into());
    }
    if matrices[0] != Matrix::identity(d) {
        return Some("pi(1) is not the identity".into());
    }
    for x in 0..size {
        for y in 0..size {
            let lhs = &matrices[x] * &matrices[y];
            let rhs = matrices[x ^ y].scale(&spec.cochain.value(x as u32, y as u32));
            if lhs != rhs {
                return Some(format!("relation fails for x = {x:#b}, y = {y:#b}"));
            }
        }
    }
    None
}

/// Result of [`rep_extend`].
#[derive(Clone, Debug)]
pub struct RepExtension {
    pub rep: Representation,
    /// True when `W` is not isomorphic to its `sigma`-twist and the result
    /// lives on `W + W`.
    pub doubled: bool,
    /// The value of `v^2` actually realized.
    pub q: Scalar,
    pub q_requested: Scalar,
    pub q_honored: bool,
    pub intertwiner: Option<Matrix>,
}

/// Extends a representation of `A` to the processed algebra `A_bar`.
///
/// If no invertible `phi` with `phi pi(a) = pi(sigma(a)) phi` exists the
/// result is `W + W` with `pi(e_x) = diag(pi, s(x) pi)` and
/// `pi(v) = [[0, 1], [q, 0]]`. Otherwise `pi(v) = lambda phi` on `W`, with
/// `phi` normalized so its first nonzero entry is 1 and `lambda` chosen in
/// `Q(i)` so that `v^2 = q` when possible; if not, `q = phi^2` is used.
pub fn rep_extend(rep: &Representation, q: Scalar) -> Result<RepExtension> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let spec = &rep.spec;
    let size = 1usize << spec.dim();
    let d = rep.degree();
    let twisted: Vec<Matrix> = (0..size)
        .map(|x| rep.matrices[x].scale(&spec.s(x as u32)))
        .collect();
    let candidates = intertwiners(&rep.matrices, &twisted)?;
    let mut phi = candidates.iter().find(|m| m.is_invertible()).cloned();
    if phi.is_none() && candidates.len() > 1 {
        let mut sum = Matrix::zeros(d, d);
        for c in &candidates {
            sum = sum.try_add(c)?;
        }
        if sum.is_invertible() {
            phi = Some(sum);
        }
    }

    match phi {
        Some(phi) => {
            let lead = phi
                .entries()
                .iter()
                .find(|v| !v.is_zero())
                .expect("invertible matrices are nonzero")
                .clone();
            let phi = phi.scale(&lead.inv()?);
            let square = (&phi * &phi)
                .as_scalar_multiple_of_identity()
                .ok_or_else(|| {
                    Error::BadRepresentation("phi^2 is not scalar; W is reducible".into())
                })?;
            let lambda = q.checked_div(&square)?.sqrt();
            let (pi_v, realized, honored) = match lambda {
                Some(l) => (phi.scale(&l), q.clone(), true),
                None => (phi.clone(), square, false),
            };
            let bar = process_once(spec, realized.clone())?;
            let mut mats = rep.matrices.clone();
            for x in 0..size {
                mats.push(&rep.matrices[x] * &pi_v);
            }
            let rep = Representation::new(bar, mats)?;
            Ok(RepExtension {
                rep,
                doubled: false,
                q: realized,
                q_requested: q,
                q_honored: honored,
                intertwiner: Some(phi),
            })
        }
        None => {
            let bar = process_once(spec, q.clone())?;
            let block = |a: &Matrix, b: &Matrix, c: &Matrix, e: &Matrix| {
                Matrix::from_fn(2 * d, 2 * d, |r, k| {
                    let m = match (r < d, k < d) {
                        (true, true) => a,
                        (true, false) => b,
                        (false, true) => c,
                        (false, false) => e,
                    };
                    m.get(r % d, k % d).clone()
                })
            };
            let zero = Matrix::zeros(d, d);
            let id = Matrix::identity(d);
            let pi_v = block(&zero, &id, &id.scale(&q), &zero);
            let mut low = Vec::with_capacity(size);
            for x in 0..size {
                low.push(block(&rep.matrices[x], &zero, &zero, &twisted[x]));
            }
            let mut mats = low.clone();
            for m in &low {
                mats.push(m * &pi_v);
            }
            let rep = Representation::new(bar, mats)?;
            Ok(RepExtension {
                rep,
                doubled: true,
                q: q.clone(),
                q_requested: q,
                q_honored: true,
                intertwiner: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(mask: u32, n: usize) -> GroupElement {
        GroupElement::new(mask, n).unwrap()
    }

    fn perturbed(c: i64) -> Cochain {
        let mut t = vec![Scalar::one(); 16];
        t[(1 << 2) | 1] = Scalar::from_int(c);
        Cochain::from_table(2, t).unwrap()
    }

    #[test]
    fn process_examples() {
        let spec = GradedAlgebraSpec::clifford(&"+-".parse().unwrap());
        let q = Scalar::ratio(-3, 2).unwrap();
        let bar = process_once(&spec, q.clone()).unwrap();
        assert_eq!(bar.dim(), 3);
        assert_eq!(bar.cochain().value(0b100, 0b100), q);
        assert_eq!(bar.s(0b100), Scalar::from_int(-1));
        assert!(matches!(process_once(&spec, Scalar::zero()), Err(Error::DivisionByZero)));

        let bar = process_once(&spec, Scalar::one()).unwrap();
        let want = Cochain::clifford(&"+-+".parse().unwrap());
        assert_eq!(cochain_difference(bar.cochain(), &want).unwrap(), None);
    }

    #[test]
    fn closed_forms_match_direct() {
        for m in [0u32, 1, 2, 3] {
            let spec = GradedAlgebraSpec::new(perturbed(-1), Grading::Character(m)).unwrap();
            let bar = process_once(&spec, Scalar::from_int(-1)).unwrap();
            for x in GroupElement::all(3) {
                for y in GroupElement::all(3) {
                    assert_eq!(
                        closed_braiding(&bar, x, y).unwrap(),
                        bar.cochain().braiding(x, y).unwrap()
                    );
                    for z in GroupElement::all(3) {
                        assert_eq!(
                            closed_associator(&bar, x, y, z).unwrap(),
                            bar.cochain().coboundary3(x, y, z).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_edge_cases() {
        let spec = GradedAlgebraSpec::clifford(&"+".parse().unwrap());
        assert!(matches!(
            closed_braiding(&spec, g(0, 1), g(1, 1)),
            Err(Error::NotProcessed)
        ));
        // R_bar(v, y) with s(y) = -1
        let bar = process_once(&spec, Scalar::one()).unwrap();
        assert_eq!(closed_braiding(&bar, g(0b10, 2), g(0b01, 2)).unwrap(), Scalar::from_int(-1));
        // trivial grading: associator unchanged
        let spec = GradedAlgebraSpec::new(perturbed(2), Grading::Trivial).unwrap();
        let bar = process_once(&spec, Scalar::from_int(5)).unwrap();
        for x in 0..8 {
            for y in 0..8 {
                for z in 0..8 {
                    let phi = spec.cochain().coboundary_value(x & 3, y & 3, z & 3);
                    assert_eq!(closed_associator(&bar, g(x, 3), g(y, 3), g(z, 3)).unwrap(), phi);
                }
            }
        }
        let general = GradedAlgebraSpec::new(
            Cochain::trivial(1),
            Grading::from_values(1, vec![Scalar::one(), Scalar::from_int(2)]).unwrap(),
        )
        .unwrap();
        let bar = process_once(&general, Scalar::one()).unwrap();
        assert!(matches!(
            closed_associator(&bar, g(2, 2), g(1, 2), g(1, 2)),
            Err(Error::GeneralGrading(_))
        ));
    }

    #[test]
    fn associativity_is_preserved() {
        let spec = GradedAlgebraSpec::clifford(&"+-".parse().unwrap());
        assert!(associativity_preserved(&spec, Scalar::one()).unwrap());
        assert!(associativity_preserved(&spec, Scalar::from_int(-1)).unwrap());
        let bad = GradedAlgebraSpec::new(perturbed(-1), Grading::parity(2)).unwrap();
        assert!(!associativity_preserved(&bad, Scalar::one()).unwrap());
        let twice = process_once(&spec, Scalar::one()).unwrap();
        assert!(associativity_preserved(&twice, Scalar::from_int(-1)).unwrap());
        let general = GradedAlgebraSpec::new(
            Cochain::trivial(1),
            Grading::from_values(1, vec![Scalar::one(), Scalar::i()]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            associativity_preserved(&general, Scalar::one()),
            Err(Error::NotInvolutiveCharacter(_))
        ));
    }

    #[test]
    fn clifford_cochains_are_alternative() {
        for s in ["+", "-+", "+-+"] {
            let f = Cochain::clifford(&s.parse().unwrap());
            assert!(alternativity_check(&f).unwrap().alternative);
        }
        let bad = alternativity_check(&perturbed(-1)).unwrap();
        assert!(!bad.alternative);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn iterate_examples() {
        let one = iterate_from_field(&[true]).unwrap();
        assert_eq!(one.cochain().value(1, 1), Scalar::from_int(-1));
        let eps = [false, true, true, false, true];
        let spec = iterate_from_field(&eps).unwrap();
        for x in 0..32u32 {
            assert_eq!(spec.s(x), Scalar::sign(x.count_ones() % 2 == 1));
        }
        let sig = Signature::from_signs(&eps);
        assert_eq!(cochain_difference(spec.cochain(), &Cochain::clifford(&sig)).unwrap(), None);
    }

    #[test]
    fn ladder_to_c30() {
        let r0 = Representation::ground_field();
        let r1 = rep_extend(&r0, Scalar::one()).unwrap();
        assert!(!r1.doubled);
        assert_eq!(r1.rep.degree(), 1);
        let r2 = rep_extend(&r1.rep, Scalar::one()).unwrap();
        assert!(r2.doubled);
        assert_eq!(r2.rep.degree(), 2);
        let r3 = rep_extend(&r2.rep, Scalar::one()).unwrap();
        assert!(!r3.doubled);
        assert!(r3.q_honored);
        let phi = r3.intertwiner.clone().unwrap();
        assert_eq!(
            (&phi * &phi).as_scalar_multiple_of_identity(),
            Some(Scalar::from_int(-1))
        );
        for r in [&r1, &r2, &r3] {
            assert_eq!(r.rep.commutant_dim().unwrap(), 1);
        }
        let want = Cochain::clifford(&"+++".parse().unwrap());
        assert_eq!(cochain_difference(r3.rep.spec().cochain(), &want).unwrap(), None);
    }

    #[test]
    fn rejects_bad_representation() {
        let spec = GradedAlgebraSpec::clifford(&"-".parse().unwrap());
        let mats = vec![Matrix::identity(1), Matrix::identity(1)];
        assert!(matches!(
            Representation::new(spec, mats),
            Err(Error::BadRepresentation(_))
        ));
    }
}
