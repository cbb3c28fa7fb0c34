//! Identification of twisted algebras as `M_d` or `M_d + M_d` over `Q(i)`.
//!
//! An associative algebra of dimension `d^2` whose center is the scalars and
//! whose multiplication map `A (x) A^op -> End(A)` is onto is central simple,
//! and is labeled `M_d`. For a twisted algebra the operator
//! `X -> e_a X e_b` shifts blades by `a + b`, so the onto condition splits
//! into one `2^n x 2^n` rank condition per shift `w = a + b`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Multivector, TwistedAlgebra};
use crate::clifford::CliffordAlgebra;
use crate::cochain::{Cochain, Signature};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::{ordinary_tensor, periodicity_iso_check};

/// Largest `n` accepted by [`classify_twisted`].
pub const MAX_CLASSIFY_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraLabel {
    /// `M_d(k)`.
    Matrix(usize),
    /// `M_d(k) + M_d(k)`.
    DoubleMatrix(usize),
    Unclassified(String),
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraLabel::Matrix(d) => write!(f, "M_{d}"),
            AlgebraLabel::DoubleMatrix(d) => write!(f, "M_{d}+M_{d}"),
            AlgebraLabel::Unclassified(_) => write!(f, "unclassified"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub label: AlgebraLabel,
    pub center_dim: usize,
    /// Square of the central blade for a two-dimensional center.
    pub mu: Option<Scalar>,
    pub checks: Vec<(String, bool)>,
}

/// Blades `e_z` with `e_x e_z = e_z e_x` for all `x`. For a twisted algebra
/// both products land on `e_{x+z}`, so the centrality system is diagonal and
/// these blades span the center.
pub fn center_blades(alg: &TwistedAlgebra) -> Vec<u32> {
    let f = alg.cochain();
    let size = alg.size() as u32;
    (0..size)
        .filter(|&z| (0..size).all(|x| f.value(x, z) == f.value(z, x)))
        .collect()
}

/// The first shift `w` whose operators `X -> e_a X e_{a+w}` are linearly
/// dependent, or `None` when the multiplication map is onto `End(A)`.
pub fn left_right_rank_deficiency(alg: &TwistedAlgebra) -> Option<u32> {
    let f = alg.cochain();
    let size = alg.size();
    for w in 0..size as u32 {
        // row a: the diagonal of e_z -> e_a e_z e_{a+w}
        let m = Matrix::from_fn(size, size, |a, z| {
            let (a, z) = (a as u32, z as u32);
            &f.value(a, z) * &f.value(a ^ z, a ^ w)
        });
        if m.rank() < size {
            return Some(w);
        }
    }
    None
}

/// A finite-dimensional algebra given by structure constants:
/// `b_i b_j = sum_k c[i][j][k] b_k`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    dim: usize,
    constants: Vec<Vec<Scalar>>,
}

impl FiniteAlgebra {
    /// The subspace of `alg` spanned by `vectors`, which must be closed under
    /// multiplication.
    pub fn from_span(alg: &Arc<TwistedAlgebra>, vectors: &[Multivector]) -> Result<Self> {
        let size = alg.size();
        let rows: Vec<Vec<Scalar>> = vectors.iter().map(Multivector::to_dense).collect();
        let mut basis = if rows.is_empty() {
            Matrix::zeros(0, size)
        } else {
            Matrix::from_rows(rows)?
        };
        let pivots = basis.rref_in_place();
        let dim = pivots.len();
        let elems: Vec<Multivector> = (0..dim)
            .map(|r| {
                alg.from_terms(
                    basis
                        .row(r)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(x, c)| (x as u32, c.clone())),
                )
            })
            .collect::<Result<_>>()?;
        // rows are in reduced echelon form, so coordinates are read at pivots
        let mut constants = Vec::with_capacity(dim * dim);
        for a in &elems {
            for b in &elems {
                let p = a.try_mul(b)?;
                let coords: Vec<Scalar> = pivots.iter().map(|&k| p.coeff(k as u32)).collect();
                let mut back = alg.zero();
                for (c, e) in coords.iter().zip(&elems) {
                    back = back.try_add(&e.scale(c))?;
                }
                if back != p {
                    return Err(Error::Inconsistent("span is not closed under products".into()));
                }
                constants.push(coords);
            }
        }
        Ok(FiniteAlgebra { dim, constants })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[i * self.dim + j][k]
    }

    /// Dimension of `{ c : c b_j = b_j c for all j }`.
    pub fn center_dim(&self) -> usize {
        let d = self.dim;
        let rows: Vec<Vec<Scalar>> = (0..d)
            .flat_map(|j| {
                (0..d).map(move |k| (0..d).map(|i| self.c(i, j, k) - self.c(j, i, k)).collect())
            })
            .collect();
        if rows.is_empty() {
            return 0;
        }
        d - Matrix::from_rows(rows).expect("rectangular").rank()
    }

    /// Rank of the span of the operators `X -> b_i X b_j` in `End(A)`.
    pub fn left_right_rank(&self) -> usize {
        let d = self.dim;
        let left: Vec<Matrix> = (0..d)
            .map(|i| Matrix::from_fn(d, d, |k, j| self.c(i, j, k).clone()))
            .collect();
        let right: Vec<Matrix> = (0..d)
            .map(|j| Matrix::from_fn(d, d, |k, i| self.c(i, j, k).clone()))
            .collect();
        let mut rows = Vec::with_capacity(d * d);
        for l in &left {
            for r in &right {
                rows.push((r * l).entries().to_vec());
            }
        }
        if rows.is_empty() {
            return 0;
        }
        Matrix::from_rows(rows).expect("rectangular").rank()
    }
}

fn isqrt_exact(v: usize) -> Option<usize> {
    let r = (v as f64).sqrt().round() as usize;
    (r * r == v).then_some(r)
}

/// Classifies an associative twisted algebra over `Q(i)`.
pub fn classify_twisted(alg: &Arc<TwistedAlgebra>) -> Result<Classification> {
    let n = alg.dim();
    if n > MAX_CLASSIFY_DIM {
        return Err(Error::TooLarge {
            what: "classification",
            n,
            limit: MAX_CLASSIFY_DIM,
        });
    }
    let mut checks = Vec::new();
    let associative = alg.is_associative()?;
    checks.push(("associative".to_string(), associative));
    let center = center_blades(alg);
    let center_dim = center.len();
    let unclassified = |reason: String, checks, mu| Classification {
        label: AlgebraLabel::Unclassified(reason),
        center_dim,
        mu,
        checks,
    };
    if !associative {
        return Ok(unclassified("not associative".into(), checks, None));
    }
    match center.as_slice() {
        [0] => {
            let deficient = left_right_rank_deficiency(alg);
            checks.push(("center is scalars".into(), true));
            checks.push(("multiplication map onto End".into(), deficient.is_none()));
            match (deficient, isqrt_exact(alg.size())) {
                (None, Some(d)) => Ok(Classification {
                    label: AlgebraLabel::Matrix(d),
                    center_dim,
                    mu: None,
                    checks,
                }),
                (Some(w), _) => Ok(unclassified(format!("rank deficient at shift {w:#b}"), checks, None)),
                (None, None) => Ok(unclassified("dimension is not a square".into(), checks, None)),
            }
        }
        [0, c] => {
            let c = *c;
            let mu = alg.cochain().value(c, c);
            let Some(root) = mu.sqrt() else {
                return Ok(unclassified(format!("{mu} has no square root"), checks, Some(mu)));
            };
            // z = e_c / sqrt(mu) squares to 1
            let z = alg.term(c, root.inv()?);
            let half = Scalar::ratio(1, 2)?;
            let p_plus = alg.one().try_add(&z)?.scale(&half);
            let p_minus = alg.one().try_sub(&z)?.scale(&half);
            let mut sizes = Vec::new();
            for (name, p) in [("+", &p_plus), ("-", &p_minus)] {
                checks.push((format!("p{name} idempotent"), &p.try_mul(p)? == p));
                let span: Vec<Multivector> = (0..alg.size() as u32)
                    .map(|x| p.try_mul(&alg.basis(x)))
                    .collect::<Result<_>>()?;
                let summand = FiniteAlgebra::from_span(alg, &span)?;
                let d = summand.dim();
                let central = summand.center_dim() == 1;
                let onto = summand.left_right_rank() == d * d;
                checks.push((format!("summand {name} center is scalars"), central));
                checks.push((format!("summand {name} multiplication map onto End"), onto));
                sizes.push((central && onto).then(|| isqrt_exact(d)).flatten());
            }
            match (sizes[0], sizes[1]) {
                (Some(a), Some(b)) if a == b => Ok(Classification {
                    label: AlgebraLabel::DoubleMatrix(a),
                    center_dim,
                    mu: Some(mu),
                    checks,
                }),
                _ => Ok(unclassified("summands are not matching matrix algebras".into(), checks, Some(mu))),
            }
        }
        _ => Ok(unclassified(format!("center has dimension {center_dim}"), checks, None)),
    }
}

/// Classifies `C(V, q)` for a `+-1` signature.
pub fn classify(alg: &CliffordAlgebra) -> Result<Classification> {
    if !alg.signature().is_unit() {
        return Ok(Classification {
            label: AlgebraLabel::Unclassified("signature entries must be +1 or -1".into()),
            center_dim: 0,
            mu: None,
            checks: Vec::new(),
        });
    }
    classify_twisted(alg.algebra())
}

/// One line of [`periodicity_table_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicityEntry {
    pub name: String,
    pub left: String,
    pub right: String,
    pub passed: bool,
}

fn label_of(alg: &Arc<TwistedAlgebra>) -> Result<AlgebraLabel> {
    Ok(classify_twisted(alg)?.label)
}

/// Checks `C(0,n+2) = C(n,0) (x) H` and `C(n+2,0) = C(0,n) (x) M_2` by
/// comparing labels, and the sign flip
/// `C(V,q) (x)^ C(+-) = C(V,-q) (x) C(+-)` through the explicit isomorphism,
/// for `n <= max_n`.
pub fn periodicity_table_check(max_n: usize) -> Result<Vec<PeriodicityEntry>> {
    let quaternions = Cochain::clifford(&Signature::split(0, 2));
    let m2 = Cochain::clifford(&Signature::split(2, 0));
    let mut out = Vec::new();
    for n in 0..=max_n {
        let lhs = label_of(CliffordAlgebra::split(0, n + 2).algebra())?;
        let rhs = label_of(&ordinary_tensor(&Cochain::clifford(&Signature::split(n, 0)), &quaternions)?)?;
        out.push(PeriodicityEntry {
            name: format!("C(0,{}) = C({n},0) (x) H", n + 2),
            passed: lhs == rhs && !matches!(lhs, AlgebraLabel::Unclassified(_)),
            left: lhs.to_string(),
            right: rhs.to_string(),
        });
        let lhs = label_of(CliffordAlgebra::split(n + 2, 0).algebra())?;
        let rhs = label_of(&ordinary_tensor(&Cochain::clifford(&Signature::split(0, n)), &m2)?)?;
        out.push(PeriodicityEntry {
            name: format!("C({},0) = C(0,{n}) (x) M_2", n + 2),
            passed: lhs == rhs && !matches!(lhs, AlgebraLabel::Unclassified(_)),
            left: lhs.to_string(),
            right: rhs.to_string(),
        });
        for mask in 0..(1u32 << n) {
            let sig = Signature::from_neg_mask(n, mask);
            for pm in ["++", "--"] {
                let c = CliffordAlgebra::new(&pm.parse()?);
                let iso = periodicity_iso_check(&CliffordAlgebra::new(&sig), &c)?;
                // mu = -1 must also turn F into the cochain of -q
                let twisted = crate::tensor::periodicity_twist(&Cochain::clifford(&sig), c.signature())?;
                let flip = if iso.mu.is_one() { sig.clone() } else { sig.negated() };
                let same = crate::process::cochain_difference(&twisted, &Cochain::clifford(&flip))?.is_none();
                out.push(PeriodicityEntry {
                    name: format!("C({sig}) (x)^ C({pm}) = C({flip}) (x) C({pm})"),
                    left: format!("mu = {}", iso.mu),
                    right: if iso.holds { "isomorphic".into() } else { "not isomorphic".into() },
                    passed: iso.holds && same,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> String {
        classify(&CliffordAlgebra::new(&s.parse().unwrap())).unwrap().label.to_string()
    }

    #[test]
    fn small_examples() {
        assert_eq!(label(""), "M_1");
        assert_eq!(label("++"), "M_2");
        assert_eq!(label("+++"), "M_2+M_2");
        assert_eq!(label("-"), "M_1+M_1");
        assert_eq!(label("--"), "M_2");
        assert_eq!(label("+-+-"), "M_4");
        let c = classify(&CliffordAlgebra::new(&"2,1".parse().unwrap())).unwrap();
        assert!(matches!(c.label, AlgebraLabel::Unclassified(_)));
    }

    #[test]
    fn centers() {
        for s in ["", "+", "-+", "+--", "-+-+", "++-+-"] {
            let c = CliffordAlgebra::new(&s.parse().unwrap());
            let want = if s.len() % 2 == 0 { 1 } else { 2 };
            assert_eq!(classify(&c).unwrap().center_dim, want, "{s}");
        }
    }

    #[test]
    fn quaternions_squared() {
        let h = Cochain::clifford(&"--".parse().unwrap());
        let hh = ordinary_tensor(&h, &h).unwrap();
        assert_eq!(classify_twisted(&hh).unwrap().label, AlgebraLabel::Matrix(4));
        // the super tensor product is C(0,4), also M_4
        let sh = TwistedAlgebra::new(Cochain::tensor(&h, &h, true).unwrap());
        assert_eq!(classify_twisted(&sh).unwrap().label, AlgebraLabel::Matrix(4));
    }

    #[test]
    fn degenerate_algebras() {
        // the untwisted group algebra of Z_2^2 is commutative
        let t = TwistedAlgebra::new(Cochain::trivial(2));
        let c = classify_twisted(&t).unwrap();
        assert_eq!(c.center_dim, 4);
        assert!(matches!(c.label, AlgebraLabel::Unclassified(_)));
    }

    #[test]
    fn small_periodicity_table() {
        for e in periodicity_table_check(1).unwrap() {
            assert!(e.passed, "{e:?}");
        }
    }
}
