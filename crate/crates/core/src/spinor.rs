//! The spinor representation of `C(V + V, q + q)` on `C(V, q)` by left and
//! right actions, its exterior-algebra form, grading operator and the
//! extension to odd Clifford algebras.
//!
//! Matrices are indexed by blade masks: entry `(w, z)` is the coefficient of
//! `e_w` in the image of `e_z`.

use crate::algebra::Multivector;
use crate::clifford::CliffordAlgebra;
use crate::error::{Error, Result};
use crate::group::{bits_below, dot, full_mask, rho, GroupElement};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Largest `n` for [`full_rep_faithfulness`] (matrices of size `4^n`).
pub const MAX_FAITHFUL_DIM: usize = 3;

/// Largest `n` for dense spinor matrices.
pub const MAX_SPINOR_DIM: usize = 8;

fn check_dim(alg: &CliffordAlgebra, limit: usize, what: &'static str) -> Result<()> {
    if alg.dim() > limit {
        return Err(Error::TooLarge {
            what,
            n: alg.dim(),
            limit,
        });
    }
    Ok(())
}

/// Coefficient of `(e_x (x) e_y) . e_z = c e_{x+y+z}`:
/// `c = F(x,y) F(x+y,z) (-1)^{y.z} i^{rho(y)}`.
pub fn lr_coefficient(alg: &CliffordAlgebra, x: u32, y: u32, z: u32) -> Scalar {
    let f = alg.algebra().cochain();
    let mut c = &f.value(x, y) * &f.value(x ^ y, z);
    if dot(y, z) % 2 == 1 {
        c = -c;
    }
    &c * &Scalar::i_power(rho(y) as i64)
}

/// `(e_x (x) e_y) . e_z` as a multivector of `alg`.
pub fn lr_action(
    alg: &CliffordAlgebra,
    x: GroupElement,
    y: GroupElement,
    z: GroupElement,
) -> Result<Multivector> {
    for g in [x, y, z] {
        if g.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: g.dim(),
            });
        }
    }
    let (x, y, z) = (x.mask(), y.mask(), z.mask());
    Ok(alg.algebra().term(x ^ y ^ z, lr_coefficient(alg, x, y, z)))
}

/// The matrix of `e_x (x) e_y`.
pub fn lr_matrix(alg: &CliffordAlgebra, x: u32, y: u32) -> Result<Matrix> {
    check_dim(alg, MAX_SPINOR_DIM, "spinor matrix")?;
    let size = 1usize << alg.dim();
    let mut m = Matrix::zeros(size, size);
    for z in 0..size as u32 {
        m.set((x ^ y ^ z) as usize, z as usize, lr_coefficient(alg, x, y, z));
    }
    Ok(m)
}

/// Matrices of `e_i (x) 1` for `i = 1..n`, then `1 (x) e_i`:
/// `(e_i (x) 1).e_x = (-1)^{sum_{j<i} x_j} q_i^{x_i} e_{x+d_i}` and
/// `(1 (x) e_i).e_x = i (-1)^{sum_{j<i} x_j} (-q_i)^{x_i} e_{x+d_i}`.
pub fn generator_matrices(alg: &CliffordAlgebra) -> Result<Vec<Matrix>> {
    check_dim(alg, MAX_SPINOR_DIM, "spinor matrix")?;
    let n = alg.dim();
    let size = 1usize << n;
    let mut out = Vec::with_capacity(2 * n);
    for right in [false, true] {
        for i in 0..n {
            let q = alg.q(i + 1);
            let mut m = Matrix::zeros(size, size);
            for x in 0..size as u32 {
                let set = (x >> i) & 1 == 1;
                let mut c = Scalar::sign(bits_below(x, i as u32) % 2 == 1);
                if set {
                    c = &c * q;
                    if right {
                        c = -c;
                    }
                }
                if right {
                    c = &c * &Scalar::i();
                }
                m.set((x ^ (1 << i)) as usize, x as usize, c);
            }
            out.push(m);
        }
    }
    Ok(out)
}

/// `Some((a, b))` when generator matrices `a`, `b` break
/// `M_a^2 = q_a` or `M_a M_b = -M_b M_a`.
pub fn relation_witness(alg: &CliffordAlgebra, mats: &[Matrix]) -> Option<(usize, usize)> {
    let n = alg.dim();
    let size = 1usize << n;
    for a in 0..mats.len() {
        let q = alg.q(a % n + 1);
        if &mats[a] * &mats[a] != Matrix::identity(size).scale(q) {
            return Some((a, a));
        }
        for b in a + 1..mats.len() {
            let ab = &mats[a] * &mats[b];
            let ba = &mats[b] * &mats[a];
            if !ab.try_add(&ba).expect("same shape").is_zero() {
                return Some((a, b));
            }
        }
    }
    None
}

/// First pair of basis elements `u = (x, y)`, `u'` of `C(V) (x)^ C(V)` whose
/// product is not represented by the product of matrices.
pub fn homomorphism_witness(alg: &CliffordAlgebra) -> Result<Option<(u32, u32)>> {
    check_dim(alg, MAX_FAITHFUL_DIM, "homomorphism check")?;
    let n = alg.dim();
    let tensor = crate::tensor::super_tensor(alg, alg)?;
    let f = tensor.cochain();
    let size = 1u32 << (2 * n);
    let low = full_mask(n);
    let mats: Vec<Matrix> = (0..size)
        .map(|u| lr_matrix(alg, u & low, u >> n))
        .collect::<Result<_>>()?;
    for u in 0..size {
        for v in 0..size {
            let lhs = &mats[u as usize] * &mats[v as usize];
            if lhs != mats[(u ^ v) as usize].scale(&f.value(u, v)) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Whether the `4^n` matrices of `e_x (x) e_y` are linearly independent, so
/// that `C(V + V) -> End(C(V))` is bijective.
pub fn full_rep_faithfulness(alg: &CliffordAlgebra) -> Result<bool> {
    check_dim(alg, MAX_FAITHFUL_DIM, "faithfulness check")?;
    let size = 1u32 << alg.dim();
    let mut rows = Vec::with_capacity((size * size) as usize);
    for x in 0..size {
        for y in 0..size {
            rows.push(lr_matrix(alg, x, y)?.entries().to_vec());
        }
    }
    let m = Matrix::from_rows(rows)?;
    Ok(m.rank() == (size * size) as usize)
}

/// Generator `i` (1-based, up to `2n`) acting on an exterior form:
/// `e_i.w = e_i ^ w + i_{e_i} w` and `e_{n+i}.w = i (e_i ^ w - i_{e_i} w)`,
/// with the interior product taken against `q`.
pub fn exterior_model_action(alg: &CliffordAlgebra, i: usize, w: &Multivector) -> Result<Multivector> {
    let n = alg.dim();
    if i == 0 || i > 2 * n {
        return Err(Error::MaskOutOfRange {
            mask: i as u32,
            n: 2 * n,
        });
    }
    if !w.belongs_to(alg.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (k, right) = if i > n { (i - n - 1, true) } else { (i - 1, false) };
    let wedge = exterior_wedge(alg, k, w);
    let interior = exterior_interior(alg, k, w);
    if right {
        Ok(wedge.try_sub(&interior)?.scale(&Scalar::i()))
    } else {
        wedge.try_add(&interior)
    }
}

/// `e_{k+1} ^ w`.
pub fn exterior_wedge(alg: &CliffordAlgebra, k: usize, w: &Multivector) -> Multivector {
    let mut out = alg.algebra().zero();
    for (x, c) in w.terms() {
        if (x >> k) & 1 == 0 {
            let s = Scalar::sign(bits_below(x, k as u32) % 2 == 1);
            out.add_term(x | (1 << k), &(c * &s));
        }
    }
    out
}

/// The interior product `i_{e_{k+1}} w` for the form `q`.
pub fn exterior_interior(alg: &CliffordAlgebra, k: usize, w: &Multivector) -> Multivector {
    let mut out = alg.algebra().zero();
    for (x, c) in w.terms() {
        if (x >> k) & 1 == 1 {
            let s = Scalar::sign(bits_below(x, k as u32) % 2 == 1);
            out.add_term(x & !(1 << k), &(&(c * &s) * alg.q(k + 1)));
        }
    }
    out
}

/// The `2n` matrices of the exterior model, in generator order.
pub fn exterior_matrices(alg: &CliffordAlgebra) -> Result<Vec<Matrix>> {
    check_dim(alg, MAX_SPINOR_DIM, "spinor matrix")?;
    let n = alg.dim();
    let size = 1usize << n;
    let mut out = Vec::with_capacity(2 * n);
    for i in 1..=2 * n {
        let mut m = Matrix::zeros(size, size);
        for z in 0..size as u32 {
            let image = exterior_model_action(alg, i, &alg.basis(z))?;
            for (w, c) in image.terms() {
                m.set(w as usize, z as usize, c.clone());
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// `lambda = i^n (-1)^{n(n-1)/2} prod_i q_i`.
pub fn grading_eigenvalue(alg: &CliffordAlgebra) -> Scalar {
    let n = alg.dim();
    let mut l = &Scalar::i_power(n as i64) * &alg.signature().product_over(full_mask(n));
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        l = -l;
    }
    l
}

/// The matrix of `gamma (x) gamma`, and the closed-form `lambda` such that it
/// is `diag(lambda (-1)^{rho(z)})`.
pub fn grading_operator(alg: &CliffordAlgebra) -> Result<(Matrix, Scalar)> {
    let top = full_mask(alg.dim());
    Ok((lr_matrix(alg, top, top)?, grading_eigenvalue(alg)))
}

/// `diag((-1)^{rho(z)})` on `2^n` blades.
pub fn super_degree_sign(n: usize) -> Matrix {
    Matrix::diagonal(
        (0..1u32 << n)
            .map(|z| Scalar::sign(rho(z) % 2 == 1))
            .collect(),
    )
}

/// The extra generator `lambda S` for `C(V + V + <u>)` with `u^2 = q`,
/// where `S` is the super-degree sign and `lambda` is `1` for `q = 1`, `i`
/// for `q = -1`.
pub fn odd_extend(gens: &[Matrix], q: &Scalar) -> Result<Matrix> {
    let lambda = if q.is_one() {
        Scalar::one()
    } else if *q == Scalar::from_int(-1) {
        Scalar::i()
    } else {
        return Err(Error::NotUnitSign(format!("q = {q}")));
    };
    let size = gens.first().map_or(1, Matrix::rows);
    if !size.is_power_of_two() {
        return Err(Error::DimensionMismatch {
            expected: size.next_power_of_two(),
            found: size,
        });
    }
    let n = size.trailing_zeros() as usize;
    let m = super_degree_sign(n).scale(&lambda);
    if &m * &m != Matrix::identity(size).scale(q) {
        return Err(Error::Inconsistent("extra generator does not square to q".into()));
    }
    for (k, g) in gens.iter().enumerate() {
        if !(&m * g).try_add(&(g * &m))?.is_zero() {
            return Err(Error::Inconsistent(format!(
                "extra generator commutes with generator {}",
                k + 1
            )));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::commutant_dim;

    fn cl(s: &str) -> CliffordAlgebra {
        CliffordAlgebra::new(&s.parse().unwrap())
    }

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| v.parse().unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    fn g(x: u32, n: usize) -> GroupElement {
        GroupElement::new(x, n).unwrap()
    }

    #[test]
    fn lr_examples() {
        let c = cl("-");
        for z in 0..2 {
            assert_eq!(lr_action(&c, g(0, 1), g(0, 1), g(z, 1)).unwrap(), c.basis(z));
        }
        let a = lr_action(&c, g(1, 1), g(0, 1), g(1, 1)).unwrap();
        assert_eq!(a, c.algebra().scalar(Scalar::from_int(-1)));
        let b = lr_action(&c, g(0, 1), g(1, 1), g(1, 1)).unwrap();
        assert_eq!(b, c.algebra().scalar(Scalar::i()));
    }

    #[test]
    fn n1_generator_matrices() {
        let c = cl("-");
        let gens = generator_matrices(&c).unwrap();
        assert_eq!(gens[0], m(&[&["0", "-1"], &["1", "0"]]));
        assert_eq!(gens[1], m(&[&["0", "1i"], &["1i", "0"]]));
        assert_eq!(relation_witness(&c, &gens), None);
        for (k, mat) in gens.iter().enumerate() {
            let y = if k < 1 { 0 } else { 1 };
            let x = if k < 1 { 1 } else { 0 };
            assert_eq!(*mat, lr_matrix(&c, x, y).unwrap());
        }
    }

    #[test]
    fn exterior_matches() {
        for s in ["-", "+-", "-+-"] {
            let c = cl(s);
            assert_eq!(exterior_matrices(&c).unwrap(), generator_matrices(&c).unwrap());
        }
        let c = cl("3,-2");
        assert_eq!(exterior_wedge(&c, 0, &c.algebra().one()), c.basis(1));
        assert_eq!(
            exterior_interior(&c, 0, &c.basis(1)),
            c.algebra().scalar(Scalar::from_int(3))
        );
        assert!(exterior_model_action(&c, 5, &c.basis(1)).is_err());
    }

    #[test]
    fn lr_is_a_homomorphism() {
        for s in ["-", "+-", "-+"] {
            assert_eq!(homomorphism_witness(&cl(s)).unwrap(), None, "{s}");
        }
    }

    #[test]
    fn faithfulness() {
        assert!(full_rep_faithfulness(&cl("-")).unwrap());
        assert!(full_rep_faithfulness(&cl("+-")).unwrap());
        assert!(matches!(
            full_rep_faithfulness(&cl("++++")),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn grading_examples() {
        let c = cl("-");
        let (mat, lambda) = grading_operator(&c).unwrap();
        assert_eq!(lambda, Scalar::i_power(3));
        assert_eq!(mat, Matrix::diagonal(vec![Scalar::i_power(3), Scalar::i()]));
        let c = cl("--");
        let (mat, lambda) = grading_operator(&c).unwrap();
        let gens = generator_matrices(&c).unwrap();
        // gamma (x) gamma = (e1 (x) 1)(e2 (x) 1)(1 (x) e1)(1 (x) e2)
        let prod = &(&(&gens[0] * &gens[1]) * &gens[2]) * &gens[3];
        assert_eq!(mat, prod);
        assert_eq!(&mat * &mat, Matrix::identity(4).scale(&(&lambda * &lambda)));
    }

    #[test]
    fn odd_extension() {
        let c = cl("-");
        let gens = generator_matrices(&c).unwrap();
        let m3 = odd_extend(&gens, &Scalar::one()).unwrap();
        assert_eq!(m3, Matrix::diagonal(vec![Scalar::one(), Scalar::from_int(-1)]));
        let m3i = odd_extend(&gens, &Scalar::from_int(-1)).unwrap();
        assert_eq!(m3i, Matrix::diagonal(vec![Scalar::i(), -Scalar::i()]));
        let mut all = gens.clone();
        all.push(m3);
        assert_eq!(commutant_dim(&all).unwrap(), 1);
        assert!(odd_extend(&gens, &Scalar::from_int(2)).is_err());
    }

    #[test]
    fn quaternion_form() {
        let c = cl("--");
        let gens = generator_matrices(&c).unwrap();
        for i in 0..2 {
            let e = c.basis(1 << i);
            for z in 0..4u32 {
                let left = &e * &c.basis(z);
                let col: Vec<Scalar> = (0..4).map(|w| gens[i].get(w, z as usize).clone()).collect();
                assert_eq!(col, left.to_dense());
                let sign = Scalar::sign((z >> i) & 1 == 1);
                let col: Vec<Scalar> = (0..4).map(|w| gens[2 + i].get(w, z as usize).clone()).collect();
                assert_eq!(col, left.scale(&(&Scalar::i() * &sign)).to_dense());
            }
        }
    }
}
