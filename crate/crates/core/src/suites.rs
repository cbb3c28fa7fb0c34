//! Named verification suites. Each suite enumerates or samples cases, checks
//! exact equalities and reports the first failing case as a witness.
//! Randomized suites draw from a ChaCha8 stream seeded by
//! [`SuiteConfig::seed`].

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Multivector, TwistedAlgebra};
use crate::classify::{classify, classify_twisted, periodicity_table_check, AlgebraLabel};
use crate::clifford::CliffordAlgebra;
use crate::cochain::{character_coboundary, Cochain, Grading, Signature};
use crate::dirac::{
    dirac_apply, dirac_component_form, dirac_curl_form, laplacian, monomials_up_to, PolySpinor,
};
use crate::error::{Error, Result};
use crate::group::{full_mask, ordered_pair_parity, rho, GroupElement};
use crate::linalg::{commutant_dim, Matrix};
use crate::parse::parse_expression;
use crate::process::{
    alternativity_check, associativity_preserved, closed_associator, closed_braiding,
    cochain_difference, iterate_from_field, iterate_process, predicted_alternative, process_once,
    rep_extend, GradedAlgebraSpec, Representation,
};
use crate::scalar::Scalar;
use crate::spinor::{
    exterior_matrices, full_rep_faithfulness, generator_matrices, grading_operator,
    homomorphism_witness, odd_extend, relation_witness, super_degree_sign,
};
use crate::tensor::{ordinary_tensor, periodicity_iso_check, periodicity_mu, periodicity_twist, super_tensor};

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    /// Restricts signature-indexed suites to this signature.
    pub signature: Option<Signature>,
    /// Overrides the suite's default cap on `n`.
    pub max_n: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    /// Description of the first failing case.
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    pub default_max_n: Option<usize>,
    run: fn(&SuiteConfig, &mut Tally) -> Result<()>,
}

impl Suite {
    pub fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let mut t = Tally::default();
        let mut cfg = cfg.clone();
        if cfg.max_n.is_none() {
            cfg.max_n = self.default_max_n;
        }
        (self.run)(&cfg, &mut t)?;
        Ok(SuiteReport {
            name: self.name,
            passed: t.witness.is_none(),
            cases: t.cases,
            witness: t.witness,
            notes: t.notes,
        })
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    witness: Option<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(what());
        }
        ok
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// One acceptance criterion and the suites that decide it.
pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub suites: &'static [&'static str],
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "cocycle identity for the Clifford cochain", suites: &["cocycle"] },
    Criterion { number: 2, title: "generators and relations", suites: &["relations"] },
    Criterion { number: 3, title: "small-case tables", suites: &["small-tables"] },
    Criterion { number: 4, title: "braided commutativity", suites: &["braided-commutativity"] },
    Criterion { number: 5, title: "reversal anti-involution", suites: &["theta"] },
    Criterion { number: 6, title: "grading automorphism and gamma", suites: &["sigma", "inner-grading"] },
    Criterion { number: 7, title: "inverses, lambda norm, adjoint action", suites: &["inverse", "lambda", "adjoint"] },
    Criterion { number: 8, title: "super tensor product", suites: &["super-tensor"] },
    Criterion { number: 9, title: "Clifford process iteration", suites: &["process"] },
    Criterion { number: 10, title: "closed associator and braiding", suites: &["closed-forms"] },
    Criterion { number: 11, title: "associativity and alternativity", suites: &["alternativity"] },
    Criterion { number: 12, title: "periodicity isomorphism", suites: &["periodicity"] },
    Criterion { number: 13, title: "classification over Q(i)", suites: &["classify"] },
    Criterion { number: 14, title: "spinor representation", suites: &["spinor"] },
    Criterion { number: 15, title: "odd extension", suites: &["odd-extension"] },
    Criterion { number: 16, title: "representation ladder", suites: &["rep-ladder"] },
    Criterion { number: 17, title: "Dirac operator", suites: &["dirac"] },
];

pub static SUITES: &[Suite] = &[
    Suite { name: "adjoint", description: "ad_x closed form, V preserved, quadratic form preserved", default_max_n: Some(5), run: adjoint },
    Suite { name: "alternativity", description: "associativity preservation and the alternativity predicate", default_max_n: Some(4), run: alternativity },
    Suite { name: "braided-commutativity", description: "e_x e_y = R(x,y) e_y e_x and R = +-1", default_max_n: Some(6), run: braided_commutativity },
    Suite { name: "classify", description: "labels M_d / M_d+M_d and periodicity instances", default_max_n: Some(6), run: classify_suite },
    Suite { name: "closed-forms", description: "closed associator and braiding of processed algebras", default_max_n: None, run: closed_forms },
    Suite { name: "cocycle", description: "dF = 1 for the Clifford cochain", default_max_n: Some(6), run: cocycle },
    Suite { name: "dirac", description: "Dirac square and agreement of the three operator forms", default_max_n: Some(3), run: dirac },
    Suite { name: "inner-grading", description: "gamma^2 closed form and sigma = Ad(gamma) for even n", default_max_n: Some(6), run: inner_grading },
    Suite { name: "inverse", description: "blade inverses in both forms", default_max_n: Some(5), run: inverse },
    Suite { name: "lambda", description: "lambda norm closed form against e_x sigma(theta(e_x))", default_max_n: Some(5), run: lambda },
    Suite { name: "odd-extension", description: "extra generator for the odd-dimensional spinor module", default_max_n: Some(3), run: odd_extension },
    Suite { name: "parity-kernel", description: "bit-parity sign kernel against a double loop", default_max_n: Some(16), run: parity_kernel },
    Suite { name: "periodicity", description: "graded to ungraded tensor isomorphism", default_max_n: Some(4), run: periodicity },
    Suite { name: "process", description: "iterated doubling reproduces the Clifford cochain", default_max_n: Some(10), run: process },
    Suite { name: "relations", description: "e_i^2 = q_i and anticommutation", default_max_n: Some(8), run: relations },
    Suite { name: "rep-ladder", description: "representations extended up to C(3,0)", default_max_n: Some(3), run: rep_ladder },
    Suite { name: "scalars", description: "field axioms of Q(i) on seeded samples", default_max_n: None, run: scalars },
    Suite { name: "sigma", description: "sigma is an involutive automorphism", default_max_n: Some(6), run: sigma },
    Suite { name: "small-tables", description: "C(0,1), C(0,2), C(2,0), C(1,1) tables", default_max_n: None, run: small_tables },
    Suite { name: "spinor", description: "left-right spinor module of C(V + V)", default_max_n: Some(4), run: spinor },
    Suite { name: "super-tensor", description: "C(V) (x)^ C(W) = C(V + W)", default_max_n: Some(6), run: super_tensor_suite },
    Suite { name: "theta", description: "theta is an involutive anti-automorphism", default_max_n: Some(6), run: theta },
];

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    find_suite(name)
        .ok_or_else(|| Error::Inconsistent(format!("unknown suite {name:?}")))?
        .run(cfg)
}

/// Suite names used by the acceptance criteria, sorted.
pub fn acceptance_suite_names() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = CRITERIA.iter().flat_map(|c| c.suites.iter().copied()).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn cap(cfg: &SuiteConfig) -> usize {
    cfg.max_n.unwrap_or(usize::MAX)
}

fn rng(cfg: &SuiteConfig) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed)
}

/// The configured signature, or every `+-1` signature with `n <= max_n`.
fn signatures(cfg: &SuiteConfig, max_n: usize) -> Vec<Signature> {
    match &cfg.signature {
        Some(s) => vec![s.clone()],
        None => (0..=max_n)
            .flat_map(|n| (0..1u32 << n).map(move |m| Signature::from_neg_mask(n, m)))
            .collect(),
    }
}

fn small_scalar(rng: &mut impl Rng) -> Scalar {
    let re = Scalar::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4)).expect("nonzero denominator");
    let im = Scalar::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4)).expect("nonzero denominator");
    &re + &(&im * &Scalar::i())
}

fn nonzero_scalar(rng: &mut impl Rng) -> Scalar {
    loop {
        let s = small_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

fn blades(alg: &Arc<TwistedAlgebra>) -> Vec<Multivector> {
    (0..alg.size() as u32).map(|x| alg.basis(x)).collect()
}

fn cocycle(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let w = Cochain::clifford(&sig).cocycle_witness()?;
        t.check(w.is_none(), || format!("signature {sig}: dF != 1 at {w:?}"));
    }
    Ok(())
}

fn relations(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        let alg = c.algebra();
        let gens: Vec<Multivector> = (1..=sig.len()).map(|i| c.generator(i)).collect::<Result<_>>()?;
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                let ok = if i == j {
                    gens[i].try_mul(&gens[i])? == alg.scalar(sig.q(i + 1).clone())
                } else {
                    gens[i].try_mul(&gens[j])?.try_add(&gens[j].try_mul(&gens[i])?)?.is_zero()
                };
                t.check(ok, || format!("signature {sig}: relation fails for e{} e{}", i + 1, j + 1));
            }
        }
    }
    Ok(())
}

fn small_tables(_: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let cases: &[(&str, &[(&str, &str)])] = &[
        ("-", &[("e1*e1", "-1")]),
        (
            "--",
            &[
                ("e1*e1", "-1"),
                ("e2*e2", "-1"),
                ("e1*e2 + e2*e1", "0"),
                ("e1*e2*e1*e2", "-1"),
                ("e1*e2*e1", "e2"),
                ("e2*e1*e2", "e1"),
                ("e1*e1*e2", "-e2"),
            ],
        ),
        ("2,3", &[("e1*e2*e1*e2", "-6"), ("e1*e2*e1", "-2*e2")]),
        (
            "++",
            &[("e1*e1", "1"), ("e2*e2", "1"), ("e1*e2 + e2*e1", "0"), ("e1*e2*e1*e2", "-1")],
        ),
        (
            "+-",
            &[("e1*e1", "1"), ("e2*e2", "-1"), ("e1*e2 + e2*e1", "0"), ("e1*e2*e1*e2", "1")],
        ),
    ];
    for (sig, rels) in cases {
        let alg = CliffordAlgebra::new(&sig.parse()?).algebra().clone();
        for (lhs, rhs) in rels.iter() {
            let l = parse_expression(lhs, &alg)?;
            let r = parse_expression(rhs, &alg)?;
            t.check(l == r, || format!("C({sig}): {lhs} = {l}, expected {rhs}"));
        }
    }

    // the quaternions 1, i = e1, j = e2, k = e1 e2
    let quat = CliffordAlgebra::new(&"--".parse()?);
    let table = quat.algebra().product_table()?;
    let expected: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]];
    for x in 0..4 {
        for y in 0..4 {
            let got = &table[x * 4 + y];
            t.check(*got == Scalar::from_int(expected[x][y]), || {
                format!("quaternion table entry ({x}, {y}) is {got}")
            });
        }
    }
    // q1 q2 for (e1 e2)^2 = -q1 q2 on a general signature
    for sig in ["3,-1/2", "i,2", "-1,-1"] {
        let s: Signature = sig.parse()?;
        let c = CliffordAlgebra::new(&s);
        let e12 = c.basis(0b11);
        let want = -&(s.q(1) * s.q(2));
        t.check(e12.try_mul(&e12)? == c.algebra().scalar(want.clone()), || {
            format!("C({sig}): (e1 e2)^2 != {want}")
        });
        let lhs = e12.try_mul(&c.basis(0b01))?;
        let rhs = c.basis(0b10).scale(&-s.q(1));
        t.check(lhs == rhs, || format!("C({sig}): (e1 e2) e1 = {lhs}"));
    }
    Ok(())
}

fn braided_commutativity(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        let f = c.algebra().cochain();
        let b = blades(c.algebra());
        let n = sig.len();
        let unit = sig.is_unit();
        for x in 0..b.len() as u32 {
            for y in 0..b.len() as u32 {
                let r = f.braiding_value(x, y);
                let lhs = b[x as usize].try_mul(&b[y as usize])?;
                let rhs = b[y as usize].try_mul(&b[x as usize])?.scale(&r);
                t.check(lhs == rhs, || format!("signature {sig}: e_{x:b} e_{y:b} != R e_{y:b} e_{x:b}"));
                let anti = (rho(x) * rho(y) + crate::group::dot(x, y)) % 2 == 1;
                t.check(r == Scalar::sign(anti), || {
                    format!("signature {sig}: R({x:b}, {y:b}) = {r}, expected {}", Scalar::sign(anti))
                });
                t.check((&r * &f.braiding_value(y, x)).is_one(), || {
                    format!("signature {sig}: R(x,y) R(y,x) != 1 at ({x:b}, {y:b})")
                });
                if unit {
                    let gx = GroupElement::new(x, n)?;
                    let gy = GroupElement::new(y, n)?;
                    let s = c.commute_sign(gx, gy)?;
                    t.check((s == -1) == anti, || format!("signature {sig}: commute_sign({x:b}, {y:b}) = {s}"));
                }
            }
        }
    }
    Ok(())
}

fn theta(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let max = cap(cfg);
    for sig in signatures(cfg, max) {
        let c = CliffordAlgebra::new(&sig);
        let b = blades(c.algebra());
        let th: Vec<Multivector> = b.iter().map(|e| c.theta_involution(e)).collect::<Result<_>>()?;
        for x in 0..b.len() {
            t.check(c.theta_involution(&th[x])? == b[x], || format!("signature {sig}: theta^2(e_{x:b}) != e_{x:b}"));
            for y in 0..b.len() {
                let lhs = c.theta_involution(&b[x].try_mul(&b[y])?)?;
                let rhs = th[y].try_mul(&th[x])?;
                t.check(lhs == rhs, || format!("signature {sig}: theta(e_{x:b} e_{y:b}) = {lhs}, theta(e_{y:b}) theta(e_{x:b}) = {rhs}"));
            }
        }
        // literal order-reversed products, one size below the cap
        if sig.len() + 1 <= max || cfg.signature.is_some() {
            for x in 0..b.len() as u32 {
                let mut rev = c.algebra().one();
                for i in (1..=sig.len()).rev() {
                    if (x >> (i - 1)) & 1 == 1 {
                        rev = rev.try_mul(&c.generator(i)?)?;
                    }
                }
                t.check(rev == th[x as usize], || format!("signature {sig}: reversed product of e_{x:b} is {rev}"));
            }
        }
    }
    Ok(())
}

fn sigma(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        let b = blades(c.algebra());
        let sg: Vec<Multivector> = b.iter().map(|e| c.sigma_automorphism(e)).collect::<Result<_>>()?;
        for x in 0..b.len() {
            t.check(c.sigma_automorphism(&sg[x])? == b[x], || format!("signature {sig}: sigma^2(e_{x:b}) != e_{x:b}"));
            t.check(sg[x] == b[x].scale(&Scalar::sign(rho(x as u32) % 2 == 1)), || {
                format!("signature {sig}: sigma(e_{x:b}) = {}", sg[x])
            });
            for y in 0..b.len() {
                let lhs = c.sigma_automorphism(&b[x].try_mul(&b[y])?)?;
                let rhs = sg[x].try_mul(&sg[y])?;
                t.check(lhs == rhs, || format!("signature {sig}: sigma not multiplicative at ({x:b}, {y:b})"));
            }
        }
    }
    Ok(())
}

fn inner_grading(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        let n = sig.len();
        let gamma = c.gamma();
        let mut closed = sig.product_over(full_mask(n));
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            closed = -closed;
        }
        t.check(c.top_square() == closed, || format!("signature {sig}: top_square = {}", c.top_square()));
        t.check(gamma.try_mul(&gamma)? == c.algebra().scalar(closed.clone()), || {
            format!("signature {sig}: gamma^2 != {closed}")
        });
        let inv = c.basis_inverse(GroupElement::top(n))?;
        for (x, e) in blades(c.algebra()).iter().enumerate() {
            if n % 2 == 0 {
                let conj = gamma.try_mul(e)?.try_mul(&inv)?;
                t.check(conj == c.sigma_automorphism(e)?, || format!("signature {sig}: gamma e_{x:b} gamma^-1 = {conj}"));
            } else {
                t.check(gamma.try_mul(e)? == e.try_mul(&gamma)?, || format!("signature {sig}: gamma not central at e_{x:b}"));
            }
        }
    }
    Ok(())
}

fn inverse(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        let one = c.algebra().one();
        for x in GroupElement::all(sig.len()) {
            let e = c.basis(x.mask());
            let inv = c.basis_inverse(x)?;
            t.check(e.try_mul(&inv)? == one && inv.try_mul(&e)? == one, || {
                format!("signature {sig}: e_{:b} e_x^-1 != 1", x.mask())
            });
            let second = c.theta_involution(&e)?.scale(&sig.product_over(x.mask()).inv()?);
            t.check(inv == second, || format!("signature {sig}: theta(e_x)/q^x = {second}, inverse = {inv}"));
        }
    }
    Ok(())
}

fn lambda(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        for x in GroupElement::all(sig.len()) {
            let e = c.basis(x.mask());
            let direct = e.try_mul(&c.sigma_automorphism(&c.theta_involution(&e)?)?)?;
            let closed = c.lambda_norm(x)?;
            t.check(direct == c.algebra().scalar(closed.clone()), || {
                format!("signature {sig}: lambda(e_{:b}) = {closed}, direct {direct}", x.mask())
            });
            if sig.is_unit() {
                t.check(closed.is_unit_sign(), || format!("signature {sig}: lambda(e_{:b}) = {closed}", x.mask()));
            }
        }
    }
    Ok(())
}

fn adjoint(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let mut rng = rng(cfg);
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        let n = sig.len();
        let b = blades(c.algebra());
        let vector_part = full_mask(n);
        let in_v = |m: &Multivector| m.terms().all(|(z, _)| rho(z) == 1 && z & !vector_part == 0);
        let v: Multivector = c.algebra().from_terms((0..n).map(|i| (1u32 << i, small_scalar(&mut rng))))?;
        let v2 = v.try_mul(&v)?;
        for x in GroupElement::all(n) {
            let sx = c.sigma_automorphism(&b[x.mask() as usize])?;
            let inv = c.basis_inverse(x)?;
            for (y, e) in b.iter().enumerate() {
                let closed = c.adjoint_action(x, e)?;
                let direct = sx.try_mul(e)?.try_mul(&inv)?;
                t.check(closed == direct, || format!("signature {sig}: ad_{:b}(e_{y:b}) = {closed}, direct {direct}", x.mask()));
            }
            for i in 0..n {
                let g = &b[1 << i];
                let image = c.adjoint_action(x, g)?;
                t.check(in_v(&image) && image.try_mul(&image)? == g.try_mul(g)?, || {
                    format!("signature {sig}: ad_{:b}(e{}) = {image} leaves V or changes q", x.mask(), i + 1)
                });
            }
            let w = c.adjoint_action(x, &v)?;
            t.check(in_v(&w) && w.try_mul(&w)? == v2, || format!("signature {sig}: q(ad_{:b} v) != q(v) for v = {v}", x.mask()));
        }
    }
    Ok(())
}

fn super_tensor_suite(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let max = cap(cfg);
    for total in 0..=max {
        for n in 0..=total {
            let m = total - n;
            for a in 0..1u32 << n {
                for bm in 0..1u32 << m {
                    let (sa, sb) = (Signature::from_neg_mask(n, a), Signature::from_neg_mask(m, bm));
                    let (ca, cb) = (CliffordAlgebra::new(&sa), CliffordAlgebra::new(&sb));
                    let tensor = super_tensor(&ca, &cb)?;
                    let whole = Cochain::clifford(&sa.concat(&sb)?);
                    let d = cochain_difference(tensor.cochain(), &whole)?;
                    t.check(d.is_none(), || format!("C({sa}) (x)^ C({sb}) differs from C({sa}{sb}) at {d:?}"));
                    if total <= 4 {
                        koszul_rule(&ca, &cb, &tensor, t)?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// `(a (x) c)(b (x) d) = (-1)^{rho(c) rho(b)} ab (x) cd` on blades.
fn koszul_rule(a: &CliffordAlgebra, b: &CliffordAlgebra, tensor: &Arc<TwistedAlgebra>, t: &mut Tally) -> Result<()> {
    let n = a.dim();
    for x in 0..1u32 << n {
        for y in 0..1u32 << n {
            let (xy, f1) = a.basis(x).try_mul(&a.basis(y))?.as_term().expect("blade");
            for u in 0..1u32 << b.dim() {
                for v in 0..1u32 << b.dim() {
                    let (uv, f2) = b.basis(u).try_mul(&b.basis(v))?.as_term().expect("blade");
                    let sign = Scalar::sign((rho(u) * rho(y)) % 2 == 1);
                    let want = tensor.term(xy | (uv << n), &(&f1 * &f2) * &sign);
                    let got = tensor.basis(x | (u << n)).try_mul(&tensor.basis(y | (v << n)))?;
                    t.check(got == want, || format!("Koszul sign fails at ({x:b}(x){u:b}) ({y:b}(x){v:b})"));
                }
            }
        }
    }
    Ok(())
}

fn same_as_clifford(spec: &GradedAlgebraSpec, sig: &Signature, pairs: Option<(&mut ChaCha8Rng, usize)>) -> Result<Option<(u32, u32)>> {
    let want = Cochain::clifford(sig);
    match pairs {
        None => cochain_difference(spec.cochain(), &want),
        Some((rng, k)) => {
            let size = 1u32 << sig.len();
            for _ in 0..k {
                let (x, y) = (rng.gen_range(0..size), rng.gen_range(0..size));
                if spec.cochain().value(x, y) != want.value(x, y) {
                    return Ok(Some((x, y)));
                }
            }
            Ok(None)
        }
    }
}

fn parity_grading_witness(spec: &GradedAlgebraSpec) -> Option<u32> {
    let n = spec.dim();
    if n > 12 {
        return None;
    }
    (0..1u32 << n).find(|&x| spec.s(x) != Scalar::sign(rho(x) % 2 == 1))
}

fn process(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let mut rng = rng(cfg);
    let max = cap(cfg);
    if let Some(sig) = &cfg.signature {
        let spec = crate::process::iterate_signature(sig)?;
        let d = if sig.len() <= 8 {
            same_as_clifford(&spec, sig, None)?
        } else {
            same_as_clifford(&spec, sig, Some((&mut rng, 10_000)))?
        };
        t.check(d.is_none(), || format!("iterate_from_field({sig}) differs at {d:?}"));
        return Ok(());
    }
    for n in 0..=max {
        let sequences: Vec<u32> = if n <= 6 {
            (0..1u32 << n).collect()
        } else {
            (0..3).map(|_| rng.gen_range(0..1u32 << n)).collect()
        };
        for mask in sequences {
            let sig = Signature::from_neg_mask(n, mask);
            let eps: Vec<bool> = (0..n).map(|i| (mask >> i) & 1 == 1).collect();
            let spec = iterate_from_field(&eps)?;
            let d = if n <= 8 {
                same_as_clifford(&spec, &sig, None)?
            } else {
                same_as_clifford(&spec, &sig, Some((&mut rng, 10_000)))?
            };
            t.check(d.is_none(), || format!("iterate_from_field({sig}) differs from the Clifford cochain at {d:?}"));
            let w = parity_grading_witness(&spec);
            t.check(w.is_none(), || format!("iterate_from_field({sig}): xi != rho at {w:?}"));
        }
    }

    // one doubling step C(sig) -> C(sig, q)
    for sig in signatures(cfg, max.min(5)) {
        for neg in [false, true] {
            let q = Scalar::sign(neg);
            let bar = process_once(&GradedAlgebraSpec::clifford(&sig), q.clone())?;
            let next = sig.concat(&Signature::from_signs(&[neg]))?;
            let d = cochain_difference(bar.cochain(), &Cochain::clifford(&next))?;
            t.check(d.is_none(), || format!("processing C({sig}) with q = {q} differs from C({next}) at {d:?}"));
            let w = parity_grading_witness(&bar);
            t.check(w.is_none(), || format!("processing C({sig}): grading is not parity at {w:?}"));
        }
    }

    // general q in any order
    for qs in [vec!["2", "-3", "1/2"], vec!["i", "-1", "5/3", "1"], vec!["-1/7", "1+i"]] {
        let qs: Vec<Scalar> = qs.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let spec = iterate_process(&qs)?;
        let sig = Signature::new(qs.clone())?;
        let d = cochain_difference(spec.cochain(), &Cochain::clifford(&sig))?;
        t.check(d.is_none(), || format!("iterate_process({sig}) differs at {d:?}"));
    }
    Ok(())
}

/// Processed algebras for 100 parents on `Z_2^3`: even draws are random
/// normalized sign tables, odd draws are Clifford cochains times the
/// coboundary of a random function.
fn closed_forms(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let mut rng = rng(cfg);
    let n = 3;
    let size = 1u32 << n;
    let (mut cocycles, mut others) = (0, 0);
    for k in 0..100 {
        let parent = if k % 2 == 0 {
            let signs: Vec<bool> = (0..size * size).map(|_| rng.gen()).collect();
            Cochain::tabulate(n, |x, y| Scalar::sign(x != 0 && y != 0 && signs[(x * size + y) as usize]))?
        } else {
            let sig = Signature::from_neg_mask(n, rng.gen_range(0..size));
            let base = Cochain::clifford(&sig);
            let mut tv: Vec<Scalar> = (0..size).map(|_| nonzero_scalar(&mut rng)).collect();
            tv[0] = Scalar::one();
            let mut values = Vec::with_capacity((size * size) as usize);
            for x in GroupElement::all(n) {
                for y in GroupElement::all(n) {
                    let d = character_coboundary(|z| tv[z as usize].clone(), x, y)?;
                    values.push(&base.value(x.mask(), y.mask()) * &d);
                }
            }
            Cochain::from_table(n, values)?
        };
        if parent.is_cocycle()? {
            cocycles += 1;
        } else {
            others += 1;
        }
        let mask = rng.gen_range(0..size);
        let q = [Scalar::one(), Scalar::from_int(-1), Scalar::from_int(2), Scalar::i()][rng.gen_range(0..4)].clone();
        let spec = GradedAlgebraSpec::new(parent, Grading::Character(mask))?;
        let bar = process_once(&spec, q.clone())?;
        let f = bar.cochain();
        let elems: Vec<GroupElement> = GroupElement::all(n + 1).collect();
        for &x in &elems {
            for &y in &elems {
                let closed = closed_braiding(&bar, x, y)?;
                let direct = f.braiding_value(x.mask(), y.mask());
                t.check(closed == direct, || format!("parent {k}, s = chi_{mask:b}, q = {q}: R_bar({x:?}, {y:?}) closed {closed}, direct {direct}"));
                for &z in &elems {
                    let closed = closed_associator(&bar, x, y, z)?;
                    let direct = f.coboundary_value(x.mask(), y.mask(), z.mask());
                    t.check(closed == direct, || {
                        format!("parent {k}, s = chi_{mask:b}, q = {q}: phi_bar({x:?}, {y:?}, {z:?}) closed {closed}, direct {direct}")
                    });
                }
            }
        }
    }
    t.note(format!("{cocycles} cocycle parents, {others} non-cocycle parents"));
    Ok(())
}

/// A sign cochain on `Z_2^3` whose twisted group algebra is the octonions:
/// `f = sum_{i<=j} x_i y_j + y1 x2 x3 + x1 y2 x3 + x1 x2 y3`.
fn octonion_cochain() -> Result<Cochain> {
    Cochain::tabulate(3, |x, y| {
        let b = |v: u32, i: u32| (v >> (i - 1)) & 1;
        let mut f = 0;
        for i in 1..=3 {
            for j in i..=3 {
                f += b(x, i) * b(y, j);
            }
        }
        f += b(y, 1) * b(x, 2) * b(x, 3) + b(x, 1) * b(y, 2) * b(x, 3) + b(x, 1) * b(x, 2) * b(y, 3);
        Scalar::sign(f % 2 == 1)
    })
}

fn alternativity(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let max = cap(cfg);
    let signs = [Scalar::one(), Scalar::from_int(-1)];

    // cocycle parents with any involutive character stay associative
    for sig in signatures(cfg, max) {
        let n = sig.len();
        for mask in 0..1u32 << n {
            if n > 3 && mask != full_mask(n) {
                continue;
            }
            let spec = GradedAlgebraSpec::new(Cochain::clifford(&sig), Grading::Character(mask))?;
            for q in &signs {
                let ok = associativity_preserved(&spec, q.clone())?;
                t.check(ok, || format!("C({sig}) with s = chi_{mask:b}, q = {q} is not associative after processing"));
            }
        }
    }

    // every normalized sign cochain on Z_2^2, every character, q = +-1
    let (mut alt, mut non_alt) = (0, 0);
    let mut reported = false;
    for bits in 0..1u32 << 9 {
        let parent = Cochain::tabulate(2, |x, y| {
            if x == 0 || y == 0 {
                return Scalar::one();
            }
            let k = (x - 1) * 3 + (y - 1);
            Scalar::sign((bits >> k) & 1 == 1)
        })?;
        for mask in 0..4 {
            let spec = GradedAlgebraSpec::new(parent.clone(), Grading::Character(mask))?;
            let predicted = predicted_alternative(&spec)?;
            for q in &signs {
                let bar = process_once(&spec, q.clone())?;
                let verdict = alternativity_check(bar.cochain())?;
                t.check(verdict.alternative == predicted, || {
                    format!("sign table {bits:09b}, s = chi_{mask:b}, q = {q}: alternative = {}, predicted {predicted}", verdict.alternative)
                });
                if verdict.alternative {
                    alt += 1;
                } else {
                    non_alt += 1;
                    if !reported {
                        reported = true;
                        if let Some(w) = verdict.witness {
                            t.note(format!(
                                "sign table {bits:09b}, s = chi_{mask:02b}, q = {q}: identity {} fails at ({:b}, {:b}, {:b})",
                                w.3, w.0, w.1, w.2
                            ));
                        }
                    }
                }
            }
        }
    }
    t.note(format!("Z_2^2 sign tables: {alt} alternative and {non_alt} non-alternative processed algebras"));

    // octonions: alternative, not associative; processing keeps alternativity
    // only for the trivial character
    let oct = octonion_cochain()?;
    let parent = alternativity_check(&oct)?;
    t.check(parent.alternative && !oct.is_cocycle()?, || "octonion cochain should be alternative and non-associative".into());
    for mask in 0..8 {
        let spec = GradedAlgebraSpec::new(oct.clone(), Grading::Character(mask))?;
        let predicted = predicted_alternative(&spec)?;
        t.check(predicted == (mask == 0), || format!("octonions, s = chi_{mask:b}: predicate gives {predicted}"));
        for q in &signs {
            let verdict = alternativity_check(process_once(&spec, q.clone())?.cochain())?;
            t.check(verdict.alternative == predicted, || {
                format!("octonions, s = chi_{mask:b}, q = {q}: alternative = {}", verdict.alternative)
            });
            if let (Some(w), true) = (verdict.witness, q.is_one()) {
                t.note(format!("octonions, s = chi_{mask:03b}: identity {} fails at ({:b}, {:b}, {:b})", w.3, w.0, w.1, w.2));
            }
        }
        t.check(!associativity_preserved(&spec, Scalar::one())?, || "processed octonions are associative".into());
    }
    Ok(())
}

fn periodicity(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let factors: Vec<Signature> = (1..=2)
        .flat_map(|m| (0..1u32 << (2 * m)).map(move |k| Signature::from_neg_mask(2 * m, k)))
        .collect();
    let (mut plus, mut minus) = (0, 0);
    for sig in signatures(cfg, cap(cfg)) {
        let g = CliffordAlgebra::new(&sig);
        let f = Cochain::clifford(&sig);
        for csig in &factors {
            let c = CliffordAlgebra::new(csig);
            let iso = periodicity_iso_check(&g, &c)?;
            t.check(iso.holds, || format!("C({sig}) (x)^ C({csig}): phi fails at {:?}", iso.witness));
            let twisted = periodicity_twist(&f, csig)?;
            let mu = periodicity_mu(csig)?;
            if mu.is_one() {
                plus += 1;
                t.check(twisted == f, || format!("mu = 1 for C({csig}) but F' != F"));
                continue;
            }
            minus += 1;
            let s = |x: u32| Scalar::i_power(-(rho(x) as i64));
            for x in GroupElement::all(sig.len()) {
                for y in GroupElement::all(sig.len()) {
                    let want = &f.eval(x, y)? * &character_coboundary(s, x, y)?;
                    let got = twisted.eval(x, y)?;
                    t.check(got == want, || format!("C({sig}), mu = -1: F'({x:?}, {y:?}) = {got}, F d(i^-rho) = {want}"));
                }
            }
            if sig.is_unit() {
                let d = cochain_difference(&twisted, &Cochain::clifford(&sig.negated()))?;
                t.check(d.is_none(), || format!("C({sig}), mu = -1: F' is not the cochain of -q, differs at {d:?}"));
            }
        }
    }
    t.note(format!("{plus} pairs with mu = 1, {minus} with mu = -1"));
    Ok(())
}

fn expected_label(n: usize) -> AlgebraLabel {
    if n % 2 == 0 {
        AlgebraLabel::Matrix(1 << (n / 2))
    } else {
        AlgebraLabel::DoubleMatrix(1 << (n / 2))
    }
}

fn classify_suite(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let max = cap(cfg);
    if let Some(sig) = &cfg.signature {
        let c = classify(&CliffordAlgebra::new(sig))?;
        let want = expected_label(sig.len());
        t.check(c.label == want, || format!("classify(C({sig})) = {}, expected {want}", c.label));
        return Ok(());
    }
    for n in 0..=max {
        if n % 2 == 1 && n + 1 > max {
            continue;
        }
        for r in 0..=n {
            let c = classify(&CliffordAlgebra::split(r, n - r))?;
            let want = expected_label(n);
            t.check(c.label == want, || format!("classify(C({r},{})) = {}, expected {want}", n - r, c.label));
        }
    }
    // relabelling generators does not change the label
    let mut rng = rng(cfg);
    for n in 0..=max.min(4) {
        for mask in 0..1u32 << n {
            let sig = Signature::from_neg_mask(n, mask);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let a = classify(&CliffordAlgebra::new(&sig))?.label;
            let b = classify(&CliffordAlgebra::new(&sig.permuted(&perm)))?.label;
            t.check(a == b && a == expected_label(n), || format!("C({sig}) = {a} but permuted {perm:?} gives {b}"));
        }
    }
    for e in periodicity_table_check(max.min(3))? {
        t.check(e.passed, || format!("{}: {} vs {}", e.name, e.left, e.right));
    }
    let quat = Cochain::clifford(&Signature::split(0, 2));
    let hh = classify_twisted(&ordinary_tensor(&quat, &quat)?)?;
    t.check(hh.label == AlgebraLabel::Matrix(4), || format!("H (x) H = {}", hh.label));
    Ok(())
}

fn spinor(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let max = cap(cfg);
    for sig in signatures(cfg, max) {
        let n = sig.len();
        let c = CliffordAlgebra::new(&sig);
        let gens = generator_matrices(&c)?;
        let w = relation_witness(&c, &gens);
        t.check(w.is_none(), || format!("C({sig}): generator relations fail at {w:?}"));
        t.check(exterior_matrices(&c)? == gens, || format!("C({sig}): exterior model differs"));
        let (m, lambda) = grading_operator(&c)?;
        t.check(m == super_degree_sign(n).scale(&lambda), || format!("C({sig}): top (x) top is not {lambda} S"));
        if n <= 3 {
            let w = homomorphism_witness(&c)?;
            t.check(w.is_none(), || format!("C({sig}): lr_action not multiplicative at {w:?}"));
            t.check(full_rep_faithfulness(&c)?, || format!("C({sig}): spinor module is not faithful"));
        }
    }
    Ok(())
}

fn odd_extension(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    for sig in signatures(cfg, cap(cfg)) {
        let c = CliffordAlgebra::new(&sig);
        let gens = generator_matrices(&c)?;
        let size = gens.first().map_or(1, Matrix::rows);
        for q in [Scalar::one(), Scalar::from_int(-1)] {
            let m = odd_extend(&gens, &q)?;
            t.check(&m * &m == Matrix::identity(size).scale(&q), || format!("C({sig}), q = {q}: M^2 != q"));
            for (k, g) in gens.iter().enumerate() {
                t.check((&m * g).try_add(&(g * &m))?.is_zero(), || format!("C({sig}), q = {q}: M commutes with generator {}", k + 1));
            }
            let mut all = gens.clone();
            all.push(m);
            let d = commutant_dim(&all)?;
            t.check(d == 1, || format!("C({sig}), q = {q}: commutant dimension {d}"));
        }
    }
    Ok(())
}

fn rep_ladder(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let steps = cap(cfg);
    let qs: Vec<Scalar> = match &cfg.signature {
        Some(s) => s.values().to_vec(),
        None => vec![Scalar::one(); steps],
    };
    let mut rep = Representation::ground_field();
    let mut rungs = vec![format!("C(0,0): degree 1")];
    for (k, q) in qs.iter().enumerate() {
        let ext = rep_extend(&rep, q.clone())?;
        t.check(ext.q_honored, || format!("rung {}: v^2 = {} instead of {q}", k + 1, ext.q));
        rep = ext.rep;
        let n = k + 1;
        let gens = rep.generator_matrices();
        let id = Matrix::identity(rep.degree());
        for i in 0..n {
            for j in 0..n {
                let ok = if i == j {
                    &gens[i] * &gens[i] == id.scale(&qs[i])
                } else {
                    (&gens[i] * &gens[j]).try_add(&(&gens[j] * &gens[i]))?.is_zero()
                };
                t.check(ok, || format!("rung {n}: relation fails for generators {} and {}", i + 1, j + 1));
            }
        }
        let d = rep.commutant_dim()?;
        t.check(d == 1, || format!("rung {n}: commutant dimension {d}"));
        let sig = Signature::new(qs[..n].to_vec())?;
        let diff = cochain_difference(rep.spec().cochain(), &Cochain::clifford(&sig))?;
        t.check(diff.is_none(), || format!("rung {n}: algebra is not C({sig}), differs at {diff:?}"));
        rungs.push(format!(
            "C({sig}): degree {}{}",
            rep.degree(),
            if ext.doubled { ", doubled" } else { ", intertwiner" }
        ));
    }
    t.note(rungs.join("; "));
    Ok(())
}

fn random_spinor(rng: &mut impl Rng, monomials: &[[u32; 4]]) -> PolySpinor {
    let terms = rng.gen_range(1..=6);
    let mut psi = PolySpinor::zero();
    for _ in 0..terms {
        let e = *monomials.choose(rng).expect("nonempty");
        psi = psi.add(&PolySpinor::basis_term(e, rng.gen_range(0..4), nonzero_scalar(rng)));
    }
    psi
}

fn dirac(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let degree = cap(cfg) as u32;
    let monomials = monomials_up_to(degree);
    let minus_one = Scalar::from_int(-1);
    for &e in &monomials {
        for blade in 0..4 {
            let psi = PolySpinor::basis_term(e, blade, Scalar::one());
            let dd = dirac_apply(&dirac_apply(&psi)?)?;
            let want = laplacian(&psi)?.scale(&minus_one);
            t.check(dd == want, || format!("D^2 psi = {dd}, -Laplacian = {want} for psi = {psi}"));
        }
    }
    let mut rng = rng(cfg);
    for _ in 0..50 {
        let psi = random_spinor(&mut rng, &monomials);
        let a = dirac_apply(&psi)?;
        let b = dirac_component_form(&psi);
        let c = dirac_curl_form(&psi);
        t.check(a == b && b == c, || format!("forms disagree on {psi}: {a} / {b} / {c}"));
        let phi = random_spinor(&mut rng, &monomials);
        let k = nonzero_scalar(&mut rng);
        let lhs = dirac_apply(&psi.scale(&k).add(&phi))?;
        let rhs = a.scale(&k).add(&dirac_apply(&phi)?);
        t.check(lhs == rhs, || format!("D is not linear on {psi}, {phi}"));
    }
    Ok(())
}

fn scalars(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let mut rng = rng(cfg);
    for _ in 0..10_000 {
        let (a, b, c) = (small_scalar(&mut rng), small_scalar(&mut rng), small_scalar(&mut rng));
        t.check(&(&a * &b) * &c == &a * &(&b * &c), || format!("({a} {b}) {c} != {a} ({b} {c})"));
        t.check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distributivity fails for {a}, {b}, {c}"));
        t.check(&a * &b == &b * &a && &a + &b == &b + &a, || format!("{a} and {b} do not commute"));
        if !a.is_zero() {
            t.check((&a * &a.inv()?).is_one(), || format!("{a} a^-1 != 1"));
        }
        t.check((&a - &a).is_zero() && &a.conj().conj() == &a, || format!("subtraction or conjugation fails for {a}"));
        let round: Scalar = a.to_string().parse()?;
        t.check(round == a, || format!("{a} does not round-trip through text"));
    }
    Ok(())
}

/// Inversion count of the ordered product `e_x e_y`, by direct enumeration.
fn naive_pair_parity(x: u32, y: u32, n: usize) -> bool {
    let mut count = 0;
    for i in 0..n {
        for j in 0..i {
            count += ((x >> i) & 1) * ((y >> j) & 1);
        }
    }
    count % 2 == 1
}

fn parity_kernel(cfg: &SuiteConfig, t: &mut Tally) -> Result<()> {
    let mut rng = rng(cfg);
    let max = cap(cfg).min(crate::group::MAX_DIM);
    for n in 0..=max {
        let size = 1u64 << n;
        let exhaustive = n <= 6;
        let samples = if exhaustive { (size * size) as usize } else { 2_000 };
        for k in 0..samples {
            let (x, y) = if exhaustive {
                ((k as u64 / size) as u32, (k as u64 % size) as u32)
            } else {
                (rng.gen_range(0..size) as u32, rng.gen_range(0..size) as u32)
            };
            let fast = ordered_pair_parity(x, y);
            t.check(fast == naive_pair_parity(x, y, n), || format!("n = {n}: kernel parity wrong at ({x:b}, {y:b})"));
        }
    }
    Ok(())
}
