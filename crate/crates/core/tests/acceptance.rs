//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Criteria are decided by the library suites together with the oracles
//! below, which do not share code with the library's sign kernel.

use std::process::ExitCode;
use std::time::Instant;

use clifford_twist::suites::{find_suite, SuiteConfig, CRITERIA};
use clifford_twist::tensor::periodicity_mu;
use clifford_twist::{Cochain, Scalar, Signature};

/// Reduces the generator word of `e_x e_y` to normal form by adjacent swaps
/// and contractions. Returns the sign and the mask.
fn word_product(neg: u32, x: u32, y: u32) -> (i8, u32) {
    let mut word: Vec<u32> = (0..32).filter(|i| (x >> i) & 1 == 1).collect();
    word.extend((0..32).filter(|i| (y >> i) & 1 == 1));
    let mut sign = 1i8;
    'outer: loop {
        for k in 0..word.len().saturating_sub(1) {
            if word[k] == word[k + 1] {
                if (neg >> word[k]) & 1 == 1 {
                    sign = -sign;
                }
                word.drain(k..k + 2);
                continue 'outer;
            }
            if word[k] > word[k + 1] {
                word.swap(k, k + 1);
                sign = -sign;
                continue 'outer;
            }
        }
        break;
    }
    (sign, word.iter().fold(0, |m, i| m | (1 << i)))
}

/// Criterion 1 against the word oracle: the library cochain matches
/// the reduced words, and the oracle table itself satisfies the cocycle
/// identity.
fn word_oracle(max_n: usize) -> Result<u64, String> {
    let mut cases = 0;
    for n in 0..=max_n {
        let size = 1u32 << n;
        for neg in 0..size {
            let f = Cochain::clifford(&Signature::from_neg_mask(n, neg));
            let mut table = vec![0i8; (size * size) as usize];
            for x in 0..size {
                for y in 0..size {
                    let (s, m) = word_product(neg, x, y);
                    if m != x ^ y || f.value(x, y) != Scalar::from_int(s as i64) {
                        return Err(format!("n = {n}, neg = {neg:b}: F({x:b}, {y:b}) disagrees with the word oracle"));
                    }
                    table[(x * size + y) as usize] = s;
                    cases += 1;
                }
            }
            let t = |a: u32, b: u32| table[(a * size + b) as usize];
            for x in 0..size {
                for y in 0..size {
                    for z in 0..size {
                        if t(x, y) * t(x ^ y, z) != t(y, z) * t(x, y ^ z) {
                            return Err(format!("oracle table is not a cocycle at ({x:b}, {y:b}, {z:b})"));
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

/// Criterion 2 against the word oracle on generator pairs.
fn generator_oracle(max_n: usize) -> Result<u64, String> {
    let mut cases = 0;
    for n in 0..=max_n {
        for neg in 0..1u32 << n {
            let f = Cochain::clifford(&Signature::from_neg_mask(n, neg));
            for i in 0..n {
                for j in 0..n {
                    let (x, y) = (1 << i, 1 << j);
                    let (s, m) = word_product(neg, x, y);
                    let (t, _) = word_product(neg, y, x);
                    let ok = m == x ^ y
                        && f.value(x, y) == Scalar::from_int(s as i64)
                        && (i == j || s == -t);
                    if !ok {
                        return Err(format!("n = {n}, neg = {neg:b}: e{} e{} disagrees with the word oracle", i + 1, j + 1));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// `mu` for the two-dimensional factors, read off by hand.
fn mu_table() -> Result<u64, String> {
    for (sig, mu) in [("++", -1), ("--", -1), ("+-", 1), ("-+", 1), ("++++", 1), ("+---", -1)] {
        let got = periodicity_mu(&sig.parse().unwrap()).map_err(|e| e.to_string())?;
        if got != Scalar::from_int(mu) {
            return Err(format!("mu(C({sig})) = {got}, expected {mu}"));
        }
    }
    Ok(6)
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut failures = 0;
    let start = Instant::now();
    for c in CRITERIA {
        let t0 = Instant::now();
        let mut cases = 0u64;
        let mut witness: Option<String> = None;
        let mut notes = Vec::new();
        for name in c.suites {
            let suite = find_suite(name).expect("registered suite");
            match suite.run(&cfg) {
                Ok(r) => {
                    cases += r.cases;
                    notes.extend(r.notes);
                    if witness.is_none() {
                        witness = r.witness.map(|w| format!("{name}: {w}"));
                    }
                }
                Err(e) => {
                    witness.get_or_insert(format!("{name}: error: {e}"));
                }
            }
        }
        let extra = match c.number {
            1 => Some(word_oracle(6)),
            2 => Some(generator_oracle(8)),
            12 => Some(mu_table()),
            _ => None,
        };
        if let Some(r) = extra {
            match r {
                Ok(k) => cases += k,
                Err(w) => {
                    witness.get_or_insert(format!("oracle: {w}"));
                }
            }
        }
        let ms = t0.elapsed().as_millis();
        match witness {
            None => println!("PASS criterion {:2}: {} ({cases} cases, {ms} ms)", c.number, c.title),
            Some(w) => {
                failures += 1;
                println!("FAIL criterion {:2}: {} ({ms} ms)\n    witness: {w}", c.number, c.title);
            }
        }
        for n in notes {
            println!("    {n}");
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        CRITERIA.len() - failures,
        CRITERIA.len(),
        start.elapsed().as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
