//! Braid words, quantum-trace closures, normalized link invariants, Markov
//! move tests and closed forms for closures of σ₁ⁿ.

mod skein;

pub use skein::{HeckeElement, HeckeTrace};

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::Report;
use crate::ring::{Scalar, ScalarFrac};
use crate::rmatrix::{y_n_expected, Kind, RData, RError};
use crate::tensor::TensorOp;
use crate::towers::{idempotent_from_path, jm_elements, Algebra, BranchGraph, Partition, TowerRep};

fn sf(s: Scalar) -> ScalarFrac {
    ScalarFrac::from(s)
}

/// A braid on `strands` strands; letter i is σ_i and -i is σ_i^-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<BraidWord, RError> {
        if strands == 0 {
            return Err(RError::InvalidFamily(
                "a braid needs at least one strand".into(),
            ));
        }
        if let Some(l) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(RError::InvalidFamily(format!(
                "letter {l} out of range for {strands} strands"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses letters separated by spaces or commas, e.g. "1 -2 1".
    pub fn parse(strands: usize, s: &str) -> Result<BraidWord, RError> {
        let letters = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| RError::InvalidFamily(format!("bad braid letter '{t}'")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    /// σ₁ⁿ on two strands (negative n gives inverse letters).
    pub fn torus(n: i32) -> BraidWord {
        let l = if n >= 0 { 1 } else { -1 };
        BraidWord {
            strands: 2,
            letters: vec![l; n.unsigned_abs() as usize],
        }
    }

    pub fn exponent_sum(&self) -> i32 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, o: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend(&o.letters);
        BraidWord {
            strands: self.strands.max(o.strands),
            letters,
        }
    }

    /// β σ_n^{±1} on n+1 strands.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Seeded random words with 1 ≤ strands ≤ `max_strands`, 0..=`max_len` letters.
    pub fn random(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
        let strands = rng.gen_range(1..=max_strands.max(1));
        if strands == 1 {
            return BraidWord {
                strands,
                letters: Vec::new(),
            };
        }
        let len = rng.gen_range(1..=max_len.max(1));
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands) as i32;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{} strands] {}", self.strands, parts.join(" "))
    }
}

/// Ordered product of the embedded Ř^{±1}.
pub fn braid_operator(b: &BraidWord, t: &TowerRep) -> Result<TensorOp, RError> {
    if t.n != b.strands {
        return Err(RError::InvalidFamily(format!(
            "braid on {} strands, tower on {}",
            b.strands, t.n
        )));
    }
    let mut op = t.identity();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize;
        op = op.mul(if l > 0 { t.sigma(i) } else { t.sigma_inv(i) });
    }
    Ok(op)
}

/// 𝖰(X) = Tr_{D(1..n)} X, checked against Tr_{Q(1..n)} X.
pub fn closure_invariant(b: &BraidWord, r: &RData) -> Result<ScalarFrac, RError> {
    let t = TowerRep::new(r, b.strands);
    closure_in(b, &t)
}

fn closure_in(b: &BraidWord, t: &TowerRep) -> Result<ScalarFrac, RError> {
    let op = braid_operator(b, t)?;
    let d = op.full_trace(Some(&t.base.d));
    let q = op.full_trace(Some(&t.base.q));
    if d != q {
        return Err(RError::InvalidFamily(format!(
            "D- and Q-closures differ: {d} vs {q}"
        )));
    }
    Ok(d)
}

/// 𝖰(closure of σ₁ⁿ) = (α_n + α_{n-1} Tr D (+ ν β_n)) Tr D.
pub fn torus_closed_form(n: i32, r: &RData) -> ScalarFrac {
    y_n_expected(r, n).mul(&r.tr_d)
}

/// The stabilization factor c with Tr_{D(n+1)}(σ_n^-1) = c: 1 - λ Tr D
/// (q^{-2d}) for Hecke, ν² for BMW.
pub fn stabilization_factor(r: &RData) -> ScalarFrac {
    match r.kind() {
        Kind::Hecke => ScalarFrac::one().sub(&RData::lambda().mul(&r.tr_d)),
        Kind::Bmw => {
            let nu = r.nu.clone().unwrap();
            sf(nu.mul(&nu))
        }
    }
}

/// v with v^-2 = c: q^d for Hecke, ν^-1 for BMW.
fn framing_root(r: &RData) -> Result<ScalarFrac, RError> {
    match r.kind() {
        Kind::Hecke => r
            .d_param
            .map(|d| sf(Scalar::q(d)))
            .ok_or_else(|| RError::InvalidFamily("1 - λ Tr D is not an even power of q".into())),
        Kind::Bmw => Ok(sf(r.nu.clone().unwrap()).inv()?),
    }
}

/// P(β) = v^{-(e - n + 1)} 𝒯r(β)/Tr D with v = q^d (Hecke) or ν^-1 (BMW);
/// P(unknot) = 1 and both Markov moves leave P unchanged.
pub fn normalized_invariant(b: &BraidWord, r: &RData) -> Result<ScalarFrac, RError> {
    let raw = closure_invariant(b, r)?;
    normalize(b, r, &raw)
}

fn normalize(b: &BraidWord, r: &RData, raw: &ScalarFrac) -> Result<ScalarFrac, RError> {
    let v = framing_root(r)?;
    let k = b.exponent_sum() - b.strands as i32 + 1;
    Ok(raw.mul(&v.pow(-k)?).div(&r.tr_d)?)
}

/// Closure through the abstract Hecke algebra with the same λ and Tr D.
pub fn skein_closure(b: &BraidWord, r: &RData) -> Result<ScalarFrac, RError> {
    if r.kind() != Kind::Hecke {
        return Err(RError::NotHecke);
    }
    let mut h = HeckeTrace::new(RData::lambda(), r.tr_d.clone());
    Ok(h.word_trace(b.strands, &b.letters))
}

pub fn skein_normalized(b: &BraidWord, r: &RData) -> Result<ScalarFrac, RError> {
    let raw = skein_closure(b, r)?;
    normalize(b, r, &raw)
}

/// Conjugation, stabilization and normalized-invariant checks over seeded
/// random words; skein relation and, for Hecke, the skein-oracle comparison.
pub fn markov_property_test(
    r: &RData,
    trials: usize,
    max_strands: usize,
    max_len: usize,
    seed: u64,
) -> Report {
    let mut rep = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<(BraidWord, BraidWord)> = (0..trials)
        .map(|_| {
            let b = BraidWord::random(&mut rng, max_strands, max_len);
            let g = BraidWord::random(&mut rng, b.strands, 2);
            let g = BraidWord {
                strands: b.strands,
                letters: g.letters,
            };
            (b, g)
        })
        .collect();
    let c = stabilization_factor(r);
    let lam = RData::lambda();
    let hecke = r.kind() == Kind::Hecke;
    let results: Vec<Result<[bool; 6], RError>> = words
        .par_iter()
        .map(|(b, g)| {
            let tb = closure_invariant(b, r)?;
            let conj = g.concat(b).concat(&g.inverse());
            let conj_ok = closure_invariant(&conj, r)? == tb;
            let sp = closure_invariant(&b.stabilize(true), r)? == tb;
            let sm = closure_invariant(&b.stabilize(false), r)? == tb.mul(&c);
            let pb = normalized_invariant(b, r);
            let norm_ok = match &pb {
                Ok(p) => {
                    normalized_invariant(&b.stabilize(true), r).as_ref() == Ok(p)
                        && normalized_invariant(&b.stabilize(false), r).as_ref() == Ok(p)
                        && normalized_invariant(&conj, r).as_ref() == Ok(p)
                }
                Err(_) => false,
            };
            // skein on the last letter position: β σ_i vs β σ_i^-1
            let skein_ok = if b.strands > 1 {
                let i = 1;
                let plus = closure_invariant(
                    &b.concat(&BraidWord {
                        strands: b.strands,
                        letters: vec![i],
                    }),
                    r,
                )?;
                let minus = closure_invariant(
                    &b.concat(&BraidWord {
                        strands: b.strands,
                        letters: vec![-i],
                    }),
                    r,
                )?;
                if hecke {
                    plus.sub(&minus) == lam.mul(&tb)
                } else {
                    let t = TowerRep::new(r, b.strands);
                    let bk = braid_operator(b, &t)?
                        .mul(t.kappa(1).unwrap())
                        .full_trace(Some(&r.d));
                    plus.sub(&minus) == lam.mul(&tb.sub(&bk))
                }
            } else {
                true
            };
            let oracle_ok = if hecke {
                skein_closure(b, r)? == tb
            } else {
                true
            };
            Ok([conj_ok, sp, sm, norm_ok, skein_ok, oracle_ok])
        })
        .collect();
    let names = [
        "conjugation invariance 𝒯r(γβγ^-1) = 𝒯r(β)",
        "stabilization 𝒯r(βσ_n) = 𝒯r(β)",
        "stabilization 𝒯r(βσ_n^-1) = c 𝒯r(β)",
        "normalized invariant unchanged by both Markov moves",
        "skein relation",
        "abstract Hecke trace agrees",
    ];
    let mut ok = [true; 6];
    let mut bad = vec![Vec::new(); 6];
    for ((b, _), res) in words.iter().zip(results) {
        match res {
            Ok(flags) => {
                for k in 0..6 {
                    if !flags[k] {
                        ok[k] = false;
                        bad[k].push(b.to_string());
                    }
                }
            }
            Err(e) => {
                ok = [false; 6];
                bad[0].push(format!("{b}: {e}"));
            }
        }
    }
    for k in 0..6 {
        if k == 5 && !hecke {
            continue;
        }
        let detail = if bad[k].is_empty() {
            format!("{trials} words, seed {seed}")
        } else {
            bad[k].join("; ")
        };
        rep.push(names[k], ok[k], detail);
    }
    if hecke && r.d_param.is_some() {
        // q -> q^-1 exchanges a braid with its mirror image
        let mirror_ok = words.iter().all(|(b, _)| {
            let p = normalized_invariant(b, r);
            let m = normalized_invariant(&b.mirror(), r);
            match (p, m) {
                (Ok(p), Ok(m)) => p.map_exps(|[a, v, x]| [-a, v, x]) == m,
                _ => false,
            }
        });
        rep.push("mirror image: P(β*)(q) = P(β)(q^-1)", mirror_ok, "");
    }
    rep
}

/// Closures of σ₁ⁿ for n in the range against the closed form.
pub fn check_torus(r: &RData, ns: std::ops::RangeInclusive<i32>) -> Report {
    let mut rep = Report::new();
    let t = TowerRep::new(r, 2);
    for n in ns {
        let v = closure_in(&BraidWord::torus(n), &t);
        let e = torus_closed_form(n, r);
        let ok = matches!(&v, Ok(x) if *x == e);
        rep.push(
            format!("𝖰(σ₁^{n}) closed form"),
            ok,
            if ok {
                e.to_string()
            } else {
                format!("{v:?} vs {e}")
            },
        );
    }
    rep
}

/// One row of the idempotent decomposition: E B E = C E.
#[derive(Clone, Debug)]
pub struct DecompositionRow {
    pub path: String,
    pub shape: Partition,
    pub coefficient: ScalarFrac,
    pub qdim: ScalarFrac,
}

/// 𝖰(B) = Σ_paths C_path 𝒯r(E_path) with E B E = C E (Hecke, n ≤ 4).
pub fn idempotent_decomposition(
    b: &BraidWord,
    r: &RData,
) -> Result<(Vec<DecompositionRow>, ScalarFrac), RError> {
    if r.kind() != Kind::Hecke {
        return Err(RError::NotHecke);
    }
    let n = b.strands;
    let t = TowerRep::new(r, n);
    let ys = jm_elements(&t);
    let op = braid_operator(b, &t)?;
    let g = BranchGraph::build(Algebra::Hecke, n);
    let mut rows = Vec::new();
    let mut total = ScalarFrac::zero();
    for path in g.paths(n) {
        let e = idempotent_from_path(&t, &ys, &path)?;
        if e.is_zero() {
            continue;
        }
        let ebe = e.mul(&op).mul(&e);
        let c = ebe.ratio_to(&e).ok_or_else(|| {
            RError::InvalidFamily(format!("E B E is not proportional to E for {path}"))
        })?;
        let qd = e.full_trace(Some(&r.d));
        total = total.add(&c.mul(&qd));
        rows.push(DecompositionRow {
            path: path.to_string(),
            shape: path.end().clone(),
            coefficient: c,
            qdim: qd,
        });
    }
    Ok((rows, total))
}
