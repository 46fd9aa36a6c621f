//! Abstract Hecke algebra H_n in the basis T_w (w ∈ S_n) with the Ocneanu
//! trace, used as an R-matrix-free oracle for braid closures.
//!
//! σ_i² = λσ_i + 1, 𝒯r(1_n) = Zⁿ, 𝒯r(aσ_{n-1}b) = 𝒯r(ab) for a, b ∈ H_{n-1}.

use std::collections::{BTreeMap, HashMap};

use crate::ring::ScalarFrac;

type Perm = Vec<u8>;

/// Linear combination of basis elements T_w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub n: usize,
    pub terms: BTreeMap<Perm, ScalarFrac>,
}

pub struct HeckeTrace {
    lambda: ScalarFrac,
    z: ScalarFrac,
    memo: HashMap<Perm, ScalarFrac>,
}

impl HeckeElement {
    pub fn one(n: usize) -> HeckeElement {
        let mut terms = BTreeMap::new();
        terms.insert((1..=n as u8).collect(), ScalarFrac::one());
        HeckeElement { n, terms }
    }

    fn add_term(&mut self, w: Perm, c: ScalarFrac) {
        let v = self.terms.get(&w).map_or(c.clone(), |e| e.add(&c));
        if v.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, v);
        }
    }

    /// Right multiplication by T_i (1-based i < n).
    pub fn mul_t(&self, i: usize, lambda: &ScalarFrac) -> HeckeElement {
        let mut out = HeckeElement {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(i - 1, i);
            if w[i - 1] < w[i] {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.clone());
                out.add_term(w.clone(), c.mul(lambda));
            }
        }
        out
    }

    /// Right multiplication by σ_i^{±1}; σ_i^-1 = σ_i - λ.
    pub fn mul_letter(&self, letter: i32, lambda: &ScalarFrac) -> HeckeElement {
        let i = letter.unsigned_abs() as usize;
        let mut out = self.mul_t(i, lambda);
        if letter < 0 {
            for (w, c) in &self.terms {
                out.add_term(w.clone(), c.mul(lambda).neg());
            }
        }
        out
    }
}

impl HeckeTrace {
    pub fn new(lambda: ScalarFrac, z: ScalarFrac) -> HeckeTrace {
        HeckeTrace {
            lambda,
            z,
            memo: HashMap::new(),
        }
    }

    /// 𝒯r(T_w) on |w| strands.
    pub fn basis_trace(&mut self, w: &Perm) -> ScalarFrac {
        if w.is_empty() {
            return ScalarFrac::one();
        }
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let n = w.len();
        let v = if w[n - 1] as usize == n {
            let inner = self.basis_trace(&w[..n - 1].to_vec());
            self.z.mul(&inner)
        } else {
            // T_w = T_{w'} T_{n-1} T_{n-2} … T_k with k the position of n
            let k = w.iter().position(|&x| x as usize == n).unwrap() + 1;
            let mut wp: Perm = w.iter().copied().filter(|&x| x as usize != n).collect();
            wp.push(n as u8);
            let mut e = HeckeElement {
                n: n - 1,
                terms: BTreeMap::new(),
            };
            e.terms.insert(wp[..n - 1].to_vec(), ScalarFrac::one());
            for j in (k..=n - 2).rev() {
                e = e.mul_t(j, &self.lambda);
            }
            self.trace(&e)
        };
        self.memo.insert(w.clone(), v.clone());
        v
    }

    pub fn trace(&mut self, e: &HeckeElement) -> ScalarFrac {
        let mut s = ScalarFrac::zero();
        for (w, c) in &e.terms {
            s = s.add(&c.mul(&self.basis_trace(w)));
        }
        s
    }

    /// 𝒯r of the braid word with the given letters on `strands` strands.
    pub fn word_trace(&mut self, strands: usize, letters: &[i32]) -> ScalarFrac {
        let mut e = HeckeElement::one(strands);
        for &l in letters {
            e = e.mul_letter(l, &self.lambda);
        }
        self.trace(&e)
    }
}
