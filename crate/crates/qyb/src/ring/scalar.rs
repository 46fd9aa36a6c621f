//! Laurent polynomials in (q, v, x) with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::coeff::Coeff;
use super::mono::{Mono, Var, NVARS};
use super::RingError;

/// Terms are kept sorted by descending monomial with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Scalar {
    pub(crate) terms: Vec<(Mono, Coeff)>,
}

/// Accumulates sums of products and merges them once at the end.
#[derive(Default)]
pub struct Acc {
    buf: Vec<(Mono, Coeff)>,
}

impl Acc {
    pub fn new() -> Acc {
        Acc { buf: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.buf.is_empty()
    }

    pub fn add(&mut self, a: &Scalar) {
        self.buf.extend(a.terms.iter().cloned());
    }

    pub fn add_scaled(&mut self, a: &Scalar, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        self.buf.extend(a.terms.iter().map(|(m, x)| (*m, x.mul(c))));
    }

    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        self.buf.reserve(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.buf.push((ma.mul(*mb), ca.mul(cb)));
            }
        }
    }

    pub fn finish(&mut self) -> Scalar {
        let mut v = std::mem::take(&mut self.buf);
        Scalar::from_unsorted(&mut v)
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Scalar {
        Scalar::constant(Coeff::ONE)
    }

    pub fn constant(c: Coeff) -> Scalar {
        if c.is_zero() {
            Scalar::zero()
        } else {
            Scalar {
                terms: vec![(Mono::ONE, c)],
            }
        }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::constant(Coeff::int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::constant(Coeff::ratio(n, d))
    }

    pub fn term(c: Coeff, m: Mono) -> Scalar {
        if c.is_zero() {
            Scalar::zero()
        } else {
            Scalar {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn var_pow(v: Var, e: i32) -> Scalar {
        Scalar::term(Coeff::ONE, Mono::var(v, e))
    }

    /// q^e
    pub fn q(e: i32) -> Scalar {
        Scalar::var_pow(Var::Q, e)
    }

    /// v^e (the BMW parameter ν)
    pub fn v(e: i32) -> Scalar {
        Scalar::var_pow(Var::V, e)
    }

    /// x^e (the spectral parameter)
    pub fn x(e: i32) -> Scalar {
        Scalar::var_pow(Var::X, e)
    }

    /// λ = q - q^-1
    pub fn lambda() -> Scalar {
        &Scalar::q(1) - &Scalar::q(-1)
    }

    /// Builds from arbitrary (monomial, coefficient) pairs.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Coeff)>>(it: I) -> Scalar {
        let mut v: Vec<_> = it.into_iter().collect();
        Scalar::from_unsorted(&mut v)
    }

    pub(crate) fn from_unsorted(v: &mut Vec<(Mono, Coeff)>) -> Scalar {
        if v.len() <= 1 {
            v.retain(|t| !t.1.is_zero());
            return Scalar {
                terms: std::mem::take(v),
            };
        }
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, Coeff)> = Vec::with_capacity(v.len());
        for (m, c) in v.drain(..) {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.add(&c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        Scalar { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(Mono, Coeff)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c.clone())),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Coeff)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Scalar { terms: out }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if let Some((m, c)) = o.as_monomial() {
            return self.mul_mono(m).scale(&c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return o.mul_mono(m).scale(&c);
        }
        let mut acc = Acc::new();
        acc.add_product(self, o);
        acc.finish()
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn vars(&self) -> [bool; NVARS] {
        let mut p = [false; NVARS];
        for (m, _) in &self.terms {
            for v in Var::ALL {
                if m.exp(v) != 0 {
                    p[v as usize] = true;
                }
            }
        }
        p
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn min_exps(&self) -> [i32; NVARS] {
        let mut lo = [i32::MAX; NVARS];
        for (m, _) in &self.terms {
            for (i, e) in m.exps().iter().enumerate() {
                lo[i] = lo[i].min(*e);
            }
        }
        if self.is_zero() {
            [0; NVARS]
        } else {
            lo
        }
    }

    pub fn max_exps(&self) -> [i32; NVARS] {
        let mut hi = [i32::MIN; NVARS];
        for (m, _) in &self.terms {
            for (i, e) in m.exps().iter().enumerate() {
                hi[i] = hi[i].max(*e);
            }
        }
        if self.is_zero() {
            [0; NVARS]
        } else {
            hi
        }
    }

    pub fn degree(&self, v: Var) -> i32 {
        self.max_exps()[v as usize]
    }

    /// Exact division in the Laurent ring, `None` when not exact.
    pub fn exact_div(&self, d: &Scalar) -> Option<Scalar> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            return Some(self.mul_mono(m.inv()).scale(&c.inv()));
        }
        let (alo, ahi) = (self.min_exps(), self.max_exps());
        let (dlo, dhi) = (d.min_exps(), d.max_exps());
        let mut lo = [0; NVARS];
        let mut hi = [0; NVARS];
        for i in 0..NVARS {
            lo[i] = alo[i] - dlo[i];
            hi[i] = ahi[i] - dhi[i];
            if lo[i] > hi[i] {
                return None;
            }
        }
        let (dm, dc) = d.terms[0].clone();
        let dc_inv = dc.inv();
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, Coeff)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let qm = rm.div(dm);
            let e = qm.exps();
            for i in 0..NVARS {
                if e[i] < lo[i] || e[i] > hi[i] {
                    return None;
                }
            }
            let qc = rc.mul(&dc_inv);
            let step = d.mul_mono(qm).scale(&qc);
            rem = rem.sub(&step);
            quot.push((qm, qc));
        }
        Some(Scalar { terms: quot })
    }

    /// Coefficients with respect to one variable, keyed by its exponent
    /// (descending); the variable is removed from the coefficients.
    pub fn coeffs_in(&self, v: Var) -> Vec<(i32, Scalar)> {
        let mut groups: std::collections::BTreeMap<i32, Vec<(Mono, Coeff)>> = Default::default();
        for (m, c) in &self.terms {
            groups
                .entry(m.exp(v))
                .or_default()
                .push((m.with_exp(v, 0), c.clone()));
        }
        groups
            .into_iter()
            .rev()
            .map(|(e, mut t)| (e, Scalar::from_unsorted(&mut t)))
            .collect()
    }

    pub fn map_exps<F: Fn([i32; NVARS]) -> [i32; NVARS]>(&self, f: F) -> Scalar {
        Scalar::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Mono::new(f(m.exps())), c.clone())),
        )
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Scalar {
        Scalar::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.exp(v) != 0)
                .map(|(m, c)| {
                    let e = m.exp(v);
                    (m.with_exp(v, e - 1), c.mul(&Coeff::int(e as i64)))
                }),
        )
    }

    /// Substitutes q -> q^k (k may be negative).
    pub fn q_power_map(&self, k: i32) -> Scalar {
        self.map_exps(|[a, b, c]| [a * k, b, c])
    }

    /// Substitutes a constant for a variable.
    pub fn subs_const(&self, v: Var, c: &Coeff) -> Scalar {
        assert!(!c.is_zero(), "substituting zero into a Laurent polynomial");
        Scalar::from_terms(
            self.terms
                .iter()
                .map(|(m, x)| (m.with_exp(v, 0), x.mul(&c.pow(m.exp(v))))),
        )
    }

    /// Substitutes v -> s for a Laurent polynomial `s` that is a monomial.
    pub fn subs_mono(&self, v: Var, s: &Scalar) -> Scalar {
        let (sm, sc) = s.as_monomial().expect("monomial substitution");
        Scalar::from_terms(self.terms.iter().map(|(m, x)| {
            let e = m.exp(v);
            let mut mm = m.with_exp(v, 0);
            let mut p = Mono::ONE;
            let base = if e >= 0 { sm } else { sm.inv() };
            for _ in 0..e.unsigned_abs() {
                p = p.mul(base);
            }
            mm = mm.mul(p);
            (mm, x.mul(&sc.pow(e)))
        }))
    }

    pub fn parse(s: &str) -> Result<Scalar, RingError> {
        super::parse::parse_scalar(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 1 {
                    parts.push(v.name().to_string());
                } else if e != 0 {
                    parts.push(format!("{}^{}", v.name(), e));
                }
            }
            if parts.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{a}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl FromStr for Scalar {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Coeff> for Scalar {
    fn from(c: Coeff) -> Self {
        Scalar::constant(c)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = &Scalar::q(1) - &Scalar::q(-1);
        let b = &Scalar::q(1) + &Scalar::q(-1);
        assert_eq!(a.mul(&b), &Scalar::q(2) - &Scalar::q(-2));
    }

    #[test]
    fn exact_division() {
        let n = &Scalar::q(3) + &Scalar::q(-3);
        let d = &Scalar::q(1) + &Scalar::q(-1);
        let expect = &(&Scalar::q(2) - &Scalar::one()) + &Scalar::q(-2);
        assert_eq!(n.exact_div(&d), Some(expect));
        assert_eq!(Scalar::q(2).exact_div(&d), None);
        let p = &Scalar::x(1) + &Scalar::q(1);
        assert_eq!(p.mul(&d).exact_div(&p), Some(d));
    }

    #[test]
    fn display_form() {
        let s = &(&Scalar::q(2) - &Scalar::one()) + &Scalar::q(-2);
        assert_eq!(s.to_string(), "q^2 - 1 + q^-2");
        assert_eq!(Scalar::lambda().to_string(), "q - q^-1");
        let t = Scalar::term(Coeff::ratio(-3, 2), Mono::new([1, -1, 2]));
        assert_eq!(t.to_string(), "-3/2*q*v^-1*x^2");
    }
}
