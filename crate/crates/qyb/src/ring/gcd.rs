//! Multivariate gcd for Laurent polynomials.
//!
//! Monomials are units, so every input is first shifted to an honest
//! polynomial. The gcd is then computed by a recursive primitive PRS, taking
//! one variable as main and the rest as coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;
use super::mono::{Mono, Var, NVARS};
use super::scalar::Scalar;

/// Divides out the smallest exponent of every variable.
pub fn shift_to_poly(a: &Scalar) -> Scalar {
    if a.is_zero() {
        return Scalar::zero();
    }
    let lo = a.min_exps();
    if lo == [0; NVARS] {
        return a.clone();
    }
    a.mul_mono(Mono::new(lo).inv())
}

/// Scales to integer coefficients with gcd 1 and a positive leading term.
pub fn primitive_integer(a: &Scalar) -> Scalar {
    if a.is_zero() {
        return Scalar::zero();
    }
    let mut l = BigInt::one();
    let mut g = BigInt::zero();
    for (_, c) in a.terms() {
        l = l.lcm(&c.denom_big());
        g = g.gcd(&c.numer_big());
    }
    if a.terms()[0].1.is_negative() {
        g = -g;
    }
    let f = Coeff::from_big(num_rational::BigRational::new(l, g));
    a.scale(&f)
}

/// Content of `a` as a polynomial in `v`: gcd of its coefficients.
fn content_in(a: &Scalar, v: Var) -> Scalar {
    let mut g = Scalar::zero();
    for (_, c) in a.coeffs_in(v) {
        g = gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn pp_in(a: &Scalar, v: Var) -> Scalar {
    let c = content_in(a, v);
    if c.is_one() {
        return primitive_integer(a);
    }
    primitive_integer(&a.exact_div(&c).expect("content divides"))
}

fn main_var(a: &Scalar, b: &Scalar) -> Option<Var> {
    let (pa, pb) = (a.vars(), b.vars());
    [Var::X, Var::V, Var::Q]
        .into_iter()
        .find(|&v| pa[v as usize] || pb[v as usize])
}

fn lc_in(a: &Scalar, v: Var) -> (i32, Scalar) {
    a.coeffs_in(v).into_iter().next().expect("nonzero")
}

/// Sparse pseudo-remainder of `a` by `b` in the variable `v`.
fn prem(a: &Scalar, b: &Scalar, v: Var) -> Scalar {
    let (db, lb) = lc_in(b, v);
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let (dr, lr) = lc_in(&r, v);
        if dr < db {
            return r;
        }
        let shift = Scalar::var_pow(v, dr - db);
        r = &lb.mul(&r) - &lr.mul(&shift).mul(b);
        r = primitive_integer(&r);
    }
}

/// Greatest common divisor, normalized to a primitive integer polynomial
/// with nonnegative exponents and positive leading coefficient.
pub fn gcd(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.len() == 1 || b.len() == 1 {
        return Scalar::one();
    }
    let a = shift_to_poly(a);
    let b = shift_to_poly(b);
    if a == b {
        return normalize(&a);
    }
    let Some(v) = main_var(&a, &b) else {
        return Scalar::one();
    };
    if !a.uses(v) {
        return gcd(&a, &content_in(&b, v));
    }
    if !b.uses(v) {
        return gcd(&content_in(&a, v), &b);
    }
    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let c = gcd(&ca, &cb);
    let mut p = primitive_integer(&a.exact_div(&ca).unwrap());
    let mut r = primitive_integer(&b.exact_div(&cb).unwrap());
    if p.degree(v) < r.degree(v) {
        std::mem::swap(&mut p, &mut r);
    }
    // quick exit when one divides the other
    if p.exact_div(&r).is_some() {
        return normalize(&c.mul(&r));
    }
    while !r.is_zero() {
        let rem = prem(&p, &r, v);
        p = r;
        r = if rem.is_zero() {
            rem
        } else {
            shift_to_poly(&pp_in(&rem, v))
        };
        if !r.is_zero() && !r.uses(v) {
            // constant in v: the primitive part of the gcd is trivial
            return normalize(&c);
        }
    }
    normalize(&c.mul(&pp_in(&p, v)))
}

fn normalize(a: &Scalar) -> Scalar {
    if a.is_zero() {
        return Scalar::zero();
    }
    let s = shift_to_poly(a);
    if s.len() == 1 {
        return Scalar::one();
    }
    primitive_integer(&s)
}

/// Checks a candidate content for sign consistency; handy in tests.
pub fn leading_positive(a: &Scalar) -> bool {
    a.leading()
        .map(|(_, c)| !c.numer_big().is_negative())
        .unwrap_or(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

    #[test]
    fn univariate() {
        let a = p("q^4 - 1");
        let b = p("q^2 + 2*q + 1");
        assert_eq!(gcd(&a, &b), p("q + 1"));
        assert_eq!(gcd(&p("q^3 - q^-3"), &p("q - q^-1")), p("q^2 - 1"));
    }

    #[test]
    fn multivariate() {
        let f = p("q*x + v");
        let a = f.mul(&p("x - q^2"));
        let b = f.mul(&p("x*v + 3"));
        assert_eq!(gcd(&a, &b), f);
        assert!(gcd(&p("x + q"), &p("x - q")).is_one());
    }
}
