//! Normalized fractions of Laurent polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use super::coeff::Coeff;
use super::gcd::{gcd, primitive_integer, shift_to_poly};
use super::mono::Var;
use super::scalar::Scalar;
use super::RingError;

/// `num / den` with `den` a primitive integer polynomial (nonnegative
/// exponents, smallest exponents zero, positive leading coefficient) coprime
/// to `num`. A monomial denominator is always absorbed, so `den == 1` exactly
/// when the value is a Laurent polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarFrac {
    num: Scalar,
    den: Scalar,
}

impl ScalarFrac {
    pub fn zero() -> ScalarFrac {
        ScalarFrac {
            num: Scalar::zero(),
            den: Scalar::one(),
        }
    }

    pub fn one() -> ScalarFrac {
        ScalarFrac::from(Scalar::one())
    }

    pub fn int(n: i64) -> ScalarFrac {
        ScalarFrac::from(Scalar::int(n))
    }

    pub fn new(num: Scalar, den: Scalar) -> Result<ScalarFrac, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(ScalarFrac::reduce(num, den))
    }

    fn reduce(num: Scalar, den: Scalar) -> ScalarFrac {
        if num.is_zero() {
            return ScalarFrac::zero();
        }
        if let Some((m, c)) = den.as_monomial() {
            return ScalarFrac {
                num: num.mul_mono(m.inv()).scale(&c.inv()),
                den: Scalar::one(),
            };
        }
        if let Some(q) = num.exact_div(&den) {
            return ScalarFrac {
                num: q,
                den: Scalar::one(),
            };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        if let Some((m, c)) = den.as_monomial() {
            return ScalarFrac {
                num: num.mul_mono(m.inv()).scale(&c.inv()),
                den: Scalar::one(),
            };
        }
        // move the unit part (constant times monomial) of den into num
        let shifted = shift_to_poly(&den);
        let prim = primitive_integer(&shifted);
        let lo = den.min_exps();
        let unit_c = den.leading().unwrap().1.div(&prim.leading().unwrap().1);
        num = num
            .mul_mono(super::mono::Mono::new(lo).inv())
            .scale(&unit_c.inv());
        den = prim;
        ScalarFrac { num, den }
    }

    pub fn num(&self) -> &Scalar {
        &self.num
    }

    pub fn den(&self) -> &Scalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn into_scalar(self) -> Result<Scalar, RingError> {
        if self.den.is_one() {
            Ok(self.num)
        } else {
            Err(RingError::NotPolynomial(self.to_string()))
        }
    }

    pub fn neg(&self) -> ScalarFrac {
        ScalarFrac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &ScalarFrac) -> ScalarFrac {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return ScalarFrac {
                    num: self.num.add(&o.num),
                    den: Scalar::one(),
                };
            }
            return ScalarFrac::reduce(self.num.add(&o.num), self.den.clone());
        }
        if o.den.is_one() {
            return ScalarFrac {
                num: self.num.add(&o.num.mul(&self.den)),
                den: self.den.clone(),
            };
        }
        if self.den.is_one() {
            return ScalarFrac {
                num: o.num.add(&self.num.mul(&o.den)),
                den: o.den.clone(),
            };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return ScalarFrac::reduce(n, self.den.mul(&o.den));
        }
        let a = self.den.exact_div(&g).unwrap();
        let b = o.den.exact_div(&g).unwrap();
        let n = self.num.mul(&b).add(&o.num.mul(&a));
        ScalarFrac::reduce(n, a.mul(&o.den))
    }

    pub fn sub(&self, o: &ScalarFrac) -> ScalarFrac {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &ScalarFrac) -> ScalarFrac {
        if self.is_zero() || o.is_zero() {
            return ScalarFrac::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return ScalarFrac {
                num: self.num.mul(&o.num),
                den: Scalar::one(),
            };
        }
        ScalarFrac::reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn mul_scalar(&self, s: &Scalar) -> ScalarFrac {
        if self.den.is_one() {
            return ScalarFrac {
                num: self.num.mul(s),
                den: Scalar::one(),
            };
        }
        ScalarFrac::reduce(self.num.mul(s), self.den.clone())
    }

    pub fn inv(&self) -> Result<ScalarFrac, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(ScalarFrac::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &ScalarFrac) -> Result<ScalarFrac, RingError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<ScalarFrac, RingError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        // coprime parts stay coprime under powers
        Ok(ScalarFrac {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Substitutes `s` for the variable `v`.
    pub fn subs(&self, v: Var, s: &ScalarFrac) -> Result<ScalarFrac, RingError> {
        let n = subs_scalar(&self.num, v, s)?;
        let d = subs_scalar(&self.den, v, s)?;
        n.div(&d)
    }

    pub fn subs_const(&self, v: Var, c: &Coeff) -> Result<ScalarFrac, RingError> {
        if c.is_zero() {
            return Err(RingError::Pole);
        }
        ScalarFrac::new(self.num.subs_const(v, c), self.den.subs_const(v, c))
            .map_err(|_| RingError::Pole)
    }

    pub fn map_exps<F: Fn([i32; 3]) -> [i32; 3] + Copy>(&self, f: F) -> ScalarFrac {
        ScalarFrac::reduce(self.num.map_exps(f), self.den.map_exps(f))
    }

    /// Formal partial derivative (quotient rule).
    pub fn derivative(&self, v: Var) -> ScalarFrac {
        let n = self
            .num
            .derivative(v)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(v)));
        ScalarFrac::reduce(n, self.den.mul(&self.den))
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    pub fn parse(s: &str) -> Result<ScalarFrac, RingError> {
        super::parse::parse_frac(s)
    }
}

/// p(s) for a Laurent polynomial p in `v`.
pub fn subs_scalar(p: &Scalar, v: Var, s: &ScalarFrac) -> Result<ScalarFrac, RingError> {
    if !p.uses(v) {
        return Ok(ScalarFrac::from(p.clone()));
    }
    if s.den.is_one() && s.num.len() == 1 {
        return Ok(ScalarFrac::from(p.subs_mono(v, &s.num)));
    }
    if s.is_zero() {
        return Err(RingError::Pole);
    }
    let parts = p.coeffs_in(v);
    let hi = parts.first().unwrap().0;
    let lo = parts.last().unwrap().0;
    // p(n/d) = n^lo d^-hi * sum c_e n^(e-lo) d^(hi-e)
    let mut acc = Scalar::zero();
    for (e, c) in &parts {
        acc = acc.add(
            &c.mul(&s.num.pow((e - lo) as u32))
                .mul(&s.den.pow((hi - e) as u32)),
        );
    }
    let n = ScalarFrac::from(s.num.clone()).pow(lo)?;
    let d = ScalarFrac::from(s.den.clone()).pow(-hi)?;
    Ok(ScalarFrac::from(acc).mul(&n).mul(&d))
}

impl From<Scalar> for ScalarFrac {
    fn from(s: Scalar) -> Self {
        ScalarFrac {
            num: s,
            den: Scalar::one(),
        }
    }
}

impl From<i64> for ScalarFrac {
    fn from(n: i64) -> Self {
        ScalarFrac::int(n)
    }
}

impl fmt::Display for ScalarFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ScalarFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frac({self})")
    }
}

impl FromStr for ScalarFrac {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScalarFrac::parse(s)
    }
}

impl<'a> Add<&'a ScalarFrac> for &'a ScalarFrac {
    type Output = ScalarFrac;
    fn add(self, o: &ScalarFrac) -> ScalarFrac {
        ScalarFrac::add(self, o)
    }
}

impl<'a> Sub<&'a ScalarFrac> for &'a ScalarFrac {
    type Output = ScalarFrac;
    fn sub(self, o: &ScalarFrac) -> ScalarFrac {
        ScalarFrac::sub(self, o)
    }
}

impl<'a> Mul<&'a ScalarFrac> for &'a ScalarFrac {
    type Output = ScalarFrac;
    fn mul(self, o: &ScalarFrac) -> ScalarFrac {
        ScalarFrac::mul(self, o)
    }
}

/// Panics on division by zero; use [`ScalarFrac::div`] to handle it.
impl<'a> Div<&'a ScalarFrac> for &'a ScalarFrac {
    type Output = ScalarFrac;
    fn div(self, o: &ScalarFrac) -> ScalarFrac {
        ScalarFrac::div(self, o).expect("division by zero")
    }
}

impl Neg for &ScalarFrac {
    type Output = ScalarFrac;
    fn neg(self) -> ScalarFrac {
        ScalarFrac::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> ScalarFrac {
        ScalarFrac::parse(s).unwrap()
    }

    #[test]
    fn demotes_exact_quotients() {
        let r = f("q^2 - q^-2").div(&f("q - q^-1")).unwrap();
        assert_eq!(r.to_string(), "q + q^-1");
        let r = f("q^3 + q^-3").div(&f("q + q^-1")).unwrap();
        assert_eq!(r.to_string(), "q^2 - 1 + q^-2");
    }

    #[test]
    fn canonical_denominator() {
        let a = f("1/(2*q^3 - 2*q)");
        assert_eq!(a.den().to_string(), "q^2 - 1");
        assert_eq!(a.num().to_string(), "1/2*q^-1");
        let b = f("(q + 1)/(q^2 - 1)");
        assert_eq!(b, f("1/(q - 1)"));
        assert!(f("1/(q - q^-1)").add(&f("-q/(q^2 - 1)")).is_zero());
    }

    #[test]
    fn substitution() {
        let p = f("x + x^-1");
        let r = p.subs(Var::X, &f("q/(q + 1)")).unwrap();
        let expect = f("q/(q + 1) + (q + 1)/q");
        assert_eq!(r, expect);
    }
}
