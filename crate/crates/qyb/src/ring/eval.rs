//! Numeric evaluation at exact rational or complex points.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::coeff::Coeff;
use super::frac::ScalarFrac;
use super::mono::Var;
use super::scalar::Scalar;
use super::RingError;

/// Values for (q, v, x).
#[derive(Clone, Debug)]
pub struct Point<T> {
    pub q: T,
    pub v: T,
    pub x: T,
}

impl<T: Clone> Point<T> {
    pub fn uniform(t: T) -> Point<T> {
        Point {
            q: t.clone(),
            v: t.clone(),
            x: t,
        }
    }
}

fn rat_pow(b: &BigRational, e: i32) -> Result<BigRational, RingError> {
    if e < 0 && b.is_zero() {
        return Err(RingError::Pole);
    }
    Ok(num_traits::pow::Pow::pow(b, e))
}

pub fn eval_scalar_rational(s: &Scalar, p: &Point<BigRational>) -> Result<BigRational, RingError> {
    let mut acc = BigRational::zero();
    for (m, c) in s.terms() {
        let mut t = c.to_big();
        for (v, val) in [(Var::Q, &p.q), (Var::V, &p.v), (Var::X, &p.x)] {
            let e = m.exp(v);
            if e != 0 {
                t *= rat_pow(val, e)?;
            }
        }
        acc += t;
    }
    Ok(acc)
}

pub fn eval_scalar_complex(s: &Scalar, p: &Point<Complex64>) -> Complex64 {
    let mut acc = Complex64::zero();
    for (m, c) in s.terms() {
        let mut t = Complex64::new(c.to_f64(), 0.0);
        for (v, val) in [(Var::Q, p.q), (Var::V, p.v), (Var::X, p.x)] {
            let e = m.exp(v);
            if e != 0 {
                t *= val.powi(e);
            }
        }
        acc += t;
    }
    acc
}

impl ScalarFrac {
    /// Exact value at a rational point; a vanishing denominator is a pole.
    pub fn eval_rational(&self, p: &Point<BigRational>) -> Result<BigRational, RingError> {
        let d = eval_scalar_rational(self.den(), p)?;
        if d.is_zero() {
            return Err(RingError::Pole);
        }
        Ok(eval_scalar_rational(self.num(), p)? / d)
    }

    pub fn eval_complex(&self, p: &Point<Complex64>) -> Result<Complex64, RingError> {
        let d = eval_scalar_complex(self.den(), p);
        if d.norm() == 0.0 {
            return Err(RingError::Pole);
        }
        Ok(eval_scalar_complex(self.num(), p) / d)
    }

    /// Value at q = q0 with v and x left symbolic; poles are errors.
    pub fn at_q(&self, q0: &Coeff) -> Result<ScalarFrac, RingError> {
        self.subs_const(Var::Q, q0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qnum::q_number;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn evaluate() {
        let p = Point::uniform(r(2, 1));
        let two = ScalarFrac::from(q_number(2));
        assert_eq!(two.eval_rational(&p).unwrap(), r(5, 2));
        let one = Point::uniform(r(1, 1));
        assert_eq!(
            ScalarFrac::from(q_number(7)).eval_rational(&one).unwrap(),
            r(7, 1)
        );
        let inv = ScalarFrac::from(crate::ring::Scalar::lambda())
            .inv()
            .unwrap();
        assert_eq!(inv.eval_rational(&one), Err(RingError::Pole));
    }
}
