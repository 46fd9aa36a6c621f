//! Exact rational coefficients with an `i64` fast path.
//!
//! Values that fit in a reduced `i64/i64` pair stay inline; anything larger
//! is promoted to a boxed `BigRational`. The representation is canonical, so
//! structural equality is numeric equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coeff {
    /// numerator, denominator; denominator > 0 and gcd = 1
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0, 1);
    pub const ONE: Coeff = Coeff::Small(1, 1);

    pub fn int(n: i64) -> Coeff {
        Coeff::Small(n, 1)
    }

    pub fn ratio(n: i64, d: i64) -> Coeff {
        assert!(d != 0, "zero denominator");
        Coeff::from_i128(n as i128, d as i128)
    }

    fn from_i128(mut n: i128, mut d: i128) -> Coeff {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Coeff::ZERO;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Coeff::Small(a, b),
            _ => Coeff::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))),
        }
    }

    pub fn from_big(r: BigRational) -> Coeff {
        // BigRational keeps itself reduced with positive denominator
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return Coeff::Small(n, d);
        }
        Coeff::Big(Box::new(r))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Coeff::Big(b) => (**b).clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0, _))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(_, d) => *d == 1,
            Coeff::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(n, _) => *n < 0,
            Coeff::Big(b) => b.is_negative(),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Small(n, d) => match n.checked_neg() {
                Some(m) => Coeff::Small(m, *d),
                None => Coeff::from_big(-self.to_big()),
            },
            Coeff::Big(b) => Coeff::from_big(-(**b).clone()),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    #[inline]
    pub fn add(&self, o: &Coeff) -> Coeff {
        if let (Coeff::Small(a, b), Coeff::Small(c, d)) = (self, o) {
            if *b == 1 && *d == 1 {
                if let Some(s) = a.checked_add(*c) {
                    return Coeff::Small(s, 1);
                }
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Coeff::from_i128(a + c, b);
            }
            return Coeff::from_i128(a * d + c * b, b * d);
        }
        Coeff::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        self.add(&o.neg())
    }

    #[inline]
    pub fn mul(&self, o: &Coeff) -> Coeff {
        if let (Coeff::Small(a, b), Coeff::Small(c, d)) = (self, o) {
            if *b == 1 && *d == 1 {
                if let Some(p) = a.checked_mul(*c) {
                    return Coeff::Small(p, 1);
                }
            }
            return Coeff::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Coeff::from_big(self.to_big() * o.to_big())
    }

    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        match self {
            Coeff::Small(n, d) => Coeff::from_i128(*d as i128, *n as i128),
            Coeff::Big(b) => Coeff::from_big(b.recip()),
        }
    }

    pub fn div(&self, o: &Coeff) -> Coeff {
        self.mul(&o.inv())
    }

    pub fn pow(&self, e: i32) -> Coeff {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Coeff::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn numer_big(&self) -> BigInt {
        match self {
            Coeff::Small(n, _) => BigInt::from(*n),
            Coeff::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom_big(&self) -> BigInt {
        match self {
            Coeff::Small(_, d) => BigInt::from(*d),
            Coeff::Big(b) => b.denom().clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Coeff::Small(n, d) => *n as f64 / *d as f64,
            Coeff::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn cmp_value(&self, o: &Coeff) -> Ordering {
        match (self, o) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }

    /// Parse `n` or `n/d`.
    pub fn parse(s: &str) -> Option<Coeff> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Coeff::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::int(n)
    }
}

impl From<BigRational> for Coeff {
    fn from(r: BigRational) -> Self {
        Coeff::from_big(r)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(n, 1) => write!(f, "{n}"),
            Coeff::Small(n, d) => write!(f, "{n}/{d}"),
            Coeff::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

/// gcd of two positive big integers as a coefficient helper.
pub fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Coeff::int(i64::MAX);
        let b = a.add(&Coeff::ONE);
        assert!(matches!(b, Coeff::Big(_)));
        assert_eq!(b.sub(&Coeff::ONE), a);
        let p = a.mul(&a);
        assert_eq!(p.div(&a), a);
    }

    #[test]
    fn reduce() {
        assert_eq!(Coeff::ratio(6, -4), Coeff::Small(-3, 2));
        assert_eq!(Coeff::ratio(2, 4).add(&Coeff::ratio(1, 2)), Coeff::ONE);
        assert_eq!(Coeff::parse("-3/6"), Some(Coeff::Small(-1, 2)));
        assert_eq!(Coeff::ratio(2, 3).pow(-2), Coeff::ratio(9, 4));
    }
}
