//! q-numbers, q-factorials and q-binomials.

use super::scalar::Scalar;
use super::RingError;

/// [n] = (q^n - q^-n)/(q - q^-1)
pub fn q_number(n: i32) -> Scalar {
    if n < 0 {
        return q_number(-n).neg();
    }
    Scalar::from_terms((0..n).map(|k| {
        (
            super::mono::Mono::var(super::mono::Var::Q, n - 1 - 2 * k),
            super::coeff::Coeff::ONE,
        )
    }))
}

/// [n]! with [0]! = 1.
pub fn q_factorial(n: u32) -> Scalar {
    (1..=n as i32).fold(Scalar::one(), |acc, k| acc.mul(&q_number(k)))
}

/// Symmetric q-binomial [n choose k].
pub fn q_binomial(n: u32, k: i32) -> Result<Scalar, RingError> {
    if k < 0 || k as u32 > n {
        return Err(RingError::OutOfRange(format!("q_binomial({n}, {k})")));
    }
    let k = k as u32;
    let num = (n - k + 1..=n).fold(Scalar::one(), |acc, j| acc.mul(&q_number(j as i32)));
    Ok(num
        .exact_div(&q_factorial(k))
        .expect("q-binomials are Laurent polynomials"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_number(0), Scalar::zero());
        assert_eq!(q_number(1), Scalar::one());
        assert_eq!(q_number(2).to_string(), "q + q^-1");
        assert_eq!(q_number(4).to_string(), "q^3 + q + q^-1 + q^-3");
        assert_eq!(q_number(-3), q_number(3).neg());
        assert_eq!(
            q_binomial(4, 2).unwrap().to_string(),
            "q^4 + q^2 + 2 + q^-2 + q^-4"
        );
        assert_eq!(q_binomial(3, 1).unwrap(), q_number(3));
        assert_eq!(q_binomial(5, 0).unwrap(), Scalar::one());
        assert!(q_binomial(2, 3).is_err());
    }
}
