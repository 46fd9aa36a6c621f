//! Parser for the text form of scalars.
//!
//! Grammar: sums and differences of products and quotients of powers, where
//! a power is a rational number, one of `q`, `v` (alias `nu`), `x`, or a
//! parenthesized expression, optionally raised to an integer exponent.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::coeff::Coeff;
use super::frac::ScalarFrac;
use super::mono::Var;
use super::scalar::Scalar;
use super::RingError;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> RingError {
        RingError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ScalarFrac, RingError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ScalarFrac, RingError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<ScalarFrac, RingError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<ScalarFrac, RingError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            let e = i32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            // monomials keep exact Laurent form under negative powers
            if let Some(s) = base.as_scalar() {
                if let Some((m, c)) = s.as_monomial() {
                    let mut k = super::mono::Mono::ONE;
                    let b = if e >= 0 { m } else { m.inv() };
                    for _ in 0..e.unsigned_abs() {
                        k = k.mul(b);
                    }
                    return Ok(ScalarFrac::from(Scalar::term(c.pow(e), k)));
                }
            }
            return base.pow(e);
        }
        Ok(base)
    }

    fn int(&mut self) -> Result<i64, RingError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let paren = self.s.get(self.pos) == Some(&b'(');
        if paren {
            self.pos += 1;
            let v = self.int()?;
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            let neg = self.s[start] == b'-';
            return Ok(if neg { -v } else { v });
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer exponent"))
    }

    fn atom(&mut self) -> Result<ScalarFrac, RingError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let n: BigInt = t.parse().map_err(|_| self.err("bad number"))?;
                let c = Coeff::from_big(BigRational::from_integer(n));
                Ok(ScalarFrac::from(Scalar::constant(c)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let v = match name {
                    "q" => Var::Q,
                    "v" | "nu" => Var::V,
                    "x" => Var::X,
                    _ => {
                        self.pos = start;
                        return Err(self.err(&format!("unknown symbol '{name}'")));
                    }
                };
                Ok(ScalarFrac::from(Scalar::var_pow(v, 1)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse_frac(s: &str) -> Result<ScalarFrac, RingError> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
    };
    let r = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}

pub fn parse_scalar(s: &str) -> Result<Scalar, RingError> {
    parse_frac(s)?.into_scalar()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_forms() {
        for s in ["q^2 - 1 + q^-2", "-3/2*q*v^-1*x^2 + 7", "0", "q - q^-1"] {
            assert_eq!(parse_scalar(s).unwrap().to_string(), s);
        }
        let f = parse_frac("(q)/(q^2 + 1)").unwrap();
        assert_eq!(f.to_string(), "(q)/(q^2 + 1)");
        assert_eq!(parse_frac(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn errors() {
        assert!(parse_scalar("q +").is_err());
        assert!(parse_scalar("y").is_err());
        assert!(parse_scalar("1/(q+1)").is_err());
        assert!(parse_frac("1/(q-q)").is_err());
    }
}
