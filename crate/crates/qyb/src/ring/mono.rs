//! Packed Laurent monomials q^a v^b x^c.
//!
//! Each exponent is stored offset by 2^20 in a 21-bit field, so the natural
//! `u64` order is lexicographic on (a, b, c) and multiplication is addition
//! minus a constant.

use std::fmt;

pub const NVARS: usize = 3;
const BITS: u32 = 21;
const MASK: u64 = (1 << BITS) - 1;
const OFF: i64 = 1 << 20;
const KOFF: u64 = ((OFF as u64) << (2 * BITS)) | ((OFF as u64) << BITS) | OFF as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    V = 1,
    X = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::V, Var::X];

    pub fn name(self) -> char {
        match self {
            Var::Q => 'q',
            Var::V => 'v',
            Var::X => 'x',
        }
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'q' => Some(Var::Q),
            'v' => Some(Var::V),
            'x' => Some(Var::X),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub(crate) u64);

impl Mono {
    pub const ONE: Mono = Mono(KOFF);

    pub fn new(e: [i32; NVARS]) -> Mono {
        let mut k = 0u64;
        for (i, &x) in e.iter().enumerate() {
            let v = x as i64 + OFF;
            assert!((0..(1 << BITS)).contains(&v), "exponent out of range");
            k |= (v as u64) << (BITS * (2 - i as u32));
        }
        Mono(k)
    }

    pub fn var(v: Var, e: i32) -> Mono {
        let mut x = [0; NVARS];
        x[v as usize] = e;
        Mono::new(x)
    }

    #[inline]
    pub fn exp(self, v: Var) -> i32 {
        let shift = BITS * (2 - v as u32);
        (((self.0 >> shift) & MASK) as i64 - OFF) as i32
    }

    pub fn exps(self) -> [i32; NVARS] {
        [self.exp(Var::Q), self.exp(Var::V), self.exp(Var::X)]
    }

    #[inline]
    pub fn mul(self, o: Mono) -> Mono {
        Mono(self.0 + o.0 - KOFF)
    }

    #[inline]
    pub fn div(self, o: Mono) -> Mono {
        Mono(self.0 + KOFF - o.0)
    }

    pub fn inv(self) -> Mono {
        Mono(2 * KOFF - self.0)
    }

    pub fn is_one(self) -> bool {
        self == Mono::ONE
    }

    pub fn with_exp(self, v: Var, e: i32) -> Mono {
        let mut x = self.exps();
        x[v as usize] = e;
        Mono::new(x)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_order_and_mul() {
        let a = Mono::new([2, -1, 0]);
        let b = Mono::new([-3, 4, 7]);
        assert_eq!(a.mul(b).exps(), [-1, 3, 7]);
        assert_eq!(a.mul(b).div(b), a);
        assert_eq!(a.inv().mul(a), Mono::ONE);
        assert!(Mono::new([1, -5, -5]) > Mono::new([0, 9, 9]));
        assert!(Mono::new([0, 0, 1]) > Mono::new([0, 0, -1]));
    }
}
