//! Declarative R-matrix families and their structural constants.

use std::fmt;

use crate::ring::{Coeff, Scalar, ScalarFrac};

use super::RError;

/// Characteristic type of Ř.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// (Ř - q)(Ř + q^-1) = 0
    Hecke,
    /// (Ř - q)(Ř + q^-1)(Ř - ν) = 0
    Bmw,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    GLq {
        n: usize,
    },
    /// `a[i][j]` for i≠j with a_ij·a_ji = 1; the diagonal is ignored.
    GLqMulti {
        n: usize,
        a: Vec<Vec<Coeff>>,
    },
    GLqSuper {
        n: usize,
        m: usize,
    },
    SOq {
        n: usize,
    },
    Spq {
        n: usize,
    },
    /// Osp_q(n|2m) for eps = +1, Osp'_q(2m|n) for eps = -1.
    Ospq {
        n: usize,
        m: usize,
        eps: i8,
    },
}

impl Family {
    pub fn kind(&self) -> Kind {
        match self {
            Family::GLq { .. } | Family::GLqMulti { .. } | Family::GLqSuper { .. } => Kind::Hecke,
            _ => Kind::Bmw,
        }
    }

    /// Local dimension of V.
    pub fn dim(&self) -> usize {
        match self {
            Family::GLq { n }
            | Family::GLqMulti { n, .. }
            | Family::SOq { n }
            | Family::Spq { n } => *n,
            Family::GLqSuper { n, m } => n + m,
            Family::Ospq { n, m, .. } => n + 2 * m,
        }
    }

    pub fn validate(&self) -> Result<(), RError> {
        let bad = |s: String| Err(RError::InvalidFamily(s));
        match self {
            Family::GLq { n } if *n == 0 => bad("GLq needs N ≥ 1".into()),
            Family::GLqMulti { n, a } => {
                if a.len() != *n || a.iter().any(|r| r.len() != *n) {
                    return bad(format!("multi-parameter table must be {n}×{n}"));
                }
                for i in 0..*n {
                    for j in 0..*n {
                        if i != j && !a[i][j].mul(&a[j][i]).is_one() {
                            return bad(format!("a_{}{}·a_{}{} ≠ 1", i + 1, j + 1, j + 1, i + 1));
                        }
                    }
                }
                Ok(())
            }
            Family::GLqSuper { n, m } if n + m == 0 => bad("empty superspace".into()),
            Family::SOq { n } if *n < 2 => bad("SOq needs N ≥ 2".into()),
            Family::Spq { n } if *n == 0 || n % 2 == 1 => bad(format!("Spq needs even N, got {n}")),
            Family::Ospq { n, eps, .. } if *eps == -1 && n % 2 == 1 => {
                bad("Osp' needs an even symplectic block".into())
            }
            Family::Ospq { eps, .. } if *eps != 1 && *eps != -1 => bad("eps must be ±1".into()),
            Family::Ospq { n, m, .. } if n + 2 * m == 0 => bad("empty space".into()),
            _ => Ok(()),
        }
    }

    /// Grading [i] for i = 1..dim (index 0 unused).
    pub fn grading(&self) -> Vec<u8> {
        let k = self.dim();
        let mut g = vec![0u8; k + 1];
        match self {
            Family::GLqSuper { n, .. } => {
                for x in g.iter_mut().skip(n + 1) {
                    *x = 1;
                }
            }
            Family::Ospq { n, m, .. } => {
                for (j, x) in g.iter_mut().enumerate().skip(1) {
                    if j <= *m || j > m + n {
                        *x = 1;
                    }
                }
            }
            _ => {}
        }
        g[0] = 0;
        g
    }

    /// (ε, N, m) for the orthosymplectic families.
    fn osp_params(&self) -> Option<(i8, usize, usize)> {
        match self {
            Family::SOq { n } => Some((1, *n, 0)),
            Family::Spq { n } => Some((-1, *n, 0)),
            Family::Ospq { n, m, eps } => Some((*eps, *n, *m)),
            _ => None,
        }
    }

    /// ε of the characteristic ν = ε q^{ε + 2m - N}.
    pub fn eps(&self) -> Option<i8> {
        self.osp_params().map(|p| p.0)
    }

    /// Signs ε_i (index 0 unused).
    pub fn eps_signs(&self) -> Option<Vec<i8>> {
        let (eps, n, m) = self.osp_params()?;
        let mut s = vec![0i8];
        if eps == 1 {
            s.extend(std::iter::repeat(-1).take(m));
            s.extend(std::iter::repeat(1).take(n + m));
        } else {
            s.extend(std::iter::repeat(-1).take(m));
            s.extend(std::iter::repeat(1).take(n / 2));
            s.extend(std::iter::repeat(-1).take(n / 2 + m));
        }
        Some(s)
    }

    /// 2ρ_i (index 0 unused); doubled so half-integers stay integral.
    pub fn rho2(&self) -> Option<Vec<i32>> {
        let (eps, n, m) = self.osp_params()?;
        let (n, m) = (n as i32, m as i32);
        let mut r = vec![0];
        if eps == 1 {
            // outer blocks (N/2-m .. N/2-1) and (1-N/2 .. m-N/2), doubled
            for k in 0..m {
                r.push(n - 2 * m + 2 * k);
            }
            if n % 2 == 1 {
                // n-1/2, ..., 1/2, 0, -1/2, ..., -n+1/2
                let h = n / 2;
                for k in 0..h {
                    r.push(2 * (h - k) - 1);
                }
                r.push(0);
                for k in 0..h {
                    r.push(-(2 * k + 1));
                }
            } else {
                let h = n / 2;
                for k in 0..h {
                    r.push(2 * (h - 1 - k));
                }
                for k in 0..h {
                    r.push(-2 * k);
                }
            }
            for k in 0..m {
                r.push(2 - n + 2 * k);
            }
        } else {
            let h = n / 2;
            for k in 0..m {
                r.push(2 * (h + 1 - m + k));
            }
            for k in 0..h {
                r.push(2 * (h - k));
            }
            for k in 0..h {
                r.push(-2 * (k + 1));
            }
            for k in 0..m {
                r.push(2 * (-h + k));
            }
        }
        Some(r)
    }

    /// ν for BMW families.
    pub fn nu(&self) -> Option<Scalar> {
        let (eps, n, m) = self.osp_params()?;
        let e = eps as i32 + 2 * m as i32 - n as i32;
        Some(Scalar::q(e).scale(&Coeff::int(eps as i64)))
    }

    /// μ = (λ + ν^-1 - ν)/λ for BMW families.
    pub fn mu(&self) -> Option<ScalarFrac> {
        let nu = ScalarFrac::from(self.nu()?);
        let lam = ScalarFrac::from(Scalar::lambda());
        let num = lam.add(&nu.inv().ok()?).sub(&nu);
        num.div(&lam).ok()
    }

    /// Eigenvalues of Ř.
    pub fn eigenvalues(&self) -> Vec<Scalar> {
        let mut e = vec![Scalar::q(1), Scalar::q(-1).neg()];
        if let Some(nu) = self.nu() {
            e.push(nu);
        }
        e
    }

    /// Short machine name used by the CLI.
    pub fn slug(&self) -> String {
        match self {
            Family::GLq { n } => format!("glq{n}"),
            Family::GLqMulti { n, .. } => format!("glq-multi{n}"),
            Family::GLqSuper { n, m } => format!("glq-super{n}_{m}"),
            Family::SOq { n } => format!("soq{n}"),
            Family::Spq { n } => format!("spq{n}"),
            Family::Ospq { n, m, eps } => {
                format!("ospq{n}_{}{}", 2 * m, if *eps > 0 { "+" } else { "-" })
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::GLq { n } => write!(f, "GLq({n})"),
            Family::GLqMulti { n, .. } => write!(f, "GLqMulti({n})"),
            Family::GLqSuper { n, m } => write!(f, "GLqSuper({n},{m})"),
            Family::SOq { n } => write!(f, "SOq({n})"),
            Family::Spq { n } => write!(f, "Spq({n})"),
            Family::Ospq { n, m, eps } => {
                write!(
                    f,
                    "Ospq({n},{},{})",
                    2 * m,
                    if *eps > 0 { "+" } else { "-" }
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_tables() {
        assert_eq!(Family::SOq { n: 3 }.rho2().unwrap(), vec![0, 1, 0, -1]);
        assert_eq!(
            Family::SOq { n: 5 }.rho2().unwrap(),
            vec![0, 3, 1, 0, -1, -3]
        );
        assert_eq!(Family::SOq { n: 4 }.rho2().unwrap(), vec![0, 2, 0, 0, -2]);
        assert_eq!(Family::Spq { n: 4 }.rho2().unwrap(), vec![0, 4, 2, -2, -4]);
        assert_eq!(
            Family::Spq { n: 4 }.eps_signs().unwrap(),
            vec![0, 1, 1, -1, -1]
        );
        assert_eq!(
            Family::Ospq { n: 1, m: 1, eps: 1 }.rho2().unwrap(),
            vec![0, -1, 0, 1]
        );
        assert_eq!(
            Family::Ospq { n: 2, m: 1, eps: 1 }.rho2().unwrap(),
            vec![0, 0, 0, 0, 0]
        );
        assert_eq!(
            Family::Ospq { n: 1, m: 1, eps: 1 }.grading(),
            vec![0, 1, 0, 1]
        );
    }

    #[test]
    fn nu_and_mu() {
        let so3 = Family::SOq { n: 3 };
        assert_eq!(so3.nu().unwrap(), Scalar::q(-2));
        assert_eq!(so3.mu().unwrap().to_string(), "q + 1 + q^-1");
        let sp4 = Family::Spq { n: 4 };
        assert_eq!(sp4.nu().unwrap().to_string(), "-q^-5");
        assert!(Family::Ospq { n: 2, m: 1, eps: 1 }.mu().unwrap().is_zero());
    }
}
