//! Explicit constant R-matrices and their derived data.

use crate::ring::{Coeff, Scalar, ScalarFrac};
use crate::tensor::{solve_dense, FracMatrix, SiteWeights, TensorOp};

use super::family::{Family, Kind};
use super::RError;

/// How the Osp sign (-1)^{[i][j]} is applied to the e_{ii'} ⊗ e_{i'i} terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OspSign {
    /// (-1)^{[i][j]} for all i, j
    Graded,
    /// (-1)^{[i][j]} except +1 when j = i'
    UnitAtPrime,
}

/// An R-matrix family with all derived structural data.
#[derive(Clone, Debug)]
pub struct RData {
    pub family: Family,
    pub n: usize,
    pub rhat: TensorOp,
    pub rhat_inv: TensorOp,
    pub psi_hat: TensorOp,
    pub phi_hat: Option<TensorOp>,
    pub d: SiteWeights,
    pub q: SiteWeights,
    pub tr_d: ScalarFrac,
    /// Hecke: q^{-2d} = 1 - λ Tr D
    pub d_param: Option<i32>,
    pub khat: Option<TensorOp>,
    pub nu: Option<Scalar>,
    pub mu: Option<ScalarFrac>,
}

fn sf(s: Scalar) -> ScalarFrac {
    ScalarFrac::from(s)
}

fn sign(b: bool) -> Scalar {
    if b {
        Scalar::int(-1)
    } else {
        Scalar::one()
    }
}

/// Encodes the pair (i, j), 1-based, as a two-site index.
fn idx(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// Ř for GL-type families: ungraded matrix units, grading `g`, and
/// multiplicative parameters `a(i, j)` on the e_ij ⊗ e_ji terms.
pub fn gl_rhat<F: Fn(usize, usize) -> ScalarFrac>(n: usize, g: &[u8], a: F) -> TensorOp {
    let lam = sf(Scalar::lambda());
    let mut items = Vec::new();
    for i in 1..=n {
        let gi = g[i] as i32;
        let diag = sign(gi == 1).mul(&Scalar::q(1 - 2 * gi));
        items.push((idx(n, i, i), idx(n, i, i), sf(diag)));
        for j in 1..=n {
            if i == j {
                continue;
            }
            let s = sign(g[i] == 1 && g[j] == 1);
            items.push((idx(n, i, j), idx(n, j, i), sf(s).mul(&a(i, j))));
            if i < j {
                items.push((idx(n, i, j), idx(n, i, j), lam.clone()));
            }
        }
    }
    TensorOp::from_entries(n, 2, items)
}

/// Ř for SO/Sp/Osp families. Half-integer ρ are removed by conjugating with
/// a diagonal matrix that is q^{1/4} at the middle index, which shifts
/// ρ_mid by 1/2 and leaves traces and spectra unchanged.
pub fn osp_rhat(fam: &Family, variant: OspSign) -> TensorOp {
    let n = fam.dim();
    let g = fam.grading();
    let eps = fam.eps_signs().expect("orthosymplectic family");
    let mut rho2 = fam.rho2().expect("orthosymplectic family");
    if rho2.iter().any(|r| r % 2 != 0) {
        let mid = (n + 1) / 2;
        assert!(n % 2 == 1 && rho2[mid] == 0, "unexpected half-integer ρ");
        rho2[mid] += 1;
    }
    let prime = |i: usize| n + 1 - i;
    let lam = Scalar::lambda();
    let mut items = Vec::new();
    for i in 1..=n {
        let odd_i = g[i] == 1;
        for j in 1..=n {
            let mut e = (i == j) as i32 - (j == prime(i)) as i32;
            if odd_i {
                e = -e;
            }
            let mut neg = g[i] == 1 && g[j] == 1;
            if variant == OspSign::UnitAtPrime && j == prime(i) {
                neg = false;
            }
            items.push((idx(n, i, j), idx(n, j, i), sf(sign(neg).mul(&Scalar::q(e)))));
            if i < j {
                items.push((idx(n, i, j), idx(n, i, j), sf(lam.clone())));
            }
            if i > j {
                let d = rho2[i] - rho2[j];
                assert!(d % 2 == 0);
                let c = -(eps[i] as i64) * (eps[j] as i64);
                let v = lam.mul(&Scalar::q(d / 2)).scale(&Coeff::int(c));
                items.push((idx(n, prime(i), i), idx(n, j, prime(j)), sf(v)));
            }
        }
    }
    TensorOp::from_entries(n, 2, items)
}

/// The constant Ř of a family (default Osp sign convention).
pub fn rhat(fam: &Family) -> Result<TensorOp, RError> {
    fam.validate()?;
    Ok(match fam {
        Family::GLq { n } => gl_rhat(*n, &vec![0; n + 1], |_, _| ScalarFrac::one()),
        Family::GLqMulti { n, a } => gl_rhat(*n, &vec![0; n + 1], |i, j| {
            sf(Scalar::constant(a[i - 1][j - 1].clone()))
        }),
        Family::GLqSuper { n, m } => gl_rhat(n + m, &fam.grading(), |_, _| ScalarFrac::one()),
        _ => osp_rhat(fam, OspSign::Graded),
    })
}

/// Solves Tr₂(Ř₁₂ Ψ̂₂₃) = P₁₃ for Ψ̂.
pub fn skew_inverse(r: &TensorOp) -> Result<TensorOp, RError> {
    let n = r.local_dim();
    let n2 = n * n;
    // M_{(i1 j1),(s k)} = Ř^{i1 s}_{j1 k}
    let mut m = FracMatrix::zeros(n2, n2);
    for (row, col, v) in r.entries() {
        let (i1, s) = (row / n, row % n);
        let (j1, k) = (col / n, col % n);
        m.data[i1 * n + j1][s * n + k] = v;
    }
    // right-hand side δ^{i1}_{j3} δ^{i3}_{j1}, columns (i3 j3)
    let mut t = FracMatrix::zeros(n2, n2);
    for i1 in 0..n {
        for j1 in 0..n {
            t.data[i1 * n + j1][j1 * n + i1] = ScalarFrac::one();
        }
    }
    let x = solve_dense(&m, &t).map_err(|_| RError::NotSkewInvertible)?;
    // X_{(s k),(i3 j3)} = Ψ̂^{k i3}_{s j3}
    let mut items = Vec::new();
    for s in 0..n {
        for k in 0..n {
            for i3 in 0..n {
                for j3 in 0..n {
                    let v = &x.data[s * n + k][i3 * n + j3];
                    if !v.is_zero() {
                        items.push((k * n + i3, s * n + j3, v.clone()));
                    }
                }
            }
        }
    }
    Ok(TensorOp::from_entries(n, 2, items))
}

/// Diagonal of a one-site operator, or an error when it is not diagonal.
fn diagonal(op: &TensorOp, what: &str) -> Result<SiteWeights, RError> {
    let n = op.local_dim();
    for (r, c, _) in op.entries() {
        if r != c {
            return Err(RError::NotDiagonal(what.to_string()));
        }
    }
    Ok(SiteWeights::new((0..n).map(|i| op.get(i, i)).collect()))
}

/// D = Tr₂ Ψ̂ and Q = Tr₁ Ψ̂.
pub fn dq_weights(psi_hat: &TensorOp) -> Result<(SiteWeights, SiteWeights), RError> {
    let d = diagonal(&psi_hat.trace_sites(&[2], None)?, "D")?;
    let q = diagonal(&psi_hat.trace_sites(&[1], None)?, "Q")?;
    Ok((d, q))
}

/// K̂ = 1 - (Ř - Ř^-1)/λ.
pub fn khat_from(r: &TensorOp, r_inv: &TensorOp) -> TensorOp {
    let lam_inv = ScalarFrac::from(Scalar::lambda()).inv().unwrap();
    let n = r.local_dim();
    TensorOp::identity(n, 2).sub(&r.sub(r_inv).scale(&lam_inv))
}

impl RData {
    pub fn build(fam: &Family) -> Result<RData, RError> {
        let r = rhat(fam)?;
        RData::from_rhat(fam.clone(), r)
    }

    /// Derives all data from an explicit Ř belonging to `family`.
    pub fn from_rhat(family: Family, rhat: TensorOp) -> Result<RData, RError> {
        let n = rhat.local_dim();
        let rhat_inv = rhat.inverse()?;
        let psi_hat = skew_inverse(&rhat)?;
        let phi_hat = skew_inverse(&rhat_inv).ok();
        let (d, q) = dq_weights(&psi_hat)?;
        let tr_d = d.trace();
        let (d_param, khat, nu, mu) = match family.kind() {
            Kind::Hecke => {
                let lam = ScalarFrac::from(Scalar::lambda());
                let v = ScalarFrac::one().sub(&lam.mul(&tr_d));
                let e = v
                    .as_scalar()
                    .and_then(|s| s.as_monomial())
                    .filter(|(m, c)| c.is_one() && m.exps()[1] == 0 && m.exps()[2] == 0)
                    .map(|(m, _)| m.exps()[0]);
                let d_param = match e {
                    Some(e) if e % 2 == 0 => Some(-e / 2),
                    _ => None,
                };
                (d_param, None, None, None)
            }
            Kind::Bmw => {
                let k = khat_from(&rhat, &rhat_inv);
                (None, Some(k), family.nu(), family.mu())
            }
        };
        Ok(RData {
            family,
            n,
            rhat,
            rhat_inv,
            psi_hat,
            phi_hat,
            d,
            q,
            tr_d,
            d_param,
            khat,
            nu,
            mu,
        })
    }

    pub fn kind(&self) -> Kind {
        self.family.kind()
    }

    pub fn lambda() -> ScalarFrac {
        ScalarFrac::from(Scalar::lambda())
    }

    /// Ř embedded at sites (a, a+1) of n.
    pub fn sigma(&self, a: usize, n: usize) -> TensorOp {
        self.rhat.embed(a, n).expect("site in range")
    }

    pub fn sigma_inv(&self, a: usize, n: usize) -> TensorOp {
        self.rhat_inv.embed(a, n).expect("site in range")
    }

    pub fn kappa(&self, a: usize, n: usize) -> Option<TensorOp> {
        self.khat
            .as_ref()
            .map(|k| k.embed(a, n).expect("site in range"))
    }

    /// D̄ = Tr₂ Φ̂ and Q̄ = Tr₁ Φ̂ when Ř^-1 is skew-invertible.
    pub fn dq_bar(&self) -> Option<(SiteWeights, SiteWeights)> {
        self.phi_hat.as_ref().and_then(|p| dq_weights(p).ok())
    }

    /// Applies the twist Ř ↦ F Ř F^-1 with F = Σ f_ij e_ii ⊗ e_jj.
    pub fn twist(&self, f: &[Vec<Coeff>]) -> Result<RData, RError> {
        let n = self.n;
        if f.len() != n
            || f.iter()
                .any(|r| r.len() != n || r.iter().any(|c| c.is_zero()))
        {
            return Err(RError::InvalidFamily(
                "twist table must be N×N with nonzero entries".into(),
            ));
        }
        let fop = TensorOp::from_fn(n, 2, |r, c| {
            if r == c {
                ScalarFrac::from(Scalar::constant(f[r[0]][r[1]].clone()))
            } else {
                ScalarFrac::zero()
            }
        });
        let finv = fop.inverse()?;
        let r = fop.mul(&self.rhat).mul(&finv);
        let family = match &self.family {
            Family::GLq { n } | Family::GLqMulti { n, .. } => {
                let mut a = vec![vec![Coeff::ONE; *n]; *n];
                for i in 0..*n {
                    for j in 0..*n {
                        let base = match &self.family {
                            Family::GLqMulti { a: a0, .. } if i != j => a0[i][j].clone(),
                            _ => Coeff::ONE,
                        };
                        if i != j {
                            a[i][j] = base.mul(&f[i][j]).div(&f[j][i]);
                        }
                    }
                }
                Family::GLqMulti { n: *n, a }
            }
            other => other.clone(),
        };
        RData::from_rhat(family, r)
    }
}

/// Closed form of Ψ̂ for GL_q(N|M) with the standard grading; M = 0 gives
/// the GL_q(N) formula.
pub fn psi_hat_closed_form(n: usize, m: usize) -> TensorOp {
    let k = n + m;
    let g: Vec<i32> = (0..=k).map(|i| (i > n) as i32).collect();
    let lam = Scalar::lambda();
    let sgn = |x: i32| -> i32 {
        if x % 2 == 0 {
            1
        } else {
            -1
        }
    };
    let mut items = Vec::new();
    for i in 1..=k {
        let v = Scalar::q(2 * g[i] - 1).scale(&Coeff::int(sgn(g[i]) as i64));
        items.push((idx(k, i, i), idx(k, i, i), sf(v)));
        for j in 1..=k {
            if i == j {
                continue;
            }
            let v = Scalar::int(sgn(g[i] * g[j]) as i64);
            items.push((idx(k, i, j), idx(k, j, i), sf(v)));
            if i < j {
                let (ii, jj, nn) = (i as i32, j as i32, n as i32);
                let e = sgn(g[i]) * (2 * ii - 2 * nn - 1) - sgn(g[j]) * (2 * jj - 2 * nn - 1);
                let v = lam
                    .mul(&Scalar::q(e))
                    .scale(&Coeff::int(-sgn(g[i] + g[j]) as i64));
                items.push((idx(k, i, j), idx(k, i, j), sf(v)));
            }
        }
    }
    TensorOp::from_entries(k, 2, items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glq2_matrix() {
        let r = rhat(&Family::GLq { n: 2 }).unwrap();
        let lam = ScalarFrac::from(Scalar::lambda());
        let q = ScalarFrac::from(Scalar::q(1));
        let one = ScalarFrac::one();
        let expect = TensorOp::from_entries(
            2,
            2,
            [
                (0, 0, q.clone()),
                (1, 1, lam),
                (1, 2, one.clone()),
                (2, 1, one),
                (3, 3, q),
            ],
        );
        assert_eq!(r, expect);
        assert_eq!(
            r.subs_const(crate::ring::Var::Q, &Coeff::ONE).unwrap(),
            TensorOp::permutation(2)
        );
    }

    #[test]
    fn glq2_skew_inverse() {
        let data = RData::build(&Family::GLq { n: 2 }).unwrap();
        assert_eq!(data.psi_hat, psi_hat_closed_form(2, 0));
        assert_eq!(data.d.diag[0].to_string(), "q^-3");
        assert_eq!(data.d.diag[1].to_string(), "q^-1");
        assert_eq!(data.d_param, Some(2));
        let p = TensorOp::permutation(3);
        assert_eq!(skew_inverse(&p).unwrap(), p);
    }
}
