//! Reflection-equation matrices in the fundamental representation
//! L = R₂₁R₁₂: power sums, elementary symmetric functions, Newton,
//! Cayley-Hamilton and Cayley-Hamilton-Newton identities.

use rayon::prelude::*;

use crate::qcombin::{antisymmetrizer, r_matrix};
use crate::report::Report;
use crate::ring::{q_number, Scalar, ScalarFrac};
use crate::rmatrix::{Kind, RData, RError};
use crate::tensor::TensorOp;

fn sf(s: Scalar) -> ScalarFrac {
    ScalarFrac::from(s)
}

/// L as an operator on V_matrix ⊗ V_quantum (site 1 is the matrix index).
#[derive(Clone, Debug)]
pub struct REInstance {
    pub base: RData,
    pub l: TensorOp,
}

/// The fundamental representation L = R₂₁R₁₂ with 1 the representation
/// space and 2 the matrix space. Stored with the matrix site first, where it
/// reads R₁₂R₂₁.
pub fn fundamental_re(r: &RData) -> Result<REInstance, RError> {
    if r.kind() != Kind::Hecke {
        return Err(RError::NotHecke);
    }
    let r12 = r_matrix(r);
    let r21 = r12.permute_sites(&[2, 1])?;
    Ok(REInstance {
        base: r.clone(),
        l: r12.mul(&r21),
    })
}

impl REInstance {
    pub fn n(&self) -> usize {
        self.base.n
    }

    /// L_{k̲} on m matrix sites plus the quantum site m+1:
    /// L_{1̲} = L_1, L_{k+1̲} = Ř_k L_{k̲} Ř_k^-1.
    pub fn l_underline(&self, m: usize) -> Result<Vec<TensorOp>, RError> {
        let mut out = vec![self.l.embed_sites(&[1, m + 1], m + 1)?];
        for k in 1..m {
            let rk = self.base.sigma(k, m + 1);
            let rk_inv = self.base.sigma_inv(k, m + 1);
            let next = rk.mul(&out[k - 1]).mul(&rk_inv);
            out.push(next);
        }
        Ok(out)
    }

    /// Ř₁₂L₁Ř₁₂L₁ - L₁Ř₁₂L₁Ř₁₂ on V⊗V⊗V_quantum.
    pub fn re_residual(&self) -> Result<TensorOp, RError> {
        let l1 = self.l.embed_sites(&[1, 3], 3)?;
        let r = self.base.sigma(1, 3);
        Ok(TensorOp::product([&r, &l1, &r, &l1])
            .unwrap()
            .sub(&TensorOp::product([&l1, &r, &l1, &r]).unwrap()))
    }

    /// p_m = Tr_D(L^m) as an operator on the quantum space.
    pub fn power_sum_op(&self, m: usize) -> Result<TensorOp, RError> {
        let lm = self.l.pow(m as i32)?;
        Ok(lm.trace_sites(&[1], Some(&self.base.d))?)
    }

    /// a_m = q^m Tr_{D(1..m)}(A_{1→m} L_{1̲} … L_{m̲}) as an operator on the
    /// quantum space.
    pub fn elementary_op(&self, m: usize) -> Result<TensorOp, RError> {
        let n = self.n();
        if m == 0 {
            return Ok(TensorOp::identity(n, 1));
        }
        let a = antisymmetrizer(&self.base, m)?.kron(&TensorOp::identity(n, 1));
        let ls = self.l_underline(m)?;
        let prod = ls.iter().fold(a, |acc, l| acc.mul(l));
        let sites: Vec<usize> = (1..=m).collect();
        Ok(prod
            .trace_sites(&sites, Some(&self.base.d))?
            .scale(&sf(Scalar::q(m as i32))))
    }
}

fn scalar_of(op: &TensorOp, what: &str) -> Result<ScalarFrac, RError> {
    op.as_scalar_identity()
        .ok_or_else(|| RError::InvalidFamily(format!("{what} is not a multiple of the identity")))
}

/// Power sums p_1..p_{m_max} and elementary functions a_0..a_{m_max} as scalars.
pub fn symmetric_functions(
    inst: &REInstance,
    m_max: usize,
) -> Result<(Vec<ScalarFrac>, Vec<ScalarFrac>), RError> {
    let ps: Vec<Result<ScalarFrac, RError>> = (1..=m_max)
        .into_par_iter()
        .map(|m| scalar_of(&inst.power_sum_op(m)?, &format!("p_{m}")))
        .collect();
    let r#as: Vec<Result<ScalarFrac, RError>> = (0..=m_max)
        .into_par_iter()
        .map(|m| scalar_of(&inst.elementary_op(m)?, &format!("a_{m}")))
        .collect();
    Ok((
        ps.into_iter().collect::<Result<_, _>>()?,
        r#as.into_iter().collect::<Result<_, _>>()?,
    ))
}

pub fn check_re(inst: &REInstance) -> Report {
    let mut rep = Report::new();
    match inst.re_residual() {
        Ok(res) => rep.push(
            "reflection equation ŘL₁ŘL₁ = L₁ŘL₁Ř",
            res.is_zero(),
            format!("{} nonzero entries", res.nnz()),
        ),
        Err(e) => rep.push("reflection equation", false, e.to_string()),
    }
    rep
}

/// [k]_q q^-k a_k + Σ_{m=1}^k (-1)^m a_{k-m} p_m = 0 for k = 1..N, and
/// a_{N+1} = 0.
pub fn newton_check(inst: &REInstance) -> Report {
    let mut rep = Report::new();
    let n = inst.n();
    let (p, a) = match symmetric_functions(inst, n + 1) {
        Ok(x) => x,
        Err(e) => {
            rep.push("symmetric functions", false, e.to_string());
            return rep;
        }
    };
    rep.push(
        "p_m, a_m are scalars",
        true,
        format!("p_1 = {}, a_1 = {}", p[0], a[1]),
    );
    for k in 1..=n {
        let mut s = sf(q_number(k as i32))
            .mul(&sf(Scalar::q(-(k as i32))))
            .mul(&a[k]);
        for m in 1..=k {
            let t = a[k - m].mul(&p[m - 1]);
            s = if m % 2 == 1 { s.sub(&t) } else { s.add(&t) };
        }
        rep.push(
            format!("Newton relation k={k}"),
            s.is_zero(),
            if s.is_zero() {
                String::new()
            } else {
                s.to_string()
            },
        );
    }
    rep.push(format!("a_{} = 0", n + 1), a[n + 1].is_zero(), "");
    rep
}

/// Σ_{k=0}^N (-L)^k a_{N-k} = 0 and the Cayley-Hamilton-Newton identities
/// [k]_q Tr_{D(2..k)}(A_{1→k} L_{1̲}…L_{k̲}) = -Σ_{m=1}^k (-1)^m a_{k-m} L^m.
pub fn cayley_hamilton_check(inst: &REInstance) -> Report {
    let mut rep = Report::new();
    let n = inst.n();
    let a = match symmetric_functions(inst, n) {
        Ok((_, a)) => a,
        Err(e) => {
            rep.push("symmetric functions", false, e.to_string());
            return rep;
        }
    };
    let d = inst.base.n;
    let mut powers = vec![TensorOp::identity(d, 2)];
    for k in 1..=n {
        let next = powers[k - 1].mul(&inst.l);
        powers.push(next);
    }
    let mut ch = TensorOp::zero(d, 2);
    for k in 0..=n {
        let t = powers[k].scale(&a[n - k]);
        ch = if k % 2 == 0 { ch.add(&t) } else { ch.sub(&t) };
    }
    rep.push(format!("Cayley-Hamilton N={n}"), ch.is_zero(), "");
    let chn: Vec<(usize, bool)> = (1..=n)
        .into_par_iter()
        .map(|k| {
            let lhs = (|| -> Result<TensorOp, RError> {
                let am = antisymmetrizer(&inst.base, k)?.kron(&TensorOp::identity(d, 1));
                let ls = inst.l_underline(k)?;
                let prod = ls.iter().fold(am, |acc, l| acc.mul(l));
                let sites: Vec<usize> = (2..=k).collect();
                let tr = if sites.is_empty() {
                    prod
                } else {
                    prod.trace_sites(&sites, Some(&inst.base.d))?
                };
                Ok(tr.scale(&sf(q_number(k as i32))))
            })();
            let mut rhs = TensorOp::zero(d, 2);
            for m in 1..=k {
                let t = powers[m].scale(&a[k - m]);
                // -(-1)^m
                rhs = if m % 2 == 1 { rhs.add(&t) } else { rhs.sub(&t) };
            }
            (k, matches!(lhs, Ok(l) if l == rhs))
        })
        .collect();
    for (k, ok) in chn {
        rep.push(format!("Cayley-Hamilton-Newton k={k}"), ok, "");
    }
    rep
}

/// Runs the named checks: re, newton, cayley (includes the CHN identities).
pub fn run_checks(r: &RData, names: &[&str]) -> Report {
    let mut rep = Report::new();
    let inst = match fundamental_re(r) {
        Ok(i) => i,
        Err(e) => {
            rep.push("fundamental RE representation", false, e.to_string());
            return rep;
        }
    };
    for name in names {
        match *name {
            "re" => rep.extend(check_re(&inst)),
            "newton" => rep.extend(newton_check(&inst)),
            "cayley" | "ch" | "chn" => rep.extend(cayley_hamilton_check(&inst)),
            other => rep.push(format!("unknown check {other}"), false, ""),
        }
    }
    rep
}
