//! Identity checks for constant R-matrices.

use crate::report::Report;
use crate::ring::{Coeff, Mono, Scalar, ScalarFrac, Var};
use crate::tensor::{SiteWeights, TensorOp};

use super::build::RData;
use super::family::Kind;
use super::RError;

/// Ř₁Ř₂Ř₁ - Ř₂Ř₁Ř₂ on V^{⊗3}.
pub fn ybe_residual(r: &TensorOp) -> TensorOp {
    let r1 = r.embed(1, 3).expect("two-site operator");
    let r2 = r.embed(2, 3).expect("two-site operator");
    r1.mul(&r2).mul(&r1).sub(&r2.mul(&r1).mul(&r2))
}

pub fn check_ybe(r: &TensorOp) -> Report {
    let res = ybe_residual(r);
    let mut rep = Report::new();
    rep.push(
        "ybe",
        res.is_zero(),
        format!("residual nonzeros: {}", res.nnz()),
    );
    rep
}

/// Π (Ř - e) over the listed eigenvalues.
pub fn char_product(r: &TensorOp, eig: &[Scalar]) -> TensorOp {
    let n = r.local_dim();
    let id = TensorOp::identity(n, 2);
    eig.iter()
        .map(|e| r.sub(&id.scale_scalar(e)))
        .reduce(|a, b| a.mul(&b))
        .unwrap_or(id)
}

pub fn check_characteristic(d: &RData) -> Report {
    let mut rep = Report::new();
    let eig = d.family.eigenvalues();
    let full = char_product(&d.rhat, &eig);
    let name = match d.kind() {
        Kind::Hecke => "hecke",
        Kind::Bmw => "cubic",
    };
    rep.push(
        name,
        full.is_zero(),
        format!("eigenvalues {}", fmt_list(&eig)),
    );
    // report which proper sub-products already annihilate
    for skip in 0..eig.len() {
        let sub: Vec<Scalar> = eig
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|e| e.1.clone())
            .collect();
        if char_product(&d.rhat, &sub).is_zero() {
            rep.push(
                format!("{name}-minimal"),
                false,
                format!("eigenvalue {} is absent", eig[skip]),
            );
        }
    }
    rep
}

fn fmt_list(v: &[Scalar]) -> String {
    v.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Tr₂(Ř₁₂ Ψ̂₂₃) = P₁₃ and Tr₂(Ψ̂₁₂ Ř₂₃) = P₁₃.
pub fn check_skew(d: &RData) -> Report {
    let mut rep = Report::new();
    let left = d
        .rhat
        .embed(1, 3)
        .unwrap()
        .mul(&d.psi_hat.embed(2, 3).unwrap());
    let l = left.trace_sites(&[2], None).unwrap();
    let right = d
        .psi_hat
        .embed(1, 3)
        .unwrap()
        .mul(&d.rhat.embed(2, 3).unwrap());
    let r = right.trace_sites(&[2], None).unwrap();
    let p = TensorOp::permutation(d.n);
    rep.push("skew: Tr2(R12 Psi23) = P13", l == p, "");
    rep.push("skew: Tr2(Psi12 R23) = P13", r == p, "");
    if let Some(phi) = &d.phi_hat {
        let left = d
            .rhat_inv
            .embed(1, 3)
            .unwrap()
            .mul(&phi.embed(2, 3).unwrap());
        let l = left.trace_sites(&[2], None).unwrap();
        rep.push("skew: Tr2(R^-1_12 Phi23) = P13", l == p, "");
    }
    rep
}

/// Tr_{D(2)}(Ř^k) for the given power.
pub fn y_n(d: &RData, k: i32) -> Result<TensorOp, RError> {
    let rk = if k >= 0 {
        d.rhat.pow(k)?
    } else {
        d.rhat_inv.pow(-k)?
    };
    Ok(rk.trace_sites(&[2], Some(&d.d))?)
}

/// α_n = (q^n - (-q)^{-n})/(q + q^-1)
pub fn alpha(n: i32) -> ScalarFrac {
    let sgn = if n % 2 == 0 { 1 } else { -1 };
    let num = Scalar::q(n).sub(&Scalar::q(-n).scale(&Coeff::int(sgn)));
    ScalarFrac::from(num)
        .div(&ScalarFrac::from(crate::ring::q_number(2)))
        .unwrap()
}

/// (a^n - b^n)/(a - b) as a polynomial expression, valid when a = b.
fn div_diff(n: i32, a: &ScalarFrac, b: &ScalarFrac) -> ScalarFrac {
    if n < 0 {
        let an = a.pow(n).unwrap();
        let bn = b.pow(n).unwrap();
        return an.mul(&bn).mul(&div_diff(-n, a, b)).neg();
    }
    let mut s = ScalarFrac::zero();
    for k in 0..n {
        s = s.add(&a.pow(k).unwrap().mul(&b.pow(n - 1 - k).unwrap()));
    }
    s
}

/// β_n = λν/(q+q^-1)·((ν^n - (-q)^{-n})/(ν + q^-1) - (ν^n - q^n)/(ν - q))
pub fn beta(n: i32, nu: &Scalar) -> ScalarFrac {
    let nu_f = ScalarFrac::from(nu.clone());
    let mq = ScalarFrac::from(Scalar::q(-1).neg());
    let q = ScalarFrac::from(Scalar::q(1));
    let a = div_diff(n, &nu_f, &mq);
    let b = div_diff(n, &nu_f, &q);
    let pre = ScalarFrac::from(Scalar::lambda().mul(nu))
        .div(&ScalarFrac::from(crate::ring::q_number(2)))
        .unwrap();
    pre.mul(&a.sub(&b))
}

/// Expected Tr_{D(2)} Ř^n as a multiple of the identity.
pub fn y_n_expected(d: &RData, n: i32) -> ScalarFrac {
    let base = alpha(n).add(&alpha(n - 1).mul(&d.tr_d));
    match (&d.nu, d.kind()) {
        (Some(nu), Kind::Bmw) => base.add(&ScalarFrac::from(nu.clone()).mul(&beta(n, nu))),
        _ => base,
    }
}

/// A generic one-site matrix with independent placeholder entries x^k.
fn generic_matrix(n: usize) -> TensorOp {
    TensorOp::from_fn(n, 1, |r, c| {
        let k = (r[0] * n + c[0] + 1) as i32;
        ScalarFrac::from(Scalar::term(Coeff::ONE, Mono::var(Var::X, k)))
    })
}

fn weights_op(w: &SiteWeights) -> TensorOp {
    w.as_op()
}

pub fn check_traces(d: &RData) -> Report {
    let mut rep = Report::new();
    let n = d.n;
    let id1 = TensorOp::identity(n, 1);
    let t2 = d.rhat.trace_sites(&[2], Some(&d.d)).unwrap();
    rep.push("Tr2(R D2) = I", t2 == id1, "");
    let t1 = d.rhat.trace_sites(&[1], Some(&d.q)).unwrap();
    rep.push("Tr1(Q1 R) = I", t1 == id1, "");
    let dd = weights_op(&d.d).kron(&weights_op(&d.d));
    let qq = weights_op(&d.q).kron(&weights_op(&d.q));
    rep.push("[R, D1 D2] = 0", d.rhat.commutator(&dd).is_zero(), "");
    rep.push("[R, Q1 Q2] = 0", d.rhat.commutator(&qq).is_zero(), "");
    rep.push(
        "Tr(D) = Tr(Q)",
        d.d.trace() == d.q.trace(),
        format!("Tr D = {}", d.tr_d),
    );
    // D Q = Tr₂(D₂ Ř^-1)
    let dq = SiteWeights::new(
        d.d.diag
            .iter()
            .zip(&d.q.diag)
            .map(|(a, b)| a.mul(b))
            .collect(),
    );
    let yinv = d.rhat_inv.trace_sites(&[2], Some(&d.d)).unwrap();
    rep.push("D Q = Tr2(D2 R^-1)", yinv == dq.as_op(), "");
    // invariance of the quantum trace under conjugation by Ř
    let e = generic_matrix(n).embed(1, 2).unwrap();
    let conj = d
        .rhat
        .mul(&e)
        .mul(&d.rhat_inv)
        .trace_sites(&[2], Some(&d.d))
        .unwrap();
    let tde = generic_matrix(n).full_trace(Some(&d.d));
    rep.push(
        "Tr_D(2)(R E1 R^-1) = Tr(D E) I",
        conj == id1.scale(&tde),
        "",
    );
    for k in -2..=3 {
        let y = y_n(d, k).unwrap();
        let c = y.as_scalar_identity();
        let ok = c
            .as_ref()
            .map(|c| *c == y_n_expected(d, k))
            .unwrap_or(false);
        let detail = match &c {
            Some(c) => format!("Y({k}) = {c}"),
            None => format!("Y({k}) is not scalar"),
        };
        rep.push(format!("Y({k}) = Tr2(D2 R^{k})"), ok, detail);
    }
    if let Some((dbar, qbar)) = d.dq_bar() {
        let dinv = d.d.inverse().unwrap();
        let qinv = d.q.inverse().unwrap();
        rep.push("Qbar = D^-1", qbar == dinv, "");
        rep.push("Dbar = Q^-1", dbar == qinv, "");
    }
    match d.kind() {
        Kind::Hecke => {
            if let Some(dp) = d.d_param {
                let c = ScalarFrac::from(Scalar::q(2 * dp));
                let ok =
                    d.q.inverse()
                        .unwrap()
                        .diag
                        .iter()
                        .zip(&d.d.diag)
                        .all(|(a, b)| *a == c.mul(b));
                rep.push("Q^-1 = q^{2d} D", ok, format!("d = {dp}"));
            } else {
                rep.push("q^{-2d} = 1 - λ Tr D", false, "not a power of q");
            }
        }
        Kind::Bmw => {
            let nu = ScalarFrac::from(d.nu.clone().unwrap());
            let c = nu.pow(-2).unwrap();
            let ok =
                d.q.inverse()
                    .unwrap()
                    .diag
                    .iter()
                    .zip(&d.d.diag)
                    .all(|(a, b)| *a == c.mul(b));
            rep.push("Q^-1 = ν^-2 D", ok, "");
            let numu = nu.mul(d.mu.as_ref().unwrap());
            rep.push("Tr D = ν μ", d.tr_d == numu, format!("Tr D = {}", d.tr_d));
        }
    }
    rep
}

/// Spectral projectors in the order of `family.eigenvalues()`.
pub fn spectral_projectors(d: &RData) -> Result<Vec<TensorOp>, RError> {
    let eig = d.family.eigenvalues();
    let id = TensorOp::identity(d.n, 2);
    let mut out = Vec::new();
    for (k, ek) in eig.iter().enumerate() {
        let mut p = id.clone();
        let mut den = ScalarFrac::one();
        for (l, el) in eig.iter().enumerate() {
            if l == k {
                continue;
            }
            let diff = ScalarFrac::from(ek.sub(el));
            if diff.is_zero() {
                return Err(RError::RepeatedEigenvalue);
            }
            p = p.mul(&d.rhat.sub(&id.scale_scalar(el)));
            den = den.mul(&diff);
        }
        out.push(p.scale(&den.inv().unwrap()));
    }
    Ok(out)
}

pub fn check_projectors(d: &RData) -> (Report, Vec<usize>) {
    let mut rep = Report::new();
    let ps = match spectral_projectors(d) {
        Ok(p) => p,
        Err(RError::RepeatedEigenvalue) => {
            // ν coincides with q or -q^-1 (e.g. Osp(2|2)); only the cubic relation is meaningful
            rep.push("projectors", true, "not defined: repeated eigenvalue");
            return (rep, vec![]);
        }
        Err(e) => {
            rep.push("projectors", false, e.to_string());
            return (rep, vec![]);
        }
    };
    let eig = d.family.eigenvalues();
    let id = TensorOp::identity(d.n, 2);
    let sum = ps.iter().fold(TensorOp::zero(d.n, 2), |a, b| a.add(b));
    rep.push("sum P_k = 1", sum == id, "");
    let mut ortho = true;
    for (k, pk) in ps.iter().enumerate() {
        for (l, pl) in ps.iter().enumerate() {
            let prod = pk.mul(pl);
            let ok = if k == l { prod == *pk } else { prod.is_zero() };
            ortho &= ok;
        }
        let ok = d.rhat.mul(pk) == pk.scale_scalar(&eig[k]);
        rep.push(format!("R P{k} = {} P{k}", eig[k]), ok, "");
    }
    rep.push("P_k P_l = δ_kl P_k", ortho, "");
    let ranks: Vec<usize> = ps.iter().map(|p| p.rank()).collect();
    let traces: Vec<String> = ps.iter().map(|p| p.full_trace(None).to_string()).collect();
    rep.push(
        "ranks",
        true,
        format!("{:?} (plain traces {})", ranks, traces.join(", ")),
    );
    (rep, ranks)
}

pub fn check_bmw_structure(d: &RData) -> Result<Report, RError> {
    let k = d.khat.as_ref().ok_or(RError::NotBmw)?;
    let nu = d.nu.clone().ok_or(RError::NotBmw)?;
    let mu = d.mu.clone().ok_or(RError::NotBmw)?;
    let n = d.n;
    let mut rep = Report::new();
    rep.push("K R = ν K", k.mul(&d.rhat) == k.scale_scalar(&nu), "");
    rep.push("R K = ν K", d.rhat.mul(k) == k.scale_scalar(&nu), "");
    rep.push("K^2 = μ K", k.mul(k) == k.scale(&mu), format!("μ = {mu}"));
    let lam = RData::lambda();
    let lhs = d.rhat.sub(&d.rhat_inv);
    let rhs = TensorOp::identity(n, 2).sub(k).scale(&lam);
    rep.push("R - R^-1 = λ(1 - K)", lhs == rhs, "");
    rep.push("rank K = 1", k.rank() == 1, "");
    let k1 = k.embed(1, 3)?;
    let k2 = k.embed(2, 3)?;
    let r1 = d.rhat.embed(1, 3)?;
    let r1i = d.rhat_inv.embed(1, 3)?;
    rep.push("K12 K23 K12 = K12", k1.mul(&k2).mul(&k1) == k1, "");
    rep.push("K23 K12 K23 = K23", k2.mul(&k1).mul(&k2) == k2, "");
    let nu_f = ScalarFrac::from(nu.clone());
    rep.push(
        "K23 R12 K23 = ν^-1 K23",
        k2.mul(&r1).mul(&k2) == k2.scale(&nu_f.inv().unwrap()),
        "",
    );
    rep.push(
        "K23 R12^-1 K23 = ν K23",
        k2.mul(&r1i).mul(&k2) == k2.scale(&nu_f),
        "",
    );
    let r2 = d.rhat.embed(2, 3)?;
    rep.push(
        "R12 R23 K12 = K23 K12",
        r1.mul(&r2).mul(&k1) == k2.mul(&k1),
        "",
    );
    Ok(rep)
}

/// Runs the requested checks; names: ybe, char, skew, traces, proj, bmw.
pub fn run_checks(d: &RData, names: &[&str]) -> Report {
    let mut rep = Report::new();
    for &c in names {
        match c {
            "ybe" => rep.extend(check_ybe(&d.rhat)),
            "char" => rep.extend(check_characteristic(d)),
            "skew" => rep.extend(check_skew(d)),
            "traces" => rep.extend(check_traces(d)),
            "proj" => rep.extend(check_projectors(d).0),
            "bmw" => match check_bmw_structure(d) {
                Ok(r) => rep.extend(r),
                Err(e) => rep.push("bmw", false, e.to_string()),
            },
            other => rep.push(other, false, "unknown check"),
        }
    }
    rep
}
