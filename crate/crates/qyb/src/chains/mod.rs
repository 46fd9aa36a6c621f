//! Periodic spin chains built from spectral R-matrices: monodromy and
//! transfer matrices, local Hamiltonians and the commuting charges of the
//! periodic Hecke algebra.
//!
//! Sites 1..M carry the chain, site M+1 is the auxiliary space. The
//! spectral argument is `x` for trigonometric forms and θ for rational ones,
//! as in [`crate::baxter`].

use rayon::prelude::*;

use crate::baxter::{hamiltonian_density, seeded_points, super_permutation, BaxterR, Form};
use crate::report::Report;
use crate::ring::{Coeff, RingError, ScalarFrac};
use crate::rmatrix::{Kind, RData, RError};
use crate::tensor::{SiteWeights, TensorOp};

#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub base: BaxterR,
    pub sites: usize,
    /// The same diagonal twist D^{(K)} at every site, or none.
    pub twist: Option<SiteWeights>,
    /// Replaces L at one site by a fixed operator on (site, aux). Only used
    /// to build deliberately broken chains.
    pub defect: Option<(usize, TensorOp)>,
}

impl ChainSpec {
    pub fn new(base: BaxterR, sites: usize) -> ChainSpec {
        ChainSpec {
            base,
            sites,
            twist: None,
            defect: None,
        }
    }

    pub fn with_twist(mut self, d: SiteWeights) -> ChainSpec {
        self.twist = Some(d);
        self
    }

    pub fn with_defect(mut self, site: usize, op: TensorOp) -> ChainSpec {
        self.defect = Some((site, op));
        self
    }

    fn graded(&self) -> bool {
        self.base.family.grading().iter().any(|&g| g == 1)
    }

    /// The permutation matching the form: graded for super families.
    pub fn permutation(&self) -> TensorOp {
        if self.graded() {
            super_permutation(&self.base.family.grading())
        } else {
            TensorOp::permutation(self.base.n())
        }
    }

    /// Weights for the auxiliary trace: the supertrace signs when graded.
    fn aux_weights(&self) -> Option<SiteWeights> {
        if !self.graded() {
            return None;
        }
        let diag = self
            .base
            .family
            .grading()
            .iter()
            .skip(1)
            .map(|&g| ScalarFrac::int(if g == 1 { -1 } else { 1 }))
            .collect();
        Some(SiteWeights::new(diag))
    }

    fn regular_point(&self) -> Coeff {
        if self.base.form.is_rational() {
            Coeff::ZERO
        } else {
            Coeff::ONE
        }
    }
}

fn check_sites(c: &ChainSpec) -> Result<(), RError> {
    if c.sites < 2 {
        return Err(RError::InvalidFamily(format!(
            "a chain needs at least 2 sites, got {}",
            c.sites
        )));
    }
    if let Some(d) = &c.twist {
        if d.dim() != c.base.n() {
            return Err(RError::InvalidFamily(
                "twist size does not match the family".into(),
            ));
        }
    }
    Ok(())
}

/// T_a(θ) = D_a R_{1a}(θ) D_a R_{2a}(θ) … D_a R_{Ma}(θ) on M+1 sites, with
/// R = P Ř.
pub fn monodromy(c: &ChainSpec, theta: &Coeff) -> Result<TensorOp, RError> {
    check_sites(c)?;
    let m = c.sites;
    let a = m + 1;
    let r = c.permutation().mul(&c.base.at(theta)?);
    let d = match &c.twist {
        Some(w) => Some(w.as_op().embed(a, a)?),
        None => None,
    };
    let mut t = TensorOp::identity(c.base.n(), a);
    for k in 1..=m {
        if let Some(d) = &d {
            t = t.mul(d);
        }
        let local = match &c.defect {
            Some((s, op)) if *s == k => op,
            _ => &r,
        };
        t = t.mul(&local.embed_sites(&[k, a], a)?);
    }
    Ok(t)
}

/// t(θ) = Tr_aux T(θ), a supertrace for graded families.
pub fn transfer_matrix(c: &ChainSpec, theta: &Coeff) -> Result<TensorOp, RError> {
    let t = monodromy(c, theta)?;
    Ok(t.trace_sites(&[c.sites + 1], c.aux_weights().as_ref())?)
}

/// Seeded pairs of spectral points at which the R-matrix has no pole.
pub fn chain_points(c: &ChainSpec, seed: u64, count: usize) -> Vec<(Coeff, Coeff)> {
    seeded_points(seed, 8 * count + 8)
        .into_iter()
        .filter(|(x, y)| c.base.at(x).is_ok() && c.base.at(y).is_ok())
        .take(count)
        .collect()
}

/// [t(θ), t(θ′)] = 0 at each pair.
pub fn commutativity_check(c: &ChainSpec, pairs: &[(Coeff, Coeff)]) -> Report {
    let results: Vec<(String, Result<bool, RError>)> = pairs
        .par_iter()
        .map(|(x, y)| {
            let r = (|| {
                let a = transfer_matrix(c, x)?;
                let b = transfer_matrix(c, y)?;
                Ok(a.commutator(&b).is_zero())
            })();
            (format!("[t({x}), t({y})] = 0 (M={})", c.sites), r)
        })
        .collect();
    let mut rep = Report::new();
    for (name, r) in results {
        match r {
            Ok(ok) => rep.push(name, ok, ""),
            Err(e) => rep.push(name, false, e.to_string()),
        }
    }
    rep
}

/// H = Σ_k D_k h_{k,k+1} D_k^-1 with h_{M,M+1} = h_{M,1}.
/// For graded families h_{M,1} is h_{M-1,M} conjugated by the graded shift.
pub fn hamiltonian(c: &ChainSpec) -> Result<TensorOp, RError> {
    check_sites(c)?;
    let m = c.sites;
    let h = hamiltonian_density(&c.base).map_err(|e| match e {
        RingError::Pole => RError::InvalidFamily("spectral R-matrix is not regular".into()),
        e => e.into(),
    })?;
    let reg = c.base.regular_value()?;
    if reg != TensorOp::identity(c.base.n(), 2) {
        return Err(RError::InvalidFamily(
            "spectral R-matrix is not regular".into(),
        ));
    }
    // graded families: the wrap term is the last bond moved by the graded
    // shift t(regular point), which carries the sign factors
    let wrap = if c.graded() {
        let u = transfer_matrix(c, &c.regular_point())?;
        let u_inv = u.inverse()?;
        u_inv.mul(&h.embed_sites(&[m - 1, m], m)?).mul(&u)
    } else {
        h.embed_sites(&[m, 1], m)?
    };
    let mut sum = TensorOp::zero(c.base.n(), m);
    for k in 1..=m {
        let mut term = if k == m {
            wrap.clone()
        } else {
            h.embed_sites(&[k, k + 1], m)?
        };
        if let Some(w) = &c.twist {
            let d = w.as_op().embed(k, m)?;
            let di = w.inverse()?.as_op().embed(k, m)?;
            term = d.mul(&term).mul(&di);
        }
        sum = sum.add(&term);
    }
    Ok(sum)
}

/// [H, t(θ)] = 0 at the given points and [H, t(regular point)] = 0, where
/// the latter is the cyclic shift for an untwisted chain.
pub fn hamiltonian_check(c: &ChainSpec, points: &[Coeff]) -> Report {
    let mut rep = Report::new();
    let h = match hamiltonian(c) {
        Ok(h) => h,
        Err(e) => {
            rep.push("hamiltonian", false, e.to_string());
            return rep;
        }
    };
    let reg = c.regular_point();
    let mut pts: Vec<Coeff> = vec![reg.clone()];
    pts.extend(points.iter().cloned());
    let res: Vec<(String, Result<bool, RError>)> = pts
        .par_iter()
        .map(|x| {
            let r = transfer_matrix(c, x).map(|t| h.commutator(&t).is_zero());
            let name = if *x == reg {
                format!("[H, t({x})] = 0 (regular point, M={})", c.sites)
            } else {
                format!("[H, t({x})] = 0 (M={})", c.sites)
            };
            (name, r)
        })
        .collect();
    for (name, r) in res {
        match r {
            Ok(ok) => rep.push(name, ok, ""),
            Err(e) => rep.push(name, false, e.to_string()),
        }
    }
    if c.twist.is_none() && !c.graded() {
        let ok = transfer_matrix(c, &reg).map(|t| t == cyclic_shift(c.base.n(), c.sites));
        match ok {
            Ok(ok) => rep.push("t(regular point) is the cyclic shift", ok, ""),
            Err(e) => rep.push("t(regular point) is the cyclic shift", false, e.to_string()),
        }
    }
    rep
}

/// Reversing the order of the sites acts on H as the basis flip
/// e_i → e_{N+1-i} on every site.
pub fn reversal_check(c: &ChainSpec) -> Report {
    let mut rep = Report::new();
    let name = format!("H reversed = J H J with J: e_i → e_(N+1-i) (M={})", c.sites);
    let h = match hamiltonian(c) {
        Ok(h) => h,
        Err(e) => {
            rep.push(name, false, e.to_string());
            return rep;
        }
    };
    let (n, m) = (c.base.n(), c.sites);
    let perm: Vec<usize> = (1..=m).rev().collect();
    let rev = h.permute_sites(&perm).expect("valid permutation");
    let j = TensorOp::from_fn(n, m, |r, col| {
        if r.iter().zip(col).all(|(a, b)| a + b == n - 1) {
            ScalarFrac::one()
        } else {
            ScalarFrac::zero()
        }
    });
    rep.push(name, rev == j.mul(&h).mul(&j), "");
    rep
}

/// The operator sending e_{i_1} ⊗ … ⊗ e_{i_M} to e_{i_2} ⊗ … ⊗ e_{i_M} ⊗ e_{i_1}.
pub fn cyclic_shift(n: usize, m: usize) -> TensorOp {
    TensorOp::from_fn(n, m, |r, c| {
        let ok = (0..m).all(|k| r[k] == c[(k + 1) % m]);
        if ok {
            ScalarFrac::one()
        } else {
            ScalarFrac::zero()
        }
    })
}

/// σ_1 … σ_{M-1} from Ř, and σ_M = X σ_1 X^-1 with X = σ_{M-1} … σ_1.
pub fn periodic_generators(r: &RData, m: usize) -> Result<Vec<TensorOp>, RError> {
    if m < 2 {
        return Err(RError::InvalidFamily(format!(
            "a chain needs at least 2 sites, got {m}"
        )));
    }
    let mut s: Vec<TensorOp> = (1..m).map(|i| r.sigma(i, m)).collect();
    let mut x = TensorOp::identity(r.n, m);
    let mut x_inv = TensorOp::identity(r.n, m);
    for i in (1..m).rev() {
        x = x.mul(&s[i - 1]);
    }
    for i in 1..m {
        x_inv = x_inv.mul(&r.sigma_inv(i, m));
    }
    s.push(x.mul(&s[0]).mul(&x_inv));
    Ok(s)
}

/// I_k = Σ_i σ_i σ_{i+1} … σ_{i+k}, indices mod M.
pub fn charge(sigmas: &[TensorOp], k: usize) -> TensorOp {
    let m = sigmas.len();
    let mut sum = TensorOp::zero(sigmas[0].local_dim(), sigmas[0].sites());
    for i in 0..m {
        let mut p = sigmas[i].clone();
        for j in 1..=k {
            p = p.mul(&sigmas[(i + j) % m]);
        }
        sum = sum.add(&p);
    }
    sum
}

/// [I_k, I_l] = 0 for 0 ≤ k < l ≤ k_max, with σ_M from the conjugation
/// formula; the periodic relations of σ_M; and, for an untwisted Hecke
/// chain, I₀ with σ_M → Ř_{M,1} equals H + λM/2.
pub fn commuting_charges(c: &ChainSpec, k_max: usize) -> Report {
    let mut rep = Report::new();
    let m = c.sites;
    let r = match RData::build(&c.base.family) {
        Ok(r) if r.kind() == Kind::Hecke => r,
        Ok(_) => {
            rep.push("commuting charges", false, RError::NotHecke.to_string());
            return rep;
        }
        Err(e) => {
            rep.push("commuting charges", false, e.to_string());
            return rep;
        }
    };
    if m < 2 || k_max + 2 > m.max(2) {
        rep.push(
            "commuting charges",
            false,
            format!("k_max = {k_max} needs k_max ≤ M - 2 with M = {m}"),
        );
        return rep;
    }
    let s = match periodic_generators(&r, m) {
        Ok(s) => s,
        Err(e) => {
            rep.push("commuting charges", false, e.to_string());
            return rep;
        }
    };
    if m >= 3 {
        let sm = &s[m - 1];
        let braid = sm.mul(&s[0]).mul(sm) == s[0].mul(sm).mul(&s[0])
            && sm.mul(&s[m - 2]).mul(sm) == s[m - 2].mul(sm).mul(&s[m - 2]);
        let far = (2..m - 1).all(|i| sm.commutator(&s[i - 1]).is_zero());
        let hecke = sm.mul(sm) == sm.scale(&RData::lambda()).add_identity(&ScalarFrac::one());
        rep.push(
            format!("σ_M satisfies the periodic Hecke relations (M={m})"),
            braid && far && hecke,
            "",
        );
    }
    let is: Vec<TensorOp> = (0..=k_max).into_par_iter().map(|k| charge(&s, k)).collect();
    if k_max == 0 {
        rep.push(format!("only I₀ exists for M={m}"), true, "");
    }
    for k in 0..=k_max {
        for l in k + 1..=k_max {
            rep.push(
                format!("[I_{k}, I_{l}] = 0 (M={m})"),
                is[k].commutator(&is[l]).is_zero(),
                "",
            );
        }
    }
    if c.twist.is_none() && c.base.form == Form::Hecke && !c.graded() {
        let mut direct = s.clone();
        direct[m - 1] = r.rhat.embed_sites(&[m, 1], m).expect("sites in range");
        let i0 = charge(&direct, 0);
        let lam_m = RData::lambda()
            .mul(&ScalarFrac::int(m as i64))
            .div(&ScalarFrac::int(2))
            .unwrap();
        let ok = match hamiltonian(c) {
            Ok(h) => i0 == h.add_identity(&lam_m),
            Err(_) => false,
        };
        rep.push(format!("I₀ (σ_M → Ř_M1) = H + λM/2 (M={m})"), ok, "");
    }
    rep
}

/// Commutativity at seeded pairs, [H, t] at their first entries, and the
/// charges for Hecke chains.
pub fn run_checks(c: &ChainSpec, names: &[&str], seed: u64, points: usize) -> Report {
    let mut rep = Report::new();
    let pairs = chain_points(c, seed, points);
    for name in names {
        match *name {
            "commute" => rep.extend(commutativity_check(c, &pairs)),
            "hamiltonian" => {
                let xs: Vec<Coeff> = pairs.iter().map(|p| p.0.clone()).collect();
                rep.extend(hamiltonian_check(c, &xs));
                if c.twist.is_none() && !c.graded() {
                    rep.extend(reversal_check(c));
                }
            }
            "charges" => {
                if c.base.family.kind() == Kind::Hecke {
                    rep.extend(commuting_charges(c, c.sites.saturating_sub(2)))
                } else {
                    rep.push("charges", false, "charges need a Hecke-type family")
                }
            }
            other => rep.push(format!("unknown check {other}"), false, ""),
        }
    }
    rep
}
