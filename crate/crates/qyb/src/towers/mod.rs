//! Hecke and BMW algebras realized on V^⊗n through an R-matrix:
//! Jucys-Murphy elements, symmetrizers, branching graphs, primitive
//! idempotents, matrix units and Markov traces.

mod graph;
mod idem;

pub use graph::{
    hook_qdim, hook_qdim_transposed, so_qdim_printed, standard_tableaux_count, wenzl_qdim, Algebra,
    BranchGraph, Content, Edge, Partition, Path,
};
pub use idem::{
    check_matrix_units, closure_check, completeness_check, idempotent_from_path, intertwiner,
    markov_check, matrix_unit, ocneanu_trace,
};

use crate::baxter::{baxterize_bmw, baxterize_hecke, Branch};
use crate::report::Report;
use crate::ring::{q_number, Scalar, ScalarFrac, Var};
use crate::rmatrix::{Kind, RData, RError};
use crate::tensor::TensorOp;

/// The generators σ_i, σ_i^-1 and κ_i on V^⊗n.
#[derive(Clone, Debug)]
pub struct TowerRep {
    pub base: RData,
    pub n: usize,
    pub sigmas: Vec<TensorOp>,
    pub sigma_invs: Vec<TensorOp>,
    pub kappas: Vec<TensorOp>,
}

fn sf(s: Scalar) -> ScalarFrac {
    ScalarFrac::from(s)
}

impl TowerRep {
    pub fn new(base: &RData, n: usize) -> TowerRep {
        let sigmas = (1..n).map(|a| base.sigma(a, n)).collect();
        let sigma_invs = (1..n).map(|a| base.sigma_inv(a, n)).collect();
        let kappas = (1..n).filter_map(|a| base.kappa(a, n)).collect();
        TowerRep {
            base: base.clone(),
            n,
            sigmas,
            sigma_invs,
            kappas,
        }
    }

    pub fn kind(&self) -> Kind {
        self.base.kind()
    }

    pub fn identity(&self) -> TensorOp {
        TensorOp::identity(self.base.n, self.n)
    }

    /// σ_i, 1-based.
    pub fn sigma(&self, i: usize) -> &TensorOp {
        &self.sigmas[i - 1]
    }

    pub fn sigma_inv(&self, i: usize) -> &TensorOp {
        &self.sigma_invs[i - 1]
    }

    pub fn kappa(&self, i: usize) -> Option<&TensorOp> {
        self.kappas.get(i - 1)
    }

    /// ν² for BMW, used as the second color of JM eigenvalues.
    pub fn nu2(&self) -> Option<Scalar> {
        self.base.nu.as_ref().map(|v| v.mul(v))
    }

    /// Value of a content in this representation.
    pub fn content_value(&self, c: Content) -> Result<Scalar, RError> {
        match c {
            Content::Plain(z) => Ok(Scalar::q(2 * z)),
            Content::Nu2(z) => {
                let nu2 = self.nu2().ok_or(RError::NotBmw)?;
                Ok(nu2.mul(&Scalar::q(2 * z)))
            }
        }
    }

    /// Baxterized generator Ř_a(x) at x = q^k, embedded at sites (a, a+1).
    pub fn baxter_at(&self, a: usize, k: i32, branch: Branch) -> Result<TensorOp, RError> {
        let b = match self.kind() {
            Kind::Hecke => baxterize_hecke(&self.base)?,
            Kind::Bmw => baxterize_bmw(&self.base, branch)?,
        };
        let v = b.op.subs(Var::X, &sf(Scalar::q(k)))?;
        Ok(v.embed(a, self.n)?)
    }
}

/// Braid, locality and Hecke or BMW relations on V^⊗n.
pub fn check_relations(t: &TowerRep) -> Report {
    let mut rep = Report::new();
    let n = t.n;
    let lam = RData::lambda();
    let id = t.identity();
    let mut braid = true;
    let mut local = true;
    for i in 1..n {
        for j in 1..n {
            if i + 1 == j {
                let (a, b) = (t.sigma(i), t.sigma(j));
                braid &= a.mul(b).mul(a) == b.mul(a).mul(b);
            }
            if i + 1 < j {
                local &= t.sigma(i).commutator(t.sigma(j)).is_zero();
            }
        }
    }
    rep.push(format!("braid relations n={n}"), braid, "");
    rep.push(format!("locality n={n}"), local, "");
    match t.kind() {
        Kind::Hecke => {
            let ok = (1..n).all(|i| {
                let s = t.sigma(i);
                s.mul(s).sub(&id) == s.scale(&lam)
            });
            rep.push(format!("hecke relation n={n}"), ok, "");
        }
        Kind::Bmw => {
            let nu = sf(t.base.nu.clone().unwrap());
            let mu = t.base.mu.clone().unwrap();
            let mut b1 = true;
            let mut b2 = true;
            let mut b3 = true;
            let mut b4 = true;
            for i in 1..n {
                let k = t.kappa(i).unwrap();
                let s = t.sigma(i);
                b1 &= k.mul(s) == k.scale(&nu) && s.mul(k) == k.scale(&nu);
                b3 &= s.sub(t.sigma_inv(i)) == id.sub(k).scale(&lam);
                b4 &= k.mul(k) == k.scale(&mu);
                for j in [i.wrapping_sub(1), i + 1] {
                    if j >= 1 && j < n {
                        b2 &= k.mul(t.sigma(j)).mul(k) == k.scale(&nu.inv().unwrap());
                        b2 &= k.mul(t.sigma_inv(j)).mul(k) == k.scale(&nu);
                    }
                }
            }
            rep.push(format!("κσ = σκ = νκ n={n}"), b1, "");
            rep.push(format!("κ_i σ_(i±1)^(±1) κ_i = ν^(∓1) κ_i n={n}"), b2, "");
            rep.push(format!("σ - σ^-1 = λ(1 - κ) n={n}"), b3, "");
            rep.push(format!("κ² = μκ n={n}"), b4, "");
        }
    }
    rep
}

/// y_1 = 1, y_{i+1} = σ_i y_i σ_i.
pub fn jm_elements(t: &TowerRep) -> Vec<TensorOp> {
    let mut ys = vec![t.identity()];
    for i in 1..t.n {
        let next = t.sigma(i).mul(&ys[i - 1]).mul(t.sigma(i));
        ys.push(next);
    }
    ys
}

pub fn check_jm(t: &TowerRep, ys: &[TensorOp]) -> Report {
    let mut rep = Report::new();
    let n = t.n;
    let mut comm = true;
    for i in 0..n {
        for j in i + 1..n {
            comm &= ys[i].commutator(&ys[j]).is_zero();
        }
    }
    rep.push(format!("JM commute n={n}"), comm, "");
    let mut loc = true;
    for k in 1..n {
        for (j, y) in ys.iter().enumerate() {
            let j = j + 1;
            if j != k && j != k + 1 {
                loc &= t.sigma(k).commutator(y).is_zero();
            }
        }
    }
    rep.push(format!("[σ_k, y_j] = 0 for j ∉ {{k, k+1}} n={n}"), loc, "");
    let prod = TensorOp::product(ys).unwrap();
    let (sum, label) = match t.kind() {
        Kind::Hecke => (
            ys.iter().fold(TensorOp::zero(t.base.n, n), |a, b| a.add(b)),
            "Σy",
        ),
        Kind::Bmw => {
            // only symmetric functions with the cancellation property are central:
            // κ_i y_i y_{i+1} = ν² κ_i, so use z = ν^-1 y
            let nu = sf(t.base.nu.clone().unwrap());
            let nu_inv = nu.inv().unwrap();
            let yinv = jm_inverses(t);
            let s = ys
                .iter()
                .zip(&yinv)
                .fold(TensorOp::zero(t.base.n, n), |a, (y, yi)| {
                    a.add(&y.scale(&nu_inv)).sub(&yi.scale(&nu))
                });
            (s, "Σ(ν^-1 y - ν y^-1)")
        }
    };
    let central = (1..n)
        .all(|k| t.sigma(k).commutator(&sum).is_zero() && t.sigma(k).commutator(&prod).is_zero());
    rep.push(format!("{label} and Πy are central n={n}"), central, "");
    rep
}

/// y_1^-1 = 1, y_{i+1}^-1 = σ_i^-1 y_i^-1 σ_i^-1.
pub fn jm_inverses(t: &TowerRep) -> Vec<TensorOp> {
    let mut ys = vec![t.identity()];
    for i in 1..t.n {
        let next = t.sigma_inv(i).mul(&ys[i - 1]).mul(t.sigma_inv(i));
        ys.push(next);
    }
    ys
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Sym,
    Antisym,
}

/// Inductive (anti)symmetrizers S_{1→k}, A_{1→k} for k = 1..up_to:
/// X_{1→k} = X_{1→k-1} (Ř_{k-1}(q^{∓(k-1)})/[k]) X_{1→k-1}, with the minus
/// branch for S and the plus branch for A in the BMW case.
pub fn symmetrizers(t: &TowerRep, kind: SymKind, up_to: usize) -> Result<Vec<TensorOp>, RError> {
    let mut out = vec![t.identity()];
    for k in 2..=up_to.min(t.n) {
        let (e, br) = match kind {
            SymKind::Sym => (-(k as i32 - 1), Branch::Minus),
            SymKind::Antisym => (k as i32 - 1, Branch::Plus),
        };
        let r = t.baxter_at(k - 1, e, br)?;
        let inv_k = sf(q_number(k as i32)).inv()?;
        let prev = out.last().unwrap();
        out.push(prev.mul(&r.scale(&inv_k)).mul(prev));
    }
    Ok(out)
}

/// JM product formulas for S_{1→n} and A_{1→n}.
pub fn symmetrizer_jm_form(
    t: &TowerRep,
    ys: &[TensorOp],
    kind: SymKind,
    n: usize,
) -> Result<TensorOp, RError> {
    let mut acc = t.identity();
    let nu2 = t.nu2().map(sf);
    for i in 2..=n {
        let i32_ = i as i32;
        let (target, f1) = match kind {
            SymKind::Sym => (sf(Scalar::q(2 * (i32_ - 1))), sf(Scalar::q(-2))),
            SymKind::Antisym => (sf(Scalar::q(-2 * (i32_ - 1))), sf(Scalar::q(2))),
        };
        let y = &ys[i - 1];
        let fac = |root: &ScalarFrac| -> Result<TensorOp, RError> {
            let den = target.sub(root).inv()?;
            Ok(y.add_identity(&root.neg()).scale(&den))
        };
        acc = acc.mul(&fac(&f1)?);
        if let Some(nu2) = &nu2 {
            let e = match kind {
                SymKind::Sym => -2 * (i32_ - 2),
                SymKind::Antisym => 2 * (i32_ - 2),
            };
            acc = acc.mul(&fac(&nu2.mul(&sf(Scalar::q(e))))?);
        }
    }
    Ok(acc)
}

/// Idempotency, σ_i S = qS, σ_i A = -q^-1 A, κ_i S = κ_i A = 0 and the JM
/// product formulas, for every level up to `up_to`.
pub fn check_symmetrizers(t: &TowerRep, ys: &[TensorOp], up_to: usize) -> Report {
    let mut rep = Report::new();
    for kind in [SymKind::Sym, SymKind::Antisym] {
        let tag = if kind == SymKind::Sym { "S" } else { "A" };
        let xs = match symmetrizers(t, kind, up_to) {
            Ok(x) => x,
            Err(e) => {
                rep.push(format!("{tag} symmetrizers"), false, e.to_string());
                continue;
            }
        };
        let eig = match kind {
            SymKind::Sym => sf(Scalar::q(1)),
            SymKind::Antisym => sf(Scalar::q(-1).neg()),
        };
        for (k, x) in xs.iter().enumerate().skip(1) {
            let k = k + 1;
            let idem = x.mul(x) == *x;
            let mut ann = true;
            for i in 1..k {
                ann &= t.sigma(i).mul(x) == x.scale(&eig) && x.mul(t.sigma(i)) == x.scale(&eig);
                if let Some(kap) = t.kappa(i) {
                    ann &= kap.mul(x).is_zero();
                }
            }
            let jm = symmetrizer_jm_form(t, ys, kind, k)
                .map(|f| f == *x)
                .unwrap_or(false);
            rep.push(
                format!("{tag}(1→{k}) idempotent"),
                idem,
                format!("rank {}", x.rank()),
            );
            rep.push(format!("{tag}(1→{k}) eigen/annihilation"), ann, "");
            rep.push(format!("{tag}(1→{k}) JM closed form"), jm, "");
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::Family;

    #[test]
    fn glq2_y2_spectrum() {
        let r = RData::build(&Family::GLq { n: 2 }).unwrap();
        let t = TowerRep::new(&r, 2);
        let ys = jm_elements(&t);
        let y2 = &ys[1];
        let a = y2.add_identity(&sf(Scalar::q(2)).neg());
        let b = y2.add_identity(&sf(Scalar::q(-2)).neg());
        assert!(a.mul(&b).is_zero());
        assert!(check_relations(&t).pass());
    }
}
