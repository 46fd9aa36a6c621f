//! Closed-form q-combinatorics: hooks and contents, Hecke and BMW
//! q-dimensions, q-antisymmetrizers, quantum determinants, ε-tensors and
//! characters.

use crate::report::Report;
use crate::ring::{RingError, Scalar, ScalarFrac, Var};
use crate::rmatrix::{Kind, RData, RError};
use crate::tensor::{encode, SiteWeights, TensorOp};
use crate::towers::{
    self, idempotent_from_path, jm_elements, ocneanu_trace, symmetrizers, Algebra, BranchGraph,
    Partition, Path, SymKind, TowerRep,
};

pub use crate::towers::{hook_qdim, hook_qdim_transposed, standard_tableaux_count};

fn sf(s: Scalar) -> ScalarFrac {
    ScalarFrac::from(s)
}

/// One node of a Young diagram (1-based row and column).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub hook: usize,
    pub content: i32,
}

pub fn hooks_contents(p: &Partition) -> Vec<Node> {
    p.nodes()
        .map(|(row, col)| Node {
            row,
            col,
            hook: p.hook(row, col),
            content: col as i32 - row as i32,
        })
        .collect()
}

/// Hecke q-dimension q^{-Md} Π [d + c]/[h]. Both closed forms are computed
/// and must agree.
pub fn qdim_hecke(p: &Partition, d: i32) -> Result<ScalarFrac, RError> {
    let a = hook_qdim(p, d);
    let b = hook_qdim_transposed(p, d);
    if a != b {
        return Err(RError::InvalidFamily(format!(
            "hook forms disagree for {p}: {a} vs {b}"
        )));
    }
    Ok(a)
}

/// Rewrites a fraction in s (carried by the ring variable q) as a fraction
/// in q = s², when all q-exponents allow it.
pub fn halve_q(f: &ScalarFrac) -> Result<ScalarFrac, RingError> {
    let parity = |s: &Scalar| -> Option<i32> {
        let mut it = s.terms().iter().map(|(m, _)| m.exp(Var::Q).rem_euclid(2));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    };
    if f.is_zero() {
        return Ok(ScalarFrac::zero());
    }
    let (Some(a), Some(b)) = (parity(f.num()), parity(f.den())) else {
        return Err(RingError::NotPolynomial(format!(
            "{f} is not a function of s²"
        )));
    };
    if a != b {
        return Err(RingError::NotPolynomial(format!(
            "{f} is not a function of s²"
        )));
    }
    let half = |s: &Scalar| s.map_exps(|[e, v, x]| [(e - a) / 2, v, x]);
    ScalarFrac::new(half(f.num()), half(f.den()))
}

/// BMW q-dimension by Wenzl's formula, with ν given in q (it may involve the
/// variable v). Computed in s = q^{1/2} and returned in q.
pub fn qdim_bmw(p: &Partition, nu: &Scalar) -> Result<ScalarFrac, RError> {
    let w = towers::wenzl_qdim(p, &nu.q_power_map(2))?;
    Ok(halve_q(&w)?)
}

/// The explicit SO_q(N) product form, whose q-numbers are read in q^{1/2}.
pub fn qdim_so(p: &Partition, n: i32) -> Result<ScalarFrac, RError> {
    Ok(halve_q(&towers::so_qdim_printed(p, n))?)
}

/// ν = q^{1-N} of SO_q(N).
pub fn so_nu(n: i32) -> Scalar {
    Scalar::q(1 - n)
}

/// q-antisymmetrizer A_{1→m} on V^⊗m.
pub fn antisymmetrizer(r: &RData, m: usize) -> Result<TensorOp, RError> {
    let t = TowerRep::new(r, m);
    Ok(symmetrizers(&t, SymKind::Antisym, m)?.pop().unwrap())
}

/// A_{1→N+1} = 0 and rank A_{1→N} = 1 for a Hecke R-matrix of height N.
pub fn check_height(r: &RData, height: usize) -> Report {
    let mut rep = Report::new();
    match antisymmetrizer(r, height + 1) {
        Ok(a) => rep.push(format!("A(1→{}) = 0", height + 1), a.is_zero(), ""),
        Err(e) => rep.push(format!("A(1→{}) = 0", height + 1), false, e.to_string()),
    }
    match antisymmetrizer(r, height) {
        Ok(a) => {
            let k = a.rank();
            rep.push(
                format!("rank A(1→{height}) = 1"),
                k == 1,
                format!("rank {k}"),
            );
        }
        Err(e) => rep.push(format!("rank A(1→{height}) = 1"), false, e.to_string()),
    }
    rep
}

/// The quantum matrix T whose determinant is taken.
#[derive(Clone, Debug)]
pub enum QMatrix {
    /// Numeric N×N entries.
    Numeric(Vec<Vec<ScalarFrac>>),
    /// (T^i_j)^k_l = R^{ik}_{jl}
    RPlus,
    /// (T^i_j)^k_l = (R^{-1})^{ki}_{lj}
    RMinus,
}

/// R = P Ř.
pub fn r_matrix(r: &RData) -> TensorOp {
    TensorOp::permutation(r.n).mul(&r.rhat)
}

/// det_q(T) = Tr_{1..N}(A_{1→N} T_1 … T_N). For the R-representations the
/// result must be a multiple of the identity on the representation space.
pub fn qdeterminant(r: &RData, t: &QMatrix) -> Result<ScalarFrac, RError> {
    if r.kind() != Kind::Hecke {
        return Err(RError::NotHecke);
    }
    let n = r.n;
    let a = antisymmetrizer(r, n)?;
    match t {
        QMatrix::Numeric(m) => {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(RError::InvalidFamily(format!("expected a {n}×{n} matrix")));
            }
            let tm = TensorOp::from_fn(n, 1, |i, j| m[i[0]][j[0]].clone());
            let mut prod = a;
            for k in 1..=n {
                prod = prod.mul(&tm.embed(k, n)?);
            }
            Ok(prod.full_trace(None))
        }
        QMatrix::RPlus | QMatrix::RMinus => {
            let rm = r_matrix(r);
            let rinv = rm.inverse()?;
            let mut prod = a.kron(&TensorOp::identity(n, 1));
            for k in 1..=n {
                let f = match t {
                    QMatrix::RPlus => rm.embed_sites(&[k, n + 1], n + 1)?,
                    _ => rinv.embed_sites(&[n + 1, k], n + 1)?,
                };
                prod = prod.mul(&f);
            }
            let sites: Vec<usize> = (1..=n).collect();
            let out = prod.trace_sites(&sites, None)?;
            out.as_scalar_identity().ok_or_else(|| {
                RError::InvalidFamily("det_q is not a multiple of the identity".into())
            })
        }
    }
}

/// ε-tensors with A_{1→N} = ℰ^⟩ ℰ_⟨ and ℰ_⟨(1,2,…,N) = 1.
#[derive(Clone, Debug)]
pub struct EpsTensors {
    /// ℰ^⟩, indexed by the encoded multi-index
    pub upper: Vec<ScalarFrac>,
    /// ℰ_⟨
    pub lower: Vec<ScalarFrac>,
}

pub fn eps_tensors(r: &RData) -> Result<EpsTensors, RError> {
    let n = r.n;
    let a = antisymmetrizer(r, n)?;
    if a.rank() != 1 {
        return Err(RError::InvalidFamily(format!(
            "rank A(1→{n}) = {}",
            a.rank()
        )));
    }
    let c0 = encode(&(0..n).collect::<Vec<_>>(), n);
    let dim = a.dim();
    let upper: Vec<ScalarFrac> = (0..dim).map(|i| a.get(i, c0)).collect();
    let r0 = (0..dim)
        .find(|&i| !upper[i].is_zero())
        .ok_or(RError::NotSkewInvertible)?;
    let inv = upper[r0].inv()?;
    let lower = (0..dim).map(|j| a.get(r0, j).mul(&inv)).collect();
    Ok(EpsTensors { upper, lower })
}

impl EpsTensors {
    /// ℰ_⟨ ℰ^⟩
    pub fn pairing(&self) -> ScalarFrac {
        self.lower
            .iter()
            .zip(&self.upper)
            .fold(ScalarFrac::zero(), |s, (a, b)| s.add(&a.mul(b)))
    }
}

/// Factorization, pairing and ℰ_⟨(Ř_k + q^-1) = 0 = (Ř_k + q^-1)ℰ^⟩.
pub fn check_eps(r: &RData) -> Report {
    let mut rep = Report::new();
    let n = r.n;
    let e = match eps_tensors(r) {
        Ok(e) => e,
        Err(err) => {
            rep.push("ε-tensors", false, err.to_string());
            return rep;
        }
    };
    let a = antisymmetrizer(r, n).unwrap();
    let dim = e.upper.len();
    let outer = TensorOp::from_entries(
        n,
        n,
        (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, e.upper[i].mul(&e.lower[j]))),
    );
    rep.push("A(1→N) = ℰ^⟩ ℰ_⟨", outer == a, "");
    rep.push("ℰ_⟨ ℰ^⟩ = 1", e.pairing().is_one(), "");
    let qi = sf(Scalar::q(-1));
    let mut ok = true;
    for k in 1..n {
        let p = r.sigma(k, n).add_identity(&qi);
        let row = TensorOp::from_entries(n, n, (0..dim).map(|j| (0, j, e.lower[j].clone())));
        let col = TensorOp::from_entries(n, n, (0..dim).map(|i| (i, 0, e.upper[i].clone())));
        ok &= row.mul(&p).is_zero() && p.mul(&col).is_zero();
    }
    rep.push("ℰ_⟨(Ř_k + q^-1) = 0 = (Ř_k + q^-1)ℰ^⟩", ok, "");
    let part: Vec<usize> = (2..=n).collect();
    let tr = a.trace_sites(&part, None).map(|x| x.ratio_to(&r.d.as_op()));
    let expect = sf(Scalar::q(n as i32))
        .div(&sf(crate::ring::q_number(n as i32)))
        .ok();
    let ok = matches!((&tr, &expect), (Ok(Some(c)), Some(e)) if c == e);
    rep.push("Tr_{2..N} A(1→N) = q^N/[N] D", ok, "");
    rep
}

/// A path of the Hecke graph ending at Λ: the row-reading tableau.
pub fn row_tableau_path(p: &Partition) -> Path {
    let mut contents = Vec::new();
    for (i, &len) in p.rows().iter().enumerate() {
        for j in 0..len {
            contents.push(towers::Content::Plain(j as i32 - i as i32));
        }
    }
    Path::from_contents(Algebra::Hecke, &contents).expect("row reading is a standard tableau")
}

/// χ_Λ(Y) = Tr_{D(1..M)}(Y_1 … Y_M E) for a diagonal Y and the idempotent of
/// the given tableau path (the row-reading tableau by default).
pub fn character(
    r: &RData,
    diag: &[ScalarFrac],
    p: &Partition,
    path: Option<&Path>,
) -> Result<ScalarFrac, RError> {
    if r.kind() != Kind::Hecke {
        return Err(RError::NotHecke);
    }
    if diag.len() != r.n {
        return Err(RError::InvalidFamily(format!(
            "{} diagonal values for N = {}",
            diag.len(),
            r.n
        )));
    }
    let m = p.size();
    if m == 0 {
        return Ok(ScalarFrac::one());
    }
    let default = row_tableau_path(p);
    let path = path.unwrap_or(&default);
    if path.end() != p {
        return Err(RError::InvalidFamily(format!(
            "path {path} does not end at {p}"
        )));
    }
    let t = TowerRep::new(r, m);
    let ys = jm_elements(&t);
    let e = idempotent_from_path(&t, &ys, path)?;
    let w = SiteWeights::new(r.d.diag.iter().zip(diag).map(|(d, y)| d.mul(y)).collect());
    Ok(e.full_trace(Some(&w)))
}

/// 𝒯r(E) = qdim for every path of size ≤ `max` on a GL_q(d) tower.
pub fn check_hecke_qdims(r: &RData, max: usize) -> Report {
    let mut rep = Report::new();
    let d = r.n as i32;
    let g = BranchGraph::build(Algebra::Hecke, max);
    for n in 1..=max {
        let t = TowerRep::new(r, n);
        let ys = jm_elements(&t);
        let mut ok = true;
        let mut detail = String::new();
        for path in g.paths(n) {
            let e = idempotent_from_path(&t, &ys, &path);
            let lhs = e.map(|e| ocneanu_trace(&t, &e));
            let rhs = qdim_hecke(path.end(), d);
            if !matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b) {
                ok = false;
                detail = format!("path {path}");
            }
        }
        rep.push(format!("𝒯r(E) = hook qdim, d={d}, level {n}"), ok, detail);
    }
    rep
}

/// 𝒯r(E) = ν^n · qdim_bmw(Λ) for every path of level ≤ `max` on a BMW tower.
pub fn check_bmw_qdims(r: &RData, max: usize) -> Report {
    let mut rep = Report::new();
    let Some(nu) = r.nu.clone() else {
        rep.push("BMW q-dimensions", false, "not a BMW family");
        return rep;
    };
    let g = BranchGraph::build(Algebra::Bmw, max);
    for n in 1..=max {
        let t = TowerRep::new(r, n);
        let ys = jm_elements(&t);
        let nun = sf(nu.pow(n as u32));
        let mut ok = true;
        let mut detail = String::new();
        for path in g.paths(n) {
            let lhs = idempotent_from_path(&t, &ys, &path).map(|e| ocneanu_trace(&t, &e));
            let rhs = qdim_bmw(path.end(), &nu).map(|w| w.mul(&nun));
            if !matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b) {
                ok = false;
                detail = format!("path {path}");
            }
        }
        rep.push(format!("𝒯r(E) = ν^n Wenzl qdim, level {n}"), ok, detail);
    }
    rep
}
