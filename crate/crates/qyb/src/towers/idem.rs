//! Primitive idempotents from graph paths, intertwiners and matrix units,
//! and the Ocneanu (Markov) trace in the R-matrix representation.

use rayon::prelude::*;

use crate::report::Report;
use crate::ring::{Scalar, ScalarFrac};
use crate::rmatrix::{Kind, RError};
use crate::tensor::TensorOp;

use super::graph::{steps, Algebra, Content, Path};
use super::TowerRep;

fn sf(s: Scalar) -> ScalarFrac {
    ScalarFrac::from(s)
}

pub(crate) fn algebra_of(t: &TowerRep) -> Algebra {
    match t.kind() {
        Kind::Hecke => Algebra::Hecke,
        Kind::Bmw => Algebra::Bmw,
    }
}

/// E(path) = Π_k Π_{c ≠ a_k} (y_k - c)/(a_k - c), where c runs over the
/// colors of the other edges leaving the k-th vertex.
pub fn idempotent_from_path(
    t: &TowerRep,
    ys: &[TensorOp],
    path: &Path,
) -> Result<TensorOp, RError> {
    if path.len() > t.n {
        return Err(RError::InvalidFamily(format!(
            "path of length {} on {} sites",
            path.len(),
            t.n
        )));
    }
    let alg = algebra_of(t);
    let mut e = t.identity();
    for (k, chosen) in path.contents.iter().enumerate() {
        let from = &path.shapes[k];
        let a = sf(t.content_value(*chosen)?);
        for (_, c) in steps(alg, from) {
            if c == *chosen {
                continue;
            }
            let cv = sf(t.content_value(c)?);
            let den = a.sub(&cv);
            if den.is_zero() {
                return Err(RError::RepeatedEigenvalue);
            }
            let f = ys[k].add_identity(&cv.neg()).scale(&den.inv()?);
            e = e.mul(&f);
        }
    }
    Ok(e)
}

/// Σ E = 1, E_a E_b = δ_ab E_a and y_i E = a_i E over all given paths.
pub fn completeness_check(t: &TowerRep, ys: &[TensorOp], paths: &[Path]) -> Report {
    let mut rep = Report::new();
    let built: Vec<Result<TensorOp, RError>> = paths
        .par_iter()
        .map(|p| idempotent_from_path(t, ys, p))
        .collect();
    let mut es = Vec::new();
    for (p, e) in paths.iter().zip(built) {
        match e {
            Ok(e) => es.push(e),
            Err(err) => {
                rep.push(format!("idempotent {p}"), false, err.to_string());
                return rep;
            }
        }
    }
    let n = paths.first().map(|p| p.len()).unwrap_or(0);
    let sum = es
        .iter()
        .fold(TensorOp::zero(t.base.n, t.n), |a, b| a.add(b));
    let nonzero = es.iter().filter(|e| !e.is_zero()).count();
    rep.push(
        format!("Σ E = 1 (level {n})"),
        sum == t.identity(),
        format!(
            "{} paths, {} nonzero in this representation",
            paths.len(),
            nonzero
        ),
    );
    let pairs: Vec<(usize, usize)> = (0..es.len())
        .flat_map(|i| (i..es.len()).map(move |j| (i, j)))
        .collect();
    let ortho = pairs.par_iter().all(|&(i, j)| {
        let p = es[i].mul(&es[j]);
        if i == j {
            p == es[i]
        } else {
            p.is_zero()
        }
    });
    rep.push(format!("E_a E_b = δ_ab E_a (level {n})"), ortho, "");
    let spectra = paths.par_iter().zip(es.par_iter()).all(|(p, e)| {
        p.contents.iter().enumerate().all(|(k, c)| {
            let a = sf(t.content_value(*c).unwrap());
            ys[k].mul(e) == e.scale(&a)
        })
    });
    rep.push(format!("y_i E = a_i E (level {n})"), spectra, "");
    rep
}

/// U_{j+1} = σ_j y_j - y_j σ_j (1-based j).
pub fn intertwiner(t: &TowerRep, ys: &[TensorOp], j: usize) -> TensorOp {
    let s = t.sigma(j);
    s.mul(&ys[j - 1]).sub(&ys[j - 1].mul(s))
}

/// The swapped content string s_j·a, if the swap is allowed
/// (a_j ≠ q^{±2} a_{j+1}).
pub fn swapped_path(path: &Path, j: usize) -> Option<Vec<Content>> {
    let (a, b) = (path.contents[j - 1], path.contents[j]);
    if let (Content::Plain(x), Content::Plain(y)) = (a, b) {
        if (x - y).abs() == 1 {
            return None;
        }
    }
    let mut c = path.contents.clone();
    c.swap(j - 1, j);
    Some(c)
}

/// P(X_{s_j a} | X_a) = U_{j+1} E(a).
pub fn matrix_unit(
    t: &TowerRep,
    ys: &[TensorOp],
    path: &Path,
    j: usize,
) -> Result<TensorOp, RError> {
    if j == 0 || j >= path.len() {
        return Err(RError::InvalidFamily(format!(
            "site {j} out of range for path {path}"
        )));
    }
    if swapped_path(path, j).is_none() {
        return Err(RError::InvalidFamily(format!(
            "a_{j} = q^±2 a_{} on path {path}",
            j + 1
        )));
    }
    let e = idempotent_from_path(t, ys, path)?;
    Ok(intertwiner(t, ys, j).mul(&e))
}

/// Intertwiner relations and the matrix-unit property on every Hecke path.
pub fn check_matrix_units(t: &TowerRep, ys: &[TensorOp], paths: &[Path]) -> Report {
    let mut rep = Report::new();
    let n = t.n;
    let q = |e: i32| sf(Scalar::q(e));
    for j in 1..n {
        let u = intertwiner(t, ys, j);
        let (yj, yj1) = (&ys[j - 1], &ys[j]);
        rep.push(
            format!("U_{} y_{j} = y_{} U_{}", j + 1, j + 1, j + 1),
            u.mul(yj) == yj1.mul(&u) && u.mul(yj1) == yj.mul(&u),
            "",
        );
        let a = yj.scale(&q(1)).sub(&yj1.scale(&q(-1)));
        let b = yj1.scale(&q(1)).sub(&yj.scale(&q(-1)));
        rep.push(
            format!("U_{}² = (q y_j - q^-1 y_j+1)(q y_j+1 - q^-1 y_j)", j + 1),
            u.mul(&u) == a.mul(&b),
            "",
        );
    }
    if algebra_of(t) != Algebra::Hecke {
        return rep;
    }
    let es: Vec<TensorOp> = paths
        .par_iter()
        .map(|p| idempotent_from_path(t, ys, p).unwrap())
        .collect();
    let mut intertwines = true;
    let mut vanish = true;
    for (p, e) in paths.iter().zip(&es) {
        for j in 1..p.len() {
            let u = intertwiner(t, ys, j);
            let ue = u.mul(e);
            match swapped_path(p, j) {
                None => vanish &= ue.is_zero(),
                Some(c) => {
                    let k = paths.iter().position(|x| x.contents == c);
                    intertwines &= match k {
                        Some(k) => ue == es[k].mul(&u),
                        None => false,
                    };
                }
            }
        }
    }
    rep.push("U E(a) = E(s·a) U", intertwines, "");
    rep.push("U E(a) = 0 when a_j = q^±2 a_j+1", vanish, "");
    rep
}

/// 𝒯r = Tr_D(1) … Tr_D(n).
pub fn ocneanu_trace(t: &TowerRep, a: &TensorOp) -> ScalarFrac {
    a.full_trace(Some(&t.base.d))
}

/// 𝒯r(B σ_n) = 𝒯r(B) and 𝒯r(B σ_n^-1) = c 𝒯r(B) with c = 1 - λ Tr D
/// (= q^{-2d} for Hecke, ν² for BMW), for operators B on n = t.n - 1 sites.
pub fn markov_check(t: &TowerRep, bs: &[TensorOp]) -> Report {
    let mut rep = Report::new();
    let n = t.n - 1;
    let d = &t.base.d;
    let c = match t.kind() {
        Kind::Hecke => ScalarFrac::one().sub(&crate::rmatrix::RData::lambda().mul(&t.base.tr_d)),
        Kind::Bmw => sf(t.nu2().unwrap()),
    };
    let mut ok_plus = true;
    let mut ok_minus = true;
    for b in bs {
        let big = b.kron(&TensorOp::identity(t.base.n, 1));
        let tb = b.full_trace(Some(d));
        ok_plus &= big.mul(t.sigma(n)).full_trace(Some(d)) == tb;
        ok_minus &= big.mul(t.sigma_inv(n)).full_trace(Some(d)) == tb.mul(&c);
    }
    rep.push(
        format!("Markov: Tr(B σ_{n}) = Tr(B)"),
        ok_plus,
        format!("{} elements", bs.len()),
    );
    rep.push(
        format!("Markov: Tr(B σ_{n}^-1) = ({c}) Tr(B)"),
        ok_minus,
        "",
    );
    rep
}

/// Tr_{Q(1..n)}(X) = Tr_{D(1..n)}(X) for the given braid elements.
pub fn closure_check(t: &TowerRep, xs: &[TensorOp]) -> Report {
    let mut rep = Report::new();
    let ok = xs
        .iter()
        .all(|x| x.full_trace(Some(&t.base.q)) == x.full_trace(Some(&t.base.d)));
    rep.push(
        "Tr_Q = Tr_D on braid elements",
        ok,
        format!("{} elements", xs.len()),
    );
    rep
}
