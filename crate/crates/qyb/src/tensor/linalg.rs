//! Exact elimination: fraction-free rank on sparse rows and small dense
//! solves over the fraction field.

use crate::ring::{Scalar, ScalarFrac};

use super::{TensorError, TensorOp};

/// Rank by fraction-free (Bareiss) elimination with column skipping. Every
/// intermediate entry is a minor of the input, so the division by the previous
/// pivot is exact.
pub(crate) fn bareiss_rank(rows: Vec<Vec<(u32, Scalar)>>, _ncols: usize) -> usize {
    let mut active: Vec<Vec<(u32, Scalar)>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut prev = Scalar::one();
    let mut rank = 0;
    while !active.is_empty() {
        let col = active.iter().map(|r| r[0].0).min().unwrap();
        let (pi, _) = active
            .iter()
            .enumerate()
            .filter(|(_, r)| r[0].0 == col)
            .min_by_key(|(_, r)| r[0].1.len())
            .unwrap();
        let pivot = active.swap_remove(pi);
        let p = pivot[0].1.clone();
        let step = |row: Vec<(u32, Scalar)>| -> Vec<(u32, Scalar)> {
            let a = if row[0].0 == col {
                Some(row[0].1.clone())
            } else {
                None
            };
            let mut out = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            // row*p - a*pivot, skipping the pivot column
            while i < row.len() || j < pivot.len() {
                let ci = row.get(i).map(|e| e.0).unwrap_or(u32::MAX);
                let cj = match &a {
                    Some(_) => pivot.get(j).map(|e| e.0).unwrap_or(u32::MAX),
                    None => u32::MAX,
                };
                if ci == u32::MAX && cj == u32::MAX {
                    break;
                }
                let (c, v) = if ci < cj {
                    i += 1;
                    (ci, row[i - 1].1.mul(&p))
                } else if cj < ci {
                    j += 1;
                    (cj, pivot[j - 1].1.mul(a.as_ref().unwrap()).neg())
                } else {
                    i += 1;
                    j += 1;
                    (
                        ci,
                        row[i - 1]
                            .1
                            .mul(&p)
                            .sub(&pivot[j - 1].1.mul(a.as_ref().unwrap())),
                    )
                };
                if c == col || v.is_zero() {
                    continue;
                }
                let v = if prev.is_one() {
                    v
                } else {
                    v.exact_div(&prev).expect("Bareiss division")
                };
                out.push((c, v));
            }
            out
        };
        active = if active.len() > 16 {
            use rayon::prelude::*;
            active
                .into_par_iter()
                .map(step)
                .filter(|r| !r.is_empty())
                .collect()
        } else {
            active
                .into_iter()
                .map(step)
                .filter(|r| !r.is_empty())
                .collect()
        };
        prev = p;
        rank += 1;
    }
    rank
}

/// Dense matrix over the fraction field, for small systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<ScalarFrac>>,
}

impl FracMatrix {
    pub fn zeros(rows: usize, cols: usize) -> FracMatrix {
        FracMatrix {
            rows,
            cols,
            data: vec![vec![ScalarFrac::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> FracMatrix {
        let mut m = FracMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = ScalarFrac::one();
        }
        m
    }

    pub fn from_op(op: &TensorOp) -> FracMatrix {
        let d = op.dim();
        let mut m = FracMatrix::zeros(d, d);
        for (r, c, v) in op.entries() {
            m.data[r][c] = v;
        }
        m
    }

    pub fn to_op(&self, n: usize, sites: usize) -> TensorOp {
        let mut items = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    items.push((r, c, v.clone()));
                }
            }
        }
        TensorOp::from_entries(n, sites, items)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self.data[i][c].is_zero())
                .min_by_key(|&i| self.data[i][c].num().len() + self.data[i][c].den().len());
            let Some(pi) = best else { continue };
            self.data.swap(r, pi);
            let inv = self.data[r][c].inv().expect("nonzero pivot");
            for v in self.data[r].iter_mut() {
                if !v.is_zero() {
                    *v = v.mul(&inv);
                }
            }
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        self.data[i][k] = self.data[i][k].sub(&f.mul(pv));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn inverse(&self) -> Result<FracMatrix, TensorError> {
        if self.rows != self.cols {
            return Err(TensorError::Dimension(
                "inverse of a non-square matrix".into(),
            ));
        }
        solve_dense(self, &FracMatrix::identity(self.rows))
    }

    pub fn kernel(&self) -> Vec<Vec<ScalarFrac>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![ScalarFrac::zero(); self.cols];
                v[f] = ScalarFrac::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = m.data[r][f].neg();
                }
                v
            })
            .collect()
    }
}

/// Solves `a · x = b` for square nonsingular `a`.
pub fn solve_dense(a: &FracMatrix, b: &FracMatrix) -> Result<FracMatrix, TensorError> {
    if a.rows != a.cols || b.rows != a.rows {
        return Err(TensorError::Dimension("solve shape".into()));
    }
    let n = a.rows;
    let mut aug = FracMatrix::zeros(n, n + b.cols);
    for i in 0..n {
        for j in 0..n {
            aug.data[i][j] = a.data[i][j].clone();
        }
        for j in 0..b.cols {
            aug.data[i][n + j] = b.data[i][j].clone();
        }
    }
    let pivots = aug.rref();
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(TensorError::Singular);
    }
    let mut x = FracMatrix::zeros(n, b.cols);
    for i in 0..n {
        for j in 0..b.cols {
            x.data[i][j] = aug.data[i][n + j].clone();
        }
    }
    Ok(x)
}

/// Solves `a · X = b` for operators of equal shape.
pub fn solve(a: &TensorOp, b: &TensorOp) -> Result<TensorOp, TensorError> {
    let x = solve_dense(&FracMatrix::from_op(a), &FracMatrix::from_op(b))?;
    Ok(x.to_op(a.local_dim(), a.sites()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let m = TensorOp::from_entries(
            2,
            1,
            [
                (0, 0, ScalarFrac::parse("q").unwrap()),
                (0, 1, ScalarFrac::one()),
                (1, 0, ScalarFrac::one()),
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), TensorOp::identity(2, 1));
        let sing = TensorOp::from_entries(
            2,
            1,
            [
                (0, 0, ScalarFrac::parse("q").unwrap()),
                (0, 1, ScalarFrac::one()),
                (1, 0, ScalarFrac::parse("q^2").unwrap()),
                (1, 1, ScalarFrac::parse("q").unwrap()),
            ],
        );
        assert_eq!(sing.rank(), 1);
        assert!(sing.inverse().is_err());
        let k = sing.kernel();
        assert_eq!(k.len(), 1);
        assert!(sing.apply(&k[0]).iter().all(|v| v.is_zero()));
        assert_eq!(TensorOp::zero(2, 2).rank(), 0);
    }
}
