//! Sparse exact operators on V_N^{⊗n}.
//!
//! Entries are Laurent polynomials over one shared denominator, which keeps
//! products and sums free of per-entry gcd work. Multi-indices are encoded
//! row-major with site 1 most significant; sites are numbered from 1.

mod linalg;
mod serial;

pub use linalg::{solve, solve_dense, FracMatrix};

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::ring::{gcd, Acc, Coeff, RingError, Scalar, ScalarFrac, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("site {site} out of range for {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("singular matrix")]
    Singular,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("malformed operator data: {0}")]
    Malformed(String),
}

/// Diagonal single-site weights such as the quantum-trace matrices D and Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiteWeights {
    pub diag: Vec<ScalarFrac>,
}

impl SiteWeights {
    pub fn new(diag: Vec<ScalarFrac>) -> SiteWeights {
        SiteWeights { diag }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn trace(&self) -> ScalarFrac {
        self.diag.iter().fold(ScalarFrac::zero(), |a, b| a.add(b))
    }

    pub fn product(&self) -> ScalarFrac {
        self.diag.iter().fold(ScalarFrac::one(), |a, b| a.mul(b))
    }

    pub fn inverse(&self) -> Result<SiteWeights, RingError> {
        Ok(SiteWeights {
            diag: self
                .diag
                .iter()
                .map(|d| d.inv())
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn as_op(&self) -> TensorOp {
        let n = self.dim();
        TensorOp::from_entries(
            n,
            1,
            self.diag.iter().enumerate().map(|(i, d)| (i, i, d.clone())),
        )
    }
}

/// Sparse operator: `rows[r]` holds `(col, numerator)` sorted by column, and
/// every entry is `numerator / den`.
#[derive(Clone)]
pub struct TensorOp {
    n: usize,
    sites: usize,
    rows: Vec<Vec<(u32, Scalar)>>,
    den: Scalar,
}

const PAR_ROWS: usize = 32;

impl TensorOp {
    pub fn zero(n: usize, sites: usize) -> TensorOp {
        let dim = n.pow(sites as u32);
        TensorOp {
            n,
            sites,
            rows: vec![Vec::new(); dim],
            den: Scalar::one(),
        }
    }

    pub fn identity(n: usize, sites: usize) -> TensorOp {
        let dim = n.pow(sites as u32);
        let rows = (0..dim).map(|i| vec![(i as u32, Scalar::one())]).collect();
        TensorOp {
            n,
            sites,
            rows,
            den: Scalar::one(),
        }
    }

    /// Builds from (row, col, value) triples; repeated positions are summed.
    pub fn from_entries<I>(n: usize, sites: usize, it: I) -> TensorOp
    where
        I: IntoIterator<Item = (usize, usize, ScalarFrac)>,
    {
        let dim = n.pow(sites as u32);
        let items: Vec<_> = it.into_iter().filter(|e| !e.2.is_zero()).collect();
        let mut den = Scalar::one();
        for (_, _, v) in &items {
            den = lcm(&den, v.den());
        }
        let mut acc: Vec<BTreeMap<u32, Scalar>> = vec![BTreeMap::new(); dim];
        for (r, c, v) in items {
            assert!(r < dim && c < dim, "index out of range");
            let f = den.exact_div(v.den()).expect("lcm");
            let e = v.num().mul(&f);
            let slot = acc[r].entry(c as u32).or_insert_with(Scalar::zero);
            *slot = slot.add(&e);
        }
        let rows = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        let mut t = TensorOp {
            n,
            sites,
            rows,
            den,
        };
        t.reduce();
        t
    }

    /// Builds an operator entry by entry from digit tuples.
    pub fn from_fn<F>(n: usize, sites: usize, f: F) -> TensorOp
    where
        F: Fn(&[usize], &[usize]) -> ScalarFrac,
    {
        let dim = n.pow(sites as u32);
        let mut items = Vec::new();
        for r in 0..dim {
            let rd = digits(r, n, sites);
            for c in 0..dim {
                let v = f(&rd, &digits(c, n, sites));
                if !v.is_zero() {
                    items.push((r, c, v));
                }
            }
        }
        TensorOp::from_entries(n, sites, items)
    }

    /// The single-site matrix unit e_ij (indices from 1).
    pub fn unit(n: usize, i: usize, j: usize) -> TensorOp {
        TensorOp::from_entries(n, 1, [(i - 1, j - 1, ScalarFrac::one())])
    }

    /// The permutation P on V ⊗ V.
    pub fn permutation(n: usize) -> TensorOp {
        TensorOp::from_fn(n, 2, |r, c| {
            if r[0] == c[1] && r[1] == c[0] {
                ScalarFrac::one()
            } else {
                ScalarFrac::zero()
            }
        })
    }

    pub fn local_dim(&self) -> usize {
        self.n
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn den(&self) -> &Scalar {
        &self.den
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, r: usize, c: usize) -> ScalarFrac {
        match self.rows[r].binary_search_by_key(&(c as u32), |e| e.0) {
            Ok(k) => frac(&self.rows[r][k].1, &self.den),
            Err(_) => ScalarFrac::zero(),
        }
    }

    /// Entry addressed by digit tuples (0-based).
    pub fn get_digits(&self, r: &[usize], c: &[usize]) -> ScalarFrac {
        self.get(encode(r, self.n), encode(c, self.n))
    }

    /// Nonzero entries sorted by (row, col).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, ScalarFrac)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            row.iter()
                .map(move |(c, v)| (r, *c as usize, frac(v, &self.den)))
        })
    }

    /// Divides the common denominator by its gcd with all entries and puts it
    /// in canonical form.
    pub fn reduce(&mut self) {
        if self.is_zero() {
            self.den = Scalar::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        if let Some((m, c)) = self.den.as_monomial() {
            let inv = c.inv();
            let mi = m.inv();
            for row in &mut self.rows {
                for e in row.iter_mut() {
                    e.1 = e.1.mul_mono(mi).scale(&inv);
                }
            }
            self.den = Scalar::one();
            return;
        }
        let mut g = self.den.clone();
        'outer: for row in &self.rows {
            for (_, v) in row {
                if g.len() == 1 {
                    break 'outer;
                }
                g = gcd(&g, v);
            }
        }
        if g.len() > 1 {
            self.den = self.den.exact_div(&g).expect("gcd divides");
            for row in &mut self.rows {
                for e in row.iter_mut() {
                    e.1 = e.1.exact_div(&g).expect("gcd divides");
                }
            }
        }
        // move the unit part of den into the entries
        let f = ScalarFrac::new(Scalar::one(), self.den.clone()).expect("nonzero");
        let unit = f.num().clone();
        let canon = f.den().clone();
        if !unit.is_one() {
            for row in &mut self.rows {
                for e in row.iter_mut() {
                    e.1 = e.1.mul(&unit);
                }
            }
        }
        self.den = canon;
    }

    fn check_shape(&self, o: &TensorOp) {
        assert!(
            self.n == o.n && self.sites == o.sites,
            "shape mismatch: N={} n={} vs N={} n={}",
            self.n,
            self.sites,
            o.n,
            o.sites
        );
    }

    fn lin_comb(&self, a: &Scalar, o: &TensorOp, b: &Scalar, den: Scalar) -> TensorOp {
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(x, y)| merge_rows(x, a, y, b))
            .collect();
        let mut t = TensorOp {
            n: self.n,
            sites: self.sites,
            rows,
            den,
        };
        t.reduce();
        t
    }

    pub fn add(&self, o: &TensorOp) -> TensorOp {
        self.check_shape(o);
        if self.den == o.den {
            return self.lin_comb(&Scalar::one(), o, &Scalar::one(), self.den.clone());
        }
        let l = lcm(&self.den, &o.den);
        let a = l.exact_div(&self.den).unwrap();
        let b = l.exact_div(&o.den).unwrap();
        self.lin_comb(&a, o, &b, l)
    }

    pub fn sub(&self, o: &TensorOp) -> TensorOp {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TensorOp {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, v.neg())).collect())
            .collect();
        TensorOp {
            n: self.n,
            sites: self.sites,
            rows,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, s: &ScalarFrac) -> TensorOp {
        if s.is_zero() {
            return TensorOp::zero(self.n, self.sites);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, v.mul(s.num()))).collect())
            .collect();
        let mut t = TensorOp {
            n: self.n,
            sites: self.sites,
            rows,
            den: self.den.mul(s.den()),
        };
        t.reduce();
        t
    }

    pub fn scale_scalar(&self, s: &Scalar) -> TensorOp {
        self.scale(&ScalarFrac::from(s.clone()))
    }

    /// self + s·1
    pub fn add_identity(&self, s: &ScalarFrac) -> TensorOp {
        self.add(&TensorOp::identity(self.n, self.sites).scale(s))
    }

    /// Matrix product `self · o`.
    pub fn mul(&self, o: &TensorOp) -> TensorOp {
        self.check_shape(o);
        let dim = self.dim();
        let row_fn = |row: &Vec<(u32, Scalar)>| -> Vec<(u32, Scalar)> {
            if row.is_empty() {
                return Vec::new();
            }
            let mut slots: BTreeMap<u32, Acc> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &o.rows[*k as usize] {
                    slots.entry(*c).or_default().add_product(a, b);
                }
            }
            slots
                .into_iter()
                .filter_map(|(c, mut acc)| {
                    let v = acc.finish();
                    (!v.is_zero()).then_some((c, v))
                })
                .collect()
        };
        let rows: Vec<_> = if dim >= PAR_ROWS && self.nnz() > 4 * dim {
            self.rows.par_iter().map(row_fn).collect()
        } else {
            self.rows.iter().map(row_fn).collect()
        };
        let mut t = TensorOp {
            n: self.n,
            sites: self.sites,
            rows,
            den: self.den.mul(&o.den),
        };
        t.reduce();
        t
    }

    /// Product of a sequence of operators, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a TensorOp>>(it: I) -> Option<TensorOp> {
        let mut it = it.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, x| acc.mul(x)))
    }

    pub fn commutator(&self, o: &TensorOp) -> TensorOp {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, e: i32) -> Result<TensorOp, TensorError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = TensorOp::identity(self.n, self.sites);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> TensorOp {
        let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.dim()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c as usize].push((r as u32, v.clone()));
            }
        }
        TensorOp {
            n: self.n,
            sites: self.sites,
            rows,
            den: self.den.clone(),
        }
    }

    /// Exact inverse over the fraction field; meant for local operators.
    pub fn inverse(&self) -> Result<TensorOp, TensorError> {
        let m = FracMatrix::from_op(self);
        let inv = m.inverse()?;
        Ok(inv.to_op(self.n, self.sites))
    }

    /// Applies `f` to every digit pair, building a new operator on the same
    /// number of sites by relabeling indices.
    fn relabel<F>(&self, sites: usize, f: F) -> TensorOp
    where
        F: Fn(&[usize], &[usize]) -> (Vec<usize>, Vec<usize>),
    {
        let dim = self.n.pow(sites as u32);
        let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); dim];
        for (r, row) in self.rows.iter().enumerate() {
            let rd = digits(r, self.n, self.sites);
            for (c, v) in row {
                let cd = digits(*c as usize, self.n, self.sites);
                let (nr, nc) = f(&rd, &cd);
                rows[encode(&nr, self.n)].push((encode(&nc, self.n) as u32, v.clone()));
            }
        }
        for r in &mut rows {
            r.sort_by_key(|e| e.0);
        }
        TensorOp {
            n: self.n,
            sites,
            rows,
            den: self.den.clone(),
        }
    }

    /// Transposes the indices of one site (1-based).
    pub fn partial_transpose(&self, site: usize) -> Result<TensorOp, TensorError> {
        self.check_site(site)?;
        let k = site - 1;
        Ok(self.relabel(self.sites, |r, c| {
            let (mut r, mut c) = (r.to_vec(), c.to_vec());
            std::mem::swap(&mut r[k], &mut c[k]);
            (r, c)
        }))
    }

    fn check_site(&self, site: usize) -> Result<(), TensorError> {
        if site == 0 || site > self.sites {
            return Err(TensorError::SiteOutOfRange {
                site,
                sites: self.sites,
            });
        }
        Ok(())
    }

    /// Places this operator on the listed sites (1-based, distinct) of an
    /// n-site space, acting as identity elsewhere. Site `k` of `self` goes
    /// to `at[k]`.
    pub fn embed_sites(&self, at: &[usize], n: usize) -> Result<TensorOp, TensorError> {
        if at.len() != self.sites {
            return Err(TensorError::Dimension(format!(
                "{} target sites for a {}-site operator",
                at.len(),
                self.sites
            )));
        }
        for (i, &s) in at.iter().enumerate() {
            if s == 0 || s > n {
                return Err(TensorError::SiteOutOfRange { site: s, sites: n });
            }
            if at[..i].contains(&s) {
                return Err(TensorError::Dimension("repeated site".into()));
            }
        }
        let rest: Vec<usize> = (1..=n).filter(|s| !at.contains(s)).collect();
        let nd = self.n;
        let dim = nd.pow(n as u32);
        let rest_dim = nd.pow(rest.len() as u32);
        let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); dim];
        let mut full = vec![0usize; n];
        for e in 0..rest_dim {
            let ed = digits(e, nd, rest.len());
            for (k, &s) in rest.iter().enumerate() {
                full[s - 1] = ed[k];
            }
            for (r, row) in self.rows.iter().enumerate() {
                if row.is_empty() {
                    continue;
                }
                let rd = digits(r, nd, self.sites);
                let mut fr = full.clone();
                for (k, &s) in at.iter().enumerate() {
                    fr[s - 1] = rd[k];
                }
                let ri = encode(&fr, nd);
                for (c, v) in row {
                    let cd = digits(*c as usize, nd, self.sites);
                    let mut fc = full.clone();
                    for (k, &s) in at.iter().enumerate() {
                        fc[s - 1] = cd[k];
                    }
                    rows[ri].push((encode(&fc, nd) as u32, v.clone()));
                }
            }
        }
        for r in &mut rows {
            r.sort_by_key(|e| e.0);
        }
        Ok(TensorOp {
            n: nd,
            sites: n,
            rows,
            den: self.den.clone(),
        })
    }

    /// Places this operator on consecutive sites starting at `a` (1-based).
    pub fn embed(&self, a: usize, n: usize) -> Result<TensorOp, TensorError> {
        if a == 0 || a + self.sites - 1 > n {
            return Err(TensorError::SiteOutOfRange { site: a, sites: n });
        }
        let at: Vec<usize> = (a..a + self.sites).collect();
        self.embed_sites(&at, n)
    }

    /// Tensor product `self ⊗ o`.
    pub fn kron(&self, o: &TensorOp) -> TensorOp {
        assert_eq!(self.n, o.n, "local dimension mismatch");
        let od = o.dim();
        let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.dim() * od];
        for (r1, row1) in self.rows.iter().enumerate() {
            for (r2, row2) in o.rows.iter().enumerate() {
                let out = &mut rows[r1 * od + r2];
                for (c1, a) in row1 {
                    for (c2, b) in row2 {
                        out.push(((*c1 as usize * od + *c2 as usize) as u32, a.mul(b)));
                    }
                }
            }
        }
        let mut t = TensorOp {
            n: self.n,
            sites: self.sites + o.sites,
            rows,
            den: self.den.mul(&o.den),
        };
        t.reduce();
        t
    }

    /// Reorders sites: site `k` of `self` becomes site `perm[k]` (1-based).
    pub fn permute_sites(&self, perm: &[usize]) -> Result<TensorOp, TensorError> {
        self.embed_sites(perm, self.sites)
    }

    /// Contracts the listed sites (1-based), each weighted by `w` when given.
    /// The remaining sites keep their relative order.
    pub fn trace_sites(
        &self,
        sites: &[usize],
        w: Option<&SiteWeights>,
    ) -> Result<TensorOp, TensorError> {
        for &s in sites {
            self.check_site(s)?;
        }
        if let Some(w) = w {
            if w.dim() != self.n {
                return Err(TensorError::Dimension("weight size".into()));
            }
        }
        let keep: Vec<usize> = (1..=self.sites).filter(|s| !sites.contains(s)).collect();
        if keep.is_empty() {
            let v = self.full_trace(w);
            return Ok(TensorOp::from_entries(self.n, 0, [(0, 0, v)]));
        }
        // weights as numerators over a common denominator
        let (wnum, wden) = weight_numerators(w, self.n);
        let nd = self.n;
        let mut acc: Vec<BTreeMap<u32, Acc>> = (0..nd.pow(keep.len() as u32))
            .map(|_| BTreeMap::new())
            .collect();
        for (r, row) in self.rows.iter().enumerate() {
            let rd = digits(r, nd, self.sites);
            for (c, v) in row {
                let cd = digits(*c as usize, nd, self.sites);
                if sites.iter().any(|&s| rd[s - 1] != cd[s - 1]) {
                    continue;
                }
                let kr: Vec<usize> = keep.iter().map(|&s| rd[s - 1]).collect();
                let kc: Vec<usize> = keep.iter().map(|&s| cd[s - 1]).collect();
                let slot = acc[encode(&kr, nd)]
                    .entry(encode(&kc, nd) as u32)
                    .or_default();
                match &wnum {
                    None => slot.add(v),
                    Some(wn) => {
                        let mut f = Scalar::one();
                        for &s in sites {
                            f = f.mul(&wn[rd[s - 1]]);
                        }
                        slot.add_product(v, &f);
                    }
                }
            }
        }
        let rows = acc
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .filter_map(|(c, mut a)| {
                        let v = a.finish();
                        (!v.is_zero()).then_some((c, v))
                    })
                    .collect()
            })
            .collect();
        let den = self.den.mul(&wden.pow(sites.len() as u32));
        let mut t = TensorOp {
            n: nd,
            sites: keep.len(),
            rows,
            den,
        };
        t.reduce();
        Ok(t)
    }

    /// Trace over all sites, weighted at every site when `w` is given.
    pub fn full_trace(&self, w: Option<&SiteWeights>) -> ScalarFrac {
        let (wnum, wden) = weight_numerators(w, self.n);
        let mut acc = Acc::new();
        for (r, row) in self.rows.iter().enumerate() {
            if let Ok(k) = row.binary_search_by_key(&(r as u32), |e| e.0) {
                match &wnum {
                    None => acc.add(&row[k].1),
                    Some(wn) => {
                        let f = digits(r, self.n, self.sites)
                            .iter()
                            .fold(Scalar::one(), |a, &d| a.mul(&wn[d]));
                        acc.add_product(&row[k].1, &f);
                    }
                }
            }
        }
        let den = self.den.mul(&wden.pow(self.sites as u32));
        ScalarFrac::new(acc.finish(), den).expect("nonzero denominator")
    }

    /// `Some(c)` when `self = c·1`.
    pub fn as_scalar_identity(&self) -> Option<ScalarFrac> {
        let c = self.get(0, 0);
        if self
            .sub(&TensorOp::identity(self.n, self.sites).scale(&c))
            .is_zero()
        {
            Some(c)
        } else {
            None
        }
    }

    /// `Some(c)` when `self = c·o` with `o` nonzero.
    pub fn ratio_to(&self, o: &TensorOp) -> Option<ScalarFrac> {
        let (r, row) = o.rows.iter().enumerate().find(|(_, r)| !r.is_empty())?;
        let c0 = row[0].0 as usize;
        let c = self.get(r, c0).div(&o.get(r, c0)).ok()?;
        if self.sub(&o.scale(&c)).is_zero() {
            Some(c)
        } else {
            None
        }
    }

    /// Applies a map to every entry value.
    pub fn map_values<F>(&self, f: F) -> Result<TensorOp, RingError>
    where
        F: Fn(&ScalarFrac) -> Result<ScalarFrac, RingError>,
    {
        let mut items = Vec::with_capacity(self.nnz());
        for (r, c, v) in self.entries() {
            items.push((r, c, f(&v)?));
        }
        Ok(TensorOp::from_entries(self.n, self.sites, items))
    }

    /// Substitutes a value for one ring variable in every entry.
    pub fn subs(&self, v: Var, s: &ScalarFrac) -> Result<TensorOp, RingError> {
        if !self.uses(v) {
            return Ok(self.clone());
        }
        self.map_values(|e| e.subs(v, s))
    }

    pub fn subs_const(&self, v: Var, c: &Coeff) -> Result<TensorOp, RingError> {
        self.map_values(|e| e.subs_const(v, c))
    }

    pub fn uses(&self, v: Var) -> bool {
        self.den.uses(v) || self.rows.iter().any(|r| r.iter().any(|e| e.1.uses(v)))
    }

    /// Exact rank over the fraction field.
    pub fn rank(&self) -> usize {
        linalg::bareiss_rank(self.rows.iter().map(|r| r.to_vec()).collect(), self.dim())
    }

    /// Basis of the right kernel over the fraction field.
    pub fn kernel(&self) -> Vec<Vec<ScalarFrac>> {
        FracMatrix::from_op(self).kernel()
    }

    /// Columns of `self` applied to a vector.
    pub fn apply(&self, x: &[ScalarFrac]) -> Vec<ScalarFrac> {
        self.rows
            .iter()
            .map(|row| {
                let mut s = ScalarFrac::zero();
                for (c, v) in row {
                    s = s.add(&x[*c as usize].mul_scalar(v));
                }
                s.mul(&ScalarFrac::new(Scalar::one(), self.den.clone()).unwrap())
            })
            .collect()
    }
}

impl PartialEq for TensorOp {
    fn eq(&self, o: &TensorOp) -> bool {
        if self.n != o.n || self.sites != o.sites {
            return false;
        }
        if self.den == o.den {
            return self.rows == o.rows;
        }
        self.sub(o).is_zero()
    }
}

impl Eq for TensorOp {}

impl fmt::Debug for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "TensorOp(N={}, sites={}, den={})",
            self.n, self.sites, self.den
        )?;
        for (r, c, v) in self.entries() {
            writeln!(f, "  [{r},{c}] {v}")?;
        }
        Ok(())
    }
}

fn frac(num: &Scalar, den: &Scalar) -> ScalarFrac {
    if den.is_one() {
        ScalarFrac::from(num.clone())
    } else {
        ScalarFrac::new(num.clone(), den.clone()).expect("nonzero denominator")
    }
}

fn weight_numerators(w: Option<&SiteWeights>, n: usize) -> (Option<Vec<Scalar>>, Scalar) {
    match w {
        None => (None, Scalar::one()),
        Some(w) => {
            let mut den = Scalar::one();
            for d in &w.diag {
                den = lcm(&den, d.den());
            }
            let nums = (0..n)
                .map(|i| {
                    w.diag[i]
                        .num()
                        .mul(&den.exact_div(w.diag[i].den()).unwrap())
                })
                .collect();
            (Some(nums), den)
        }
    }
}

pub(crate) fn lcm(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() || a == b {
        return a.clone();
    }
    let g = gcd(a, b);
    a.mul(&b.exact_div(&g).expect("gcd divides"))
}

fn merge_rows(
    x: &[(u32, Scalar)],
    a: &Scalar,
    y: &[(u32, Scalar)],
    b: &Scalar,
) -> Vec<(u32, Scalar)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let sx = |v: &Scalar| if a.is_one() { v.clone() } else { v.mul(a) };
    let sy = |v: &Scalar| if b.is_one() { v.clone() } else { v.mul(b) };
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, sx(&x[i].1)));
            i += 1;
        } else if take_y {
            out.push((y[j].0, sy(&y[j].1)));
            j += 1;
        } else {
            let v = sx(&x[i].1).add(&sy(&y[j].1));
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Digits of a row-major index, site 1 first.
pub fn digits(mut idx: usize, n: usize, sites: usize) -> Vec<usize> {
    let mut d = vec![0; sites];
    for k in (0..sites).rev() {
        d[k] = idx % n;
        idx /= n;
    }
    d
}

pub fn encode(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * n + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(s: &str) -> ScalarFrac {
        ScalarFrac::parse(s).unwrap()
    }

    #[test]
    fn permutation_squares_to_one() {
        let p = TensorOp::permutation(3);
        assert_eq!(p.mul(&p), TensorOp::identity(3, 2));
        assert_eq!(TensorOp::permutation(1), TensorOp::identity(1, 2));
    }

    #[test]
    fn embed_identity_and_braid() {
        let id = TensorOp::identity(2, 2);
        assert_eq!(id.embed(1, 3).unwrap(), TensorOp::identity(2, 3));
        let p = TensorOp::permutation(2);
        let p1 = p.embed(1, 3).unwrap();
        let p2 = p.embed(2, 3).unwrap();
        assert_eq!(p1.mul(&p2).mul(&p1), p2.mul(&p1).mul(&p2));
        assert!(p.embed(3, 3).is_err());
    }

    #[test]
    fn common_denominator_cancels() {
        let a = TensorOp::identity(2, 1).scale(&sf("1/(q + 1)"));
        let b = TensorOp::identity(2, 1).scale(&sf("q/(q + 1)"));
        let s = a.add(&b);
        assert_eq!(s, TensorOp::identity(2, 1));
        assert!(s.den().is_one());
    }

    #[test]
    fn traces() {
        let id = TensorOp::identity(2, 3);
        assert_eq!(id.full_trace(None), ScalarFrac::int(8));
        let w = SiteWeights::new(vec![sf("q^-3"), sf("q^-1")]);
        let t = TensorOp::permutation(2)
            .trace_sites(&[2], Some(&w))
            .unwrap();
        assert_eq!(t, w.as_op());
    }

    #[test]
    fn transpose_involution() {
        let p = TensorOp::permutation(2);
        let t = p.partial_transpose(1).unwrap();
        assert_ne!(t, p);
        assert_eq!(t.partial_transpose(1).unwrap(), p);
        assert_eq!(t.rank(), 1);
    }
}
