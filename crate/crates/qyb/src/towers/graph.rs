//! Young diagrams, the Young-Ogievetsky graph of the Hecke tower and the
//! colored oscillating Young graph of the BMW tower, plus q-dimension formulas.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::ring::{q_factorial, q_number, RingError, Scalar, ScalarFrac};

/// Rows of a Young diagram, weakly decreasing, no zero rows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(mut rows: Vec<usize>) -> Partition {
        rows.retain(|&r| r > 0);
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition(rows)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// λ_i for 1-based i (0 beyond the last row).
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let w = self.row(1);
        Partition(
            (1..=w)
                .map(|j| self.0.iter().filter(|&&r| r >= j).count())
                .collect(),
        )
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Nodes (row, col), 1-based.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let t = self.transpose();
        self.row(i) + t.row(j) + 1 - i - j
    }

    /// Addable cells with their contents col - row, top to bottom.
    pub fn addable(&self) -> Vec<(usize, usize, i32)> {
        let mut out = Vec::new();
        for i in 1..=self.height() + 1 {
            let len = self.row(i);
            if i == 1 || self.row(i - 1) > len {
                out.push((i, len + 1, len as i32 + 1 - i as i32));
            }
        }
        out
    }

    /// Removable cells with their contents, top to bottom.
    pub fn removable(&self) -> Vec<(usize, usize, i32)> {
        let mut out = Vec::new();
        for i in 1..=self.height() {
            let len = self.row(i);
            if self.row(i + 1) < len {
                out.push((i, len, len as i32 - i as i32));
            }
        }
        out
    }

    pub fn with_added(&self, row: usize) -> Partition {
        let mut r = self.0.clone();
        if row > r.len() {
            r.push(1);
        } else {
            r[row - 1] += 1;
        }
        Partition(r)
    }

    pub fn with_removed(&self, row: usize) -> Partition {
        let mut r = self.0.clone();
        r[row - 1] -= 1;
        Partition::new(r)
    }

    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Some(Partition::default());
        }
        let rows: Option<Vec<usize>> = s.split(',').map(|x| x.trim().parse().ok()).collect();
        let rows = rows?;
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::new(rows))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A JM eigenvalue: q^{2z} (adding a node of content z) or ν²q^{2z}
/// (removing a node of content -z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Content {
    Plain(i32),
    Nu2(i32),
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Content::Plain(z) => write!(f, "{z}"),
            Content::Nu2(z) => write!(f, "v{z}"),
        }
    }
}

impl Content {
    /// Color label: "q^4", "nu^2 q^-2", "1".
    pub fn label(&self) -> String {
        let qpart = |z: i32| match z {
            0 => String::new(),
            1 => "q^2".into(),
            _ => format!("q^{}", 2 * z),
        };
        match self {
            Content::Plain(0) => "1".into(),
            Content::Plain(z) => qpart(*z),
            Content::Nu2(0) => "nu^2".into(),
            Content::Nu2(z) => format!("nu^2 {}", qpart(*z)),
        }
    }

    pub fn parse(s: &str) -> Option<Content> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('v') {
            rest.trim_start_matches('+').parse().ok().map(Content::Nu2)
        } else {
            s.trim_start_matches('+').parse().ok().map(Content::Plain)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Hecke,
    Bmw,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Level of the source vertex.
    pub level: usize,
    pub from: usize,
    pub to: usize,
    pub color: Content,
}

#[derive(Clone, Debug)]
pub struct BranchGraph {
    pub algebra: Algebra,
    /// levels[k] lists the diagrams at level k, level 0 is ∅.
    pub levels: Vec<Vec<Partition>>,
    pub edges: Vec<Edge>,
}

/// Steps out of a vertex: (target, color).
pub(crate) fn steps(alg: Algebra, p: &Partition) -> Vec<(Partition, Content)> {
    let mut out: Vec<(Partition, Content)> = p
        .addable()
        .into_iter()
        .map(|(i, _, c)| (p.with_added(i), Content::Plain(c)))
        .collect();
    if alg == Algebra::Bmw {
        for (i, _, c) in p.removable() {
            out.push((p.with_removed(i), Content::Nu2(-c)));
        }
    }
    out
}

impl BranchGraph {
    pub fn build(alg: Algebra, levels: usize) -> BranchGraph {
        let mut lv: Vec<Vec<Partition>> = vec![vec![Partition::default()]];
        let mut edges = Vec::new();
        for k in 0..levels {
            let mut next: Vec<Partition> = Vec::new();
            let mut index: BTreeMap<Partition, usize> = BTreeMap::new();
            let mut pending = Vec::new();
            for (fi, p) in lv[k].iter().enumerate() {
                for (t, c) in steps(alg, p) {
                    pending.push((fi, t, c));
                }
            }
            let mut targets: Vec<Partition> = pending.iter().map(|x| x.1.clone()).collect();
            // larger diagrams first, then reverse lexicographic rows
            targets.sort_by(|a, b| b.size().cmp(&a.size()).then(b.cmp(a)));
            targets.dedup();
            for t in targets {
                index.insert(t.clone(), next.len());
                next.push(t);
            }
            for (fi, t, c) in pending {
                edges.push(Edge {
                    level: k,
                    from: fi,
                    to: index[&t],
                    color: c,
                });
            }
            lv.push(next);
        }
        BranchGraph {
            algebra: alg,
            levels: lv,
            edges,
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// All root-to-level-n paths, sorted by content string.
    pub fn paths(&self, n: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut cur = Path {
            contents: vec![],
            shapes: vec![Partition::default()],
        };
        fn rec(g: &BranchGraph, n: usize, cur: &mut Path, out: &mut Vec<Path>) {
            let k = cur.contents.len();
            if k == n {
                out.push(cur.clone());
                return;
            }
            let p = cur.shapes.last().unwrap().clone();
            for (t, c) in steps(g.algebra, &p) {
                cur.contents.push(c);
                cur.shapes.push(t);
                rec(g, n, cur, out);
                cur.contents.pop();
                cur.shapes.pop();
            }
        }
        rec(self, n.min(self.depth()), &mut cur, &mut out);
        out.sort_by(|a, b| a.contents.cmp(&b.contents));
        out
    }

    /// Number of paths ending at each level-n diagram.
    pub fn path_counts(&self, n: usize) -> Vec<(Partition, usize)> {
        let mut m: BTreeMap<Partition, usize> = BTreeMap::new();
        for p in self.paths(n) {
            *m.entry(p.end().clone()).or_default() += 1;
        }
        let mut v: Vec<_> = m.into_iter().collect();
        v.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then(b.0.cmp(&a.0)));
        v
    }

    /// Every vertex has one more outgoing than incoming edge type (Hecke), and the
    /// product of outgoing colors equals the product of incoming ones times the
    /// root color.
    pub fn structural_checks(&self) -> Vec<(String, bool)> {
        let mut out = Vec::new();
        if self.algebra == Algebra::Hecke {
            let mut counts = true;
            let mut balance = true;
            for lvl in &self.levels {
                for p in lvl {
                    let a = p.addable();
                    let r = p.removable();
                    counts &= a.len() == r.len() + 1;
                    let sa: i32 = a.iter().map(|x| x.2).sum();
                    let sr: i32 = r.iter().map(|x| x.2).sum();
                    balance &= sa == sr;
                }
            }
            out.push(("out-degree = in-degree + 1".into(), counts));
            out.push(("color products balance".into(), balance));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph young {\n  node [shape=box];\n");
        for (k, lvl) in self.levels.iter().enumerate() {
            for (i, p) in lvl.iter().enumerate() {
                s.push_str(&format!("  v{k}_{i} [label=\"{p}\"];\n"));
            }
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  v{}_{} -> v{}_{} [label=\"{}\"];\n",
                e.level,
                e.from,
                e.level + 1,
                e.to,
                e.color.label()
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": match self.algebra { Algebra::Hecke => "hecke", Algebra::Bmw => "bmw" },
            "levels": self.levels.iter().map(|l| l.iter().map(|p| p.0.clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| json!({
                "level": e.level, "from": e.from, "to": e.to, "color": e.color.label(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// A path from ∅: its content string and the diagrams visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub contents: Vec<Content>,
    pub shapes: Vec<Partition>,
}

impl Path {
    /// Walks a content string from ∅; fails if a step is not an edge.
    pub fn from_contents(alg: Algebra, contents: &[Content]) -> Result<Path, String> {
        let mut shapes = vec![Partition::default()];
        for (k, c) in contents.iter().enumerate() {
            let p = shapes.last().unwrap();
            let next = steps(alg, p)
                .into_iter()
                .find(|(_, col)| col == c)
                .map(|x| x.0);
            match next {
                Some(t) => shapes.push(t),
                None => return Err(format!("step {} ({c}) is not an edge out of {p}", k + 1)),
            }
        }
        Ok(Path {
            contents: contents.to_vec(),
            shapes,
        })
    }

    pub fn parse(alg: Algebra, s: &str) -> Result<Path, String> {
        let cs: Option<Vec<Content>> = s.split(',').map(Content::parse).collect();
        let cs = cs.ok_or_else(|| format!("cannot parse path {s:?}"))?;
        Path::from_contents(alg, &cs)
    }

    pub fn len(&self) -> usize {
        self.contents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contents.is_empty()
    }

    pub fn end(&self) -> &Partition {
        self.shapes.last().unwrap()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.contents.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Number of standard tableaux of shape λ, by the hook length formula.
pub fn standard_tableaux_count(p: &Partition) -> u128 {
    let n = p.size() as u128;
    let num: u128 = (1..=n).product();
    let den: u128 = p.nodes().map(|(i, j)| p.hook(i, j) as u128).product();
    num / den
}

fn qn(n: i32) -> ScalarFrac {
    ScalarFrac::from(q_number(n))
}

/// q^{-Md} Π [d + col - row]/[hook]
pub fn hook_qdim(p: &Partition, d: i32) -> ScalarFrac {
    let mut v = ScalarFrac::from(Scalar::q(-(p.size() as i32) * d));
    for (i, j) in p.nodes() {
        v = v
            .mul(&qn(d + j as i32 - i as i32))
            .div(&qn(p.hook(i, j) as i32))
            .unwrap();
    }
    v
}

/// The same q-dimension through the transposed partition:
/// q^{-Md} Π_i [d+i-1]!/([d-λ∨_i+i-1]! [λ∨_i+k-i]!) Π_{i<j} [λ∨_i - λ∨_j + j - i].
pub fn hook_qdim_transposed(p: &Partition, d: i32) -> ScalarFrac {
    let t = p.transpose();
    let k = t.height() as i32;
    let mut v = ScalarFrac::from(Scalar::q(-(p.size() as i32) * d));
    let fact = |n: i32| -> Option<ScalarFrac> {
        if n < 0 {
            None
        } else {
            Some(ScalarFrac::from(q_factorial(n as u32)))
        }
    };
    for i in 1..=k {
        let li = t.row(i as usize) as i32;
        let num = match fact(d + i - 1) {
            Some(x) => x,
            None => return ScalarFrac::zero(),
        };
        // 1/[negative]! is read as 0
        let Some(d1) = fact(d - li + i - 1) else {
            return ScalarFrac::zero();
        };
        let d2 = fact(li + k - i).unwrap();
        v = v.mul(&num).div(&d1.mul(&d2)).unwrap();
        for j in i + 1..=k {
            let lj = t.row(j as usize) as i32;
            v = v.mul(&qn(li - lj + j - i));
        }
    }
    v
}

/// Wenzl's q-dimension for BMW, in the variable s with s² = q: returned as a
/// fraction in the ring variable q standing for s. `nu_s` is ν written in s.
pub fn wenzl_qdim(p: &Partition, nu_s: &Scalar) -> Result<ScalarFrac, RingError> {
    let t = p.transpose();
    let lam = |i: usize| p.row(i) as i32;
    let lamv = |i: usize| t.row(i) as i32;
    let s = |e: i32| ScalarFrac::from(Scalar::q(e));
    let nu = ScalarFrac::from(nu_s.clone());
    let nu_inv = nu.inv()?;
    let mut v = ScalarFrac::one();
    for (i, j) in p.nodes() {
        let h = p.hook(i, j) as i32;
        let (ii, jj) = (i as i32, j as i32);
        let f = lam(i) + lam(j) - ii - jj + 1;
        let fv = -lamv(i) - lamv(j) + ii + jj - 1;
        let d = if i <= j { f } else { fv };
        let dp = if i < j { f } else { fv };
        let n1 = s(d).sub(&nu.mul(&s(-d)));
        let d1 = s(h).sub(&s(-h));
        let n2 = nu_inv.mul(&s(dp)).add(&s(-dp));
        let d2 = s(h).add(&s(-h));
        v = v.mul(&n1).mul(&n2).div(&d1.mul(&d2))?;
    }
    Ok(v)
}

/// The explicit SO_q(N) product form of the BMW q-dimension. Its q-numbers
/// are in q^{1/2}, so the ring variable q stands for s here as in
/// `wenzl_qdim`.
pub fn so_qdim_printed(p: &Partition, n: i32) -> ScalarFrac {
    let t = p.transpose();
    let k = t.height() as i32;
    let fact = |x: i32| {
        if x < 0 {
            None
        } else {
            Some(ScalarFrac::from(q_factorial(x as u32)))
        }
    };
    let mut v = ScalarFrac::one();
    for i in 1..=k {
        let li = t.row(i as usize) as i32;
        let (Some(a), Some(b), Some(c)) = (
            fact(n + 2 * (i - 1)),
            fact(li + k - i),
            fact(n - li + k - 2 + i),
        ) else {
            return ScalarFrac::zero();
        };
        v = v.mul(&a).div(&b.mul(&c)).unwrap();
        for j in i + 1..=k {
            let lj = t.row(j as usize) as i32;
            v = v
                .mul(&qn(li - lj + j - i))
                .mul(&qn(n - li - lj + i + j - 2));
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corners() {
        let p = Partition::new(vec![2, 1]);
        assert_eq!(
            p.addable().iter().map(|x| x.2).collect::<Vec<_>>(),
            vec![2, 0, -2]
        );
        assert_eq!(
            p.removable().iter().map(|x| x.2).collect::<Vec<_>>(),
            vec![1, -1]
        );
        assert_eq!(p.transpose(), Partition::new(vec![2, 1]));
    }

    #[test]
    fn hecke_level3_paths() {
        let g = BranchGraph::build(Algebra::Hecke, 3);
        let ps: Vec<String> = g.paths(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(ps, vec!["0,-1,-2", "0,-1,1", "0,1,-1", "0,1,2"]);
    }
}
