// Independent reference computations checked against the library.

use num_rational::Ratio;
use qyb::baxter::{baxterize, rational_limit, Branch, RationalKind};
use qyb::chains::{commutativity_check, transfer_matrix, ChainSpec};
use qyb::knots::{normalized_invariant, BraidWord};
use qyb::qcombin::{character, qdim_hecke, qdim_so};
use qyb::ring::{Coeff, Scalar, ScalarFrac};
use qyb::rmatrix::{Family, RData};
use qyb::tensor::TensorOp;
use qyb::towers::{standard_tableaux_count, Algebra, BranchGraph, Content, Partition};

type Q = Ratio<i64>;

fn at_one(s: &ScalarFrac) -> Coeff {
    let v = s.at_q(&Coeff::int(1)).expect("no pole at q = 1");
    v.as_scalar()
        .and_then(|s| s.as_constant())
        .unwrap_or(Coeff::int(0))
}

fn part(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

// semistandard tableaux of shape p with entries < n, weighted by Π x_entry
fn schur(p: &[usize], x: &[i64]) -> i64 {
    let cells: Vec<(usize, usize)> = p
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l).map(move |j| (i, j)))
        .collect();
    let mut fill = vec![vec![0usize; p.first().copied().unwrap_or(0)]; p.len()];
    fn go(k: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, x: &[i64]) -> i64 {
        if k == cells.len() {
            return cells.iter().map(|&(i, j)| x[fill[i][j]]).product();
        }
        let (i, j) = cells[k];
        let lo = if j > 0 { fill[i][j - 1] } else { 0 };
        let lo = if i > 0 {
            lo.max(fill[i - 1][j] + 1)
        } else {
            lo
        };
        let mut s = 0;
        for v in lo..x.len() {
            fill[i][j] = v;
            s += go(k + 1, cells, fill, x);
        }
        s
    }
    go(0, &cells, &mut fill, x)
}

#[test]
fn ssyt_oracle_is_sane() {
    assert_eq!(schur(&[1], &[2, 3]), 5);
    assert_eq!(schur(&[2], &[2, 3]), 19);
    assert_eq!(schur(&[1, 1], &[2, 3]), 6);
    assert_eq!(schur(&[2, 1], &[2, 3]), 30);
    assert_eq!(schur(&[1, 1, 1], &[2, 3]), 0);
}

#[test]
fn characters_at_q_one_are_schur_polynomials() {
    let cases: [(usize, &[i64], &[&str]); 2] = [
        (2, &[2, 3], &["1", "2", "1,1", "2,1", "3"]),
        (3, &[2, 3, 5], &["1", "2", "1,1", "2,1"]),
    ];
    for (n, x, shapes) in cases {
        let r = RData::build(&Family::GLq { n }).unwrap();
        let diag: Vec<ScalarFrac> = x.iter().map(|&v| ScalarFrac::int(v)).collect();
        for s in shapes {
            let p = part(s);
            let chi = character(&r, &diag, &p, None).unwrap();
            assert_eq!(
                at_one(&chi),
                Coeff::int(schur(p.rows(), x)),
                "GLq({n}) shape {s}"
            );
        }
    }
}

#[test]
fn frozen_characters() {
    let r = RData::build(&Family::GLq { n: 3 }).unwrap();
    let diag: Vec<ScalarFrac> = [2, 3, 5].iter().map(|&v| ScalarFrac::int(v)).collect();
    let got: Vec<Coeff> = ["1", "2", "1,1", "2,1"]
        .iter()
        .map(|s| at_one(&character(&r, &diag, &part(s), None).unwrap()))
        .collect();
    assert_eq!(got, [10, 69, 31, 280].map(Coeff::int));
}

fn count_tableaux(p: &[usize]) -> u128 {
    if p.iter().all(|&l| l == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..p.len() {
        let corner = p[i] > 0 && (i + 1 == p.len() || p[i + 1] < p[i]);
        if corner {
            let mut q = p.to_vec();
            q[i] -= 1;
            total += count_tableaux(&q);
        }
    }
    total
}

#[test]
fn hook_length_counts_match_corner_recursion() {
    let g = BranchGraph::build(Algebra::Hecke, 6);
    for n in 1..=6 {
        for (p, c) in g.path_counts(n) {
            let brute = count_tableaux(p.rows());
            assert_eq!(standard_tableaux_count(&p), brute, "{p}");
            assert_eq!(c as u128, brute, "{p}");
        }
    }
}

#[test]
fn classical_dimensions() {
    // q → 1 of the hook formula counts SSYT with entries in 1..=d
    for d in 2..=4 {
        for s in ["1", "2", "1,1", "2,1", "3,1", "2,2"] {
            let p = part(s);
            let q = qdim_hecke(&p, d as i32).unwrap();
            assert_eq!(
                at_one(&q),
                Coeff::int(schur(p.rows(), &vec![1; d])),
                "d={d} {s}"
            );
        }
    }
    for k in 1..=3 {
        let p = Partition::new(vec![k]);
        assert_eq!(
            at_one(&qdim_so(&p, 3).unwrap()),
            Coeff::int(2 * k as i64 + 1)
        );
    }
}

// HOMFLY skein: a P(L+) - a^-1 P(L-) = z P(L0), P(unknot) = 1
fn torus2_homfly(k: usize, d: i32) -> ScalarFrac {
    let a = ScalarFrac::new(Scalar::q(d), Scalar::one()).unwrap();
    let ai = a.inv().unwrap();
    let z = ScalarFrac::new(Scalar::lambda(), Scalar::one()).unwrap();
    let mut prev = a.sub(&ai).div(&z).unwrap();
    let mut cur = ScalarFrac::one();
    for _ in 1..k {
        let next = ai.mul(&ai).mul(&prev).add(&ai.mul(&z).mul(&cur));
        prev = cur;
        cur = next;
    }
    cur
}

#[test]
fn two_strand_torus_links_follow_the_skein_relation() {
    for d in 2..=3 {
        let r = RData::build(&Family::GLq { n: d }).unwrap();
        for k in 1..=6 {
            let b = BraidWord::new(2, vec![1; k]).unwrap();
            assert_eq!(
                normalized_invariant(&b, &r).unwrap(),
                torus2_homfly(k, d as i32),
                "d={d} k={k}"
            );
        }
    }
}

#[test]
fn frozen_trefoils() {
    let b = BraidWord::parse(2, "1 1 1").unwrap();
    let r2 = RData::build(&Family::GLq { n: 2 }).unwrap();
    let r3 = RData::build(&Family::GLq { n: 3 }).unwrap();
    assert_eq!(
        normalized_invariant(&b, &r2).unwrap(),
        ScalarFrac::parse("q^-2 + q^-6 - q^-8").unwrap()
    );
    assert_eq!(
        normalized_invariant(&b, &r3).unwrap(),
        ScalarFrac::parse("q^-4 + q^-8 - q^-12").unwrap()
    );
    let alt = BraidWord::parse(3, "1 2 1 2").unwrap();
    assert_eq!(
        normalized_invariant(&alt, &r2).unwrap(),
        normalized_invariant(&b, &r2).unwrap()
    );
}

// t(θ) = Tr_a R_1a R_2a … R_Ma with R = P + θ, by explicit index sums
fn yang_transfer(n: usize, m: usize, th: Q) -> Vec<Vec<Q>> {
    let dim = n.pow(m as u32);
    let r = |i: usize, a: usize, i2: usize, a2: usize| -> Q {
        let p = if i == a2 && a == i2 {
            Q::from(1)
        } else {
            Q::from(0)
        };
        let id = if i == i2 && a == a2 { th } else { Q::from(0) };
        p + id
    };
    let dig = |mut x: usize| {
        let mut d = vec![0; m];
        for k in (0..m).rev() {
            d[k] = x % n;
            x /= n;
        }
        d
    };
    let mut out = vec![vec![Q::from(0); dim]; dim];
    for (row, out_row) in out.iter_mut().enumerate() {
        let s = dig(row);
        for (col, cell) in out_row.iter_mut().enumerate() {
            let t = dig(col);
            // walk the auxiliary index through the product, starting and ending at a0
            let mut acc = Q::from(0);
            for a0 in 0..n {
                let mut vals = vec![(a0, Q::from(1))];
                for k in 0..m {
                    let mut next = Vec::new();
                    for &(a, w) in &vals {
                        for a2 in 0..n {
                            let e = r(s[k], a, t[k], a2);
                            if e != Q::from(0) {
                                next.push((a2, w * e));
                            }
                        }
                    }
                    vals = next;
                }
                acc += vals
                    .iter()
                    .filter(|(a, _)| *a == a0)
                    .map(|(_, w)| *w)
                    .sum::<Q>();
            }
            *cell = acc;
        }
    }
    out
}

fn coeff_of(s: &ScalarFrac) -> Q {
    let c = s
        .as_scalar()
        .map(|s| s.as_constant().unwrap_or(Coeff::int(0)))
        .expect("constant entry");
    let b = c.to_big();
    Q::new(b.numer().try_into().unwrap(), b.denom().try_into().unwrap())
}

#[test]
fn yang_transfer_matrix_by_index_sums() {
    let base = rational_limit(&Family::GLq { n: 2 }, RationalKind::Yang).unwrap();
    for m in 2..=3 {
        let c = ChainSpec::new(base.clone(), m);
        for (num, den) in [(2, 3), (-5, 7), (3, 1)] {
            let t = transfer_matrix(&c, &Coeff::ratio(num, den)).unwrap();
            let want = yang_transfer(2, m, Q::new(num, den));
            for (i, row) in want.iter().enumerate() {
                for (j, w) in row.iter().enumerate() {
                    assert_eq!(coeff_of(&t.get(i, j)), *w, "M={m} θ={num}/{den} [{i},{j}]");
                }
            }
        }
    }
}

#[test]
fn yang_m2_closed_form() {
    // Tr_a (P_1a + θ)(P_2a + θ) = P_12 + 2θ + 2θ²
    let base = rational_limit(&Family::GLq { n: 2 }, RationalKind::Yang).unwrap();
    let t = transfer_matrix(&ChainSpec::new(base, 2), &Coeff::ratio(1, 2)).unwrap();
    let want = TensorOp::permutation(2).add_identity(&ScalarFrac::parse("3/2").unwrap());
    assert_eq!(t, want);
}

#[test]
fn broken_chain_fails_commutativity() {
    let r = RData::build(&Family::GLq { n: 2 }).unwrap();
    let b = baxterize(&r, Branch::Plus).unwrap();
    // a generic constant operator in place of R_2a
    let vals = [1, 2, 0, 1, 3, 1, 1, 0, 0, 2, 5, 1, 1, 0, 1, 4];
    let defect = TensorOp::from_entries(
        2,
        2,
        (0..16).map(|k| (k / 4, k % 4, ScalarFrac::int(vals[k]))),
    );
    let c = ChainSpec::new(b.clone(), 3).with_defect(2, defect);
    let pts = [
        (Coeff::int(2), Coeff::ratio(1, 3)),
        (Coeff::int(3), Coeff::ratio(5, 2)),
    ];
    assert!(!commutativity_check(&c, &pts).pass());
    assert!(commutativity_check(&ChainSpec::new(b, 3), &pts).pass());
}

#[test]
fn hecke_graph_two_levels() {
    let g = BranchGraph::build(Algebra::Hecke, 2);
    let sizes: Vec<usize> = g.levels.iter().map(|l| l.len()).collect();
    assert_eq!(sizes, [1, 1, 2]);
    assert_eq!(g.edges.len(), 3);
    let mut colors: Vec<Content> = g.edges.iter().map(|e| e.color).collect();
    colors.sort_by_key(|c| c.label());
    let mut want = vec![Content::Plain(0), Content::Plain(1), Content::Plain(-1)];
    want.sort_by_key(|c| c.label());
    assert_eq!(colors, want);
}
