//! The acceptance battery: thirteen criteria, each a list of exact checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::baxter::{self, baxterize, rational_limit, Branch, RationalKind};
use crate::chains::{self, ChainSpec};
use crate::knots::{self, BraidWord};
use crate::matalg;
use crate::qcombin::{self, QMatrix};
use crate::report::Report;
use crate::ring::{q_number, Coeff, Scalar, ScalarFrac, Var};
use crate::rmatrix::{self, psi_hat_closed_form, Family, Kind, RData};
use crate::towers::{
    check_jm, check_relations, check_symmetrizers, completeness_check, idempotent_from_path,
    jm_elements, ocneanu_trace, Algebra, BranchGraph, Partition, TowerRep,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub run: fn(Scale, u64) -> Report,
}

pub const DEFAULT_SEED: u64 = 20240917;

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "exact Yang-Baxter equation",
            run: c01_ybe,
        },
        Criterion {
            id: 2,
            title: "Hecke and cubic characteristic equations",
            run: c02_char,
        },
        Criterion {
            id: 3,
            title: "skew-invertibility and closed forms of Ψ̂",
            run: c03_skew,
        },
        Criterion {
            id: 4,
            title: "quantum-trace constants and det_q(D)",
            run: c04_traces,
        },
        Criterion {
            id: 5,
            title: "projector ranks",
            run: c05_ranks,
        },
        Criterion {
            id: 6,
            title: "height and det_q R^(±)",
            run: c06_height,
        },
        Criterion {
            id: 7,
            title: "Baxterization",
            run: c07_baxter,
        },
        Criterion {
            id: 8,
            title: "tower consistency",
            run: c08_towers,
        },
        Criterion {
            id: 9,
            title: "branching graphs and idempotents",
            run: c09_graphs,
        },
        Criterion {
            id: 10,
            title: "q-dimensions",
            run: c10_qdims,
        },
        Criterion {
            id: 11,
            title: "knot invariants",
            run: c11_knots,
        },
        Criterion {
            id: 12,
            title: "quantum-matrix identities",
            run: c12_matalg,
        },
        Criterion {
            id: 13,
            title: "integrable chains",
            run: c13_chains,
        },
    ]
}

/// Runs the criteria concurrently; results come back in criterion order.
pub fn run_suite(scale: Scale, seed: u64) -> Vec<(u8, &'static str, Report, std::time::Duration)> {
    criteria()
        .into_par_iter()
        .map(|c| {
            let t = std::time::Instant::now();
            let rep = (c.run)(scale, seed);
            (c.id, c.title, rep, t.elapsed())
        })
        .collect()
}

fn build(f: &Family, rep: &mut Report) -> Option<RData> {
    match RData::build(f) {
        Ok(r) => Some(r),
        Err(e) => {
            rep.push(format!("build {f}"), false, e.to_string());
            None
        }
    }
}

fn prefixed(label: &str, sub: Report) -> Report {
    let mut rep = Report::new();
    for c in sub.checks {
        rep.push(format!("{label}: {}", c.name), c.pass, c.detail);
    }
    rep
}

/// Random multiplicative parameters a_ij = 1/a_ji for GL_q(N) multi.
pub fn seeded_multi(n: usize, seed: u64) -> Family {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = vec![vec![Coeff::ONE; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = Coeff::ratio(rng.gen_range(1..=7), rng.gen_range(1..=5));
            a[j][i] = c.inv();
            a[i][j] = c;
        }
    }
    Family::GLqMulti { n, a }
}

fn ybe_families(scale: Scale, seed: u64) -> Vec<Family> {
    let mut v = vec![
        Family::GLq { n: 2 },
        Family::GLq { n: 3 },
        Family::GLq { n: 4 },
        seeded_multi(3, seed),
        Family::GLqSuper { n: 2, m: 1 },
        Family::GLqSuper { n: 1, m: 2 },
        Family::SOq { n: 3 },
        Family::SOq { n: 4 },
        Family::Spq { n: 4 },
        Family::Ospq { n: 1, m: 1, eps: 1 },
        Family::Ospq { n: 2, m: 1, eps: 1 },
    ];
    if scale == Scale::Full {
        v.extend([
            Family::GLqSuper { n: 2, m: 2 },
            Family::SOq { n: 5 },
            Family::Spq { n: 6 },
            Family::Ospq { n: 1, m: 2, eps: 1 },
            Family::Ospq {
                n: 2,
                m: 1,
                eps: -1,
            },
        ]);
    }
    v
}

fn each_family(fams: &[Family], f: impl Fn(&Family, &RData) -> Report + Sync) -> Report {
    let reps: Vec<Report> = fams
        .par_iter()
        .map(|fam| {
            let mut rep = Report::new();
            if let Some(r) = build(fam, &mut rep) {
                rep.extend(prefixed(&fam.to_string(), f(fam, &r)));
            }
            rep
        })
        .collect();
    let mut out = Report::new();
    for r in reps {
        out.extend(r);
    }
    out
}

pub fn c01_ybe(scale: Scale, seed: u64) -> Report {
    each_family(&ybe_families(scale, seed), |_, r| {
        rmatrix::check_ybe(&r.rhat)
    })
}

fn expected_nu(f: &Family) -> Option<Scalar> {
    let (eps, n, m) = match f {
        Family::SOq { n } => (1, *n as i32, 0),
        Family::Spq { n } => (-1, *n as i32, 0),
        Family::Ospq { n, m, eps } => (*eps as i32, *n as i32, *m as i32),
        _ => return None,
    };
    Some(Scalar::q(eps + 2 * m - n).scale(&Coeff::int(eps as i64)))
}

pub fn c02_char(scale: Scale, seed: u64) -> Report {
    each_family(&ybe_families(scale, seed), |f, r| {
        let mut rep = rmatrix::check_characteristic(r);
        if let Some(nu) = expected_nu(f) {
            let got = r.nu.clone();
            rep.push(
                "ν = ε q^(ε + 2m - N)",
                got.as_ref() == Some(&nu),
                format!("ν = {nu}"),
            );
        }
        rep
    })
}

pub fn c03_skew(scale: Scale, seed: u64) -> Report {
    let mut rep = each_family(&ybe_families(scale, seed), |_, r| rmatrix::check_skew(r));
    for (n, m) in [(2, 0), (3, 0), (4, 0), (2, 1)] {
        let fam = if m == 0 {
            Family::GLq { n }
        } else {
            Family::GLqSuper { n, m }
        };
        if let Some(r) = build(&fam, &mut rep) {
            rep.push(
                format!("{fam}: solved Ψ̂ = closed form"),
                r.psi_hat == psi_hat_closed_form(n, m),
                "",
            );
        }
    }
    rep
}

fn diag_matrix(r: &RData) -> Vec<Vec<ScalarFrac>> {
    let n = r.n;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        r.d.diag[i].clone()
                    } else {
                        ScalarFrac::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn c04_traces(scale: Scale, _seed: u64) -> Report {
    let mut rep = Report::new();
    let sf = ScalarFrac::from;
    let top = if scale == Scale::Full { 5 } else { 4 };
    for n in 2..=top {
        let fam = Family::GLq { n };
        if let Some(r) = build(&fam, &mut rep) {
            let want = sf(Scalar::q(-(n as i32)).mul(&q_number(n as i32)));
            rep.push(
                format!("{fam}: Tr D = q^-N [N]"),
                r.tr_d == want,
                format!("Tr D = {}", r.tr_d),
            );
            if n <= 3 {
                let det = qcombin::qdeterminant(&r, &QMatrix::Numeric(diag_matrix(&r)));
                let want = sf(Scalar::q(-((n * n) as i32)));
                let ok = matches!(&det, Ok(d) if *d == want);
                let detail = det.map(|d| d.to_string()).unwrap_or_else(|e| e.to_string());
                rep.push(format!("{fam}: det_q(D) = q^-N²"), ok, detail);
            }
        }
    }
    let fam = Family::GLqSuper { n: 2, m: 1 };
    if let Some(r) = build(&fam, &mut rep) {
        let want = sf(Scalar::q(1 - 2).mul(&q_number(2 - 1)));
        rep.push(
            format!("{fam}: Tr D = q^(M-N) [N-M]"),
            r.tr_d == want,
            format!("Tr D = {}", r.tr_d),
        );
    }
    for fam in [
        Family::SOq { n: 3 },
        Family::SOq { n: 4 },
        Family::Spq { n: 4 },
    ] {
        if let Some(r) = build(&fam, &mut rep) {
            let numu = sf(r.nu.clone().unwrap()).mul(r.mu.as_ref().unwrap());
            rep.push(
                format!("{fam}: Tr D = ν μ"),
                r.tr_d == numu,
                format!("Tr D = {}", r.tr_d),
            );
        }
    }
    rep
}

pub fn c05_ranks(scale: Scale, _seed: u64) -> Report {
    let mut fams = vec![
        Family::GLq { n: 2 },
        Family::GLq { n: 3 },
        Family::GLq { n: 4 },
        Family::SOq { n: 3 },
        Family::SOq { n: 4 },
        Family::Spq { n: 4 },
    ];
    if scale == Scale::Full {
        fams.extend([Family::SOq { n: 5 }, Family::Spq { n: 6 }]);
    }
    each_family(&fams, |f, r| {
        let n = f.dim();
        let (sym, asym) = (n * (n + 1) / 2, n * (n - 1) / 2);
        let want = match f {
            Family::SOq { .. } => vec![sym - 1, asym, 1],
            Family::Spq { .. } => vec![sym, asym - 1, 1],
            _ => vec![sym, asym],
        };
        let (mut rep, ranks) = rmatrix::check_projectors(r);
        rep.push(
            format!("ranks = {want:?}"),
            ranks == want,
            format!("{ranks:?}"),
        );
        rep
    })
}

pub fn c06_height(_scale: Scale, _seed: u64) -> Report {
    let mut rep = Report::new();
    for n in 2..=4 {
        let fam = Family::GLq { n };
        let Some(r) = build(&fam, &mut rep) else {
            continue;
        };
        rep.extend(prefixed(&fam.to_string(), qcombin::check_height(&r, n)));
        if n <= 3 {
            for (t, name, e) in [(QMatrix::RPlus, "R(+)", 1), (QMatrix::RMinus, "R(-)", -1)] {
                let det = qcombin::qdeterminant(&r, &t);
                let want = ScalarFrac::from(Scalar::q(e));
                let ok = matches!(&det, Ok(d) if *d == want);
                let detail = det.map(|d| d.to_string()).unwrap_or_else(|e| e.to_string());
                rep.push(format!("{fam}: det_q {name} = q^{e}"), ok, detail);
            }
        }
    }
    rep
}

pub fn c07_baxter(scale: Scale, seed: u64) -> Report {
    let mut fams = vec![
        Family::GLq { n: 2 },
        Family::GLq { n: 3 },
        Family::GLqSuper { n: 2, m: 1 },
        Family::SOq { n: 3 },
        Family::Spq { n: 4 },
    ];
    if scale == Scale::Full {
        fams.extend([
            Family::SOq { n: 4 },
            Family::Ospq { n: 1, m: 1, eps: 1 },
            Family::Ospq { n: 2, m: 1, eps: 1 },
        ]);
    }
    let checks = [
        "regular",
        "unitarity",
        "sybe",
        "cross",
        "special",
        "hamiltonian",
    ];
    let mut rep = each_family(&fams, |f, r| {
        let branches: &[Branch] = if f.kind() == Kind::Hecke {
            &[Branch::Plus]
        } else {
            &[Branch::Plus, Branch::Minus]
        };
        let mut rep = Report::new();
        for br in branches {
            match baxterize(r, *br) {
                Ok(b) => rep.extend(prefixed(
                    &format!("{br:?}"),
                    baxter::run_checks(&b, Some(r), &checks, seed, 3),
                )),
                Err(e) => rep.push(format!("baxterize {br:?}"), false, e.to_string()),
            }
        }
        rep
    });
    for (f, k) in [
        (Family::GLq { n: 3 }, RationalKind::Yang),
        (Family::GLqSuper { n: 2, m: 1 }, RationalKind::Super),
        (Family::SOq { n: 3 }, RationalKind::SoSp),
        (Family::Spq { n: 4 }, RationalKind::SoSp),
    ] {
        match rational_limit(&f, k) {
            Ok(b) => rep.extend(prefixed(
                &format!("rational {f}"),
                baxter::run_checks(&b, None, &["regular", "sybe", "hamiltonian"], seed, 3),
            )),
            Err(e) => rep.push(format!("rational {f}"), false, e.to_string()),
        }
    }
    rep
}

fn towers_for(scale: Scale) -> Vec<(Family, usize)> {
    let mut v = vec![
        (Family::GLq { n: 2 }, 4),
        (Family::GLq { n: 3 }, 4),
        (Family::SOq { n: 3 }, 3),
    ];
    if scale == Scale::Full {
        v.push((Family::Spq { n: 4 }, 3));
    }
    v
}

pub fn c08_towers(scale: Scale, _seed: u64) -> Report {
    let items: Vec<(Family, usize)> = towers_for(scale)
        .into_iter()
        .flat_map(|(f, top)| (2..=top).map(move |n| (f.clone(), n)))
        .collect();
    let reps: Vec<Report> = items
        .par_iter()
        .map(|(f, n)| {
            let mut rep = Report::new();
            let Some(r) = build(f, &mut rep) else {
                return rep;
            };
            let t = TowerRep::new(&r, *n);
            let ys = jm_elements(&t);
            let mut sub = check_relations(&t);
            sub.extend(check_jm(&t, &ys));
            sub.extend(check_symmetrizers(&t, &ys, *n));
            rep.extend(prefixed(&format!("{f} n={n}"), sub));
            rep
        })
        .collect();
    let mut out = Report::new();
    for r in reps {
        out.extend(r);
    }
    out
}

pub fn c09_graphs(scale: Scale, _seed: u64) -> Report {
    let mut rep = Report::new();
    let g = BranchGraph::build(Algebra::Hecke, 4);
    let counts: Vec<(String, usize)> = g
        .path_counts(4)
        .into_iter()
        .map(|(p, c)| (p.to_string(), c))
        .collect();
    let want: Vec<(String, usize)> = [
        ("4", 1),
        ("3,1", 3),
        ("2,2", 2),
        ("2,1,1", 3),
        ("1,1,1,1", 1),
    ]
    .iter()
    .map(|(p, c)| (Partition::parse(p).unwrap().to_string(), *c))
    .collect();
    rep.push("H4 path multiset", counts == want, format!("{counts:?}"));
    for (name, ok) in g.structural_checks() {
        rep.push(format!("H4 {name}"), ok, "");
    }
    let b5 = BranchGraph::build(Algebra::Bmw, 5);
    let sq: usize = b5.path_counts(5).iter().map(|(_, c)| c * c).sum();
    rep.push("BMW5 Σ (paths)² = 945", sq == 945, format!("{sq}"));
    let items: Vec<(Family, usize)> = towers_for(scale)
        .into_iter()
        .flat_map(|(f, top)| (1..=top).map(move |n| (f.clone(), n)))
        .collect();
    let reps: Vec<Report> = items
        .par_iter()
        .map(|(f, n)| {
            let mut rep = Report::new();
            let Some(r) = build(f, &mut rep) else {
                return rep;
            };
            let alg = if r.kind() == Kind::Hecke {
                Algebra::Hecke
            } else {
                Algebra::Bmw
            };
            let t = TowerRep::new(&r, *n);
            let ys = jm_elements(&t);
            let paths = BranchGraph::build(alg, *n).paths(*n);
            rep.extend(prefixed(
                &f.to_string(),
                completeness_check(&t, &ys, &paths),
            ));
            rep
        })
        .collect();
    for r in reps {
        rep.extend(r);
    }
    rep
}

/// q → 1 of every idempotent trace equals the rank of the idempotent.
fn classical_limits(r: &RData, max: usize) -> Report {
    let mut rep = Report::new();
    let alg = if r.kind() == Kind::Hecke {
        Algebra::Hecke
    } else {
        Algebra::Bmw
    };
    let g = BranchGraph::build(alg, max);
    for n in 1..=max {
        let t = TowerRep::new(r, n);
        let ys = jm_elements(&t);
        let mut ok = true;
        let mut detail = String::new();
        for p in g.paths(n) {
            let Ok(e) = idempotent_from_path(&t, &ys, &p) else {
                ok = false;
                continue;
            };
            let at1 = ocneanu_trace(&t, &e).subs_const(Var::Q, &Coeff::ONE);
            let rank = e.rank();
            let same = matches!(&at1, Ok(v) if *v == ScalarFrac::int(rank as i64));
            if !same {
                ok = false;
                detail = format!("path {p}: rank {rank}, q=1 value {at1:?}");
            }
        }
        rep.push(format!("q → 1 of 𝒯r(E) = rank E, level {n}"), ok, detail);
    }
    rep
}

pub fn c10_qdims(scale: Scale, _seed: u64) -> Report {
    let mut fams = vec![
        (Family::GLq { n: 2 }, 4),
        (Family::GLq { n: 3 }, 4),
        (Family::SOq { n: 3 }, 3),
    ];
    if scale == Scale::Full {
        fams.push((Family::Spq { n: 4 }, 3));
    }
    let reps: Vec<Report> = fams
        .par_iter()
        .map(|(f, max)| {
            let mut rep = Report::new();
            let Some(r) = build(f, &mut rep) else {
                return rep;
            };
            let sub = if r.kind() == Kind::Hecke {
                qcombin::check_hecke_qdims(&r, *max)
            } else {
                qcombin::check_bmw_qdims(&r, *max)
            };
            rep.extend(prefixed(&f.to_string(), sub));
            rep.extend(prefixed(&f.to_string(), classical_limits(&r, *max)));
            rep
        })
        .collect();
    let mut out = Report::new();
    for r in reps {
        out.extend(r);
    }
    for d in [2, 3] {
        for n in 1..=4usize {
            let g = BranchGraph::build(Algebra::Hecke, n);
            let ok = g.levels[n].iter().all(|p| {
                let a = crate::towers::hook_qdim(p, d);
                let b = crate::towers::hook_qdim_transposed(p, d);
                a == b
            });
            out.push(format!("hook forms agree, d={d}, |Λ|={n}"), ok, "");
        }
    }
    out
}

/// P(trefoil) = a^-2 (2 + z²) - a^-4 with a = q^d, z = λ.
pub fn trefoil_homfly(d: i32) -> ScalarFrac {
    let a2 = ScalarFrac::from(Scalar::q(-2 * d));
    let z = crate::rmatrix::RData::lambda();
    let z2 = z.mul(&z);
    a2.mul(&ScalarFrac::int(2).add(&z2)).sub(&a2.mul(&a2))
}

pub fn c11_knots(scale: Scale, seed: u64) -> Report {
    let trials = if scale == Scale::Full { 60 } else { 20 };
    let fams = [
        Family::GLq { n: 2 },
        Family::GLq { n: 3 },
        Family::SOq { n: 3 },
    ];
    let mut rep = each_family(&fams, |_, r| {
        let mut rep = knots::check_torus(r, 0..=5);
        rep.extend(knots::markov_property_test(r, trials, 3, 6, seed));
        rep
    });
    for d in [2usize, 3] {
        let fam = Family::GLq { n: d };
        let Some(r) = build(&fam, &mut rep) else {
            continue;
        };
        let want = trefoil_homfly(d as i32);
        for word in [BraidWord::torus(3), BraidWord::parse(3, "1 2 1 2").unwrap()] {
            let got = knots::normalized_invariant(&word, &r);
            let ok = matches!(&got, Ok(p) if *p == want);
            let detail = got.map(|p| p.to_string()).unwrap_or_else(|e| e.to_string());
            rep.push(format!("{fam}: trefoil {word} = skein value"), ok, detail);
        }
        let sk = knots::skein_normalized(&BraidWord::torus(3), &r);
        rep.push(
            format!("{fam}: abstract Hecke trace of the trefoil agrees"),
            matches!(&sk, Ok(p) if *p == want),
            "",
        );
    }
    rep
}

pub fn c12_matalg(_scale: Scale, _seed: u64) -> Report {
    let fams: Vec<Family> = (2..=3).map(|n| Family::GLq { n }).collect();
    each_family(&fams, |_, r| {
        matalg::run_checks(r, &["re", "newton", "cayley"])
    })
}

pub fn c13_chains(scale: Scale, seed: u64) -> Report {
    let mut specs: Vec<(String, Result<ChainSpec, String>, Vec<&'static str>)> = Vec::new();
    let hecke = |f: &Family| {
        RData::build(f)
            .map_err(|e| e.to_string())
            .and_then(|r| baxterize(&r, Branch::Plus).map_err(|e| e.to_string()))
    };
    let g2 = Family::GLq { n: 2 };
    specs.push((
        "GLq(2) M=4".into(),
        hecke(&g2).map(|b| ChainSpec::new(b, 4)),
        vec!["commute", "hamiltonian", "charges"],
    ));
    specs.push((
        "Yang N=2 M=4".into(),
        rational_limit(&g2, RationalKind::Yang)
            .map(|b| ChainSpec::new(b, 4))
            .map_err(|e| e.to_string()),
        vec!["commute", "hamiltonian"],
    ));
    specs.push((
        "SOq(3) plus M=2".into(),
        hecke(&Family::SOq { n: 3 }).map(|b| ChainSpec::new(b, 2)),
        vec!["commute", "hamiltonian"],
    ));
    if scale == Scale::Full {
        let d2 = RData::build(&g2).unwrap().d;
        specs.push((
            "GLq(2) M=4 twisted by D".into(),
            hecke(&g2).map(|b| ChainSpec::new(b, 4).with_twist(d2)),
            vec!["commute", "hamiltonian"],
        ));
        specs.push((
            "GLq(3) M=3".into(),
            hecke(&Family::GLq { n: 3 }).map(|b| ChainSpec::new(b, 3)),
            vec!["commute", "hamiltonian", "charges"],
        ));
        specs.push((
            "SOq(3) plus M=3".into(),
            hecke(&Family::SOq { n: 3 }).map(|b| ChainSpec::new(b, 3)),
            vec!["commute", "hamiltonian"],
        ));
        specs.push((
            "rational SO(3) M=3".into(),
            rational_limit(&Family::SOq { n: 3 }, RationalKind::SoSp)
                .map(|b| ChainSpec::new(b, 3))
                .map_err(|e| e.to_string()),
            vec!["commute", "hamiltonian"],
        ));
    }
    let reps: Vec<Report> = specs
        .par_iter()
        .map(|(label, spec, checks)| match spec {
            Ok(c) => prefixed(label, chains::run_checks(c, checks, seed, 3)),
            Err(e) => {
                let mut rep = Report::new();
                rep.push(label.clone(), false, e.clone());
                rep
            }
        })
        .collect();
    let mut out = Report::new();
    for r in reps {
        out.extend(r);
    }
    out
}
