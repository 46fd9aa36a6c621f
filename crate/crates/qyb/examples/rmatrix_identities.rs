//! Builds Ř for a few families and runs the structural checks.

use qyb::rmatrix::{run_checks, Family, RData};

fn main() {
    let fams = [
        Family::GLq { n: 3 },
        Family::GLqSuper { n: 2, m: 1 },
        Family::SOq { n: 3 },
        Family::Spq { n: 4 },
        Family::Ospq { n: 1, m: 1, eps: 1 },
    ];
    for f in fams {
        let r = RData::build(&f).expect("family builds");
        let rep = run_checks(&r, &["ybe", "char", "skew", "traces", "proj"]);
        println!(
            "{f}: Tr D = {}, {} checks, pass = {}",
            r.tr_d,
            rep.checks.len(),
            rep.pass()
        );
    }
    let r = RData::build(&Family::GLq { n: 2 }).unwrap();
    println!("\nŘ for GLq(2):");
    for (i, j, v) in r.rhat.entries() {
        println!("  [{i},{j}] {v}");
    }
}
