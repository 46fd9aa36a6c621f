//! Spectral-parameter solutions Ř(x) and their rational limits.

use qyb::baxter::{
    baxterize, hamiltonian_density, rational_limit, run_checks, Branch, RationalKind,
};
use qyb::rmatrix::{Family, RData};

fn main() {
    let r = RData::build(&Family::SOq { n: 3 }).unwrap();
    for br in [Branch::Plus, Branch::Minus] {
        let b = baxterize(&r, br).unwrap();
        let rep = run_checks(
            &b,
            Some(&r),
            &["regular", "unitarity", "sybe", "cross", "special"],
            7,
            3,
        );
        println!(
            "SOq(3) {br:?}: α = {}, pass = {}",
            b.alpha.as_ref().unwrap(),
            rep.pass()
        );
    }
    let y = rational_limit(&Family::GLq { n: 2 }, RationalKind::Yang).unwrap();
    println!(
        "Yang R(θ) on C²⊗C²: pass = {}",
        run_checks(&y, None, &["regular", "sybe"], 7, 3).pass()
    );
    let h = hamiltonian_density(
        &baxterize(&RData::build(&Family::GLq { n: 2 }).unwrap(), Branch::Plus).unwrap(),
    )
    .unwrap();
    println!("GLq(2) density h has {} nonzero entries", h.nnz());
}
