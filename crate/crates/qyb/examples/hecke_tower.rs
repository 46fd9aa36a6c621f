//! Jucys-Murphy elements and symmetrizers in the R-matrix representation
//! of the Hecke tower on (C³)^⊗4.

use qyb::rmatrix::{Family, RData};
use qyb::towers::{check_jm, check_relations, check_symmetrizers, jm_elements, TowerRep};

fn main() {
    let r = RData::build(&Family::GLq { n: 3 }).unwrap();
    for n in 2..=4 {
        let t = TowerRep::new(&r, n);
        let ys = jm_elements(&t);
        let mut rep = check_relations(&t);
        rep.extend(check_jm(&t, &ys));
        rep.extend(check_symmetrizers(&t, &ys, n));
        println!(
            "n = {n}: {} checks, pass = {}",
            rep.checks.len(),
            rep.pass()
        );
    }
}
