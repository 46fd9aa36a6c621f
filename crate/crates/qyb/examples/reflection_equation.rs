//! The reflection equation, Newton identities and Cayley-Hamilton theorem
//! for L = R R₂₁.

use qyb::matalg::{fundamental_re, symmetric_functions};
use qyb::rmatrix::{Family, RData};

fn main() {
    for n in 2..=3 {
        let r = RData::build(&Family::GLq { n }).unwrap();
        let inst = fundamental_re(&r).unwrap();
        let (p, a) = symmetric_functions(&inst, n).unwrap();
        println!("GLq({n})");
        for (k, (pk, ak)) in p.iter().zip(&a).enumerate() {
            println!("  p_{} = {pk}\n  a_{} = {ak}", k + 1, k + 1);
        }
        print!(
            "{}",
            qyb::matalg::run_checks(&r, &["re", "newton", "cayley"]).to_text()
        );
    }
}
