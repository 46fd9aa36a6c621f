//! Quantum antisymmetrizers, height and q-determinants for GLq(N).

use qyb::qcombin::{check_eps, check_height, qdeterminant, QMatrix};
use qyb::rmatrix::{Family, RData};

fn main() {
    for n in 2..=3 {
        let r = RData::build(&Family::GLq { n }).unwrap();
        println!("GLq({n}) height: {}", check_height(&r, n).pass());
        println!(
            "  det_q R(+) = {}",
            qdeterminant(&r, &QMatrix::RPlus).unwrap()
        );
        println!(
            "  det_q R(-) = {}",
            qdeterminant(&r, &QMatrix::RMinus).unwrap()
        );
        print!("{}", check_eps(&r).to_text());
    }
}
