//! The periodic XXZ chain from the Baxterized GLq(2) R-matrix.

use qyb::baxter::{baxterize, Branch};
use qyb::chains::{commuting_charges, hamiltonian, run_checks, transfer_matrix, ChainSpec};
use qyb::ring::Coeff;
use qyb::rmatrix::{Family, RData};

fn main() {
    let r = RData::build(&Family::GLq { n: 2 }).unwrap();
    let b = baxterize(&r, Branch::Plus).unwrap();
    let c = ChainSpec::new(b, 4);
    let h = hamiltonian(&c).unwrap();
    println!("H on (C²)^⊗4: {} nonzero entries", h.nnz());
    let t = transfer_matrix(&c, &Coeff::int(2)).unwrap();
    println!(
        "t(2) has {} nonzero entries; [H, t(2)] = 0: {}",
        t.nnz(),
        h.commutator(&t).is_zero()
    );
    print!(
        "{}",
        run_checks(&c, &["commute", "hamiltonian"], 3, 3).to_text()
    );
    print!("{}", commuting_charges(&c, 2).to_text());
}
