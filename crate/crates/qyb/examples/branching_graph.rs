//! The colored branching graphs of the Hecke and BMW towers.

use qyb::towers::{Algebra, BranchGraph};

fn main() {
    let h = BranchGraph::build(Algebra::Hecke, 4);
    for (p, c) in h.path_counts(4) {
        println!("H4 {p}: {c} paths");
    }
    let b = BranchGraph::build(Algebra::Bmw, 5);
    let sq: usize = b.path_counts(5).iter().map(|(_, c)| c * c).sum();
    println!("BMW5: Σ (paths)² = {sq}");
    print!("{}", BranchGraph::build(Algebra::Hecke, 2).to_dot());
}
