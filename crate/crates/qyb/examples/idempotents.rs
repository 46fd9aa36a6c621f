//! Primitive idempotents from paths, their ranks and quantum traces.

use qyb::rmatrix::{Family, RData};
use qyb::towers::{
    completeness_check, idempotent_from_path, jm_elements, ocneanu_trace, Algebra, BranchGraph,
    TowerRep,
};

fn main() {
    let r = RData::build(&Family::GLq { n: 2 }).unwrap();
    let n = 3;
    let t = TowerRep::new(&r, n);
    let ys = jm_elements(&t);
    let paths = BranchGraph::build(Algebra::Hecke, n).paths(n);
    for p in &paths {
        let e = idempotent_from_path(&t, &ys, p).unwrap();
        println!(
            "{p:>10}  {:<8} rank {}  trace {}",
            p.end().to_string(),
            e.rank(),
            ocneanu_trace(&t, &e)
        );
    }
    println!("{}", completeness_check(&t, &ys, &paths).to_text());
}
