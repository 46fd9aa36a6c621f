//! q-dimensions from hook formulas and from Wenzl's formula for SO_q(3).

use qyb::qcombin::{qdim_hecke, qdim_so};
use qyb::towers::Partition;

fn main() {
    for p in ["1", "2", "1,1", "2,1", "3,1"] {
        let p = Partition::parse(p).unwrap();
        println!("GLq(3) {p}: {}", qdim_hecke(&p, 3).unwrap());
    }
    for p in ["1", "2", "1,1", "3"] {
        let p = Partition::parse(p).unwrap();
        println!("SOq(3) {p}: {}", qdim_so(&p, 3).unwrap());
    }
}
