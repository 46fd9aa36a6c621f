//! HOMFLY-type invariants of braid closures through the quantum trace.

use qyb::knots::{closure_invariant, markov_property_test, normalized_invariant, BraidWord};
use qyb::rmatrix::{Family, RData};

fn main() {
    let knots = [
        ("trefoil", 2, "1 1 1"),
        ("figure eight", 3, "1 -2 1 -2"),
        ("Hopf link", 2, "1 1"),
    ];
    for f in [Family::GLq { n: 2 }, Family::SOq { n: 3 }] {
        let r = RData::build(&f).unwrap();
        println!("{f}");
        for (name, s, w) in knots {
            let b = BraidWord::parse(s, w).unwrap();
            println!("  {name:<12} raw {}", closure_invariant(&b, &r).unwrap());
            println!(
                "  {:<12} normalized {}",
                "",
                normalized_invariant(&b, &r).unwrap()
            );
        }
        println!(
            "  Markov moves: pass = {}",
            markov_property_test(&r, 10, 3, 5, 1).pass()
        );
    }
}
