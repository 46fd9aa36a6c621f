// One pass/fail line per acceptance criterion, at small scale.

use qyb::cli::suite::{criteria, Scale, DEFAULT_SEED};

fn main() {
    let mut failed = Vec::new();
    for c in criteria() {
        let rep = (c.run)(Scale::Small, DEFAULT_SEED);
        let ok = rep.pass();
        println!(
            "{} {:>2} {} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            rep.checks.len()
        );
        if !ok {
            for f in rep.failures() {
                println!("     {}: {}", f.name, f.detail);
            }
            failed.push(c.id);
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria().len() - failed.len(),
        criteria().len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
