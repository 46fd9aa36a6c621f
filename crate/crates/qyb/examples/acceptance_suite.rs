//! Runs the acceptance battery at small scale and prints one line per criterion.

use qyb::cli::suite::{run_suite, Scale, DEFAULT_SEED};

fn main() {
    for (id, title, rep, dt) in run_suite(Scale::Small, DEFAULT_SEED) {
        let tag = if rep.pass() { "PASS" } else { "FAIL" };
        println!(
            "{tag} {id:>2} {title} ({} checks, {:.2}s)",
            rep.checks.len(),
            dt.as_secs_f64()
        );
    }
}
