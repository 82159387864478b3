//! Runs the full certification suite, as `hvgrgs verify` does.

use hvgrgs::cli::verify::{run_checks, VerifyConfig};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let results = run_checks(&VerifyConfig {
        max_n,
        mutate: false,
    });
    for r in &results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} {:<30} {:>7} cases  {}",
            r.name,
            r.cases,
            r.failure.as_deref().unwrap_or("")
        );
    }
    if results.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
