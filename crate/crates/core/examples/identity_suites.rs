//! Runs every randomized identity suite at a given dimension and prints the reports.
//!
//! cargo run --release --example identity_suites -- 2 50

use hyperbolic_clifford::suites::run_suite;
use hyperbolic_clifford::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let cases = args.next().and_then(|a| a.parse().ok()).unwrap_or(20);
    for suite in ["hyperbolic", "duality", "extensor", "clifford-map", "differential", "geometry"] {
        let report = run_suite(suite, n, cases, 7, 1e-8)?;
        println!("{report}");
        if !report.passed() {
            println!("  {} failures", report.failures.len());
        }
    }
    Ok(())
}
