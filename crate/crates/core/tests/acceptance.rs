//! Runs acceptance criteria 1 to 10, each within its time budget, and prints
//! one line per criterion. Built without the libtest harness so the lines
//! show up in plain `cargo test` output.

use polyk0::suites::{SuiteConfig, SuiteRegistry};

fn main() {
    let registry = SuiteRegistry::default();
    let config = SuiteConfig::default();
    let mut failed = Vec::new();
    for n in 1..=10 {
        let suite = registry.by_criterion(n).expect("every criterion has a suite");
        let report = suite.run(&config);
        let in_time = report.elapsed <= suite.budget();
        let ok = report.passed() && in_time;
        println!(
            "criterion {:>2} [{}] {}: {} checks, {} failures, {:.3}s of {:.0}s budget; {}",
            n,
            suite.name(),
            if ok { "PASS" } else { "FAIL" },
            report.checks,
            report.failures.len(),
            report.elapsed.as_secs_f64(),
            suite.budget().as_secs_f64(),
            report.summary
        );
        for f in report.failures.iter().take(5) {
            println!("    {}", f);
        }
        if !ok {
            failed.push(n);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {:?}", failed);
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
