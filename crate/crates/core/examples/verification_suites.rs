//! Runs both verification suites and prints a summary line per check.

use critgroup::verify::{exit_code, published_suite, properties_suite};

fn main() {
    for (name, results) in [("published", published_suite(0)), ("properties", properties_suite(0))] {
        let passed = results.iter().filter(|r| r.passed()).count();
        println!("{name}: {passed}/{} pass, exit code {}", results.len(), exit_code(&results));
        for r in results.iter().filter(|r| !r.passed()) {
            println!("  {:?} {} expected {} computed {}", r.status, r.name, r.expected, r.computed);
        }
    }
}
