//! One PASS/FAIL line per acceptance criterion, with the individual checks
//! listed underneath. Tolerances live in the verify module next to each check.

use fockcanon_cli::verify::{self, Check, VerifyConfig, CRITERIA};

fn line(c: &Check) -> String {
    format!(
        "    {} {:<5} measured={:.3e} expected={:.3e} tol={:.1e} ({}) {}{}",
        c.check_id,
        if c.pass { "ok" } else { "FAIL" },
        c.measured,
        c.expected,
        c.tolerance,
        c.semantics.name(),
        c.description,
        if c.note.is_empty() {
            String::new()
        } else {
            format!(" [{}]", c.note)
        },
    )
}

#[test]
fn acceptance() {
    let cfg = VerifyConfig::default();
    let report = verify::run(&cfg, &[]).expect("verify runs");
    println!("acceptance: seed={} nodes={}", report.seed, report.nodes);
    let mut failed = Vec::new();
    for (n, name) in CRITERIA {
        let pass = report.criterion_passed(n);
        println!("{} criterion {n:>2}: {name}", if pass { "PASS" } else { "FAIL" });
        for c in report.checks.iter().filter(|c| c.criterion == n) {
            println!("{}", line(c));
        }
        if !pass {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
