use std::io::Write;

use distab::suite::{Suite, SuiteOptions, CRITERIA};

#[test]
fn acceptance() {
    let suite = Suite::new(SuiteOptions::default());
    let checks = suite.run_all();
    assert_eq!(checks.len(), CRITERIA.len());
    // written past the test harness capture so the lines show in every run
    let mut out = std::io::stdout().lock();
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} criterion {:>2}: {}", c.criterion, c.name).unwrap();
        for d in &c.details {
            writeln!(out, "    {d}").unwrap();
        }
    }
    drop(out);
    let failed: Vec<u8> = checks.iter().filter(|c| !c.passed).map(|c| c.criterion).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
