//! Acceptance run: executes every named identity suite entry and prints one
//! pass/fail line per criterion. The run fails iff a non-conjecture entry
//! fails.

use plethys::suite::{run_suite, RunConfig, Verdict, SUITE_IDS};

#[test]
fn acceptance_criteria() {
    let config = RunConfig::default();
    let report = run_suite(&config).expect("suite executes");
    assert_eq!(report.entries.len(), SUITE_IDS.len());
    let mut all_ok = true;
    for (i, entry) in report.entries.iter().enumerate() {
        let ok = entry.verdict != Verdict::Fail;
        all_ok &= ok;
        println!(
            "criterion {:2} ({}): {} [{} checks, {} ms]",
            i + 1,
            entry.id,
            match entry.verdict {
                Verdict::Pass => "pass",
                Verdict::Reported => "pass (reported)",
                Verdict::Fail => "FAIL",
            },
            entry.terms,
            entry.millis
        );
    }
    assert!(all_ok, "at least one acceptance criterion failed");
}
