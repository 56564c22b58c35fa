//! Prints one PASS/FAIL line per acceptance criterion.
//!
//! Criteria 3 and 4 each include an equivalence that has counterexamples in
//! their own enumerations: loop tournaments that are strongly chordal without
//! meeting the four reversal conditions, and bipartite tournaments that are
//! strongly chordal although neither one-way bigraph has the chain-component
//! structure. Their lines stay FAIL. Any other failure makes the target fail.

use std::process::ExitCode;

use strongchordal::suites;

const KNOWN_FAILING: [u8; 2] = [3, 4];

fn main() -> ExitCode {
    let mut dom = suites::DominationTally::default();
    let reports = [
        suites::catalog_validity(),
        suites::irreflexive_tournaments(&mut dom),
        suites::loop_tournaments(&mut dom),
        suites::bipartite_tournaments(&mut dom),
        suites::minus_arc(&mut dom),
        suites::reflexive_multipartite(&mut dom),
        suites::balanced(&mut dom),
    ];
    let mut unexpected = Vec::new();
    let mut show = |report: suites::SuiteReport| {
        println!("{report}");
        if !report.passed && !KNOWN_FAILING.contains(&report.criterion) {
            unexpected.push(report.criterion);
        }
    };
    for report in reports {
        show(report);
    }
    show(suites::domination_report(&dom));
    show(suites::simple_orderings(5));
    show(suites::large_instances());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
