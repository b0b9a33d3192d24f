//! Runs the bundled golden corpus in-process.

fn main() {
    let text = include_str!("../data/golden.jsonl");
    let report = symint::cli::corpus::run_corpus(text, 1e-6);
    print!("{report}");
    if report.failed() > 0 {
        std::process::exit(5);
    }
}
