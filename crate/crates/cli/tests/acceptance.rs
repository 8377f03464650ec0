//! The acceptance suite: runs every verification criterion at its pinned
//! expected values and prints one pass/fail line per criterion.
//!
//! Run with `cargo test --release -p tautocycle-cli --test acceptance`
//! (add `-- --nocapture` to see the per-criterion lines while running).

use tautocycle::verify;

fn readme_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md")
}

#[test]
fn acceptance_suite() {
    let results = verify::run_all(42, Some(&readme_path()));
    for r in &results {
        println!("{}", r.line());
    }
    assert_eq!(results.len(), 12);
    let failures: Vec<String> =
        results.iter().filter(|r| !r.passed).map(|r| r.line()).collect();
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
