//! The full analysis report that backs the command-line tool, as text and
//! as JSON.

use moritakit::cli::{cmd_analyze, Report};

fn main() -> moritakit::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "ex14".to_string());
    let report = cmd_analyze(&input, 10, &["P2+P3".to_string()], false)?;
    print!("{}", report.to_text());
    let json = report.to_json();
    let back = Report::from_json(&json)?;
    assert_eq!(back, report);
    println!("JSON report: {} bytes", json.len());
    Ok(())
}
