// Check every shipped reference table: each printed polynomial must
// evaluate to exactly its named Schubert class.

use quantum_schubert::refdata::{verify_corpus, Corpus};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Corpus::shipped();
    let mut rows = 0;
    let mut ok = true;
    for report in verify_corpus(&corpus) {
        let report = report?;
        rows += report.rows.len();
        ok &= report.is_ok();
        print!("{report}");
    }
    println!("{} ({rows} rows)", if ok { "PASS" } else { "FAIL" });
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
