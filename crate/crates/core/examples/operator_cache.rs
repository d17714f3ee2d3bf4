// Store the solved generator operators on disk and load them back.

use quantum_schubert::refdata::cache::{cache_load, cache_store};
use quantum_schubert::ringrecon::QuantumRing;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = QuantumRing::build("E6/P1".parse()?)?;
    let dir = tempfile::tempdir()?;
    let path = dir.path().join("e6p1.ops");
    cache_store(&ring, &path)?;
    let text = std::fs::read_to_string(&path)?;
    for line in text.lines().take(6) {
        println!("{line}");
    }
    println!("... {} lines", text.lines().count());
    let back = cache_load(&path)?;
    println!("round trip identical: {}", back.s == ring.s && back.t == ring.t);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
