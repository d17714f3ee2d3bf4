// Quantum Giambelli polynomials for every class, each certified by
// evaluating it back in the ring.
//
// `cargo run --release --example giambelli_tables -- F4/P4`

use quantum_schubert::coset::SpaceId;
use quantum_schubert::giambelli::solve_table;
use quantum_schubert::ringrecon::QuantumRing;

pub fn run_example_for(space: SpaceId) -> Result<(), Box<dyn std::error::Error>> {
    let ring = QuantumRing::build(space)?;
    let table = solve_table(&ring)?;
    let q = &ring.quotient;
    for d in 0..=q.dimension {
        println!("degree {d} (basis {:?})", table.bases[d as usize].iter().map(|m| m.to_string()).collect::<Vec<_>>());
        for w in q.degree_range(d) {
            let e = &table.entries[w];
            println!("  σ{} = {}{}", q.table_label(w), e.polynomial, if e.certified { "" } else { "  [NOT CERTIFIED]" });
        }
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_example_for("G2/P2".parse()?)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(s) => run_example_for(s.parse()?),
        None => run_example(),
    }
}
