// How much of each graded piece is reached from the unit by `h` alone, by
// `h, s`, and by `h, s, t`: the deficits show where extra generators are
// needed.

use quantum_schubert::coset::SpaceId;
use quantum_schubert::ringrecon::QuantumRing;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for space in ["E6/P1", "F4/P4", "G2/P1"] {
        let space: SpaceId = space.parse()?;
        let ring = QuantumRing::build(space)?;
        println!("{space}");
        println!("  {:>3} {:>4} {:>4} {:>4} {:>4}", "deg", "dim", "h", "h,s", "h,s,t");
        for row in ring.krylov_report() {
            println!(
                "  {:>3} {:>4} {:>4} {:>4} {:>4}",
                row.degree, row.dimension, row.deficit_h(), row.deficit_hs(), row.deficit_hst()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
