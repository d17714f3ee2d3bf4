// Enumerate the Schubert classes of every space: counts, dimension, Fano
// index and the Poincaré profile, then the full basis of G2/P2.

use quantum_schubert::coset::{ParabolicQuotient, SpaceId};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<6} {:>7} {:>4} {:>5}  profile", "space", "classes", "dim", "fano");
    for space in SpaceId::ALL {
        let q = ParabolicQuotient::enumerate(space);
        let profile: Vec<String> = q.poincare_profile().iter().map(|n| n.to_string()).collect();
        println!("{:<6} {:>7} {:>4} {:>5}  {}", space.to_string(), q.len(), q.dimension, q.fano_index, profile.join(" "));
    }

    let q = ParabolicQuotient::enumerate("G2/P2".parse()?);
    println!("\nG2/P2 basis:");
    for w in 0..q.len() {
        let e = q.element(w);
        println!("  σ{} degree {} word {:?} dual σ{}", q.table_label(w), e.length, e.word, q.table_label(q.dual(w)));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
