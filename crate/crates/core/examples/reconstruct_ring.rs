// Rebuild the quantum ring of a space from its Chevalley operator: solve the
// extra generator operators and check the ring laws.
//
// `cargo run --release --example reconstruct_ring -- E7/P7`

use quantum_schubert::coset::SpaceId;
use quantum_schubert::ringrecon::QuantumRing;

pub fn run_example_for(space: SpaceId) -> Result<(), Box<dyn std::error::Error>> {
    let ring = QuantumRing::build(space)?;
    let q = &ring.quotient;
    println!("{space}: {} classes, dimension {}, Fano index {}", q.len(), q.dimension, q.fano_index);
    for g in [ring.generators.s, ring.generators.t].into_iter().flatten() {
        println!("  {} = σ{} (degree {})", g.name, q.table_label(g.ordinal), g.degree);
    }
    for rep in &ring.reports {
        for o in &rep.orders {
            println!(
                "  M_{} at q^{}: {} unknowns, {} equations, nullity {}",
                rep.generator, o.order, o.unknowns, o.equations, o.nullity
            );
        }
    }
    let ops = ring.operators();
    for (i, a) in ops.iter().enumerate() {
        println!("  M_{} self-adjoint: {}", a.name, ring.is_self_adjoint(a));
        for b in &ops[i + 1..] {
            println!("  M_{} M_{} = M_{} M_{}: {}", a.name, b.name, b.name, a.name, ring.commute(a, b));
        }
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_example_for("E6/P2".parse()?)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(s) => run_example_for(s.parse()?),
        None => run_example(),
    }
}
