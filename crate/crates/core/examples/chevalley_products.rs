// Multiplication by the hyperplane class: the classical Chevalley terms and
// the quantum corrections, for G2/P1 where `q` already appears in degree 5.

use quantum_schubert::chevalley::ChevalleyData;
use quantum_schubert::coset::ParabolicQuotient;
use quantum_schubert::graded::GradedClass;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = ParabolicQuotient::enumerate("G2/P1".parse()?);
    let chev = ChevalleyData::build(&q);
    for w in 0..q.len() {
        let x = GradedClass::schubert(&q, 0, w);
        println!("h ⋆ σ{} = {}", q.table_label(w), chev.apply_h(&q, &x)?.display(&q));
    }
    for k in 1..=5 {
        println!("h^{k} = {}", chev.h_power(&q, k)?.display(&q));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
