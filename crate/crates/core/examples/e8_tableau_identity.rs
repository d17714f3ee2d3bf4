// E8/P8: the square of a degree-12 class is a single Schubert class, and
// structure-constant sums of a few products.

use quantum_schubert::graded::GradedClass;
use quantum_schubert::poly::{GiambelliPolynomial, Monomial};
use quantum_schubert::rational::q_int;
use quantum_schubert::refdata::verify::{E8_SQUARE, E8_SQUARE_BASE};
use quantum_schubert::refdata::{resolve::resolve, Corpus};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let space = "E8/P8".parse()?;
    let corpus = Corpus::shipped();
    let table = corpus.table(space).ok_or("no E8/P8 table")?;
    let quot = quantum_schubert::coset::ParabolicQuotient::enumerate(space);
    table.validate(&quot)?;
    let res = resolve(table, quot)?;
    let ring = &res.ring;
    let q = &ring.quotient;

    let a = q.parse_label(E8_SQUARE_BASE)?;
    let row = table
        .rows
        .iter()
        .find(|r| res.labels.get(&r.label) == Some(&a))
        .ok_or("no row for the base class")?;
    println!("σ{E8_SQUARE_BASE} = {}   (row {})", row.polynomial(), row.label);
    let sq = ring.star(&row.polynomial(), &GradedClass::schubert(q, 0, a));
    println!("σ{E8_SQUARE_BASE}² = {}   (expected σ{E8_SQUARE})", sq.display(q));

    let gen = |name: char| GiambelliPolynomial::from_terms([(q_int(1), if name == 's' { Monomial::new(0, 1, 0, 0) } else { Monomial::new(0, 0, 1, 0) })]);
    let class = |name: char| {
        let g = if name == 's' { ring.generators.s } else { ring.generators.t };
        GradedClass::schubert(q, 0, g.expect("E8/P8 has s and t").ordinal)
    };
    let products = [
        ("s ⋆ s", ring.star(&gen('s'), &class('s'))),
        ("s ⋆ t", ring.star(&gen('s'), &class('t'))),
        ("t ⋆ t", ring.star(&gen('t'), &class('t'))),
        ("s ⋆ σ", ring.star(&gen('s'), &GradedClass::schubert(q, 0, a))),
        ("t ⋆ σ", ring.star(&gen('t'), &GradedClass::schubert(q, 0, a))),
    ];
    for (name, p) in products {
        println!("{name}: coefficient sum {} over {} terms", p.coefficient_sum(), p.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
