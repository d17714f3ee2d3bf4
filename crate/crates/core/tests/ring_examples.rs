use quantum_schubert::coset::{ParabolicQuotient, SpaceId};
use quantum_schubert::graded::GradedClass;
use quantum_schubert::linalg::SparseSystem;
use quantum_schubert::poly::{GiambelliPolynomial, Monomial};
use quantum_schubert::rational::{q_int, Q};
use quantum_schubert::refdata::corpus::Label;
use quantum_schubert::refdata::{verify_table, Corpus};
use quantum_schubert::ringrecon::{EvalOrder, Evaluator, QuantumRing};

fn frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn poly(terms: &[(Q, (u32, u32, u32, u32))]) -> GiambelliPolynomial {
    GiambelliPolynomial::from_terms(terms.iter().map(|(c, (h, s, t, q))| (c.clone(), Monomial::new(*h, *s, *t, *q))))
}

fn evaluates_to(space: &str, p: &GiambelliPolynomial, label: &str) {
    let ring = QuantumRing::build(space.parse().unwrap()).unwrap();
    let w = ring.quotient.parse_label(label).unwrap();
    let v = Evaluator::new(&ring, EvalOrder::HOutermost).polynomial(p).unwrap();
    assert_eq!(v.as_single_class(), Some(w), "{space}: {p} = {}", v.display(&ring.quotient));
}

#[test]
fn e6_p1_degree_six_row() {
    let p = poly(&[(q_int(-1), (6, 0, 0, 0)), (q_int(3), (2, 1, 0, 0))]);
    evaluates_to("E6/P1", &p, "(1,1,1,2,1,0)");
}

#[test]
fn f4_p4_degree_eleven_row() {
    let p = poly(&[(frac(14, 3), (11, 0, 0, 0)), (q_int(-11), (7, 1, 0, 0)), (q_int(-1), (0, 0, 0, 1))]);
    evaluates_to("F4/P4", &p, "(2,3,4,3)");
}

#[test]
fn e7_p1_degree_four_row() {
    let p = poly(&[(q_int(1), (4, 0, 0, 0)), (q_int(-1), (0, 1, 0, 0))]);
    evaluates_to("E7/P1", &p, "(1,1,1,0,1,0,0)");
}

#[test]
fn g2_rows_with_q() {
    evaluates_to("G2/P1", &poly(&[(frac(1, 2), (5, 0, 0, 0)), (q_int(-1), (0, 0, 0, 1))]), "(4,2)");
    evaluates_to("G2/P2", &poly(&[(frac(1, 6), (3, 0, 0, 0)), (frac(-1, 2), (0, 0, 0, 1))]), "(3,3)");
}

#[test]
fn g2_p2_h_times_degree_two() {
    let ring = QuantumRing::build("G2/P2".parse().unwrap()).unwrap();
    let q = &ring.quotient;
    let x = GradedClass::schubert(q, 0, q.parse_label("(3,1)").unwrap());
    let got = ring.star(&poly(&[(q_int(1), (1, 0, 0, 0))]), &x);
    let mut want = GradedClass::schubert(q, 0, q.parse_label("(3,3)").unwrap()).scaled(&q_int(2));
    want.add_scaled(&GradedClass::schubert(q, 1, 0), &q_int(1));
    assert_eq!(got, want);
}

#[test]
fn e6_p1_h_power_six() {
    let ring = QuantumRing::build("E6/P1".parse().unwrap()).unwrap();
    let q = &ring.quotient;
    let got = ring.chevalley.h_power(q, 6).unwrap();
    assert_eq!(got.coefficient(0, q.parse_label("(1,1,1,1,1,1)").unwrap()), q_int(3));
    assert_eq!(got.coefficient(0, q.parse_label("(1,1,1,2,1,0)").unwrap()), q_int(2));
    assert_eq!(got.len(), 2);
}

#[test]
fn dimensions_and_duals() {
    let q = ParabolicQuotient::enumerate("E6/P1".parse().unwrap());
    let h = q.parse_label("(1,0,0,0,0,0)").unwrap();
    assert_eq!(q.table_label(q.dual(h)).to_string(), "(2,2,3,4,3,1)");
    let e8 = ParabolicQuotient::enumerate("E8/P8".parse().unwrap());
    for w in e8.degree_range(6) {
        assert_eq!(e8.length(e8.dual(w)), 51);
    }
}

/// Writes `s²` in the printed basis of a degree by inverting that degree's
/// rows, and compares it with `M_s(σ_s)`.
fn square_of_s_by_inversion(space: SpaceId, degree: u32) {
    let corpus = Corpus::shipped();
    let table = corpus.table(space).unwrap();
    let (_, res) = verify_table(table).unwrap();
    let ring = &res.ring;
    let q = &ring.quotient;
    let rows: Vec<_> = table
        .rows
        .iter()
        .filter(|r| r.label.degree(q).unwrap() == degree)
        .collect();
    let mut monomials: Vec<Monomial> = rows.iter().flat_map(|r| r.terms.iter().map(|(_, m)| *m)).collect();
    let s2 = Monomial::new(0, 2, 0, 0);
    monomials.push(s2);
    monomials.sort();
    monomials.dedup();
    assert_eq!(monomials.len(), rows.len(), "{space}: square system");

    // Σ_i y_i P_i = s² coefficientwise
    let mut sys = SparseSystem::new(rows.len());
    for m in &monomials {
        let coeffs = rows.iter().enumerate().filter_map(|(i, r)| {
            r.terms.iter().find(|(_, n)| n == m).map(|(c, _)| (i, c.clone()))
        });
        sys.add_equation(coeffs, if *m == s2 { q_int(1) } else { q_int(0) });
    }
    let y = sys.solve().expect("invertible");
    let mut predicted = GradedClass::zero(degree);
    for (r, c) in rows.iter().zip(&y) {
        predicted.add_scaled(&GradedClass::schubert(q, 0, res.labels[&r.label]), c);
    }
    let s = ring.generators.s.unwrap().ordinal;
    let got = ring.s.as_ref().unwrap().apply(&GradedClass::schubert(q, 0, s));
    assert_eq!(got, predicted, "{space}: {}", got.display(q));
}

#[test]
fn e6_p1_s_squared_from_degree_eight_rows() {
    square_of_s_by_inversion("E6/P1".parse().unwrap(), 8);
}

#[test]
fn e8_p8_s_squared_from_degree_twelve_rows() {
    square_of_s_by_inversion("E8/P8".parse().unwrap(), 12);
}

#[test]
fn e8_generators_are_indexed_rows() {
    let corpus = Corpus::shipped();
    let table = corpus.table("E8/P8".parse().unwrap()).unwrap();
    let (_, res) = verify_table(table).unwrap();
    let q = &res.ring.quotient;
    let s = res.labels[&"6.2".parse::<Label>().unwrap()];
    let t = res.labels[&"10.3".parse::<Label>().unwrap()];
    assert_eq!(res.ring.generators.s.unwrap().ordinal, s);
    assert_eq!(res.ring.generators.t.unwrap().ordinal, t);
    assert_eq!(q.table_label(s).to_string(), "(0,0,1,1,1,1,1,1)");
    assert_eq!(q.table_label(t).to_string(), "(0,1,2,2,2,1,1,1)");
}

#[test]
fn e8_p8_product_of_degree_twelve_and_sixteen() {
    let ring = QuantumRing::build("E8/P8".parse().unwrap()).unwrap();
    let table = quantum_schubert::giambelli::solve_table(&ring).unwrap();
    let q = &ring.quotient;
    let x = GradedClass::schubert(q, 0, q.parse_label("(0,1,2,2,2,2,2,1)").unwrap());
    let y = GradedClass::schubert(q, 0, q.parse_label("(1,2,3,3,2,2,2,1)").unwrap());
    let p = ring.multiply(&table, &x, &y);
    assert_eq!(p.coefficient(0, q.parse_label("(2,4,5,5,4,3,2,3)").unwrap()), q_int(4));
    assert_eq!(p.len(), 4);
    assert_eq!(p.coefficient_sum(), q_int(7));
}
