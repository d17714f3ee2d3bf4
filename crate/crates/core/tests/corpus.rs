use quantum_schubert::coset::{ParabolicQuotient, SpaceId};
use quantum_schubert::poly::Monomial;
use quantum_schubert::rational::{q_int, Q};
use quantum_schubert::refdata::corpus::{parse, Label};
use quantum_schubert::refdata::{verify_table, Corpus, RowStatus};
use quantum_schubert::Error;

#[test]
fn shipped_row_counts() {
    let corpus = Corpus::shipped();
    let counts: Vec<usize> = SpaceId::ALL.iter().map(|&s| corpus.table(s).unwrap().rows.len()).collect();
    assert_eq!(counts, [27, 72, 126, 56, 240, 24, 24, 6, 6]);
    assert_eq!(corpus.row_count(), 581);
}

#[test]
fn g2_p2_top_row() {
    let corpus = Corpus::shipped();
    let table = corpus.table("G2/P2".parse().unwrap()).unwrap();
    let row = table.row(&"(3,3)".parse::<Label>().unwrap()).unwrap();
    let half = |n: i64, d: i64| Q::new(n.into(), d.into());
    assert_eq!(
        row.terms,
        vec![(half(1, 6), Monomial::new(3, 0, 0, 0)), (half(-1, 2), Monomial::new(0, 0, 0, 1))]
    );
}

#[test]
fn every_table_validates_and_round_trips() {
    let corpus = Corpus::shipped();
    for t in &corpus.tables {
        t.validate(&ParabolicQuotient::enumerate(t.space)).unwrap();
        let text = t.to_string();
        let back = parse(&text).unwrap();
        assert_eq!(back.tables[0].to_string(), text);
        assert_eq!(back.tables[0].rows.len(), t.rows.len());
    }
}

#[test]
fn empty_file_is_a_parse_error() {
    assert!(matches!(parse(""), Err(Error::Parse { .. })));
}

#[test]
fn single_corruption_names_one_row() {
    let corpus = Corpus::shipped();
    for space in ["E6/P1", "E7/P7", "G2/P2"] {
        let mut table = corpus.table(space.parse().unwrap()).unwrap().clone();
        let victim = table.rows.len() / 2 + 1;
        let c = &mut table.rows[victim].terms[0].0;
        *c = c.clone() * q_int(2);
        let (rep, _) = verify_table(&table).unwrap();
        assert!(!rep.is_ok());
        let bad: Vec<_> = rep.failures().collect();
        assert_eq!(bad.len(), 1, "{space}");
        assert_eq!(bad[0].label, table.rows[victim].label);
        assert!(matches!(bad[0].status, RowStatus::Mismatch { .. }));
        assert!(rep.to_string().contains(&format!("row {}", table.rows[victim].label)));
    }
}

#[test]
fn verification_is_deterministic() {
    let corpus = Corpus::shipped();
    let t = corpus.table("E7/P7".parse().unwrap()).unwrap();
    let a = verify_table(t).unwrap().0.to_string();
    let b = verify_table(t).unwrap().0.to_string();
    assert_eq!(a, b);
}
