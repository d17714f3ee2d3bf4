//! Each example exposes `run_example`; the cheap ones run here.

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(enumerate_cosets, "enumerate_cosets.rs");
example!(chevalley_products, "chevalley_products.rs");
example!(reconstruct_ring, "reconstruct_ring.rs");
example!(giambelli_tables, "giambelli_tables.rs");
example!(operator_cache, "operator_cache.rs");
example!(krylov_report, "krylov_report.rs");
example!(verify_corpus, "verify_corpus.rs");
example!(e8_tableau_identity, "e8_tableau_identity.rs");

#[test]
fn enumerate_cosets_runs() {
    enumerate_cosets::run_example().unwrap();
}

#[test]
fn chevalley_products_runs() {
    chevalley_products::run_example().unwrap();
}

#[test]
fn reconstruct_ring_runs() {
    reconstruct_ring::run_example().unwrap();
}

#[test]
fn giambelli_tables_runs() {
    giambelli_tables::run_example().unwrap();
}

#[test]
fn operator_cache_runs() {
    operator_cache::run_example().unwrap();
}

#[test]
fn krylov_report_runs() {
    krylov_report::run_example().unwrap();
}

#[test]
fn verify_corpus_runs() {
    verify_corpus::run_example().unwrap();
}

#[test]
fn e8_tableau_identity_runs() {
    e8_tableau_identity::run_example().unwrap();
}
