//! Rendering computed Giambelli tables as LaTeX blocks or as reference-format text.

use crate::giambelli::GiambelliTable;
use crate::refdata::corpus::{GeneratorDecl, Label, ReferenceRow, ReferenceTable};
use crate::ringrecon::QuantumRing;

/// One `array` block per degree, in the "Schubert cells in degree d" layout.
pub fn latex(ring: &QuantumRing, table: &GiambelliTable) -> String {
    let quot = &ring.quotient;
    let mut out = String::new();
    for d in 0..=quot.dimension {
        out += &format!("\\noindent\nSchubert cells in degree ${d}$:\n\n\\noindent\n$\n\\begin{{array}}{{rcl}}\n");
        for w in quot.degree_range(d) {
            out += &format!("\\sigma_{{{}}} & = & {}\\\\ \n", quot.table_label(w), table.polynomial(w).to_latex());
        }
        out += "\\end{array}\n\\vspace{.5cm}\n$\n\n";
    }
    out
}

/// The computed table in the reference schema, with root labels throughout.
pub fn to_reference(ring: &QuantumRing, table: &GiambelliTable) -> ReferenceTable {
    let quot = &ring.quotient;
    let generators = [ring.generators.s, ring.generators.t]
        .into_iter()
        .flatten()
        .map(|g| GeneratorDecl {
            name: g.name,
            degree: g.degree,
            label: Label::Root(quot.table_label(g.ordinal)),
        })
        .collect();
    let rows = (0..quot.len())
        .map(|w| ReferenceRow {
            label: Label::Root(quot.table_label(w)),
            terms: table.polynomial(w).terms().to_vec(),
            line: 0,
        })
        .collect();
    ReferenceTable {
        space: quot.space,
        generators,
        rows,
    }
}
