use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quantum_schubert::coset::{ParabolicQuotient, SpaceId};
use quantum_schubert::giambelli::solve_table;
use quantum_schubert::graded::GradedClass;
use quantum_schubert::refdata::{corpus, emit, verify_table, Corpus};
use quantum_schubert::ringrecon::QuantumRing;
use quantum_schubert::Error;

/// Quantum Schubert calculus on exceptional homogeneous spaces.
#[derive(Parser)]
#[command(name = "qschubert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Schubert classes with degree and label.
    Basis { space: SpaceId },
    /// Dimension, Fano index, Poincaré profile and generators.
    Info { space: SpaceId },
    /// Quantum product of two Schubert classes given by their labels.
    Mult { space: SpaceId, a: String, b: String },
    /// Giambelli polynomial of every Schubert class.
    Giambelli {
        space: SpaceId,
        #[arg(long, conflicts_with = "structured")]
        latex: bool,
        #[arg(long = "struct")]
        structured: bool,
    },
    /// Check reference tables against the reconstructed rings.
    Verify {
        /// A space such as E6/P1, or `all`.
        target: String,
        #[arg(long)]
        reference: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Basis { space } => {
            let q = ParabolicQuotient::enumerate(space);
            for w in 0..q.len() {
                println!("{w}\t{}\tσ{}", q.length(w), q.table_label(w));
            }
        }
        Command::Info { space } => {
            let ring = QuantumRing::build(space)?;
            let q = &ring.quotient;
            println!("space        {space}");
            println!("classes      {}", q.len());
            println!("dimension    {}", q.dimension);
            println!("fano index   {}", q.fano_index);
            let profile: Vec<String> = q.poincare_profile().iter().map(|n| n.to_string()).collect();
            println!("profile      {}", profile.join(" "));
            println!("generators   h = σ{}", q.table_label(ring.generators.h));
            for g in [ring.generators.s, ring.generators.t].into_iter().flatten() {
                println!("             {} = σ{} (degree {})", g.name, q.table_label(g.ordinal), g.degree);
            }
        }
        Command::Mult { space, a, b } => {
            let ring = QuantumRing::build(space)?;
            let q = &ring.quotient;
            let (x, y) = (q.parse_label(&a)?, q.parse_label(&b)?);
            let table = solve_table(&ring)?;
            let prod = ring.multiply(&table, &GradedClass::schubert(q, 0, x), &GradedClass::schubert(q, 0, y));
            println!("{}", prod.display(q));
        }
        Command::Giambelli { space, latex, structured } => {
            let ring = QuantumRing::build(space)?;
            let table = solve_table(&ring)?;
            if latex {
                print!("{}", emit::latex(&ring, &table));
            } else if structured {
                print!("{}", emit::to_reference(&ring, &table));
            } else {
                let q = &ring.quotient;
                for w in 0..q.len() {
                    println!("σ{} = {}", q.table_label(w), table.polynomial(w));
                }
            }
        }
        Command::Verify { target, reference } => {
            let corpus = match reference {
                Some(path) => corpus::parse(&std::fs::read_to_string(path)?)?,
                None => Corpus::shipped(),
            };
            let tables: Vec<_> = if target.eq_ignore_ascii_case("all") {
                corpus.tables.iter().collect()
            } else {
                let space: SpaceId = target.parse()?;
                vec![corpus
                    .table(space)
                    .ok_or_else(|| Error::Usage(format!("no table for {space} in the reference")))?]
            };
            let mut ok = true;
            let mut rows = 0;
            for t in tables {
                let (report, _) = verify_table(t)?;
                rows += report.rows.len();
                ok &= report.is_ok();
                print!("{report}");
            }
            println!("{} ({rows} rows)", if ok { "PASS" } else { "FAIL" });
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}
