use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qgeom::emit::{emit, report_json, structure_json, OutputFormat, Payload};
use qgeom::geometry::{
    find_configuration, operator_structure, symplectic_polar_space, IncidenceStructure, KindCensus, SearchOptions,
};
use qgeom::hypercomplex::{fano_from_table, oct_mul, oct_table, Octonion};
use qgeom::liealg::{change_basis, commuting_block_decomposition, fano_arrangement_so4, j_plus_minus, make_so4};
use qgeom::pauli::{all_points, commutation_graph, commutes, degree, multiply, PauliString, PhasedPauli};
use qgeom::subalgebra::{classify, decad_from_pentad, heptad, heptads, lie_closure, pentads, OperatorSet};
use qgeom::verify::{render, verify_all, verify_one, RunReport, DEFAULT_SEED};
use serde_json::json;

/// Pauli-operator geometry, octonions and so(4), checked exactly.
#[derive(Parser)]
#[command(name = "qgeom", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format: text, json or dot.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    emit: OutputFormat,
    /// Number of qubits.
    #[arg(short = 'n', long = "qubits", global = true)]
    qubits: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Leave timings out of reports.
    #[arg(long, global = true)]
    quiet: bool,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: qgeom::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Octonion multiplication table and its Fano plane.
    #[command(subcommand)]
    Oct(OctCommand),
    /// Pauli strings: products, commutation, degrees.
    #[command(subcommand)]
    Pauli(PauliCommand),
    /// Operator lines and incidence geometries.
    #[command(subcommand)]
    Geom(GeomCommand),
    /// Heptads, pentads, decads and closures.
    #[command(subcommand)]
    Sub(SubCommand),
    /// Structure-constant Lie algebras.
    #[command(subcommand)]
    Lie(LieCommand),
    /// Run every check and report.
    VerifyAll,
}

#[derive(Subcommand)]
enum OctCommand {
    /// The 7×7 unit product table.
    Table,
    /// Table checks and sampled algebraic identities.
    Verify,
    /// The Fano plane read off the table.
    Fano,
    /// Product of two octonions given as 8 comma-separated integers.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum PauliCommand {
    /// Exact product of two phased strings, e.g. `XY` and `-iZZ`.
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Whether two strings commute.
    Commutes {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Commutation degree of the n-qubit graph.
    Degree,
    /// The commutation graph.
    Graph,
}

#[derive(Subcommand)]
enum GeomCommand {
    /// All operator lines among the n-qubit points.
    Lines,
    /// The commuting lines only; for two qubits, GQ(2,2).
    Doily,
    /// Sub-collections of the two-qubit lines with given degree and census.
    Find {
        #[arg(long, default_value_t = 15)]
        b: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        commuting: Option<usize>,
        #[arg(long)]
        anticommuting: Option<usize>,
        /// Report every solution instead of the first.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum SubCommand {
    /// All fifteen heptads.
    Heptads,
    /// The heptad around one center.
    Heptad {
        #[arg(long)]
        center: String,
    },
    /// All pentads.
    Pentads,
    /// The decad of a pentad given as comma-separated labels.
    Decad {
        #[arg(long)]
        pentad: String,
    },
    /// Closure flags, center, census and label of a set.
    Classify {
        #[arg(long)]
        set: String,
    },
    /// Commutator closure of a seed set.
    Closure {
        #[arg(long)]
        set: String,
    },
}

#[derive(Subcommand)]
enum LieCommand {
    /// so(4) over L and A.
    So4 {
        /// Run the so(4) checks.
        #[arg(long)]
        check: bool,
        /// Show the algebra in the J± basis with its blocks.
        #[arg(long)]
        split: bool,
        /// The seven-point arrangement with the unit.
        #[arg(long)]
        fano: bool,
    },
}

enum Failure {
    Check,
    Usage(String),
}

impl From<qgeom::Error> for Failure {
    fn from(e: qgeom::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Oct(c) => oct(c, g),
        Command::Pauli(c) => pauli(c, g),
        Command::Geom(c) => geom(c, g),
        Command::Sub(c) => sub(c, g),
        Command::Lie(c) => lie(c, g),
        Command::VerifyAll => reports(&verify_all(g.seed), g),
    }
}

fn json_text(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

fn no_dot(g: &Global, what: &'static str) -> Result<(), Failure> {
    if g.emit == OutputFormat::Dot {
        return Err(qgeom::Error::IncompatibleFormat {
            format: "dot",
            payload: what,
        }
        .into());
    }
    Ok(())
}

/// Prints reports; a failing report turns into exit code 1 after printing.
fn reports(reports: &[RunReport], g: &Global) -> Outcome {
    no_dot(g, "check report")?;
    let out = if g.emit == OutputFormat::Json {
        json_text(
            reports
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed, "expected": r.expected, "actual": r.actual}))
                .collect(),
        )
    } else {
        render(reports, !g.quiet)
    };
    if reports.iter().all(|r| r.passed) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check)
    }
}

fn qubits(g: &Global, default: usize) -> usize {
    g.qubits.unwrap_or(default)
}

fn octonion_arg(s: &str) -> Result<Octonion, Failure> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("octonion {s:?}: {e}")))?;
    let coefficients: [i64; 8] = parts
        .try_into()
        .map_err(|_| Failure::Usage(format!("octonion {s:?}: expected 8 coefficients")))?;
    Ok(Octonion::from_integers(coefficients))
}

fn oct(c: &OctCommand, g: &Global) -> Outcome {
    match c {
        OctCommand::Table => Ok(emit(Payload::Table(&oct_table()), g.emit)?),
        OctCommand::Verify => {
            let names = ["octonion table", "fano plane", "hypercomplex properties"];
            let rs: Vec<_> = names.iter().filter_map(|n| verify_one(n, g.seed)).collect();
            reports(&rs, g)
        }
        OctCommand::Fano => Ok(emit(Payload::Structure(&fano_from_table(&oct_table())), g.emit)?),
        OctCommand::Mul { a, b } => {
            let p = oct_mul(&octonion_arg(a)?, &octonion_arg(b)?);
            Ok(emit(Payload::Octonion(&p), g.emit)?)
        }
    }
}

fn phased(label: &str, g: &Global) -> Result<PhasedPauli, Failure> {
    Ok(match g.qubits {
        Some(n) => qgeom::pauli::parse_pauli(label, n)?,
        None => label.parse()?,
    })
}

fn pauli(c: &PauliCommand, g: &Global) -> Outcome {
    match c {
        PauliCommand::Mul { a, b } => {
            no_dot(g, "Pauli product")?;
            let (a, b) = (phased(a, g)?, phased(b, g)?);
            let p = multiply(&a, &b)?;
            Ok(match g.emit {
                OutputFormat::Json => json_text(json!({
                    "left": a.to_string(),
                    "right": b.to_string(),
                    "product": p.to_string(),
                    "string": p.string.label(),
                    "phase_exp": p.phase_exp(),
                })),
                _ => format!("{p}\n"),
            })
        }
        PauliCommand::Commutes { a, b } => {
            no_dot(g, "commutation test")?;
            let (a, b) = (phased(a, g)?.string, phased(b, g)?.string);
            let result = commutes(&a, &b)?;
            Ok(match g.emit {
                OutputFormat::Json => json_text(json!({"left": a.label(), "right": b.label(), "commutes": result})),
                _ => format!("{result}\n"),
            })
        }
        PauliCommand::Degree => {
            no_dot(g, "degree")?;
            let n = qubits(g, 2);
            let d = degree(n)?;
            Ok(match g.emit {
                OutputFormat::Json => json_text(json!({"qubits": n, "degree": d.to_string()})),
                _ => format!("N={n}: D={d}\n"),
            })
        }
        PauliCommand::Graph => Ok(emit(Payload::Graph(&commutation_graph(qubits(g, 2))?), g.emit)?),
    }
}

fn geom(c: &GeomCommand, g: &Global) -> Outcome {
    match c {
        GeomCommand::Lines => {
            let s = operator_structure(&all_points(qubits(g, 2))?)?;
            Ok(emit(Payload::Structure(&s), g.emit)?)
        }
        GeomCommand::Doily => Ok(emit(
            Payload::Structure(&symplectic_polar_space(qubits(g, 2))?),
            g.emit,
        )?),
        GeomCommand::Find {
            b,
            r,
            commuting,
            anticommuting,
            all,
        } => {
            let candidates = operator_structure(&all_points(qubits(g, 2))?)?;
            let census = KindCensus {
                commuting: *commuting,
                anticommuting: *anticommuting,
            };
            let options = if *all {
                SearchOptions::all()
            } else {
                SearchOptions::first()
            };
            let found = find_configuration(&candidates, *b, *r, census, options)?;
            let selections = found
                .iter()
                .map(|sel| {
                    let lines = sel.iter().map(|&i| candidates.lines()[i].clone()).collect();
                    IncidenceStructure::new(candidates.points().to_vec(), lines)
                })
                .collect::<Result<Vec<_>, _>>()?;
            if selections.is_empty() {
                eprintln!("no configuration found");
                return Err(Failure::Check);
            }
            match g.emit {
                OutputFormat::Json => Ok(json_text(
                    serde_json::to_value(selections.iter().map(structure_json).collect::<Vec<_>>())
                        .expect("values serialize"),
                )),
                OutputFormat::Dot if selections.len() > 1 => Err(Failure::Usage(
                    "dot output takes a single configuration; drop --all".into(),
                )),
                format => {
                    let mut out = String::new();
                    for s in &selections {
                        out.push_str(&emit(Payload::Structure(s), format)?);
                    }
                    Ok(out)
                }
            }
        }
    }
}

fn sub(c: &SubCommand, g: &Global) -> Outcome {
    let many = |reports: Vec<qgeom::subalgebra::SubalgebraReport>| -> Outcome {
        no_dot(g, "subalgebra report")?;
        Ok(match g.emit {
            OutputFormat::Json => json_text(
                serde_json::to_value(reports.iter().map(report_json).collect::<Vec<_>>()).expect("values serialize"),
            ),
            _ => {
                let mut out = String::new();
                for r in &reports {
                    out.push_str(&emit(Payload::Report(r), OutputFormat::Text)?);
                }
                out
            }
        })
    };
    match c {
        SubCommand::Heptads => many(heptads(qubits(g, 2))?),
        SubCommand::Heptad { center } => {
            let p = PauliString::parse_label(center)?;
            Ok(emit(Payload::Report(&heptad(&p)?), g.emit)?)
        }
        SubCommand::Pentads => {
            no_dot(g, "pentad list")?;
            let sets = pentads(qubits(g, 2))?;
            Ok(match g.emit {
                OutputFormat::Json => json_text(json!(sets.iter().map(OperatorSet::labels).collect::<Vec<_>>())),
                _ => sets.iter().map(|s| format!("{s}\n")).collect(),
            })
        }
        SubCommand::Decad { pentad } => {
            let p = OperatorSet::parse(pentad)?;
            Ok(emit(Payload::Report(&decad_from_pentad(&p)?), g.emit)?)
        }
        SubCommand::Classify { set } => {
            let s = OperatorSet::parse(set)?;
            Ok(emit(Payload::Report(&classify(&s)), g.emit)?)
        }
        SubCommand::Closure { set } => {
            let s = lie_closure(&OperatorSet::parse(set)?)?;
            Ok(emit(Payload::Report(&classify(&s)), g.emit)?)
        }
    }
}

fn lie(c: &LieCommand, g: &Global) -> Outcome {
    let LieCommand::So4 { check, split, fano } = c;
    match (check, split, fano) {
        (true, false, false) => reports(&[verify_one("so(4)", g.seed).expect("so(4) check exists")], g),
        (false, true, false) => {
            let a = change_basis(&make_so4(), &j_plus_minus())?;
            let mut out = emit(Payload::Algebra(&a), g.emit)?;
            if g.emit == OutputFormat::Text {
                for block in commuting_block_decomposition(&a) {
                    let names: Vec<&str> = block.iter().map(|&k| a.labels()[k].as_str()).collect();
                    out.push_str(&format!("block: {}\n", names.join(" ")));
                }
            }
            Ok(out)
        }
        (false, false, true) => Ok(emit(Payload::Structure(&fano_arrangement_so4()), g.emit)?),
        (false, false, false) => Ok(emit(Payload::Algebra(&make_so4()), g.emit)?),
        _ => Err(Failure::Usage("choose at most one of --check, --split, --fano".into())),
    }
}
