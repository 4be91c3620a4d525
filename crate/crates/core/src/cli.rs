//! Command-line front end. Exit codes: 0 all checks passed, 1 some check
//! failed, 2 unreadable or invalid input, 3 an enumeration exceeded its budget.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::catalog::{self, MAX_CATALOG_N};
use crate::cycles::count_odd_cycles;
use crate::io::{self, GraphDocument, ReportFormat};
use crate::matrix::{adjacency_matrix, degree_matrix, incidence_matrix, laplacian, signless_laplacian};
use crate::subgraph::{self, EnumError, TuCensus};
use crate::verify::{verify_selected, TheoremId, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "signless", version, about = "Signless Laplacian minors and their subgraph expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Text => ReportFormat::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    Trees,
    OddCycles,
    Ous,
}

#[derive(Subcommand)]
enum Command {
    /// Print D, A, N, L and Q.
    Matrices { file: PathBuf },
    /// Compare det(Q(i)) with its TU-subgraph expansion.
    Minor {
        file: PathBuf,
        /// 1-indexed vertex.
        #[arg(long)]
        vertex: usize,
    },
    /// Count qualifying TU-subgraphs by number of odd-unicyclic components.
    Census {
        file: PathBuf,
        /// Count (n-1)-edge subgraphs for this 1-indexed vertex instead of n-edge ones.
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Check every identity and bound on one graph.
    Verify {
        file: PathBuf,
        /// Comma-separated theorem ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<TheoremId>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify every graph in a directory or a graph6 file.
    Batch {
        path: PathBuf,
        /// Graphs with more vertices are skipped.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print t(G), oc(G) or ous(G).
    Count {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: Quantity,
    },
    /// List graphs on n vertices up to isomorphism, as graph6.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

/// Error carrying the exit code it maps to.
struct Exit(i32, String);

impl From<EnumError> for Exit {
    fn from(e: EnumError) -> Self {
        let code = if matches!(e, EnumError::BudgetExceeded { .. }) { EXIT_BUDGET } else { EXIT_INPUT };
        Exit(code, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> Exit {
    Exit(EXIT_INPUT, msg.into())
}

fn read_documents(path: &Path) -> Result<Vec<GraphDocument>, Exit> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let is_g6 = path.extension().is_some_and(|e| e == "g6");
    let docs = if is_g6 {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(io::parse_graph6)
            .collect::<Result<Vec<_>, _>>()
    } else {
        io::parse_graphs(&text)
    };
    let mut docs = docs.map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    let many = docs.len() > 1;
    for (k, doc) in docs.iter_mut().enumerate() {
        doc.name = stem.clone().map(|s| if many { format!("{s}:{}", k + 1) } else { s });
    }
    Ok(docs)
}

fn read_single(path: &Path) -> Result<GraphDocument, Exit> {
    let mut docs = read_documents(path)?;
    match docs.len() {
        1 => Ok(docs.pop().unwrap()),
        0 => Err(input_error(format!("{}: no graph found", path.display()))),
        k => Err(input_error(format!("{}: expected one graph, found {k}", path.display()))),
    }
}

fn vertex_arg(v: usize, n: usize) -> Result<usize, Exit> {
    if (1..=n).contains(&v) {
        Ok(v - 1)
    } else {
        Err(input_error(format!("vertex {v} is outside 1..={n}")))
    }
}

fn census_lines(census: &TuCensus, out: &mut String) {
    for (c, count) in &census.by_components {
        writeln!(out, "c={c}: {count} subgraph(s), weight 4^{c}").unwrap();
    }
    writeln!(out, "total {} subgraph(s), weighted sum {}", census.total(), census.weighted_sum()).unwrap();
}

fn report_exit(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| !r.all_passed()) {
        EXIT_FAILED
    } else if reports.iter().any(VerificationReport::budget_exceeded) {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

fn run(cli: Cli, out: &mut String) -> Result<i32, Exit> {
    match cli.command {
        Command::Matrices { file } => {
            let g = read_single(&file)?.graph;
            for (label, m) in [
                ("D", degree_matrix(&g)),
                ("A", adjacency_matrix(&g)),
                ("N", incidence_matrix(&g)),
                ("L = D - A", laplacian(&g)),
                ("Q = D + A", signless_laplacian(&g)),
            ] {
                writeln!(out, "{label}:\n{m}").unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Minor { file, vertex } => {
            let g = read_single(&file)?.graph;
            let i = vertex_arg(vertex, g.vertex_count())?;
            let q = signless_laplacian(&g);
            let det = q.principal_deleted(i).and_then(|m| m.det()).map_err(|e| input_error(e.to_string()))?;
            let census = subgraph::enumerate_minor_census(&g, i)?;
            writeln!(out, "det(Q({vertex})) = {det}").unwrap();
            census_lines(&census, out);
            let ok = census.weighted_sum() == det;
            writeln!(out, "{}", if ok { "expansion matches" } else { "expansion MISMATCH" }).unwrap();
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Census { file, vertex } => {
            let g = read_single(&file)?.graph;
            let census = match vertex {
                Some(v) => subgraph::enumerate_minor_census(&g, vertex_arg(v, g.vertex_count())?)?,
                None => subgraph::enumerate_det_census(&g)?,
            };
            census_lines(&census, out);
            Ok(EXIT_OK)
        }
        Command::Verify { file, only, format } => {
            let doc = read_single(&file)?;
            let only = if only.is_empty() { TheoremId::ALL.to_vec() } else { only };
            let mut report = verify_selected(&doc.graph, &only);
            report.name = doc.name;
            writeln!(out, "{}", io::emit_report(&report, format.into()).trim_end()).unwrap();
            Ok(report_exit(std::slice::from_ref(&report)))
        }
        Command::Batch { path, max_n, format } => {
            let files = if path.is_dir() {
                let mut files: Vec<PathBuf> = fs::read_dir(&path)
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.is_file())
                    .collect();
                files.sort();
                files
            } else {
                vec![path]
            };
            let mut docs = Vec::new();
            for f in &files {
                docs.extend(read_documents(f)?);
            }
            let (docs, skipped): (Vec<_>, Vec<_>) = docs.into_iter().partition(|d| d.graph.vertex_count() <= max_n);
            for d in &skipped {
                eprintln!("skipping {}: n = {} > {max_n}", d.name.as_deref().unwrap_or("graph"), d.graph.vertex_count());
            }
            let reports: Vec<VerificationReport> = docs
                .into_par_iter()
                .map(|d| {
                    let mut r = verify_selected(&d.graph, &TheoremId::ALL);
                    r.name = d.name;
                    r
                })
                .collect();
            for r in &reports {
                writeln!(out, "{}", io::emit_report(r, format.into()).trim_end()).unwrap();
                if matches!(format, Format::Text) {
                    out.push('\n');
                }
            }
            Ok(report_exit(&reports))
        }
        Command::Count { file, what } => {
            let g = read_single(&file)?.graph;
            let value: BigInt = match what {
                Quantity::Trees if g.vertex_count() == 1 => BigInt::from(1),
                Quantity::Trees => laplacian(&g).principal_deleted(0).and_then(|m| m.det()).expect("square minor"),
                Quantity::OddCycles => count_odd_cycles(&g).into(),
                Quantity::Ous => subgraph::count_ous(&g)?.into(),
            };
            writeln!(out, "{value}").unwrap();
            Ok(EXIT_OK)
        }
        Command::Catalog { n, connected } => {
            if !(1..=MAX_CATALOG_N).contains(&n) {
                return Err(input_error(format!("--n must be in 1..={MAX_CATALOG_N}")));
            }
            let graphs = if connected { catalog::connected_graphs(n) } else { catalog::all_graphs(n) };
            for g in graphs {
                writeln!(out, "{}", io::write_graph6(&g)).unwrap();
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first), runs the command, writes its output
/// to stdout and returns the process exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    };
    print!("{out}");
    code
}
