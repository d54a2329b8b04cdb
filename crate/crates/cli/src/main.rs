//! `fs` — command-line front end for the flower-graphs library.
//!
//! Every subcommand is deterministic: repeated runs with the same arguments
//! produce byte-identical output. Exit status is 0 on success (and on
//! all-pass verification), 1 on a verification or operation failure, 2 on
//! usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use flower_graphs::coloring;
use flower_graphs::family::FSGraph;
use flower_graphs::formulas;
use flower_graphs::graph::EdgeId;
use flower_graphs::jaeger;
use flower_graphs::matchings::{enumerate_perfect_matchings, Matching, MatchingType};
use flower_graphs::two_factor::{
    complement_two_factor, is_hamiltonian, local_transform, major_profile, type2_structure,
    TransformVariant,
};
use flower_graphs::words;

#[derive(Parser)]
#[command(
    name = "fs",
    about = "Build and analyse the cubic claw-ring graphs FS(j,k)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Params {
    /// Family member: number of cycles induced by the external vertices
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    j: u8,
    /// Number of claws
    #[arg(long, value_parser = k_in_range)]
    k: usize,
}

fn k_in_range(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if k < 2 {
        return Err("k must be at least 2".into());
    }
    if k > 16 {
        return Err("k above 16 is not supported by the enumeration kernels".into());
    }
    Ok(k)
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildFormat {
    Edgelist,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TypeFilter {
    One,
    TwoZero,
    TwoOne,
}

impl std::str::FromStr for TypeFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(TypeFilter::One),
            "2.0" => Ok(TypeFilter::TwoZero),
            "2.1" => Ok(TypeFilter::TwoOne),
            _ => Err(format!("`{s}` is not one of 1, 2.0, 2.1")),
        }
    }
}

impl TypeFilter {
    fn matches(self, t: MatchingType) -> bool {
        matches!(
            (self, t),
            (TypeFilter::One, MatchingType::One)
                | (TypeFilter::TwoZero, MatchingType::TwoZero)
                | (TypeFilter::TwoOne, MatchingType::TwoOne)
        )
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct FS(j,k) and print it
    Build {
        #[command(flatten)]
        params: Params,
        /// Output format
        #[arg(long, value_enum, default_value = "edgelist")]
        format: BuildFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count perfect matchings
    Count {
        #[command(flatten)]
        params: Params,
        /// Break the count down by matching type
        #[arg(long)]
        by_type: bool,
    },
    /// List perfect matchings, one per line, as sorted edge serials
    Enumerate {
        #[command(flatten)]
        params: Params,
        /// Restrict to one matching type
        #[arg(long = "type")]
        type_filter: Option<TypeFilter>,
        /// Stop after this many matchings
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Analyse the 2-factor complementary to a matching
    #[command(name = "two-factor")]
    TwoFactor {
        #[command(flatten)]
        params: Params,
        /// Matching: an enumeration index, or a path to a JSON serial array
        #[arg(long)]
        matching: String,
    },
    /// Apply a local rewiring move to a type-1 matching
    Transform {
        #[command(flatten)]
        params: Params,
        /// Move variant
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        variant: u8,
        /// Anchor claw index
        #[arg(long)]
        anchor: usize,
        /// Matching: an enumeration index, or a path to a JSON serial array
        #[arg(long)]
        matching: String,
    },
    /// Compute the chromatic index (3 or 4)
    Chromatic {
        #[command(flatten)]
        params: Params,
    },
    /// Strong-matching decompositions
    Jaeger {
        #[command(flatten)]
        params: Params,
        /// List every Jaeger matching with its blue/red split
        #[arg(long)]
        enumerate: bool,
        /// Check that the Jaeger matchings cover each edge exactly twice
        #[arg(long)]
        bf_check: bool,
    },
    /// Block words of type-2 matchings (even k >= 4)
    Words {
        #[command(flatten)]
        params: Params,
        /// List the words whose matchings have hamiltonian complements
        #[arg(long)]
        list_hamiltonian: bool,
    },
    /// Compare every closed-form count against enumeration
    Verify {
        /// Largest k to verify (from 2 up)
        #[arg(long, value_parser = k_in_range)]
        kmax: usize,
        /// Also write the table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("FS_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: FS_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn serial_list(edges: &[EdgeId]) -> String {
    edges
        .iter()
        .map(|e| e.0.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Resolves `--matching` arguments: a bare integer indexes the enumeration
/// order, anything else is a path to a JSON array of edge serials.
fn resolve_matching<'g>(g: &'g FSGraph, arg: &str) -> Result<Matching<'g>, String> {
    if let Ok(index) = arg.parse::<usize>() {
        let ms = enumerate_perfect_matchings(g);
        if index >= ms.len() {
            return Err(format!(
                "matching index {index} out of range (FS({},{}) has {} matchings)",
                g.j(),
                g.k(),
                ms.len()
            ));
        }
        return Ok(ms.into_iter().nth(index).expect("index checked"));
    }
    let text = std::fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
    let serials: Vec<usize> =
        serde_json::from_str(&text).map_err(|e| format!("{arg} is not a JSON serial array: {e}"))?;
    Matching::new(g, serials.into_iter().map(EdgeId))
        .map_err(|e| format!("{arg} is not a perfect matching of FS({},{}): {e}", g.j(), g.k()))
}

fn emit(out: Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Build { params, format, out } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            let content = match format {
                BuildFormat::Edgelist => g.graph().to_edge_list(),
                BuildFormat::Json => {
                    let mut s = g.graph().to_json();
                    s.push('\n');
                    s
                }
            };
            emit(out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { params, by_type } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            let counts = flower_graphs::matchings::count_by_type(&g);
            if by_type {
                println!("mu {}", counts.mu);
                println!("mu1 {}", counts.mu1);
                println!("mu2.0 {}", counts.mu2_0);
                println!("mu2.1 {}", counts.mu2_1);
            } else {
                println!("{}", counts.mu);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            params,
            type_filter,
            limit,
        } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            let mut emitted = 0usize;
            for m in enumerate_perfect_matchings(&g) {
                if let Some(filter) = type_filter {
                    if !filter.matches(m.matching_type()) {
                        continue;
                    }
                }
                if let Some(limit) = limit {
                    if emitted >= limit {
                        break;
                    }
                }
                println!("{}", serial_list(m.edges()));
                emitted += 1;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TwoFactor { params, matching } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            let m = resolve_matching(&g, &matching)?;
            let (ty, _) = m.classify().map_err(|e| e.to_string())?;
            let tf = complement_two_factor(&m);
            let lengths: Vec<String> = tf.lengths().iter().map(|l| l.to_string()).collect();
            println!("type {ty}");
            println!("lengths {}", lengths.join(" "));
            println!("hamiltonian {}", is_hamiltonian(&tf));
            if ty == MatchingType::One && tf.cycle_count() == 2 {
                let profile = major_profile(&m, &tf).map_err(|e| e.to_string())?;
                let majors: Vec<String> = profile
                    .assignment
                    .iter()
                    .map(|c| (c + 1).to_string())
                    .collect();
                println!("majors {}", majors.join(" "));
                println!("k1 {}", profile.k1);
                println!("k2 {}", profile.k2);
            }
            if ty != MatchingType::One {
                let s = type2_structure(&m, &tf).map_err(|e| e.to_string())?;
                println!("long-cycle {}", s.long_cycle_length);
                println!("six-cycles {}", s.six_cycle_count);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform {
            params,
            variant,
            anchor,
            matching,
        } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            let m = resolve_matching(&g, &matching)?;
            let variant = TransformVariant::from_index(variant).expect("validated by clap");
            let before = complement_two_factor(&m);
            let next = local_transform(&m, variant, anchor).map_err(|e| e.to_string())?;
            let after = complement_two_factor(&next);
            println!("{}", serial_list(next.edges()));
            let fmt_lengths = |lengths: Vec<usize>| {
                lengths
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!(
                "lengths {} -> {}",
                fmt_lengths(before.lengths()),
                fmt_lengths(after.lengths())
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Chromatic { params } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            match coloring::find_3_edge_coloring(&g) {
                Some(coloring) => {
                    println!("3");
                    for (i, class) in coloring.classes().iter().enumerate() {
                        println!("color {i}: {}", serial_list(class));
                    }
                }
                None => println!("4"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Jaeger {
            params,
            enumerate,
            bf_check,
        } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            let found = jaeger::enumerate_jaeger_matchings(&g);
            println!("jaeger {}", !found.is_empty());
            println!("matchings {}", found.len());
            if enumerate {
                for (m, d) in &found {
                    println!(
                        "{} | blue {} | red {}",
                        serial_list(m.edges()),
                        serial_list(&d.blue),
                        serial_list(&d.red)
                    );
                }
            }
            if bf_check {
                let ms: Vec<Matching<'_>> = found.into_iter().map(|(m, _)| m).collect();
                // a member with 3 Jaeger matchings covers each edge once, so
                // listing each twice gives the six-matching double cover
                let six: Vec<Matching<'_>> = match ms.len() {
                    3 => ms.iter().chain(ms.iter()).cloned().collect(),
                    _ => ms,
                };
                let ok = jaeger::berge_fulkerson_check(&six).map_err(|e| e.to_string())?;
                println!("double-cover {ok}");
                if !ok {
                    return Ok(ExitCode::FAILURE);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Words {
            params,
            list_hamiltonian,
        } => {
            let g = FSGraph::build(params.j, params.k).map_err(|e| e.to_string())?;
            let p = params.k / 2;
            let total = words::hamiltonian_type2_count(&g).map_err(|e| e.to_string())?;
            println!("p {p}");
            println!("words-per-subtype {}", 3u64.pow(p as u32));
            println!("hamiltonian-per-subtype {}", total / 2);
            println!("hamiltonian-total {total}");
            if list_hamiltonian {
                for subtype in [MatchingType::TwoZero, MatchingType::TwoOne] {
                    for letters in words::all_words(p) {
                        if words::word_admits_hamiltonian(params.j, &letters) {
                            let w = words::BlockWord::new(letters, subtype)
                                .expect("generated letters are external roles");
                            println!("{w}");
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { kmax, csv } => {
            let report = formulas::verify_all(kmax);
            let mut table = String::new();
            write!(table, "{report}").expect("formatting cannot fail");
            print!("{table}");
            if let Some(path) = csv {
                std::fs::write(&path, report.to_csv())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let failures = report.failures();
            if failures.is_empty() {
                println!("all {} checks pass", report.checks.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{} of {} checks fail", failures.len(), report.checks.len());
                Ok(ExitCode::FAILURE)
            }
        }
    }
}
