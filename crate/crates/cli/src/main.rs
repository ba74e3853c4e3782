//! `fibrun` — command-line surface over the run-constrained-graph library:
//! vertex counts and enumeration, exact and certified distances, barrier
//! certificates, exact diameter/radius by search, witness constructions,
//! certified lower-bound scans, tabulations, and an oracle-vs-formula
//! verification harness.
//!
//! Output for a fixed command line is byte-identical across runs: JSON is
//! emitted newline-terminated with keys in fixed order, sampling is seeded,
//! and `--jobs` affects time only, never output.

use clap::{Parser, Subcommand, ValueEnum};
use fibrun::barriers::distance_certified;
use fibrun::bounds::{
    best_lower_bound, compact_set, conjectured_diameter, improved_set, refutation_scan, table1,
    table2, table3,
};
use fibrun::constructions::{construct, ConstructionSpec, Family};
use fibrun::graph::{CheckMode, FormulaKind, GraphIndex};
use fibrun::strings::{check_vertex, count_vertices, enumerate_vertices, BitString};

#[derive(Parser)]
#[command(
    name = "fibrun",
    version,
    about = "Distances, certificates, and diameter bounds for run-constrained binary-string graphs"
)]
struct Cli {
    /// Worker threads for parallel subcommands (affects time only, never
    /// output)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    /// One vertex string per line, ascending lexicographic
    Lines,
    /// A single JSON object with the sorted vertex list
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    /// Certified distance from the barrier certificate (no graph build)
    Formula,
    /// Breadth-first search on the explicit graph
    Bfs,
    /// Both, checked against each other (exit 1 on disagreement)
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Barrier-free staircase-suffix pair, certified n − q
    H,
    /// Single barrier of b thickness-1 runs, certified n − q + b − 2
    NhBar1,
    /// Single barrier of t + 1 thickness-1 runs, certified n − q + t − 1
    NhBar2,
    /// Chain of c thickness-w runs, certified n − q + w(c − 2) (+1 prefixed)
    Thick,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::H => Family::H,
            FamilyArg::NhBar1 => Family::NhBar1,
            FamilyArg::NhBar2 => Family::NhBar2,
            FamilyArg::Thick => Family::ThickChain,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Number of vertices of the length-n graph
    Count {
        #[arg(long)]
        n: usize,
    },
    /// List every vertex of the length-n graph
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EnumFormat::Lines)]
        format: EnumFormat,
    },
    /// Distance between two vertices of the length-n graph
    Distance {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Barrier certificate for a vertex pair (JSON)
    Barriers {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Exact diameter of the length-n graph by exhaustive search
    Diameter {
        #[arg(long)]
        n: usize,
    },
    /// Exact radius of the length-n graph by exhaustive search
    Radius {
        #[arg(long)]
        n: usize,
    },
    /// Conjectured diameter closed form at length n
    Conjecture {
        #[arg(long)]
        n: u64,
    },
    /// Build and validate a named witness pair (JSON)
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Ending run length of the underlying staircase pair
        #[arg(long)]
        q: usize,
        /// Barrier run count (nh-bar1 only)
        #[arg(long)]
        b: Option<usize>,
        /// Barrier run thickness (thick only)
        #[arg(long)]
        w: Option<usize>,
        /// Barrier run count (thick only)
        #[arg(long)]
        c: Option<usize>,
        /// Prepend the extra thickness-1 run (thick only)
        #[arg(long)]
        prefixed: bool,
    },
    /// Best certified lower bound at length n across all families (JSON)
    Bound {
        #[arg(long)]
        n: usize,
    },
    /// Scan an inclusive length range for certified improvements over the
    /// conjectured diameter (JSON with the improved set in compact notation)
    Refute {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Render a tabulation as CSV with notes and baseline diffs
    Table {
        /// 1 = per-offset maxima (first single-barrier family), 2 =
        /// per-offset pinned lengths (second family), 3 = per-interval
        /// improvement partition
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        /// Interval parameter for tables 1 and 2 (ignored by table 3)
        #[arg(long, default_value_t = 15)]
        p: u64,
    },
    /// Compare the certified-distance formula against breadth-first search
    /// for every length up to max-n (exhaustive pairs for n ≤ 14, seeded
    /// samples beyond); exit 0 only if zero mismatches
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Sampled pairs per length for n > 14
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

macro_rules! json_line {
    ($value:expr) => {
        println!(
            "{}",
            serde_json::to_string($value).expect("serialization is infallible")
        )
    };
}

fn run(command: Command) -> fibrun::Result<i32> {
    match command {
        Command::Count { n } => {
            println!("{}", count_vertices(n));
        }
        Command::Enum { n, format } => {
            let vertices = enumerate_vertices(n)?;
            match format {
                EnumFormat::Lines => {
                    for v in &vertices {
                        println!("{v}");
                    }
                }
                EnumFormat::Json => {
                    let strings: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
                    println!(
                        "{{\"n\":{n},\"count\":{},\"vertices\":{}}}",
                        strings.len(),
                        serde_json::to_string(&strings).expect("serialization is infallible")
                    );
                }
            }
        }
        Command::Distance { n, u, v, method } => {
            let u: BitString = u.parse()?;
            let v: BitString = v.parse()?;
            check_vertex(&u, n)?;
            check_vertex(&v, n)?;
            match method {
                Method::Formula => {
                    println!("{}", distance_certified(&u, &v)?.certified_distance);
                }
                Method::Bfs => {
                    let g = GraphIndex::build(n)?;
                    println!("{}", g.distance_bfs(&u, &v)?);
                }
                Method::Both => {
                    let formula = distance_certified(&u, &v)?.certified_distance;
                    let bfs = GraphIndex::build(n)?.distance_bfs(&u, &v)?;
                    if formula != bfs {
                        eprintln!("mismatch: formula {formula}, bfs {bfs}");
                        return Ok(1);
                    }
                    println!("{formula}");
                }
            }
        }
        Command::Barriers { u, v } => {
            let u: BitString = u.parse()?;
            let v: BitString = v.parse()?;
            json_line!(&distance_certified(&u, &v)?);
        }
        Command::Diameter { n } => {
            let g = GraphIndex::build(n)?;
            println!("{}", g.diameter_exact().0);
        }
        Command::Radius { n } => {
            let g = GraphIndex::build(n)?;
            println!("{}", g.radius_exact().0);
        }
        Command::Conjecture { n } => {
            println!("{}", conjectured_diameter(n));
        }
        Command::Construct {
            family,
            n,
            q,
            b,
            w,
            c,
            prefixed,
        } => {
            let spec = ConstructionSpec {
                family: family.into(),
                n,
                q,
                b,
                w,
                c,
                prefixed,
            };
            json_line!(&construct(&spec)?);
        }
        Command::Bound { n } => {
            json_line!(&best_lower_bound(n));
        }
        Command::Refute { from, to } => {
            let reports = refutation_scan(from, to);
            let improved = improved_set(&reports);
            println!(
                "{{\"from\":{from},\"to\":{to},\"count\":{},\"improved\":\"{}\"}}",
                improved.len(),
                compact_set(&improved)
            );
        }
        Command::Table { id, p } => {
            let table = match id {
                1 => table1(p),
                2 => table2(p),
                _ => table3(),
            };
            print!("{}", table.to_csv());
        }
        Command::Verify {
            max_n,
            samples,
            seed,
        } => {
            let mut clean = true;
            for n in 1..=max_n {
                let g = GraphIndex::build(n)?;
                let mode = if n <= 14 {
                    CheckMode::Exhaustive
                } else {
                    CheckMode::Sampled {
                        pairs: samples,
                        seed,
                    }
                };
                let report = g.all_pairs_check(FormulaKind::Certified, mode);
                clean &= report.mismatches.is_empty();
                json_line!(&report);
            }
            if !clean {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
