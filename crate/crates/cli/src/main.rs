use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use strongchordal::catalog;
use strongchordal::domination::greedy_domination;
use strongchordal::gamma::{find_strong_ordering, OracleOutcome};
use strongchordal::io::{self, DigraphDocument};
use strongchordal::recognize::{self as rec, Certificate, Confidence, RecognitionResult};
use strongchordal::suites;
use strongchordal::{Digraph, Error};

macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! say_raw {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

const YES: u8 = 0;
const NO: u8 = 1;
const USAGE: u8 = 2;
const INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "strongchordal", version, about = "Strong chordality of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide strong chordality with a class-specific recognizer.
    Recognize {
        #[arg(long, value_enum, default_value_t = ClassArg::Auto)]
        class: ClassArg,
        /// Print the result as one line of JSON.
        #[arg(long)]
        json: bool,
        /// Also print the digraph in DOT format.
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
    /// Exhaustive search for a strong ordering.
    Oracle {
        /// Node budget; unlimited when absent.
        #[arg(long)]
        budget: Option<u64>,
        file: PathBuf,
    },
    /// Minimum dominating set and maximum in-neighbourhood packing from a strong ordering.
    Dominate {
        /// File listing a strong ordering.
        #[arg(long, conflicts_with = "auto")]
        ordering: Option<PathBuf>,
        /// Find the ordering by recognition (the default).
        #[arg(long)]
        auto: bool,
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// List or print catalogued obstructions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run an acceptance enumeration (1 to 10, or `all`).
    Enumerate {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Emit { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Tournament,
    TournamentWithLoops,
    Bipartite,
    MinusArc,
    ReflexiveMultipartite,
    Balanced,
    Auto,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: USAGE, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: USAGE, msg: msg.into() }
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let doc = io::parse_digraph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(doc.to_digraph()?)
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn exit_code(r: &RecognitionResult) -> u8 {
    match (r.is_yes(), r.confidence) {
        (true, _) => YES,
        (false, Confidence::Certified) => NO,
        (false, Confidence::Uncertified) => INCONCLUSIVE,
    }
}

fn describe(cert: &Certificate) -> String {
    match cert {
        Certificate::NamedObstruction { name, vertices } => format!("induced {name} on vertices {}", join(vertices)),
        Certificate::ArcDisjointTriangles { first, second } => {
            format!("arc-disjoint triangles {} and {}", join(first), join(second))
        }
        Certificate::StructuralViolation { kind, vertices } => format!("{} {}", kind.as_str(), join(vertices)).trim_end().to_string(),
        Certificate::OracleWitness { vertices, minimal } => {
            let what = if *minimal { "minimal subdigraph" } else { "subdigraph" };
            format!("{what} without a strong ordering on vertices {}", join(vertices))
        }
        Certificate::OracleExhausted => "search budget exhausted".to_string(),
    }
}

fn print_result(r: &RecognitionResult) {
    let verdict = if r.is_yes() { "yes" } else { "no" };
    say!("{verdict} ({})", r.class_used.as_str());
    if let Some(ord) = &r.ordering {
        say!("ordering: {}", join(ord.as_slice()));
    }
    if let Some(cert) = &r.certificate {
        let tag = if r.confidence == Confidence::Uncertified { "uncertified: " } else { "" };
        say!("certificate: {tag}{}", describe(cert));
    }
}

fn recognize(class: ClassArg, d: &Digraph) -> Result<RecognitionResult, Failure> {
    Ok(match class {
        ClassArg::Tournament if d.is_irreflexive() => rec::recognize_irreflexive_tournament(d)?,
        ClassArg::Tournament | ClassArg::TournamentWithLoops => rec::recognize_tournament_with_loops(d)?,
        ClassArg::Bipartite => rec::recognize_irreflexive_bipartite(d)?,
        ClassArg::MinusArc => rec::recognize_tournament_minus_arc(d)?,
        ClassArg::ReflexiveMultipartite => rec::recognize_reflexive_multipartite(d)?,
        ClassArg::Balanced => rec::recognize_balanced(d)?,
        ClassArg::Auto => rec::recognize_auto(d),
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Recognize { class, json, dot, file } => {
            let d = read_digraph(&file)?;
            let r = recognize(class, &d)?;
            if json {
                say!("{}", io::serialize_result(&r));
            } else {
                print_result(&r);
            }
            if dot {
                say_raw!("{}", io::emit_dot(&d));
            }
            Ok(exit_code(&r))
        }
        Command::Oracle { budget, file } => {
            let d = read_digraph(&file)?;
            Ok(match find_strong_ordering(&d, budget) {
                OracleOutcome::Found(ord) => {
                    say!("yes\nordering: {}", join(ord.as_slice()));
                    YES
                }
                OracleOutcome::NoOrdering => {
                    say!("no");
                    NO
                }
                OracleOutcome::Exhausted => {
                    say!("inconclusive: budget exhausted");
                    INCONCLUSIVE
                }
            })
        }
        Command::Dominate { ordering, auto: _, json, file } => {
            let d = read_digraph(&file)?;
            let ord = match ordering {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    io::parse_ordering(&text)?
                }
                None => {
                    let r = rec::recognize_auto(&d);
                    match r.ordering {
                        Some(ord) => ord,
                        None => {
                            eprintln!("not strongly chordal: {}", r.certificate.as_ref().map(describe).unwrap_or_default());
                            return Ok(exit_code(&r));
                        }
                    }
                }
            };
            let s = greedy_domination(&d, &ord)?;
            if json {
                say!("{}", io::serialize_domination(&s));
            } else {
                say!("dominating set ({}): {}", s.dominating_set.len(), join(&s.dominating_set));
                say!("packing set ({}): {}", s.packing_set.len(), join(&s.packing_set));
            }
            Ok(YES)
        }
        Command::Catalog { action: CatalogAction::List } => {
            for o in catalog::catalog() {
                say!("{}\t{} vertices\t{:?}", o.name, o.pattern.n(), o.family);
            }
            Ok(YES)
        }
        Command::Catalog { action: CatalogAction::Emit { name } } => {
            let o = catalog::by_name(&name)?;
            let doc = DigraphDocument { name: Some(o.name), ..DigraphDocument::from_digraph(&o.pattern) };
            say_raw!("{}", io::emit_digraph(&doc));
            Ok(YES)
        }
        Command::Enumerate { suite } => {
            let reports = if suite == "all" {
                suites::run_all()
            } else {
                let k: u8 = suite.parse().map_err(|_| usage(format!("unknown suite {suite:?}: expected 1 to 10 or all")))?;
                vec![suites::run(k).ok_or_else(|| usage(format!("unknown suite {k}: expected 1 to 10 or all")))?]
            };
            for r in &reports {
                say!("{r}");
            }
            Ok(if reports.iter().all(|r| r.passed) { YES } else { NO })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { YES };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
