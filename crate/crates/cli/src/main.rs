use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hypersemi_core::dsl::{self, AlphabetPolicy, HuntOptions};
use hypersemi_core::structure_file::{self, to_json};
use hypersemi_core::{
    enumerate, enumerate_parallel, generated_ideals, is_bi_ideal, is_ideal, is_idempotent,
    is_left_ideal, is_quasi_ideal, is_regular, is_right_ideal, verify_corollary13,
    verify_corollary14, verify_lemma11, verify_prop7, verify_theorem12, verify_theorem8,
    verify_theorem9, Alphabet, EnumerationSpec, Hypergroupoid, RegularityEvidence, Subset,
    VerificationReport,
};

/// Finite hypersemigroups: associativity, ideals, regularity, enumeration
/// and counterexample search.
///
/// Exit status: 0 when the verdict is true (or the search is exhausted),
/// 1 when it is false (or a counterexample was found), 2 on usage or input errors.
#[derive(Debug, Parser)]
#[command(name = "hypersemi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide associativity and list every violated triple.
    Check { file: PathBuf },
    /// Ideal-class predicates of a subset and the ideals it generates.
    Props {
        file: PathBuf,
        /// Comma-separated 0-based elements, e.g. `0,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
    },
    /// Decide regularity and show per-element evidence.
    Regular { file: PathBuf },
    /// Run a theorem checker on a structure.
    Verify {
        file: PathBuf,
        /// 7 (right/left products are bi-ideals), 8, 9, 11, 12, 13 or 14.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["7", "8", "9", "11", "12", "13", "14"]))]
        theorem: String,
    },
    /// Enumerate all tables of one order.
    Enumerate(EnumerateArgs),
    /// Search for a counterexample to a conjecture.
    Hunt(HuntArgs),
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    order: usize,
    /// Keep only associative tables.
    #[arg(long)]
    associative: bool,
    /// One table per isomorphism class.
    #[arg(long)]
    canonical: bool,
    /// Print statistics instead of the tables.
    #[arg(long)]
    count: bool,
    /// Cells drawn from the singletons and the full set only.
    #[arg(long)]
    restricted: bool,
}

#[derive(Debug, Args)]
struct HuntArgs {
    #[arg(long)]
    max_order: usize,
    #[arg(
        long,
        required_unless_present = "conjecture_file",
        conflicts_with = "conjecture_file"
    )]
    conjecture: Option<String>,
    #[arg(long)]
    conjecture_file: Option<PathBuf>,
    /// Skip structures that are not regular.
    #[arg(long)]
    regular_only: bool,
    #[arg(long)]
    canonical: bool,
    /// Use the restricted alphabet from this order on.
    #[arg(long, value_name = "K")]
    restrict_from: Option<usize>,
}

/// Either a verdict with its report, or an input error.
type Outcome = Result<(bool, String), String>;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load(path: &Path) -> Result<Hypergroupoid, String> {
    structure_file::load(path).map_err(|e| e.to_string())
}

fn check(file: &Path) -> Outcome {
    let h = load(file)?;
    let mut out = format!("structure: {h}\n");
    let violations = h.associativity_violations();
    writeln!(out, "hypersemigroup: {}", yes_no(violations.is_empty())).unwrap();
    if !violations.is_empty() {
        writeln!(out, "{} violated triple(s):", violations.len()).unwrap();
        for w in &violations {
            writeln!(out, "  {w}").unwrap();
        }
    }
    Ok((violations.is_empty(), out))
}

fn props(file: &Path, elements: &[usize]) -> Outcome {
    let h = load(file)?;
    let a = Subset::from_elements(elements.iter().copied())
        .filter(|a| a.fits_order(h.order()) && !a.is_empty())
        .ok_or_else(|| format!("subset must be nonempty with elements below {}", h.order()))?;
    let err = |e: hypersemi_core::Error| e.to_string();
    let mut out = format!("subset: {a}\n");
    let rows = [
        ("left ideal", is_left_ideal(&h, a).map_err(err)?),
        ("right ideal", is_right_ideal(&h, a).map_err(err)?),
        ("ideal", is_ideal(&h, a).map_err(err)?),
        ("quasi-ideal", is_quasi_ideal(&h, a).map_err(err)?),
        ("idempotent", is_idempotent(&h, a).map_err(err)?),
    ];
    for (name, value) in rows {
        writeln!(out, "{name}: {}", yes_no(value)).unwrap();
    }
    if h.is_hypersemigroup() {
        writeln!(
            out,
            "bi-ideal: {}",
            yes_no(is_bi_ideal(&h, a).map_err(err)?)
        )
        .unwrap();
        let g = generated_ideals(&h, a).map_err(err)?;
        writeln!(
            out,
            "R(A) = {}\nL(A) = {}\nI(A) = {}",
            g.right, g.left, g.two_sided
        )
        .unwrap();
    } else {
        out.push_str("bi-ideal and generated ideals: undefined (not a hypersemigroup)\n");
    }
    Ok((true, out))
}

fn regular(file: &Path) -> Outcome {
    let h = load(file)?;
    let evidence = is_regular(&h).map_err(|e| e.to_string())?;
    let mut out = format!("regular: {}\n", yes_no(evidence.is_regular()));
    match &evidence {
        RegularityEvidence::Regular { witnesses } => {
            for (x, w) in witnesses.iter().enumerate() {
                writeln!(out, "  {x} ∈ {{{x}}}*{{{w}}}*{{{x}}}").unwrap();
            }
        }
        RegularityEvidence::Irregular { element } => {
            let sx = Subset::singleton(*element);
            let sandwich = h
                .product_chain(&[sx, h.full_set(), sx])
                .map_err(|e| e.to_string())?;
            writeln!(
                out,
                "  {element} ∉ {{{element}}}*H*{{{element}}} = {sandwich}"
            )
            .unwrap();
        }
    }
    Ok((evidence.is_regular(), out))
}

fn render(report: &VerificationReport) -> String {
    let mut out = format!(
        "theorem: {}\nholds: {}\n{}\n",
        report.theorem,
        yes_no(report.holds),
        report.summary
    );
    for c in &report.checks {
        writeln!(
            out,
            "  [{}] {} ({} instances)",
            if c.holds { "ok" } else { "FAIL" },
            c.name,
            c.instances
        )
        .unwrap();
    }
    if let Some(w) = &report.witness {
        writeln!(out, "witness: {}", w.violation).unwrap();
        for (name, s) in w.violation.subsets() {
            writeln!(out, "  {name} = {s}").unwrap();
        }
    }
    out
}

fn verify(file: &Path, theorem: &str) -> Outcome {
    let h = load(file)?;
    let report = match theorem {
        "7" => verify_prop7(&h),
        "8" => verify_theorem8(&h),
        "9" => verify_theorem9(&h),
        "11" => verify_lemma11(&h),
        "12" => verify_theorem12(&h),
        "13" => verify_corollary13(&h),
        "14" => verify_corollary14(&h),
        other => unreachable!("clap restricts the theorem to known values, got {other}"),
    }
    .map_err(|e| e.to_string())?;
    Ok((report.holds, render(&report)))
}

fn enumerate_cmd(args: &EnumerateArgs) -> Outcome {
    let mut spec = EnumerationSpec::new(args.order);
    if args.associative {
        spec = spec.associative_only();
    }
    if args.canonical {
        spec = spec.canonical();
    }
    if args.restricted {
        spec = spec.with_alphabet(Alphabet::singletons_and_full(args.order));
    }
    let stats = if args.count {
        enumerate_parallel(&spec, |_| {})
    } else {
        let stdout = io::stdout();
        let mut sink = BufWriter::new(stdout.lock());
        let mut broken = false;
        let stats = enumerate(&spec, |h| {
            if !broken && writeln!(sink, "{}", to_json(h)).is_err() {
                broken = true;
            }
        });
        let _ = sink.flush();
        stats
    }
    .map_err(|e| e.to_string())?;
    if !args.count {
        return Ok((true, String::new()));
    }
    let out = format!(
        "total {}\nvisited {}\nassociative {}\nregular {}\npruned {}\n",
        stats.total_tables,
        stats.visited,
        stats.associative_count,
        stats.regular_count,
        stats.pruned_nodes
    );
    Ok((true, out))
}

fn hunt_cmd(args: &HuntArgs) -> Outcome {
    let text = match (&args.conjecture, &args.conjecture_file) {
        (Some(t), _) => t.clone(),
        (None, Some(p)) => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?
        }
        (None, None) => unreachable!("clap requires a conjecture source"),
    };
    let conjecture = dsl::parse(&text).map_err(|e| e.to_string())?;
    let options = HuntOptions {
        max_order: args.max_order,
        alphabet: args
            .restrict_from
            .map_or(AlphabetPolicy::Full, AlphabetPolicy::RestrictFrom),
        canonicalize: args.canonical,
        regular_only: args.regular_only,
    };
    let report = dsl::hunt(&conjecture, &options).map_err(|e| e.to_string())?;
    Ok((
        report.exhausted(),
        format!("conjecture: {conjecture}\n{report}"),
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check { file } => check(file),
        Command::Props { file, subset } => props(file, subset),
        Command::Regular { file } => regular(file),
        Command::Verify { file, theorem } => verify(file, theorem),
        Command::Enumerate(args) => enumerate_cmd(args),
        Command::Hunt(args) => hunt_cmd(args),
    };
    match outcome {
        Ok((verdict, report)) => {
            print!("{report}");
            let _ = io::stdout().flush();
            ExitCode::from(if verdict { 0 } else { 1 })
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
