//! `hookring`: command-line access to the hookring library.
//!
//! Exit status: 0 on success, 1 when a verification finds a mismatch or an
//! internal check fails, 2 on usage errors (bad flags, bad partitions,
//! sizes over a ceiling).

mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hookring::dvir::dvir_check_ring;
use hookring::hook_generation::{verify_decomposition, HookGenerator};
use hookring::littlewood_richardson::{enumerate_expansions, lr_coefficient};
use hookring::partitions::parse_partition;
use hookring::reflection_groups::g12::{
    g12_generation_check_with_ceiling, g12_labels, g12_tensor, validate_rules, G12Set, DEFAULT_G12_CEILING,
};
use hookring::reflection_groups::{bn_experiments_with_ceiling, BnCharacterTable, DEFAULT_BN_CEILING};
use hookring::rep_ring::RepRing;
use hookring::suite::{sym_hook_generation, verify_all, Ceilings, FLOAT_TOLERANCE};
use hookring::sym_characters::{CharacterTable, DEFAULT_SYM_CEILING};
use hookring::{Error, Partition};

use output::{Emitter, Format};

const SYM_CEILING_VAR: &str = "HOOKRING_SYM_CEILING";
const B_CEILING_VAR: &str = "HOOKRING_B_CEILING";
const G12_CEILING_VAR: &str = "HOOKRING_G12_CEILING";

#[derive(Parser, Debug)]
#[command(name = "hookring", version, about = "Exact computations in representation rings of S_n, G(d,1,2) and B_n")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for the shuffled-order reruns of verify-all.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character table of S_n.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Kronecker product V_λ ⊗ V_μ.
    Kron {
        /// Defaults to |λ|.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
    },
    /// Littlewood–Richardson coefficient L_{λ,μ,ν}.
    Lr {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = partition_arg)]
        nu: Partition,
        /// Also list the expansions that are counted.
        #[arg(long)]
        list: bool,
    },
    /// Compare graded Kronecker products with LR coefficients over all triples.
    Dvir {
        #[arg(long)]
        n: usize,
        /// Include every mismatch in human output.
        #[arg(long)]
        report: bool,
    },
    /// Write V_λ as a polynomial in the exterior powers of V.
    Decompose {
        /// Defaults to |λ|.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        /// Evaluate the polynomial on every class and compare with χ_λ.
        #[arg(long)]
        verify: bool,
        /// Express in Λ^k V (E) or in Λ^k C^n (F).
        #[arg(long, value_enum, default_value_t = BasisArg::Standard)]
        basis: BasisArg,
    },
    /// Check whether a set of elements generates the representation ring.
    Generate {
        /// sym:N, b:N or g12:D.
        #[arg(long, value_parser = group_arg)]
        group: Group,
        /// hooks (sym, b), hooks+u (b), v+linear or linear (g12).
        #[arg(long)]
        set: String,
    },
    /// Hyperoctahedral group B_n: character table, or the exterior power experiments.
    Bn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        experiments: bool,
    },
    /// Rank-two group G(d,1,2): tensor products, or the generation check.
    G12 {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        check: bool,
    },
    /// Run every check up to the given ceilings.
    VerifyAll {
        #[arg(long, default_value_t = Ceilings::default().sym)]
        sym: usize,
        #[arg(long, default_value_t = Ceilings::default().b)]
        b: usize,
        #[arg(long, default_value_t = Ceilings::default().g12)]
        g12: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Standard,
    Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Group {
    Sym(usize),
    B(usize),
    G12(usize),
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| format!("{e}; expected a partition such as [3,2,1]"))
}

fn group_arg(s: &str) -> Result<Group, String> {
    let err = || format!("expected sym:N, b:N or g12:D, got {s:?}");
    let (kind, size) = s.split_once(':').ok_or_else(err)?;
    let size: usize = size.trim().parse().map_err(|_| err())?;
    match kind.trim() {
        "sym" => Ok(Group::Sym(size)),
        "b" => Ok(Group::B(size)),
        "g12" => Ok(Group::G12(size)),
        _ => Err(err()),
    }
}

/// Command failure, carrying its exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::Order { .. }
            | Error::HookRange { .. }
            | Error::SizeMismatch { .. }
            | Error::TooSmall { .. }
            | Error::Ceiling { .. }
            | Error::InvalidLabel(_) => Failure::Usage(e.to_string()),
            Error::NonIntegral(_) | Error::Overflow(_) | Error::Consistency(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn ceiling(var: &str, default: usize) -> Result<usize, Failure> {
    match std::env::var(var) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{var}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(default),
    }
}

fn sym_ring(n: usize) -> Result<RepRing, Failure> {
    let table = CharacterTable::with_ceiling(n, ceiling(SYM_CEILING_VAR, DEFAULT_SYM_CEILING)?)?;
    Ok(RepRing::from_table(table))
}

fn size_of(n: Option<usize>, lambda: &Partition) -> Result<usize, Failure> {
    match n {
        Some(n) if n != lambda.size() => Err(Failure::Usage(format!(
            "--lambda {lambda} is a partition of {}, not of --n {n}",
            lambda.size()
        ))),
        _ => Ok(lambda.size()),
    }
}

#[derive(Serialize)]
struct KronOutput<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    product: hookring::VirtualCharacter,
}

#[derive(Serialize)]
struct LrOutput<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    coefficient: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansions: Option<Vec<hookring::littlewood_richardson::Expansion>>,
}

#[derive(Serialize)]
struct DecomposeOutput<'a> {
    lambda: &'a Partition,
    expression: String,
    polynomial: &'a hookring::hook_generation::HookExpression,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

#[derive(Serialize)]
struct G12Product {
    x: String,
    y: String,
    product: String,
}

#[derive(Serialize)]
struct G12CheckOutput {
    d: usize,
    labels: usize,
    full: bool,
    rank: usize,
    index: Option<u64>,
    iterations: usize,
    linear_only_full: bool,
    float_oracle_passed: bool,
}

fn run(cli: Cli, out: &mut Emitter) -> Outcome {
    match cli.command {
        Command::Table { n } => {
            let ring = sym_ring(n)?;
            out.sym_table(ring.table())?;
        }
        Command::Kron { n, lambda, mu } => {
            let n = size_of(n, &lambda)?;
            let ring = sym_ring(n)?;
            let product = ring.kronecker_irreducible(&lambda, &mu)?;
            out.value(&product.to_string(), &KronOutput { lambda: &lambda, mu: &mu, product })?;
        }
        Command::Lr { lambda, mu, nu, list } => {
            let coefficient = lr_coefficient(&lambda, &mu, &nu);
            let expansions = list.then(|| enumerate_expansions(&lambda, &mu, Some(&nu)));
            let mut human = coefficient.to_string();
            for e in expansions.iter().flatten() {
                let boxes: Vec<String> = e.boxes.iter().map(|b| format!("({},{}):{}", b.row, b.col, b.label)).collect();
                human.push_str(&format!("\n  {}", boxes.join(" ")));
            }
            out.value(
                &human,
                &LrOutput {
                    lambda: &lambda,
                    mu: &mu,
                    nu: &nu,
                    coefficient,
                    expansions,
                },
            )?;
        }
        Command::Dvir { n, report } => {
            let ring = sym_ring(n)?;
            let r = dvir_check_ring(&ring)?;
            let mut human = format!(
                "n={}: {} graded triples, {} vanishing triples, {} mismatches",
                r.n, r.triples_checked, r.vanishing_checked, r.mismatches
            );
            if report {
                for m in &r.mismatch_details {
                    human.push_str(&format!("\n  {} {} {}: C={} L={:?}", m.lambda, m.mu, m.nu, m.kronecker, m.littlewood_richardson));
                }
            }
            out.value(&human, &r)?;
            if !r.passed() {
                return Err(Failure::Mismatch(format!("{} mismatches", r.mismatches)));
            }
        }
        Command::Decompose { n, lambda, verify, basis } => {
            let n = size_of(n, &lambda)?;
            let ring = sym_ring(n)?;
            let gen = HookGenerator::new(&ring);
            let mut e = gen.hook_decompose(&lambda)?;
            if matches!(basis, BasisArg::Permutation) {
                e = e.to_permutation_basis()?;
            }
            let verified = if verify {
                Some(verify_decomposition(ring.table(), &lambda, &e)?)
            } else {
                None
            };
            let mut human = e.to_string();
            if let Some(v) = verified {
                human.push_str(if v { "\nverified" } else { "\nNOT verified" });
            }
            out.value(
                &human,
                &DecomposeOutput {
                    lambda: &lambda,
                    expression: e.to_string(),
                    polynomial: &e,
                    verified,
                },
            )?;
            if verified == Some(false) {
                return Err(Failure::Mismatch(format!("expression for {lambda} does not evaluate to its character")));
            }
        }
        Command::Generate { group, set } => {
            let report = match (group, set.as_str()) {
                (Group::Sym(n), "hooks") => sym_hook_generation(&sym_ring(n)?)?,
                (Group::B(n), "hooks" | "hooks+u") => {
                    let r = bn_experiments_with_ceiling(n, ceiling(B_CEILING_VAR, DEFAULT_BN_CEILING)?)?;
                    if set == "hooks" {
                        r.hooks
                    } else {
                        r.hooks_plus_u
                    }
                }
                (Group::G12(d), "v+linear" | "linear") => {
                    let which = if set == "linear" { G12Set::Linear } else { G12Set::VPlusLinear };
                    g12_generation_check_with_ceiling(d, which, ceiling(G12_CEILING_VAR, DEFAULT_G12_CEILING)?)?
                        .generation
                }
                (g, s) => {
                    return Err(Failure::Usage(format!(
                        "--set {s:?} is not available for {g:?}; expected hooks (sym, b), hooks+u (b), v+linear or linear (g12)"
                    )))
                }
            };
            let human = format!(
                "full: {}\nrank: {}\nindex: {}\niterations: {}",
                report.full,
                report.rank,
                report.index.map_or("infinite".to_string(), |i| i.to_string()),
                report.iterations
            );
            out.value(&human, &report)?;
        }
        Command::Bn { n, experiments } => {
            let max = ceiling(B_CEILING_VAR, DEFAULT_BN_CEILING)?;
            if experiments {
                let r = bn_experiments_with_ceiling(n, max)?;
                let mut human = String::new();
                for e in &r.exterior {
                    let terms: Vec<String> = e.terms.iter().map(|t| format!("{}*{}", t.coeff, t.label)).collect();
                    human.push_str(&format!("Λ^{} {:?} = {}\n", e.k, e.rep, terms.join(" + ")));
                }
                human.push_str(&format!("hooks: {:?}\nhooks+U: {:?}", r.hooks, r.hooks_plus_u));
                out.value(&human, &r)?;
            } else {
                out.bn_table(&BnCharacterTable::with_ceiling(n, max)?)?;
            }
        }
        Command::G12 { d, check } => {
            let max = ceiling(G12_CEILING_VAR, DEFAULT_G12_CEILING)?;
            if check {
                let full = g12_generation_check_with_ceiling(d, G12Set::VPlusLinear, max)?;
                let linear = g12_generation_check_with_ceiling(d, G12Set::Linear, max)?;
                let oracle = validate_rules(d)?;
                let o = G12CheckOutput {
                    d,
                    labels: full.labels,
                    full: full.generation.full,
                    rank: full.generation.rank,
                    index: full.generation.index,
                    iterations: full.generation.iterations,
                    linear_only_full: linear.generation.full,
                    float_oracle_passed: oracle.passed(FLOAT_TOLERANCE),
                };
                let human = format!(
                    "G({d},1,2): {} labels\nV + linear: full={} rank={} iterations={}\nlinear only: full={}\nfloat oracle: {}",
                    o.labels,
                    o.full,
                    o.rank,
                    o.iterations,
                    o.linear_only_full,
                    if o.float_oracle_passed { "passed" } else { "FAILED" }
                );
                out.value(&human, &o)?;
                let expected_linear = d == 1;
                if !o.full || !o.float_oracle_passed || o.linear_only_full != expected_linear {
                    return Err(Failure::Mismatch(format!("G({d},1,2) check failed")));
                }
            } else {
                if d == 0 || d > max {
                    return Err(Error::Ceiling { what: "G(d,1,2)", n: d, max }.into());
                }
                let labels = g12_labels(d);
                let mut rows = Vec::new();
                for (i, &x) in labels.iter().enumerate() {
                    for &y in &labels[i..] {
                        rows.push(G12Product {
                            x: x.to_string(),
                            y: y.to_string(),
                            product: g12_tensor(x, y, d)?.to_string(),
                        });
                    }
                }
                let human: Vec<String> = rows.iter().map(|r| format!("{} * {} = {}", r.x, r.y, r.product)).collect();
                out.value(&human.join("\n"), &rows)?;
            }
        }
        Command::VerifyAll { sym, b, g12 } => {
            let r = verify_all(Ceilings { sym, b, g12 }, cli.seed)?;
            let mut human: Vec<String> = r
                .checks
                .iter()
                .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
                .collect();
            human.push(format!(
                "{}/{} checks passed",
                r.checks.iter().filter(|c| c.passed).count(),
                r.checks.len()
            ));
            out.value(&human.join("\n"), &r)?;
            if !r.passed {
                return Err(Failure::Mismatch("some checks failed".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: --threads {t}: {e}");
            return ExitCode::from(2);
        }
    }
    let mut emitter = Emitter::new(cli.format);
    let out_path = cli.out.clone();
    let result = run(cli, &mut emitter).and_then(|()| emitter.finish(out_path.as_deref()).map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            // Partial output (for example a report with mismatches) is still written.
            let _ = emitter.finish(out_path.as_deref());
            let _ = std::io::stdout().flush();
            match f {
                Failure::Usage(m) => {
                    eprintln!("error: {m}");
                    ExitCode::from(2)
                }
                Failure::Mismatch(m) => {
                    eprintln!("verification failed: {m}");
                    ExitCode::from(1)
                }
                Failure::Internal(m) => {
                    eprintln!("internal error: {m}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
