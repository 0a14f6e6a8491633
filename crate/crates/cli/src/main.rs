//! `khg`: generators, checkers, the co-ex solver, parameter calculators and
//! the verification suite behind one git-style command line.
//!
//! Exit codes: 0 success, 1 negative answer or failed property, 2 usage or
//! input error, 3 budget, guard, timeout or backend failure.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use khg_core::analysis::{
    compute_m, compute_rho, density_table, format_sig10, nonprincipality_params,
    sample_dense_msets, table_csv, SampleMode, GENERATOR,
};
use khg_core::checkers::{
    colour, contains_extension_member, embed_fr_recursive, find_embedding_with, greedy_embed_f2,
    ColourBackend, ColourOutcome, FrOutcome, GreedyOutcome, SearchLimits, SearchOutcome,
};
use khg_core::claims::{corrupted_fr, run_suite, SuiteConfig};
use khg_core::constructions::{
    enumerate_min_codegree_family, gen_fr, gen_gabn, gen_ktt, gen_rpartite, ExtensionFamily,
    GabnParams,
};
use khg_core::hypercore::{parse_khg, write_khg};
use khg_core::satgate::{coex_decision, coex_exact, Backend, SatStatus, SAT_CMD_ENV};
use khg_core::{Error, Hypergraph};

#[derive(Parser)]
#[command(name = "khg", version, about = "k-uniform hypergraph toolkit")]
struct Cli {
    /// Human-oriented output instead of the default machine-readable form.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a construction in .khg format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run a decision procedure on .khg inputs.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Exact co-ex(n, F), or the decision at a fixed threshold.
    Coex(CoexArgs),
    /// Closed-form parameters.
    #[command(subcommand)]
    Params(ParamsCommand),
    /// Fraction of m-subsets whose induced minimum codegree exceeds alpha·m.
    Sample(SampleArgs),
    /// CSV of co-ex(n, F) and co-ex(n, F)/n over a range of n.
    Table(TableArgs),
    /// Run the bundled verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// The a-part construction with forward span b.
    Gabn {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// All k-sets meeting at least two of r near-equal parts.
    Rpartite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// K^k(t,t): edges meet one side in exactly one vertex.
    Ktt {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// The recursive construction F^k_r.
    Fr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Members of the (s,t)-extension family of a base graph.
    Ext {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Mixed-radix index of a single member.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        index: Option<u128>,
        /// Write every member into --dir.
        #[arg(long, requires = "dir")]
        all: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
        /// With --all, keep one member per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// With --all, lift the family-size guard.
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// All m-vertex k-graphs with minimum codegree at least the threshold.
    Hfamily {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        threshold: usize,
        #[arg(long)]
        dedup: bool,
        /// Write one file per graph here; otherwise stream to stdout.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OutArg {
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Weak r-colourability.
    Color {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "sat")]
        backend: ColourBackendArg,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        cert: CertArg,
    },
    /// Subgraph containment of a pattern in a host.
    Embed {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        cert: CertArg,
    },
    /// Whether the host avoids every member of the (s,t)-extension family.
    Extfree {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        cert: CertArg,
    },
    /// One-pass greedy embedding of F^k_2.
    GreedyF2 {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        cert: CertArg,
    },
    /// Inductive embedding of F^k_r.
    EmbedFr {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        cert: CertArg,
    },
}

#[derive(Args)]
struct CertArg {
    /// Also write the certificate to this file.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArg {
    /// Search node budget; unlimited when omitted.
    #[arg(long)]
    budget: Option<u64>,
}

impl BudgetArg {
    fn limits(&self) -> SearchLimits {
        SearchLimits {
            node_budget: self.budget,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ColourBackendArg {
    Brute,
    Sat,
    External,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Internal,
    External,
}

#[derive(Args)]
struct SolverArgs {
    /// Wall-clock limit for the external solver, in seconds.
    #[arg(long)]
    timeout: Option<u64>,
    /// Conflict limit for the internal solver.
    #[arg(long)]
    conflicts: Option<u64>,
}

impl SolverArgs {
    fn internal(&self) -> Backend {
        Backend::Internal {
            conflict_budget: self.conflicts,
        }
    }

    fn external(&self) -> anyhow::Result<Backend> {
        let b = Backend::from_env().ok_or_else(|| {
            Error::Backend(format!("{SAT_CMD_ENV} is not set to a solver command"))
        })?;
        Ok(match self.timeout {
            Some(s) => b.with_timeout(Duration::from_secs(s)),
            None => b,
        })
    }

    fn backend(&self, which: SolverArg) -> anyhow::Result<Backend> {
        match which {
            SolverArg::Internal => Ok(self.internal()),
            SolverArg::External => self.external(),
        }
    }
}

#[derive(Args)]
struct CoexArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Comma-separated .khg files; an absent flag means the empty family.
    #[arg(long, value_delimiter = ',')]
    family: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "internal")]
    backend: SolverArg,
    /// Decide only this threshold.
    #[arg(long)]
    t: Option<usize>,
    /// Write the witness hypergraph here.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Subcommand)]
enum ParamsCommand {
    /// ρ for uniformity k and side size ell.
    Rho {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// (1/6)(1/2 − ρ).
    Epsilon {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Smallest M from which both subset-size conditions hold.
    #[command(name = "M", alias = "m")]
    M {
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_delimiter = ',')]
    family: Vec<PathBuf>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n_from: usize,
    #[arg(long)]
    n_to: usize,
    #[arg(long, value_enum, default_value = "internal")]
    backend: SolverArg,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Fast,
    Full,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "fast")]
    suite: SuiteArg,
    /// Replace F^k_r by a copy with one edge removed.
    #[arg(long, hide = true)]
    corrupt_fr: bool,
}

/// Collected standard output plus the exit code.
struct Outcome {
    stdout: String,
    code: u8,
    pretty: bool,
}

impl Outcome {
    fn new(pretty: bool) -> Self {
        Outcome {
            stdout: String::new(),
            code: 0,
            pretty,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.stdout.push_str(s.as_ref());
        self.stdout.push('\n');
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_khg(&text).map_err(|e| anyhow!(e).context(format!("parsing {}", path.display())))
}

fn read_family(paths: &[PathBuf], k: usize) -> anyhow::Result<Vec<Hypergraph>> {
    let family = paths
        .iter()
        .map(|p| read_graph(p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if let Some((p, f)) = paths.iter().zip(&family).find(|(_, f)| f.k() != k) {
        return Err(anyhow!(Error::InvalidParameter(format!(
            "{} has uniformity {}, expected {k}",
            p.display(),
            f.k()
        ))));
    }
    Ok(family)
}

fn write_to(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit_graph(out: &mut Outcome, h: &Hypergraph, dest: &OutArg) -> anyhow::Result<()> {
    match &dest.out {
        Some(p) => write_to(p, &write_khg(h)),
        None => {
            out.stdout.push_str(&write_khg(h));
            Ok(())
        }
    }
}

fn emit_cert(out: &mut Outcome, text: String, cert: &CertArg) -> anyhow::Result<()> {
    if let Some(p) = &cert.cert {
        write_to(p, &text)?;
    }
    out.stdout.push_str(&text);
    Ok(())
}

fn run_gen(cmd: GenCommand, out: &mut Outcome) -> anyhow::Result<()> {
    match cmd {
        GenCommand::Gabn { a, b, n, k, out: o } => {
            emit_graph(out, &gen_gabn(&GabnParams::new(a, b, n, k)?)?, &o)
        }
        GenCommand::Rpartite { n, r, k, out: o } => emit_graph(out, &gen_rpartite(n, r, k)?, &o),
        GenCommand::Ktt { t, k, out: o } => emit_graph(out, &gen_ktt(t, k)?, &o),
        GenCommand::Fr { k, r, out: o } => emit_graph(out, &gen_fr(k, r)?, &o),
        GenCommand::Ext {
            base,
            s,
            t,
            index,
            all,
            dir,
            dedup,
            allow_large,
            out: o,
        } => {
            let fam = ExtensionFamily::new(&read_graph(&base)?, s, t)?;
            if let Some(i) = index {
                let spec = fam.spec_at(i)?;
                return emit_graph(out, &khg_core::constructions::extension_member(&spec)?, &o);
            }
            debug_assert!(all);
            let dir = dir.expect("clap requires --dir with --all");
            fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            let mut count = 0usize;
            for (i, m) in fam.iter(dedup, allow_large)?.enumerate() {
                write_to(&dir.join(format!("member-{i:05}.khg")), &write_khg(&m))?;
                count += 1;
            }
            out.line(if out.pretty {
                format!("wrote {count} members to {}", dir.display())
            } else {
                count.to_string()
            });
            Ok(())
        }
        GenCommand::Hfamily {
            m,
            k,
            threshold,
            dedup,
            dir,
        } => {
            let fam = enumerate_min_codegree_family(m, k, threshold, dedup)?;
            if let Some(d) = &dir {
                fs::create_dir_all(d).with_context(|| format!("creating {}", d.display()))?;
            }
            let mut count = 0usize;
            for h in fam {
                match &dir {
                    Some(d) => write_to(&d.join(format!("graph-{count:05}.khg")), &write_khg(&h))?,
                    None => {
                        out.line(format!("c graph {count}"));
                        out.stdout.push_str(&write_khg(&h));
                    }
                }
                count += 1;
            }
            if dir.is_some() {
                out.line(count.to_string());
            }
            Ok(())
        }
    }
}

fn run_check(cmd: CheckCommand, out: &mut Outcome) -> anyhow::Result<()> {
    match cmd {
        CheckCommand::Color {
            r,
            input,
            backend,
            solver,
            cert,
        } => {
            let h = read_graph(&input)?;
            let b = match backend {
                ColourBackendArg::Brute => ColourBackend::Brute,
                ColourBackendArg::Sat => ColourBackend::Sat(solver.internal()),
                ColourBackendArg::External => ColourBackend::Sat(solver.external()?),
            };
            match colour(&h, r, &b)? {
                ColourOutcome::Colourable(c) => {
                    out.line("COLOURABLE");
                    emit_cert(out, c.to_string(), &cert)?;
                }
                ColourOutcome::NotColourable => {
                    out.line("UNSAT");
                    out.code = 1;
                }
            }
        }
        CheckCommand::Embed {
            pattern,
            host,
            budget,
            cert,
        } => {
            let (p, h) = (read_graph(&pattern)?, read_graph(&host)?);
            match find_embedding_with(&h, &p, &budget.limits())? {
                SearchOutcome::Found(e) => {
                    out.line("FOUND");
                    emit_cert(out, e.to_string(), &cert)?;
                }
                SearchOutcome::None => {
                    out.line("NONE");
                    out.code = 1;
                }
                SearchOutcome::Budget => {
                    out.line("BUDGET");
                    out.code = 3;
                }
            }
        }
        CheckCommand::Extfree {
            host,
            pattern,
            s,
            t,
            budget,
            cert,
        } => {
            let (h, f) = (read_graph(&host)?, read_graph(&pattern)?);
            match contains_extension_member(&h, &f, s, t, &budget.limits())? {
                SearchOutcome::None => out.line("FREE"),
                SearchOutcome::Found(c) => {
                    out.line("CONTAINS");
                    emit_cert(out, c.to_string(), &cert)?;
                    out.code = 1;
                }
                SearchOutcome::Budget => {
                    out.line("BUDGET");
                    out.code = 3;
                }
            }
        }
        CheckCommand::GreedyF2 { input, cert } => match greedy_embed_f2(&read_graph(&input)?)? {
            GreedyOutcome::Found(e) => {
                out.line("FOUND");
                emit_cert(out, e.to_string(), &cert)?;
            }
            GreedyOutcome::Failed(why) => {
                out.line(format!("FAILED {why}"));
                out.code = 1;
            }
        },
        CheckCommand::EmbedFr {
            input,
            r,
            budget,
            cert,
        } => match embed_fr_recursive(&read_graph(&input)?, r, &budget.limits())? {
            FrOutcome::Found(e) => {
                out.line("FOUND");
                emit_cert(out, e.to_string(), &cert)?;
            }
            FrOutcome::Failed(why) => {
                out.line(format!("FAILED {why}"));
                out.code = 1;
            }
            FrOutcome::Budget => {
                out.line("BUDGET");
                out.code = 3;
            }
        },
    }
    Ok(())
}

fn run_coex(a: CoexArgs, out: &mut Outcome) -> anyhow::Result<()> {
    let family = read_family(&a.family, a.k)?;
    let backend = a.solver.backend(a.backend)?;
    let witness = match a.t {
        Some(t) => {
            let v = coex_decision(a.n, a.k, &family, t, &backend)?;
            match v.verdict.status {
                SatStatus::Sat => out.line("SAT"),
                SatStatus::Unsat => {
                    out.line("UNSAT");
                    out.code = 1;
                }
                SatStatus::Unknown => {
                    out.line("UNKNOWN");
                    out.code = 3;
                }
            }
            v.witness
        }
        None => {
            let r = coex_exact(a.n, a.k, &family, &backend)?;
            out.line(if out.pretty {
                format!("co-ex(n={}, k={}) = {}", a.n, a.k, r.value)
            } else {
                r.value.to_string()
            });
            Some(r.witness)
        }
    };
    if let (Some(p), Some(w)) = (&a.witness, witness) {
        write_to(p, &write_khg(&w))?;
        out.line(format!("witness {}", p.display()));
    }
    Ok(())
}

fn run_params(cmd: ParamsCommand, out: &mut Outcome) -> anyhow::Result<()> {
    let pretty = out.pretty;
    match cmd {
        ParamsCommand::Rho { k, ell } => {
            let v = format_sig10(compute_rho(k, ell)?);
            out.line(if pretty {
                format!("rho(k={k}, ell={ell}) = {v}")
            } else {
                v
            });
        }
        ParamsCommand::Epsilon { k, ell } => {
            let v = format_sig10(nonprincipality_params(k, ell)?.epsilon);
            out.line(if pretty {
                format!("epsilon(k={k}, ell={ell}) = {v}")
            } else {
                v
            });
        }
        ParamsCommand::M { delta, k } => {
            let v = compute_m(delta, k)?;
            out.line(if pretty {
                format!("M(delta={delta}, k={k}) = {v}")
            } else {
                v.to_string()
            });
        }
    }
    Ok(())
}

fn run_sample(a: SampleArgs, out: &mut Outcome) -> anyhow::Result<()> {
    let g = read_graph(&a.input)?;
    let mode = match a.mode {
        ModeArg::Auto => SampleMode::Auto,
        ModeArg::Exhaustive => SampleMode::Exhaustive,
        ModeArg::Sampled => SampleMode::Sampled,
    };
    let e = sample_dense_msets(&g, a.m, a.alpha, a.trials, a.seed, mode)?;
    let mode = if e.exhaustive {
        "exhaustive"
    } else {
        "sampled"
    };
    out.line(format!(
        "# generator={GENERATOR} seed={} mode={mode}",
        e.seed
    ));
    out.line("fraction,stderr,hits,total");
    out.line(format!(
        "{},{},{},{}",
        format_sig10(e.fraction),
        format_sig10(e.stderr),
        e.hits,
        e.total
    ));
    Ok(())
}

fn run_table(a: TableArgs, out: &mut Outcome) -> anyhow::Result<()> {
    let family = read_family(&a.family, a.k)?;
    let backend = a.solver.backend(a.backend)?;
    let csv = table_csv(&density_table(&family, a.k, a.n_from, a.n_to, &backend)?);
    match &a.out.out {
        Some(p) => write_to(p, &csv),
        None => {
            out.stdout.push_str(&csv);
            Ok(())
        }
    }
}

fn run_verify(a: VerifyArgs, out: &mut Outcome) -> anyhow::Result<()> {
    let mut cfg = match a.suite {
        SuiteArg::Fast => SuiteConfig::fast(),
        SuiteArg::Full => SuiteConfig::full(
            Backend::from_env()
                .ok_or_else(|| Error::Backend(format!("the full suite needs {SAT_CMD_ENV}")))?,
        ),
    };
    if a.corrupt_fr {
        cfg.fr = corrupted_fr;
    }
    let results = run_suite(&cfg)?;
    let failed = results.iter().filter(|r| !r.passed).count();
    for r in &results {
        out.line(r.line());
    }
    let mut summary = String::new();
    let _ = write!(
        summary,
        "{} of {} checks passed",
        results.len() - failed,
        results.len()
    );
    out.line(summary);
    if failed > 0 {
        out.code = 1;
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(
            Error::SizeGuard { .. } | Error::Budget | Error::Backend(_) | Error::Unknown { .. },
        ) => 3,
        Some(Error::Certificate(_) | Error::NoFreeHypergraph { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Outcome::new(cli.pretty);
    let result = match cli.command {
        Command::Gen(c) => run_gen(c, &mut out),
        Command::Check(c) => run_check(c, &mut out),
        Command::Coex(a) => run_coex(a, &mut out),
        Command::Params(c) => run_params(c, &mut out),
        Command::Sample(a) => run_sample(a, &mut out),
        Command::Table(a) => run_table(a, &mut out),
        Command::Verify(a) => run_verify(a, &mut out),
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(()) => ExitCode::from(out.code),
        Err(e) => {
            eprintln!("khg: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
