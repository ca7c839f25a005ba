//! `thcover`: command-line front end for the 2-threshold cover library.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use thcover::oracle::{
    brute_thd_le2, equivalence_sweep, GenMode, GenSpec, SweepReport, MAX_BRUTE_EDGES, MAX_EXHAUSTIVE_N,
};
use thcover::{
    build_auxiliary, chain_cover2, cover2, cover2_paraglider_free, cover2_split, format_auxiliary, format_ordering,
    format_pairs, is_chain, is_paraglider_free, is_threshold, lexbfs, parse_graph, parse_ordering, split_partition,
    verify_lexbfs, AlternatingFourCycle, ChainCoverOutcome, CoverCheck, CoverError, CoverOptions, CoverOutcome,
    CoverResult, EdgeClass, Graph, OddCycleCertificate, ReductionError, Side, ThresholdCertificate, ThresholdCheck,
    VertexOrdering,
};

#[derive(Parser, Debug)]
#[command(name = "thcover", version, about = "Decide threshold dimension <= 2 and build covers with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find two threshold subgraphs covering the edges, or an odd cycle.
    Cover {
        /// Edge-list file, or `-` for stdin.
        file: PathBuf,
        /// Use this vertex ordering instead of Lex-BFS (implies --skip-phase1).
        #[arg(long, value_name = "FILE")]
        ordering: Option<PathBuf>,
        /// Use the identity ordering instead of Lex-BFS.
        #[arg(long)]
        skip_phase1: bool,
        /// Do not recolor free edges that close pentagons.
        #[arg(long)]
        skip_phase3: bool,
        /// Check both parts and print a verification report.
        #[arg(long)]
        verify: bool,
        /// Also print the final edge classes.
        #[arg(long)]
        show_partition: bool,
        #[arg(long, value_enum, default_value_t = Variant::Full)]
        variant: Variant,
    },
    /// Print the auxiliary graph on the edges.
    Aux { file: PathBuf },
    /// Print the Lex-BFS ordering, or check a given ordering.
    Lexbfs {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        verify: Option<PathBuf>,
    },
    /// Threshold, split and paraglider-free tests with certificates.
    Check { file: PathBuf },
    /// Cover a bipartite graph by two chain subgraphs.
    ChainCover {
        file: PathBuf,
        /// Side completed to a clique; defaults to the smaller one.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Brute-force 2-threshold cover search for small graphs.
    Oracle { file: PathBuf },
    /// Cross-check the pipeline against the oracles on generated graphs.
    Selftest {
        /// Largest vertex count for the exhaustive sweep.
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Random graphs per generator.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// All three phases.
    Full,
    /// Split graphs: coloring only, any ordering.
    Split,
    /// Paraglider-free graphs: Lex-BFS and coloring.
    ParagliderFree,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    A,
    B,
}

/// Failure with the exit status it maps to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_ordering(path: &Path, n: usize) -> Result<VertexOrdering, Failure> {
    parse_ordering(&read_text(path)?, n).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Cover { file, ordering, skip_phase1, skip_phase3, verify, show_partition, variant } => {
            let g = read_graph(&file)?;
            let ordering = ordering.map(|p| read_ordering(&p, g.n())).transpose()?;
            if variant != Variant::Full && (ordering.is_some() || skip_phase1 || skip_phase3) {
                return Err(Failure::Usage("phase flags only apply to --variant full".into()));
            }
            let result = match variant {
                Variant::Full => {
                    let skip_phase1 = skip_phase1 || ordering.is_some();
                    let opts = CoverOptions { ordering, skip_phase1, skip_phase3, verify };
                    cover2(&g, &opts).map_err(cover_failure)?
                }
                Variant::Split => cover2_split(&g).map_err(reduction_failure)?,
                Variant::ParagliderFree => cover2_paraglider_free(&g).map_err(reduction_failure)?,
            };
            Ok(format_cover(&g, &result, verify, show_partition))
        }
        Command::Aux { file } => {
            let g = read_graph(&file)?;
            Ok(format_auxiliary(&g, &build_auxiliary(&g)))
        }
        Command::Lexbfs { file, verify } => {
            let g = read_graph(&file)?;
            match verify {
                None => Ok(format!("{}\n", format_ordering(&lexbfs(&g)))),
                Some(p) => {
                    let o = read_ordering(&p, g.n())?;
                    Ok(match verify_lexbfs(&g, &o) {
                        Ok(()) => "LEX-BFS: PASS\n".to_string(),
                        Err(v) => format!(
                            "LEX-BFS: FAIL at position {}: {} placed before {}, which has a better label\n",
                            v.step + 1,
                            v.chosen + 1,
                            v.better + 1
                        ),
                    })
                }
            }
        }
        Command::Check { file } => {
            let g = read_graph(&file)?;
            Ok(format_check(&g))
        }
        Command::ChainCover { file, side } => {
            let g = read_graph(&file)?;
            let side = side.map(|s| match s {
                SideArg::A => Side::A,
                SideArg::B => Side::B,
            });
            match chain_cover2(&g, side).map_err(reduction_failure)? {
                ChainCoverOutcome::Cover(c) => Ok(format!(
                    "YES\nC1: {}\nC2: {}\n",
                    format_pairs(c.c1.iter().copied()),
                    format_pairs(c.c2.iter().copied())
                )),
                ChainCoverOutcome::OddCycle(cert) => Ok(format!("NO\n{}", format_odd_cycle(&cert))),
            }
        }
        Command::Oracle { file } => {
            let g = read_graph(&file)?;
            if g.m() > MAX_BRUTE_EDGES {
                return Err(Failure::Input(format!(
                    "brute force is limited to {MAX_BRUTE_EDGES} edges, the graph has {}",
                    g.m()
                )));
            }
            match brute_thd_le2(&g).map_err(|e| Failure::Internal(e.to_string()))? {
                Some((h1, h2)) => Ok(format!(
                    "YES\nH1: {}\nH2: {}\n",
                    format_pairs(h1.iter().copied()),
                    format_pairs(h2.iter().copied())
                )),
                None => Ok("NO\n".to_string()),
            }
        }
        Command::Selftest { nmax, samples, seed } => selftest(nmax, samples, seed),
    }
}

fn cover_failure(e: CoverError) -> Failure {
    match e {
        CoverError::Ordering(_) => Failure::Input(e.to_string()),
        CoverError::OverlappingPentagonSets(_) | CoverError::VerificationFailed(_) => Failure::Internal(e.to_string()),
    }
}

fn reduction_failure(e: ReductionError) -> Failure {
    match e {
        ReductionError::VerificationFailed => Failure::Internal(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn format_odd_cycle(cert: &OddCycleCertificate) -> String {
    let edges: Vec<String> = cert.edges.iter().map(|e| e.to_string()).collect();
    format!("ODD-CYCLE: {}\n", edges.join(" "))
}

fn format_four_cycle(c: &AlternatingFourCycle) -> String {
    format!(
        "alternating 4-cycle {} {} {} {} (edges {}-{} {}-{}, non-edges {}-{} {}-{})",
        c.a + 1,
        c.b + 1,
        c.c + 1,
        c.d + 1,
        c.a + 1,
        c.b + 1,
        c.c + 1,
        c.d + 1,
        c.b + 1,
        c.c + 1,
        c.a + 1,
        c.d + 1
    )
}

fn format_threshold(check: &ThresholdCheck) -> String {
    match &check.certificate {
        ThresholdCertificate::Elimination(seq) => {
            let ids: Vec<String> = seq.iter().map(|v| (v + 1).to_string()).collect();
            format!("yes (elimination {})", ids.join(" "))
        }
        ThresholdCertificate::Violation(c) => format!("no ({})", format_four_cycle(c)),
    }
}

fn format_verification(check: &CoverCheck) -> String {
    let mut out = format!("VERIFY: {}\n", if check.passed() { "PASS" } else { "FAIL" });
    if !check.covers {
        out.push_str("# parts do not cover the edge set\n");
    }
    for (name, c) in [("H1", &check.h1), ("H2", &check.h2)] {
        let _ = writeln!(out, "# {name} threshold: {}", format_threshold(c));
    }
    out
}

fn format_cover(g: &Graph, result: &CoverResult, verify: bool, show_partition: bool) -> String {
    let mut out = String::new();
    match &result.outcome {
        CoverOutcome::Cover { h1, h2 } => {
            out.push_str("YES\n");
            let _ = writeln!(out, "H1: {}", format_pairs(h1.iter().copied()));
            let _ = writeln!(out, "H2: {}", format_pairs(h2.iter().copied()));
            if result.threshold_dimension_one() {
                out.push_str("# the graph is threshold\n");
            }
        }
        CoverOutcome::OddCycle(cert) => {
            out.push_str("NO\n");
            out.push_str(&format_odd_cycle(cert));
        }
    }
    if !result.diagnostics.ordering_is_lexbfs {
        out.push_str("# ordering is not a Lex-BFS ordering\n");
    }
    if show_partition {
        if let Some(tp) = &result.partition {
            for (name, class) in [("F1", EdgeClass::One), ("F2", EdgeClass::Two), ("F0", EdgeClass::Free)] {
                let _ = writeln!(out, "{name}: {}", format_pairs(tp.pairs(g, class)));
            }
        }
    }
    if verify {
        if let Some(check) = &result.diagnostics.verification {
            out.push_str(&format_verification(check));
        }
    }
    out
}

fn format_check(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "threshold: {}", format_threshold(&is_threshold(g)));
    match split_partition(g) {
        Some(sp) => {
            let ids = |vs: &[usize]| vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "split: yes (clique {}; independent {})", ids(&sp.clique), ids(&sp.independent));
        }
        None => out.push_str("split: no\n"),
    }
    match is_paraglider_free(g) {
        (true, _) => out.push_str("paraglider-free: yes\n"),
        (false, w) => {
            let w = w.map(|w| w.to_string()).unwrap_or_default();
            let _ = writeln!(out, "paraglider-free: no ({w})");
        }
    }
    match thcover::bipartition(g) {
        Ok((a, b)) => {
            let chk = is_chain(g, &a, &b).expect("sides come from a bipartition");
            match chk.witness {
                None => out.push_str("chain: yes\n"),
                Some(w) => {
                    let _ = writeln!(out, "chain: no (induced 2K2 {} {})", w.first, w.second);
                }
            }
        }
        Err(_) => out.push_str("chain: no (not bipartite)\n"),
    }
    out
}

fn format_report(label: &str, r: &SweepReport) -> String {
    format!(
        "{label}: {} instances, {} yes, {} no, {} brute-checked, {} failures\n",
        r.instances, r.yes, r.no, r.brute_checked, r.failures
    )
}

fn selftest(nmax: usize, samples: usize, seed: u64) -> Result<String, Failure> {
    if nmax > MAX_EXHAUSTIVE_N {
        return Err(Failure::Usage(format!("--nmax is limited to {MAX_EXHAUSTIVE_N}")));
    }
    let mut specs: Vec<(String, GenSpec)> =
        (1..=nmax).map(|n| (format!("exhaustive n={n}"), GenSpec::exhaustive(n))).collect();
    let random = [
        ("union-of-two-threshold n=9", GenMode::UnionOfTwoThreshold, 9, 0.5),
        ("gnp n=8 p=0.5", GenMode::Gnp, 8, 0.5),
        ("random-split n=10 p=0.5", GenMode::RandomSplit, 10, 0.5),
    ];
    for (i, (label, mode, n, p)) in random.into_iter().enumerate() {
        let s = seed.wrapping_add(i as u64);
        specs.push((format!("{label} seed={s}"), GenSpec::random(mode, n, p, s, samples)));
    }
    let mut out = String::new();
    let mut total = SweepReport::default();
    for (label, spec) in &specs {
        let r = equivalence_sweep(spec).map_err(|f| Failure::Internal(format!("{out}{label}: FAIL\n{f}")))?;
        out.push_str(&format_report(label, &r));
        total.instances += r.instances;
        total.yes += r.yes;
        total.no += r.no;
        total.brute_checked += r.brute_checked;
    }
    out.push_str(&format_report("total", &total));
    Ok(out)
}
