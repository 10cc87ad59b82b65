use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use phax_core::axioms::{fuzz_instances, run_suite, AxiomId, Instance};
use phax_core::homology::{betti_grid, homology, induced_map};
use phax_core::io::{parse_filtration, parse_map, parse_pair, parse_sections, parse_triple};
use phax_core::sequences::{
    check_exact, default_n_max, les_pair, les_pair_reduced, les_triple, mayer_vietoris, triad_sequence, ExactSequence,
};
use phax_core::skeletal::compare_oracles;
use phax_core::value::{fmt_rational, parse_rational};
use phax_core::{Field, Interval, RelativeFilteredPair};

#[derive(Parser)]
#[command(
    name = "phax",
    version,
    about = "Persistent homology of filtered sets over prime fields"
)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    field: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and representatives of one persistent group.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// Read the input as a pair file with [X] and [A] sections.
        #[arg(long)]
        pair: bool,
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        #[arg(long)]
        degree: isize,
    },
    /// Persistent Betti numbers over all intervals of critical values.
    Grid {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        pair: bool,
        #[arg(long)]
        degree: isize,
    },
    /// Long exact sequence with per-node exactness.
    Sequence {
        /// Pair file, or a triple/cover/triad file with the matching flag.
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        /// Sections [X] [A] [B].
        #[arg(long, group = "kind")]
        triple: bool,
        /// Sections [X] [X1] [X2].
        #[arg(long, group = "kind")]
        triad: bool,
        /// Sections [X1] [X2].
        #[arg(long, group = "kind")]
        mv: bool,
        #[arg(long, group = "kind")]
        reduced: bool,
        /// Highest degree; defaults to one past the top dimension.
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Runs the axiom checks on given pairs and on seeded random instances.
    VerifyAxioms {
        #[arg(long, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long)]
        fuzz: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to these axioms (A1..A7, S1..S3).
        #[arg(long, num_args = 1..)]
        axiom: Vec<AxiomId>,
    },
    /// Direct, skeletal and barcode dimensions side by side.
    OracleCompare {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        pair: bool,
    },
    /// Matrix of the map induced in one degree.
    Induced {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        #[arg(long)]
        degree: isize,
    },
}

fn parse_interval(s: &str) -> std::result::Result<Interval, String> {
    let (lo, hi) = s.split_once(',').ok_or("expected `lo,hi`")?;
    let r = |t: &str| parse_rational(t.trim()).ok_or_else(|| format!("bad endpoint `{t}`"));
    Interval::new(r(lo)?, r(hi)?).map_err(|e| e.to_string())
}

fn load(path: &Path, pair: bool) -> Result<RelativeFilteredPair> {
    let loaded = if pair {
        parse_pair(path)
    } else {
        parse_filtration(path).map(RelativeFilteredPair::absolute)
    };
    loaded.with_context(|| format!("reading {}", path.display()))
}

fn endpoints(i: &Interval) -> (String, String) {
    (fmt_rational(&i.lo()), fmt_rational(&i.hi()))
}

/// Everything printed, and whether every verdict passed.
struct Output {
    text: String,
    ok: bool,
}

fn run(cli: Cli) -> Result<Output> {
    let field = Field::new(cli.run.field)?;
    let records = cli.run.format == Format::Records;
    let mut out = String::new();
    let mut ok = true;
    match cli.command {
        Command::Compute {
            input,
            pair,
            interval,
            degree,
        } => {
            let p = load(&input, pair)?;
            let h = homology(field, &p, degree, &interval);
            let (lo, hi) = endpoints(&interval);
            if records {
                writeln!(out, "homology\t{degree}\t{lo}\t{hi}\t{}", h.dim())?;
            } else {
                writeln!(
                    out,
                    "H_{degree} on {interval} over GF({}): dim {}",
                    field.characteristic(),
                    h.dim()
                )?;
                for (k, rep) in h.format_reps().iter().enumerate() {
                    writeln!(out, "  [{k}] {rep}")?;
                }
            }
        }
        Command::Grid { input, pair, degree } => {
            let p = load(&input, pair)?;
            let grid = betti_grid(field, &p, degree);
            if records {
                for (i, d) in &grid.cells {
                    let (lo, hi) = endpoints(i);
                    writeln!(out, "grid\t{degree}\t{lo}\t{hi}\t{d}")?;
                }
            } else {
                write_grid_table(&mut out, &grid.critical, &grid, degree)?;
            }
        }
        Command::Sequence {
            pair,
            interval,
            triple,
            triad,
            mv,
            reduced,
            n_max,
        } => {
            let seq = build_sequence(field, &pair, &interval, triple, triad, mv, reduced, n_max)?;
            ok = write_sequence(&mut out, &seq, records)?;
        }
        Command::VerifyAxioms {
            input,
            fuzz,
            seed,
            axiom,
        } => {
            if input.is_empty() && fuzz.is_none() {
                bail!("give --input files, --fuzz K, or both");
            }
            let mut instances = Vec::new();
            for path in &input {
                let p = load(path, true)?;
                instances.push(Instance::from_pair(p, path.display().to_string(), seed));
            }
            instances.extend(fuzz_instances(seed, fuzz.unwrap_or(0)));
            let axioms = if axiom.is_empty() { AxiomId::ALL.to_vec() } else { axiom };
            let reports = run_suite(field, &instances, &axioms)?;
            for r in &reports {
                if records {
                    writeln!(out, "{}", r.record())?;
                } else {
                    writeln!(out, "{r}")?;
                }
            }
            ok = reports.iter().all(|r| r.passed());
            if !records {
                let failed = reports.iter().filter(|r| !r.passed()).count();
                writeln!(
                    out,
                    "{} reports on {} instances, {failed} failed",
                    reports.len(),
                    instances.len()
                )?;
            }
        }
        Command::OracleCompare { input, pair } => {
            let p = load(&input, pair)?;
            let rows = compare_oracles(field, &p);
            for row in &rows {
                let (lo, hi) = endpoints(&row.interval);
                let sk = row.skeletal.map_or("err".to_string(), |d| d.to_string());
                let verdict = if row.agrees() { "agree" } else { "differ" };
                if records {
                    writeln!(
                        out,
                        "oracle\t{}\t{lo}\t{hi}\t{}\t{sk}\t{}\t{}\t{verdict}",
                        row.degree, row.direct, row.barcode, row.theta_invertible
                    )?;
                } else {
                    writeln!(
                        out,
                        "n={} I={}  direct {}  skeletal {sk}  barcode {}  theta {}  {verdict}",
                        row.degree,
                        row.interval,
                        row.direct,
                        row.barcode,
                        if row.theta_invertible { "iso" } else { "-" }
                    )?;
                }
            }
            ok = rows.iter().all(|r| r.agrees());
        }
        Command::Induced { map, interval, degree } => {
            let f = parse_map(&map).with_context(|| format!("reading {}", map.display()))?;
            let m = induced_map(field, &f, degree, &interval)?;
            if records {
                let (lo, hi) = endpoints(&interval);
                let entries: Vec<String> = m.matrix().columns().iter().map(|c| format!("{c:?}")).collect();
                writeln!(
                    out,
                    "induced\t{degree}\t{lo}\t{hi}\t{}\t{}\t{}",
                    m.target_dim(),
                    m.source_dim(),
                    entries.join(" ")
                )?;
            } else {
                writeln!(
                    out,
                    "H_{degree} on {interval}: {} -> {}",
                    m.source_dim(),
                    m.target_dim()
                )?;
                writeln!(out, "{m}")?;
            }
        }
    }
    Ok(Output { text: out, ok })
}

fn write_grid_table(
    out: &mut String,
    critical: &[phax_core::Rational],
    grid: &phax_core::homology::BettiGrid,
    degree: isize,
) -> Result<()> {
    let labels: Vec<String> = critical.iter().map(fmt_rational).collect();
    let width = labels.iter().map(|l| l.len()).max().unwrap_or(1).max(3);
    writeln!(out, "H_{degree}: rows eps, columns eps'")?;
    write!(out, "{:>width$}", "")?;
    for l in &labels {
        write!(out, " {l:>width$}")?;
    }
    writeln!(out)?;
    for (r, lo) in critical.iter().enumerate() {
        write!(out, "{:>width$}", labels[r])?;
        for hi in critical {
            match grid.get(*lo, *hi) {
                Some(d) => write!(out, " {d:>width$}")?,
                None => write!(out, " {:>width$}", ".")?,
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn build_sequence(
    field: Field,
    path: &Path,
    interval: &Interval,
    triple: bool,
    triad: bool,
    mv: bool,
    reduced: bool,
    n_max: Option<usize>,
) -> Result<ExactSequence> {
    let ctx = || format!("reading {}", path.display());
    let seq = if triple {
        let (x, a, b) = parse_triple(path).with_context(ctx)?;
        les_triple(field, &x, &a, &b, interval, n_max.unwrap_or(default_n_max(&x)))?
    } else if triad {
        let v = parse_sections(path, &["X", "X1", "X2"]).with_context(ctx)?;
        triad_sequence(
            field,
            &v[0],
            &v[1],
            &v[2],
            interval,
            n_max.unwrap_or(default_n_max(&v[0])),
        )?
    } else if mv {
        let v = parse_sections(path, &["X1", "X2"]).with_context(ctx)?;
        let top = default_n_max(&v[0].union(&v[1]));
        mayer_vietoris(field, &v[0], &v[1], interval, n_max.unwrap_or(top))?
    } else {
        let p = parse_pair(path).with_context(ctx)?;
        let n = n_max.unwrap_or(default_n_max(p.total()));
        if reduced {
            les_pair_reduced(field, &p, interval, n)?
        } else {
            les_pair(field, &p, interval, n)?
        }
    };
    Ok(seq)
}

fn write_sequence(out: &mut String, seq: &ExactSequence, records: bool) -> Result<bool> {
    let report = check_exact(seq);
    if records {
        for (k, node) in seq.nodes().iter().enumerate() {
            writeln!(out, "node\t{k}\t{}\t{}", node.label, node.dim)?;
        }
        for c in &report.checks {
            let verdict = if c.exact { "exact" } else { "fail" };
            writeln!(out, "exact\t{}\t{}\t{}\t{verdict}", c.node, c.image_rank, c.kernel_dim)?;
        }
    } else {
        writeln!(out, "{seq}")?;
        for c in &report.checks {
            let node = &seq.nodes()[c.node];
            let verdict = if c.exact { "exact" } else { "NOT exact" };
            writeln!(
                out,
                "  {:<10} dim {:<2} image {:<2} kernel {:<2} {verdict}",
                node.label, node.dim, c.image_rank, c.kernel_dim
            )?;
        }
        if let Some(w) = &report.witness {
            writeln!(out, "  witness at {}: {:?}", seq.nodes()[w.node].label, w.vector)?;
        }
        writeln!(out, "{}", if report.is_exact() { "exact" } else { "not exact" })?;
    }
    Ok(report.is_exact())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            print!("{}", o.text);
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
