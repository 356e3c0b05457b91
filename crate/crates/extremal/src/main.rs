//! Command-line front end: deterministic text commands over the library.
//!
//! Boolean queries print `true`/`false` on stdout and exit 0; operational
//! failures (bad input, guard violations, missing files) print a message on
//! stderr and exit 1.  `--format machine` switches every command to
//! line-oriented `key=value` records with the same information.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use extremal::assignments::{
    boggi, equivalent, equivalent_explicit, explicit, git_assignment, is_extremal, normalize,
    parse_assignment_file, smallest_containing, weight_assignment, Assignment, ExtremalOutcome,
    GitParams, SmallestOutcome, WeightData, BRUTE_GUARD,
};
use extremal::error::Error;
use extremal::geometry::{
    contracted_fcurves, contracted_ftypes, fnef_witness, fnef_witness_sym, pair, parse_divisor,
    FCurve, FnefOutcome,
};
use extremal::invariant::{
    expand, inv_is_extremal, inv_smallest, parse_invariant_file, InvSmallestOutcome,
};
use extremal::partitions::IntegerPartition;
use extremal::smooth::{
    all_indicators, exists_weight_superset, from_indicator, indicator_of, is_weight_assignment,
    parse_subsets_file, ContractionIndicator, WeightOutcome,
};
use extremal::toric::{is_modular_toric, parse_graph_file};
use extremal::trees::{enumerate_trees_guarded, LabeledTree};
use extremal::Result;

#[derive(Parser, Debug)]
#[command(name = "extremal", version, about = "Extremal assignments on stable labeled trees")]
struct Cli {
    /// Output style: human text or line-oriented key=value records.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    /// Worker threads for data-parallel work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for randomized harnesses; deterministic commands ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List the stable n-labeled trees, one per line.
    Trees {
        #[arg(long)]
        n: u8,
        /// Restrict to trees with exactly K vertices.
        #[arg(long)]
        k: Option<usize>,
        /// Enumeration size guard; raise --guard to enumerate larger n.
        #[arg(long, default_value_t = BRUTE_GUARD)]
        guard: u8,
    },
    /// Print the branch partition of a vertex of a tree.
    BasicPartition {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Whether an assignment selects a vertex of a tree.
    Member {
        #[arg(long)]
        assign: PathBuf,
        #[arg(long)]
        tree: String,
        #[arg(long)]
        vertex: usize,
    },
    /// Whether a generator file describes an extremal assignment.
    CheckExtremal {
        #[arg(long)]
        assign: PathBuf,
    },
    /// Smallest extremal assignment selecting every (tree, vertex) pair.
    Smallest {
        #[arg(long)]
        pairs: PathBuf,
        /// Search among relabeling-invariant assignments instead.
        #[arg(long)]
        invariant: bool,
    },
    /// Whether two assignments differ only in isolated 3-valenced vertices.
    Equivalent {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = BRUTE_GUARD)]
        guard: u8,
    },
    /// Count equivalence classes of extremal assignments (n = 5 only).
    Classify {
        #[arg(long)]
        n: u8,
    },
    /// Build assignments from weight data, the Boggi family, or GIT data.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Smooth assignments and their contraction indicators.
    #[command(subcommand)]
    Smooth(SmoothCmd),
    /// Relabeling-invariant assignments over integer partitions.
    #[command(subcommand)]
    Invariant(InvariantCmd),
    /// F-curves, boundary divisors, and nef-witness searches.
    #[command(subcommand)]
    Fcurves(FcurvesCmd),
    /// Graph associahedron checks.
    #[command(subcommand)]
    Toric(ToricCmd),
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// Assignment attached to weight data `a1,a2,...,an`.
    Weight {
        #[arg(long)]
        weights: String,
    },
    /// The Boggi assignment of order n.
    Boggi {
        #[arg(long)]
        n: u8,
    },
    /// Assignment attached to GIT parameters `d=.. gamma=.. c=..`.
    Git {
        #[arg(long)]
        params: String,
    },
}

#[derive(Subcommand, Debug)]
enum SmoothCmd {
    /// Contraction indicator of an assignment.
    IndicatorOf {
        #[arg(long)]
        assign: PathBuf,
    },
    /// Smooth assignment built from an indicator file.
    FromIndicator {
        #[arg(long)]
        sets: PathBuf,
    },
    /// Whether the indicator's assignment is a weight assignment.
    IsWeight {
        #[arg(long)]
        sets: PathBuf,
    },
    /// Weight data whose assignment contains the indicator's assignment.
    WeightSuperset {
        #[arg(long)]
        sets: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum InvariantCmd {
    /// Whether an integer-partition family is special (extremal).
    IsSpecial {
        #[arg(long)]
        file: PathBuf,
    },
    /// Smallest invariant assignment selecting every (tree, vertex) pair.
    Smallest {
        #[arg(long)]
        pairs: PathBuf,
    },
    /// Expand an invariant assignment into explicit generators of order n.
    Expand {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        n: u8,
    },
}

#[derive(Subcommand, Debug)]
enum FcurvesCmd {
    /// F-curves contracted by an assignment (or curve types, invariantly).
    Contracted(CurveSource),
    /// Intersection number of a divisor with an F-curve.
    Pair {
        /// Curve in the form `F{1|2|3|4,5,6}`.
        #[arg(long)]
        curve: String,
        /// Divisor such as `6*D2+11*D3+8*D4` or `1*D{1,2}+2*D{1,3}`.
        #[arg(long)]
        divisor: String,
    },
    /// Divisor vanishing exactly on the contracted curves, or a certificate
    /// that none exists.
    Fnef(CurveSource),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CurveSource {
    /// Assignment generator file: work with individual F-curves.
    #[arg(long)]
    assign: Option<PathBuf>,
    /// Invariant assignment file: work with F-curve types.
    #[arg(long)]
    invariant: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ToricCmd {
    /// Whether the graph's associahedron carries a modular interpretation.
    Check {
        #[arg(long)]
        graph: PathBuf,
    },
}

// ---------------------------------------------------------------------------
// Output rendering.
// ---------------------------------------------------------------------------

struct Out {
    machine: bool,
    buf: String,
}

impl Out {
    fn new(format: Format) -> Self {
        Out {
            machine: format == Format::Machine,
            buf: String::new(),
        }
    }

    /// One record: plain prints the value, machine prints `key=value`.
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        if self.machine {
            writeln!(self.buf, "{key}={value}").expect("string write");
        } else {
            writeln!(self.buf, "{value}").expect("string write");
        }
    }

    /// A `n <count>` header plus one item per line, matching the input file
    /// formats so output can be fed back in.
    fn listing(&mut self, n: impl std::fmt::Display, key: &str, items: &[String]) {
        if self.machine {
            writeln!(self.buf, "n={n}").expect("string write");
            for item in items {
                writeln!(self.buf, "{key}={item}").expect("string write");
            }
        } else {
            writeln!(self.buf, "n {n}").expect("string write");
            for item in items {
                writeln!(self.buf, "{item}").expect("string write");
            }
        }
    }

    fn assignment(&mut self, z: &Assignment) {
        let items: Vec<String> = z.generators().iter().map(|p| p.to_string()).collect();
        self.listing(z.n(), "generator", &items);
    }

    fn indicator(&mut self, c: &ContractionIndicator) {
        let items: Vec<String> = c
            .maximal()
            .iter()
            .map(|&b| {
                extremal::partitions::mask_labels(b)
                    .into_iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        self.listing(c.n(), "set", &items);
    }

    fn weight_outcome(&mut self, w: &WeightOutcome) {
        match w {
            WeightOutcome::Witness(data) => {
                self.kv("result", true);
                self.kv("weights", data);
            }
            WeightOutcome::Infeasible(cert) => {
                self.kv("result", false);
                self.kv("multipliers", join_rats(cert));
            }
        }
    }

    fn finish(self) -> String {
        self.buf
    }
}

fn join_rats(rats: &[num_rational::BigRational]) -> String {
    rats.iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn ftype_text(t: &IntegerPartition) -> String {
    let parts: Vec<String> = t.parts().iter().map(|p| p.to_string()).collect();
    format!("F({})", parts.join(","))
}

// ---------------------------------------------------------------------------
// Input plumbing.
// ---------------------------------------------------------------------------

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_assignment(path: &Path) -> Result<Assignment> {
    let (n, parts) = parse_assignment_file(&read(path)?)?;
    normalize(n, parts)
}

fn load_indicator(path: &Path) -> Result<ContractionIndicator> {
    let (n, sets) = parse_subsets_file(&read(path)?)?;
    ContractionIndicator::from_sets(n, &sets)
}

/// Pairs file: a `n <count>` header, then one `<tree> <vertex>` per line;
/// `#` starts a comment.
fn parse_pairs_file(text: &str) -> Result<Vec<(LabeledTree, usize)>> {
    let mut n: Option<u8> = None;
    let mut pairs = Vec::new();
    let mut offset = 0usize;
    for line in text.lines() {
        let pos = offset;
        offset += line.len() + 1;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(header) = n else {
            let rest = line
                .strip_prefix('n')
                .ok_or_else(|| Error::parse(pos, "expected header `n <count>`"))?
                .trim();
            n = Some(
                rest.parse::<u8>()
                    .map_err(|_| Error::parse(pos, format!("bad label count `{rest}`")))?,
            );
            continue;
        };
        let (tree_text, vertex_text) = line
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| Error::parse(pos, "expected `<tree> <vertex>`"))?;
        let g: LabeledTree = tree_text.trim().parse()?;
        if g.n() != header {
            return Err(Error::SizeMismatch(header, g.n()));
        }
        let v: usize = vertex_text
            .trim()
            .parse()
            .map_err(|_| Error::parse(pos, format!("bad vertex index `{vertex_text}`")))?;
        if v >= g.num_vertices() {
            return Err(Error::parse(pos, format!("tree has no vertex {v}")));
        }
        pairs.push((g, v));
    }
    if n.is_none() {
        return Err(Error::parse(0, "missing header `n <count>`"));
    }
    Ok(pairs)
}

// ---------------------------------------------------------------------------
// The n = 5 classification, two independent ways.
// ---------------------------------------------------------------------------

/// Counts equivalence classes the long way: enumerate every valid
/// contraction indicator, materialize each smooth assignment on all stable
/// 5-labeled trees, and group the tables by the equivalence relation.
fn classify_full(n: u8) -> Result<usize> {
    let tables: Vec<_> = all_indicators(n)?
        .iter()
        .map(|c| explicit(&from_indicator(c)?, n))
        .collect::<Result<_>>()?;
    let mut reps: Vec<usize> = Vec::new();
    'next: for (i, t) in tables.iter().enumerate() {
        for &r in &reps {
            if equivalent_explicit(t, &tables[r], n)? {
                continue 'next;
            }
        }
        reps.push(i);
    }
    Ok(reps.len())
}

/// Independent cross-check: classes correspond to sets of edges of the
/// complete graph K_n in which every two edges share a vertex.
fn classify_intersecting_edge_sets(n: u8) -> usize {
    let mut edges: Vec<u32> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((1 << i) | (1 << j));
        }
    }
    let mut count = 0usize;
    for s in 0u32..(1 << edges.len()) {
        let chosen: Vec<u32> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| s >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| a & b != 0));
        if ok {
            count += 1;
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

fn execute(cli: Cli) -> Result<String> {
    #[cfg(feature = "parallel")]
    if let Some(jobs) = cli.jobs {
        // Ignore the error: the global pool can only be set once per
        // process, which only matters to in-process tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = cli.jobs;
    let _ = cli.seed;

    let mut out = Out::new(cli.format);
    match cli.command {
        Cmd::Trees { n, k, guard } => {
            for g in enumerate_trees_guarded(n, k, guard)? {
                out.kv("tree", g);
            }
        }
        Cmd::BasicPartition { tree, vertex } => {
            let g: LabeledTree = tree.parse()?;
            if vertex >= g.num_vertices() {
                return Err(Error::invalid(format!("tree has no vertex {vertex}")));
            }
            out.kv("partition", g.basic_partition(vertex));
        }
        Cmd::Member {
            assign,
            tree,
            vertex,
        } => {
            let z = load_assignment(&assign)?;
            let g: LabeledTree = tree.parse()?;
            out.kv("result", z.member(&g, vertex)?);
        }
        Cmd::CheckExtremal { assign } => {
            let (n, parts) = parse_assignment_file(&read(&assign)?)?;
            match is_extremal(&normalize(n, parts)?)? {
                ExtremalOutcome::Extremal => out.kv("result", true),
                ExtremalOutcome::Witness { qi, qj, bound } => {
                    out.kv("result", false);
                    out.kv("corruption1", qi);
                    out.kv("corruption2", qj);
                    out.kv("witness", bound);
                }
            }
        }
        Cmd::Smallest { pairs, invariant } => {
            let pairs = parse_pairs_file(&read(&pairs)?)?;
            if invariant {
                match inv_smallest(&pairs)? {
                    InvSmallestOutcome::Assignment(f) => {
                        let items: Vec<String> =
                            f.generators().iter().map(|p| p.to_string()).collect();
                        out.listing(f.n(), "generator", &items);
                    }
                    InvSmallestOutcome::NoneExists => out.kv("result", "none"),
                }
            } else {
                match smallest_containing(&pairs)? {
                    SmallestOutcome::Assignment(z) => out.assignment(&z),
                    SmallestOutcome::NoneExists => out.kv("result", "none"),
                }
            }
        }
        Cmd::Equivalent { a, b, guard } => {
            let z1 = load_assignment(&a)?;
            let z2 = load_assignment(&b)?;
            out.kv("result", equivalent(&z1, &z2, guard)?);
        }
        Cmd::Classify { n } => {
            if n != 5 {
                return Err(Error::invalid(format!(
                    "classification is implemented for n = 5 only, got n = {n}"
                )));
            }
            let full = classify_full(n)?;
            let check = classify_intersecting_edge_sets(n);
            if full != check {
                return Err(Error::invalid(format!(
                    "internal: class count {full} disagrees with edge-set count {check}"
                )));
            }
            out.kv("classes", full);
        }
        Cmd::Family(cmd) => match cmd {
            FamilyCmd::Weight { weights } => {
                let data: WeightData = weights.parse()?;
                out.assignment(&weight_assignment(&data)?);
            }
            FamilyCmd::Boggi { n } => out.assignment(&boggi(n)?),
            FamilyCmd::Git { params } => {
                let p: GitParams = params.parse()?;
                out.assignment(&git_assignment(&p)?);
            }
        },
        Cmd::Smooth(cmd) => match cmd {
            SmoothCmd::IndicatorOf { assign } => {
                let z = load_assignment(&assign)?;
                out.indicator(&indicator_of(&z)?);
            }
            SmoothCmd::FromIndicator { sets } => {
                let c = load_indicator(&sets)?;
                out.assignment(&from_indicator(&c)?);
            }
            SmoothCmd::IsWeight { sets } => {
                let c = load_indicator(&sets)?;
                out.weight_outcome(&is_weight_assignment(&c)?);
            }
            SmoothCmd::WeightSuperset { sets } => {
                let c = load_indicator(&sets)?;
                out.weight_outcome(&exists_weight_superset(&c)?);
            }
        },
        Cmd::Invariant(cmd) => match cmd {
            InvariantCmd::IsSpecial { file } => {
                let f = parse_invariant_file(&read(&file)?)?;
                let (special, witness) = inv_is_extremal(&f)?;
                out.kv("result", special);
                if let Some(w) = witness {
                    out.kv("witness", w);
                }
            }
            InvariantCmd::Smallest { pairs } => {
                let pairs = parse_pairs_file(&read(&pairs)?)?;
                match inv_smallest(&pairs)? {
                    InvSmallestOutcome::Assignment(f) => {
                        let items: Vec<String> =
                            f.generators().iter().map(|p| p.to_string()).collect();
                        out.listing(f.n(), "generator", &items);
                    }
                    InvSmallestOutcome::NoneExists => out.kv("result", "none"),
                }
            }
            InvariantCmd::Expand { file, n } => {
                let f = parse_invariant_file(&read(&file)?)?;
                out.assignment(&expand(&f, n)?);
            }
        },
        Cmd::Fcurves(cmd) => match cmd {
            FcurvesCmd::Contracted(src) => match (src.assign, src.invariant) {
                (Some(path), None) => {
                    let z = load_assignment(&path)?;
                    for f in contracted_fcurves(&z)? {
                        out.kv("curve", f);
                    }
                }
                (None, Some(path)) => {
                    let f = parse_invariant_file(&read(&path)?)?;
                    for t in contracted_ftypes(&f)? {
                        out.kv("type", ftype_text(&t));
                    }
                }
                _ => unreachable!("clap enforces exactly one source"),
            },
            FcurvesCmd::Pair { curve, divisor } => {
                let f: FCurve = curve.parse()?;
                let d = parse_divisor(&divisor, f.n())?;
                out.kv("pairing", pair(&d, &f)?);
            }
            FcurvesCmd::Fnef(src) => {
                let outcome = match (src.assign, src.invariant) {
                    (Some(path), None) => {
                        let z = load_assignment(&path)?;
                        let curves = contracted_fcurves(&z)?;
                        fnef_witness(z.n(), &curves)?
                    }
                    (None, Some(path)) => {
                        let f = parse_invariant_file(&read(&path)?)?;
                        let types = contracted_ftypes(&f)?;
                        fnef_witness_sym(f.n() as u8, &types)?
                    }
                    _ => unreachable!("clap enforces exactly one source"),
                };
                match outcome {
                    FnefOutcome::Witness(d) => {
                        out.kv("result", "witness");
                        out.kv("divisor", d);
                    }
                    FnefOutcome::Infeasible(cert) => {
                        out.kv("result", "infeasible");
                        out.kv("multipliers", join_rats(&cert));
                    }
                }
            }
        },
        Cmd::Toric(cmd) => match cmd {
            ToricCmd::Check { graph } => {
                let g = parse_graph_file(&read(&graph)?)?;
                out.kv("result", is_modular_toric(&g)?);
            }
        },
    }
    Ok(out.finish())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<String> {
        let mut argv = vec!["extremal"];
        argv.extend_from_slice(args);
        execute(Cli::try_parse_from(argv).expect("valid test argv"))
    }

    fn tmp(name: &str, contents: &str) -> PathBuf {
        let path = std::env::temp_dir().join(format!("extremal-cli-test-{name}"));
        std::fs::write(&path, contents).expect("write temp file");
        path
    }

    #[test]
    fn trees_counts() {
        let all: Vec<String> = run(&["trees", "--n", "5"])
            .unwrap()
            .lines()
            .map(str::to_string)
            .collect();
        assert_eq!(all.len(), 26);
        let three = run(&["trees", "--n", "5", "--k", "3"]).unwrap();
        assert_eq!(three.lines().count(), 15);
        let two = run(&["trees", "--n", "5", "--k", "2"]).unwrap();
        assert_eq!(two.lines().count(), 10);
        // Machine format tags every record.
        let machine = run(&["trees", "--format", "machine", "--n", "5", "--k", "2"]).unwrap();
        assert!(machine.lines().all(|l| l.starts_with("tree=")));
    }

    #[test]
    fn basic_partition_of_vertex() {
        let o = run(&["basic-partition", "--tree", "(1,2,(3,4,5))", "--vertex", "0"]).unwrap();
        assert_eq!(o, "{1|2|3,4,5}\n");
        assert!(run(&["basic-partition", "--tree", "(1,2,(3,4,5))", "--vertex", "7"]).is_err());
    }

    #[test]
    fn member_and_check_extremal() {
        let file = tmp("assign-a", "n 5\n{1,2|3|4|5}\n");
        let path = file.to_str().unwrap();
        let yes = run(&[
            "member",
            "--assign",
            path,
            "--tree",
            "(1,2,(3,4,5))",
            "--vertex",
            "1",
        ])
        .unwrap();
        assert_eq!(yes, "true\n");
        let ok = run(&["check-extremal", "--assign", path]).unwrap();
        assert_eq!(ok, "true\n");

        // The tight-bound pair is rejected with its witness.
        let bad = tmp(
            "assign-bad",
            "n 8\n{1,2|3,4|5,6,7,8}\n{1,2,3,4|5,6|7,8}\n",
        );
        let o = run(&["check-extremal", "--assign", bad.to_str().unwrap()]).unwrap();
        let lines: Vec<&str> = o.lines().collect();
        assert_eq!(lines[0], "false");
        assert_eq!(*lines.last().unwrap(), "{1,2|3,4|5,6|7,8}");
    }

    #[test]
    fn smallest_round_trips_through_files() {
        let pairs = tmp("pairs-a", "n 5\n(1,2,(3,4,5)) 1\n");
        let o = run(&["smallest", "--pairs", pairs.to_str().unwrap()]).unwrap();
        assert_eq!(o, "n 5\n{1,2|3|4|5}\n");
        let inv = run(&[
            "smallest",
            "--pairs",
            pairs.to_str().unwrap(),
            "--invariant",
        ])
        .unwrap();
        // No relabeling-invariant assignment selects a [2,1,1,1]-shaped
        // vertex without selecting everything: the closure collapses.
        assert_eq!(inv, "none\n");
        let root = tmp("pairs-b", "n 5\n(1,2,(3,4,5)) 0\n");
        let inv = run(&[
            "smallest",
            "--pairs",
            root.to_str().unwrap(),
            "--invariant",
        ])
        .unwrap();
        assert_eq!(inv, "n 5\n[3,1,1]\n");
    }

    #[test]
    fn equivalent_command() {
        let a = tmp("equiv-a", "n 5\n{1,2|3,4|5}\n");
        let b = tmp("equiv-b", "n 5\n");
        let o = run(&[
            "equivalent",
            "--a",
            a.to_str().unwrap(),
            "--b",
            b.to_str().unwrap(),
        ])
        .unwrap();
        assert_eq!(o, "true\n");
    }

    #[test]
    fn classify_five() {
        assert_eq!(run(&["classify", "--n", "5"]).unwrap(), "76\n");
        assert!(run(&["classify", "--n", "6"]).is_err());
    }

    #[test]
    fn family_commands() {
        let b = run(&["family", "boggi", "--n", "5"]).unwrap();
        assert!(b.starts_with("n 5\n"));
        let w = run(&["family", "weight", "--weights", "1/3,1/3,1/3,1,1"]).unwrap();
        assert!(w.starts_with("n 5\n"));
        let g = run(&["family", "git", "--params", "d=3 gamma=1/2 c=3/5,3/5,3/5,3/5,3/5"]);
        assert!(g.unwrap().starts_with("n 5\n"));
    }

    #[test]
    fn smooth_commands() {
        let sets = tmp("sets-a", "n 6\n1,2,3,4\n1,2,5\n3,4,5\n2,3,6\n1,4,6\n");
        let path = sets.to_str().unwrap();
        let z = run(&["smooth", "from-indicator", "--sets", path]).unwrap();
        assert!(z.starts_with("n 6\n"));
        let back = tmp("assign-back", &z);
        let c = run(&["smooth", "indicator-of", "--assign", back.to_str().unwrap()]).unwrap();
        // Sets print in canonical (mask) order.
        assert_eq!(c, "n 6\n1,2,3,4\n1,2,5\n3,4,5\n2,3,6\n1,4,6\n");
        let sup = run(&["smooth", "weight-superset", "--sets", path]).unwrap();
        assert!(sup.starts_with("true\n") || sup.starts_with("false\n"));
    }

    #[test]
    fn invariant_commands() {
        let f = tmp("inv-a", "n 12\n[7,3,1,1]\n[3,3,3,3]\n");
        let o = run(&["invariant", "is-special", "--file", f.to_str().unwrap()]).unwrap();
        assert_eq!(o, "true\n");
        let g = tmp("inv-b", "n 14\n[5,5,2,2]\n[4,4,3,3]\n");
        let o = run(&["invariant", "is-special", "--file", g.to_str().unwrap()]).unwrap();
        assert_eq!(o, "false\n[5,4,3,2]\n");
        let h = tmp("inv-c", "n 6\n[2,2,2]\n");
        let o = run(&["invariant", "expand", "--file", h.to_str().unwrap(), "--n", "6"]).unwrap();
        assert_eq!(o.lines().count(), 16); // header + 15 generators
    }

    #[test]
    fn fcurves_commands() {
        let p = run(&[
            "fcurves",
            "pair",
            "--curve",
            "F{1|2|3|4,5}",
            "--divisor",
            "1*D{1,2}+1*D{1,3}",
        ])
        .unwrap();
        assert_eq!(p, "2\n");

        let inv = tmp("inv-fnef", "n 12\n[7,3,1,1]\n[3,3,3,3]\n");
        let o = run(&["fcurves", "fnef", "--invariant", inv.to_str().unwrap()]).unwrap();
        assert!(o.starts_with("infeasible\n"));
    }

    #[test]
    fn toric_command() {
        let g = tmp("graph-a", "4\n1 2\n2 3\n3 4\n4 1\n");
        let o = run(&["toric", "check", "--graph", g.to_str().unwrap()]).unwrap();
        assert_eq!(o, "true\n"); // the 4-cycle is K_{2,2}
        let h = tmp("graph-b", "4\n1 2\n2 3\n3 4\n");
        let o = run(&["toric", "check", "--graph", h.to_str().unwrap()]).unwrap();
        assert_eq!(o, "false\n"); // the path P_4 is not complete multipartite
    }
}
