use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use robcol::closed_form::{self, FormulaResult, Mode};
use robcol::constructions;
use robcol::crosscheck::{self, Suite};
use robcol::exact;
use robcol::families::{threshold_partition, Annotation, Family, FamilyDescriptor, Step};
use robcol::io::{self, CertificateFile};
use robcol::oracle::{
    self, verify_robust_coloring, verify_robust_independent, RobustColoringCertificate,
    RobustIndependenceCertificate,
};
use robcol::{chordal, Graph};

#[derive(Parser)]
#[command(
    name = "robcol",
    version,
    about = "Robust coloring parameters of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a parameter of a graph file or a generated family member.
    Compute(ComputeArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Build a certificate by an explicit construction and write it out.
    Construct(ConstructArgs),
    /// Write a family member as a graph file plus annotation sidecar.
    Generate(GenerateArgs),
    /// Run a comparison suite and print its report.
    Crosscheck(CrosscheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Multipartite,
    Threshold,
    Splittight,
    Kneser,
    Pathpower,
    Rtower,
    Chordal,
}

#[derive(Args, Default)]
struct InputArgs {
    /// Graph file in `p edge` format.
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyKind>,
    /// Part sizes for `multipartite`, ascending.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Creation sequence for `threshold`: `i` isolated, `d`/`D` dominating.
    #[arg(long)]
    seq: Option<String>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    density: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Chi1,
    Alpha1,
    Omega1,
    Chi,
    Alpha,
    Omega,
}

impl Param {
    fn name(self) -> &'static str {
        match self {
            Param::Chi1 => "chi1",
            Param::Alpha1 => "alpha1",
            Param::Omega1 => "omega1",
            Param::Chi => "chi",
            Param::Alpha => "alpha",
            Param::Omega => "omega",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Formula,
    Construction,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    #[value(alias = "as_printed")]
    AsPrinted,
    #[value(alias = "oracle_validated")]
    OracleValidated,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::AsPrinted => Mode::AsPrinted,
            ModeArg::OracleValidated => Mode::OracleValidated,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Chi1,
    Alpha1,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    param: Param,
    #[arg(long, value_enum, default_value = "oracle")]
    method: Method,
    #[arg(long, value_enum, default_value = "oracle-validated")]
    mode: ModeArg,
    /// Write the certificate behind the value here, when there is one.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    target: Target,
    /// Output prefix: writes `<prefix>.col` and `<prefix>.cert`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output prefix: writes `<prefix>.col` and `<prefix>.ann`. Without it
    /// the graph goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CrosscheckArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    limit_n: Option<usize>,
    #[arg(long)]
    limit_edges: Option<usize>,
    #[arg(long, value_enum, default_value = "oracle-validated")]
    mode: ModeArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of random instances, for suites that draw any.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure of a command, with its exit code.
enum Failure {
    /// The verifier rejected a certificate.
    Rejected,
    Error(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Error(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a).map_err(Failure::from),
        Command::Verify(a) => verify(a),
        Command::Construct(a) => construct(a).map_err(Failure::from),
        Command::Generate(a) => generate(a).map_err(Failure::from),
        Command::Crosscheck(a) => run_crosscheck(a).map_err(Failure::from),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

impl InputArgs {
    fn family(&self) -> Result<Family> {
        let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("--{flag} is required"));
        let kind = self
            .family
            .ok_or_else(|| anyhow!("give --graph or --family"))?;
        Ok(match kind {
            FamilyKind::Multipartite => {
                if self.sizes.is_empty() {
                    bail!("--sizes is required");
                }
                Family::Multipartite {
                    sizes: self.sizes.clone(),
                }
            }
            FamilyKind::Threshold => {
                let seq = self
                    .seq
                    .as_deref()
                    .ok_or_else(|| anyhow!("--seq is required"))?;
                Family::Threshold {
                    creation: Step::parse_sequence(seq)?,
                }
            }
            FamilyKind::Splittight => Family::SplitTight {
                t: need(self.t, "t")?,
            },
            FamilyKind::Kneser => Family::Kneser {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
            },
            FamilyKind::Pathpower => Family::PathPower {
                n: need(self.n, "n")?,
                p: need(self.p, "p")?,
            },
            FamilyKind::Rtower => Family::RTower {
                k: need(self.k, "k")?,
            },
            FamilyKind::Chordal => Family::RandomChordal {
                n: need(self.n, "n")?,
                density: self
                    .density
                    .ok_or_else(|| anyhow!("--density is required"))?,
                seed: self.seed.unwrap_or(1),
            },
        })
    }

    fn load(&self) -> Result<(Graph, Option<FamilyDescriptor>)> {
        match &self.graph {
            Some(path) => {
                let g = io::parse_dimacs(&read(path)?)
                    .with_context(|| format!("parsing {}", path.display()))?;
                Ok((g, None))
            }
            None => {
                let (g, desc) = self.family()?.build()?;
                Ok((g, Some(desc)))
            }
        }
    }
}

fn compute(a: ComputeArgs) -> Result<()> {
    let (g, desc) = a.input.load()?;
    let name = a.param.name();
    match a.method {
        Method::Oracle => {
            let value = match a.param {
                Param::Chi1 => {
                    let (v, cert) = oracle::chi1_exact(&g)?;
                    save_coloring(a.cert.as_deref(), &cert)?;
                    v
                }
                Param::Alpha1 => {
                    let (v, cert) = oracle::alpha1_exact(&g)?;
                    save_independent(a.cert.as_deref(), &cert)?;
                    v
                }
                Param::Omega1 => oracle::omega1_exact(&g)?.0,
                Param::Chi => exact::chromatic_number(&g)?.0,
                Param::Alpha => exact::independence_number(&g)?.0,
                Param::Omega => exact::clique_number(&g)?.0,
            };
            println!("{name} {value}");
        }
        Method::Formula => {
            if a.param != Param::Chi1 {
                bail!("closed forms are available for chi1 only");
            }
            let r = formula(&g, desc.as_ref(), a.mode.into())?;
            println!("{name} {}", r.value);
            print!("c clause={} mode={}", r.clause_label(), r.mode_label());
            if r.ambiguous {
                print!(" ambiguous");
            }
            match r.printed {
                Some(printed) if printed != r.value => println!(" printed={printed}"),
                _ => println!(),
            }
        }
        Method::Construction => match a.param {
            Param::Chi1 => {
                let (cg, cert) = coloring_construction(&g, desc.as_ref())?;
                check_coloring(&cg, &cert)?;
                save_coloring(a.cert.as_deref(), &cert)?;
                println!("{name} {}", cert.color_count());
                println!("c upper bound from a verified construction");
            }
            Param::Alpha1 => {
                let (cg, cert) = independence_construction(desc.as_ref())?;
                check_independent(&cg, &cert)?;
                save_independent(a.cert.as_deref(), &cert)?;
                println!("{name} {}", cert.len());
                println!("c lower bound from a verified construction");
            }
            _ => bail!("constructions exist for chi1 and alpha1 only"),
        },
    }
    Ok(())
}

fn formula(g: &Graph, desc: Option<&FamilyDescriptor>, mode: Mode) -> Result<FormulaResult> {
    match desc.map(|d| (&d.family, &d.annotation)) {
        Some((Family::Multipartite { sizes }, _)) => {
            Ok(closed_form::chi1_multipartite(sizes, mode)?)
        }
        Some((Family::Threshold { .. }, Annotation::Threshold(tp))) => {
            Ok(closed_form::chi1_threshold(g, tp)?)
        }
        Some((family, _)) => bail!("no closed form for {family}"),
        None => {
            if g.is_bipartite() {
                Ok(closed_form::chi1_bipartite(g)?)
            } else if let Ok(tp) = threshold_partition(g) {
                Ok(closed_form::chi1_threshold(g, &tp)?)
            } else {
                bail!("no closed form applies: the graph is neither bipartite nor threshold")
            }
        }
    }
}

/// The construction suited to the input, returning the graph the
/// certificate refers to.
fn coloring_construction(
    g: &Graph,
    desc: Option<&FamilyDescriptor>,
) -> Result<(Graph, RobustColoringCertificate)> {
    let cert = match desc.map(|d| (&d.family, &d.annotation)) {
        Some((Family::Multipartite { sizes }, _)) => {
            constructions::construct_multipartite_coloring(sizes)?
        }
        Some((Family::Threshold { .. }, Annotation::Threshold(tp))) => {
            constructions::construct_threshold_coloring(g, tp)?
        }
        Some((
            Family::SplitTight { .. },
            Annotation::Split {
                clique,
                independent,
            },
        )) => constructions::construct_split_coloring(g, clique, independent)?,
        Some((Family::Kneser { n, k }, _)) => constructions::construct_kneser_chi1(*n, *k)?.1,
        Some((Family::PathPower { n, p }, _)) => {
            return Ok(constructions::construct_unit_interval_coloring(
                *n, *p, None,
            )?)
        }
        _ => {
            if let Ok(tp) = threshold_partition(g) {
                constructions::construct_threshold_coloring(g, &tp)?
            } else if chordal::is_chordal(g) {
                constructions::construct_chordal_half(g)?
            } else {
                bail!("no construction applies: the graph is neither threshold nor chordal")
            }
        }
    };
    Ok((g.clone(), cert))
}

fn independence_construction(
    desc: Option<&FamilyDescriptor>,
) -> Result<(Graph, RobustIndependenceCertificate)> {
    match desc.map(|d| &d.family) {
        Some(Family::Kneser { n, k }) if *n == 3 * *k => {
            Ok(constructions::construct_kneser_3k_family(*k)?)
        }
        Some(Family::Kneser { n, k }) => Ok(constructions::construct_kneser_alpha1(*n, *k)?),
        _ => bail!("robust independent set constructions exist for Kneser graphs only"),
    }
}

fn check_coloring(g: &Graph, cert: &RobustColoringCertificate) -> Result<()> {
    verify_robust_coloring(g, cert).map_err(|e| anyhow!("construction failed verification: {e}"))
}

fn check_independent(g: &Graph, cert: &RobustIndependenceCertificate) -> Result<()> {
    verify_robust_independent(g, cert).map_err(|e| anyhow!("construction failed verification: {e}"))
}

fn save_coloring(path: Option<&Path>, cert: &RobustColoringCertificate) -> Result<()> {
    path.map_or(Ok(()), |p| write(p, &io::write_coloring_certificate(cert)))
}

fn save_independent(path: Option<&Path>, cert: &RobustIndependenceCertificate) -> Result<()> {
    path.map_or(Ok(()), |p| {
        write(p, &io::write_independence_certificate(cert))
    })
}

fn verify(a: VerifyArgs) -> std::result::Result<(), Failure> {
    let g = io::parse_dimacs(&read(&a.graph)?)
        .with_context(|| format!("parsing {}", a.graph.display()))?;
    let cert = io::parse_certificate(&read(&a.cert)?)
        .with_context(|| format!("parsing {}", a.cert.display()))?;
    let outcome = match &cert {
        CertificateFile::Coloring { cert, .. } => verify_robust_coloring(&g, cert),
        CertificateFile::Independence { cert, .. } => verify_robust_independent(&g, cert),
    };
    match outcome {
        Ok(()) => {
            match cert {
                CertificateFile::Coloring { cert, .. } => {
                    println!("OK colors={}", cert.color_count())
                }
                CertificateFile::Independence { cert, .. } => println!("OK size={}", cert.len()),
            }
            Ok(())
        }
        Err(e) => {
            println!("FAIL {e}");
            Err(Failure::Rejected)
        }
    }
}

fn construct(a: ConstructArgs) -> Result<()> {
    let (g, desc) = a.input.load()?;
    let graph_path = with_ext(&a.out, "col");
    let cert_path = with_ext(&a.out, "cert");
    let (cg, text, value) = match a.target {
        Target::Chi1 => {
            let (cg, cert) = coloring_construction(&g, desc.as_ref())?;
            check_coloring(&cg, &cert)?;
            let text = io::write_coloring_certificate(&cert);
            (cg, text, cert.color_count())
        }
        Target::Alpha1 => {
            let (cg, cert) = independence_construction(desc.as_ref())?;
            check_independent(&cg, &cert)?;
            let text = io::write_independence_certificate(&cert);
            (cg, text, cert.len())
        }
    };
    let comments: Vec<String> = desc.iter().map(|d| d.family.to_string()).collect();
    write(&graph_path, &io::write_dimacs(&cg, &comments))?;
    write(&cert_path, &text)?;
    let name = match a.target {
        Target::Chi1 => "chi1",
        Target::Alpha1 => "alpha1",
    };
    println!(
        "{name} {value} graph={} cert={}",
        graph_path.display(),
        cert_path.display()
    );
    Ok(())
}

fn generate(a: GenerateArgs) -> Result<()> {
    let family = a.input.family()?;
    let (g, desc) = family.build()?;
    let graph = io::write_dimacs(&g, &[family.to_string()]);
    match a.out {
        Some(prefix) => {
            let graph_path = with_ext(&prefix, "col");
            let ann_path = with_ext(&prefix, "ann");
            write(&graph_path, &graph)?;
            write(&ann_path, &io::write_annotation(&desc.labels()))?;
            println!(
                "graph={} annotation={}",
                graph_path.display(),
                ann_path.display()
            );
        }
        None => print!("{graph}"),
    }
    Ok(())
}

fn run_crosscheck(a: CrosscheckArgs) -> Result<()> {
    let suite: Suite = a.suite.parse()?;
    let opts = crosscheck::Options {
        limit_n: a.limit_n,
        limit_edges: a.limit_edges,
        mode: a.mode.into(),
        seed: a.seed,
        samples: a.samples,
    };
    let report = crosscheck::run(suite, &opts)?.to_string();
    match a.out {
        Some(path) => write(&path, &report)?,
        None => print!("{report}"),
    }
    Ok(())
}
