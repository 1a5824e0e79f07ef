use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coarse_ep::certfile::{BoundVariant, CertificateFile};
use coarse_ep::distpack::dist_pack_two;
use coarse_ep::io::{parse_graph, serialize_graph, GraphFormat};
use coarse_ep::oracle::{is_k1t_free, verify_certificate, OracleBudget, Verdict};
use coarse_ep::packing::{induced_pack_or_hit_opts, PackOptions};
use coarse_ep::planar::planar_pack;
use coarse_ep::treedecomp::{k1t_td, validate_td, K1tOutcome};
use coarse_ep::{gen, graph, Error, Graph};

#[derive(Parser)]
#[command(name = "coarse-ep", version, about = "Induced cycle packings and ball hitting sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Graph file; stdin when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Validate intermediate structures in full.
    #[arg(long, global = true)]
    paranoid: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Edgelist => GraphFormat::Edgelist,
            Format::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Gnp,
    Path,
    Cycle,
    Complete,
    RandomCubic,
    HighGirthCubic,
    Grid,
    GridSubgraph,
    StackedTriangulation,
    CompleteBipartite,
    Star,
    Petersen,
    Heawood,
    LineGraph,
    Subdivide,
}

#[derive(Subcommand)]
enum Command {
    /// k induced cycles or a radius-1 hitting set.
    Pack {
        #[arg(long)]
        k: usize,
    },
    /// The planar variant with hitting sets of size at most 6k.
    PlanarPack {
        #[arg(long)]
        k: usize,
    },
    /// Two cycles at distance > d, or radius-2d / radius-3d hitting sets.
    DistPack {
        #[arg(long)]
        d: usize,
    },
    /// Tree decomposition of a K_{1,t}-free graph, or k induced cycles.
    TreeDecomp {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Girth and a shortest cycle.
    Girth,
    /// Check a certificate against the input graph.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Generate a graph. `line-graph` and `subdivide` transform the input.
    Gen {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        /// Second dimension (grid, complete bipartite).
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Minimum girth, subdivision count or kept-edge fraction (in percent).
        #[arg(long, default_value_t = 0)]
        s: usize,
    },
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Error> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display()))),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::InvalidInput(format!("stdout: {e}"))),
            _ => Ok(()),
        },
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::NotPlanarEvidence(_) => 1,
        Error::InternalTheoremViolation(_) | Error::Internal(_) => 2,
        Error::CapExceeded(_) => 3,
    }
}

/// Refuses to emit a certificate the independent checker does not accept.
fn checked(g: &Graph, cert: CertificateFile) -> Result<String, Error> {
    match verify_certificate(g, &cert) {
        Verdict::Accepted => Ok(cert.to_json()),
        Verdict::Rejected(why) => Err(Error::InternalTheoremViolation(format!("certificate rejected: {why}"))),
        Verdict::Undecided(why) => Err(Error::CapExceeded(why)),
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let format = GraphFormat::from(cli.format);
    let load = || -> Result<Graph, Error> { parse_graph(&read_input(&cli.input)?, format) };
    match &cli.command {
        Command::Pack { k } => {
            let g = load()?;
            let cert = induced_pack_or_hit_opts(&g, *k, PackOptions { paranoid: cli.paranoid })?;
            let file = CertificateFile::from_certificate(&cert, *k, BoundVariant::General)?;
            write_output(&cli.output, &checked(&g, file)?)
        }
        Command::PlanarPack { k } => {
            let g = load()?;
            let cert = planar_pack(&g, *k)?;
            let file = CertificateFile::from_certificate(&cert, *k, BoundVariant::Planar)?;
            write_output(&cli.output, &checked(&g, file)?)
        }
        Command::DistPack { d } => {
            let g = load()?;
            let res = dist_pack_two(&g, *d)?;
            write_output(&cli.output, &checked(&g, CertificateFile::from_dist(&res, *d))?)
        }
        Command::TreeDecomp { k, t } => {
            let g = load()?;
            if g.n() <= 128 && !is_k1t_free(&g, *t, OracleBudget::default())? {
                return Err(Error::InvalidInput(format!("input is not K_1,{t}-free")));
            }
            let file = match k1t_td(&g, *k, *t)? {
                K1tOutcome::Packing(cert) => CertificateFile::from_certificate(&cert, *k, BoundVariant::General)?,
                K1tOutcome::Decomposition { td, .. } => {
                    let report = validate_td(&g, &td, 128)?;
                    if !report.is_valid() {
                        return Err(Error::InternalTheoremViolation(format!(
                            "decomposition fails {:?}",
                            report.failures
                        )));
                    }
                    CertificateFile::from_tree_decomposition(&td, *k, *t, report.max_independence)
                }
            };
            write_output(&cli.output, &checked(&g, file)?)
        }
        Command::Girth => {
            let g = load()?;
            let text = match graph::girth_cycle(&g) {
                Some(c) => format!("{}\n{}\n", c.len(), join(c.vertices())),
                None => "inf\n".to_string(),
            };
            write_output(&cli.output, &text)
        }
        Command::Verify { cert } => {
            let g = load()?;
            let text = fs::read_to_string(cert).map_err(|e| Error::InvalidInput(format!("{}: {e}", cert.display())))?;
            let file = CertificateFile::from_json(&text)?;
            match verify_certificate(&g, &file) {
                Verdict::Accepted => write_output(&cli.output, "ok\n"),
                Verdict::Rejected(why) => Err(Error::InvalidInput(format!("certificate rejected: {why}"))),
                Verdict::Undecided(why) => Err(Error::CapExceeded(why)),
            }
        }
        Command::Gen { model, n, p, b, s } => {
            let (n, b, s, seed) = (*n, *b, *s, cli.seed);
            let g = match model {
                Model::Gnp => gen::gnp(n, *p, seed)?,
                Model::Path => gen::path(n),
                Model::Cycle => gen::cycle(n)?,
                Model::Complete => gen::complete(n),
                Model::RandomCubic => gen::random_cubic(n, seed)?,
                Model::HighGirthCubic => gen::high_girth_cubic(n, s, seed)?,
                Model::Grid => gen::grid(n, b),
                Model::GridSubgraph => gen::grid_subgraph(n, b, s as f64 / 100.0, seed)?,
                Model::StackedTriangulation => gen::stacked_triangulation(n, seed)?,
                Model::CompleteBipartite => gen::complete_bipartite(n, b),
                Model::Star => gen::star(n),
                Model::Petersen => gen::petersen(),
                Model::Heawood => gen::heawood(),
                Model::LineGraph => gen::line_graph(&load()?),
                Model::Subdivide => gen::subdivide(&load()?, s),
            };
            write_output(&cli.output, &serialize_graph(&g, format))
        }
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    // clap's own usage-error code 2 would collide with the violation code
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
