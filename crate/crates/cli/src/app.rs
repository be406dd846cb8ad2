use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use brooks_core::certify::{dsatur_baseline, generate, verify_coloring, verify_obstruction, GenSpec, Model};
use brooks_core::dimacs::parse_dimacs_with_warnings;
use brooks_core::{serialize_dimacs, ColorOutcome, Graph};
use clap::{Parser, Subcommand, ValueEnum};

use crate::report::{parse_result, ClaimedResult, RunReport};
use crate::solve::{color_per_component, color_with_budget, obstruction_budget, Solved};

pub const EXIT_COLORING: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_OBSTRUCTION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "brooks", version, about = "Certified graph coloring for DIMACS instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color a DIMACS graph or print a certificate that it cannot be colored.
    Color {
        file: PathBuf,
        /// Global budget; default is max(Δ, 2) per component.
        #[arg(long = "colors", value_name = "K")]
        colors: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        /// Re-check the result with the independent verifier before exiting.
        #[arg(long)]
        verify: bool,
    },
    /// Check a result file (text or JSON) against a graph.
    Verify { graph: PathBuf, result: PathBuf },
    /// Emit a generated graph in canonical DIMACS form.
    Gen {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the engine over generated graphs of several sizes.
    Bench {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelName {
    Gnp,
    Regular,
    Cycle,
    Complete,
    Petersen,
}

#[derive(Debug, clap::Args)]
struct ModelArgs {
    #[arg(long, value_enum)]
    model: ModelName,
    /// Edge probability for gnp.
    #[arg(long, conflicts_with = "d")]
    p: Option<f64>,
    /// Degree for regular.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    seed: u64,
}

impl ModelArgs {
    fn spec(&self, n: usize) -> Result<GenSpec, String> {
        let model = match self.model {
            ModelName::Gnp => Model::Gnp {
                p: self.p.ok_or("--model gnp needs --p")?,
            },
            ModelName::Regular => Model::Regular {
                d: self.d.ok_or("--model regular needs --d")?,
            },
            ModelName::Cycle => Model::Cycle,
            ModelName::Complete => Model::Complete,
            ModelName::Petersen => Model::Petersen,
        };
        Ok(GenSpec::new(model, n, self.seed))
    }
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_COLORING };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Color { file, colors, output, verify } => color(&file, colors, output, verify, out, err),
        Command::Verify { graph, result } => verify_files(&graph, &result, out, err),
        Command::Gen { model, n, out: path } => {
            let g = generate(&model.spec(n)?).map_err(|e| e.to_string())?;
            let text = serialize_dimacs(&g);
            match path {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
            }
            Ok(EXIT_COLORING)
        }
        Command::Bench { model, sizes } => bench(&model, &sizes, out),
    }
}

fn load_graph(path: &PathBuf, err: &mut dyn Write) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (g, warnings) = parse_dimacs_with_warnings(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    for w in warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(g)
}

fn solve(g: &Graph, colors: Option<usize>) -> Result<Solved, String> {
    match colors {
        Some(k) => color_with_budget(g, k),
        None => color_per_component(g),
    }
    .map_err(|e| e.to_string())
}

fn verifies(g: &Graph, solved: &Solved) -> bool {
    match &solved.outcome {
        ColorOutcome::Colored(c) => verify_coloring(g, c.as_slice(), solved.k),
        ColorOutcome::Obstructed(obs) => verify_obstruction(g, obs, obstruction_budget(obs)),
    }
}

fn color(
    file: &PathBuf,
    colors: Option<usize>,
    output: OutputFormat,
    verify: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, String> {
    let g = load_graph(file, err)?;
    let start = Instant::now();
    let solved = solve(&g, colors)?;
    let millis = start.elapsed().as_millis() as u64;
    if verify && !verifies(&g, &solved) {
        return Err("result failed independent verification".into());
    }
    let report = RunReport::new(&g, &solved, millis);
    let rendered = match output {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => report.to_json(),
    };
    out.write_all(rendered.as_bytes()).map_err(|e| e.to_string())?;
    Ok(if solved.outcome.is_colored() {
        EXIT_COLORING
    } else {
        EXIT_OBSTRUCTION
    })
}

fn verify_files(graph: &PathBuf, result: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let g = load_graph(graph, err)?;
    let text = fs::read_to_string(result).map_err(|e| format!("{}: {e}", result.display()))?;
    let claimed = parse_result(&text, g.vertex_count()).map_err(|e| format!("{}: {e}", result.display()))?;
    let (ok, what) = match &claimed {
        ClaimedResult::Coloring { k, colors } => (verify_coloring(&g, colors, *k), format!("coloring within {k} colors")),
        ClaimedResult::Obstruction { k, obstruction } => {
            (verify_obstruction(&g, obstruction, *k), format!("obstruction to {k}-coloring"))
        }
    };
    if ok {
        writeln!(out, "valid {what}").map_err(|e| e.to_string())?;
        Ok(EXIT_COLORING)
    } else {
        writeln!(out, "INVALID {what}").map_err(|e| e.to_string())?;
        Ok(EXIT_ERROR)
    }
}

fn bench(model: &ModelArgs, sizes: &[usize], out: &mut dyn Write) -> Result<i32, String> {
    let w = |out: &mut dyn Write, line: String| writeln!(out, "{line}").map_err(|e| e.to_string());
    w(
        out,
        format!(
            "{:>9} {:>10} {:>6} {:>11} {:>6} {:>6} {:>10}",
            "size", "m", "maxdeg", "outcome", "colors", "dsatur", "millis"
        ),
    )?;
    for &n in sizes {
        let g = generate(&model.spec(n)?).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let solved = color_per_component(&g).map_err(|e| e.to_string())?;
        let millis = start.elapsed().as_secs_f64() * 1e3;
        if !verifies(&g, &solved) {
            return Err(format!("size {n}: result failed verification"));
        }
        let (outcome, colors) = match &solved.outcome {
            ColorOutcome::Colored(c) => ("coloring", c.colors_used().to_string()),
            ColorOutcome::Obstructed(o) => ("obstruction", format!("K{}", o.vertices().len())),
        };
        let dsatur = dsatur_baseline(&g).colors_used();
        w(
            out,
            format!(
                "{:>9} {:>10} {:>6} {:>11} {:>6} {:>6} {:>10.1}",
                n,
                g.edge_count(),
                g.max_degree(),
                outcome,
                colors,
                dsatur,
                millis
            ),
        )?;
    }
    Ok(EXIT_COLORING)
}
