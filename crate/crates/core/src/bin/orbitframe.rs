use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use orbitframe::cli::{self, demos, Document, FiberInput, Overrides, Settings, Status};
use orbitframe::linalg::C64;

#[derive(Parser, Debug)]
#[command(
    name = "orbitframe",
    version,
    about = "Frame certification for orbits of finite group representations"
)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Certification tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Relative eigenvalue cutoff for support projections.
    #[arg(long, global = true)]
    rank_cutoff: Option<f64>,

    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Print a one-line summary per report to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the analyses listed in a JSON config.
    Analyze { config: PathBuf },
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Subcommand, Debug)]
enum Demo {
    /// Dihedral group acting on a ten-point set.
    D3,
    /// Two-pronged comb a delta_{g1} + b delta_{g2} on Z_n.
    Comb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g1: usize,
        #[arg(long)]
        g2: usize,
        /// `re` or `re,im`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: C64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        b: C64,
    },
    /// Bracket spectrum against DFT fibers on Z_n.
    Fiberization {
        #[arg(long)]
        n: usize,
        /// `random`, or comma-separated `re` / `re:im` entries.
        #[arg(long, value_parser = FiberInput::parse, allow_hyphen_values = true)]
        f: FiberInput,
    },
}

fn parse_complex(s: &str) -> Result<C64, String> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0"));
    let re: f64 = re.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
    let im: f64 = im.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
    Ok(C64::new(re, im))
}

fn run(args: &Args) -> orbitframe::Result<Document> {
    let overrides = Overrides {
        tol: args.tol,
        rank_cutoff: args.rank_cutoff,
        seed: args.seed,
    };
    let settings = Settings::resolve(&overrides, None, None, None, None);
    match &args.command {
        Command::Analyze { config } => cli::run_analyze(config, &overrides),
        Command::Demo(Demo::D3) => demos::demo_dihedral(&settings),
        Command::Demo(Demo::Comb { n, g1, g2, a, b }) => demos::demo_comb(*n, *g1, *g2, *a, *b, &settings),
        Command::Demo(Demo::Fiberization { n, f }) => demos::demo_fiberization(*n, f, &settings),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let doc = match run(&args) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(Status::of_error(&e).code() as u8);
        }
    };
    let json = doc.to_json();
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{json}"),
    }
    if args.verbose {
        eprint!("{}", doc.summary());
    }
    ExitCode::from(doc.status().code() as u8)
}
