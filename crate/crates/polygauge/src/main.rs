//! Command-line surface over the library: classification, index, dual
//! norms, operator norms, witness construction, perturbation, and the
//! randomized verification campaign.
//!
//! Exit codes: 0 on success, 1 on input errors (and verification
//! failures), 2 when a mathematical precondition does not hold for the
//! given spaces.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polygauge::error::Error;
use polygauge::gauge::PolyhedralGauge;
use polygauge::operators;
use polygauge::report;
use polygauge::scalar::{parse_rat, Rat};
use polygauge::verify::{self, RunConfig};
use polygauge::{io, Result};

#[derive(Parser)]
#[command(
    name = "polygauge",
    about = "Exact computations on asymmetric norms given as polyhedral gauges",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Args)]
struct SpaceArg {
    /// Space: a gauge JSON file, or a fixture name such as `upper_real`,
    /// `referee_plane`, `weighted_linf:<n>`, `sup_gauge:<n>`, `linf_sym:<n>`.
    space: Option<String>,

    /// Use a named fixture instead of a positional space.
    #[arg(long, value_name = "NAME", conflicts_with = "space")]
    fixture: Option<String>,
}

impl SpaceArg {
    fn load(&self) -> Result<PolyhedralGauge> {
        match (&self.space, &self.fixture) {
            (Some(s), None) => io::load_space(s),
            (None, Some(f)) => polygauge::gauge::fixtures::by_name(f),
            (None, None) => Err(Error::Input(
                "expected a space (file or fixture name), or --fixture <NAME>".into(),
            )),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a space: index of symmetry, T1 flag with certificate, type,
    /// and the finite-dimensional consistency facts.
    Classify {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Index of symmetry c(X) with its minimizer, the reverse supremum, and
    /// the product identity when c > 0.
    Index {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Flat norm ‖p|♭ of a functional with a membership certificate.
    DualNorm {
        /// Space: a gauge JSON file or a fixture name.
        space: String,
        /// The functional, comma-separated rationals: e.g. "-1" or "0,1/3".
        #[arg(value_name = "FUNCTIONAL", allow_hyphen_values = true)]
        functional: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Asymmetric and symmetric operator norms of an operator file.
    Opnorm {
        /// Operator JSON file.
        op_file: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Construct T continuous with -T discontinuous for spaces with
    /// c(X) = 0 and Y not T1, certificates included.
    Witness {
        /// Domain space (file or fixture name).
        domain: String,
        /// Codomain space (file or fixture name).
        codomain: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Perturb a continuous operator by epsilon so the sum has a
    /// discontinuous negative.
    Perturb {
        /// Operator JSON file for H.
        op_file: String,
        /// Perturbation size, a positive rational.
        epsilon: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
    /// Run the randomized verification campaign.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Dimension range, e.g. "1..4" or a single dimension.
        #[arg(long, default_value = "1..4")]
        dims: String,
        #[arg(long, value_enum, default_value = "text")]
        output: Output,
    },
}

fn parse_functional(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

fn parse_dims(s: &str) -> Result<(usize, usize)> {
    let bad = || {
        Error::Input(format!(
            "bad --dims {s:?}: expected \"min..max\" or a single integer"
        ))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo == 0 || hi < lo {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let d: usize = s.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok((d, d))
    }
}

fn emit<T: serde::Serialize>(output: Output, value: &T, text: String) {
    match output {
        Output::Text => print!("{text}"),
        Output::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(value).expect("reports serialize")
            )
        }
    }
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify { space, output } => {
            let g = space.load()?;
            let r = report::classify_report(&g);
            emit(output, &r, r.render_text());
            Ok(true)
        }
        Command::Index { space, output } => {
            let g = space.load()?;
            let r = report::index_report(&g);
            emit(output, &r, r.render_text());
            Ok(true)
        }
        Command::DualNorm {
            space,
            functional,
            output,
        } => {
            let g = io::load_space(&space)?;
            let p = parse_functional(&functional)?;
            let r = report::dual_norm_report(&g, &p)?;
            emit(output, &r, r.render_text());
            Ok(true)
        }
        Command::Opnorm { op_file, output } => {
            let op = io::operator_from_file(&op_file)?;
            let norms = operators::lc_norm(&op);
            let r = report::opnorm_report(&op, &norms);
            emit(output, &r, r.render_text());
            Ok(true)
        }
        Command::Witness {
            domain,
            codomain,
            output,
        } => {
            let x = io::load_space(&domain)?;
            let y = io::load_space(&codomain)?;
            let w = operators::nonreversible_witness(&x, &y)?;
            let r = report::witness_report(&w);
            emit(output, &r, r.render_text());
            Ok(true)
        }
        Command::Perturb {
            op_file,
            epsilon,
            output,
        } => {
            let h = io::operator_from_file(&op_file)?;
            let eps = parse_rat(&epsilon)?;
            let p = operators::perturb_nonsymmetric(&h, &eps)?;
            let r = report::perturb_report(&p, &eps);
            emit(output, &r, r.render_text());
            Ok(true)
        }
        Command::Verify {
            seed,
            cases,
            dims,
            output,
        } => {
            let dims = parse_dims(&dims)?;
            let config = RunConfig { seed, cases, dims };
            let r = verify::run_campaign(&config);
            emit(output, &r, r.render_text());
            Ok(r.ok)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Precondition(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
