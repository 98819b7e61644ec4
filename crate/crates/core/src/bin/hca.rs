use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperbolic_clifford::cli;

#[derive(Parser)]
#[command(name = "hca", version, about = "Hyperbolic Clifford algebra calculator and identity checker")]
struct Args {
    /// Dimension n of the base space V.
    #[arg(long = "dim", global = true, default_value_t = 2)]
    dim: usize,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "t1*e1 + e1*t1".
    Eval { expr: String },
    /// Run a randomized identity suite.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Torsion and curvature of a preset connection at a chart point.
    Curvature {
        /// flat, sphere or custom.
        #[arg(long, default_value = "sphere")]
        preset: String,
        /// Coordinates separated by commas, e.g. "pi/2, 0.3".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Coefficients for the custom preset, e.g. "122 = -sin(x1)*cos(x1); 212 = cot(x1)".
        #[arg(long)]
        coefficients: Option<String>,
    },
    /// Print the Witt and orthonormal bases of V ⊕ V*.
    Basis,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match &args.command {
        Command::Eval { expr } => cli::eval_cmd(expr, args.dim, args.json).map(|s| (s, true)),
        Command::Check { suite, cases, seed, tol } => cli::check_cmd(suite, args.dim, *cases, *seed, *tol, args.json),
        Command::Curvature { preset, point, coefficients } => cli::parse_point(point)
            .and_then(|p| cli::curvature_cmd(preset, args.dim, coefficients.as_deref(), &p, args.json))
            .map(|s| (s, true)),
        Command::Basis => cli::basis_cmd(args.dim, args.json).map(|s| (s, true)),
    };
    match result {
        Ok((text, passed)) => {
            println!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
