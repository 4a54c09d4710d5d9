//! Command-line front end: kernel evaluation, verification suites, and
//! CSV kernel grids over a slice.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid flags,
//! 3 domain errors (invalid order, point outside the unit ball, ...).

mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use slicepoly::kernels::{bergman_kernel, bergman_kernel_alt, e_star, fock_kernel, KernelValue};
use slicepoly::quaternion::{ImaginaryUnit, Quaternion};

use verify::{Config, Suite};

#[derive(Parser)]
#[command(
    name = "slicepoly",
    version,
    about = "Slice polyanalytic reproducing kernels: evaluation, verification, tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a kernel at a pair of quaternions and print JSON.
    Eval(EvalArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Print a CSV grid of kernel values over a slice.
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelKind {
    Fock,
    Bergman,
    Estar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Fock,
    Bergman,
}

#[derive(Clone, Copy, ValueEnum)]
enum SliceAxis {
    I,
    J,
    K,
}

impl SliceAxis {
    fn unit(self) -> ImaginaryUnit {
        match self {
            SliceAxis::I => ImaginaryUnit::I,
            SliceAxis::J => ImaginaryUnit::J,
            SliceAxis::K => ImaginaryUnit::K,
        }
    }
}

/// Comma-separated component quadruple in basis order (1, i, j, k).
fn parse_quaternion(text: &str) -> Result<Quaternion, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 comma-separated components, got {}", parts.len()));
    }
    let mut values = [0.0f64; 4];
    for (v, p) in values.iter_mut().zip(&parts) {
        *v = p
            .trim()
            .parse()
            .map_err(|e| format!("bad component {p:?}: {e}"))?;
    }
    Ok(Quaternion::new(values[0], values[1], values[2], values[3]))
}

#[derive(Args)]
struct EvalArgs {
    /// Kernel to evaluate.
    #[arg(long, value_enum)]
    kind: KernelKind,
    /// Kernel order N (ignored by estar).
    #[arg(long, default_value_t = 1)]
    order: u32,
    /// First argument as x0,x1,x2,x3.
    #[arg(long, value_parser = parse_quaternion)]
    q: Quaternion,
    /// Second argument as x0,x1,x2,x3.
    #[arg(long, value_parser = parse_quaternion)]
    r: Quaternion,
    /// Use the second published form of the Bergman kernel.
    #[arg(long)]
    alt: bool,
    /// Series tolerance for the exponential kernel.
    #[arg(long, default_value_t = 1e-14)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Samples per suite; 0 runs nothing and succeeds.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Quadrature size override: plane rule n, disk rule (n, 2n).
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    nodes: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long, default_value_t = 1)]
    order: u32,
    /// Slice axis for the grid plane.
    #[arg(long, value_enum, default_value_t = SliceAxis::I)]
    slice: SliceAxis,
    /// Grid points per axis.
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..))]
    grid: u64,
    /// Kernel second argument as x0,x1,x2,x3.
    #[arg(long, value_parser = parse_quaternion, default_value = "0,0,0,0")]
    r: Quaternion,
    /// Series tolerance for the exponential kernel.
    #[arg(long, default_value_t = 1e-14)]
    tol: f64,
}

#[derive(Serialize)]
struct EvalOutput {
    value: [f64; 4],
    terms_used: usize,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Eval(args) => run_eval(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Table(args) => run_table(&args),
    };
    std::process::exit(code);
}

fn domain_error(err: slicepoly::Error) -> i32 {
    eprintln!("error: {err}");
    3
}

fn run_eval(args: &EvalArgs) -> i32 {
    if args.alt && args.kind != KernelKind::Bergman {
        eprintln!("error: --alt applies only to --kind bergman");
        return 2;
    }
    let result = match args.kind {
        KernelKind::Estar => e_star(args.q, args.r, args.tol),
        KernelKind::Fock => fock_kernel(args.order, args.q, args.r, args.tol),
        KernelKind::Bergman if args.alt => bergman_kernel_alt(args.order, args.q, args.r),
        KernelKind::Bergman => bergman_kernel(args.order, args.q, args.r),
    };
    match result {
        Ok(KernelValue {
            value, terms_used, ..
        }) => {
            let out = EvalOutput {
                value: [value.x0, value.x1, value.x2, value.x3],
                terms_used,
            };
            println!("{}", serde_json::to_string(&out).expect("serialize"));
            0
        }
        Err(err) => domain_error(err),
    }
}

fn run_verify(args: &VerifyArgs) -> i32 {
    let cfg = Config {
        seed: args.seed,
        samples: args.samples,
        plane_nodes: args.nodes.map(|n| n as usize).unwrap_or(80),
        disk_radial: args.nodes.map(|n| n as usize).unwrap_or(128),
        disk_angular: args.nodes.map(|n| 2 * n as usize).unwrap_or(256),
    };
    let report = verify::run(args.suite, &cfg);
    println!("{}", serde_json::to_string(&report).expect("serialize"));
    if report.all_passed() {
        0
    } else {
        1
    }
}

fn linspace(lo: f64, hi: f64, n: u64) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|t| lo + (hi - lo) * t as f64 / (n - 1) as f64)
        .collect()
}

fn run_table(args: &TableArgs) -> i32 {
    if args.order < 1 || args.order > slicepoly::kernels::MAX_KERNEL_ORDER {
        return domain_error(slicepoly::Error::InvalidOrder {
            order: args.order,
            max: slicepoly::kernels::MAX_KERNEL_ORDER,
        });
    }
    let unit = args.slice.unit();
    let half_width = match args.kind {
        TableKind::Fock => 2.0,
        TableKind::Bergman => 0.95,
    };
    let axis = linspace(-half_width, half_width, args.grid);
    let mut rows = String::from("x,y,v0,v1,v2,v3\n");
    for &x in &axis {
        for &y in &axis {
            if args.kind == TableKind::Bergman && x * x + y * y > 0.95 * 0.95 {
                continue;
            }
            let q = unit.embed(x, y);
            let result = match args.kind {
                TableKind::Fock => fock_kernel(args.order, q, args.r, args.tol),
                TableKind::Bergman => bergman_kernel(args.order, q, args.r),
            };
            match result {
                Ok(kv) => {
                    let v = kv.value;
                    rows.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        x, y, v.x0, v.x1, v.x2, v.x3
                    ));
                }
                Err(err) => return domain_error(err),
            }
        }
    }
    print!("{rows}");
    0
}
