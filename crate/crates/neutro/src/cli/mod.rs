//! Batch command-line front end: `eval`, `distance`, `sweep`, `verify`.
//!
//! Rows go in as CSV (header optional), results come out as CSV or JSON
//! with a configurable number of significant digits. Runs are deterministic:
//! the same input produces byte-identical output. File output is atomic —
//! a temp file is renamed into place only after the whole artifact is
//! rendered, so interrupted runs leave nothing behind.

mod format;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::MeasureReport;
use crate::triplet::NeutrosophicTriplet;
use crate::verify::{run_property_suite, GridSpec, SuiteConfig};
use crate::{distance, similarity};
use format::format_significant;
use io::{read_rows, write_output, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "neutro",
    about = "Neutrosophic information measures: batch evaluation, distances, sweeps and verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every measure for each input row (mu, omega, nu).
    Eval(RunConfig),
    /// Distance and similarity for each input row (mu1, omega1, nu1, mu2, omega2, nu2).
    Distance(RunConfig),
    /// Emit every measure over the lattice of the unit cube.
    Sweep(RunConfig),
    /// Run the property-verification suite and write its reports as JSON.
    Verify(RunConfig),
}

/// Options shared by every subcommand.
#[derive(Debug, Args)]
pub struct RunConfig {
    /// Input CSV path (eval and distance; header row optional).
    #[arg(long)]
    input: Option<PathBuf>,

    /// Output path; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Output encoding for eval/distance/sweep (verify always writes JSON).
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Significant digits for numeric output.
    #[arg(
        long,
        env = "NEUTRO_PRECISION",
        default_value_t = 12,
        value_parser = clap::value_parser!(u32).range(6..=17)
    )]
    precision: u32,

    /// Lattice spacing for sweep and verify; must divide 1.
    #[arg(long = "grid-step", default_value_t = 0.1)]
    grid_step: f64,

    /// Finite-difference step for verify, in (0, 0.01].
    #[arg(long = "fd-step", default_value_t = 1e-4)]
    fd_step: f64,
}

/// Parses the process arguments, runs the selected command and maps the
/// outcome to the documented exit codes (0 success, 1 failed verification,
/// 2 input/usage, 3 validation, 4 output).
pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Eval(config) => cmd_eval(config).map(|()| true),
        Command::Distance(config) => cmd_distance(config).map(|()| true),
        Command::Sweep(config) => cmd_sweep(config).map(|()| true),
        Command::Verify(config) => cmd_verify(config),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

/// One rendered field: numbers embed as bare JSON literals, text is quoted.
enum Cell {
    Number(String),
    Text(String),
}

fn render(headers: &[&str], rows: &[Vec<Cell>], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::new();
            out.push_str(&headers.join(","));
            out.push('\n');
            for row in rows {
                let fields: Vec<&str> = row
                    .iter()
                    .map(|cell| match cell {
                        Cell::Number(s) | Cell::Text(s) => s.as_str(),
                    })
                    .collect();
                out.push_str(&fields.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            if rows.is_empty() {
                return "[]\n".to_string();
            }
            let mut out = String::from("[\n");
            for (i, row) in rows.iter().enumerate() {
                out.push_str("  {");
                for (j, (header, cell)) in headers.iter().zip(row).enumerate() {
                    if j > 0 {
                        out.push_str(", ");
                    }
                    out.push('"');
                    out.push_str(header);
                    out.push_str("\": ");
                    match cell {
                        Cell::Number(s) => out.push_str(s),
                        Cell::Text(s) => {
                            out.push('"');
                            out.push_str(s);
                            out.push('"');
                        }
                    }
                }
                out.push('}');
                if i + 1 < rows.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str("]\n");
            out
        }
    }
}

const EVAL_HEADERS: [&str; 10] = [
    "mu",
    "omega",
    "nu",
    "certainty",
    "score",
    "uncertainty",
    "escort_mu",
    "escort_nu",
    "entropy_nats",
    "entropy_normalized",
];

fn measure_cells(report: &MeasureReport, precision: u32) -> Vec<Cell> {
    [
        report.input.mu(),
        report.input.omega(),
        report.input.nu(),
        report.certainty,
        report.score,
        report.uncertainty,
        report.escort.mu,
        report.escort.nu,
        report.entropy.nats,
        report.entropy.normalized,
    ]
    .into_iter()
    .map(|v| Cell::Number(format_significant(v, precision)))
    .collect()
}

fn required_input<'a>(config: &'a RunConfig, command: &str) -> Result<&'a std::path::Path, CliError> {
    config
        .input
        .as_deref()
        .ok_or_else(|| CliError::Input(format!("{command} requires --input PATH")))
}

fn validated_triplet(row: &[f64], offset: usize, index: usize) -> Result<NeutrosophicTriplet, CliError> {
    NeutrosophicTriplet::new(row[offset], row[offset + 1], row[offset + 2])
        .map_err(|e| CliError::Validation(format!("row {}: {e}", index + 1)))
}

fn cmd_eval(config: &RunConfig) -> Result<(), CliError> {
    let path = required_input(config, "eval")?;
    let rows = read_rows(path, 3)?;
    let mut rendered = Vec::with_capacity(rows.len());
    for (index, row) in rows.iter().enumerate() {
        let report = MeasureReport::evaluate(validated_triplet(row, 0, index)?);
        rendered.push(measure_cells(&report, config.precision));
    }
    let output = render(&EVAL_HEADERS, &rendered, config.format);
    write_output(config.output.as_deref(), output.as_bytes())
}

fn cmd_distance(config: &RunConfig) -> Result<(), CliError> {
    const HEADERS: [&str; 8] = [
        "mu1",
        "omega1",
        "nu1",
        "mu2",
        "omega2",
        "nu2",
        "distance",
        "similarity",
    ];
    let path = required_input(config, "distance")?;
    let rows = read_rows(path, 6)?;
    let mut rendered = Vec::with_capacity(rows.len());
    for (index, row) in rows.iter().enumerate() {
        let first = validated_triplet(row, 0, index)?;
        let second = validated_triplet(row, 3, index)?;
        let cells: Vec<Cell> = [
            first.mu(),
            first.omega(),
            first.nu(),
            second.mu(),
            second.omega(),
            second.nu(),
            distance(first, second),
            similarity(first, second),
        ]
        .into_iter()
        .map(|v| Cell::Number(format_significant(v, config.precision)))
        .collect();
        rendered.push(cells);
    }
    let output = render(&HEADERS, &rendered, config.format);
    write_output(config.output.as_deref(), output.as_bytes())
}

fn cmd_sweep(config: &RunConfig) -> Result<(), CliError> {
    const HEADERS: [&str; 11] = [
        "mu",
        "omega",
        "nu",
        "certainty",
        "score",
        "uncertainty",
        "escort_mu",
        "escort_nu",
        "entropy_nats",
        "entropy_normalized",
        "kind",
    ];
    let grid = GridSpec::new(config.grid_step, false, false)
        .map_err(|e| CliError::Input(format!("--grid-step: {e}")))?;
    let mut rendered = Vec::new();
    for point in grid.points() {
        let report = MeasureReport::evaluate(point);
        let mut cells = measure_cells(&report, config.precision);
        let delta = point.delta();
        // the (mu, nu) slice satisfies both constraints exactly on delta = 0
        let kind = if delta < 0.0 {
            "intuitionistic"
        } else if delta > 0.0 {
            "paraconsistent"
        } else {
            "bifuzzy"
        };
        cells.push(Cell::Text(kind.to_string()));
        rendered.push(cells);
    }
    let output = render(&HEADERS, &rendered, config.format);
    write_output(config.output.as_deref(), output.as_bytes())
}

fn cmd_verify(config: &RunConfig) -> Result<bool, CliError> {
    let grid = GridSpec::new(config.grid_step, true, true)
        .map_err(|e| CliError::Input(format!("--grid-step: {e}")))?;
    let suite = SuiteConfig::new(grid)
        .with_fd_step(config.fd_step)
        .map_err(|e| CliError::Input(format!("--fd-step: {e}")))?;
    let reports = run_property_suite(&suite);
    let mut output =
        serde_json::to_string_pretty(&reports).expect("reports serialize without error");
    output.push('\n');
    write_output(config.output.as_deref(), output.as_bytes())?;
    Ok(reports.iter().all(|check| !check.mandatory || check.passed))
}
