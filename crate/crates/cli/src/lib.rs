//! Command-line front end for `symkin`.
//!
//! The binary is a thin wrapper around [`run`], which takes the argument
//! list and two writers and returns the process exit code. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | input error: unreadable file, malformed spec, bad arguments |
//! | 3 | the requested quantity is kinematically degenerate |
//! | 4 | a computed value is non-finite |

pub mod analysis;
pub mod fmt;
pub mod polodes;
pub mod svg;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use symkin::motion_spec::{parse_spec, presets, MotionSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "symkin", version, about = "Planar rigid-body kinematics: poles, Bresse circles, polodes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// JSON report of one instant on standard output.
    Analyze {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        at: f64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(3..=12))]
        order: u8,
    },
    /// CSV of pole data over a parameter range.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(3..=12))]
        order: u8,
        #[arg(long)]
        out: PathBuf,
    },
    /// CSV of sampled polodes, optionally an SVG figure.
    Polodes {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Built-in reference motions.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum PresetAction {
    /// Names and one-line summaries.
    List,
    /// The motion file of a preset.
    Dump { name: String },
}

/// Order used for the analysis drawn into the polode figure.
const FIGURE_ORDER: usize = 6;

struct Failure(i32, String);

fn input(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

fn load(path: &Path) -> Result<MotionSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, data: &str) -> Result<(), Failure> {
    std::fs::write(path, data).map_err(|e| input(format!("cannot write {}: {e}", path.display())))
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure(EXIT_INTERNAL, format!("write failed: {e}"));
    match cmd {
        Command::Analyze { spec, at, order } => {
            if !at.is_finite() {
                return Err(input("--at must be finite"));
            }
            let s = load(&spec)?;
            let a = analysis::analyze(&s, at, order as usize).map_err(|e| Failure(EXIT_DEGENERATE, format!("analysis failed: {e} [{}]", e.code())))?;
            let text = serde_json::to_string_pretty(&a.to_json(&s.name)).expect("json values serialize");
            writeln!(stdout, "{text}").map_err(io)?;
            if !a.is_finite() {
                return Err(Failure(EXIT_INTERNAL, "non-finite value in report".into()));
            }
            if let Some(code) = a.absent.get("pole") {
                return Err(Failure(EXIT_DEGENERATE, format!("velocity pole undefined [{code}]")));
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { spec, from, to, steps, order, out } => {
            sweep::check_range(from, to, steps).map_err(input)?;
            let s = load(&spec)?;
            let rows = sweep::sweep_analyses(&s, from, to, steps, order as usize);
            write_file(&out, &sweep::sweep_csv(&rows))?;
            if rows.iter().any(|(_, r)| r.as_ref().is_ok_and(|a| !a.is_finite())) {
                return Err(Failure(EXIT_INTERNAL, "non-finite value in sweep".into()));
            }
            Ok(EXIT_OK)
        }
        Command::Polodes { spec, from, to, steps, svg, out } => {
            sweep::check_range(from, to, steps).map_err(input)?;
            let s = load(&spec)?;
            let tr = polodes::trace(&s, from, to, steps);
            write_file(&out, &polodes::polodes_csv(&tr))?;
            if let Some(path) = svg {
                let a = analysis::analyze(&s, tr.reference_param(), FIGURE_ORDER).ok();
                write_file(&path, &svg::render(&tr, a.as_ref()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Presets { action: PresetAction::List } => {
            for p in &presets::PRESETS {
                writeln!(stdout, "{}\t{}", p.name, p.summary).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Presets { action: PresetAction::Dump { name } } => {
            let p = presets::find(&name).ok_or_else(|| input(format!("unknown preset `{name}`")))?;
            stdout.write_all(p.document.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "symkin: {msg}");
            code
        }
    }
}
