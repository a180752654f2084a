//! The `tfpl` command line tool.
//!
//! Exit status: 0 on success, 1 when a verification suite finds a
//! counterexample, 2 for bad flags, 3 for unreadable or invalid input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::{is_square_document, BoundaryTriple, TfplConfig};
use crate::error::Error;
use crate::fpl::FplConfig;
use crate::gyration::{iterate_to_stable, wieland_left, wieland_right};
use crate::render::{fpl_ascii, fpl_svg, tfpl_ascii, tfpl_svg, RenderOptions};
use crate::verify::{enumerate_tfpl, enumerate_with_boundary, run_suite, CountTable, Limits, Suite};
use crate::words::BinaryWord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "tfpl", version, about = "Triangular fully packed loops and Wieland gyration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or count all TFPLs of one size.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Only configurations with this boundary, given as `u,v,w`.
        #[arg(long)]
        boundary: Option<String>,
        /// Print the number of configurations instead of listing them.
        #[arg(long, conflicts_with = "table")]
        count_only: bool,
        /// Print counts per boundary: `u|v|w  count  excess  stable`.
        #[arg(long)]
        table: bool,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply left or right Wieland gyration once.
    Gyrate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
        /// `u⁻` for the left side, `v⁻` for the right; defaults to the
        /// current boundary word.
        #[arg(long)]
        word: Option<String>,
    },
    /// Apply left gyration until the configuration is fixed.
    Orbit {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run a theorem check over all configurations of one size.
    Verify {
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
    /// Draw a triangular or square configuration.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        /// Mark odd and even vertices and cells.
        #[arg(long)]
        parity: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Inverse,
    Stability,
    Linear,
    Conditions,
    Lr,
    Sweep,
    FplRotation,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Inverse => Suite::Inverse,
            SuiteArg::Stability => Suite::Stability,
            SuiteArg::Linear => Suite::Linear,
            SuiteArg::Conditions => Suite::Conditions,
            SuiteArg::Lr => Suite::Lr,
            SuiteArg::Sweep => Suite::Sweep,
            SuiteArg::FplRotation => Suite::FplRotation,
        }
    }
}

/// A failed command: message and exit status.
struct Failure(i32, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn invalid(msg: impl ToString) -> Failure {
    Failure(EXIT_INVALID_INPUT, msg.to_string())
}

/// Runs the tool with `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let limits = Limits::from_env().map_err(usage)?;
    match command {
        Command::Enumerate { size, boundary, count_only, table, out: path } => {
            let text = enumerate(size, boundary.as_deref(), count_only, table, &limits)?;
            match path {
                Some(p) => fs::write(&p, text).map_err(|e| invalid(format!("{}: {e}", p.display())))?,
                None => emit(out, &text)?,
            }
        }
        Command::Gyrate { input, side, word } => {
            let f = read_tfpl(&input)?;
            let g = match side {
                SideArg::Left => {
                    let u = parse_word(word.as_deref(), || f.left_word())?;
                    wieland_left(&f, &u)
                }
                SideArg::Right => {
                    let v = parse_word(word.as_deref(), || f.right_word())?;
                    wieland_right(&f, &v)
                }
            }
            .map_err(usage)?;
            emit(out, &format!("{}\n", g.to_json()))?;
        }
        Command::Orbit { input } => {
            let f = read_tfpl(&input)?;
            let orbit = iterate_to_stable(&f).map_err(|e| Failure(EXIT_COUNTEREXAMPLE, e.to_string()))?;
            let mut text = String::new();
            for (i, b) in orbit.boundaries.iter().enumerate() {
                text.push_str(&format!("step {i}: {b}\n"));
            }
            text.push_str(&format!("steps: {}\n", orbit.steps));
            text.push_str(&format!("stable: {}\n", orbit.stable.to_json()));
            emit(out, &text)?;
        }
        Command::Verify { size, suite } => {
            check_size(size, &limits)?;
            let report = run_suite(suite.into(), size, &limits).map_err(usage)?;
            emit(out, &report.to_text())?;
            if !report.passed() {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
        Command::Render { input, format, parity } => {
            let text = fs::read_to_string(&input).map_err(|e| invalid(format!("{}: {e}", input.display())))?;
            let opts = RenderOptions { parity };
            let picture = if is_square_document(&text) {
                let f = FplConfig::from_json(&text).map_err(invalid)?;
                f.validate().map_err(invalid)?;
                match format {
                    FormatArg::Ascii => fpl_ascii(&f, opts),
                    FormatArg::Svg => fpl_svg(&f, opts),
                }
            } else {
                let f = parse_tfpl(&text)?;
                match format {
                    FormatArg::Ascii => tfpl_ascii(&f, opts),
                    FormatArg::Svg => tfpl_svg(&f, opts),
                }
            };
            emit(out, &picture)?;
        }
    }
    Ok(EXIT_OK)
}

fn enumerate(
    size: usize,
    boundary: Option<&str>,
    count_only: bool,
    table: bool,
    limits: &Limits,
) -> Result<String, Failure> {
    check_size(size, limits)?;
    let configs = match boundary {
        Some(s) => {
            let b: BoundaryTriple = s.parse().map_err(usage)?;
            if b.size() != size {
                return Err(usage(format!("boundary {b} has size {}, not {size}", b.size())));
            }
            enumerate_with_boundary(&b, limits.tfpl_cap)
        }
        None => enumerate_tfpl(size, limits.tfpl_cap),
    }
    .map_err(usage)?;
    Ok(if count_only {
        format!("{}\n", configs.len())
    } else if table {
        CountTable::from_configs(size, &configs).to_text()
    } else {
        configs.iter().map(|f| f.to_json() + "\n").collect()
    })
}

fn check_size(size: usize, limits: &Limits) -> Result<(), Failure> {
    if size == 0 {
        return Err(usage(Error::ZeroSize));
    }
    if size > limits.tfpl_cap {
        return Err(usage(format!(
            "{}; set TFPL_MAX_SIZE to raise it",
            Error::CapExceeded { size, cap: limits.tfpl_cap }
        )));
    }
    Ok(())
}

fn parse_word(word: Option<&str>, default: impl FnOnce() -> BinaryWord) -> Result<BinaryWord, Failure> {
    match word {
        Some(w) => w.parse().map_err(usage),
        None => Ok(default()),
    }
}

fn read_tfpl(path: &Path) -> Result<TfplConfig, Failure> {
    let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    parse_tfpl(&text)
}

fn parse_tfpl(text: &str) -> Result<TfplConfig, Failure> {
    let f = TfplConfig::from_json(text).map_err(invalid)?;
    f.validate().map_err(|v| invalid(format!("not a TFPL: {v}")))?;
    Ok(f)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure(EXIT_INVALID_INPUT, e.to_string()))
}
