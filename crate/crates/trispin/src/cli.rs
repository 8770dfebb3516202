//! Command-line front end: parameter entry, figure-data generation, and a
//! self-verification subcommand.
//!
//! Output is CSV (header line first, then `#` comment lines echoing every
//! parameter, then data rows) or JSON (a plain array of row objects with the
//! same field names). Numbers are printed with 9 significant digits and a
//! `.` decimal separator, so identical invocations produce byte-identical
//! files.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{dip_curve, ground_segments, sweep, GridSpec};
use crate::error::{Error, Result};
use crate::linalg::eigh_symmetric;
use crate::model::{analytic_spectrum, build_hamiltonian, ModelParams, Pair};
use crate::thermal::thermal_concurrence;
use crate::verify::run_battery;

/// Formats with 9 significant digits, locale-independent; positional
/// notation for exponents in [-4, 8], exponent notation elsewhere. The
/// output is also a valid JSON number.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    debug_assert!(x.is_finite(), "cannot format {x}");
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mantissa.starts_with('-');
    let all_digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = {
        let d = all_digits.trim_end_matches('0');
        if d.is_empty() {
            "0"
        } else {
            d
        }
    };

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (-4..=8).contains(&exp) {
        if exp >= 0 {
            let point = exp as usize + 1;
            if digits.len() > point {
                out.push_str(&digits[..point]);
                out.push('.');
                out.push_str(&digits[point..]);
            } else {
                out.push_str(digits);
                out.push_str(&"0".repeat(point - digits.len()));
            }
        } else {
            out.push_str("0.");
            out.push_str(&"0".repeat((-exp - 1) as usize));
            out.push_str(digits);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

fn parse_pair(s: &str) -> std::result::Result<Pair, String> {
    s.parse::<Pair>().map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Nearest-neighbor XX coupling.
    #[arg(long = "J", default_value_t = 1.0, allow_negative_numbers = true)]
    pub j: f64,
    /// Magnetic field along z.
    #[arg(long = "h", default_value_t = 0.0, allow_negative_numbers = true)]
    pub h: f64,
    /// Three-spin interaction strength.
    #[arg(long = "k", default_value_t = 0.0, allow_negative_numbers = true)]
    pub k: f64,
}

impl ParamArgs {
    fn model(&self) -> ModelParams {
        ModelParams::new(self.j, self.h, self.k)
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// A parsed CLI invocation.
#[derive(Parser, Debug)]
#[command(
    name = "trispin",
    version,
    about = "Thermal entanglement in a three-qubit XX chain with a three-spin interaction"
)]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form level table (energies, per-level concurrences) with the
    /// numeric eigenvalues alongside.
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// One thermal point: both-path concurrences and the Boltzmann-weight
    /// record of the reduced pair-13 state.
    Thermal {
        #[command(flatten)]
        params: ParamArgs,
        /// Temperature (k_B = 1).
        #[arg(long = "T")]
        t: f64,
        #[arg(long, default_value = "13", value_parser = parse_pair)]
        pair: Pair,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Concurrence over an (h, T) grid as rows h,T,C.
    Sweep {
        /// Nearest-neighbor XX coupling.
        #[arg(long = "J", default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
        /// Three-spin interaction strength.
        #[arg(long = "k", default_value_t = 0.0, allow_negative_numbers = true)]
        k: f64,
        #[arg(long, default_value = "13", value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
        h_min: f64,
        #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
        h_max: f64,
        #[arg(long, default_value_t = 121)]
        h_steps: usize,
        #[arg(long = "T-min", default_value_t = 0.02)]
        t_min: f64,
        #[arg(long = "T-max", default_value_t = 2.0)]
        t_max: f64,
        #[arg(long = "T-steps", default_value_t = 100)]
        t_steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dip location/magnitude and boot heights across k as rows
    /// k,h_dip,c_dip,c_plus,c_minus.
    Dip {
        #[arg(long = "J", default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
        #[arg(long, default_value = "13", value_parser = parse_pair)]
        pair: Pair,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        k_min: f64,
        #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
        k_max: f64,
        #[arg(long, default_value_t = 301)]
        k_steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Ground-state segments over an h range as rows h_lo,h_hi,levels,c13.
    Phase {
        #[arg(long = "J", default_value_t = 1.0, allow_negative_numbers = true)]
        j: f64,
        #[arg(long = "k", default_value_t = 0.0, allow_negative_numbers = true)]
        k: f64,
        #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
        h_min: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        h_max: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs the closed-form vs numeric cross-check battery; exits 0 when
    /// every check passes, 1 otherwise.
    Verify {
        /// Randomized trials per check.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Seed for all randomized checks.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Rendered output plus the process exit code it implies.
pub struct Rendered {
    pub text: String,
    pub exit_code: i32,
}

struct Table {
    columns: &'static [&'static str],
    echo: String,
    /// Row cells, pre-formatted; `None` renders as an empty CSV cell /
    /// JSON null.
    rows: Vec<Vec<Option<String>>>,
}

impl Table {
    fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        out.push_str(&format!("# {}\n", self.echo));
        for row in &self.rows {
            let cells: Vec<&str> = row.iter().map(|c| c.as_deref().unwrap_or("")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn to_json(&self) -> String {
        let mut out = String::from("[\n");
        for (i, row) in self.rows.iter().enumerate() {
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row)
                .map(|(name, cell)| match cell {
                    Some(v) => format!("\"{name}\":{v}"),
                    None => format!("\"{name}\":null"),
                })
                .collect();
            out.push_str("  {");
            out.push_str(&fields.join(","));
            out.push('}');
            if i + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("]\n");
        out
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn num(x: f64) -> Option<String> {
    Some(fmt_f64(x))
}

fn render_spectrum(params: &ParamArgs, format: Format) -> Result<String> {
    let p = params.model();
    let spectrum = analytic_spectrum(&p)?;
    let numeric = eigh_symmetric(&build_hamiltonian(&p))?.values;

    // pair levels with numeric eigenvalues through the shared energy order
    let mut order: Vec<usize> = (0..8).collect();
    let energies = spectrum.energies();
    order.sort_by(|&a, &b| energies[a].partial_cmp(&energies[b]).unwrap());
    let mut numeric_for_level = [0.0; 8];
    for (rank, &level_idx) in order.iter().enumerate() {
        numeric_for_level[level_idx] = numeric[rank];
    }

    let tol = 1e-10 * spectrum.spectral_range().max(1.0);
    let rows = spectrum
        .levels()
        .iter()
        .map(|level| {
            let numeric_e = numeric_for_level[level.index - 1];
            let agree = (level.energy - numeric_e).abs() <= tol;
            vec![
                Some(level.index.to_string()),
                num(level.energy),
                num(level.c13),
                num(level.c12),
                num(level.c23),
                num(numeric_e),
                Some(agree.to_string()),
            ]
        })
        .collect();
    let table = Table {
        columns: &["i", "energy", "c13", "c12", "c23", "numeric_energy", "agree"],
        echo: format!(
            "trispin spectrum J={} h={} k={}",
            fmt_f64(p.j),
            fmt_f64(p.h),
            fmt_f64(p.k)
        ),
        rows,
    };
    Ok(table.render(format))
}

fn render_thermal(params: &ParamArgs, t: f64, pair: Pair, format: Format) -> Result<String> {
    let p = params.model();
    let point = thermal_concurrence(&p, t, pair)?;
    let mut row = vec![
        num(p.j),
        num(p.h),
        num(p.k),
        num(t),
        Some(format!("\"{}\"", pair.label())),
        num(point.concurrence),
    ];
    match (&point.closed_form, &point.xstate) {
        (Some(c), Some(x)) => {
            row.push(num(*c));
            row.extend([num(x.u), num(x.v), num(x.w), num(x.y), num(x.z), num(x.log_scale)]);
        }
        _ => row.extend(std::iter::repeat_n(None, 7)),
    }
    let table = Table {
        columns: &[
            "J", "h", "k", "T", "pair", "concurrence", "closed_form", "u", "v", "w", "y", "Z",
            "log_scale",
        ],
        echo: format!(
            "trispin thermal J={} h={} k={} T={} pair={}",
            fmt_f64(p.j),
            fmt_f64(p.h),
            fmt_f64(p.k),
            fmt_f64(t),
            pair.label()
        ),
        rows: vec![row],
    };
    // pair is quoted in CSV too; strip quotes there for plain reading
    let mut text = table.render(format);
    if format == Format::Csv {
        text = text.replace("\"", "");
    }
    Ok(text)
}

#[allow(clippy::too_many_arguments)]
fn render_sweep(
    j: f64,
    k: f64,
    pair: Pair,
    h_grid: GridSpec,
    t_grid: GridSpec,
    format: Format,
) -> Result<String> {
    let rows = sweep(j, k, pair, &h_grid, &t_grid)?;
    let table = Table {
        columns: &["h", "T", "C"],
        echo: format!(
            "trispin sweep J={} k={} pair={} h=[{},{};{}] T=[{},{};{}]",
            fmt_f64(j),
            fmt_f64(k),
            pair.label(),
            fmt_f64(h_grid.lo),
            fmt_f64(h_grid.hi),
            h_grid.steps,
            fmt_f64(t_grid.lo),
            fmt_f64(t_grid.hi),
            t_grid.steps
        ),
        rows: rows
            .iter()
            .map(|r| vec![num(r.h), num(r.t), num(r.c)])
            .collect(),
    };
    Ok(table.render(format))
}

fn render_dip(j: f64, pair: Pair, k_grid: GridSpec, format: Format) -> Result<String> {
    let rows = dip_curve(&k_grid, j, pair)?;
    let table = Table {
        columns: &["k", "h_dip", "c_dip", "c_plus", "c_minus"],
        echo: format!(
            "trispin dip J={} pair={} k=[{},{};{}]",
            fmt_f64(j),
            pair.label(),
            fmt_f64(k_grid.lo),
            fmt_f64(k_grid.hi),
            k_grid.steps
        ),
        rows: rows
            .iter()
            .map(|r| vec![num(r.k), num(r.h_dip), num(r.c_dip), num(r.c_plus), num(r.c_minus)])
            .collect(),
    };
    Ok(table.render(format))
}

fn render_phase(j: f64, k: f64, h_min: f64, h_max: f64, format: Format) -> Result<String> {
    let segments = ground_segments(j, k, h_min, h_max)?;
    let rows = segments
        .iter()
        .map(|s| {
            let levels = s
                .ground_levels
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>();
            let levels_cell = match format {
                Format::Csv => levels.join("+"),
                Format::Json => format!("[{}]", levels.join(",")),
            };
            vec![num(s.h_lo), num(s.h_hi), Some(levels_cell), num(s.pair_c13)]
        })
        .collect();
    let table = Table {
        columns: &["h_lo", "h_hi", "levels", "c13"],
        echo: format!(
            "trispin phase J={} k={} h=[{},{}]",
            fmt_f64(j),
            fmt_f64(k),
            fmt_f64(h_min),
            fmt_f64(h_max)
        ),
        rows,
    };
    Ok(table.render(format))
}

fn render_verify(trials: usize, seed: u64) -> (String, i32) {
    let report = run_battery(trials, seed);
    let mut out = format!("# trispin verify trials={trials} seed={seed}\n");
    for check in &report.checks {
        if check.passed {
            out.push_str(&format!("ok   {}\n", check.name));
        } else {
            out.push_str(&format!("FAIL {}: {}\n", check.name, check.detail));
        }
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    out.push_str(&format!(
        "verify: {passed}/{} checks passed\n",
        report.checks.len()
    ));
    (out, if report.all_passed() { 0 } else { 1 })
}

/// Renders a command to its output text without touching the filesystem.
pub fn render(command: &Command) -> Result<Rendered> {
    match command {
        Command::Spectrum { params, output } => Ok(Rendered {
            text: render_spectrum(params, output.format)?,
            exit_code: 0,
        }),
        Command::Thermal {
            params,
            t,
            pair,
            output,
        } => Ok(Rendered {
            text: render_thermal(params, *t, *pair, output.format)?,
            exit_code: 0,
        }),
        Command::Sweep {
            j,
            k,
            pair,
            h_min,
            h_max,
            h_steps,
            t_min,
            t_max,
            t_steps,
            output,
        } => {
            let h_grid = GridSpec {
                lo: *h_min,
                hi: *h_max,
                steps: *h_steps,
            };
            let t_grid = GridSpec {
                lo: *t_min,
                hi: *t_max,
                steps: *t_steps,
            };
            Ok(Rendered {
                text: render_sweep(*j, *k, *pair, h_grid, t_grid, output.format)?,
                exit_code: 0,
            })
        }
        Command::Dip {
            j,
            pair,
            k_min,
            k_max,
            k_steps,
            output,
        } => {
            let k_grid = GridSpec {
                lo: *k_min,
                hi: *k_max,
                steps: *k_steps,
            };
            Ok(Rendered {
                text: render_dip(*j, *pair, k_grid, output.format)?,
                exit_code: 0,
            })
        }
        Command::Phase {
            j,
            k,
            h_min,
            h_max,
            output,
        } => Ok(Rendered {
            text: render_phase(*j, *k, *h_min, *h_max, output.format)?,
            exit_code: 0,
        }),
        Command::Verify { trials, seed, .. } => {
            let (text, exit_code) = render_verify(*trials, *seed);
            Ok(Rendered { text, exit_code })
        }
    }
}

fn out_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Spectrum { output, .. }
        | Command::Thermal { output, .. }
        | Command::Sweep { output, .. }
        | Command::Dip { output, .. }
        | Command::Phase { output, .. } => output.out.as_ref(),
        Command::Verify { out, .. } => out.as_ref(),
    }
}

/// Executes a parsed invocation, writing to `--out` or standard output, and
/// returns the process exit code.
pub fn run(spec: &JobSpec) -> Result<i32> {
    let rendered = render(&spec.command)?;
    match out_path(&spec.command) {
        Some(path) => fs::write(path, rendered.text.as_bytes())?,
        None => {
            let stdout = std::io::stdout();
            stdout.lock().write_all(rendered.text.as_bytes())?;
        }
    }
    Ok(rendered.exit_code)
}

/// Binary entry point: argument errors exit 2 (clap prints usage), numeric
/// domain errors exit 2 with a message, verification failures exit 1.
pub fn main_entry() -> std::process::ExitCode {
    let spec = JobSpec::parse();
    match run(&spec) {
        Ok(code) => std::process::ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::InvalidGrid(_)
                | Error::InvalidArgument(_)
                | Error::BadPair(_)
                | Error::ZeroCoupling
                | Error::NonPositiveTemperature(_) => 2,
                _ => 1,
            };
            std::process::ExitCode::from(code)
        }
    }
}
