//! Command-line front end. Exit status 0 when everything passes, 1 when a
//! property or computation fails, 2 on usage errors.

pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::groves::{
    asm_triangle, enumerate_bruteforce, enumerate_local_moves, to_simplified, Grove, DEFAULT_BRUTE_CAP,
};
use crate::lattice::{InitialConditions, Preset};
use crate::recurrence::{all_ones_count, f_symbolic, f_via_substitution, RecurrenceMode};
use crate::render::{render_asm, render_grove, render_lattice, render_simplified, Layer, RenderOptions};
use crate::sequences::{gr_certificate, gr_terms, GaleRobinsonSpec, DEFAULT_CERTIFICATE_BOUND};
use verify::{run_checks, Property, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cube-recurrence", version, about = "Cube recurrence polynomials and groves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute f(0,0,0) as a Laurent polynomial (JSON) or, in all-ones mode, an integer.
    Compute {
        #[command(flatten)]
        ic: IcArgs,
        #[arg(long, value_enum, default_value_t = Mode::EdgeVars)]
        mode: Mode,
        /// Evaluate by successive substitution instead of recursion.
        #[arg(long)]
        substitution: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List all groves as JSON lines.
    Enumerate {
        #[command(flatten)]
        ic: IcArgs,
        #[arg(long, value_enum, default_value_t = Method::LocalMoves)]
        method: Method,
        /// Radius for the brute-force method (default: minimal odd cutoff).
        #[arg(long)]
        cutoff: Option<i32>,
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: u64,
        /// Print only the number of groves.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites and print a JSON report.
    Verify {
        /// Presets to check (repeatable).
        #[arg(long = "preset", value_name = "PRESET")]
        presets: Vec<String>,
        /// JSON files holding presets (repeatable).
        #[arg(long = "ic-file", value_name = "PATH")]
        ic_files: Vec<PathBuf>,
        /// Comma-separated properties, or `all`.
        #[arg(long, default_value = "all")]
        props: String,
        /// Radius for the brute-force oracle (default: minimal cutoff).
        #[arg(long)]
        cutoff: Option<i32>,
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gale-Robinson terms, optionally certified by grove counts.
    Sequence {
        /// p,q,r
        #[arg(long, value_name = "P,Q,R")]
        gr: String,
        #[arg(long, default_value_t = 12)]
        count: usize,
        /// Certify y(l) for every l up to this index.
        #[arg(long)]
        certify_up_to: Option<u32>,
        /// alpha,beta,gamma as rationals (default 1,1,1).
        #[arg(long, value_name = "A,B,C")]
        coefficients: Option<String>,
        /// Initial terms y(0),...,y(n-1) as rationals (default all 1).
        #[arg(long, value_name = "Y0,Y1,...")]
        initial: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an SVG figure.
    Render {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        ic: IcArgs,
        /// Which grove (in sorted order) to draw.
        #[arg(long, default_value_t = 0)]
        grove_index: usize,
        /// Draw the grove given by a JSON line instead.
        #[arg(long)]
        grove_file: Option<PathBuf>,
        /// Comma-separated layers: rhombi, short_edges, long_edges, vertex_labels, boundary_classes.
        #[arg(long)]
        layers: Option<String>,
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
        #[arg(long)]
        cutoff: Option<i32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct IcArgs {
    /// `standard:N`, `kleber:I,J,K`, `gale-robinson:P,Q,R,L` or `full`.
    #[arg(long, conflicts_with = "ic_file")]
    pub preset: Option<String>,
    /// JSON preset, e.g. {"preset":"standard","n":4} or {"explicit":{"u_fin":[[0,0,0]]}}.
    #[arg(long)]
    pub ic_file: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    EdgeVars,
    Abc,
    AllOnes,
    ShiftOcta,
}

impl Mode {
    fn recurrence_mode(self) -> RecurrenceMode {
        match self {
            Mode::EdgeVars => RecurrenceMode::EdgeVars,
            Mode::Abc => RecurrenceMode::AlphaBetaGamma,
            Mode::AllOnes => RecurrenceMode::AllOnes,
            Mode::ShiftOcta => RecurrenceMode::ShiftOcta,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    LocalMoves,
    BruteForce,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Lattice,
    Grove,
    Simplified,
    Asm,
}

/// An error with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(m: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: m.to_string(),
        }
    }

    fn failed(m: impl ToString) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: m.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn load_ic(args: &IcArgs) -> Result<InitialConditions, Failure> {
    let preset = match (&args.preset, &args.ic_file) {
        (Some(s), None) => Preset::parse_short(s).map_err(Failure::usage)?,
        (None, Some(path)) => read_preset(path)?,
        (None, None) => return Err(Failure::usage("one of --preset or --ic-file is required")),
        (Some(_), Some(_)) => return Err(Failure::usage("--preset and --ic-file are exclusive")),
    };
    preset.build().map_err(Failure::usage)
}

fn read_preset(path: &PathBuf) -> Result<Preset, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Preset::from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::failed(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(Failure::failed),
    }
}

fn parse_rationals(s: &str) -> Result<Vec<BigRational>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigRational>()
                .map_err(|_| Failure::usage(format!("bad rational `{t}`")))
        })
        .collect()
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Compute {
            ic,
            mode,
            substitution,
            out,
        } => {
            let ic = load_ic(&ic)?;
            let text = if mode == Mode::AllOnes && !substitution {
                all_ones_count(&ic).map_err(Failure::failed)?.to_string()
            } else {
                let m = mode.recurrence_mode();
                let f = if substitution {
                    f_via_substitution(&ic, &m)
                } else {
                    f_symbolic(&ic, &m)
                }
                .map_err(Failure::failed)?;
                match (mode, f.as_constant()) {
                    (Mode::AllOnes, Some(c)) => c.to_string(),
                    _ => f.to_json(),
                }
            };
            emit(&format!("{text}\n"), &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            ic,
            method,
            cutoff,
            brute_cap,
            count,
            out,
        } => {
            let ic = Arc::new(load_ic(&ic)?);
            let groves = match method {
                Method::LocalMoves => enumerate_local_moves(&ic),
                Method::BruteForce => {
                    let n = cutoff.unwrap_or(ic.min_odd_cutoff());
                    enumerate_bruteforce(&ic, n, brute_cap)
                }
            }
            .map_err(Failure::failed)?;
            let text = if count {
                format!("{}\n", groves.len())
            } else {
                groves.iter().map(|g| g.to_json_line() + "\n").collect()
            };
            emit(&text, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            presets,
            ic_files,
            props,
            cutoff,
            brute_cap,
            out,
        } => {
            let props = Property::parse_list(&props).map_err(Failure::usage)?;
            let mut targets: Vec<Preset> = presets
                .iter()
                .map(|s| Preset::parse_short(s).map_err(Failure::usage))
                .collect::<Result<_, _>>()?;
            for path in &ic_files {
                targets.push(read_preset(path)?);
            }
            if targets.is_empty() {
                return Err(Failure::usage("give at least one --preset or --ic-file"));
            }
            let opts = VerifyOptions { cutoff, brute_cap };
            let mut all_pass = true;
            let mut reports = Vec::new();
            for preset in &targets {
                let ic = preset.build().map_err(Failure::usage)?;
                let results = run_checks(&ic, &props, &opts);
                let pass = results.iter().all(|r| !r.failed());
                all_pass &= pass;
                reports.push(json!({
                    "ic": serde_json::to_value(preset).expect("presets serialize"),
                    "pass": pass,
                    "checks": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                }));
            }
            let report = json!({"pass": all_pass, "results": reports});
            emit(&format!("{report}\n"), &out, stdout)?;
            Ok(if all_pass { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Sequence {
            gr,
            count,
            certify_up_to,
            coefficients,
            initial,
            out,
        } => {
            let pqr: Vec<u32> = gr
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::usage(format!("bad --gr `{gr}`")))?;
            let [p, q, r] = pqr[..] else {
                return Err(Failure::usage("--gr takes three integers p,q,r"));
            };
            let mut spec = GaleRobinsonSpec::new(p, q, r).map_err(Failure::usage)?;
            let default_coefficients = coefficients.is_none();
            if let Some(c) = coefficients {
                let [a, b, g]: [BigRational; 3] = parse_rationals(&c)?
                    .try_into()
                    .map_err(|_| Failure::usage("--coefficients takes three values"))?;
                spec = spec.with_coefficients(a, b, g);
            }
            let default_initial = initial.is_none();
            if let Some(init) = initial {
                spec = spec.with_initial(parse_rationals(&init)?).map_err(Failure::usage)?;
            }
            let terms = gr_terms(&spec, count).map_err(Failure::failed)?;
            let mut all_hold = true;
            let mut rows = Vec::new();
            for t in &terms {
                let mut row = json!({"l": t.index, "value": t.value.to_string(), "integral": t.integral});
                if let Some(limit) = certify_up_to {
                    if t.index as u32 <= limit {
                        if !(default_coefficients && default_initial) {
                            return Err(Failure::usage(
                                "certificates need default coefficients and initial terms",
                            ));
                        }
                        let c = gr_certificate(p, q, r, t.index as u32, DEFAULT_CERTIFICATE_BOUND)
                            .map_err(Failure::failed)?;
                        all_hold &= c.holds();
                        row["certificate"] = json!({
                            "groves": c.grove_count,
                            "counts_match": c.counts_match,
                            "symbolic_match": c.symbolic_match,
                        });
                    }
                }
                rows.push(row);
            }
            emit(&format!("{}\n", Value::Array(rows)), &out, stdout)?;
            Ok(if all_hold { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Render {
            target,
            ic,
            grove_index,
            grove_file,
            layers,
            scale,
            cutoff,
            out,
        } => {
            let ic = Arc::new(load_ic(&ic)?);
            let mut opts = RenderOptions::default().with_scale(scale);
            if let Some(n) = cutoff {
                opts = opts.with_cutoff(n);
            }
            if let Some(list) = layers {
                let parsed: Vec<Layer> = list
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| Layer::from_name(t).ok_or_else(|| Failure::usage(format!("unknown layer `{t}`"))))
                    .collect::<Result<_, _>>()?;
                opts = opts.with_layers(parsed);
            }
            let pick_grove = || -> Result<Grove, Failure> {
                if let Some(path) = &grove_file {
                    let line = std::fs::read_to_string(path)
                        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                    return Grove::from_json_line(Arc::clone(&ic), line.trim()).map_err(Failure::usage);
                }
                let groves = enumerate_local_moves(&ic).map_err(Failure::failed)?;
                let total = groves.len();
                groves
                    .into_iter()
                    .nth(grove_index)
                    .ok_or_else(|| Failure::usage(format!("grove index {grove_index} out of range ({total} groves)")))
            };
            let svg = match target {
                Target::Lattice => render_lattice(&ic, &opts),
                Target::Grove => render_grove(&pick_grove()?, &opts),
                Target::Simplified => {
                    let n = cutoff.unwrap_or(ic.min_odd_cutoff());
                    let s = to_simplified(&pick_grove()?, n).map_err(Failure::usage)?;
                    render_simplified(&s, &opts)
                }
                Target::Asm => {
                    let t = asm_triangle(&pick_grove()?).map_err(Failure::usage)?;
                    render_asm(&t, scale)
                }
            }
            .map_err(Failure::usage)?;
            emit(&svg, &out, stdout)?;
            Ok(EXIT_OK)
        }
    }
}
