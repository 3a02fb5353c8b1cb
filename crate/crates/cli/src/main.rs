//! `qft`: transforms, lemma self-checks and uncertainty certificates from
//! the command line.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qft_core::checks::Lemma;
use qft_core::fixtures::{default_grid, Fixture};
use qft_core::qft::{convolve, qft_direct, qft_fast, qft_inverse};
use qft_core::qsignal::io::write_magnitude_csv;
use qft_core::uncertainty::{
    beurling_certify, conjugate_exponent, cowling_price_check, gelfand_shilov_check, hardy_check,
    BeurlingParams, CertificateReport, CowlingPriceParams, GelfandShilovParams, HardyParams,
    SpectrumNorm, Subject,
};
use qft_core::{Error, GridSpec, QSignal, QSpectrum};

#[derive(Parser, Debug)]
#[command(
    name = "qft",
    version,
    about = "Two-sided quaternion Fourier transform toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Transform a signal and write its spectrum.
    Transform {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        output: PathBuf,
        /// Use the direct O(N²) sum instead of the FFT path.
        #[arg(long)]
        direct: bool,
    },
    /// Invert a spectrum file back to a signal.
    Inverse {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Circular convolution of two signals on the same grid.
    Convolve {
        /// Exactly two inputs (fixture names or files).
        #[arg(long = "input", num_args = 1, required = true)]
        inputs: Vec<String>,
        #[arg(long, value_parser = parse_pair::<usize>)]
        grid: Option<(usize, usize)>,
        #[arg(long, value_parser = parse_pair::<f64>)]
        spacing: Option<(f64, f64)>,
        #[arg(long)]
        output: PathBuf,
    },
    /// Run a transform identity on built-in fixtures.
    CheckLemma {
        name: LemmaName,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Evaluate an uncertainty hypothesis and report what it forces.
    Certify {
        theorem: TheoremName,
        #[command(flatten)]
        input: InputArgs,
        /// Polynomial weight exponent `d`.
        #[arg(long)]
        d: Option<f64>,
        /// Decay rate on the signal side.
        #[arg(long)]
        alpha: Option<f64>,
        /// Decay rate on the spectrum side.
        #[arg(long)]
        beta: Option<f64>,
        /// Signal-side exponent (gelfand-shilov, cowling-price).
        #[arg(long)]
        p: Option<f64>,
        /// Spectrum-side exponent; defaults to the conjugate of `p`.
        #[arg(long)]
        q: Option<f64>,
        /// Spectrum size entering the hypotheses.
        #[arg(long, value_enum, default_value_t = NormArg::Module)]
        norm: NormArg,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Also write the report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a CSV magnitude map of a spectrum for plotting.
    Export {
        #[command(flatten)]
        input: InputArgs,
        /// Treat the input file as a spectrum instead of transforming it.
        #[arg(long)]
        spectrum: bool,
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Fixture name (gaussian, delta, zero, polygauss:m,n,alpha, noise:seed) or file.
    #[arg(long, default_value = "gaussian")]
    input: String,
    /// Grid size for fixtures.
    #[arg(long, value_parser = parse_pair::<usize>)]
    grid: Option<(usize, usize)>,
    /// Grid spacing for fixtures.
    #[arg(long, value_parser = parse_pair::<f64>)]
    spacing: Option<(f64, f64)>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LemmaName {
    Plancherel,
    Inverse,
    Convolution,
    Gaussian,
    ModuleLaw,
    Polygauss,
    Dilation,
}

impl From<LemmaName> for Lemma {
    fn from(l: LemmaName) -> Self {
        match l {
            LemmaName::Plancherel => Lemma::Plancherel,
            LemmaName::Inverse => Lemma::Inverse,
            LemmaName::Convolution => Lemma::Convolution,
            LemmaName::Gaussian => Lemma::Gaussian,
            LemmaName::ModuleLaw => Lemma::ModuleLaw,
            LemmaName::Polygauss => Lemma::PolyGauss,
            LemmaName::Dilation => Lemma::Dilation,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TheoremName {
    Beurling,
    Hardy,
    GelfandShilov,
    CowlingPrice,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum NormArg {
    Module,
    Modulus,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportFormat {
    Text,
    Kv,
}

fn parse_pair<T: std::str::FromStr>(s: &str) -> Result<(T, T), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated values, got '{s}'"))?;
    let parse = |v: &str| {
        v.trim()
            .parse::<T>()
            .map_err(|_| format!("cannot parse '{v}'"))
    };
    Ok((parse(a)?, parse(b)?))
}

/// Failure categories mapped to exit codes.
enum Failure {
    /// Bad invocation: exit 2.
    Usage(String),
    /// Anything else that stops the run: exit 1.
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Argument(m) => Failure::Usage(m),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn grid_from(
    grid: Option<(usize, usize)>,
    spacing: Option<(f64, f64)>,
) -> Result<GridSpec, Failure> {
    let base = default_grid();
    let (n1, n2) = grid.unwrap_or((base.n1, base.n2));
    let (d1, d2) = spacing.unwrap_or((base.d1, base.d2));
    Ok(GridSpec::new(n1, n2, d1, d2)?)
}

enum Input {
    Fixture(Fixture, GridSpec),
    File(QSignal),
}

impl Input {
    fn resolve(
        input: &str,
        grid: Option<(usize, usize)>,
        spacing: Option<(f64, f64)>,
    ) -> Result<Self, Failure> {
        let path = Path::new(input);
        if path.exists() {
            if grid.is_some() || spacing.is_some() {
                return Err(usage(
                    "--grid and --spacing apply to fixtures only; files carry their own grid",
                ));
            }
            return Ok(Input::File(QSignal::load(path)?));
        }
        match input.parse::<Fixture>() {
            Ok(f) => Ok(Input::Fixture(f, grid_from(grid, spacing)?)),
            Err(e) => Err(usage(format!("{e}; no file named '{input}' either"))),
        }
    }

    fn signal(&self) -> QSignal {
        match self {
            Input::Fixture(f, grid) => f.sample(*grid),
            Input::File(s) => s.clone(),
        }
    }

    fn subject(self, label: &str) -> Subject {
        match self {
            Input::Fixture(f, grid) => f.subject(grid),
            Input::File(s) => Subject::sampled(s).with_label(label),
        }
    }
}

fn require(v: Option<f64>, flag: &str, theorem: &str) -> Result<f64, Failure> {
    v.ok_or_else(|| usage(format!("certify {theorem} requires --{flag}")))
}

/// `q` from `p` unless given.
fn exponents(p: Option<f64>, q: Option<f64>, theorem: &str) -> Result<(f64, f64), Failure> {
    let p = require(p, "p", theorem)?;
    let q = match q {
        Some(q) => q,
        None => conjugate_exponent(p)?,
    };
    Ok((p, q))
}

fn write_report(
    report: &CertificateReport,
    format: ReportFormat,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let body = match format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Kv => report.to_key_values(),
    };
    print!("{body}");
    if let Some(path) = output {
        fs::write(path, &body)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Transform {
            input,
            output,
            direct,
        } => {
            let f = Input::resolve(&input.input, input.grid, input.spacing)?.signal();
            let spectrum = if direct { qft_direct(&f) } else { qft_fast(&f) };
            spectrum.save(&output)?;
            println!(
                "wrote {}x{} spectrum to {}",
                f.grid().n1,
                f.grid().n2,
                output.display()
            );
        }
        Command::Inverse { input, output } => {
            let spectrum = QSpectrum::load(&input)?;
            let f = qft_inverse(&spectrum);
            f.save(&output)?;
            println!(
                "wrote {}x{} signal to {}",
                f.grid().n1,
                f.grid().n2,
                output.display()
            );
        }
        Command::Convolve {
            inputs,
            grid,
            spacing,
            output,
        } => {
            let [a, b] = &inputs[..] else {
                return Err(usage(format!(
                    "convolve takes exactly two --input values, got {}",
                    inputs.len()
                )));
            };
            let f = Input::resolve(a, grid, spacing)?.signal();
            let g = Input::resolve(b, grid, spacing)?.signal();
            let h = convolve(&f, &g)?;
            h.save(&output)?;
            println!(
                "wrote {}x{} convolution to {}",
                h.grid().n1,
                h.grid().n2,
                output.display()
            );
        }
        Command::CheckLemma { name, tolerance } => {
            let check = Lemma::from(name).run(tolerance)?;
            print!("{check}");
            if !check.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Certify {
            theorem,
            input,
            d,
            alpha,
            beta,
            p,
            q,
            norm,
            format,
            output,
        } => {
            let name = theorem
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_owned();
            // validate parameters before any compute
            enum Params {
                B(BeurlingParams),
                H(HardyParams),
                G(GelfandShilovParams),
                C(CowlingPriceParams),
            }
            let params = match theorem {
                TheoremName::Beurling => Params::B(BeurlingParams::new(require(d, "d", &name)?)?),
                TheoremName::Hardy => Params::H(HardyParams::new(
                    require(d, "d", &name)?,
                    require(alpha, "alpha", &name)?,
                    require(beta, "beta", &name)?,
                )?),
                TheoremName::GelfandShilov => {
                    let (p, q) = exponents(p, q, &name)?;
                    Params::G(GelfandShilovParams::from_real_d(
                        require(d, "d", &name)?,
                        require(alpha, "alpha", &name)?,
                        require(beta, "beta", &name)?,
                        p,
                        q,
                    )?)
                }
                TheoremName::CowlingPrice => {
                    let (p, q) = exponents(p, q, &name)?;
                    Params::C(CowlingPriceParams::new(
                        require(d, "d", &name)?,
                        require(alpha, "alpha", &name)?,
                        require(beta, "beta", &name)?,
                        p,
                        q,
                    )?)
                }
            };
            let norm = match norm {
                NormArg::Module => SpectrumNorm::Module,
                NormArg::Modulus => SpectrumNorm::Modulus,
            };
            let subject = Input::resolve(&input.input, input.grid, input.spacing)?
                .subject(&input.input)
                .with_norm(norm);
            let report = match params {
                Params::B(p) => beurling_certify(&subject, &p)?,
                Params::H(p) => hardy_check(&subject, &p)?,
                Params::G(p) => gelfand_shilov_check(&subject, &p)?,
                Params::C(p) => cowling_price_check(&subject, &p)?,
            };
            write_report(&report, format, output.as_deref())?;
        }
        Command::Export {
            input,
            spectrum,
            output,
        } => {
            let spec = if spectrum {
                if input.grid.is_some() || input.spacing.is_some() {
                    return Err(usage(
                        "--grid and --spacing do not apply to a spectrum file",
                    ));
                }
                QSpectrum::load(&input.input)?
            } else {
                qft_fast(&Input::resolve(&input.input, input.grid, input.spacing)?.signal())
            };
            let mut w = BufWriter::new(fs::File::create(&output)?);
            write_magnitude_csv(&mut w, &spec)?;
            w.flush()?;
            println!("wrote magnitude map to {}", output.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Caps the worker pool from `QFT_THREADS`.
fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("QFT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            usage(format!(
                "QFT_THREADS must be a positive integer, got '{value}'"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Runtime(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
