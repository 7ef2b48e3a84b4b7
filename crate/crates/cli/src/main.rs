use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use holorec::cli_harness::{compare, run_fixture_suite, Verdict};
use holorec::exactmath::{format_rational, int, parse_rational};
use holorec::rec_engine::{lattice_terms, DEFAULT_GUARD};
use holorec::{
    classify_str, derive, parse_polynomial, BFile, Derivation, Error, GfClass, Interpretation, Options,
    PRecurrence, Poly, Rational, Report, Route, Sign,
};
use num_traits::Zero;

#[derive(Parser)]
#[command(name = "holorec", version, about = "Exact P-finite recurrences for generating functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a generating function and print its ODE and recurrence.
    Derive(DeriveArgs),
    /// Generate terms from the derived recurrence.
    Gen(GenArgs),
    /// Compare derived terms with an OEIS b-file.
    Check(CheckArgs),
    /// Certify every built-in example fixture against the series oracle.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct ClassArgs {
    /// Generating function in x, e.g. "1/sqrt(1-4*x)".
    #[arg(long, conflicts_with = "class", required_unless_present = "class")]
    expr: Option<String>,
    /// Class name, e.g. inverse-root or log-rational; parameters via --p, --q, ...
    #[arg(long)]
    class: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    /// L of power-of-first-order.
    #[arg(long, allow_hyphen_values = true)]
    l: Option<String>,
    /// H of power-of-first-order.
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    /// Root index (rational), or the lattice stride of a hypergeometric term.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Sign of the square root for exp-poly-sqrt: 1 or -1.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    /// Comma-separated upper parameters of a hypergeometric term.
    #[arg(long, allow_hyphen_values = true)]
    alphas: Option<String>,
    /// Comma-separated lower parameters of a hypergeometric term.
    #[arg(long, allow_hyphen_values = true)]
    betas: Option<String>,
    /// Power of x in front of a hypergeometric term.
    #[arg(long)]
    t: Option<u32>,
    /// Argument divisor of a hypergeometric term.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
}

#[derive(Args)]
struct Common {
    /// Use the per-class closed forms instead of the generic ODE conversion.
    #[arg(long, value_enum, default_value_t = RouteArg::Generic)]
    route: RouteArg,
    /// Indices checked past the theoretical start of the recurrence.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    /// Read coefficients as an exponential generating function (multiply by n!).
    #[arg(long, conflicts_with = "lgf")]
    egf: bool,
    /// Read coefficients as a logarithmic generating function (multiply by n).
    #[arg(long)]
    lgf: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Generic,
    ClosedForm,
}

#[derive(Args)]
struct DeriveArgs {
    #[command(flatten)]
    class: ClassArgs,
    #[command(flatten)]
    common: Common,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Also derive the recurrence with one term fewer.
    #[arg(long)]
    shorten: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Lines,
    Csv,
    Bfile,
    Json,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    class: ClassArgs,
    #[command(flatten)]
    common: Common,
    /// Highest index to generate.
    #[arg(short = 'n', default_value_t = 20)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
    /// Allow non-integer terms with --egf.
    #[arg(long)]
    allow_rational: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    class: ClassArgs,
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    bfile: PathBuf,
    /// b-file index of the first term g_0.
    #[arg(long, default_value_t = 0)]
    offset: u64,
    /// Compare at most this many entries.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Terms certified per fixture.
    #[arg(long, default_value_t = 100)]
    terms: usize,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: usize,
}

/// Exit code and message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::Parse(_) | Error::BFile(_) => 2,
            Error::Ode(holorec::OdeError::Class(_)) => 2,
            _ => 3,
        };
        Failure(code, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure(2, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Derive(a) => cmd_derive(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Check(a) => cmd_check(a),
        Command::Suite(a) => cmd_suite(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            let _ = io::stdout().flush();
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn poly_flag(value: &Option<String>, name: &str) -> Result<Poly, Failure> {
    let text = value.as_deref().ok_or_else(|| input_error(format!("--{name} is required for this class")))?;
    parse_polynomial(text).map_err(|e| input_error(format!("--{name}: {e}")))
}

fn poly_or(value: &Option<String>, name: &str, default: Poly) -> Result<Poly, Failure> {
    match value {
        Some(_) => poly_flag(value, name),
        None => Ok(default),
    }
}

fn rational_flag(value: &Option<String>, name: &str) -> Result<Rational, Failure> {
    let text = value.as_deref().ok_or_else(|| input_error(format!("--{name} is required for this class")))?;
    parse_rational(text).ok_or_else(|| input_error(format!("--{name}: '{text}' is not a rational number")))
}

fn rational_list(value: &Option<String>) -> Result<Vec<Rational>, Failure> {
    match value.as_deref().map(str::trim) {
        None | Some("") => Ok(Vec::new()),
        Some(text) => text
            .split(',')
            .map(|s| parse_rational(s).ok_or_else(|| input_error(format!("'{s}' is not a rational number"))))
            .collect(),
    }
}

fn build_class(a: &ClassArgs) -> Result<GfClass, Failure> {
    if let Some(expr) = &a.expr {
        return classify_str(expr).map_err(|e| Failure::from(Error::from(e)));
    }
    let name = a.class.as_deref().expect("clap requires --expr or --class");
    let one = Poly::one;
    let class = match name {
        "inverse-root" => GfClass::InverseRoot { p: poly_flag(&a.p, "p")?, r: rational_flag(&a.r, "r")? },
        "general-root" => GfClass::GeneralRoot {
            q: poly_or(&a.q, "q", one())?,
            v: poly_or(&a.v, "v", one())?,
            p: poly_flag(&a.p, "p")?,
            r: rational_flag(&a.r, "r")?,
        },
        "sqrt-ratio" => GfClass::SqrtRatio { q: poly_flag(&a.q, "q")?, p: poly_flag(&a.p, "p")? },
        "rooted-denominator" => GfClass::RootedDenominator {
            q: poly_or(&a.q, "q", one())?,
            w: poly_flag(&a.w, "w")?,
            v: poly_or(&a.v, "v", one())?,
            p: poly_flag(&a.p, "p")?,
        },
        "rooted-numerator" => GfClass::RootedNumerator {
            w: poly_flag(&a.w, "w")?,
            v: poly_or(&a.v, "v", one())?,
            p: poly_flag(&a.p, "p")?,
            q: poly_or(&a.q, "q", one())?,
            r: rational_flag(&a.r, "r")?,
        },
        "nested-sqrt" => GfClass::NestedSqrt {
            w: poly_flag(&a.w, "w")?,
            p: poly_flag(&a.p, "p")?,
            r: rational_flag(&a.r, "r")?,
        },
        "exp-poly-sqrt" => {
            let sign = match a.sign.as_deref().unwrap_or("1") {
                "1" | "+1" | "+" => Sign::Plus,
                "-1" | "-" => Sign::Minus,
                other => return Err(input_error(format!("--sign must be 1 or -1, got '{other}'"))),
            };
            GfClass::ExpPolySqrt { w: poly_flag(&a.w, "w")?, p: poly_or(&a.p, "p", Poly::zero())?, sign }
        }
        "exp-rational-times-root" => GfClass::ExpRationalTimesRoot {
            q: poly_flag(&a.q, "q")?,
            v: poly_or(&a.v, "v", one())?,
            p: poly_or(&a.p, "p", one())?,
            r: match a.r {
                Some(_) => rational_flag(&a.r, "r")?,
                None => int(1),
            },
        },
        "log-rational" => GfClass::LogRational { q: poly_flag(&a.q, "q")?, v: poly_or(&a.v, "v", one())? },
        "hypergeometric" => {
            let stride = match &a.r {
                None => 1,
                Some(s) => s.parse::<u32>().map_err(|_| input_error("--r must be a positive integer stride"))?,
            };
            GfClass::Hypergeometric {
                alphas: rational_list(&a.alphas)?,
                betas: rational_list(&a.betas)?,
                t: a.t.unwrap_or(0),
                r: stride,
                c: match a.c {
                    Some(_) => rational_flag(&a.c, "c")?,
                    None => int(1),
                },
            }
        }
        "power-of-first-order" => GfClass::PowerOfFirstOrder {
            l: poly_flag(&a.l, "l")?,
            h: poly_flag(&a.h, "h")?,
            r: rational_flag(&a.r, "r")?,
        },
        other => return Err(input_error(format!("unknown class '{other}'"))),
    };
    class.validate().map_err(|e| Failure::from(Error::from(e)))?;
    Ok(class)
}

impl Common {
    fn options(&self) -> Options {
        let route = match self.route {
            RouteArg::Generic => Route::Generic,
            RouteArg::ClosedForm => Route::ClosedForm,
        };
        Options { route, guard: self.guard }
    }

    fn interpretation(&self) -> Interpretation {
        if self.egf {
            Interpretation::Egf
        } else if self.lgf {
            Interpretation::Lgf
        } else {
            Interpretation::Ogf
        }
    }

    /// Derivation plus the recurrence of the chosen interpretation.
    fn derive(&self, class: &GfClass) -> Result<(Derivation, PRecurrence), Failure> {
        let d = derive(class, &self.options()).map_err(Error::from)?;
        let rec = self.interpretation().transform(&d.recurrence).map_err(Error::from)?;
        Ok((d, rec))
    }
}

fn cmd_derive(a: DeriveArgs) -> Result<u8, Failure> {
    let class = build_class(&a.class)?;
    let (d, rec) = a.common.derive(&class)?;
    let shortened = if a.shorten {
        let short = d.shortened(a.common.guard).map_err(Error::from)?;
        Some(a.common.interpretation().transform(&short).map_err(Error::from)?)
    } else {
        None
    };
    let mut out = BufWriter::new(io::stdout().lock());
    if a.json {
        let report = Report::new(&d, &rec, shortened.as_ref());
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        writeln!(out, "{text}")?;
        return Ok(0);
    }
    writeln!(out, "class: {}", d.class)?;
    if let Some(re) = &d.rerouted {
        writeln!(out, "rerouted: {re}")?;
    }
    match &d.ode {
        Some(ode) => writeln!(out, "ode (order {}): {ode}", ode.order())?,
        None => writeln!(out, "ode: none (lattice recurrence from term ratios)")?,
    }
    write_recurrence(&mut out, "recurrence", &rec)?;
    if let Some(s) = &shortened {
        write_recurrence(&mut out, "shortened", s)?;
    }
    Ok(0)
}

fn write_recurrence(out: &mut impl Write, label: &str, rec: &PRecurrence) -> io::Result<()> {
    writeln!(out, "{label} (span {}): {rec}", rec.span())?;
    let initial: Vec<String> = rec.initial.iter().map(format_rational).collect();
    writeln!(out, "{label} initial: {}", initial.join(", "))
}

/// `(index, value)` for indices `first..=n`, streaming from the recurrence.
fn stream(
    rec: &PRecurrence,
    first: usize,
    n: usize,
    mut emit: impl FnMut(usize, Rational) -> Result<(), Failure>,
) -> Result<(), Failure> {
    let (s, t) = (rec.stride as usize, rec.offset as usize);
    let mut lattice = lattice_terms(rec).map_err(Error::from)?;
    let mut next_on_lattice = t;
    for i in 0..=n {
        let value = if i == next_on_lattice {
            next_on_lattice += s;
            lattice.next().expect("lattice iterator is unbounded").map_err(Error::from)?
        } else {
            Rational::zero()
        };
        if i >= first {
            emit(i, value)?;
        }
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<u8, Failure> {
    let class = build_class(&a.class)?;
    let (_, rec) = a.common.derive(&class)?;
    let egf_strict = a.common.egf && !a.allow_rational;
    // an LGF's c_0 is 0 by construction and not part of the sequence
    let first = usize::from(a.common.lgf);
    let mut out = BufWriter::new(io::stdout().lock());
    let mut count = 0usize;
    if let Format::Json = a.format {
        write!(out, "[")?;
    }
    stream(&rec, first, a.n, |i, value| {
        if (egf_strict || matches!(a.format, Format::Bfile)) && !value.is_integer() {
            let why = if egf_strict { "EGF term" } else { "b-file term" };
            return Err(Failure(3, format!("{why} {i} is not an integer: {}", format_rational(&value))));
        }
        let text = format_rational(&value);
        match a.format {
            Format::Lines => writeln!(out, "{text}")?,
            Format::Csv if count == 0 => write!(out, "{text}")?,
            Format::Csv => write!(out, ",{text}")?,
            Format::Bfile => writeln!(out, "{i} {text}")?,
            Format::Json if count == 0 => write!(out, "\"{text}\"")?,
            Format::Json => write!(out, ",\"{text}\"")?,
        }
        count += 1;
        Ok(())
    })?;
    match a.format {
        Format::Csv => writeln!(out)?,
        Format::Json => writeln!(out, "]")?,
        _ => {}
    }
    out.flush()?;
    Ok(0)
}

fn cmd_check(a: CheckArgs) -> Result<u8, Failure> {
    let bfile = BFile::read(&a.bfile).map_err(Error::from)?;
    let class = build_class(&a.class)?;
    let (_, rec) = a.common.derive(&class)?;
    let entries: Vec<_> = bfile
        .entries()
        .iter()
        .filter(|(i, _)| *i >= a.offset)
        .take(a.limit.unwrap_or(usize::MAX))
        .cloned()
        .collect();
    let Some(&(last, _)) = entries.last() else {
        println!("OK 0 terms");
        return Ok(0);
    };
    let n = (last - a.offset) as usize;
    let mut terms = Vec::with_capacity(n + 1);
    stream(&rec, 0, n, |_, v| {
        terms.push(v);
        Ok(())
    })?;
    let selected = BFile::new(entries).map_err(Error::from)?;
    let verdict = compare(&selected, &terms, a.offset);
    println!("{verdict}");
    Ok(match verdict {
        Verdict::Match { .. } => 0,
        Verdict::Mismatch { .. } => 1,
    })
}

fn cmd_suite(a: SuiteArgs) -> Result<u8, Failure> {
    let options = Options { guard: a.guard, ..Options::default() };
    let summary = run_fixture_suite(a.terms, &options);
    let mut out = BufWriter::new(io::stdout().lock());
    for o in &summary.outcomes {
        match &o.result {
            Ok(()) => {
                let rec = o.recurrence.as_ref().expect("passing fixture has a recurrence");
                writeln!(out, "PASS {} span {} ({:.0?})", o.oeis_id, rec.span(), o.elapsed)?;
            }
            Err(e) => writeln!(out, "FAIL {}: {e}", o.oeis_id)?,
        }
    }
    writeln!(
        out,
        "{} passed, {} failed in {:.2?}",
        summary.passed(),
        summary.failed(),
        summary.elapsed
    )?;
    Ok(if summary.failed() == 0 { 0 } else { 1 })
}
