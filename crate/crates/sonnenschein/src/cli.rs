//! Command-line surface. Exit codes are a stable contract:
//! 0 success (and every column converged for `verify`), 1 verification
//! failed, 2 usage or domain error.

use std::fmt;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::exact::{bernoulli, bernoulli_sequence, ComplexRational, Rational};
use crate::karamata::KaramataParams;
use crate::matrix::{build_matrix, column_sums_via_series, is_contractive_at_zero, SummabilityMatrix};
use crate::output::{
    ColumnRecord, DocumentKind, Metadata, OutputDocument, Payload, TaggedValue,
};
use crate::series::TruncatedSeries;
use crate::sin2::{sec2_column_sums_interleaved, sin2_entry, sin2_series};
use crate::verify::verify_column_sums;

const DEFAULT_MATRIX_ROWS: usize = 32;
const DEFAULT_VERIFY_ROWS: usize = 2000;
const DEFAULT_COLS: usize = 64;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "sonnenschein",
    version,
    about = "Sonnenschein summability matrices: exact entries, column sums via 1/(1-f), verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the matrix whose row n holds the coefficients of f(z)^n.
    Matrix(MatrixArgs),
    /// Column sums, by closed form and/or as coefficients of 1/(1 - f(z)).
    Colsums(ColsumsArgs),
    /// Bernoulli numbers B_0..B_n (convention B_1 = -1/2).
    Bernoulli(BernoulliArgs),
    /// Compare column partial sums against the predicted column sums.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// f(z) = (alpha + (1-alpha-beta) z) / (1 - beta z)
    Karamata,
    /// h(z) = sin^2(pi z / 2), exact in powers of pi
    Sin2,
    /// f given by an inline rational coefficient list (--coeffs)
    Custom,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SumMethod {
    Closed,
    Series,
    #[default]
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BernoulliMethod {
    /// Explicit double sum over binomials.
    DoubleSum,
    /// Recurrence sum_{j<=m} C(m+1,j) B_j = 0.
    Recurrence,
    #[default]
    Both,
}

#[derive(Args, Debug)]
pub struct GeneratorArgs {
    /// Generating function family.
    #[arg(value_enum)]
    pub kind: Kind,

    /// Karamata parameter alpha, e.g. "1/2" or "1/4+1/4i".
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,

    /// Karamata parameter beta (beta = 1 is rejected).
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,

    /// Comma-separated rational coefficients of f for kind=custom, e.g. "0,1".
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    pub coeffs: Option<Vec<String>>,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub generator: GeneratorArgs,

    /// Number of rows to emit [default: 32].
    #[arg(long)]
    pub rows: Option<usize>,

    /// Number of columns (z-powers 0..cols-1) [default: 64].
    #[arg(long)]
    pub cols: Option<usize>,

    /// Use the closed-form entry formula instead of series powers
    /// (karamata and sin2 only).
    #[arg(long)]
    pub closed_form: bool,

    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,

    /// Emit decimal doubles instead of exact value strings.
    #[arg(long)]
    pub float: bool,
}

#[derive(Args, Debug)]
pub struct ColsumsArgs {
    #[command(flatten)]
    pub generator: GeneratorArgs,

    /// Number of columns [default: 64].
    #[arg(long)]
    pub cols: Option<usize>,

    #[arg(long, value_enum, default_value_t)]
    pub method: SumMethod,

    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,

    /// Emit decimal doubles instead of exact value strings.
    #[arg(long)]
    pub float: bool,
}

#[derive(Args, Debug)]
pub struct BernoulliArgs {
    /// Compute B_0..B_{n_max}.
    pub n_max: u32,

    #[arg(long, value_enum, default_value_t)]
    pub method: BernoulliMethod,

    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,

    /// Emit decimal doubles instead of exact value strings.
    #[arg(long)]
    pub float: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub generator: GeneratorArgs,

    /// Number of rows in the partial sums [default: 2000].
    #[arg(long)]
    pub rows: Option<usize>,

    /// Number of columns to verify [default: 64].
    #[arg(long)]
    pub cols: Option<usize>,

    /// Convergence tolerance on |partial sum - predicted|.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,

    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

/// A domain or usage failure; both map to exit code 2.
#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

impl CliError {
    fn new(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

#[derive(Debug)]
enum Generator {
    Karamata(KaramataParams),
    Sin2,
    Custom(Vec<Rational>),
}

impl Generator {
    fn name(&self) -> &'static str {
        match self {
            Generator::Karamata(_) => "karamata",
            Generator::Sin2 => "sin2",
            Generator::Custom(_) => "custom",
        }
    }

    fn describe(&self, meta: &mut Metadata) {
        match self {
            Generator::Karamata(p) => {
                meta.parameters
                    .insert("alpha".into(), p.alpha().to_string());
                meta.parameters.insert("beta".into(), p.beta().to_string());
            }
            Generator::Sin2 => {}
            Generator::Custom(coeffs) => {
                let list: Vec<String> = coeffs.iter().map(Rational::to_string).collect();
                meta.parameters.insert("coeffs".into(), list.join(","));
            }
        }
    }
}

fn resolve_generator(args: &GeneratorArgs) -> Result<Generator, CliError> {
    match args.kind {
        Kind::Karamata => {
            if args.coeffs.is_some() {
                return Err(CliError::new("--coeffs only applies to kind=custom"));
            }
            let alpha = parse_complex_opt(&args.alpha, "--alpha")?;
            let beta = parse_complex_opt(&args.beta, "--beta")?;
            Ok(Generator::Karamata(KaramataParams::new(alpha, beta)?))
        }
        Kind::Sin2 => {
            if args.alpha.is_some() || args.beta.is_some() || args.coeffs.is_some() {
                return Err(CliError::new(
                    "kind=sin2 takes no --alpha/--beta/--coeffs parameters",
                ));
            }
            Ok(Generator::Sin2)
        }
        Kind::Custom => {
            if args.alpha.is_some() || args.beta.is_some() {
                return Err(CliError::new("--alpha/--beta only apply to kind=karamata"));
            }
            let raw = args
                .coeffs
                .as_ref()
                .ok_or_else(|| CliError::new("kind=custom requires --coeffs"))?;
            let coeffs = raw
                .iter()
                .map(|s| s.parse::<Rational>())
                .collect::<Result<Vec<_>, _>>()?;
            if coeffs.is_empty() {
                return Err(CliError::new("--coeffs must list at least one coefficient"));
            }
            Ok(Generator::Custom(coeffs))
        }
    }
}

fn parse_complex_opt(
    value: &Option<String>,
    flag: &str,
) -> Result<ComplexRational, CliError> {
    let s = value
        .as_ref()
        .ok_or_else(|| CliError::new(format!("kind=karamata requires {flag}")))?;
    Ok(s.parse::<ComplexRational>()?)
}

fn custom_series(coeffs: &[Rational], order: usize) -> Result<TruncatedSeries<Rational>, Error> {
    TruncatedSeries::from_coeffs(coeffs.to_vec(), order)
}

fn require_positive(n: usize, what: &str) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::new(format!("{what} must be at least 1")));
    }
    Ok(())
}

fn tag_with<F: Coefficient>(
    float_mode: bool,
    exact: impl Fn(&F) -> TaggedValue,
) -> impl Fn(&F) -> TaggedValue {
    move |v| {
        if float_mode {
            TaggedValue::complex_float(v.to_complex_f64())
        } else {
            exact(v)
        }
    }
}

fn matrix_payload<F: Coefficient>(
    m: &SummabilityMatrix<F>,
    tag: impl Fn(&F) -> TaggedValue,
) -> Vec<Vec<TaggedValue>> {
    (0..m.rows())
        .map(|n| m.row(n).iter().map(&tag).collect())
        .collect()
}

struct CommandOutput {
    doc: OutputDocument,
    format: OutputFormat,
    exit_code: i32,
}

/// Parse-free entry point: execute a parsed command line, print the document
/// to stdout, and return the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Matrix(args) => cmd_matrix(args),
        Command::Colsums(args) => cmd_colsums(args),
        Command::Bernoulli(args) => cmd_bernoulli(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(out) => {
            match out.format {
                OutputFormat::Json => println!("{}", out.doc.to_json()),
                OutputFormat::Csv => print!("{}", out.doc.to_csv()),
            }
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_matrix(args: MatrixArgs) -> Result<CommandOutput, CliError> {
    let rows = args.rows.unwrap_or(DEFAULT_MATRIX_ROWS);
    let cols = args.cols.unwrap_or(DEFAULT_COLS);
    require_positive(rows, "--rows")?;
    require_positive(cols, "--cols")?;
    let generator = resolve_generator(&args.generator)?;

    let mut meta = Metadata::new(
        generator.name(),
        if args.float { "float" } else { "exact" },
    );
    generator.describe(&mut meta);
    meta.rows = Some(rows);
    meta.cols = Some(cols);

    let payload = match &generator {
        Generator::Karamata(p) => {
            let tag = tag_with(args.float, TaggedValue::complex_rational);
            if args.closed_form {
                (0..rows)
                    .map(|n| {
                        (0..cols)
                            .map(|k| tag(&p.entry(n as u64, k as u64)))
                            .collect()
                    })
                    .collect()
            } else {
                let m = build_matrix(&p.series(cols - 1), rows, "karamata");
                matrix_payload(&m, tag)
            }
        }
        Generator::Sin2 => {
            let tag = tag_with(args.float, TaggedValue::pi_graded);
            if args.closed_form {
                (0..rows)
                    .map(|n| {
                        (0..cols)
                            .map(|k| tag(&sin2_entry(n as u64, k as u64)))
                            .collect()
                    })
                    .collect()
            } else {
                let m = build_matrix(&sin2_series(cols - 1), rows, "sin2");
                matrix_payload(&m, tag)
            }
        }
        Generator::Custom(coeffs) => {
            if args.closed_form {
                return Err(CliError::new(
                    "--closed-form is only available for karamata and sin2",
                ));
            }
            let f = custom_series(coeffs, cols - 1)?;
            let m = build_matrix(&f, rows, "custom");
            matrix_payload(&m, tag_with(args.float, TaggedValue::rational))
        }
    };

    Ok(CommandOutput {
        doc: OutputDocument {
            kind: DocumentKind::Matrix,
            metadata: meta,
            payload: Payload::Matrix(payload),
        },
        format: args.format,
        exit_code: EXIT_SUCCESS,
    })
}

fn cmd_colsums(args: ColsumsArgs) -> Result<CommandOutput, CliError> {
    let cols = args.cols.unwrap_or(DEFAULT_COLS);
    require_positive(cols, "--cols")?;
    let generator = resolve_generator(&args.generator)?;
    let want_closed = matches!(args.method, SumMethod::Closed | SumMethod::Both);
    let want_series = matches!(args.method, SumMethod::Series | SumMethod::Both);

    let mut meta = Metadata::new(
        generator.name(),
        if args.float { "float" } else { "exact" },
    );
    generator.describe(&mut meta);
    meta.cols = Some(cols);

    let (closed, series, equal) = match &generator {
        Generator::Karamata(p) => {
            let tag = tag_with(args.float, TaggedValue::complex_rational);
            meta.regime = Some(regime_name(p.alpha().modulus_less_than_one()));
            let closed = want_closed.then(|| p.column_sums(cols)).transpose()?;
            let series = want_series
                .then(|| column_sums_via_series(&p.series(cols - 1)))
                .transpose()?;
            let equal = equality_flags(&closed, &series);
            (
                closed.map(|v| v.iter().map(&tag).collect()),
                series.map(|v| v.iter().map(&tag).collect()),
                equal,
            )
        }
        Generator::Sin2 => {
            let tag = tag_with(args.float, TaggedValue::pi_graded);
            meta.regime = Some("analytic".into()); // h(0) = 0
            let closed = want_closed.then(|| sec2_column_sums_interleaved(cols));
            let series = want_series
                .then(|| column_sums_via_series(&sin2_series(cols - 1)))
                .transpose()?;
            let equal = equality_flags(&closed, &series);
            (
                closed.map(|v| v.iter().map(&tag).collect()),
                series.map(|v| v.iter().map(&tag).collect()),
                equal,
            )
        }
        Generator::Custom(coeffs) => {
            if want_closed {
                return Err(CliError::new(
                    "method=closed is only available for karamata and sin2; use --method series",
                ));
            }
            let tag = tag_with(args.float, TaggedValue::rational);
            let f = custom_series(coeffs, cols - 1)?;
            meta.regime = Some(regime_name(is_contractive_at_zero(&f)));
            let series = column_sums_via_series(&f)?;
            (None, Some(series.iter().map(&tag).collect()), None)
        }
    };

    Ok(CommandOutput {
        doc: OutputDocument {
            kind: DocumentKind::ColumnSums,
            metadata: meta,
            payload: Payload::ColumnSums {
                closed,
                series,
                equal,
            },
        },
        format: args.format,
        exit_code: EXIT_SUCCESS,
    })
}

fn regime_name(analytic: bool) -> String {
    if analytic { "analytic" } else { "formal" }.into()
}

fn equality_flags<F: PartialEq>(a: &Option<Vec<F>>, b: &Option<Vec<F>>) -> Option<Vec<bool>> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| x == y).collect()),
        _ => None,
    }
}

fn cmd_bernoulli(args: BernoulliArgs) -> Result<CommandOutput, CliError> {
    let n = args.n_max;
    let tag = tag_with(args.float, TaggedValue::rational);

    let double_sum =
        || -> Vec<Rational> { (0..=n).map(bernoulli).collect() };
    let (values, recurrence, agreement) = match args.method {
        BernoulliMethod::DoubleSum => (double_sum(), None, None),
        BernoulliMethod::Recurrence => (bernoulli_sequence(n), None, None),
        BernoulliMethod::Both => {
            let d = double_sum();
            let r = bernoulli_sequence(n);
            let agree = d.iter().zip(&r).map(|(a, b)| a == b).collect();
            (d, Some(r), Some(agree))
        }
    };

    let mut meta = Metadata::new(
        "bernoulli",
        if args.float { "float" } else { "exact" },
    );
    meta.parameters.insert("n_max".into(), n.to_string());
    meta.parameters.insert(
        "method".into(),
        format!("{:?}", args.method).to_lowercase(),
    );

    Ok(CommandOutput {
        doc: OutputDocument {
            kind: DocumentKind::Bernoulli,
            metadata: meta,
            payload: Payload::Bernoulli {
                values: values.iter().map(&tag).collect(),
                recurrence: recurrence.map(|r| r.iter().map(&tag).collect()),
                agreement,
            },
        },
        format: args.format,
        exit_code: EXIT_SUCCESS,
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<CommandOutput, CliError> {
    let rows = args.rows.unwrap_or(DEFAULT_VERIFY_ROWS);
    let cols = args.cols.unwrap_or(DEFAULT_COLS);
    require_positive(rows, "--rows")?;
    require_positive(cols, "--cols")?;
    if !(args.tol > 0.0) {
        return Err(CliError::new("--tol must be positive"));
    }
    let generator = resolve_generator(&args.generator)?;

    let mut meta = Metadata::new(generator.name(), "float");
    generator.describe(&mut meta);
    meta.rows = Some(rows);
    meta.cols = Some(cols);
    meta.tolerance = Some(args.tol);

    // Predicted column sums stay exact for the report; the matrix partial
    // sums are double precision throughout.
    let (predicted_tagged, predicted_numeric, matrix): (
        Vec<TaggedValue>,
        Vec<Complex64>,
        SummabilityMatrix<Complex64>,
    ) = match &generator {
        Generator::Karamata(p) => {
            meta.regime = Some(regime_name(p.alpha().modulus_less_than_one()));
            let predicted = p.column_sums(cols)?;
            let numeric = predicted.iter().map(|v| v.to_complex_f64()).collect();
            let tagged = predicted.iter().map(TaggedValue::complex_rational).collect();
            let m = build_matrix(&p.series(cols - 1).to_numeric(), rows, "karamata");
            (tagged, numeric, m)
        }
        Generator::Sin2 => {
            meta.regime = Some("analytic".into());
            let predicted = sec2_column_sums_interleaved(cols);
            let numeric = predicted.iter().map(|v| v.to_complex_f64()).collect();
            let tagged = predicted.iter().map(TaggedValue::pi_graded).collect();
            let m = build_matrix(&sin2_series(cols - 1).to_numeric(), rows, "sin2");
            (tagged, numeric, m)
        }
        Generator::Custom(coeffs) => {
            let f = custom_series(coeffs, cols - 1)?;
            meta.regime = Some(regime_name(is_contractive_at_zero(&f)));
            let predicted = column_sums_via_series(&f)?;
            let numeric = predicted.iter().map(|v| v.to_complex_f64()).collect();
            let tagged = predicted.iter().map(TaggedValue::rational).collect();
            let m = build_matrix(&f.to_numeric(), rows, "custom");
            (tagged, numeric, m)
        }
    };

    let report = verify_column_sums(&matrix, &predicted_numeric, args.tol);
    let all_converged = report.all_converged();
    let columns = report
        .columns
        .iter()
        .map(|c| ColumnRecord {
            column: c.column,
            predicted: predicted_tagged[c.column].clone(),
            partial_sum: TaggedValue::complex_float(c.partial_sum),
            deviation: TaggedValue::float(c.deviation),
            converged: c.converged,
        })
        .collect();

    Ok(CommandOutput {
        doc: OutputDocument {
            kind: DocumentKind::Verification,
            metadata: meta,
            payload: Payload::Verification {
                columns,
                all_converged,
            },
        },
        format: args.format,
        exit_code: if all_converged {
            EXIT_SUCCESS
        } else {
            EXIT_VERIFICATION_FAILED
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen_args(kind: Kind, alpha: Option<&str>, beta: Option<&str>) -> GeneratorArgs {
        GeneratorArgs {
            kind,
            alpha: alpha.map(str::to_owned),
            beta: beta.map(str::to_owned),
            coeffs: None,
        }
    }

    #[test]
    fn karamata_requires_both_parameters() {
        let err = resolve_generator(&gen_args(Kind::Karamata, Some("1/2"), None)).unwrap_err();
        assert!(err.to_string().contains("--beta"));
    }

    #[test]
    fn beta_one_is_a_domain_error() {
        let err =
            resolve_generator(&gen_args(Kind::Karamata, Some("1/2"), Some("1"))).unwrap_err();
        assert!(err.to_string().contains("beta = 1"));
    }

    #[test]
    fn unparseable_alpha_is_rejected() {
        let err =
            resolve_generator(&gen_args(Kind::Karamata, Some("nope"), Some("0"))).unwrap_err();
        assert!(err.to_string().contains("cannot parse"));
    }

    #[test]
    fn custom_requires_coeffs() {
        let err = resolve_generator(&gen_args(Kind::Custom, None, None)).unwrap_err();
        assert!(err.to_string().contains("--coeffs"));
    }

    #[test]
    fn matrix_closed_form_rejected_for_custom() {
        let args = MatrixArgs {
            generator: GeneratorArgs {
                kind: Kind::Custom,
                alpha: None,
                beta: None,
                coeffs: Some(vec!["0".into(), "1".into()]),
            },
            rows: Some(4),
            cols: Some(4),
            closed_form: true,
            format: OutputFormat::Json,
            float: false,
        };
        assert!(cmd_matrix(args).is_err());
    }

    #[test]
    fn verify_custom_shift_is_exact() {
        let args = VerifyArgs {
            generator: GeneratorArgs {
                kind: Kind::Custom,
                alpha: None,
                beta: None,
                coeffs: Some(vec!["0".into(), "1".into()]),
            },
            rows: Some(10),
            cols: Some(5),
            tol: 1e-9,
            format: OutputFormat::Json,
        };
        let out = cmd_verify(args).unwrap();
        assert_eq!(out.exit_code, EXIT_SUCCESS);
        match out.doc.payload {
            Payload::Verification {
                columns,
                all_converged,
            } => {
                assert!(all_converged);
                for c in columns {
                    assert_eq!(c.deviation.text(), "0");
                }
            }
            _ => panic!("expected a verification payload"),
        }
    }

    #[test]
    fn verify_divergent_alpha_exits_one() {
        let args = VerifyArgs {
            generator: gen_args(Kind::Karamata, Some("3/2"), Some("0")),
            rows: Some(100),
            cols: Some(5),
            tol: 1e-9,
            format: OutputFormat::Json,
        };
        let out = cmd_verify(args).unwrap();
        assert_eq!(out.exit_code, EXIT_VERIFICATION_FAILED);
    }

    #[test]
    fn colsums_method_both_agrees() {
        let args = ColsumsArgs {
            generator: gen_args(Kind::Karamata, Some("1/2"), Some("1/3")),
            cols: Some(4),
            method: SumMethod::Both,
            format: OutputFormat::Json,
            float: false,
        };
        let out = cmd_colsums(args).unwrap();
        match out.doc.payload {
            Payload::ColumnSums {
                closed,
                series,
                equal,
            } => {
                let closed = closed.unwrap();
                assert_eq!(closed[0].text(), "2+0i");
                assert_eq!(closed[1].text(), "4/3+0i");
                assert_eq!(closed, series.unwrap());
                assert_eq!(equal.unwrap(), vec![true; 4]);
            }
            _ => panic!("expected a column-sums payload"),
        }
    }

    #[test]
    fn bernoulli_both_methods_agree() {
        let args = BernoulliArgs {
            n_max: 12,
            method: BernoulliMethod::Both,
            format: OutputFormat::Json,
            float: false,
        };
        let out = cmd_bernoulli(args).unwrap();
        match out.doc.payload {
            Payload::Bernoulli {
                values, agreement, ..
            } => {
                assert_eq!(values[0].text(), "1");
                assert_eq!(values[1].text(), "-1/2");
                assert_eq!(values[2].text(), "1/6");
                assert_eq!(agreement.unwrap(), vec![true; 13]);
            }
            _ => panic!("expected a bernoulli payload"),
        }
    }
}
