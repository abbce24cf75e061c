//! Command-line interface to the linguistic approximation engine.
//!
//! Exit codes: 0 success, 2 file/parse errors, 3 validation errors,
//! 4 empty fuzzy set, 5 unparsable label or unknown quantifier.

mod problem;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lingapprox::{
    approximate, evaluate, fe_count, fg_count, fl_count, parse, quantify_fuzzy, quantify_sigma,
    render, truth_of, Error, FuzzyCardinality, FuzzySet, MeasureKind, SearchConfig, Vocabulary,
};
use problem::{load_problem, Problem};
use report::{approximation_report, proposition_report, ConfigEcho, InputEcho, Report};

pub const EXIT_FILE: u8 = 2;
pub const EXIT_VALIDATION: u8 = 3;
pub const EXIT_EMPTY_SET: u8 = 4;
pub const EXIT_LABEL: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: String) -> Self {
        CliError { code, message }
    }
}

/// Engine errors keep their exit-code meaning wherever they surface.
fn engine_error(e: Error) -> CliError {
    let code = match e {
        Error::EmptyFuzzySet | Error::EmptyReference => EXIT_EMPTY_SET,
        Error::UnknownToken(_)
        | Error::UnexpectedToken(_)
        | Error::EmptyExpression
        | Error::DanglingModifier(_)
        | Error::UnbalancedParens
        | Error::DepthExceeded(_)
        | Error::UnknownName(_)
        | Error::UnknownModifier(_) => EXIT_LABEL,
        _ => EXIT_VALIDATION,
    };
    CliError::new(code, e.to_string())
}

#[derive(Parser)]
#[command(
    name = "lingapprox",
    about = "Linguistic approximation of discrete fuzzy sets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the best-fitting linguistic labels for a fuzzy set.
    Approximate {
        /// Problem file (JSON, or two-column CSV).
        file: PathBuf,
        /// Name of the fuzzy set inside the problem file.
        set: String,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Attach linguistic quantifiers to a label's clauses.
    Quantify {
        file: PathBuf,
        set: String,
        /// Label to quantify; omit it and pass --auto to use the top
        /// approximation instead.
        label: Option<String>,
        /// Run approximation first and quantify the winning label.
        #[arg(long, conflicts_with = "label")]
        auto: bool,
        /// Cardinality method.
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Eliminate quantifiers whose compatibility falls below this.
        #[arg(long, default_value_t = 0.0)]
        threshold: f64,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a label into its membership vector.
    Eval {
        label: String,
        file: PathBuf,
        /// Write (x, mu) rows as whitespace-separated plot data to a file.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Also print the FGCount / FLCount / FECount of the evaluated set.
        #[arg(long)]
        cardinality: bool,
    },
    /// Degree to which "QUANTIFIER X is LABEL" holds for a fuzzy set.
    Truth {
        /// Quantifier name ("usually" is an alias of "most").
        quantifier: String,
        label: String,
        file: PathBuf,
        set: String,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Quality measure used for scoring.
    #[arg(long, value_enum, default_value_t = MeasureArg::Hamming)]
    measure: MeasureArg,
    /// Maximum clauses joined at the top level.
    #[arg(long, default_value_t = 2)]
    max_clauses: usize,
    /// Maximum stacked modifiers per term.
    #[arg(long, default_value_t = 1)]
    max_modifiers: usize,
    /// How many ranked results to report.
    #[arg(long, default_value_t = 5)]
    top_k: usize,
    /// Score penalty per AST node.
    #[arg(long, default_value_t = 0.0)]
    complexity_penalty: f64,
}

impl SearchArgs {
    fn to_config(&self) -> SearchConfig {
        SearchConfig {
            measure: self.measure.kind(),
            max_clauses: self.max_clauses,
            max_modifiers_per_term: self.max_modifiers,
            top_k: self.top_k,
            complexity_penalty: self.complexity_penalty,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Stamp the report with the generation time (off by default so that
    /// identical inputs give byte-identical reports).
    #[arg(long)]
    timestamps: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Height,
    Hamming,
    Similarity,
    Relcount,
}

impl MeasureArg {
    fn kind(self) -> MeasureKind {
        match self {
            MeasureArg::Height => MeasureKind::Height,
            MeasureArg::Hamming => MeasureKind::HammingComplement,
            MeasureArg::Similarity => MeasureKind::Similarity,
            MeasureArg::Relcount => MeasureKind::RelativeCount,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Sigma,
    Fuzzy,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Approximate {
            file,
            set,
            search,
            output,
        } => cmd_approximate(&file, &set, &search, &output),
        Command::Quantify {
            file,
            set,
            label,
            auto,
            method,
            threshold,
            search,
            output,
        } => cmd_quantify(
            &file,
            &set,
            label.as_deref(),
            auto,
            method,
            threshold,
            &search,
            &output,
        ),
        Command::Eval {
            label,
            file,
            plot,
            cardinality,
        } => cmd_eval(&label, &file, plot.as_deref(), cardinality),
        Command::Truth {
            quantifier,
            label,
            file,
            set,
        } => cmd_truth(&quantifier, &label, &file, &set),
    }
}

fn lookup_set<'a>(problem: &'a Problem, name: &str) -> Result<&'a FuzzySet, CliError> {
    problem.sets.get(name).ok_or_else(|| {
        let known: Vec<&str> = problem.sets.keys().map(|k| k.as_str()).collect();
        CliError::new(
            EXIT_VALIDATION,
            format!("no set named '{name}' (known: {})", known.join(", ")),
        )
    })
}

fn input_echo(problem: &Problem, path: &std::path::Path, set: &str, timestamps: bool) -> InputEcho {
    InputEcho {
        path: path.display().to_string(),
        digest: problem.digest.clone(),
        set: set.to_string(),
        universe: problem.universe.name().to_string(),
        points: problem.universe.len(),
        timestamp: timestamps.then(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        }),
    }
}

fn emit(report: &Report, output: &OutputArgs) {
    let text = match output.format {
        FormatArg::Text => report.render_text(),
        FormatArg::Json => report.render_json(),
    };
    print!("{text}");
}

fn cmd_approximate(
    path: &std::path::Path,
    set_name: &str,
    search: &SearchArgs,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let problem = load_problem(path)?;
    let target = lookup_set(&problem, set_name)?;
    let config = search.to_config();
    let results = approximate(target, &problem.vocabulary, &config).map_err(engine_error)?;

    let report = Report {
        command: "approximate".to_string(),
        input: input_echo(&problem, path, set_name, output.timestamps),
        config: ConfigEcho {
            measure: Some(config.measure.name().to_string()),
            max_clauses: Some(config.max_clauses),
            max_modifiers: Some(config.max_modifiers_per_term),
            top_k: Some(config.top_k),
            method: None,
            threshold: None,
            label: None,
        },
        approximations: results.iter().map(approximation_report).collect(),
        propositions: Vec::new(),
    };
    emit(&report, output);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_quantify(
    path: &std::path::Path,
    set_name: &str,
    label: Option<&str>,
    auto: bool,
    method: MethodArg,
    threshold: f64,
    search: &SearchArgs,
    output: &OutputArgs,
) -> Result<(), CliError> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(CliError::new(
            EXIT_VALIDATION,
            format!("threshold {threshold} outside [0, 1]"),
        ));
    }
    let problem = load_problem(path)?;
    let target = lookup_set(&problem, set_name)?;
    let vocab = &problem.vocabulary;

    let expr = match (label, auto) {
        (Some(text), _) => parse(text, vocab).map_err(engine_error)?,
        (None, true) => {
            let results = approximate(target, vocab, &search.to_config()).map_err(engine_error)?;
            results
                .into_iter()
                .next()
                .map(|a| a.expr)
                .ok_or_else(|| CliError::new(EXIT_EMPTY_SET, "no approximation found".into()))?
        }
        (None, false) => {
            return Err(CliError::new(
                EXIT_LABEL,
                "pass a label or --auto".to_string(),
            ))
        }
    };

    let mut propositions = Vec::new();
    if method != MethodArg::Fuzzy {
        for p in quantify_sigma(target, &expr, vocab, set_name, threshold).map_err(engine_error)? {
            propositions.push(proposition_report(&p, None));
        }
    }
    if method != MethodArg::Sigma {
        for p in quantify_fuzzy(target, &expr, vocab, set_name, threshold).map_err(engine_error)? {
            let meaning = evaluate(&p.clause, vocab).map_err(engine_error)?;
            let fe = fe_count(&meaning, Some(target)).map_err(engine_error)?;
            propositions.push(proposition_report(&p, Some(fe.support().to_vec())));
        }
    }

    let report = Report {
        command: "quantify".to_string(),
        input: input_echo(&problem, path, set_name, output.timestamps),
        config: ConfigEcho {
            measure: auto.then(|| search.measure.kind().name().to_string()),
            max_clauses: auto.then_some(search.max_clauses),
            max_modifiers: auto.then_some(search.max_modifiers),
            top_k: None,
            method: Some(
                match method {
                    MethodArg::Sigma => "sigma",
                    MethodArg::Fuzzy => "fuzzy",
                    MethodArg::Both => "both",
                }
                .to_string(),
            ),
            threshold: Some(threshold),
            label: Some(render(&expr)),
        },
        approximations: Vec::new(),
        propositions,
    };
    emit(&report, output);
    Ok(())
}

fn print_cardinality(name: &str, card: &FuzzyCardinality, out: &mut impl Write) {
    let _ = writeln!(out, "# {name}");
    for &(value, membership) in card.support() {
        let _ = writeln!(out, "{value} {membership}");
    }
}

fn cmd_eval(
    label: &str,
    path: &std::path::Path,
    plot: Option<&std::path::Path>,
    cardinality: bool,
) -> Result<(), CliError> {
    let problem = load_problem(path)?;
    let vocab = &problem.vocabulary;
    let expr = parse(label, vocab).map_err(engine_error)?;
    let meaning = evaluate(&expr, vocab).map_err(engine_error)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (x, mu) in problem.universe.points().iter().zip(meaning.memberships()) {
        let _ = writeln!(out, "{x},{mu}");
    }

    if let Some(plot_path) = plot {
        let mut rows = String::new();
        for (x, mu) in problem.universe.points().iter().zip(meaning.memberships()) {
            rows.push_str(&format!("{x} {mu}\n"));
        }
        std::fs::write(plot_path, rows).map_err(|e| {
            CliError::new(
                EXIT_FILE,
                format!("cannot write {}: {e}", plot_path.display()),
            )
        })?;
    }

    if cardinality {
        let fg = fg_count(&meaning, None).map_err(engine_error)?;
        let fl = fl_count(&meaning, None).map_err(engine_error)?;
        let fe = fe_count(&meaning, None).map_err(engine_error)?;
        print_cardinality("FGCount (at least)", &fg, &mut out);
        print_cardinality("FLCount (at most)", &fl, &mut out);
        print_cardinality("FECount (exactly)", &fe, &mut out);
    }
    Ok(())
}

fn cmd_truth(
    quantifier: &str,
    label: &str,
    path: &std::path::Path,
    set_name: &str,
) -> Result<(), CliError> {
    let problem = load_problem(path)?;
    let target = lookup_set(&problem, set_name)?;
    let vocab = &problem.vocabulary;
    let expr = parse(label, vocab).map_err(engine_error)?;
    let name = resolve_quantifier_alias(quantifier, vocab);
    let degree = truth_of(&name, &expr, target, vocab).map_err(engine_error)?;
    println!("{degree:.4}");
    Ok(())
}

/// "usually" reads as "most" when the vocabulary has no quantifier of its own
/// under that name.
fn resolve_quantifier_alias(name: &str, vocab: &Vocabulary) -> String {
    if name == "usually" && vocab.quantifier("usually").is_none() {
        "most".to_string()
    } else {
        name.to_string()
    }
}
