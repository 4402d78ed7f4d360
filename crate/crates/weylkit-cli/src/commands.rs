//! Argument definitions and execution for every subcommand.
//!
//! Parsing is strict: mutually exclusive flags are rejected by the argument
//! parser itself, option values are validated before any computation starts,
//! and options that only apply to one family are refused elsewhere.  All
//! results go to standard output; diagnostics go to standard error.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;

use weylkit_core::{Coefficient, NormalForm, Parameters};
use weylkit_diagrams::{enumerate_diagrams, EnumerationLimits};
use weylkit_formulas::{
    bell, duchon, ehrenfest_prob, gen_bell_22, gen_stirling_rs, lah_gamma, q_factorial, scherk_c,
    stirling1, stirling2, touchard_riordan,
};
use weylkit_paths::{jfraction_expand, JFractionSpec};
use weylkit_series::{closed_gf, GfFamily, PolynomialSpec, TruncatedSeries};

use crate::error::CliError;
use crate::eval::{build_operator, Deformation};
use crate::oracle::{first_disagreement, run_oracle, single_mode_gates, OracleKind, OracleReport};
use crate::parse::parse_expression;
use crate::render;

/// Exact normal ordering, generating functions, and cross-checked
/// combinatorics for raise/lower operator algebra.
#[derive(Parser, Debug)]
#[command(name = "weylkit", version, about, max_term_width = 100)]
pub struct Cli {
    /// The subcommand to run.
    #[command(subcommand)]
    pub command: Command,
}

/// All available subcommands.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normally order an operator expression raised to a power.
    NormalOrder(NormalOrderArgs),
    /// Print the constant term of an expression raised to a power.
    Ct(CtArgs),
    /// Expand the exponential of an expression in normally ordered powers.
    ExpNormal(ExpNormalArgs),
    /// Expand a named generating function as a truncated series.
    Series(SeriesArgs),
    /// Expand a continued fraction as a truncated series.
    Cf(CfArgs),
    /// Print one value from a named number family.
    Numbers(NumbersArgs),
    /// Recompute coefficients by independent routes and compare them.
    OracleCompare(OracleCompareArgs),
    /// List the labelled diagrams of an expression at a given size.
    DumpDiagrams(DumpDiagramsArgs),
}

/// Output formats shared by the printing subcommands.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    /// Human-readable lines.
    Table,
    /// A single JSON document that round-trips byte-identically.
    Json,
    /// Comma-separated rows with a mandatory header.
    Csv,
}

/// The `--format` flag.
#[derive(Args, Debug)]
pub struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

/// The commutation-weight flags; at most one may be given.
#[derive(Args, Debug)]
#[group(multiple = false)]
pub struct QMode {
    /// Deform the commutation rule with this rational weight.
    #[arg(long, value_name = "VALUE")]
    pub q: Option<String>,
    /// Deform the commutation rule with the symbolic weight `q`.
    #[arg(long)]
    pub q_symbolic: bool,
}

impl QMode {
    /// Translate the flags into a deformation choice.
    ///
    /// # Errors
    ///
    /// [`CliError::Usage`] when the `--q` value is not a rational number.
    pub fn deformation(&self) -> Result<Deformation, CliError> {
        if self.q_symbolic {
            return Ok(Deformation::Symbolic);
        }
        match &self.q {
            None => Ok(Deformation::Off),
            Some(text) => {
                let value = BigRational::from_str(text).map_err(|_| {
                    CliError::Usage(format!(
                        "invalid --q value '{text}': expected an integer or a rational like 2/3"
                    ))
                })?;
                Ok(Deformation::Numeric(value))
            }
        }
    }
}

/// Guard against accidentally huge word expansions.
#[derive(Args, Debug)]
pub struct WordBudget {
    /// Refuse products whose expanded words exceed this many letters.
    #[arg(long, default_value_t = 64, value_name = "LEN")]
    pub max_word_len: usize,
}

/// Guard against accidentally huge diagram enumerations.
#[derive(Args, Debug)]
pub struct SizeBound {
    /// Refuse enumerations beyond this many gates or basis shapes.
    #[arg(long, default_value_t = 6, value_name = "N")]
    pub max_size: usize,
}

impl SizeBound {
    fn limits(&self) -> EnumerationLimits {
        EnumerationLimits { max_gates: self.max_size, max_basis: self.max_size }
    }
}

/// Arguments of `normal-order`.
#[derive(Args, Debug)]
pub struct NormalOrderArgs {
    /// Operator expression, e.g. "X^2*D" or "(X+D)^2".
    pub expr: String,
    /// Raise the expression to this power before ordering.
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    #[command(flatten)]
    pub q: QMode,
    #[command(flatten)]
    pub budget: WordBudget,
    #[command(flatten)]
    pub format: FormatArg,
}

/// Arguments of `ct`.
#[derive(Args, Debug)]
pub struct CtArgs {
    /// Operator expression whose power's constant term is wanted.
    pub expr: String,
    /// Raise the expression to this power.
    #[arg(long)]
    pub power: u32,
    #[command(flatten)]
    pub q: QMode,
    #[command(flatten)]
    pub budget: WordBudget,
    #[command(flatten)]
    pub format: FormatArg,
}

/// Arguments of `exp-normal`.
#[derive(Args, Debug)]
pub struct ExpNormalArgs {
    /// Operator expression to exponentiate.
    pub expr: String,
    /// Highest power of the expansion variable to keep.
    #[arg(long)]
    pub order: u32,
    #[command(flatten)]
    pub q: QMode,
    #[command(flatten)]
    pub budget: WordBudget,
    #[command(flatten)]
    pub format: FormatArg,
}

/// The named generating-function families of `series`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum SeriesFamily {
    /// Set partitions, blocks marked by `u`.
    Bell,
    /// Two-colored involutions with weights `alpha`, `beta` and markers
    /// `u`, `v`.
    Involution,
    /// Exponential of D^2 + X with markers `u`, `v`.
    D2PlusX,
    /// Exponential of X^2 + D with markers `u`, `v`.
    X2PlusD,
    /// Exponential of X^2 + D^2 with markers `u`, `v`.
    Zigzag,
    /// Exponential of X^r D; requires `--gate-power`.
    RaisePower,
    /// Permutations by ascents, marked by `u`.
    Eulerian,
    /// Increasing trees; requires `--expansion`, optionally `--node-weight`.
    IncreasingTree,
}

/// Arguments of `series`.
#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Which generating function to expand.
    #[arg(value_enum)]
    pub family: SeriesFamily,
    /// Highest power to keep.
    #[arg(long)]
    pub order: usize,
    /// Raise exponent of the single gate (raise-power only, at least 2).
    #[arg(long, value_name = "R")]
    pub gate_power: Option<u32>,
    /// Node expansion polynomial as integer coefficients, constant first
    /// (increasing-tree only).
    #[arg(long, value_delimiter = ',', value_name = "C0,C1,..", num_args = 1..)]
    pub expansion: Option<Vec<i64>>,
    /// Node weight polynomial as integer coefficients, constant first
    /// (increasing-tree only; defaults to zero).
    #[arg(long, value_delimiter = ',', value_name = "C0,C1,..", num_args = 1..)]
    pub node_weight: Option<Vec<i64>>,
    /// Substitute a rational value for a marker, e.g. `--set u=1`.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    pub set: Vec<String>,
    #[command(flatten)]
    pub format: FormatArg,
}

/// The continued-fraction families of `cf`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum CfFamily {
    /// Perfect matchings: all odd factorials.
    Matchings,
    /// Sums of fixed powers of the first parts; requires `--exponent`.
    SumPowers,
    /// Permutations weighted by inversions, over the parameter `q`.
    QInversion,
    /// Paired inversion weights, over the parameter `q`.
    QInversionPaired,
}

/// Arguments of `cf`.
#[derive(Args, Debug)]
pub struct CfArgs {
    /// Which continued fraction to expand.
    #[arg(value_enum)]
    pub family: CfFamily,
    /// Highest power to keep.
    #[arg(long)]
    pub order: usize,
    /// Power summed along the first parts (sum-powers only, at least 1).
    #[arg(long, value_name = "R")]
    pub exponent: Option<u32>,
    #[command(flatten)]
    pub format: FormatArg,
}

/// Arguments of `numbers`.
#[derive(Args, Debug)]
pub struct NumbersArgs {
    /// Family name: stirling2, stirling1, bell, gen-stirling, gen-bell-22,
    /// lah-gamma, scherk, duchon, touchard-riordan, q-factorial, or
    /// ehrenfest-prob.
    pub family: String,
    /// Family arguments, all nonnegative integers.
    #[arg(value_name = "ARGS", num_args = 0..)]
    pub args: Vec<String>,
    #[command(flatten)]
    pub format: FormatArg,
}

/// Arguments of `oracle-compare`.
#[derive(Args, Debug)]
pub struct OracleCompareArgs {
    /// Operator expression whose power is recomputed by every route.
    pub expr: String,
    /// Raise the expression to this power.
    #[arg(long)]
    pub power: u32,
    /// Comma-separated routes to run, e.g. `rewrite,transfer,paths`.
    #[arg(long, value_enum, value_delimiter = ',', required = true, value_name = "LIST")]
    pub oracles: Vec<OracleKind>,
    #[command(flatten)]
    pub budget: WordBudget,
    #[command(flatten)]
    pub size: SizeBound,
}

/// Arguments of `dump-diagrams`.
#[derive(Args, Debug)]
pub struct DumpDiagramsArgs {
    /// Operator expression whose normal form supplies the gate shapes.
    pub expr: String,
    /// Number of gates in every listed diagram.
    #[arg(long)]
    pub size: usize,
    #[command(flatten)]
    pub budget: WordBudget,
    #[command(flatten)]
    pub bound: SizeBound,
    #[command(flatten)]
    pub format: FormatArg,
}

/// Execute a parsed command line and return the standard-output payload.
///
/// # Errors
///
/// [`CliError::Usage`] for invalid values, [`CliError::Refused`] when a
/// computation exceeds its bounds, and [`CliError::Disagreement`] when
/// `oracle-compare` finds differing coefficients.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::NormalOrder(args) => normal_order(args),
        Command::Ct(args) => constant_term(args),
        Command::ExpNormal(args) => exp_normal(args),
        Command::Series(args) => series(args),
        Command::Cf(args) => continued_fraction(args),
        Command::Numbers(args) => numbers(args),
        Command::OracleCompare(args) => oracle_compare(args),
        Command::DumpDiagrams(args) => dump_diagrams(args),
    }
}

/// Parse, build, and normally order `expr^power` under a deformation choice.
fn ordered_power(
    expr: &str,
    power: u32,
    q: &QMode,
    budget: &WordBudget,
) -> Result<(NormalForm, String), CliError> {
    let expression = parse_expression(expr)?;
    let deformation = q.deformation()?;
    let op = build_operator(&expression, &deformation, budget.max_word_len)?;
    let form = op
        .normal_order()
        .power(power)
        .map_err(|error| CliError::Refused(error.to_string()))?;
    Ok((form, deformation.label()))
}

fn normal_order(args: NormalOrderArgs) -> Result<String, CliError> {
    let (form, label) = ordered_power(&args.expr, args.power, &args.q, &args.budget)?;
    Ok(match args.format.format {
        Format::Table => render::normal_form_table(&form),
        Format::Json => to_json_line(&render::normal_form_doc(&form, &label)),
        Format::Csv => render::normal_form_csv(&form),
    })
}

fn constant_term(args: CtArgs) -> Result<String, CliError> {
    let (form, _) = ordered_power(&args.expr, args.power, &args.q, &args.budget)?;
    let value = form.constant_term().to_string();
    Ok(match args.format.format {
        Format::Table => render::value_table(&value),
        Format::Json => to_json_line(&render::ValueDoc { value }),
        Format::Csv => render::value_csv(&value),
    })
}

fn exp_normal(args: ExpNormalArgs) -> Result<String, CliError> {
    let expression = parse_expression(&args.expr)?;
    let deformation = args.q.deformation()?;
    let op = build_operator(&expression, &deformation, args.budget.max_word_len)?;
    let form = op.normal_order();
    let powers = form
        .powers(args.order)
        .map_err(|error| CliError::Refused(error.to_string()))?;
    // Fold the 1/n! of the exponential series into each power.
    let mut factorial = BigRational::one();
    let scaled: Vec<NormalForm> = powers
        .iter()
        .enumerate()
        .map(|(n, power)| {
            if n > 0 {
                factorial *= BigRational::from_integer(n.into());
            }
            scale_form(power, &factorial.recip())
        })
        .collect();
    let label = deformation.label();
    Ok(match args.format.format {
        Format::Table => render::exp_table(&scaled),
        Format::Json => to_json_line(&render::exp_doc(&scaled, &label)),
        Format::Csv => render::exp_csv(&scaled),
    })
}

/// Multiply every coefficient of a normal form by a fixed rational.
fn scale_form(form: &NormalForm, factor: &BigRational) -> NormalForm {
    let mut out =
        NormalForm::zero_deformed(form.parameters(), form.modes(), form.deformation().clone())
            .expect("the deformation was validated when the form was built");
    for (monomial, coeff) in form.terms() {
        out.add_term(monomial.clone(), coeff.scale(factor))
            .expect("terms of one form share its context");
    }
    out
}

fn series(args: SeriesArgs) -> Result<String, CliError> {
    let only = |flag: &str, allowed: SeriesFamily| -> Result<(), CliError> {
        if args.family == allowed {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{flag} only applies to the {} family", allowed.label())))
        }
    };
    if args.gate_power.is_some() {
        only("--gate-power", SeriesFamily::RaisePower)?;
    }
    if args.expansion.is_some() || args.node_weight.is_some() {
        only("--expansion/--node-weight", SeriesFamily::IncreasingTree)?;
    }

    let params = Parameters::new(args.family.markers().iter().copied())
        .expect("marker names are distinct");
    let marker = |name: &str| {
        Coefficient::parameter(&params, name).expect("markers are declared above")
    };
    let family = match args.family {
        SeriesFamily::Bell => GfFamily::Bell { u: marker("u") },
        SeriesFamily::Involution => GfFamily::Involution {
            alpha: marker("alpha"),
            beta: marker("beta"),
            u: marker("u"),
            v: marker("v"),
        },
        SeriesFamily::D2PlusX => {
            GfFamily::LowerSquaredPlusRaise { u: marker("u"), v: marker("v") }
        }
        SeriesFamily::X2PlusD => {
            GfFamily::RaiseSquaredPlusLower { u: marker("u"), v: marker("v") }
        }
        SeriesFamily::Zigzag => GfFamily::Zigzag { u: marker("u"), v: marker("v") },
        SeriesFamily::RaisePower => {
            let r = args.gate_power.ok_or_else(|| {
                CliError::Usage("raise-power requires --gate-power R with R at least 2".into())
            })?;
            GfFamily::RaisePower { r, u: marker("u"), v: marker("v") }
        }
        SeriesFamily::Eulerian => GfFamily::Eulerian { u: marker("u") },
        SeriesFamily::IncreasingTree => {
            let expansion = args.expansion.as_deref().ok_or_else(|| {
                CliError::Usage(
                    "increasing-tree requires --expansion with the rule's coefficients".into(),
                )
            })?;
            let phi = PolynomialSpec::from_integers(&params, expansion);
            let rho = match args.node_weight.as_deref() {
                Some(weights) => PolynomialSpec::from_integers(&params, weights),
                None => PolynomialSpec::zero(&params),
            };
            GfFamily::IncreasingTree { phi, rho, u: marker("u"), v: marker("v") }
        }
    };
    let expanded = closed_gf(&family, args.order)
        .map_err(|error| CliError::Usage(error.to_string()))?;
    let expanded = apply_assignments(expanded, &args.set, &params)?;
    Ok(render_series(&expanded, args.order, args.format.format))
}

impl SeriesFamily {
    /// The marker parameters the family's coefficients range over.
    fn markers(self) -> &'static [&'static str] {
        match self {
            SeriesFamily::Bell | SeriesFamily::Eulerian => &["u"],
            SeriesFamily::Involution => &["alpha", "beta", "u", "v"],
            SeriesFamily::D2PlusX
            | SeriesFamily::X2PlusD
            | SeriesFamily::Zigzag
            | SeriesFamily::RaisePower
            | SeriesFamily::IncreasingTree => &["u", "v"],
        }
    }

    /// The flag spelling of the family.
    fn label(self) -> &'static str {
        match self {
            SeriesFamily::Bell => "bell",
            SeriesFamily::Involution => "involution",
            SeriesFamily::D2PlusX => "d2-plus-x",
            SeriesFamily::X2PlusD => "x2-plus-d",
            SeriesFamily::Zigzag => "zigzag",
            SeriesFamily::RaisePower => "raise-power",
            SeriesFamily::Eulerian => "eulerian",
            SeriesFamily::IncreasingTree => "increasing-tree",
        }
    }
}

/// Apply `--set NAME=VALUE` substitutions to an expanded series.
fn apply_assignments(
    series: TruncatedSeries,
    assignments: &[String],
    params: &Parameters,
) -> Result<TruncatedSeries, CliError> {
    let mut out = series;
    for assignment in assignments {
        let (name, value) = assignment.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("invalid --set '{assignment}': expected NAME=VALUE"))
        })?;
        let value = BigRational::from_str(value.trim()).map_err(|_| {
            CliError::Usage(format!(
                "invalid --set value in '{assignment}': expected an integer or a rational"
            ))
        })?;
        let coeff = Coefficient::from_rational(params, value);
        out = out
            .substitute_parameter(name.trim(), &coeff)
            .map_err(|error| CliError::Usage(error.to_string()))?;
    }
    Ok(out)
}

fn render_series(series: &TruncatedSeries, order: usize, format: Format) -> String {
    let coefficients = series.coefficients();
    match format {
        Format::Table => render::series_table(coefficients),
        Format::Json => to_json_line(&render::series_doc(order, coefficients)),
        Format::Csv => render::series_csv(coefficients),
    }
}

fn continued_fraction(args: CfArgs) -> Result<String, CliError> {
    if args.exponent.is_some() && args.family != CfFamily::SumPowers {
        return Err(CliError::Usage("--exponent only applies to the sum-powers family".into()));
    }
    let depth = args.order / 2 + 1;
    let spec = match args.family {
        CfFamily::Matchings => {
            let params = Parameters::empty();
            JFractionSpec::matchings(&params, depth)
        }
        CfFamily::SumPowers => {
            let power = args.exponent.ok_or_else(|| {
                CliError::Usage("sum-powers requires --exponent R with R at least 1".into())
            })?;
            if power == 0 {
                return Err(CliError::Usage(
                    "sum-powers requires --exponent R with R at least 1".into(),
                ));
            }
            let params = Parameters::empty();
            JFractionSpec::sum_powers(&params, power, depth)
        }
        CfFamily::QInversion => {
            let params = Parameters::new(["q"]).expect("one fresh name");
            let q = Coefficient::parameter(&params, "q").expect("q is declared");
            JFractionSpec::q_inversion(&q, depth)
        }
        CfFamily::QInversionPaired => {
            let params = Parameters::new(["q"]).expect("one fresh name");
            let q = Coefficient::parameter(&params, "q").expect("q is declared");
            JFractionSpec::q_inversion_paired(&q, depth)
        }
    }
    .map_err(|error| CliError::Usage(error.to_string()))?;
    let expanded =
        jfraction_expand(&spec, args.order).map_err(|error| CliError::Usage(error.to_string()))?;
    Ok(render_series(&expanded, args.order, args.format.format))
}

fn numbers(args: NumbersArgs) -> Result<String, CliError> {
    let value = evaluate_number(&args.family, &args.args)?;
    Ok(match args.format.format {
        Format::Table => render::value_table(&value),
        Format::Json => to_json_line(&render::ValueDoc { value }),
        Format::Csv => render::value_csv(&value),
    })
}

/// Evaluate one named number and render it canonically.
fn evaluate_number(family: &str, args: &[String]) -> Result<String, CliError> {
    let refuse = |error: weylkit_formulas::FormulasError| CliError::Usage(error.to_string());
    let symbolic_q = || {
        let params = Parameters::new(["q"]).expect("one fresh name");
        Coefficient::parameter(&params, "q").expect("q is declared")
    };
    match family {
        "stirling2" => {
            let [n, k] = uints(family, args, ["n", "k"])?;
            Ok(stirling2(n, k).map_err(refuse)?.to_string())
        }
        "stirling1" => {
            let [n, k] = uints(family, args, ["n", "k"])?;
            Ok(stirling1(n, k).map_err(refuse)?.to_string())
        }
        "bell" => {
            let [n] = uints(family, args, ["n"])?;
            Ok(bell(n).to_string())
        }
        "gen-stirling" => {
            let [n, k, r, s] = uints(family, args, ["n", "k", "r", "s"])?;
            Ok(gen_stirling_rs(n, k, r, s).map_err(refuse)?.to_string())
        }
        "gen-bell-22" => {
            let [n] = uints(family, args, ["n"])?;
            Ok(gen_bell_22(n).to_string())
        }
        "lah-gamma" => {
            let [n, k, r] = uints(family, args, ["n", "k", "r"])?;
            Ok(lah_gamma(n, k, r).map_err(refuse)?.to_string())
        }
        "scherk" => {
            let [n, k, p] = uints(family, args, ["n", "k", "p"])?;
            Ok(scherk_c(n, k, p).map_err(refuse)?.to_string())
        }
        "duchon" => {
            let [n] = uints(family, args, ["n"])?;
            Ok(duchon(n).to_string())
        }
        "touchard-riordan" => {
            let [chords] = uints(family, args, ["chords"])?;
            Ok(touchard_riordan(chords, &symbolic_q()).map_err(refuse)?.to_string())
        }
        "q-factorial" => {
            let [n] = uints(family, args, ["n"])?;
            Ok(q_factorial(&symbolic_q(), n).to_string())
        }
        "ehrenfest-prob" => {
            let [m, n, a0, a] = uints(family, args, ["m", "n", "a0", "a"])?;
            Ok(ehrenfest_prob(m, n, a0, a).map_err(refuse)?.to_string())
        }
        other => Err(CliError::Usage(format!(
            "unknown numbers family '{other}'; see `numbers --help` for the list"
        ))),
    }
}

/// Parse the positional arguments of a numbers family as nonnegative
/// integers, enforcing the exact arity.
fn uints<const N: usize>(
    family: &str,
    args: &[String],
    names: [&str; N],
) -> Result<[u32; N], CliError> {
    if args.len() != N {
        return Err(CliError::Usage(format!(
            "{family} takes {N} argument(s): {}",
            names.join(" ")
        )));
    }
    let mut out = [0u32; N];
    for ((slot, arg), name) in out.iter_mut().zip(args).zip(names) {
        *slot = arg.parse::<u32>().map_err(|_| {
            CliError::Usage(format!("argument {name}='{arg}' is not a nonnegative integer"))
        })?;
    }
    Ok(out)
}

fn oracle_compare(args: OracleCompareArgs) -> Result<String, CliError> {
    let expression = parse_expression(&args.expr)?;
    let op = build_operator(&expression, &Deformation::Off, args.budget.max_word_len)?;
    let limits = args.size.limits();
    let mut kinds = args.oracles;
    kinds.dedup();
    let reports: Vec<OracleReport> = kinds
        .iter()
        .map(|&kind| run_oracle(kind, &op, args.power, &limits))
        .collect::<Result<_, _>>()?;
    if let Some(difference) = first_disagreement(&reports, op.parameters()) {
        return Err(CliError::Disagreement(difference.to_string()));
    }
    let names: Vec<&str> = kinds.iter().map(|kind| kind.name()).collect();
    Ok(format!("agreement: {} at power {}\n", names.join(", "), args.power))
}

fn dump_diagrams(args: DumpDiagramsArgs) -> Result<String, CliError> {
    let expression = parse_expression(&args.expr)?;
    let op = build_operator(&expression, &Deformation::Off, args.budget.max_word_len)?;
    let basis = single_mode_gates(&op)?;
    let enumeration = enumerate_diagrams(&basis, args.size, None, &args.bound.limits())
        .map_err(|error| CliError::Refused(error.to_string()))?;
    match args.format.format {
        Format::Table => {
            let mut out = String::new();
            for (index, diagram) in enumeration.diagrams.iter().enumerate() {
                if index > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("diagram {}:\n{diagram}", index + 1));
            }
            out.push_str(&format!("total: {}\n", enumeration.diagrams.len()));
            Ok(out)
        }
        Format::Json => {
            let diagrams: Vec<String> = enumeration
                .diagrams
                .iter()
                .map(|diagram| diagram.to_string().lines().collect::<Vec<_>>().join("; "))
                .collect();
            Ok(to_json_line(&render::DiagramsDoc {
                size: args.size,
                count: diagrams.len(),
                diagrams,
            }))
        }
        Format::Csv => {
            Err(CliError::Usage("dump-diagrams has no CSV form; use table or json".into()))
        }
    }
}

/// Serialise a document compactly and terminate the line.
fn to_json_line<T: serde::Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string(doc).expect("documents contain only strings and numbers");
    text.push('\n');
    text
}
