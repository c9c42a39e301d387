//! `motivic` — compute motivic/topological zeta functions, motivic volumes
//! and stringy invariants from resolution data, and validate them against
//! brute-force counting oracles.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};

use motivic_cli::corpus;
use motivic_cli::report::{digest, Check, RunReport};
use motivic_cli::selftest;
use motivic_core::counting::{
    self, assemble_series, CountMode, CountOptions, CountSeries, DenominatorShape, DEFAULT_BUDGET,
};
use motivic_core::exactalg::{parse_poly, parse_rational, rational_string, RatFunc, Rational};
use motivic_core::invariants::{
    birational_chi_sum, birational_class_sum, candidate_poles, extract_poles, j_from_z, limit_s1,
    monodromy_check, motivic_volume, motivic_zeta, nc_integral, seifert_e_st, stringy_invariants,
    stringy_zeta, z_top, EigenvalueSet, InvariantError, SeifertData,
};
use motivic_core::jets::{jet_equations, AffineSystem};
use motivic_core::strata::{classify, load_resolution, ResolutionData};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "motivic",
    about = "Exact motivic zeta functions, volumes and stringy invariants from resolution data",
    version
)]
struct Cli {
    /// Output format for the run report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Congruence,
    Jet,
    Contact,
}

impl From<ModeArg> for CountMode {
    fn from(m: ModeArg) -> CountMode {
        match m {
            ModeArg::Congruence => CountMode::Congruence,
            ModeArg::Jet => CountMode::JetPoints,
            ModeArg::Contact => CountMode::Contact,
        }
    }
}

#[derive(Args)]
struct BudgetArgs {
    /// Enumeration budget; defaults to MOTIVIC_BUDGET or 100000000.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads for counting.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl BudgetArgs {
    fn options(&self) -> CountOptions {
        let env_budget = std::env::var("MOTIVIC_BUDGET").ok().and_then(|v| v.parse().ok());
        CountOptions {
            budget: self.budget.or(env_budget).unwrap_or(DEFAULT_BUDGET),
            threads: self.threads,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the equations of the level-n jet space of an affine system.
    Jets {
        #[arg(long)]
        poly_file: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Exact point counts over finite rings.
    Count {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        poly_file: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Fit a rational function with a prescribed denominator shape to counts.
    Fit {
        #[arg(long)]
        poly_file: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Number of count coefficients to gather (levels 0..levels-1).
        #[arg(long)]
        levels: u32,
        /// Denominator factor (1 - p^a T^b), written "a,b"; repeatable.
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
        /// Cap on the numerator degree (defaults to the denominator degree).
        #[arg(long)]
        numer_degree: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a closed-form rational function against brute-forced counts.
    Verify {
        #[arg(long)]
        poly_file: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        levels: u32,
        /// Numerator of the expected series, a polynomial in T.
        #[arg(long)]
        numer: String,
        /// Denominator of the expected series, a polynomial in T.
        #[arg(long)]
        denom: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Motivic zeta function Z(T) and the jet-class series J(T).
    Zeta {
        #[arg(long)]
        input: PathBuf,
        /// Also expand the series up to this order.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Topological zeta function with candidate poles and actual poles.
    Ztop {
        #[arg(long)]
        input: PathBuf,
    },
    /// Motivic volume of the arc space with its Euler specialization.
    Volume {
        #[arg(long)]
        input: PathBuf,
    },
    /// Motivic integral against a normal crossings divisor.
    NcIntegral {
        #[arg(long)]
        input: PathBuf,
    },
    /// Stringy invariants e_st / E_st / cal E_st and the singularity class.
    Stringy {
        #[arg(long)]
        input: PathBuf,
    },
    /// Stringy zeta function and its limit at s = 1.
    StringyZeta {
        #[arg(long)]
        input: PathBuf,
    },
    /// Stringy Euler number from Seifert-type data.
    Seifert {
        #[arg(long)]
        input: PathBuf,
    },
    /// Singularity class from log discrepancies.
    Classify {
        /// Resolution document to read log discrepancies from.
        #[arg(long, conflicts_with = "a_values")]
        input: Option<PathBuf>,
        /// Comma-separated log discrepancies, e.g. "1,2/3".
        #[arg(long = "a")]
        a_values: Option<String>,
    },
    /// Check poles of the topological zeta function against eigenvalue exponents.
    CheckMonodromy {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated exponents q with eigenvalue e^{2 pi i q}.
        #[arg(long)]
        eigenvalues: String,
    },
    /// Verify the proper-birational class and Euler identities.
    Identity {
        #[arg(long)]
        input: PathBuf,
        /// The class [X], a polynomial in L.
        #[arg(long)]
        class_l: String,
    },
    /// Run the bundled golden-example suite.
    Selftest {
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            report.elapsed_ms = started.elapsed().as_millis();
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_doc(path: &PathBuf) -> anyhow::Result<(ResolutionData, String)> {
    let text = read_input(path)?;
    let data = load_resolution(&text)?;
    Ok((data, text))
}

fn parse_rational_list(text: &str) -> anyhow::Result<Vec<Rational>> {
    text.split(',').map(|s| Ok(parse_rational(s.trim())?)).collect()
}

fn gather_counts(
    sys: &AffineSystem,
    mode: CountMode,
    p: u64,
    levels: u32,
    opts: &CountOptions,
) -> anyhow::Result<CountSeries> {
    let mut counts = Vec::new();
    for n in 0..levels {
        let c = match mode {
            CountMode::Congruence => counting::count_congruence(sys, p, n, opts)?,
            CountMode::JetPoints => counting::count_jet_points(&jet_equations(sys, n as usize)?, p, opts)?,
            CountMode::Contact => counting::count_contact(sys, p, n, opts)?,
        };
        counts.push(BigInt::from(c));
    }
    Ok(CountSeries::new(p, mode, counts))
}

/// Render a rational function, tagging the symbolic complement when the
/// document omits the empty stratum.
fn render_with_complement(f: &RatFunc, data: &ResolutionData) -> String {
    if data.empty_stratum().is_some() {
        f.to_string()
    } else {
        format!("{f} + chi(E_emptyset)")
    }
}

fn run(command: &Command) -> anyhow::Result<RunReport> {
    match command {
        Command::Jets { poly_file, level } => {
            let text = read_input(poly_file)?;
            let sys = AffineSystem::parse(&text)?;
            let js = jet_equations(&sys, *level)?;
            let mut report = RunReport::new("jets", digest(&[&text]));
            report.result("level", *level as u64);
            report.result("num-vars", js.num_vars() as u64);
            report.result("num-equations", js.num_equations() as u64);
            report.result("equations", format!("\n{js}"));
            Ok(report)
        }
        Command::Count { mode, poly_file, prime, level, budget } => {
            let text = read_input(poly_file)?;
            let sys = AffineSystem::parse(&text)?;
            let opts = budget.options();
            let mode: CountMode = (*mode).into();
            let count = match mode {
                CountMode::Congruence => counting::count_congruence(&sys, *prime, *level, &opts)?,
                CountMode::JetPoints => {
                    counting::count_jet_points(&jet_equations(&sys, *level as usize)?, *prime, &opts)?
                }
                CountMode::Contact => counting::count_contact(&sys, *prime, *level, &opts)?,
            };
            let mut report = RunReport::new("count", digest(&[&text]));
            report.result("mode", mode.to_string());
            report.result("p", *prime);
            report.result("n", *level);
            report.result("count", count);
            Ok(report)
        }
        Command::Fit { poly_file, prime, mode, levels, factors, numer_degree, budget } => {
            let text = read_input(poly_file)?;
            let sys = AffineSystem::parse(&text)?;
            let series = gather_counts(&sys, (*mode).into(), *prime, *levels, &budget.options())?;
            let series = assemble_series(&series).ok_or_else(|| anyhow!("no counts gathered"))?;
            let shape = DenominatorShape::new(
                factors
                    .iter()
                    .map(|f| {
                        let (a, b) = f
                            .split_once(',')
                            .ok_or_else(|| anyhow!("--factor expects \"a,b\", got `{f}`"))?;
                        Ok((a.trim().parse()?, b.trim().parse()?))
                    })
                    .collect::<anyhow::Result<Vec<(i64, u32)>>>()?,
            );
            let fitted = counting::fit_rational(&series, &shape, *prime, *numer_degree)?;
            let mut report = RunReport::new("fit", digest(&[&text]));
            report.result("coefficients", series.to_string());
            report.result("fit", fitted.to_string());
            Ok(report)
        }
        Command::Verify { poly_file, prime, mode, levels, numer, denom, budget } => {
            let text = read_input(poly_file)?;
            let sys = AffineSystem::parse(&text)?;
            let series = gather_counts(&sys, (*mode).into(), *prime, *levels, &budget.options())?;
            let series = assemble_series(&series).ok_or_else(|| anyhow!("no counts gathered"))?;
            let expected = RatFunc::new(parse_poly(numer)?, parse_poly(denom)?)?;
            let matches = counting::verify_rational(&series, &expected)?;
            let mut report = RunReport::new("verify", digest(&[&text]));
            report.result("coefficients", series.to_string());
            report.result("ratfunc", expected.to_string());
            report.check(Check::assert("series-matches", matches, format!("{series}")));
            Ok(report)
        }
        Command::Zeta { input, order } => {
            let (data, text) = load_doc(input)?;
            let sum = motivic_zeta(&data)?;
            let mut report = RunReport::new("zeta", digest(&[&text]));
            report.result("term-sum", sum.to_string());
            report.result("Z", sum.to_ratfunc()?.to_string());
            report.result("J", j_from_z(&sum, data.ambient_dim)?.to_string());
            if let Some(order) = order {
                let series = sum.series_expand(*order)?;
                for (k, c) in series.coeffs().iter().enumerate() {
                    report.result(format!("T^{k}"), c.to_string());
                }
            }
            Ok(report)
        }
        Command::Ztop { input } => {
            let (data, text) = load_doc(input)?;
            let f = z_top(&data)?;
            let candidates = candidate_poles(&data);
            let poles = extract_poles(&f, &candidates)?;
            let mut report = RunReport::new("ztop", digest(&[&text]));
            report.result("Z_top", f.to_string());
            report.result(
                "candidate-poles",
                candidates.iter().map(rational_string).collect::<Vec<_>>().join(", "),
            );
            report.result("poles", poles.to_string());
            Ok(report)
        }
        Command::Volume { input } => {
            let (data, text) = load_doc(input)?;
            let sum = motivic_volume(&data)?;
            let mut report = RunReport::new("volume", digest(&[&text]));
            report.result("term-sum", sum.to_string());
            if let Ok(v) = sum.to_ratfunc() {
                report.result("volume", v.to_string());
            }
            report.result("arc-euler-characteristic", rational_string(&sum.specialize_chi()?));
            Ok(report)
        }
        Command::NcIntegral { input } => {
            let (data, text) = load_doc(input)?;
            let sum = nc_integral(&data)?;
            let mut report = RunReport::new("nc-integral", digest(&[&text]));
            report.result("term-sum", sum.to_string());
            report.result("integral", sum.to_ratfunc()?.to_string());
            Ok(report)
        }
        Command::Stringy { input } => {
            let (data, text) = load_doc(input)?;
            let inv = stringy_invariants(&data)?;
            let mut report = RunReport::new("stringy", digest(&[&text]));
            report.result("e_st", rational_string(&inv.euler));
            match &inv.class_l {
                Some(sum) => {
                    report.result("cal-E_st", sum.to_string());
                    if let Ok(v) = sum.to_ratfunc() {
                        report.result("cal-E_st-value", v.to_string());
                    }
                }
                None => report.result("cal-E_st", "unavailable (some stratum lacks classL)"),
            }
            match &inv.hodge {
                Some(sum) => {
                    report.result("E_st", sum.to_string());
                    if sum.root_index() > 1 {
                        report.result("root-index", sum.root_index());
                    }
                }
                None => report.result("E_st", "unavailable (some stratum lacks hodge and classL)"),
            }
            report.result("classification", classify(&data.log_discrepancies()).to_string());
            Ok(report)
        }
        Command::StringyZeta { input } => {
            let (data, text) = load_doc(input)?;
            let f = stringy_zeta(&data)?;
            let mut report = RunReport::new("stringy-zeta", digest(&[&text]));
            report.result("z_st", render_with_complement(&f, &data));
            match limit_s1(&f) {
                Ok(value) => {
                    let rendered = if data.empty_stratum().is_some() {
                        rational_string(&value)
                    } else {
                        format!("{} + chi(E_emptyset)", rational_string(&value))
                    };
                    report.result("limit-s1", rendered);
                }
                Err(InvariantError::PoleAtOne(mult)) => {
                    report.result("limit-s1", format!("pole of multiplicity {mult}"));
                }
                Err(e) => return Err(e.into()),
            }
            Ok(report)
        }
        Command::Seifert { input } => {
            let text = read_input(input)?;
            let data = SeifertData::parse(&text)?;
            let result = seifert_e_st(&data)?;
            let mut report = RunReport::new("seifert", digest(&[&text]));
            report.result("a", rational_string(&result.a));
            report.result("e_st", result.e_st.to_string());
            report.result("d-derived", result.d_derived.to_string());
            if let Some(d) = &data.d {
                report.check(Check::compare("d-consistency", d, &result.d_derived));
            }
            Ok(report)
        }
        Command::Classify { input, a_values } => {
            let (values, raw) = match (input, a_values) {
                (Some(path), None) => {
                    let (data, text) = load_doc(path)?;
                    (data.log_discrepancies(), text)
                }
                (None, Some(list)) => (parse_rational_list(list)?, list.clone()),
                _ => bail!("classify needs exactly one of --input or --a"),
            };
            let mut report = RunReport::new("classify", digest(&[&raw]));
            report.result(
                "log-discrepancies",
                values.iter().map(rational_string).collect::<Vec<_>>().join(", "),
            );
            report.result("class", classify(&values).to_string());
            Ok(report)
        }
        Command::CheckMonodromy { input, eigenvalues } => {
            let (data, text) = load_doc(input)?;
            let f = z_top(&data)?;
            let poles = extract_poles(&f, &candidate_poles(&data))?;
            let eigen = EigenvalueSet::new(parse_rational_list(eigenvalues)?);
            let mut report = RunReport::new("check-monodromy", digest(&[&text, eigenvalues]));
            report.result("Z_top", f.to_string());
            report.result("poles", poles.to_string());
            for verdict in monodromy_check(&poles, &eigen) {
                report.check(Check::assert(
                    format!("pole {}", rational_string(&verdict.location)),
                    verdict.satisfied,
                    format!("exponent {}", rational_string(&verdict.exponent)),
                ));
            }
            Ok(report)
        }
        Command::Identity { input, class_l } => {
            let (data, text) = load_doc(input)?;
            let lhs = parse_poly(class_l)?;
            let sum = birational_class_sum(&data)?;
            let mut report = RunReport::new("identity", digest(&[&text, class_l]));
            report.result("term-sum", sum.to_string());
            let value = sum.to_ratfunc()?;
            report.check(Check::assert(
                "class-identity",
                value.equal(&RatFunc::from_poly(lhs.clone())),
                format!("sum = {value}"),
            ));
            report.check(Check::compare(
                "chi-identity",
                rational_string(&lhs.chi_value()?),
                rational_string(&birational_chi_sum(&data)?),
            ));
            Ok(report)
        }
        Command::Selftest { budget } => {
            let mut report = RunReport::new("selftest", digest(&corpus::all_inputs()));
            let checks = selftest::run(&budget.options());
            let passed = checks.iter().filter(|c| c.pass).count();
            report.result("checks-passed", format!("{passed}/{}", checks.len()));
            for check in checks {
                report.check(check);
            }
            Ok(report)
        }
    }
}
