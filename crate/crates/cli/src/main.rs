//! `idealiz`: types of idealizations over numerical semigroup rings.
//!
//! Exit status is 0 on success, 1 when two computations of the same value
//! disagree or a checked identity fails, and 2 on bad input.

mod document;

use std::io::Write as _;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use idealiz::constructions::{enumerate_monomial_ideals, sup_search, DEFAULT_ENUMERATION_CAP};
use idealiz::serieside::parse_generator_list;
use idealiz::verify::verify_paper;
use idealiz::{AnyIdeal, Error, FieldSpec, FractionalIdeal, NumericalSemigroup, RelativeIdeal, TruncatedSeries};
use serde_json::{json, Value};

use crate::document::Document;

#[derive(Parser, Debug)]
#[command(name = "idealiz", version, about = "Cohen-Macaulay types of idealizations R ⋉ I over k[[t^H]]")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of a numerical semigroup.
    Semigroup {
        #[command(subcommand)]
        action: SemigroupAction,
    },
    /// Analyze a fractional ideal.
    Ideal {
        #[command(subcommand)]
        action: IdealAction,
    },
    /// Run the built-in suite of worked examples.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
    /// Largest r(R ⋉ I) over monomial ideals with generators up to the bound.
    SupSearch {
        #[arg(long, value_name = "CSV")]
        semigroup: String,
        #[arg(long)]
        bound: i64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// List monomial ideals with minimum 0 and generators up to the bound.
    Enumerate {
        #[arg(long, value_name = "CSV")]
        semigroup: String,
        #[arg(long)]
        bound: i64,
        /// Keep only ideals with this property.
        #[arg(long, value_enum)]
        filter: Option<Property>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SemigroupAction {
    Info {
        /// Generators, comma separated.
        generators: String,
    },
}

#[derive(Subcommand, Debug)]
enum IdealAction {
    Analyze {
        #[arg(long, value_name = "CSV")]
        semigroup: String,
        /// Comma-separated generator expressions, e.g. "t^6 - 2*t^7, t^10".
        #[arg(long)]
        gens: String,
        /// `qq` or `fp:<p>`.
        #[arg(long, default_value = "qq")]
        field: String,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyAction {
    Paper {
        #[arg(long, default_value = "all")]
        filter: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Auto,
    Monomial,
    Series,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    Closed,
    Trace,
    ResiduallyFaithful,
    UlrichIdeal,
    UlrichWrtM,
    Canonical,
    Principal,
}

impl Property {
    fn holds(self, r: &idealiz::IdealReport) -> bool {
        match self {
            Property::Closed => r.closed,
            Property::Trace => r.trace,
            Property::ResiduallyFaithful => r.residually_faithful,
            Property::UlrichIdeal => r.ulrich_ideal,
            Property::UlrichWrtM => r.ulrich_wrt_m,
            Property::Canonical => r.canonical,
            Property::Principal => r.principal,
        }
    }
}

/// An error plus the input it refers to, for caret rendering.
struct Failure {
    error: Error,
    source: Option<String>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, source: None }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        if self.error.is_consistency_failure() {
            1
        } else {
            2
        }
    }

    fn render(&self) -> String {
        let mut out = format!("error: {}", self.error);
        if let (Error::Parse { position, .. }, Some(src)) = (&self.error, &self.source) {
            out.push_str(&format!("\n  {src}\n  {}^", " ".repeat(*position)));
        }
        out
    }
}

fn parse_semigroup(csv: &str) -> Result<Arc<NumericalSemigroup>, Failure> {
    let gens = csv
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Argument(format!("bad semigroup generator `{}`", s.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NumericalSemigroup::shared(&gens)?)
}

/// `Some(a)` when `x` is a nonzero multiple of the monomial `t^a`.
fn monomial_exponent(x: &TruncatedSeries) -> Option<i64> {
    let mut terms = x.terms();
    let (a, _) = terms.next()?;
    terms.next().is_none().then_some(a)
}

fn build_ideal(h: &Arc<NumericalSemigroup>, gens: &str, field: FieldSpec, engine: Engine) -> Result<AnyIdeal, Failure> {
    let with_source = |error: Error| Failure {
        error,
        source: Some(gens.to_string()),
    };
    let series = parse_generator_list(gens, field).map_err(with_source)?;
    let exponents: Option<Vec<i64>> = series.iter().map(monomial_exponent).collect();
    match (engine, exponents) {
        (Engine::Auto | Engine::Monomial, Some(exps)) => Ok(AnyIdeal::Monomial(RelativeIdeal::from_exponents(h.clone(), &exps)?)),
        (Engine::Monomial, None) => Err(Error::Argument("the monomial engine needs monomial generators".into()).into()),
        (Engine::Auto | Engine::Series, _) => Ok(AnyIdeal::Series(FractionalIdeal::from_generators(h.clone(), field, &series, 0)?)),
    }
}

/// The document and whether every check in it passed.
fn execute(cli: &Cli) -> Result<(Document, bool), Failure> {
    match &cli.command {
        Command::Semigroup {
            action: SemigroupAction::Info { generators },
        } => {
            let h = parse_semigroup(generators)?;
            let inv = h.invariants()?;
            let doc = Document::new("semigroup info", json!({ "semigroup": generators }))
                .with("semigroup", to_value(&inv))
                .with("apery", json!(h.apery(h.multiplicity())?))
                .with("gaps", json!(h.gaps()));
            Ok((doc, true))
        }
        Command::Ideal {
            action: IdealAction::Analyze { semigroup, gens, field, engine },
        } => {
            let h = parse_semigroup(semigroup)?;
            let field: FieldSpec = field.parse()?;
            let ideal = build_ideal(&h, gens, field, *engine)?;
            let report = ideal.classify()?;
            let ok = report.all_passed();
            let input = json!({
                "semigroup": semigroup,
                "gens": gens,
                "field": field.to_string(),
                "engine": format!("{engine:?}").to_lowercase(),
            });
            let mut body = to_value(&report);
            let verdicts = body.as_object_mut().and_then(|o| o.remove("verdicts")).unwrap_or(Value::Null);
            let semigroup = body.as_object_mut().and_then(|o| o.remove("semigroup")).unwrap_or(Value::Null);
            let doc = Document::new("ideal analyze", input)
                .with("semigroup", semigroup)
                .with("report", body)
                .with("verdicts", verdicts);
            Ok((doc, ok))
        }
        Command::Verify {
            action: VerifyAction::Paper { filter },
        } => {
            let suite = verify_paper(filter)?;
            let ok = suite.all_passed();
            let doc = Document::new("verify paper", json!({ "filter": filter })).with("suite", to_value(&suite));
            Ok((doc, ok))
        }
        Command::SupSearch { semigroup, bound, cap } => {
            let h = parse_semigroup(semigroup)?;
            let s = sup_search(&h, *bound, *cap)?;
            let ok = s.value <= s.predicted;
            let doc = Document::new("sup-search", json!({ "semigroup": semigroup, "bound": bound, "cap": cap }))
                .with("semigroup", to_value(&h.invariants()?))
                .with("sup_search", to_value(&s));
            Ok((doc, ok))
        }
        Command::Enumerate {
            semigroup,
            bound,
            filter,
            cap,
        } => {
            let h = parse_semigroup(semigroup)?;
            let ideals = enumerate_monomial_ideals(&h, *bound, *cap)?;
            let mut rows = Vec::new();
            let mut ok = true;
            for i in &ideals {
                let rep = idealiz::classify(i)?;
                ok &= rep.all_passed();
                if filter.is_none_or(|p| p.holds(&rep)) {
                    rows.push(json!({
                        "ideal": rep.ideal,
                        "mu": rep.mu,
                        "module_type": rep.module_type,
                        "r_idealization": rep.r_idealization,
                        "closed": rep.closed,
                        "trace": rep.trace,
                        "ulrich_wrt_m": rep.ulrich_wrt_m,
                        "failed_verdicts": rep.failures().map(|v| v.name).collect::<Vec<_>>(),
                    }));
                }
            }
            let filter_name = filter.map(|p| format!("{p:?}").to_lowercase());
            let doc = Document::new(
                "enumerate",
                json!({ "semigroup": semigroup, "bound": bound, "cap": cap, "filter": filter_name }),
            )
            .with("semigroup", to_value(&h.invariants()?))
            .with("examined", json!(ideals.len()))
            .with("count", json!(rows.len()))
            .with("ideals", Value::Array(rows));
            Ok((doc, ok))
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize to JSON")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match execute(&cli) {
        Ok((doc, ok)) => {
            let doc = doc.with_timing(start.elapsed());
            let text = if cli.json {
                doc.to_json() + "\n"
            } else {
                doc.to_text()
            };
            let _ = std::io::stdout().write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a checked identity failed");
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("{}", f.render());
            ExitCode::from(f.exit_code())
        }
    }
}
