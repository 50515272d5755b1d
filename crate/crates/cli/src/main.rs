use std::path::PathBuf;
use std::process::ExitCode;

use chevalley::group::{evaluate, Letter, Word};
use chevalley::hwmodule::{parse_module_spec, WeightModule};
use chevalley::integrality::{
    height_order, integrality_decide, iwasawa_decompose, toral_factorize, unipotent_factorize, SimpleRewriter, Verdict,
};
use chevalley::verify::{self, Suite};
use chevalley::{Error, RootSystem, Q};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chevalley", version, about = "Exact computations in Chevalley groups over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Cartan type such as A2, B3, G2.
    #[arg(long = "type", short = 't')]
    cartan_type: String,
    /// Preset (sc-default, fundamentals, adjoint) or `w1,...,wl;w1,...` summands.
    #[arg(long, default_value = "sc-default")]
    module: String,
    /// Root seed for randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data, fundamental group and positive roots.
    Roots(Common),
    /// Weights, multiplicities and lattice ranks of a module.
    Module(Common),
    /// Run seeded verification suites.
    Verify {
        /// algebra, module, group, integrality or all.
        suite: Suite,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether the element given by a word lies in G(Z).
    Decide {
        #[arg(long)]
        word: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Decompose a word as gamma * u * h with gamma in G(Z).
    Iwasawa {
        #[arg(long)]
        word: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Factor a unipotent or toral word into root and torus coordinates.
    Factorize {
        #[arg(long)]
        word: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_INTEGRAL: u8 = 3;
const EXIT_HYPOTHESIS: u8 = 4;

/// A failure together with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::InvalidType(_)
            | Error::InvalidRank { .. }
            | Error::NotARoot(_)
            | Error::MalformedWord(_)
            | Error::WrongLength { .. }
            | Error::NotDominant(_)
            | Error::TrivialModule => EXIT_PARSE,
            Error::MissingFundamentalWeights(_) => EXIT_HYPOTHESIS,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure { code: EXIT_FAILURE, message: format!("{e:#}") }
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Roots(c) | Command::Module(c) => c,
        Command::Verify { common, .. }
        | Command::Decide { common, .. }
        | Command::Iwasawa { common, .. }
        | Command::Factorize { common, .. } => common,
    }
    .clone();
    match dispatch(&cli.command, &common) {
        Ok(out) => {
            let body = if common.json {
                serde_json::to_string_pretty(&out.json).expect("report serializes") + "\n"
            } else {
                out.text
            };
            if let Err(e) = emit(&common, &body) {
                eprintln!("error: {e:#}");
                return ExitCode::from(EXIT_FAILURE);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(common: &Common, body: &str) -> anyhow::Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, body).map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn dispatch(cmd: &Command, common: &Common) -> Result<Output, Failure> {
    let rs = RootSystem::from_str_type(&common.cartan_type)?;
    match cmd {
        Command::Roots(_) => Ok(roots(&rs)),
        Command::Module(_) => module(&rs, common),
        Command::Verify { suite, .. } => run_verify(&rs, *suite, common),
        Command::Decide { word, .. } => decide(&rs, common, word),
        Command::Iwasawa { word, .. } => iwasawa(&rs, common, word),
        Command::Factorize { word, .. } => factorize(&rs, common, word),
    }
}

fn read_word(rs: &RootSystem, path: &PathBuf) -> Result<Word, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_PARSE, message: format!("reading {}: {e}", path.display()) })?;
    Ok(Word::from_json_str(rs, &text)?)
}

fn build_module(rs: &RootSystem, common: &Common) -> Result<WeightModule, Failure> {
    let lambdas = parse_module_spec(rs, &common.module)?;
    Ok(WeightModule::new(rs, &lambdas)?)
}

fn roots(rs: &RootSystem) -> Output {
    let mut text = format!(
        "type {}\nrank {}\npositive roots {}\nfundamental group {:?}\ncartan matrix {:?}\n",
        rs.cartan_type(),
        rs.rank(),
        rs.num_positive(),
        rs.fundamental_group(),
        rs.cartan_matrix()
    );
    let mut table = Vec::new();
    for k in 0..rs.num_positive() {
        text += &format!("  {:>3}  height {:>2}  {:?}\n", k, rs.root_height(k), rs.root(k));
        table.push(json!({"root": rs.root(k), "height": rs.root_height(k), "length": rs.root_length(k)}));
    }
    let mut doc = serde_json::to_value(rs).expect("root system serializes");
    doc["rank"] = json!(rs.rank());
    doc["fundamental_group"] = json!(rs.fundamental_group());
    doc["positive_root_table"] = json!(table);
    Output { text, json: doc, code: 0 }
}

fn module(rs: &RootSystem, common: &Common) -> Result<Output, Failure> {
    let v = build_module(rs, common)?;
    let summary = v.summary();
    let mut text = format!("module {:?} of {} has dimension {}\n", v.summands(), rs.cartan_type(), v.dim());
    for mu in v.weights() {
        text += &format!("  {:?}  multiplicity {}\n", mu, v.multiplicity(&mu));
    }
    let missing = v.missing_fundamental_weights();
    if !missing.is_empty() {
        text += &format!("missing fundamental weights {:?}\n", missing.iter().map(|i| i + 1).collect::<Vec<_>>());
    }
    let json = serde_json::to_value(&summary).expect("summary serializes");
    Ok(Output { text, json, code: 0 })
}

fn run_verify(rs: &RootSystem, suite: Suite, common: &Common) -> Result<Output, Failure> {
    let lambdas = parse_module_spec(rs, &common.module)?;
    let report = verify::run(suite, rs, &lambdas, common.seed)?;
    let code = if report.passed() { 0 } else { EXIT_FAILURE };
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Output { text: report.render(), json, code })
}

/// The module hypotheses the integrality decision relies on.
fn check_hypotheses(v: &WeightModule) -> Result<(), Failure> {
    let missing = v.missing_fundamental_weights();
    if !missing.is_empty() {
        return Err(Error::MissingFundamentalWeights(missing.iter().map(|i| i + 1).collect()).into());
    }
    if !v.has_regular_summand() {
        return Err(Failure {
            code: EXIT_HYPOTHESIS,
            message: "module needs a summand with regular highest weight (all coordinates positive)".into(),
        });
    }
    Ok(())
}

fn decide(rs: &RootSystem, common: &Common, path: &PathBuf) -> Result<Output, Failure> {
    let word = read_word(rs, path)?;
    let v = build_module(rs, common)?;
    check_hypotheses(&v)?;
    let lattice = v.build_lattice();
    let d = integrality_decide(&v, &lattice, &word)?;
    let mut json = d.verdict.to_json(rs);
    json["warnings"] = json!(d.warnings);
    let (text, code) = match &d.verdict {
        Verdict::InGZ { certificate } => {
            (format!("in G(Z)\ncertificate {}\n", certificate.to_json_value(rs)), 0)
        }
        Verdict::NotIntegral { witness } => (
            format!(
                "not integral\nwitness in weight {:?}: {:?} maps to {:?}{}\n",
                witness.mu,
                witness.vector.iter().map(Q::to_string).collect::<Vec<_>>(),
                witness.image.iter().map(Q::to_string).collect::<Vec<_>>(),
                if witness.inverse { " under the inverse" } else { "" }
            ),
            EXIT_NOT_INTEGRAL,
        ),
    };
    Ok(Output { text, json, code })
}

fn iwasawa(rs: &RootSystem, common: &Common, path: &PathBuf) -> Result<Output, Failure> {
    let word = read_word(rs, path)?;
    let v = build_module(rs, common)?;
    let simple = SimpleRewriter::new(v.compact()).rewrite(&word);
    let d = iwasawa_decompose(&v, &simple)?;
    let g = evaluate(&v, &word)?;
    let exact = evaluate(&v, &d.gamma)?.then(&v, &d.b.word())?.matrix == g.matrix && d.gamma.is_integral();
    let mut json = d.to_json(rs);
    json["exact"] = json!(exact);
    let text = format!(
        "gamma {}\nu {}\nh {}\nexact {exact}\n",
        json["gamma"], json["u"], json["h"]
    );
    Ok(Output { text, json, code: if exact { 0 } else { EXIT_FAILURE } })
}

fn factorize(rs: &RootSystem, common: &Common, path: &PathBuf) -> Result<Output, Failure> {
    let word = read_word(rs, path)?;
    let v = build_module(rs, common)?;
    let g = evaluate(&v, &word)?;
    let (json, rebuilt) = if g.matrix.is_diagonal() {
        let t = toral_factorize(&v, &g.matrix)?;
        let w = Word(t.iter().enumerate().map(|(i, x)| Letter::torus(i, x.clone())).collect());
        let h: Vec<Value> = t.iter().enumerate().map(|(i, x)| json!({"i": i + 1, "t": x})).collect();
        (json!({"kind": "toral", "h": h}), w)
    } else {
        let coords = unipotent_factorize(&v, &g.matrix, &height_order(rs))?;
        let w = Word(coords.iter().map(|(r, t)| Letter::chi(*r, t.clone())).collect());
        let u: Vec<Value> = coords.iter().map(|(r, t)| json!({"root": rs.root(*r), "t": t})).collect();
        (json!({"kind": "unipotent", "u": u}), w)
    };
    let exact = evaluate(&v, &rebuilt)?.matrix == g.matrix;
    let mut json = json;
    json["exact"] = json!(exact);
    let text = match json["kind"].as_str() {
        Some("toral") => format!("toral h {}\nexact {exact}\n", json["h"]),
        _ => format!("unipotent u {}\nexact {exact}\n", json["u"]),
    };
    Ok(Output { text, json, code: if exact { 0 } else { EXIT_FAILURE } })
}
