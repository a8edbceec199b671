//! Batch verification driver: load a workspace, classify its contexts, and
//! run the check suites. Exit code 0 means every checked claim held, 1 means
//! a checked claim failed, 2 means the input or configuration was unusable.

mod examples;
mod report;
mod workspace;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use morita_kit::algebra::{ModuleStructure, Side};
use morita_kit::catlab::{
    enumerate_modules, equivalence_witness, in_class, star_module_bounded, theorem_regression,
    wide_morita_maps, ClassName, WitnessMode,
};
use morita_kit::morita::{
    butterfly_check, proposition_tt_check, random_data, MoritaDatum, MoritaSemiContext,
};
use morita_kit::{set_caps, Caps};

use report::CheckCollector;
use workspace::{parse_workspace, Workspace};

#[derive(Parser)]
#[command(name = "morita-kit", version, about = "Exact checks for Morita (semi-)contexts over finite rings")]
struct Cli {
    /// Override the group-order capacity (also via MORITA_KIT_CAP).
    #[arg(long, global = true)]
    cap: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a workspace file.
    Validate { file: String },
    /// Classify one named context of a workspace.
    Classify {
        file: String,
        #[arg(long)]
        object: String,
        /// Module-order bound for the bounded alpha search.
        #[arg(long, default_value_t = 16)]
        alpha_bound: u128,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite over every context of a workspace
    /// (or over a seeded random corpus when FILE is "random").
    Check {
        file: String,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Module-order bound for enumerations.
        #[arg(long, default_value_t = 16)]
        bound: u128,
        /// Seed for the random corpus (defaults to the workspace seed, then 7).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Emit a built-in example workspace on standard output.
    Example {
        #[arg(value_enum)]
        which: ExampleKind,
        /// Matrix dimension for the matrix example.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Base modulus for the identity and matrix examples.
        #[arg(long, default_value_t = 2)]
        m: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Butterfly,
    Tt,
    Vv,
    Witness,
    Regression,
    Star,
    Wide,
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::Butterfly => "butterfly",
            Suite::Tt => "tt",
            Suite::Vv => "vv",
            Suite::Witness => "witness",
            Suite::Regression => "regression",
            Suite::Star => "star",
            Suite::Wide => "wide",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleKind {
    Corner,
    Identity,
    Matrix,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    // Capacity precedence: --cap flag, then MORITA_KIT_CAP, then the
    // workspace file's caps block, then the defaults.
    let mut caps = Caps::default();
    let mut pair_override = None;
    if let Some((file_caps, _)) = peek_file_settings(&cli.command) {
        caps.max_group_order = file_caps.max_group_order;
        pair_override = file_caps.max_pair_count;
    }
    if let Ok(value) = std::env::var("MORITA_KIT_CAP") {
        match value.parse::<u128>() {
            Ok(cap) => caps.max_group_order = cap,
            Err(_) => {
                eprintln!("error: MORITA_KIT_CAP must be an integer, got {value:?}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(cap) = cli.cap {
        caps.max_group_order = cap;
    }
    caps.max_pair_count = pair_override
        .unwrap_or_else(|| (caps.max_group_order.min(16_384) as usize).saturating_mul(4));
    set_caps(caps);

    match run(cli.command) {
        Ok(passed) => {
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Validate { file } => {
            let ws = load(&file)?;
            println!(
                "workspace valid: {} ring(s), {} module(s), {} bimodule(s), {} map(s), {} semi-context(s), {} datum/data",
                ws.rings.len(),
                ws.modules.len(),
                ws.bimodules.len(),
                ws.maps.len(),
                ws.semi_contexts.len(),
                ws.data.len()
            );
            Ok(true)
        }
        Command::Classify { file, object, alpha_bound, json } => {
            let ws = load(&file)?;
            classify(&ws, &object, alpha_bound, json)
        }
        Command::Check { file, suite, bound, seed, json } => {
            let seed = seed.or_else(|| file_seed(&file)).unwrap_or(7);
            let data = collect_data(&file, seed)?;
            let semis = collect_semis(&file)?;
            check(suite, &data, &semis, bound, json)
        }
        Command::Example { which, n, m } => {
            let doc = match which {
                ExampleKind::Corner => examples::corner_example(),
                ExampleKind::Identity => examples::identity_example(m).map_err(|e| e.to_string())?,
                ExampleKind::Matrix => {
                    examples::matrix_example(n, m).map_err(|e| e.to_string())?
                }
            };
            let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
            println!("{text}");
            Ok(true)
        }
    }
}

fn load(file: &str) -> Result<Workspace, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?;
    parse_workspace(&text).map_err(|e| format!("{file}: {e}"))
}

/// Best-effort read of the caps/seed settings of the file a command touches,
/// before the full validated load.
fn peek_file_settings(command: &Command) -> Option<(workspace::CapsDoc, Option<u64>)> {
    let file = match command {
        Command::Validate { file }
        | Command::Classify { file, .. }
        | Command::Check { file, .. } => file,
        Command::Example { .. } => return None,
    };
    if file == "random" {
        return None;
    }
    let text = std::fs::read_to_string(file).ok()?;
    let value: serde_json::Value = serde_json::from_str(&text).ok()?;
    let caps: workspace::CapsDoc = serde_json::from_value(value.get("caps")?.clone()).ok()?;
    let seed = value.get("seed").and_then(serde_json::Value::as_u64);
    Some((caps, seed))
}

fn file_seed(file: &str) -> Option<u64> {
    if file == "random" {
        return None;
    }
    let text = std::fs::read_to_string(file).ok()?;
    let value: serde_json::Value = serde_json::from_str(&text).ok()?;
    value.get("seed").and_then(serde_json::Value::as_u64)
}

fn collect_data(file: &str, seed: u64) -> Result<BTreeMap<String, MoritaDatum>, String> {
    if file == "random" {
        let corpus = random_data(seed, 100).map_err(|e| e.to_string())?;
        Ok(corpus
            .into_iter()
            .enumerate()
            .map(|(i, d)| (format!("random-{i:03}"), d))
            .collect())
    } else {
        Ok(load(file)?.data)
    }
}

fn collect_semis(file: &str) -> Result<BTreeMap<String, MoritaSemiContext>, String> {
    if file == "random" {
        Ok(BTreeMap::new())
    } else {
        Ok(load(file)?.semi_contexts)
    }
}

fn classify(ws: &Workspace, object: &str, alpha_bound: u128, json: bool) -> Result<bool, String> {
    let bound = Some(alpha_bound);
    if let Some(datum) = ws.data.get(object) {
        let class_t = datum.m_t().classify(bound).map_err(|e| e.to_string())?;
        let class_s = datum.m_s().classify(bound).map_err(|e| e.to_string())?;
        let mut notes = report::classification_notes("outer connecting map", &class_t);
        notes.extend(report::classification_notes("inner connecting map", &class_s));
        if json {
            let doc = report::classify_json(
                object,
                vec![
                    report::side_class_json("outer", &class_t),
                    report::side_class_json("inner", &class_s),
                ],
                Some(datum),
                notes,
            );
            println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
        } else {
            let mut out = String::new();
            use std::fmt::Write;
            let _ = writeln!(
                out,
                "datum {object}: rings of order {} and {}, context = {}",
                datum.t().order(),
                datum.s().order(),
                datum.is_context()
            );
            report::render_semi_classification(&mut out, "outer connecting map", &class_t);
            report::render_semi_classification(&mut out, "inner connecting map", &class_s);
            if let Ok(nd) = datum.is_non_degenerate() {
                let _ = writeln!(out, "datum non-degenerate: {nd}");
            }
            print!("{out}");
        }
        Ok(true)
    } else if let Some(m) = ws.semi_contexts.get(object) {
        let class = m.classify(bound).map_err(|e| e.to_string())?;
        if json {
            let notes = report::classification_notes("connecting map", &class);
            let doc = report::classify_json(
                object,
                vec![report::side_class_json("outer", &class)],
                None,
                notes,
            );
            println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
        } else {
            print!("{}", report::classify_semi_text(object, m, &class));
        }
        Ok(true)
    } else {
        Err(format!("no context named {object:?} in the workspace"))
    }
}

fn check(
    suite: Suite,
    data: &BTreeMap<String, MoritaDatum>,
    semis: &BTreeMap<String, MoritaSemiContext>,
    bound: u128,
    json: bool,
) -> Result<bool, String> {
    let mut collector = CheckCollector::new();
    let fail = |e: morita_kit::Error| e.to_string();

    match suite {
        Suite::Butterfly => {
            for (name, datum) in data {
                if !datum.is_context() {
                    collector.skip(name, "not a Morita context");
                    continue;
                }
                let report = butterfly_check(datum).map_err(fail)?;
                report::butterfly_items(name, &report, &mut collector);
            }
        }
        Suite::Tt => {
            for (name, datum) in data {
                let report = proposition_tt_check(datum).map_err(fail)?;
                report::tt_items(name, &report, &mut collector);
            }
        }
        Suite::Vv => {
            for (name, datum) in data {
                let report = theorem_regression(datum, bound).map_err(fail)?;
                for outcome in report.outcomes.iter().filter(|o| {
                    o.name.starts_with("class-equalities")
                        || o.name.starts_with("tensor-square")
                        || o.name.starts_with("hom-square")
                }) {
                    let single = morita_kit::catlab::RegressionReport {
                        outcomes: vec![outcome.clone()],
                    };
                    collector.extend_regression(&format!("{name}/"), &single);
                }
            }
        }
        Suite::Witness => {
            for (name, datum) in data {
                let modules =
                    enumerate_modules(datum.t(), Side::Left, bound).map_err(fail)?;
                for module in modules {
                    let desc = format!("{:?}", module.group().moduli());
                    if in_class(datum.m_t(), ClassName::X, &module).map_err(fail)? {
                        let witness = equivalence_witness(datum, &module, WitnessMode::HomFunctor)
                            .map_err(fail)?;
                        report::witness_item(name, &desc, &witness, &mut collector);
                    }
                    let tensor_witness =
                        equivalence_witness(datum, &module, WitnessMode::TensorFunctor)
                            .map_err(fail)?;
                    if !tensor_witness.skipped() {
                        report::witness_item(
                            name,
                            &format!("{desc} (tensor)"),
                            &tensor_witness,
                            &mut collector,
                        );
                    }
                }
            }
        }
        Suite::Regression => {
            for (name, datum) in data {
                let report = theorem_regression(datum, bound).map_err(fail)?;
                collector.extend_regression(&format!("{name}/"), &report);
            }
        }
        Suite::Star => {
            for (name, datum) in data {
                let report = star_module_bounded(datum.p().left(), bound).map_err(fail)?;
                report::star_items(name, &report, &mut collector);
            }
        }
        Suite::Wide => {
            for (name, datum) in data {
                if !datum.is_context() {
                    collector.skip(name, "not a Morita context");
                    continue;
                }
                let v = ModuleStructure::regular(datum.t(), Side::Left);
                let w = ModuleStructure::regular(datum.s(), Side::Left);
                let report = wide_morita_maps(datum, &v, &w).map_err(fail)?;
                report::wide_items(name, &report, &mut collector);
            }
        }
    }

    // Every suite runs over data; bare semi-contexts are reported as skips
    // so the file's objects all appear in the output.
    for name in semis.keys() {
        collector.skip(name, "needs a full datum");
    }

    let passed = collector.passed();
    if json {
        let doc = report::CheckJson {
            schema: 1,
            suite: suite.name().to_string(),
            passed,
            items: collector.items,
        };
        println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
    } else {
        print!("{}", collector.render_text(suite.name()));
    }
    Ok(passed)
}
