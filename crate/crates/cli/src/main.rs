//! `tsg`: symmetry groups of generalized Petersen graphs from the shell.
//!
//! Exit codes: 0 on success, 1 when a verification or computation fails,
//! 2 on usage errors (the clap default).

use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tsg_cli::claims::{run_claims, ClaimStatus, SuiteInput, SCOPES};
use tsg_cli::render::{
    claim_json, class_size_of, csv_field, edges_csv, generator_cycles, histogram_string,
    verdict_json, witness_string,
};
use tsg_core::{
    admissible, automorphism_group, classify, classify_all, conjugacy_classes_of_subgroups,
    exceptional_catalog, full_symmetry_group, identify_group, is_exceptional, perm_from_cycles,
    registry, GroupLabel, Perm, PermGroup, PetersenGraph, Registry, SearchConfig,
};

#[derive(Parser)]
#[command(
    name = "tsg",
    version,
    about = "Symmetry groups and spatial realizability for generalized Petersen graphs"
)]
struct Cli {
    /// Emit machine-readable JSON instead of human tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full symmetry group of P(n, k) two independent ways.
    Aut(AutArgs),
    /// Decide realizability for a subgroup of the symmetry group.
    Classify(ClassifyArgs),
    /// List the conjugacy classes of subgroups of the symmetry group.
    Subgroups(SubgroupsArgs),
    /// Re-derive every recorded computational claim and report pass/fail.
    #[command(name = "verify-paper")]
    VerifyPaper(VerifyArgs),
    /// Write the graph or the verdict table as DOT, JSON, or CSV.
    Export(ExportArgs),
}

#[derive(Args)]
struct PairArgs {
    /// Outer cycle length n (need n >= 3).
    #[arg(long)]
    n: usize,
    /// Inner step k (need 1 <= k and 2k < n).
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct AutArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Only run the backtracking search.
    #[arg(long, conflicts_with = "registry")]
    oracle: bool,
    /// Only close the recorded generators.
    #[arg(long)]
    registry: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SubgroupSpec {
    /// A group type such as "Z_4", "D_6 x Z_2", or the shorthand "Z4".
    #[arg(long, group = "spec")]
    group: Option<String>,
    /// Generators in cycle notation, e.g. "(u1 u9)(u2 u8)"; repeatable.
    #[arg(long, group = "spec")]
    gens: Vec<String>,
    /// Classify every conjugacy class of subgroups.
    #[arg(long, group = "spec")]
    all: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[command(flatten)]
    spec: SubgroupSpec,
}

#[derive(Args)]
struct SubgroupsArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Keep only classes of this group type.
    #[arg(long)]
    filter: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run one claim group instead of the whole suite.
    #[arg(long, value_parser = SCOPES.to_vec())]
    scope: Option<String>,
    /// Load the generator registry from a file instead of the built-in one.
    #[arg(long, hide = true)]
    registry_file: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
    Csv,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Output format.
    #[arg(long, value_enum)]
    format: ExportFormat,
    /// CSV only: one row per subgroup conjugacy class with its verdict.
    #[arg(long)]
    verdicts: bool,
    /// Write to a file instead of standard output.
    #[arg(short, long)]
    output: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match search_config_from_env() {
        Ok(cfg) => cfg,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let outcome = match cli.command {
        Command::Aut(args) => cmd_aut(&args, cli.json, &config),
        Command::Classify(args) => cmd_classify(&args, cli.json),
        Command::Subgroups(args) => cmd_subgroups(&args, cli.json),
        Command::VerifyPaper(args) => cmd_verify(&args, cli.json, &config),
        Command::Export(args) => cmd_export(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn search_config_from_env() -> Result<SearchConfig, String> {
    let mut config = SearchConfig::default();
    if let Ok(raw) = std::env::var("TSG_NODE_BUDGET") {
        let budget: u64 = raw
            .parse()
            .map_err(|_| format!("TSG_NODE_BUDGET must be a positive integer, got {raw:?}"))?;
        if budget == 0 {
            return Err("TSG_NODE_BUDGET must be a positive integer, got 0".to_string());
        }
        config.node_budget = budget;
    }
    Ok(config)
}

fn check_pair(pair: &PairArgs) -> Result<(), String> {
    if admissible(pair.n, pair.k) {
        Ok(())
    } else {
        Err(format!(
            "P({}, {}) is not admissible: need n >= 3, k >= 1 and 2k < n",
            pair.n, pair.k
        ))
    }
}

/// Closure of the recorded generators: the named full generating set for
/// the exceptional pairs that have one, the spoke-preserving generators
/// otherwise, and None for the unresolved pairs with neither.
fn closure_route(n: usize, k: usize) -> Result<Option<PermGroup>, String> {
    if is_exceptional(n, k) {
        if registry().graph(n, k).is_err() {
            return Ok(None);
        }
        let gens = registry()
            .full_group_generators(n, k)
            .map_err(|e| e.to_string())?;
        let record = exceptional_catalog()
            .into_iter()
            .find(|r| r.n == n && r.k == k)
            .expect("registry pairs are exceptional");
        let group =
            PermGroup::closure(&gens, record.aut_order + 1).map_err(|e| e.to_string())?;
        return Ok(Some(group));
    }
    let gens: Vec<Perm> = tsg_core::bnk_generators(n, k)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|a| a.perm)
        .collect();
    let group = PermGroup::closure(&gens, 4 * n + 1).map_err(|e| e.to_string())?;
    Ok(Some(group))
}

fn cmd_aut(args: &AutArgs, json: bool, config: &SearchConfig) -> Result<ExitCode, String> {
    check_pair(&args.pair)?;
    let (n, k) = (args.pair.n, args.pair.k);

    let search = if args.registry {
        None
    } else {
        let graph = PetersenGraph::build(n, k).map_err(|e| e.to_string())?;
        Some(automorphism_group(&graph, config).map_err(|e| e.to_string())?)
    };
    let closure = if args.oracle {
        None
    } else {
        let route = closure_route(n, k)?;
        if args.registry && route.is_none() {
            return Err(format!(
                "P({n},{k}) has no recorded full generating set; use the search instead"
            ));
        }
        route
    };

    let agree = match (&search, &closure) {
        (Some(a), Some(b)) => Some(a.elements() == b.elements()),
        _ => None,
    };
    let group = search.as_ref().or(closure.as_ref()).expect("one route ran");
    let label = identify_group(group);
    let generators = generator_cycles(group, n);

    if json {
        let value = json!({
            "n": n,
            "k": k,
            "order": group.order(),
            "type": label.to_string(),
            "generators": generators,
            "search_order": search.as_ref().map(|g| g.order()),
            "closure_order": closure.as_ref().map(|g| g.order()),
            "agree": agree,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        println!("P({n},{k}): order {}, type {label}", group.order());
        let route = |g: &Option<PermGroup>| match g {
            Some(g) => g.order().to_string(),
            None => "skipped".to_string(),
        };
        let agreement = match agree {
            Some(true) => "agree",
            Some(false) => "DISAGREE",
            None => "single route",
        };
        println!(
            "routes: search {}, closure {} ({agreement})",
            route(&search),
            route(&closure)
        );
        println!("generators:");
        for g in &generators {
            println!("  {g}");
        }
    }

    if agree == Some(false) {
        return Err(format!(
            "search and closure disagree on P({n},{k})"
        ));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_label(text: &str) -> Result<GroupLabel, String> {
    GroupLabel::from_str(text).map_err(|e| format!("cannot parse group type {text:?}: {e}"))
}

fn cmd_classify(args: &ClassifyArgs, json: bool) -> Result<ExitCode, String> {
    check_pair(&args.pair)?;
    let (n, k) = (args.pair.n, args.pair.k);

    // rows: (label, class size, verdict)
    let mut rows = Vec::new();
    if args.spec.all {
        for (class, verdict) in classify_all(n, k).map_err(|e| e.to_string())? {
            rows.push((class.iso_label.clone(), class.class_size, verdict));
        }
    } else if let Some(text) = &args.spec.group {
        let label = parse_label(text)?;
        let aut = full_symmetry_group(n, k).map_err(|e| e.to_string())?;
        let classes =
            conjugacy_classes_of_subgroups(&aut, Some(&label)).map_err(|e| e.to_string())?;
        if classes.is_empty() {
            return Err(format!(
                "the symmetry group of P({n},{k}) has no subgroup of type {label}"
            ));
        }
        for class in classes {
            let verdict = classify(n, k, &class.representative).map_err(|e| e.to_string())?;
            rows.push((class.iso_label.clone(), class.class_size, verdict));
        }
    } else {
        let aut = full_symmetry_group(n, k).map_err(|e| e.to_string())?;
        let mut gens = Vec::new();
        for text in &args.spec.gens {
            gens.push(perm_from_cycles(text, n).map_err(|e| e.to_string())?);
        }
        let subgroup =
            PermGroup::closure(&gens, aut.order() + 1).map_err(|e| e.to_string())?;
        let verdict = classify(n, k, &subgroup).map_err(|e| e.to_string())?;
        let label = identify_group(&subgroup);
        let class_size = class_size_of(&aut, &subgroup);
        rows.push((label, class_size, verdict));
    }

    if json {
        let values: Vec<serde_json::Value> = rows
            .iter()
            .map(|(label, class_size, verdict)| verdict_json(n, k, label, *class_size, verdict))
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::Value::Array(values)).expect("serializable")
        );
    } else {
        println!(
            "{:<16} {:>6} {:>11} {:<19} {:<10} WITNESS",
            "TYPE", "ORDER", "CLASS-SIZE", "REALIZABLE", "POSITIVE"
        );
        for (label, class_size, verdict) in &rows {
            println!(
                "{:<16} {:>6} {:>11} {:<19} {:<10} {}",
                label.to_string(),
                label.order(),
                class_size,
                verdict.realizable.as_str(),
                verdict.positively_realizable.as_str(),
                witness_string(n, verdict)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_subgroups(args: &SubgroupsArgs, json: bool) -> Result<ExitCode, String> {
    check_pair(&args.pair)?;
    let (n, k) = (args.pair.n, args.pair.k);
    let aut = full_symmetry_group(n, k).map_err(|e| e.to_string())?;
    let filter = match &args.filter {
        Some(text) => Some(parse_label(text)?),
        None => None,
    };
    let classes =
        conjugacy_classes_of_subgroups(&aut, filter.as_ref()).map_err(|e| e.to_string())?;

    if json {
        let values: Vec<serde_json::Value> = classes
            .iter()
            .map(|class| {
                json!({
                    "order": class.order(),
                    "type": class.iso_label.to_string(),
                    "class_size": class.class_size,
                    "element_orders": class
                        .element_order_histogram
                        .iter()
                        .map(|(o, c)| (o.to_string(), serde_json::Value::from(*c)))
                        .collect::<serde_json::Map<String, serde_json::Value>>(),
                    "generators": generator_cycles(&class.representative, n),
                })
            })
            .collect();
        let value = json!({
            "n": n,
            "k": k,
            "group_order": aut.order(),
            "classes": values,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        println!(
            "subgroup conjugacy classes of the symmetry group of P({n},{k}) (order {}): {}",
            aut.order(),
            classes.len()
        );
        println!("{:<6} {:<16} {:>10}  ELEMENT-ORDERS", "ORDER", "TYPE", "CLASS-SIZE");
        for class in &classes {
            println!(
                "{:<6} {:<16} {:>10}  {}",
                class.order(),
                class.iso_label.to_string(),
                class.class_size,
                histogram_string(&class.element_order_histogram)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs, json: bool, config: &SearchConfig) -> Result<ExitCode, String> {
    let loaded;
    let registry_input: Result<&Registry, String> = match &args.registry_file {
        None => Ok(registry()),
        Some(path) => match fs::read_to_string(path) {
            Err(e) => Err(format!("cannot read {path}: {e}")),
            Ok(text) => match Registry::parse(&text) {
                Ok(parsed) => {
                    loaded = parsed;
                    Ok(&loaded)
                }
                Err(e) => Err(e.to_string()),
            },
        },
    };

    let input = SuiteInput {
        registry: registry_input,
        config: *config,
    };
    let results = run_claims(args.scope.as_deref(), &input);

    let passed = results.iter().filter(|r| r.status == ClaimStatus::Pass).count();
    let failed = results.iter().filter(|r| r.status == ClaimStatus::Fail).count();
    let skipped = results
        .iter()
        .filter(|r| r.status == ClaimStatus::Skipped)
        .count();

    if json {
        let value = json!({
            "claims": results.iter().map(claim_json).collect::<Vec<_>>(),
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        for r in &results {
            println!(
                "{:<8} {:<26} [{}] computed: {}",
                r.status.as_str(),
                r.claim_id,
                r.citation.0,
                r.computed
            );
            if r.status == ClaimStatus::Fail {
                println!("         expected: {}", r.expected);
            }
        }
        println!("{passed} passed, {failed} failed, {skipped} skipped");
    }

    if failed > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_export(args: &ExportArgs) -> Result<ExitCode, String> {
    check_pair(&args.pair)?;
    let (n, k) = (args.pair.n, args.pair.k);
    if args.verdicts && args.format != ExportFormat::Csv {
        eprintln!("error: --verdicts is only available with --format csv");
        return Ok(ExitCode::from(2));
    }

    let graph = PetersenGraph::build(n, k).map_err(|e| e.to_string())?;
    let content = match (args.format, args.verdicts) {
        (ExportFormat::Dot, _) => graph.to_dot(),
        (ExportFormat::Json, _) => {
            let mut text =
                serde_json::to_string_pretty(&graph.to_json()).expect("serializable");
            text.push('\n');
            text
        }
        (ExportFormat::Csv, false) => edges_csv(&graph),
        (ExportFormat::Csv, true) => {
            let mut out = String::from(
                "n,k,subgroup_label,class_size,order,realizable,positively_realizable,witness\n",
            );
            for (class, verdict) in classify_all(n, k).map_err(|e| e.to_string())? {
                out.push_str(&format!(
                    "{n},{k},{},{},{},{},{},{}\n",
                    csv_field(&class.iso_label.to_string()),
                    class.class_size,
                    class.order(),
                    verdict.realizable.as_str(),
                    verdict.positively_realizable.as_str(),
                    csv_field(&witness_string(n, &verdict)),
                ));
            }
            out
        }
    };

    match &args.output {
        Some(path) => fs::write(path, content).map_err(|e| format!("cannot write {path}: {e}"))?,
        None => print!("{content}"),
    }
    Ok(ExitCode::SUCCESS)
}
