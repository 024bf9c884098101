use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gengraph::graph::{export, swap_graph, ExportFormat, GenGraph};
use gengraph::suites::{self, Suite};
use gengraph::tower::{self, Family, TowerParams};
use gengraph::{build_group, Caps, Error, GroupSpec};

#[derive(Parser)]
#[command(name = "gengraph", version, about = "Generating graphs of finite groups and their quotient towers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format (defaults depend on the command)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the document here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = available parallelism)
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Largest group that may be constructed
    #[arg(long, global = true)]
    cap_order: Option<usize>,
    /// Largest group whose subgroup lattice may be enumerated
    #[arg(long, global = true)]
    cap_subgroups: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum View {
    Delta,
    Gamma,
    Swap,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    VConsistency,
}

#[derive(Subcommand)]
enum Command {
    /// Order, V(G), components, diameters, degrees and chief length
    Analyze {
        #[arg(long)]
        group: String,
    },
    /// Run a verification suite over a corpus or a single group
    Verify {
        /// tanti, diam3, prodo, gaschutz, swap, coco or tower
        #[arg(long)]
        suite: String,
        #[arg(long, conflicts_with = "corpus")]
        group: Option<String>,
        /// builtin, builtin-soluble, or a file with one group per line
        #[arg(long)]
        corpus: Option<String>,
    },
    /// Densities, chief lengths and degree growth along a quotient tower
    Tower {
        /// klein-cp3, sl2-products or custom
        #[arg(long)]
        family: String,
        /// Primes of a klein-cp3 tower, e.g. 3,5
        #[arg(long)]
        primes: Option<String>,
        /// Number of sl2-products levels
        #[arg(long)]
        levels: Option<usize>,
        /// Levels of a custom tower, bottom first (repeatable)
        #[arg(long)]
        group: Vec<String>,
        #[arg(long, value_enum)]
        check: Option<Check>,
    },
    /// Export Delta(G), Gamma(G) or the swap graph
    #[command(alias = "export")]
    Graph {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "delta")]
        view: View,
    },
    /// Elements, generators and structure of a group
    Inspect {
        #[arg(long)]
        group: String,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = &cli.common;
    let result = gengraph::par::with_workers(common.workers, || run(&cli.command, common));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: verification: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: usage: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            let (kind, code) = match &e {
                Error::CapExceeded { .. } => ("cap", 3),
                Error::Parse { .. } | Error::Malformed(_) | Error::Unsupported(_) | Error::Precondition(_) | Error::Isolated(_) => {
                    ("usage", 2)
                }
                Error::Falsified(_) => ("verification", 1),
                Error::Internal(_) => ("internal", 1),
            };
            eprintln!("error: {kind}: {}", e.to_string().replace('\n', " "));
            ExitCode::from(code)
        }
    }
}

fn caps(common: &Common) -> Result<Caps, Failure> {
    let mut caps = Caps::from_env()?;
    if let Some(n) = common.cap_order {
        caps.order = n;
    }
    if let Some(n) = common.cap_subgroups {
        caps.subgroups = n;
    }
    Ok(caps)
}

fn parse_spec(text: &str) -> Result<GroupSpec, Failure> {
    Ok(text.parse()?)
}

fn emit(common: &Common, text: String) -> Result<(), Failure> {
    let text = if text.ends_with('\n') { text } else { text + "\n" };
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn format_of(common: &Common, default: Format, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    let f = common.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<_> = allowed
            .iter()
            .map(|f| f.to_possible_value().expect("named").get_name().to_string())
            .collect();
        Err(Failure::Usage(format!("{command} supports --format {}", names.join("|"))))
    }
}

fn json_text(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable document")
}

/// Indented `key: value` rendering of a JSON document.
fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("-".into()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
                Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")))
            }
            Value::Array(a) if a.iter().all(|x| x.is_array()) => Some(format!(
                "[{}]",
                a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")
            )),
            _ => None,
        }
    }
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(x, indent + 1, out);
                        }
                    }
                }
            }
            Value::Array(items) => {
                for (i, x) in items.iter().enumerate() {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}[{i}]\n"));
                            walk(x, indent + 1, out);
                        }
                    }
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

fn run(command: &Command, common: &Common) -> Result<(), Failure> {
    let caps = caps(common)?;
    match command {
        Command::Analyze { group } => {
            let format = format_of(common, Format::Json, &[Format::Json, Format::Text, Format::Csv], "analyze")?;
            let g = build_group(&parse_spec(group)?, &caps)?;
            let report = suites::analyze(&g, &caps)?;
            let text = match format {
                Format::Json => json_text(&report),
                Format::Text => render_text(&serde_json::to_value(&report).expect("json")),
                _ => analyze_csv(&serde_json::to_value(&report).expect("json")),
            };
            emit(common, text)
        }
        Command::Verify { suite, group, corpus } => {
            let format = format_of(common, Format::Json, &[Format::Json, Format::Text, Format::Csv], "verify")?;
            let suite: Suite = suite.parse()?;
            let specs = match (group, corpus) {
                (Some(g), _) => vec![parse_spec(g)?],
                (None, Some(c)) => suites::load_corpus(c, &caps)?,
                (None, None) if suite == Suite::Tower => Vec::new(),
                (None, None) => return Err(Failure::Usage("verify needs --group or --corpus".into())),
            };
            let report = suites::run_suite(suite, &specs, common.seed, &caps)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => render_text(&serde_json::to_value(&report).expect("json")),
                _ => report.to_csv()?,
            };
            emit(common, text)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Verification(format!("suite {} failed on {} case(s)", suite.name(), report.counts.fail)))
            }
        }
        Command::Tower {
            family,
            primes,
            levels,
            group,
            check,
        } => {
            let format = format_of(common, Format::Json, &[Format::Json, Format::Text, Format::Csv], "tower")?;
            let family: Family = family.parse()?;
            let params = match family {
                Family::KleinCp3 => TowerParams::Primes(suites::parse_list(
                    primes.as_deref().ok_or_else(|| Failure::Usage("klein-cp3 needs --primes".into()))?,
                )?),
                Family::Sl2Products => {
                    TowerParams::Levels(levels.ok_or_else(|| Failure::Usage("sl2-products needs --levels".into()))?)
                }
                Family::Custom => {
                    if group.is_empty() {
                        return Err(Failure::Usage("a custom tower needs --group for each level".into()));
                    }
                    TowerParams::Groups(group.iter().map(|g| parse_spec(g)).collect::<Result<_, _>>()?)
                }
            };
            let t = tower::build_tower(family, params, &caps)?;
            let report = tower::tower_report(&t, common.seed, &caps)?;
            let materialized = t.levels.iter().all(|l| l.group.is_some());
            let growth = if materialized {
                let top = t.group(t.levels.len() - 1)?;
                let gen = GenGraph::new(top)?;
                match gen.vertices().first() {
                    Some(&x) => Some(tower::degree_growth(&t, x)?),
                    None => None,
                }
            } else {
                None
            };
            let mut consistency = Vec::new();
            if let Some(Check::VConsistency) = check {
                for k in 0..t.levels.len().saturating_sub(1) {
                    consistency.push(tower::v_consistency(&t, k)?);
                }
                if t.levels.len() == 1 {
                    // a single level is compared with itself
                    let specs = vec![parse_spec(&t.levels[0].label)?, parse_spec(&t.levels[0].label)?];
                    let same = tower::build_tower(Family::Custom, TowerParams::Groups(specs), &caps)?;
                    let mut r = tower::v_consistency(&same, 0)?;
                    if family == Family::KleinCp3 {
                        let g = t.group(0)?;
                        let gen = GenGraph::new(g)?;
                        r.characterization_agrees =
                            Some(g.elements().all(|x| tower::v_characterization(g, x).unwrap() != gen.is_isolated(x)));
                    }
                    consistency.push(r);
                }
            }
            let text = match format {
                Format::Csv => report.to_csv()?,
                _ => {
                    let doc = json!({
                        "report": report,
                        "degree_growth": growth,
                        "v_consistency": if check.is_some() { json!(consistency) } else { Value::Null },
                    });
                    if format == Format::Json {
                        json_text(&doc)
                    } else {
                        render_text(&doc)
                    }
                }
            };
            emit(common, text)?;
            let failed = consistency.iter().filter(|c| !c.holds()).count();
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} V-consistency check(s) failed")));
            }
            if let Some(g) = growth.filter(|g| !(g.monotone && g.bounds_hold)) {
                return Err(Failure::Verification(format!("degree growth check failed: {:?}", g.rows)));
            }
            Ok(())
        }
        Command::Graph { group, view } => {
            let format = format_of(common, Format::Json, &[Format::Json, Format::Dot], "graph")?;
            let fmt = if format == Format::Dot { ExportFormat::Dot } else { ExportFormat::Json };
            let g = build_group(&parse_spec(group)?, &caps)?;
            let gen = GenGraph::new(&g)?;
            let text = match view {
                View::Delta => export(&gen, fmt),
                View::Gamma => export(&gen.gamma(), fmt),
                View::Swap => export(&swap_graph(&gen)?, fmt),
            };
            emit(common, text)
        }
        Command::Inspect { group } => {
            let format = format_of(common, Format::Json, &[Format::Json, Format::Text], "inspect")?;
            let spec = parse_spec(group)?;
            let g = build_group(&spec, &caps)?;
            let series = g.chief_series()?;
            let maximal = match g.maximal_subgroups() {
                Ok(m) => Some(m.iter().map(|s| s.order()).collect::<Vec<_>>()),
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let frattini = match g.frattini() {
                Ok(f) => Some(f.order()),
                Err(Error::CapExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let doc = json!({
                "spec": spec.to_string(),
                "order": g.order(),
                "element_labels": g.labels(),
                "generators": g.generators().iter().map(|&x| g.label(x)).collect::<Vec<_>>(),
                "conjugacy_classes": g.conjugacy_classes().len(),
                "soluble": series.is_soluble(),
                "chief_factors": series.factors(),
                "maximal_subgroup_orders": maximal,
                "frattini_order": frattini,
            });
            emit(common, if format == Format::Json { json_text(&doc) } else { render_text(&doc) })
        }
    }
}

fn analyze_csv(v: &Value) -> String {
    let map = v.as_object().expect("object");
    let cell = |x: &Value| match x {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(a) => a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(map.keys()).expect("in-memory csv");
    w.write_record(map.values().map(cell)).expect("in-memory csv");
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}
