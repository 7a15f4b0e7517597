use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fitfunc_core::heights::gamma_series;
use fitfunc_core::parse::{parse_functorial, parse_group_file};
use fitfunc_core::radicals::{self, Radical};
use fitfunc_core::suite::{run_suite, Status, Suite};
use fitfunc_core::{catalog, functorial, Caps, Context, Error, FunctorialExpr, Group};

/// Fitting-like functorials on finite permutation groups.
///
/// Every flag can also be set through an environment variable with the
/// FITFUNC_ prefix, e.g. FITFUNC_MAX_ORDER=120.
#[derive(Parser)]
#[command(name = "fitfunc", version)]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Largest order for which all subgroups are enumerated.
    #[arg(long, global = true, env = "FITFUNC_MAX_ORDER", default_value_t = 200)]
    max_order: u64,
    /// Largest order for which group elements are enumerated.
    #[arg(
        long,
        global = true,
        env = "FITFUNC_MAX_ELEMENTS",
        default_value_t = 1_000_000
    )]
    max_elements: u64,
    /// Largest degree of a coset-action quotient.
    #[arg(
        long,
        global = true,
        env = "FITFUNC_MAX_DEGREE",
        default_value_t = 5000
    )]
    max_degree: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArg {
    /// Group file: `degree: <n>` followed by `gen: <cycles>` lines.
    #[arg(long, env = "FITFUNC_GROUP")]
    group: Option<PathBuf>,
    /// Catalog entry, see `catalog list`.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a radical or the value of a functorial expression.
    Compute {
        #[command(flatten)]
        input: GroupArg,
        /// Radical name: F, Fstar, Ftilde, Phi, Soc, M, O_pi{..}, Phi_pi{..},
        /// or one of the alternative characterizations (Fstar_oracle, ...).
        #[arg(
            long,
            conflicts_with = "functorial",
            required_unless_present = "functorial"
        )]
        radical: Option<String>,
        /// Functorial expression, e.g. "Phi_pi{2}*Fstar".
        #[arg(long, env = "FITFUNC_FUNCTORIAL")]
        functorial: Option<String>,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Height of the series built from a functorial.
    Height {
        #[command(flatten)]
        input: GroupArg,
        #[arg(long, env = "FITFUNC_FUNCTORIAL", default_value = "Fstar")]
        functorial: String,
        /// Also print the orders of the series terms.
        #[arg(long)]
        series: bool,
    },
    /// Run verification suites over the catalog.
    Verify {
        /// Suite name, comma-separated names, or `all`.
        #[arg(long, env = "FITFUNC_SUITE", default_value = "all")]
        suite: String,
        /// Restrict to these catalog entries (comma-separated).
        #[arg(long)]
        only: Option<String>,
        /// Write the JSON report here.
        #[arg(long, env = "FITFUNC_OUT")]
        out: Option<PathBuf>,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Parse a functorial expression or group file and print its canonical form.
    ParseCheck {
        #[arg(long, required_unless_present = "group")]
        functorial: Option<String>,
        #[arg(long)]
        group: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entries with their orders.
    List,
}

/// Input problems exit with 2, exhausted caps with 3.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_cap() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn load(input: &GroupArg) -> Result<Group, Failure> {
    if let Some(path) = &input.group {
        let text = fs::read_to_string(path)
            .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
        return parse_group_file(&text)
            .map_err(|e| input_error(format!("{}: {e}", path.display())));
    }
    let name = input.name.as_deref().unwrap_or_default();
    let entry = catalog::find(name)
        .ok_or_else(|| input_error(format!("no catalog entry named {name:?}")))?;
    Ok(entry.build()?)
}

fn print_subgroup(label: &str, h: &Group) {
    println!("{label}");
    println!("order: {}", h.order());
    let gens = h.generator_strings();
    println!(
        "generators: {}",
        if gens.is_empty() {
            "()".to_string()
        } else {
            gens.join(", ")
        }
    );
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let caps = Caps {
        max_order: cli.caps.max_order,
        max_elements: cli.caps.max_elements,
        max_degree: cli.caps.max_degree,
    };
    let ctx = Context::new(caps);
    match cli.command {
        Command::Compute {
            input,
            radical,
            functorial,
            json,
        } => {
            let g = load(&input)?;
            let (label, value, witness) = match (radical, functorial) {
                (Some(name), _) => {
                    let r = Radical::parse(&name)?;
                    let result = radicals::compute(&g, &r, &caps)?;
                    (name, result.value, result.witness)
                }
                (None, Some(text)) => {
                    let e = parse_functorial(&text)?;
                    let value = functorial::evaluate(&ctx, &e, &g)?;
                    (e.to_string(), value, Vec::new())
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            if json {
                let out = serde_json::json!({
                    "name": label,
                    "group_order": g.order(),
                    "value": value.summary(),
                    "witness": witness,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print_subgroup(
                    &format!("{label} of a group of order {}", g.order()),
                    &value,
                );
                for w in &witness {
                    println!(
                        "factor {}/{}: inneriser order {}{}",
                        w.top_order,
                        w.bottom_order,
                        w.inneriser_order,
                        match w.non_frattini {
                            Some(true) => ", non-Frattini",
                            Some(false) => ", Frattini",
                            None => "",
                        }
                    );
                }
            }
            Ok(0)
        }
        Command::Height {
            input,
            functorial,
            series,
        } => {
            let g = load(&input)?;
            let e: FunctorialExpr = parse_functorial(&functorial)?;
            let s = gamma_series(&ctx, &g, &e)?;
            println!("{}", s.height());
            if series {
                let orders: Vec<String> = s.orders().iter().map(u64::to_string).collect();
                println!("series orders: {}", orders.join(" < "));
            }
            Ok(0)
        }
        Command::Verify { suite, only, out } => {
            let suites = Suite::parse_selection(&suite)?;
            let mut entries = catalog::catalog();
            if let Some(only) = only {
                let names: Vec<&str> = only.split(',').map(str::trim).collect();
                if let Some(bad) = names.iter().find(|n| catalog::find(n).is_none()) {
                    return Err(input_error(format!("no catalog entry named {bad:?}")));
                }
                entries.retain(|e| names.contains(&e.name.as_str()));
            }
            let report = run_suite(&entries, caps, &suites);
            for g in &report.groups {
                for c in &g.checks {
                    match c.status {
                        Status::Fail => println!(
                            "FAIL {} {} {}: {}",
                            g.name,
                            c.suite.name(),
                            c.check,
                            c.detail
                        ),
                        Status::Skipped => println!(
                            "SKIPPED {} {} ({})",
                            g.name,
                            c.suite.name(),
                            c.detail["reason"]
                        ),
                        Status::Pass => {}
                    }
                }
            }
            let s = &report.summary;
            println!("pass {} fail {} skipped {}", s.pass, s.fail, s.skipped);
            if let Some(path) = out {
                fs::write(&path, report.to_json())
                    .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            for e in catalog::catalog() {
                println!("{:<12} {:>4}", e.name, e.order);
            }
            Ok(0)
        }
        Command::ParseCheck { functorial, group } => {
            if let Some(text) = functorial {
                println!("{}", parse_functorial(&text)?);
            }
            if let Some(path) = group {
                let g = load(&GroupArg {
                    group: Some(path),
                    name: None,
                })?;
                print!("{}", fitfunc_core::parse::write_group_file(&g));
                println!("# order {}", g.order());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
