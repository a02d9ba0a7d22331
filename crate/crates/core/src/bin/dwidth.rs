use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use digraph_widths::cliquewidth::{verify_family_expr, CwFamily};
use digraph_widths::families::{
    gen_complete_bipartite, gen_directed_cycle, gen_directed_path, gen_random_dag,
    gen_random_digraph, gen_switch_all, gen_zadeh,
};
use digraph_widths::graph::{parse_graph, serialize_graph, to_dot, Graph};
use digraph_widths::pursuit::{
    dpw_sweep_certificate_switch_all, ent_strategy_switch_all, measure_with, solve,
    verify_ent_strategy, verify_sweep, GameConfig, SweepSemantics, Variant, DEFAULT_BUDGET,
};
use digraph_widths::report::{run_property_suites, run_report, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "dwidth", version, about = "Directed width measures by exact pursuit games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    SwitchAll,
    Zadeh,
    Bipartite,
    Cycle,
    Path,
    Random,
    Dag,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    SwitchAll,
    Zadeh,
}

impl From<FamilyArg> for CwFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::SwitchAll => CwFamily::SwitchAll,
            FamilyArg::Zadeh => CwFamily::Zadeh,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph. `bipartite` builds K_{n,k} (k defaults to n);
    /// `random` and `dag` take n vertices, edge probability p and a seed.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a measure exactly, or decide the game at a fixed cop count k.
    Solve {
        #[arg(long)]
        measure: Variant,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        non_monotone: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Verify the built-in certificate for the switch-all family.
    Certify {
        #[arg(long)]
        measure: Variant,
        #[arg(long, value_enum, default_value = "switch-all")]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
    /// Cliquewidth expressions.
    Cw {
        #[command(subcommand)]
        command: CwCommand,
    },
    /// Reproduce the bound table for a family.
    Report {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        n_exact: usize,
        #[arg(long, default_value_t = 6)]
        n_cert: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the property suites.
    Suite {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CwCommand {
    /// Compare the family's expression with its generator.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
    /// Print the family's expression in S-expression form.
    Print {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
}

fn generate(family: GenFamily, n: usize, k: Option<usize>, p: f64, seed: u64) -> Result<Graph> {
    Ok(match family {
        GenFamily::SwitchAll => gen_switch_all(n)?,
        GenFamily::Zadeh => gen_zadeh(n)?,
        GenFamily::Bipartite => gen_complete_bipartite(n, k.unwrap_or(n))?,
        GenFamily::Cycle => gen_directed_cycle(n)?,
        GenFamily::Path => gen_directed_path(n)?,
        GenFamily::Random => gen_random_digraph(n, p, seed)?,
        GenFamily::Dag => gen_random_dag(n, p, seed)?,
    })
}

// A closed pipe (`dwidth ... | head`) is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            family,
            n,
            k,
            p,
            seed,
            format,
            out,
        } => {
            let g = generate(family, n, k, p, seed)?;
            let text = match format {
                Format::Json => serialize_graph(&g) + "\n",
                Format::Dot => to_dot(&g),
            };
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => emit(&text)?,
            }
            Ok(true)
        }
        Command::Solve {
            measure,
            graph,
            k,
            non_monotone,
            budget,
        } => {
            let bytes = fs::read(&graph).with_context(|| format!("reading {}", graph.display()))?;
            let g = parse_graph(&bytes)?;
            let config = GameConfig::new(measure, k.unwrap_or(0))
                .monotone(!non_monotone)
                .budget(budget);
            let start = Instant::now();
            let line = match k {
                Some(_) => {
                    let out = solve(&g, &config)?;
                    json!({
                        "measure": measure,
                        "k": config.cops,
                        "winner": out.winner,
                        "states_explored": out.states_explored,
                        "seconds": start.elapsed().as_secs_f64(),
                    })
                }
                None => {
                    let out = measure_with(&g, &config)?;
                    json!({
                        "measure": measure,
                        "value": out.value,
                        "states_explored": out.states_explored,
                        "seconds": start.elapsed().as_secs_f64(),
                    })
                }
            };
            emit(&format!("{line}\n"))?;
            Ok(true)
        }
        Command::Certify { measure, family, n } => {
            if !matches!(family, FamilyArg::SwitchAll) {
                bail!("certificates exist only for the switch-all family");
            }
            let g = gen_switch_all(n)?;
            match measure {
                Variant::Dpw | Variant::Kw => {
                    let semantics = if measure == Variant::Dpw { SweepSemantics::Dpw } else { SweepSemantics::Kw };
                    let cert = dpw_sweep_certificate_switch_all(n)?;
                    let report = verify_sweep(&g, &cert, semantics, true)?;
                    print_json(&report)?;
                    Ok(report.verified)
                }
                Variant::Ent => {
                    let strategy = ent_strategy_switch_all(n)?;
                    let report = verify_ent_strategy(&g, &strategy, strategy.cops());
                    print_json(&report)?;
                    Ok(report.winning)
                }
                other => bail!("no certificate for {other}; use dpw, kw or ent"),
            }
        }
        Command::Cw { command } => match command {
            CwCommand::Verify { family, n } => {
                let report = verify_family_expr(family.into(), n)?;
                print_json(&report)?;
                Ok(report.equal)
            }
            CwCommand::Print { family, n } => {
                emit(&format!("{}\n", CwFamily::from(family).build_expr(n)?))?;
                Ok(true)
            }
        },
        Command::Report {
            family,
            n_exact,
            n_cert,
            budget,
            json,
        } => {
            let report = run_report(family.into(), n_exact, n_cert, budget)?;
            let text = serde_json::to_string_pretty(&report)?;
            match json {
                Some(path) => fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?,
                None => emit(&(text + "\n"))?,
            }
            Ok(report.all_verified)
        }
        Command::Suite { seed } => {
            let summary = run_property_suites(seed);
            print_json(&summary)?;
            Ok(summary.all_passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
