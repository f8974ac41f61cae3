use std::net::SocketAddr;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use monofun::walker::{run_experiment, WalkDirection};
use monofun::{check_monotone_nondegenerate, true_set_size, Direction, TruthTable};
use monofun_cli::api::{self, ApiError, FunctionQuery};
use monofun_cli::{output, service};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Dir {
    Up,
    Down,
}

impl From<Dir> for WalkDirection {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Up => WalkDirection::Up,
            Dir::Down => WalkDirection::Down,
        }
    }
}

/// Navigate the order of non-degenerate monotone Boolean functions.
///
/// Functions are written in set syntax (`{1},{2,3}`, `-k` marks a negative
/// variable) or as expressions (`x1 | x2 & !x3`).
#[derive(Parser, Debug)]
#[command(name = "monofun", version)]
struct Cli {
    /// Number of variables; inferred from the largest index when omitted.
    #[arg(long, global = true)]
    p: Option<u32>,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Seed for walks and experiments.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Unlock long-running oracle modes (enumeration at p=6).
    #[arg(long, global = true)]
    long: bool,

    /// Sign pattern such as `++-` used when rendering.
    #[arg(long, global = true)]
    signs: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Immediate parents with their rule tags.
    Parents { function: String },
    /// Immediate children with their rule tags.
    Children { function: String },
    /// Validate a function, or a truth table given as a 0/1 string.
    Validate {
        function: Option<String>,
        #[arg(long, conflicts_with = "function")]
        table: Option<String>,
    },
    /// Size of the True set.
    Truecount { function: String },
    /// One seeded random walk.
    Walk {
        #[arg(long, value_enum, default_value = "up")]
        dir: Dir,
    },
    /// Random-walk statistics over a range of dimensions.
    Experiment {
        #[arg(long, default_value_t = 2)]
        pmin: u32,
        #[arg(long, default_value_t = 8)]
        pmax: u32,
        #[arg(long, default_value_t = 100)]
        traces: usize,
        #[arg(long, value_enum, default_value = "up")]
        dir: Dir,
    },
    /// Counting table: recurrence over Dedekind numbers plus enumeration.
    Count {
        #[arg(long, default_value_t = 5)]
        maxp: u32,
    },
    /// Start the JSON service.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: SocketAddr,
    },
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serialising JSON") + "\n"
}

fn query(cli: &Cli, text: &str) -> FunctionQuery {
    FunctionQuery {
        text: text.to_string(),
        p: cli.p,
        signs: cli.signs.clone(),
    }
}

fn neighbors(cli: &Cli, text: &str, direction: Direction) -> Result<String, ApiError> {
    let q = query(cli, text);
    Ok(match cli.format {
        Format::Json => pretty(&api::neighbors(&q, direction)?),
        Format::Csv => {
            let (_, signs, list) = api::compute_neighbors(&q, direction)?;
            output::neighbors_csv(&list, &signs)
        }
        Format::Text => {
            let (_, signs, list) = api::compute_neighbors(&q, direction)?;
            output::neighbors_text(&list, &signs)
        }
    })
}

fn run(cli: &Cli) -> Result<String, ApiError> {
    match &cli.command {
        Command::Parents { function } => neighbors(cli, function, Direction::Parent),
        Command::Children { function } => neighbors(cli, function, Direction::Child),
        Command::Validate { table: Some(bits), .. } => {
            let t = TruthTable::parse(bits)?;
            if let Some(p) = cli.p {
                if p != t.p() {
                    return Err(monofun::Error::DimensionMismatch {
                        expected: p,
                        found: t.p(),
                    }
                    .into());
                }
            }
            let report = check_monotone_nondegenerate(&t);
            let text = match cli.format {
                Format::Json => pretty(&report),
                _ => output::report_text(&report),
            };
            match &report.violation {
                None => Ok(text),
                Some(v) => {
                    let e: ApiError = monofun::Error::from(v.clone()).into();
                    print!("{text}");
                    Err(e)
                }
            }
        }
        Command::Validate { function: Some(text), .. } => {
            let q = query(cli, text);
            match cli.format {
                Format::Json => Ok(pretty(&api::function_info(&q)?)),
                _ => {
                    let (f, signs) = q.resolve()?;
                    Ok(output::function_text(&f, &signs, true_set_size(&f).ok()))
                }
            }
        }
        Command::Validate { .. } => Err(ApiError::bad_request(
            "missing_parameter",
            "give a function or --table",
        )),
        Command::Truecount { function } => {
            let q = query(cli, function);
            match cli.format {
                Format::Json => Ok(pretty(&api::function_info(&q)?)),
                _ => {
                    let (f, _) = q.resolve()?;
                    Ok(format!("{}\n", true_set_size(&f)?))
                }
            }
        }
        Command::Walk { dir } => {
            let p = cli
                .p
                .ok_or_else(|| ApiError::bad_request("missing_parameter", "walk needs --p"))?;
            let body = api::walk(p, (*dir).into(), cli.seed)?;
            Ok(match cli.format {
                Format::Json => pretty(&body),
                _ => {
                    let mut out = String::new();
                    let path = body["rendering"].as_array().cloned().unwrap_or_default();
                    let steps = body["steps"].as_array().cloned().unwrap_or_default();
                    if cli.format == Format::Csv {
                        out.push_str("step,from,to,rule,true_set_delta\n");
                    } else if let Some(start) = path.first().and_then(|s| s.as_str()) {
                        out.push_str(&format!("start       {start}\n"));
                    }
                    for (i, s) in steps.iter().enumerate() {
                        let from = path[i].as_str().unwrap_or_default();
                        let to = path[i + 1].as_str().unwrap_or_default();
                        let rule = s["rule"].as_str().unwrap_or_default();
                        let delta = s["trueSetDelta"].as_i64().unwrap_or_default();
                        if cli.format == Format::Csv {
                            out.push_str(&format!("{i},\"{from}\",\"{to}\",{rule},{delta}\n"));
                        } else {
                            out.push_str(&format!("{i:>5} {rule} {delta:>+3} {to}\n"));
                        }
                    }
                    out
                }
            })
        }
        Command::Experiment {
            pmin,
            pmax,
            traces,
            dir,
        } => {
            let stats = run_experiment::<u64>(*pmin..=*pmax, *traces, (*dir).into(), cli.seed)?;
            Ok(match cli.format {
                Format::Json => pretty(&stats),
                Format::Csv => output::experiment_csv(&stats),
                Format::Text => output::experiment_text(&stats),
            })
        }
        Command::Count { maxp } => Ok(match cli.format {
            Format::Json => pretty(&api::counts(*maxp, cli.long)?),
            _ => api::counts_csv(&api::count_rows(*maxp, cli.long)?),
        }),
        Command::Serve { bind } => {
            let rt = tokio::runtime::Runtime::new().map_err(|e| {
                ApiError::bad_request("io", e.to_string())
            })?;
            rt.block_on(service::serve(*bind))
                .map_err(|e| ApiError::bad_request("io", e.to_string()))?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.format == Format::Json {
                eprint!("{}", pretty(&e.to_json()));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
