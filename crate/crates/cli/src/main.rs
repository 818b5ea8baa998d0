//! `lcp`: command-line front end for load coloring.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use load_coloring::dimacs::{parse_graph, to_dimacs};
use load_coloring::exact::{decide_exact, max_k_exact, ExactOutcome, DEFAULT_BUDGET};
use load_coloring::generate::{generate, gnm, Family};
use load_coloring::par::Execution;
use load_coloring::pipeline::{decide_batch, instance_json, trace_json};
use load_coloring::{approx_general, approx_two, decide, kernelize, verify_coloring, Coloring, Error, Graph, Instance, Outcome};
use num_rational::Ratio;
use serde_json::{json, Value};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_NOINPUT: u8 = 66;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "lcp", version, about = "Kernelization, decision and approximation for (c,k)-load coloring")]
struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    human: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Graph in DIMACS edge format.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance: kernelize, then search the kernel exhaustively.
    Decide {
        /// Graph in DIMACS edge format.
        #[arg(long, required_unless_present = "manifest", requires_all = ["c", "k"])]
        graph: Option<PathBuf>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Batch file with one `path c k` triple per line; prints JSON lines.
        #[arg(long, conflicts_with_all = ["graph", "c", "k"])]
        manifest: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Reduce and certify; prints the kernel when the instance stays open.
    Kernelize {
        #[command(flatten)]
        inst: InstanceArgs,
        /// Write the kernel graph (DIMACS) here.
        #[arg(long)]
        kernel_out: Option<PathBuf>,
        /// Write the reduction trace (JSON) here.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Approximate the largest k: general (`--c`) or two colors (`--epsilon`).
    Approx {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, required_unless_present = "epsilon", conflicts_with = "epsilon")]
        c: Option<usize>,
        /// Positive rational such as `1`, `0.5` or `1/2`; uses two colors.
        #[arg(long, value_parser = parse_epsilon)]
        epsilon: Option<Ratio<u64>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustive search without kernelization.
    Exact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        c: usize,
        /// Threshold to decide; without it the largest feasible k is computed.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Generate a seeded graph in DIMACS format.
    Gen {
        /// gnp, gnm, matching, stars, clique, path, cycle, bipartite, bipartite-gnp
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Comma-separated star sizes.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring; exits 0 if valid, 1 if not.
    Verify {
        #[command(flatten)]
        inst: InstanceArgs,
        /// JSON array of 1-based colors, a JSON object with a `coloring` field,
        /// or whitespace-separated colors.
        #[arg(long)]
        coloring: PathBuf,
    },
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_PARSE,
            Error::BudgetExceeded => EXIT_BUDGET,
            Error::InvalidParameter(_) | Error::Precondition(_) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

type CliResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("lcp: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("lcp: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(EXIT_NOINPUT, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_INTERNAL, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_instance(args: &InstanceArgs) -> Result<Instance, Failure> {
    Ok(Instance::new(load_graph(&args.graph)?, args.c, args.k)?)
}

fn print(human: bool, value: &Value, render: impl FnOnce() -> String) {
    if human {
        println!("{}", render());
    } else {
        println!("{value}");
    }
}

fn outcome_code(out: &Outcome) -> u8 {
    match out {
        Outcome::Yes { .. } | Outcome::Kernel { .. } => EXIT_YES,
        Outcome::No { .. } => EXIT_NO,
        Outcome::BudgetExceeded { .. } => EXIT_BUDGET,
    }
}

fn render_outcome(out: &Outcome) -> String {
    match out {
        Outcome::Yes { coloring, provenance } => {
            let colors: Vec<String> = coloring.to_external().iter().map(|c| c.to_string()).collect();
            format!("verdict    yes\nprovenance {provenance}\ncoloring   {}", colors.join(" "))
        }
        Outcome::No { reason } => format!("verdict    no\nreason     {}", reason.as_str()),
        Outcome::Kernel { kernel, trace } | Outcome::BudgetExceeded { kernel, trace } => format!(
            "verdict    {}\nkernel     n={} m={} c={} k={}\nrules      {}",
            out.verdict(),
            kernel.graph.n(),
            kernel.graph.m(),
            kernel.c,
            kernel.k,
            trace.steps.len()
        ),
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Decide { graph, c, k, manifest, budget } => match (graph, c, k, manifest) {
            (Some(graph), Some(c), Some(k), None) => {
                let inst = Instance::new(load_graph(graph)?, *c, *k)?;
                let out = decide(&inst, *budget)?;
                print(cli.human, &out.to_json(&inst), || render_outcome(&out));
                Ok(outcome_code(&out))
            }
            (None, None, None, Some(path)) => run_manifest(path, *budget),
            _ => Err(Failure::new(EXIT_USAGE, "decide needs either --graph/--c/--k or --manifest")),
        },
        Command::Kernelize { inst: args, kernel_out, trace_out } => {
            let inst = load_instance(args)?;
            let out = kernelize(&inst)?;
            if let Outcome::Kernel { kernel, trace } = &out {
                if let Some(path) = kernel_out {
                    write(path, &to_dimacs(&kernel.graph))?;
                }
                if let Some(path) = trace_out {
                    let doc = json!({ "kernel": instance_json(kernel), "trace": trace_json(trace) });
                    write(path, &format!("{doc}\n"))?;
                }
            }
            print(cli.human, &out.to_json(&inst), || render_outcome(&out));
            Ok(outcome_code(&out))
        }
        Command::Approx { graph, c, epsilon, budget } => {
            let g = load_graph(graph)?;
            let approx = match (c, epsilon) {
                (_, Some(eps)) => approx_two(&g, *eps, *budget)?,
                (Some(c), None) => approx_general(&g, *c, *budget)?,
                (None, None) => return Err(Failure::new(EXIT_USAGE, "approx needs --c or --epsilon")),
            };
            print(cli.human, &approx.to_json(), || format!("k      {}\nbranch {:?}\nexact  {}", approx.k, approx.branch, approx.exact));
            Ok(EXIT_YES)
        }
        Command::Exact { graph, c, k, budget } => {
            let g = load_graph(graph)?;
            match k {
                Some(k) => {
                    let inst = Instance::new(g, *c, *k)?;
                    let (value, code) = match decide_exact(&inst, *budget) {
                        ExactOutcome::Yes(col) => (json!({ "verdict": "yes", "k": k, "coloring": col.to_external() }), EXIT_YES),
                        ExactOutcome::No => (json!({ "verdict": "no", "k": k }), EXIT_NO),
                        ExactOutcome::BudgetExceeded => (json!({ "verdict": "budget", "k": k }), EXIT_BUDGET),
                    };
                    print(cli.human, &value, || format!("verdict {}", value["verdict"].as_str().unwrap_or("")));
                    Ok(code)
                }
                None => {
                    if *c == 0 {
                        return Err(Failure::new(EXIT_USAGE, "c must be at least 1"));
                    }
                    let (best, col) = max_k_exact(&g, *c, *budget).map_err(|_| Error::BudgetExceeded)?;
                    let value = json!({ "k": best, "coloring": col.to_external() });
                    print(cli.human, &value, || format!("k {best}"));
                    Ok(EXIT_YES)
                }
            }
        }
        Command::Gen { family, seed, n, m, p, q, a, b, sizes, out } => {
            let need = |v: Option<usize>, name: &str| v.ok_or_else(|| Failure::new(EXIT_USAGE, format!("family {family} needs --{name}")));
            let prob = || p.ok_or_else(|| Failure::new(EXIT_USAGE, format!("family {family} needs --p")));
            let g = match family.as_str() {
                "gnm" => gnm(need(*n, "n")?, need(*m, "m")?, *seed)?,
                name => {
                    let fam = match name {
                        "gnp" => Family::Gnp { n: need(*n, "n")?, p: prob()? },
                        "matching" => Family::Matching { q: need(*q, "q")? },
                        "stars" => Family::StarForest { sizes: sizes.clone() },
                        "clique" => Family::Clique { n: need(*n, "n")? },
                        "path" => Family::Path { n: need(*n, "n")? },
                        "cycle" => Family::Cycle { n: need(*n, "n")? },
                        "bipartite" => Family::CompleteBipartite { a: need(*a, "a")?, b: need(*b, "b")? },
                        "bipartite-gnp" => Family::BipartiteGnp { a: need(*a, "a")?, b: need(*b, "b")?, p: prob()? },
                        other => return Err(Failure::new(EXIT_USAGE, format!("unknown family {other}"))),
                    };
                    generate(&fam, *seed)?
                }
            };
            let text = to_dimacs(&g);
            match out {
                Some(path) => write(path, &text)?,
                None => print!("{text}"),
            }
            Ok(EXIT_YES)
        }
        Command::Verify { inst: args, coloring } => {
            let inst = load_instance(args)?;
            let col = parse_coloring(&read(coloring)?).map_err(|msg| Failure::new(EXIT_PARSE, format!("{}: {msg}", coloring.display())))?;
            let (value, code) = match verify_coloring(&inst, &col) {
                Ok(v) => (json!({ "valid": v.valid, "counts": v.counts }), if v.valid { EXIT_YES } else { EXIT_NO }),
                Err(e) => (json!({ "valid": false, "error": e.to_string() }), EXIT_NO),
            };
            print(cli.human, &value, || format!("valid  {}\ncounts {}", value["valid"], value["counts"]));
            Ok(code)
        }
    }
}

/// Accepts `[1, 2, ...]`, `{"coloring": [...]}` or whitespace-separated colors, all 1-based.
fn parse_epsilon(text: &str) -> Result<Ratio<u64>, String> {
    let bad = || format!("`{text}` is not a rational number");
    let Some((whole, frac)) = text.split_once('.') else {
        return text.parse().map_err(|_| bad());
    };
    if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let denom = 10u64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
    let whole: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
    let frac: u64 = frac.parse().map_err(|_| bad())?;
    let numer = whole.checked_mul(denom).and_then(|w| w.checked_add(frac)).ok_or_else(bad)?;
    Ok(Ratio::new(numer, denom))
}

fn parse_coloring(text: &str) -> Result<Coloring, String> {
    let trimmed = text.trim_start();
    let colors: Vec<usize> = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(trimmed).map_err(|e| e.to_string())?;
        let array = if value.is_object() { value.get("coloring").cloned().ok_or("object has no `coloring` field")? } else { value };
        serde_json::from_value(array).map_err(|e| e.to_string())?
    } else {
        trimmed.split_whitespace().map(|t| t.parse::<usize>().map_err(|e| format!("`{t}`: {e}"))).collect::<Result<_, _>>()?
    };
    Ok(Coloring::from_external(&colors))
}

fn run_manifest(path: &Path, budget: u64) -> CliResult {
    let text = read(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let mut entries = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [file, c, k] => c.parse::<usize>().ok().zip(k.parse::<usize>().ok()).map(|(c, k)| (base.join(file), c, k)),
            _ => None,
        };
        let (file, c, k) = parsed.ok_or_else(|| Failure::new(EXIT_PARSE, format!("{}:{}: expected `path c k`", path.display(), no + 1)))?;
        entries.push((file, c, k));
    }
    let mut code = EXIT_YES;
    let mut loaded = Vec::new();
    let mut insts = Vec::new();
    for (file, c, k) in &entries {
        match load_graph(file).and_then(|g| Ok(Instance::new(g, *c, *k)?)) {
            Ok(inst) => {
                loaded.push(Ok(insts.len()));
                insts.push(inst);
            }
            Err(f) => {
                code = code.max(f.code);
                loaded.push(Err(f.message));
            }
        }
    }
    let results = decide_batch(&insts, budget, Execution::Parallel);
    for ((file, c, k), slot) in entries.iter().zip(loaded) {
        let mut line = json!({ "path": file.display().to_string(), "c": c });
        match slot {
            Ok(i) => match &results[i] {
                Ok(out) => {
                    let body = out.to_json(&insts[i]);
                    for (key, v) in body.as_object().expect("outcome json is an object") {
                        line[key] = v.clone();
                    }
                }
                Err(e) => {
                    line["k"] = json!(k);
                    line["error"] = json!(e.to_string());
                    code = code.max(EXIT_INTERNAL);
                }
            },
            Err(msg) => {
                line["k"] = json!(k);
                line["error"] = json!(msg);
            }
        }
        println!("{line}");
    }
    Ok(code)
}
