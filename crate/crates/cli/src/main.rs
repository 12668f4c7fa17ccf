mod generate;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use stabledp::reductions::{build_reduction, exact_oracle, Caps, GraphInstance, ProblemInstance};
use stabledp::rna::{nussinov_fold, nussinov_opt, rna_fold, RnaInstance};
use stabledp::sensitivity::{
    naive_vs_stable_comparison, sensitivity_report, ConstantSolver, NaiveSolver, SensitivityReport, Solver, StableSolver,
};
use stabledp::stable::{mwc, StableSolverConfig};
use stabledp::{Error, Solution};

use generate::{generate, Family, StringProblem};

#[derive(Parser, Debug)]
#[command(name = "stabledp", version, about = "Stable-on-average dynamic programming solvers and experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Uniform limit applied to every instance size cap.
    #[arg(long, global = true, env = "STABLEDP_CAP")]
    cap: Option<u64>,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a deterministic random instance.
    Generate(GenerateArgs),
    /// Run the stable solver on an instance.
    Solve(SolveArgs),
    /// Compute an exact optimum with the textbook dynamic program.
    Oracle(InstanceArgs),
    /// Measure average sensitivity and approximation ratios.
    Sensitivity(SensitivityArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    Lis,
    Intervals,
    Lcs,
    Lps,
    Knapsack,
    Rna,
    Graph,
}

impl Problem {
    fn tag(self) -> &'static str {
        match self {
            Problem::Lis => "lis",
            Problem::Intervals => "intervals",
            Problem::Lcs => "lcs",
            Problem::Lps => "lps",
            Problem::Knapsack => "knapsack",
            Problem::Rna => "rna",
            Problem::Graph => "graph",
        }
    }
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long)]
    family: Family,
    /// Instance size (sequence length, item count or string length).
    #[arg(long, short = 'n')]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Problem for `random-strings`: lcs or lps.
    #[arg(long)]
    problem: Option<Problem>,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Instance JSON file; stdin when absent or `-`.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Expected problem; required for instances without a `problem` field
    /// unless they are raw graphs.
    #[arg(long)]
    problem: Option<Problem>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, default_value_t = 0.3)]
    delta: f64,
    /// Fixed ε instead of the sampled one.
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolverKind {
    Stable,
    Naive,
    /// Always returns the empty solution.
    Constant,
}

#[derive(Args, Debug)]
struct SensitivityArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, default_value_t = 0.3)]
    delta: f64,
    #[arg(long)]
    eps: Option<f64>,
    /// Samples per output distribution.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Runs of the approximation-ratio experiment.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = SolverKind::Stable)]
    solver: SolverKind,
    /// Report the textbook DP and the stable solver side by side.
    #[arg(long)]
    compare: bool,
    /// Record wall-clock time in the report (makes output run-dependent).
    #[arg(long)]
    timing: bool,
}

/// Failure with the process exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InstanceTooLarge { .. } | Error::SupportTooLarge { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

enum Loaded {
    Problem(ProblemInstance),
    Graph(GraphInstance),
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::usage(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn load(args: &InstanceArgs) -> Result<Loaded, Failure> {
    let text = read_input(&args.input)?;
    let mut value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("invalid JSON: {e}")))?;
    let obj = value.as_object_mut().ok_or_else(|| Failure::usage("instance must be a JSON object"))?;
    let tagged = obj.get("problem").and_then(|p| p.as_str()).map(str::to_owned);
    let parse_err = |e: serde_json::Error| Failure::usage(format!("invalid instance: {e}"));
    match (tagged, args.problem) {
        (Some(tag), Some(p)) if tag != p.tag() => Err(Failure::usage(format!("instance is `{tag}` but --problem is `{}`", p.tag()))),
        (None, None) | (None, Some(Problem::Graph)) => {
            Ok(Loaded::Graph(serde_json::from_value(value).map_err(parse_err)?))
        }
        (None, Some(p)) => {
            obj.insert("problem".into(), p.tag().into());
            Ok(Loaded::Problem(serde_json::from_value(value).map_err(parse_err)?))
        }
        (Some(_), _) => Ok(Loaded::Problem(serde_json::from_value(value).map_err(parse_err)?)),
    }
}

#[derive(Serialize)]
struct SolveOutput {
    problem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<Solution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<usize>>,
    objective: f64,
    opt: Option<f64>,
    seed: u64,
    delta: f64,
    eps: Option<f64>,
}

#[derive(Serialize)]
struct OracleOutput {
    problem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<Solution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<usize>>,
    objective: f64,
}

fn solve(args: &SolveArgs, caps: &Caps) -> Result<SolveOutput, Failure> {
    let config = StableSolverConfig { delta: args.delta, seed: args.seed, record_trace: false, eps_override: args.eps };
    config.validate()?;
    let mut out = SolveOutput {
        problem: String::new(),
        solution: None,
        pairs: None,
        chain: None,
        objective: 0.0,
        opt: None,
        seed: args.seed,
        delta: args.delta,
        eps: None,
    };
    match load(&args.instance)? {
        Loaded::Graph(g) => {
            let (dag, _) = g.build()?;
            let run = mwc(&dag, &config)?;
            out.problem = "graph".into();
            out.objective = run.chain.total_weight;
            out.opt = Some(dag.opt_value(&dag.full_universe()));
            out.chain = Some(run.chain.vertices);
            out.eps = run.eps;
        }
        Loaded::Problem(inst @ ProblemInstance::Rna { .. }) => {
            inst.validate()?;
            let ProblemInstance::Rna { string, relation } = &inst else { unreachable!() };
            let rna = RnaInstance::new(string, relation);
            let run = rna_fold(&rna, &config, caps)?;
            out.problem = inst.name().into();
            out.objective = run.pairs.len() as f64;
            out.opt = Some(nussinov_opt(&rna) as f64);
            out.pairs = Some(run.pairs);
            out.eps = run.eps;
        }
        Loaded::Problem(inst) => {
            let reduction = build_reduction(&inst, caps, 1.0)?;
            let run = mwc(&reduction.dag, &config)?;
            let solution = reduction.decode(&run.chain);
            out.problem = inst.name().into();
            out.objective = inst.objective(&solution);
            out.opt = exact_oracle(&inst, caps).ok().map(|o| o.objective);
            out.solution = Some(solution);
            out.eps = run.eps;
        }
    }
    Ok(out)
}

fn oracle(args: &InstanceArgs, caps: &Caps) -> Result<OracleOutput, Failure> {
    let mut out = OracleOutput { problem: String::new(), solution: None, pairs: None, chain: None, objective: 0.0 };
    match load(args)? {
        Loaded::Graph(g) => {
            let (dag, _) = g.build()?;
            let best = dag.opt_chain(&dag.full_universe());
            out.problem = "graph".into();
            out.objective = best.total_weight;
            out.chain = Some(best.vertices);
        }
        Loaded::Problem(ProblemInstance::Rna { string, relation }) => {
            let rna = RnaInstance::new(&string, &relation);
            let pairs = nussinov_fold(&rna);
            out.problem = "rna".into();
            out.objective = pairs.len() as f64;
            out.pairs = Some(pairs);
        }
        Loaded::Problem(inst) => {
            let result = exact_oracle(&inst, caps)?;
            out.problem = inst.name().into();
            out.objective = result.objective;
            out.solution = Some(result.solution);
        }
    }
    Ok(out)
}

fn sensitivity(args: &SensitivityArgs, caps: &Caps) -> Result<String, Failure> {
    if args.samples == 0 || args.trials == 0 {
        return Err(Failure::usage("--samples and --trials must be at least 1"));
    }
    let Loaded::Problem(inst) = load(&args.instance)? else {
        return Err(Failure::usage("sensitivity needs a problem instance, not a raw graph"));
    };
    let stable = StableSolver { delta: args.delta, eps_override: args.eps, caps: *caps };
    StableSolverConfig { delta: args.delta, seed: args.seed, record_trace: false, eps_override: args.eps }.validate()?;
    let start = Instant::now();
    let stamp = |mut r: SensitivityReport| {
        r.runtime_ms = args.timing.then(|| start.elapsed().as_millis() as u64);
        r
    };
    let format = args.instance.format;
    if args.compare {
        let mut cmp = naive_vs_stable_comparison(&inst, &stable, args.samples, args.seed)?;
        cmp.naive = stamp(cmp.naive);
        cmp.stable = stamp(cmp.stable);
        return Ok(match format {
            Format::Json => to_json(&cmp),
            Format::Csv => {
                let body = |r: &SensitivityReport| r.to_csv().lines().nth(1).unwrap_or_default().to_owned();
                format!("solver,{}\nnaive,{}\nstable,{}\n", SensitivityReport::CSV_HEADER, body(&cmp.naive), body(&cmp.stable))
            }
        });
    }
    let naive = NaiveSolver { caps: *caps };
    let constant = ConstantSolver(Solution::empty());
    let solver: &dyn Solver = match args.solver {
        SolverKind::Stable => &stable,
        SolverKind::Naive => &naive,
        SolverKind::Constant => &constant,
    };
    let report = stamp(sensitivity_report(&inst, solver, &stable, args.samples, args.trials, args.seed)?);
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
    })
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let caps = cli.cap.map_or_else(Caps::default, Caps::uniform);
    match &cli.command {
        Command::Generate(g) => {
            let strings = match g.problem {
                None | Some(Problem::Lcs) => StringProblem::Lcs,
                Some(Problem::Lps) => StringProblem::Lps,
                Some(other) => return Err(Failure::usage(format!("random-strings cannot produce `{}`", other.tag()))),
            };
            Ok(to_json(&generate(g.family, g.n, g.seed, strings)))
        }
        Command::Solve(args) => Ok(to_json(&solve(args, &caps)?)),
        Command::Oracle(args) => Ok(to_json(&oracle(args, &caps)?)),
        Command::Sensitivity(args) => sensitivity(args, &caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    let result = pool.install(|| run(&cli)).and_then(|text| {
        let written = match &cli.out {
            Some(path) => std::fs::write(path, &text),
            None => std::io::stdout().write_all(text.as_bytes()),
        };
        written.map_err(|e| Failure::usage(format!("cannot write output: {e}")))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
