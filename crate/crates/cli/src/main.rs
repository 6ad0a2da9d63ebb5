use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use lxmix::bits::render;
use lxmix::circuit::{cx_count, format_float, plan_circuit, GateList};
use lxmix::compose::{multi_k_hot_plan, product_plan, ProductSpec};
use lxmix::format::{plan_from_json, plan_to_json};
use lxmix::simqaoa::{check_preserves, check_transitions, MaxcutInstance, Qaoa, QaoaSettings};
use lxmix::stats::run_stats;
use lxmix::trotter::orbit_candidate;
use lxmix::{build_family, synthesize, FeasibleSet, MixerPlan, Selection, SynthOptions};

const DEFAULT_SEED: u64 = 20240601;

const EPILOGUE: &str = "\
CSV outputs (floats use 15 significant digits):
  cost-table           x,y,lx,unrestricted_cost,restricted_cost,seed
  stats --output       n,seed,size,trial,chain_cost,optimal_cost,restricted_cost
  stats (stdout)       n,seed,size,trials, then {chain,optimal,restricted}_{mean,std,min,max}
  maxcut-demo          depth,ratio,expectation,min_feasible_probability,evaluations,seed

Feasible-set files hold one bitstring per line, qubit 1 leftmost.
The seed defaults to a fixed constant; LXMIX_SEED overrides that default.";

#[derive(Parser)]
#[command(name = "lxmix", version, about = "Constraint-preserving QAOA mixer synthesis", after_help = EPILOGUE)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SeedArg {
    #[arg(long, env = "LXMIX_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args, Clone, Copy)]
struct SynthArgs {
    /// Use full-orbit projectors only.
    #[arg(long)]
    no_restrict: bool,
    /// auto, exact or greedy.
    #[arg(long, default_value = "auto")]
    selection: Selection,
}

impl SynthArgs {
    fn options(self) -> SynthOptions {
        SynthOptions { restrict: !self.no_restrict, selection: self.selection }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a mixer for a feasible-set file.
    Synth {
        #[arg(long)]
        input: PathBuf,
        /// Plan JSON destination.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        synth: SynthArgs,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Unrestricted and restricted cost of the single-pair mixer for every pair.
    CostTable {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Chain versus optimal costs over random feasible sets.
    Stats {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Comma-separated set sizes; defaults to 2..=2^n.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// auto, exact or greedy.
        #[arg(long, default_value = "auto")]
        selection: Selection,
        /// Per-trial CSV destination.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// XY mixer for states of Hamming weight k.
    Khot {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Mixer for states of Hamming weight k1..=k2.
    Multikhot {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Mixer for a product of feasible sets, one file per factor in qubit order.
    Product {
        #[arg(long, required = true, num_args = 1..)]
        input: Vec<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        synth: SynthArgs,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// QAOA on MAXCUT with one-hot-or-empty blocks of vertices.
    MaxcutDemo {
        /// Instance file; a seeded random graph is used when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Vertex count of the random graph.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,3,5")]
        depths: Vec<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Gate list for one mixer layer of a plan.
    EmitCircuit {
        /// Plan JSON.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that a plan preserves and connects a feasible set.
    Validate {
        /// Plan JSON.
        #[arg(long)]
        input: PathBuf,
        /// Feasible-set file.
        #[arg(long)]
        set: PathBuf,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
}

fn read_set(path: &Path) -> Result<FeasibleSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    FeasibleSet::parse_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: Option<&Path>, text: &str) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn report_plan(plan: &MixerPlan) {
    println!("total_cost: {}", plan.total_cost);
    println!("candidates: {}", plan.candidates.len());
    for c in &plan.candidates {
        let projector: Vec<String> = c.projector.terms().map(|(p, w)| format!("{w} {p}")).collect();
        println!(
            "  {}  cost {:>3}  {:<8} edges {:>3}  P = {}",
            c.lx_string(),
            c.cost,
            c.method.as_str(),
            c.edges.len(),
            projector.join(" + ")
        );
    }
}

fn emit_plan(plan: &MixerPlan, output: Option<&Path>, seed: u64) -> Result<()> {
    report_plan(plan);
    write_file(output, &plan_to_json(plan, Some(seed)))
}

fn cost_table(b: &FeasibleSet, seed: u64) -> Result<String> {
    let family = build_family(b)?;
    let n = b.n();
    let mut out = String::from("x,y,lx,unrestricted_cost,restricted_cost,seed\n");
    let states = b.states();
    for (i, &x) in states.iter().enumerate() {
        for &y in &states[i + 1..] {
            let u = orbit_candidate(b, &family, x ^ y, x, &[], false)?;
            let r = orbit_candidate(b, &family, x ^ y, x, &[], true)?;
            out.push_str(&format!(
                "{},{},{},{},{},{seed}\n",
                render(x, n),
                render(y, n),
                u.lx_string(),
                u.cost,
                r.cost
            ));
        }
    }
    Ok(out)
}

fn maxcut_demo(instance: &MaxcutInstance, depths: &[usize], seed: u64) -> Result<String> {
    let blocks =
        instance.blocks().iter().map(|&k| FeasibleSet::hamming_band(k, 0, 1)).collect::<lxmix::Result<Vec<_>>>()?;
    let plan = product_plan(&ProductSpec::new(blocks)?, SynthOptions::default())?;
    let qaoa = Qaoa::new(instance, &plan)?;
    let results = qaoa.run(depths, &QaoaSettings::default(), seed)?;
    let mut out = String::from("depth,ratio,expectation,min_feasible_probability,evaluations,seed\n");
    for r in &results {
        if (1.0 - r.min_feasible_probability).abs() > 1e-9 {
            bail!("feasible probability dropped to {} at depth {}", r.min_feasible_probability, r.depth);
        }
        out.push_str(&format!(
            "{},{},{},{},{},{seed}\n",
            r.depth,
            format_float(r.ratio),
            format_float(r.expectation),
            format_float(r.min_feasible_probability),
            r.evaluations
        ));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Synth { input, output, synth, seed } => {
            let b = read_set(&input)?;
            let plan = synthesize(&b, synth.options())?;
            emit_plan(&plan, output.as_deref(), seed.seed)?;
        }
        Command::CostTable { input, output, seed } => {
            let b = read_set(&input)?;
            write_or_print(output.as_deref(), &cost_table(&b, seed.seed)?)?;
        }
        Command::Stats { n, sizes, trials, selection, output, seed } => {
            let sizes = if sizes.is_empty() {
                if n >= usize::BITS as usize {
                    bail!("--sizes is required for n = {n}");
                }
                (2..=1usize << n).collect()
            } else {
                sizes
            };
            let report = run_stats(n, &sizes, trials, seed.seed, selection)?;
            write_file(output.as_deref(), &report.trials_csv())?;
            print!("{}", report.summary_csv());
        }
        Command::Khot { n, k, output, seed } => {
            emit_plan(&multi_k_hot_plan(n, k, k)?, output.as_deref(), seed.seed)?;
        }
        Command::Multikhot { n, k1, k2, output, seed } => {
            emit_plan(&multi_k_hot_plan(n, k1, k2)?, output.as_deref(), seed.seed)?;
        }
        Command::Product { input, output, synth, seed } => {
            let factors = input.iter().map(|p| read_set(p)).collect::<Result<Vec<_>>>()?;
            let plan = product_plan(&ProductSpec::new(factors)?, synth.options())?;
            emit_plan(&plan, output.as_deref(), seed.seed)?;
        }
        Command::MaxcutDemo { input, n, depths, output, seed } => {
            let instance = match input {
                Some(p) => {
                    let text = fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
                    MaxcutInstance::parse_text(&text)?
                }
                None => MaxcutInstance::barabasi_albert(n, 4, vec![n / 2, n - n / 2], seed.seed)?,
            };
            write_or_print(output.as_deref(), &maxcut_demo(&instance, &depths, seed.seed)?)?;
        }
        Command::EmitCircuit { input, beta, output } => {
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let (plan, _) = plan_from_json(&text)?;
            let circuit: GateList = plan_circuit(&plan, beta)?;
            write_file(output.as_deref(), &circuit.to_text())?;
            println!("cx: {}", cx_count(&circuit));
        }
        Command::Validate { input, set, trials, seed } => {
            let text = fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let (plan, _) = plan_from_json(&text)?;
            let b = read_set(&set)?;
            if plan.n != b.n() {
                bail!("plan acts on {} qubits but the feasible set has {}", plan.n, b.n());
            }
            let leakage = check_preserves(&plan, &b, trials, seed.seed)?;
            let connected = check_transitions(&plan, &b, seed.seed)?;
            let preserves = leakage <= 1e-10;
            println!("max_leakage: {leakage:e}");
            println!("preserves: {}", if preserves { "pass" } else { "fail" });
            println!("transitions: {}", if connected { "pass" } else { "fail" });
            if !(preserves && connected) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
