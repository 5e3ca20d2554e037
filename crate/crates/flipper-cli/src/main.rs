//! `flipper` — run Flipper games, predictions, verification suites and
//! benchmarks from the command line.
//!
//! Graphs are given either as a file (`n m` header, one `u v` edge per
//! line, `#` comments) or as a generator spec like `random_tree:100`,
//! seeded by `--seed`. Exit codes: 0 for a Flipper win (or a clean
//! pass), 1 for input errors and forfeits, 2 for hitting a round limit
//! or failing a verification check.

use std::fs;
use std::io::{BufRead, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use flipper_core::game::{
    run_game, ArenaView, ConnectorMove, ConnectorStrategy, FlipSchedule, FlipperMove,
    FlipperPlayer, FlipperStrategy, GameConfig, GameVariant, Outcome, Transcript,
};
use flipper_core::graph::{Family, Graph};
use flipper_core::predictor::{predict, PredictConfig};
use flipper_core::set::VertexSet;
use flipper_core::strategy::{make_connector, ConnectorKind, FlipStar, SingleFlipWrapper};
use flipper_core::verify::{clustered_targets, fit_loglog_slope, run_all, run_suite, time_predict_ns};
use flipper_core::{FlipSet, VertexOrder};

#[derive(Parser)]
#[command(name = "flipper", version, about = "Flipper games on finite graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one game and write its transcript as JSON.
    Play(PlayArgs),
    /// Print the predicted separating flips for a target set.
    Predict(PredictArgs),
    /// Run the named verification suite and report as JSON.
    Verify(VerifyArgs),
    /// Time games and predictions across graph families, as CSV.
    Bench(BenchArgs),
    /// Play Connector yourself against the built-in Flipper.
    Interactive(InteractiveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
#[clap(rename_all = "snake_case")]
enum VariantArg {
    Flipper,
    InducedSubgraphFlipper,
    PseudoFlipper,
    Separation,
}

impl From<VariantArg> for GameVariant {
    fn from(v: VariantArg) -> GameVariant {
        match v {
            VariantArg::Flipper => GameVariant::Flipper,
            VariantArg::InducedSubgraphFlipper => GameVariant::InducedSubgraphFlipper,
            VariantArg::PseudoFlipper => GameVariant::PseudoFlipper,
            VariantArg::Separation => GameVariant::Separation,
        }
    }
}

#[derive(Args)]
struct PlayArgs {
    /// Graph file or generator spec.
    graph: String,
    #[arg(long)]
    radius: usize,
    #[arg(long, value_enum, default_value = "flipper")]
    variant: VariantArg,
    /// `flip_star`, `single_flip`, or `scripted:<transcript.json>`.
    #[arg(long, default_value = "flip_star")]
    flipper: String,
    /// `random`, `random:<seed>`, `greedy`, `farthest`, or
    /// `scripted:<transcript.json>`.
    #[arg(long, default_value = "greedy")]
    connector: String,
    #[arg(long, default_value_t = 100_000)]
    max_rounds: usize,
    /// Seeds graph generation and the random connector.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex order file: one id per line, most important first.
    #[arg(long)]
    order: Option<PathBuf>,
    /// Write the transcript here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PredictArgs {
    /// Graph file or generator spec.
    graph: String,
    #[arg(long)]
    radius: usize,
    /// Target vertices, comma-separated or repeated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    z: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    order: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the named suites, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fail (exit 2) if the suites take longer than this many milliseconds.
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated family names (`path`, `cycle`, `grid`,
    /// `random_tree`, `bounded_degree_random`).
    #[arg(long, value_delimiter = ',', default_value = "random_tree")]
    families: Vec<String>,
    #[arg(long, value_delimiter = ',', default_values_t = [100usize, 200, 400, 800, 1600])]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    radius: usize,
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InteractiveArgs {
    /// Graph file or generator spec.
    graph: String,
    #[arg(long)]
    radius: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    order: Option<PathBuf>,
    /// Write the transcript here when the session ends.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Play(args) => cmd_play(args),
        Cmd::Predict(args) => cmd_predict(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Bench(args) => cmd_bench(args),
        Cmd::Interactive(args) => cmd_interactive(args),
    }
}

// ---------------------------------------------------------------------------
// shared plumbing

fn load_graph(spec: &str, seed: u64) -> Result<Graph> {
    let path = Path::new(spec);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        return Ok(Graph::parse_text(&text)?);
    }
    if spec.contains(':') {
        return Ok(Family::parse(spec, seed)?.generate()?);
    }
    bail!("{spec:?} is neither a readable file nor a generator spec like 'random_tree:100'")
}

fn load_order(path: Option<&Path>) -> Result<VertexOrder> {
    let Some(path) = path else { return Ok(VertexOrder::Identity) };
    let text =
        fs::read_to_string(path).with_context(|| format!("reading order {}", path.display()))?;
    let mut seq = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v: usize = line
            .parse()
            .with_context(|| format!("order file line {}: {line:?}", idx + 1))?;
        seq.push(v);
    }
    Ok(VertexOrder::from_sequence(&seq)?)
}

/// `FLIPPER_STEP_BUDGET` overrides the prediction step factor.
fn predict_config(radius: usize, order: VertexOrder) -> Result<PredictConfig> {
    let mut cfg = PredictConfig::new(radius).with_order(order);
    if let Ok(raw) = std::env::var("FLIPPER_STEP_BUDGET") {
        let factor: u64 =
            raw.parse().with_context(|| format!("FLIPPER_STEP_BUDGET={raw:?} is not a number"))?;
        cfg = cfg.with_step_factor(factor);
    }
    Ok(cfg)
}

fn parse_connector(spec: &str, seed: u64) -> Result<ConnectorKind> {
    if spec == "random" {
        return Ok(ConnectorKind::Random { seed });
    }
    if let Some(path) = spec.strip_prefix("scripted:") {
        let t = Transcript::from_json(
            &fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        )?;
        return Ok(ConnectorKind::scripted_from(&t));
    }
    Ok(ConnectorKind::parse(spec)?)
}

fn write_or_print(out: Option<&Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{content}"),
    }
    Ok(())
}

fn outcome_exit(outcome: &Outcome) -> ExitCode {
    match outcome {
        Outcome::Flipper { .. } => ExitCode::from(0),
        Outcome::RoundLimit { .. } => ExitCode::from(2),
        Outcome::Forfeit { .. } => ExitCode::from(1),
    }
}

// ---------------------------------------------------------------------------
// play

fn cmd_play(args: PlayArgs) -> Result<ExitCode> {
    let g = load_graph(&args.graph, args.seed)?;
    let order = load_order(args.order.as_deref())?;
    let variant: GameVariant = args.variant.into();
    if !matches!(variant, GameVariant::Flipper | GameVariant::InducedSubgraphFlipper) {
        bail!(
            "play drives the Flipper-vs-Connector variants; pseudo_flipper and \
             separation games run through the library API"
        );
    }
    let connector = parse_connector(&args.connector, args.seed)?;
    let mut conn = make_connector(connector);
    let base = GameConfig::new(variant, args.radius).with_max_rounds(args.max_rounds);

    let transcript = match args.flipper.as_str() {
        "flip_star" => {
            let mut star = FlipStar::new(&g, predict_config(2 * args.radius, order)?);
            let cfg = base.with_schedule(star.recommended_schedule());
            run_game(&g, &cfg, FlipperPlayer::Flips(&mut star), conn.as_mut())?
        }
        "single_flip" => {
            let star = FlipStar::new(&g, predict_config(2 * args.radius, order)?);
            let mut single = SingleFlipWrapper::new(star);
            let cfg = base.with_schedule(FlipSchedule::Constant(1));
            run_game(&g, &cfg, FlipperPlayer::Flips(&mut single), conn.as_mut())?
        }
        other => {
            let Some(path) = other.strip_prefix("scripted:") else {
                bail!("unknown flipper {other:?}; expected flip_star, single_flip or scripted:FILE");
            };
            let source = Transcript::from_json(
                &fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
            )?;
            let widest = source
                .rounds
                .iter()
                .map(|r| match &r.flips {
                    FlipperMove::Flips(f) => f.len(),
                    _ => 0,
                })
                .max()
                .unwrap_or(0);
            let mut scripted = flipper_core::ScriptedFlipper::from_transcript(&source)?;
            let cfg = base.with_schedule(FlipSchedule::RoundMax(widest.max(1)));
            run_game(&g, &cfg, FlipperPlayer::Flips(&mut scripted), conn.as_mut())?
        }
    };

    write_or_print(args.out.as_deref(), &transcript.to_json())?;
    Ok(outcome_exit(&transcript.outcome))
}

// ---------------------------------------------------------------------------
// predict

fn cmd_predict(args: PredictArgs) -> Result<ExitCode> {
    let g = load_graph(&args.graph, args.seed)?;
    let order = load_order(args.order.as_deref())?;
    let z: VertexSet = args.z.iter().copied().collect();
    if let Some(&v) = args.z.iter().find(|&&v| !g.is_live(v)) {
        bail!("target vertex {v} is not in the graph");
    }
    let cfg = predict_config(args.radius, order)?;
    let out = predict(&g, &cfg, &z)?;
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(ExitCode::from(0))
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let reports = if args.suite == "all" {
        run_all(args.seed)?
    } else {
        vec![run_suite(&args.suite, args.seed)?]
    };
    for r in &reports {
        eprintln!("{}", r.summary());
    }
    let passed = reports.iter().all(|r| r.passed());
    let total_millis: u128 = reports.iter().map(|r| r.millis).sum();
    let over_budget = args.budget.is_some_and(|b| total_millis > b);
    let doc = serde_json::json!({
        "seed": args.seed,
        "passed": passed,
        "total_millis": total_millis,
        "over_budget": over_budget,
        "suites": reports,
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    if !passed || over_budget {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::from(0))
}

// ---------------------------------------------------------------------------
// bench

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

fn bench_spec(family: &str, n: usize) -> String {
    match family {
        "bounded_degree_random" => format!("{family}:{n}x3"),
        _ => format!("{family}:{n}"),
    }
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode> {
    let families: Vec<&str> =
        args.families.iter().map(String::as_str).filter(|f| !f.is_empty()).collect();
    let mut csv = String::from("family,n,r,rounds_to_win,predict_time_ns,total_time_ns\n");
    let mut footer = String::new();
    for family in families {
        let mut points = Vec::new();
        let mut rounds_seen = Vec::new();
        for &n in &args.sizes {
            let g = Family::parse(&bench_spec(family, n), args.seed)?.generate()?;
            let pcfg = predict_config(args.radius, VertexOrder::Identity)?;
            let targets = clustered_targets(&g, &pcfg.order)?;
            let predict_ns = time_predict_ns(&g, &pcfg, &targets, args.repeats)?;

            let mut rounds_to_win = 0;
            let mut game_times = Vec::new();
            for _ in 0..args.repeats.max(1) {
                let mut star = FlipStar::new(&g, predict_config(2 * args.radius, VertexOrder::Identity)?);
                let cfg = GameConfig::new(GameVariant::Flipper, args.radius)
                    .with_max_rounds(1_000_000)
                    .with_schedule(star.recommended_schedule());
                let mut conn = make_connector(ConnectorKind::GreedySurvivor);
                let start = Instant::now();
                let t = run_game(&g, &cfg, FlipperPlayer::Flips(&mut star), conn.as_mut())?;
                game_times.push(start.elapsed().as_nanos().max(1));
                if matches!(t.outcome, Outcome::Flipper { .. }) {
                    rounds_to_win = t.rounds.len();
                }
            }
            let total_ns = median(game_times);
            csv.push_str(&format!(
                "{family},{n},{},{rounds_to_win},{predict_ns},{total_ns}\n",
                args.radius
            ));
            points.push((n as f64, predict_ns as f64));
            rounds_seen.push(rounds_to_win);
        }
        if !points.is_empty() {
            let constant = rounds_seen.iter().all(|&r| r == rounds_seen[0]);
            footer.push_str(&format!(
                "# {family}: predict_time log-log slope = {:.3}, rounds_to_win constant = {constant}\n",
                fit_loglog_slope(&points)
            ));
        }
    }
    csv.push_str(&footer);
    write_or_print(args.out.as_deref(), csv.trim_end())?;
    Ok(ExitCode::from(0))
}

// ---------------------------------------------------------------------------
// interactive

/// Reads Connector centers from stdin, re-prompting on invalid input;
/// `q` or end-of-input concedes.
struct PromptConnector<R> {
    input: R,
    round: usize,
}

impl<R: BufRead> PromptConnector<R> {
    fn read_line(&mut self) -> Option<String> {
        let mut line = String::new();
        match self.input.read_line(&mut line) {
            Ok(0) | Err(_) => None,
            Ok(_) => Some(line.trim().to_string()),
        }
    }
}

impl<R: BufRead> ConnectorStrategy for PromptConnector<R> {
    fn next_move(&mut self, view: &ArenaView<'_>) -> flipper_core::Result<ConnectorMove> {
        let ArenaView::Graph { arena, radius, .. } = view else {
            return Err(flipper_core::Error::InvalidMove(
                "interactive mode plays the flipper variant".into(),
            ));
        };
        self.round += 1;
        let vs = arena.live().to_vec();
        println!("\n-- round {}: {} vertices, {} edges", self.round, arena.order(), arena.size());
        let shown: Vec<String> = vs.iter().take(24).map(|v| v.to_string()).collect();
        println!(
            "   arena: {}{}",
            shown.join(" "),
            if vs.len() > 24 { " …" } else { "" }
        );
        loop {
            print!("center> ");
            std::io::stdout().flush().ok();
            let Some(line) = self.read_line() else {
                return Err(flipper_core::Error::InvalidMove("session closed".into()));
            };
            if line == "q" || line == "quit" {
                return Err(flipper_core::Error::InvalidMove("player quit".into()));
            }
            let Ok(v) = line.parse::<usize>() else {
                println!("   enter a vertex id, or q to quit");
                continue;
            };
            if !arena.is_live(v) {
                println!("   vertex {v} is not in the arena");
                continue;
            }
            let ball = arena.ball(v, *radius)?;
            println!("   localizing to the {}-vertex ball around {v}", ball.len());
            return Ok(ConnectorMove::Center(v));
        }
    }
}

/// Prints each flip set the wrapped strategy plays.
struct Announcing<S>(S);

impl<S: FlipperStrategy> FlipperStrategy for Announcing<S> {
    fn next_flips(
        &mut self,
        localized: &Graph,
        mv: &ConnectorMove,
    ) -> flipper_core::Result<FlipSet> {
        let flips = self.0.next_flips(localized, mv)?;
        if flips.is_empty() {
            println!("   flipper passes");
        } else {
            println!("   flipper plays {} flips", flips.len());
        }
        Ok(flips)
    }
}

fn cmd_interactive(args: InteractiveArgs) -> Result<ExitCode> {
    let g = load_graph(&args.graph, args.seed)?;
    let order = load_order(args.order.as_deref())?;
    let mut star = Announcing(FlipStar::new(&g, predict_config(2 * args.radius, order)?));
    let cfg = GameConfig::new(GameVariant::Flipper, args.radius)
        .with_max_rounds(100_000)
        .with_schedule(star.0.recommended_schedule());
    let stdin = std::io::stdin();
    let mut prompt = PromptConnector { input: stdin.lock(), round: 0 };
    println!("you are the Connector on {} vertices, radius {}", g.order(), args.radius);
    let t = run_game(&g, &cfg, FlipperPlayer::Flips(&mut star), &mut prompt)?;
    match &t.outcome {
        Outcome::Flipper { round } => println!("\nflipper wins in round {round}"),
        Outcome::RoundLimit { round } => println!("\nyou survived all {round} rounds"),
        Outcome::Forfeit { reason, .. } => println!("\nsession ended: {reason}"),
    }
    if let Some(out) = args.out.as_deref() {
        fs::write(out, t.to_json()).with_context(|| format!("writing {}", out.display()))?;
        println!("transcript written to {}", out.display());
    }
    Ok(outcome_exit(&t.outcome))
}
