use std::error::Error;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use cookquest::assembly::{deserialize_game, serialize_game, GameSpec};
use cookquest::corpus::{build_graph, parse_corpus, IngredientGraph, NormalizationRules};
use cookquest::engine::{format_transcript, GameState, Transcript, Turn, World};
use cookquest::pipeline::{Pipeline, BUILTIN_RULES};
use cookquest::recipegen::{
    Complexity, GenerationParams, Mode, COMPLEX_INGREDIENTS, SIMPLE_INGREDIENTS,
};
use cookquest::session::SessionStore;
use cookquest::solver::{solve, BatchSummary, DEFAULT_BUDGET};
use cookquest::worldkb::MapId;

type Result<T> = std::result::Result<T, Box<dyn Error>>;

/// Generate and play cooking quests for text adventures.
#[derive(Debug, Parser)]
#[command(name = "cookquest", version)]
struct Cli {
    #[command(flatten)]
    data: DataArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct DataArgs {
    /// Recipe corpus JSON [default: bundled sample corpus]
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    /// Normalization rules file [default: bundled rules]
    #[arg(long, global = true)]
    rules: Option<PathBuf>,
    /// Directory of knowledge-base files [default: bundled KB]
    #[arg(long, global = true)]
    kb_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value = "markov")]
    mode: Mode,
    #[arg(long, default_value = "1R")]
    map: MapId,
    /// simple (4 ingredients) or complex (8)
    #[arg(long, default_value = "simple", conflicts_with = "n")]
    complexity: Complexity,
    /// Exact ingredient count, overriding --complexity
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GenArgs {
    fn params(&self) -> GenerationParams {
        let n = self.n.unwrap_or(self.complexity.n_ingredients());
        GenerationParams::new(self.mode, n, self.seed)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the ingredient co-occurrence graph from a corpus
    Ingest {
        /// Output graph file [default: stdout]
        #[arg(long)]
        out: Option<PathBuf>,
        /// Abort on the first malformed corpus entry
        #[arg(long)]
        strict: bool,
    },
    /// Summarize a graph: node and edge counts, heaviest pairs
    Stats {
        /// Graph file from `ingest` [default: build from the corpus]
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Generate a recipe or a full game spec
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        /// Emit only the recipe, as JSON
        #[arg(long)]
        recipe: bool,
        /// Output file [default: stdout]
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Play a game in the terminal
    Play {
        /// Game spec file [default: generate one from the flags below]
        game: Option<PathBuf>,
        #[command(flatten)]
        gen: GenArgs,
        /// Write the session transcript here on exit
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
    /// Find a shortest plan for a game spec
    Solve {
        game: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Generate and solve batches of games
    Validate {
        /// Modes to run [default: all]
        #[arg(long)]
        mode: Vec<Mode>,
        /// Maps to run [default: 1R and 5R]
        #[arg(long)]
        map: Vec<MapId>,
        /// Ingredient counts [default: 4 and 8]
        #[arg(long)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        first_seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Serve the play-session protocol over HTTP
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    log::info!("effective config: {cli:?}");
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn pipeline(data: &DataArgs) -> Result<Pipeline> {
    Ok(Pipeline::load(
        data.corpus.as_deref(),
        data.rules.as_deref(),
        data.kb_dir.as_deref(),
    )?)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("writing {}: {e}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_game(path: &Path) -> Result<GameSpec> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    Ok(deserialize_game(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn graph_from_corpus(data: &DataArgs, strict: bool) -> Result<IngredientGraph> {
    let rules = match &data.rules {
        Some(p) => NormalizationRules::parse(&std::fs::read_to_string(p)?)?,
        None => NormalizationRules::parse(BUILTIN_RULES)?,
    };
    let recipes = match &data.corpus {
        Some(p) => {
            let parsed = parse_corpus(p, strict)?;
            if !parsed.warnings.is_empty() {
                log::warn!("skipped {} malformed corpus entries", parsed.warnings.len());
            }
            parsed.recipes
        }
        None => pipeline(data)?.recipes().to_vec(),
    };
    Ok(build_graph(&recipes, &rules)?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Ingest { out, strict } => {
            let g = graph_from_corpus(&cli.data, strict)?;
            log::info!("graph: {} nodes, {} edges", g.node_count(), g.edge_count());
            emit(&g.to_text(), out.as_deref())?;
        }
        Command::Stats { graph, top } => {
            let g = match graph {
                Some(p) => IngredientGraph::from_text(&std::fs::read_to_string(&p)?)?,
                None => graph_from_corpus(&cli.data, false)?,
            };
            print!("{}", stats(&g, top));
        }
        Command::Gen { gen, recipe, out } => {
            let p = pipeline(&cli.data)?;
            let text = if recipe {
                let r = p.generate_recipe(&gen.params(), gen.map)?;
                serde_json::to_string_pretty(&r)? + "\n"
            } else {
                serialize_game(&p.generate_game(&gen.params(), gen.map)?)
            };
            emit(&text, out.as_deref())?;
        }
        Command::Play {
            game,
            gen,
            transcript,
        } => {
            let spec = match game {
                Some(path) => read_game(&path)?,
                None => pipeline(&cli.data)?.generate_game(&gen.params(), gen.map)?,
            };
            let t = play(spec, std::io::stdin().lock(), std::io::stdout().lock())?;
            if let Some(path) = transcript {
                std::fs::write(&path, format_transcript(&t))?;
            }
        }
        Command::Solve { game, budget, json } => {
            let report = solve(&read_game(&game)?, budget);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else if report.solvable {
                for cmd in &report.plan {
                    println!("{cmd}");
                }
            }
            log::info!(
                "{} steps, {} states expanded",
                report.plan.len(),
                report.states_expanded
            );
            if !report.solvable {
                eprintln!("unsolvable: {}", report.failure_reason.unwrap_or_default());
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Validate {
            mode,
            map,
            n,
            seeds,
            first_seed,
            budget,
            json,
        } => {
            let p = pipeline(&cli.data)?;
            let modes = if mode.is_empty() {
                Mode::ALL.to_vec()
            } else {
                mode
            };
            let maps = if map.is_empty() {
                vec![MapId::OneRoom, MapId::FiveRoom]
            } else {
                map
            };
            let sizes = if n.is_empty() {
                vec![SIMPLE_INGREDIENTS, COMPLEX_INGREDIENTS]
            } else {
                n
            };
            let mut summaries = Vec::new();
            for &m in &modes {
                for &map in &maps {
                    for &n in &sizes {
                        let (s, _) =
                            p.validate_batch(m, map, n, first_seed..first_seed + seeds, budget);
                        summaries.push(s);
                    }
                }
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&summaries)?);
            } else {
                println!("{}", BatchSummary::TABLE_HEADER);
                for s in &summaries {
                    println!("{s}");
                }
            }
            if summaries.iter().any(|s| s.solved < s.seeds) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Serve { bind } => {
            let store = Arc::new(SessionStore::new(Arc::new(pipeline(&cli.data)?)));
            let rt = tokio::runtime::Runtime::new()?;
            rt.block_on(async {
                let listener = tokio::net::TcpListener::bind(&bind).await?;
                log::info!("listening on http://{}", listener.local_addr()?);
                axum::serve(listener, cookquest_cli::router(store)).await
            })?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn stats(g: &IngredientGraph, top: usize) -> String {
    let mut edges: Vec<(u32, &str, &str)> = g
        .edges()
        .map(|(a, b, w)| (w, g.node(a).name(), g.node(b).name()))
        .collect();
    edges.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| (x.1, x.2).cmp(&(y.1, y.2))));
    let singletons = edges.iter().filter(|e| e.0 == 1).count();
    let mut out = format!(
        "nodes: {}\nedges: {}\ntotal weight: {}\nsingleton edges: {}\ntop pairs:\n",
        g.node_count(),
        g.edge_count(),
        g.total_ordered_weight() / 2,
        singletons
    );
    for (w, a, b) in edges.into_iter().take(top) {
        out.push_str(&format!("  {w:>6}  {a} + {b}\n"));
    }
    out
}

/// Reads commands until the meal is done, input ends or the player quits.
fn play(spec: GameSpec, input: impl BufRead, mut out: impl Write) -> Result<Transcript> {
    let mut state = GameState::new(World::new(spec)?);
    let intro = state.intro();
    writeln!(out, "{intro}")?;
    let mut t = Transcript {
        intro: Some(intro),
        turns: Vec::new(),
    };
    write!(out, "\n> ")?;
    out.flush()?;
    for line in input.lines() {
        let line = line?;
        let command = line.trim();
        if matches!(command, "quit" | "exit" | "q") {
            break;
        }
        if command.is_empty() {
            write!(out, "> ")?;
            out.flush()?;
            continue;
        }
        let obs = state.step(command);
        writeln!(out, "{}", obs.feedback)?;
        t.turns.push(Turn {
            command: command.to_string(),
            feedback: obs.feedback,
        });
        if state.done() {
            break;
        }
        write!(out, "\n> ")?;
        out.flush()?;
    }
    Ok(t)
}
