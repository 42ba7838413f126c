//! Command-line frontend. [`run`] returns the exit code together with the
//! text to print, so the binary stays a thin wrapper and tests can call it
//! in-process.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::alphabet::{IndependenceAlphabet, Letter, Word};
use crate::analysis::{check_rank, check_rank_on, check_uniform_rank, check_uniform_rank_on, language_connected, star_connected};
use crate::automata::{build_automaton, export_automaton, AutomatonKind, ExplorationBudget, ExportFormat};
use crate::classical::{antimirov_parts, brzozowski_derive};
use crate::normalize::{normalize, TheoryTier};
use crate::oracle::{closure_member_oracle, closure_of, enumerate_language, semantic_reorder_derivative, DEFAULT_LENGTH_CAP};
use crate::parse::{parse_regexp, parse_regexp_unchecked};
use crate::refined::{refined_derive, refined_membership, refined_split_step};
use crate::regexp::{sorted_for_display, Regexp};
use crate::reordering::{antimirov_reorder_parts, brz_reorder_derive};

#[derive(Debug, Parser)]
#[command(name = "tracederiv", version, about = "Reordering derivatives of regular expressions over independence alphabets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Derivative of an expression along a word
    Derive(DeriveArgs),
    /// One-letter parts-of-derivatives
    Parts(PartsArgs),
    /// Refined splits along a letter, or refined state lists along a word
    Refine(RefineArgs),
    /// Membership of a word in the trace closure (or the language, for classical engines)
    Member(MemberArgs),
    /// Explore the automaton of an engine
    Build(BuildArgs),
    /// Connectedness and star-connectedness
    Analyze(Common),
    /// Bounded check of the (uniform) scattering rank
    Rank(RankArgs),
    /// Bounded language and its trace closure
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// Independence alphabet file; defaults to the letters in use, all pairwise independent
    #[arg(long)]
    alphabet: Option<PathBuf>,
    #[arg(long)]
    expr: String,
    #[arg(long)]
    json: bool,
    /// Exit with status 1 on a negative result
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineName {
    Brzozowski,
    Antimirov,
    BrzozowskiReorder,
    AntimirovReorder,
    Refined,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Tier {
    None,
    T0,
    T1,
}

impl Tier {
    fn theory(self) -> Option<TheoryTier> {
        match self {
            Tier::None => None,
            Tier::T0 => Some(TheoryTier::T0),
            Tier::T1 => Some(TheoryTier::T1),
        }
    }
}

#[derive(Debug, Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value = "brzozowski-reorder")]
    engine: EngineName,
    /// Truncation bound N for the refined engine
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value = "none")]
    normalize: Tier,
    /// Length bound for the oracle engine
    #[arg(long, default_value_t = 8)]
    max_len: usize,
}

#[derive(Debug, Args)]
struct DeriveArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value = "")]
    word: String,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Args)]
struct PartsArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    letter: String,
    #[arg(long, value_enum, default_value = "antimirov-reorder")]
    engine: EngineName,
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value = "none")]
    normalize: Tier,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
}

#[derive(Debug, Args)]
struct RefineArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, conflicts_with = "word")]
    letter: Option<String>,
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value = "none")]
    normalize: Tier,
}

#[derive(Debug, Args)]
struct MemberArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value = "")]
    word: String,
    #[arg(long, value_enum, default_value = "oracle")]
    engine: EngineName,
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "antimirov-reorder")]
    engine: EngineName,
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value = "none")]
    normalize: Tier,
    /// Maximum number of states to explore
    #[arg(long, default_value_t = 1000)]
    budget: usize,
    /// Length bound for the oracle engine
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Write the automaton as a DOT graph to this path
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    common: Common,
    /// Rank bound N
    #[arg(long)]
    bound: usize,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Check uniform rank instead of rank
    #[arg(long)]
    uniform: bool,
    /// Check only these words (repeatable)
    #[arg(long)]
    word: Vec<String>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 6)]
    max_len: usize,
}

struct Usage(String);

type Outcome = Result<(bool, String), Usage>;

fn usage<E: std::fmt::Display>(flag: &str) -> impl FnOnce(E) -> Usage + '_ {
    move |e| Usage(format!("{flag}: {e}"))
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code and output: 0 on success, 1 on a negative result under
/// `--strict`, 2 on usage errors.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return (e.exit_code(), e.render().to_string()),
    };
    let strict = match &cli.command {
        Command::Derive(a) => a.common.strict,
        Command::Parts(a) => a.common.strict,
        Command::Refine(a) => a.common.strict,
        Command::Member(a) => a.common.strict,
        Command::Build(a) => a.common.strict,
        Command::Analyze(a) => a.strict,
        Command::Rank(a) => a.common.strict,
        Command::Oracle(a) => a.common.strict,
    };
    let result = match cli.command {
        Command::Derive(a) => cmd_derive(a),
        Command::Parts(a) => cmd_parts(a),
        Command::Refine(a) => cmd_refine(a),
        Command::Member(a) => cmd_member(a),
        Command::Build(a) => cmd_build(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Rank(a) => cmd_rank(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match result {
        Ok((positive, mut out)) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            (if strict && !positive { 1 } else { 0 }, out)
        }
        Err(Usage(msg)) => (2, format!("error: {msg}\n")),
    }
}

/// Loads the alphabet, parses the expression and the given words.
fn setup(common: &Common, words: &[&str]) -> Result<(IndependenceAlphabet, Regexp, Vec<Word>), Usage> {
    match &common.alphabet {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(usage("--alphabet"))?;
            let alphabet = IndependenceAlphabet::parse(&text).map_err(usage("--alphabet"))?;
            let e = parse_regexp(&common.expr, &alphabet).map_err(usage("--expr"))?;
            let ws = words
                .iter()
                .map(|w| Word::parse_in(w, &alphabet))
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage("--word"))?;
            Ok((alphabet, e, ws))
        }
        None => {
            let e = parse_regexp_unchecked(&common.expr).map_err(usage("--expr"))?;
            let ws = words.iter().map(|w| Word::parse(w)).collect::<Result<Vec<_>, _>>().map_err(usage("--word"))?;
            let mut letters: BTreeSet<Letter> = e.letters();
            for w in &ws {
                letters.extend(w.iter().cloned());
            }
            let alphabet = IndependenceAlphabet::with_full_independence(letters).map_err(usage("--alphabet"))?;
            Ok((alphabet, e, ws))
        }
    }
}

fn check_bound(engine: EngineName, bound: Option<usize>) -> Result<(), Usage> {
    if bound.is_some() && engine != EngineName::Refined {
        return Err(Usage("--bound: only valid with --engine refined".into()));
    }
    Ok(())
}

fn join_exprs(set: &BTreeSet<Regexp>) -> String {
    if set.is_empty() {
        return "∅".into();
    }
    sorted_for_display(set).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

fn join_words(set: &BTreeSet<Word>) -> String {
    if set.is_empty() {
        return "∅".into();
    }
    set.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
}

fn texts<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn normalized_set(set: BTreeSet<Regexp>, tier: Option<TheoryTier>) -> BTreeSet<Regexp> {
    match tier {
        Some(t) => set.iter().map(|e| normalize(e, t)).collect(),
        None => set,
    }
}

struct Choice {
    engine: EngineName,
    bound: Option<usize>,
    tier: Option<TheoryTier>,
    max_len: usize,
}

/// Shared by `derive`, `parts` and `refine`.
fn derive_with(choice: Choice, alphabet: &IndependenceAlphabet, e: &Regexp, u: &Word, json_out: bool) -> Outcome {
    let Choice { engine, bound, tier, max_len } = choice;
    check_bound(engine, bound)?;
    let norm = |x: Regexp| match tier {
        Some(t) => normalize(&x, t),
        None => x,
    };
    let (text, results, nonempty) = match engine {
        EngineName::Brzozowski | EngineName::BrzozowskiReorder => {
            let d = if engine == EngineName::Brzozowski {
                brzozowski_derive(e, u)
            } else {
                brz_reorder_derive(e, u, alphabet)
            };
            let d = norm(d);
            (d.to_string(), vec![d.to_string()], !d.is_empty_language())
        }
        EngineName::Antimirov | EngineName::AntimirovReorder => {
            let parts = if engine == EngineName::Antimirov {
                antimirov_parts(e, u)
            } else {
                antimirov_reorder_parts(e, u, alphabet)
            };
            let parts = normalized_set(parts, tier);
            let shown = texts(sorted_for_display(&parts));
            (join_exprs(&parts), shown, !parts.is_empty())
        }
        EngineName::Refined => {
            let lists: BTreeSet<_> =
                refined_derive(e, u, alphabet, bound).into_iter().map(|g| g.map(|x| norm(x.clone()))).collect();
            let text = if lists.is_empty() { "∅".to_string() } else { texts(&lists).join("\n") };
            (text, texts(&lists), !lists.is_empty())
        }
        EngineName::Oracle => {
            let language = enumerate_language(e, max_len).map_err(usage("--max-len"))?;
            let d = semantic_reorder_derivative(&language, u, alphabet);
            (join_words(&d), texts(&d), !d.is_empty())
        }
    };
    if json_out {
        let v = json!({ "expr": e.to_string(), "word": u.to_string(), "results": results });
        Ok((nonempty, v.to_string()))
    } else {
        Ok((nonempty, text))
    }
}

fn cmd_derive(a: DeriveArgs) -> Outcome {
    let (alphabet, e, ws) = setup(&a.common, &[&a.word])?;
    let ea = &a.engine;
    let choice = Choice { engine: ea.engine, bound: ea.bound, tier: ea.normalize.theory(), max_len: ea.max_len };
    derive_with(choice, &alphabet, &e, &ws[0], a.common.json)
}

fn cmd_parts(a: PartsArgs) -> Outcome {
    let (alphabet, e, ws) = setup(&a.common, &[&a.letter])?;
    if ws[0].len() != 1 {
        return Err(Usage(format!("--letter: expected a single letter, got `{}`", a.letter)));
    }
    let choice = Choice { engine: a.engine, bound: a.bound, tier: a.normalize.theory(), max_len: a.max_len };
    derive_with(choice, &alphabet, &e, &ws[0], a.common.json)
}

fn cmd_refine(a: RefineArgs) -> Outcome {
    match &a.letter {
        Some(letter) => {
            if a.bound.is_some() {
                return Err(Usage("--bound: splits are not bounded; use --word".into()));
            }
            let (alphabet, e, ws) = setup(&a.common, &[letter])?;
            if ws[0].len() != 1 {
                return Err(Usage(format!("--letter: expected a single letter, got `{letter}`")));
            }
            let pairs: Vec<(Regexp, Regexp)> = refined_split_step(&e, &ws[0][0], &alphabet)
                .into_iter()
                .map(|p| match a.normalize.theory() {
                    Some(t) => (normalize(&p.left, t), normalize(&p.right, t)),
                    None => (p.left, p.right),
                })
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let out = if a.common.json {
                let items: Vec<_> = pairs.iter().map(|(l, r)| json!({ "left": l.to_string(), "right": r.to_string() })).collect();
                json!({ "expr": e.to_string(), "letter": letter, "splits": items }).to_string()
            } else if pairs.is_empty() {
                "∅".into()
            } else {
                pairs.iter().map(|(l, r)| format!("({l}, {r})")).collect::<Vec<_>>().join("\n")
            };
            Ok((!pairs.is_empty(), out))
        }
        None => {
            let word = a.word.clone().unwrap_or_default();
            let (alphabet, e, ws) = setup(&a.common, &[&word])?;
            let choice = Choice { engine: EngineName::Refined, bound: a.bound, tier: a.normalize.theory(), max_len: 0 };
            derive_with(choice, &alphabet, &e, &ws[0], a.common.json)
        }
    }
}

fn cmd_member(a: MemberArgs) -> Outcome {
    check_bound(a.engine, a.bound)?;
    let (alphabet, e, ws) = setup(&a.common, &[&a.word])?;
    let u = &ws[0];
    let member = match a.engine {
        EngineName::Brzozowski => brzozowski_derive(&e, u).nullable(),
        EngineName::Antimirov => antimirov_parts(&e, u).iter().any(Regexp::nullable),
        EngineName::BrzozowskiReorder => brz_reorder_derive(&e, u, &alphabet).nullable(),
        EngineName::AntimirovReorder => antimirov_reorder_parts(&e, u, &alphabet).iter().any(Regexp::nullable),
        EngineName::Refined => refined_membership(&e, u, &alphabet, a.bound),
        EngineName::Oracle => closure_member_oracle(&e, u, &alphabet),
    };
    let out = if a.common.json {
        json!({ "expr": e.to_string(), "word": u.to_string(), "member": member }).to_string()
    } else {
        member.to_string()
    };
    Ok((member, out))
}

fn cmd_build(a: BuildArgs) -> Outcome {
    check_bound(a.engine, a.bound)?;
    if a.budget == 0 {
        return Err(Usage("--budget: must be at least 1".into()));
    }
    let kind = match (a.engine, a.bound) {
        (EngineName::Brzozowski, _) => AutomatonKind::ClassicalBrzozowski,
        (EngineName::Antimirov, _) => AutomatonKind::ClassicalAntimirov,
        (EngineName::BrzozowskiReorder, _) => AutomatonKind::ReorderBrzozowski,
        (EngineName::AntimirovReorder, _) => AutomatonKind::ReorderAntimirov,
        (EngineName::Refined, None) => AutomatonKind::RefinedUnbounded,
        (EngineName::Refined, Some(n)) => AutomatonKind::RefinedTruncated(n),
        (EngineName::Oracle, _) => {
            if a.max_len > DEFAULT_LENGTH_CAP {
                return Err(Usage(format!("--max-len: {} exceeds the cap {DEFAULT_LENGTH_CAP}", a.max_len)));
            }
            AutomatonKind::Oracle(a.max_len)
        }
    };
    let (alphabet, e, _) = setup(&a.common, &[])?;
    let m = build_automaton(&e, &alphabet, kind, a.normalize.theory(), ExplorationBudget::states(a.budget));
    if let Some(path) = &a.dot {
        std::fs::write(path, export_automaton(&m, ExportFormat::Dot)).map_err(usage("--dot"))?;
    }
    let out = if a.common.json {
        export_automaton(&m, ExportFormat::Json)
    } else {
        format!(
            "kind: {}\nstates: {}\ntransitions: {}\nfinal states: {}\ncomplete: {}",
            m.kind(),
            m.state_count(),
            m.transitions.len(),
            m.finals.len(),
            m.complete
        )
    };
    Ok((m.complete, out))
}

fn cmd_analyze(a: Common) -> Outcome {
    let (alphabet, e, _) = setup(&a, &[])?;
    let sc = star_connected(&e, &alphabet);
    let lc = language_connected(&e, &alphabet);
    let out = if a.json {
        json!({ "expr": e.to_string(), "star_connected": sc, "language_connected": lc }).to_string()
    } else {
        format!("star-connected: {sc}\nlanguage-connected: {lc}")
    };
    Ok((sc, out))
}

fn cmd_rank(a: RankArgs) -> Outcome {
    let words: Vec<&str> = a.word.iter().map(String::as_str).collect();
    let (alphabet, e, ws) = setup(&a.common, &words)?;
    let verdict = if ws.is_empty() {
        let r = if a.uniform {
            check_uniform_rank(&e, &alphabet, a.bound, a.max_len)
        } else {
            check_rank(&e, &alphabet, a.bound, a.max_len)
        };
        r.map_err(usage("--max-len"))?
    } else {
        let longest = ws.iter().map(|w| w.len()).max().unwrap_or(0);
        if a.uniform {
            check_uniform_rank_on(&e, &alphabet, a.bound, &ws, longest)
        } else {
            check_rank_on(&e, &alphabet, a.bound, &ws, longest)
        }
    };
    let out = if a.common.json {
        serde_json::to_string(&verdict).expect("verdict serializes")
    } else {
        verdict.to_string()
    };
    Ok((verdict.holds(), out))
}

fn cmd_oracle(a: OracleArgs) -> Outcome {
    let (alphabet, e, _) = setup(&a.common, &[])?;
    let language = enumerate_language(&e, a.max_len).map_err(usage("--max-len"))?;
    let closure = closure_of(&language, &alphabet);
    let out = if a.common.json {
        json!({ "expr": e.to_string(), "max_len": a.max_len, "language": texts(&language), "closure": texts(&closure) })
            .to_string()
    } else {
        format!("language: {}\nclosure: {}", join_words(&language), join_words(&closure))
    };
    Ok((!language.is_empty(), out))
}
