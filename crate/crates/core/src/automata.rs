//! Automata generated by derivative engines: budgeted breadth-first
//! exploration, acceptance, bounded languages and DOT/JSON export.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{IndependenceAlphabet, Letter, Word};
use crate::classical::{antimirov_step, brzozowski_step};
use crate::error::{Error, Result};
use crate::normalize::{normalize, TheoryTier};
use crate::oracle::{enumerate_language_capped, semantic_reorder_derivative, DEFAULT_LENGTH_CAP};
use crate::refined::{list_step, StateList};
use crate::regexp::Regexp;
use crate::reordering::{antimirov_reorder_live_step, brz_reorder_step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutomatonKind {
    ClassicalBrzozowski,
    ClassicalAntimirov,
    ReorderBrzozowski,
    ReorderAntimirov,
    RefinedUnbounded,
    RefinedTruncated(usize),
    /// Semantic reordering derivatives of the language cut at this length.
    Oracle(usize),
}

impl AutomatonKind {
    pub fn is_deterministic(self) -> bool {
        matches!(self, AutomatonKind::ClassicalBrzozowski | AutomatonKind::ReorderBrzozowski | AutomatonKind::Oracle(_))
    }

    pub fn is_refined(self) -> bool {
        matches!(self, AutomatonKind::RefinedUnbounded | AutomatonKind::RefinedTruncated(_))
    }

    pub fn is_classical(self) -> bool {
        matches!(self, AutomatonKind::ClassicalBrzozowski | AutomatonKind::ClassicalAntimirov)
    }
}

impl fmt::Display for AutomatonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomatonKind::ClassicalBrzozowski => f.write_str("classical-brzozowski"),
            AutomatonKind::ClassicalAntimirov => f.write_str("classical-antimirov"),
            AutomatonKind::ReorderBrzozowski => f.write_str("reorder-brzozowski"),
            AutomatonKind::ReorderAntimirov => f.write_str("reorder-antimirov"),
            AutomatonKind::RefinedUnbounded => f.write_str("refined-unbounded"),
            AutomatonKind::RefinedTruncated(n) => write!(f, "refined-truncated({n})"),
            AutomatonKind::Oracle(n) => write!(f, "oracle({n})"),
        }
    }
}

impl FromStr for AutomatonKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "classical-brzozowski" => AutomatonKind::ClassicalBrzozowski,
            "classical-antimirov" => AutomatonKind::ClassicalAntimirov,
            "reorder-brzozowski" => AutomatonKind::ReorderBrzozowski,
            "reorder-antimirov" => AutomatonKind::ReorderAntimirov,
            "refined-unbounded" => AutomatonKind::RefinedUnbounded,
            _ => {
                let arg = |prefix: &str| s.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok();
                if let Some(n) = arg("refined-truncated(") {
                    AutomatonKind::RefinedTruncated(n)
                } else if let Some(n) = arg("oracle(") {
                    AutomatonKind::Oracle(n)
                } else {
                    return Err(format!("unknown automaton kind `{s}`"));
                }
            }
        })
    }
}

/// A state: a regexp for the classical and reordering kinds, a list of
/// regexps for the refined kinds, a finite language for the oracle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateKey {
    Expr(Regexp),
    List(StateList),
    Words(BTreeSet<Word>),
}

impl StateKey {
    /// Node count of the underlying expressions, or letters and words of a language.
    pub fn size(&self) -> usize {
        match self {
            StateKey::Expr(e) => e.node_count(),
            StateKey::List(g) => g.items().iter().map(Regexp::node_count).fold(0, usize::saturating_add),
            StateKey::Words(ws) => ws.iter().map(|w| w.len() + 1).sum(),
        }
    }
}

impl fmt::Display for StateKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateKey::Expr(e) => write!(f, "{e}"),
            StateKey::List(g) => write!(f, "{g}"),
            StateKey::Words(ws) => {
                let items: Vec<String> = ws.iter().map(|w| if w.is_empty() { "ε".into() } else { w.to_string() }).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExplorationBudget {
    pub max_states: usize,
    pub max_depth: Option<usize>,
    /// States whose key has more nodes than this are kept but not expanded.
    pub max_term_size: usize,
}

impl ExplorationBudget {
    pub const DEFAULT_TERM_SIZE: usize = 20_000;

    pub fn states(max_states: usize) -> ExplorationBudget {
        assert!(max_states >= 1, "budget must allow the initial state");
        ExplorationBudget { max_states, max_depth: None, max_term_size: Self::DEFAULT_TERM_SIZE }
    }
}

impl Default for ExplorationBudget {
    fn default() -> Self {
        ExplorationBudget::states(1000)
    }
}

/// Step function of one derivative engine, with optional key normalization.
#[derive(Debug, Clone)]
pub struct Engine {
    pub kind: AutomatonKind,
    pub alphabet: IndependenceAlphabet,
    pub tier: Option<TheoryTier>,
}

impl Engine {
    pub fn new(kind: AutomatonKind, alphabet: IndependenceAlphabet, tier: Option<TheoryTier>) -> Engine {
        Engine { kind, alphabet, tier }
    }

    fn norm(&self, e: Regexp) -> Regexp {
        match self.tier {
            Some(t) => normalize(&e, t),
            None => e,
        }
    }

    pub fn initial(&self, e: &Regexp) -> StateKey {
        if let AutomatonKind::Oracle(n) = self.kind {
            StateKey::Words(enumerate_language_capped(e, n, n).expect("the cap is the requested length"))
        } else if self.kind.is_refined() {
            StateKey::List(StateList::singleton(self.norm(e.clone())))
        } else {
            StateKey::Expr(self.norm(e.clone()))
        }
    }

    /// Normalized successors of a key along `a`.
    pub fn step(&self, q: &StateKey, a: &Letter) -> Vec<StateKey> {
        let exprs = |set: BTreeSet<Regexp>| -> Vec<StateKey> { set.into_iter().map(|x| StateKey::Expr(self.norm(x))).collect() };
        match (self.kind, q) {
            (AutomatonKind::ClassicalBrzozowski, StateKey::Expr(e)) => exprs(BTreeSet::from([brzozowski_step(e, a)])),
            (AutomatonKind::ReorderBrzozowski, StateKey::Expr(e)) => {
                exprs(BTreeSet::from([brz_reorder_step(e, a, &self.alphabet)]))
            }
            (AutomatonKind::ClassicalAntimirov, StateKey::Expr(e)) => exprs(antimirov_step(e, a)),
            (AutomatonKind::ReorderAntimirov, StateKey::Expr(e)) => exprs(antimirov_reorder_live_step(e, a, &self.alphabet)),
            (AutomatonKind::RefinedUnbounded | AutomatonKind::RefinedTruncated(_), StateKey::List(g)) => {
                let bound = match self.kind {
                    AutomatonKind::RefinedTruncated(n) => Some(n),
                    _ => None,
                };
                list_step(g, a, &self.alphabet, bound)
                    .expect("explored lists respect the bound")
                    .into_iter()
                    .map(|g2| StateKey::List(g2.map(|x| self.norm(x.clone()))))
                    .collect()
            }
            (AutomatonKind::Oracle(_), StateKey::Words(ws)) => {
                vec![StateKey::Words(semantic_reorder_derivative(ws, std::slice::from_ref(a), &self.alphabet))]
            }
            _ => panic!("state key does not match automaton kind {}", self.kind),
        }
    }

    /// Acceptance predicate. For refined kinds a singleton is final iff its
    /// regexp is nullable (singletons only occur initially), otherwise the
    /// list must be a pair of nullable regexps.
    pub fn is_final(&self, q: &StateKey) -> bool {
        match q {
            StateKey::Expr(e) => e.nullable(),
            StateKey::List(g) => (g.len() == 1 && g.items()[0].nullable()) || g.is_accepting_pair(),
            StateKey::Words(ws) => ws.contains(&Word::empty()),
        }
    }

    /// Letters to explore: the alphabet together with the letters of `e`.
    fn letters(&self, e: &Regexp) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.alphabet.letters().to_vec();
        for a in e.letters() {
            if !out.contains(&a) {
                out.push(a);
            }
        }
        out
    }

    /// Runs the engine on demand along `w`.
    pub fn accepts(&self, e: &Regexp, w: &[Letter]) -> bool {
        let mut current: BTreeSet<StateKey> = BTreeSet::from([self.initial(e)]);
        for a in w {
            current = current.iter().flat_map(|q| self.step(q, a)).collect();
            if current.is_empty() {
                return false;
            }
        }
        current.iter().any(|q| self.is_final(q))
    }

    /// Accepted words of length at most `max_len`, by on-demand derivation.
    pub fn bounded_language(&self, e: &Regexp, max_len: usize) -> Result<BTreeSet<Word>> {
        if max_len > DEFAULT_LENGTH_CAP {
            return Err(Error::CapExceeded { requested: max_len, cap: DEFAULT_LENGTH_CAP });
        }
        let letters = self.letters(e);
        let mut out = BTreeSet::new();
        let mut frontier: Vec<(Word, BTreeSet<StateKey>)> = vec![(Word::empty(), BTreeSet::from([self.initial(e)]))];
        let mut cache: HashMap<(StateKey, Letter), Vec<StateKey>> = HashMap::new();
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (w, states) in &frontier {
                if states.iter().any(|q| self.is_final(q)) {
                    out.insert(w.clone());
                }
                if len == max_len {
                    continue;
                }
                for a in &letters {
                    let mut succ = BTreeSet::new();
                    for q in states {
                        let ks = cache
                            .entry((q.clone(), a.clone()))
                            .or_insert_with(|| self.step(q, a));
                        succ.extend(ks.iter().cloned());
                    }
                    // deterministic sinks are kept as states; drop them here
                    succ.retain(|q| match q {
                        StateKey::Expr(e) => !e.is_empty_language(),
                        StateKey::Words(ws) => !ws.is_empty(),
                        StateKey::List(_) => true,
                    });
                    if !succ.is_empty() {
                        let mut w2 = w.clone();
                        w2.push(a.clone());
                        next.push((w2, succ));
                    }
                }
            }
            frontier = next;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct Automaton {
    pub engine: Engine,
    pub expr: Regexp,
    pub states: Vec<StateKey>,
    pub initial: Vec<usize>,
    pub finals: BTreeSet<usize>,
    pub transitions: BTreeSet<(usize, Letter, usize)>,
    pub deterministic: bool,
    pub complete: bool,
}

/// Breadth-first closure of the engine's step function from `e`.
pub fn build_automaton(
    e: &Regexp,
    alphabet: &IndependenceAlphabet,
    kind: AutomatonKind,
    tier: Option<TheoryTier>,
    budget: ExplorationBudget,
) -> Automaton {
    let engine = Engine::new(kind, alphabet.clone(), tier);
    let letters = engine.letters(e);
    let key0 = engine.initial(e);
    let mut ids: HashMap<StateKey, usize> = HashMap::from([(key0.clone(), 0)]);
    let mut states = vec![key0];
    let mut transitions = BTreeSet::new();
    let mut complete = true;
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    while let Some((q, depth)) = queue.pop_front() {
        if budget.max_depth.is_some_and(|d| depth >= d) || states[q].size() > budget.max_term_size {
            complete = false;
            continue;
        }
        for a in &letters {
            for key in engine.step(&states[q].clone(), a) {
                let target = match ids.get(&key) {
                    Some(&id) => id,
                    None => {
                        if states.len() >= budget.max_states {
                            complete = false;
                            continue;
                        }
                        let id = states.len();
                        ids.insert(key.clone(), id);
                        states.push(key);
                        queue.push_back((id, depth + 1));
                        id
                    }
                };
                transitions.insert((q, a.clone(), target));
            }
        }
    }
    let finals = states.iter().enumerate().filter(|(_, k)| engine.is_final(k)).map(|(i, _)| i).collect();
    Automaton {
        deterministic: kind.is_deterministic(),
        engine,
        expr: e.clone(),
        states,
        initial: vec![0],
        finals,
        transitions,
        complete,
    }
}

impl Automaton {
    pub fn kind(&self) -> AutomatonKind {
        self.engine.kind
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn index_of(&self, key: &StateKey) -> Option<usize> {
        self.states.iter().position(|k| k == key)
    }

    pub fn successors(&self, q: usize, a: &Letter) -> impl Iterator<Item = usize> + '_ {
        let a = a.clone();
        self.transitions.iter().filter(move |(p, b, _)| *p == q && *b == a).map(|(_, _, r)| *r)
    }
}

/// Acceptance of `w`. Complete automata are run on the stored graph;
/// incomplete ones re-derive states along `w`.
pub fn accepts(m: &Automaton, w: &[Letter]) -> bool {
    if !m.complete {
        return m.engine.accepts(&m.expr, w);
    }
    let mut current: BTreeSet<usize> = m.initial.iter().copied().collect();
    for a in w {
        current = current.iter().flat_map(|&q| m.successors(q, a)).collect();
        if current.is_empty() {
            return false;
        }
    }
    current.iter().any(|q| m.finals.contains(q))
}

/// Accepted words of length at most `max_len`.
pub fn bounded_language(m: &Automaton, max_len: usize) -> Result<BTreeSet<Word>> {
    m.engine.bounded_language(&m.expr, max_len)
}

/// Shorthand for [`Engine::bounded_language`] without building a graph.
pub fn bounded_language_of(
    e: &Regexp,
    alphabet: &IndependenceAlphabet,
    kind: AutomatonKind,
    tier: Option<TheoryTier>,
    max_len: usize,
) -> Result<BTreeSet<Word>> {
    Engine::new(kind, alphabet.clone(), tier).bounded_language(e, max_len)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub kind: String,
    pub deterministic: bool,
    pub complete: bool,
    pub states: Vec<StateJson>,
    pub transitions: Vec<TransitionJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub id: usize,
    pub label: String,
    pub initial: bool,
    #[serde(rename = "final")]
    pub is_final: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionJson {
    pub from: usize,
    pub letter: String,
    pub to: usize,
}

impl Automaton {
    pub fn to_json(&self) -> AutomatonJson {
        AutomatonJson {
            kind: self.kind().to_string(),
            deterministic: self.deterministic,
            complete: self.complete,
            states: (0..self.states.len())
                .map(|i| StateJson {
                    id: i,
                    label: self.states[i].to_string(),
                    initial: self.initial.contains(&i),
                    is_final: self.finals.contains(&i),
                })
                .collect(),
            transitions: self
                .transitions
                .iter()
                .map(|(p, a, q)| TransitionJson { from: *p, letter: a.symbol().to_string(), to: *q })
                .collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let esc = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n");
        for (i, q) in self.states.iter().enumerate() {
            let shape = if self.finals.contains(&i) { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  q{i} [label=\"{}\", shape={shape}];", esc(&q.to_string()));
        }
        for &i in &self.initial {
            let _ = writeln!(out, "  init -> q{i};");
        }
        for (p, a, q) in &self.transitions {
            let _ = writeln!(out, "  q{p} -> q{q} [label=\"{}\"];", esc(a.symbol()));
        }
        out.push_str("}\n");
        out
    }
}

pub fn export_automaton(m: &Automaton, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => m.to_dot(),
        ExportFormat::Json => serde_json::to_string_pretty(&m.to_json()).expect("automaton serializes"),
    }
}
