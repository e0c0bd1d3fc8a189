use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use super::{check_alphabet, ReachError, SolveStats};
use crate::grammar::{normalize, Cfg, Nonterminal, NormalForm};
use crate::graph::{Direction, LabeledGraph, Path, Step, VertexId};

/// `(from, A, to)`: some `from -> to` walk has a yield derivable from `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fact {
    pub from: VertexId,
    pub nonterminal: Nonterminal,
    pub to: VertexId,
}

/// Index of a fact in discovery order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactId(pub usize);

/// Why a fact holds. Referenced facts always have smaller ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// `A -> a` and the edge reads `a` in this direction.
    TerminalEdge { edge: usize, direction: Direction },
    /// `A -> B C` with `left = (u, B, w)` and `right = (w, C, v)`.
    Binary { left: FactId, right: FactId },
    /// The start symbol derives the empty word; empty walk at `vertex`.
    Epsilon { vertex: VertexId },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Worklist {
    #[default]
    Fifo,
    Lifo,
}

/// The fixpoint of the CFL-reachability rules plus first-found provenance.
#[derive(Debug, Clone)]
pub struct ReachTable {
    names: Vec<String>,
    start: Nonterminal,
    facts: Vec<Fact>,
    provenance: Vec<Justification>,
    index: HashMap<Fact, FactId>,
    pops: usize,
}

impl ReachTable {
    /// Builds a table from raw parts, e.g. to replay a stored derivation.
    /// Nothing is validated here; [`expand_witness`] checks consistency.
    pub fn from_parts(names: Vec<String>, start: Nonterminal, facts: Vec<(Fact, Justification)>) -> Self {
        let index = facts.iter().enumerate().map(|(i, (f, _))| (*f, FactId(i))).collect();
        let (facts, provenance) = facts.into_iter().unzip();
        ReachTable { names, start, facts, provenance, index, pops: 0 }
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    pub fn fact(&self, id: FactId) -> Option<&Fact> {
        self.facts.get(id.0)
    }

    pub fn justification(&self, id: FactId) -> Option<&Justification> {
        self.provenance.get(id.0)
    }

    pub fn lookup(&self, fact: &Fact) -> Option<FactId> {
        self.index.get(fact).copied()
    }

    pub fn contains(&self, from: VertexId, nonterminal: Nonterminal, to: VertexId) -> bool {
        self.index.contains_key(&Fact { from, nonterminal, to })
    }

    pub fn nonterminal_name(&self, a: Nonterminal) -> &str {
        &self.names[a]
    }

    pub fn start(&self) -> Nonterminal {
        self.start
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats { facts: self.facts.len(), pops: self.pops }
    }

    fn insert(&mut self, fact: Fact, why: Justification) -> Option<FactId> {
        if self.index.contains_key(&fact) {
            return None;
        }
        let id = FactId(self.facts.len());
        self.facts.push(fact);
        self.provenance.push(why);
        self.index.insert(fact, id);
        Some(id)
    }
}

pub fn cfl_reach_table(g: &LabeledGraph, nf: &NormalForm) -> Result<ReachTable, ReachError> {
    cfl_reach_table_with(g, nf, Worklist::Fifo)
}

/// Saturates the rules
///
/// * `(u, A, v)` for `A -> a` and an edge reading `a` from `u` to `v`,
/// * `(u, A, v)` for `A -> B C`, `(u, B, w)` and `(w, C, v)`,
///
/// processing new facts in worklist order, and then adds `(u, S, u)` for
/// every `u` when the start symbol `S` is nullable. Those empty-walk facts
/// never feed the binary rule: in normal form a right-hand-side `S` only
/// stands for nonempty words. The set of facts does not depend on the
/// discipline; the recorded provenance does.
pub fn cfl_reach_table_with(g: &LabeledGraph, nf: &NormalForm, discipline: Worklist) -> Result<ReachTable, ReachError> {
    check_alphabet(g.alphabet(), |c| nf.terminals().contains(&c))?;
    let k = nf.nonterminal_count();
    let n = g.vertex_count();

    let mut by_symbol: HashMap<char, Vec<Nonterminal>> = HashMap::new();
    for &(a, c) in nf.terminal_rules() {
        by_symbol.entry(c).or_default().push(a);
    }
    let mut as_left: Vec<Vec<(Nonterminal, Nonterminal)>> = vec![Vec::new(); k];
    let mut as_right: Vec<Vec<(Nonterminal, Nonterminal)>> = vec![Vec::new(); k];
    for &(a, b, c) in nf.binary_rules() {
        as_left[b].push((a, c));
        as_right[c].push((a, b));
    }

    let mut st = Saturation {
        k,
        table: ReachTable {
            names: nf.names().to_vec(),
            start: nf.start(),
            facts: Vec::new(),
            provenance: Vec::new(),
            index: HashMap::new(),
            pops: 0,
        },
        outgoing: vec![Vec::new(); n * k],
        incoming: vec![Vec::new(); n * k],
        work: VecDeque::new(),
        known: (n * n * k <= DENSE_LIMIT).then(|| vec![0u64; (n * n * k).div_ceil(64)]),
        n,
    };

    for (u, arcs) in g.arcs().iter().enumerate() {
        for arc in arcs {
            for &a in by_symbol.get(&arc.label).map(Vec::as_slice).unwrap_or(&[]) {
                let why = Justification::TerminalEdge { edge: arc.edge, direction: arc.direction };
                st.add(Fact { from: u, nonterminal: a, to: arc.head }, why);
            }
        }
    }

    loop {
        let next = match discipline {
            Worklist::Fifo => st.work.pop_front(),
            Worklist::Lifo => st.work.pop_back(),
        };
        let Some(id) = next else { break };
        st.table.pops += 1;
        let Fact { from: u, nonterminal: b, to: w } = st.table.facts[id.0];

        for &(a, c) in &as_left[b] {
            let slot = w * k + c;
            // Entries appended during this loop are paired when they are popped.
            let len = st.outgoing[slot].len();
            for i in 0..len {
                let (v, right) = st.outgoing[slot][i];
                st.add(Fact { from: u, nonterminal: a, to: v }, Justification::Binary { left: id, right });
            }
        }
        for &(a, c) in &as_right[b] {
            let slot = u * k + c;
            let len = st.incoming[slot].len();
            for i in 0..len {
                let (x, left) = st.incoming[slot][i];
                st.add(Fact { from: x, nonterminal: a, to: w }, Justification::Binary { left, right: id });
            }
        }
    }
    if nf.start_nullable() {
        for u in 0..n {
            st.table.insert(Fact { from: u, nonterminal: nf.start(), to: u }, Justification::Epsilon { vertex: u });
        }
    }
    Ok(st.table)
}

/// Largest `n * n * k` for which seen facts are tracked in a bitset
/// (2^28 bits, 32 MiB); larger instances rely on the hash index alone.
const DENSE_LIMIT: usize = 1 << 28;

struct Saturation {
    k: usize,
    n: usize,
    // bit ((u * k + A) * n + v) is set once (u, A, v) is in the table
    known: Option<Vec<u64>>,
    table: ReachTable,
    // outgoing[u * k + B] lists (v, id) for facts (u, B, v); incoming mirrors it.
    outgoing: Vec<Vec<(VertexId, FactId)>>,
    incoming: Vec<Vec<(VertexId, FactId)>>,
    work: VecDeque<FactId>,
}

impl Saturation {
    fn add(&mut self, fact: Fact, why: Justification) {
        if let Some(bits) = &mut self.known {
            let bit = (fact.from * self.k + fact.nonterminal) * self.n + fact.to;
            let (word, mask) = (bit / 64, 1u64 << (bit % 64));
            if bits[word] & mask != 0 {
                return;
            }
            bits[word] |= mask;
        }
        if let Some(id) = self.table.insert(fact, why) {
            self.outgoing[fact.from * self.k + fact.nonterminal].push((fact.to, id));
            self.incoming[fact.to * self.k + fact.nonterminal].push((fact.from, id));
            self.work.push_back(id);
        }
    }
}

/// A derivation of `root` shared through the table's provenance.
#[derive(Debug, Clone)]
pub struct Witness {
    root: FactId,
    table: ReachTable,
}

impl Witness {
    pub fn new(table: ReachTable, root: FactId) -> Self {
        Witness { root, table }
    }

    pub fn root(&self) -> FactId {
        self.root
    }

    pub fn fact(&self) -> Option<&Fact> {
        self.table.fact(self.root)
    }

    pub fn table(&self) -> &ReachTable {
        &self.table
    }

    /// Number of distinct facts the root's derivation uses.
    pub fn derivation_size(&self) -> Result<usize, ExpandError> {
        Ok(self.reachable()?.len())
    }

    /// Facts used by the derivation, in ascending id order, after checking
    /// that every justification is consistent.
    fn reachable(&self) -> Result<Vec<FactId>, ExpandError> {
        let corrupt = |msg: String| Err(ExpandError::CorruptWitness(msg));
        let t = &self.table;
        if self.root.0 >= t.len() {
            return corrupt(format!("root fact {} does not exist", self.root.0));
        }
        let mut seen = vec![false; t.len()];
        let mut stack = vec![self.root];
        seen[self.root.0] = true;
        let mut out = Vec::new();
        while let Some(id) = stack.pop() {
            out.push(id);
            let fact = t.facts[id.0];
            match t.provenance[id.0] {
                Justification::TerminalEdge { .. } => {}
                Justification::Epsilon { vertex } => {
                    if fact.from != vertex || fact.to != vertex {
                        return corrupt(format!("fact {} claims an empty walk between different vertices", id.0));
                    }
                }
                Justification::Binary { left, right } => {
                    if left.0 >= id.0 || right.0 >= id.0 {
                        return corrupt(format!("fact {} is justified by a later or missing fact", id.0));
                    }
                    let (l, r) = (t.facts[left.0], t.facts[right.0]);
                    if l.from != fact.from || l.to != r.from || r.to != fact.to {
                        return corrupt(format!("fact {} joins facts that do not meet", id.0));
                    }
                    for child in [left, right] {
                        if !seen[child.0] {
                            seen[child.0] = true;
                            stack.push(child);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, #{}, {})", self.from, self.nonterminal, self.to)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpandError {
    #[error("expanded path needs {length} steps, over the limit of {limit} (shared derivation has {derivation_size} facts)")]
    LimitExceeded { length: u64, limit: u64, derivation_size: usize },
    #[error("corrupt witness: {0}")]
    CorruptWitness(String),
}

/// Unfolds the shared derivation into an explicit walk, provided the walk
/// has at most `step_limit` edges.
pub fn expand_witness(w: &Witness, step_limit: u64) -> Result<Path, ExpandError> {
    let used = w.reachable()?;
    let t = &w.table;
    // Children precede parents in id order, so one ascending pass suffices.
    let mut length: HashMap<FactId, u64> = HashMap::with_capacity(used.len());
    for &id in &used {
        let len = match t.provenance[id.0] {
            Justification::TerminalEdge { .. } => 1,
            Justification::Epsilon { .. } => 0,
            Justification::Binary { left, right } => length[&left].saturating_add(length[&right]),
        };
        length.insert(id, len);
    }
    let total = length[&w.root];
    if total > step_limit {
        return Err(ExpandError::LimitExceeded { length: total, limit: step_limit, derivation_size: used.len() });
    }

    let mut steps = Vec::with_capacity(total as usize);
    let mut stack = vec![w.root];
    while let Some(id) = stack.pop() {
        match t.provenance[id.0] {
            Justification::TerminalEdge { edge, direction } => steps.push(Step { edge, direction }),
            Justification::Epsilon { .. } => {}
            Justification::Binary { left, right } => {
                stack.push(right);
                stack.push(left);
            }
        }
    }
    Ok(Path { start: t.facts[w.root.0].from, steps })
}

/// Normalizes `grammar` and asks for a walk from source to target whose
/// yield the start symbol derives.
pub fn cfl_reach(g: &LabeledGraph, grammar: &Cfg) -> Result<Option<Witness>, ReachError> {
    cfl_reach_normal(g, &normalize(grammar))
}

pub fn cfl_reach_normal(g: &LabeledGraph, nf: &NormalForm) -> Result<Option<Witness>, ReachError> {
    let table = cfl_reach_table(g, nf)?;
    let root = table.lookup(&Fact { from: g.source(), nonterminal: nf.start(), to: g.target() });
    Ok(root.map(|root| Witness::new(table, root)))
}
