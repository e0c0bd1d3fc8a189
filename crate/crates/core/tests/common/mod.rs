//! Independent reference implementations used only by the test suites.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use langreach::grammar::{Cfg, Item};
use langreach::graph::{Direction, LabeledGraph, Path};

/// Every string over `alphabet` of length at most `max_len`, shortest first.
pub fn all_strings(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| alphabet.iter().map(move |c| format!("{w}{c}"))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// For every nonterminal, the set of words of length at most `max_len` it
/// derives. Computed as a least fixpoint over whole sentential forms, with no
/// normal form involved.
pub fn bounded_language(g: &Cfg, max_len: usize) -> BTreeMap<String, BTreeSet<String>> {
    let mut lang: BTreeMap<String, BTreeSet<String>> = g.nonterminals().iter().map(|n| (n.clone(), BTreeSet::new())).collect();
    loop {
        let mut changed = false;
        for p in g.productions() {
            let mut partial: BTreeSet<String> = BTreeSet::from([String::new()]);
            for item in &p.rhs {
                let options: Vec<String> = match item {
                    Item::Terminal(c) => vec![c.to_string()],
                    Item::Nonterminal(n) => lang[n].iter().cloned().collect(),
                };
                partial = partial
                    .iter()
                    .flat_map(|a| options.iter().map(move |b| format!("{a}{b}")))
                    .filter(|w| w.chars().count() <= max_len)
                    .collect();
            }
            let target = lang.get_mut(&p.lhs).expect("declared");
            for w in partial {
                changed |= target.insert(w);
            }
        }
        if !changed {
            return lang;
        }
    }
}

/// Replays `p` edge by edge, returning the end vertex and the labels read.
pub fn replay(g: &LabeledGraph, p: &Path) -> Option<(usize, String)> {
    let mut at = p.start;
    if at >= g.vertex_count() {
        return None;
    }
    let mut word = String::new();
    for s in &p.steps {
        let e = g.edges().get(s.edge)?;
        at = match s.direction {
            Direction::Forward if e.from == at => e.to,
            Direction::Backward if !g.is_directed() && e.to == at => e.from,
            _ => return None,
        };
        word.push(e.label);
    }
    Some((at, word))
}

/// True when `p` is a walk from the source to the target.
pub fn connects(g: &LabeledGraph, p: &Path) -> bool {
    p.start == g.source() && replay(g, p).is_some_and(|(end, _)| end == g.target())
}

/// Outgoing `(label, head)` moves of every vertex, both directions for
/// undirected edges.
pub fn moves(g: &LabeledGraph) -> Vec<Vec<(char, usize)>> {
    let mut out = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        out[e.from].push((e.label, e.to));
        if !g.is_directed() {
            out[e.to].push((e.label, e.from));
        }
    }
    out
}

/// Words of length at most `max_len` spelled by some walk from `from` to `to`.
pub fn walk_words(g: &LabeledGraph, from: usize, to: usize, max_len: usize) -> BTreeSet<String> {
    let moves = moves(g);
    let mut seen: HashSet<(usize, String)> = HashSet::new();
    let mut queue = VecDeque::from([(from, String::new())]);
    let mut out = BTreeSet::new();
    seen.insert((from, String::new()));
    while let Some((v, w)) = queue.pop_front() {
        if v == to {
            out.insert(w.clone());
        }
        if w.chars().count() == max_len {
            continue;
        }
        for &(c, u) in &moves[v] {
            let next = (u, format!("{w}{c}"));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    out
}

/// Balanced-bracket check with an explicit stack; `pairs` maps each opener
/// token to its closer token. The whole word must split into tokens.
pub fn paired_tokens(w: &str, pairs: &[(&str, &str)]) -> bool {
    let mut stack: Vec<&str> = Vec::new();
    let mut rest = w;
    if w.is_empty() {
        return false;
    }
    while !rest.is_empty() {
        if let Some(&(open, close)) = pairs.iter().find(|(open, _)| rest.starts_with(open)) {
            stack.push(close);
            rest = &rest[open.len()..];
            continue;
        }
        match pairs.iter().find(|(_, close)| rest.starts_with(close)) {
            Some(&(_, close)) if stack.last() == Some(&close) => {
                stack.pop();
                rest = &rest[close.len()..];
            }
            _ => return false,
        }
    }
    stack.is_empty()
}

pub const D2_PAIRS: [(&str, &str); 2] = [("(", ")"), ("[", "]")];
pub const DD2_PAIRS: [(&str, &str); 2] = [("(a", "b)"), ("[c", "d]")];
