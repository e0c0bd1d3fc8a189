use std::collections::BTreeSet;
use std::fmt;

use super::GrammarError;
use crate::graph::Symbol;

/// A total deterministic automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    symbols: Vec<Symbol>,
    state_count: usize,
    start: usize,
    accepting: Vec<bool>,
    // row-major: delta[state * symbols.len() + symbol_index]
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds an automaton from a possibly partial transition list. Missing
    /// transitions go to one extra rejecting sink state, which is only added
    /// when needed.
    pub fn new(
        state_count: usize,
        alphabet: impl IntoIterator<Item = Symbol>,
        start: usize,
        accepting: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, Symbol, usize)>,
    ) -> Result<Self, GrammarError> {
        let symbols: Vec<Symbol> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let bad = |state: usize| GrammarError::BadState { state, state_count };
        if start >= state_count {
            return Err(bad(start));
        }
        let mut acc = vec![false; state_count];
        for q in accepting {
            *acc.get_mut(q).ok_or_else(|| bad(q))? = true;
        }
        let k = symbols.len();
        let mut delta = vec![usize::MAX; state_count * k];
        for (q, c, r) in transitions {
            if q >= state_count {
                return Err(bad(q));
            }
            if r >= state_count {
                return Err(bad(r));
            }
            let j = symbols.binary_search(&c).map_err(|_| GrammarError::ForeignSymbol(c))?;
            let slot = &mut delta[q * k + j];
            if *slot != usize::MAX && *slot != r {
                return Err(GrammarError::Nondeterministic { state: q, symbol: c });
            }
            *slot = r;
        }
        let mut state_count = state_count;
        if delta.contains(&usize::MAX) {
            let sink = state_count;
            state_count += 1;
            acc.push(false);
            delta.extend(std::iter::repeat_n(sink, k));
            for slot in delta.iter_mut() {
                if *slot == usize::MAX {
                    *slot = sink;
                }
            }
        }
        Ok(Dfa { symbols, state_count, start, accepting: acc, delta })
    }

    /// One accepting state looping on every symbol.
    pub fn universal(alphabet: impl IntoIterator<Item = Symbol>) -> Self {
        let symbols: Vec<Symbol> = alphabet.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let transitions: Vec<_> = symbols.iter().map(|&c| (0, c, 0)).collect();
        Dfa::new(1, symbols, 0, [0], transitions).expect("well-formed")
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn symbol_index(&self, c: Symbol) -> Option<usize> {
        self.symbols.binary_search(&c).ok()
    }

    pub fn next(&self, q: usize, c: Symbol) -> Option<usize> {
        self.symbol_index(c).map(|j| self.delta[q * self.symbols.len() + j])
    }
}

pub fn dfa_accepts(d: &Dfa, w: &str) -> Result<bool, GrammarError> {
    let mut q = d.start;
    for c in w.chars() {
        q = d.next(q, c).ok_or(GrammarError::ForeignSymbol(c))?;
    }
    Ok(d.accepting[q])
}

/// Parses
///
/// ```text
/// dfa <nstates>
/// <alphabet characters>
/// start <q>
/// accept <q> ...
/// <q> <char> <q'>     (any number of lines)
/// ```
pub fn parse_dfa(text: &str) -> Result<Dfa, GrammarError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(i, l)| *i == 2 || !(l.is_empty() || l.starts_with("//")));
    let syntax = |line: usize, message: String| GrammarError::Syntax { line, message };
    let number = |line: usize, tok: &str| tok.parse::<usize>().map_err(|_| syntax(line, format!("bad number {tok:?}")));

    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty input".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dfa", n] => number(hl, n)?,
        _ => return Err(syntax(hl, "expected `dfa <nstates>`".into())),
    };
    let (al, alpha) = lines.next().ok_or_else(|| syntax(hl + 1, "missing alphabet line".into()))?;
    let mut alphabet = BTreeSet::new();
    for c in alpha.chars() {
        if c.is_whitespace() || !alphabet.insert(c) {
            return Err(syntax(al, format!("bad or duplicate alphabet symbol {c:?}")));
        }
    }
    let (sl, start) = lines.next().ok_or_else(|| syntax(al + 1, "missing `start` line".into()))?;
    let start = match start.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["start", q] => number(sl, q)?,
        _ => return Err(syntax(sl, "expected `start <q>`".into())),
    };
    let (acl, accept) = lines.next().ok_or_else(|| syntax(sl + 1, "missing `accept` line".into()))?;
    let mut toks = accept.split_whitespace();
    if toks.next() != Some("accept") {
        return Err(syntax(acl, "expected `accept <q> ...`".into()));
    }
    let accepting = toks.map(|t| number(acl, t)).collect::<Result<Vec<_>, _>>()?;
    let mut transitions = Vec::new();
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let [q, c, r] = toks.as_slice() else {
            return Err(syntax(line, format!("expected `<q> <char> <q'>`, found {text:?}")));
        };
        let mut chars = c.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(syntax(line, format!("symbol must be one character, found {c:?}")));
        };
        transitions.push((number(line, q)?, c, number(line, r)?));
    }
    Dfa::new(n, alphabet, start, accepting, transitions)
}

pub fn render_dfa(d: &Dfa) -> String {
    let mut out = format!("dfa {}\n", d.state_count);
    out.extend(d.symbols.iter());
    out.push('\n');
    out.push_str(&format!("start {}\naccept", d.start));
    for q in (0..d.state_count).filter(|&q| d.accepting[q]) {
        out.push_str(&format!(" {q}"));
    }
    out.push('\n');
    for q in 0..d.state_count {
        for &c in &d.symbols {
            out.push_str(&format!("{q} {c} {}\n", d.next(q, c).expect("total")));
        }
    }
    out
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_dfa(self))
    }
}
