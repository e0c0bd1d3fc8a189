use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Cfg, Item};
use crate::graph::Symbol;

/// Index of a nonterminal inside a [`NormalForm`].
pub type Nonterminal = usize;

/// Binary normal form: every rule is `A -> B C` or `A -> a`. The empty
/// string is only represented by `start_nullable`.
///
/// Original nonterminal names are kept. Introduced nonterminals start with
/// `_`, which user grammars cannot produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    names: Vec<String>,
    start: Nonterminal,
    start_nullable: bool,
    binary_rules: Vec<(Nonterminal, Nonterminal, Nonterminal)>,
    terminal_rules: Vec<(Nonterminal, Symbol)>,
    terminals: BTreeSet<Symbol>,
}

impl NormalForm {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: Nonterminal) -> &str {
        &self.names[a]
    }

    pub fn lookup(&self, name: &str) -> Option<Nonterminal> {
        self.names.iter().position(|n| n == name)
    }

    pub fn nonterminal_count(&self) -> usize {
        self.names.len()
    }

    pub fn start(&self) -> Nonterminal {
        self.start
    }

    pub fn start_nullable(&self) -> bool {
        self.start_nullable
    }

    pub fn binary_rules(&self) -> &[(Nonterminal, Nonterminal, Nonterminal)] {
        &self.binary_rules
    }

    pub fn terminal_rules(&self) -> &[(Nonterminal, Symbol)] {
        &self.terminal_rules
    }

    /// Terminals of the source grammar, including ones no surviving rule uses.
    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Sym {
    T(Symbol),
    N(usize),
}

type Rules = BTreeSet<(usize, Vec<Sym>)>;

/// Converts `g` into binary normal form with the same language.
///
/// Steps: nullable elimination, unit-rule elimination, removal of useless
/// nonterminals, terminal lifting, right-binarization. Rules are processed
/// in sorted order so the result is reproducible.
pub fn normalize(g: &Cfg) -> NormalForm {
    let mut names: Vec<String> = g.nonterminals().to_vec();
    let index: BTreeMap<&str, usize> = g.nonterminals().iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let start = index[g.start()];
    let rules: Rules = g
        .productions()
        .iter()
        .map(|p| {
            let rhs = p
                .rhs
                .iter()
                .map(|item| match item {
                    Item::Terminal(c) => Sym::T(*c),
                    Item::Nonterminal(n) => Sym::N(index[n.as_str()]),
                })
                .collect();
            (index[p.lhs.as_str()], rhs)
        })
        .collect();

    let nullable = nullable_set(names.len(), &rules);
    let rules = drop_nullable(&rules, &nullable);
    let rules = drop_units(names.len(), &rules);
    let rules = drop_useless(names.len(), start, &rules);

    // Lift terminals inside long right-hand sides, then binarize.
    let mut lifted: BTreeMap<Symbol, usize> = BTreeMap::new();
    let mut binary = BTreeSet::new();
    let mut terminal = BTreeSet::new();
    let mut fresh_per_lhs: BTreeMap<usize, usize> = BTreeMap::new();
    for (lhs, rhs) in &rules {
        if let [Sym::T(c)] = rhs.as_slice() {
            terminal.insert((*lhs, *c));
            continue;
        }
        let mut items: Vec<usize> = Vec::with_capacity(rhs.len());
        for s in rhs {
            items.push(match s {
                Sym::N(n) => *n,
                Sym::T(c) => *lifted.entry(*c).or_insert_with(|| {
                    names.push(format!("_'{c}'"));
                    terminal.insert((names.len() - 1, *c));
                    names.len() - 1
                }),
            });
        }
        let mut head = *lhs;
        while items.len() > 2 {
            let first = items.remove(0);
            let counter = fresh_per_lhs.entry(*lhs).or_insert(0);
            *counter += 1;
            names.push(format!("_{}.{}", names[*lhs], counter));
            let next = names.len() - 1;
            binary.insert((head, first, next));
            head = next;
        }
        debug_assert_eq!(items.len(), 2, "unit and empty rules were eliminated");
        binary.insert((head, items[0], items[1]));
    }

    // Renumber so only nonterminals that occur (plus the start) are kept.
    let mut used = vec![false; names.len()];
    used[start] = true;
    for &(a, b, c) in &binary {
        used[a] = true;
        used[b] = true;
        used[c] = true;
    }
    for &(a, _) in &terminal {
        used[a] = true;
    }
    let mut remap = vec![usize::MAX; names.len()];
    let mut kept = Vec::new();
    for (i, name) in names.into_iter().enumerate() {
        if used[i] {
            remap[i] = kept.len();
            kept.push(name);
        }
    }
    let mut binary_rules: Vec<_> = binary.into_iter().map(|(a, b, c)| (remap[a], remap[b], remap[c])).collect();
    binary_rules.sort_unstable();
    let mut terminal_rules: Vec<_> = terminal.into_iter().map(|(a, c)| (remap[a], c)).collect();
    terminal_rules.sort_unstable();

    NormalForm {
        names: kept,
        start: remap[start],
        start_nullable: nullable[start],
        binary_rules,
        terminal_rules,
        terminals: g.terminals().clone(),
    }
}

fn nullable_set(count: usize, rules: &Rules) -> Vec<bool> {
    let mut nullable = vec![false; count];
    loop {
        let mut changed = false;
        for (lhs, rhs) in rules {
            if !nullable[*lhs] && rhs.iter().all(|s| matches!(s, Sym::N(n) if nullable[*n])) {
                nullable[*lhs] = true;
                changed = true;
            }
        }
        if !changed {
            return nullable;
        }
    }
}

/// Every variant of every rule with some nullable occurrences dropped,
/// except the empty variant.
fn drop_nullable(rules: &Rules, nullable: &[bool]) -> Rules {
    let mut out = Rules::new();
    for (lhs, rhs) in rules {
        let mut variants: Vec<Vec<Sym>> = vec![Vec::new()];
        for s in rhs {
            let optional = matches!(s, Sym::N(n) if nullable[*n]);
            let mut next = Vec::with_capacity(variants.len() * 2);
            for v in variants {
                if optional {
                    next.push(v.clone());
                }
                let mut with = v;
                with.push(s.clone());
                next.push(with);
            }
            variants = next;
        }
        out.extend(variants.into_iter().filter(|v| !v.is_empty()).map(|v| (*lhs, v)));
    }
    out
}

fn drop_units(count: usize, rules: &Rules) -> Rules {
    let mut unit_succ = vec![Vec::new(); count];
    for (lhs, rhs) in rules {
        if let [Sym::N(b)] = rhs.as_slice() {
            unit_succ[*lhs].push(*b);
        }
    }
    let mut by_lhs: Vec<Vec<&Vec<Sym>>> = vec![Vec::new(); count];
    for (lhs, rhs) in rules {
        if !matches!(rhs.as_slice(), [Sym::N(_)]) {
            by_lhs[*lhs].push(rhs);
        }
    }
    let mut out = Rules::new();
    for a in 0..count {
        let mut seen = vec![false; count];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(b) = queue.pop_front() {
            for rhs in &by_lhs[b] {
                out.insert((a, (*rhs).clone()));
            }
            for &c in &unit_succ[b] {
                if !seen[c] {
                    seen[c] = true;
                    queue.push_back(c);
                }
            }
        }
    }
    out
}

/// Removes rules mentioning non-generating nonterminals and rules of
/// nonterminals unreachable from the start.
fn drop_useless(count: usize, start: usize, rules: &Rules) -> Rules {
    let mut generating = vec![false; count];
    loop {
        let mut changed = false;
        for (lhs, rhs) in rules {
            if !generating[*lhs] && rhs.iter().all(|s| matches!(s, Sym::T(_)) || matches!(s, Sym::N(n) if generating[*n])) {
                generating[*lhs] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let productive: Vec<_> =
        rules.iter().filter(|(_, rhs)| rhs.iter().all(|s| !matches!(s, Sym::N(n) if !generating[*n]))).collect();
    let mut reachable = vec![false; count];
    reachable[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for (lhs, rhs) in &productive {
            if *lhs != a {
                continue;
            }
            for s in rhs {
                if let Sym::N(n) = s {
                    if !reachable[*n] {
                        reachable[*n] = true;
                        queue.push_back(*n);
                    }
                }
            }
        }
    }
    productive.into_iter().filter(|(lhs, _)| reachable[*lhs]).cloned().collect()
}
