//! Context-free grammars, their binary normal form, CYK membership, and
//! total DFAs.

mod cyk;
mod dfa;
mod normal;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::graph::Symbol;

pub use cyk::{cyk_check, cyk_member};
pub use dfa::{dfa_accepts, parse_dfa, render_dfa, Dfa};
pub use normal::{normalize, NormalForm, Nonterminal};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrammarError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: nonterminal `{name}` is used but has no productions")]
    UndeclaredSymbol { line: usize, name: String },
    #[error("grammar has no productions")]
    NoProductions,
    #[error("symbol {0:?} is not in the alphabet")]
    ForeignSymbol(Symbol),
    #[error("state {state} out of range (automaton has {state_count} states)")]
    BadState { state: usize, state_count: usize },
    #[error("state {state} has two transitions on {symbol:?}")]
    Nondeterministic { state: usize, symbol: Symbol },
}

/// One right-hand-side item.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Terminal(Symbol),
    Nonterminal(String),
}

impl Item {
    pub fn t(c: Symbol) -> Self {
        Item::Terminal(c)
    }

    pub fn n(name: &str) -> Self {
        Item::Nonterminal(name.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Production {
    pub lhs: String,
    pub rhs: Vec<Item>,
}

impl Production {
    pub fn new(lhs: &str, rhs: Vec<Item>) -> Self {
        Production { lhs: lhs.to_string(), rhs }
    }

    fn nonterminal_count(&self) -> usize {
        self.rhs.iter().filter(|i| matches!(i, Item::Nonterminal(_))).count()
    }
}

/// A context-free grammar. The start symbol is the left-hand side of the
/// first production; nonterminals are listed in order of first definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    nonterminals: Vec<String>,
    terminals: BTreeSet<Symbol>,
    productions: Vec<Production>,
    start: String,
}

impl Cfg {
    pub fn new(productions: Vec<Production>) -> Result<Self, GrammarError> {
        Self::with_lines(productions.into_iter().map(|p| (0, p)).collect())
    }

    fn with_lines(productions: Vec<(usize, Production)>) -> Result<Self, GrammarError> {
        let start = productions.first().ok_or(GrammarError::NoProductions)?.1.lhs.clone();
        let mut nonterminals: Vec<String> = Vec::new();
        let mut seen = HashSet::new();
        for (_, p) in &productions {
            if !is_identifier(&p.lhs) {
                return Err(GrammarError::Syntax { line: 0, message: format!("`{}` is not a valid nonterminal name", p.lhs) });
            }
            if seen.insert(p.lhs.clone()) {
                nonterminals.push(p.lhs.clone());
            }
        }
        let mut terminals = BTreeSet::new();
        for (line, p) in &productions {
            for item in &p.rhs {
                match item {
                    Item::Terminal(c) => {
                        terminals.insert(*c);
                    }
                    Item::Nonterminal(name) if !seen.contains(name) => {
                        return Err(GrammarError::UndeclaredSymbol { line: *line, name: name.clone() });
                    }
                    Item::Nonterminal(_) => {}
                }
            }
        }
        Ok(Cfg { nonterminals, terminals, productions: productions.into_iter().map(|(_, p)| p).collect(), start })
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &BTreeSet<Symbol> {
        &self.terminals
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn alternatives<'a>(&'a self, lhs: &'a str) -> impl Iterator<Item = &'a Production> + 'a {
        self.productions.iter().filter(move |p| p.lhs == lhs)
    }
}

/// True when every right-hand side has at most one nonterminal occurrence.
pub fn is_linear(g: &Cfg) -> bool {
    g.productions.iter().all(|p| p.nonterminal_count() <= 1)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic()) && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Debug, PartialEq)]
enum Token {
    Ident(String),
    Terminal(Symbol),
    Arrow,
    Bar,
}

fn tokenize(line_no: usize, line: &str) -> Result<Vec<Token>, GrammarError> {
    let err = |message: String| GrammarError::Syntax { line: line_no, message };
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '\'' {
            match (chars.get(i + 1), chars.get(i + 2)) {
                (Some(&t), Some('\'')) if !t.is_whitespace() && !t.is_control() => {
                    out.push(Token::Terminal(t));
                    i += 3;
                }
                _ => return Err(err(format!("malformed terminal at column {}", i + 1))),
            }
        } else if c == '|' {
            out.push(Token::Bar);
            i += 1;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Token::Arrow);
            i += 2;
        } else if c.is_alphabetic() {
            let begin = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token::Ident(chars[begin..i].iter().collect()));
        } else {
            return Err(err(format!("unexpected character {c:?} at column {}", i + 1)));
        }
    }
    Ok(out)
}

/// Parses one production group per line: `LHS -> item item | item ...`.
/// Terminals are quoted (`'c'`), nonterminals are bare identifiers, an empty
/// alternative is an epsilon production. Blank lines and lines starting with
/// `#` are ignored.
pub fn parse_cfg(text: &str) -> Result<Cfg, GrammarError> {
    let mut productions = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = tokenize(line_no, line)?.into_iter();
        let lhs = match (tokens.next(), tokens.next()) {
            (Some(Token::Ident(name)), Some(Token::Arrow)) => name,
            _ => return Err(GrammarError::Syntax { line: line_no, message: "expected `LHS ->`".into() }),
        };
        let mut rhs = Vec::new();
        for tok in tokens {
            match tok {
                Token::Ident(name) => rhs.push(Item::Nonterminal(name)),
                Token::Terminal(c) => rhs.push(Item::Terminal(c)),
                Token::Bar => productions.push((line_no, Production { lhs: lhs.clone(), rhs: std::mem::take(&mut rhs) })),
                Token::Arrow => return Err(GrammarError::Syntax { line: line_no, message: "unexpected `->`".into() }),
            }
        }
        productions.push((line_no, Production { lhs, rhs }));
    }
    Cfg::with_lines(productions)
}

/// Renders consecutive productions with the same left-hand side on one line.
pub fn render_cfg(g: &Cfg) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < g.productions.len() {
        let lhs = &g.productions[i].lhs;
        out.push_str(lhs);
        out.push_str(" ->");
        let mut first = true;
        while i < g.productions.len() && &g.productions[i].lhs == lhs {
            if !first {
                out.push_str(" |");
            }
            first = false;
            let rhs = render_rhs(&g.productions[i].rhs);
            if !rhs.is_empty() {
                out.push(' ');
                out.push_str(&rhs);
            }
            i += 1;
        }
        out.push('\n');
    }
    out
}

fn render_rhs(rhs: &[Item]) -> String {
    rhs.iter()
        .map(|item| match item {
            Item::Terminal(c) => format!("'{c}'"),
            Item::Nonterminal(n) => n.clone(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_cfg(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_alternatives() {
        let g = parse_cfg("S -> '(' S ')' | '(' ')'").unwrap();
        assert_eq!(g.nonterminals(), &["S".to_string()]);
        assert_eq!(g.terminals().iter().collect::<String>(), "()");
        assert_eq!(g.productions().len(), 2);
        assert_eq!(g.start(), "S");
    }

    #[test]
    fn undeclared_nonterminal() {
        assert_eq!(parse_cfg("S -> T"), Err(GrammarError::UndeclaredSymbol { line: 1, name: "T".into() }));
    }

    #[test]
    fn epsilon_and_comments() {
        let g = parse_cfg("# comment\nS -> 'a' S |\n\nT -> ").unwrap();
        assert_eq!(g.productions().len(), 3);
        assert!(g.productions()[1].rhs.is_empty());
        assert!(g.productions()[2].rhs.is_empty());
        assert_eq!(parse_cfg(&render_cfg(&g)).unwrap(), g);
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_cfg("S 'a'"), Err(GrammarError::Syntax { line: 1, .. })));
        assert!(matches!(parse_cfg("S -> 'ab'"), Err(GrammarError::Syntax { .. })));
        assert!(matches!(parse_cfg("S -> _x"), Err(GrammarError::Syntax { .. })));
        assert_eq!(parse_cfg("\n# nothing\n"), Err(GrammarError::NoProductions));
    }

    #[test]
    fn linearity() {
        assert!(is_linear(&parse_cfg("S -> 'a' S 'b' | 'a' 'b'").unwrap()));
        assert!(is_linear(&parse_cfg("S -> 'a' T\nT -> 'b'").unwrap()));
        assert!(!is_linear(&parse_cfg("S -> S S | 'a'").unwrap()));
    }

    #[test]
    fn render_groups_runs() {
        let g = parse_cfg("S -> 'a' | S S\nT -> 'b'\nS -> T").unwrap();
        assert_eq!(render_cfg(&g), "S -> 'a' | S S\nT -> 'b'\nS -> T\n");
        assert_eq!(parse_cfg(&render_cfg(&g)).unwrap(), g);
    }
}
