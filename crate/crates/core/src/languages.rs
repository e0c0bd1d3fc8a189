//! Recognizers and constructions for the concrete languages used by the
//! solvers and reductions:
//!
//! * `d2`: nonempty balanced strings over `(` `)` `[` `]`.
//! * `dd2`: the same bracket structure where every opener is followed by a
//!   companion letter and every closer is preceded by one (`(a … b)`,
//!   `[c … d]`), so the reading direction is visible in undirected graphs.
//! * `nbc-d2`: block-choice strings `x{y#z}…`; a member exists when some
//!   choice per block yields a `d2` string. Blocks use `{`, `#`, `}` so they
//!   never clash with the bracket alphabet.
//! * `lang-a`: vertex-cover certificates `w1#w2#b1#…#bn` (see [`LangAView`]).
//! * `abstar`: `(ab)*`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::grammar::{cyk_member, dfa_accepts, normalize, Cfg, Dfa, Item, NormalForm, Production};

/// A membership test usable by the enumerating solvers.
pub trait Membership {
    fn accepts(&self, w: &str) -> bool;

    /// False only if no word `prefix + x` with `|x| <= budget` is accepted.
    /// Enumerators use it to cut dead branches; the default never cuts.
    fn may_extend(&self, _prefix: &str, _budget: usize) -> bool {
        true
    }
}

impl<F: Fn(&str) -> bool> Membership for F {
    fn accepts(&self, w: &str) -> bool {
        self(w)
    }
}

impl Membership for NormalForm {
    fn accepts(&self, w: &str) -> bool {
        cyk_member(self, w)
    }
}

impl Membership for Dfa {
    fn accepts(&self, w: &str) -> bool {
        dfa_accepts(self, w).unwrap_or(false)
    }
}

/// `S -> (S) | [S] | SS | () | []`
pub fn d2_grammar() -> Cfg {
    let s = || Item::n("S");
    Cfg::new(vec![
        Production::new("S", vec![Item::t('('), s(), Item::t(')')]),
        Production::new("S", vec![Item::t('['), s(), Item::t(']')]),
        Production::new("S", vec![s(), s()]),
        Production::new("S", vec![Item::t('('), Item::t(')')]),
        Production::new("S", vec![Item::t('['), Item::t(']')]),
    ])
    .expect("well-formed")
}

/// `S -> (aSb) | [cSd] | SS | (ab) | [cd]`
pub fn dd2_grammar() -> Cfg {
    let s = || Item::n("S");
    let t = Item::t;
    Cfg::new(vec![
        Production::new("S", vec![t('('), t('a'), s(), t('b'), t(')')]),
        Production::new("S", vec![t('['), t('c'), s(), t('d'), t(']')]),
        Production::new("S", vec![s(), s()]),
        Production::new("S", vec![t('('), t('a'), t('b'), t(')')]),
        Production::new("S", vec![t('['), t('c'), t('d'), t(']')]),
    ])
    .expect("well-formed")
}

/// The two-state automaton for `(ab)*`, completed with a sink.
pub fn abstar_dfa() -> Dfa {
    Dfa::new(2, ['a', 'b'], 0, [0], [(0, 'a', 1), (1, 'b', 0)]).expect("well-formed")
}

pub const DYCK_SYMBOLS: [char; 4] = ['(', ')', '[', ']'];
pub const DD2_SYMBOLS: [char; 8] = ['(', ')', '[', ']', 'a', 'b', 'c', 'd'];

pub fn d2_member(w: &str) -> bool {
    let mut stack = Vec::new();
    for c in w.chars() {
        match c {
            '(' | '[' => stack.push(c),
            ')' if stack.pop() == Some('(') => {}
            ']' if stack.pop() == Some('[') => {}
            _ => return false,
        }
    }
    !w.is_empty() && stack.is_empty()
}

/// Whether `prefix` is the start of some `d2` string at most `budget`
/// symbols longer.
pub fn d2_may_extend(prefix: &str, budget: usize) -> bool {
    let mut stack = Vec::new();
    for c in prefix.chars() {
        match c {
            '(' | '[' => stack.push(c),
            ')' if stack.pop() == Some('(') => {}
            ']' if stack.pop() == Some('[') => {}
            _ => return false,
        }
    }
    stack.len() <= budget && (!prefix.is_empty() || budget >= 2)
}

fn dd2_normal_form() -> &'static NormalForm {
    static NF: OnceLock<NormalForm> = OnceLock::new();
    NF.get_or_init(|| normalize(&dd2_grammar()))
}

pub fn dd2_member(w: &str) -> bool {
    cyk_member(dd2_normal_form(), w)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockSyntaxError {
    #[error("position {0}: `{{` inside a block")]
    NestedBlock(usize),
    #[error("position {0}: `}}` without an open block")]
    UnopenedBlock(usize),
    #[error("block opened at position {0} is never closed")]
    UnclosedBlock(usize),
    #[error("block opened at position {0} needs exactly one `#`")]
    Separator(usize),
    #[error("position {0}: `#` outside a block")]
    StraySeparator(usize),
    #[error("position {pos}: {symbol:?} is not a bracket")]
    ForeignSymbol { pos: usize, symbol: char },
}

/// One piece of a block-choice string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NbcPiece {
    Fixed(String),
    Choice(String, String),
}

/// Splits a block-choice string into fixed runs and two-way choices.
///
/// Fixed bracket runs may appear between blocks as well as before the first
/// one; every block holds exactly one `#`.
pub fn parse_nbc(w: &str) -> Result<Vec<NbcPiece>, BlockSyntaxError> {
    let mut pieces = Vec::new();
    let mut fixed = String::new();
    let mut block: Option<(usize, String, Option<String>)> = None;
    for (pos, c) in w.chars().enumerate() {
        match c {
            '{' => {
                if block.is_some() {
                    return Err(BlockSyntaxError::NestedBlock(pos));
                }
                if !fixed.is_empty() {
                    pieces.push(NbcPiece::Fixed(std::mem::take(&mut fixed)));
                }
                block = Some((pos, String::new(), None));
            }
            '}' => {
                let Some((open, left, right)) = block.take() else {
                    return Err(BlockSyntaxError::UnopenedBlock(pos));
                };
                let right = right.ok_or(BlockSyntaxError::Separator(open))?;
                pieces.push(NbcPiece::Choice(left, right));
            }
            '#' => match &mut block {
                Some((open, _, right)) => {
                    if right.is_some() {
                        return Err(BlockSyntaxError::Separator(*open));
                    }
                    *right = Some(String::new());
                }
                None => return Err(BlockSyntaxError::StraySeparator(pos)),
            },
            '(' | ')' | '[' | ']' => match &mut block {
                Some((_, _, Some(right))) => right.push(c),
                Some((_, left, None)) => left.push(c),
                None => fixed.push(c),
            },
            symbol => return Err(BlockSyntaxError::ForeignSymbol { pos, symbol }),
        }
    }
    if let Some((open, _, _)) = block {
        return Err(BlockSyntaxError::UnclosedBlock(open));
    }
    if !fixed.is_empty() {
        pieces.push(NbcPiece::Fixed(fixed));
    }
    Ok(pieces)
}

/// Block-choice membership by trying every combination of choices.
/// Exponential in the number of blocks.
pub fn nbc_d2_member(w: &str) -> Result<bool, BlockSyntaxError> {
    let pieces = parse_nbc(w)?;
    let blocks = pieces.iter().filter(|p| matches!(p, NbcPiece::Choice(..))).count();
    assert!(blocks < 64, "too many blocks for exhaustive choice");
    let found = (0u64..(1u64 << blocks)).any(|mask| {
        let mut s = String::new();
        let mut bit = 0;
        for p in &pieces {
            match p {
                NbcPiece::Fixed(x) => s.push_str(x),
                NbcPiece::Choice(l, r) => {
                    s.push_str(if mask >> bit & 1 == 0 { l } else { r });
                    bit += 1;
                }
            }
        }
        d2_member(&s)
    });
    Ok(found)
}

/// Position of the pair `{i, j}` (1-based, `i < j`) in the row-major upper
/// triangle of an `n`-vertex adjacency matrix.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    let row = i - 1;
    row * n - row * (row + 1) / 2 + (j - i - 1)
}

/// Row-major upper-triangle adjacency bits for 1-based edges.
pub fn adjacency_bits(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<bool> {
    let mut bits = vec![false; n * n.saturating_sub(1) / 2];
    for (a, b) in edges {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        bits[pair_index(n, i, j)] = true;
    }
    bits
}

/// `1^k 0^(n-k) # adjacency #`: everything before the cover bits.
pub fn lang_a_prefix(k: usize, n: usize, adjacency: &[bool]) -> String {
    let mut s: String = (0..n).map(|i| if i < k { '1' } else { '0' }).collect();
    s.push('#');
    s.extend(adjacency.iter().map(|b| if *b { '1' } else { '0' }));
    s.push('#');
    s
}

/// Decoded `w1#w2#b1#b2#…#bn`.
///
/// `w1 = 1^k 0^(n-k)` fixes `n` and the budget `k`; `w2` is the row-major
/// upper-triangle adjacency matrix (`n(n-1)/2` bits, no separators); the
/// cover bits `b_i` are separated by single `#`, so bit `i` sits at
/// position `2i - 1` of the third part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LangAView {
    pub k: usize,
    pub n: usize,
    pub adjacency: Vec<bool>,
    pub cover_bits: Vec<bool>,
}

impl LangAView {
    pub fn encode(&self) -> String {
        let mut s = lang_a_prefix(self.k, self.n, &self.adjacency);
        let cover: Vec<&str> = self.cover_bits.iter().map(|b| if *b { "1" } else { "0" }).collect();
        s.push_str(&cover.join("#"));
        s
    }

    /// Both membership conditions: at most `k` cover bits set, and every
    /// present edge has a covered endpoint.
    pub fn is_member(&self) -> bool {
        let chosen = self.cover_bits.iter().filter(|b| **b).count();
        if chosen > self.k {
            return false;
        }
        (1..=self.n).all(|i| {
            (i + 1..=self.n).all(|j| !self.adjacency[pair_index(self.n, i, j)] || self.cover_bits[i - 1] || self.cover_bits[j - 1])
        })
    }
}

impl FromStr for LangAView {
    type Err = String;

    fn from_str(w: &str) -> Result<Self, String> {
        let mut parts = w.splitn(3, '#');
        let (Some(w1), Some(w2), Some(w3)) = (parts.next(), parts.next(), parts.next()) else {
            return Err("expected three `#`-separated parts".into());
        };
        let n = w1.chars().count();
        let k = w1.chars().take_while(|&c| c == '1').count();
        if !w1.chars().skip(k).all(|c| c == '0') {
            return Err("first part must be 1^k 0^(n-k)".into());
        }
        let bits = |s: &str| -> Option<Vec<bool>> {
            s.chars()
                .map(|c| match c {
                    '0' => Some(false),
                    '1' => Some(true),
                    _ => None,
                })
                .collect()
        };
        let adjacency = bits(w2).ok_or("adjacency part must be bits")?;
        if adjacency.len() != n * n.saturating_sub(1) / 2 {
            return Err(format!("adjacency part must have {} bits", n * n.saturating_sub(1) / 2));
        }
        let cover_bits = if n == 0 {
            if !w3.is_empty() {
                return Err("cover part must be empty when n = 0".into());
            }
            Vec::new()
        } else {
            let cells: Vec<&str> = w3.split('#').collect();
            if cells.len() != n || cells.iter().any(|c| c.chars().count() != 1) {
                return Err(format!("cover part must be {n} single bits separated by `#`"));
            }
            bits(&cells.concat()).ok_or("cover part must be bits")?
        };
        Ok(LangAView { k, n, adjacency, cover_bits })
    }
}

/// Malformed strings are non-members.
pub fn lang_a_member(w: &str) -> bool {
    w.parse::<LangAView>().map(|v| v.is_member()).unwrap_or(false)
}

pub fn abstar_member(w: &str) -> bool {
    let bytes = w.as_bytes();
    bytes.len().is_multiple_of(2) && bytes.chunks(2).all(|c| c == b"ab")
}

/// The shipped recognizers, selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    D2,
    Dd2,
    NbcD2,
    LangA,
    AbStar,
}

impl Builtin {
    pub const ALL: [Builtin; 5] = [Builtin::D2, Builtin::Dd2, Builtin::NbcD2, Builtin::LangA, Builtin::AbStar];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::D2 => "d2",
            Builtin::Dd2 => "dd2",
            Builtin::NbcD2 => "nbc-d2",
            Builtin::LangA => "lang-a",
            Builtin::AbStar => "abstar",
        }
    }

    /// A grammar for the language, when the language is context-free and we
    /// ship one.
    pub fn grammar(self) -> Option<Cfg> {
        match self {
            Builtin::D2 => Some(d2_grammar()),
            Builtin::Dd2 => Some(dd2_grammar()),
            _ => None,
        }
    }

    pub fn dfa(self) -> Option<Dfa> {
        matches!(self, Builtin::AbStar).then(abstar_dfa)
    }
}

impl Membership for Builtin {
    fn accepts(&self, w: &str) -> bool {
        match self {
            Builtin::D2 => d2_member(w),
            Builtin::Dd2 => dd2_member(w),
            Builtin::NbcD2 => nbc_d2_member(w).unwrap_or(false),
            Builtin::LangA => lang_a_member(w),
            Builtin::AbStar => abstar_member(w),
        }
    }

    fn may_extend(&self, prefix: &str, budget: usize) -> bool {
        match self {
            Builtin::D2 => d2_may_extend(prefix, budget),
            Builtin::AbStar => abstar_member(prefix) || (budget >= 1 && prefix.strip_suffix('a').is_some_and(abstar_member)),
            _ => true,
        }
    }
}

impl FromStr for Builtin {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown builtin {s:?} (expected one of d2, dd2, nbc-d2, lang-a, abstar)"))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
