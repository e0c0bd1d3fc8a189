mod common;

use proptest::prelude::*;

use langreach::grammar::{
    cyk_check, dfa_accepts, normalize, parse_cfg, parse_dfa, render_cfg, render_dfa, Cfg, Dfa, GrammarError, Item,
    Production,
};
use langreach::languages::{d2_grammar, dd2_grammar, DD2_SYMBOLS, DYCK_SYMBOLS};

use common::{all_strings, bounded_language};

/// Compares the normal form of `g` with the fixpoint oracle on every string
/// over `alphabet` up to `max_len`.
fn assert_same_language(g: &Cfg, alphabet: &[char], max_len: usize) {
    let nf = normalize(g);
    let oracle = &bounded_language(g, max_len)[g.start()];
    for w in all_strings(alphabet, max_len) {
        let derived = if w.is_empty() { nf.start_nullable() } else { nf.derives(nf.start(), &w) };
        assert_eq!(derived, oracle.contains(&w), "word {w:?} in grammar\n{}", render_cfg(g));
    }
}

#[test]
fn d2_normal_form_matches_oracle_up_to_eight() {
    assert_same_language(&d2_grammar(), &DYCK_SYMBOLS, 8);
}

#[test]
fn dd2_normal_form_matches_oracle_up_to_six() {
    assert_same_language(&dd2_grammar(), &DD2_SYMBOLS, 6);
}

#[test]
fn dd2_members_up_to_twelve_are_derived() {
    let g = dd2_grammar();
    let nf = normalize(&g);
    let members = &bounded_language(&g, 12)["S"];
    assert!(members.contains("(a[cd]b)(ab)"));
    for w in members {
        assert!(nf.derives(nf.start(), w), "{w}");
        // Dropping any one symbol breaks the pairing.
        for cut in 0..w.len() {
            let shorter = format!("{}{}", &w[..cut], &w[cut + 1..]);
            assert!(!nf.derives(nf.start(), &shorter), "{shorter}");
        }
    }
}

#[test]
fn fresh_nonterminals_are_marked() {
    let g = parse_cfg("S -> A B | 'x'\nA -> 'a' A | \nB -> 'b' 'b' 'b'").unwrap();
    let nf = normalize(&g);
    assert!(nf.names().iter().any(|n| n.starts_with('_')));
    for &(a, b, c) in nf.binary_rules() {
        for x in [a, b, c] {
            let name = nf.name(x);
            assert!(name.starts_with('_') || g.nonterminals().iter().any(|n| n == name), "{name}");
        }
    }
    assert_eq!(nf.name(nf.start()), "S");
}

#[test]
fn foreign_symbols_are_reported() {
    let nf = normalize(&d2_grammar());
    assert_eq!(cyk_check(&nf, "(x)"), Err(GrammarError::ForeignSymbol('x')));
}

/// A grammar over `{a, b}` with nonterminals `N0..N{k-1}`; each nonterminal
/// gets at least one production.
fn grammar_strategy() -> impl Strategy<Value = Cfg> {
    (1usize..=3).prop_flat_map(|k| {
        let item = prop_oneof![
            2 => prop_oneof![Just('a'), Just('b')].prop_map(Item::t),
            1 => (0..k).prop_map(|i| Item::n(&format!("N{i}"))),
        ];
        let rhs = prop::collection::vec(item, 0..=3);
        let extra = prop::collection::vec((0..k, rhs.clone()), 0..=4);
        (prop::collection::vec(rhs, k), extra).prop_map(move |(base, extra)| {
            let mut prods: Vec<Production> =
                base.into_iter().enumerate().map(|(i, rhs)| Production::new(&format!("N{i}"), rhs)).collect();
            prods.extend(extra.into_iter().map(|(i, rhs)| Production::new(&format!("N{i}"), rhs)));
            Cfg::new(prods).unwrap()
        })
    })
}

fn dfa_strategy() -> impl Strategy<Value = (usize, Vec<bool>, Vec<usize>)> {
    (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n), prop::collection::vec(0..n, 2 * n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_grammars_keep_their_language(g in grammar_strategy()) {
        assert_same_language(&g, &['a', 'b'], 6);
    }

    #[test]
    fn only_the_start_symbol_is_nullable(g in grammar_strategy()) {
        let nf = normalize(&g);
        for a in 0..nf.nonterminal_count() {
            prop_assert!(!nf.derives(a, "") || a == nf.start());
        }
        prop_assert_eq!(nf.start_nullable(), bounded_language(&g, 0)[g.start()].contains(""));
    }

    #[test]
    fn grammar_text_round_trips(g in grammar_strategy()) {
        prop_assert_eq!(parse_cfg(&render_cfg(&g)).unwrap(), g);
    }

    #[test]
    fn dfa_runs_its_table((n, accepting, table) in dfa_strategy(), w in "[ab]{0,10}") {
        let alphabet = ['a', 'b'];
        let transitions: Vec<(usize, char, usize)> =
            (0..n).flat_map(|q| (0..2).map(move |j| (q, j))).map(|(q, j)| (q, alphabet[j], table[2 * q + j])).collect();
        let accept: Vec<usize> = (0..n).filter(|&q| accepting[q]).collect();
        let d = Dfa::new(n, alphabet, 0, accept, transitions).unwrap();
        prop_assert_eq!(d.state_count(), n);
        let mut q = 0;
        for c in w.chars() {
            q = table[2 * q + usize::from(c == 'b')];
        }
        prop_assert_eq!(dfa_accepts(&d, &w).unwrap(), accepting[q]);
        prop_assert_eq!(parse_dfa(&render_dfa(&d)).unwrap(), d);
    }
}

#[test]
fn dfa_rejects_two_moves_on_one_symbol() {
    let err = parse_dfa("dfa 2\nab\nstart 0\naccept 0\n0 a 1\n0 a 0\n").unwrap_err();
    assert_eq!(err, GrammarError::Nondeterministic { state: 0, symbol: 'a' });
}
