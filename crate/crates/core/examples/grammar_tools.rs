//! Grammar and automaton plumbing: parsing, binary normal form, CYK,
//! linearity, and DFA files.
//!
//! ```text
//! cargo run --example grammar_tools
//! ```

use langreach::grammar::{cyk_member, dfa_accepts, is_linear, normalize, parse_cfg, parse_dfa, render_dfa};

fn main() {
    let g = parse_cfg(
        "# palindromes over a, b, including the empty word\n\
         S -> 'a' S 'a' | 'b' S 'b' | 'a' | 'b' |\n",
    )
    .unwrap();
    println!("grammar ({} productions, linear: {}):\n{g}", g.productions().len(), is_linear(&g));

    let nf = normalize(&g);
    println!("normal form: {} nonterminals {:?}", nf.nonterminal_count(), nf.names());
    println!("  {} binary rules, {} terminal rules, start nullable: {}", nf.binary_rules().len(), nf.terminal_rules().len(), nf.start_nullable());
    for w in ["", "abba", "abab", "aba"] {
        println!("  cyk {w:?}: {}", cyk_member(&nf, w));
    }

    // Missing transitions go to a fresh rejecting sink.
    let d = parse_dfa("dfa 2\nab\nstart 0\naccept 0\n0 a 1\n1 b 0\n").unwrap();
    println!("completed automaton:\n{}", render_dfa(&d));
    for w in ["abab", "aab"] {
        println!("  dfa {w:?}: {}", dfa_accepts(&d, w).unwrap());
    }
}
