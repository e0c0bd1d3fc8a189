//! Regular path queries: breadth-first search on the product of a graph and
//! a DFA returns a shortest accepted walk.
//!
//! ```text
//! cargo run --example regular_reach
//! ```

use langreach::grammar::{parse_dfa, Dfa};
use langreach::graph::{parse_graph, path_yield};
use langreach::languages::abstar_dfa;
use langreach::reach::{regular_reach, regular_reach_with_stats};

fn main() {
    // An undirected graph: edges can be crossed both ways, reading the same label.
    let g = parse_graph(
        "undirected 5 5\n\
         ab\n\
         0 1 a\n\
         1 2 b\n\
         2 3 a\n\
         3 4 b\n\
         1 4 a\n\
         0 4",
    )
    .expect("well-formed graph");

    let (found, stats) = regular_reach_with_stats(&g, &abstar_dfa()).expect("alphabets match");
    let p = found.expect("0 -a- 1 -b- 2 -a- 3 -b- 4 spells abab");
    println!("(ab)*: shortest walk has {} steps, yield {:?}", p.len(), path_yield(&g, &p).unwrap());
    println!("       {} product states reached, {} popped", stats.facts, stats.pops);

    // Automata can also come from files: this one wants an odd number of a's.
    let odd_a = parse_dfa("dfa 2\nab\nstart 0\naccept 1\n0 a 1\n0 b 0\n1 a 0\n1 b 1\n").unwrap();
    match regular_reach(&g, &odd_a).unwrap() {
        Some(p) => println!("odd a's: yield {:?}", path_yield(&g, &p).unwrap()),
        // a-edges flip a two-colouring that puts 0 and 4 on the same side
        None => println!("odd a's: no walk, every 0-4 walk crosses an even number of a-edges"),
    }

    // With the one-state accept-all automaton the query is plain reachability.
    let any = Dfa::universal(['a', 'b']);
    let p = regular_reach(&g, &any).unwrap().unwrap();
    println!("plain reachability: {} steps", p.len());
}
