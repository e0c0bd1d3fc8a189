//! Context-sensitive reachability over an interprocedural graph: every call
//! site gets its own bracket pair, so a walk may only return to the site it
//! was called from.
//!
//! ```text
//! cargo run --example interprocedural
//! ```

use langreach::grammar::{parse_cfg, Cfg};
use langreach::graph::{path_yield, Edge, GraphKind, LabeledGraph};
use langreach::reach::{cfl_reach, expand_witness};

// main_a calls id() at site 1, main_b at site 2. `e` is an intraprocedural step.
const MAIN_A_ENTRY: usize = 0;
const MAIN_A_EXIT: usize = 1;
const MAIN_B_ENTRY: usize = 2;
const MAIN_B_EXIT: usize = 3;
const ID_ENTRY: usize = 4;
const ID_EXIT: usize = 5;

/// Matched call/return pairs `( )` for site 1 and `[ ]` for site 2, with
/// any number of `e` steps anywhere.
fn realizable_paths() -> Cfg {
    parse_cfg(
        "S -> S S | '(' S ')' | '[' S ']' | '(' ')' | '[' ']' | 'e' | \n",
    )
    .unwrap()
}

fn graph(source: usize, target: usize) -> LabeledGraph {
    let edges = [
        Edge { from: MAIN_A_ENTRY, to: ID_ENTRY, label: '(' },
        Edge { from: ID_EXIT, to: MAIN_A_EXIT, label: ')' },
        Edge { from: MAIN_B_ENTRY, to: ID_ENTRY, label: '[' },
        Edge { from: ID_EXIT, to: MAIN_B_EXIT, label: ']' },
        Edge { from: ID_ENTRY, to: ID_EXIT, label: 'e' },
    ];
    LabeledGraph::new(GraphKind::Directed, 6, ['(', ')', '[', ']', 'e'], edges, source, target).unwrap()
}

fn main() {
    let grammar = realizable_paths();
    for (name, s, t) in [
        ("main_a entry -> main_a exit", MAIN_A_ENTRY, MAIN_A_EXIT),
        ("main_a entry -> main_b exit", MAIN_A_ENTRY, MAIN_B_EXIT),
        ("main_b entry -> main_b exit", MAIN_B_ENTRY, MAIN_B_EXIT),
    ] {
        let g = graph(s, t);
        match cfl_reach(&g, &grammar).unwrap() {
            Some(w) => {
                let p = expand_witness(&w, 1000).unwrap();
                println!("{name}: realizable via {:?}", path_yield(&g, &p).unwrap());
            }
            None => println!("{name}: only through a mismatched return"),
        }
    }
}
