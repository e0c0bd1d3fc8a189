//! Witness files: render a solver's path, parse it back, and replay it
//! against the graph and the language.
//!
//! ```text
//! cargo run --example witness_files
//! ```

use langreach::cli::{parse_witness, render_witness, replay_witness};
use langreach::graph::parse_graph;
use langreach::languages::d2_grammar;
use langreach::languages::Builtin;
use langreach::reach::{cfl_reach, expand_witness};

fn main() {
    let g = parse_graph("undirected 3 2\n()\n1 2 (\n0 1 )\n2 0").unwrap();
    let w = cfl_reach(&g, &d2_grammar()).unwrap().unwrap();
    let p = expand_witness(&w, 1000).unwrap();
    let text = render_witness(&g, &p);
    print!("{text}");

    let parsed = parse_witness(&text).unwrap();
    println!("replay: {:?}", replay_witness(&g, &parsed, &Builtin::D2));

    let forged = parse_witness(&text.replace("yield ()", "yield )(")).unwrap();
    println!("forged: {:?}", replay_witness(&g, &forged, &Builtin::D2));
}
