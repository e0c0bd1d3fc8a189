//! Dyck reachability with the worklist fixpoint, a shared-derivation
//! witness, and limit-guarded expansion into an explicit walk.
//!
//! ```text
//! cargo run --example cfl_reach
//! ```

use langreach::grammar::normalize;
use langreach::graph::{parse_graph, path_yield};
use langreach::languages::d2_grammar;
use langreach::reach::{cfl_reach, cfl_reach_table, expand_witness, ExpandError};

fn main() {
    // Vertex 0 opens `(` and `[`, loops let the walk nest them, and only the
    // matching closers lead on to the target 3.
    let g = parse_graph(
        "directed 4 6\n\
         ()[]\n\
         0 1 (\n\
         1 1 [\n\
         1 2 ]\n\
         2 2 ]\n\
         2 3 )\n\
         1 3 ]\n\
         0 3",
    )
    .unwrap();

    let nf = normalize(&d2_grammar());
    let table = cfl_reach_table(&g, &nf).unwrap();
    println!("fixpoint: {} facts after {} worklist pops", table.len(), table.stats().pops);
    for fact in table.facts().iter().filter(|f| f.nonterminal == nf.start()) {
        println!("  {} ={}=> {}", fact.from, table.nonterminal_name(fact.nonterminal), fact.to);
    }

    let witness = cfl_reach(&g, &d2_grammar()).unwrap().expect("( [ ] ) reaches 3");
    println!("witness derivation uses {} facts", witness.derivation_size().unwrap());
    let p = expand_witness(&witness, 1_000_000).unwrap();
    println!("expanded walk: {} steps, yield {:?}", p.len(), path_yield(&g, &p).unwrap());

    match expand_witness(&witness, 2) {
        Err(ExpandError::LimitExceeded { length, limit, derivation_size }) => {
            println!("with a limit of {limit}: needs {length} steps, derivation has {derivation_size} facts")
        }
        other => println!("unexpected: {other:?}"),
    }
}
