//! Exhaustive enumerators for languages no grammar covers: any predicate
//! over yields can be plugged in. Also shows the tree solver.
//!
//! ```text
//! cargo run --example enumeration
//! ```

use langreach::graph::{parse_graph, path_yield};
use langreach::languages::{abstar_member, Membership};
use langreach::reach::{bounded_enum_reach_with_stats, dag_enum_reach_with_stats, tree_reach};

/// `a^n b^n c^n` for `n >= 1`, which is not context-free.
struct Abc;

impl Membership for Abc {
    fn accepts(&self, w: &str) -> bool {
        let n = w.len() / 3;
        n > 0 && w.len() == 3 * n && *w == "a".repeat(n) + &"b".repeat(n) + &"c".repeat(n)
    }
}

fn main() {
    // Two layers of parallel edges: 8 source-to-target paths in a DAG.
    let dag = parse_graph(
        "dag 4 6\n\
         abc\n\
         0 1 a\n\
         0 1 b\n\
         1 2 b\n\
         1 2 c\n\
         2 3 c\n\
         2 3 a\n\
         0 3",
    )
    .unwrap();
    let (found, stats) = dag_enum_reach_with_stats(&dag, &Abc).unwrap();
    let p = found.expect("a b c is one of the paths");
    println!("dag: {:?} after testing {} complete paths", path_yield(&dag, &p).unwrap(), stats.facts);

    // On cyclic graphs the search is bounded; `None` then means "not within the bound".
    let cyclic = parse_graph("directed 3 5\nabc\n0 0 a\n0 1 b\n1 1 b\n1 2 c\n2 2 c\n0 2").unwrap();
    for max_len in [2, 6] {
        let (found, stats) = bounded_enum_reach_with_stats(&cyclic, &Abc, max_len);
        let answer = found.map(|p| path_yield(&cyclic, &p).unwrap());
        println!("cyclic, max_len {max_len}: {answer:?} ({} search nodes)", stats.pops);
    }

    // Trees have one path between any two vertices; its yield is checked once.
    let tree = parse_graph("undirected 4 3\nab\n0 1 a\n1 2 b\n1 3 a\n3 2").unwrap();
    let p = tree_reach(&tree, &abstar_member).unwrap();
    println!("tree: {:?}", p.map(|p| path_yield(&tree, &p).unwrap()));
}
