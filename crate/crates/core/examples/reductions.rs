//! The five instance transformations, each checked against its oracle on
//! one small input.
//!
//! ```text
//! cargo run --example reductions
//! ```

use langreach::graph::{parse_graph, path_yield};
use langreach::grammar::Dfa;
use langreach::languages::{abstar_dfa, d2_grammar, dd2_grammar, lang_a_member, nbc_d2_member};
use langreach::reach::{cfl_reach, dag_enum_reach, expand_witness, regular_reach};
use langreach::reductions::{
    d2reach_to_dd2_ureach, decode_vc_witness, eval_circuit, mcvp_to_d2_reach, nbc_to_d2_dagreach, parse_circuit,
    reach_to_abstar_ureach, vc_brute, vc_to_a_dagreach, VcInstance,
};

fn main() {
    // directed reachability -> (ab)* on an undirected graph
    let g = parse_graph("directed 3 2\nx\n0 1 x\n1 2 x\n0 2").unwrap();
    let h = reach_to_abstar_ureach(&g).unwrap();
    let before = regular_reach(&g, &Dfa::universal(['x'])).unwrap().is_some();
    let p = regular_reach(&h, &abstar_dfa()).unwrap();
    println!("reach-to-abstar: {before} -> {:?}", p.map(|p| path_yield(&h, &p).unwrap()));

    // block-choice Dyck strings -> d2 on a series-parallel DAG
    for w in ["({(#)}", "{(#(}"] {
        let dag = nbc_to_d2_dagreach(w).unwrap();
        let reach = cfl_reach(&dag, &d2_grammar()).unwrap().is_some();
        println!("nbc-to-d2 {w:?}: member {} -> reachable {reach}", nbc_d2_member(w).unwrap());
    }

    // monotone circuit -> d2 on a directed graph
    let c = parse_circuit("circuit 4\ninput 1\ninput 0\nor 0 1 1 1\nand 0 2 2 1\noutput 3\n").unwrap();
    let cg = mcvp_to_d2_reach(&c);
    let w = cfl_reach(&cg, &d2_grammar()).unwrap();
    let y = w.map(|w| path_yield(&cg, &expand_witness(&w, 1000).unwrap()).unwrap());
    println!("mcvp-to-d2: value {} -> yield {y:?}", eval_circuit(&c));

    // d2 on a directed graph -> dd2 on an undirected graph
    let d = parse_graph("directed 3 2\n()[]\n0 1 (\n1 2 )\n0 2").unwrap();
    let u = d2reach_to_dd2_ureach(&d).unwrap();
    let w = cfl_reach(&u, &dd2_grammar()).unwrap().unwrap();
    println!("d2-to-dd2: yield {:?}", path_yield(&u, &expand_witness(&w, 100).unwrap()).unwrap());

    // vertex cover -> lang-a on a DAG
    for k in [1, 2] {
        let inst = VcInstance::new(3, [(1, 2), (1, 3), (2, 3)], k).unwrap();
        let dag = vc_to_a_dagreach(&inst);
        let found = dag_enum_reach(&dag, &lang_a_member).unwrap();
        let cover = found.map(|p| decode_vc_witness(&p, &inst).unwrap());
        println!("vc-to-a triangle, k = {k}: brute force {} -> cover {cover:?}", vc_brute(&inst).unwrap());
    }
}
