//! Seeded generators: the same seed gives the same instance everywhere.
//!
//! ```text
//! cargo run --example random_instances -- 42
//! ```

use langreach::gen::{random_circuit, random_dag, random_nbc, random_vc, seeded};
use langreach::graph::render_graph;
use langreach::languages::{d2_member, DYCK_SYMBOLS};
use langreach::reach::dag_enum_reach;
use langreach::reductions::{eval_circuit, render_circuit, render_vc, vc_brute};

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut rng = seeded(seed);

    let dag = random_dag(&mut rng, 5, 8, &DYCK_SYMBOLS);
    println!("dag (d2 reachable: {}):\n{}", dag_enum_reach(&dag, &d2_member).unwrap().is_some(), render_graph(&dag));

    let c = random_circuit(&mut rng, 6);
    println!("circuit (value {}):\n{}", eval_circuit(&c), render_circuit(&c));

    let vc = random_vc(&mut rng, 5, 0.5, 2);
    println!("vertex cover (coverable: {}):\n{}", vc_brute(&vc).unwrap(), render_vc(&vc));

    println!("block-choice string: {}", random_nbc(&mut rng, 4, 3));
}
