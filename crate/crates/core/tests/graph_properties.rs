use proptest::prelude::*;

use langreach::graph::{
    is_dag, parse_graph, path_yield, render_graph, string_path, Edge, GraphKind, LabeledGraph, Path, Step,
};

const LABELS: [char; 4] = ['a', 'b', '(', ')'];

fn graph_strategy(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n, any::<bool>()).prop_flat_map(|(n, directed)| {
        let edge = (0..n, 0..n, 0..LABELS.len()).prop_map(|(from, to, l)| Edge { from, to, label: LABELS[l] });
        (prop::collection::vec(edge, 0..=3 * n), 0..n, 0..n).prop_map(move |(edges, s, t)| {
            let kind = if directed { GraphKind::Directed } else { GraphKind::Undirected };
            LabeledGraph::new(kind, n, LABELS, edges, s, t).unwrap()
        })
    })
}

/// A random walk of up to `len` steps, choosing among incident edges.
fn walk(g: &LabeledGraph, start: usize, choices: &[usize]) -> Path {
    let mut at = start;
    let mut steps = Vec::new();
    for &c in choices {
        let mut options: Vec<(Step, usize)> = Vec::new();
        for (i, e) in g.edges().iter().enumerate() {
            if e.from == at {
                options.push((Step::forward(i), e.to));
            }
            if !g.is_directed() && e.to == at && e.from != e.to {
                options.push((Step::backward(i), e.from));
            }
        }
        if options.is_empty() {
            break;
        }
        let (step, next) = options[c % options.len()];
        steps.push(step);
        at = next;
    }
    Path { start, steps }
}

/// `reach[u][v]`: some nonempty directed walk leads from `u` to `v`.
fn transitive_closure(g: &LabeledGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for e in g.edges() {
        reach[e.from][e.to] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach
}

/// Number of distinct edge sequences from `from` to `to` in an acyclic graph.
fn count_paths(g: &LabeledGraph, from: usize, to: usize) -> usize {
    if from == to {
        return 1;
    }
    g.edges().iter().filter(|e| e.from == from).map(|e| count_paths(g, e.to, to)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn yield_length_equals_step_count(g in graph_strategy(6), start in 0usize..6, choices in prop::collection::vec(any::<usize>(), 0..12)) {
        let start = start % g.vertex_count();
        let p = walk(&g, start, &choices);
        let y = path_yield(&g, &p).unwrap();
        prop_assert_eq!(y.chars().count(), p.steps.len());
    }

    #[test]
    fn render_then_parse_is_identity(g in graph_strategy(8)) {
        let text = render_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn dag_check_matches_cycle_search(g in graph_strategy(8)) {
        let g = LabeledGraph::new(GraphKind::Directed, g.vertex_count(), LABELS, g.edges().to_vec(), g.source(), g.target()).unwrap();
        let reach = transitive_closure(&g);
        let cyclic = (0..g.vertex_count()).any(|v| reach[v][v]);
        let order = is_dag(&g).unwrap();
        prop_assert_eq!(order.is_some(), !cyclic);
        if let Some(order) = order {
            let mut position = vec![0; g.vertex_count()];
            for (i, &v) in order.iter().enumerate() {
                position[v] = i;
            }
            for e in g.edges() {
                prop_assert!(position[e.from] < position[e.to]);
            }
        }
    }

    #[test]
    fn string_path_spells_its_word(w in "[ab()]{0,12}", offset in 0usize..5) {
        let frag = string_path(&w, offset);
        let n = offset + frag.vertex_count;
        let g = LabeledGraph::new(GraphKind::Directed, n, LABELS, frag.edges.clone(), frag.first, frag.last).unwrap();
        prop_assert_eq!(count_paths(&g, frag.first, frag.last), 1);
        prop_assert_eq!(frag.edges.len(), w.chars().count());
        let steps = (0..frag.edges.len()).map(Step::forward).collect();
        let p = Path { start: frag.first, steps };
        prop_assert_eq!(p.end(&g).unwrap(), frag.last);
        prop_assert_eq!(path_yield(&g, &p).unwrap(), w);
    }
}

#[test]
fn undirected_traversal_reads_the_same_label() {
    let g = parse_graph("undirected 2 1\nx\n0 1 x\n1 0").unwrap();
    let there = Path { start: 0, steps: vec![Step::forward(0)] };
    let back = Path { start: 1, steps: vec![Step::backward(0)] };
    assert_eq!(path_yield(&g, &there).unwrap(), "x");
    assert_eq!(path_yield(&g, &back).unwrap(), "x");
}
