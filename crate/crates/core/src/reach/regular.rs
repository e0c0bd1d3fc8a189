use std::collections::VecDeque;

use super::{check_alphabet, ReachError, SolveStats};
use crate::grammar::Dfa;
use crate::graph::{LabeledGraph, Path, Step};

pub fn regular_reach(g: &LabeledGraph, d: &Dfa) -> Result<Option<Path>, ReachError> {
    regular_reach_with_stats(g, d).map(|(p, _)| p)
}

/// Breadth-first search over `(vertex, state)` pairs from
/// `(source, start)`. The first accepting pair at the target gives a
/// shortest accepted path.
pub fn regular_reach_with_stats(g: &LabeledGraph, d: &Dfa) -> Result<(Option<Path>, SolveStats), ReachError> {
    check_alphabet(g.alphabet(), |c| d.symbol_index(c).is_some())?;
    let states = d.state_count();
    let arcs = g.arcs();
    let node = |v: usize, q: usize| v * states + q;
    let mut parent: Vec<Option<(usize, Step)>> = vec![None; g.vertex_count() * states];
    let mut seen = vec![false; g.vertex_count() * states];
    let mut stats = SolveStats::default();

    let origin = node(g.source(), d.start());
    seen[origin] = true;
    stats.facts += 1;
    let mut queue = VecDeque::from([(g.source(), d.start())]);
    while let Some((v, q)) = queue.pop_front() {
        stats.pops += 1;
        if v == g.target() && d.is_accepting(q) {
            let mut steps = Vec::new();
            let mut at = node(v, q);
            while let Some((prev, step)) = parent[at] {
                steps.push(step);
                at = prev;
            }
            steps.reverse();
            return Ok((Some(Path { start: g.source(), steps }), stats));
        }
        for a in &arcs[v] {
            let r = d.next(q, a.label).expect("alphabet checked");
            let next = node(a.head, r);
            if !seen[next] {
                seen[next] = true;
                stats.facts += 1;
                parent[next] = Some((node(v, q), a.step()));
                queue.push_back((a.head, r));
            }
        }
    }
    Ok((None, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, path_yield};
    use crate::languages::abstar_dfa;

    #[test]
    fn empty_path_when_source_is_target() {
        let g = parse_graph("directed 1 0\nab\n0 0").unwrap();
        assert_eq!(regular_reach(&g, &abstar_dfa()).unwrap(), Some(Path::empty(0)));
    }

    #[test]
    fn finds_ab() {
        let g = parse_graph("directed 3 2\nab\n0 1 a\n1 2 b\n0 2").unwrap();
        let p = regular_reach(&g, &abstar_dfa()).unwrap().unwrap();
        assert_eq!(path_yield(&g, &p).unwrap(), "ab");
    }

    #[test]
    fn rejects_lone_a() {
        let g = parse_graph("directed 2 1\nab\n0 1 a\n0 1").unwrap();
        assert_eq!(regular_reach(&g, &abstar_dfa()).unwrap(), None);
    }

    #[test]
    fn undirected_back_and_forth() {
        // s -a- m, reading a then walking back over the same edge reads a again
        let g = parse_graph("undirected 3 2\nab\n0 1 a\n1 2 b\n0 2").unwrap();
        let p = regular_reach(&g, &abstar_dfa()).unwrap().unwrap();
        assert_eq!(path_yield(&g, &p).unwrap(), "ab");
    }

    #[test]
    fn alphabet_mismatch() {
        let g = parse_graph("directed 2 1\nax\n0 1 a\n0 1").unwrap();
        assert_eq!(regular_reach(&g, &abstar_dfa()), Err(ReachError::AlphabetMismatch('x')));
    }
}
