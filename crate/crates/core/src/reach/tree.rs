use std::collections::VecDeque;

use super::ReachError;
use crate::graph::{path_yield, LabeledGraph, Path, Step};
use crate::languages::Membership;

/// Finds the unique source-to-target path of a tree and returns it iff its
/// yield is accepted. For directed graphs the underlying undirected graph
/// must be a tree and the path must follow every edge's orientation.
pub fn tree_reach<M: Membership + ?Sized>(g: &LabeledGraph, member: &M) -> Result<Option<Path>, ReachError> {
    let n = g.vertex_count();
    if n == 0 || g.edges().len() != n - 1 {
        return Err(ReachError::NotATree);
    }
    let mut adj: Vec<Vec<(usize, Step)>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        if e.from == e.to {
            return Err(ReachError::NotATree);
        }
        adj[e.from].push((e.to, Step::forward(i)));
        adj[e.to].push((e.from, Step::backward(i)));
    }
    let mut parent: Vec<Option<(usize, Step)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[g.source()] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([g.source()]);
    while let Some(v) = queue.pop_front() {
        for &(w, step) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                parent[w] = Some((v, step));
                queue.push_back(w);
            }
        }
    }
    if reached != n {
        return Err(ReachError::NotATree);
    }

    let mut steps = Vec::new();
    let mut at = g.target();
    while let Some((prev, step)) = parent[at] {
        if g.is_directed() && step.direction != crate::graph::Direction::Forward {
            return Err(ReachError::NoRespectingPath);
        }
        steps.push(step);
        at = prev;
    }
    steps.reverse();
    let path = Path { start: g.source(), steps };
    let word = path_yield(g, &path).expect("tree path is valid");
    Ok(member.accepts(&word).then_some(path))
}
