use std::collections::HashSet;

use super::{ReachError, SolveStats};
use crate::graph::{distances_to, is_dag, Arc, LabeledGraph, Path};
use crate::languages::Membership;

pub fn dag_enum_reach<M: Membership + ?Sized>(g: &LabeledGraph, member: &M) -> Result<Option<Path>, ReachError> {
    dag_enum_reach_with_stats(g, member).map(|(p, _)| p)
}

/// Tries every source-to-target path of a DAG in lexicographic edge order
/// and returns the first whose yield `member` accepts.
pub fn dag_enum_reach_with_stats<M: Membership + ?Sized>(
    g: &LabeledGraph,
    member: &M,
) -> Result<(Option<Path>, SolveStats), ReachError> {
    match is_dag(g) {
        Ok(Some(_)) => {}
        _ => return Err(ReachError::NotADag),
    }
    // A DAG walk has at most n - 1 edges; the target is never revisited, so
    // stopping at it loses nothing.
    Ok(search(g, member, g.vertex_count().saturating_sub(1), true, false))
}

pub fn bounded_enum_reach<M: Membership + ?Sized>(g: &LabeledGraph, member: &M, max_len: usize) -> Option<Path> {
    bounded_enum_reach_with_stats(g, member, max_len).0
}

/// Tries every walk of at most `max_len` edges (repeats allowed) from the
/// source, in depth-first lexicographic edge order, and returns the first
/// one that ends at the target with an accepted yield. `None` only means
/// nothing was found within the bound.
///
/// Two walks that reach the same vertex with the same yield have the same
/// continuations, so only the first is expanded; the returned walk is the
/// one plain enumeration would return.
pub fn bounded_enum_reach_with_stats<M: Membership + ?Sized>(
    g: &LabeledGraph,
    member: &M,
    max_len: usize,
) -> (Option<Path>, SolveStats) {
    search(g, member, max_len, false, true)
}

fn search<M: Membership + ?Sized>(
    g: &LabeledGraph,
    member: &M,
    max_len: usize,
    stop_at_target: bool,
    merge_states: bool,
) -> (Option<Path>, SolveStats) {
    let arcs = g.arcs();
    let dist = distances_to(g, g.target());
    let mut stats = SolveStats::default();
    let fits = |v: usize, depth: usize| matches!(dist[v], Some(d) if depth + d <= max_len);
    if !fits(g.source(), 0) {
        return (None, stats);
    }

    // (vertex, yield) pairs already expanded; depth is the yield length
    let mut seen: HashSet<(usize, String)> = HashSet::new();
    if merge_states {
        seen.insert((g.source(), String::new()));
    }
    let mut trail: Vec<Arc> = Vec::new();
    let mut word = String::new();
    // next[i] is the next arc index to try from the vertex at depth i
    let mut next: Vec<usize> = vec![0];
    let mut at = vec![g.source()];
    let mut fresh = true;
    loop {
        let depth = trail.len();
        let v = at[depth];
        if fresh {
            stats.pops += 1;
            if v == g.target() {
                stats.facts += 1;
                if member.accepts(&word) {
                    let steps = trail.iter().map(Arc::step).collect();
                    return (Some(Path { start: g.source(), steps }), stats);
                }
            }
        }
        let expand = !(stop_at_target && v == g.target()) && depth < max_len;
        let mut candidate = None;
        if expand {
            for (i, a) in arcs[v].iter().enumerate().skip(next[depth]) {
                if !fits(a.head, depth + 1) {
                    continue;
                }
                word.push(a.label);
                let open = member.may_extend(&word, max_len - depth - 1)
                    && (!merge_states || seen.insert((a.head, word.clone())));
                word.pop();
                if open {
                    candidate = Some(i);
                    break;
                }
            }
        }
        match candidate {
            Some(i) => {
                next[depth] = i + 1;
                let a = arcs[v][i];
                trail.push(a);
                word.push(a.label);
                at.push(a.head);
                next.push(0);
                fresh = true;
            }
            None => {
                if trail.pop().is_none() {
                    return (None, stats);
                }
                word.pop();
                at.pop();
                next.pop();
                fresh = false;
            }
        }
    }
}
