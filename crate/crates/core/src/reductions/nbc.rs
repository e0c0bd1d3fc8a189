use std::collections::BTreeSet;

use super::ReductionError;
use crate::graph::{Edge, GraphKind, LabeledGraph, VertexId};
use crate::languages::{parse_nbc, NbcPiece, DYCK_SYMBOLS};

/// Turns a block-choice string into a series-parallel DAG whose
/// source-to-target yields are exactly the strings obtained by fixing one
/// choice per block.
///
/// Fixed runs become a chain; a block `{y#z}` becomes two parallel chains
/// that meet again. An empty choice is a jump with no label: such jumps are
/// removed afterwards by copying every labelled edge `x -a-> y` to
/// `u -a-> z` for all `u` that jump-reach `x` and `z` jump-reachable from
/// `y`. Only the empty yield can be lost that way, which no Dyck string
/// uses.
pub fn nbc_to_d2_dagreach(w: &str) -> Result<LabeledGraph, ReductionError> {
    let pieces = parse_nbc(w)?;
    let mut b = JumpBuilder::default();
    let source = b.vertex();
    let mut at = source;
    for piece in &pieces {
        match piece {
            NbcPiece::Fixed(x) => {
                let next = b.vertex();
                b.spell(at, next, x);
                at = next;
            }
            NbcPiece::Choice(y, z) => {
                let join = b.vertex();
                b.spell(at, join, y);
                b.spell(at, join, z);
                at = join;
            }
        }
    }
    let edges = b.finish();
    Ok(LabeledGraph::new(GraphKind::Directed, b.count, DYCK_SYMBOLS, edges, source, at).expect("vertices are in range"))
}

#[derive(Default)]
struct JumpBuilder {
    count: usize,
    labelled: Vec<Edge>,
    jumps: Vec<(VertexId, VertexId)>,
}

impl JumpBuilder {
    fn vertex(&mut self) -> VertexId {
        self.count += 1;
        self.count - 1
    }

    fn spell(&mut self, from: VertexId, to: VertexId, w: &str) {
        let chars: Vec<char> = w.chars().collect();
        let Some((last, init)) = chars.split_last() else {
            self.jumps.push((from, to));
            return;
        };
        let mut at = from;
        for &c in init {
            let next = self.vertex();
            self.labelled.push(Edge { from: at, to: next, label: c });
            at = next;
        }
        self.labelled.push(Edge { from: at, to, label: *last });
    }

    fn finish(&self) -> Vec<Edge> {
        if self.jumps.is_empty() {
            return self.labelled.clone();
        }
        let mut forward = vec![Vec::new(); self.count];
        let mut backward = vec![Vec::new(); self.count];
        for &(u, v) in &self.jumps {
            forward[u].push(v);
            backward[v].push(u);
        }
        let closure = |adj: &[Vec<VertexId>], v: VertexId| {
            let mut seen = BTreeSet::from([v]);
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            seen
        };
        // parallel edges that survive elimination twice carry no extra yields
        let mut out: BTreeSet<(VertexId, VertexId, char)> = BTreeSet::new();
        let mut edges = Vec::new();
        for e in &self.labelled {
            for &u in &closure(&backward, e.from) {
                for &z in &closure(&forward, e.to) {
                    if out.insert((u, z, e.label)) {
                        edges.push(Edge { from: u, to: z, label: e.label });
                    }
                }
            }
        }
        edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_dag;
    use crate::languages::{d2_member, nbc_d2_member, BlockSyntaxError};
    use crate::reach::dag_enum_reach;

    fn reduces_correctly(w: &str) {
        let g = nbc_to_d2_dagreach(w).unwrap();
        assert!(is_dag(&g).unwrap().is_some());
        let found = dag_enum_reach(&g, &d2_member).unwrap().is_some();
        assert_eq!(found, nbc_d2_member(w).unwrap(), "{w}");
    }

    #[test]
    fn diamond_of_opens() {
        let g = nbc_to_d2_dagreach("{(#(}").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().len(), 2);
        assert!(g.edges().iter().all(|e| e.label == '(' && e.from == 0 && e.to == 1));
    }

    #[test]
    fn agrees_with_exhaustive_choice() {
        for w in ["(){)#]}", "({)#]}", "({)#(}", "{(#[}{)#]}", "[{(#[}{]#)}]", "{#()}", "({#)}", "{#}()", "(", "()"] {
            reduces_correctly(w);
        }
    }

    #[test]
    fn empty_choices() {
        let g = nbc_to_d2_dagreach("({#()})").unwrap();
        let found = dag_enum_reach(&g, &d2_member).unwrap();
        assert!(found.is_some());
        let g = nbc_to_d2_dagreach("{#}").unwrap();
        assert!(g.edges().is_empty());
    }

    #[test]
    fn malformed() {
        assert_eq!(nbc_to_d2_dagreach("{(}"), Err(ReductionError::BlockSyntax(BlockSyntaxError::Separator(0))));
    }
}
