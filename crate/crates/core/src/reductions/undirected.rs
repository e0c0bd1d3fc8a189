use super::ReductionError;
use crate::graph::{GraphBuilder, GraphKind, LabeledGraph};
use crate::languages::DD2_SYMBOLS;

/// Subdivides every arc `u -> v` into `u -a- m -b- v`, forgetting
/// orientation. A walk spells `ab` repeatedly only while it moves forward,
/// so `(ab)*` connectivity from `s` to `t` equals directed reachability.
pub fn reach_to_abstar_ureach(g: &LabeledGraph) -> Result<LabeledGraph, ReductionError> {
    if !g.is_directed() {
        return Err(ReductionError::NotDirected);
    }
    subdivide(g, ['a', 'b'], |_| Some("ab"))
}

/// Replaces every `d2` arc by a two-edge undirected path that spells the
/// arc's `dd2` token when read forward: `(` -> `(a`, `)` -> `b)`,
/// `[` -> `[c`, `]` -> `d]`. Read backwards, a token spells a string no
/// `dd2` member contains, which pins the reading direction.
pub fn d2reach_to_dd2_ureach(g: &LabeledGraph) -> Result<LabeledGraph, ReductionError> {
    if !g.is_directed() {
        return Err(ReductionError::NotDirected);
    }
    subdivide(g, DD2_SYMBOLS, token)
}

fn token(c: char) -> Option<&'static str> {
    match c {
        '(' => Some("(a"),
        ')' => Some("b)"),
        '[' => Some("[c"),
        ']' => Some("d]"),
        _ => None,
    }
}

/// Vertices `0..n` are kept; edge `i` gets midpoint `n + i`.
fn subdivide<const K: usize>(
    g: &LabeledGraph,
    alphabet: [char; K],
    map: impl Fn(char) -> Option<&'static str>,
) -> Result<LabeledGraph, ReductionError> {
    let n = g.vertex_count();
    let mut b = GraphBuilder::new();
    b.add_vertices(n + g.edges().len());
    for (i, e) in g.edges().iter().enumerate() {
        let tok = map(e.label).ok_or(ReductionError::ForeignSymbol(e.label))?;
        let mut chars = tok.chars();
        let (x, y) = (chars.next().expect("two symbols"), chars.next().expect("two symbols"));
        b.add_edge(e.from, n + i, x);
        b.add_edge(n + i, e.to, y);
    }
    Ok(b.build(GraphKind::Undirected, alphabet, g.source(), g.target()).expect("vertices are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, path_yield};
    use crate::languages::{abstar_dfa, d2_grammar, dd2_grammar, dd2_member};
    use crate::reach::{cfl_reach, expand_witness, regular_reach};

    #[test]
    fn abstar_shape() {
        let g = parse_graph("directed 3 2\nx\n0 1 x\n2 1 x\n0 2").unwrap();
        let u = reach_to_abstar_ureach(&g).unwrap();
        assert_eq!(u.vertex_count(), 5);
        assert!(!u.is_directed());
        assert_eq!(u.alphabet().iter().collect::<String>(), "ab");
        // 0 -> 1 <- 2: no directed path from 0 to 2
        assert_eq!(regular_reach(&u, &abstar_dfa()).unwrap(), None);
        let back = reach_to_abstar_ureach(&g.with_endpoints(2, 1).unwrap()).unwrap();
        let p = regular_reach(&back, &abstar_dfa()).unwrap().unwrap();
        assert_eq!(path_yield(&back, &p).unwrap(), "ab");
    }

    #[test]
    fn rejects_undirected_input() {
        let g = parse_graph("undirected 2 1\nx\n0 1 x\n0 1").unwrap();
        assert_eq!(reach_to_abstar_ureach(&g), Err(ReductionError::NotDirected));
        assert_eq!(d2reach_to_dd2_ureach(&g), Err(ReductionError::NotDirected));
    }

    #[test]
    fn dd2_tokens() {
        let g = parse_graph("directed 3 2\n()\n0 1 (\n1 2 )\n0 2").unwrap();
        let u = d2reach_to_dd2_ureach(&g).unwrap();
        assert_eq!(u.vertex_count(), 5);
        let w = cfl_reach(&u, &dd2_grammar()).unwrap().unwrap();
        let p = expand_witness(&w, 1000).unwrap();
        assert_eq!(path_yield(&u, &p).unwrap(), "(ab)");
    }

    #[test]
    fn backwards_traversal_is_not_balanced() {
        // only the reversed arc pair leads from 0 to 2
        let g = parse_graph("directed 3 2\n()\n1 0 )\n2 1 (\n0 2").unwrap();
        assert!(cfl_reach(&g, &d2_grammar()).unwrap().is_none());
        let u = d2reach_to_dd2_ureach(&g).unwrap();
        assert!(cfl_reach(&u, &dd2_grammar()).unwrap().is_none());
        assert!(!dd2_member(")b(a"));
    }

    #[test]
    fn foreign_label() {
        let g = parse_graph("directed 2 1\n(x\n0 1 x\n0 1").unwrap();
        assert_eq!(d2reach_to_dd2_ureach(&g), Err(ReductionError::ForeignSymbol('x')));
    }
}
