use std::collections::BTreeSet;
use std::fmt;

use super::ReductionError;
use crate::graph::{path_yield, GraphBuilder, GraphKind, LabeledGraph, Path};
use crate::languages::{adjacency_bits, lang_a_prefix};

/// Largest vertex count [`vc_brute`] will search.
pub const VC_BRUTE_LIMIT: usize = 20;

/// A vertex-cover question: does the simple graph on vertices `1..=n` have a
/// cover of at most `k` vertices? Edges are stored as `(i, j)` with
/// `i < j`, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    k: usize,
}

impl VcInstance {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, k: usize) -> Result<Self, ReductionError> {
        if k > n {
            return Err(ReductionError::InvalidInstance(format!("budget {k} exceeds vertex count {n}")));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(ReductionError::InvalidInstance(format!("self-loop on {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(ReductionError::InvalidInstance(format!("edge {{{a}, {b}}} outside 1..={n}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(ReductionError::InvalidInstance(format!("duplicate edge {{{a}, {b}}}")));
            }
        }
        Ok(VcInstance { n, edges: set, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

pub fn is_vertex_cover(inst: &VcInstance, cover: &BTreeSet<usize>) -> bool {
    cover.len() <= inst.k && inst.edges().all(|(i, j)| cover.contains(&i) || cover.contains(&j))
}

/// Whether some subset of at most `k` vertices covers every edge.
pub fn vc_brute(inst: &VcInstance) -> Result<bool, ReductionError> {
    vc_brute_cover(inst).map(|c| c.is_some())
}

/// Exhaustive search over every subset of at most `k` vertices; returns the
/// first cover in increasing bitmask order.
pub fn vc_brute_cover(inst: &VcInstance) -> Result<Option<BTreeSet<usize>>, ReductionError> {
    if inst.n > VC_BRUTE_LIMIT {
        return Err(ReductionError::TooLarge { n: inst.n, limit: VC_BRUTE_LIMIT });
    }
    let masks: Vec<(usize, usize)> = inst.edges().map(|(i, j)| (1 << (i - 1), 1 << (j - 1))).collect();
    let found = (0usize..1 << inst.n)
        .filter(|m| m.count_ones() as usize <= inst.k)
        .find(|m| masks.iter().all(|(a, b)| m & (a | b) != 0));
    Ok(found.map(|m| (1..=inst.n).filter(|i| m >> (i - 1) & 1 == 1).collect()))
}

/// Edge count of [`vc_to_a_dagreach`]'s output: the fixed prefix path, one
/// two-edge diamond per vertex, and a `#` between consecutive diamonds.
pub fn vc_dag_edge_count(n: usize) -> usize {
    (n + 1) + (n * n.saturating_sub(1) / 2 + 1) + 2 * n + n.saturating_sub(1)
}

/// A DAG whose source-to-target yields are exactly the strings
/// `w1#w2#b1#…#bn` of the instance for every choice of cover bits. The
/// prefix is a single path; each `b_i` is a diamond with a `1` edge and a
/// `0` edge between the same two vertices. Some yield is in `lang-a` iff
/// the instance has a cover of size at most `k`.
pub fn vc_to_a_dagreach(inst: &VcInstance) -> LabeledGraph {
    let adjacency = adjacency_bits(inst.n, inst.edges());
    let mut b = GraphBuilder::new();
    let source = b.add_vertex();
    let mut at = b.extend_with(source, &lang_a_prefix(inst.k, inst.n, &adjacency));
    for i in 1..=inst.n {
        let next = b.add_vertex();
        b.add_edge(at, next, '1');
        b.add_edge(at, next, '0');
        at = next;
        if i < inst.n {
            at = b.extend_with(at, "#");
        }
    }
    b.build(GraphKind::Directed, ['#', '0', '1'], source, at).expect("vertices are in range")
}

/// Reads the chosen cover off a source-to-target path of
/// [`vc_to_a_dagreach`]: vertex `i` is chosen iff its diamond took the `1`
/// edge.
pub fn decode_vc_witness(path: &Path, inst: &VcInstance) -> Result<BTreeSet<usize>, ReductionError> {
    let g = vc_to_a_dagreach(inst);
    let mismatch = |m: String| ReductionError::PathMismatch(m);
    if path.start != g.source() {
        return Err(mismatch(format!("path starts at {}, not the source {}", path.start, g.source())));
    }
    let end = path.end(&g).map_err(|e| mismatch(e.to_string()))?;
    if end != g.target() {
        return Err(mismatch(format!("path ends at {end}, not the target {}", g.target())));
    }
    let word = path_yield(&g, path).map_err(|e| mismatch(e.to_string()))?;
    let cover_part = word.splitn(3, '#').nth(2).ok_or_else(|| mismatch("yield lacks two `#`".into()))?;
    Ok(cover_part.split('#').enumerate().filter(|(_, bit)| *bit == "1").map(|(i, _)| i + 1).collect())
}

/// ```text
/// vc <n> <m> <k>
/// <i> <j>        (m lines, 1-based)
/// ```
pub fn parse_vc(text: &str) -> Result<VcInstance, ReductionError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, message: String| ReductionError::Syntax { line, message };
    let num = |line: usize, tok: &str| tok.parse::<usize>().map_err(|_| syntax(line, format!("bad number {tok:?}")));
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty input".into()))?;
    let (n, m, k) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["vc", n, m, k] => (num(hl, n)?, num(hl, m)?, num(hl, k)?),
        _ => return Err(syntax(hl, "expected `vc <n> <m> <k>`".into())),
    };
    let mut edges = Vec::with_capacity(m);
    for idx in 0..m {
        let (line, text) = lines.next().ok_or_else(|| syntax(hl + 1 + idx, format!("expected {m} edges, found {idx}")))?;
        match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [i, j] => edges.push((num(line, i)?, num(line, j)?)),
            _ => return Err(syntax(line, format!("bad edge line {text:?}"))),
        }
    }
    if let Some((line, extra)) = lines.next() {
        return Err(syntax(line, format!("unexpected trailing content {extra:?}")));
    }
    VcInstance::new(n, edges, k)
}

pub fn render_vc(inst: &VcInstance) -> String {
    let mut out = format!("vc {} {} {}\n", inst.n, inst.edges.len(), inst.k);
    for (i, j) in inst.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

impl fmt::Display for VcInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_vc(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_dag;
    use crate::languages::lang_a_member;
    use crate::reach::dag_enum_reach;

    fn triangle(k: usize) -> VcInstance {
        VcInstance::new(3, [(1, 2), (2, 3), (1, 3)], k).unwrap()
    }

    #[test]
    fn brute_force() {
        assert!(!vc_brute(&triangle(1)).unwrap());
        assert!(vc_brute(&VcInstance::new(4, [], 0).unwrap()).unwrap());
        let c = vc_brute_cover(&triangle(2)).unwrap().unwrap();
        assert!(is_vertex_cover(&triangle(2), &c));
        let big = VcInstance::new(21, [], 0).unwrap();
        assert_eq!(vc_brute(&big), Err(ReductionError::TooLarge { n: 21, limit: 20 }));
    }

    #[test]
    fn dag_shape() {
        for n in 0..6 {
            let inst = VcInstance::new(n, [], 0).unwrap();
            let g = vc_to_a_dagreach(&inst);
            assert_eq!(g.edges().len(), vc_dag_edge_count(n), "n = {n}");
            assert!(is_dag(&g).unwrap().is_some());
        }
    }

    #[test]
    fn triangle_round_trip() {
        let g = vc_to_a_dagreach(&triangle(1));
        assert!(dag_enum_reach(&g, &lang_a_member).unwrap().is_none());
        let inst = triangle(2);
        let g = vc_to_a_dagreach(&inst);
        let p = dag_enum_reach(&g, &lang_a_member).unwrap().unwrap();
        let cover = decode_vc_witness(&p, &inst).unwrap();
        assert!(is_vertex_cover(&inst, &cover));
        assert_eq!(path_yield(&g, &p).unwrap(), "110#111#1#1#0");
    }

    #[test]
    fn decode_rejects_foreign_paths() {
        let inst = triangle(2);
        assert!(matches!(decode_vc_witness(&Path::empty(0), &inst), Err(ReductionError::PathMismatch(_))));
    }

    #[test]
    fn invalid_instances() {
        assert!(VcInstance::new(2, [(1, 1)], 0).is_err());
        assert!(VcInstance::new(2, [(1, 3)], 0).is_err());
        assert!(VcInstance::new(2, [(1, 2), (2, 1)], 0).is_err());
        assert!(VcInstance::new(2, [], 3).is_err());
    }

    #[test]
    fn file_round_trip() {
        let text = "vc 4 3 2\n1 2\n1 4\n3 4\n";
        let inst = parse_vc(text).unwrap();
        assert_eq!(render_vc(&inst), text);
        assert!(matches!(parse_vc("vc 2 1 1\n1"), Err(ReductionError::Syntax { line: 2, .. })));
    }
}
