//! Edge-labeled graphs, paths and their yields, and the line-based graph file
//! format.
//!
//! A path may repeat vertices and edges. The empty path at `v` is a valid
//! path from `v` to `v` whose yield is the empty string, so a query with
//! `source == target` is answered positively exactly when the language
//! contains the empty string.

use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;

/// Edge labels are single printable, non-whitespace characters.
pub type Symbol = char;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Directed,
    Undirected,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Directed => "directed",
            GraphKind::Undirected => "undirected",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
    pub label: Symbol,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },
    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("label {0:?} is not in the alphabet")]
    UnknownLabel(Symbol),
    #[error("symbol {0:?} cannot be used as an edge label")]
    BadSymbol(Symbol),
    #[error("operation requires a directed graph")]
    NotDirected,
    #[error("graph has a directed cycle")]
    Cyclic,
}

/// An edge-labeled multigraph with a designated source and target.
///
/// Undirected edges are stored with `from <= to`; traversal in either
/// direction reads the same label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    kind: GraphKind,
    vertex_count: usize,
    edges: Vec<Edge>,
    source: VertexId,
    target: VertexId,
    alphabet: BTreeSet<Symbol>,
}

impl LabeledGraph {
    pub fn new(
        kind: GraphKind,
        vertex_count: usize,
        alphabet: impl IntoIterator<Item = Symbol>,
        edges: impl IntoIterator<Item = Edge>,
        source: VertexId,
        target: VertexId,
    ) -> Result<Self, GraphError> {
        let alphabet: BTreeSet<Symbol> = alphabet.into_iter().collect();
        if let Some(&bad) = alphabet.iter().find(|c| !is_label_char(**c)) {
            return Err(GraphError::BadSymbol(bad));
        }
        let check = |v: VertexId| {
            if v < vertex_count {
                Ok(())
            } else {
                Err(GraphError::VertexOutOfRange { vertex: v, vertex_count })
            }
        };
        check(source)?;
        check(target)?;
        let mut stored = Vec::new();
        for mut e in edges {
            check(e.from)?;
            check(e.to)?;
            if !alphabet.contains(&e.label) {
                return Err(GraphError::UnknownLabel(e.label));
            }
            if kind == GraphKind::Undirected && e.from > e.to {
                std::mem::swap(&mut e.from, &mut e.to);
            }
            stored.push(e);
        }
        Ok(Self { kind, vertex_count, edges: stored, source, target, alphabet })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn is_directed(&self) -> bool {
        self.kind == GraphKind::Directed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Option<&Edge> {
        self.edges.get(index)
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn alphabet(&self) -> &BTreeSet<Symbol> {
        &self.alphabet
    }

    /// Same graph with a different source/target pair.
    pub fn with_endpoints(&self, source: VertexId, target: VertexId) -> Result<Self, GraphError> {
        Self::new(self.kind, self.vertex_count, self.alphabet.iter().copied(), self.edges.iter().copied(), source, target)
    }

    /// Same graph with one more edge.
    pub fn with_edge(&self, edge: Edge) -> Result<Self, GraphError> {
        let edges = self.edges.iter().copied().chain(std::iter::once(edge));
        Self::new(self.kind, self.vertex_count, self.alphabet.iter().copied(), edges, self.source, self.target)
    }

    /// All traversable arcs, grouped by tail vertex and ordered by edge index.
    ///
    /// An undirected edge contributes a forward and a backward arc (one arc
    /// for a self-loop).
    pub fn arcs(&self) -> Vec<Vec<Arc>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for (index, e) in self.edges.iter().enumerate() {
            out[e.from].push(Arc { edge: index, direction: Direction::Forward, head: e.to, label: e.label });
            if self.kind == GraphKind::Undirected && e.from != e.to {
                out[e.to].push(Arc { edge: index, direction: Direction::Backward, head: e.from, label: e.label });
            }
        }
        for list in &mut out {
            list.sort_by_key(|a| (a.edge, a.direction));
        }
        out
    }
}

/// One traversable direction of an edge, as seen from its tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub edge: usize,
    pub direction: Direction,
    pub head: VertexId,
    pub label: Symbol,
}

impl Arc {
    pub fn step(&self) -> Step {
        Step { edge: self.edge, direction: self.direction }
    }
}

fn is_label_char(c: char) -> bool {
    !c.is_whitespace() && !c.is_control()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// From the stored `from` endpoint to `to`.
    Forward,
    /// From `to` to `from`; only valid on undirected edges.
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: usize,
    pub direction: Direction,
}

impl Step {
    pub fn forward(edge: usize) -> Self {
        Step { edge, direction: Direction::Forward }
    }

    pub fn backward(edge: usize) -> Self {
        Step { edge, direction: Direction::Backward }
    }
}

/// A walk through a graph: a start vertex and a sequence of edge traversals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Path {
    pub start: VertexId,
    pub steps: Vec<Step>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("step {step}: edge {edge} does not exist")]
    MissingEdge { step: usize, edge: usize },
    #[error("step {step}: edge {edge} does not leave vertex {at}")]
    NotIncident { step: usize, edge: usize, at: VertexId },
    #[error("step {step}: directed edge {edge} cannot be traversed backwards")]
    AgainstOrientation { step: usize, edge: usize },
    #[error("start vertex {0} out of range")]
    BadStart(VertexId),
}

impl Path {
    pub fn empty(start: VertexId) -> Self {
        Path { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks incidence and returns the vertex the walk ends at.
    pub fn end(&self, g: &LabeledGraph) -> Result<VertexId, PathError> {
        self.walk(g, |_, _| {})
    }

    fn walk(&self, g: &LabeledGraph, mut visit: impl FnMut(&Edge, VertexId)) -> Result<VertexId, PathError> {
        if self.start >= g.vertex_count() {
            return Err(PathError::BadStart(self.start));
        }
        let mut at = self.start;
        for (i, s) in self.steps.iter().enumerate() {
            let e = g.edge(s.edge).ok_or(PathError::MissingEdge { step: i, edge: s.edge })?;
            let (tail, head) = match s.direction {
                Direction::Forward => (e.from, e.to),
                Direction::Backward => {
                    if g.is_directed() {
                        return Err(PathError::AgainstOrientation { step: i, edge: s.edge });
                    }
                    (e.to, e.from)
                }
            };
            if tail != at {
                return Err(PathError::NotIncident { step: i, edge: s.edge, at });
            }
            at = head;
            visit(e, at);
        }
        Ok(at)
    }

    /// The vertices visited, starting with `start`.
    pub fn vertices(&self, g: &LabeledGraph) -> Result<Vec<VertexId>, PathError> {
        let mut out = vec![self.start];
        self.walk(g, |_, v| out.push(v))?;
        Ok(out)
    }
}

/// Concatenation of the labels read along `p`.
pub fn path_yield(g: &LabeledGraph, p: &Path) -> Result<String, PathError> {
    let mut out = String::with_capacity(p.len());
    p.walk(g, |e, _| out.push(e.label))?;
    Ok(out)
}

/// A vertex order in which every edge points forward, or `None` if the graph
/// has a directed cycle. Ties are broken towards the smaller vertex id.
pub fn is_dag(g: &LabeledGraph) -> Result<Option<Vec<VertexId>>, GraphError> {
    if !g.is_directed() {
        return Err(GraphError::NotDirected);
    }
    let n = g.vertex_count();
    let mut indegree = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for e in g.edges() {
        indegree[e.to] += 1;
        succ[e.from].push(e.to);
    }
    let mut ready: BinaryHeap<Reverse<VertexId>> = (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    Ok((order.len() == n).then_some(order))
}

/// Vertices from which `target` is reachable, ignoring labels, with the
/// length of a shortest such walk. Unreachable vertices map to `None`.
pub fn distances_to(g: &LabeledGraph, target: VertexId) -> Vec<Option<usize>> {
    let mut rev = vec![Vec::new(); g.vertex_count()];
    for (tail, arcs) in g.arcs().iter().enumerate() {
        for a in arcs {
            rev[a.head].push(tail);
        }
    }
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[target] = Some(0);
    queue.push_back(target);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &u in &rev[v] {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// A run of fresh vertices and edges that spells one string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub first: VertexId,
    pub last: VertexId,
    pub vertex_count: usize,
    pub edges: Vec<Edge>,
}

/// `|w| + 1` fresh vertices numbered from `offset`, joined by `|w|` directed
/// edges that spell `w` from `first` to `last`.
pub fn string_path(w: &str, offset: VertexId) -> Fragment {
    let edges: Vec<Edge> = w
        .chars()
        .enumerate()
        .map(|(i, label)| Edge { from: offset + i, to: offset + i + 1, label })
        .collect();
    Fragment { first: offset, last: offset + edges.len(), vertex_count: edges.len() + 1, edges }
}

/// Incremental construction of gadget graphs.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_vertices(&mut self, count: usize) -> std::ops::Range<VertexId> {
        let start = self.vertex_count;
        self.vertex_count += count;
        start..self.vertex_count
    }

    pub fn add_edge(&mut self, from: VertexId, to: VertexId, label: Symbol) {
        self.edges.push(Edge { from, to, label });
    }

    /// Appends a fresh string path and returns its endpoints.
    pub fn append_string_path(&mut self, w: &str) -> (VertexId, VertexId) {
        let frag = string_path(w, self.vertex_count);
        self.vertex_count += frag.vertex_count;
        self.edges.extend(frag.edges);
        (frag.first, frag.last)
    }

    /// Spells `w` from `from` onwards and returns the last vertex. An empty
    /// `w` returns `from` itself.
    pub fn extend_with(&mut self, from: VertexId, w: &str) -> VertexId {
        let mut at = from;
        for c in w.chars() {
            let next = self.add_vertex();
            self.add_edge(at, next, c);
            at = next;
        }
        at
    }

    /// Spells a nonempty `w` from `from` to the existing vertex `to`.
    pub fn connect_with(&mut self, from: VertexId, to: VertexId, w: &str) {
        let chars: Vec<char> = w.chars().collect();
        assert!(!chars.is_empty(), "connect_with needs a nonempty label string");
        let (last, init) = chars.split_last().expect("nonempty");
        let at = self.extend_with(from, &init.iter().collect::<String>());
        self.add_edge(at, to, *last);
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn build(
        self,
        kind: GraphKind,
        alphabet: impl IntoIterator<Item = Symbol>,
        source: VertexId,
        target: VertexId,
    ) -> Result<LabeledGraph, GraphError> {
        LabeledGraph::new(kind, self.vertex_count, alphabet, self.edges, source, target)
    }
}

/// Header keyword written by [`render_graph_as`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Directed,
    Undirected,
    Dag,
}

impl FileKind {
    fn keyword(self) -> &'static str {
        match self {
            FileKind::Directed => "directed",
            FileKind::Undirected => "undirected",
            FileKind::Dag => "dag",
        }
    }
}

/// Parses the line-based graph format:
///
/// ```text
/// directed|undirected|dag <n> <m>
/// <alphabet characters>
/// <u> <v> <label>      (m lines)
/// <s> <t>
/// ```
///
/// `dag` is `directed` plus an acyclicity check.
pub fn parse_graph(text: &str) -> Result<LabeledGraph, GraphError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let syntax = |line: usize, message: String| GraphError::Syntax { line, message };
    let semantic = |line: usize, message: String| GraphError::Semantic { line, message };

    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [kind, n, m] = fields.as_slice() else {
        return Err(syntax(hline, format!("expected `<kind> <n> <m>`, found {header:?}")));
    };
    let (kind, check_dag) = match *kind {
        "directed" => (GraphKind::Directed, false),
        "undirected" => (GraphKind::Undirected, false),
        "dag" => (GraphKind::Directed, true),
        other => return Err(syntax(hline, format!("unknown graph kind {other:?}"))),
    };
    let n: usize = n.parse().map_err(|_| syntax(hline, format!("bad vertex count {n:?}")))?;
    let m: usize = m.parse().map_err(|_| syntax(hline, format!("bad edge count {m:?}")))?;

    let (aline, alpha) = lines.next().ok_or_else(|| syntax(hline + 1, "missing alphabet line".into()))?;
    let alpha = alpha.trim();
    let mut alphabet = BTreeSet::new();
    for c in alpha.chars() {
        if !is_label_char(c) {
            return Err(syntax(aline, format!("alphabet may not contain {c:?}")));
        }
        if !alphabet.insert(c) {
            return Err(syntax(aline, format!("duplicate alphabet symbol {c:?}")));
        }
    }

    let vertex = |line: usize, tok: &str| -> Result<VertexId, GraphError> {
        let v: VertexId = tok.parse().map_err(|_| syntax(line, format!("bad vertex id {tok:?}")))?;
        if v >= n {
            return Err(semantic(line, format!("vertex {v} out of range (n = {n})")));
        }
        Ok(v)
    };

    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let (line, text) = lines.next().ok_or_else(|| semantic(aline + 1 + k, format!("expected {m} edges, found {k}")))?;
        let toks: Vec<&str> = text.split_whitespace().collect();
        let [u, v, label] = toks.as_slice() else {
            return Err(syntax(line, format!("expected `<u> <v> <label>`, found {text:?}")));
        };
        let mut chars = label.chars();
        let (Some(label), None) = (chars.next(), chars.next()) else {
            return Err(syntax(line, format!("label must be a single character, found {label:?}")));
        };
        let (u, v) = (vertex(line, u)?, vertex(line, v)?);
        if !alphabet.contains(&label) {
            return Err(semantic(line, format!("label {label:?} not in alphabet")));
        }
        edges.push(Edge { from: u, to: v, label });
    }

    let last = aline + m + 1;
    let (line, st) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| semantic(last, "missing `<s> <t>` line".into()))?;
    let toks: Vec<&str> = st.split_whitespace().collect();
    let [s, t] = toks.as_slice() else {
        return Err(syntax(line, format!("expected `<s> <t>`, found {st:?}")));
    };
    let (s, t) = (vertex(line, s)?, vertex(line, t)?);
    if let Some((line, extra)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(syntax(line, format!("unexpected trailing content {extra:?}")));
    }

    let g = LabeledGraph::new(kind, n, alphabet, edges, s, t).map_err(|e| semantic(line, e.to_string()))?;
    if check_dag && is_dag(&g)?.is_none() {
        return Err(semantic(hline, "declared `dag` but the graph has a directed cycle".into()));
    }
    Ok(g)
}

pub fn render_graph(g: &LabeledGraph) -> String {
    let kind = match g.kind() {
        GraphKind::Directed => FileKind::Directed,
        GraphKind::Undirected => FileKind::Undirected,
    };
    render_graph_as(g, kind)
}

/// Renders with an explicit header keyword. `Dag` is only meaningful for
/// acyclic directed graphs; the caller is responsible for that.
pub fn render_graph_as(g: &LabeledGraph, kind: FileKind) -> String {
    let mut out = format!("{} {} {}\n", kind.keyword(), g.vertex_count(), g.edges().len());
    out.extend(g.alphabet().iter());
    out.push('\n');
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.from, e.to, e.label));
    }
    out.push_str(&format!("{} {}\n", g.source(), g.target()));
    out
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_graph(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(labels: &str) -> LabeledGraph {
        let frag = string_path(labels, 0);
        LabeledGraph::new(GraphKind::Directed, frag.vertex_count, labels.chars(), frag.edges, frag.first, frag.last).unwrap()
    }

    #[test]
    fn parses_minimal_file() {
        let g = parse_graph("directed 2 1\na\n0 1 a\n0 1").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[Edge { from: 0, to: 1, label: 'a' }]);
        assert_eq!((g.source(), g.target()), (0, 1));
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let err = parse_graph("directed 2 1\na\n0 5 a\n0 1").unwrap_err();
        assert!(matches!(err, GraphError::Semantic { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn rejects_unknown_label_and_missing_endpoints() {
        assert!(matches!(parse_graph("directed 2 1\na\n0 1 b\n0 1"), Err(GraphError::Semantic { line: 3, .. })));
        assert!(matches!(parse_graph("directed 2 1\na\n0 1 a\n"), Err(GraphError::Semantic { .. })));
        assert!(matches!(parse_graph("directed 2 1\na\n0 1\n0 1"), Err(GraphError::Syntax { line: 3, .. })));
        assert!(matches!(parse_graph("sideways 2 0\na\n0 1"), Err(GraphError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("directed 2 0\naa\n0 1"), Err(GraphError::Syntax { line: 2, .. })));
    }

    #[test]
    fn dag_header_checks_acyclicity() {
        assert!(parse_graph("dag 2 1\na\n0 1 a\n0 1").is_ok());
        assert!(matches!(parse_graph("dag 2 2\na\n0 1 a\n1 0 a\n0 1"), Err(GraphError::Semantic { line: 1, .. })));
    }

    #[test]
    fn undirected_edges_are_canonical() {
        let g = parse_graph("undirected 3 1\nx\n2 0 x\n0 2").unwrap();
        assert_eq!(g.edges()[0], Edge { from: 0, to: 2, label: 'x' });
    }

    #[test]
    fn topological_order() {
        let g = chain("a");
        assert_eq!(is_dag(&g).unwrap(), Some(vec![0, 1]));
        let cyc = parse_graph("directed 2 2\na\n0 1 a\n1 0 a\n0 1").unwrap();
        assert_eq!(is_dag(&cyc).unwrap(), None);
        let und = parse_graph("undirected 2 0\na\n0 1").unwrap();
        assert_eq!(is_dag(&und), Err(GraphError::NotDirected));
    }

    #[test]
    fn yields() {
        let g = chain("ab");
        assert_eq!(path_yield(&g, &Path::empty(0)).unwrap(), "");
        let p = Path { start: 0, steps: vec![Step::forward(0), Step::forward(1)] };
        assert_eq!(path_yield(&g, &p).unwrap(), "ab");
        assert_eq!(p.end(&g).unwrap(), 2);

        let u = parse_graph("undirected 2 1\na\n0 1 a\n1 0").unwrap();
        let back = Path { start: 1, steps: vec![Step::backward(0)] };
        assert_eq!(path_yield(&u, &back).unwrap(), "a");
    }

    #[test]
    fn invalid_paths() {
        let g = chain("ab");
        let skip = Path { start: 0, steps: vec![Step::forward(1)] };
        assert!(matches!(path_yield(&g, &skip), Err(PathError::NotIncident { step: 0, .. })));
        let missing = Path { start: 0, steps: vec![Step::forward(7)] };
        assert!(matches!(path_yield(&g, &missing), Err(PathError::MissingEdge { .. })));
        let against = Path { start: 1, steps: vec![Step::backward(0)] };
        assert!(matches!(path_yield(&g, &against), Err(PathError::AgainstOrientation { .. })));
    }

    #[test]
    fn string_path_shapes() {
        let empty = string_path("", 4);
        assert_eq!((empty.first, empty.last, empty.vertex_count, empty.edges.len()), (4, 4, 1, 0));
        let parens = string_path("()", 0);
        assert_eq!(parens.vertex_count, 3);
        assert_eq!(parens.edges.iter().map(|e| e.label).collect::<String>(), "()");
    }

    #[test]
    fn builder_connects_existing_vertices() {
        let mut b = GraphBuilder::new();
        let s = b.add_vertex();
        let t = b.add_vertex();
        b.connect_with(s, t, "xyz");
        let g = b.build(GraphKind::Directed, "xyz".chars(), s, t).unwrap();
        let p = Path { start: s, steps: (0..3).map(Step::forward).collect() };
        assert_eq!(p.end(&g).unwrap(), t);
        assert_eq!(path_yield(&g, &p).unwrap(), "xyz");
    }
}
