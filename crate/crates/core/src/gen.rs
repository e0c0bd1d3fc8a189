//! Seeded random instances. Every generator draws only from the `Rng` it is
//! given, so a fixed seed reproduces the same instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grammar::Dfa;
use crate::graph::{Edge, GraphKind, LabeledGraph, Symbol};
use crate::reductions::{Circuit, Gate, Port, VcInstance, Wire};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` edges with uniform endpoints and labels; self-loops and parallel
/// edges are allowed. Source and target are uniform. Requires `n >= 1`.
pub fn random_graph<R: Rng>(rng: &mut R, kind: GraphKind, n: usize, m: usize, alphabet: &[Symbol]) -> LabeledGraph {
    assert!(n >= 1 && !alphabet.is_empty());
    let edges: Vec<Edge> = (0..m)
        .map(|_| Edge { from: rng.gen_range(0..n), to: rng.gen_range(0..n), label: *alphabet.choose(rng).expect("nonempty") })
        .collect();
    let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
    LabeledGraph::new(kind, n, alphabet.iter().copied(), edges, s, t).expect("endpoints in range")
}

/// A DAG whose edges all go from a lower to a higher vertex id. The source
/// is never above the target. Requires `n >= 1`.
pub fn random_dag<R: Rng>(rng: &mut R, n: usize, m: usize, alphabet: &[Symbol]) -> LabeledGraph {
    assert!(n >= 1 && !alphabet.is_empty());
    let edges = if n < 2 {
        Vec::new()
    } else {
        (0..m)
            .map(|_| {
                let u = rng.gen_range(0..n - 1);
                let v = rng.gen_range(u + 1..n);
                Edge { from: u, to: v, label: *alphabet.choose(rng).expect("nonempty") }
            })
            .collect()
    };
    let s = rng.gen_range(0..n);
    let t = rng.gen_range(s..n);
    LabeledGraph::new(GraphKind::Directed, n, alphabet.iter().copied(), edges, s, t).expect("endpoints in range")
}

/// Adds a walk from the source to the target spelling `word` through random
/// intermediate vertices. With `monotone` the walk visits strictly
/// increasing vertex ids, which keeps a forward-only DAG acyclic. Returns
/// `None` when the graph has no room for such a walk.
pub fn plant_walk<R: Rng>(rng: &mut R, g: &LabeledGraph, word: &str, monotone: bool) -> Option<LabeledGraph> {
    let labels: Vec<Symbol> = word.chars().collect();
    let (s, t) = (g.source(), g.target());
    if labels.is_empty() {
        return (s == t).then(|| g.clone());
    }
    let inner = labels.len() - 1;
    let mut stops = vec![s];
    if monotone {
        if t <= s || t - s - 1 < inner {
            return None;
        }
        let mut picked: Vec<usize> = rand::seq::index::sample(rng, t - s - 1, inner).into_iter().map(|i| s + 1 + i).collect();
        picked.sort_unstable();
        stops.extend(picked);
    } else {
        stops.extend((0..inner).map(|_| rng.gen_range(0..g.vertex_count())));
    }
    stops.push(t);
    let mut edges = g.edges().to_vec();
    edges.extend(stops.windows(2).zip(&labels).map(|(w, &label)| Edge { from: w[0], to: w[1], label }));
    let alphabet = g.alphabet().iter().copied().chain(labels.iter().copied());
    Some(LabeledGraph::new(g.kind(), g.vertex_count(), alphabet, edges, s, t).expect("endpoints in range"))
}

/// A complete DFA with uniform transitions and each state accepting with
/// probability one half.
pub fn random_dfa<R: Rng>(rng: &mut R, states: usize, alphabet: &[Symbol]) -> Dfa {
    assert!(states >= 1);
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    let transitions: Vec<(usize, Symbol, usize)> =
        (0..states).flat_map(|q| alphabet.iter().map(move |&c| (q, c))).map(|(q, c)| (q, c, rng.gen_range(0..states))).collect();
    Dfa::new(states, alphabet.iter().copied(), 0, accepting, transitions).expect("states in range")
}

/// Between 1 and `max_gates` gates; the last gate is the output. Each gate
/// reads two distinct free output wires of earlier gates when at least two
/// are left, so fan-out never exceeds 2.
pub fn random_circuit<R: Rng>(rng: &mut R, max_gates: usize) -> Circuit {
    assert!(max_gates >= 1);
    let count = rng.gen_range(1..=max_gates);
    let mut free: Vec<Wire> = Vec::new();
    let mut gates = Vec::with_capacity(count);
    for g in 0..count {
        let gate = if free.len() < 2 || rng.gen_bool(0.3) {
            Gate::Input(rng.gen_bool(0.6))
        } else {
            let l = free.swap_remove(rng.gen_range(0..free.len()));
            let r = free.swap_remove(rng.gen_range(0..free.len()));
            if rng.gen_bool(0.5) {
                Gate::And(l, r)
            } else {
                Gate::Or(l, r)
            }
        };
        gates.push(gate);
        free.push(Wire::new(g, Port::First));
        free.push(Wire::new(g, Port::Second));
    }
    Circuit::new(gates, count - 1).expect("wires are consumed once and point backwards")
}

/// Each of the `n(n-1)/2` possible edges is present with probability `p`.
pub fn random_vc<R: Rng>(rng: &mut R, n: usize, p: f64, k: usize) -> VcInstance {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    VcInstance::new(n, edges, k.min(n)).expect("well-formed")
}

const OPEN: [char; 2] = ['(', '['];

fn close(c: char) -> char {
    if c == '(' {
        ')'
    } else {
        ']'
    }
}

/// A uniform-ish random `d2` string with `pairs` bracket pairs.
pub fn random_dyck<R: Rng>(rng: &mut R, pairs: usize) -> String {
    let mut out = String::with_capacity(2 * pairs);
    let mut stack = Vec::new();
    let mut opens_left = pairs;
    while opens_left > 0 || !stack.is_empty() {
        if opens_left > 0 && (stack.is_empty() || rng.gen_bool(0.5)) {
            let c = *OPEN.choose(rng).expect("nonempty");
            stack.push(c);
            out.push(c);
            opens_left -= 1;
        } else {
            out.push(close(stack.pop().expect("nonempty")));
        }
    }
    out
}

fn random_brackets<R: Rng>(rng: &mut R, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *crate::languages::DYCK_SYMBOLS.choose(rng).expect("nonempty")).collect()
}

/// A block-choice string `x{y#z}{y#z}…` with up to `max_blocks` blocks and
/// every piece at most `max_piece` symbols long. Half of the strings have a
/// planted solution: one choice per block, together with `x`, spells a
/// `d2` string; the other choice is random.
pub fn random_nbc<R: Rng>(rng: &mut R, max_blocks: usize, max_piece: usize) -> String {
    assert!(max_piece >= 1);
    let blocks = rng.gen_range(0..=max_blocks);
    let pieces = blocks + 1;
    let planted: Vec<String> = if rng.gen_bool(0.5) {
        let capacity = pieces * max_piece / 2;
        let pairs = rng.gen_range(1..=capacity.max(1));
        let d = random_dyck(rng, pairs).chars().collect::<Vec<_>>();
        let mut cut = Vec::with_capacity(pieces);
        let mut at = 0;
        for left in (1..=pieces).rev() {
            let remaining = d.len() - at;
            let lo = remaining.saturating_sub(max_piece * (left - 1));
            let len = rng.gen_range(lo..=remaining.min(max_piece));
            cut.push(d[at..at + len].iter().collect());
            at += len;
        }
        cut
    } else {
        (0..pieces).map(|_| random_brackets(rng, max_piece)).collect()
    };
    let mut out = planted[0].clone();
    for good in &planted[1..] {
        let other = random_brackets(rng, max_piece);
        let (y, z) = if rng.gen_bool(0.5) { (good.as_str(), other.as_str()) } else { (other.as_str(), good.as_str()) };
        out.push('{');
        out.push_str(y);
        out.push('#');
        out.push_str(z);
        out.push('}');
    }
    out
}
