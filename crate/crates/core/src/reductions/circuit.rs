use std::collections::HashSet;
use std::fmt;

use super::ReductionError;
use crate::graph::{GraphBuilder, GraphKind, LabeledGraph, VertexId};
use crate::languages::DYCK_SYMBOLS;

/// Which of a gate's two output wires a consumer reads. The first wire is
/// traversed with `(`/`)`, the second with `[`/`]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Port {
    First,
    Second,
}

impl Port {
    pub fn number(self) -> u8 {
        match self {
            Port::First => 1,
            Port::Second => 2,
        }
    }

    fn brackets(self) -> (char, char) {
        match self {
            Port::First => ('(', ')'),
            Port::Second => ('[', ']'),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wire {
    pub gate: usize,
    pub port: Port,
}

impl Wire {
    pub fn new(gate: usize, port: Port) -> Self {
        Wire { gate, port }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Input(bool),
    And(Wire, Wire),
    Or(Wire, Wire),
}

/// A monotone circuit with fan-in 2 and fan-out at most 2. Gates only read
/// earlier gates, and each output wire feeds at most one consumer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    gates: Vec<Gate>,
    output: usize,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>, output: usize) -> Result<Self, ReductionError> {
        let mut used: HashSet<Wire> = HashSet::new();
        for (g, gate) in gates.iter().enumerate() {
            if let Gate::And(l, r) | Gate::Or(l, r) = gate {
                for w in [l, r] {
                    if w.gate >= g {
                        return Err(ReductionError::BadGateRef { gate: g, target: w.gate });
                    }
                    if !used.insert(*w) {
                        return Err(ReductionError::PortConflict { gate: g, target: w.gate, port: w.port.number() });
                    }
                }
            }
        }
        if output >= gates.len() {
            return Err(ReductionError::BadOutput(output));
        }
        Ok(Circuit { gates, output })
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }
}

pub fn eval_circuit(c: &Circuit) -> bool {
    let mut value = Vec::with_capacity(c.gates.len());
    for gate in &c.gates {
        let v = match *gate {
            Gate::Input(b) => b,
            Gate::And(l, r) => value[l.gate] && value[r.gate],
            Gate::Or(l, r) => value[l.gate] || value[r.gate],
        };
        value.push(v);
    }
    value[c.output]
}

/// Replaces every gate by a gadget with an entry and an exit vertex such
/// that a balanced walk from entry to exit exists iff the gate evaluates
/// to 1.
///
/// * `Input(1)`: entry `(` x `)` exit. `Input(0)`: entry and exit, no edges.
/// * `And(l, r)`: fresh entry, middle, exit; entry opens l's port bracket
///   into l's entry, l's exit closes it into the middle, and likewise for r
///   from the middle to the exit.
/// * `Or(l, r)`: fresh entry and exit, with the same open/close wrapping
///   around l and around r in parallel.
///
/// A child shared by two consumers is entered with a different bracket type
/// from each, so a walk can only leave through the consumer it came from.
pub fn mcvp_to_d2_reach(c: &Circuit) -> LabeledGraph {
    let mut b = GraphBuilder::new();
    let mut entry: Vec<VertexId> = Vec::with_capacity(c.gates.len());
    let mut exit: Vec<VertexId> = Vec::with_capacity(c.gates.len());
    for gate in &c.gates {
        let (i, o) = match *gate {
            Gate::Input(true) => b.append_string_path("()"),
            Gate::Input(false) => (b.add_vertex(), b.add_vertex()),
            Gate::And(l, r) => {
                let (i, m, o) = (b.add_vertex(), b.add_vertex(), b.add_vertex());
                wrap(&mut b, &entry, &exit, l, i, m);
                wrap(&mut b, &entry, &exit, r, m, o);
                (i, o)
            }
            Gate::Or(l, r) => {
                let (i, o) = (b.add_vertex(), b.add_vertex());
                wrap(&mut b, &entry, &exit, l, i, o);
                wrap(&mut b, &entry, &exit, r, i, o);
                (i, o)
            }
        };
        entry.push(i);
        exit.push(o);
    }
    b.build(GraphKind::Directed, DYCK_SYMBOLS, entry[c.output], exit[c.output]).expect("gadget vertices are in range")
}

fn wrap(b: &mut GraphBuilder, entry: &[VertexId], exit: &[VertexId], w: Wire, from: VertexId, to: VertexId) {
    let (open, close) = w.port.brackets();
    b.add_edge(from, entry[w.gate], open);
    b.add_edge(exit[w.gate], to, close);
}

/// ```text
/// circuit <ngates>
/// input 0|1
/// and <l> <lport> <r> <rport>
/// or <l> <lport> <r> <rport>
/// output <g>
/// ```
/// Gates are numbered from 0 in file order; ports are 1 or 2.
pub fn parse_circuit(text: &str) -> Result<Circuit, ReductionError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, message: String| ReductionError::Syntax { line, message };
    let num = |line: usize, tok: &str| tok.parse::<usize>().map_err(|_| syntax(line, format!("bad number {tok:?}")));

    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty input".into()))?;
    let count = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["circuit", n] => num(hl, n)?,
        _ => return Err(syntax(hl, "expected `circuit <ngates>`".into())),
    };
    let port = |line: usize, tok: &str| match tok {
        "1" => Ok(Port::First),
        "2" => Ok(Port::Second),
        _ => Err(syntax(line, format!("port must be 1 or 2, found {tok:?}"))),
    };
    let mut gates = Vec::with_capacity(count);
    for k in 0..count {
        let (line, text) = lines.next().ok_or_else(|| syntax(hl + 1 + k, format!("expected {count} gates, found {k}")))?;
        let toks: Vec<&str> = text.split_whitespace().collect();
        let gate = match toks.as_slice() {
            ["input", "0"] => Gate::Input(false),
            ["input", "1"] => Gate::Input(true),
            [op @ ("and" | "or"), l, lp, r, rp] => {
                let l = Wire::new(num(line, l)?, port(line, lp)?);
                let r = Wire::new(num(line, r)?, port(line, rp)?);
                if *op == "and" {
                    Gate::And(l, r)
                } else {
                    Gate::Or(l, r)
                }
            }
            _ => return Err(syntax(line, format!("bad gate line {text:?}"))),
        };
        gates.push(gate);
    }
    let (ol, out) = lines.next().ok_or_else(|| syntax(hl + count + 1, "missing `output <g>`".into()))?;
    let output = match out.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["output", g] => num(ol, g)?,
        _ => return Err(syntax(ol, "expected `output <g>`".into())),
    };
    if let Some((line, extra)) = lines.next() {
        return Err(syntax(line, format!("unexpected trailing content {extra:?}")));
    }
    Circuit::new(gates, output)
}

pub fn render_circuit(c: &Circuit) -> String {
    let mut out = format!("circuit {}\n", c.gates.len());
    for gate in &c.gates {
        let line = match gate {
            Gate::Input(b) => format!("input {}", u8::from(*b)),
            Gate::And(l, r) => format!("and {} {} {} {}", l.gate, l.port.number(), r.gate, r.port.number()),
            Gate::Or(l, r) => format!("or {} {} {} {}", l.gate, l.port.number(), r.gate, r.port.number()),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str(&format!("output {}\n", c.output));
    out
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_circuit(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_yield;
    use crate::languages::{d2_grammar, d2_member};
    use crate::reach::{cfl_reach, expand_witness};

    fn w(g: usize, p: u8) -> Wire {
        Wire::new(g, if p == 1 { Port::First } else { Port::Second })
    }

    fn d2_reachable(c: &Circuit) -> Option<String> {
        let g = mcvp_to_d2_reach(c);
        let wit = cfl_reach(&g, &d2_grammar()).unwrap()?;
        let p = expand_witness(&wit, 1_000_000).unwrap();
        Some(path_yield(&g, &p).unwrap())
    }

    #[test]
    fn evaluation() {
        let one = Circuit::new(vec![Gate::Input(true)], 0).unwrap();
        assert!(eval_circuit(&one));
        let and = Circuit::new(vec![Gate::Input(true), Gate::Input(true), Gate::And(w(0, 1), w(1, 1))], 2).unwrap();
        assert!(eval_circuit(&and));
        let nested = Circuit::new(
            vec![Gate::Input(true), Gate::Input(false), Gate::And(w(0, 1), w(1, 1)), Gate::Input(false), Gate::Or(w(2, 1), w(3, 1))],
            4,
        )
        .unwrap();
        assert!(!eval_circuit(&nested));
    }

    #[test]
    fn single_input_gadget() {
        let one = Circuit::new(vec![Gate::Input(true)], 0).unwrap();
        assert_eq!(d2_reachable(&one).as_deref(), Some("()"));
        let zero = Circuit::new(vec![Gate::Input(false)], 0).unwrap();
        assert_eq!(d2_reachable(&zero), None);
    }

    #[test]
    fn and_or_gadgets() {
        let and = Circuit::new(vec![Gate::Input(true), Gate::Input(false), Gate::And(w(0, 1), w(1, 1))], 2).unwrap();
        assert_eq!(d2_reachable(&and), None);
        let or = Circuit::new(vec![Gate::Input(false), Gate::Input(true), Gate::Or(w(0, 1), w(1, 1))], 2).unwrap();
        assert!(d2_member(&d2_reachable(&or).unwrap()));
    }

    #[test]
    fn shared_child_uses_both_ports() {
        // x = 1; a = x AND x via both wires
        let c = Circuit::new(vec![Gate::Input(true), Gate::And(w(0, 1), w(0, 2))], 1).unwrap();
        let y = d2_reachable(&c).unwrap();
        assert_eq!(y, "(())[()]");
    }

    #[test]
    fn invariant_violations() {
        let conflict = Circuit::new(vec![Gate::Input(true), Gate::And(w(0, 1), w(0, 1))], 1);
        assert_eq!(conflict, Err(ReductionError::PortConflict { gate: 1, target: 0, port: 1 }));
        let forward = Circuit::new(vec![Gate::And(w(1, 1), w(1, 2)), Gate::Input(true)], 0);
        assert_eq!(forward, Err(ReductionError::BadGateRef { gate: 0, target: 1 }));
        assert_eq!(Circuit::new(vec![Gate::Input(true)], 3), Err(ReductionError::BadOutput(3)));
    }

    #[test]
    fn file_round_trip() {
        let text = "circuit 4\ninput 1\ninput 0\nand 0 1 1 2\nor 2 1 0 2\noutput 3\n";
        let c = parse_circuit(text).unwrap();
        assert_eq!(render_circuit(&c), text);
        assert!(eval_circuit(&c));
        assert!(matches!(parse_circuit("circuit 1\nxor 0 1 0 2\noutput 0"), Err(ReductionError::Syntax { line: 2, .. })));
        assert!(matches!(parse_circuit("circuit 2\ninput 1\nand 0 1 0 3\noutput 1"), Err(ReductionError::Syntax { line: 3, .. })));
    }
}
