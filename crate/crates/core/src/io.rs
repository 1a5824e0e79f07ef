//! Plain-text graph formats.
//!
//! `edgelist`: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! `dimacs`: `c` comment lines, one `p edge n m` line, then `e u v` lines
//! with 1-based ids.

use std::collections::HashSet;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Edgelist,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::Edgelist),
            "dimacs" => Ok(GraphFormat::Dimacs),
            _ => Err(Error::InvalidInput(format!("unknown graph format {s:?}"))),
        }
    }
}

fn bad(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("line {line}: {msg}"))
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(bad(line, format!("expected {N} fields, found {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| bad(line, format!("{f:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

struct EdgeCollector {
    n: usize,
    seen: HashSet<(Vertex, Vertex)>,
    edges: Vec<(Vertex, Vertex)>,
}

impl EdgeCollector {
    fn add(&mut self, line: usize, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(bad(line, format!("edge {u}-{v} leaves the vertex range")));
        }
        if u == v {
            return Err(bad(line, format!("loop at {u}")));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(bad(line, format!("duplicate edge {u}-{v}")));
        }
        self.edges.push((u, v));
        Ok(())
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Edgelist => parse_edgelist(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let [n, m] = numbers::<2>(hl, &header.split_whitespace().collect::<Vec<_>>())?;
    let mut edges = EdgeCollector {
        n,
        seen: HashSet::new(),
        edges: Vec::new(),
    };
    for (ln, l) in lines {
        let [u, v] = numbers::<2>(ln, &l.split_whitespace().collect::<Vec<_>>())?;
        edges.add(ln, u, v)?;
    }
    if edges.edges.len() != m {
        return Err(Error::InvalidInput(format!(
            "header announces {m} edges, found {}",
            edges.edges.len()
        )));
    }
    Graph::new(n, edges.edges)
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut edges: Option<(usize, EdgeCollector)> = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if edges.is_some() {
                    return Err(bad(ln, "second problem line"));
                }
                if fields.get(1) != Some(&"edge") {
                    return Err(bad(ln, "expected `p edge n m`"));
                }
                let [n, m] = numbers::<2>(ln, &fields[2..])?;
                edges = Some((
                    m,
                    EdgeCollector {
                        n,
                        seen: HashSet::new(),
                        edges: Vec::new(),
                    },
                ));
            }
            Some("e") => {
                let (_, col) = edges.as_mut().ok_or_else(|| bad(ln, "edge before problem line"))?;
                let [u, v] = numbers::<2>(ln, &fields[1..])?;
                if u == 0 || v == 0 {
                    return Err(bad(ln, "dimacs ids start at 1"));
                }
                col.add(ln, u - 1, v - 1)?;
            }
            Some(other) => return Err(bad(ln, format!("unknown line type {other:?}"))),
        }
    }
    let (m, col) = edges.ok_or_else(|| Error::InvalidInput("missing problem line".into()))?;
    if col.edges.len() != m {
        return Err(Error::InvalidInput(format!(
            "problem line announces {m} edges, found {}",
            col.edges.len()
        )));
    }
    Graph::new(col.n, col.edges)
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Edgelist => {
            out.push_str(&format!("{} {}\n", g.n(), g.m()));
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        GraphFormat::Dimacs => {
            out.push_str(&format!("p edge {} {}\n", g.n(), g.m()));
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0\n", GraphFormat::Edgelist).unwrap();
        assert_eq!(g, gen::complete(3));
    }

    #[test]
    fn dimacs_edge() {
        let g = parse_graph("c hello\np edge 3 1\ne 1 2\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1)]).unwrap());
    }

    #[test]
    fn line_numbers() {
        let err = parse_graph("2 1\n0 5\n", GraphFormat::Edgelist).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = parse_graph("p edge 2 1\ne 1 x\n", GraphFormat::Dimacs).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = parse_graph("3 2\n0 1\n1 0\n", GraphFormat::Edgelist).unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn round_trips() {
        for seed in 0..10 {
            let g = gen::gnp(15, 0.3, seed).unwrap();
            for f in [GraphFormat::Edgelist, GraphFormat::Dimacs] {
                let text = serialize_graph(&g, f);
                let back = parse_graph(&text, f).unwrap();
                assert_eq!(back, g);
                assert_eq!(serialize_graph(&back, f), text);
            }
        }
    }
}
