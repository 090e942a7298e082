//! Graph and vertex-set file formats.
//!
//! Edge lists: a header line `n m`, then `m` lines `u v`. Blank lines and
//! `#` comments are ignored. When every endpoint token is a decimal integer
//! the indices are used directly; otherwise tokens are treated as labels and
//! mapped to indices in order of first appearance.
//!
//! graph6: see <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A graph read from a file, with the label of each vertex when the input
/// used non-numeric labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParsedGraph {
    pub graph: Graph,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Option<String>>>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(self))
    }
}

impl ParsedGraph {
    pub fn index_of(&self, token: &str) -> Option<usize> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l.as_deref() == Some(token)),
            None => token.parse().ok(),
        }
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n: usize = head[0]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad vertex count {:?}", head[0])))?;
    let m: usize = head[1]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad edge count {:?}", head[1])))?;

    let mut raw = Vec::with_capacity(m);
    for (line, content) in lines {
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(line, "edge line must be `u v`"));
        }
        raw.push((line, toks[0], toks[1]));
    }
    if raw.len() != m {
        return Err(parse_err(
            hline,
            format!("header announces {m} edges, found {}", raw.len()),
        ));
    }

    let numeric = raw
        .iter()
        .all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut label_index: HashMap<&str, usize> = HashMap::new();
    let mut g = Graph::empty(n);
    for &(line, a, b) in &raw {
        let (u, v) = if numeric {
            (a.parse::<usize>().unwrap(), b.parse::<usize>().unwrap())
        } else {
            let mut id = |t| {
                let next = label_index.len();
                *label_index.entry(t).or_insert_with(|| {
                    labels.push(Some(String::from(t)));
                    next
                })
            };
            (id(a), id(b))
        };
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {a}")));
        }
        if !g.add_edge(u, v) {
            return Err(parse_err(line, format!("duplicate edge {a} {b}")));
        }
    }
    let labels = (!numeric).then(|| {
        labels.resize(n, None);
        labels
    });
    Ok(ParsedGraph { graph: g, labels })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn push_n(out: &mut String, n: usize) {
    let push6 = |out: &mut String, x: usize| out.push((x as u8 + 63) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, (n >> shift) & 63);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, (n >> shift) & 63);
        }
    }
}

/// graph6 encoding without the optional `>>graph6<<` header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(Error::Graph6(format!("invalid byte {b:#04x}")))
            }
        })
        .collect::<Result<_>>()?;
    let short = |what| Error::Graph6(format!("truncated {what}"));
    let (n, header) = match bytes.first() {
        None => return Err(short("header")),
        Some(&x) if x < 63 => (x as usize, 1),
        Some(_) if bytes.get(1) != Some(&63) => {
            let b = bytes.get(1..4).ok_or_else(|| short("size"))?;
            (b.iter().fold(0usize, |acc, &x| acc << 6 | x as usize), 4)
        }
        Some(_) => {
            let b = bytes.get(2..8).ok_or_else(|| short("size"))?;
            (b.iter().fold(0usize, |acc, &x| acc << 6 | x as usize), 8)
        }
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[header..];
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n={n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if body[pos / 6] >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Reads either format; a file whose first content line is a single token
/// is taken to be graph6.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    match content_lines(text).next() {
        Some((_, first)) if first.split_whitespace().count() == 1 => Ok(ParsedGraph {
            graph: parse_graph6(first)?,
            labels: None,
        }),
        _ => parse_edge_list(text),
    }
}

/// Vertex set file: indices (or labels) separated by whitespace or commas.
pub fn parse_set(text: &str, graph: &ParsedGraph) -> Result<VertexSet> {
    let n = graph.graph.n();
    let mut set = VertexSet::empty(n);
    for (line, content) in content_lines(text) {
        for tok in content.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v = match graph.index_of(tok) {
                Some(v) => v,
                None if graph.labels.is_none() => {
                    return Err(parse_err(line, format!("bad vertex {tok:?}")))
                }
                None => return Err(parse_err(line, format!("unknown label {tok:?}"))),
            };
            if v >= n {
                return Err(Error::InvalidSet { index: v, n });
            }
            set.insert(v);
        }
    }
    Ok(set)
}

pub fn write_set(set: &VertexSet) -> String {
    let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{}\n", items.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let text = "# triangle\n3 3\n0 1\n\n1 2 # spoke\n0 2\n";
        let p = parse_edge_list(text).unwrap();
        assert_eq!(p.graph, Graph::complete(3));
        assert!(p.labels.is_none());
        assert_eq!(write_edge_list(&p.graph), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("x 1\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn labelled_edge_list_records_mapping() {
        let p = parse_edge_list("4 2\nalice bob\nbob carol\n").unwrap();
        assert_eq!(p.graph.edge_count(), 2);
        assert!(p.graph.has_edge(0, 1) && p.graph.has_edge(1, 2));
        let labels = p.labels.clone().unwrap();
        assert_eq!(labels[0].as_deref(), Some("alice"));
        assert_eq!(labels[3], None);
        let s = parse_set("carol, alice", &p).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2]);
        assert!(parse_set("dave", &p).is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // Reference strings cross-checked with networkx.to_graph6_bytes.
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&p5), "DhC");
        assert_eq!(parse_graph6(">>graph6<<DhC").unwrap(), p5);
        assert!(parse_graph6("Dh").is_err());
        assert!(parse_graph6("D h").is_err());
    }

    #[test]
    fn graph6_large_header() {
        let mut g = Graph::empty(100);
        g.add_edge(3, 99);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn format_detection() {
        assert_eq!(parse_graph("C~\n").unwrap().graph, Graph::complete(4));
        assert_eq!(parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap().graph, Graph::complete(4));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..70).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut it = bits.into_iter();
                for v in 1..n {
                    for u in 0..v {
                        if it.next().unwrap() {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap().graph, g);
        }
    }
}
