//! graph6 and edge-list codecs.
//!
//! graph6 follows the usual layout: an order prefix (one byte for `n <= 62`,
//! `~` plus three bytes up to 258047, `~~` plus six bytes beyond), then the
//! upper triangle of the adjacency matrix in column-major order, packed six
//! bits per printable byte offset by 63.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" => Ok(GraphFormat::Edgelist),
            other => Err(Error::invalid(format!("unknown graph format '{other}'"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Graph6 => parse_graph6(text),
        GraphFormat::Edgelist => parse_edgelist(text),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => to_graph6(g),
        GraphFormat::Edgelist => to_edgelist(g),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_sextets(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn push_sextets(out: &mut Vec<u8>, value: u64, count: usize) {
    for k in (0..count).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + BIAS);
    }
}

/// Parses a single graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(GRAPH6_HEADER) {
        body = rest;
        base += GRAPH6_HEADER.len();
    }
    let bytes = body.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::parse(base + k, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }
    let (n, mut pos) = read_order(bytes, base)?;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    let have = bytes.len() - pos;
    if have != bytes_needed {
        return Err(Error::parse(
            base + bytes.len(),
            format!("expected {bytes_needed} adjacency bytes for n={n}, found {have}"),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - BIAS;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += bytes_needed;
    if bits_needed % 6 != 0 {
        let last = bytes[pos - 1] - BIAS;
        let pad = 6 - bits_needed % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(base + pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

fn read_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let sextets = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return Err(Error::parse(base + bytes.len(), "truncated order prefix"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS)))
    };
    match bytes {
        [] => Err(Error::parse(base, "empty graph6 string")),
        [126, 126, ..] => Ok((sextets(2, 6)?, 8)),
        [126, ..] => Ok((sextets(1, 3)?, 4)),
        [b, ..] => Ok((usize::from(b - BIAS), 1)),
    }
}

/// Parses every non-empty line as one graph6 graph.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            let g = parse_graph6(line).map_err(|e| match e {
                Error::Parse { offset: o, reason } => Error::Parse {
                    offset: offset + o,
                    reason,
                },
                other => other,
            })?;
            out.push(g);
        }
        offset += line.len();
    }
    Ok(out)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").expect("writing to a String");
    }
    s
}

/// Parses `n m` followed by `m` lines `u v`; lines starting with `#` and
/// blank lines are skipped.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let t = line.trim();
        if !t.is_empty() && !t.starts_with('#') {
            lines.push((offset + (line.len() - line.trim_start().len()), t));
        }
        offset += line.len();
    }
    let Some(&(hoff, header)) = lines.first() else {
        return Err(Error::parse(0, "missing 'n m' header line"));
    };
    let (n, m) = parse_pair(header, hoff)?;
    let body = &lines[1..];
    if body.len() != m {
        let at = body.get(m).map_or(text.len(), |&(o, _)| o);
        return Err(Error::parse(
            at,
            format!("header declares {m} edges, found {} edge lines", body.len()),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for &(off, line) in body {
        let (u, v) = parse_pair(line, off)?;
        if u >= n || v >= n {
            return Err(Error::parse(off, format!("endpoint outside 0..{n}")));
        }
        if u == v {
            return Err(Error::parse(off, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str, off: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| Error::parse(off, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::parse(off, format!("{what} '{tok}' is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::parse(off, "more than two fields"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn graph6_matches_published_example() {
        // Five vertices, edges 0-2 0-4 1-3 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_long_order_prefix() {
        let g = Graph::path(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match parse_graph6("C~~") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        match parse_graph6("A!") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // 'A' needs one bit; '`' sets a padding bit.
        assert!(matches!(parse_graph6("A`"), Err(Error::Parse { offset: 1, .. })));
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn edgelist_examples() {
        assert_eq!(parse_edgelist("3 2\n0 1\n1 2").unwrap(), Graph::path(3));
        let with_comments = "# a path\n3 2\n\n0 1\n# middle\n1 2\n";
        assert_eq!(parse_edgelist(with_comments).unwrap(), Graph::path(3));
        let g = Graph::cycle(5).unwrap();
        assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn edgelist_errors() {
        assert!(matches!(parse_edgelist("3 2\n0 1\n"), Err(Error::Parse { .. })));
        match parse_edgelist("3 1\n0 x\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_edgelist("3 1\n0 3\n").is_err());
        assert!(parse_edgelist("").is_err());
    }

    #[test]
    fn multi_line_graph6() {
        let gs = parse_graph6_lines("A_\n# comment\nC~\n").unwrap();
        assert_eq!(gs, vec![Graph::complete(2), Graph::complete(4)]);
        match parse_graph6_lines("A_\nA!\n") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
    }
}
