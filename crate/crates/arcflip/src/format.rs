//! Text formats: the `n m` edge list (1-indexed, optional `#label` lines)
//! and graph6.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Loads a graph from edge-list text or graph6 bytes, auto-detected.
pub fn load_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    let first = trimmed.lines().next().unwrap_or("");
    let looks_like_edge_list = {
        let mut it = first.split_whitespace();
        matches!(
            (
                it.next().map(|t| t.parse::<usize>().is_ok()),
                it.next().map(|t| t.parse::<usize>().is_ok()),
                it.next(),
            ),
            (Some(true), Some(true), None)
        )
    };
    if looks_like_edge_list {
        from_edge_list(text)
    } else {
        from_graph6(trimmed.trim())
    }
}

/// Parses the edge-list format: first line `n m`, then `m` lines `u v`
/// (1-indexed), with optional `#label i name` lines anywhere after the header.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (mut n, mut m) = (0usize, 0usize);
    let mut header_seen = false;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    for (idx, raw) in &mut lines {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut it = rest.split_whitespace();
            if it.next() == Some("label") {
                let i: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_err(lineno, "expected `#label i name`"))?;
                let name = it
                    .next()
                    .ok_or_else(|| parse_err(lineno, "expected `#label i name`"))?;
                labels.push((i, name.to_string()));
            }
            continue;
        }
        let mut it = line.split_whitespace();
        let a: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno, "expected two integers"))?;
        let b: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno, "expected two integers"))?;
        if it.next().is_some() {
            return Err(parse_err(lineno, "trailing tokens"));
        }
        if !header_seen {
            n = a;
            m = b;
            header_seen = true;
        } else {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(parse_err(
                    lineno,
                    &format!("vertex out of range 1..{n}"),
                ));
            }
            if a == b {
                return Err(parse_err(lineno, "self-loop rejected"));
            }
            edges.push((a - 1, b - 1));
        }
    }
    if !header_seen {
        return Err(parse_err(1, "missing `n m` header"));
    }
    if edges.len() != m {
        return Err(parse_err(
            1,
            &format!("header says {m} edges, found {}", edges.len()),
        ));
    }
    let mut names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    for (i, name) in labels {
        if i == 0 || i > n {
            return Err(parse_err(1, &format!("label index {i} out of range")));
        }
        names[i - 1] = name;
    }
    Graph::with_labels(names, &edges)
}

/// Renders the edge-list format; label lines are emitted only for
/// non-default labels.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    for v in g.vertices() {
        if g.label(v) != (v + 1).to_string() {
            out.push_str(&format!("#label {} {}\n", v + 1, g.label(v)));
        }
    }
    out
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}

/// Parses graph6 (optionally with the `>>graph6<<` prefix).
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).trim();
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 payload"));
    }
    let (n, pos) = if bytes[0] == b'~' {
        if bytes.len() >= 4 && bytes[1] != b'~' {
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | decode6(b, 1)? as usize;
            }
            (n, 4)
        } else {
            return Err(parse_err(1, "graph6 sizes beyond 258047 unsupported"));
        }
    } else {
        (decode6(bytes[0], 1)? as usize, 1)
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    let mut bits = Vec::with_capacity(bits_needed + 6);
    for &b in &bytes[pos..] {
        let v = decode6(b, 1)?;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    if bits.len() < bits_needed {
        return Err(parse_err(1, "graph6 payload too short"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Renders graph6 (labels are not representable and are dropped).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adjacent(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for &b in chunk {
            v = (v << 1) | b as u8;
        }
        out.push((v + 63) as char);
    }
    out
}

fn decode6(b: u8, line: usize) -> Result<u8> {
    if !(63..=126).contains(&b) {
        return Err(parse_err(line, &format!("invalid graph6 byte {b}")));
    }
    Ok(b - 63)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_edge_list() {
        let g = load_graph("3 3\n1 2\n2 3\n1 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.is_clique(&(0..3).collect()));
    }

    #[test]
    fn labels_round_trip() {
        let text = "3 2\n1 2\n2 3\n#label 1 a\n#label 3 c\n";
        let g = from_edge_list(text).unwrap();
        assert_eq!(g.label(0), "a");
        assert_eq!(g.label(2), "c");
        let g2 = from_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            from_edge_list("2 1\n1 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(from_edge_list("2 1\n1 3\n").is_err());
        assert!(from_edge_list("2 2\n1 2\n").is_err());
    }

    #[test]
    fn graph6_known_values() {
        let p3 = from_graph6("BW").unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        let k3 = from_graph6("Bw").unwrap();
        assert_eq!(k3.m(), 3);
        // reference value from the format's documentation
        let g = from_graph6("DQc").unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn graph6_round_trip() {
        let g = crate::fixtures::gm();
        let s = to_graph6(&g);
        let h = from_graph6(&s).unwrap();
        assert_eq!(g.n(), h.n());
        let ge: Vec<_> = g.edges().collect();
        let he: Vec<_> = h.edges().collect();
        assert_eq!(ge, he);
    }
}
