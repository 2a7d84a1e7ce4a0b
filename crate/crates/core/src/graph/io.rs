use super::Graph;
use crate::error::ParseError;

/// Parses either format: graph6 when the first non-blank line does not
/// start with a digit, the edge-list format otherwise.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty());
    match first {
        None => Err(ParseError::new(1, "empty input")),
        Some((idx, line)) => {
            let c = line.trim_start().chars().next().unwrap();
            if c.is_ascii_digit() {
                parse_edge_list(text)
            } else {
                let rest: Vec<&str> = text.lines().skip(idx + 1).filter(|l| !l.trim().is_empty()).collect();
                if !rest.is_empty() {
                    return Err(ParseError::new(idx + 2, "expected a single graph6 line"));
                }
                parse_graph6(line.trim()).map_err(|e| ParseError::new(idx + 1, e.message))
            }
        }
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("{what} `{tok}` is not a nonnegative integer")))
}

/// Header `n m`, then exactly `m` lines `u v` (0-indexed).
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (hline, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| ParseError::new(1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(ParseError::new(hline, "header must be `n m`"));
    }
    let n = parse_usize(toks[0], hline, "vertex count")?;
    let m = parse_usize(toks[1], hline, "edge count")?;
    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    let mut last_line = hline;
    for (ln, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        last_line = ln;
        if seen == m {
            return Err(ParseError::new(ln, format!("more than the declared {m} edges")));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::new(ln, "edge line must be `u v`"));
        }
        let u = parse_usize(toks[0], ln, "vertex")?;
        let v = parse_usize(toks[1], ln, "vertex")?;
        if u >= n || v >= n {
            return Err(ParseError::new(ln, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(ParseError::new(ln, format!("loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(ParseError::new(ln, format!("duplicate edge {u}-{v}")));
        }
        g.add_edge_unchecked(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(ParseError::new(last_line, format!("declared {m} edges, found {seen}")));
    }
    Ok(g)
}

fn size_prefix(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]
    } else {
        let mut out = vec![126, 126];
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + 63);
        }
        out
    }
}

pub(super) fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = size_prefix(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let err = |m: &str| ParseError::new(1, m.to_string());
    if bytes.is_empty() {
        return Err(err("empty graph6 string"));
    }
    if bytes[0] == b':' || bytes[0] == b';' || bytes[0] == b'&' {
        return Err(err("sparse6 / digraph6 are not supported"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(err("graph6 byte outside 63..=126"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err("truncated size field"));
        }
        let n = bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err("truncated size field"));
        }
        let n = bytes[2..8].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
        (n, 8)
    };
    if bytes[..pos] != size_prefix(n)[..] {
        return Err(err("non-canonical size field"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(err(&format!("expected {need} adjacency bytes, found {}", bytes.len() - pos)));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        if last & ((1u8 << (6 - pairs % 6)) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}
