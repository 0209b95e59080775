use super::{Graph, GraphError, MAX_VERTICES};

pub(super) fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        let malformed = || GraphError::MalformedLine {
            line: idx + 1,
            text: line.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let nums = fields
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| malformed())?;
        match nums.as_slice() {
            [n] if !seen_content => {
                if *n == 0 {
                    return Err(GraphError::Empty);
                }
                if *n > MAX_VERTICES {
                    return Err(GraphError::VertexOutOfRange(n - 1));
                }
                header = Some(*n);
            }
            [u, v] => {
                if u == v {
                    return Err(GraphError::SelfLoop(*u));
                }
                for &w in [u, v] {
                    if w >= MAX_VERTICES || header.is_some_and(|n| w >= n) {
                        return Err(GraphError::VertexOutOfRange(w));
                    }
                }
                edges.push((*u, *v));
            }
            _ => return Err(malformed()),
        }
        seen_content = true;
    }

    let n = match header {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .ok_or(GraphError::Empty)?,
    };
    Graph::from_edges(n, edges)
}

pub(super) fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

pub(super) fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    if let Some(c) = s.chars().find(|&c| !(63..=126).contains(&(c as u32))) {
        return Err(GraphError::InvalidGraph6Char(c));
    }
    let bytes = s.as_bytes();
    let (n, data) = match bytes {
        [] => return Err(GraphError::Empty),
        [126, 126, rest @ ..] => (decode_size(rest, 6)?, rest.get(6..).unwrap_or(&[])),
        [126, rest @ ..] => (decode_size(rest, 3)?, rest.get(3..).unwrap_or(&[])),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::VertexOutOfRange(n - 1));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(GraphError::Graph6Length {
            n,
            expected,
            found: data.len(),
        });
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = data[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(rest: &[u8], len: usize) -> Result<usize, GraphError> {
    let digits = rest.get(..len).ok_or(GraphError::Graph6Length {
        n: 0,
        expected: len,
        found: rest.len(),
    })?;
    Ok(digits
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

pub(super) fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    // n <= 30 always fits the one-byte size form.
    let mut out = vec![n as u8 + 63];
    let mut chunk = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((chunk << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
