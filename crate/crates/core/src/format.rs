//! graph6 (simple graphs) and the `.mg` edge-list format (multigraphs).
//!
//! `.mg` records are a header line `n m` followed by `m` lines `u v` with
//! 0-based vertices; parallel edges repeat a line. Blank lines and lines
//! starting with `#` are ignored, and records may be concatenated.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn decode_graph6(text: &str) -> Result<Multigraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::MalformedGraph6("unsupported vertex count header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::MalformedGraph6(format!(
            "expected {need} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for extra in bits..need * 6 {
        if bit(extra) {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Multigraph::new(n, edges)
}

pub fn encode_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n();
    let adj = g.adjacency();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | (adj[i] >> j & 1) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 is printable ASCII"))
}

pub fn encode_mg(g: &Multigraph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse(format!("expected two integers in {line:?}")))?
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("{line:?}: {e}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing tokens in {line:?}")));
    }
    Ok(pair)
}

/// Parses one or more concatenated `.mg` records.
pub fn decode_mg_all(text: &str) -> Result<Vec<Multigraph>> {
    let mut lines = content_lines(text);
    let mut out = Vec::new();
    while let Some(header) = lines.next() {
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("record declares {m} edges, input ended early")))?;
            edges.push(parse_pair(line)?);
        }
        out.push(Multigraph::new(n, edges)?);
    }
    Ok(out)
}

pub fn decode_mg(text: &str) -> Result<Multigraph> {
    let mut all = decode_mg_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        k => Err(Error::Parse(format!("expected one .mg record, found {k}"))),
    }
}

/// Reads either format: `.mg` when the first content line is two integers,
/// otherwise one graph6 string per line.
pub fn parse_graphs(text: &str) -> Result<Vec<Multigraph>> {
    let Some(first) = content_lines(text).next() else {
        return Ok(Vec::new());
    };
    if parse_pair(first).is_ok() {
        decode_mg_all(text)
    } else {
        content_lines(text).map(decode_graph6).collect()
    }
}
