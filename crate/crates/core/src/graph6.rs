//! graph6 reading and writing (McKay's format).
//!
//! Each byte carries six payload bits offset by 63. The vertex count comes first: one byte for
//! `n <= 62`, otherwise `126` followed by three bytes (18 bits). Edge bits follow in upper-triangle
//! column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), zero-padded to a multiple of six.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(63 + n as u8);
    } else {
        debug_assert!(n <= MEDIUM_MAX);
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(
            base + pos,
            format!("byte {:#04x} outside 63..=126", body[pos]),
        ));
    }
    let (n, mut pos) = match body.first() {
        None => return Err(parse_err(base, "missing length byte")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                return Err(parse_err(
                    base + 1,
                    "eight-byte length form exceeds the vertex limit",
                ));
            }
            if body.len() < 4 {
                return Err(parse_err(base + body.len(), "truncated four-byte length"));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= SHORT_MAX {
                return Err(parse_err(
                    base,
                    format!("non-canonical long length form for n = {n}"),
                ));
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(parse_err(
            base,
            format!("vertex count {n} above {MAX_VERTICES}"),
        ));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < pos + nbytes {
        return Err(parse_err(
            base + body.len(),
            format!("expected {nbytes} edge bytes"),
        ));
    }
    if body.len() > pos + nbytes {
        return Err(parse_err(
            base + pos + nbytes,
            "trailing bytes after edge data",
        ));
    }
    let pad = nbytes * 6 - nbits;
    if pad > 0 {
        let last = body[pos + nbytes - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(base + pos + nbytes - 1, "padding bits set"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut byte = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                byte = body[pos] - 63;
                pos += 1;
            }
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses a multi-line graph6 document: one graph per non-empty line, optional header on the first.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for (i, line) in text.split('\n').enumerate() {
        let trimmed = line.trim_end_matches('\r');
        let line_body = if i == 0 && trimmed == HEADER {
            ""
        } else {
            trimmed
        };
        if !line_body.is_empty() {
            out.push(from_graph6(line_body).map_err(|e| match e {
                Error::Parse { offset: o, message } => parse_err(offset + o, message),
                other => other,
            })?);
        }
        offset += line.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle};

    #[test]
    fn small_examples() {
        let g = from_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        let g = from_graph6("A?").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
        let g = from_graph6("A_").unwrap();
        assert_eq!(g, complete(2));
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        let c5 = cycle(5).unwrap();
        assert_eq!(from_graph6(&to_graph6(&c5)).unwrap(), c5);
    }

    #[test]
    fn header_and_line_ending_tolerated() {
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap(), complete(2));
        let gs = parse_lines(">>graph6<<\nA_\n@\n").unwrap();
        assert_eq!(gs.len(), 2);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(
            from_graph6("A_?"),
            Err(Error::Parse {
                offset: 2,
                message: "trailing bytes after edge data".into()
            })
        );
        // K2 needs one edge bit; 'A' (63 + 2) sets a padding bit.
        assert!(matches!(
            from_graph6("AA"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("B"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            from_graph6("A "),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            from_graph6("~??A"),
            Err(Error::Parse { offset: 0, .. })
        ));
        let e = parse_lines("A_\nA_?\n").unwrap_err();
        assert!(matches!(e, Error::Parse { offset: 5, .. }));
    }

    #[test]
    fn long_length_form() {
        let g = Graph::from_edges(70, [(0, 69), (3, 4)]).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }
}
