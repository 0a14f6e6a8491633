//! The `.khg` text format.
//!
//! ```text
//! c optional comment
//! p khg <k> <n> <m>
//! e v_1 ... v_k        (m lines, 0 <= v_1 < ... < v_k < n, sorted)
//! ```

use std::fmt::Write as _;

use crate::{Error, Hypergraph, Result};

pub fn write_khg(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "p khg {} {} {}", h.k(), h.n(), h.edge_count()).unwrap();
    for e in h.edges() {
        out.push('e');
        for v in e {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_khg(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let mut tok = raw.split_ascii_whitespace();
        match tok.next() {
            None => continue,
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err("second header".into()));
                }
                if tok.next() != Some("khg") {
                    return Err(err("expected `p khg <k> <n> <m>`".into()));
                }
                let nums = tok
                    .map(|t| parse_num(t, line))
                    .collect::<Result<Vec<_>>>()?;
                let [k, n, m] = nums[..] else {
                    return Err(err("expected `p khg <k> <n> <m>`".into()));
                };
                if k < 2 {
                    return Err(Error::Uniformity(k));
                }
                header = Some((k, n, m));
            }
            Some("e") => {
                let Some((k, n, _)) = header else {
                    return Err(err("edge line before header".into()));
                };
                let e = tok
                    .map(|t| parse_num(t, line))
                    .collect::<Result<Vec<_>>>()?;
                if e.len() != k {
                    return Err(Error::EdgeArity {
                        expected: k,
                        found: e.len(),
                        edge: e,
                    });
                }
                for w in e.windows(2) {
                    if w[0] == w[1] {
                        return Err(Error::RepeatedVertex {
                            vertex: w[0],
                            edge: e.clone(),
                        });
                    }
                    if w[0] > w[1] {
                        return Err(err(format!("vertices of {e:?} not increasing")));
                    }
                }
                if let Some(&v) = e.last().filter(|&&v| v >= n) {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if let Some(prev) = edges.last() {
                    if *prev == e {
                        return Err(Error::DuplicateEdge(e));
                    }
                    if *prev > e {
                        return Err(err(format!("edge {e:?} out of lexicographic order")));
                    }
                }
                edges.push(e);
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let Some((k, n, m)) = header else {
        return Err(Error::Parse {
            line: 0,
            msg: "missing `p khg` header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Hypergraph::from_canonical(k, n, edges))
}

fn parse_num(t: &str, line: usize) -> Result<usize> {
    t.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{t}` is not a non-negative integer"),
    })
}
