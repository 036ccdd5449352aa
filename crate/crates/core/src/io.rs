//! Line-based text format.
//!
//! ```text
//! # comment
//! n 3
//! l 0 1,-2
//! e 0 1 +
//! e 1 2 -
//! c 0 0
//! ```
//!
//! `n` comes first. `l` lines label vertices and `c` lines give a coloring;
//! either kind must cover every vertex or be absent.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub graph: SignedGraph,
    pub coloring: Option<Vec<usize>>,
}

fn number(word: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let w = word.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    w.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} {w:?}"),
    })
}

pub fn parse(text: &str) -> Result<Document> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut colors: Vec<Option<usize>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let tag = words.next().unwrap();
        if tag == "n" {
            if n.is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "second n line".into(),
                });
            }
            let count = number(words.next(), line, "vertex count")?;
            n = Some(count);
            labels = vec![None; count];
            colors = vec![None; count];
        } else {
            let count = n.ok_or(Error::Parse {
                line,
                msg: "n line must come first".into(),
            })?;
            let v = number(words.next(), line, "vertex")?;
            if v >= count {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {v} out of range for n = {count}"),
                });
            }
            match tag {
                "e" => {
                    let w = number(words.next(), line, "vertex")?;
                    if w >= count {
                        return Err(Error::Parse {
                            line,
                            msg: format!("vertex {w} out of range for n = {count}"),
                        });
                    }
                    let sign = words
                        .next()
                        .and_then(|s| {
                            if s.len() == 1 {
                                Sign::from_char(s.chars().next().unwrap())
                            } else {
                                None
                            }
                        })
                        .ok_or(Error::Parse {
                            line,
                            msg: "edge sign must be + or -".into(),
                        })?;
                    edges.push((v, w, sign));
                }
                "l" => {
                    let label = words.next().ok_or(Error::Parse {
                        line,
                        msg: "missing label".into(),
                    })?;
                    labels[v] = Some(label.to_string());
                }
                "c" => colors[v] = Some(number(words.next(), line, "color")?),
                other => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("unknown line type {other:?}"),
                    })
                }
            }
            if words.next().is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "trailing fields".into(),
                });
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "no n line".into(),
    })?;
    let mut graph = SignedGraph::new(n, edges)?;
    let named = labels.iter().filter(|l| l.is_some()).count();
    if named == n && n > 0 {
        graph = graph.with_labels(labels.into_iter().map(Option::unwrap).collect())?;
    } else if named > 0 {
        return Err(Error::Parse {
            line: 0,
            msg: format!("{named} of {n} vertices labeled"),
        });
    }
    let colored = colors.iter().filter(|c| c.is_some()).count();
    let coloring = if colored == 0 {
        None
    } else if colored == n {
        Some(colors.into_iter().map(Option::unwrap).collect())
    } else {
        return Err(Error::PartialColoring {
            expected: n,
            got: colored,
        });
    };
    Ok(Document { graph, coloring })
}

/// Writes `g` with sorted edges, then the coloring if given.
pub fn write(g: &SignedGraph, coloring: Option<&[usize]>) -> String {
    let mut out = format!("n {}\n", g.n());
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            out.push_str(&format!("l {v} {l}\n"));
        }
    }
    for e in g.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.sign.as_char()));
    }
    if let Some(colors) = coloring {
        for (v, c) in colors.iter().enumerate() {
            out.push_str(&format!("c {v} {c}\n"));
        }
    }
    out
}
