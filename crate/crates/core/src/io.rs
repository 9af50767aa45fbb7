//! Text formats: DIMACS-style graphs, certificates and annotation sidecars.
//!
//! All formats number vertices from 1; in memory they start at 0.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{RobustColoringCertificate, RobustIndependenceCertificate};
use crate::selection::Selection;

/// Meaningful lines with their 1-based line numbers; blank lines and `c`
/// comments are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn number(line: usize, field: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("expected a number, got {field:?}")))
}

/// A 1-based vertex field converted to 0-based.
fn vertex(line: usize, field: &str, n: usize) -> Result<usize> {
    let v = number(line, field)?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn arity(line: usize, fields: &[&str], want: usize) -> Result<()> {
    if fields.len() != want {
        return Err(Error::parse(
            line,
            format!(
                "`{}` expects {} fields, got {}",
                fields[0],
                want - 1,
                fields.len() - 1
            ),
        ));
    }
    Ok(())
}

/// Parses `p edge <n> <m>` followed by `e <u> <v>` lines.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing `p edge` header"))?;
    if header.len() != 4 || header[0] != "p" || !matches!(header[1], "edge" | "col") {
        return Err(Error::parse(hline, "expected `p edge <n> <m>`"));
    }
    let n = number(hline, header[2])?;
    let m = number(hline, header[3])?;
    let mut edges = BTreeSet::new();
    for (line, fields) in lines {
        if fields[0] != "e" {
            return Err(Error::parse(
                line,
                format!("unexpected line type {:?}", fields[0]),
            ));
        }
        arity(line, &fields, 3)?;
        let u = vertex(line, fields[1], n)?;
        let v = vertex(line, fields[2], n)?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
        }
        if !edges.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(
                line,
                format!("duplicate edge {} {}", u + 1, v + 1),
            ));
        }
    }
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Writes `g` with optional leading comment lines.
pub fn write_dimacs(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {}", e.u() + 1, e.v() + 1).unwrap();
    }
    out
}

/// A parsed certificate file. `n` is the vertex count from its header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateFile {
    Coloring {
        n: usize,
        cert: RobustColoringCertificate,
    },
    Independence {
        n: usize,
        cert: RobustIndependenceCertificate,
    },
}

/// Parses a `robust-coloring <n>` or `robust-independent <n>` certificate.
/// Structural problems the verifier knows how to report (repeated or
/// missing vertices, picks that are not edges, several picks at one vertex)
/// are kept for it; only unreadable lines are errors here.
pub fn parse_certificate(text: &str) -> Result<CertificateFile> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing certificate header"))?;
    if header.len() != 2 {
        return Err(Error::parse(
            hline,
            "expected `robust-coloring <n>` or `robust-independent <n>`",
        ));
    }
    let coloring = match header[0] {
        "robust-coloring" => true,
        "robust-independent" => false,
        other => {
            return Err(Error::parse(
                hline,
                format!("unknown certificate kind {other:?}"),
            ))
        }
    };
    let n = number(hline, header[1])?;
    let mut selection = Selection::new(n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut members = Vec::new();
    for (line, fields) in lines {
        match (fields[0], coloring) {
            ("s", _) => {
                arity(line, &fields, 3)?;
                let v = vertex(line, fields[1], n)?;
                let u = vertex(line, fields[2], n)?;
                selection.select(v, u);
            }
            ("col", true) => {
                arity(line, &fields, 3)?;
                let v = number(line, fields[1])?;
                let b = number(line, fields[2])?;
                if v == 0 || b == 0 {
                    return Err(Error::parse(
                        line,
                        "vertices and blocks are numbered from 1",
                    ));
                }
                if blocks.len() < b {
                    blocks.resize(b, Vec::new());
                }
                blocks[b - 1].push(v - 1);
            }
            ("u", false) => {
                arity(line, &fields, 2)?;
                let v = number(line, fields[1])?;
                if v == 0 {
                    return Err(Error::parse(line, "vertices are numbered from 1"));
                }
                members.push(v - 1);
            }
            (other, _) => {
                return Err(Error::parse(
                    line,
                    format!("unexpected line type {other:?}"),
                ));
            }
        }
    }
    Ok(if coloring {
        CertificateFile::Coloring {
            n,
            cert: RobustColoringCertificate { selection, blocks },
        }
    } else {
        CertificateFile::Independence {
            n,
            cert: RobustIndependenceCertificate { selection, members },
        }
    })
}

fn write_selection(out: &mut String, f: &Selection) {
    for (v, u) in f.pairs() {
        writeln!(out, "s {} {}", v + 1, u + 1).unwrap();
    }
}

pub fn write_coloring_certificate(cert: &RobustColoringCertificate) -> String {
    let mut out = format!("robust-coloring {}\n", cert.selection.n());
    write_selection(&mut out, &cert.selection);
    let mut colored: Vec<(usize, usize)> = cert
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(b, vs)| vs.iter().map(move |&v| (v, b)))
        .collect();
    colored.sort_unstable();
    for (v, b) in colored {
        writeln!(out, "col {} {}", v + 1, b + 1).unwrap();
    }
    out
}

pub fn write_independence_certificate(cert: &RobustIndependenceCertificate) -> String {
    let mut out = format!("robust-independent {}\n", cert.selection.n());
    write_selection(&mut out, &cert.selection);
    let mut members = cert.members.clone();
    members.sort_unstable();
    for v in members {
        writeln!(out, "u {}", v + 1).unwrap();
    }
    out
}

/// Sidecar lines `a <vertex> <label>`.
pub fn write_annotation(labels: &[(usize, String)]) -> String {
    let mut out = String::new();
    for (v, label) in labels {
        writeln!(out, "a {} {}", v + 1, label).unwrap();
    }
    out
}

pub fn parse_annotation(text: &str) -> Result<Vec<(usize, String)>> {
    content_lines(text)
        .map(|(line, fields)| {
            if fields[0] != "a" || fields.len() < 3 {
                return Err(Error::parse(line, "expected `a <vertex> <label>`"));
            }
            let v = number(line, fields[1])?;
            if v == 0 {
                return Err(Error::parse(line, "vertices are numbered from 1"));
            }
            Ok((v - 1, fields[2..].join(" ")))
        })
        .collect()
}
