//! Line-oriented digraph text format, JSON results and DOT output.
//!
//! ```text
//! # comment
//! name T0
//! class tournament
//! n 4
//! loops 0 3
//! arc 0 1
//! part 0 1
//! ```
//!
//! `n` comes first; `name`, `class` and `loops` appear at most once; `arc` and
//! `part` lines repeat. Self-arcs belong on the `loops` line.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::digraph::{Digraph, Ordering};
use crate::domination::DominationSolution;
use crate::error::{Error, Result};
use crate::recognize::{Certificate, Confidence, RecognitionResult, Verdict};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DigraphDocument {
    pub name: Option<String>,
    pub n: usize,
    pub loops: Vec<usize>,
    pub arcs: Vec<(usize, usize)>,
    pub declared_class: Option<String>,
    pub declared_partition: Option<Vec<Vec<usize>>>,
}

impl DigraphDocument {
    pub fn from_digraph(d: &Digraph) -> Self {
        DigraphDocument {
            n: d.n(),
            loops: d.loops(),
            arcs: d.arcs().into_iter().filter(|(u, v)| u != v).collect(),
            ..DigraphDocument::default()
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph> {
        let mut arcs = self.arcs.clone();
        arcs.extend(self.loops.iter().map(|&v| (v, v)));
        Digraph::from_arcs(self.n, &arcs)
    }

    /// Loops, arcs and parts sorted.
    pub fn normalized(&self) -> Self {
        let mut doc = self.clone();
        doc.loops.sort_unstable();
        doc.arcs.sort_unstable();
        if let Some(parts) = &mut doc.declared_partition {
            for p in parts.iter_mut() {
                p.sort_unstable();
            }
        }
        doc
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_vertices(line: usize, fields: &[&str], n: usize) -> Result<Vec<usize>> {
    fields
        .iter()
        .map(|f| {
            let v: usize = f.parse().map_err(|_| parse_err(line, format!("expected a vertex, found {f:?}")))?;
            if v >= n {
                return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
            }
            Ok(v)
        })
        .collect()
}

pub fn parse_digraph(text: &str) -> Result<DigraphDocument> {
    let mut doc = DigraphDocument::default();
    let mut seen_n = false;
    let mut seen_loops = false;
    let mut arcs = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let (key, rest) = (fields[0], &fields[1..]);
        if !seen_n && !matches!(key, "n" | "name" | "class") {
            return Err(parse_err(line, format!("expected `n <int>` before {key:?}")));
        }
        match key {
            "name" | "class" => {
                let slot = if key == "name" { &mut doc.name } else { &mut doc.declared_class };
                if slot.is_some() {
                    return Err(parse_err(line, format!("duplicate `{key}` line")));
                }
                if rest.is_empty() {
                    return Err(parse_err(line, format!("`{key}` needs a value")));
                }
                *slot = Some(rest.join(" "));
            }
            "n" => {
                if seen_n {
                    return Err(parse_err(line, "duplicate `n` line"));
                }
                let [count] = rest else { return Err(parse_err(line, "expected `n <int>`")) };
                doc.n = count.parse().map_err(|_| parse_err(line, format!("invalid vertex count {count:?}")))?;
                seen_n = true;
            }
            "loops" => {
                if seen_loops {
                    return Err(parse_err(line, "duplicate `loops` line"));
                }
                seen_loops = true;
                let vs = parse_vertices(line, rest, doc.n)?;
                let mut uniq = BTreeSet::new();
                for &v in &vs {
                    if !uniq.insert(v) {
                        return Err(parse_err(line, format!("loop on {v} listed twice")));
                    }
                }
                doc.loops = vs;
            }
            "arc" => {
                if rest.len() != 2 {
                    return Err(parse_err(line, "expected `arc <int> <int>`"));
                }
                let vs = parse_vertices(line, rest, doc.n)?;
                let (u, v) = (vs[0], vs[1]);
                if u == v {
                    return Err(parse_err(line, format!("self-arc on {u}: list it on the `loops` line")));
                }
                if !arcs.insert((u, v)) {
                    return Err(parse_err(line, format!("duplicate arc {u} {v}")));
                }
                doc.arcs.push((u, v));
            }
            "part" => {
                let vs = parse_vertices(line, rest, doc.n)?;
                doc.declared_partition.get_or_insert_with(Vec::new).push(vs);
            }
            other => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }
    if !seen_n {
        return Err(parse_err(text.lines().count().max(1), "missing `n <int>` line"));
    }
    Ok(doc)
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn emit_digraph(doc: &DigraphDocument) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        let _ = writeln!(out, "name {name}");
    }
    if let Some(class) = &doc.declared_class {
        let _ = writeln!(out, "class {class}");
    }
    let _ = writeln!(out, "n {}", doc.n);
    let _ = writeln!(out, "{}", format!("loops {}", join(&doc.loops)).trim_end());
    for (u, v) in &doc.arcs {
        let _ = writeln!(out, "arc {u} {v}");
    }
    for p in doc.declared_partition.iter().flatten() {
        let _ = writeln!(out, "{}", format!("part {}", join(p)).trim_end());
    }
    out
}

/// Whitespace-separated vertex indices.
pub fn parse_ordering(text: &str) -> Result<Ordering> {
    let mut perm = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        for f in content.split_whitespace() {
            perm.push(f.parse().map_err(|_| parse_err(i + 1, format!("expected a vertex, found {f:?}")))?);
        }
    }
    Ordering::new(perm)
}

pub fn certificate_json(cert: &Certificate) -> Value {
    let mut m = Map::new();
    m.insert("type".into(), json!(cert.type_name()));
    if let Certificate::NamedObstruction { name, .. } = cert {
        m.insert("name".into(), json!(name));
    }
    m.insert("vertices".into(), json!(cert.vertices()));
    let detail = match cert {
        Certificate::ArcDisjointTriangles { first, second } => Some(json!({ "first": first, "second": second })),
        Certificate::StructuralViolation { kind, .. } => Some(json!({ "kind": kind.as_str() })),
        Certificate::OracleWitness { minimal, .. } => Some(json!({ "minimal": minimal })),
        _ => None,
    };
    if let Some(detail) = detail {
        m.insert("detail".into(), detail);
    }
    Value::Object(m)
}

/// One-line JSON with keys in a fixed order.
pub fn serialize_result(r: &RecognitionResult) -> String {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(if r.verdict == Verdict::Yes { "yes" } else { "no" }));
    m.insert("class".into(), json!(r.class_used.as_str()));
    let confidence = if r.confidence == Confidence::Certified { "certified" } else { "uncertified" };
    m.insert("confidence".into(), json!(confidence));
    if let Some(ord) = &r.ordering {
        m.insert("ordering".into(), json!(ord.as_slice()));
    }
    if let Some(cert) = &r.certificate {
        m.insert("certificate".into(), certificate_json(cert));
    }
    Value::Object(m).to_string()
}

pub fn serialize_domination(s: &DominationSolution) -> String {
    json!({ "dominating_set": s.dominating_set, "packing_set": s.packing_set }).to_string()
}

pub fn emit_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..d.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let c3 = parse_digraph("n 3\nloops\narc 0 1\narc 1 2\narc 2 0\n").unwrap().to_digraph().unwrap();
        assert_eq!(c3.arcs(), vec![(0, 1), (1, 2), (2, 0)]);
        let t0 = parse_digraph("n 4\nloops 0 3\narc 0 1\narc 0 2\narc 1 2\narc 1 3\narc 2 3\narc 3 0\n").unwrap();
        assert_eq!(t0.to_digraph().unwrap(), crate::catalog::t0());
        let one = parse_digraph("n 1\nloops 0\n").unwrap().to_digraph().unwrap();
        assert!(one.has_loop(0));
    }

    #[test]
    fn reports_line_numbers() {
        let err = |t: &str| match parse_digraph(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(err("n 2\narc 0 1\narc 0 1\n"), 3);
        assert_eq!(err("n 2\n\narc 0 2\n"), 3);
        assert_eq!(err("arc 0 1\n"), 1);
        assert_eq!(err("n 2\nloops 1 1\n"), 2);
        assert_eq!(err("n 2\nedge 0 1\n"), 2);
    }

    #[test]
    fn emit_round_trip() {
        let text = "name sample\nn 3\nloops 2\narc 1 0\narc 0 2\npart 0 1\npart 2\n";
        let doc = parse_digraph(text).unwrap();
        assert_eq!(emit_digraph(&doc), text);
        assert_eq!(parse_digraph(&emit_digraph(&doc)).unwrap(), doc);
    }
}
