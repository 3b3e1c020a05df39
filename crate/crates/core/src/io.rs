//! Graph file ingestion and serialization.
//!
//! Two input formats are supported:
//!
//! * SNAP-style edge lists: `#`-prefixed comment lines, data lines of exactly
//!   two whitespace-separated node identifiers (one arc per line).
//! * A Pajek subset: a `*Vertices n` header, optional labeled vertex lines,
//!   and `*Edges` / `*Arcs` sections of 1-based index pairs. Trailing edge
//!   weights are ignored; unknown sections are skipped with a warning.
//!
//! Directed inputs are collapsed to undirected graphs by symmetric closure:
//! every arc contributes one undirected edge, reciprocal arcs merge, and
//! self-loops are dropped. The counts of both cleanups are reported in
//! [`ParseDiagnostics`].

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeListFormat {
    Snap,
    Pajek,
}

/// How the source file's arcs should be read. Both options produce the same
/// undirected graph (symmetric closure); the hint only documents intent.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Directedness {
    Directed,
    Undirected,
    #[default]
    Auto,
}

/// A graph file on disk together with how to read it.
#[derive(Debug, Clone)]
pub struct EdgeListSource {
    pub path: PathBuf,
    /// `None` means: infer from the file extension.
    pub format: Option<EdgeListFormat>,
    pub directedness: Directedness,
}

impl EdgeListSource {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        EdgeListSource {
            path: path.into(),
            format: None,
            directedness: Directedness::Auto,
        }
    }

    pub fn with_format(mut self, format: EdgeListFormat) -> Self {
        self.format = Some(format);
        self
    }

    /// Resolves the format (explicit tag or extension sniff), then parses.
    pub fn load(&self) -> Result<ParsedGraph> {
        let format = match self.format.or_else(|| sniff_format(&self.path)) {
            Some(f) => f,
            None => {
                return Err(Error::InvalidArgument(format!(
                    "cannot infer format of {}; pass an explicit format (snap or pajek)",
                    self.path.display()
                )))
            }
        };
        let reader = BufReader::new(File::open(&self.path)?);
        match format {
            EdgeListFormat::Snap => parse_snap_edgelist(reader),
            EdgeListFormat::Pajek => parse_pajek(reader),
        }
    }
}

/// Guesses the format from a file extension.
pub fn sniff_format(path: &Path) -> Option<EdgeListFormat> {
    let ext = path.extension()?.to_str()?.to_ascii_lowercase();
    match ext.as_str() {
        "net" | "paj" | "pajek" => Some(EdgeListFormat::Pajek),
        "txt" | "edges" | "edgelist" | "snap" => Some(EdgeListFormat::Snap),
        _ => None,
    }
}

/// What parsing cleaned up or skipped, for user-facing reports.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseDiagnostics {
    pub self_loops_dropped: u64,
    pub duplicate_arcs_merged: u64,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub diagnostics: ParseDiagnostics,
}

/// Parses a SNAP-style edge list. Node identifiers may be arbitrary
/// whitespace-free strings; internal indices are assigned by first
/// appearance.
pub fn parse_snap_edgelist<R: BufRead>(reader: R) -> Result<ParsedGraph> {
    let mut builder = GraphBuilder::new();
    let mut data_lines = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::parse(
                    idx + 1,
                    format!("expected exactly two node identifiers, got {line:?}"),
                ))
            }
        };
        let u = builder.intern(a);
        let v = builder.intern(b);
        builder.add_arc(u, v);
        data_lines += 1;
    }
    if data_lines == 0 {
        return Err(Error::NoEdges);
    }
    let (graph, stats) = builder.finish();
    Ok(ParsedGraph {
        graph,
        diagnostics: ParseDiagnostics {
            self_loops_dropped: stats.self_loops_dropped,
            duplicate_arcs_merged: stats.duplicate_arcs_merged,
            warnings: Vec::new(),
        },
    })
}

#[derive(PartialEq)]
enum PajekSection {
    Preamble,
    Vertices,
    Edges,
    Skipped,
}

/// Parses the Pajek subset described in the module docs.
pub fn parse_pajek<R: BufRead>(reader: R) -> Result<ParsedGraph> {
    let mut builder = GraphBuilder::new();
    let mut warnings = Vec::new();
    let mut section = PajekSection::Preamble;
    let mut vertex_count: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('*') {
            let mut parts = rest.split_whitespace();
            let keyword = parts.next().unwrap_or("");
            match keyword.to_ascii_lowercase().as_str() {
                "vertices" => {
                    let n: usize = parts
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "*Vertices without a count"))?
                        .parse()
                        .map_err(|_| Error::parse(lineno, "invalid vertex count"))?;
                    for i in 0..n {
                        builder.push_node((i + 1).to_string());
                    }
                    vertex_count = Some(n);
                    section = PajekSection::Vertices;
                }
                "edges" | "arcs" => {
                    if vertex_count.is_none() {
                        return Err(Error::parse(lineno, "missing *Vertices header"));
                    }
                    section = PajekSection::Edges;
                }
                _ => {
                    warnings.push(format!(
                        "line {lineno}: skipping unknown section *{keyword}"
                    ));
                    section = PajekSection::Skipped;
                }
            }
            continue;
        }
        match section {
            PajekSection::Preamble => {
                return Err(Error::parse(lineno, "missing *Vertices header"));
            }
            PajekSection::Skipped => continue,
            PajekSection::Vertices => {
                let n = vertex_count.unwrap();
                let mut parts = line.splitn(2, char::is_whitespace);
                let index: usize = parts
                    .next()
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::parse(lineno, "invalid vertex index"))?;
                if index < 1 || index > n {
                    return Err(Error::parse(
                        lineno,
                        format!("vertex index {index} out of range [1,{n}]"),
                    ));
                }
                if let Some(label) = parse_pajek_label(parts.next().unwrap_or("")) {
                    builder.set_label(index as u32 - 1, label);
                }
            }
            PajekSection::Edges => {
                let n = vertex_count.unwrap();
                let mut tokens = line.split_whitespace();
                let endpoint = |token: Option<&str>| -> Result<u32> {
                    let raw = token
                        .ok_or_else(|| Error::parse(lineno, "edge line needs two endpoints"))?;
                    let i: usize = raw
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("invalid endpoint {raw:?}")))?;
                    if i < 1 || i > n {
                        return Err(Error::parse(
                            lineno,
                            format!("endpoint index {i} out of range [1,{n}]"),
                        ));
                    }
                    Ok(i as u32 - 1)
                };
                let u = endpoint(tokens.next())?;
                let v = endpoint(tokens.next())?;
                // Anything after the endpoints (edge weights) is ignored.
                builder.add_arc(u, v);
            }
        }
    }
    if vertex_count.is_none() {
        return Err(Error::parse(0, "missing *Vertices header"));
    }
    let (graph, stats) = builder.finish();
    Ok(ParsedGraph {
        graph,
        diagnostics: ParseDiagnostics {
            self_loops_dropped: stats.self_loops_dropped,
            duplicate_arcs_merged: stats.duplicate_arcs_merged,
            warnings,
        },
    })
}

/// Extracts a vertex label: quoted (may contain spaces) or the first bare
/// token. Returns `None` when the rest of the line is empty.
fn parse_pajek_label(rest: &str) -> Option<String> {
    let rest = rest.trim();
    if rest.is_empty() {
        return None;
    }
    if let Some(stripped) = rest.strip_prefix('"') {
        let end = stripped.find('"').unwrap_or(stripped.len());
        return Some(stripped[..end].to_string());
    }
    rest.split_whitespace().next().map(str::to_string)
}

/// Writes `g` as a SNAP-style edge list that [`parse_snap_edgelist`] reads
/// back into an isomorphic graph.
///
/// Node labels are used verbatim when they are unique, whitespace-free, and
/// cannot be mistaken for comments; otherwise internal indices are written.
/// Isolated nodes are encoded as self-loop lines, which the parser turns back
/// into isolated nodes.
pub fn write_snap_edgelist<W: Write>(g: &Graph, mut w: W) -> std::io::Result<()> {
    let ids: Vec<String> = if labels_are_writable(g) {
        g.nodes().map(|v| g.label(v)).collect()
    } else {
        g.nodes().map(|v| v.to_string()).collect()
    };
    writeln!(w, "# Nodes: {} Edges: {}", g.node_count(), g.edge_count())?;
    writeln!(w, "# FromNodeId\tToNodeId")?;
    for (u, v) in g.edges() {
        writeln!(w, "{}\t{}", ids[u as usize], ids[v as usize])?;
    }
    for v in g.nodes().filter(|&v| g.degree(v) == 0) {
        writeln!(w, "{}\t{}", ids[v as usize], ids[v as usize])?;
    }
    Ok(())
}

fn labels_are_writable(g: &Graph) -> bool {
    let Some(labels) = g.labels() else {
        return true; // index strings are always safe
    };
    let mut seen = std::collections::HashSet::with_capacity(labels.len());
    labels.iter().all(|l| {
        !l.is_empty()
            && !l.starts_with('#')
            && !l.contains(char::is_whitespace)
            && seen.insert(l.as_str())
    })
}
