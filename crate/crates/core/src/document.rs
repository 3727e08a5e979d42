//! Plain-text graph document.
//!
//! ```text
//! lhe-graph 1
//! vertices <n>
//! <id> <+1|-1>        n records
//! edges <m>
//! <u> <v>             m records, u < v
//! word <id> <id> ...  optional, one line, may be empty after the keyword
//! target <s> <t>      optional
//! ```
//!
//! Serialization is canonical: vertices ascending, edges in lexicographic
//! order, single spaces, `\n` line endings, no comments. The parser also
//! accepts `#` comment lines, blank lines and records in any order, and
//! rejects duplicates, dangling endpoints and count mismatches.

use std::io::{self, Write};

use thiserror::Error;

use crate::graph::{BicoloredGraph, Color, UpdateWord, VertexId};
use crate::lhe::LheInstance;

pub const MAGIC: &str = "lhe-graph 1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: BicoloredGraph,
    pub word: Option<UpdateWord>,
    pub target: Option<(VertexId, VertexId)>,
}

impl GraphDocument {
    pub fn bare(graph: BicoloredGraph) -> Self {
        GraphDocument {
            graph,
            word: None,
            target: None,
        }
    }

    pub fn into_instance(self) -> Result<LheInstance, ParseError> {
        let word = self.word.ok_or_else(|| ParseError::missing("word"))?;
        let (s, t) = self.target.ok_or_else(|| ParseError::missing("target"))?;
        LheInstance::new(self.graph, s, t, word).map_err(|e| ParseError {
            line: 0,
            column: 0,
            message: e.to_string(),
        })
    }
}

impl From<LheInstance> for GraphDocument {
    fn from(inst: LheInstance) -> Self {
        GraphDocument {
            graph: inst.graph,
            word: Some(inst.word),
            target: Some((inst.s, inst.t)),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn missing(section: &str) -> Self {
        ParseError::at(0, 0, format!("document has no `{section}` section"))
    }
}

/// Line-level writer shared by [`serialize`] and the streaming compiler so
/// both paths produce the same bytes.
pub struct DocWriter<W: Write> {
    out: W,
    word_open: bool,
}

impl<W: Write> DocWriter<W> {
    pub fn new(out: W) -> Self {
        DocWriter { out, word_open: false }
    }

    pub fn vertices_header(&mut self, n: usize) -> io::Result<()> {
        writeln!(self.out, "{MAGIC}")?;
        writeln!(self.out, "vertices {n}")
    }

    pub fn vertex(&mut self, v: VertexId, c: Color) -> io::Result<()> {
        writeln!(self.out, "{v} {c}")
    }

    pub fn edges_header(&mut self, m: usize) -> io::Result<()> {
        writeln!(self.out, "edges {m}")
    }

    pub fn edge(&mut self, u: VertexId, v: VertexId) -> io::Result<()> {
        writeln!(self.out, "{u} {v}")
    }

    pub fn word_item(&mut self, v: VertexId) -> io::Result<()> {
        if !self.word_open {
            self.out.write_all(b"word")?;
            self.word_open = true;
        }
        write!(self.out, " {v}")
    }

    /// Closes the word line; writes `word` alone when no item was written.
    pub fn word_end(&mut self) -> io::Result<()> {
        if !self.word_open {
            self.out.write_all(b"word")?;
        }
        self.word_open = false;
        self.out.write_all(b"\n")
    }

    pub fn target(&mut self, s: VertexId, t: VertexId) -> io::Result<()> {
        writeln!(self.out, "target {s} {t}")
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}

pub fn write_document<W: Write>(doc: &GraphDocument, out: W) -> io::Result<W> {
    let g = &doc.graph;
    let mut w = DocWriter::new(out);
    w.vertices_header(g.vertex_count())?;
    for v in g.vertices() {
        w.vertex(v, g.color(v))?;
    }
    w.edges_header(g.edge_count())?;
    for (u, v) in g.edges() {
        w.edge(u, v)?;
    }
    if let Some(word) = &doc.word {
        for v in word.iter() {
            w.word_item(v)?;
        }
        w.word_end()?;
    }
    if let Some((s, t)) = doc.target {
        w.target(s, t)?;
    }
    Ok(w.into_inner())
}

pub fn serialize_document(doc: &GraphDocument) -> String {
    let bytes = write_document(doc, Vec::new()).expect("writing to a Vec cannot fail");
    String::from_utf8(bytes).expect("document is ASCII")
}

/// Canonical text of a bare graph.
pub fn serialize(graph: &BicoloredGraph) -> String {
    serialize_document(&GraphDocument::bare(graph.clone()))
}

pub fn deserialize(text: &str) -> Result<BicoloredGraph, ParseError> {
    parse_document(text).map(|d| d.graph)
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn next_record(&mut self) -> Option<(usize, Vec<(usize, &'a str)>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last_line = i + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let toks = tokens(raw);
            return Some((i + 1, toks));
        }
        None
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_count(line: usize, (col, tok): (usize, &str)) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| ParseError::at(line, col, format!("expected a count, found `{tok}`")))
}

fn parse_id(line: usize, (col, tok): (usize, &str), n: usize) -> Result<VertexId, ParseError> {
    let id = tok
        .parse::<u32>()
        .map_err(|_| ParseError::at(line, col, format!("expected a vertex id, found `{tok}`")))?;
    if id as usize >= n {
        return Err(ParseError::at(
            line,
            col,
            format!("vertex {id} out of range (graph has {n} vertices)"),
        ));
    }
    Ok(VertexId(id))
}

fn expect_keyword(
    rec: Option<(usize, Vec<(usize, &str)>)>,
    keyword: &str,
    arity: usize,
    eof_line: usize,
) -> Result<(usize, Vec<(usize, String)>), ParseError> {
    let (line, toks) =
        rec.ok_or_else(|| ParseError::at(eof_line, 1, format!("expected `{keyword}`, found end of input")))?;
    if toks[0].1 != keyword {
        return Err(ParseError::at(
            line,
            toks[0].0,
            format!("expected `{keyword}`, found `{}`", toks[0].1),
        ));
    }
    if toks.len() != arity + 1 {
        let col = toks.last().map(|t| t.0).unwrap_or(1);
        return Err(ParseError::at(
            line,
            col,
            format!("`{keyword}` takes {arity} argument(s), found {}", toks.len() - 1),
        ));
    }
    Ok((line, toks.into_iter().map(|(c, t)| (c, t.to_string())).collect()))
}

pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last_line: 0,
    };

    let (line, toks) = lines
        .next_record()
        .ok_or_else(|| ParseError::at(1, 1, "empty document"))?;
    let head: Vec<&str> = toks.iter().map(|t| t.1).collect();
    if head != ["lhe-graph", "1"] {
        return Err(ParseError::at(line, 1, format!("expected header `{MAGIC}`")));
    }

    let rec = lines.next_record();
    let (line, toks) = expect_keyword(rec, "vertices", 1, lines.last_line + 1)?;
    let n = parse_count(line, (toks[1].0, &toks[1].1))?;
    if n > u32::MAX as usize {
        return Err(ParseError::at(line, toks[1].0, "too many vertices"));
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for _ in 0..n {
        let (line, toks) = lines
            .next_record()
            .ok_or_else(|| ParseError::at(lines.last_line + 1, 1, "missing vertex record"))?;
        if toks.len() != 2 {
            return Err(ParseError::at(line, 1, "vertex record must be `<id> <+1|-1>`"));
        }
        let v = parse_id(line, toks[0], n)?;
        let c = match toks[1].1 {
            "+1" => Color::Plus,
            "-1" => Color::Minus,
            other => {
                return Err(ParseError::at(
                    line,
                    toks[1].0,
                    format!("color must be `+1` or `-1`, found `{other}`"),
                ))
            }
        };
        if colors[v.index()].replace(c).is_some() {
            return Err(ParseError::at(line, toks[0].0, format!("vertex {v} listed twice")));
        }
    }
    let colors: Vec<Color> = colors.into_iter().map(|c| c.expect("all n ids seen")).collect();
    let mut graph = BicoloredGraph::new(colors);

    let rec = lines.next_record();
    let (line, toks) = expect_keyword(rec, "edges", 1, lines.last_line + 1)?;
    let m = parse_count(line, (toks[1].0, &toks[1].1))?;
    for _ in 0..m {
        let (line, toks) = lines
            .next_record()
            .ok_or_else(|| ParseError::at(lines.last_line + 1, 1, "missing edge record"))?;
        if toks.len() != 2 {
            return Err(ParseError::at(line, 1, "edge record must be `<u> <v>`"));
        }
        let u = parse_id(line, toks[0], n)?;
        let v = parse_id(line, toks[1], n)?;
        if u == v {
            return Err(ParseError::at(line, toks[1].0, format!("self-loop at vertex {u}")));
        }
        if !graph.add_edge(u, v).expect("ids validated") {
            return Err(ParseError::at(line, 1, format!("duplicate edge {u} {v}")));
        }
    }

    let mut doc = GraphDocument::bare(graph);
    while let Some((line, toks)) = lines.next_record() {
        match toks[0].1 {
            "word" if doc.word.is_none() && doc.target.is_none() => {
                let mut word = Vec::with_capacity(toks.len() - 1);
                for &tok in &toks[1..] {
                    word.push(parse_id(line, tok, n)?);
                }
                doc.word = Some(UpdateWord(word));
            }
            "target" if doc.target.is_none() => {
                if toks.len() != 3 {
                    return Err(ParseError::at(line, 1, "target record must be `target <s> <t>`"));
                }
                let s = parse_id(line, toks[1], n)?;
                let t = parse_id(line, toks[2], n)?;
                if s == t {
                    return Err(ParseError::at(line, toks[2].0, "target vertices must differ"));
                }
                doc.target = Some((s, t));
            }
            other => return Err(ParseError::at(line, toks[0].0, format!("unexpected record `{other}`"))),
        }
    }
    Ok(doc)
}
