//! Text formats shared by the library and the CLI.
//!
//! * Cover files: JSON `{"n": 8, "k": 4, "cliques": [{"type": "A", "set": [1, 2, 8]}, ...]}`,
//!   optionally carrying a `"solve"` record with the solver outcome.
//! * Block files: a header line `v s`, then one block per line as
//!   space-separated elements of `1..=v`.
//! * Code files: a header line `n w count convention`, then one word per line.
//! * Solver logs: one line per incumbent or bound improvement,
//!   `elapsed_seconds value bound`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Clique, CliqueKind, Code, Cover, GraphParams};
use crate::solver::{IncumbentEvent, SolveOutcome};
use crate::subset::{Subset, VertexOrder};

#[derive(Debug, Serialize, Deserialize)]
struct CliqueRecord {
    #[serde(rename = "type")]
    kind: CliqueKind,
    set: Vec<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CoverRecord {
    n: u32,
    k: u32,
    cliques: Vec<CliqueRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    solve: Option<SolveOutcome>,
}

/// A parsed cover file.
#[derive(Debug, Clone)]
pub struct CoverFile {
    pub cover: Cover,
    pub solve: Option<SolveOutcome>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), message: e.to_string() }
}

pub fn parse_cover(text: &str) -> Result<CoverFile> {
    let rec: CoverRecord = serde_json::from_str(text).map_err(json_error)?;
    let params = GraphParams::new(rec.n, rec.k)
        .map_err(|e| Error::Parse { line: 1, message: e.to_string() })?;
    let mut cliques = Vec::with_capacity(rec.cliques.len());
    for (i, c) in rec.cliques.iter().enumerate() {
        let generator = Subset::from_elements(c.set.iter().copied())
            .and_then(|g| Clique::new(params, c.kind, g))
            .map_err(|e| Error::Parse { line: 0, message: format!("clique #{}: {e}", i + 1) })?;
        cliques.push(generator);
    }
    let cover = Cover::new(params, cliques)
        .map_err(|e| Error::Parse { line: 0, message: e.to_string() })?;
    Ok(CoverFile { cover, solve: rec.solve })
}

/// Renders a cover one clique per line so diffs stay readable.
pub fn write_cover(cover: &Cover, solve: Option<&SolveOutcome>) -> String {
    let params = cover.params();
    let mut out = format!("{{\n  \"n\": {},\n  \"k\": {},\n  \"cliques\": [", params.n(), params.k());
    for (i, c) in cover.cliques().iter().enumerate() {
        let kind = match c.kind() {
            CliqueKind::A => "A",
            CliqueKind::B => "B",
        };
        let set = serde_json::to_string(&c.generator().elements()).expect("plain integers");
        let sep = if i == 0 { "\n" } else { ",\n" };
        let _ = write!(out, "{sep}    {{\"type\": \"{kind}\", \"set\": {set}}}");
    }
    out.push_str(if cover.is_empty() { "]" } else { "\n  ]" });
    if let Some(s) = solve {
        let body = serde_json::to_string(s).expect("serializable outcome");
        let _ = write!(out, ",\n  \"solve\": {body}");
    }
    out.push_str("\n}\n");
    out
}

/// A block design as read from a block file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFile {
    pub v: u32,
    pub s: u32,
    pub blocks: Vec<Subset>,
}

fn parse_u32(tok: &str, line: usize) -> Result<u32> {
    tok.parse().map_err(|_| Error::Parse { line, message: format!("expected integer, got '{tok}'") })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_blocks(text: &str) -> Result<BlockFile> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty block file".into() })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse { line: hline, message: "header must be 'v s'".into() });
    }
    let v = parse_u32(head[0], hline)?;
    let s = parse_u32(head[1], hline)?;
    if v == 0 || v > crate::subset::MAX_N || s == 0 || s > v {
        return Err(Error::Parse { line: hline, message: format!("unsupported header v={v} s={s}") });
    }
    let mut blocks = Vec::new();
    for (line, l) in lines {
        let elems = l.split_whitespace().map(|t| parse_u32(t, line)).collect::<Result<Vec<_>>>()?;
        if elems.iter().any(|&e| e == 0 || e > v) {
            return Err(Error::Parse { line, message: format!("element outside 1..={v}") });
        }
        let block = Subset::from_elements(elems.iter().copied())
            .map_err(|e| Error::Parse { line, message: e.to_string() })?;
        if block.len() != s {
            return Err(Error::Parse { line, message: format!("block has {} elements, expected {s}", block.len()) });
        }
        blocks.push(block);
    }
    Ok(BlockFile { v, s, blocks })
}

pub fn write_blocks(blocks: &BlockFile) -> String {
    let mut out = format!("{} {}\n", blocks.v, blocks.s);
    for b in &blocks.blocks {
        out.push_str(&join_elements(*b));
        out.push('\n');
    }
    out
}

fn join_elements(s: Subset) -> String {
    s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

/// A code file; `convention` is `colex`, `lex` or `-` when not produced by
/// an ordered greedy pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub n: u32,
    pub w: u32,
    pub convention: Option<VertexOrder>,
    pub words: Vec<Subset>,
}

impl CodeFile {
    pub fn from_code(code: &Code, convention: Option<VertexOrder>) -> Self {
        CodeFile {
            n: code.params().n(),
            w: code.params().k(),
            convention,
            words: code.words().to_vec(),
        }
    }
}

pub fn write_code(file: &CodeFile) -> String {
    let conv = file.convention.map_or("-", VertexOrder::name);
    let mut out = format!("{} {} {} {}\n", file.n, file.w, file.words.len(), conv);
    for w in &file.words {
        out.push_str(&join_elements(*w));
        out.push('\n');
    }
    out
}

pub fn parse_code(text: &str) -> Result<CodeFile> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty code file".into() })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 4 {
        return Err(Error::Parse { line: hline, message: "header must be 'n w count convention'".into() });
    }
    let n = parse_u32(head[0], hline)?;
    let w = parse_u32(head[1], hline)?;
    let count = parse_u32(head[2], hline)? as usize;
    let convention = match head[3] {
        "-" => None,
        other => Some(other.parse().map_err(|e: Error| Error::Parse { line: hline, message: e.to_string() })?),
    };
    let mut words = Vec::with_capacity(count);
    for (line, l) in lines {
        let elems = l.split_whitespace().map(|t| parse_u32(t, line)).collect::<Result<Vec<_>>>()?;
        let word = Subset::from_elements(elems.iter().copied())
            .map_err(|e| Error::Parse { line, message: e.to_string() })?;
        if word.len() != w || word.max_element().unwrap_or(0) > n {
            return Err(Error::Parse { line, message: format!("word {word} is not a {w}-subset of [{n}]") });
        }
        words.push(word);
    }
    if words.len() != count {
        return Err(Error::Parse {
            line: hline,
            message: format!("header announces {count} words, found {}", words.len()),
        });
    }
    Ok(CodeFile { n, w, convention, words })
}

pub fn write_solver_log(events: &[IncumbentEvent]) -> String {
    let mut out = String::from("# elapsed_seconds value bound\n");
    for e in events {
        let _ = writeln!(out, "{:.6} {} {}", e.elapsed_secs, e.value, e.bound);
    }
    out
}
