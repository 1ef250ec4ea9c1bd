use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::str::FromStr;

use super::{Graph, GraphBuilder, Label};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    /// `%%MatrixMarket` coordinate file with 1-based `i j [w]` entries.
    MatrixMarket,
    /// Whitespace-separated `u v [w]` lines with `#` or `%` comments.
    EdgeList,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::MatrixMarket => "mtx",
            Format::EdgeList => "edges",
        }
    }

    /// Guesses the format from a file extension: `.mtx` is MatrixMarket,
    /// anything else an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("mtx") => Format::MatrixMarket,
            _ => Format::EdgeList,
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mtx" | "matrix-market" => Ok(Format::MatrixMarket),
            "edges" | "edge-list" => Ok(Format::EdgeList),
            other => Err(Error::Config(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoadOptions {
    pub format: Format,
    /// Also build the adjacency bit matrix.
    pub bit_matrix: bool,
}

impl LoadOptions {
    pub fn new(format: Format) -> Self {
        LoadOptions { format, bit_matrix: false }
    }
}

pub fn load_graph<R: BufRead>(reader: R, format: Format) -> Result<Graph> {
    load_graph_with(reader, LoadOptions::new(format))
}

pub fn load_graph_file(path: impl AsRef<Path>, options: LoadOptions) -> Result<Graph> {
    let file = File::open(path)?;
    load_graph_with(BufReader::new(file), options)
}

/// Parses a graph. Vertex ids follow first appearance in the file;
/// self-loops are dropped and repeated edges collapsed.
pub fn load_graph_with<R: BufRead>(reader: R, options: LoadOptions) -> Result<Graph> {
    let builder = match options.format {
        Format::EdgeList => parse_edge_list(reader)?,
        Format::MatrixMarket => parse_matrix_market(reader)?,
    };
    let g = builder.build()?;
    Ok(if options.bit_matrix { g.with_bit_matrix() } else { g })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_edge_list<R: BufRead>(reader: R) -> Result<GraphBuilder> {
    let mut builder = GraphBuilder::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => builder.add_edge(Label::parse(a), Label::parse(b)),
            _ => return Err(parse_error(i + 1, format!("expected `u v [w]`, found {line:?}"))),
        }
    }
    Ok(builder)
}

fn parse_index(token: &str, line: usize, bound: usize) -> Result<i64> {
    let value: usize = token.parse().map_err(|_| parse_error(line, format!("invalid index {token:?}")))?;
    if value == 0 || value > bound {
        return Err(parse_error(line, format!("index {value} outside 1..={bound}")));
    }
    Ok(value as i64)
}

fn parse_matrix_market<R: BufRead>(reader: R) -> Result<GraphBuilder> {
    let mut builder = GraphBuilder::new();
    let mut size: Option<(usize, usize)> = None;
    let mut saw_header = false;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        if !saw_header {
            if !line.starts_with("%%MatrixMarket") {
                return Err(parse_error(lineno, "missing %%MatrixMarket header"));
            }
            saw_header = true;
            continue;
        }
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match size {
            None => {
                if tokens.len() < 2 {
                    return Err(parse_error(lineno, "expected size line `rows cols [entries]`"));
                }
                let rows =
                    tokens[0].parse().map_err(|_| parse_error(lineno, format!("invalid row count {:?}", tokens[0])))?;
                let cols = tokens[1]
                    .parse()
                    .map_err(|_| parse_error(lineno, format!("invalid column count {:?}", tokens[1])))?;
                size = Some((rows, cols));
            }
            Some((rows, cols)) => {
                if tokens.len() < 2 {
                    return Err(parse_error(lineno, format!("expected `i j [w]`, found {line:?}")));
                }
                let a = parse_index(tokens[0], lineno, rows)?;
                let b = parse_index(tokens[1], lineno, cols)?;
                builder.add_edge(Label::Int(a), Label::Int(b));
            }
        }
    }
    if !saw_header {
        return Err(parse_error(1, "missing %%MatrixMarket header"));
    }
    Ok(builder)
}
