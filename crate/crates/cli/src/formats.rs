//! Input file formats.
//!
//! Edge lists: a header line `graph n m` or `digraph n m`, then m lines
//! `u v` with 0-based vertex indices, whitespace separated. Anything from
//! `#` to end of line is a comment; blank lines are ignored.
//!
//! Matrix Market: `%%MatrixMarket matrix coordinate real general` with a
//! `rows cols nnz` size line and 1-based `i j value` entries (unlisted
//! entries are zero, duplicates are rejected), or
//! `%%MatrixMarket matrix array real general` with a `rows cols` size line
//! followed by all rows·cols values in column-major order. `%` comment
//! lines are ignored. Only square `real general` matrices are accepted.

use specrad::graphs::GraphError;
use specrad::linalg::LinalgError;
use specrad::{DenseMatrix, Digraph, Graph};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    Invariant {
        line: usize,
        #[source]
        source: GraphError,
    },

    #[error("matrix is not square: {rows} x {cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error(transparent)]
    Matrix(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParsedInput {
    Graph(Graph),
    Digraph(Digraph),
    Matrix(DenseMatrix),
}

impl ParsedInput {
    pub fn kind_label(&self) -> &'static str {
        match self {
            ParsedInput::Graph(_) => "graph",
            ParsedInput::Digraph(_) => "digraph",
            ParsedInput::Matrix(_) => "matrix",
        }
    }
}

/// Sniff the format from the first content token: `%%MatrixMarket` files
/// go to the matrix parser, `graph`/`digraph` files to the edge-list one.
pub fn parse_input(text: &str) -> Result<ParsedInput, FormatError> {
    for (idx, raw) in text.lines().enumerate() {
        if raw.trim_start().starts_with("%%MatrixMarket") {
            return parse_matrix_market(text).map(ParsedInput::Matrix);
        }
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        return match line.split_whitespace().next() {
            Some("graph") | Some("digraph") => parse_edge_list(text),
            _ => Err(FormatError::Parse {
                line: idx + 1,
                message: "expected a 'graph'/'digraph' header or a MatrixMarket banner".into(),
            }),
        };
    }
    Err(FormatError::Parse {
        line: 1,
        message: "empty input".into(),
    })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => line[..pos].trim(),
        None => line.trim(),
    }
}

/// Content lines with their original 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, strip_comment(raw)))
        .filter(|(_, line)| !line.is_empty())
}

pub fn parse_edge_list(text: &str) -> Result<ParsedInput, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(FormatError::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(FormatError::Parse {
            line: header_line,
            message: "header must be 'graph n m' or 'digraph n m'".into(),
        });
    }
    let directed = match parts[0] {
        "graph" => false,
        "digraph" => true,
        other => {
            return Err(FormatError::Parse {
                line: header_line,
                message: format!("unknown input kind '{other}'"),
            })
        }
    };
    let n: usize = parse_number(parts[1], header_line, "vertex count")?;
    let m: usize = parse_number(parts[2], header_line, "edge count")?;
    if n == 0 {
        return Err(FormatError::Invariant {
            line: header_line,
            source: GraphError::ZeroVertices,
        });
    }

    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(m);
    for _ in 0..m {
        let (line, content) = lines.next().ok_or(FormatError::Parse {
            line: header_line,
            message: format!("expected {m} edge lines, found {}", pairs.len()),
        })?;
        let mut fields = content.split_whitespace();
        let (Some(u), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(FormatError::Parse {
                line,
                message: "edge lines must be 'u v'".into(),
            });
        };
        let u: usize = parse_number(u, line, "vertex index")?;
        let v: usize = parse_number(v, line, "vertex index")?;
        if u == v {
            return Err(FormatError::Invariant {
                line,
                source: GraphError::Loop(u),
            });
        }
        for w in [u, v] {
            if w >= n {
                return Err(FormatError::Invariant {
                    line,
                    source: GraphError::VertexOutOfRange { vertex: w, n },
                });
            }
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return Err(FormatError::Invariant {
                line,
                source: GraphError::DuplicateEdge(key.0, key.1),
            });
        }
        pairs.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::Parse {
            line,
            message: format!("trailing content after {m} edges"),
        });
    }

    if directed {
        let d = Digraph::new(n, pairs).map_err(|source| FormatError::Invariant {
            line: header_line,
            source,
        })?;
        Ok(ParsedInput::Digraph(d))
    } else {
        let g = Graph::new(n, pairs).map_err(|source| FormatError::Invariant {
            line: header_line,
            source,
        })?;
        Ok(ParsedInput::Graph(g))
    }
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {} {}\n", d.n(), d.arc_count());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_matrix_market(text: &str) -> Result<DenseMatrix, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (banner_line, banner) = lines.next().ok_or(FormatError::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let tokens: Vec<String> = banner
        .split_whitespace()
        .map(|t| t.to_ascii_lowercase())
        .collect();
    if tokens.first().map(String::as_str) != Some("%%matrixmarket") {
        return Err(FormatError::Parse {
            line: banner_line,
            message: "first line must start with %%MatrixMarket".into(),
        });
    }
    let expect = |idx: usize, allowed: &[&str]| -> Result<String, FormatError> {
        match tokens.get(idx) {
            Some(t) if allowed.contains(&t.as_str()) => Ok(t.clone()),
            Some(t) => Err(FormatError::Parse {
                line: banner_line,
                message: format!("unsupported banner field '{t}' (expected one of {allowed:?})"),
            }),
            None => Err(FormatError::Parse {
                line: banner_line,
                message: "incomplete MatrixMarket banner".into(),
            }),
        }
    };
    expect(1, &["matrix"])?;
    let layout = expect(2, &["coordinate", "array"])?;
    expect(3, &["real", "integer"])?;
    expect(4, &["general"])?;

    let mut content = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });
    let (size_line, size) = content.next().ok_or(FormatError::Parse {
        line: banner_line,
        message: "missing size line".into(),
    })?;
    let dims: Vec<&str> = size.split_whitespace().collect();

    if layout == "coordinate" {
        if dims.len() != 3 {
            return Err(FormatError::Parse {
                line: size_line,
                message: "coordinate size line must be 'rows cols nnz'".into(),
            });
        }
        let rows: usize = parse_number(dims[0], size_line, "row count")?;
        let cols: usize = parse_number(dims[1], size_line, "column count")?;
        let nnz: usize = parse_number(dims[2], size_line, "nonzero count")?;
        if rows != cols {
            return Err(FormatError::NonSquare { rows, cols });
        }
        let n = rows;
        let mut entries = vec![0.0; n * n];
        let mut listed = HashSet::with_capacity(nnz);
        for _ in 0..nnz {
            let (line, content_str) = content.next().ok_or(FormatError::Parse {
                line: size_line,
                message: format!("expected {nnz} coordinate entries"),
            })?;
            let fields: Vec<&str> = content_str.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(FormatError::Parse {
                    line,
                    message: "coordinate entries must be 'i j value'".into(),
                });
            }
            let i: usize = parse_number(fields[0], line, "row index")?;
            let j: usize = parse_number(fields[1], line, "column index")?;
            let value: f64 = parse_real(fields[2], line)?;
            if i < 1 || i > n || j < 1 || j > n {
                return Err(FormatError::Parse {
                    line,
                    message: format!("index ({i}, {j}) outside 1..={n}"),
                });
            }
            if !listed.insert((i, j)) {
                return Err(FormatError::Parse {
                    line,
                    message: format!("duplicate entry ({i}, {j})"),
                });
            }
            entries[(i - 1) * n + (j - 1)] = value;
        }
        if let Some((line, _)) = content.next() {
            return Err(FormatError::Parse {
                line,
                message: "trailing content after the listed entries".into(),
            });
        }
        Ok(DenseMatrix::new(n, entries)?)
    } else {
        if dims.len() != 2 {
            return Err(FormatError::Parse {
                line: size_line,
                message: "array size line must be 'rows cols'".into(),
            });
        }
        let rows: usize = parse_number(dims[0], size_line, "row count")?;
        let cols: usize = parse_number(dims[1], size_line, "column count")?;
        if rows != cols {
            return Err(FormatError::NonSquare { rows, cols });
        }
        let n = rows;
        let mut entries = vec![0.0; n * n];
        let mut count = 0usize;
        for (line, content_str) in content {
            for field in content_str.split_whitespace() {
                if count == n * n {
                    return Err(FormatError::Parse {
                        line,
                        message: format!("more than {} values in array data", n * n),
                    });
                }
                let value = parse_real(field, line)?;
                // array data is column-major
                let (row, col) = (count % n, count / n);
                entries[row * n + col] = value;
                count += 1;
            }
        }
        if count != n * n {
            return Err(FormatError::Parse {
                line: size_line,
                message: format!("expected {} array values, found {count}", n * n),
            });
        }
        Ok(DenseMatrix::new(n, entries)?)
    }
}

fn parse_number(token: &str, line: usize, what: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError::Parse {
        line,
        message: format!("cannot parse {what} from '{token}'"),
    })
}

fn parse_real(token: &str, line: usize) -> Result<f64, FormatError> {
    let value: f64 = token.parse().map_err(|_| FormatError::Parse {
        line,
        message: format!("cannot parse real value from '{token}'"),
    })?;
    if !value.is_finite() {
        return Err(FormatError::Parse {
            line,
            message: format!("value '{token}' is not finite"),
        });
    }
    Ok(value)
}
