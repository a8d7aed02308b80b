//! Line-based text formats for algebras and modules.
//!
//! Algebra files:
//!
//! ```text
//! field 2
//! vertex 1
//! vertex 2
//! arrow a1 1 2
//! relation 1*a1.a2
//! ```
//!
//! Module files list `dim <vertex> <n>` and `map <arrow> <entries...>` (row-major,
//! rows indexed by the target vertex). Missing lines mean zero. `#` starts a comment.

use std::sync::Arc;

use crate::algebra::{build_algebra, parse_relation, Algebra, Quiver, DEFAULT_L_MAX};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rep::Representation;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then(|| (i + 1, body.split_whitespace().collect()))
    })
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    parse_algebra_with_bound(text, DEFAULT_L_MAX)
}

/// Parses and builds an algebra, searching for admissibility up to path length `l_max`.
pub fn parse_algebra_with_bound(text: &str, l_max: usize) -> Result<Algebra> {
    let mut p: Option<u32> = None;
    let mut quiver = Quiver::new::<&str>(&[], &[])?;
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    for (line, words) in content_lines(text) {
        match words[0] {
            "field" => {
                if words.len() != 2 {
                    return Err(parse_err(line, "expected `field <p>`"));
                }
                if p.is_some() {
                    return Err(parse_err(line, "field declared twice"));
                }
                let value: u32 = words[1].parse().map_err(|_| parse_err(line, format!("bad prime {:?}", words[1])))?;
                if !linalg::is_prime(value) {
                    return Err(parse_err(line, format!("{value} is not a prime")));
                }
                p = Some(value);
            }
            "vertex" => {
                if words.len() != 2 {
                    return Err(parse_err(line, "expected `vertex <name>`"));
                }
                quiver.add_vertex(words[1]).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "arrow" => {
                if words.len() != 4 {
                    return Err(parse_err(line, "expected `arrow <name> <source> <target>`"));
                }
                quiver.add_arrow(words[1], words[2], words[3]).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "relation" => {
                if words.len() < 2 {
                    return Err(parse_err(line, "empty relation"));
                }
                relation_lines.push((line, words[1..].join(" ")));
            }
            other => return Err(parse_err(line, format!("unknown keyword {other:?}"))),
        }
    }
    let p = p.ok_or_else(|| parse_err(0, "missing `field <p>` line"))?;
    if quiver.vertex_count() == 0 {
        return Err(parse_err(0, "no vertices declared"));
    }
    let relations = relation_lines
        .iter()
        .map(|(line, text)| parse_relation(&quiver, text, p).map_err(|e| parse_err(*line, e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    build_algebra(quiver, relations, p, l_max)
}

pub fn algebra_to_string(alg: &Algebra) -> String {
    let q = alg.quiver();
    let mut out = format!("field {}\n", alg.prime());
    for v in q.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for a in q.arrows() {
        out.push_str(&format!("arrow {} {} {}\n", a.name, q.vertices()[a.source], q.vertices()[a.target]));
    }
    for r in alg.relations() {
        out.push_str(&format!("relation {}\n", r.display(q)));
    }
    out
}

pub fn parse_module(alg: &Arc<Algebra>, text: &str) -> Result<Representation> {
    let q = alg.quiver();
    let p = alg.prime();
    let mut dims: Vec<Option<usize>> = vec![None; q.vertex_count()];
    let mut maps: Vec<Option<(usize, Vec<u32>)>> = vec![None; q.arrows().len()];
    for (line, words) in content_lines(text) {
        match words[0] {
            "dim" => {
                if words.len() != 3 {
                    return Err(parse_err(line, "expected `dim <vertex> <n>`"));
                }
                let v = q
                    .vertex_index(words[1])
                    .ok_or_else(|| parse_err(line, format!("unknown vertex {:?}", words[1])))?;
                let n: usize =
                    words[2].parse().map_err(|_| parse_err(line, format!("bad dimension {:?}", words[2])))?;
                if dims[v].replace(n).is_some() {
                    return Err(parse_err(line, format!("dimension of vertex {} given twice", words[1])));
                }
            }
            "map" => {
                if words.len() < 2 {
                    return Err(parse_err(line, "expected `map <arrow> <entries...>`"));
                }
                let a =
                    q.arrow_index(words[1]).ok_or_else(|| parse_err(line, format!("unknown arrow {:?}", words[1])))?;
                let entries = words[2..]
                    .iter()
                    .map(|w| w.parse::<i64>().map(|x| linalg::reduce(x, p)))
                    .collect::<std::result::Result<Vec<u32>, _>>()
                    .map_err(|_| parse_err(line, "map entries must be integers"))?;
                if maps[a].replace((line, entries)).is_some() {
                    return Err(parse_err(line, format!("map for arrow {} given twice", words[1])));
                }
            }
            other => return Err(parse_err(line, format!("unknown keyword {other:?}"))),
        }
    }
    let dims: Vec<usize> = dims.into_iter().map(|d| d.unwrap_or(0)).collect();
    let mut matrices = Vec::with_capacity(maps.len());
    for (arrow, entry) in q.arrows().iter().zip(maps) {
        let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
        let m = match entry {
            None => Matrix::zeros(p, rows, cols),
            Some((line, entries)) => {
                if entries.len() != rows * cols {
                    return Err(parse_err(
                        line,
                        format!(
                            "arrow {} needs {rows}x{cols} = {} entries, got {}",
                            arrow.name,
                            rows * cols,
                            entries.len()
                        ),
                    ));
                }
                Matrix::from_vec(p, rows, cols, entries)
            }
        };
        matrices.push(m);
    }
    Representation::new(alg.clone(), dims, matrices)
}

pub fn module_to_string(m: &Representation) -> String {
    let q = m.algebra().quiver();
    let mut out = String::new();
    for (v, name) in q.vertices().iter().enumerate() {
        out.push_str(&format!("dim {name} {}\n", m.dim_at(v)));
    }
    for (a, arrow) in q.arrows().iter().enumerate() {
        let map = m.map(a);
        if map.rows() * map.cols() == 0 {
            continue;
        }
        let entries: Vec<String> = map.entries().iter().map(u32::to_string).collect();
        out.push_str(&format!("map {} {}\n", arrow.name, entries.join(" ")));
    }
    out
}
