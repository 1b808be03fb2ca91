//! The line-oriented complex file format.
//!
//! ```text
//! # comment
//! poset
//! a
//! b
//! rel a b
//! vertex x a
//! vertex y b
//! simplex x y
//! ```
//!
//! Δ-complexes replace `vertex`/`simplex` lines by
//! `cell <dim> <id> : <face ids> : <flag labels>`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use itertools::Itertools;

use crate::cells::{CellSpec, DeltaComplex};
use crate::complex::StratComplex;
use crate::error::{Error, Result};
use crate::poset::{Label, Poset};

/// Contents of a complex file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexFile {
    Simplicial(StratComplex),
    Cells(DeltaComplex),
}

impl ComplexFile {
    pub fn poset(&self) -> &Poset {
        match self {
            ComplexFile::Simplicial(k) => k.poset(),
            ComplexFile::Cells(d) => d.poset(),
        }
    }

    /// The simplicial complex, subdividing cells until simplicial.
    pub fn into_simplicial(self) -> Result<StratComplex> {
        match self {
            ComplexFile::Simplicial(k) => Ok(k),
            ComplexFile::Cells(d) => d.flatten().map(|(k, _)| k),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

struct Raw<'a> {
    poset_line: Option<usize>,
    elements: Vec<(usize, &'a str)>,
    relations: Vec<(usize, &'a str, &'a str)>,
    vertices: Vec<(usize, &'a str, &'a str)>,
    simplices: Vec<(usize, Vec<&'a str>)>,
    cells: Vec<(usize, Vec<&'a str>)>,
}

fn scan(text: &str) -> Result<Raw<'_>> {
    let mut raw = Raw {
        poset_line: None,
        elements: Vec::new(),
        relations: Vec::new(),
        vertices: Vec::new(),
        simplices: Vec::new(),
        cells: Vec::new(),
    };
    let mut in_poset = false;
    for (n, tokens) in content_lines(text) {
        match tokens[0] {
            "poset" if tokens.len() == 1 => {
                if raw.poset_line.is_some() {
                    return Err(err(n, "second poset section"));
                }
                raw.poset_line = Some(n);
                in_poset = true;
            }
            "rel" => {
                if raw.poset_line.is_none() {
                    return Err(err(n, "`rel` before the poset section"));
                }
                let [_, p, q] = tokens[..] else {
                    return Err(err(n, "expected `rel <p> <q>`"));
                };
                raw.relations.push((n, p, q));
            }
            "vertex" => {
                in_poset = false;
                let [_, id, label] = tokens[..] else {
                    return Err(err(n, "expected `vertex <id> <label>`"));
                };
                raw.vertices.push((n, id, label));
            }
            "simplex" => {
                in_poset = false;
                if tokens.len() < 2 {
                    return Err(err(n, "expected `simplex <id> ...`"));
                }
                raw.simplices.push((n, tokens[1..].to_vec()));
            }
            "cell" => {
                in_poset = false;
                raw.cells.push((n, tokens[1..].to_vec()));
            }
            element if in_poset && tokens.len() == 1 => raw.elements.push((n, element)),
            other => return Err(err(n, format!("unexpected `{other}`"))),
        }
    }
    Ok(raw)
}

fn build_poset(raw: &Raw<'_>) -> Result<Arc<Poset>> {
    let Some(line) = raw.poset_line else {
        return Err(err(1, "missing poset section"));
    };
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for &(n, e) in &raw.elements {
        if e.contains(',') {
            return Err(err(n, format!("label `{e}` contains a comma")));
        }
        if seen.insert(e, n).is_some() {
            return Err(err(n, format!("duplicate label `{e}`")));
        }
    }
    for &(n, p, q) in &raw.relations {
        for x in [p, q] {
            if !seen.contains_key(x) {
                return Err(err(n, format!("unknown label `{x}`")));
            }
        }
    }
    let elements: Vec<&str> = raw.elements.iter().map(|e| e.1).collect();
    let relations: Vec<(&str, &str)> = raw.relations.iter().map(|r| (r.1, r.2)).collect();
    let last = raw.relations.last().map_or(line, |r| r.0);
    Poset::new(&elements, &relations)
        .map(Arc::new)
        .map_err(|e| err(last, e.to_string()))
}

fn lookup_label(poset: &Poset, n: usize, name: &str) -> Result<Label> {
    poset
        .label(name)
        .map_err(|_| err(n, format!("unknown label `{name}`")))
}

pub fn parse(text: &str) -> Result<ComplexFile> {
    let raw = scan(text)?;
    let poset = build_poset(&raw)?;
    if !raw.cells.is_empty() {
        if let Some(&(n, ..)) = raw.vertices.first() {
            return Err(err(n, "vertex lines cannot be mixed with cell lines"));
        }
        if let Some((n, _)) = raw.simplices.first() {
            return Err(err(*n, "simplex lines cannot be mixed with cell lines"));
        }
        return parse_cells(poset, &raw.cells).map(ComplexFile::Cells);
    }

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut vertices = Vec::with_capacity(raw.vertices.len());
    for &(n, id, label) in &raw.vertices {
        if index.insert(id, vertices.len()).is_some() {
            return Err(err(n, format!("duplicate vertex `{id}`")));
        }
        vertices.push((id.to_string(), lookup_label(&poset, n, label)?));
    }
    let mut simplices = Vec::with_capacity(raw.simplices.len());
    for (n, ids) in &raw.simplices {
        let mut s = Vec::with_capacity(ids.len());
        for id in ids {
            let v = *index
                .get(id)
                .ok_or_else(|| err(*n, format!("unknown vertex `{id}`")))?;
            if s.contains(&v) {
                return Err(err(*n, format!("repeated vertex `{id}`")));
            }
            s.push(v);
        }
        for (a, b) in s.iter().tuple_combinations() {
            if !poset.comparable(vertices[*a].1, vertices[*b].1) {
                return Err(err(
                    *n,
                    format!(
                        "vertices `{}` and `{}` have incomparable labels",
                        vertices[*a].0, vertices[*b].0
                    ),
                ));
            }
        }
        simplices.push(s);
    }
    StratComplex::build(poset, vertices, simplices).map(ComplexFile::Simplicial)
}

fn parse_cells(poset: Arc<Poset>, lines: &[(usize, Vec<&str>)]) -> Result<DeltaComplex> {
    let mut specs = Vec::with_capacity(lines.len());
    for (n, tokens) in lines {
        let n = *n;
        let parts: Vec<&[&str]> = tokens.split(|t| *t == ":").collect();
        let [head, faces, flag] = parts[..] else {
            return Err(err(n, "expected `cell <dim> <id> : <faces> : <flag>`"));
        };
        let [dim, id] = head[..] else {
            return Err(err(n, "expected `cell <dim> <id> : ...`"));
        };
        let dim: usize = dim
            .parse()
            .map_err(|_| err(n, format!("`{dim}` is not a dimension")))?;
        let flag: Vec<String> = flag
            .iter()
            .flat_map(|t| t.split(','))
            .filter(|t| !t.is_empty())
            .map(str::to_string)
            .collect();
        for l in &flag {
            lookup_label(&poset, n, l)?;
        }
        specs.push(CellSpec {
            id: id.to_string(),
            dim,
            faces: faces.iter().map(|f| f.to_string()).collect(),
            flag,
        });
    }
    DeltaComplex::new(poset, specs)
}

/// Parses a file that must describe a simplicial complex.
pub fn parse_complex(text: &str) -> Result<StratComplex> {
    match parse(text)? {
        ComplexFile::Simplicial(k) => Ok(k),
        ComplexFile::Cells(_) => Err(err(1, "expected a simplicial complex, found cells")),
    }
}

fn write_poset(out: &mut String, poset: &Poset) {
    out.push_str("poset\n");
    for l in poset.labels() {
        let _ = writeln!(out, "{}", poset.name(l));
    }
    for (p, q) in poset.covering_pairs() {
        let _ = writeln!(out, "rel {} {}", poset.name(p), poset.name(q));
    }
}

/// Canonical text of a complex: labels by name, covering relations, vertices
/// by name, maximal simplices of positive dimension in sorted order.
pub fn print_complex(k: &StratComplex) -> String {
    print_annotated(k, &[])
}

/// As [`print_complex`], headed by `#` comment lines.
pub fn print_annotated(k: &StratComplex, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    write_poset(&mut out, k.poset());
    for v in 0..k.num_vertices() {
        let _ = writeln!(out, "vertex {} {}", k.vertex_name(v), k.poset().name(k.label(v)));
    }
    for s in k.maximal_simplices().iter().filter(|s| s.dim() > 0) {
        let _ = writeln!(out, "simplex {}", k.simplex_names(s).join(" "));
    }
    out
}

pub fn print_delta(d: &DeltaComplex) -> String {
    let mut out = String::new();
    write_poset(&mut out, d.poset());
    for spec in d.specs() {
        let faces: String = spec.faces.iter().map(|f| format!(" {f}")).collect();
        let _ = writeln!(
            out,
            "cell {} {} :{faces} : {}",
            spec.dim,
            spec.id,
            spec.flag.join(",")
        );
    }
    out
}

pub fn print_file(file: &ComplexFile) -> String {
    match file {
        ComplexFile::Simplicial(k) => print_complex(k),
        ComplexFile::Cells(d) => print_delta(d),
    }
}

/// A vertex map: lines `<source> <target>`.
pub fn parse_vertex_map(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (n, tokens) in content_lines(text) {
        let [from, to] = tokens[..] else {
            return Err(err(n, "expected `<source> <target>`"));
        };
        if map.insert(from.to_string(), to.to_string()).is_some() {
            return Err(err(n, format!("`{from}` is mapped twice")));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::subcomplex_by_names;
    use crate::corpus;

    const EDGE: &str = "# an edge\nposet\n0\n1\nrel 0 1\nvertex a 0\nvertex b 1\nsimplex a b\n";

    #[test]
    fn parses_edge() {
        let k = parse_complex(EDGE).unwrap();
        assert_eq!(k.counts(), vec![2, 1]);
        assert_eq!(print_complex(&k), EDGE.trim_start_matches("# an edge\n"));
    }

    #[test]
    fn empty_simplex_section() {
        let k = parse_complex("poset\np\n").unwrap();
        assert!(k.is_empty());
    }

    #[test]
    fn errors_carry_lines() {
        let bad = "poset\n0\nvertex a 0\nvertex b 7\n";
        assert_eq!(
            parse(bad).unwrap_err(),
            Error::Parse {
                line: 4,
                message: "unknown label `7`".into()
            }
        );
        let dup = "poset\n0\nvertex a 0\nvertex a 0\n";
        assert!(matches!(parse(dup), Err(Error::Parse { line: 4, .. })));
        let chain = "poset\na\nb\nvertex x a\nvertex y b\nsimplex x y\n";
        assert!(matches!(parse(chain), Err(Error::Parse { line: 6, .. })));
        assert!(matches!(parse("vertex a 0\n"), Err(Error::Parse { line: 1, .. })));
        let cyc = "poset\na\nb\nrel a b\nrel b a\n";
        assert!(matches!(parse(cyc), Err(Error::Parse { line: 5, .. })));
    }

    #[test]
    fn corpus_round_trips() {
        for k in [
            corpus::cone_on_circle().unwrap(),
            corpus::suspension().unwrap(),
            corpus::projective_plane().unwrap(),
        ] {
            let text = print_complex(&k);
            assert_eq!(parse_complex(&text).unwrap(), k);
        }
    }

    #[test]
    fn cells_round_trip() {
        let d = corpus::pinched_torus();
        let text = print_delta(&d);
        assert!(text.contains("cell 0 m : : 1\n"));
        assert!(text.contains("cell 2 T1 : mu a lm : 0,1,2\n"));
        assert_eq!(parse(&text).unwrap(), ComplexFile::Cells(d));
    }

    #[test]
    fn vertex_maps() {
        let m = parse_vertex_map("a x\n# skip\nb y\n").unwrap();
        assert_eq!(m.len(), 2);
        assert!(matches!(parse_vertex_map("a x\na y\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn subcomplex_lookup() {
        let k = parse_complex(EDGE).unwrap();
        let a = parse_complex("poset\n0\n1\nrel 0 1\nvertex a 0\n").unwrap();
        assert_eq!(subcomplex_by_names(&k, &a).unwrap().len(), 1);
        let wrong = parse_complex("poset\n0\n1\nrel 0 1\nvertex a 1\n").unwrap();
        assert!(matches!(subcomplex_by_names(&k, &wrong), Err(Error::LabelMismatch { .. })));
    }
}
