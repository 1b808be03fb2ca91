//! Named example complexes and pushout squares.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::cells::{CellSpec, DeltaComplex};
use crate::complex::{StratComplex, Subcomplex};
use crate::error::{Error, Result};
use crate::flags::Flag;
use crate::poset::Poset;

/// A corpus entry: either simplicial or a Δ-complex.
#[derive(Clone, Debug)]
pub enum CorpusItem {
    Simplicial(StratComplex),
    Cells(DeltaComplex),
}

impl CorpusItem {
    /// The simplicial complex, subdividing a Δ-complex as often as needed.
    pub fn flatten(&self) -> Result<StratComplex> {
        match self {
            CorpusItem::Simplicial(k) => Ok(k.clone()),
            CorpusItem::Cells(d) => d.flatten().map(|(k, _)| k),
        }
    }
}

/// Names accepted by [`named`]; the parametrised ones take a flag argument,
/// e.g. `stratified_simplex:0,0,1`.
pub const NAMES: &[&str] = &[
    "circle",
    "cone_on_circle",
    "cylinder",
    "pinched_torus",
    "projective_plane",
    "sphere",
    "suspension",
    "torus",
    "stratified_simplex:<flag>",
    "boundary:<flag>",
];

pub fn named(name: &str) -> Result<CorpusItem> {
    let simplicial = |k: Result<StratComplex>| k.map(CorpusItem::Simplicial);
    if let Some(arg) = name.strip_prefix("stratified_simplex:") {
        let (poset, flag) = flag_argument(arg)?;
        return simplicial(stratified_simplex(poset, &flag));
    }
    if let Some(arg) = name.strip_prefix("boundary:") {
        let (poset, flag) = flag_argument(arg)?;
        return simplicial(boundary(poset, &flag));
    }
    match name {
        "circle" => simplicial(circle()),
        "cone_on_circle" => simplicial(cone_on_circle()),
        "cylinder" => simplicial(cylinder()),
        "pinched_torus" => Ok(CorpusItem::Cells(pinched_torus())),
        "projective_plane" => simplicial(projective_plane()),
        "sphere" => simplicial(sphere()),
        "suspension" => simplicial(suspension()),
        "torus" => simplicial(torus()),
        _ => Err(Error::UnknownCorpusName(name.to_string())),
    }
}

/// Flags like `0,0,2` over numeric labels live in the chain `0 < 1 < ... < max`;
/// other labels form a chain in the order given.
fn flag_argument(arg: &str) -> Result<(Arc<Poset>, Flag)> {
    let entries: Vec<&str> = arg.split(',').map(str::trim).collect();
    if entries.iter().any(|e| e.is_empty()) {
        return Err(Error::UnknownCorpusName(arg.to_string()));
    }
    let numeric: Option<Vec<u32>> = entries.iter().map(|e| e.parse().ok()).collect();
    let chain: Vec<String> = match numeric {
        Some(nums) => {
            let max = *nums.iter().max().expect("nonempty");
            (0..=max).map(|i| i.to_string()).collect()
        }
        None => entries.iter().dedup().map(|s| s.to_string()).collect(),
    };
    let poset = Arc::new(Poset::chain(&chain)?);
    let flag = Flag::from_names(&poset, &entries)?;
    Ok((poset, flag))
}

pub fn chain_poset(n: usize) -> Arc<Poset> {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Arc::new(Poset::chain(&names).expect("a chain is a poset"))
}

fn simplex_vertices(poset: &Poset, flag: &Flag) -> Vec<(String, String)> {
    flag.entries()
        .iter()
        .enumerate()
        .map(|(i, &l)| (format!("v{i}"), poset.name(l).to_string()))
        .collect()
}

/// `Δ^J` with vertices `v0, ..., vn` labelled by the entries of `J`.
pub fn stratified_simplex(poset: Arc<Poset>, flag: &Flag) -> Result<StratComplex> {
    if flag.is_empty() {
        return Err(Error::EmptyFlag);
    }
    let vertices = simplex_vertices(&poset, flag);
    let all: Vec<String> = vertices.iter().map(|v| v.0.clone()).collect();
    StratComplex::from_maximal(poset, &vertices, &[all])
}

/// `∂Δ^J`: all proper faces of `Δ^J` (empty for a vertex).
pub fn boundary(poset: Arc<Poset>, flag: &Flag) -> Result<StratComplex> {
    if flag.is_empty() {
        return Err(Error::EmptyFlag);
    }
    let vertices = simplex_vertices(&poset, flag);
    let n = vertices.len();
    if n == 1 {
        return Ok(StratComplex::empty(poset));
    }
    let facets: Vec<Vec<String>> = vertices
        .iter()
        .map(|v| v.0.clone())
        .combinations(n - 1)
        .collect();
    StratComplex::from_maximal(poset, &vertices, &facets)
}

fn build(poset: Arc<Poset>, vertices: &[(&str, &str)], simplices: &[&[&str]]) -> Result<StratComplex> {
    let simplices: Vec<Vec<&str>> = simplices.iter().map(|s| s.to_vec()).collect();
    StratComplex::from_maximal(poset, vertices, &simplices)
}

fn unstratified(vertices: &[&str], simplices: &[&[&str]]) -> Result<StratComplex> {
    let verts: Vec<(&str, &str)> = vertices.iter().map(|v| (*v, "0")).collect();
    build(chain_poset(1), &verts, simplices)
}

pub fn circle() -> Result<StratComplex> {
    unstratified(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]])
}

/// Boundary of the tetrahedron.
pub fn sphere() -> Result<StratComplex> {
    unstratified(
        &["a", "b", "c", "d"],
        &[&["a", "b", "c"], &["a", "b", "d"], &["a", "c", "d"], &["b", "c", "d"]],
    )
}

/// The 7-vertex torus.
pub fn torus() -> Result<StratComplex> {
    let names: Vec<String> = (0..7).map(|i| format!("t{i}")).collect();
    let mut triangles: Vec<Vec<&str>> = Vec::new();
    for i in 0..7 {
        for (a, b) in [(1, 3), (2, 3)] {
            triangles.push(vec![&names[i], &names[(i + a) % 7], &names[(i + b) % 7]]);
        }
    }
    let verts: Vec<(&str, &str)> = names.iter().map(|v| (v.as_str(), "0")).collect();
    StratComplex::from_maximal(chain_poset(1), &verts, &triangles)
}

/// The 6-vertex real projective plane.
pub fn projective_plane() -> Result<StratComplex> {
    unstratified(
        &["1", "2", "3", "4", "5", "6"],
        &[
            &["1", "2", "3"],
            &["1", "3", "4"],
            &["1", "4", "5"],
            &["1", "5", "6"],
            &["1", "2", "6"],
            &["2", "3", "5"],
            &["2", "4", "5"],
            &["2", "4", "6"],
            &["3", "4", "6"],
            &["3", "5", "6"],
        ],
    )
}

fn a_below_b() -> Arc<Poset> {
    Arc::new(Poset::chain(&["a", "b"]).expect("a chain is a poset"))
}

/// Cone with apex `c` (label `a`) over the circle `r0 r1 r2` (label `b`).
pub fn cone_on_circle() -> Result<StratComplex> {
    build(
        a_below_b(),
        &[("c", "a"), ("r0", "b"), ("r1", "b"), ("r2", "b")],
        &[&["c", "r0", "r1"], &["c", "r1", "r2"], &["c", "r0", "r2"]],
    )
}

/// Cylinder over the circle `r0 r1 r2`, with other end `s0 s1 s2`, all
/// labelled `b` over `a < b`.
pub fn cylinder() -> Result<StratComplex> {
    build(
        a_below_b(),
        &[
            ("r0", "b"),
            ("r1", "b"),
            ("r2", "b"),
            ("s0", "b"),
            ("s1", "b"),
            ("s2", "b"),
        ],
        &[
            &["r0", "r1", "s0"],
            &["r1", "s0", "s1"],
            &["r1", "r2", "s1"],
            &["r2", "s1", "s2"],
            &["r2", "r0", "s2"],
            &["r0", "s2", "s0"],
        ],
    )
}

/// Poset with two minimal elements `n`, `s` below `b`.
pub fn two_poles() -> Arc<Poset> {
    Arc::new(Poset::new(&["b", "n", "s"], &[("n", "b"), ("s", "b")]).expect("valid poset"))
}

fn pole_cone(apex: &str, label: &str) -> Result<StratComplex> {
    build(
        two_poles(),
        &[(apex, label), ("r0", "b"), ("r1", "b"), ("r2", "b")],
        &[&[apex, "r0", "r1"], &[apex, "r1", "r2"], &[apex, "r0", "r2"]],
    )
}

/// Suspension of a circle labelled `b`, with poles labelled `n` and `s`.
pub fn suspension() -> Result<StratComplex> {
    build(
        two_poles(),
        &[
            ("north", "n"),
            ("south", "s"),
            ("r0", "b"),
            ("r1", "b"),
            ("r2", "b"),
        ],
        &[
            &["north", "r0", "r1"],
            &["north", "r1", "r2"],
            &["north", "r0", "r2"],
            &["south", "r0", "r1"],
            &["south", "r1", "r2"],
            &["south", "r0", "r2"],
        ],
    )
}

fn cell(id: &str, dim: usize, faces: &[&str], flag: &[&str]) -> CellSpec {
    CellSpec {
        id: id.to_string(),
        dim,
        faces: faces.iter().map(|s| s.to_string()).collect(),
        flag: flag.iter().map(|s| s.to_string()).collect(),
    }
}

/// The pinched torus as a Δ-complex over `0 < 1 < 2`.
///
/// A square with corners `l, u, r, d` around a center `m`; `l ~ r` is the
/// vertex `x` (stratum 0), `u ~ d` is `y`, the sides `lu ~ ld` form `a` and
/// `ru ~ rd` form `b`. The segment `l m r` is the closed 1-stratum.
pub fn pinched_torus() -> DeltaComplex {
    let specs = vec![
        cell("x", 0, &[], &["0"]),
        cell("m", 0, &[], &["1"]),
        cell("y", 0, &[], &["2"]),
        cell("a", 1, &["y", "x"], &["0", "2"]),
        cell("b", 1, &["y", "x"], &["0", "2"]),
        cell("lm", 1, &["m", "x"], &["0", "1"]),
        cell("rm", 1, &["m", "x"], &["0", "1"]),
        cell("mu", 1, &["y", "m"], &["1", "2"]),
        cell("md", 1, &["y", "m"], &["1", "2"]),
        cell("T1", 2, &["mu", "a", "lm"], &["0", "1", "2"]),
        cell("T2", 2, &["md", "a", "lm"], &["0", "1", "2"]),
        cell("T3", 2, &["md", "b", "rm"], &["0", "1", "2"]),
        cell("T4", 2, &["mu", "b", "rm"], &["0", "1", "2"]),
    ];
    DeltaComplex::new(chain_poset(3), specs).expect("pinched torus data is valid")
}

/// A pushout square `X ∪_A B` with `A ⊂ B` embedded in `X` by vertex names.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub name: &'static str,
    pub x: StratComplex,
    pub b: StratComplex,
    pub a: Subcomplex,
    pub embed: BTreeMap<String, String>,
}

fn identity_embed(b: &StratComplex, a: &Subcomplex) -> BTreeMap<String, String> {
    a.vertices()
        .into_iter()
        .map(|v| {
            let n = b.vertex_name(v).to_string();
            (n.clone(), n)
        })
        .collect()
}

fn vertex_subcomplex(k: &StratComplex, names: &[&str]) -> Subcomplex {
    Subcomplex::full(k, |v| names.contains(&k.vertex_name(v)))
}

/// The pushout squares used to exercise gluing and Mayer–Vietoris.
pub fn pushouts() -> Result<Vec<Pushout>> {
    let mut out = Vec::new();

    let edge = stratified_simplex(chain_poset(2), &Flag::parse(&chain_poset(2), "0,1")?)?;
    let a = vertex_subcomplex(&edge, &["v0"]);
    out.push(Pushout {
        name: "two edges along a vertex",
        embed: identity_embed(&edge, &a),
        x: edge.clone(),
        b: edge,
        a,
    });

    let north = pole_cone("north", "n")?;
    let south = pole_cone("south", "s")?;
    let rim = vertex_subcomplex(&south, &["r0", "r1", "r2"]);
    out.push(Pushout {
        name: "suspension from two cones",
        embed: identity_embed(&south, &rim),
        x: north,
        b: south,
        a: rim,
    });

    let cone = cone_on_circle()?;
    let rim = vertex_subcomplex(&cone, &["r0", "r1", "r2"]);
    out.push(Pushout {
        name: "cone onto cylinder",
        embed: identity_embed(&cone, &rim),
        x: cylinder()?,
        b: cone,
        a: rim,
    });

    let (x, b, a) = pinched_torus_halves()?;
    out.push(Pushout {
        name: "pinched torus from subdivided halves",
        embed: identity_embed(&b, &a),
        x,
        b,
        a,
    });

    let p3 = chain_poset(3);
    let tri = stratified_simplex(p3.clone(), &Flag::parse(&p3, "0,1,2")?)?;
    let a = vertex_subcomplex(&tri, &["v0", "v1"]);
    out.push(Pushout {
        name: "two triangles along an edge",
        embed: identity_embed(&tri, &a),
        x: tri.clone(),
        b: tri,
        a,
    });

    let arc = |mid: &str| {
        build(
            chain_poset(2),
            &[("p", "0"), (mid, "1"), ("q", "0")],
            &[&["p", mid], &[mid, "q"]],
        )
    };
    let upper = arc("u")?;
    let lower = arc("w")?;
    let ends = vertex_subcomplex(&lower, &["p", "q"]);
    out.push(Pushout {
        name: "circle from two arcs",
        embed: identity_embed(&lower, &ends),
        x: upper,
        b: lower,
        a: ends,
    });

    Ok(out)
}

/// The flattened pinched torus split into the subdivided cells `T1, T2` (with
/// their faces) and `T3, T4`; the third component is their intersection as a
/// subcomplex of the second.
pub fn pinched_torus_halves() -> Result<(StratComplex, StratComplex, Subcomplex)> {
    let sd = pinched_torus().delta_sd();
    let k = sd.to_strat_complex()?;
    let half = |tops: &[&str]| -> Result<Subcomplex> {
        let cells: Vec<_> = sd
            .cells()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.dim() == 2 && tops.iter().any(|t| c.id().starts_with(&format!("{t}<"))))
            .map(|(i, _)| {
                let names: Vec<&str> = sd.vertices(i).iter().map(|&v| sd.cell(v).id()).collect();
                k.find_simplex(&names)
            })
            .collect::<Result<_>>()?;
        Subcomplex::generated_by(&k, &cells)
    };
    let left = half(&["T1", "T2"])?;
    let right = half(&["T3", "T4"])?;
    let x = left.to_complex(&k);
    let b = right.to_complex(&k);
    let shared = left.intersection(&right).to_complex(&k);
    let a = Subcomplex::full(&b, |v| shared.vertex_index(b.vertex_name(v)).is_some());
    // the intersection is a full subcomplex of either half
    debug_assert_eq!(a.len(), shared.num_simplices());
    Ok((x, b, a))
}
