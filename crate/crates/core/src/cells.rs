//! Stratified Δ-complexes: cells with ordered faces, identifications allowed.

use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::{Simplex, StratComplex};
use crate::error::{Error, Result};
use crate::flags::Flag;
use crate::neighborhoods::stan_hood_condition;
use crate::poset::{Label, Poset};

/// Textual description of a cell, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSpec {
    pub id: String,
    pub dim: usize,
    pub faces: Vec<String>,
    pub flag: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    id: String,
    dim: usize,
    faces: Vec<usize>,
    flag: Flag,
}

impl Cell {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Indices of the faces `d_0, ..., d_n`.
    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn flag(&self) -> &Flag {
        &self.flag
    }
}

/// A finite semi-simplicial set with a flag on every cell, validated on
/// construction. Cells are numbered by dimension, then input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaComplex {
    poset: Arc<Poset>,
    cells: Vec<Cell>,
    index: HashMap<String, usize>,
}

impl DeltaComplex {
    pub fn new(poset: Arc<Poset>, specs: Vec<CellSpec>) -> Result<Self> {
        let mut position: HashMap<&str, usize> = HashMap::new();
        for (i, s) in specs.iter().enumerate() {
            if position.insert(s.id.as_str(), i).is_some() {
                return Err(Error::Duplicate(s.id.clone()));
            }
        }
        let mut faces = Vec::with_capacity(specs.len());
        for s in &specs {
            let f = s
                .faces
                .iter()
                .map(|id| {
                    position.get(id.as_str()).copied().ok_or_else(|| {
                        Error::InvalidComplex(format!("cell `{}` has unknown face `{id}`", s.id))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            faces.push(f);
        }
        let mut flags = Vec::with_capacity(specs.len());
        for s in &specs {
            let flag = Flag::from_names(&poset, &s.flag)?;
            if flag.len() != s.dim + 1 {
                return Err(Error::InvalidComplex(format!(
                    "cell `{}` of dimension {} has a flag of length {}",
                    s.id,
                    s.dim,
                    flag.len()
                )));
            }
            flags.push(flag);
        }
        if let Some(c) = find_cycle(&faces) {
            return Err(Error::PrecursorCycle(specs[c].id.clone()));
        }
        for (i, s) in specs.iter().enumerate() {
            let expected = if s.dim == 0 { 0 } else { s.dim + 1 };
            if faces[i].len() != expected {
                return Err(Error::InvalidComplex(format!(
                    "cell `{}` of dimension {} lists {} faces",
                    s.id,
                    s.dim,
                    faces[i].len()
                )));
            }
            if let Some(&bad) = faces[i].iter().find(|&&f| specs[f].dim + 1 != s.dim) {
                return Err(Error::InvalidComplex(format!(
                    "face `{}` of cell `{}` has dimension {}",
                    specs[bad].id, s.id, specs[bad].dim
                )));
            }
        }

        let mut order: Vec<usize> = (0..specs.len()).collect();
        order.sort_by_key(|&i| specs[i].dim);
        let mut renumber = vec![0; specs.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let mut specs: Vec<Option<CellSpec>> = specs.into_iter().map(Some).collect();
        let mut faces: Vec<Option<Vec<usize>>> = faces.into_iter().map(Some).collect();
        let mut flags: Vec<Option<Flag>> = flags.into_iter().map(Some).collect();
        let cells: Vec<Cell> = order
            .iter()
            .map(|&old| {
                let spec = specs[old].take().expect("each cell moved once");
                Cell {
                    id: spec.id,
                    dim: spec.dim,
                    faces: faces[old]
                        .take()
                        .expect("each cell moved once")
                        .into_iter()
                        .map(|f| renumber[f])
                        .collect(),
                    flag: flags[old].take().expect("each cell moved once"),
                }
            })
            .collect();
        let index = cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.clone(), i))
            .collect();
        let d = DeltaComplex {
            poset,
            cells,
            index,
        };
        d.check_face_identities()?;
        d.check_flags()?;
        Ok(d)
    }

    fn check_face_identities(&self) -> Result<()> {
        for c in &self.cells {
            if c.dim < 2 {
                continue;
            }
            for j in 1..=c.dim {
                for i in 0..j {
                    let left = self.cells[c.faces[j]].faces[i];
                    let right = self.cells[c.faces[i]].faces[j - 1];
                    if left != right {
                        return Err(Error::FaceIdentityViolation {
                            cell: c.id.clone(),
                            i,
                            j,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_flags(&self) -> Result<()> {
        for c in &self.cells {
            for (i, &f) in c.faces.iter().enumerate() {
                let mut expected = c.flag.entries().to_vec();
                expected.remove(i);
                if self.cells[f].flag.entries() != expected.as_slice() {
                    return Err(Error::FlagMismatch {
                        cell: c.id.clone(),
                        face: i,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn poset_arc(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, c: usize) -> &Cell {
        &self.cells[c]
    }

    pub fn cell_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Indices of the cells of dimension `dim`, in order.
    pub fn cells_of_dim(&self, dim: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.cells.len()).filter(move |&c| self.cells[c].dim == dim)
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim)
    }

    /// Number of cells in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            counts[c.dim] += 1;
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .map(|c| if c.dim % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// The `i`-th vertex (0-cell) of a cell.
    pub fn vertex(&self, c: usize, i: usize) -> usize {
        let mut c = c;
        let mut i = i;
        while self.cells[c].dim > 0 {
            let n = self.cells[c].dim;
            if i < n {
                c = self.cells[c].faces[n];
            } else {
                c = self.cells[c].faces[0];
                i -= 1;
            }
        }
        c
    }

    pub fn vertices(&self, c: usize) -> Vec<usize> {
        (0..=self.cells[c].dim).map(|i| self.vertex(c, i)).collect()
    }

    /// The face of `c` spanned by the sorted vertex positions `keep`.
    pub fn face(&self, c: usize, keep: &[usize]) -> usize {
        let mut c = c;
        for k in (0..=self.cells[c].dim).rev() {
            if keep.binary_search(&k).is_err() {
                c = self.cells[c].faces[k];
            }
        }
        c
    }

    /// Canonical barycentric subdivision.
    ///
    /// A `k`-cell is a cell `c` with a chain `S_0 ⊊ ... ⊊ S_k` of vertex
    /// position sets ending in all positions of `c`; it is named like
    /// `c<0|0.1|0.1.2>`.
    pub fn delta_sd(&self) -> DeltaComplex {
        let mut specs: Vec<CellSpec> = Vec::new();
        let max_dim = self.dim().unwrap_or(0);
        let mut chain_cache: HashMap<usize, Vec<Vec<u32>>> = HashMap::new();
        for k in 0..=max_dim {
            for (c, cell) in self.cells.iter().enumerate() {
                if cell.dim < k {
                    continue;
                }
                let chains = chain_cache
                    .entry(cell.dim)
                    .or_insert_with(|| chains_to_full(cell.dim));
                for chain in chains.iter().filter(|ch| ch.len() == k + 1) {
                    let mut faces = Vec::new();
                    if k > 0 {
                        for i in 0..k {
                            let mut rest = chain.clone();
                            rest.remove(i);
                            faces.push(sd_name(&cell.id, &rest));
                        }
                        let (carrier, reindexed) = self.canonicalize(c, &chain[..k]);
                        faces.push(sd_name(&self.cells[carrier].id, &reindexed));
                    }
                    let flag = chain
                        .iter()
                        .map(|&mask| {
                            let top = 31 - mask.leading_zeros() as usize;
                            self.poset.name(cell.flag.entries()[top]).to_string()
                        })
                        .collect();
                    specs.push(CellSpec {
                        id: sd_name(&cell.id, chain),
                        dim: k,
                        faces,
                        flag,
                    });
                }
            }
        }
        DeltaComplex::new(self.poset.clone(), specs).expect("subdivision of a valid complex is valid")
    }

    fn canonicalize(&self, c: usize, chain: &[u32]) -> (usize, Vec<u32>) {
        let top = *chain.last().expect("nonempty chain");
        let keep: Vec<usize> = (0..32).filter(|b| top & (1 << b) != 0).collect();
        let carrier = self.face(c, &keep);
        let reindexed = chain
            .iter()
            .map(|&mask| {
                keep.iter()
                    .enumerate()
                    .filter(|(_, &b)| mask & (1 << b) != 0)
                    .fold(0u32, |acc, (new, _)| acc | (1 << new))
            })
            .collect();
        (carrier, reindexed)
    }

    /// The simplicial complex with the same cells, if every cell has distinct
    /// vertices and distinct cells have distinct vertex sets.
    pub fn to_strat_complex(&self) -> Result<StratComplex> {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut simplices = Vec::with_capacity(self.cells.len());
        for (c, cell) in self.cells.iter().enumerate() {
            let mut verts = self.vertices(c);
            verts.sort_unstable();
            if let Some(w) = verts.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::NotSimplicial(
                    cell.id.clone(),
                    self.cells[w[0]].id.clone(),
                ));
            }
            if let Some(&other) = seen.get(&verts) {
                return Err(Error::NotSimplicial(
                    self.cells[other].id.clone(),
                    cell.id.clone(),
                ));
            }
            seen.insert(verts.clone(), c);
            simplices.push(verts);
        }
        // vertex indices here are cell indices; 0-cells come first
        let vertices: Vec<(String, Label)> = self
            .cells
            .iter()
            .take_while(|c| c.dim == 0)
            .map(|c| (c.id.clone(), c.flag.entries()[0]))
            .collect();
        StratComplex::build(self.poset.clone(), vertices, simplices)
    }

    /// Subdivides until the complex is simplicial; returns the complex and the
    /// number of subdivisions used.
    pub fn flatten(&self) -> Result<(StratComplex, usize)> {
        let mut current = self.clone();
        let mut rounds = 0;
        loop {
            match current.to_strat_complex() {
                Ok(k) => return Ok((k, rounds)),
                Err(Error::NotSimplicial(..)) if rounds < 2 => {
                    current = current.delta_sd();
                    rounds += 1;
                }
                Err(e) => return Err(e),
            }
        }
    }

    /// The Δ-complex of a simplicial complex, vertices of each simplex ordered
    /// along the poset.
    pub fn from_strat_complex(k: &StratComplex) -> DeltaComplex {
        let order = |s: &Simplex| {
            let mut v = s.vertices().to_vec();
            v.sort_by_key(|&x| (k.poset().rank(k.label(x)), x));
            v
        };
        let id = |verts: &[usize]| {
            if verts.len() == 1 {
                k.vertex_name(verts[0]).to_string()
            } else {
                let names: Vec<&str> = verts.iter().map(|&v| k.vertex_name(v)).collect();
                format!("[{}]", names.join(","))
            }
        };
        let mut specs = Vec::new();
        for s in k.all_simplices() {
            let verts = order(s);
            let faces = if verts.len() == 1 {
                Vec::new()
            } else {
                (0..verts.len())
                    .map(|i| {
                        let mut f = verts.clone();
                        f.remove(i);
                        id(&f)
                    })
                    .collect()
            };
            specs.push(CellSpec {
                id: id(&verts),
                dim: s.dim(),
                faces,
                flag: verts
                    .iter()
                    .map(|&v| k.poset().name(k.label(v)).to_string())
                    .collect(),
            });
        }
        DeltaComplex::new(k.poset_arc().clone(), specs).expect("simplicial complexes are valid")
    }

    /// The cells as specifications, in cell order.
    pub fn specs(&self) -> Vec<CellSpec> {
        self.cells
            .iter()
            .map(|c| CellSpec {
                id: c.id.clone(),
                dim: c.dim,
                faces: c.faces.iter().map(|&f| self.cells[f].id.clone()).collect(),
                flag: c
                    .flag
                    .entries()
                    .iter()
                    .map(|&l| self.poset.name(l).to_string())
                    .collect(),
            })
            .collect()
    }

    /// Checks that the canonical subdivision defines a standard neighborhood
    /// system: for every cell `c` and label `p`, each subdivided boundary cell
    /// of `c` lying in the simplicial standard neighborhood of `p` is carried
    /// by a precursor of `c` and lies in that precursor's neighborhood.
    pub fn check_neighborhood_system(&self) -> Result<()> {
        for (c, cell) in self.cells.iter().enumerate() {
            if cell.dim == 0 {
                continue;
            }
            let full = (1u32 << (cell.dim + 1)) - 1;
            let entries = cell.flag.entries();
            for p in self.poset.labels() {
                for top in 1..full {
                    for chain in chains_to_mask(top) {
                        let inside = chain.iter().all(|&m| {
                            stan_hood_condition(&self.poset, &masked(entries, m), p)
                        });
                        if !inside {
                            continue;
                        }
                        let (carrier, reindexed) = self.canonicalize(c, &chain);
                        if !self.precedes(carrier, c) {
                            return Err(Error::InvalidComplex(format!(
                                "boundary cell of `{}` is not carried by a precursor",
                                cell.id
                            )));
                        }
                        let carrier_entries = self.cells[carrier].flag.entries();
                        let still_inside = reindexed.iter().all(|&m| {
                            stan_hood_condition(&self.poset, &masked(carrier_entries, m), p)
                        });
                        if !still_inside {
                            return Err(Error::InvalidComplex(format!(
                                "neighborhood of `{}` in `{}` leaves the neighborhood of its carrier",
                                self.poset.name(p),
                                cell.id
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `a` is reachable from `b` through faces (strictly).
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        let mut stack: Vec<usize> = self.cells[b].faces.clone();
        while let Some(x) = stack.pop() {
            if x == a {
                return true;
            }
            stack.extend_from_slice(&self.cells[x].faces);
        }
        false
    }
}

fn masked(entries: &[Label], mask: u32) -> Vec<Label> {
    entries
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, &l)| l)
        .collect()
}

fn sd_name(cell: &str, chain: &[u32]) -> String {
    let parts: Vec<String> = chain
        .iter()
        .map(|&mask| {
            (0..32)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(".")
        })
        .collect();
    format!("{cell}<{}>", parts.join("|"))
}

/// All strictly increasing chains of nonempty position sets ending in the full
/// set of a `dim`-cell.
fn chains_to_full(dim: usize) -> Vec<Vec<u32>> {
    chains_to_mask((1u32 << (dim + 1)) - 1)
}

fn chains_to_mask(top: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![top]];
    // proper nonempty submasks
    let mut sub = (top - 1) & top;
    while sub > 0 {
        for mut chain in chains_to_mask(sub) {
            chain.push(top);
            out.push(chain);
        }
        sub = (sub - 1) & top;
    }
    out.sort();
    out
}

fn find_cycle(faces: &[Vec<usize>]) -> Option<usize> {
    // 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; faces.len()];
    for start in 0..faces.len() {
        if state[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        state[start] = 1;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if *next < faces[node].len() {
                let child = faces[node][*next];
                *next += 1;
                match state[child] {
                    0 => {
                        state[child] = 1;
                        stack.push((child, 0));
                    }
                    1 => return Some(child),
                    _ => {}
                }
            } else {
                state[node] = 2;
                stack.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: &str, dim: usize, faces: &[&str], flag: &[&str]) -> CellSpec {
        CellSpec {
            id: id.into(),
            dim,
            faces: faces.iter().map(|s| s.to_string()).collect(),
            flag: flag.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn chain01() -> Arc<Poset> {
        Arc::new(Poset::chain(&["0", "1"]).unwrap())
    }

    fn triangle_specs() -> Vec<CellSpec> {
        vec![
            spec("a", 0, &[], &["0"]),
            spec("b", 0, &[], &["0"]),
            spec("c", 0, &[], &["1"]),
            spec("ab", 1, &["b", "a"], &["0", "0"]),
            spec("ac", 1, &["c", "a"], &["0", "1"]),
            spec("bc", 1, &["c", "b"], &["0", "1"]),
            spec("abc", 2, &["bc", "ac", "ab"], &["0", "0", "1"]),
        ]
    }

    fn loop_complex() -> DeltaComplex {
        DeltaComplex::new(
            chain01(),
            vec![spec("x", 0, &[], &["0"]), spec("e", 1, &["x", "x"], &["0", "0"])],
        )
        .unwrap()
    }

    #[test]
    fn simplicial_triangle_is_valid() {
        let d = DeltaComplex::new(chain01(), triangle_specs()).unwrap();
        assert_eq!(d.counts(), vec![3, 3, 1]);
        let abc = d.cell_index("abc").unwrap();
        let names: Vec<&str> = d.vertices(abc).iter().map(|&v| d.cell(v).id()).collect();
        assert_eq!(names, ["a", "b", "c"]);
        let k = d.to_strat_complex().unwrap();
        assert_eq!(k.counts(), vec![3, 3, 1]);
    }

    #[test]
    fn identified_edges_are_allowed() {
        // cone: triangle with d1 = d2, all vertices identified except the apex
        let specs = vec![
            spec("x", 0, &[], &["0"]),
            spec("y", 0, &[], &["0"]),
            spec("e", 1, &["y", "x"], &["0", "0"]),
            spec("l", 1, &["y", "y"], &["0", "0"]),
            spec("t", 2, &["l", "e", "e"], &["0", "0", "0"]),
        ];
        let d = DeltaComplex::new(chain01(), specs).unwrap();
        assert_eq!(d.euler_characteristic(), 1);
    }

    #[test]
    fn face_identity_violation() {
        let mut specs = triangle_specs();
        specs[6].faces = vec!["ac".into(), "bc".into(), "ab".into()];
        specs[6].flag = vec!["0".into(), "0".into(), "1".into()];
        let err = DeltaComplex::new(chain01(), specs).unwrap_err();
        assert!(matches!(err, Error::FaceIdentityViolation { .. }), "{err}");
    }

    #[test]
    fn flag_mismatch() {
        let mut specs = triangle_specs();
        specs[5].flag = vec!["1".into(), "1".into()];
        let err = DeltaComplex::new(chain01(), specs).unwrap_err();
        assert!(matches!(err, Error::FlagMismatch { .. }), "{err}");
    }

    #[test]
    fn precursor_cycle() {
        let specs = vec![spec("e", 1, &["e", "e"], &["0", "0"])];
        assert_eq!(
            DeltaComplex::new(chain01(), specs).unwrap_err(),
            Error::PrecursorCycle("e".into())
        );
    }

    #[test]
    fn dimension_mismatch() {
        let specs = vec![spec("x", 0, &[], &["0"]), spec("e", 1, &["x"], &["0", "0"])];
        assert!(matches!(
            DeltaComplex::new(chain01(), specs),
            Err(Error::InvalidComplex(_))
        ));
    }

    #[test]
    fn sd_of_edge_matches_simplicial() {
        let specs = vec![
            spec("a", 0, &[], &["0"]),
            spec("b", 0, &[], &["1"]),
            spec("e", 1, &["b", "a"], &["0", "1"]),
        ];
        let d = DeltaComplex::new(chain01(), specs).unwrap();
        let sd = d.delta_sd();
        assert_eq!(sd.counts(), vec![3, 2]);
        let k = sd.to_strat_complex().unwrap();
        assert_eq!(k.counts(), vec![3, 2]);
    }

    #[test]
    fn loop_subdivisions() {
        let d = loop_complex();
        assert!(matches!(d.to_strat_complex(), Err(Error::NotSimplicial(..))));
        let once = d.delta_sd();
        assert_eq!(once.counts(), vec![2, 2]);
        assert!(matches!(once.to_strat_complex(), Err(Error::NotSimplicial(..))));
        let twice = once.delta_sd().to_strat_complex().unwrap();
        assert_eq!(twice.counts(), vec![4, 4]);
        let (flat, rounds) = d.flatten().unwrap();
        assert_eq!(rounds, 2);
        assert_eq!(flat, twice);
    }

    #[test]
    fn sd_names_and_faces() {
        let d = DeltaComplex::new(chain01(), triangle_specs()).unwrap();
        let sd = d.delta_sd();
        assert_eq!(sd.counts(), vec![7, 12, 6]);
        let c = sd.cell_index("abc<0|0.1|0.1.2>").unwrap();
        let faces: Vec<&str> = sd.cell(c).faces().iter().map(|&f| sd.cell(f).id()).collect();
        assert_eq!(faces, ["abc<0.1|0.1.2>", "abc<0|0.1.2>", "ab<0|0.1>"]);
        assert_eq!(sd.cell(c).flag().display(sd.poset()), "[0,0,1]");
    }

    #[test]
    fn round_trip_through_simplicial() {
        let d = DeltaComplex::new(chain01(), triangle_specs()).unwrap();
        let k = d.to_strat_complex().unwrap();
        let back = DeltaComplex::from_strat_complex(&k);
        assert_eq!(back.to_strat_complex().unwrap(), k);
        assert_eq!(back.euler_characteristic(), k.euler_characteristic());
    }

    #[test]
    fn canonical_subdivision_defines_neighborhood_system() {
        loop_complex().check_neighborhood_system().unwrap();
        DeltaComplex::new(chain01(), triangle_specs())
            .unwrap()
            .check_neighborhood_system()
            .unwrap();
    }
}
