//! Stratified simplicial complexes over a poset.
//!
//! Vertices carry text identifiers and are numbered in identifier order, so a
//! simplex (a sorted list of vertex indices) compares lexicographically exactly
//! like the sorted list of its identifiers. Every simplex is stored explicitly.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::flags::Flag;
use crate::poset::{Label, Poset};

/// A nonempty set of vertex indices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Codimension-one faces, the i-th omitting the i-th vertex.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (1..=self.0.len())
            .flat_map(move |k| self.0.iter().copied().combinations(k).map(Simplex))
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }
}

/// An abstract simplicial complex with poset-labelled vertices.
///
/// Every simplex's labels are pairwise comparable, and the simplex set is closed
/// under taking nonempty faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratComplex {
    poset: Arc<Poset>,
    names: Vec<String>,
    labels: Vec<Label>,
    simplices: Vec<Vec<Simplex>>,
}

impl StratComplex {
    /// Builds a complex from labelled vertices and a list of (maximal) simplices,
    /// computing the face closure.
    pub fn from_maximal<S: AsRef<str>, T: AsRef<str>>(
        poset: Arc<Poset>,
        vertices: &[(S, T)],
        maximal: &[Vec<S>],
    ) -> Result<Self> {
        let mut verts = Vec::with_capacity(vertices.len());
        for (name, label) in vertices {
            verts.push((name.as_ref().to_string(), poset.label(label.as_ref())?));
        }
        let lookup: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, (n, _))| (n.as_ref(), i))
            .collect();
        let mut simplices = Vec::with_capacity(maximal.len());
        for s in maximal {
            let idx = s
                .iter()
                .map(|v| {
                    lookup
                        .get(v.as_ref())
                        .copied()
                        .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            simplices.push(idx);
        }
        Self::build(poset, verts, simplices)
    }

    /// Builds a complex from vertices (name, label) and simplices given as
    /// indices into `vertices`. Closes under faces and validates chains.
    pub fn build(
        poset: Arc<Poset>,
        vertices: Vec<(String, Label)>,
        simplices: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].0.cmp(&vertices[b].0));
        for w in order.windows(2) {
            if vertices[w[0]].0 == vertices[w[1]].0 {
                return Err(Error::Duplicate(vertices[w[0]].0.clone()));
            }
        }
        let mut new_index = vec![0; vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let names: Vec<String> = order.iter().map(|&i| vertices[i].0.clone()).collect();
        let labels: Vec<Label> = order.iter().map(|&i| vertices[i].1).collect();
        for &l in &labels {
            if !poset.contains(l) {
                return Err(Error::UnknownElement(format!("#{}", l.index())));
            }
        }

        let mut all: HashSet<Simplex> = (0..names.len()).map(|v| Simplex(vec![v])).collect();
        for s in simplices {
            if s.is_empty() {
                continue;
            }
            let s = Simplex::new(s.into_iter().map(|v| new_index[v]).collect());
            for (a, b) in s.vertices().iter().tuple_combinations() {
                if !poset.comparable(labels[*a], labels[*b]) {
                    return Err(Error::ChainViolation {
                        simplex: display_names(&names, &s),
                        first: poset.name(labels[*a]).to_string(),
                        second: poset.name(labels[*b]).to_string(),
                    });
                }
            }
            if all.contains(&s) {
                continue;
            }
            for f in s.faces() {
                all.insert(f);
            }
        }
        Ok(Self::from_closed(poset, names, labels, all))
    }

    /// Assumes `names` sorted and distinct and `simplices` face-closed chains.
    pub(crate) fn from_closed(
        poset: Arc<Poset>,
        names: Vec<String>,
        labels: Vec<Label>,
        simplices: impl IntoIterator<Item = Simplex>,
    ) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in simplices {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, Vec::new);
            }
            by_dim[d].push(s);
        }
        for level in &mut by_dim {
            level.sort_unstable();
            level.dedup();
        }
        StratComplex {
            poset,
            names,
            labels,
            simplices: by_dim,
        }
    }

    pub fn empty(poset: Arc<Poset>) -> Self {
        StratComplex {
            poset,
            names: Vec::new(),
            labels: Vec::new(),
            simplices: Vec::new(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn poset_arc(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .ok()
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Simplex] {
        self.simplices.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    /// Number of simplices in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn num_simplices(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices(s.dim()).binary_search(s).is_ok()
    }

    pub fn simplex_index(&self, s: &Simplex) -> Option<usize> {
        self.simplices(s.dim()).binary_search(s).ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Simplices that are not a proper face of another simplex, in order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: HashSet<Simplex> = HashSet::new();
        for level in self.simplices.iter().skip(1) {
            for s in level {
                covered.extend(s.boundary_faces());
            }
        }
        let mut out: Vec<Simplex> = self
            .all_simplices()
            .filter(|s| !covered.contains(*s))
            .cloned()
            .collect();
        out.sort_by(|a, b| self.simplex_names(a).cmp(&self.simplex_names(b)));
        out
    }

    pub fn simplex_names(&self, s: &Simplex) -> Vec<&str> {
        s.vertices().iter().map(|&v| self.names[v].as_str()).collect()
    }

    pub fn display_simplex(&self, s: &Simplex) -> String {
        display_names(&self.names, s)
    }

    /// Looks a simplex up by vertex identifiers.
    pub fn find_simplex<S: AsRef<str>>(&self, names: &[S]) -> Result<Simplex> {
        let idx = names
            .iter()
            .map(|n| {
                self.vertex_index(n.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let s = Simplex::new(idx);
        if self.contains(&s) {
            Ok(s)
        } else {
            Err(Error::UnknownSimplex(self.display_simplex(&s)))
        }
    }

    fn check(&self, s: &Simplex) -> Result<()> {
        if s.is_empty() || s.vertices().iter().any(|&v| v >= self.names.len()) || !self.contains(s) {
            return Err(Error::UnknownSimplex(format!("{:?}", s.vertices())));
        }
        Ok(())
    }

    /// Labels of the vertices sorted weakly increasingly (ties by vertex).
    pub fn flag_of(&self, s: &Simplex) -> Result<Flag> {
        self.check(s)?;
        let mut verts = s.vertices().to_vec();
        verts.sort_by_key(|&v| (self.poset.rank(self.labels[v]), v));
        Ok(Flag::from_entries_unchecked(
            verts.into_iter().map(|v| self.labels[v]).collect(),
        ))
    }

    pub fn max_label(&self, s: &Simplex) -> Result<Label> {
        self.check(s)?;
        Ok(self.max_label_unchecked(s))
    }

    pub(crate) fn max_label_unchecked(&self, s: &Simplex) -> Label {
        self.poset
            .max_of(s.vertices().iter().map(|&v| self.labels[v]))
            .expect("simplices are nonempty")
    }

    /// Distinct labels of a simplex, in label order.
    pub fn label_set(&self, s: &Simplex) -> Vec<Label> {
        let mut l: Vec<Label> = s.vertices().iter().map(|&v| self.labels[v]).collect();
        l.sort_unstable();
        l.dedup();
        l
    }

    /// The full subcomplex on the vertices selected by `keep`.
    pub fn induced(&self, keep: impl Fn(usize) -> bool) -> StratComplex {
        let kept: Vec<usize> = (0..self.names.len()).filter(|&v| keep(v)).collect();
        let mut remap = vec![usize::MAX; self.names.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let simplices = self
            .all_simplices()
            .filter(|s| s.vertices().iter().all(|&v| remap[v] != usize::MAX))
            .map(|s| Simplex(s.vertices().iter().map(|&v| remap[v]).collect()))
            .collect::<Vec<_>>();
        StratComplex::from_closed(
            self.poset.clone(),
            kept.iter().map(|&v| self.names[v].clone()).collect(),
            kept.iter().map(|&v| self.labels[v]).collect(),
            simplices,
        )
    }

    /// The closed subcomplex on vertices labelled `<= p`.
    pub fn restrict_le(&self, p: Label) -> Result<StratComplex> {
        if !self.poset.contains(p) {
            return Err(Error::UnknownElement(format!("#{}", p.index())));
        }
        Ok(self.induced(|v| self.poset.leq(self.labels[v], p)))
    }

    pub fn restrict_le_named(&self, p: &str) -> Result<StratComplex> {
        self.restrict_le(self.poset.label(p)?)
    }

    /// Barycentric subdivision, stratified by the last-vertex map.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let mut entries: Vec<(String, &Simplex)> = self
            .all_simplices()
            .map(|s| (barycenter_name(&self.simplex_names(s)), s))
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let vertex_of: HashMap<&Simplex, usize> = entries
            .iter()
            .enumerate()
            .map(|(i, (_, s))| (*s, i))
            .collect();
        let labels: Vec<Label> = entries
            .iter()
            .map(|(_, s)| self.max_label_unchecked(s))
            .collect();
        let carrier_labels: Vec<Vec<Label>> =
            entries.iter().map(|(_, s)| self.label_set(s)).collect();

        let mut chains: Vec<Simplex> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for (top, _) in entries.iter().map(|(_, s)| (*s, ())) {
            stack.push(vertex_of[top]);
            collect_chains(top, &vertex_of, &mut stack, &mut chains);
            stack.pop();
        }

        let carriers: Vec<Simplex> = entries.iter().map(|(_, s)| (*s).clone()).collect();
        let names: Vec<String> = entries.into_iter().map(|(n, _)| n).collect();
        Subdivision {
            complex: StratComplex::from_closed(self.poset.clone(), names, labels, chains),
            carriers,
            carrier_labels,
        }
    }

    /// Whether `self` is a subcomplex of `other` when vertices and simplices are
    /// matched by identifier (labels must agree).
    pub fn is_named_subcomplex_of(&self, other: &StratComplex) -> bool {
        if self.poset != other.poset {
            return false;
        }
        let map: Option<Vec<usize>> = self
            .names
            .iter()
            .enumerate()
            .map(|(v, n)| {
                other
                    .vertex_index(n)
                    .filter(|&w| other.labels[w] == self.labels[v])
            })
            .collect();
        let Some(map) = map else { return false };
        self.all_simplices()
            .all(|s| other.contains(&Simplex::new(s.vertices().iter().map(|&v| map[v]).collect())))
    }

    /// The whole complex as a subcomplex of itself.
    pub fn as_subcomplex(&self) -> Subcomplex {
        Subcomplex {
            simplices: self.all_simplices().cloned().collect(),
        }
    }
}

fn collect_chains(
    top: &Simplex,
    vertex_of: &HashMap<&Simplex, usize>,
    stack: &mut Vec<usize>,
    out: &mut Vec<Simplex>,
) {
    out.push(Simplex::new(stack.clone()));
    if top.len() == 1 {
        return;
    }
    for k in 1..top.len() {
        for face in top.vertices().iter().copied().combinations(k) {
            let face = Simplex(face);
            stack.push(vertex_of[&face]);
            collect_chains(&face, vertex_of, stack, out);
            stack.pop();
        }
    }
}

/// Canonical identifier of the barycenter of a simplex: its sorted vertex
/// identifiers, comma-separated in parentheses.
pub fn barycenter_name<S: AsRef<str>>(names: &[S]) -> String {
    let parts: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
    format!("({})", parts.join(","))
}

fn display_names(names: &[String], s: &Simplex) -> String {
    let parts: Vec<&str> = s.vertices().iter().map(|&v| names[v].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

/// The barycentric subdivision of a complex together with, for each of its
/// vertices, the carrier simplex of the original complex.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: StratComplex,
    carriers: Vec<Simplex>,
    carrier_labels: Vec<Vec<Label>>,
}

impl Subdivision {
    /// Carrier simplex (in the source complex) of a subdivision vertex.
    pub fn carrier(&self, v: usize) -> &Simplex {
        &self.carriers[v]
    }

    /// Distinct labels of the carrier of a subdivision vertex.
    pub fn carrier_labels(&self, v: usize) -> &[Label] {
        &self.carrier_labels[v]
    }

    /// Full subcomplex on vertices whose carrier label set satisfies `keep`.
    pub fn full_subcomplex(&self, keep: impl Fn(&[Label]) -> bool) -> Subcomplex {
        Subcomplex::full(&self.complex, |v| keep(&self.carrier_labels[v]))
    }
}

/// A face-closed set of simplices of a parent complex, in the parent's vertex
/// numbering. The parent is not stored; callers pass it where needed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Subcomplex {
    simplices: std::collections::BTreeSet<Simplex>,
}

impl Subcomplex {
    pub fn empty() -> Self {
        Subcomplex::default()
    }

    /// Face closure of the given simplices, which must belong to `parent`.
    pub fn generated_by<'a>(
        parent: &StratComplex,
        simplices: impl IntoIterator<Item = &'a Simplex>,
    ) -> Result<Self> {
        let mut set = std::collections::BTreeSet::new();
        for s in simplices {
            if !parent.contains(s) {
                return Err(Error::NotSubcomplex(format!(
                    "{} is not a simplex of the parent",
                    parent.display_simplex(s)
                )));
            }
            if set.contains(s) {
                continue;
            }
            set.extend(s.faces());
        }
        Ok(Subcomplex { simplices: set })
    }

    /// Checks face-closure of an explicit simplex set.
    pub fn from_simplices(parent: &StratComplex, simplices: Vec<Simplex>) -> Result<Self> {
        let set: std::collections::BTreeSet<Simplex> = simplices.into_iter().collect();
        for s in &set {
            if !parent.contains(s) {
                return Err(Error::NotSubcomplex(format!(
                    "{} is not a simplex of the parent",
                    parent.display_simplex(s)
                )));
            }
            if let Some(f) = s.boundary_faces().find(|f| !set.contains(f)) {
                return Err(Error::NotSubcomplex(format!(
                    "face {} of {} is missing",
                    parent.display_simplex(&f),
                    parent.display_simplex(s)
                )));
            }
        }
        Ok(Subcomplex { simplices: set })
    }

    /// The full subcomplex on the vertices selected by `keep`.
    pub fn full(parent: &StratComplex, keep: impl Fn(usize) -> bool) -> Self {
        let keep: Vec<bool> = (0..parent.num_vertices()).map(keep).collect();
        Subcomplex {
            simplices: parent
                .all_simplices()
                .filter(|s| s.vertices().iter().all(|&v| keep[v]))
                .cloned()
                .collect(),
        }
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| s.vertices()[0])
            .collect()
    }

    pub fn is_subset_of(&self, other: &Subcomplex) -> bool {
        self.simplices.is_subset(&other.simplices)
    }

    pub fn union(&self, other: &Subcomplex) -> Subcomplex {
        Subcomplex {
            simplices: self.simplices.union(&other.simplices).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &Subcomplex) -> Subcomplex {
        Subcomplex {
            simplices: self.simplices.intersection(&other.simplices).cloned().collect(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// The subcomplex as a complex in its own right, keeping identifiers.
    pub fn to_complex(&self, parent: &StratComplex) -> StratComplex {
        let verts = self.vertices();
        let mut remap = vec![usize::MAX; parent.num_vertices()];
        for (new, &old) in verts.iter().enumerate() {
            remap[old] = new;
        }
        StratComplex::from_closed(
            parent.poset.clone(),
            verts.iter().map(|&v| parent.names[v].clone()).collect(),
            verts.iter().map(|&v| parent.labels[v]).collect(),
            self.simplices
                .iter()
                .map(|s| Simplex(s.vertices().iter().map(|&v| remap[v]).collect())),
        )
    }
}

/// The subcomplex of `parent` with the same named simplices as `sub`.
pub fn subcomplex_by_names(parent: &StratComplex, sub: &StratComplex) -> Result<Subcomplex> {
    let mut simplices = Vec::with_capacity(sub.num_simplices());
    for s in sub.all_simplices() {
        let names = sub.simplex_names(s);
        let t = parent
            .find_simplex(&names)
            .map_err(|_| Error::NotSubcomplex(format!("{} is not a simplex", sub.display_simplex(s))))?;
        for &v in s.vertices() {
            let w = parent
                .vertex_index(sub.vertex_name(v))
                .expect("found simplex has the vertex");
            if parent.poset().name(parent.label(w)) != sub.poset().name(sub.label(v)) {
                return Err(Error::LabelMismatch {
                    vertex: sub.vertex_name(v).to_string(),
                    expected: parent.poset().name(parent.label(w)).to_string(),
                    found: sub.poset().name(sub.label(v)).to_string(),
                });
            }
        }
        simplices.push(t);
    }
    Subcomplex::from_simplices(parent, simplices)
}

/// Result of gluing `B` onto `X` along a subcomplex `A` of `B`.
#[derive(Clone, Debug)]
pub struct Gluing {
    pub complex: StratComplex,
    pub x_image: Subcomplex,
    pub b_image: Subcomplex,
    pub a_image: Subcomplex,
}

/// Pushout `X ∪_A B` along an injective, label-preserving simplicial embedding
/// of `A ⊂ B` into `X`. Vertices of `B` outside `A` keep their identifier when
/// it is free in `X`, and otherwise get primes appended until it is.
pub fn glue(
    x: &StratComplex,
    b: &StratComplex,
    a: &Subcomplex,
    embed: &BTreeMap<String, String>,
) -> Result<Gluing> {
    if x.poset != b.poset {
        return Err(Error::NotEmbedding("complexes are stratified over different posets".into()));
    }
    let a_vertices = a.vertices();
    for s in a.simplices() {
        if !b.contains(s) {
            return Err(Error::NotSubcomplex(format!(
                "{} is not a simplex of B",
                b.display_simplex(s)
            )));
        }
    }
    let a_set: HashSet<usize> = a_vertices.iter().copied().collect();
    for key in embed.keys() {
        match b.vertex_index(key) {
            Some(v) if a_set.contains(&v) => {}
            _ => {
                return Err(Error::NotEmbedding(format!(
                    "`{key}` is not a vertex of the subcomplex"
                )))
            }
        }
    }
    // B vertex -> Y vertex; Y vertices are X's followed by new ones
    let mut b_to_y = vec![usize::MAX; b.num_vertices()];
    let mut used_targets: HashSet<usize> = HashSet::new();
    for &v in &a_vertices {
        let name = b.vertex_name(v);
        let target = embed
            .get(name)
            .ok_or_else(|| Error::NotEmbedding(format!("vertex `{name}` of A is not mapped")))?;
        let w = x
            .vertex_index(target)
            .ok_or_else(|| Error::NotEmbedding(format!("`{target}` is not a vertex of X")))?;
        if x.label(w) != b.label(v) {
            return Err(Error::LabelMismatch {
                vertex: name.to_string(),
                expected: x.poset.name(x.label(w)).to_string(),
                found: b.poset.name(b.label(v)).to_string(),
            });
        }
        if !used_targets.insert(w) {
            return Err(Error::NotEmbedding(format!("`{target}` is hit twice")));
        }
        b_to_y[v] = w;
    }
    let mut vertices: Vec<(String, Label)> = x
        .names
        .iter()
        .cloned()
        .zip(x.labels.iter().copied())
        .collect();
    let mut taken: HashSet<String> = x.names.iter().cloned().collect();
    for v in 0..b.num_vertices() {
        if b_to_y[v] != usize::MAX {
            continue;
        }
        let mut name = b.vertex_name(v).to_string();
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        b_to_y[v] = vertices.len();
        vertices.push((name, b.label(v)));
    }
    let map_b = |s: &Simplex| Simplex::new(s.vertices().iter().map(|&v| b_to_y[v]).collect());

    let x_simplices: HashSet<Simplex> = x.all_simplices().cloned().collect();
    for s in a.simplices() {
        if !x_simplices.contains(&map_b(s)) {
            return Err(Error::NotEmbedding(format!(
                "{} does not map to a simplex of X",
                b.display_simplex(s)
            )));
        }
    }
    for s in b.all_simplices() {
        if !a.contains(s) && x_simplices.contains(&map_b(s)) {
            return Err(Error::Collapse(b.display_simplex(s)));
        }
    }

    let mut simplices: Vec<Vec<usize>> = x.all_simplices().map(|s| s.vertices().to_vec()).collect();
    simplices.extend(b.all_simplices().map(|s| map_b(s).0));
    let a_y: Vec<Vec<usize>> = a.simplices().map(|s| map_b(s).0).collect();
    let b_y: Vec<Vec<usize>> = b.all_simplices().map(|s| map_b(s).0).collect();
    let x_y: Vec<Vec<usize>> = x.all_simplices().map(|s| s.vertices().to_vec()).collect();

    // Y's constructor renumbers vertices by name; translate afterwards.
    let pre_names: Vec<String> = vertices.iter().map(|(n, _)| n.clone()).collect();
    let complex = StratComplex::build(x.poset.clone(), vertices, simplices)?;
    let renumber: Vec<usize> = pre_names
        .iter()
        .map(|n| complex.vertex_index(n).expect("vertex kept"))
        .collect();
    let to_sub = |list: Vec<Vec<usize>>| Subcomplex {
        simplices: list
            .into_iter()
            .map(|s| Simplex::new(s.into_iter().map(|v| renumber[v]).collect()))
            .collect(),
    };
    Ok(Gluing {
        x_image: to_sub(x_y),
        b_image: to_sub(b_y),
        a_image: to_sub(a_y),
        complex,
    })
}
