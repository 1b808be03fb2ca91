//! Exact simplicial and cellular homology.

pub mod field;
pub mod snf;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cells::DeltaComplex;
use crate::complex::{Simplex, StratComplex, Subcomplex};
use crate::error::{Error, Result};
use field::{axpy, dense_rank, reduce, Column, Field, PrimeField, Rationals};
pub use snf::SparseMatrix;

/// Coefficients for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coefficients {
    #[default]
    Integers,
    Rationals,
    Prime(u64),
}

impl FromStr for Coefficients {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "int" => Ok(Coefficients::Integers),
            "rat" => Ok(Coefficients::Rationals),
            _ => {
                let p = s
                    .strip_prefix("mod:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .filter(|&p| is_prime(p) && p < (1 << 32))
                    .ok_or_else(|| Error::InvalidCoefficients(s.to_string()))?;
                Ok(Coefficients::Prime(p))
            }
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "int"),
            Coefficients::Rationals => write!(f, "rat"),
            Coefficients::Prime(p) => write!(f, "mod:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Integer chain complex with canonical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexZ {
    dims: Vec<usize>,
    // boundaries[n]: C_n -> C_{n-1}; boundaries[0] has no rows
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplexZ {
    pub fn new(dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Self {
        assert_eq!(dims.len(), boundaries.len());
        ChainComplexZ { dims, boundaries }
    }

    /// Simplicial chains; the basis in each degree is the sorted simplex list.
    pub fn of_complex(k: &StratComplex) -> Self {
        let top = k.dim().map_or(0, |d| d + 1);
        let dims: Vec<usize> = (0..top).map(|n| k.simplices(n).len()).collect();
        let boundaries = (0..top)
            .map(|n| {
                if n == 0 {
                    return SparseMatrix::zeros(0, dims[0]);
                }
                let cols = k
                    .simplices(n)
                    .iter()
                    .map(|s| {
                        s.boundary_faces()
                            .enumerate()
                            .map(|(i, f)| {
                                let row = k.simplex_index(&f).expect("complex is face-closed");
                                (row, if i % 2 == 0 { 1 } else { -1 })
                            })
                            .collect()
                    })
                    .collect();
                SparseMatrix::new(dims[n - 1], cols)
            })
            .collect();
        ChainComplexZ { dims, boundaries }
    }

    /// Cellular chains of a Δ-complex: `∂c = Σ (-1)^i d_i c`.
    pub fn of_delta_complex(d: &DeltaComplex) -> Self {
        let counts = d.counts();
        let mut position = vec![0; d.cells().len()];
        let mut next = vec![0; counts.len()];
        for (c, cell) in d.cells().iter().enumerate() {
            position[c] = next[cell.dim()];
            next[cell.dim()] += 1;
        }
        let boundaries = (0..counts.len())
            .map(|n| {
                if n == 0 {
                    return SparseMatrix::zeros(0, counts[0]);
                }
                let cols = d
                    .cells_of_dim(n)
                    .map(|c| {
                        d.cell(c)
                            .faces()
                            .iter()
                            .enumerate()
                            .map(|(i, &f)| (position[f], if i % 2 == 0 { 1 } else { -1 }))
                            .collect()
                    })
                    .collect();
                SparseMatrix::new(counts[n - 1], cols)
            })
            .collect();
        ChainComplexZ {
            dims: counts,
            boundaries,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `∂_n : C_n → C_{n-1}`.
    pub fn boundary(&self, n: usize) -> &SparseMatrix {
        &self.boundaries[n]
    }

    pub fn top(&self) -> usize {
        self.dims.len()
    }

    /// Checks `∂_{n} ∂_{n+1} = 0` in every degree.
    pub fn boundary_squared_is_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| w[0].mul(&w[1]).is_zero())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(n, &d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// One homology group: free rank plus torsion coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Homology in every degree, with trailing trivial groups removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub coefficients: Coefficients,
    pub groups: Vec<HomologyGroup>,
}

impl BettiTable {
    fn new(coefficients: Coefficients, mut groups: Vec<HomologyGroup>) -> Self {
        while groups.last().is_some_and(HomologyGroup::is_trivial) {
            groups.pop();
        }
        BettiTable {
            coefficients,
            groups,
        }
    }

    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    /// Betti numbers as `(b_0,b_1,...)`; `()` when trivial.
    pub fn betti_string(&self) -> String {
        format!("({})", self.betti().iter().map(|b| b.to_string()).collect::<Vec<_>>().join(","))
    }

    pub fn torsion(&self, n: usize) -> &[BigInt] {
        self.groups.get(n).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(n, g)| if n % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.is_empty()
    }

    /// One line per degree, e.g. `H_1: Z^2 + Z/2`.
    pub fn lines(&self) -> Vec<String> {
        if self.groups.is_empty() {
            return vec!["H_*: 0".to_string()];
        }
        self.groups
            .iter()
            .enumerate()
            .map(|(n, g)| format!("H_{n}: {}", self.describe(g)))
            .collect()
    }

    fn describe(&self, g: &HomologyGroup) -> String {
        let free = match self.coefficients {
            Coefficients::Integers => "Z".to_string(),
            Coefficients::Rationals => "Q".to_string(),
            Coefficients::Prime(p) => format!("Z/{p}"),
        };
        let mut parts = Vec::new();
        match g.rank {
            0 => {}
            1 => parts.push(free),
            r if matches!(self.coefficients, Coefficients::Prime(_)) => {
                parts.push(format!("({free})^{r}"))
            }
            r => parts.push(format!("{free}^{r}")),
        }
        parts.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("\n"))
    }
}

pub fn chain_complex(k: &StratComplex) -> ChainComplexZ {
    ChainComplexZ::of_complex(k)
}

pub fn homology(k: &StratComplex, coeff: Coefficients) -> BettiTable {
    homology_of(&ChainComplexZ::of_complex(k), coeff)
}

pub fn homology_of(c: &ChainComplexZ, coeff: Coefficients) -> BettiTable {
    let top = c.top();
    let groups = match coeff {
        Coefficients::Integers => {
            let factors: Vec<Vec<BigInt>> = (0..top)
                .into_par_iter()
                .map(|n| snf::invariant_factors(c.boundary(n)))
                .collect();
            (0..top)
                .map(|n| {
                    let r_n = factors[n].len();
                    let next = factors.get(n + 1);
                    let r_next = next.map_or(0, Vec::len);
                    HomologyGroup {
                        rank: c.dims[n] - r_n - r_next,
                        torsion: next
                            .map(|f| f.iter().filter(|d| !d.is_one()).cloned().collect())
                            .unwrap_or_default(),
                    }
                })
                .collect()
        }
        Coefficients::Rationals => free_groups(c, &field_ranks(c, &Rationals)),
        Coefficients::Prime(p) => free_groups(c, &field_ranks(c, &PrimeField(p))),
    };
    BettiTable::new(coeff, groups)
}

fn free_groups(c: &ChainComplexZ, ranks: &[usize]) -> Vec<HomologyGroup> {
    (0..c.top())
        .map(|n| HomologyGroup {
            rank: c.dims[n] - ranks[n] - ranks.get(n + 1).copied().unwrap_or(0),
            torsion: Vec::new(),
        })
        .collect()
}

fn to_field_columns<F: Field>(f: &F, m: &SparseMatrix) -> Vec<Column<F::Elem>> {
    m.columns()
        .iter()
        .map(|c| {
            c.iter()
                .map(|&(r, v)| (r, f.from_i64(v)))
                .filter(|(_, v)| !f.is_zero(v))
                .collect()
        })
        .collect()
}

/// Ranks of every boundary map over a field.
pub fn field_ranks<F: Field>(c: &ChainComplexZ, f: &F) -> Vec<usize> {
    (0..c.top())
        .into_par_iter()
        .map(|n| reduce(f, to_field_columns(f, c.boundary(n)), false).rank())
        .collect()
}

pub fn euler_characteristic(k: &StratComplex) -> i64 {
    k.euler_characteristic()
}

type Q = BigRational;

/// Rational homology with explicit cycle representatives.
struct RationalBasis {
    // per degree: representative cycles, and row index -> basis position
    cycles: Vec<Vec<Column<Q>>>,
    essential: Vec<HashMap<usize, usize>>,
    // per degree n: reduced columns of ∂_{n+1} and their lows
    boundaries: Vec<(Vec<Column<Q>>, HashMap<usize, usize>)>,
}

impl RationalBasis {
    fn new(c: &ChainComplexZ) -> Self {
        let q = Rationals;
        let top = c.top();
        let reductions: Vec<_> = (0..top)
            .into_par_iter()
            .map(|n| reduce(&q, to_field_columns(&q, c.boundary(n)), true))
            .collect();
        let mut cycles = Vec::with_capacity(top);
        let mut essential = Vec::with_capacity(top);
        let mut boundaries = Vec::with_capacity(top);
        for n in 0..top {
            let killed = reductions.get(n + 1).map(|r| &r.low_to_col);
            let mut reps = Vec::new();
            let mut index = HashMap::new();
            for (j, col) in reductions[n].columns.iter().enumerate() {
                if col.is_empty() && !killed.is_some_and(|k| k.contains_key(&j)) {
                    index.insert(j, reps.len());
                    reps.push(reductions[n].v[j].clone());
                }
            }
            cycles.push(reps);
            essential.push(index);
            boundaries.push(match reductions.get(n + 1) {
                Some(r) => (r.columns.clone(), r.low_to_col.clone()),
                None => (Vec::new(), HashMap::new()),
            });
        }
        RationalBasis {
            cycles,
            essential,
            boundaries,
        }
    }

    fn rank(&self, n: usize) -> usize {
        self.cycles.get(n).map_or(0, Vec::len)
    }

    /// Coordinates of the class of cycle `z` in degree `n`.
    fn coordinates(&self, n: usize, mut z: Column<Q>) -> Vec<Q> {
        let q = Rationals;
        let mut coords = vec![Q::zero(); self.rank(n)];
        let (cols, lows) = &self.boundaries[n];
        while let Some((low, value)) = z.last().cloned() {
            if let Some(&k) = lows.get(&low) {
                let pivot = &cols[k].last().expect("nonzero").1;
                z = axpy(&q, &z, &(&value / pivot), &cols[k]);
            } else {
                let pos = *self.essential[n]
                    .get(&low)
                    .expect("lowest entry of a cycle is a cycle or boundary pivot");
                z = axpy(&q, &z, &value, &self.cycles[n][pos]);
                coords[pos] = value;
            }
        }
        coords
    }
}

/// Matrix (rows: target basis, columns: source basis) of `H_n(source; Q) →
/// H_n(target; Q)` induced by the inclusion of a subcomplex, where vertices
/// and simplices are matched by identifier.
fn inclusion_matrix(
    source: &StratComplex,
    sb: &RationalBasis,
    target: &StratComplex,
    tb: &RationalBasis,
    n: usize,
) -> Result<Vec<Vec<Q>>> {
    let vmap = vertex_map(source, target)?;
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for cycle in sb.cycles.get(n).map_or(&[][..], Vec::as_slice) {
        let mut z: Column<Q> = cycle
            .iter()
            .map(|(i, v)| {
                let s = &source.simplices(n)[*i];
                let image = Simplex::new(s.vertices().iter().map(|&x| vmap[x]).collect());
                let row = target.simplex_index(&image).ok_or_else(|| {
                    Error::NotSubcomplex(format!("{} is missing", source.display_simplex(s)))
                })?;
                // vertex order is preserved by the name-sorted numbering
                Ok((row, v.clone()))
            })
            .collect::<Result<_>>()?;
        z.sort_by_key(|e| e.0);
        cols.push(tb.coordinates(n, z));
    }
    let rows = tb.rank(n);
    Ok((0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect())
}

fn vertex_map(source: &StratComplex, target: &StratComplex) -> Result<Vec<usize>> {
    source
        .vertex_names()
        .iter()
        .map(|name| {
            target
                .vertex_index(name)
                .ok_or_else(|| Error::NotSubcomplex(format!("vertex `{name}` is missing")))
        })
        .collect()
}

/// The map `H_dim(L; Q) → H_dim(K; Q)` induced by a subcomplex inclusion, as
/// a matrix with one row per basis class of `K` and one column per class of `L`.
pub fn induced_map_rational(k: &StratComplex, l: &Subcomplex, dim: usize) -> Result<Vec<Vec<Q>>> {
    if let Some(s) = l.simplices().find(|s| !k.contains(s)) {
        return Err(Error::NotSubcomplex(format!("{:?} is not a simplex", s.vertices())));
    }
    let sub = l.to_complex(k);
    let sb = RationalBasis::new(&ChainComplexZ::of_complex(&sub));
    let kb = RationalBasis::new(&ChainComplexZ::of_complex(k));
    if dim >= kb.cycles.len().max(sb.cycles.len()) {
        return Ok(vec![Vec::new(); kb.rank(dim)]);
    }
    inclusion_matrix(&sub, &sb, k, &kb, dim)
}

/// Per-degree data of a Mayer–Vietoris check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvDegree {
    pub n: usize,
    pub h_a: usize,
    pub h_x: usize,
    pub h_b: usize,
    pub h_y: usize,
    pub rank_alpha: usize,
    pub rank_beta: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvReport {
    pub degrees: Vec<MvDegree>,
    /// χ(Y), χ(X), χ(B), χ(A)
    pub euler: [i64; 4],
    pub euler_ok: bool,
}

impl MvReport {
    pub fn passed(&self) -> bool {
        self.euler_ok && self.degrees.iter().all(|d| d.exact)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.degrees.iter().find(|d| !d.exact).map(|d| d.n)
    }
}

impl fmt::Display for MvReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [y, x, b, a] = self.euler;
        write!(
            f,
            "euler {} (Y={y}, X={x}, B={b}, A={a})",
            if self.euler_ok { "ok" } else { "FAIL" }
        )?;
        for d in &self.degrees {
            write!(
                f,
                "\n  n={}: h(A)={} h(X)+h(B)={}+{} h(Y)={} rank α={} rank β={} {}",
                d.n,
                d.h_a,
                d.h_x,
                d.h_b,
                d.h_y,
                d.rank_alpha,
                d.rank_beta,
                if d.exact { "exact" } else { "NOT EXACT" }
            )?;
        }
        Ok(())
    }
}

/// Verifies the rational Mayer–Vietoris sequence of `Y = X ∪ B`, `A = X ∩ B`
/// by rank bookkeeping, together with additivity of Euler characteristics.
pub fn mayer_vietoris_check(
    y: &StratComplex,
    x: &Subcomplex,
    b: &Subcomplex,
    a: &Subcomplex,
) -> Result<MvReport> {
    let union = x.union(b);
    if union.len() != y.num_simplices() || y.all_simplices().any(|s| !union.contains(s)) {
        return Err(Error::DecompositionInvalid("X ∪ B is not all of Y".into()));
    }
    if x.intersection(b) != *a {
        return Err(Error::DecompositionInvalid("X ∩ B differs from A".into()));
    }
    let complexes = [
        y.clone(),
        x.to_complex(y),
        b.to_complex(y),
        a.to_complex(y),
    ];
    let bases: Vec<RationalBasis> = complexes
        .par_iter()
        .map(|k| RationalBasis::new(&ChainComplexZ::of_complex(k)))
        .collect();
    let [cy, cx, cb, ca] = &complexes;
    let [by, bx, bb, ba] = [&bases[0], &bases[1], &bases[2], &bases[3]];
    let top = y.dim().map_or(0, |d| d + 1);
    let q = Rationals;

    let mut alpha_ranks = Vec::with_capacity(top);
    let mut degrees = Vec::with_capacity(top);
    for n in 0..top {
        let i_star = inclusion_matrix(ca, ba, cx, bx, n)?;
        let j_star = inclusion_matrix(ca, ba, cb, bb, n)?;
        let k_star = inclusion_matrix(cx, bx, cy, by, n)?;
        let l_star = inclusion_matrix(cb, bb, cy, by, n)?;
        let h_a = ba.rank(n);
        let (h_x, h_b, h_y) = (bx.rank(n), bb.rank(n), by.rank(n));
        // α = [i_*; -j_*], β = [k_* | l_*]
        let mut alpha: Vec<Vec<Q>> = i_star.clone();
        alpha.extend(j_star.iter().map(|r| r.iter().map(|v| -v.clone()).collect()));
        let beta: Vec<Vec<Q>> = (0..h_y)
            .map(|i| {
                k_star[i]
                    .iter()
                    .chain(l_star[i].iter())
                    .cloned()
                    .collect()
            })
            .collect();
        let composite_zero = (0..h_y).all(|i| {
            (0..h_a).all(|j| {
                (0..h_x + h_b)
                    .map(|k| &beta[i][k] * &alpha[k][j])
                    .fold(Q::zero(), |acc, v| acc + v)
                    .is_zero()
            })
        });
        let rank_alpha = if h_a == 0 { 0 } else { dense_rank(&q, &alpha) };
        let rank_beta = if h_x + h_b == 0 { 0 } else { dense_rank(&q, &beta) };
        alpha_ranks.push(rank_alpha);
        let middle = rank_alpha + rank_beta == h_x + h_b;
        let at_y = match n.checked_sub(1) {
            Some(m) => h_y - rank_beta == ba.rank(m) - alpha_ranks[m],
            None => h_y == rank_beta,
        };
        degrees.push(MvDegree {
            n,
            h_a,
            h_x,
            h_b,
            h_y,
            rank_alpha,
            rank_beta,
            exact: composite_zero && middle && at_y,
        });
    }
    // the connecting map out of the top degree of Y must be injective
    if let Some(last) = degrees.last_mut() {
        let top_ok = last.h_a == last.rank_alpha;
        last.exact &= top_ok;
    }
    let euler = [
        cy.euler_characteristic(),
        cx.euler_characteristic(),
        cb.euler_characteristic(),
        ca.euler_characteristic(),
    ];
    Ok(MvReport {
        euler_ok: euler[0] == euler[1] + euler[2] - euler[3],
        euler,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;
    use std::sync::Arc;

    fn complex(vertices: &[&str], simplices: &[&[&str]]) -> StratComplex {
        let p = Arc::new(Poset::chain(&["0"]).unwrap());
        let verts: Vec<(&str, &str)> = vertices.iter().map(|v| (*v, "0")).collect();
        let simp: Vec<Vec<&str>> = simplices.iter().map(|s| s.to_vec()).collect();
        StratComplex::from_maximal(p, &verts, &simp).unwrap()
    }

    fn circle() -> StratComplex {
        complex(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]])
    }

    #[test]
    fn circle_homology() {
        let k = circle();
        let h = homology(&k, Coefficients::Integers);
        assert_eq!(h.betti(), vec![1, 1]);
        assert_eq!(h.lines(), ["H_0: Z", "H_1: Z"]);
        assert_eq!(homology(&k, Coefficients::Rationals).betti(), vec![1, 1]);
        assert_eq!(k.euler_characteristic(), 0);
    }

    #[test]
    fn triangle_boundary_matrix() {
        let c = chain_complex(&circle());
        let d1 = c.boundary(1).to_dense();
        assert_eq!(d1.len(), 3);
        for j in 0..3 {
            assert_eq!(d1.iter().map(|r| r[j]).sum::<i64>(), 0);
        }
        let disk = complex(&["a", "b", "c"], &[&["a", "b", "c"]]);
        assert!(chain_complex(&disk).boundary_squared_is_zero());
        let point = complex(&["a"], &[]);
        assert!(chain_complex(&point).boundary(0).is_zero());
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!("int".parse::<Coefficients>().unwrap(), Coefficients::Integers);
        assert_eq!("mod:3".parse::<Coefficients>().unwrap(), Coefficients::Prime(3));
        assert!("mod:4".parse::<Coefficients>().is_err());
        assert!("real".parse::<Coefficients>().is_err());
    }

    #[test]
    fn induced_maps() {
        let k = circle();
        let id = induced_map_rational(&k, &k.as_subcomplex(), 1).unwrap();
        assert_eq!(id, vec![vec![Q::one()]]);

        let disk = complex(&["a", "b", "c"], &[&["a", "b", "c"]]);
        let rim = Subcomplex::full(&disk, |_| true);
        let rim = Subcomplex::from_simplices(
            &disk,
            rim.simplices().filter(|s| s.len() < 3).cloned().collect(),
        )
        .unwrap();
        let m = induced_map_rational(&disk, &rim, 1).unwrap();
        assert!(m.is_empty());

        let two = complex(
            &["a", "b", "c", "d", "e", "f"],
            &[&["a", "b"], &["b", "c"], &["a", "c"], &["d", "e"], &["e", "f"], &["d", "f"]],
        );
        let first = Subcomplex::full(&two, |v| v < 3);
        let m = induced_map_rational(&two, &first, 1).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m[0].len(), 1);
        assert_eq!(dense_rank(&Rationals, &m), 1);
    }

    #[test]
    fn mayer_vietoris_on_circle() {
        let k = circle();
        let a_idx = k.vertex_index("a").unwrap();
        let c_idx = k.vertex_index("c").unwrap();
        // arcs a-b-c and a-c
        let x = Subcomplex::full(&k, |_| true);
        let x = Subcomplex::from_simplices(
            &k,
            x.simplices()
                .filter(|s| s.vertices() != [a_idx, c_idx])
                .cloned()
                .collect(),
        )
        .unwrap();
        let ac = k.find_simplex(&["a", "c"]).unwrap();
        let b = Subcomplex::generated_by(&k, [&ac]).unwrap();
        let a = x.intersection(&b);
        let report = mayer_vietoris_check(&k, &x, &b, &a).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.degrees[1].h_y, 1);

        let all = k.as_subcomplex();
        assert!(mayer_vietoris_check(&k, &all, &all, &all).unwrap().passed());
        assert!(matches!(
            mayer_vietoris_check(&k, &x, &b, &Subcomplex::empty()),
            Err(Error::DecompositionInvalid(_))
        ));
    }
}
