//! Finite posets of stratum labels.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::flags::RegularFlag;

/// Index of an element of a [`Poset`].
///
/// Labels are numbered in the text order of their identifiers, so comparing two
/// `Label`s with `Ord` compares the identifiers lexicographically. That order
/// has nothing to do with the partial order; use [`Poset::leq`] for that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub(crate) u32);

impl Label {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite partially ordered set, stored reflexively and transitively closed.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, Label>,
    // row-major, leq[p * n + q] == p <= q
    leq: Vec<bool>,
    // position of each element in a fixed linear extension
    rank: Vec<usize>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("elements", &self.names)
            .field("covers", &self.covering_pairs_named())
            .finish()
    }
}

impl Poset {
    /// Builds a poset from identifiers and pairs `(p, q)` meaning `p <= q`.
    ///
    /// Either the Hasse diagram or the full relation may be given; the
    /// reflexive-transitive closure is always recomputed.
    pub fn new<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self> {
        let mut names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::Duplicate(pair[0].clone()));
            }
        }
        let index: HashMap<String, Label> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Label(i as u32)))
            .collect();
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (p, q) in relations {
            let p = *index
                .get(p.as_ref())
                .ok_or_else(|| Error::UnknownElement(p.as_ref().to_string()))?;
            let q = *index
                .get(q.as_ref())
                .ok_or_else(|| Error::UnknownElement(q.as_ref().to_string()))?;
            leq[p.index() * n + q.index()] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::Cycle(names[i].clone(), names[j].clone()));
                }
            }
        }
        let rank = linear_extension(n, &leq);
        Ok(Poset {
            names,
            index,
            leq,
            rank,
        })
    }

    /// The chain `names[0] < names[1] < ...`.
    pub fn chain<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let relations: Vec<(&str, &str)> = names
            .windows(2)
            .map(|w| (w[0].as_ref(), w[1].as_ref()))
            .collect();
        let elements: Vec<&str> = names.iter().map(|s| s.as_ref()).collect();
        Poset::new(&elements, &relations)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.names.len()).map(|i| Label(i as u32))
    }

    pub fn name(&self, label: Label) -> &str {
        &self.names[label.index()]
    }

    pub fn label(&self, name: &str) -> Result<Label> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn contains(&self, label: Label) -> bool {
        label.index() < self.names.len()
    }

    pub fn leq(&self, p: Label, q: Label) -> bool {
        let n = self.names.len();
        self.leq[p.index() * n + q.index()]
    }

    /// `leq` on identifiers, reporting unknown ones.
    pub fn leq_named(&self, p: &str, q: &str) -> Result<bool> {
        Ok(self.leq(self.label(p)?, self.label(q)?))
    }

    pub fn lt(&self, p: Label, q: Label) -> bool {
        p != q && self.leq(p, q)
    }

    pub fn comparable(&self, p: Label, q: Label) -> bool {
        self.leq(p, q) || self.leq(q, p)
    }

    /// Position of `label` in a fixed linear extension of the order
    /// (ties between incomparable elements broken by identifier).
    pub fn rank(&self, label: Label) -> usize {
        self.rank[label.index()]
    }

    /// Maximum of a nonempty set of pairwise comparable labels.
    pub fn max_of(&self, labels: impl IntoIterator<Item = Label>) -> Option<Label> {
        labels
            .into_iter()
            .fold(None, |acc, l| match acc {
                None => Some(l),
                Some(m) if self.leq(m, l) => Some(l),
                Some(m) => Some(m),
            })
    }

    /// Pairs `(p, q)` with `q` covering `p`, in label order.
    pub fn covering_pairs(&self) -> Vec<(Label, Label)> {
        let mut out = Vec::new();
        for p in self.labels() {
            for q in self.labels() {
                if !self.lt(p, q) {
                    continue;
                }
                let between = self.labels().any(|r| self.lt(p, r) && self.lt(r, q));
                if !between {
                    out.push((p, q));
                }
            }
        }
        out
    }

    fn covering_pairs_named(&self) -> Vec<(String, String)> {
        self.covering_pairs()
            .into_iter()
            .map(|(p, q)| (self.name(p).to_string(), self.name(q).to_string()))
            .collect()
    }

    /// All nonempty chains, as strictly increasing flags, ordered by length
    /// and then lexicographically by identifier.
    pub fn regular_flags(&self) -> Vec<RegularFlag> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in self.labels() {
            stack.push(start);
            self.extend_chains(&mut stack, &mut out);
            stack.pop();
        }
        out.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.entries().cmp(b.entries()))
        });
        out
    }

    fn extend_chains(&self, stack: &mut Vec<Label>, out: &mut Vec<RegularFlag>) {
        out.push(RegularFlag::from_sorted_unchecked(stack.clone()));
        let last = *stack.last().expect("nonempty chain");
        // Only extend by elements that are above every entry; since the stack is
        // already a chain ending at `last`, being above `last` suffices.
        let above: Vec<Label> = self.labels().filter(|&q| self.lt(last, q)).collect();
        for q in above {
            stack.push(q);
            self.extend_chains(stack, out);
            stack.pop();
        }
    }

    /// Number of nonempty chains, without enumerating them.
    pub fn count_regular_flags(&self) -> u128 {
        // chains starting at x: f(x) = 1 + sum_{y > x} f(y), computed top-down
        let mut order: Vec<Label> = self.labels().collect();
        order.sort_by_key(|&l| std::cmp::Reverse(self.rank(l)));
        let mut f = vec![0u128; self.len()];
        for &x in &order {
            let mut total = 1u128;
            for y in self.labels() {
                if self.lt(x, y) {
                    total = total.saturating_add(f[y.index()]);
                }
            }
            f[x.index()] = total;
        }
        f.iter().fold(0u128, |a, &b| a.saturating_add(b))
    }
}

fn linear_extension(n: usize, leq: &[bool]) -> Vec<usize> {
    let mut placed = vec![false; n];
    let mut rank = vec![0; n];
    for r in 0..n {
        // smallest-index element all of whose strict predecessors are placed
        let next = (0..n)
            .find(|&i| {
                !placed[i] && (0..n).all(|j| j == i || !leq[j * n + i] || placed[j])
            })
            .expect("closed relation is acyclic");
        placed[next] = true;
        rank[next] = r;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Poset {
        Poset::chain(&["0", "1", "2"]).unwrap()
    }

    #[test]
    fn transitive_closure_is_derived() {
        let p = Poset::new(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        assert!(p.leq_named("0", "2").unwrap());
        assert!(!p.leq_named("2", "0").unwrap());
    }

    #[test]
    fn antichain_has_no_relations() {
        let p = Poset::new(&["a", "b"], &[]).unwrap();
        assert!(!p.leq_named("a", "b").unwrap());
        assert!(!p.leq_named("b", "a").unwrap());
        assert!(p.leq_named("a", "a").unwrap());
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Poset::new(&["0", "1"], &[("0", "1"), ("1", "0")]).unwrap_err();
        assert!(matches!(err, Error::Cycle(_, _)));
    }

    #[test]
    fn unknown_elements_are_rejected() {
        let err = Poset::new(&["0"], &[("0", "x")]).unwrap_err();
        assert_eq!(err, Error::UnknownElement("x".into()));
        assert!(chain3().leq_named("0", "7").is_err());
    }

    #[test]
    fn duplicate_identifiers_are_rejected() {
        assert!(matches!(
            Poset::new(&["a", "a"], &[]),
            Err(Error::Duplicate(_))
        ));
    }

    #[test]
    fn regular_flags_of_three_chain() {
        let p = chain3();
        let flags: Vec<String> = p.regular_flags().iter().map(|f| f.display(&p)).collect();
        assert_eq!(
            flags,
            ["[0]", "[1]", "[2]", "[0,1]", "[0,2]", "[1,2]", "[0,1,2]"]
        );
        assert_eq!(p.count_regular_flags(), 7);
    }

    #[test]
    fn regular_flags_of_antichain_and_singleton() {
        let p = Poset::new(&["a", "b"], &[]).unwrap();
        assert_eq!(p.regular_flags().len(), 2);
        let s = Poset::new(&["p"], &[]).unwrap();
        assert_eq!(s.regular_flags().len(), 1);
        assert_eq!(s.count_regular_flags(), 1);
    }

    #[test]
    fn rank_is_a_linear_extension() {
        let p = Poset::new(&["z", "a", "m"], &[("z", "a"), ("a", "m")]).unwrap();
        let z = p.label("z").unwrap();
        let a = p.label("a").unwrap();
        let m = p.label("m").unwrap();
        assert!(p.rank(z) < p.rank(a) && p.rank(a) < p.rank(m));
        assert_eq!(p.max_of([a, z, m]), Some(m));
    }
}
