//! Flags (weakly increasing label sequences) and their restrictions.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{Label, Poset};

/// Which entries of a flag survive a restriction against a label `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Restriction {
    /// `e = p`
    Eq,
    /// `e <= p`
    Le,
    /// `e < p`
    Lt,
    /// `e >= p`
    Ge,
    /// `e > p`
    Gt,
    /// `not (e <= p)`; keeps entries incomparable to `p`.
    NotLe,
    /// `not (e < p)`
    NotLt,
}

impl Restriction {
    pub const ALL: [Restriction; 7] = [
        Restriction::Eq,
        Restriction::Le,
        Restriction::Lt,
        Restriction::Ge,
        Restriction::Gt,
        Restriction::NotLe,
        Restriction::NotLt,
    ];

    pub fn holds(self, poset: &Poset, entry: Label, p: Label) -> bool {
        match self {
            Restriction::Eq => entry == p,
            Restriction::Le => poset.leq(entry, p),
            Restriction::Lt => poset.lt(entry, p),
            Restriction::Ge => poset.leq(p, entry),
            Restriction::Gt => poset.lt(p, entry),
            Restriction::NotLe => !poset.leq(entry, p),
            Restriction::NotLt => !poset.lt(entry, p),
        }
    }
}

impl std::str::FromStr for Restriction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "eq" => Restriction::Eq,
            "le" => Restriction::Le,
            "lt" => Restriction::Lt,
            "ge" => Restriction::Ge,
            "gt" => Restriction::Gt,
            "not_le" => Restriction::NotLe,
            "not_lt" => Restriction::NotLt,
            other => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("unknown restriction mode `{other}`"),
                })
            }
        })
    }
}

/// A weakly increasing sequence of pairwise comparable labels. May be empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Flag {
    entries: Vec<Label>,
}

impl Flag {
    pub fn new(poset: &Poset, entries: Vec<Label>) -> Result<Self> {
        for &e in &entries {
            if !poset.contains(e) {
                return Err(Error::UnknownElement(format!("#{}", e.index())));
            }
        }
        if entries.windows(2).any(|w| !poset.leq(w[0], w[1])) {
            let names: Vec<&str> = entries.iter().map(|&l| poset.name(l)).collect();
            return Err(Error::NotAFlag(names.join(",")));
        }
        Ok(Flag { entries })
    }

    pub fn from_names<S: AsRef<str>>(poset: &Poset, names: &[S]) -> Result<Self> {
        let entries = names
            .iter()
            .map(|n| poset.label(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Flag::new(poset, entries)
    }

    /// Parses a comma-separated label list such as `0,0,2`.
    pub fn parse(poset: &Poset, text: &str) -> Result<Self> {
        let names: Vec<&str> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        Flag::from_names(poset, &names)
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<Label>) -> Self {
        Flag { entries }
    }

    pub fn empty() -> Self {
        Flag::default()
    }

    pub fn entries(&self) -> &[Label] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, p: Label) -> bool {
        self.entries.contains(&p)
    }

    /// The last entry, which is the maximum of the flag.
    pub fn top(&self) -> Option<Label> {
        self.entries.last().copied()
    }

    /// The maximal subflag whose entries satisfy `mode` against `p`.
    pub fn restrict(&self, poset: &Poset, p: Label, mode: Restriction) -> Result<Flag> {
        if !poset.contains(p) {
            return Err(Error::UnknownElement(format!("#{}", p.index())));
        }
        Ok(Flag {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|&e| mode.holds(poset, e, p))
                .collect(),
        })
    }

    /// Positions (into `entries`) kept by a restriction.
    pub fn positions(&self, poset: &Poset, p: Label, mode: Restriction) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| mode.holds(poset, self.entries[i], p))
            .collect()
    }

    /// The distinct entries, in order.
    pub fn underlying_regular(&self) -> Result<RegularFlag> {
        if self.entries.is_empty() {
            return Err(Error::EmptyFlag);
        }
        let mut entries = self.entries.clone();
        // equal labels are adjacent in a weakly increasing sequence
        entries.dedup();
        Ok(RegularFlag(Flag { entries }))
    }

    pub fn degenerates_from(&self, regular: &RegularFlag) -> Result<bool> {
        Ok(self.underlying_regular()? == *regular)
    }

    /// The subflag at the given positions (which must be increasing).
    pub fn select(&self, positions: &[usize]) -> Flag {
        Flag {
            entries: positions.iter().map(|&i| self.entries[i]).collect(),
        }
    }

    pub fn display(&self, poset: &Poset) -> String {
        let names: Vec<&str> = self.entries.iter().map(|&l| poset.name(l)).collect();
        format!("[{}]", names.join(","))
    }

    /// Comma-separated form accepted by [`Flag::parse`].
    pub fn to_arg(&self, poset: &Poset) -> String {
        let names: Vec<&str> = self.entries.iter().map(|&l| poset.name(l)).collect();
        names.join(",")
    }
}

/// A strictly increasing flag (a nonempty chain of the poset).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegularFlag(Flag);

impl RegularFlag {
    pub fn new(poset: &Poset, entries: Vec<Label>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyFlag);
        }
        let strict = entries.windows(2).all(|w| poset.lt(w[0], w[1]));
        let flag = Flag::new(poset, entries).map_err(|e| match e {
            Error::NotAFlag(s) => Error::FlagNotRegular(s),
            other => other,
        })?;
        if !strict {
            return Err(Error::FlagNotRegular(flag.to_arg(poset)));
        }
        Ok(RegularFlag(flag))
    }

    pub fn parse(poset: &Poset, text: &str) -> Result<Self> {
        let names: Vec<&str> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let entries = names
            .iter()
            .map(|n| poset.label(n))
            .collect::<Result<Vec<_>>>()?;
        RegularFlag::new(poset, entries)
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<Label>) -> Self {
        RegularFlag(Flag { entries })
    }

    pub fn singleton(p: Label) -> Self {
        RegularFlag(Flag { entries: vec![p] })
    }

    pub fn as_flag(&self) -> &Flag {
        &self.0
    }

    pub fn entries(&self) -> &[Label] {
        &self.0.entries
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: Label) -> bool {
        self.0.contains(p)
    }

    pub fn top(&self) -> Label {
        *self.0.entries.last().expect("regular flags are nonempty")
    }

    pub fn bottom(&self) -> Label {
        self.0.entries[0]
    }

    /// Whether every entry of `self` occurs in `other`.
    pub fn is_subflag_of(&self, other: &RegularFlag) -> bool {
        self.entries().iter().all(|e| other.contains(*e))
    }

    pub fn display(&self, poset: &Poset) -> String {
        self.0.display(poset)
    }

    pub fn to_arg(&self, poset: &Poset) -> String {
        self.0.to_arg(poset)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.entries.iter().map(|l| format!("#{}", l.index())).collect();
        write!(f, "[{}]", ids.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Poset::chain(&names).unwrap()
    }

    fn flag(p: &Poset, s: &str) -> Flag {
        Flag::parse(p, s).unwrap()
    }

    #[test]
    fn restrict_examples() {
        let p = chain(3);
        let one = p.label("1").unwrap();
        let j = flag(&p, "0,0,1,2");
        assert_eq!(j.restrict(&p, one, Restriction::Eq).unwrap(), flag(&p, "1"));
        assert_eq!(j.restrict(&p, one, Restriction::Le).unwrap(), flag(&p, "0,0,1"));
        assert_eq!(j.restrict(&p, one, Restriction::NotLe).unwrap(), flag(&p, "2"));
        let j = flag(&p, "0,0,2");
        assert!(j.restrict(&p, one, Restriction::Eq).unwrap().is_empty());
    }

    #[test]
    fn restrict_unknown_label() {
        let p = chain(2);
        let j = flag(&p, "0,1");
        assert!(j.restrict(&p, Label(9), Restriction::Le).is_err());
    }

    #[test]
    fn underlying_regular_examples() {
        let p = chain(3);
        assert_eq!(
            flag(&p, "0,0,1,1,2").underlying_regular().unwrap(),
            RegularFlag::parse(&p, "0,1,2").unwrap()
        );
        assert_eq!(
            flag(&p, "1,1").underlying_regular().unwrap(),
            RegularFlag::parse(&p, "1").unwrap()
        );
        assert_eq!(Flag::empty().underlying_regular(), Err(Error::EmptyFlag));
    }

    #[test]
    fn degenerates_from_examples() {
        let p = chain(3);
        let i02 = RegularFlag::parse(&p, "0,2").unwrap();
        assert!(flag(&p, "0,0,2").degenerates_from(&i02).unwrap());
        assert!(!flag(&p, "0,1,2").degenerates_from(&i02).unwrap());
        let i2 = RegularFlag::parse(&p, "2").unwrap();
        assert!(flag(&p, "2").degenerates_from(&i2).unwrap());
    }

    #[test]
    fn regular_flag_validation() {
        let p = chain(2);
        assert!(matches!(
            RegularFlag::parse(&p, "1,0"),
            Err(Error::FlagNotRegular(_))
        ));
        assert!(matches!(
            RegularFlag::parse(&p, "0,0"),
            Err(Error::FlagNotRegular(_))
        ));
        assert!(matches!(Flag::parse(&p, "1,0"), Err(Error::NotAFlag(_))));
    }

    fn all_flags(p: &Poset, max_len: usize) -> Vec<Flag> {
        let mut out = vec![Flag::empty()];
        let mut frontier = vec![Flag::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for f in &frontier {
                for l in p.labels() {
                    if f.top().map_or(true, |m| p.leq(m, l)) {
                        let mut e = f.entries().to_vec();
                        e.push(l);
                        next.push(Flag::from_entries_unchecked(e));
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn chain_restrictions_coincide() {
        let p = chain(4);
        for j in all_flags(&p, 4) {
            for q in p.labels() {
                assert_eq!(
                    j.restrict(&p, q, Restriction::NotLe).unwrap(),
                    j.restrict(&p, q, Restriction::Gt).unwrap()
                );
                assert_eq!(
                    j.restrict(&p, q, Restriction::NotLt).unwrap(),
                    j.restrict(&p, q, Restriction::Ge).unwrap()
                );
            }
        }
    }

    #[test]
    fn restrictions_split_and_are_idempotent() {
        let p = chain(4);
        for j in all_flags(&p, 4) {
            for q in p.labels() {
                let le = j.restrict(&p, q, Restriction::Le).unwrap();
                let rest = j.restrict(&p, q, Restriction::NotLe).unwrap();
                let mut joined = le.entries().to_vec();
                joined.extend_from_slice(rest.entries());
                assert_eq!(joined, j.entries());
                for mode in Restriction::ALL {
                    let once = j.restrict(&p, q, mode).unwrap();
                    assert_eq!(once.restrict(&p, q, mode).unwrap(), once);
                }
            }
        }
    }

    #[test]
    fn non_chain_not_le_keeps_incomparable_entries() {
        let p = Poset::new(&["n", "s", "b"], &[("n", "b"), ("s", "b")]).unwrap();
        let j = flag(&p, "s,b");
        let n = p.label("n").unwrap();
        assert_eq!(j.restrict(&p, n, Restriction::NotLe).unwrap(), flag(&p, "s,b"));
        assert!(j.restrict(&p, n, Restriction::Gt).unwrap().entries() == [p.label("b").unwrap()]);
    }
}
