//! Exact barycentric coordinate calculus on a single stratified simplex `|Δ^J|`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::flags::{Flag, RegularFlag, Restriction};
use crate::poset::{Label, Poset};

pub type Q = BigRational;

/// Parses `3`, `-1/2` and the like.
pub fn parse_rational(text: &str) -> Result<Q> {
    Q::from_str(text.trim()).map_err(|_| Error::InvalidPoint(format!("`{text}` is not a rational")))
}

pub fn parse_rationals(text: &str) -> Result<Vec<Q>> {
    text.split(',').map(parse_rational).collect()
}

fn pow2(k: usize) -> Q {
    Q::from_integer(BigInt::one() << k)
}

/// A point of `|Δ^J|`: nonnegative rational coordinates, one per entry of `J`,
/// summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexPoint {
    flag: Flag,
    coords: Vec<Q>,
}

impl SimplexPoint {
    pub fn new(flag: Flag, coords: Vec<Q>) -> Result<Self> {
        if flag.is_empty() {
            return Err(Error::InvalidPoint("flag is empty".into()));
        }
        if coords.len() != flag.len() {
            return Err(Error::InvalidPoint(format!(
                "{} coordinates for a flag of length {}",
                coords.len(),
                flag.len()
            )));
        }
        if coords.iter().any(Signed::is_negative) {
            return Err(Error::InvalidPoint("negative coordinate".into()));
        }
        let sum: Q = coords.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidPoint(format!("coordinates sum to {sum}")));
        }
        Ok(SimplexPoint { flag, coords })
    }

    /// The vertex `i` of `Δ^J`.
    pub fn vertex(flag: Flag, i: usize) -> Result<Self> {
        let mut coords = vec![Q::zero(); flag.len()];
        if i >= coords.len() {
            return Err(Error::InvalidPoint(format!("no vertex {i}")));
        }
        coords[i] = Q::one();
        SimplexPoint::new(flag, coords)
    }

    pub fn flag(&self) -> &Flag {
        &self.flag
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    fn with_coords(&self, coords: Vec<Q>) -> SimplexPoint {
        debug_assert_eq!(coords.iter().sum::<Q>(), Q::one());
        SimplexPoint {
            flag: self.flag.clone(),
            coords,
        }
    }
}

impl fmt::Display for SimplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Label of the open face containing `x`: the largest label with positive
/// coordinate.
pub fn point_stratum(poset: &Poset, x: &SimplexPoint) -> Label {
    poset
        .max_of(
            x.flag
                .entries()
                .iter()
                .zip(&x.coords)
                .filter(|(_, c)| c.is_positive())
                .map(|(&l, _)| l),
        )
        .expect("coordinates sum to one")
}

fn check_label(poset: &Poset, p: Label) -> Result<()> {
    if poset.contains(p) {
        Ok(())
    } else {
        Err(Error::UnknownElement(format!("#{}", p.index())))
    }
}

/// Sum of the coordinates whose label satisfies `mode` against `p`.
pub fn s_coord(poset: &Poset, x: &SimplexPoint, p: Label, mode: Restriction) -> Result<Q> {
    check_label(poset, p)?;
    Ok(s_unchecked(poset, x, p, mode))
}

fn s_unchecked(poset: &Poset, x: &SimplexPoint, p: Label, mode: Restriction) -> Q {
    x.flag
        .entries()
        .iter()
        .zip(&x.coords)
        .filter(|(&l, _)| mode.holds(poset, l, p))
        .map(|(_, c)| c)
        .sum()
}

/// `s_{¬≤p} / s_{¬<p}`, or `None` where `s_{¬<p}` vanishes.
pub fn t_coord(poset: &Poset, x: &SimplexPoint, p: Label) -> Result<Option<Q>> {
    check_label(poset, p)?;
    let bar = s_unchecked(poset, x, p, Restriction::NotLt);
    if bar.is_zero() {
        return Ok(None);
    }
    Ok(Some(s_unchecked(poset, x, p, Restriction::NotLe) / bar))
}

/// A piecewise-linear function on `[0,1]`, positive away from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    breakpoints: Vec<Q>,
    values: Vec<Q>,
}

impl PLFunction {
    pub fn new(breakpoints: Vec<Q>, values: Vec<Q>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidFunction(m.to_string()));
        if breakpoints.len() < 2 || breakpoints.len() != values.len() {
            return bad("need at least two breakpoints, one value each");
        }
        if !breakpoints[0].is_zero() || !breakpoints.last().expect("nonempty").is_one() {
            return bad("breakpoints must start at 0 and end at 1");
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return bad("breakpoints must increase strictly");
        }
        if values.iter().any(|v| v.is_negative() || *v > Q::one()) {
            return bad("values must lie in [0,1]");
        }
        if values[1..].iter().any(Zero::is_zero) {
            return bad("values must be positive away from 0");
        }
        Ok(PLFunction { breakpoints, values })
    }

    pub fn constant(c: Q) -> Result<Self> {
        PLFunction::new(vec![Q::zero(), Q::one()], vec![c.clone(), c])
    }

    pub fn one() -> Self {
        PLFunction::constant(Q::one()).expect("1 is a valid value")
    }

    /// Parses either a constant (`1/2`) or breakpoint pairs (`0:0,1/2:1,1:1`).
    pub fn parse(text: &str) -> Result<Self> {
        if !text.contains(':') {
            return PLFunction::constant(parse_rational(text)?);
        }
        let mut bs = Vec::new();
        let mut vs = Vec::new();
        for pair in text.split(',') {
            let (b, v) = pair
                .split_once(':')
                .ok_or_else(|| Error::InvalidFunction(format!("`{pair}` is not `s:value`")))?;
            bs.push(parse_rational(b).map_err(|e| Error::InvalidFunction(e.to_string()))?);
            vs.push(parse_rational(v).map_err(|e| Error::InvalidFunction(e.to_string()))?);
        }
        PLFunction::new(bs, vs)
    }

    pub fn breakpoints(&self) -> &[Q] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// Value at `s`, clamping `s` to `[0,1]`.
    pub fn eval(&self, s: &Q) -> Q {
        if *s <= self.breakpoints[0] {
            return self.values[0].clone();
        }
        for i in 1..self.breakpoints.len() {
            if *s <= self.breakpoints[i] {
                let (b0, b1) = (&self.breakpoints[i - 1], &self.breakpoints[i]);
                let (v0, v1) = (&self.values[i - 1], &self.values[i]);
                return v0 + (v1 - v0) * (s - b0) / (b1 - b0);
            }
        }
        self.values.last().expect("nonempty").clone()
    }
}

/// `s_{¬≤p}(x) ≤ φ(s_{¬<p}(x)) · s_p(x)`, decided exactly.
pub fn in_phi_hood(poset: &Poset, x: &SimplexPoint, p: Label, phi: &PLFunction) -> Result<bool> {
    check_label(poset, p)?;
    let above = s_unchecked(poset, x, p, Restriction::NotLe);
    if above.is_zero() {
        return Ok(true);
    }
    let bar = s_unchecked(poset, x, p, Restriction::NotLt);
    let at = s_unchecked(poset, x, p, Restriction::Eq);
    Ok(above <= phi.eval(&bar) * at)
}

/// The weighted barycenter `b_J`: block `i` of the underlying regular flag
/// `p_0 < ... < p_n` gets weight `2^-(i+1)` (`2^-n` for the last block),
/// spread evenly over its entries.
pub fn weighted_barycenter(flag: &Flag) -> Result<SimplexPoint> {
    let regular = flag.underlying_regular()?;
    let n = regular.len() - 1;
    let coords = flag
        .entries()
        .iter()
        .map(|l| {
            let i = regular
                .entries()
                .iter()
                .position(|r| r == l)
                .expect("entry of its own underlying flag");
            let weight = if i < n { pow2(i + 1) } else { pow2(n) };
            let size = flag.entries().iter().filter(|&e| e == l).count();
            Q::one() / (weight * Q::from_integer(BigInt::from(size)))
        })
        .collect();
    SimplexPoint::new(flag.clone(), coords)
}

/// Image under the subdivision map `Ψ` of the point of `sd Δ^J` with the given
/// weights on the chain of subflags (each a set of positions of `J`).
pub fn psi_eval(flag: &Flag, chain: &[Vec<usize>], weights: &[Q]) -> Result<SimplexPoint> {
    if chain.is_empty() || chain.len() != weights.len() {
        return Err(Error::NotASubflagChain(format!(
            "{} subflags with {} weights",
            chain.len(),
            weights.len()
        )));
    }
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(chain.len());
    for positions in chain {
        let mut s = positions.clone();
        s.sort_unstable();
        s.dedup();
        if s.is_empty() || s.len() != positions.len() || s.last().is_some_and(|&m| m >= flag.len()) {
            return Err(Error::NotASubflagChain(format!("bad positions {positions:?}")));
        }
        if let Some(prev) = sets.last() {
            let grows = prev.len() < s.len() && prev.iter().all(|i| s.binary_search(i).is_ok());
            if !grows {
                return Err(Error::NotASubflagChain(format!("{prev:?} ⊄ {s:?}")));
            }
        }
        sets.push(s);
    }
    if weights.iter().any(Signed::is_negative) || !weights.iter().sum::<Q>().is_one() {
        return Err(Error::InvalidPoint("weights must be nonnegative and sum to 1".into()));
    }
    let mut coords = vec![Q::zero(); flag.len()];
    for (s, w) in sets.iter().zip(weights) {
        let b = weighted_barycenter(&flag.select(s))?;
        for (&pos, c) in s.iter().zip(b.coords()) {
            coords[pos] += w * c;
        }
    }
    SimplexPoint::new(flag.clone(), coords)
}

/// Retraction `ρ^p` onto the closed face spanned by labels `≤ p`.
pub fn rho(poset: &Poset, x: &SimplexPoint, p: Label) -> Result<SimplexPoint> {
    rho_homotopy(poset, x, p, &Q::one())
}

/// The deformation from `x` (at `t = 0`) to `ρ^p(x)` (at `t = 1`): the `≤ p`
/// block gets mass `(1-t) s_{≤p} + t`, directions within blocks kept.
pub fn rho_homotopy(poset: &Poset, x: &SimplexPoint, p: Label, t: &Q) -> Result<SimplexPoint> {
    check_label(poset, p)?;
    if t.is_negative() || *t > Q::one() {
        return Err(Error::InvalidPoint(format!("time {t} is outside [0,1]")));
    }
    let low = s_unchecked(poset, x, p, Restriction::Le);
    if low.is_zero() {
        return Err(Error::DegenerateProjection(poset.name(p).to_string()));
    }
    let high = Q::one() - &low;
    let new_low = (Q::one() - t) * &low + t;
    let new_high = Q::one() - &new_low;
    let coords = x
        .flag
        .entries()
        .iter()
        .zip(&x.coords)
        .map(|(&l, c)| {
            if poset.leq(l, p) {
                c * &new_low / &low
            } else if high.is_zero() {
                Q::zero()
            } else {
                c * &new_high / &high
            }
        })
        .collect();
    Ok(x.with_coords(coords))
}

/// The standard aspire `R_I(x, t) = Σ_{p ∈ I} t_p ρ^p(x)`, where `t` is a
/// point of `|Δ^I|`.
pub fn aspire_eval(
    poset: &Poset,
    x: &SimplexPoint,
    flag: &RegularFlag,
    t: &SimplexPoint,
) -> Result<SimplexPoint> {
    if t.flag() != flag.as_flag() {
        return Err(Error::InvalidPoint("time parameter must lie on Δ^I".into()));
    }
    let one = PLFunction::one();
    for &p in flag.entries() {
        if !in_phi_hood(poset, x, p, &one)? {
            return Err(Error::OutsideNeighborhood(poset.name(p).to_string()));
        }
    }
    let mut coords = vec![Q::zero(); x.coords.len()];
    for (&p, weight) in flag.entries().iter().zip(t.coords()) {
        if weight.is_zero() {
            continue;
        }
        let r = rho(poset, x, p)?;
        for (acc, c) in coords.iter_mut().zip(r.coords()) {
            *acc += weight * c;
        }
    }
    Ok(x.with_coords(coords))
}

/// The new `t`-coordinate under `Φ_p` for `f = φ(s̄)/(1+φ(s̄))`.
pub fn reparam_t(t: &Q, f: &Q) -> Q {
    let two = Q::from_integer(BigInt::from(2));
    let half = Q::new(BigInt::one(), BigInt::from(2));
    if *t >= half {
        &two * t - Q::one() + (&two - &two * t) * f
    } else {
        &two * t * f
    }
}

/// The reparametrisation `Φ_p` moving the standard neighborhood of `p` onto
/// the `φ`-neighborhood. Points with `s_{¬<p} = 0` and flags without `p` are
/// left fixed.
pub fn phi_reparam(poset: &Poset, x: &SimplexPoint, p: Label, phi: &PLFunction) -> Result<SimplexPoint> {
    check_label(poset, p)?;
    if !x.flag.contains(p) {
        return Ok(x.clone());
    }
    let Some(t) = t_coord(poset, x, p)? else {
        return Ok(x.clone());
    };
    let bar = s_unchecked(poset, x, p, Restriction::NotLt);
    let value = phi.eval(&bar);
    let f = &value / (Q::one() + &value);
    let new_t = reparam_t(&t, &f);
    let coords = x
        .flag
        .entries()
        .iter()
        .zip(&x.coords)
        .map(|(&l, c)| {
            if l == p {
                if t.is_one() {
                    c.clone()
                } else {
                    c * (Q::one() - &new_t) / (Q::one() - &t)
                }
            } else if !poset.leq(l, p) {
                if t.is_zero() {
                    c.clone()
                } else {
                    c * &new_t / &t
                }
            } else {
                c.clone()
            }
        })
        .collect();
    Ok(x.with_coords(coords))
}
