//! Sparse column reduction over a field.

use std::collections::HashMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field arithmetic, with the field passed as a value so that prime fields
/// can carry their modulus.
pub trait Field: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.from_i64(1)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }
}

/// The integers modulo a prime `p < 2^32`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField(pub u64);

impl PrimeField {
    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }

    fn div(&self, a: &u64, b: &u64) -> u64 {
        assert!(*b != 0, "division by zero in F_{}", self.0);
        a * self.pow(*b, self.0 - 2) % self.0
    }
}

pub type Column<E> = Vec<(usize, E)>;

/// Result of reducing columns left to right so that nonzero columns have
/// distinct lowest rows (`R = D V`, `V` upper unitriangular).
#[derive(Clone, Debug)]
pub struct Reduction<E> {
    pub columns: Vec<Column<E>>,
    /// Columns of `V`; empty unless requested.
    pub v: Vec<Column<E>>,
    /// Lowest row of each nonzero reduced column, mapped to that column.
    pub low_to_col: HashMap<usize, usize>,
}

impl<E> Reduction<E> {
    pub fn rank(&self) -> usize {
        self.low_to_col.len()
    }
}

/// `a - c * b` on sorted sparse columns.
pub fn axpy<F: Field>(f: &F, a: &Column<F::Elem>, c: &F::Elem, b: &Column<F::Elem>) -> Column<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.neg(&f.mul(c, &b[j].1))));
            j += 1;
        } else {
            let v = f.sub(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn reduce<F: Field>(f: &F, columns: Vec<Column<F::Elem>>, track: bool) -> Reduction<F::Elem> {
    let n = columns.len();
    let mut reduced: Vec<Column<F::Elem>> = Vec::with_capacity(n);
    let mut v: Vec<Column<F::Elem>> = Vec::new();
    let mut low_to_col: HashMap<usize, usize> = HashMap::new();
    for (j, mut col) in columns.into_iter().enumerate() {
        let mut vj: Column<F::Elem> = if track { vec![(j, f.one())] } else { Vec::new() };
        while let Some((low, value)) = col.last().cloned() {
            let Some(&k) = low_to_col.get(&low) else { break };
            let pivot = &reduced[k].last().expect("pivot columns are nonzero").1;
            let c = f.div(&value, pivot);
            col = axpy(f, &col, &c, &reduced[k]);
            if track {
                vj = axpy(f, &vj, &c, &v[k]);
            }
        }
        if let Some(&(low, _)) = col.last() {
            low_to_col.insert(low, j);
        }
        reduced.push(col);
        if track {
            v.push(vj);
        }
    }
    Reduction {
        columns: reduced,
        v,
        low_to_col,
    }
}

/// Rank of a dense matrix given by rows.
pub fn dense_rank<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let columns: Vec<Column<F::Elem>> = (0..ncols)
        .map(|j| {
            rows.iter()
                .enumerate()
                .filter(|(_, r)| !f.is_zero(&r[j]))
                .map(|(i, r)| (i, r[j].clone()))
                .collect()
        })
        .collect();
    reduce(f, columns, false).rank()
}
