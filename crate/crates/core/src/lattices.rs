//! Finite posets and distributive lattices of strictly increasing tuples:
//! the componentwise lattice I(d,n), unions of such blocks ordered across
//! lengths (shorter tuples sit higher), principal chains obtained by joining
//! covers, closed-form successor rules that avoid poset construction, and
//! minuscule lattices in both a tuple model and a Weyl-orbit weight model.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::root_system::{Family, RootSystem, RootSystemError, WeightVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("tuple entries must be strictly increasing within 1..={ambient}, got {entries:?}")]
    InvalidTuple { entries: Vec<u32>, ambient: u32 },
    #[error("invalid block sizes {ds:?} for ambient {n}: need strictly increasing values in 1..={max}", max = n - 1)]
    InvalidBlockSizes { n: u32, ds: Vec<u32> },
    #[error("element {element} does not belong to this poset")]
    NotInPoset { element: String },
    #[error("element {element} has no successor: it is the maximum")]
    MaximalElement { element: String },
    #[error("element length {len} matches no block of {ds:?}")]
    LengthNotABlock { len: usize, ds: Vec<u32> },
    #[error("not a lattice: {context} of {a} and {b} is not unique (candidates {candidates:?})")]
    NotLattice {
        context: &'static str,
        a: String,
        b: String,
        candidates: Vec<String>,
    },
    #[error("no tuple model for {family}{rank} at node {d}; use the weight-orbit model")]
    UnsupportedTupleModel {
        family: Family,
        rank: usize,
        d: usize,
    },
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// A strictly increasing tuple in 1..=ambient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupleElement {
    entries: Vec<u32>,
    ambient: u32,
}

impl TupleElement {
    pub fn new(entries: Vec<u32>, ambient: u32) -> Result<Self, LatticeError> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.iter().all(|&e| e >= 1 && e <= ambient);
        if entries.is_empty() || !increasing || !in_range {
            return Err(LatticeError::InvalidTuple { entries, ambient });
        }
        Ok(Self { entries, ambient })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cross-length comparison: a <= b when b is no longer than a and
    /// dominates it componentwise on the shared prefix. Longer tuples sit
    /// lower; for equal lengths this is the componentwise order.
    pub fn leq(&self, other: &TupleElement) -> bool {
        other.len() <= self.len()
            && other
                .entries
                .iter()
                .zip(&self.entries)
                .all(|(b, a)| b >= a)
    }

    /// Least upper bound: truncate to the shorter length, componentwise max.
    pub fn join(&self, other: &TupleElement) -> TupleElement {
        let len = self.len().min(other.len());
        let entries = self.entries[..len]
            .iter()
            .zip(&other.entries[..len])
            .map(|(a, b)| *a.max(b))
            .collect();
        TupleElement {
            entries,
            ambient: self.ambient,
        }
    }

    /// Greatest lower bound: componentwise min on the shared prefix,
    /// extended by the tail of the longer tuple.
    pub fn meet(&self, other: &TupleElement) -> TupleElement {
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut entries: Vec<u32> = short
            .entries
            .iter()
            .zip(&long.entries)
            .map(|(a, b)| *a.min(b))
            .collect();
        entries.extend_from_slice(&long.entries[short.len()..]);
        TupleElement {
            entries,
            ambient: self.ambient,
        }
    }

    /// The maximum of the block I(len, ambient): (n-d+1, ..., n).
    pub fn is_block_maximum(&self) -> bool {
        let n = self.ambient;
        let d = self.len() as u32;
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &e)| e == n - d + k as u32 + 1)
    }
}

impl fmt::Display for TupleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Canonical element order: longer tuples (lower in the lattice) first,
/// then lexicographic.
impl Ord for TupleElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for TupleElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Block sizes for a union of tuple lattices inside 1..=n: strictly
/// increasing d_1 < ... < d_r <= n-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungLatticeSpec {
    n: u32,
    ds: Vec<u32>,
}

impl YoungLatticeSpec {
    pub fn new(n: u32, ds: impl IntoIterator<Item = u32>) -> Result<Self, LatticeError> {
        let ds: Vec<u32> = ds.into_iter().collect();
        let increasing = ds.windows(2).all(|w| w[0] < w[1]);
        let in_range = ds.iter().all(|&d| d >= 1 && d + 1 <= n);
        if n < 2 || ds.is_empty() || !increasing || !in_range {
            return Err(LatticeError::InvalidBlockSizes { n, ds });
        }
        Ok(Self { n, ds })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ds(&self) -> &[u32] {
        &self.ds
    }
}

/// How a poset's elements were produced; recorded for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetKind {
    TupleLattice,
    WeightOrbit,
    Custom,
}

/// Row-major bit matrix used for the order relation.
#[derive(Debug, Clone)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            words,
            bits: vec![0; n * words],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] & (1 << (j % 64)) != 0
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }
}

fn iter_bits(row: &[u64], n: usize) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(move |(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            }
        })
        .filter(move |&j| j < n)
    })
}

/// A finite poset over elements of type `E`, with the order materialized as
/// a bit matrix at construction. Cover lists are computed on first use and
/// cached; the poset is observationally immutable afterwards.
#[derive(Debug)]
pub struct FinitePoset<E> {
    kind: PosetKind,
    elements: Vec<E>,
    index: HashMap<E, usize>,
    /// up.get(i,j) <=> element i <= element j
    up: BitMatrix,
    /// down.get(i,j) <=> element j <= element i
    down: BitMatrix,
    covers: OnceLock<Vec<Vec<u32>>>,
}

impl<E> FinitePoset<E>
where
    E: Clone + Eq + std::hash::Hash + Ord + fmt::Display,
{
    /// Build from elements and an order oracle. Elements are deduplicated and
    /// sorted into the canonical order of `E`; reflexivity is supplied here,
    /// so `leq` only needs to be correct on distinct elements.
    pub fn from_order(
        kind: PosetKind,
        elements: Vec<E>,
        leq: impl Fn(&E, &E) -> bool,
    ) -> Self {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let mut up = BitMatrix::new(n);
        let mut down = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if i == j || leq(&elements[i], &elements[j]) {
                    up.set(i, j);
                    down.set(j, i);
                }
            }
        }
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        Self {
            kind,
            elements,
            index,
            up,
            down,
            covers: OnceLock::new(),
        }
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    fn require_index(&self, e: &E) -> Result<usize, LatticeError> {
        self.index_of(e).ok_or_else(|| LatticeError::NotInPoset {
            element: e.to_string(),
        })
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j)
    }

    pub fn leq(&self, a: &E, b: &E) -> Result<bool, LatticeError> {
        Ok(self.leq_idx(self.require_index(a)?, self.require_index(b)?))
    }

    /// Indices of minimal elements, ascending.
    pub fn minimal_element_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| iter_bits(self.down.row(i), self.len()).all(|j| j == i))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<E> {
        self.minimal_element_indices()
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect()
    }

    fn covers_table(&self) -> &Vec<Vec<u32>> {
        self.covers.get_or_init(|| {
            let n = self.len();
            let words = self.up.words;
            let mut table = Vec::with_capacity(n);
            for i in 0..n {
                let uppers = self.up.row(i);
                let mut covs = Vec::new();
                for j in iter_bits(uppers, n) {
                    if j == i {
                        continue;
                    }
                    // j covers i iff nothing else lies in [i, j]
                    let lowers_j = self.down.row(j);
                    let mut strict_between = false;
                    for w in 0..words {
                        let mut inter = uppers[w] & lowers_j[w];
                        if w == i / 64 {
                            inter &= !(1u64 << (i % 64));
                        }
                        if w == j / 64 {
                            inter &= !(1u64 << (j % 64));
                        }
                        if inter != 0 {
                            strict_between = true;
                            break;
                        }
                    }
                    if !strict_between {
                        covs.push(j as u32);
                    }
                }
                table.push(covs);
            }
            table
        })
    }

    /// Indices of elements covering element i, ascending.
    pub fn cover_indices(&self, i: usize) -> &[u32] {
        &self.covers_table()[i]
    }

    pub fn covers(&self, e: &E) -> Result<Vec<E>, LatticeError> {
        let i = self.require_index(e)?;
        Ok(self
            .cover_indices(i)
            .iter()
            .map(|&j| self.elements[j as usize].clone())
            .collect())
    }

    fn unique_extremum(
        &self,
        candidates: &[u64],
        strict_side: &BitMatrix,
        context: &'static str,
        a: usize,
        b: usize,
    ) -> Result<usize, LatticeError> {
        let n = self.len();
        let words = self.up.words;
        let mut found = Vec::new();
        for k in iter_bits(candidates, n) {
            let side = strict_side.row(k);
            let mut minimal = true;
            for w in 0..words {
                let mut inter = candidates[w] & side[w];
                if w == k / 64 {
                    inter &= !(1u64 << (k % 64));
                }
                if inter != 0 {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                found.push(k);
            }
        }
        if found.len() == 1 {
            Ok(found[0])
        } else {
            Err(LatticeError::NotLattice {
                context,
                a: self.elements[a].to_string(),
                b: self.elements[b].to_string(),
                candidates: found
                    .into_iter()
                    .map(|k| self.elements[k].to_string())
                    .collect(),
            })
        }
    }

    /// Index of the least upper bound of elements i and j.
    pub fn join_idx(&self, i: usize, j: usize) -> Result<usize, LatticeError> {
        let words = self.up.words;
        let common: Vec<u64> = (0..words)
            .map(|w| self.up.row(i)[w] & self.up.row(j)[w])
            .collect();
        self.unique_extremum(&common, &self.down, "join", i, j)
    }

    /// Index of the greatest lower bound of elements i and j.
    pub fn meet_idx(&self, i: usize, j: usize) -> Result<usize, LatticeError> {
        let words = self.up.words;
        let common: Vec<u64> = (0..words)
            .map(|w| self.down.row(i)[w] & self.down.row(j)[w])
            .collect();
        self.unique_extremum(&common, &self.up, "meet", i, j)
    }

    pub fn join(&self, a: &E, b: &E) -> Result<E, LatticeError> {
        let k = self.join_idx(self.require_index(a)?, self.require_index(b)?)?;
        Ok(self.elements[k].clone())
    }

    pub fn meet(&self, a: &E, b: &E) -> Result<E, LatticeError> {
        let k = self.meet_idx(self.require_index(a)?, self.require_index(b)?)?;
        Ok(self.elements[k].clone())
    }

    fn join_many(&self, indices: &[usize]) -> Result<usize, LatticeError> {
        let mut it = indices.iter().copied();
        let first = it.next().expect("join of an empty set");
        it.try_fold(first, |acc, k| self.join_idx(acc, k))
    }

    /// The principal chain: start at the join of all minimal elements, then
    /// repeatedly move to the join of the covers of the current element,
    /// stopping at the maximum.
    pub fn principal_chain(&self) -> Result<PrincipalChain<E>, LatticeError> {
        let mins = self.minimal_element_indices();
        let mut cur = self.join_many(&mins)?;
        let mut chain_idx = vec![cur];
        loop {
            let covs: Vec<usize> = self
                .cover_indices(cur)
                .iter()
                .map(|&j| j as usize)
                .collect();
            if covs.is_empty() {
                break;
            }
            cur = self.join_many(&covs)?;
            chain_idx.push(cur);
        }
        Ok(PrincipalChain {
            elements: chain_idx
                .into_iter()
                .map(|i| self.elements[i].clone())
                .collect(),
        })
    }

    /// Verify reflexivity, antisymmetry and transitivity of the stored order.
    pub fn check_partial_order(&self) -> Result<(), String> {
        let n = self.len();
        for i in 0..n {
            if !self.leq_idx(i, i) {
                return Err(format!("not reflexive at {}", self.elements[i]));
            }
            for j in 0..n {
                if i != j && self.leq_idx(i, j) && self.leq_idx(j, i) {
                    return Err(format!(
                        "not antisymmetric at {}, {}",
                        self.elements[i], self.elements[j]
                    ));
                }
            }
        }
        for i in 0..n {
            for j in iter_bits(self.up.row(i), n) {
                for k in iter_bits(self.up.row(j), n) {
                    if !self.leq_idx(i, k) {
                        return Err(format!(
                            "not transitive at {}, {}, {}",
                            self.elements[i], self.elements[j], self.elements[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A saturated chain of lattice elements from bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalChain<E> {
    elements: Vec<E>,
}

impl<E> PrincipalChain<E> {
    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The lattice I(d,n) of strictly increasing d-tuples in 1..=n under the
/// componentwise order.
pub fn build_idn(d: u32, n: u32) -> Result<FinitePoset<TupleElement>, LatticeError> {
    if d == 0 || d > n {
        return Err(LatticeError::InvalidTuple {
            entries: vec![],
            ambient: n,
        });
    }
    let elements: Vec<TupleElement> = (1..=n)
        .combinations(d as usize)
        .map(|entries| TupleElement::new(entries, n).expect("combinations are increasing"))
        .collect();
    Ok(FinitePoset::from_order(
        PosetKind::TupleLattice,
        elements,
        TupleElement::leq,
    ))
}

/// The union of the blocks I(d_i, n) for the given block sizes, under the
/// cross-length order (shorter tuples higher).
pub fn build_young(spec: &YoungLatticeSpec) -> FinitePoset<TupleElement> {
    let n = spec.n();
    let elements: Vec<TupleElement> = spec
        .ds()
        .iter()
        .flat_map(|&d| {
            (1..=n)
                .combinations(d as usize)
                .map(move |entries| TupleElement::new(entries, n).expect("increasing"))
        })
        .collect();
    FinitePoset::from_order(PosetKind::TupleLattice, elements, TupleElement::leq)
}

/// Closed-form successor along the principal chain of I(d,n): add 1 to every
/// entry that sits before a gap. Equals the join of all covers.
pub fn fast_successor_idn(x: &TupleElement) -> Result<TupleElement, LatticeError> {
    if x.is_block_maximum() {
        return Err(LatticeError::MaximalElement {
            element: x.to_string(),
        });
    }
    let n = x.ambient();
    let a = x.entries();
    let entries: Vec<u32> = a
        .iter()
        .enumerate()
        .map(|(k, &e)| {
            let blocked = e == n || a.get(k + 1).is_some_and(|&next| next == e + 1);
            if blocked {
                e
            } else {
                e + 1
            }
        })
        .collect();
    TupleElement::new(entries, n)
}

/// Closed-form successor along the principal chain of the block union: the
/// in-block rule of [`fast_successor_idn`], except that when the trailing
/// entries beyond the next-shorter block size are pinned at their maxima the
/// tuple is truncated to that length first, still bumping entries that
/// preceded a gap in the original tuple.
pub fn fast_successor_young(
    x: &TupleElement,
    spec: &YoungLatticeSpec,
) -> Result<TupleElement, LatticeError> {
    let n = spec.n();
    if x.ambient() != n {
        return Err(LatticeError::NotInPoset {
            element: x.to_string(),
        });
    }
    let ds = spec.ds();
    let len = x.len();
    let block = ds
        .iter()
        .position(|&d| d as usize == len)
        .ok_or_else(|| LatticeError::LengthNotABlock {
            len,
            ds: ds.to_vec(),
        })?;
    let a = x.entries();
    if block > 0 {
        let shorter = ds[block - 1] as usize;
        let pinned = (shorter..len).all(|k| a[k] == n - len as u32 + k as u32 + 1);
        if pinned {
            let entries: Vec<u32> = (0..shorter)
                .map(|k| {
                    let blocked = a[k] == n || a[k + 1] == a[k] + 1;
                    if blocked {
                        a[k]
                    } else {
                        a[k] + 1
                    }
                })
                .collect();
            return TupleElement::new(entries, n);
        }
    }
    if x.is_block_maximum() {
        // only reachable in the shortest block; longer blocks transition out
        return Err(LatticeError::MaximalElement {
            element: x.to_string(),
        });
    }
    fast_successor_idn(x)
}

/// The tuple model of a minuscule lattice. Supported: type A at any node
/// (the lattice I(d, rank+1)); type B at the spin node d = rank; type D at
/// d = rank, and at d = rank-1 via the lattice isomorphism with d = rank.
pub fn build_minuscule_tuple(
    family: Family,
    rank: usize,
    d: usize,
) -> Result<FinitePoset<TupleElement>, LatticeError> {
    match family {
        Family::A if (1..=rank).contains(&d) => build_idn(d as u32, rank as u32 + 1),
        Family::B if d == rank => {
            // m-tuples in 1..=2m+2 containing exactly one of {j, 2m+2-j}
            // for each j = 1..=m; the values m+1 and 2m+2 never occur.
            let m = rank as u32;
            let ambient = 2 * m + 2;
            let elements = pair_choice_tuples(m, ambient, None);
            Ok(FinitePoset::from_order(
                PosetKind::TupleLattice,
                elements,
                TupleElement::leq,
            ))
        }
        Family::D if d == rank || d + 1 == rank => {
            // m-tuples in 1..=2m containing exactly one of {j, 2m+1-j} for
            // each j = 1..=m, with an even number of entries above m. The
            // node rank-1 yields an isomorphic lattice and is served by the
            // same model.
            let m = rank as u32;
            let ambient = 2 * m;
            let elements = pair_choice_tuples(m, ambient, Some(m));
            Ok(FinitePoset::from_order(
                PosetKind::TupleLattice,
                elements,
                TupleElement::leq,
            ))
        }
        _ => Err(LatticeError::UnsupportedTupleModel { family, rank, d }),
    }
}

/// Tuples selecting one member from each pair {j, ambient+1-j}, j = 1..=m,
/// optionally restricted to an even number of picks above `parity_bound`.
fn pair_choice_tuples(m: u32, ambient: u32, parity_bound: Option<u32>) -> Vec<TupleElement> {
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0u32..(1 << m) {
        let mut entries: Vec<u32> = (1..=m)
            .map(|j| {
                if mask & (1 << (j - 1)) != 0 {
                    ambient + 1 - j
                } else {
                    j
                }
            })
            .collect();
        if let Some(bound) = parity_bound {
            let uppers = entries.iter().filter(|&&e| e > bound).count();
            if uppers % 2 != 0 {
                continue;
            }
        }
        entries.sort_unstable();
        out.push(TupleElement::new(entries, ambient).expect("pair picks are distinct"));
    }
    out
}

/// The weight model of a minuscule lattice: the Weyl orbit of the minuscule
/// fundamental weight at node d, ordered by "difference is a nonnegative
/// integer combination of simple roots".
pub fn build_minuscule_weight_poset(
    rs: &RootSystem,
    d: usize,
) -> Result<FinitePoset<WeightVector>, LatticeError> {
    let orbit = rs.weyl_orbit(d)?;
    let inv = invert_rational(rs.cartan().rows());
    let rank = rs.rank();
    let leq = move |a: &WeightVector, b: &WeightVector| -> bool {
        // a <= b iff b - a expands over the simple roots with nonnegative
        // integer coefficients; the expansion is inv * (b - a).
        (0..rank).all(|i| {
            let c: Rational64 = (0..rank)
                .map(|j| inv[i][j] * Rational64::from_integer(b.coeffs()[j] - a.coeffs()[j]))
                .sum();
            !c.is_negative() && c.is_integer()
        })
    };
    Ok(FinitePoset::from_order(PosetKind::WeightOrbit, orbit, leq))
}

/// Exact inverse of a small integer matrix via Gauss-Jordan elimination.
fn invert_rational(rows: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Rational64>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> =
                row.iter().map(|&v| Rational64::from_integer(v)).collect();
            r.extend((0..n).map(|j| {
                Rational64::from_integer(if i == j { 1 } else { 0 })
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("Cartan matrices are invertible");
        aug.swap(col, pivot);
        let p = aug[col][col];
        for v in aug[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col];
                for c in 0..2 * n {
                    let sub = factor * aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}
