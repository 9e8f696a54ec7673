//! Finite root systems over the simple-root basis: Cartan matrices (Bourbaki
//! node numbering), positive-root enumeration via root strings, coroot
//! pairings, Levi subsystems and the anticanonical weight of a parabolic,
//! minuscule fundamental weights, and Weyl orbits.
//!
//! Convention used throughout: `cartan[i][j] = <alpha_j, alpha_i^vee>`, i.e.
//! the row index names the coroot. Simple-root indices in the public API are
//! 1-based Dynkin node names.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// The seven Cartan-Killing families. `E`, `F`, `G` carry their rank in
/// [`RootSystemType`], so `E` covers E6/E7/E8, `F` only F4, `G` only G2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(RootSystemError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("unknown family {0:?} (expected one of A,B,C,D,E,F,G)")]
    UnknownFamily(String),
    #[error("rank {rank} is not valid for type {family} ({constraint})")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("removed set must be nonempty: the parabolic must be proper")]
    EmptyParabolic,
    #[error("fundamental weight {d} of {family}{rank} is not minuscule")]
    NotMinuscule {
        family: Family,
        rank: usize,
        d: usize,
    },
}

/// A validated irreducible type, e.g. `A` of rank 6 (the group SL_7).
/// The rank is always the Lie rank of the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let constraint: &'static str = match family {
            Family::A => {
                if rank >= 1 {
                    return Ok(Self { family, rank });
                }
                "rank >= 1"
            }
            Family::B | Family::C => {
                if rank >= 2 {
                    return Ok(Self { family, rank });
                }
                "rank >= 2"
            }
            Family::D => {
                if rank >= 3 {
                    return Ok(Self { family, rank });
                }
                "rank >= 3"
            }
            Family::E => {
                if (6..=8).contains(&rank) {
                    return Ok(Self { family, rank });
                }
                "rank in {6,7,8}"
            }
            Family::F => {
                if rank == 4 {
                    return Ok(Self { family, rank });
                }
                "rank = 4"
            }
            Family::G => {
                if rank == 2 {
                    return Ok(Self { family, rank });
                }
                "rank = 2"
            }
        };
        Err(RootSystemError::InvalidRank {
            family,
            rank,
            constraint,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, by the classical count for each family.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Indices d for which the fundamental weight is minuscule.
    pub fn minuscule_indices(&self) -> BTreeSet<usize> {
        let n = self.rank;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::B => [n].into_iter().collect(),
            Family::C => [1].into_iter().collect(),
            Family::D => [1, n - 1, n].into_iter().collect(),
            Family::E => match n {
                6 => [1, 6].into_iter().collect(),
                7 => [7].into_iter().collect(),
                _ => BTreeSet::new(),
            },
            Family::F | Family::G => BTreeSet::new(),
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A set of removed simple-root indices, defining the parabolic subgroup Q:
/// Q corresponds to the complement I of `removed` in the node set.
/// Nonempty (Q is a proper subgroup); `removed` = all nodes means Q = B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSpec {
    removed: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new(
        removed: impl IntoIterator<Item = usize>,
        rank: usize,
    ) -> Result<Self, RootSystemError> {
        let removed: BTreeSet<usize> = removed.into_iter().collect();
        if removed.is_empty() {
            return Err(RootSystemError::EmptyParabolic);
        }
        for &d in &removed {
            if d == 0 || d > rank {
                return Err(RootSystemError::IndexOutOfRange {
                    index: d,
                    rank,
                });
            }
        }
        Ok(Self { removed })
    }

    pub fn removed(&self) -> &BTreeSet<usize> {
        &self.removed
    }

    pub fn is_maximal(&self) -> bool {
        self.removed.len() == 1
    }

    /// The single removed index, if the parabolic is maximal.
    pub fn single_removed(&self) -> Option<usize> {
        if self.is_maximal() {
            self.removed.iter().next().copied()
        } else {
            None
        }
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, d) in self.removed.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// Cartan matrix with `entry(i, j) = <alpha_j, alpha_i^vee>` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// The Cartan matrix of the given type under Bourbaki node numbering.
    pub fn standard(ty: RootSystemType) -> Self {
        let r = ty.rank();
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |i: usize, j: usize, a: &mut Vec<Vec<i64>>| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match ty.family() {
            Family::A => {
                for i in 0..r - 1 {
                    link(i, i + 1, &mut a);
                }
            }
            Family::B => {
                for i in 0..r - 1 {
                    link(i, i + 1, &mut a);
                }
                // node r is the short root: <alpha_{r-1}, alpha_r^vee> = -2
                a[r - 1][r - 2] = -2;
            }
            Family::C => {
                for i in 0..r - 1 {
                    link(i, i + 1, &mut a);
                }
                // node r is the long root: <alpha_r, alpha_{r-1}^vee> = -2
                a[r - 2][r - 1] = -2;
            }
            Family::D => {
                for i in 0..r - 2 {
                    link(i, i + 1, &mut a);
                }
                link(r - 3, r - 1, &mut a);
            }
            Family::E => {
                link(0, 2, &mut a);
                link(1, 3, &mut a);
                for i in 2..r - 1 {
                    link(i, i + 1, &mut a);
                }
            }
            Family::F => {
                link(0, 1, &mut a);
                link(1, 2, &mut a);
                link(2, 3, &mut a);
                // nodes 3,4 are short: <alpha_2, alpha_3^vee> = -2
                a[2][1] = -2;
            }
            Family::G => {
                // node 1 short, node 2 long: <alpha_2, alpha_1^vee> = -3
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        Self { rank: r, entries: a }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `<alpha_j, alpha_i^vee>`, with 1-based node indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// A root written in the simple-root basis: `coords()[k]` is the coefficient
/// of alpha_{k+1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coefficient of alpha_i (1-based).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }

    /// True when every removed index has coefficient zero, i.e. the support
    /// of the root avoids `removed`.
    pub fn supported_away_from(&self, removed: &BTreeSet<usize>) -> bool {
        removed.iter().all(|&d| self.coords[d - 1] == 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A weight in the fundamental-weight basis: `coeffs()[k]` is the coefficient
/// of the fundamental weight at node k+1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    coeffs: Vec<i64>,
}

impl WeightVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self { coeffs }
    }

    /// The fundamental weight at node d (1-based), in a system of given rank.
    pub fn fundamental(rank: usize, d: usize) -> Self {
        let mut coeffs = vec![0i64; rank];
        coeffs[d - 1] = 1;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient at node i (1-based).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An irreducible root system with its Cartan matrix and the full list of
/// positive roots (ordered by ascending height, then lexicographically).
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: RootSystemType,
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(ty: RootSystemType) -> Self {
        let cartan = CartanMatrix::standard(ty);
        let positive_roots = enumerate_positive_roots(&cartan);
        Self {
            ty,
            cartan,
            positive_roots,
        }
    }

    pub fn ty(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `<v, alpha_i^vee>` for v = sum of `coords[j] * alpha_{j+1}` (i 1-based).
    pub fn pairing(&self, coords: &[i64], i: usize) -> i64 {
        let row = &self.cartan.entries[i - 1];
        coords.iter().zip(row).map(|(c, a)| c * a).sum()
    }

    /// Positive roots of the Levi subgroup of the parabolic: those whose
    /// support avoids every removed index.
    pub fn levi_positive_roots(&self, parab: &ParabolicSpec) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| r.supported_away_from(parab.removed()))
            .cloned()
            .collect()
    }

    /// The anticanonical weight of G/Q: the sum of all positive roots outside
    /// the Levi subsystem, expressed in the fundamental-weight basis. Its
    /// coefficients vanish exactly at the retained nodes, so for a maximal
    /// parabolic it is a positive multiple of a single fundamental weight.
    pub fn two_rho(&self, parab: &ParabolicSpec) -> WeightVector {
        let rank = self.rank();
        let mut sum = vec![0i64; rank];
        for root in &self.positive_roots {
            if !root.supported_away_from(parab.removed()) {
                for (s, c) in sum.iter_mut().zip(root.coords()) {
                    *s += c;
                }
            }
        }
        let coeffs = (1..=rank).map(|i| self.pairing(&sum, i)).collect();
        WeightVector::new(coeffs)
    }

    /// The simple root alpha_i written in the fundamental-weight basis:
    /// column i of the Cartan matrix.
    pub fn simple_root_as_weight(&self, i: usize) -> WeightVector {
        let coeffs = (0..self.rank())
            .map(|j| self.cartan.entries[j][i - 1])
            .collect();
        WeightVector::new(coeffs)
    }

    /// The Weyl orbit of the fundamental weight at node d, which must be
    /// minuscule. Returned sorted for reproducibility.
    pub fn weyl_orbit(&self, d: usize) -> Result<Vec<WeightVector>, RootSystemError> {
        let rank = self.rank();
        if d == 0 || d > rank {
            return Err(RootSystemError::IndexOutOfRange { index: d, rank });
        }
        if !self.ty.minuscule_indices().contains(&d) {
            return Err(RootSystemError::NotMinuscule {
                family: self.ty.family(),
                rank,
                d,
            });
        }
        let columns: Vec<Vec<i64>> = (1..=rank)
            .map(|i| self.simple_root_as_weight(i).coeffs().to_vec())
            .collect();
        let start = WeightVector::fundamental(rank, d);
        let mut seen: HashSet<WeightVector> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(w) = queue.pop_front() {
            for i in 0..rank {
                let c = w.coeffs[i];
                if c == 0 {
                    continue;
                }
                let reflected: Vec<i64> = w
                    .coeffs
                    .iter()
                    .zip(&columns[i])
                    .map(|(x, col)| x - c * col)
                    .collect();
                let rw = WeightVector::new(reflected);
                if seen.insert(rw.clone()) {
                    queue.push_back(rw);
                }
            }
        }
        let mut orbit: Vec<WeightVector> = seen.into_iter().collect();
        orbit.sort();
        Ok(orbit)
    }
}

/// Enumerate the positive roots height by height. A root beta extends to
/// beta + alpha_i exactly when the alpha_i-string through beta reaches past
/// it: with p the largest k such that beta - k*alpha_i is a root, the string
/// extends upward q = p - <beta, alpha_i^vee> steps.
fn enumerate_positive_roots(cartan: &CartanMatrix) -> Vec<Root> {
    let rank = cartan.rank();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut current: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut coords = vec![0i64; rank];
        coords[i] = 1;
        all.insert(coords.clone());
        current.push(coords);
    }
    let mut out: Vec<Root> = Vec::new();
    while !current.is_empty() {
        current.sort();
        out.extend(current.iter().cloned().map(|coords| Root { coords }));
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &current {
            for i in 0..rank {
                let pairing: i64 = beta
                    .iter()
                    .zip(&cartan.entries[i])
                    .map(|(c, a)| c * a)
                    .sum();
                let mut p = 0i64;
                let mut gamma = beta.clone();
                loop {
                    gamma[i] -= 1;
                    if gamma[i] < 0 || !all.contains(&gamma) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        current = next;
    }
    out
}
