//! Exact Euclidean realizations of the nine irreducible root systems, used
//! as an independent cross-check of the Cartan-matrix computations.
//!
//! Arithmetic is exact in Q(sqrt(k)): every coordinate is a + b*sqrt(k) with
//! rational a, b. The quadratic parameter k is 3 for G2 and E6, 2 for E7,
//! and 1 (with b always 0) everywhere else.

use num_rational::Rational64;
use num_traits::Zero;

use flagfpt::root_system::{Family, RootSystem};

/// One coordinate: a + b*sqrt(k), exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Surd {
    pub a: Rational64,
    pub b: Rational64,
    pub k: i64,
}

impl Surd {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(self, o: Surd) -> Surd {
        assert_eq!(self.k, o.k, "mixed quadratic fields");
        Surd {
            a: self.a + o.a,
            b: self.b + o.b,
            k: self.k,
        }
    }

    pub fn mul(self, o: Surd) -> Surd {
        assert_eq!(self.k, o.k, "mixed quadratic fields");
        Surd {
            a: self.a * o.a + self.b * o.b * Rational64::from_integer(self.k),
            b: self.a * o.b + self.b * o.a,
            k: self.k,
        }
    }

    pub fn scale(self, r: Rational64) -> Surd {
        Surd {
            a: self.a * r,
            b: self.b * r,
            k: self.k,
        }
    }

    /// The value as a rational; panics if the sqrt(k) part is present.
    pub fn expect_rational(self) -> Rational64 {
        assert!(
            self.b.is_zero() || self.k == 1,
            "expected a rational value, got {:?}",
            self
        );
        if self.k == 1 {
            // with k = 1 the surd part is literally b
            self.a + self.b
        } else {
            self.a
        }
    }
}

/// Coordinate factory bound to one quadratic field.
#[derive(Debug, Clone, Copy)]
pub struct Coords {
    pub k: i64,
}

impl Coords {
    pub fn zero(&self) -> Surd {
        Surd {
            a: Rational64::zero(),
            b: Rational64::zero(),
            k: self.k,
        }
    }

    pub fn rat(&self, n: i64, d: i64) -> Surd {
        Surd {
            a: Rational64::new(n, d),
            b: Rational64::zero(),
            k: self.k,
        }
    }

    /// (n/d) * sqrt(k)
    pub fn surd(&self, n: i64, d: i64) -> Surd {
        Surd {
            a: Rational64::zero(),
            b: Rational64::new(n, d),
            k: self.k,
        }
    }

    pub fn zeros(&self, dim: usize) -> Vec<Surd> {
        vec![self.zero(); dim]
    }
}

pub fn dot(u: &[Surd], v: &[Surd]) -> Surd {
    assert_eq!(u.len(), v.len());
    let mut acc = Surd {
        a: Rational64::zero(),
        b: Rational64::zero(),
        k: u[0].k,
    };
    for (x, y) in u.iter().zip(v) {
        acc = acc.add(x.mul(*y));
    }
    acc
}

pub fn vec_add(u: &[Surd], v: &[Surd]) -> Vec<Surd> {
    u.iter().zip(v).map(|(x, y)| x.add(*y)).collect()
}

pub fn vec_scale(u: &[Surd], r: Rational64) -> Vec<Surd> {
    u.iter().map(|x| x.scale(r)).collect()
}

/// 2 (v, alpha) / (alpha, alpha) — the coefficient of v against the coroot
/// of alpha. Must come out rational.
pub fn pairing(v: &[Surd], alpha: &[Surd]) -> Rational64 {
    let num = dot(v, alpha).scale(Rational64::from_integer(2));
    let den = dot(alpha, alpha).expect_rational();
    num.scale(den.recip()).expect_rational()
}

/// A root system realized by explicit Euclidean vectors.
pub struct Realization {
    pub coords: Coords,
    pub dim: usize,
    pub positive_roots: Vec<Vec<Surd>>,
    pub simple_roots: Vec<Vec<Surd>>,
    pub fundamental_weights: Vec<Vec<Surd>>,
}

/// e_i as a coordinate vector (1-based i).
fn unit(c: &Coords, dim: usize, i: usize) -> Vec<Surd> {
    let mut v = c.zeros(dim);
    v[i - 1] = c.rat(1, 1);
    v
}

fn unit_diff(c: &Coords, dim: usize, i: usize, j: usize) -> Vec<Surd> {
    let mut v = c.zeros(dim);
    v[i - 1] = c.rat(1, 1);
    v[j - 1] = c.rat(-1, 1);
    v
}

fn unit_sum(c: &Coords, dim: usize, i: usize, j: usize) -> Vec<Surd> {
    let mut v = c.zeros(dim);
    v[i - 1] = c.rat(1, 1);
    v[j - 1] = c.rat(1, 1);
    v
}

fn partial_sum(c: &Coords, dim: usize, upto: usize) -> Vec<Surd> {
    let mut v = c.zeros(dim);
    for x in v.iter_mut().take(upto) {
        *x = c.rat(1, 1);
    }
    v
}

pub fn realization(family: Family, rank: usize) -> Realization {
    match family {
        Family::A => {
            let c = Coords { k: 1 };
            let n = rank + 1;
            let mut positive_roots = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    positive_roots.push(unit_diff(&c, n, i, j));
                }
            }
            let simple_roots: Vec<_> =
                (1..=rank).map(|i| unit_diff(&c, n, i, i + 1)).collect();
            let fundamental_weights: Vec<_> =
                (1..=rank).map(|i| partial_sum(&c, n, i)).collect();
            Realization {
                coords: c,
                dim: n,
                positive_roots,
                simple_roots,
                fundamental_weights,
            }
        }
        Family::B => {
            let c = Coords { k: 1 };
            let n = rank;
            let mut positive_roots = Vec::new();
            for i in 1..=n {
                positive_roots.push(unit(&c, n, i));
                for j in i + 1..=n {
                    positive_roots.push(unit_diff(&c, n, i, j));
                    positive_roots.push(unit_sum(&c, n, i, j));
                }
            }
            let mut simple_roots: Vec<_> =
                (1..n).map(|i| unit_diff(&c, n, i, i + 1)).collect();
            simple_roots.push(unit(&c, n, n));
            let mut fundamental_weights: Vec<_> =
                (1..n).map(|i| partial_sum(&c, n, i)).collect();
            fundamental_weights.push(vec_scale(&partial_sum(&c, n, n), Rational64::new(1, 2)));
            Realization {
                coords: c,
                dim: n,
                positive_roots,
                simple_roots,
                fundamental_weights,
            }
        }
        Family::C => {
            let c = Coords { k: 1 };
            let n = rank;
            let mut positive_roots = Vec::new();
            for i in 1..=n {
                positive_roots.push(vec_scale(&unit(&c, n, i), Rational64::from_integer(2)));
                for j in i + 1..=n {
                    positive_roots.push(unit_diff(&c, n, i, j));
                    positive_roots.push(unit_sum(&c, n, i, j));
                }
            }
            let mut simple_roots: Vec<_> =
                (1..n).map(|i| unit_diff(&c, n, i, i + 1)).collect();
            simple_roots.push(vec_scale(&unit(&c, n, n), Rational64::from_integer(2)));
            let fundamental_weights: Vec<_> =
                (1..=n).map(|i| partial_sum(&c, n, i)).collect();
            Realization {
                coords: c,
                dim: n,
                positive_roots,
                simple_roots,
                fundamental_weights,
            }
        }
        Family::D => {
            let c = Coords { k: 1 };
            let n = rank;
            let mut positive_roots = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    positive_roots.push(unit_diff(&c, n, i, j));
                    positive_roots.push(unit_sum(&c, n, i, j));
                }
            }
            let mut simple_roots: Vec<_> =
                (1..n).map(|i| unit_diff(&c, n, i, i + 1)).collect();
            simple_roots.push(unit_sum(&c, n, n - 1, n));
            let mut fundamental_weights: Vec<_> =
                (1..=n - 2).map(|i| partial_sum(&c, n, i)).collect();
            let half = Rational64::new(1, 2);
            let mut wm = partial_sum(&c, n, n);
            wm[n - 1] = c.rat(-1, 1);
            fundamental_weights.push(vec_scale(&wm, half));
            fundamental_weights.push(vec_scale(&partial_sum(&c, n, n), half));
            Realization {
                coords: c,
                dim: n,
                positive_roots,
                simple_roots,
                fundamental_weights,
            }
        }
        Family::G => {
            let c = Coords { k: 3 };
            // short roots have squared length 1, long roots 3; the middle
            // entries are (+-1/2, sqrt(3)/2) — forced by closure under the
            // simple reflections
            let positive_roots = vec![
                vec![c.rat(1, 1), c.zero()],
                vec![c.zero(), c.surd(1, 1)],
                vec![c.rat(1, 2), c.surd(1, 2)],
                vec![c.rat(-1, 2), c.surd(1, 2)],
                vec![c.rat(3, 2), c.surd(1, 2)],
                vec![c.rat(-3, 2), c.surd(1, 2)],
            ];
            let simple_roots = vec![
                vec![c.rat(1, 1), c.zero()],
                vec![c.rat(-3, 2), c.surd(1, 2)],
            ];
            let fundamental_weights = vec![
                vec![c.rat(1, 2), c.surd(1, 2)],
                vec![c.zero(), c.surd(1, 1)],
            ];
            Realization {
                coords: c,
                dim: 2,
                positive_roots,
                simple_roots,
                fundamental_weights,
            }
        }
        Family::F => {
            let c = Coords { k: 1 };
            let mut positive_roots = Vec::new();
            for i in 1..=4 {
                positive_roots.push(unit(&c, 4, i));
                for j in i + 1..=4 {
                    positive_roots.push(unit_diff(&c, 4, i, j));
                    positive_roots.push(unit_sum(&c, 4, i, j));
                }
            }
            for mask in 0u32..8 {
                let mut v = c.zeros(4);
                v[0] = c.rat(1, 2);
                for t in 0..3 {
                    v[t + 1] = if mask & (1 << t) != 0 {
                        c.rat(-1, 2)
                    } else {
                        c.rat(1, 2)
                    };
                }
                positive_roots.push(v);
            }
            let simple_roots = vec![
                unit_diff(&c, 4, 2, 3),
                unit_diff(&c, 4, 3, 4),
                unit(&c, 4, 4),
                vec![c.rat(1, 2), c.rat(-1, 2), c.rat(-1, 2), c.rat(-1, 2)],
            ];
            let fundamental_weights = vec![
                unit_sum(&c, 4, 1, 2),
                vec![c.rat(2, 1), c.rat(1, 1), c.rat(1, 1), c.zero()],
                vec![c.rat(3, 2), c.rat(1, 2), c.rat(1, 2), c.rat(1, 2)],
                unit(&c, 4, 1),
            ];
            Realization {
                coords: c,
                dim: 4,
                positive_roots,
                simple_roots,
                fundamental_weights,
            }
        }
        Family::E => match rank {
            6 => realization_e6(),
            7 => realization_e7(),
            8 => realization_e8(),
            _ => panic!("E rank {rank}"),
        },
    }
}

fn realization_e6() -> Realization {
    let c = Coords { k: 3 };
    let dim = 6;
    let mut positive_roots = Vec::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            positive_roots.push(unit_sum(&c, dim, i, j));
            positive_roots.push(unit_diff(&c, dim, j, i));
        }
    }
    // (±e1 ± … ± e5 + sqrt(3) e6)/2, even number of minus signs
    for mask in 0u32..32 {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let mut v = c.zeros(dim);
        for t in 0..5 {
            v[t] = if mask & (1 << t) != 0 {
                c.rat(-1, 2)
            } else {
                c.rat(1, 2)
            };
        }
        v[5] = c.surd(1, 2);
        positive_roots.push(v);
    }
    let mut alpha1 = c.zeros(dim);
    alpha1[0] = c.rat(1, 2);
    for t in 1..5 {
        alpha1[t] = c.rat(-1, 2);
    }
    alpha1[5] = c.surd(1, 2);
    let simple_roots = vec![
        alpha1,
        unit_sum(&c, dim, 1, 2),
        unit_diff(&c, dim, 2, 1),
        unit_diff(&c, dim, 3, 2),
        unit_diff(&c, dim, 4, 3),
        unit_diff(&c, dim, 5, 4),
    ];
    let w = |entries: [(i64, i64); 5], s: (i64, i64)| -> Vec<Surd> {
        let mut v: Vec<Surd> = entries.iter().map(|&(n, d)| c.rat(n, d)).collect();
        v.push(c.surd(s.0, s.1));
        v
    };
    let fundamental_weights = vec![
        w([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1)], (2, 3)),
        w([(1, 2), (1, 2), (1, 2), (1, 2), (1, 2)], (1, 2)),
        w([(-1, 2), (1, 2), (1, 2), (1, 2), (1, 2)], (5, 6)),
        w([(0, 1), (0, 1), (1, 1), (1, 1), (1, 1)], (1, 1)),
        w([(0, 1), (0, 1), (0, 1), (1, 1), (1, 1)], (2, 3)),
        w([(0, 1), (0, 1), (0, 1), (0, 1), (1, 1)], (1, 3)),
    ];
    Realization {
        coords: c,
        dim,
        positive_roots,
        simple_roots,
        fundamental_weights,
    }
}

fn realization_e7() -> Realization {
    let c = Coords { k: 2 };
    let dim = 7;
    let mut positive_roots = Vec::new();
    for i in 1..=6 {
        for j in i + 1..=6 {
            positive_roots.push(unit_sum(&c, dim, i, j));
            positive_roots.push(unit_diff(&c, dim, j, i));
        }
    }
    let mut top = c.zeros(dim);
    top[6] = c.surd(1, 1);
    positive_roots.push(top);
    // (±e1 ± … ± e6 + sqrt(2) e7)/2, odd number of minus signs
    for mask in 0u32..64 {
        if mask.count_ones() % 2 != 1 {
            continue;
        }
        let mut v = c.zeros(dim);
        for t in 0..6 {
            v[t] = if mask & (1 << t) != 0 {
                c.rat(-1, 2)
            } else {
                c.rat(1, 2)
            };
        }
        v[6] = c.surd(1, 2);
        positive_roots.push(v);
    }
    let mut alpha1 = c.zeros(dim);
    alpha1[0] = c.rat(1, 2);
    for t in 1..6 {
        alpha1[t] = c.rat(-1, 2);
    }
    alpha1[6] = c.surd(1, 2);
    let simple_roots = vec![
        alpha1,
        unit_sum(&c, dim, 1, 2),
        unit_diff(&c, dim, 2, 1),
        unit_diff(&c, dim, 3, 2),
        unit_diff(&c, dim, 4, 3),
        unit_diff(&c, dim, 5, 4),
        unit_diff(&c, dim, 6, 5),
    ];
    let w = |entries: [(i64, i64); 6], s: (i64, i64)| -> Vec<Surd> {
        let mut v: Vec<Surd> = entries.iter().map(|&(n, d)| c.rat(n, d)).collect();
        v.push(c.surd(s.0, s.1));
        v
    };
    let fundamental_weights = vec![
        w([(0, 1); 6], (1, 1)),
        w([(1, 2); 6], (1, 1)),
        w([(-1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2)], (3, 2)),
        w([(0, 1), (0, 1), (1, 1), (1, 1), (1, 1), (1, 1)], (2, 1)),
        w([(0, 1), (0, 1), (0, 1), (1, 1), (1, 1), (1, 1)], (3, 2)),
        w([(0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (1, 1)], (1, 1)),
        w([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1)], (1, 2)),
    ];
    Realization {
        coords: c,
        dim,
        positive_roots,
        simple_roots,
        fundamental_weights,
    }
}

fn realization_e8() -> Realization {
    let c = Coords { k: 1 };
    let dim = 8;
    let mut positive_roots = Vec::new();
    for i in 1..=8 {
        for j in i + 1..=8 {
            positive_roots.push(unit_sum(&c, dim, i, j));
            positive_roots.push(unit_diff(&c, dim, j, i));
        }
    }
    // (±e1 ± … ± e7 + e8)/2, even number of minus signs
    for mask in 0u32..128 {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let mut v = c.zeros(dim);
        for t in 0..7 {
            v[t] = if mask & (1 << t) != 0 {
                c.rat(-1, 2)
            } else {
                c.rat(1, 2)
            };
        }
        v[7] = c.rat(1, 2);
        positive_roots.push(v);
    }
    let mut alpha1 = c.zeros(dim);
    alpha1[0] = c.rat(1, 2);
    for t in 1..7 {
        alpha1[t] = c.rat(-1, 2);
    }
    alpha1[7] = c.rat(1, 2);
    let simple_roots = vec![
        alpha1,
        unit_sum(&c, dim, 1, 2),
        unit_diff(&c, dim, 2, 1),
        unit_diff(&c, dim, 3, 2),
        unit_diff(&c, dim, 4, 3),
        unit_diff(&c, dim, 5, 4),
        unit_diff(&c, dim, 6, 5),
        unit_diff(&c, dim, 7, 6),
    ];
    let w = |entries: [(i64, i64); 8]| -> Vec<Surd> {
        entries.iter().map(|&(n, d)| c.rat(n, d)).collect()
    };
    let fundamental_weights = vec![
        w([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (2, 1)]),
        w([(1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (5, 2)]),
        w([(-1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (7, 2)]),
        w([(0, 1), (0, 1), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (5, 1)]),
        w([(0, 1), (0, 1), (0, 1), (1, 1), (1, 1), (1, 1), (1, 1), (4, 1)]),
        w([(0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (1, 1), (1, 1), (3, 1)]),
        w([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (1, 1), (2, 1)]),
        w([(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (1, 1)]),
    ];
    Realization {
        coords: c,
        dim,
        positive_roots,
        simple_roots,
        fundamental_weights,
    }
}

impl Realization {
    /// Verify ⟨ϖ_i, α_j^∨⟩ = δ_ij.
    pub fn check_weight_duality(&self) -> Result<(), String> {
        for (i, w) in self.fundamental_weights.iter().enumerate() {
            for (j, a) in self.simple_roots.iter().enumerate() {
                let p = pairing(w, a);
                let expect = Rational64::from_integer((i == j) as i64);
                if p != expect {
                    return Err(format!(
                        "weight {} against coroot {}: got {p}, want {expect}",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        Ok(())
    }

    /// Verify the listed positive roots are exactly the abstract enumeration
    /// mapped through the simple-root vectors.
    pub fn check_matches_abstract(&self, rs: &RootSystem) -> Result<(), String> {
        if rs.positive_roots().len() != self.positive_roots.len() {
            return Err(format!(
                "count mismatch: abstract {}, listed {}",
                rs.positive_roots().len(),
                self.positive_roots.len()
            ));
        }
        let mut mapped: Vec<Vec<Surd>> = rs
            .positive_roots()
            .iter()
            .map(|root| {
                let mut v = self.coords.zeros(self.dim);
                for i in 1..=rs.rank() {
                    let coeff = Rational64::from_integer(root.coeff(i));
                    v = vec_add(&v, &vec_scale(&self.simple_roots[i - 1], coeff));
                }
                v
            })
            .collect();
        let mut listed = self.positive_roots.clone();
        mapped.sort();
        listed.sort();
        if mapped != listed {
            return Err("root sets differ".into());
        }
        Ok(())
    }

    /// Sum of the positive roots with nonzero inner product against ϖ_d,
    /// returned as coefficients against every coroot.
    pub fn two_rho_coeffs(&self, d: usize) -> Vec<Rational64> {
        let w = &self.fundamental_weights[d - 1];
        let mut sum = self.coords.zeros(self.dim);
        for beta in &self.positive_roots {
            if !dot(w, beta).is_zero() {
                sum = vec_add(&sum, beta);
            }
        }
        self.simple_roots
            .iter()
            .map(|alpha| pairing(&sum, alpha))
            .collect()
    }
}
