//! Edge probabilities and expected degrees in the visibility graph of a
//! uniformly random restricted growth sequence of length `n`.
//!
//! Pairs `(i, j)` split into three classes. Adjacent pairs are always strong
//! edges. Pairs `(1, j)` with `j ≥ 3` are never strong edges, since every
//! interior letter is at least the leading 1, and are weak-only exactly when
//! the interior is all ones. All remaining pairs are *interior*; their
//! probabilities are finite sums over the number `t` of blocks opened before
//! position `i`, weighted by `S(i-1, t)` and shifted Dobinski sums
//! `Θ_a(t) = Σ_ℓ C(a,ℓ) t^(a-ℓ) B_ℓ`.
//!
//! With `d = j - i - 1` and `Ψ(x) = Σ_{k=0}^x k^d`, for an interior pair
//!
//! ```text
//! B_n P(strong) = Σ_t S(i-1,t) [ Θ_{n-j+1}(t) Ψ(t-1)
//!                              + Θ_{n-j}(t) Σ_{a≤t} (Ψ(a-1) - a (a-1)^d)
//!                              + Θ_{n-j+1}(t+1) t^d
//!                              + Θ_{n-j}(t+1) (Ψ(t) - (t+1) t^d) ]
//!
//! B_n P(weak, not strong) = Σ_t S(i-1,t) [ Θ_{n-j}(t) (t^d - t^(d+1) + 2 Ψ(t-1))
//!                                        + Θ_{n-j+1}(t) t^d
//!                                        + Θ_{n-j}(t+1) ((t+1) t^d - t (t+1)^d)
//!                                        + Θ_{n-j+1}(t+1) ((t+1)^d - t^d) ]
//! ```
//!
//! Both are certified against exhaustive enumeration in [`oracle`].

pub mod oracle;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::NumberTables;
use crate::hvg::Mode;

pub use oracle::{oracle_edge_prob, OracleTable, DEFAULT_ENUMERATION_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairClass {
    /// `(1, j)` with `j ≥ 3`.
    First,
    /// `(i, i + 1)`.
    Adjacent,
    /// `2 ≤ i`, `j > i + 1`.
    Interior,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            PairClass::First => "FIRST",
            PairClass::Adjacent => "ADJACENT",
            PairClass::Interior => "INTERIOR",
        })
    }
}

pub fn classify_pair(n: usize, i: usize, j: usize) -> Result<PairClass> {
    check_pair(n, i, j)?;
    Ok(if j == i + 1 {
        PairClass::Adjacent
    } else if i == 1 {
        PairClass::First
    } else {
        PairClass::Interior
    })
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    let reason = if i < 1 {
        "i must be at least 1"
    } else if i >= j {
        "i must be smaller than j"
    } else if j > n {
        "j must not exceed n"
    } else {
        return Ok(());
    };
    Err(Error::InvalidPair { n, i, j, reason })
}

/// Which event an [`EdgeProbability`] measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeEvent {
    Strong,
    Weak,
    WeakMinusStrong,
}

impl EdgeEvent {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeEvent::Strong => "strong",
            EdgeEvent::Weak => "weak",
            EdgeEvent::WeakMinusStrong => "weak-minus-strong",
        }
    }
}

impl fmt::Display for EdgeEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl From<Mode> for EdgeEvent {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Strong => EdgeEvent::Strong,
            Mode::Weak => EdgeEvent::Weak,
        }
    }
}

impl std::str::FromStr for EdgeEvent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(EdgeEvent::Strong),
            "weak" => Ok(EdgeEvent::Weak),
            "weak-minus-strong" => Ok(EdgeEvent::WeakMinusStrong),
            other => Err(Error::Parse(format!("unknown edge event {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeProbability {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub event: EdgeEvent,
    pub value: BigRational,
}

impl fmt::Display for EdgeProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Which algebraic reading of the weak-minus-strong interior sum to use.
///
/// `Mutant` uses the index pattern `Θ_{j-i+1}(t)`, `Θ_{j-i}(t+1)`,
/// `Θ_{j-i+1}(t+1)` and the coefficient `-((t-1) t^d + t (t+1)^d)`, a
/// plausible but wrong simplification. It disagrees with enumeration and is
/// kept only so the certification suite can prove it catches such defects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeakInteriorReading {
    #[default]
    Derived,
    Mutant,
}

/// Precomputed integer tables for one `n`: Stirling rows, Bell numbers, the
/// `Θ_a(t)` grid, powers and power sums.
#[derive(Debug, Clone)]
pub struct EdgeModel {
    n: usize,
    reading: WeakInteriorReading,
    tables: Arc<NumberTables>,
    bell: Vec<BigInt>,
    /// `theta[a][t]`, `a ≤ n`, `t ≤ n + 1`.
    theta: Vec<Vec<BigInt>>,
    /// `pow[t][d] = t^d`, `t ≤ n + 1`, `d ≤ n`.
    pow: Vec<Vec<BigInt>>,
}

impl EdgeModel {
    pub fn new(n: usize) -> Self {
        Self::with_reading(n, WeakInteriorReading::Derived)
    }

    pub fn with_reading(n: usize, reading: WeakInteriorReading) -> Self {
        let tables = NumberTables::shared(n);
        let bell: Vec<BigInt> = (0..=n)
            .map(|k| BigInt::from(tables.bell(k).clone()))
            .collect();

        // Θ_{a+1}(t) = t Θ_a(t) + Θ_a(t+1), Θ_0 = 1
        let t_max = n + 1;
        let width = t_max + n + 1;
        let mut row: Vec<BigInt> = vec![BigInt::one(); width + 1];
        let mut theta = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            theta.push(row[..=t_max].to_vec());
            let next: Vec<BigInt> = (0..row.len() - 1)
                .map(|t| &row[t] * t + &row[t + 1])
                .collect();
            row = next;
        }

        let pow = (0..=t_max)
            .map(|t| {
                let mut acc = BigInt::one();
                let mut out = Vec::with_capacity(n + 1);
                for d in 0..=n {
                    if d > 0 {
                        acc *= t;
                    }
                    out.push(acc.clone());
                }
                out
            })
            .collect();

        EdgeModel {
            n,
            reading,
            tables,
            bell,
            theta,
            pow,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bell_n(&self) -> &BigInt {
        &self.bell[self.n]
    }

    fn stirling(&self, n: usize, k: usize) -> BigInt {
        BigInt::from(self.tables.stirling2(n, k))
    }

    fn ratio(&self, numer: BigInt) -> BigRational {
        BigRational::new(numer, self.bell[self.n].clone())
    }

    /// `Ψ(x) = Σ_{k=0}^x k^d` for every `x ≤ n + 1`.
    fn power_sums(&self, d: usize) -> Vec<BigInt> {
        let mut acc = BigInt::zero();
        self.pow
            .iter()
            .map(|row| {
                acc += &row[d];
                acc.clone()
            })
            .collect()
    }

    /// `B_n · P((i,j) strong)` for an interior pair.
    pub fn strong_interior_count(&self, i: usize, j: usize) -> BigInt {
        let n = self.n;
        let d = j - i - 1;
        let psi = self.power_sums(d);
        let hi = &self.theta[n - j + 1];
        let lo = &self.theta[n - j];
        let mut g = BigInt::zero();
        let mut total = BigInt::zero();
        for t in 1..i {
            // g = Σ_{a=1}^t (Ψ(a-1) - a (a-1)^d)
            g += &psi[t - 1] - &self.pow[t - 1][d] * t;
            let s = self.stirling(i - 1, t);
            if s.is_zero() {
                continue;
            }
            let mut term = &hi[t] * &psi[t - 1];
            term += &lo[t] * &g;
            term += &hi[t + 1] * &self.pow[t][d];
            term += &lo[t + 1] * (&psi[t] - &self.pow[t][d] * (t + 1));
            total += s * term;
        }
        total
    }

    /// `B_n · P((i,j) weak but not strong)` for an interior pair.
    pub fn weak_only_interior_count(&self, i: usize, j: usize) -> BigInt {
        let n = self.n;
        let d = j - i - 1;
        let psi = self.power_sums(d);
        let (a_t, b_t, a_t1, b_t1) = match self.reading {
            WeakInteriorReading::Derived => (n - j, n - j + 1, n - j, n - j + 1),
            WeakInteriorReading::Mutant => (n - j, j - i + 1, j - i, j - i + 1),
        };
        let mut total = BigInt::zero();
        for t in 1..i {
            let s = self.stirling(i - 1, t);
            if s.is_zero() {
                continue;
            }
            let p_t = &self.pow[t][d];
            let p_t1 = &self.pow[t + 1][d];
            let mut term = &self.theta[a_t][t] * (p_t - &self.pow[t][d + 1] + &psi[t - 1] * 2);
            term += &self.theta[b_t][t] * p_t;
            let mixed = match self.reading {
                WeakInteriorReading::Derived => p_t * (t + 1) - p_t1 * t,
                WeakInteriorReading::Mutant => -(p_t * (t as i64 - 1) + p_t1 * t),
            };
            term += &self.theta[a_t1][t + 1] * mixed;
            term += &self.theta[b_t1][t + 1] * (p_t1 - p_t);
            total += s * term;
        }
        total
    }

    pub fn strong_edge_prob(&self, i: usize, j: usize) -> Result<EdgeProbability> {
        let value = match classify_pair(self.n, i, j)? {
            PairClass::Adjacent => BigRational::one(),
            PairClass::First => BigRational::zero(),
            PairClass::Interior => self.ratio(self.strong_interior_count(i, j)),
        };
        Ok(self.prob(i, j, EdgeEvent::Strong, value))
    }

    pub fn weak_minus_strong_prob(&self, i: usize, j: usize) -> Result<EdgeProbability> {
        let n = self.n;
        let value = match classify_pair(n, i, j)? {
            PairClass::Adjacent => BigRational::zero(),
            PairClass::First => {
                BigRational::new(self.bell[n - j + i + 1].clone(), self.bell[n].clone())
            }
            PairClass::Interior => self.ratio(self.weak_only_interior_count(i, j)),
        };
        Ok(self.prob(i, j, EdgeEvent::WeakMinusStrong, value))
    }

    pub fn weak_edge_prob(&self, i: usize, j: usize) -> Result<EdgeProbability> {
        let value = self.strong_edge_prob(i, j)?.value + self.weak_minus_strong_prob(i, j)?.value;
        Ok(self.prob(i, j, EdgeEvent::Weak, value))
    }

    pub fn edge_prob(&self, i: usize, j: usize, event: EdgeEvent) -> Result<EdgeProbability> {
        match event {
            EdgeEvent::Strong => self.strong_edge_prob(i, j),
            EdgeEvent::Weak => self.weak_edge_prob(i, j),
            EdgeEvent::WeakMinusStrong => self.weak_minus_strong_prob(i, j),
        }
    }

    fn prob(&self, i: usize, j: usize, event: EdgeEvent, value: BigRational) -> EdgeProbability {
        EdgeProbability {
            n: self.n,
            i,
            j,
            event,
            value,
        }
    }

    /// `B_n · P((i,j) ∈ graph)` as an integer, for any valid pair.
    fn edge_count_scaled(&self, i: usize, j: usize, mode: Mode) -> BigInt {
        let n = self.n;
        let class = classify_pair(n, i, j).expect("pair validated by caller");
        let strong = match class {
            PairClass::Adjacent => self.bell[n].clone(),
            PairClass::First => BigInt::zero(),
            PairClass::Interior => self.strong_interior_count(i, j),
        };
        match mode {
            Mode::Strong => strong,
            Mode::Weak => {
                strong
                    + match class {
                        PairClass::Adjacent => BigInt::zero(),
                        PairClass::First => self.bell[n - j + i + 1].clone(),
                        PairClass::Interior => self.weak_only_interior_count(i, j),
                    }
            }
        }
    }

    pub fn expected_degree(&self, node: usize, mode: Mode) -> Result<BigRational> {
        let n = self.n;
        if node == 0 || node > n {
            return Err(Error::NodeOutOfRange { n, node });
        }
        let total: BigInt = (1..=n)
            .into_par_iter()
            .filter(|&other| other != node)
            .map(|other| {
                let (i, j) = if other < node {
                    (other, node)
                } else {
                    (node, other)
                };
                self.edge_count_scaled(i, j, mode)
            })
            .reduce(BigInt::zero, |a, b| a + b);
        Ok(self.ratio(total))
    }

    /// `E(V_n)` (strong) or `E(V_n^w)` (weak).
    pub fn expected_edges(&self, mode: Mode) -> BigRational {
        let n = self.n;
        if n < 2 {
            return BigRational::zero();
        }
        let mut total = BigInt::from(n - 1) * &self.bell[n];
        if mode == Mode::Weak {
            for j in 3..=n {
                total += &self.bell[n - j + 2];
            }
        }
        let interior: BigInt = (2..=n)
            .into_par_iter()
            .flat_map_iter(|i| (i + 2..=n).map(move |j| (i, j)))
            .map(|(i, j)| match mode {
                Mode::Strong => self.strong_interior_count(i, j),
                Mode::Weak => {
                    self.strong_interior_count(i, j) + self.weak_only_interior_count(i, j)
                }
            })
            .reduce(BigInt::zero, |a, b| a + b);
        total += interior;
        self.ratio(total)
    }
}

pub fn strong_edge_prob(n: usize, i: usize, j: usize) -> Result<EdgeProbability> {
    check_pair(n, i, j)?;
    EdgeModel::new(n).strong_edge_prob(i, j)
}

pub fn weak_minus_strong_prob(n: usize, i: usize, j: usize) -> Result<EdgeProbability> {
    check_pair(n, i, j)?;
    EdgeModel::new(n).weak_minus_strong_prob(i, j)
}

pub fn weak_edge_prob(n: usize, i: usize, j: usize) -> Result<EdgeProbability> {
    check_pair(n, i, j)?;
    EdgeModel::new(n).weak_edge_prob(i, j)
}

pub fn expected_degree(n: usize, node: usize, mode: Mode) -> Result<BigRational> {
    if node == 0 || node > n {
        return Err(Error::NodeOutOfRange { n, node });
    }
    EdgeModel::new(n).expected_degree(node, mode)
}

pub fn expected_edges(n: usize, mode: Mode) -> BigRational {
    EdgeModel::new(n).expected_edges(mode)
}

/// True when `0 ≤ p ≤ 1`.
pub fn is_probability(p: &BigRational) -> bool {
    !p.is_negative() && p <= &BigRational::one()
}
