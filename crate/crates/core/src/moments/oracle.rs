//! Exhaustive enumeration oracle: builds the visibility graphs of every
//! sequence in `R_n` once and tallies, per pair, how many contain it.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{check_pair, EdgeEvent, EdgeProbability};
use crate::error::{Error, Result};
use crate::exactnum::bell;
use crate::hvg::{visit_edges, Mode};
use crate::rgs::{prefixes, RgsIter};

/// Default cap on `B_n` for exhaustive work.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000_000;

/// Per-pair and aggregate counts over all of `R_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTable {
    n: usize,
    sequences: u64,
    /// `strong[(i-1)*n + (j-1)]`
    strong: Vec<u64>,
    weak: Vec<u64>,
    /// `strong_by_blocks[k]` = Σ over `R_{n,k}` of `V_π`.
    strong_by_blocks: Vec<u64>,
    /// `strong_hist[v]` = number of sequences with `V_π = v`.
    strong_hist: Vec<u64>,
    weak_hist: Vec<u64>,
}

impl OracleTable {
    fn empty(n: usize) -> Self {
        let max_edges = n * n.saturating_sub(1) / 2;
        OracleTable {
            n,
            sequences: 0,
            strong: vec![0; n * n],
            weak: vec![0; n * n],
            strong_by_blocks: vec![0; n + 1],
            strong_hist: vec![0; max_edges + 1],
            weak_hist: vec![0; max_edges + 1],
        }
    }

    fn absorb(&mut self, word: &[u32]) {
        let n = self.n;
        let mut v = 0usize;
        visit_edges(word, Mode::Strong, |i, j| {
            self.strong[(i - 1) * n + j - 1] += 1;
            v += 1;
        });
        let mut vw = 0usize;
        visit_edges(word, Mode::Weak, |i, j| {
            self.weak[(i - 1) * n + j - 1] += 1;
            vw += 1;
        });
        let k = *word.iter().max().unwrap() as usize;
        self.strong_by_blocks[k] += v as u64;
        self.strong_hist[v] += 1;
        self.weak_hist[vw] += 1;
        self.sequences += 1;
    }

    fn merge(mut self, other: Self) -> Self {
        let add = |a: &mut Vec<u64>, b: &[u64]| a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        add(&mut self.strong, &other.strong);
        add(&mut self.weak, &other.weak);
        add(&mut self.strong_by_blocks, &other.strong_by_blocks);
        add(&mut self.strong_hist, &other.strong_hist);
        add(&mut self.weak_hist, &other.weak_hist);
        self.sequences += other.sequences;
        self
    }

    /// Enumerates `R_n` in parallel prefix shards. Refuses when `B_n > limit`.
    pub fn build(n: usize, limit: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        guard(n, limit)?;
        let shards = prefixes(n, n.min(6));
        let table = shards
            .par_iter()
            .map(|prefix| {
                let mut local = OracleTable::empty(n);
                RgsIter::with_prefix(n, None, prefix).for_each_word(|w| local.absorb(w));
                local
            })
            .reduce(|| OracleTable::empty(n), OracleTable::merge);
        Ok(table)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sequences(&self) -> u64 {
        self.sequences
    }

    /// Number of sequences whose graph shows the event at `(i, j)`.
    pub fn count(&self, i: usize, j: usize, event: EdgeEvent) -> Result<u64> {
        check_pair(self.n, i, j)?;
        let idx = (i - 1) * self.n + j - 1;
        Ok(match event {
            EdgeEvent::Strong => self.strong[idx],
            EdgeEvent::Weak => self.weak[idx],
            EdgeEvent::WeakMinusStrong => self.weak[idx] - self.strong[idx],
        })
    }

    pub fn edge_prob(&self, i: usize, j: usize, event: EdgeEvent) -> Result<EdgeProbability> {
        let count = self.count(i, j, event)?;
        Ok(EdgeProbability {
            n: self.n,
            i,
            j,
            event,
            value: BigRational::new(BigInt::from(count), BigInt::from(self.sequences)),
        })
    }

    /// Σ over `R_n` of the edge count, strong or weak.
    pub fn total_edges(&self, mode: Mode) -> u64 {
        let hist = match mode {
            Mode::Strong => &self.strong_hist,
            Mode::Weak => &self.weak_hist,
        };
        hist.iter().enumerate().map(|(v, c)| v as u64 * c).sum()
    }

    /// Σ over sequences of the degree of `node`.
    pub fn total_degree(&self, node: usize, mode: Mode) -> u64 {
        let table = match mode {
            Mode::Strong => &self.strong,
            Mode::Weak => &self.weak,
        };
        let n = self.n;
        (1..=n)
            .filter(|&o| o != node)
            .map(|o| {
                let (i, j) = if o < node { (o, node) } else { (node, o) };
                table[(i - 1) * n + j - 1]
            })
            .sum()
    }

    /// Σ over `R_{n,k}` of `V_π`.
    pub fn strong_edges_with_blocks(&self, k: usize) -> u64 {
        self.strong_by_blocks.get(k).copied().unwrap_or(0)
    }

    /// Number of sequences with exactly `v` edges.
    pub fn edge_histogram(&self, mode: Mode) -> &[u64] {
        match mode {
            Mode::Strong => &self.strong_hist,
            Mode::Weak => &self.weak_hist,
        }
    }
}

pub(crate) fn guard(n: usize, limit: u64) -> Result<()> {
    let b: BigUint = bell(n);
    if b.to_u64().is_none_or(|b| b > limit) {
        return Err(Error::TooLarge {
            n,
            bell: b.to_string(),
            limit,
        });
    }
    Ok(())
}

/// Exact probability by counting over all of `R_n`.
pub fn oracle_edge_prob(n: usize, i: usize, j: usize, event: EdgeEvent) -> Result<EdgeProbability> {
    check_pair(n, i, j)?;
    OracleTable::build(n, DEFAULT_ENUMERATION_LIMIT)?.edge_prob(i, j, event)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn small_oracle_values() {
        assert_eq!(
            oracle_edge_prob(4, 2, 4, EdgeEvent::Strong).unwrap().value,
            r(2, 15)
        );
        assert_eq!(
            oracle_edge_prob(4, 1, 3, EdgeEvent::WeakMinusStrong)
                .unwrap()
                .value,
            r(1, 3)
        );
        for i in 1..6 {
            assert_eq!(
                oracle_edge_prob(6, i, i + 1, EdgeEvent::Strong)
                    .unwrap()
                    .value,
                r(1, 1)
            );
        }
    }

    #[test]
    fn totals_for_n4() {
        let t = OracleTable::build(4, DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(t.sequences(), 15);
        assert_eq!(t.total_edges(Mode::Strong), 47);
        assert_eq!(t.total_edges(Mode::Weak), 59);
        assert_eq!(t.total_degree(2, Mode::Strong), 32);
    }

    #[test]
    fn guard_trips() {
        assert!(matches!(
            OracleTable::build(12, 1000),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            OracleTable::build(30, DEFAULT_ENUMERATION_LIMIT),
            Err(Error::TooLarge { .. })
        ));
    }
}
