//! Seeded Monte-Carlo experiments over Stam's sampler.
//!
//! Samples are drawn in fixed-size chunks; chunk `b` owns the generator
//! `ChaCha8Rng::seed_from_u64(seed ^ b)`. Chunks are farmed out to the worker
//! pool and merged in chunk order, so the output depends on the seed and the
//! sample count but not on how many workers ran.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::NumberTables;
use crate::hvg::{visit_edges, Mode};
use crate::moments::EdgeModel;
use crate::rgs::StamSampler;

/// Samples per generator stream.
pub const CHUNK: u64 = 4096;

/// Largest `n` for which sample reports include the exact expectations of
/// `V` and `V^w`.
pub const EXACT_EDGE_LIMIT: usize = 250;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statistic {
    V,
    Vw,
    DegreeHistogram,
    BlockCount,
}

impl Statistic {
    pub fn as_str(self) -> &'static str {
        match self {
            Statistic::V => "V",
            Statistic::Vw => "Vw",
            Statistic::DegreeHistogram => "degree-histogram",
            Statistic::BlockCount => "block-count",
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "V" | "v" => Ok(Statistic::V),
            "Vw" | "vw" | "VW" => Ok(Statistic::Vw),
            "degree-histogram" => Ok(Statistic::DegreeHistogram),
            "block-count" => Ok(Statistic::BlockCount),
            other => Err(Error::Parse(format!("unknown statistic {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub statistics: Vec<Statistic>,
    pub workers: usize,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidArgument("workers must be at least 1".into()));
        }
        Ok(())
    }

    fn chunks(&self) -> Vec<(u64, u64)> {
        let count = self.samples.div_ceil(CHUNK);
        (0..count)
            .map(|b| (b, CHUNK.min(self.samples - b * CHUNK)))
            .collect()
    }

    fn in_pool<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
        Ok(pool.install(job))
    }

    /// The sampled words, in sample order.
    pub fn sequences(&self) -> Result<Vec<Vec<u32>>> {
        self.validate()?;
        let sampler = StamSampler::new(self.n);
        let chunks = self.chunks();
        let per_chunk: Vec<Vec<Vec<u32>>> = self.in_pool(|| {
            chunks
                .par_iter()
                .map(|&(b, len)| {
                    let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ b);
                    (0..len)
                        .map(|_| sampler.sample(&mut rng).into_inner())
                        .collect()
                })
                .collect()
        })?;
        Ok(per_chunk.into_iter().flatten().collect())
    }

    pub fn run(&self) -> Result<Tally> {
        self.validate()?;
        let sampler = StamSampler::new(self.n);
        let chunks = self.chunks();
        let n = self.n;
        let parts: Vec<Tally> = self.in_pool(|| {
            chunks
                .par_iter()
                .map(|&(b, len)| {
                    let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ b);
                    let mut t = Tally::new(n);
                    for _ in 0..len {
                        t.absorb(sampler.sample(&mut rng).letters());
                    }
                    t
                })
                .collect()
        })?;
        Ok(parts.into_iter().fold(Tally::new(n), Tally::merge))
    }
}

/// Integer sums of squares, so merging is exact and order-free.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Moments {
    pub count: u64,
    pub sum: u128,
    pub sum_sq: u128,
}

impl Moments {
    fn add(&mut self, x: u64) {
        self.count += 1;
        self.sum += x as u128;
        self.sum_sq += (x as u128) * (x as u128);
    }

    fn merge(&mut self, o: &Moments) {
        self.count += o.count;
        self.sum += o.sum;
        self.sum_sq += o.sum_sq;
    }

    pub fn mean(&self) -> f64 {
        self.sum as f64 / self.count as f64
    }

    /// Standard error of the mean; `None` with fewer than two samples.
    pub fn stderr(&self) -> Option<f64> {
        if self.count < 2 {
            return None;
        }
        let n = self.count as f64;
        let var = (self.sum_sq as f64 - (self.sum as f64).powi(2) / n) / (n - 1.0);
        Some((var.max(0.0) / n).sqrt())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    pub n: usize,
    pub v: Moments,
    pub vw: Moments,
    pub blocks: Moments,
    pub v_hist: BTreeMap<u64, u64>,
    pub vw_hist: BTreeMap<u64, u64>,
    pub block_hist: BTreeMap<u64, u64>,
    /// Per degree `d`: moments of the number of nodes of strong degree `d`.
    pub degree: Vec<Moments>,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally {
            n,
            v: Moments::default(),
            vw: Moments::default(),
            blocks: Moments::default(),
            v_hist: BTreeMap::new(),
            vw_hist: BTreeMap::new(),
            block_hist: BTreeMap::new(),
            degree: vec![Moments::default(); n],
        }
    }

    fn absorb(&mut self, word: &[u32]) {
        let mut deg = vec![0u32; word.len()];
        let mut v = 0u64;
        visit_edges(word, Mode::Strong, |i, j| {
            deg[i - 1] += 1;
            deg[j - 1] += 1;
            v += 1;
        });
        let mut vw = 0u64;
        visit_edges(word, Mode::Weak, |_, _| vw += 1);
        let k = *word.iter().max().unwrap_or(&0) as u64;
        self.v.add(v);
        self.vw.add(vw);
        self.blocks.add(k);
        *self.v_hist.entry(v).or_default() += 1;
        *self.vw_hist.entry(vw).or_default() += 1;
        *self.block_hist.entry(k).or_default() += 1;
        let mut per_degree = vec![0u64; self.degree.len()];
        for d in deg {
            per_degree[d as usize] += 1;
        }
        for (m, c) in self.degree.iter_mut().zip(per_degree) {
            m.add(c);
        }
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.v.merge(&o.v);
        self.vw.merge(&o.vw);
        self.blocks.merge(&o.blocks);
        for (h, oh) in [
            (&mut self.v_hist, &o.v_hist),
            (&mut self.vw_hist, &o.vw_hist),
            (&mut self.block_hist, &o.block_hist),
        ] {
            for (k, c) in oh {
                *h.entry(*k).or_default() += c;
            }
        }
        for (m, om) in self.degree.iter_mut().zip(&o.degree) {
            m.merge(om);
        }
        self
    }

    pub fn samples(&self) -> u64 {
        self.v.count
    }
}

/// `E(number of blocks) = B_{n+1}/B_n - 1`.
pub fn expected_blocks(n: usize) -> BigRational {
    let t = NumberTables::shared(n + 1);
    BigRational::new(
        BigInt::from(t.bell(n + 1).clone()),
        BigInt::from(t.bell(n).clone()),
    ) - BigRational::from_integer(1.into())
}

/// Exact expectations of `V` and `V^w`, when `n` is small enough to be cheap.
pub fn exact_edges(n: usize) -> Option<(BigRational, BigRational)> {
    if n > EXACT_EDGE_LIMIT {
        return None;
    }
    let model = EdgeModel::new(n);
    Some((
        model.expected_edges(Mode::Strong),
        model.expected_edges(Mode::Weak),
    ))
}
