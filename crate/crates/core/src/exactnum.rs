//! Exact combinatorial numbers: binomials, Stirling numbers of the second
//! kind, Bell and Bernoulli numbers, Faulhaber power sums and the shifted
//! Dobinski sums `Θ_n(t)`.
//!
//! Everything here is arbitrary precision. Tables are built once per
//! [`NumberTables`] instance and never mutated; growing a table produces a new
//! instance whose prefix is identical to the old one.

use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Default size of the shared tables.
pub const DEFAULT_N_MAX: usize = 64;

/// `base^exp` with the convention `0^0 = 1`.
pub fn upow(base: u64, exp: usize) -> BigUint {
    if exp == 0 {
        return BigUint::one();
    }
    num_traits::pow(BigUint::from(base), exp)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for step in 0..k {
        acc *= n - step;
        acc /= step + 1;
    }
    acc
}

/// Memoized Stirling, Bell and Bernoulli tables for indices `0..=n_max`.
#[derive(Debug, Clone)]
pub struct NumberTables {
    n_max: usize,
    stirling: Vec<Vec<BigUint>>,
    bell: Vec<BigUint>,
    bernoulli: Vec<BigRational>,
}

impl NumberTables {
    pub fn new(n_max: usize) -> Self {
        let mut stirling: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        stirling.push(vec![BigUint::one()]);
        for n in 1..=n_max {
            let prev = &stirling[n - 1];
            let mut row = vec![BigUint::zero(); n + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                // S(n,k) = S(n-1,k-1) + k S(n-1,k)
                *slot = prev[k - 1].clone();
                if let Some(s) = prev.get(k) {
                    *slot += s * k;
                }
            }
            stirling.push(row);
        }
        let bell = stirling
            .iter()
            .map(|row| row.iter().sum::<BigUint>())
            .collect();
        NumberTables {
            n_max,
            stirling,
            bell,
            bernoulli: bernoulli_plus_table(n_max),
        }
    }

    /// A table covering at least `n_max`, sharing nothing with `self` but
    /// agreeing with it on every index `self` already holds.
    pub fn extended(&self, n_max: usize) -> Self {
        if n_max <= self.n_max {
            return self.clone();
        }
        NumberTables::new(n_max)
    }

    /// Process-wide table covering at least `n`. Grows by doubling.
    pub fn shared(n: usize) -> Arc<NumberTables> {
        static SHARED: RwLock<Option<Arc<NumberTables>>> = RwLock::new(None);
        if let Some(t) = SHARED.read().unwrap().as_ref() {
            if t.n_max >= n {
                return Arc::clone(t);
            }
        }
        let mut guard = SHARED.write().unwrap();
        match guard.as_ref() {
            Some(t) if t.n_max >= n => Arc::clone(t),
            current => {
                let old = current.map_or(0, |t| t.n_max);
                let target = n.max(DEFAULT_N_MAX).max(old * 2);
                let fresh = Arc::new(NumberTables::new(target));
                *guard = Some(Arc::clone(&fresh));
                fresh
            }
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check(&self, n: usize) {
        assert!(
            n <= self.n_max,
            "index {n} beyond table size {}",
            self.n_max
        );
    }

    pub fn stirling2(&self, n: usize, k: usize) -> BigUint {
        self.check(n);
        self.stirling[n].get(k).cloned().unwrap_or_default()
    }

    pub fn stirling_row(&self, n: usize) -> &[BigUint] {
        self.check(n);
        &self.stirling[n]
    }

    pub fn bell(&self, n: usize) -> &BigUint {
        self.check(n);
        &self.bell[n]
    }

    pub fn bernoulli_plus(&self, l: usize) -> &BigRational {
        self.check(l);
        &self.bernoulli[l]
    }

    /// `Θ_n(t) = Σ_ℓ C(n,ℓ) t^(n-ℓ) B_ℓ`.
    pub fn theta(&self, n: usize, t: u64) -> BigUint {
        self.check(n);
        let mut acc = BigUint::zero();
        let mut coeff = BigUint::one();
        for l in 0..=n {
            if l > 0 {
                coeff = coeff * (n - l + 1) / l;
            }
            acc += &coeff * upow(t, n - l) * &self.bell[l];
        }
        acc
    }
}

/// Bernoulli numbers with `B_1 = +1/2`.
///
/// The table is produced by the recursion `Σ_{ℓ<n} C(n,ℓ) B_ℓ = 0`, which
/// yields `B_1 = -1/2`; index 1 is then flipped so that the Bernoulli form of
/// the power sum counts up to `t` inclusive.
fn bernoulli_plus_table(n_max: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    b.push(BigRational::one());
    for m in 1..=n_max {
        // Σ_{ℓ=0}^{m} C(m+1, ℓ) B_ℓ = 0
        let mut acc = BigRational::zero();
        let mut coeff = BigUint::one();
        for (l, bl) in b.iter().enumerate() {
            if l > 0 {
                coeff = coeff * (m + 2 - l) / l;
            }
            acc += BigRational::from_integer(BigInt::from(coeff.clone())) * bl;
        }
        let denom = BigRational::from_integer(BigInt::from(m + 1));
        b.push(-acc / denom);
    }
    if n_max >= 1 {
        b[1] = -b[1].clone();
    }
    b
}

pub fn stirling2(n: usize, k: usize) -> BigUint {
    NumberTables::shared(n).stirling2(n, k)
}

pub fn bell(n: usize) -> BigUint {
    NumberTables::shared(n).bell(n).clone()
}

pub fn bernoulli_plus(l: usize) -> BigRational {
    NumberTables::shared(l).bernoulli_plus(l).clone()
}

/// `Ψ_n(t) = Σ_{k=0}^t k^(n-1)`, counting `0^0` as 1.
///
/// # Panics
/// If `n == 0`.
pub fn faulhaber_psi(n: usize, t: u64) -> BigUint {
    assert!(n >= 1, "faulhaber_psi needs n >= 1");
    (0..=t).map(|k| upow(k, n - 1)).sum()
}

/// Bernoulli closed form of [`faulhaber_psi`].
///
/// The sum `(1/n) Σ_{ℓ<n} C(n,ℓ) t^(n-ℓ) B_ℓ` counts `k = 1..=t`; the `k = 0`
/// term `0^(n-1)` is added separately and only matters for `n = 1`.
pub fn faulhaber_psi_bernoulli(n: usize, t: u64) -> BigRational {
    assert!(n >= 1, "faulhaber_psi_bernoulli needs n >= 1");
    let tables = NumberTables::shared(n);
    let mut acc = BigRational::zero();
    for l in 0..n {
        let term = BigInt::from(binomial(n as u64, l as u64) * upow(t, n - l));
        acc += BigRational::from_integer(term) * tables.bernoulli_plus(l);
    }
    acc /= BigRational::from_integer(BigInt::from(n));
    if n == 1 {
        acc += BigRational::one();
    }
    acc
}

pub fn theta(n: usize, t: u64) -> BigUint {
    NumberTables::shared(n).theta(n, t)
}

/// Floating-point `(1/e) Σ_{m=t}^{t+terms} m^n / (m-t)!`.
pub fn theta_dobinski_f64(n: usize, t: u64, terms: u64) -> f64 {
    let mut inv_fact = 1.0f64;
    let mut sum = 0.0f64;
    for k in 0..=terms {
        if k > 0 {
            inv_fact /= k as f64;
        }
        let m = (k + t) as f64;
        let power = if n == 0 { 1.0 } else { m.powi(n as i32) };
        sum += power * inv_fact;
    }
    sum * (-1.0f64).exp()
}

/// Lossy conversion used only for floating cross-checks and reporting.
pub fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}
