//! Truncated power series in `x` for the visibility edge-count generating
//! functions.
//!
//! `P_k(x, q) = Σ_{π ∈ R_{·,k}} x^|π| q^V(π)` is built from the recursion
//! `M̃_1 = q`, `M̃_k = M̃_{k-1} + x q M̃_{k-1}² / (1 - x M̃_{k-1})` as
//!
//! ```text
//! P_k = x^k / (1 - x M̃_k) · Π_{j<k} M̃_j / (1 - x M̃_j)²
//! ```
//!
//! and `Q_k(x) = ∂_q P_k |_{q=1}` generates `Σ_{π ∈ R_{n,k}} V_π`. The same
//! `Q_k` also has a closed rational form, and consecutive `Q_k` satisfy a
//! first-order recurrence driven by `T_k`; both are exposed so they can be
//! compared coefficientwise with the recursion route.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

/// Coefficient ring of a [`PowerSeries`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    fn mul_ref(&self, other: &Self) -> Self;
    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Coeff for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Polynomial in `q` with exact rational coefficients, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigRational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c q^d`.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lowest_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * q + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * BigRational::from_integer(BigInt::from(d)))
                .collect(),
        )
    }

    /// `{"q^d": "p/q", …}` over the non-zero coefficients.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                map.insert(format!("q^{d}"), Value::String(c.to_string()));
            }
        }
        Value::Object(map)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coef = if d > 0 && c.is_one() {
                String::new()
            } else if d > 0 && (-c).is_one() {
                "-".to_string()
            } else {
                c.to_string()
            };
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}q")?,
                _ => write!(f, "{coef}q^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Zero for QPolynomial {
    fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPolynomial {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl Add for QPolynomial {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl Mul for QPolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Add<&'a QPolynomial> for QPolynomial {
    type Output = Self;
    fn add(mut self, rhs: &'a QPolynomial) -> Self {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        Self::new(self.coeffs)
    }
}

impl<'a> Sub<&'a QPolynomial> for QPolynomial {
    type Output = Self;
    fn sub(self, rhs: &'a QPolynomial) -> Self {
        self + &(-rhs.clone())
    }
}

impl Neg for QPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        QPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Coeff for QPolynomial {
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    out[a + b] += ca * cb;
                }
            }
        }
        Self::new(out)
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(Self::constant(c.recip())),
            _ => None,
        }
    }
}

/// `Σ_{n=0}^{order} a_n x^n`, arithmetic modulo `x^(order+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

/// Series in `x` whose coefficients are polynomials in `q`.
pub type TruncatedBivariateSeries = PowerSeries<QPolynomial>;
/// Series in `x` with rational coefficients.
pub type UnivariateSeries = PowerSeries<BigRational>;

impl<C: Coeff> PowerSeries<C> {
    pub fn from_coeffs(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// `c x^k`, or zero when `k > order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first non-zero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![C::zero(); k.min(order + 1)];
        coeffs.extend(
            self.coeffs
                .iter()
                .take((order + 1).saturating_sub(k))
                .cloned(),
        );
        Self::from_coeffs(order, coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![C::zero(); order + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate().take(order + 1 - a) {
                if !cb.is_zero() {
                    out[a + b] = std::mem::replace(&mut out[a + b], C::zero()) + &ca.mul_ref(cb);
                }
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Formal inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::NonUnitDivisor)?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc = acc + &a.mul_ref(&out[n - k]);
                }
            }
            out.push(-(acc.mul_ref(&inv0)));
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn div_series(&self, divisor: &Self) -> Result<Self> {
        Ok(self.mul_series(&divisor.inverse()?))
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<C: Coeff> Add for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn add(self, rhs: Self) -> PowerSeries<C> {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].clone() + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<C: Coeff> Sub for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn sub(self, rhs: Self) -> PowerSeries<C> {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].clone() - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<C: Coeff> Mul for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn mul(self, rhs: Self) -> PowerSeries<C> {
        self.mul_series(rhs)
    }
}

impl TruncatedBivariateSeries {
    /// `∂/∂q` of every coefficient, evaluated at `q = 1`.
    pub fn derivative_at_one(&self) -> UnivariateSeries {
        let one = BigRational::one();
        self.map(|p| p.derivative().eval(&one))
    }

    pub fn eval_q(&self, q: &BigRational) -> UnivariateSeries {
        self.map(|p| p.eval(q))
    }

    /// `{"order": N, "coeffs": [{"x": n, "poly": {"q^d": "p/q"}}, …]}`.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, p)| json!({"x": n, "poly": p.to_json()}))
            .collect();
        json!({"order": self.order(), "coeffs": coeffs})
    }
}

impl UnivariateSeries {
    /// Polynomial `c_0 + c_1 x + …` given by small integer coefficients.
    pub fn poly(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Same layout as the bivariate form, each coefficient a constant.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| json!({"x": n, "poly": QPolynomial::constant(c.clone()).to_json()}))
            .collect();
        json!({"order": self.order(), "coeffs": coeffs})
    }
}

fn rat(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

fn qconst(order: usize, c: i64) -> TruncatedBivariateSeries {
    PowerSeries::constant(QPolynomial::constant(rat(c)), order)
}

/// `1 - x·s`.
fn one_minus_x_times(s: &TruncatedBivariateSeries) -> TruncatedBivariateSeries {
    &qconst(s.order(), 1) - &s.shift(1)
}

/// `M̃_1, …, M̃_k` to order `order`.
pub fn mtilde_family(k: usize, order: usize) -> Vec<TruncatedBivariateSeries> {
    let q = PowerSeries::constant(QPolynomial::q(), order);
    let mut out = Vec::with_capacity(k);
    if k == 0 {
        return out;
    }
    out.push(q.clone());
    for _ in 1..k {
        let prev = out.last().unwrap();
        let frac = (&prev.mul_series(prev) * &q)
            .shift(1)
            .div_series(&one_minus_x_times(prev))
            .expect("constant term 1");
        out.push(prev + &frac);
    }
    out
}

/// # Panics
/// If `k == 0`.
pub fn mtilde(k: usize, order: usize) -> TruncatedBivariateSeries {
    assert!(k >= 1, "mtilde needs k >= 1");
    mtilde_family(k, order).pop().unwrap()
}

/// `P_1, …, P_k` sharing one `M̃` family.
pub fn p_family(k: usize, order: usize) -> Vec<TruncatedBivariateSeries> {
    let family = mtilde_family(k, order);
    let mut prefix = qconst(order, 1);
    let mut out = Vec::with_capacity(k);
    for (idx, m) in family.iter().enumerate() {
        let denom = one_minus_x_times(m).inverse().expect("constant term 1");
        out.push((&prefix * &denom).shift(idx + 1));
        prefix = &(&prefix * m) * &(&denom * &denom);
    }
    out
}

/// # Panics
/// If `k == 0`.
pub fn p_k(k: usize, order: usize) -> TruncatedBivariateSeries {
    assert!(k >= 1, "p_k needs k >= 1");
    p_family(k, order).pop().unwrap()
}

/// `1 + Σ_{k≥1} P_k`; the `x^n` coefficient is `Σ_{π ∈ R_n} q^V(π)`.
pub fn sum_p(order: usize) -> TruncatedBivariateSeries {
    p_family(order, order)
        .iter()
        .fold(qconst(order, 1), |acc, p| &acc + p)
}

/// `∂_q P_k |_{q=1}` via the recursion.
pub fn q_k(k: usize, order: usize) -> UnivariateSeries {
    p_k(k, order).derivative_at_one()
}

fn q_family(k: usize, order: usize) -> Vec<UnivariateSeries> {
    p_family(k, order)
        .iter()
        .map(TruncatedBivariateSeries::derivative_at_one)
        .collect()
}

/// `1 - c x`.
fn one_minus(c: i64, order: usize) -> UnivariateSeries {
    UnivariateSeries::poly(order, &[1, -c])
}

fn inv(s: &UnivariateSeries) -> UnivariateSeries {
    s.inverse().expect("constant term 1")
}

/// `x^k / Π_{j=1}^k (1 - j x)`, the Stirling row generating function.
pub fn stirling_column(k: usize, order: usize) -> UnivariateSeries {
    (1..=k as i64).fold(UnivariateSeries::monomial(rat(1), k, order), |acc, j| {
        &acc * &inv(&one_minus(j, order))
    })
}

/// `1 + x Σ_{j=1}^{m} (1 - j x) / (1 - (j-1) x)`.
fn ratio_sum(m: usize, order: usize) -> UnivariateSeries {
    let mut acc = UnivariateSeries::zero(order);
    for j in 1..=m as i64 {
        acc = &acc + &(&one_minus(j, order) * &inv(&one_minus(j - 1, order)));
    }
    &UnivariateSeries::one(order) + &acc.shift(1)
}

fn f_i(i: usize, order: usize) -> UnivariateSeries {
    let i = i as i64;
    let denom = &one_minus(i - 1, order) * &one_minus(i, order);
    &ratio_sum(i as usize - 1, order) * &inv(&denom)
}

/// Closed rational form of [`q_k`]:
/// `x^k / Π(1 - j x) · (Σ_{i<k} f_i (1 - i x) + 2x Σ_{i<k} f_i + x f_k)`.
pub fn q_k_closed_form(k: usize, order: usize) -> UnivariateSeries {
    assert!(k >= 1, "q_k_closed_form needs k >= 1");
    let mut first = UnivariateSeries::zero(order);
    let mut plain = UnivariateSeries::zero(order);
    for i in 1..k {
        let f = f_i(i, order);
        first = &first + &(&f * &one_minus(i as i64, order));
        plain = &plain + &f;
    }
    let h = &(&first + &plain.shift(1).scale(&rat(2))) + &f_i(k, order).shift(1);
    &stirling_column(k, order) * &h
}

/// `T_k(x) = x^k / Π(1 - j x) · (1 + x Σ_{j=1}^{k-2} (1-jx)/(1-(j-1)x)) / (1 - (k-1) x)`.
pub fn t_k(k: usize, order: usize) -> UnivariateSeries {
    assert!(k >= 2, "t_k needs k >= 2");
    let tail = &ratio_sum(k - 2, order) * &inv(&one_minus(k as i64 - 1, order));
    &stirling_column(k, order) * &tail
}

/// `(1 - kx) Q_k - x Q_{k-1} - (T_k + T_{k+1}) / (1 - (k-1) x)`.
///
/// This identity does not hold: the residual starts at `-(2k-1) x^{k+1}`, and
/// solving it for `Q_k` gives `c_3 = 13/6` instead of the enumerated `5/3`.
/// [`recurrence_residual`] is the relation that does hold.
pub fn recp_residual(k: usize, order: usize) -> UnivariateSeries {
    assert!(k >= 2, "recp_residual needs k >= 2");
    let qs = q_family(k, order);
    let lhs = &(&one_minus(k as i64, order) * &qs[k - 1]) - &qs[k - 2].shift(1);
    let rhs = &(&t_k(k, order) + &t_k(k + 1, order)) * &inv(&one_minus(k as i64 - 1, order));
    &lhs - &rhs
}

/// `(1 - kx) Q_k - x Q_{k-1} - (1 - kx) T_k - (1 - kx)(1 - (k+1)x) T_{k+1} / (1 - (k-1)x)`.
///
/// Splitting `Q_k - x Q_{k-1} / (1 - kx)` into its `T_k` part and its
/// `T_{k+1}` part leaves the extra factor `(1 - (k+1)x) / (1 - (k-1)x)` on
/// the second. Identically zero.
pub fn recurrence_residual(k: usize, order: usize) -> UnivariateSeries {
    assert!(k >= 2, "recurrence_residual needs k >= 2");
    let qs = q_family(k, order);
    let ok = one_minus(k as i64, order);
    let lhs = &(&ok * &qs[k - 1]) - &qs[k - 2].shift(1);
    let next = &(&(&ok * &one_minus(k as i64 + 1, order)) * &t_k(k + 1, order))
        * &inv(&one_minus(k as i64 - 1, order));
    let rhs = &(&ok * &t_k(k, order)) + &next;
    &lhs - &rhs
}

/// `c_n = [x^n] Σ_k Q_k / n!` for `n = 2..=order`, i.e. the EGF coefficients
/// of `B_n E(V_n)`.
pub fn q_moment_egf(order: usize) -> Vec<(usize, BigRational)> {
    let total = q_family(order, order)
        .iter()
        .fold(UnivariateSeries::zero(order), |acc, s| &acc + s);
    let mut fact = BigInt::one();
    let mut out = Vec::new();
    for n in 1..=order {
        fact *= n;
        if n >= 2 {
            out.push((n, total.coeff(n) / BigRational::from_integer(fact.clone())));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn qpoly(terms: &[(usize, i64)]) -> QPolynomial {
        terms.iter().fold(QPolynomial::zero(), |acc, &(d, c)| {
            acc + QPolynomial::monomial(rat(c), d)
        })
    }

    #[test]
    fn mtilde_small_cases() {
        let m1 = mtilde(1, 6);
        assert_eq!(m1.coeff(0), QPolynomial::q());
        assert!((1..=6).all(|n| m1.coeff(n).is_zero()));
        let m2 = mtilde(2, 6);
        assert_eq!(m2.coeff(1), qpoly(&[(3, 1)]));
        for k in 1..6 {
            let at_one = mtilde(k, 8).eval_q(&r(1, 1));
            let expected = inv(&one_minus(k as i64 - 1, 8));
            assert_eq!(at_one, expected, "k={k}");
            assert_eq!(mtilde(k, 8).coeff(0), QPolynomial::q());
        }
    }

    #[test]
    fn p1_is_single_block_class() {
        let p1 = p_k(1, 5);
        assert!(p1.coeff(0).is_zero());
        assert_eq!(p1.coeff(1), QPolynomial::one());
        for n in 2..=5 {
            assert_eq!(p1.coeff(n), qpoly(&[(n - 1, 1)]));
        }
        let q1 = q_k(1, 8);
        for n in 2..=8 {
            assert_eq!(q1.coeff(n), rat(n as i64 - 1));
        }
    }

    #[test]
    fn sum_p_low_order() {
        let s = sum_p(4);
        assert_eq!(s.coeff(0), QPolynomial::one());
        assert_eq!(s.coeff(1), QPolynomial::one());
        assert_eq!(s.coeff(2), qpoly(&[(1, 2)]));
        assert_eq!(s.coeff(3), qpoly(&[(2, 5)]));
        assert_eq!(s.coeff(4), qpoly(&[(4, 2), (3, 13)]));
    }

    #[test]
    fn q_k_diagonal() {
        for k in 1..=6 {
            assert_eq!(q_k(k, 8).coeff(k), rat(k as i64 - 1));
            assert!(q_k(k, 8).valuation().unwrap_or(k + 1) >= k);
        }
    }

    #[test]
    fn t_k_shape() {
        let t2 = t_k(2, 10);
        let direct = &(&UnivariateSeries::monomial(rat(1), 2, 10) * &inv(&one_minus(1, 10)))
            * &(&inv(&one_minus(2, 10)) * &inv(&one_minus(1, 10)));
        assert_eq!(t2, direct);
        for k in 2..=6 {
            let t = t_k(k, 12);
            assert_eq!(t.valuation(), Some(k));
            assert!(t.coeffs().iter().all(|c| c >= &rat(0)));
        }
    }

    #[test]
    fn residual_trivial_order() {
        assert!(recp_residual(2, 0).is_zero());
    }

    #[test]
    fn recurrence_holds_with_split_factor() {
        for k in 2..=6 {
            assert!(recurrence_residual(k, 12).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn naive_recurrence_leaves_residual() {
        for k in 2..=6 {
            let r = recp_residual(k, 12);
            assert_eq!(r.valuation(), Some(k + 1));
            assert_eq!(r.coeff(k + 1), rat(-(2 * k as i64 - 1)));
        }
    }

    #[test]
    fn moment_head() {
        let c = q_moment_egf(4);
        assert_eq!(c[0], (2, r(1, 1)));
        assert_eq!(c[1], (3, r(5, 3)));
        assert_eq!(c[2], (4, r(47, 24)));
    }

    #[test]
    fn non_unit_division_fails() {
        let s = UnivariateSeries::poly(4, &[0, 1]);
        assert_eq!(s.inverse(), Err(Error::NonUnitDivisor));
        let b = PowerSeries::constant(QPolynomial::q(), 3);
        assert_eq!(b.inverse(), Err(Error::NonUnitDivisor));
    }

    #[test]
    fn json_layout() {
        let s = sum_p(2);
        assert_eq!(
            s.to_json().to_string(),
            r#"{"order":2,"coeffs":[{"x":0,"poly":{"q^0":"1"}},{"x":1,"poly":{"q^0":"1"}},{"x":2,"poly":{"q^1":"2"}}]}"#
        );
    }
}
