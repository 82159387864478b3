//! The certification suite behind `hvgrgs verify`: every closed form is
//! compared against an independent route (enumeration, direct summation or a
//! known coefficient table) with exact equality.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactnum::{
    binomial, faulhaber_psi, faulhaber_psi_bernoulli, theta_dobinski_f64, NumberTables,
};
use crate::hvg::{Mode, VisibilityGraph};
use crate::moments::oracle::OracleTable;
use crate::moments::{classify_pair, EdgeEvent, EdgeModel, PairClass, WeakInteriorReading};
use crate::reference_values::{EDGE_DISTRIBUTION_HEAD, MOMENT_EGF_HEAD};
use crate::rgs::{enumerate, RestrictedGrowthSequence, SetPartition};
use crate::series::{
    q_k, q_k_closed_form, q_moment_egf, recurrence_residual, stirling_column, sum_p,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    /// Inject a known-bad weak-minus-strong formula; the suite must fail.
    pub mutate: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 9,
            mutate: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    /// First mismatch, if any.
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Check {
    name: &'static str,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failure: None,
        }
    }

    /// Records one comparison; keeps only the first failure.
    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn done(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn number_checks(out: &mut Vec<CheckResult>) {
    let tables = NumberTables::shared(21);

    let mut c = Check::new("stirling-row-sums");
    for n in 0..=20 {
        let s: BigUint = tables.stirling_row(n).iter().sum();
        c.expect(&s == tables.bell(n), || {
            format!("n = {n}: sum {s} != B_n {}", tables.bell(n))
        });
    }
    out.push(c.done());

    let mut c = Check::new("bell-recursion");
    for n in 0..20 {
        let s: BigUint = (0..=n)
            .map(|k| binomial(n as u64, k as u64) * tables.bell(k))
            .sum();
        c.expect(&s == tables.bell(n + 1), || format!("n = {n}"));
    }
    out.push(c.done());

    let mut c = Check::new("stirling-column-series");
    for k in 0..=12 {
        let col = stirling_column(k, 12);
        for n in 0..=12 {
            let want = BigRational::from_integer(BigInt::from(tables.stirling2(n, k)));
            c.expect(col.coeff(n) == want, || format!("n = {n}, k = {k}"));
        }
    }
    out.push(c.done());

    let mut c = Check::new("faulhaber-closed-form");
    for n in 1..=10 {
        for t in 0..=50u64 {
            let direct = BigRational::from_integer(BigInt::from(faulhaber_psi(n, t)));
            c.expect(faulhaber_psi_bernoulli(n, t) == direct, || {
                format!("n = {n}, t = {t}")
            });
        }
    }
    out.push(c.done());

    let mut c = Check::new("theta-dobinski");
    for n in 0..=10 {
        for t in 0..=10u64 {
            let exact = crate::exactnum::big_to_f64(&tables.theta(n, t));
            let series = theta_dobinski_f64(n, t, 120);
            let rel = ((series - exact) / exact).abs();
            c.expect(rel < 1e-9, || {
                format!("n = {n}, t = {t}: relative error {rel:e}")
            });
        }
    }
    out.push(c.done());
}

fn rgs_checks(max_n: usize, out: &mut Vec<CheckResult>) {
    let mut c = Check::new("rgs-counts");
    for n in 1..=max_n {
        let mut by_k = vec![0u64; n + 1];
        for w in enumerate(n, None) {
            by_k[w.block_count()] += 1;
        }
        for (k, &seen) in by_k.iter().enumerate().skip(1) {
            let restricted = enumerate(n, Some(k)).count() as u64;
            let s = crate::exactnum::stirling2(n, k);
            c.expect(
                BigUint::from(seen) == s && BigUint::from(restricted) == s,
                || format!("n = {n}, k = {k}: counted {seen} / {restricted}, S = {s}"),
            );
        }
    }
    out.push(c.done());

    let mut c = Check::new("rgs-round-trip");
    for n in 1..=max_n.min(8) {
        for s in enumerate(n, None) {
            let p = s.to_partition();
            let back = RestrictedGrowthSequence::from_partition(&p).ok();
            let reparsed: Option<SetPartition> = p.to_string().parse().ok();
            c.expect(
                back.as_ref() == Some(&s) && reparsed.as_ref() == Some(&p),
                || format!("word {s}"),
            );
        }
    }
    out.push(c.done());
}

fn hvg_checks(max_n: usize, out: &mut Vec<CheckResult>) {
    let mut c = Check::new("hvg-fast-vs-reference");
    for n in 1..=max_n {
        enumerate(n, None).for_each_word(|w| {
            for mode in [Mode::Strong, Mode::Weak] {
                let ok =
                    VisibilityGraph::build(w, mode) == VisibilityGraph::build_reference(w, mode);
                c.expect(ok, || {
                    format!("{mode} graph of {}", crate::rgs::format_word(w))
                });
            }
        });
    }
    out.push(c.done());
}

fn moment_checks(cfg: &VerifyConfig, out: &mut Vec<CheckResult>) {
    let reading = if cfg.mutate {
        WeakInteriorReading::Mutant
    } else {
        WeakInteriorReading::Derived
    };
    let mut strong = Check::new("strong-edge-probability");
    let mut first = Check::new("weak-minus-strong-first");
    let mut adjacent = Check::new("weak-minus-strong-adjacent");
    let mut interior = Check::new("weak-minus-strong-interior");
    let mut edges = Check::new("expected-edges");
    let mut degrees = Check::new("expected-degree");

    for n in 1..=cfg.max_n {
        let oracle = OracleTable::build(n, u64::MAX).expect("unguarded build");
        let model = EdgeModel::with_reading(n, reading);
        let total = BigRational::from_integer(BigInt::from(oracle.sequences()));
        for i in 1..=n {
            for j in i + 1..=n {
                let mismatch = |event: EdgeEvent, got: &BigRational, want: &BigRational| {
                    format!("(n, i, j) = ({n}, {i}, {j}): {event} closed form {got}, enumeration {want}")
                };
                let s = model.strong_edge_prob(i, j).unwrap().value;
                let so = oracle.edge_prob(i, j, EdgeEvent::Strong).unwrap().value;
                strong.expect(s == so, || mismatch(EdgeEvent::Strong, &s, &so));

                let w = model.weak_minus_strong_prob(i, j).unwrap().value;
                let wo = oracle
                    .edge_prob(i, j, EdgeEvent::WeakMinusStrong)
                    .unwrap()
                    .value;
                let target = match classify_pair(n, i, j).unwrap() {
                    PairClass::First => &mut first,
                    PairClass::Adjacent => &mut adjacent,
                    PairClass::Interior => &mut interior,
                };
                target.expect(w == wo, || mismatch(EdgeEvent::WeakMinusStrong, &w, &wo));
            }
        }
        for mode in [Mode::Strong, Mode::Weak] {
            let e = model.expected_edges(mode);
            let eo = rat(oracle.total_edges(mode), oracle.sequences());
            edges.expect(e == eo, || {
                format!("n = {n}, {mode}: closed form {e}, enumeration {eo}")
            });
            for node in 1..=n {
                let d = model.expected_degree(node, mode).unwrap();
                let dn = BigRational::from_integer(BigInt::from(oracle.total_degree(node, mode)));
                let dor = dn / &total;
                degrees.expect(d == dor, || {
                    format!("n = {n}, node {node}, {mode}: closed form {d}, enumeration {dor}")
                });
            }
        }
    }
    out.extend([strong, first, adjacent, interior, edges, degrees].map(Check::done));
}

fn series_checks(out: &mut Vec<CheckResult>) {
    let mut c = Check::new("moment-series-fixture");
    let egf = q_moment_egf(9);
    for (k, &(n, p, q)) in MOMENT_EGF_HEAD.iter().enumerate() {
        let want = rat(p, q);
        c.expect(egf[k] == (n, want.clone()), || {
            format!("coefficient x^{n}: computed {}, expected {want}", egf[k].1)
        });
    }
    out.push(c.done());

    let mut c = Check::new("distribution-series-fixture");
    let sp = sum_p(9);
    for (n, terms) in EDGE_DISTRIBUTION_HEAD.iter().enumerate() {
        let poly = sp.coeff(n);
        let width = terms
            .iter()
            .map(|t| t.0 + 1)
            .max()
            .unwrap_or(0)
            .max(poly.coeffs().len());
        for d in 0..width {
            let want = terms
                .iter()
                .find(|t| t.0 == d)
                .map_or_else(BigRational::zero, |t| rat(t.1, 1));
            c.expect(poly.coeff(d) == want, || {
                format!("coefficient x^{n} q^{d}: computed {}", poly.coeff(d))
            });
        }
    }
    out.push(c.done());

    let mut c = Check::new("moment-cross-route");
    for (n, cn) in q_moment_egf(12) {
        let fact: BigInt = (2..=n).map(BigInt::from).product();
        let bell = BigInt::from(crate::exactnum::bell(n));
        let via_series = cn * BigRational::new(fact, bell);
        let direct = EdgeModel::new(n).expected_edges(Mode::Strong);
        c.expect(via_series == direct, || {
            format!("n = {n}: series {via_series}, closed form {direct}")
        });
    }
    out.push(c.done());

    let mut c = Check::new("q-closed-form");
    for k in 1..=6 {
        c.expect(q_k(k, 12) == q_k_closed_form(k, 12), || format!("k = {k}"));
    }
    out.push(c.done());

    let mut c = Check::new("q-recurrence");
    for k in 2..=6 {
        let r = recurrence_residual(k, 12);
        c.expect(r.is_zero(), || {
            format!("k = {k}: residual nonzero from x^{:?}", r.valuation())
        });
    }
    out.push(c.done());
}

/// Runs the whole suite. Enumeration covers `n <= max_n`.
pub fn run_checks(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    number_checks(&mut out);
    rgs_checks(cfg.max_n, &mut out);
    hvg_checks(cfg.max_n, &mut out);
    moment_checks(cfg, &mut out);
    series_checks(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let results = run_checks(&VerifyConfig {
            max_n: 5,
            mutate: false,
        });
        for r in &results {
            assert!(r.passed(), "{}: {:?}", r.name, r.failure);
            assert!(r.cases > 0, "{} ran nothing", r.name);
        }
    }

    #[test]
    fn mutation_is_caught() {
        let results = run_checks(&VerifyConfig {
            max_n: 5,
            mutate: true,
        });
        let failed: Vec<_> = results
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.name)
            .collect();
        // the bad formula also leaks into the weak expectations downstream
        assert_eq!(
            failed,
            [
                "weak-minus-strong-interior",
                "expected-edges",
                "expected-degree"
            ]
        );
    }
}
