//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed. Built with `harness = false` so the report is
//! never swallowed by output capture.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hvgrgs::exactnum::{
    big_to_f64, faulhaber_psi, faulhaber_psi_bernoulli, theta_dobinski_f64, NumberTables,
};
use hvgrgs::hvg::{Mode, VisibilityGraph};
use hvgrgs::moments::oracle::OracleTable;
use hvgrgs::moments::{classify_pair, EdgeEvent, EdgeModel, PairClass};
use hvgrgs::reference_values::{EDGE_DISTRIBUTION_HEAD, MOMENT_EGF_HEAD};
use hvgrgs::rgs::{enumerate, StamSampler, StamState};
use hvgrgs::series::{
    q_k, q_k_closed_form, q_moment_egf, recp_residual, recurrence_residual, stirling_column, sum_p,
};
use hvgrgs::{BigInt, BigRational, BigUint};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Goodness-of-fit tests reject below this p-value.
const SIGNIFICANCE: f64 = 1e-3;
/// Sample means must land within this many standard errors.
const MEAN_SIGMAS: f64 = 3.0;
/// Relative error allowed between exact Θ and its truncated Dobinski series.
const DOBINSKI_REL_TOL: f64 = 1e-9;
const SERIES_BUDGET: Duration = Duration::from_secs(10);
const ORACLE_BUDGET: Duration = Duration::from_secs(300);
const SEED: u64 = 20240917;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn within(budget: Duration, start: Instant, detail: String) -> Outcome {
    let spent = start.elapsed();
    if spent > budget {
        return Err(format!("{detail}; took {spent:.2?}, budget {budget:?}"));
    }
    Ok(format!("{detail} in {spent:.2?}"))
}

fn moment_series_fixture() -> Outcome {
    let start = Instant::now();
    let got = q_moment_egf(9);
    for (k, &(n, p, q)) in MOMENT_EGF_HEAD.iter().enumerate() {
        if got[k] != (n, rat(p, q)) {
            return Err(format!("x^{n}: computed {}, expected {p}/{q}", got[k].1));
        }
    }
    within(SERIES_BUDGET, start, "c_2..c_9 exact".into())
}

fn distribution_series_fixture() -> Outcome {
    let start = Instant::now();
    let sp = sum_p(9);
    for (n, terms) in EDGE_DISTRIBUTION_HEAD.iter().enumerate() {
        let poly = sp.coeff(n);
        let top = poly.degree().map_or(0, |d| d + 1);
        let width = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0).max(top);
        for d in 0..width {
            let want = terms
                .iter()
                .find(|t| t.0 == d)
                .map_or_else(|| rat(0, 1), |t| rat(t.1 as i64, 1));
            if poly.coeff(d) != want {
                return Err(format!(
                    "x^{n} q^{d}: computed {}, expected {want}",
                    poly.coeff(d)
                ));
            }
        }
    }
    within(SERIES_BUDGET, start, "nine polynomials exact".into())
}

/// Compares closed forms with enumeration over every pair of the chosen
/// classes, `3 <= n <= 10`.
fn certify(events: &[(EdgeEvent, PairClass)]) -> Outcome {
    let start = Instant::now();
    let mut pairs = 0usize;
    for n in 3..=10 {
        let oracle = OracleTable::build(n, u64::MAX).map_err(|e| e.to_string())?;
        let model = EdgeModel::new(n);
        for i in 1..=n {
            for j in i + 1..=n {
                let class = classify_pair(n, i, j).unwrap();
                for &(event, wanted) in events {
                    if class != wanted {
                        continue;
                    }
                    pairs += 1;
                    let got = model.edge_prob(i, j, event).unwrap().value;
                    let want = oracle.edge_prob(i, j, event).unwrap().value;
                    if got != want {
                        return Err(format!(
                            "{event} at (n, i, j) = ({n}, {i}, {j}): closed form {got}, enumeration {want}"
                        ));
                    }
                }
            }
        }
    }
    within(
        ORACLE_BUDGET,
        start,
        format!("{pairs} pair comparisons, zero mismatches"),
    )
}

fn strong_certification() -> Outcome {
    certify(&[(EdgeEvent::Strong, PairClass::Interior)])
}

fn weak_certification() -> Outcome {
    certify(&[
        (EdgeEvent::WeakMinusStrong, PairClass::Interior),
        (EdgeEvent::WeakMinusStrong, PairClass::First),
    ])
}

fn cross_route() -> Outcome {
    let tables = NumberTables::shared(12);
    for (n, c) in q_moment_egf(12) {
        let fact: BigInt = (2..=n).map(BigInt::from).product();
        let via_series = c * BigRational::new(fact, BigInt::from(tables.bell(n).clone()));
        let direct = EdgeModel::new(n).expected_edges(Mode::Strong);
        if via_series != direct {
            return Err(format!(
                "n = {n}: series {via_series}, closed form {direct}"
            ));
        }
    }
    let e2 = EdgeModel::new(2).expected_edges(Mode::Strong);
    let e4 = EdgeModel::new(4).expected_edges(Mode::Strong);
    if e2 != rat(1, 1) || e4 != rat(47, 15) {
        return Err(format!("E(V_2) = {e2}, E(V_4) = {e4}"));
    }
    Ok("n = 2..12 agree; E(V_2) = 1, E(V_4) = 47/15".into())
}

fn generating_function_identities() -> Outcome {
    for k in 1..=6 {
        if q_k(k, 12) != q_k_closed_form(k, 12) {
            return Err(format!("closed form differs from Q_{k}"));
        }
    }
    // the residual exactly as specified
    let mut bad = Vec::new();
    for k in 2..=6 {
        let r = recp_residual(k, 12);
        if let Some(v) = r.valuation() {
            bad.push(format!("k = {k}: {} x^{v}", r.coeff(v)));
        }
    }
    let split_ok = (2..=6).all(|k| recurrence_residual(k, 12).is_zero());
    if bad.is_empty() {
        return Ok("Q_k closed form exact; residual zero for k = 2..6".into());
    }
    Err(format!(
        "Q_k closed form exact for k <= 6, but residual nonzero: {}; \
         with the factor (1-(k+1)x)/(1-(k-1)x) on T_{{k+1}} the residual is {}",
        bad.join(", "),
        if split_ok {
            "zero for k = 2..6"
        } else {
            "still nonzero"
        }
    ))
}

fn hvg_equivalence() -> Outcome {
    let mut words = 0u64;
    for n in 1..=10 {
        let mismatch = enumerate(n, None).par_bridge().find_any(|s| {
            [Mode::Strong, Mode::Weak].iter().any(|&m| {
                VisibilityGraph::build(s.letters(), m)
                    != VisibilityGraph::build_reference(s.letters(), m)
            })
        });
        if let Some(s) = mismatch {
            return Err(format!("fast and reference graphs differ on {s}"));
        }
        words += NumberTables::shared(n).bell(n).to_u64().unwrap();
    }
    let random = (0..10_000u64).into_par_iter().find_map_any(|k| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ k);
        let len = rng.random_range(1..=1000);
        let w: Vec<u32> = (0..len).map(|_| rng.random_range(1..=20)).collect();
        [Mode::Strong, Mode::Weak]
            .iter()
            .find(|&&m| VisibilityGraph::build(&w, m) != VisibilityGraph::build_reference(&w, m))
            .map(|m| format!("{m} graph differs on random word #{k}"))
    });
    match random {
        Some(e) => Err(e),
        None => Ok(format!(
            "{words} sequences and 10000 random words, both modes"
        )),
    }
}

fn chi_square(observed: &[u64], expected_p: &[f64]) -> f64 {
    let total: u64 = observed.iter().sum();
    let stat: f64 = observed
        .iter()
        .zip(expected_p)
        .map(|(&o, &p)| {
            let e = p * total as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    ChiSquared::new((observed.len() - 1) as f64)
        .unwrap()
        .sf(stat)
}

fn sampler() -> Outcome {
    const DRAWS: usize = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let sampler = StamSampler::new(4);
    let all: Vec<Vec<u32>> = enumerate(4, None).map(|s| s.into_inner()).collect();
    let mut counts = vec![0u64; all.len()];
    let (mut sum, mut sum_sq) = (0f64, 0f64);
    for _ in 0..DRAWS {
        let s = sampler.sample(&mut rng);
        let idx = all
            .iter()
            .position(|w| w.as_slice() == s.letters())
            .unwrap();
        counts[idx] += 1;
        let v = VisibilityGraph::build(s.letters(), Mode::Strong).edge_count() as f64;
        sum += v;
        sum_sq += v * v;
    }
    let p_uniform = chi_square(&counts, &[1.0 / 15.0; 15]);
    if p_uniform <= SIGNIFICANCE {
        return Err(format!("uniformity over R_4 rejected, p = {p_uniform:.2e}"));
    }
    let n = DRAWS as f64;
    let mean = sum / n;
    let stderr = ((sum_sq - sum * sum / n) / (n - 1.0) / n).sqrt();
    let gap = (mean - 47.0 / 15.0).abs();
    if gap >= MEAN_SIGMAS * stderr {
        return Err(format!(
            "mean V_4 = {mean:.5}, {:.2} standard errors from 47/15",
            gap / stderr
        ));
    }

    // occupancy law for a fixed box count: m = 3, i = 3
    let tables = NumberTables::shared(3);
    let law: Vec<f64> = (1..=3u64)
        .map(|t| {
            let falling: u64 = (4 - t..=3).product();
            big_to_f64(&tables.stirling2(3, t as usize)) * falling as f64 / 27.0
        })
        .collect();
    let mut occupancy = [0u64; 3];
    for _ in 0..DRAWS {
        let run = StamState::run(3, 3, &mut rng);
        occupancy[run.occupied[2] as usize - 1] += 1;
    }
    let p_occ = chi_square(&occupancy, &law);
    if p_occ <= SIGNIFICANCE {
        return Err(format!("occupancy law rejected, p = {p_occ:.2e}"));
    }
    Ok(format!(
        "uniformity p = {p_uniform:.3}; mean V_4 = {mean:.4} ({:.2} se from 47/15); occupancy p = {p_occ:.3}",
        gap / stderr
    ))
}

fn number_identities() -> Outcome {
    let tables = NumberTables::shared(20);
    for n in 0..=20 {
        let s: BigUint = tables.stirling_row(n).iter().sum();
        if &s != tables.bell(n) {
            return Err(format!(
                "row sum of S_{n},k is {s}, B_{n} = {}",
                tables.bell(n)
            ));
        }
    }
    for k in 0..=12 {
        let col = stirling_column(k, 12);
        for n in 0..=12 {
            if col.coeff(n) != BigRational::from_integer(tables.stirling2(n, k).into()) {
                return Err(format!("[x^{n}] of the k = {k} column is {}", col.coeff(n)));
            }
        }
    }
    for n in 1..=10 {
        for t in 0..=50 {
            let direct = BigRational::from_integer(faulhaber_psi(n, t).into());
            if faulhaber_psi_bernoulli(n, t) != direct {
                return Err(format!("Bernoulli form of Psi_{n}({t})"));
            }
        }
    }
    let mut worst = 0f64;
    for n in 0..=12 {
        for t in 0..=12u64 {
            let exact = big_to_f64(&tables.theta(n, t));
            let rel = ((theta_dobinski_f64(n, t, 150) - exact) / exact).abs();
            worst = worst.max(rel);
        }
    }
    if worst >= DOBINSKI_REL_TOL {
        return Err(format!("Theta vs Dobinski relative error {worst:e}"));
    }
    Ok(format!("all exact; worst Theta relative error {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("moment series coefficients", moment_series_fixture),
        ("edge distribution series", distribution_series_fixture),
        (
            "strong edge probability vs enumeration",
            strong_certification,
        ),
        (
            "weak-minus-strong probability vs enumeration",
            weak_certification,
        ),
        ("expected edges by two routes", cross_route),
        (
            "Q_k closed form and recurrence",
            generating_function_identities,
        ),
        ("fast vs reference visibility graphs", hvg_equivalence),
        ("Stam sampler statistics", sampler),
        ("number identities", number_identities),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
