//! Known series coefficients used as fixtures by the verification suite.

/// `(n, numerator, denominator)` of `c_n = B_n E(V_n) / n!` for `n = 2..=9`.
pub const MOMENT_EGF_HEAD: [(usize, i64, i64); 8] = [
    (2, 1, 1),
    (3, 5, 3),
    (4, 47, 24),
    (5, 113, 60),
    (6, 19, 12),
    (7, 1013, 840),
    (8, 11429, 13440),
    (9, 204361, 362880),
];

/// `Σ_{π ∈ R_n} q^V(π)` for `n = 0..=9`, as `(power, count)` terms.
pub const EDGE_DISTRIBUTION_HEAD: [&[(usize, u64)]; 10] = [
    &[(0, 1)],
    &[(0, 1)],
    &[(1, 2)],
    &[(2, 5)],
    &[(4, 2), (3, 13)],
    &[(5, 18), (4, 34)],
    &[(7, 11), (6, 103), (5, 89)],
    &[(9, 6), (8, 160), (7, 478), (6, 233)],
    &[(11, 2), (10, 206), (9, 1359), (8, 1963), (7, 610)],
    &[(12, 230), (11, 3066), (10, 8813), (9, 7441), (8, 1597)],
];
