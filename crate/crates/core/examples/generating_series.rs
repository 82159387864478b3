//! Truncated generating series for the number of strong edges.

use hvgrgs::series::{p_k, q_k, q_k_closed_form, q_moment_egf, recurrence_residual, sum_p};

fn main() {
    let order = 9;
    println!("Σ_k P_k(x, q), coefficient of x^n:");
    for (n, poly) in sum_p(order).coeffs().iter().enumerate() {
        println!("  x^{n}: {poly}");
    }
    println!(
        "P_2(x, q) = {:?}",
        p_k(2, 5)
            .coeffs()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
    );

    println!("\nEGF of B_n E(V_n):");
    for (n, c) in q_moment_egf(order) {
        println!("  c_{n} = {c}");
    }

    for k in 1..=6 {
        assert_eq!(q_k(k, 12), q_k_closed_form(k, 12));
    }
    for k in 2..=6 {
        assert!(recurrence_residual(k, 12).is_zero());
    }
    println!("\nQ_k closed form and recurrence hold for k <= 6 to order 12");
}
