//! Bell and Stirling numbers, Bernoulli numbers and the shifted Dobinski sums
//! Θ_n(t), all exact.

use hvgrgs::exactnum::{faulhaber_psi, faulhaber_psi_bernoulli, theta_dobinski_f64, NumberTables};

fn main() {
    let tables = NumberTables::new(12);
    for n in 0..=12 {
        let row: Vec<String> = tables
            .stirling_row(n)
            .iter()
            .map(|s| s.to_string())
            .collect();
        println!(
            "B_{n:<2} = {:>7}   S_{n},k: {}",
            tables.bell(n),
            row.join(" ")
        );
    }

    let b: Vec<String> = (0..=10)
        .map(|l| tables.bernoulli_plus(l).to_string())
        .collect();
    println!("\nB+_0..10: {}", b.join(", "));

    // power sums two ways
    let (n, t) = (5, 20);
    println!(
        "Psi_{n}({t}) = {} = {}",
        faulhaber_psi(n, t),
        faulhaber_psi_bernoulli(n, t)
    );

    // Θ_n(t) = Σ_ℓ C(n,ℓ) t^(n-ℓ) B_ℓ against its defining series
    for t in 0..4 {
        println!(
            "Theta_6({t}) = {:>6}   series ≈ {:.6}",
            tables.theta(6, t),
            theta_dobinski_f64(6, t, 60)
        );
    }
}
