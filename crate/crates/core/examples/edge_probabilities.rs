//! Exact edge probabilities for a uniform random set partition of [n], checked
//! against brute-force enumeration, plus the expected edge counts.

use hvgrgs::hvg::Mode;
use hvgrgs::moments::oracle::{OracleTable, DEFAULT_ENUMERATION_LIMIT};
use hvgrgs::moments::{classify_pair, EdgeEvent, EdgeModel};

fn main() -> hvgrgs::Result<()> {
    let n = 7;
    let model = EdgeModel::new(n);
    let oracle = OracleTable::build(n, DEFAULT_ENUMERATION_LIMIT)?;
    println!("n = {n}: {} sequences", oracle.sequences());
    println!(
        "{:>3} {:>3} {:>9} {:>12} {:>12}",
        "i", "j", "class", "strong", "weak-strong"
    );
    for i in 1..=n {
        for j in i + 1..=n {
            let s = model.edge_prob(i, j, EdgeEvent::Strong)?;
            let w = model.edge_prob(i, j, EdgeEvent::WeakMinusStrong)?;
            assert_eq!(s, oracle.edge_prob(i, j, EdgeEvent::Strong)?);
            assert_eq!(w, oracle.edge_prob(i, j, EdgeEvent::WeakMinusStrong)?);
            let class = classify_pair(n, i, j)?;
            println!("{i:>3} {j:>3} {class:>9} {:>12} {:>12}", s.value, w.value);
        }
    }

    // the closed forms stay cheap well past the reach of enumeration
    for n in [4, 10, 50] {
        let m = EdgeModel::new(n);
        let (v, vw) = (m.expected_edges(Mode::Strong), m.expected_edges(Mode::Weak));
        println!(
            "E(V_{n}) ≈ {:.4}, E(V^w_{n}) ≈ {:.4}",
            to_f64(&v),
            to_f64(&vw)
        );
    }
    Ok(())
}

fn to_f64(r: &hvgrgs::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
