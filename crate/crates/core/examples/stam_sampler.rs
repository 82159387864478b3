//! Uniform random set partitions with Stam's algorithm, and the empirical
//! edge count next to its exact expectation.

use hvgrgs::hvg::{edge_count, Mode};
use hvgrgs::moments::EdgeModel;
use hvgrgs::rgs::StamSampler;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sampler = StamSampler::new(12);
    for _ in 0..5 {
        let run = sampler.run(&mut rng);
        println!("M = {:>2}  {}", run.boxes, run.sequence());
    }

    let n = 60;
    let draws = 20_000;
    let sampler = StamSampler::new(n);
    let mut total = 0usize;
    for _ in 0..draws {
        total += edge_count(sampler.sample(&mut rng).letters(), Mode::Strong);
    }
    let exact = EdgeModel::new(n)
        .expected_edges(Mode::Strong)
        .to_f64()
        .unwrap();
    println!(
        "n = {n}: mean V = {:.3} over {draws} draws, exact {exact:.3}",
        total as f64 / draws as f64
    );
}
