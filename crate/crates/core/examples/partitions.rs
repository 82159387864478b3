//! Restricted growth sequences and the set partitions they encode.

use hvgrgs::rgs::{enumerate, RestrictedGrowthSequence, SetPartition};

fn main() -> hvgrgs::Result<()> {
    let s: RestrictedGrowthSequence = "122132132".parse()?;
    let p = s.to_partition();
    println!("{s} <-> {p} ({} blocks)", p.block_count());

    let back: SetPartition = "{1,4,7}|{2,3,6,9}|{5,8}".parse()?;
    assert_eq!(RestrictedGrowthSequence::from_partition(&back)?, s);

    match RestrictedGrowthSequence::parse(&[1, 3, 1]) {
        Err(e) => println!("131 rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    println!("\nR_4 with two blocks:");
    for w in enumerate(4, Some(2)) {
        println!("  {w}  {}", w.to_partition());
    }
    for n in 1..=10 {
        println!("|R_{n}| = {}", enumerate(n, None).count());
    }
    Ok(())
}
