//! Strong and weak horizontal visibility graphs of one sequence.

use hvgrgs::hvg::{Mode, VisibilityGraph};
use hvgrgs::rgs::parse_word;

fn main() -> hvgrgs::Result<()> {
    let word = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "122132132".into());
    let seq = parse_word(&word)?;
    for mode in [Mode::Strong, Mode::Weak] {
        let g = VisibilityGraph::build(&seq, mode);
        assert_eq!(g, VisibilityGraph::build_reference(&seq, mode));
        println!(
            "{mode}: {} edges, degrees {:?}",
            g.edge_count(),
            g.degrees()
        );
        println!("  {}", g.to_json());
    }
    Ok(())
}
