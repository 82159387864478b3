//! Horizontal visibility graphs of integer sequences.
//!
//! Positions `i < j` form a strong visible pair when every letter strictly
//! between them is smaller than both endpoints, and a weak visible pair when
//! every such letter is at most the smaller endpoint. Adjacent positions are
//! always visible. Nodes are 1-based.
//!
//! Each graph can be built two ways: a quadratic scan straight from the
//! definition, and a monotone-stack pass whose cost is linear in `n` plus the
//! number of edges. Both must agree on every input.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Strong,
    Weak,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Strong => "strong",
            Mode::Weak => "weak",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(Mode::Strong),
            "weak" => Ok(Mode::Weak),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// An immutable visibility graph. Edges `(i, j)` have `1 <= i < j <= n` and are
/// kept sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibilityGraph {
    n: usize,
    mode: Mode,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl VisibilityGraph {
    fn from_edges(n: usize, mode: Mode, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut degrees = vec![0; n];
        for &(i, j) in &edges {
            degrees[i - 1] += 1;
            degrees[j - 1] += 1;
        }
        VisibilityGraph {
            n,
            mode,
            edges,
            degrees,
        }
    }

    /// Monotone-stack construction.
    pub fn build<T: Ord>(seq: &[T], mode: Mode) -> Self {
        let mut edges = Vec::with_capacity(2 * seq.len());
        visit_edges(seq, mode, |i, j| edges.push((i, j)));
        Self::from_edges(seq.len(), mode, edges)
    }

    /// Direct quadratic scan of the definition.
    pub fn build_reference<T: Ord>(seq: &[T], mode: Mode) -> Self {
        let n = seq.len();
        let mut edges = Vec::new();
        for i in 0..n {
            // running maximum of seq[i+1..j]
            let mut inner_max: Option<&T> = None;
            for j in i + 1..n {
                let low = (&seq[i]).min(&seq[j]);
                let visible = match (inner_max, mode) {
                    (None, _) => true,
                    (Some(m), Mode::Strong) => m < low,
                    (Some(m), Mode::Weak) => m <= low,
                };
                if visible {
                    edges.push((i + 1, j + 1));
                }
                inner_max = Some(match inner_max {
                    Some(m) if m >= &seq[j] => m,
                    _ => &seq[j],
                });
            }
        }
        Self::from_edges(n, mode, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, node: usize) -> Result<usize> {
        if node == 0 || node > self.n {
            return Err(Error::NodeOutOfRange { n: self.n, node });
        }
        Ok(self.degrees[node - 1])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.binary_search(&key).is_ok()
    }

    /// `{"n":…,"mode":…,"edges":[[i,j],…]}` with edges sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "mode": self.mode.as_str(),
            "edges": self.edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        })
    }
}

pub fn strong_graph<T: Ord>(seq: &[T]) -> VisibilityGraph {
    VisibilityGraph::build(seq, Mode::Strong)
}

pub fn weak_graph<T: Ord>(seq: &[T]) -> VisibilityGraph {
    VisibilityGraph::build(seq, Mode::Weak)
}

/// Streams every visible pair `(i, j)` (1-based, `i < j`) to `emit`, in order
/// of increasing `j`. No allocation beyond the stack.
pub fn visit_edges<T: Ord>(seq: &[T], mode: Mode, mut emit: impl FnMut(usize, usize)) {
    let mut stack: Vec<usize> = Vec::new();
    for j in 0..seq.len() {
        let v = &seq[j];
        while let Some(&top) = stack.last() {
            if seq[top] < *v {
                emit(top + 1, j + 1);
                stack.pop();
            } else {
                break;
            }
        }
        match mode {
            Mode::Strong => {
                if let Some(&top) = stack.last() {
                    emit(top + 1, j + 1);
                    // an equal twin blocks everything behind it
                    if seq[top] == *v {
                        stack.pop();
                    }
                }
            }
            Mode::Weak => {
                let mut depth = stack.len();
                while depth > 0 && seq[stack[depth - 1]] == *v {
                    emit(stack[depth - 1] + 1, j + 1);
                    depth -= 1;
                }
                if depth > 0 {
                    emit(stack[depth - 1] + 1, j + 1);
                }
            }
        }
        stack.push(j);
    }
}

/// Number of visible pairs, without materialising the graph.
pub fn edge_count<T: Ord>(seq: &[T], mode: Mode) -> usize {
    let mut count = 0;
    visit_edges(seq, mode, |_, _| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<u32> {
        s.bytes().map(|b| (b - b'0') as u32).collect()
    }

    #[test]
    fn worked_example_12122() {
        let g = strong_graph(&w("12122"));
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degree(2).unwrap(), 3);
        assert_eq!(g.degree(5).unwrap(), 1);
        let gw = weak_graph(&w("12122"));
        assert_eq!(gw.edge_count(), 6);
        assert!(gw.contains(2, 5));
        assert!(!g.contains(2, 5));
    }

    #[test]
    fn flat_and_increasing() {
        assert_eq!(strong_graph(&w("11111")).edge_count(), 4);
        assert_eq!(weak_graph(&w("11111")).edge_count(), 10);
        assert_eq!(strong_graph(&w("12345")).edge_count(), 4);
        assert_eq!(weak_graph(&w("12345")).edge_count(), 4);
        assert_eq!(strong_graph(&w("1")).edge_count(), 0);
        assert_eq!(strong_graph(&w("11")).degree(1).unwrap(), 1);
    }

    #[test]
    fn example_partition_word() {
        let s = w("122132132");
        for mode in [Mode::Strong, Mode::Weak] {
            assert_eq!(
                VisibilityGraph::build(&s, mode),
                VisibilityGraph::build_reference(&s, mode)
            );
        }
    }

    #[test]
    fn node_range_checked() {
        let g = strong_graph(&w("121"));
        assert_eq!(g.degree(0), Err(Error::NodeOutOfRange { n: 3, node: 0 }));
        assert_eq!(g.degree(4), Err(Error::NodeOutOfRange { n: 3, node: 4 }));
    }

    #[test]
    fn json_shape() {
        let g = strong_graph(&w("12122"));
        assert_eq!(
            g.to_json().to_string(),
            r#"{"n":5,"mode":"strong","edges":[[1,2],[2,3],[2,4],[3,4],[4,5]]}"#
        );
    }

    #[test]
    fn empty_sequence() {
        let g = strong_graph::<u32>(&[]);
        assert_eq!(g.n(), 0);
        assert_eq!(g.edge_count(), 0);
    }
}
