use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::binomial2;

/// Largest order for exhaustive labeled enumeration (2^28 graphs).
pub const MAX_LABELED_ORDER: usize = 8;

/// Every labeled graph on `n` vertices, one shard at a time.
///
/// Graph number `p` has the edge set selected by the bits of `p` over the
/// pairs `(i, j)`, `i < j`, in row-major order (see
/// [`Graph::from_upper_triangle_bits`]). Shard `index` of `total` yields the
/// numbers `p ≡ index (mod total)` in increasing order.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
    stride: u64,
}

impl LabeledGraphs {
    /// Next graph together with its pattern number.
    pub fn next_indexed(&mut self) -> Option<(u64, Graph)> {
        if self.next >= self.end {
            return None;
        }
        let p = self.next;
        self.next += self.stride;
        let g = Graph::from_upper_triangle_bits(self.n, p).expect("order checked on construction");
        Some((p, g))
    }

    /// Number of labeled graphs on `n` vertices, across all shards.
    pub fn total_count(n: usize) -> u64 {
        1u64 << binomial2(n)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_indexed().map(|(_, g)| g)
    }
}

pub fn enumerate_labeled(n: usize, shard: (usize, usize)) -> Result<LabeledGraphs> {
    if n == 0 || n > MAX_LABELED_ORDER {
        return Err(Error::EnumerationOrder(n));
    }
    let (index, total) = shard;
    if total == 0 || index >= total {
        return Err(Error::InvalidShard { index, total });
    }
    Ok(LabeledGraphs {
        n,
        next: index as u64,
        end: LabeledGraphs::total_count(n),
        stride: total as u64,
    })
}
