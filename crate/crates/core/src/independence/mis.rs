use std::collections::BTreeMap;

use serde::Serialize;

use crate::caps::{Caps, MAX_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy)]
struct Frame {
    next: usize,
    set: u64,
    dominated: u64,
    // excluded vertices that nothing chosen so far dominates
    pending: u64,
}

/// Streams the maximal independent sets of a graph in lexicographic order of
/// their ascending vertex sequences.
///
/// Vertices are decided in index order, include before exclude. A branch is cut
/// as soon as some excluded, undominated vertex has no neighbor left that
/// could still join the set.
pub struct MaximalIndependentSets {
    n: usize,
    adj: Vec<u64>,
    stack: Vec<Frame>,
}

pub fn enumerate_maximal_independent_sets(
    g: &Graph,
    caps: &Caps,
) -> Result<MaximalIndependentSets> {
    let cap = caps.enumeration.min(MAX_ENUMERATION_CAP);
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "maximal independent set enumeration",
            size: g.order(),
            cap,
        });
    }
    let adj = g.adjacency_masks().expect("order checked against the word size");
    Ok(MaximalIndependentSets {
        n: g.order(),
        adj,
        stack: vec![Frame {
            next: 0,
            set: 0,
            dominated: 0,
            pending: 0,
        }],
    })
}

impl MaximalIndependentSets {
    #[inline]
    fn at_or_above(&self, v: usize) -> u64 {
        let all = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        if v >= 64 {
            0
        } else {
            all & !((1u64 << v) - 1)
        }
    }

    fn stranded(&self, f: &Frame) -> bool {
        let avail = !f.dominated & self.at_or_above(f.next);
        let mut p = f.pending;
        while p != 0 {
            let w = p.trailing_zeros() as usize;
            p &= p - 1;
            if self.adj[w] & avail == 0 {
                return true;
            }
        }
        false
    }

    /// Like `next`, but yields the raw bit mask.
    pub fn next_mask(&mut self) -> Option<u64> {
        while let Some(f) = self.stack.pop() {
            if f.next == self.n {
                if f.pending == 0 {
                    return Some(f.set);
                }
                continue;
            }
            if self.stranded(&f) {
                continue;
            }
            let v = f.next;
            let bit = 1u64 << v;
            if f.dominated & bit != 0 {
                self.stack.push(Frame { next: v + 1, ..f });
                continue;
            }
            let closed = self.adj[v] | bit;
            self.stack.push(Frame {
                next: v + 1,
                pending: f.pending | bit,
                ..f
            });
            self.stack.push(Frame {
                next: v + 1,
                set: f.set | bit,
                dominated: f.dominated | closed,
                pending: f.pending & !closed,
            });
        }
        None
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.n;
        self.next_mask().map(|m| VertexSet::from_mask(n, m))
    }
}

pub fn independence_number(g: &Graph, caps: &Caps) -> Result<usize> {
    let mut it = enumerate_maximal_independent_sets(g, caps)?;
    let mut best = 0;
    while let Some(m) = it.next_mask() {
        best = best.max(m.count_ones() as usize);
    }
    Ok(best)
}

/// Well-coveredness verdict with certifying sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellCoveredReport {
    pub well_covered: bool,
    pub alpha: usize,
    pub min_maximal: usize,
    /// First maximum independent set in enumeration order.
    pub witness_max: VertexSet,
    /// First maximal independent set of minimum size in enumeration order.
    pub witness_min: VertexSet,
}

/// Full report; enumerates every maximal independent set.
pub fn is_well_covered(g: &Graph, caps: &Caps) -> Result<WellCoveredReport> {
    let mut it = enumerate_maximal_independent_sets(g, caps)?;
    let first = it.next_mask().expect("every graph has a maximal independent set");
    let (mut max, mut min) = (first, first);
    while let Some(m) = it.next_mask() {
        if m.count_ones() > max.count_ones() {
            max = m;
        }
        if m.count_ones() < min.count_ones() {
            min = m;
        }
    }
    let (alpha, min_maximal) = (max.count_ones() as usize, min.count_ones() as usize);
    Ok(WellCoveredReport {
        well_covered: alpha == min_maximal,
        alpha,
        min_maximal,
        witness_max: VertexSet::from_mask(g.order(), max),
        witness_min: VertexSet::from_mask(g.order(), min),
    })
}

/// Verdict only; stops at the first pair of maximal sets of different sizes.
pub fn check_well_covered(g: &Graph, caps: &Caps) -> Result<bool> {
    let mut it = enumerate_maximal_independent_sets(g, caps)?;
    let size = it.next_mask().map(u64::count_ones);
    while let Some(m) = it.next_mask() {
        if Some(m.count_ones()) != size {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of maximal independent sets of each size.
pub fn maximal_size_histogram(g: &Graph, caps: &Caps) -> Result<BTreeMap<usize, u64>> {
    let mut it = enumerate_maximal_independent_sets(g, caps)?;
    let mut hist = BTreeMap::new();
    while let Some(m) = it.next_mask() {
        *hist.entry(m.count_ones() as usize).or_insert(0) += 1;
    }
    Ok(hist)
}
