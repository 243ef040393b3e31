//! Exhaustive instance streams: labeled graphs and simplicial complexes.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` for labeled graph enumeration (`2^21` graphs at `n = 7`).
pub const MAX_GRAPH_ORDER: usize = 7;
/// Largest `n` for complex enumeration without the long-run flag.
pub const MAX_COMPLEX_GROUND: usize = 5;
/// Largest `n` for complex enumeration with the long-run flag.
pub const MAX_COMPLEX_GROUND_LONG: usize = 6;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order; bit `i` of a graph
/// index decides the `i`-th pair.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
}

fn check_graph_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > MAX_GRAPH_ORDER {
        return Err(Error::CapExceeded {
            what: "n",
            value: n,
            cap: MAX_GRAPH_ORDER,
            hint: " for labeled graph enumeration",
        });
    }
    Ok(())
}

/// `2^C(n,2)`.
pub fn labeled_graph_count(n: usize) -> Result<u64> {
    check_graph_order(n)?;
    Ok(1u64 << vertex_pairs(n).len())
}

/// The labeled graph with the given index in the enumeration order.
pub fn labeled_graph(n: usize, index: u64) -> Result<Graph> {
    check_graph_order(n)?;
    let pairs = vertex_pairs(n);
    if index >> pairs.len() != 0 {
        return Err(Error::IndexOutOfRange {
            index: index as usize,
            len: 1 << pairs.len(),
        });
    }
    Ok(graph_from_bits(n, &pairs, index))
}

pub(crate) fn graph_from_bits(n: usize, pairs: &[(usize, usize)], bits: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n within cap");
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if bits >> i & 1 == 1 {
            g.add_edge(u, v).expect("pair within range");
        }
    }
    g
}

/// All `2^C(n,2)` labeled graphs on `{1..n}`, each once, in index order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let count = labeled_graph_count(n)?;
    let pairs = vertex_pairs(n);
    Ok((0..count).map(move |bits| graph_from_bits(n, &pairs, bits)))
}

fn check_complex_ground(n: usize, long_run: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let cap = if long_run {
        MAX_COMPLEX_GROUND_LONG
    } else {
        MAX_COMPLEX_GROUND
    };
    if n > cap {
        return Err(Error::CapExceeded {
            what: "n",
            value: n,
            cap,
            hint: if long_run {
                " for complex enumeration"
            } else {
                " for complex enumeration without --long-run"
            },
        });
    }
    Ok(())
}

/// Visits every downward closed family of subsets of `{1..n}` (the void family
/// included) exactly once, with its index in a fixed depth-first order.
///
/// Subsets are decided in increasing mask order, so every proper subset of a
/// set is decided before the set itself; a set may be included only if all
/// its codimension-one subsets were. Only families whose index is congruent to
/// `shard` modulo `shards` are materialized and passed to `visit`, so a sweep
/// can be split into independent, mergeable pieces.
pub fn for_each_complex_sharded(
    n: usize,
    long_run: bool,
    shard: u64,
    shards: u64,
    mut visit: impl FnMut(u64, SimplicialComplex),
) -> Result<u64> {
    check_complex_ground(n, long_run)?;
    if shards == 0 || shard >= shards {
        return Err(Error::InvalidParameter(format!("shard {shard} of {shards}")));
    }
    let size = 1usize << n;

    // `family` has bit m set when subset m is included
    #[allow(clippy::too_many_arguments)]
    fn go(
        n: usize,
        size: usize,
        mask: usize,
        family: u64,
        index: &mut u64,
        shard: u64,
        shards: u64,
        visit: &mut impl FnMut(u64, SimplicialComplex),
    ) {
        if mask == size {
            if *index % shards == shard {
                let faces = (0..size as u64)
                    .filter(|&m| family >> m & 1 == 1)
                    .map(Face::from_mask)
                    .collect();
                visit(*index, SimplicialComplex::from_sorted_unchecked(n, faces));
            }
            *index += 1;
            return;
        }
        go(n, size, mask + 1, family, index, shard, shards, visit);
        let allowed = if mask == 0 {
            true
        } else {
            crate::complex::BitIter(mask as u64).all(|b| family >> (mask & !(1 << b)) & 1 == 1)
        };
        if allowed {
            go(n, size, mask + 1, family | 1u64 << mask, index, shard, shards, visit);
        }
    }

    let mut index = 0;
    go(n, size, 0, 0, &mut index, shard, shards, &mut visit);
    Ok(index)
}

/// Visits every complex on `{1..n}`; returns how many were visited.
pub fn for_each_complex(n: usize, long_run: bool, mut visit: impl FnMut(SimplicialComplex)) -> Result<u64> {
    for_each_complex_sharded(n, long_run, 0, 1, |_, c| visit(c))
}

/// All complexes on `{1..n}` for `n <= 5`.
pub fn enumerate_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    let mut out = Vec::new();
    for_each_complex(n, false, |c| out.push(c))?;
    Ok(out)
}

/// Independent count of downward closed families: every such family is the
/// closure of its antichain of maximal sets, so count antichains in the
/// subset lattice of `{1..n}` directly. Sets are considered in decreasing
/// size; a set may join the antichain only if no chosen set contains it.
pub fn count_antichains(n: usize) -> Result<u64> {
    let mut count = 0;
    antichains(n, |_| count += 1)?;
    Ok(count)
}

/// Visits every antichain of subsets of `{1..n}` as a list of masks.
pub fn antichains(n: usize, mut visit: impl FnMut(&[u64])) -> Result<()> {
    check_complex_ground(n, true)?;
    let mut sets: Vec<u64> = (0..1u64 << n).collect();
    sets.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));

    fn go(sets: &[u64], pos: usize, chosen: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
        if pos == sets.len() {
            visit(chosen);
            return;
        }
        go(sets, pos + 1, chosen, visit);
        let s = sets[pos];
        // chosen sets are at least as large, so only containment of s can occur
        if chosen.iter().all(|&c| s & !c != 0) {
            chosen.push(s);
            go(sets, pos + 1, chosen, visit);
            chosen.pop();
        }
    }
    go(&sets, 0, &mut Vec::new(), &mut visit);
    Ok(())
}
