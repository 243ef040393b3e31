//! Turán graphs and their clique counts.
//!
//! `T(n, r)` is the complete multipartite graph on `n` vertices with `r` parts
//! whose sizes differ by at most one. A `k`-clique picks at most one vertex per
//! part, so `t_k(n, r)` is the `k`-th elementary symmetric polynomial of the part
//! sizes.

use crate::complex::check_ground_size;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vector::IntVector;

fn check_params(n: usize, r: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    Ok(())
}

/// Part sizes of `T(n, r)`, larger parts first. `r > n` is treated as `r = n`.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    check_params(n, r)?;
    let r = r.min(n);
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|i| if i < rem { q + 1 } else { q }).collect())
}

/// `T(n, r)` with each part a contiguous block of labels, larger parts first.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    check_ground_size(n)?;
    let parts = turan_parts(n, r)?;
    complete_multipartite(&parts)
}

/// Complete multipartite graph with the given part sizes, parts laid out as
/// consecutive label blocks in the order given.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::complete(n)?;
    let mut start = 1;
    for &size in parts {
        for u in start..start + size {
            for v in u + 1..start + size {
                g.remove_edge(u, v)?;
            }
        }
        start += size;
    }
    Ok(g)
}

/// `e_1, ..., e_len` of `values`, computed by the usual one-value-at-a-time
/// recurrence `e_k <- e_k + x * e_{k-1}` with checked `u64` arithmetic.
pub fn elementary_symmetric(values: &[usize], len: usize) -> Result<IntVector> {
    // e[0] = 1 is the constant term
    let mut e = vec![0u64; len + 1];
    e[0] = 1;
    for (seen, &x) in values.iter().enumerate() {
        let top = (seen + 1).min(len);
        for k in (1..=top).rev() {
            let term = (x as u64)
                .checked_mul(e[k - 1])
                .ok_or(Error::Overflow("elementary symmetric polynomial"))?;
            e[k] = e[k]
                .checked_add(term)
                .ok_or(Error::Overflow("elementary symmetric polynomial"))?;
        }
    }
    e.remove(0);
    Ok(IntVector::new(e))
}

/// `t_k(n, r)` for `k = 1..=n`.
pub fn turan_clique_vector(n: usize, r: usize) -> Result<IntVector> {
    let parts = turan_parts(n, r)?;
    elementary_symmetric(&parts, n)
}
