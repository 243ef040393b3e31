//! Simple undirected graphs on `{1..n}` with neighbor bit masks.

use std::fmt;

use crate::complex::{bits_through, check_ground_size, BitIter, Face};
use crate::error::{Error, Result};
use crate::vector::IntVector;

/// A simple graph on the vertex set `{1..n}`, `n <= 64`.
///
/// `adj[i]` holds the neighbors of vertex `i + 1` as a mask in the same bit
/// layout as [`Face`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is allowed.
    pub fn empty(n: usize) -> Result<Graph> {
        check_ground_size(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let full = Face::full(n).mask();
        for (i, row) in g.adj.iter_mut().enumerate() {
            *row = full & !(1u64 << i);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from neighbor masks; the caller guarantees a
    /// symmetric, loop-free relation within `{1..n}`.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::LabelOutOfRange { label: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u - 1] |= 1u64 << (v - 1);
        self.adj[v - 1] |= 1u64 << (u - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u - 1] &= !(1u64 << (v - 1));
        self.adj[v - 1] &= !(1u64 << (u - 1));
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & (1u64 << (v - 1)) != 0
    }

    /// Open neighborhood of `u`.
    pub fn neighborhood(&self, u: usize) -> Result<Face> {
        self.check_vertex(u)?;
        Ok(Face::from_mask(self.adj[u - 1]))
    }

    pub(crate) fn neighbors_mask(&self, u: usize) -> u64 {
        self.adj[u - 1]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u - 1].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, &row)| {
            BitIter(row & !bits_through(i)).map(move |j| (i + 1, j + 1))
        })
    }

    /// The subgraph induced on `vertices`, relabeled `1..=|W|` in increasing
    /// label order, together with the map from new labels to old ones
    /// (`labels[new - 1] = old`). Labels outside `{1..n}` are ignored.
    pub fn induced_subgraph(&self, vertices: Face) -> (Graph, Vec<usize>) {
        let keep = vertices.intersection(self.vertex_set());
        let labels: Vec<usize> = keep.vertices().collect();
        let adj = labels
            .iter()
            .map(|&old| {
                let row = self.adj[old - 1];
                labels
                    .iter()
                    .enumerate()
                    .filter(|&(_, &other)| row & (1u64 << (other - 1)) != 0)
                    .fold(0u64, |acc, (j, _)| acc | (1u64 << j))
            })
            .collect();
        (Graph::from_adjacency_unchecked(adj), labels)
    }

    /// Calls `visit` once for every nonempty clique.
    ///
    /// Cliques are grown along increasing labels: each partial clique is
    /// extended only by common neighbors above its largest vertex, so every
    /// clique is produced exactly once.
    pub fn for_each_clique(&self, mut visit: impl FnMut(Face)) {
        fn extend(adj: &[u64], clique: u64, candidates: u64, visit: &mut impl FnMut(Face)) {
            for v in BitIter(candidates) {
                let grown = clique | (1u64 << v);
                visit(Face::from_mask(grown));
                let higher = candidates & !bits_through(v);
                extend(adj, grown, higher & adj[v], visit);
            }
        }
        extend(&self.adj, 0, self.vertex_set().mask(), &mut visit);
    }

    /// Entry `k` is the number of `k`-cliques, `k = 1..=n`.
    pub fn clique_vector(&self) -> IntVector {
        // c_k <= C(64, k) < 2^64, so the counters cannot overflow
        fn extend(adj: &[u64], depth: usize, candidates: u64, counts: &mut [u64]) {
            counts[depth] += candidates.count_ones() as u64;
            if depth + 1 == counts.len() {
                return;
            }
            for v in BitIter(candidates) {
                let next = candidates & adj[v] & !bits_through(v);
                if next != 0 {
                    extend(adj, depth + 1, next, counts);
                }
            }
        }
        let mut counts = vec![0u64; self.n];
        if self.n > 0 {
            extend(&self.adj, 0, self.vertex_set().mask(), &mut counts);
        }
        IntVector::new(counts)
    }

    /// Size of a largest clique; 0 for the graph without vertices.
    pub fn clique_number(&self) -> usize {
        fn grow(adj: &[u64], size: usize, candidates: u64, best: &mut usize) {
            if candidates == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            for v in BitIter(candidates) {
                let next = candidates & adj[v] & !bits_through(v);
                grow(adj, size + 1, next, best);
            }
        }
        let mut best = 0;
        grow(&self.adj, 0, self.vertex_set().mask(), &mut best);
        best
    }

    /// A proper coloring with colors in `1..=r` (indexed by vertex, `colors[v - 1]`),
    /// or `None` if none exists.
    ///
    /// Exact backtracking: vertices are colored in order of decreasing degree,
    /// a vertex whose available colors run out fails immediately, and a fresh
    /// color is only ever the smallest unused one so color permutations are not
    /// revisited.
    pub fn color(&self, r: usize) -> Option<Vec<usize>> {
        if r == 0 {
            return if self.n == 0 { Some(vec![]) } else { None };
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.adj[v].count_ones()), v));
        let mut colors = vec![0usize; self.n];

        fn assign(g: &Graph, order: &[usize], pos: usize, used: usize, r: usize, colors: &mut [usize]) -> bool {
            let Some(&v) = order.get(pos) else {
                return true;
            };
            let mut blocked = 0u64;
            for w in BitIter(g.adj[v]) {
                if colors[w] > 0 {
                    blocked |= 1u64 << colors[w];
                }
            }
            let limit = (used + 1).min(r);
            for c in 1..=limit {
                if blocked & (1u64 << c) != 0 {
                    continue;
                }
                colors[v] = c;
                if assign(g, order, pos + 1, used.max(c), r, colors) {
                    return true;
                }
            }
            colors[v] = 0;
            false
        }

        if r >= self.n {
            return Some((1..=self.n).collect());
        }
        assign(self, &order, 0, 0, r, &mut colors).then_some(colors)
    }

    pub fn is_r_colorable(&self, r: usize) -> bool {
        self.color(r).is_some()
    }

    /// True if `colors` is a proper coloring using colors in `1..=r`.
    pub fn is_proper_coloring(&self, colors: &[usize], r: usize) -> bool {
        colors.len() == self.n
            && colors.iter().all(|&c| (1..=r).contains(&c))
            && self.edges().all(|(u, v)| colors[u - 1] != colors[v - 1])
    }

    /// Joins `self` with an independent set of `m` new vertices labeled
    /// `n+1..=n+m`, each adjacent to every old vertex.
    pub fn join_with_independent_set(&self, m: usize) -> Result<Graph> {
        let total = self.n + m;
        check_ground_size(total)?;
        let old = Face::full(self.n).mask();
        let new = Face::full(total).mask() & !old;
        let adj = (0..total)
            .map(|i| if i < self.n { self.adj[i] | new } else { old })
            .collect();
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Vertices sharing the neighborhood of `v` and not adjacent to it, `v`
    /// included.
    pub(crate) fn twins_of(&self, v: usize) -> Face {
        let nv = self.adj[v - 1];
        let others = Face::full(self.n).mask() & !nv;
        Face::from_mask(
            BitIter(others)
                .filter(|&w| self.adj[w] == nv)
                .fold(0u64, |acc, w| acc | (1u64 << w)),
        )
    }

    /// Parts of a complete multipartite graph: non-adjacency must be an
    /// equivalence relation. Parts are returned ordered by smallest label.
    pub fn multipartite_parts(&self) -> Option<Vec<Face>> {
        let mut seen = 0u64;
        let mut parts = Vec::new();
        for v in 1..=self.n {
            if seen & (1u64 << (v - 1)) != 0 {
                continue;
            }
            let non_neighbors = Face::full(self.n).mask() & !self.adj[v - 1];
            let part = self.twins_of(v);
            if part.mask() != non_neighbors {
                return None;
            }
            seen |= part.mask();
            parts.push(part);
        }
        Some(parts)
    }

    pub fn is_complete_multipartite(&self) -> bool {
        self.multipartite_parts().is_some()
    }

    fn is_well_formed(&self) -> bool {
        let full = Face::full(self.n).mask();
        (0..self.n).all(|i| {
            let row = self.adj[i];
            row & !full == 0
                && row & (1u64 << i) == 0
                && BitIter(row).all(|j| self.adj[j] & (1u64 << i) != 0)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
