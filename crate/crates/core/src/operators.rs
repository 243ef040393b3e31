//! Shifting operators on graphs and complexes.
//!
//! The graph operator re-attaches a vertex `u` so that its neighborhood becomes
//! that of a non-adjacent vertex `v`. Repeating it turns any graph into a
//! complete multipartite one without raising the clique number, and moving
//! vertices between unequal parts then reaches a Turán graph. The complex
//! operator does the same for a vertex of a simplicial complex, replacing the
//! star of `u` by a cone over the link of the target.

use serde::{Deserialize, Serialize};

use crate::complex::{BitIter, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One step of an operator trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: String,
    pub u: usize,
    pub v: usize,
}

impl TraceStep {
    fn new(op: &str, u: usize, v: usize) -> TraceStep {
        TraceStep { op: op.to_string(), u, v }
    }
}

fn check_shift_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.neighborhood(u)?;
    g.neighborhood(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if g.has_edge(u, v) {
        return Err(Error::Adjacent { u, v });
    }
    Ok(())
}

/// `G_{u -> v}`: drops every edge at `u` and joins `u` to each neighbor of `v`.
pub fn zykov_shift(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    check_shift_pair(g, u, v)?;
    let mut out = g.clone();
    for z in g.neighborhood(u)?.vertices() {
        out.remove_edge(u, z)?;
    }
    for w in g.neighborhood(v)?.vertices() {
        out.add_edge(u, w)?;
    }
    Ok(out)
}

/// Both sides of `c_k(G_{u->v}) = c_k(G) - c_{k-1}(G[N(u)]) + c_{k-1}(G[N(v)])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueDelta {
    /// `c_k` of the shifted graph, counted directly.
    pub shifted: i128,
    /// The right-hand side assembled from counts on `G` alone.
    pub predicted: i128,
}

impl CliqueDelta {
    pub fn holds(&self) -> bool {
        self.shifted == self.predicted
    }
}

/// Evaluates both sides of the clique-count identity for the shift `u -> v`,
/// with the convention that every graph has one 0-clique.
pub fn zykov_clique_delta(g: &Graph, u: usize, v: usize, k: usize) -> Result<CliqueDelta> {
    let shifted = zykov_shift(g, u, v)?;
    let link_count = |w: usize| -> Result<i128> {
        let (sub, _) = g.induced_subgraph(g.neighborhood(w)?);
        Ok(sub.clique_vector().get_or_unit(k.saturating_sub(1)) as i128)
    };
    let ck = |h: &Graph| h.clique_vector().get(k) as i128;
    let predicted = if k == 0 {
        1
    } else {
        ck(g) - link_count(u)? + link_count(v)?
    };
    let shifted = if k == 0 { 1 } else { ck(&shifted) };
    Ok(CliqueDelta { shifted, predicted })
}

/// Result of [`symmetrize_to_multipartite`].
#[derive(Clone, Debug)]
pub struct Symmetrization {
    pub graph: Graph,
    pub trace: Vec<TraceStep>,
    /// Number of rounds run; each round retires at least one vertex, so this
    /// never exceeds the order of the graph.
    pub rounds: usize,
}

/// Repeatedly shifts non-neighbors onto a pivot until the graph is complete
/// multipartite.
///
/// Each round picks a pivot `v` of maximum degree (smallest label on ties)
/// among the vertices still in play, shifts every non-neighbor of `v` in play
/// onto `v` in ascending label order, and retires `v` together with those
/// vertices; play continues on the neighbors of `v`. Shifts that would not
/// change the graph are skipped and not traced. Rounds stop once the vertices
/// in play form a clique. The number of vertices in play strictly decreases,
/// which bounds the rounds by `n` and the shifts by `n - 1`.
pub fn symmetrize_to_multipartite(g: &Graph) -> Symmetrization {
    let mut graph = g.clone();
    let mut trace = Vec::new();
    let mut rounds = 0;
    let mut in_play = g.vertex_set().mask();
    loop {
        let is_clique = BitIter(in_play).all(|i| in_play & !(1u64 << i) & !graph.neighbors_mask(i + 1) == 0);
        if is_clique {
            break;
        }
        rounds += 1;
        let pivot = BitIter(in_play)
            .map(|i| i + 1)
            .max_by_key(|&v| (graph.degree(v), std::cmp::Reverse(v)))
            .expect("a non-clique has vertices");
        let pivot_nbrs = graph.neighbors_mask(pivot);
        let others = in_play & !pivot_nbrs & !(1u64 << (pivot - 1));
        for i in BitIter(others) {
            let u = i + 1;
            if graph.neighbors_mask(u) != pivot_nbrs {
                graph = zykov_shift(&graph, u, pivot).expect("u and pivot are distinct non-neighbors");
                trace.push(TraceStep::new("zykov_shift", u, pivot));
            }
        }
        in_play &= pivot_nbrs;
    }
    debug_assert!(graph.is_complete_multipartite());
    Symmetrization { graph, trace, rounds }
}

/// Moves vertices from a largest part to a smallest part until part sizes
/// differ by at most one; the result is a Turán graph with the same number of
/// parts, up to labels.
pub fn balance_multipartite(h: &Graph) -> Result<Graph> {
    balance_multipartite_traced(h).map(|(g, _)| g)
}

/// [`balance_multipartite`] with its trace. Each move of `w` from part `I` to
/// part `J` is recorded as a `rebalance` step (edges from `w` to `J` swapped
/// for edges from `w` to the rest of `I`) followed by the shift of `w` onto the
/// smallest vertex of `J`.
pub fn balance_multipartite_traced(h: &Graph) -> Result<(Graph, Vec<TraceStep>)> {
    let mut parts = h.multipartite_parts().ok_or(Error::NotCompleteMultipartite)?;
    let mut graph = h.clone();
    let mut trace = Vec::new();
    loop {
        // largest part: biggest size, then smallest leading label; smallest part likewise
        let big = (0..parts.len()).max_by_key(|&i| (parts[i].len(), std::cmp::Reverse(parts[i]))).unwrap_or(0);
        let small = (0..parts.len()).min_by_key(|&i| (parts[i].len(), parts[i])).unwrap_or(0);
        if parts.is_empty() || parts[big].len() < parts[small].len() + 2 {
            break;
        }
        let w = parts[big].max_label();
        let z1 = parts[small].vertices().next().expect("parts are nonempty");
        for z in parts[small].vertices() {
            graph.remove_edge(w, z)?;
        }
        for x in parts[big].without(w).vertices() {
            graph.add_edge(w, x)?;
        }
        trace.push(TraceStep::new("rebalance", w, z1));
        graph = zykov_shift(&graph, w, z1)?;
        trace.push(TraceStep::new("zykov_shift", w, z1));
        parts[big] = parts[big].without(w);
        parts[small] = parts[small].with(w);
    }
    debug_assert!(graph.is_complete_multipartite());
    Ok((graph, trace))
}

/// `Delta_{u -> target}`: removes the faces properly containing `u` and adds
/// `F + u` for every face `F` of the link of `target`.
pub fn complex_shift(delta: &SimplicialComplex, u: usize, target: usize) -> Result<SimplicialComplex> {
    if u == target {
        return Err(Error::SameVertex(u));
    }
    let target_link = delta.link(target)?;
    delta.link(u)?;
    let edge = Face::singleton(u).with(target);
    if delta.contains(edge) {
        return Err(Error::Adjacent { u, v: target });
    }
    let mut faces: Vec<Face> = delta
        .faces()
        .iter()
        .copied()
        .filter(|f| !f.contains(u) || f.len() == 1)
        .collect();
    faces.extend(target_link.faces().iter().map(|f| f.with(u)));
    Ok(SimplicialComplex::from_unsorted(delta.ground_size(), faces))
}

/// The complex obtained by shifting every non-neighbor of `target` onto it.
#[derive(Clone, Debug)]
pub struct ConeDecomposition {
    /// The fully shifted complex.
    pub shifted: SimplicialComplex,
    /// Vertices shifted onto the target, in the order applied.
    pub moved: Vec<usize>,
    /// `1 + moved.len()`.
    pub multiplicity: usize,
    /// Link of the target in the shifted complex.
    pub link: SimplicialComplex,
    /// Subcomplex induced on the vertices of `link`.
    pub induced: SimplicialComplex,
}

impl ConeDecomposition {
    /// `m f_{j-1}(L) + f_j(D)`, the predicted number of `j`-faces of the
    /// shifted complex (`j >= 1`).
    pub fn predicted_face_count(&self, j: usize) -> u64 {
        self.multiplicity as u64 * self.link.face_count(j - 1) + self.induced.face_count(j)
    }
}

/// Shifts, in ascending label order, every vertex of `delta` that is not
/// adjacent to `target` onto `target`.
pub fn cone_over_link(delta: &SimplicialComplex, target: usize) -> Result<ConeDecomposition> {
    delta.link(target)?;
    let graph = delta.underlying_graph();
    let candidates: Vec<usize> = delta
        .vertex_set()
        .vertices()
        .filter(|&u| u != target && !graph.has_edge(u, target))
        .collect();
    let mut shifted = delta.clone();
    for &u in &candidates {
        shifted = complex_shift(&shifted, u, target)?;
    }
    let link = shifted.link(target)?;
    let induced = shifted.induced_subcomplex(link.vertex_set());
    Ok(ConeDecomposition {
        shifted,
        multiplicity: candidates.len() + 1,
        moved: candidates,
        link,
        induced,
    })
}

/// Color class of label `x` for `r` colors, in `1..=r`.
pub fn color_class(x: usize, r: usize) -> usize {
    (x - 1) % r + 1
}

/// A set with at most one element in each residue class modulo `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredKSubset {
    face: Face,
    r: usize,
}

impl ColoredKSubset {
    pub fn new(face: Face, r: usize) -> Result<ColoredKSubset> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        let classes: Vec<usize> = face.vertices().map(|x| color_class(x, r)).collect();
        let repeated = classes.iter().enumerate().any(|(i, c)| classes[..i].contains(c));
        if repeated {
            return Err(Error::NotColored {
                face: face.to_string(),
                r,
            });
        }
        Ok(ColoredKSubset { face, r })
    }

    pub fn face(&self) -> Face {
        self.face
    }

    pub fn len(&self) -> usize {
        self.face.len()
    }

    pub fn is_empty(&self) -> bool {
        self.face.is_empty()
    }

    /// Residue classes of the elements, in increasing element order.
    pub fn residues(&self) -> Vec<usize> {
        self.face.vertices().map(|x| color_class(x, self.r)).collect()
    }
}

/// `T <=_p S`: the sorted elements of `T` are componentwise at most those of `S`.
pub fn dominance_order(t: Face, s: Face) -> Result<bool> {
    if t.len() != s.len() {
        return Err(Error::SizeMismatch {
            left: t.len(),
            right: s.len(),
        });
    }
    Ok(t.vertices().zip(s.vertices()).all(|(a, b)| a <= b))
}

/// A pair `(T, S)` with `S` in the family, `T <=_p S`, `T` colored, and `T`
/// missing from the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftWitness {
    pub missing: Face,
    pub member: Face,
}

/// Checks that a family of `k`-sets in `M(k, r)` is closed downward under
/// `<=_p` within `M(k, r)`. Members are visited in increasing order and, for each,
/// the dominated colored sets in lexicographic order; the first gap found is
/// returned.
pub fn is_color_shifted(family: &[Face], k: usize, r: usize) -> Result<Option<ShiftWitness>> {
    let mut members: Vec<Face> = Vec::with_capacity(family.len());
    for &f in family {
        if f.len() != k {
            return Err(Error::SizeMismatch { left: f.len(), right: k });
        }
        ColoredKSubset::new(f, r)?;
        members.push(f);
    }
    members.sort_by_key(|f| f.to_vec());
    members.dedup();
    let present = |f: Face| members.binary_search_by_key(&f.to_vec(), |m| m.to_vec()).is_ok();

    for &s in &members {
        let bounds = s.to_vec();
        let mut found = None;
        dominated_colored_sets(&bounds, r, &mut |t| {
            if present(t) {
                true
            } else {
                found = Some(t);
                false
            }
        });
        if let Some(missing) = found {
            return Ok(Some(ShiftWitness { missing, member: s }));
        }
    }
    Ok(None)
}

/// Visits, lexicographically, every increasing sequence `t_1 < ... < t_k` with
/// `t_i <= bounds[i]` and pairwise distinct color classes. Stops when `visit`
/// returns false.
fn dominated_colored_sets(bounds: &[usize], r: usize, visit: &mut impl FnMut(Face) -> bool) {
    fn go(bounds: &[usize], r: usize, pos: usize, lo: usize, acc: Face, classes: &mut Vec<usize>, visit: &mut impl FnMut(Face) -> bool) -> bool {
        if pos == bounds.len() {
            return visit(acc);
        }
        for x in lo..=bounds[pos] {
            let c = color_class(x, r);
            if classes.contains(&c) {
                continue;
            }
            classes.push(c);
            let keep_going = go(bounds, r, pos + 1, x + 1, acc.with(x), classes, visit);
            classes.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    go(bounds, r, 0, 1, Face::EMPTY, &mut Vec::new(), visit);
}

/// A complex is color shifted if, for each `k`, its `k`-faces form a color
/// shifted family. Faces outside `M(k, r)` are an error.
pub fn complex_is_color_shifted(delta: &SimplicialComplex, r: usize) -> Result<Option<ShiftWitness>> {
    for k in 1..=delta.ground_size() {
        let layer: Vec<Face> = delta.faces().iter().copied().filter(|f| f.len() == k).collect();
        if layer.is_empty() {
            continue;
        }
        if let Some(w) = is_color_shifted(&layer, k, r)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
