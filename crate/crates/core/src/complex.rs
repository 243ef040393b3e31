//! Simplicial complexes on small ground sets.
//!
//! A complex on `{1..n}` stores its full face set as sorted bit masks. Vertex
//! `v` is bit `v - 1`. The void complex (no faces at all) is representable;
//! every other complex contains the empty face.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vector::IntVector;
use crate::MAX_VERTICES;

/// A finite set of vertex labels `>= 1`, stored as a bit mask.
///
/// Serves both as a face of a complex and as a plain vertex set.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from labels in any order; rejects label 0, labels above 64
    /// and repeated labels.
    pub fn from_vertices(labels: &[usize]) -> Result<Face> {
        let mut mask = 0u64;
        for &label in labels {
            if label == 0 || label > MAX_VERTICES {
                return Err(Error::LabelOutOfRange {
                    label,
                    n: MAX_VERTICES,
                });
            }
            let bit = 1u64 << (label - 1);
            if mask & bit != 0 {
                return Err(Error::DuplicateLabel(label));
            }
            mask |= bit;
        }
        Ok(Face(mask))
    }

    pub const fn from_mask(mask: u64) -> Face {
        Face(mask)
    }

    pub fn singleton(v: usize) -> Face {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        Face(1u64 << (v - 1))
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Face {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | Face::singleton(v).0)
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !Face::singleton(v).0)
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    /// Largest label, or 0 for the empty face.
    pub fn max_label(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Labels in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        BitIter(self.0).map(|b| b + 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Every subset of this face, the empty set and the face itself included.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(cur.wrapping_sub(full) & full)
            };
            Some(Face(cur))
        })
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterates the set bit positions of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Mask of bit positions `0..=b`.
pub(crate) fn bits_through(b: usize) -> u64 {
    if b >= 63 {
        u64::MAX
    } else {
        (2u64 << b) - 1
    }
}

pub(crate) fn check_ground_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

/// A downward closed family of faces on the ground set `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    // sorted by mask, no duplicates
    faces: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex whose only face is the empty face.
    pub fn empty(n: usize) -> Result<Self> {
        check_ground_size(n)?;
        Ok(SimplicialComplex {
            n,
            faces: vec![Face::EMPTY],
        })
    }

    /// The complex with no faces at all, not even the empty one.
    pub fn void(n: usize) -> Result<Self> {
        check_ground_size(n)?;
        Ok(SimplicialComplex { n, faces: vec![] })
    }

    /// Downward closure of `facets` on `{1..n}`. The result always contains
    /// the empty face.
    pub fn from_facets(n: usize, facets: &[Face]) -> Result<Self> {
        check_ground_size(n)?;
        let ground = Face::full(n);
        for facet in facets {
            if !facet.is_subset(ground) {
                let label = facet.intersection(Face(!ground.0)).max_label();
                return Err(Error::LabelOutOfRange { label, n });
            }
        }
        let mut faces: Vec<Face> = facets.iter().flat_map(|f| f.subsets()).collect();
        faces.push(Face::EMPTY);
        Ok(Self::from_unsorted(n, faces))
    }

    /// Like [`Self::from_facets`] but taking facets as label lists, so that
    /// repeated labels inside a facet are reported.
    pub fn from_facet_lists(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_ground_size(n)?;
        let mut parsed = Vec::with_capacity(facets.len());
        for facet in facets {
            if let Some(&label) = facet.iter().find(|&&l| l == 0 || l > n) {
                return Err(Error::LabelOutOfRange { label, n });
            }
            parsed.push(Face::from_vertices(facet)?);
        }
        Self::from_facets(n, &parsed)
    }

    /// Wraps an explicit face family after checking that it is downward closed
    /// and lives on `{1..n}`.
    pub fn from_faces(n: usize, faces: Vec<Face>) -> Result<Self> {
        check_ground_size(n)?;
        let ground = Face::full(n);
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(ground)) {
            let label = bad.intersection(Face(!ground.0)).max_label();
            return Err(Error::LabelOutOfRange { label, n });
        }
        let complex = Self::from_unsorted(n, faces);
        if let Some(missing) = complex.missing_subface() {
            return Err(Error::NotDownwardClosed(missing.to_string()));
        }
        Ok(complex)
    }

    pub(crate) fn from_unsorted(n: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        SimplicialComplex { n, faces }
    }

    /// Caller guarantees sortedness, uniqueness and downward closure.
    pub(crate) fn from_sorted_unchecked(n: usize, faces: Vec<Face>) -> Self {
        debug_assert!(faces.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { n, faces }
    }

    /// All cliques of `graph`, the empty clique included.
    pub fn clique_complex(graph: &Graph) -> Self {
        let mut faces = vec![Face::EMPTY];
        graph.for_each_clique(|clique| faces.push(clique));
        Self::from_unsorted(graph.order(), faces)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces.binary_search(&face).is_ok()
    }

    /// Labels `v` with `{v}` a face.
    pub fn vertex_set(&self) -> Face {
        self.faces
            .iter()
            .filter(|f| f.len() == 1)
            .fold(Face::EMPTY, |acc, &f| acc.union(f))
    }

    /// Inclusion-maximal faces, sorted by mask.
    pub fn facets(&self) -> Vec<Face> {
        let mut facets: Vec<Face> = Vec::new();
        // visiting larger faces first means a face is a facet iff no kept
        // facet contains it
        let mut by_size = self.faces.clone();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
        for f in by_size {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        facets
    }

    /// Entry `k` counts faces of cardinality `k` for `k = 1..=n`; the empty
    /// face is not counted.
    pub fn face_vector(&self) -> IntVector {
        let mut counts = vec![0u64; self.n];
        for f in &self.faces {
            let k = f.len();
            if k > 0 {
                counts[k - 1] += 1;
            }
        }
        IntVector::new(counts)
    }

    /// Number of faces of cardinality `j`, the empty face included at `j = 0`.
    pub fn face_count(&self, j: usize) -> u64 {
        self.faces.iter().filter(|f| f.len() == j).count() as u64
    }

    /// `{ F : v not in F, F + v in self }`, on the same ground set.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        if v == 0 || v > self.n || !self.contains(Face::singleton(v)) {
            return Err(Error::NotAVertex(v));
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect();
        Ok(Self::from_unsorted(self.n, faces))
    }

    /// Faces contained in `vertices`. Labels outside the ground set are ignored.
    pub fn induced_subcomplex(&self, vertices: Face) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.is_subset(vertices))
            .collect();
        Self::from_sorted_unchecked(self.n, faces)
    }

    /// Faces of cardinality at most `k`.
    pub fn skeleton(&self, k: usize) -> SimplicialComplex {
        let faces = self.faces.iter().copied().filter(|f| f.len() <= k).collect();
        Self::from_sorted_unchecked(self.n, faces)
    }

    /// The graph on `{1..n}` whose edges are the cardinality-2 faces.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("ground size already validated");
        for f in self.faces.iter().filter(|f| f.len() == 2) {
            let mut it = f.vertices();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            g.add_edge(u, v).expect("labels within ground set");
        }
        g
    }

    /// A face whose codimension-one subface is missing, if any.
    fn missing_subface(&self) -> Option<Face> {
        for &f in &self.faces {
            for v in f.vertices() {
                let sub = f.without(v);
                if !self.contains(sub) {
                    return Some(sub);
                }
            }
        }
        None
    }

    pub fn is_downward_closed(&self) -> bool {
        self.missing_subface().is_none()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(labels: &[usize]) -> Face {
        Face::from_vertices(labels).unwrap()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let facets: Vec<Face> = facets.iter().map(|f| face(f)).collect();
        SimplicialComplex::from_facets(n, &facets).unwrap()
    }

    fn faces_of(c: &SimplicialComplex) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = c.faces().iter().map(|f| f.to_vec()).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    #[test]
    fn face_rejects_bad_labels() {
        assert_eq!(Face::from_vertices(&[1, 2, 1]), Err(Error::DuplicateLabel(1)));
        assert!(matches!(
            Face::from_vertices(&[0]),
            Err(Error::LabelOutOfRange { label: 0, .. })
        ));
        assert!(Face::from_vertices(&[65]).is_err());
        assert_eq!(face(&[3, 1]).to_vec(), vec![1, 3]);
    }

    #[test]
    fn subsets_of_a_face() {
        let all: Vec<Face> = face(&[1, 3, 4]).subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.contains(&Face::EMPTY));
        assert!(all.contains(&face(&[1, 3, 4])));
        assert_eq!(Face::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn from_facets_examples() {
        let tri = complex(3, &[&[1, 2, 3]]);
        assert_eq!(
            faces_of(&tri),
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 2, 3]
            ]
        );
        let empty = complex(3, &[]);
        assert_eq!(faces_of(&empty), vec![Vec::<usize>::new()]);
        let c = complex(4, &[&[1, 2], &[3]]);
        assert_eq!(
            faces_of(&c),
            vec![vec![], vec![1], vec![2], vec![3], vec![1, 2]]
        );
    }

    #[test]
    fn from_facets_errors() {
        assert_eq!(
            SimplicialComplex::from_facets(3, &[face(&[1, 4])]),
            Err(Error::LabelOutOfRange { label: 4, n: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_facet_lists(3, &[vec![1, 2, 2]]),
            Err(Error::DuplicateLabel(2))
        );
        assert_eq!(
            SimplicialComplex::from_facet_lists(3, &[vec![0]]),
            Err(Error::LabelOutOfRange { label: 0, n: 3 })
        );
    }

    #[test]
    fn from_faces_checks_closure() {
        let err = SimplicialComplex::from_faces(3, vec![Face::EMPTY, face(&[1, 2])]).unwrap_err();
        assert!(matches!(err, Error::NotDownwardClosed(_)));
    }

    #[test]
    fn face_vector_examples() {
        assert_eq!(complex(3, &[&[1, 2, 3]]).face_vector().entries(), &[3, 3, 1]);
        assert_eq!(complex(3, &[]).face_vector().entries(), &[0, 0, 0]);
        let hollow = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.face_vector().entries(), &[3, 3, 0]);
    }

    #[test]
    fn link_examples() {
        let tri = complex(3, &[&[1, 2, 3]]);
        assert_eq!(tri.link(1).unwrap(), complex(3, &[&[2, 3]]));

        let two_edges = complex(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(faces_of(&two_edges.link(1).unwrap()), vec![vec![], vec![2]]);

        let cone = complex(3, &[&[1, 2], &[1, 3]]);
        let l = cone.link(1).unwrap();
        assert_eq!(faces_of(&l), vec![vec![], vec![2], vec![3]]);
        assert_eq!(l.face_count(0), 1);
    }

    #[test]
    fn link_of_missing_vertex() {
        let c = complex(4, &[&[1, 2]]);
        assert_eq!(c.link(3), Err(Error::NotAVertex(3)));
        assert_eq!(c.link(9), Err(Error::NotAVertex(9)));
    }

    #[test]
    fn induced_subcomplex_examples() {
        let tri = complex(3, &[&[1, 2, 3]]);
        assert_eq!(tri.induced_subcomplex(face(&[2, 3])), complex(3, &[&[2, 3]]));
        assert_eq!(tri.induced_subcomplex(Face::EMPTY), complex(3, &[]));
        let path = complex(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(
            faces_of(&path.induced_subcomplex(face(&[1, 3]))),
            vec![vec![], vec![1], vec![3]]
        );
    }

    #[test]
    fn skeleton_examples() {
        let tri = complex(3, &[&[1, 2, 3]]);
        assert_eq!(tri.skeleton(2).face_vector().entries(), &[3, 3, 0]);
        assert_eq!(tri.skeleton(0), complex(3, &[]));
        let t52 = SimplicialComplex::clique_complex(&crate::turan::turan_graph(5, 2).unwrap());
        assert_eq!(t52.skeleton(1).face_vector().entries(), &[5, 0, 0, 0, 0]);
    }

    #[test]
    fn underlying_graph_examples() {
        let k3 = complex(3, &[&[1, 2, 3]]).underlying_graph();
        assert_eq!(k3.edge_count(), 3);
        let none = complex(3, &[]).underlying_graph();
        assert_eq!((none.order(), none.edge_count()), (3, 0));
        let g = complex(3, &[&[1, 2], &[3]]).underlying_graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn clique_complex_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(SimplicialComplex::clique_complex(&k3), complex(3, &[&[1, 2, 3]]));
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            faces_of(&SimplicialComplex::clique_complex(&e3)),
            vec![vec![], vec![1], vec![2], vec![3]]
        );
        let t52 = crate::turan::turan_graph(5, 2).unwrap();
        assert_eq!(
            SimplicialComplex::clique_complex(&t52).face_vector().entries(),
            &[5, 6, 0, 0, 0]
        );
    }

    #[test]
    fn facets_roundtrip() {
        let c = complex(5, &[&[1, 2, 3], &[3, 4], &[5]]);
        assert_eq!(c.facets(), vec![face(&[1, 2, 3]), face(&[3, 4]), face(&[5])]);
        assert_eq!(SimplicialComplex::from_facets(5, &c.facets()).unwrap(), c);
    }
}
