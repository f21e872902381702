//! Simplicial complexes over a ground set of at most 63 vertices.
//!
//! A [`Face`] is a single machine word used as a bit set; a [`SimplicialComplex`] stores only its
//! inclusion-maximal faces. Every list a complex hands out is sorted by ascending bit pattern so
//! reports and fixtures are deterministic.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 63;

/// A set of vertex indices, stored as a bit set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Panics if an index is 64 or larger; use [`SimplicialComplex::from_facets`] for checked input.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Face(indices.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        Face(1u64 << v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u64 << v))
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertex indices in ascending order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `size` elements, in ascending bit-pattern order.
    pub fn subsets_of_size(self, size: usize) -> Vec<Face> {
        let idx = self.to_vec();
        if size > idx.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            out.push(Face::from_indices(pick.iter().map(|&p| idx[p])));
            // advance to the next combination, rightmost position first
            let mut pos = size;
            while pos > 0 && pick[pos - 1] == idx.len() - size + pos - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            pick[pos - 1] += 1;
            for q in pos..size {
                pick[q] = pick[q - 1] + 1;
            }
        }
        out.sort_unstable();
        out
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Face(cur))
        })
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl From<Face> for Vec<usize> {
    fn from(face: Face) -> Self {
        face.to_vec()
    }
}

impl TryFrom<Vec<usize>> for Face {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = v.iter().find(|&&i| i >= MAX_VERTICES) {
            return Err(Error::VertexOutOfRange { index: bad, n: MAX_VERTICES });
        }
        Ok(Face::from_indices(v))
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// VOID has no faces at all (the unit ideal); EMPTY has only the empty face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Void,
    Empty,
    Proper,
}

/// A simplicial complex given by its facets over the ground set `{0, …, n-1}`.
#[derive(Clone)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    names: Option<Vec<String>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl Hash for SimplicialComplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets={:?})", self.n, self.facets)
    }
}

/// Keeps the inclusion-maximal members, sorted by bit pattern.
pub(crate) fn maximalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|g| f.is_subset(*g)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps the inclusion-minimal members, sorted by bit pattern.
pub(crate) fn minimalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|g| g.is_subset(f)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `candidates`. No candidates gives VOID, `[∅]` gives EMPTY.
    pub fn from_facets<I: IntoIterator<Item = Face>>(candidates: I, n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge(n));
        }
        let ground = Face::full(n);
        let candidates: Vec<Face> = candidates.into_iter().collect();
        for c in &candidates {
            if !c.is_subset(ground) {
                let index = c.difference(ground).iter().next().unwrap_or(n);
                return Err(Error::VertexOutOfRange { index, n });
            }
        }
        Ok(SimplicialComplex { n, facets: maximalize(candidates), names: None })
    }

    /// Convenience constructor from index lists.
    pub fn from_index_lists(lists: &[&[usize]], n: usize) -> Result<Self> {
        let mut faces = Vec::with_capacity(lists.len());
        for list in lists {
            if let Some(&bad) = list.iter().find(|&&v| v >= n.min(64)) {
                return Err(Error::VertexOutOfRange { index: bad, n });
            }
            faces.push(Face::from_indices(list.iter().copied()));
        }
        Self::from_facets(faces, n)
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new(), names: None }
    }

    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![Face::EMPTY], names: None }
    }

    /// The full simplex on the whole ground set.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![Face::full(n)], names: None }
    }

    /// Attaches vertex labels; `names.len()` must equal `n`.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} vertex names for a ground set of size {}",
                names.len(),
                self.n
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub(crate) fn with_names_of(mut self, other: &SimplicialComplex) -> Self {
        if other.n == self.n {
            self.names = other.names.clone();
        }
        self
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Label of vertex `v`: the attached name, or `x{v}`.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => format!("x{v}"),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Empty,
            _ => ComplexKind::Proper,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.kind() == ComplexKind::Empty
    }

    /// True when the ground set itself is a facet.
    pub fn is_full_simplex(&self) -> bool {
        self.facets == [Face::full(self.n)]
    }

    /// Union of all facets.
    pub fn vertices(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_face(&self, sigma: Face) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// `None` for VOID, `Some(-1)` for EMPTY.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Krull dimension of the Stanley-Reisner ring, `dim + 1`.
    pub fn krull_dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Cardinality of the largest facet containing `sigma`.
    pub fn max_facet_size_over(&self, sigma: Face) -> Option<usize> {
        self.facets.iter().filter(|f| sigma.is_subset(**f)).map(|f| f.len()).max()
    }

    /// Every face, including ∅, in ascending bit-pattern order.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Faces of dimension `k` (cardinality `k + 1`), sorted. `k = -1` yields `[∅]` unless VOID.
    pub fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        if k < -1 || self.is_void() {
            return Vec::new();
        }
        let size = (k + 1) as usize;
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            if f.len() >= size {
                seen.extend(f.subsets_of_size(size));
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// `(f_{-1}, f_0, …, f_dim)`; empty for VOID.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(dim) = self.dim() else {
            return Vec::new();
        };
        let mut counts = vec![0usize; (dim + 2) as usize];
        for face in self.all_faces() {
            counts[face.len()] += 1;
        }
        counts
    }

    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace { face: sigma });
        }
        // H ∖ σ over facets H ⊇ σ is already an antichain
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|h| sigma.is_subset(**h))
            .map(|h| h.difference(sigma))
            .collect();
        Ok(SimplicialComplex { n: self.n, facets: maximalize(facets), names: self.names.clone() })
    }

    /// The induced subcomplex `{σ ∈ Δ : σ ⊆ W}`.
    pub fn induced(&self, w: Face) -> SimplicialComplex {
        let facets = self.facets.iter().map(|h| h.intersection(w)).collect();
        SimplicialComplex { n: self.n, facets: maximalize(facets), names: self.names.clone() }
    }

    /// Faces of dimension at most `i`. For `i < -1` the result is VOID.
    pub fn skeleton(&self, i: isize) -> SimplicialComplex {
        if i < -1 {
            return SimplicialComplex::void(self.n).with_names_of(self);
        }
        let size = (i + 1) as usize;
        let mut candidates = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                candidates.push(*f);
            } else {
                candidates.extend(f.subsets_of_size(size));
            }
        }
        SimplicialComplex { n: self.n, facets: maximalize(candidates), names: self.names.clone() }
    }

    /// Minimal non-faces, i.e. the supports of the minimal generators of the Stanley-Reisner
    /// ideal. VOID yields `[∅]`.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::EMPTY];
        }
        let faces: HashSet<Face> = self.all_faces().into_iter().collect();
        let support = self.vertices();
        let mut out: Vec<Face> = Face::full(self.n).difference(support).iter().map(Face::singleton).collect();
        let mut seen: HashSet<Face> = HashSet::new();
        for tau in &faces {
            for v in support.difference(*tau).iter() {
                let sigma = tau.with(v);
                if faces.contains(&sigma) || !seen.insert(sigma) {
                    continue;
                }
                if sigma.iter().all(|u| faces.contains(&sigma.without(u))) {
                    out.push(sigma);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `Δ^∨ = {σ : V ∖ σ ∉ Δ}` on the same ground set. The dual of the full simplex is VOID and
    /// the dual of VOID is the full simplex.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let ground = Face::full(self.n);
        let facets = self.minimal_nonfaces().into_iter().map(|m| ground.difference(m)).collect();
        SimplicialComplex { n: self.n, facets: maximalize(facets), names: self.names.clone() }
    }

    /// Localization height of the monomial prime attached to `sigma`:
    /// `max{|H| : H facet ⊇ σ} − |σ|`.
    pub fn height_of(&self, sigma: Face) -> Option<usize> {
        self.max_facet_size_over(sigma).map(|m| m - sigma.len())
    }

    /// The generalized Hochster-Huneke graph on facets: `F ~ G` iff `1 ≤ h(F ∩ G) ≤ j`.
    pub fn facet_graph(&self, j: usize) -> Result<FacetGraph> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut edges = Vec::new();
        for (a, f) in self.facets.iter().enumerate() {
            for (b, g) in self.facets.iter().enumerate().skip(a + 1) {
                let h = self.height_of(f.intersection(*g)).unwrap_or(0);
                if (1..=j).contains(&h) {
                    edges.push((a, b));
                }
            }
        }
        Ok(FacetGraph { facets: self.facets.clone(), edges, j })
    }

    /// Checks that the facet graph `G^j` of every link (including `lk ∅ = Δ`) is connected.
    /// Returns the first face whose link fails, if any.
    pub fn j_locally_connected_witness(&self, j: usize) -> Result<Option<Face>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        for sigma in self.all_faces() {
            if !self.link(sigma)?.facet_graph(j)?.is_connected() {
                return Ok(Some(sigma));
            }
        }
        Ok(None)
    }

    pub fn is_j_locally_connected(&self, j: usize) -> Result<bool> {
        Ok(self.j_locally_connected_witness(j)?.is_none())
    }

    /// Connectivity of the 1-skeleton. VOID and EMPTY have no vertices and count as disconnected.
    pub fn is_connected(&self) -> bool {
        let support = self.vertices();
        let Some(start) = support.iter().next() else {
            return false;
        };
        let mut reached = Face::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for f in self.facets.iter().filter(|f| f.contains(v)) {
                for u in f.difference(reached).iter() {
                    reached = reached.with(u);
                    queue.push_back(u);
                }
            }
        }
        reached == support
    }

    /// The cone over `self` with apex `apex`, which must be a vertex outside every facet.
    pub fn cone(&self, apex: usize) -> Result<SimplicialComplex> {
        let n = self.n.max(apex + 1);
        if self.vertices().contains(apex) {
            return Err(Error::InvalidArgument(format!("apex {apex} already a vertex")));
        }
        Self::from_facets(self.facets.iter().map(|f| f.with(apex)), n)
    }
}

/// Graph on the facets of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetGraph {
    pub facets: Vec<Face>,
    /// Pairs of facet indices, `a < b`.
    pub edges: Vec<(usize, usize)>,
    pub j: usize,
}

impl FacetGraph {
    pub fn is_connected(&self) -> bool {
        let count = self.facets.len();
        if count <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; count];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(lists: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_index_lists(lists, n).unwrap()
    }

    fn f(v: &[usize]) -> Face {
        Face::from_indices(v.iter().copied())
    }

    fn bowtie() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[2, 3, 4]], 5)
    }

    #[test]
    fn from_facets_absorbs_subsets() {
        let c = cx(&[&[0, 1], &[1, 2], &[0, 1, 2]], 3);
        assert_eq!(c.facets(), &[f(&[0, 1, 2])]);
        assert_eq!(cx(&[&[]], 3).kind(), ComplexKind::Empty);
        assert_eq!(SimplicialComplex::from_facets(vec![], 3).unwrap().kind(), ComplexKind::Void);
        let b = bowtie();
        assert_eq!(b.facets().len(), 2);
        assert_eq!(b.dim(), Some(2));
    }

    #[test]
    fn from_facets_rejects_out_of_range() {
        let err = SimplicialComplex::from_index_lists(&[&[0, 3]], 3).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { index: 3, n: 3 });
        assert!(matches!(SimplicialComplex::from_facets(vec![], 64), Err(Error::GroundSetTooLarge(64))));
    }

    #[test]
    fn face_membership() {
        let b = bowtie();
        assert!(b.is_face(f(&[0, 2])));
        assert!(!b.is_face(f(&[0, 3])));
        assert!(SimplicialComplex::empty(3).is_face(Face::EMPTY));
        assert!(!SimplicialComplex::void(3).is_face(Face::EMPTY));
    }

    #[test]
    fn faces_by_dimension() {
        let b = bowtie();
        assert_eq!(b.faces_of_dim(0).len(), 5);
        let edges: Vec<Vec<usize>> = b.faces_of_dim(1).into_iter().map(Face::to_vec).collect();
        let mut expected = vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3], vec![2, 4], vec![3, 4]];
        expected.sort_by_key(|v| Face::from_indices(v.iter().copied()));
        assert_eq!(edges, expected);
        assert_eq!(SimplicialComplex::simplex(4).faces_of_dim(3), vec![Face::full(4)]);
        assert_eq!(b.faces_of_dim(-1), vec![Face::EMPTY]);
        assert!(b.faces_of_dim(3).is_empty());
        assert!(SimplicialComplex::void(2).faces_of_dim(-1).is_empty());
    }

    #[test]
    fn links() {
        let b = bowtie();
        assert_eq!(b.link(f(&[2])).unwrap().facets(), &[f(&[0, 1]), f(&[3, 4])]);
        assert_eq!(b.link(Face::EMPTY).unwrap(), b);
        assert!(b.link(f(&[0, 1, 2])).unwrap().is_empty_complex());
        assert!(matches!(b.link(f(&[0, 3])), Err(Error::NotAFace { .. })));
    }

    #[test]
    fn induced_subcomplexes() {
        let b = bowtie();
        assert_eq!(b.induced(f(&[0, 1, 2])).facets(), &[f(&[0, 1, 2])]);
        assert_eq!(b.induced(f(&[0, 3])).facets(), &[f(&[0]), f(&[3])]);
        assert_eq!(b.induced(Face::full(5)), b);
    }

    #[test]
    fn skeletons() {
        let b = bowtie();
        assert_eq!(b.skeleton(1).facets().len(), 6);
        assert_eq!(b.skeleton(0).facets().len(), 5);
        assert_eq!(b.skeleton(2), b);
        assert!(b.skeleton(-1).is_empty_complex());
    }

    #[test]
    fn alexander_duals() {
        let two_points = cx(&[&[0], &[1]], 2);
        assert!(two_points.alexander_dual().is_empty_complex());
        let dual = bowtie().alexander_dual();
        assert_eq!(dual.minimal_nonfaces(), vec![f(&[0, 1]), f(&[3, 4])]);
        assert_eq!(dual.alexander_dual(), bowtie());
        assert!(SimplicialComplex::simplex(3).alexander_dual().is_void());
        assert!(SimplicialComplex::void(3).alexander_dual().is_full_simplex());
    }

    #[test]
    fn minimal_nonfaces_include_ghost_vertices() {
        let c = cx(&[&[0, 1]], 3);
        assert_eq!(c.minimal_nonfaces(), vec![f(&[2])]);
        assert_eq!(bowtie().minimal_nonfaces(), vec![f(&[0, 3]), f(&[1, 3]), f(&[0, 4]), f(&[1, 4])]);
    }

    #[test]
    fn facet_graphs() {
        let b = bowtie();
        assert!(b.facet_graph(1).unwrap().edges.is_empty());
        assert_eq!(b.facet_graph(2).unwrap().edges, vec![(0, 1)]);
        let sphere = SimplicialComplex::from_facets(Face::full(4).subsets_of_size(3), 4).unwrap();
        assert_eq!(sphere.facet_graph(1).unwrap().edges.len(), 6);
        assert!(matches!(SimplicialComplex::void(2).facet_graph(1), Err(Error::VoidComplex)));
    }

    #[test]
    fn height_matches_pure_reading() {
        let b = bowtie();
        for a in b.facets() {
            for c in b.facets() {
                let meet = a.intersection(*c);
                assert_eq!(b.height_of(meet), Some(3 - meet.len()));
            }
        }
        // non-pure: the meet {2} of 012 and 23 sits in the triangle, so its height is 2
        let np = cx(&[&[0, 1, 2], &[2, 3]], 4);
        assert_eq!(np.height_of(f(&[2])), Some(2));
    }

    #[test]
    fn local_connectivity() {
        let b = bowtie();
        assert_eq!(b.j_locally_connected_witness(2).unwrap(), None);
        assert_eq!(b.j_locally_connected_witness(1).unwrap(), Some(Face::EMPTY));
        for j in 1..4 {
            assert!(SimplicialComplex::simplex(4).is_j_locally_connected(j).unwrap());
        }
    }

    #[test]
    fn basic_invariants() {
        let b = bowtie();
        assert!(b.is_pure());
        assert!(!cx(&[&[0, 1, 2], &[3, 4]], 5).is_pure());
        let cycle = cx(&[&[0, 1], &[1, 2], &[0, 2]], 3);
        assert_eq!(cycle.f_vector(), vec![1, 3, 3]);
        assert_eq!(SimplicialComplex::empty(3).krull_dim(), Some(0));
        assert_eq!(SimplicialComplex::void(3).dim(), None);
        assert!(SimplicialComplex::void(3).f_vector().is_empty());
        assert!(b.is_connected());
        assert!(!cx(&[&[0, 1, 2], &[3, 4, 5]], 6).is_connected());
        assert!(!SimplicialComplex::void(2).is_connected());
    }

    #[test]
    fn subset_enumeration() {
        let face = f(&[1, 3, 4, 6]);
        assert_eq!(face.subsets().count(), 16);
        let pairs = face.subsets_of_size(2);
        assert_eq!(pairs.len(), 6);
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(face.subsets_of_size(0), vec![Face::EMPTY]);
        assert!(face.subsets_of_size(5).is_empty());
    }
}
