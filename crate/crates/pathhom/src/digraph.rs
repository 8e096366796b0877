//! Finite simple digraphs: validation, maps, constructions, and the
//! subgraphs spanned by paths with fixed endpoint vertices.
//!
//! Vertices carry opaque string labels for I/O; internally every digraph
//! assigns dense indices in declaration order, which also fixes the
//! deterministic ordering of all path bases built on top of it.

use std::collections::{HashMap, VecDeque};
use thiserror::Error;

/// Dense vertex index, valid within one digraph.
pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("loop arrow `{0} -> {0}` not allowed in a simple digraph")]
    LoopArrow(String),
    #[error("duplicate arrow `{0} -> {1}`")]
    DuplicateArrow(String, String),
    #[error("arrow endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("label `{0}` already present")]
    LabelCollision(String),
    #[error("vertex assignment misses `{0}`")]
    IncompleteAssignment(String),
    #[error("not a digraph map: arrow `{0} -> {1}` has image `{2} -> {3}` which is not an arrow")]
    NotAMap(String, String, String, String),
}

/// A finite simple digraph: no loops, no duplicate arrows, nonempty vertex
/// set. Immutable after validation; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    arrows: Vec<(Vertex, Vertex)>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

impl Digraph {
    /// Validates a vertex list and arrow list into a digraph. Vertex order is
    /// preserved from the input so that path bases are deterministic.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S)]) -> Result<Digraph, DigraphError> {
        if vertices.is_empty() {
            return Err(DigraphError::EmptyVertexSet);
        }
        let labels: Vec<String> = vertices.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i as Vertex).is_some() {
                return Err(DigraphError::DuplicateVertex(l.clone()));
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut arcs = Vec::with_capacity(arrows.len());
        for (t, h) in arrows {
            let (t, h) = (t.as_ref(), h.as_ref());
            let ti = *index.get(t).ok_or_else(|| DigraphError::UnknownEndpoint(t.to_owned()))?;
            let hi = *index.get(h).ok_or_else(|| DigraphError::UnknownEndpoint(h.to_owned()))?;
            if ti == hi {
                return Err(DigraphError::LoopArrow(t.to_owned()));
            }
            if !seen.insert((ti, hi)) {
                return Err(DigraphError::DuplicateArrow(t.to_owned(), h.to_owned()));
            }
            arcs.push((ti, hi));
        }
        Ok(Digraph::from_parts(labels, index, arcs))
    }

    /// Convenience constructor: `n` vertices labelled `"0".."n-1"` with
    /// arrows given by index pairs. Panics on invalid input.
    pub fn from_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> Digraph {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(String, String)> = arcs
            .iter()
            .map(|&(t, h)| (labels[t as usize].clone(), labels[h as usize].clone()))
            .collect();
        Digraph::new(&labels, &pairs.iter().map(|(a, b)| (a.clone(), b.clone())).collect::<Vec<_>>())
            .expect("invalid digraph")
    }

    fn from_parts(
        labels: Vec<String>,
        index: HashMap<String, Vertex>,
        mut arcs: Vec<(Vertex, Vertex)>,
    ) -> Digraph {
        arcs.sort_unstable();
        let n = labels.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(t, h) in &arcs {
            out_adj[t as usize].push(h);
            in_adj[h as usize].push(t);
        }
        Digraph { labels, index, arrows: arcs, out_adj, in_adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    /// Dense index of a label.
    pub fn vertex(&self, label: &str) -> Result<Vertex, DigraphError> {
        self.index.get(label).copied().ok_or_else(|| DigraphError::UnknownVertex(label.to_owned()))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.labels.len() as Vertex
    }

    /// Arrows in sorted index order.
    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    pub fn has_arrow(&self, t: Vertex, h: Vertex) -> bool {
        self.out_adj[t as usize].contains(&h)
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v as usize]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v as usize]
    }

    /// True iff no symmetric pair `v -> w`, `w -> v` is present.
    pub fn is_asymmetric(&self) -> bool {
        self.arrows.iter().all(|&(t, h)| !self.has_arrow(h, t))
    }

    /// The digraph with every arrow reversed. Applying it twice gives back
    /// the original digraph exactly (same vertex order).
    pub fn inverse(&self) -> Digraph {
        let arcs = self.arrows.iter().map(|&(t, h)| (h, t)).collect();
        Digraph::from_parts(self.labels.clone(), self.index.clone(), arcs)
    }

    /// Box product: vertices are pairs `(v, v')` labelled `"(v,v')"`, and
    /// `(v,v') -> (w,w')` is an arrow iff one coordinate steps along an arrow
    /// while the other stays fixed. Pairs are ordered lexicographically.
    pub fn box_product(&self, other: &Digraph) -> Digraph {
        let n2 = other.vertex_count() as Vertex;
        let mut labels = Vec::with_capacity(self.vertex_count() * other.vertex_count());
        for a in self.vertices() {
            for b in other.vertices() {
                labels.push(format!("({},{})", self.label(a), other.label(b)));
            }
        }
        let mut arcs = Vec::new();
        for a in self.vertices() {
            for b in other.vertices() {
                let src = a * n2 + b;
                for &b2 in other.out_neighbors(b) {
                    arcs.push((src, a * n2 + b2));
                }
                for &a2 in self.out_neighbors(a) {
                    arcs.push((src, a2 * n2 + b));
                }
            }
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            index.insert(l.clone(), i as Vertex);
        }
        Digraph::from_parts(labels, index, arcs)
    }

    /// The n-cube: the n-fold box product of the single arrow `0 -> 1`,
    /// with vertices relabelled `0..2^n-1` by the binary encoding their
    /// lexicographic position already carries (first factor = top bit).
    /// `n = 0` is the one-vertex digraph.
    pub fn n_cube(n: u32) -> Digraph {
        let interval = Digraph::from_arcs(2, &[(0, 1)]);
        let mut cube = Digraph::from_arcs(1, &[]);
        for _ in 0..n {
            cube = cube.box_product(&interval);
        }
        let labels: Vec<String> = (0..cube.vertex_count()).map(|i| i.to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            index.insert(l.clone(), i as Vertex);
        }
        Digraph::from_parts(labels, index, cube.arrows.clone())
    }

    fn extend_with(
        &self,
        fresh: &[&str],
        extra: impl Fn(Vertex, &[Vertex]) -> Vec<(Vertex, Vertex)>,
    ) -> Result<Digraph, DigraphError> {
        let mut labels = self.labels.clone();
        let mut index = self.index.clone();
        let mut new_ix = Vec::new();
        for l in fresh {
            if index.contains_key(*l) {
                return Err(DigraphError::LabelCollision((*l).to_owned()));
            }
            let ix = labels.len() as Vertex;
            index.insert((*l).to_owned(), ix);
            labels.push((*l).to_owned());
            new_ix.push(ix);
        }
        let mut arcs = self.arrows.clone();
        for v in self.vertices() {
            arcs.extend(extra(v, &new_ix));
        }
        Ok(Digraph::from_parts(labels, index, arcs))
    }

    /// Cone: a fresh apex `a` with an arrow `v -> a` from every vertex.
    pub fn cone(&self, a: &str) -> Result<Digraph, DigraphError> {
        self.extend_with(&[a], |v, ix| vec![(v, ix[0])])
    }

    /// Inverse cone: a fresh apex `a` with arrows `a -> v`.
    pub fn inv_cone(&self, a: &str) -> Result<Digraph, DigraphError> {
        self.extend_with(&[a], |v, ix| vec![(ix[0], v)])
    }

    /// Suspension: fresh `a`, `b` with arrows `v -> a` and `v -> b`.
    pub fn suspension(&self, a: &str, b: &str) -> Result<Digraph, DigraphError> {
        if a == b {
            return Err(DigraphError::LabelCollision(a.to_owned()));
        }
        self.extend_with(&[a, b], |v, ix| vec![(v, ix[0]), (v, ix[1])])
    }

    /// Inverse suspension: fresh `a`, `b` with arrows `a -> v` and `b -> v`.
    pub fn inv_suspension(&self, a: &str, b: &str) -> Result<Digraph, DigraphError> {
        if a == b {
            return Err(DigraphError::LabelCollision(a.to_owned()));
        }
        self.extend_with(&[a, b], |v, ix| vec![(ix[0], v), (ix[1], v)])
    }

    /// Directed suspension: fresh `a`, `b` with arrows `a -> v` and `v -> b`.
    pub fn directed_suspension(&self, a: &str, b: &str) -> Result<Digraph, DigraphError> {
        if a == b {
            return Err(DigraphError::LabelCollision(a.to_owned()));
        }
        self.extend_with(&[a, b], |v, ix| vec![(ix[0], v), (v, ix[1])])
    }

    /// Length of a shortest allowed path from `v` to `w`; `None` when no
    /// such path exists, `Some(0)` when `v == w`.
    pub fn oriented_distance(&self, v: Vertex, w: Vertex) -> Option<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[v as usize] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if x == w {
                return Some(dist[x as usize]);
            }
            for &y in self.out_neighbors(x) {
                if dist[y as usize] == usize::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    pub(crate) fn reachable_from(&self, v: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        seen[v as usize] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in self.out_neighbors(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub(crate) fn coreachable_to(&self, v: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        seen[v as usize] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in self.in_neighbors(x) {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    // Induced subgraph on the chosen arrows, keeping every arrow endpoint
    // plus the explicitly forced vertices, in the parent's vertex order.
    fn subgraph_from_arrows(
        &self,
        keep: impl Fn(Vertex, Vertex) -> bool,
        force: &[Vertex],
    ) -> Digraph {
        let arcs: Vec<(Vertex, Vertex)> =
            self.arrows.iter().copied().filter(|&(t, h)| keep(t, h)).collect();
        let mut present = vec![false; self.vertex_count()];
        for &(t, h) in &arcs {
            present[t as usize] = true;
            present[h as usize] = true;
        }
        for &v in force {
            present[v as usize] = true;
        }
        let mut labels = Vec::new();
        let mut remap = vec![Vertex::MAX; self.vertex_count()];
        for v in self.vertices() {
            if present[v as usize] {
                remap[v as usize] = labels.len() as Vertex;
                labels.push(self.labels[v as usize].clone());
            }
        }
        let arcs = arcs.into_iter().map(|(t, h)| (remap[t as usize], remap[h as usize])).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            index.insert(l.clone(), i as Vertex);
        }
        Digraph::from_parts(labels, index, arcs)
    }

    /// The subgraph spanned by all allowed paths from `a` to `b`.
    ///
    /// An arrow lies on such a path iff `a` reaches its tail and its head
    /// reaches `b`: concatenating the witnessing walks yields an allowed
    /// `a -> b` path through the arrow, and conversely any path through the
    /// arrow splits into such walks. Vertices are the arrow endpoints, plus
    /// `a` itself when `a == b` (so `G^[a,a]` with no cycle through `a` is
    /// the one-vertex digraph). Returns `None` when `a != b` and no `a -> b`
    /// path exists. The result is an induced subgraph.
    pub fn cluster_subgraph(&self, a: Vertex, b: Vertex) -> Option<Digraph> {
        if a != b && self.oriented_distance(a, b).is_none() {
            return None;
        }
        let from_a = self.reachable_from(a);
        let to_b = self.coreachable_to(b);
        let force = if a == b { vec![a] } else { vec![] };
        Some(self.subgraph_from_arrows(|t, h| from_a[t as usize] && to_b[h as usize], &force))
    }

    /// The subgraph spanned by all allowed paths with tail `a`: an arrow is
    /// kept iff `a` reaches its tail; the vertex `a` itself is always kept.
    pub fn tail_subgraph(&self, a: Vertex) -> Digraph {
        let from_a = self.reachable_from(a);
        self.subgraph_from_arrows(|t, _| from_a[t as usize], &[a])
    }

    /// The subgraph spanned by all allowed paths with head `b`: an arrow is
    /// kept iff its head reaches `b`; the vertex `b` itself is always kept.
    pub fn head_subgraph(&self, b: Vertex) -> Digraph {
        let to_b = self.coreachable_to(b);
        self.subgraph_from_arrows(|_, h| to_b[h as usize], &[b])
    }

    /// Line-per-declaration text form: `vertex <label>` then
    /// `arrow <tail> <head>`, vertices in declaration order, arrows sorted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.labels {
            out.push_str("vertex ");
            out.push_str(l);
            out.push('\n');
        }
        for &(t, h) in &self.arrows {
            out.push_str("arrow ");
            out.push_str(self.label(t));
            out.push(' ');
            out.push_str(self.label(h));
            out.push('\n');
        }
        out
    }
}

/// A digraph map `f: G -> H`: a vertex assignment under which every arrow of
/// `G` maps to an arrow of `H` or collapses to a single vertex.
#[derive(Debug, Clone)]
pub struct DigraphMap {
    pub source: Digraph,
    pub target: Digraph,
    assignment: Vec<Vertex>,
    homomorphism: bool,
}

impl DigraphMap {
    /// Validates a label-level assignment as a digraph map.
    pub fn new(
        source: Digraph,
        target: Digraph,
        assignment: &HashMap<String, String>,
    ) -> Result<DigraphMap, DigraphError> {
        let mut table = Vec::with_capacity(source.vertex_count());
        for v in source.vertices() {
            let from = source.label(v);
            let to = assignment
                .get(from)
                .ok_or_else(|| DigraphError::IncompleteAssignment(from.to_owned()))?;
            table.push(target.vertex(to)?);
        }
        DigraphMap::from_table(source, target, table)
    }

    /// Index-level constructor; `table[v]` is the image of vertex `v`.
    pub fn from_table(
        source: Digraph,
        target: Digraph,
        table: Vec<Vertex>,
    ) -> Result<DigraphMap, DigraphError> {
        assert_eq!(table.len(), source.vertex_count());
        let mut homomorphism = true;
        for &(t, h) in source.arrows() {
            let (ft, fh) = (table[t as usize], table[h as usize]);
            if ft == fh {
                homomorphism = false;
                continue;
            }
            if !target.has_arrow(ft, fh) {
                return Err(DigraphError::NotAMap(
                    source.label(t).to_owned(),
                    source.label(h).to_owned(),
                    target.label(ft).to_owned(),
                    target.label(fh).to_owned(),
                ));
            }
        }
        Ok(DigraphMap { source, target, assignment: table, homomorphism })
    }

    pub fn identity(g: &Digraph) -> DigraphMap {
        let table = g.vertices().collect();
        DigraphMap::from_table(g.clone(), g.clone(), table).expect("identity is a map")
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.assignment[v as usize]
    }

    /// True iff every arrow maps to an arrow (nothing collapses).
    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism
    }

    /// Asymmetry of the target gates the induced chain maps.
    pub fn target_asymmetric(&self) -> bool {
        self.target.is_asymmetric()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complete_pair() -> Digraph {
        Digraph::from_arcs(2, &[(0, 1), (1, 0)])
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Digraph::new::<&str>(&[], &[]), Err(DigraphError::EmptyVertexSet));
        assert!(matches!(Digraph::new(&["0"], &[("0", "0")]), Err(DigraphError::LoopArrow(_))));
        assert!(matches!(
            Digraph::new(&["0", "1"], &[("0", "1"), ("0", "1")]),
            Err(DigraphError::DuplicateArrow(..))
        ));
        assert!(matches!(
            Digraph::new(&["0", "1"], &[("0", "2")]),
            Err(DigraphError::UnknownEndpoint(_))
        ));
        assert!(complete_pair().vertex("5").is_err());
    }

    #[test]
    fn asymmetry() {
        assert!(!complete_pair().is_asymmetric());
        assert!(Digraph::from_arcs(2, &[(0, 1)]).is_asymmetric());
        assert!(Digraph::n_cube(3).is_asymmetric());
    }

    #[test]
    fn inverse_example() {
        let sq = Digraph::n_cube(2);
        let inv = sq.inverse();
        assert_eq!(inv.arrows(), &[(1, 0), (2, 0), (3, 1), (3, 2)]);
    }

    #[test]
    fn cube_shapes() {
        let c0 = Digraph::n_cube(0);
        assert_eq!((c0.vertex_count(), c0.arrow_count()), (1, 0));
        let c2 = Digraph::n_cube(2);
        assert_eq!(c2.arrows(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let c3 = Digraph::n_cube(3);
        assert_eq!(
            c3.arrows(),
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 6),
                (3, 7),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7)
            ]
        );
        for n in 1..=4u32 {
            let c = Digraph::n_cube(n);
            assert_eq!(c.vertex_count(), 1 << n);
            assert_eq!(c.arrow_count(), (n as usize) << (n - 1));
        }
    }

    #[test]
    fn box_product_unit_and_count() {
        let i = Digraph::from_arcs(2, &[(0, 1)]);
        let pt = Digraph::from_arcs(1, &[]);
        let prod = i.box_product(&pt);
        assert_eq!((prod.vertex_count(), prod.arrow_count()), (2, 1));
        assert_eq!(prod.arrows(), &[(0, 1)]);
        let g = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]);
        let h = Digraph::from_arcs(2, &[(0, 1)]);
        let gh = g.box_product(&h);
        assert_eq!(
            gh.arrow_count(),
            g.vertex_count() * h.arrow_count() + h.vertex_count() * g.arrow_count()
        );
    }

    #[test]
    fn cones_and_suspensions() {
        let pt = Digraph::from_arcs(1, &[]);
        let cone = pt.cone("a").unwrap();
        assert_eq!(cone.arrows(), &[(0, 1)]);

        let i = Digraph::from_arcs(2, &[(0, 1)]);
        let s = i.suspension("a", "b").unwrap();
        assert_eq!(s.arrow_count(), i.arrow_count() + 2 * i.vertex_count());

        let inv_s = i.inv_suspension("a", "b").unwrap();
        let expected: Vec<(Vertex, Vertex)> = vec![(0, 1), (2, 0), (2, 1), (3, 0), (3, 1)];
        assert_eq!(inv_s.arrows(), expected.as_slice());

        assert!(matches!(i.cone("1"), Err(DigraphError::LabelCollision(_))));
        assert!(matches!(i.suspension("a", "a"), Err(DigraphError::LabelCollision(_))));
    }

    #[test]
    fn directed_suspension_of_point_is_a_path() {
        let pt = Digraph::from_arcs(1, &[]);
        let sd = pt.directed_suspension("a", "b").unwrap();
        assert_eq!(sd.labels(), &["0".to_string(), "a".to_string(), "b".to_string()]);
        assert_eq!(sd.arrows(), &[(0, 2), (1, 0)]);
    }

    #[test]
    fn digraph_values_are_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Digraph>();
        assert_send_sync::<DigraphMap>();
    }

    #[test]
    fn directed_suspension_of_cycle() {
        let cycle = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]);
        let sd = cycle.directed_suspension("a", "b").unwrap();
        assert_eq!(sd.vertex_count(), 5);
        let a = sd.vertex("a").unwrap();
        let b = sd.vertex("b").unwrap();
        for v in 0..3 {
            assert!(sd.has_arrow(a, v));
            assert!(sd.has_arrow(v, b));
        }
        assert!(!sd.has_arrow(a, b));
        assert_eq!(sd.arrow_count(), 9);
        // Shortest a -> b route passes through one original vertex.
        assert_eq!(sd.oriented_distance(a, b), Some(2));
    }

    #[test]
    fn distances() {
        let i = Digraph::from_arcs(2, &[(0, 1)]);
        assert_eq!(i.oriented_distance(0, 0), Some(0));
        assert_eq!(i.oriented_distance(0, 1), Some(1));
        assert_eq!(i.oriented_distance(1, 0), None);
    }

    #[test]
    fn cluster_subgraph_examples() {
        let i = Digraph::from_arcs(2, &[(0, 1)]);
        assert!(i.cluster_subgraph(1, 0).is_none());

        // a == b with no cycle through it: just the one vertex.
        let g = i.cluster_subgraph(0, 0).unwrap();
        assert_eq!((g.vertex_count(), g.arrow_count()), (1, 0));
        assert_eq!(g.labels(), &["0".to_string()]);

        let c3 = Digraph::n_cube(3);
        let full = c3.cluster_subgraph(0, 7).unwrap();
        assert_eq!(full.arrows(), c3.arrows());
        assert_eq!(full.vertex_count(), 8);
    }

    #[test]
    fn tail_and_head_subgraphs() {
        let path = Digraph::from_arcs(3, &[(0, 1), (1, 2)]);
        let t1 = path.tail_subgraph(1);
        assert_eq!(t1.labels(), &["1".to_string(), "2".to_string()]);
        assert_eq!(t1.arrow_count(), 1);

        let sq = Digraph::n_cube(2);
        assert_eq!(sq.tail_subgraph(0).arrows(), sq.arrows());

        let i = Digraph::from_arcs(2, &[(0, 1)]);
        let h0 = i.head_subgraph(0);
        assert_eq!((h0.vertex_count(), h0.arrow_count()), (1, 0));
    }

    #[test]
    fn digraph_map_validation() {
        // Collapse a 2-path onto the complete pair.
        let g = Digraph::from_arcs(3, &[(0, 1), (1, 2)]);
        let h = complete_pair();
        let f = DigraphMap::from_table(g.clone(), h.clone(), vec![0, 1, 0]).unwrap();
        assert!(f.is_homomorphism());
        assert!(!f.target_asymmetric());

        let id = DigraphMap::identity(&g);
        assert!(id.is_homomorphism());

        let no_arrows = Digraph::new(&["0", "1"], &[]).unwrap();
        let i = Digraph::from_arcs(2, &[(0, 1)]);
        assert!(matches!(
            DigraphMap::from_table(i, no_arrows, vec![0, 1]),
            Err(DigraphError::NotAMap(..))
        ));
    }

    fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut arcs = Vec::new();
            for t in 0..n as Vertex {
                for h in 0..n as Vertex {
                    if t != h && rng.gen_bool(0.4) {
                        arcs.push((t, h));
                    }
                }
            }
            Digraph::from_arcs(n, &arcs)
        })
    }

    proptest! {
        #[test]
        fn inverse_is_involution(g in arb_digraph(6)) {
            prop_assert_eq!(g.inverse().inverse(), g);
        }

        #[test]
        fn subgraphs_are_induced(g in arb_digraph(6), a in 0u32..6, b in 0u32..6) {
            let a = a % g.vertex_count() as Vertex;
            let b = b % g.vertex_count() as Vertex;
            let mut subs = vec![g.tail_subgraph(a), g.head_subgraph(b)];
            if let Some(c) = g.cluster_subgraph(a, b) {
                subs.push(c);
            }
            for s in subs {
                for t in s.vertices() {
                    for h in s.vertices() {
                        if t == h { continue; }
                        let (gt, gh) = (g.vertex(s.label(t)).unwrap(), g.vertex(s.label(h)).unwrap());
                        if g.has_arrow(gt, gh) {
                            prop_assert!(s.has_arrow(t, h), "induced subgraph dropped an arrow");
                        }
                    }
                }
            }
        }

        #[test]
        fn triangle_inequality(g in arb_digraph(6), u in 0u32..6, v in 0u32..6, w in 0u32..6) {
            let n = g.vertex_count() as Vertex;
            let (u, v, w) = (u % n, v % n, w % n);
            if let (Some(duv), Some(dvw)) = (g.oriented_distance(u, v), g.oriented_distance(v, w)) {
                let duw = g.oriented_distance(u, w);
                prop_assert!(duw.is_some() && duw.unwrap() <= duv + dvw);
            }
        }
    }
}
