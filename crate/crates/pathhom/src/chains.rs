//! Elementary paths and sparse formal chains over the integers, with the
//! boundary operators of every homology theory in this crate: the full
//! differential, the regularized differential, the cluster differential
//! (interior deletions only), the tail/head differentials, the induced map
//! of a digraph map, augmentation, endpoint decompositions, and signed
//! reversal.
//!
//! The ambient free modules on all paths are never materialized; a chain is
//! a sparse map from elementary paths to nonzero coefficients, and "lies in
//! the allowed submodule" is a per-term predicate.

use crate::digraph::{Digraph, DigraphMap, Vertex};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("face index {0} out of range for a path of degree {1}")]
    IndexOutOfRange(usize, usize),
    #[error("chain contains an irregular path")]
    IrregularInput,
    #[error("terms do not share a single (tail, head) pair")]
    NotClusterChain,
    #[error("cluster chains have no degree-0 component")]
    DegreeZero,
    #[error("terms do not share a single tail vertex")]
    NotTailChain,
    #[error("terms do not share a single head vertex")]
    NotHeadChain,
    #[error("expected a chain of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("chain contains a path that is not allowed in the digraph")]
    NotAllowedChain,
}

/// An elementary n-path: a nonempty vertex sequence of length n+1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemPath {
    verts: Vec<Vertex>,
}

impl ElemPath {
    pub fn new(verts: Vec<Vertex>) -> ElemPath {
        assert!(!verts.is_empty(), "elementary paths are nonempty");
        ElemPath { verts }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts
    }

    pub fn degree(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn tail(&self) -> Vertex {
        self.verts[0]
    }

    pub fn head(&self) -> Vertex {
        *self.verts.last().unwrap()
    }

    /// No two equal consecutive vertices.
    pub fn is_regular(&self) -> bool {
        self.verts.windows(2).all(|w| w[0] != w[1])
    }

    /// Every consecutive pair is an arrow of `g`. Allowed paths are regular
    /// because simple digraphs have no loops.
    pub fn is_allowed(&self, g: &Digraph) -> bool {
        self.verts.windows(2).all(|w| g.has_arrow(w[0], w[1]))
    }

    /// The path with vertex `m` omitted, unsigned.
    pub fn face(&self, m: usize) -> Result<ElemPath, ChainError> {
        if self.degree() == 0 || m > self.degree() {
            return Err(ChainError::IndexOutOfRange(m, self.degree()));
        }
        let mut v = self.verts.clone();
        v.remove(m);
        Ok(ElemPath::new(v))
    }

    fn reversed(&self) -> ElemPath {
        ElemPath::new(self.verts.iter().rev().copied().collect())
    }
}

/// A sparse formal linear combination of elementary paths of one degree,
/// with integer coefficients. Zero coefficients are never stored, and terms
/// are kept in lexicographic vertex-sequence order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<ElemPath, BigInt>,
}

impl Chain {
    pub fn zero(degree: usize) -> Chain {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn from_path(p: ElemPath) -> Chain {
        let mut c = Chain::zero(p.degree());
        c.add_term(p, BigInt::from(1));
        c
    }

    /// Builds a chain from (vertex sequence, coefficient) pairs; all
    /// sequences must share one degree.
    pub fn from_terms(terms: &[(&[Vertex], i64)]) -> Chain {
        assert!(!terms.is_empty());
        let degree = terms[0].0.len() - 1;
        let mut c = Chain::zero(degree);
        for (vs, coeff) in terms {
            c.add_term(ElemPath::new(vs.to_vec()), BigInt::from(*coeff));
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ElemPath, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &ElemPath) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, p: ElemPath, coeff: BigInt) {
        assert_eq!(p.degree(), self.degree, "degree mismatch in chain term");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Chain {
        let mut out = Chain::zero(self.degree);
        for (p, c) in self.terms() {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    /// True iff every term is allowed in `g`.
    pub fn is_allowed(&self, g: &Digraph) -> bool {
        self.terms.keys().all(|p| p.is_allowed(g))
    }

    pub fn is_regular(&self) -> bool {
        self.terms.keys().all(ElemPath::is_regular)
    }

    /// Alternating sum of vertex deletions, extended linearly. Degree-0
    /// chains map to zero.
    pub fn boundary(&self) -> Chain {
        let out_degree = self.degree.saturating_sub(1);
        let mut out = Chain::zero(out_degree);
        if self.degree == 0 {
            return out;
        }
        for (p, c) in self.terms() {
            for m in 0..=self.degree {
                let face = p.face(m).unwrap();
                let sign = if m % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, sign);
            }
        }
        out
    }

    /// The m-th face sum of the chain, unsigned: the coefficients of `self`
    /// pushed through deletion of vertex `m`.
    pub fn face_sum(&self, m: usize) -> Result<Chain, ChainError> {
        if self.degree == 0 || m > self.degree {
            return Err(ChainError::IndexOutOfRange(m, self.degree));
        }
        let mut out = Chain::zero(self.degree - 1);
        for (p, c) in self.terms() {
            out.add_term(p.face(m)?, c.clone());
        }
        Ok(out)
    }

    /// Boundary computed in the regular quotient: irregular faces are
    /// dropped. The input must be regular.
    pub fn regular_boundary(&self) -> Result<Chain, ChainError> {
        if !self.is_regular() {
            return Err(ChainError::IrregularInput);
        }
        let out_degree = self.degree.saturating_sub(1);
        let mut out = Chain::zero(out_degree);
        if self.degree == 0 {
            return Ok(out);
        }
        for (p, c) in self.terms() {
            for m in 0..=self.degree {
                let face = p.face(m).unwrap();
                if !face.is_regular() {
                    continue;
                }
                let sign = if m % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, sign);
            }
        }
        Ok(out)
    }

    fn endpoints(&self) -> Option<(Vertex, Vertex)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (t, h) = (first.tail(), first.head());
        it.all(|p| p.tail() == t && p.head() == h).then_some((t, h))
    }

    /// Cluster differential: alternating sum over deletions of interior
    /// vertices only. Every term must share one (tail, head) pair; degree-1
    /// chains map to zero, degree-0 cluster chains do not exist.
    pub fn cluster_differential(&self) -> Result<Chain, ChainError> {
        if self.degree == 0 {
            return Err(ChainError::DegreeZero);
        }
        if !self.is_zero() && self.endpoints().is_none() {
            return Err(ChainError::NotClusterChain);
        }
        let mut out = Chain::zero(self.degree - 1);
        for (p, c) in self.terms() {
            for m in 1..self.degree {
                let face = p.face(m).unwrap();
                let sign = if (m - 1) % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, sign);
            }
        }
        Ok(out)
    }

    /// Tail differential: deletions of every vertex except the fixed tail.
    /// Degree-0 chains map to zero.
    pub fn tail_differential(&self) -> Result<Chain, ChainError> {
        let shared_tail = {
            let mut tails = self.terms.keys().map(ElemPath::tail);
            let first = tails.next();
            first.is_none() || tails.all(|t| Some(t) == first)
        };
        if !shared_tail {
            return Err(ChainError::NotTailChain);
        }
        let out_degree = self.degree.saturating_sub(1);
        let mut out = Chain::zero(out_degree);
        if self.degree == 0 {
            return Ok(out);
        }
        for (p, c) in self.terms() {
            for m in 1..=self.degree {
                let face = p.face(m).unwrap();
                let sign = if (m - 1) % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, sign);
            }
        }
        Ok(out)
    }

    /// Head differential: deletions of every vertex except the fixed head.
    /// Degree-0 chains map to zero.
    pub fn head_differential(&self) -> Result<Chain, ChainError> {
        let shared_head = {
            let mut heads = self.terms.keys().map(ElemPath::head);
            let first = heads.next();
            first.is_none() || heads.all(|h| Some(h) == first)
        };
        if !shared_head {
            return Err(ChainError::NotHeadChain);
        }
        let out_degree = self.degree.saturating_sub(1);
        let mut out = Chain::zero(out_degree);
        if self.degree == 0 {
            return Ok(out);
        }
        for (p, c) in self.terms() {
            for m in 0..self.degree {
                let face = p.face(m).unwrap();
                let sign = if m % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, sign);
            }
        }
        Ok(out)
    }

    /// The induced chain map of a digraph map: each elementary path goes to
    /// its image path when that image is regular, and to zero otherwise.
    pub fn induced_map(&self, f: &DigraphMap) -> Chain {
        let mut out = Chain::zero(self.degree);
        for (p, c) in self.terms() {
            let image = ElemPath::new(p.vertices().iter().map(|&v| f.apply(v)).collect());
            if image.is_regular() {
                out.add_term(image, c.clone());
            }
        }
        out
    }

    /// Sum of coefficients of a degree-0 chain.
    pub fn augmentation(&self) -> Result<BigInt, ChainError> {
        if self.degree != 0 {
            return Err(ChainError::WrongDegree { expected: 0, got: self.degree });
        }
        Ok(self.terms.values().sum())
    }

    /// Partition of the terms by (tail, head) pair; the components sum back
    /// to the chain.
    pub fn decompose_by_endpoints(&self) -> BTreeMap<(Vertex, Vertex), Chain> {
        let mut out: BTreeMap<(Vertex, Vertex), Chain> = BTreeMap::new();
        for (p, c) in self.terms() {
            out.entry((p.tail(), p.head()))
                .or_insert_with(|| Chain::zero(self.degree))
                .add_term(p.clone(), c.clone());
        }
        out
    }

    /// Tail-only grouping, a coarsening of [`Chain::decompose_by_endpoints`].
    pub fn decompose_by_tail(&self) -> BTreeMap<Vertex, Chain> {
        let mut out: BTreeMap<Vertex, Chain> = BTreeMap::new();
        for (p, c) in self.terms() {
            out.entry(p.tail()).or_insert_with(|| Chain::zero(self.degree)).add_term(p.clone(), c.clone());
        }
        out
    }

    /// Head-only grouping.
    pub fn decompose_by_head(&self) -> BTreeMap<Vertex, Chain> {
        let mut out: BTreeMap<Vertex, Chain> = BTreeMap::new();
        for (p, c) in self.terms() {
            out.entry(p.head()).or_insert_with(|| Chain::zero(self.degree)).add_term(p.clone(), c.clone());
        }
        out
    }

    /// Signed vertex-sequence reversal: a degree-n term picks up the sign
    /// (-1)^(n(n+1)/2), i.e. +1 for n = 0,3 mod 4 and -1 for n = 1,2 mod 4.
    /// Commutes with [`Chain::boundary`].
    pub fn reversed(&self) -> Chain {
        let sign_flip = matches!(self.degree % 4, 1 | 2);
        let mut out = Chain::zero(self.degree);
        for (p, c) in self.terms() {
            let coeff = if sign_flip { -c.clone() } else { c.clone() };
            out.add_term(p.reversed(), coeff);
        }
        out
    }

    /// Exact text form: `±c·e_{v0 v1 ... vn}` terms joined by single spaces
    /// in lexicographic path order, `0` for the zero chain.
    pub fn render(&self, g: &Digraph) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut parts = Vec::new();
        for (p, c) in self.terms() {
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.magnitude();
            let verts: Vec<&str> = p.vertices().iter().map(|&v| g.label(v)).collect();
            parts.push(format!("{sign}{mag}\u{b7}e_{{{}}}", verts.join(" ")));
        }
        parts.join(" ")
    }
}

/// An element of an augmented chain complex in low degree: either an honest
/// chain or a scalar in the augmentation slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Augmented {
    Chain(Chain),
    Scalar(BigInt),
}

impl Augmented {
    pub fn zero_scalar() -> Augmented {
        Augmented::Scalar(BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Augmented::Chain(c) => c.is_zero(),
            Augmented::Scalar(s) => s.is_zero(),
        }
    }

    /// The augmented differential: chains of positive degree map by the
    /// plain boundary, degree-0 chains map to their augmentation scalar,
    /// scalars map to zero.
    pub fn boundary(&self) -> Augmented {
        match self {
            Augmented::Chain(c) if c.degree() == 0 => {
                Augmented::Scalar(c.augmentation().expect("degree 0"))
            }
            Augmented::Chain(c) => Augmented::Chain(c.boundary()),
            Augmented::Scalar(_) => Augmented::zero_scalar(),
        }
    }
}

impl fmt::Display for ElemPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self.verts.iter().map(|v| v.to_string()).collect();
        write!(f, "e_{{{}}}", verts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(vs: &[Vertex]) -> ElemPath {
        ElemPath::new(vs.to_vec())
    }

    #[test]
    fn boundary_of_triangle_path() {
        let c = Chain::from_path(path(&[0, 1, 2])).boundary();
        assert_eq!(c, Chain::from_terms(&[(&[1, 2], 1), (&[0, 2], -1), (&[0, 1], 1)]));
        assert!(Chain::from_path(path(&[0])).boundary().is_zero());
    }

    #[test]
    fn faces() {
        assert_eq!(path(&[0, 1, 0]).face(1).unwrap(), path(&[0, 0]));
        assert_eq!(path(&[0, 1]).face(0).unwrap(), path(&[1]));
        assert!(path(&[0]).face(0).is_err());
        // Alternating face sums reassemble the boundary.
        let w = Chain::from_terms(&[(&[0, 1, 2], 2), (&[2, 1, 0], 3)]);
        let mut acc = Chain::zero(1);
        for m in 0..=2 {
            let f = w.face_sum(m).unwrap();
            acc = if m % 2 == 0 { acc.add(&f) } else { acc.sub(&f) };
        }
        assert_eq!(acc, w.boundary());
    }

    #[test]
    fn regular_boundary_drops_irregular_faces() {
        let c = Chain::from_path(path(&[0, 1, 0]));
        assert_eq!(
            c.regular_boundary().unwrap(),
            Chain::from_terms(&[(&[1, 0], 1), (&[0, 1], 1)])
        );
        let fine = Chain::from_path(path(&[0, 1, 2]));
        assert_eq!(fine.regular_boundary().unwrap(), fine.boundary());
        let irregular = Chain::from_path(path(&[0, 0]));
        assert!(irregular.regular_boundary().is_err());
    }

    #[test]
    fn cluster_differential_examples() {
        let edge = Chain::from_path(path(&[0, 1]));
        assert!(edge.cluster_differential().unwrap().is_zero());

        // Two square routes cancel on the shared diagonal face.
        let square = Chain::from_terms(&[(&[0, 1, 3], 1), (&[0, 2, 3], -1)]);
        assert!(square.cluster_differential().unwrap().is_zero());

        let cube_route = Chain::from_path(path(&[0, 1, 3, 7]));
        assert_eq!(
            cube_route.cluster_differential().unwrap(),
            Chain::from_terms(&[(&[0, 3, 7], 1), (&[0, 1, 7], -1)])
        );

        let mixed = Chain::from_terms(&[(&[0, 1, 3], 1), (&[0, 2, 4], 1)]);
        assert_eq!(mixed.cluster_differential(), Err(ChainError::NotClusterChain));
        let point = Chain::from_path(path(&[0]));
        assert_eq!(point.cluster_differential(), Err(ChainError::DegreeZero));
    }

    #[test]
    fn tail_and_head_differentials() {
        let c = Chain::from_path(path(&[0, 1]));
        assert_eq!(c.tail_differential().unwrap(), Chain::from_terms(&[(&[0], 1)]));

        let c = Chain::from_path(path(&[0, 1, 3, 4]));
        assert_eq!(
            c.tail_differential().unwrap(),
            Chain::from_terms(&[(&[0, 3, 4], 1), (&[0, 1, 4], -1), (&[0, 1, 3], 1)])
        );

        let c = Chain::from_path(path(&[1, 0]));
        assert_eq!(c.head_differential().unwrap(), Chain::from_terms(&[(&[0], 1)]));

        let bad = Chain::from_terms(&[(&[0, 1], 1), (&[1, 0], 1)]);
        assert_eq!(bad.tail_differential(), Err(ChainError::NotTailChain));
        assert_eq!(bad.head_differential(), Err(ChainError::NotHeadChain));
    }

    #[test]
    fn induced_map_collapses() {
        // 0 -> 1 -> 2 folded onto the complete pair, 0 and 2 both to 0.
        let g = Digraph::from_arcs(3, &[(0, 1), (1, 2)]);
        let h = Digraph::from_arcs(2, &[(0, 1), (1, 0)]);
        let f = DigraphMap::from_table(g.clone(), h, vec![0, 1, 0]).unwrap();

        let c = Chain::from_path(path(&[0, 1, 2]));
        assert_eq!(c.induced_map(&f), Chain::from_terms(&[(&[0, 1, 0], 1)]));
        let skip = Chain::from_path(path(&[0, 2]));
        assert!(skip.induced_map(&f).is_zero());
        let id = DigraphMap::identity(&g);
        assert_eq!(c.induced_map(&id), c);
    }

    #[test]
    fn augmentation_sums_coefficients() {
        let c = Chain::from_terms(&[(&[0], 1), (&[1], 1)]);
        assert_eq!(c.augmentation().unwrap(), BigInt::from(2));
        let c = Chain::from_terms(&[(&[0], 3), (&[1], -3)]);
        assert_eq!(c.augmentation().unwrap(), BigInt::from(0));
        assert!(Chain::from_path(path(&[0, 1])).augmentation().is_err());
        // Augmentation annihilates boundaries of degree-1 chains.
        let w = Chain::from_terms(&[(&[0, 1], 5), (&[2, 0], -2)]);
        assert_eq!(w.boundary().augmentation().unwrap(), BigInt::from(0));
    }

    #[test]
    fn endpoint_decomposition() {
        let w = Chain::from_terms(&[(&[0, 1], 1), (&[1, 2], 1)]);
        let parts = w.decompose_by_endpoints();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&(0, 1)], Chain::from_terms(&[(&[0, 1], 1)]));
        assert_eq!(parts[&(1, 2)], Chain::from_terms(&[(&[1, 2], 1)]));

        let single = Chain::from_terms(&[(&[0, 1, 3], 1), (&[0, 2, 3], 4)]);
        let parts = single.decompose_by_endpoints();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&(0, 3)], single);
    }

    #[test]
    fn render_golden() {
        let g = Digraph::from_arcs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let w = Chain::from_terms(&[(&[0, 1, 3], 1), (&[0, 2, 3], -1)]);
        assert_eq!(w.render(&g), "+1\u{b7}e_{0 1 3} -1\u{b7}e_{0 2 3}");
        assert_eq!(Chain::zero(2).render(&g), "0");
    }

    #[test]
    fn augmented_boundary() {
        let c = Augmented::Chain(Chain::from_terms(&[(&[0], 2), (&[1], 1)]));
        assert_eq!(c.boundary(), Augmented::Scalar(BigInt::from(3)));
        assert!(Augmented::Scalar(BigInt::from(5)).boundary().is_zero());
    }

    fn arb_chain(max_degree: usize, max_vertex: Vertex) -> impl Strategy<Value = Chain> {
        (0..=max_degree, any::<u64>()).prop_map(move |(deg, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut c = Chain::zero(deg);
            for _ in 0..rng.gen_range(1..=5) {
                let vs: Vec<Vertex> = (0..=deg).map(|_| rng.gen_range(0..max_vertex)).collect();
                c.add_term(ElemPath::new(vs), BigInt::from(rng.gen_range(-4i64..=4)));
            }
            c
        })
    }

    fn arb_cluster_chain(max_vertex: Vertex) -> impl Strategy<Value = Chain> {
        (1..=6usize, any::<u64>()).prop_map(move |(deg, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let (a, b) = (rng.gen_range(0..max_vertex), rng.gen_range(0..max_vertex));
            let mut c = Chain::zero(deg);
            for _ in 0..rng.gen_range(1..=5) {
                let mut vs = vec![a];
                vs.extend((0..deg - 1).map(|_| rng.gen_range(0..max_vertex)));
                vs.push(b);
                c.add_term(ElemPath::new(vs), BigInt::from(rng.gen_range(-4i64..=4)));
            }
            c
        })
    }

    proptest! {
        #[test]
        fn boundary_squares_to_zero(c in arb_chain(6, 5)) {
            prop_assert!(c.boundary().boundary().is_zero());
        }

        #[test]
        fn regular_boundary_squares_to_zero(c in arb_chain(6, 5)) {
            // Restrict to the regular part of the generated chain.
            let mut reg = Chain::zero(c.degree());
            for (p, k) in c.terms() {
                if p.is_regular() {
                    reg.add_term(p.clone(), k.clone());
                }
            }
            let once = reg.regular_boundary().unwrap();
            prop_assert!(once.regular_boundary().unwrap().is_zero());
        }

        #[test]
        fn cluster_differential_squares_to_zero(c in arb_cluster_chain(5)) {
            if c.degree() >= 2 {
                let once = c.cluster_differential().unwrap();
                if once.degree() >= 1 {
                    prop_assert!(once.cluster_differential().unwrap().is_zero());
                }
            }
        }

        #[test]
        fn tail_head_differentials_square_to_zero(c in arb_chain(6, 5)) {
            for part in c.decompose_by_tail().values() {
                prop_assert!(part.tail_differential().unwrap().tail_differential().unwrap().is_zero());
            }
            for part in c.decompose_by_head().values() {
                prop_assert!(part.head_differential().unwrap().head_differential().unwrap().is_zero());
            }
        }

        #[test]
        fn decomposition_resums(c in arb_chain(5, 6)) {
            let mut sum = Chain::zero(c.degree());
            for part in c.decompose_by_endpoints().values() {
                sum = sum.add(part);
            }
            prop_assert_eq!(sum, c);
        }

        #[test]
        fn reversal_commutes_with_boundary(c in arb_chain(6, 5)) {
            prop_assert_eq!(c.reversed().boundary(), c.boundary().reversed());
        }
    }
}
