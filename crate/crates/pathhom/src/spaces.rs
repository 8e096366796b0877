//! Allowed-path bases and the chain submodules living inside them.
//!
//! For each degree the allowed paths (optionally constrained to a fixed
//! tail, head, or both) form a free module with a canonical ordered basis.
//! The submodules of interest are all of the shape "chains whose
//! differential stays allowed"; they are computed as integer kernels: the
//! non-allowed faces that actually occur index the rows of a membership
//! matrix, and the kernel of that matrix (a saturated lattice, extracted via
//! column Hermite form) is the submodule. The quotient by the allowed
//! submodule is never materialized -- only the occurring non-allowed rows.

use crate::chains::{Chain, ChainError, ElemPath};
use crate::digraph::{Digraph, Vertex};
use crate::linalg::{
    integer_kernel, lattice_canonical, record_saturation_check, snf_invariant_factors, IntMatrix,
};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// Which elementary paths enter a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathConstraint {
    Unrestricted,
    /// Fixed tail and head; degree 0 is empty by convention, even when the
    /// two vertices coincide.
    Cluster(Vertex, Vertex),
    Tail(Vertex),
    Head(Vertex),
}

/// Ordered basis of allowed elementary n-paths under a constraint.
#[derive(Debug, Clone)]
pub struct AllowedBasis {
    pub constraint: PathConstraint,
    pub degree: usize,
    paths: Vec<ElemPath>,
}

impl AllowedBasis {
    pub fn rank(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[ElemPath] {
        &self.paths
    }

    pub fn position(&self, p: &ElemPath) -> Option<usize> {
        self.paths.binary_search(p).ok()
    }

    /// Coordinates of a chain in this basis; `None` if some term is not a
    /// basis path.
    pub fn vectorize(&self, c: &Chain) -> Option<Vec<BigInt>> {
        let mut v = vec![BigInt::from(0); self.paths.len()];
        for (p, coeff) in c.terms() {
            v[self.position(p)?] = coeff.clone();
        }
        Some(v)
    }

    pub fn chain_from_coords(&self, coords: &[BigInt]) -> Chain {
        assert_eq!(coords.len(), self.paths.len());
        let mut c = Chain::zero(self.degree);
        for (p, coeff) in self.paths.iter().zip(coords) {
            c.add_term(p.clone(), coeff.clone());
        }
        c
    }
}

/// Depth-first enumeration of all allowed n-paths matching the constraint,
/// in lexicographic vertex-sequence order.
pub fn allowed_paths(g: &Digraph, n: usize, constraint: PathConstraint) -> AllowedBasis {
    let mut paths = Vec::new();
    match constraint {
        PathConstraint::Unrestricted => {
            for v in g.vertices() {
                extend_walks(g, &mut vec![v], n, None, &mut paths);
            }
        }
        PathConstraint::Cluster(a, b) => {
            // Degree 0 carries no cluster paths by convention.
            if n >= 1 {
                extend_walks(g, &mut vec![a], n, Some(b), &mut paths);
            }
        }
        PathConstraint::Tail(a) => {
            extend_walks(g, &mut vec![a], n, None, &mut paths);
        }
        PathConstraint::Head(b) => {
            collect_into_head(g, b, n, &mut paths);
            paths.sort();
        }
    }
    AllowedBasis { constraint, degree: n, paths }
}

fn extend_walks(
    g: &Digraph,
    prefix: &mut Vec<Vertex>,
    n: usize,
    end: Option<Vertex>,
    out: &mut Vec<ElemPath>,
) {
    let remaining = n + 1 - prefix.len();
    if remaining == 0 {
        if end.is_none_or(|b| *prefix.last().unwrap() == b) {
            out.push(ElemPath::new(prefix.clone()));
        }
        return;
    }
    let last = *prefix.last().unwrap();
    for &next in g.out_neighbors(last) {
        if let Some(b) = end {
            // A walk of exactly `remaining` more arrows must at least reach b.
            match g.oriented_distance(next, b) {
                Some(d) if d < remaining => {}
                _ => continue,
            }
        }
        prefix.push(next);
        extend_walks(g, prefix, n, end, out);
        prefix.pop();
    }
}

fn collect_into_head(g: &Digraph, b: Vertex, n: usize, out: &mut Vec<ElemPath>) {
    fn rec(g: &Digraph, suffix: &mut Vec<Vertex>, n: usize, out: &mut Vec<ElemPath>) {
        if suffix.len() == n + 1 {
            out.push(ElemPath::new(suffix.iter().rev().copied().collect()));
            return;
        }
        let last = *suffix.last().unwrap();
        for &prev in g.in_neighbors(last) {
            suffix.push(prev);
            rec(g, suffix, n, out);
            suffix.pop();
        }
    }
    rec(g, &mut vec![b], n, out);
}

/// The submodule flavors, each pairing a differential with a constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Kernel of the regularized boundary into the quotient by allowed
    /// paths: irregular faces are dropped, non-allowed regular faces
    /// obstruct.
    Omega(PathConstraint),
    /// Kernel of the full boundary into the quotient by allowed paths:
    /// irregular faces obstruct too.
    Pi(PathConstraint),
    /// Cluster chains closed under the interior-deletion differential.
    ThetaCluster(Vertex, Vertex),
    /// Tail chains closed under the tail differential.
    ThetaTail(Vertex),
    /// Head chains closed under the head differential.
    ThetaHead(Vertex),
}

impl BasisKind {
    pub fn constraint(&self) -> PathConstraint {
        match *self {
            BasisKind::Omega(c) | BasisKind::Pi(c) => c,
            BasisKind::ThetaCluster(a, b) => PathConstraint::Cluster(a, b),
            BasisKind::ThetaTail(a) => PathConstraint::Tail(a),
            BasisKind::ThetaHead(b) => PathConstraint::Head(b),
        }
    }

    /// Signed faces of one basis path under this kind's differential.
    /// Omega silently drops irregular faces; the rest keep every face.
    fn faces(&self, p: &ElemPath) -> Vec<(ElemPath, i64)> {
        let n = p.degree();
        if n == 0 {
            return Vec::new();
        }
        let range: Box<dyn Iterator<Item = (usize, i64)>> = match self {
            BasisKind::Omega(_) | BasisKind::Pi(_) => {
                Box::new((0..=n).map(|m| (m, if m % 2 == 0 { 1 } else { -1 })))
            }
            BasisKind::ThetaCluster(..) => {
                Box::new((1..n).map(|m| (m, if (m - 1) % 2 == 0 { 1 } else { -1 })))
            }
            BasisKind::ThetaTail(_) => {
                Box::new((1..=n).map(|m| (m, if (m - 1) % 2 == 0 { 1 } else { -1 })))
            }
            BasisKind::ThetaHead(_) => {
                Box::new((0..n).map(|m| (m, if m % 2 == 0 { 1 } else { -1 })))
            }
        };
        let drop_irregular = matches!(self, BasisKind::Omega(_));
        let mut out = Vec::with_capacity(n + 1);
        for (m, sign) in range {
            let face = p.face(m).unwrap();
            if drop_irregular && !face.is_regular() {
                continue;
            }
            out.push((face, sign));
        }
        out
    }

    /// The kind's differential applied to a whole chain.
    pub fn differential(&self, c: &Chain) -> Result<Chain, ChainError> {
        match self {
            BasisKind::Omega(_) => c.regular_boundary(),
            BasisKind::Pi(_) => Ok(c.boundary()),
            BasisKind::ThetaCluster(..) => {
                if c.degree() == 0 && c.is_zero() {
                    Ok(Chain::zero(0))
                } else {
                    c.cluster_differential()
                }
            }
            BasisKind::ThetaTail(_) => c.tail_differential(),
            BasisKind::ThetaHead(_) => c.head_differential(),
        }
    }
}

/// The membership matrix of a kind at degree n: columns are the constrained
/// allowed n-paths, rows are the non-allowed faces that actually occur.
pub struct MembershipMatrix {
    pub ambient: AllowedBasis,
    pub obstruction_rows: Vec<ElemPath>,
    pub matrix: IntMatrix,
}

pub fn membership_matrix(g: &Digraph, kind: BasisKind, n: usize) -> MembershipMatrix {
    let ambient = allowed_paths(g, n, kind.constraint());
    let mut row_index: BTreeMap<ElemPath, usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for (j, p) in ambient.paths().iter().enumerate() {
        for (face, sign) in kind.faces(p) {
            if face.is_allowed(g) {
                continue;
            }
            let next = row_index.len();
            let idx = *row_index.entry(face).or_insert(next);
            entries.push((idx, j, sign));
        }
    }
    let mut obstruction_rows = vec![None; row_index.len()];
    for (p, i) in row_index {
        obstruction_rows[i] = Some(p);
    }
    let obstruction_rows: Vec<ElemPath> = obstruction_rows.into_iter().flatten().collect();
    let mut matrix = IntMatrix::zero(obstruction_rows.len(), ambient.rank());
    for (i, j, sign) in entries {
        matrix[(i, j)] += BigInt::from(sign);
    }
    MembershipMatrix { ambient, obstruction_rows, matrix }
}

/// Signed incidence of the allowed faces only: the matrix of the kind's
/// differential from the degree-n ambient basis into the degree-(n-1)
/// ambient basis. Entries for non-allowed faces are omitted (callers that
/// care about those use [`membership_matrix`]).
pub fn allowed_face_matrix(g: &Digraph, kind: BasisKind, n: usize) -> IntMatrix {
    let source = allowed_paths(g, n, kind.constraint());
    let target_degree = n.saturating_sub(1);
    let target = allowed_paths(g, target_degree, kind.constraint());
    let mut m = IntMatrix::zero(target.rank(), source.rank());
    if n == 0 {
        return m;
    }
    for (j, p) in source.paths().iter().enumerate() {
        for (face, sign) in kind.faces(p) {
            if let Some(i) = target.position(&face) {
                m[(i, j)] += BigInt::from(sign);
            }
        }
    }
    m
}

/// An ordered generating set of a chain submodule, as an integer lattice in
/// ambient coordinates. Generators are linearly independent and span a
/// saturated sublattice; both facts are certified at construction time.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    pub kind: BasisKind,
    pub ambient: AllowedBasis,
    /// ambient.rank() x rank() integer matrix, one column per generator.
    pub coords: IntMatrix,
    pub generators: Vec<Chain>,
}

impl SubspaceBasis {
    pub fn rank(&self) -> usize {
        self.coords.cols()
    }

    pub fn contains(&self, c: &Chain) -> bool {
        match self.ambient.vectorize(c) {
            Some(v) => crate::linalg::lattice_contains(&self.coords, &v),
            None => false,
        }
    }

    /// Canonical Hermite form of the generated lattice, for equality tests.
    pub fn canonical_lattice(&self) -> IntMatrix {
        lattice_canonical(&self.coords)
    }

    /// The generators re-expressed in the unrestricted ambient basis of the
    /// same degree, for comparisons across constraints.
    pub fn in_ambient_coords(&self, g: &Digraph) -> IntMatrix {
        let ambient = allowed_paths(g, self.ambient.degree, PathConstraint::Unrestricted);
        let cols: Vec<Vec<BigInt>> = self
            .generators
            .iter()
            .map(|gen| ambient.vectorize(gen).expect("constrained paths are ambient paths"))
            .collect();
        IntMatrix::from_columns(ambient.rank(), cols)
    }

    fn from_coords(kind: BasisKind, ambient: AllowedBasis, coords: IntMatrix) -> SubspaceBasis {
        let generators =
            (0..coords.cols()).map(|j| ambient.chain_from_coords(&coords.column(j))).collect();
        SubspaceBasis { kind, ambient, coords, generators }
    }
}

/// Computes the submodule of the given kind at degree n as the integer
/// kernel of its membership matrix, and certifies saturation (all Smith
/// invariant factors of the coordinate matrix equal one).
pub fn subspace_basis(g: &Digraph, kind: BasisKind, n: usize) -> SubspaceBasis {
    let mm = membership_matrix(g, kind, n);
    let coords = integer_kernel(&mm.matrix);
    let ok = snf_invariant_factors(&coords).iter().all(|d| d.is_one());
    record_saturation_check(ok);
    assert!(ok, "kernel basis is not saturated; this is a bug");
    SubspaceBasis::from_coords(kind, mm.ambient, coords)
}

pub fn omega_basis(g: &Digraph, n: usize) -> SubspaceBasis {
    subspace_basis(g, BasisKind::Omega(PathConstraint::Unrestricted), n)
}

pub fn pi_basis(g: &Digraph, n: usize) -> SubspaceBasis {
    subspace_basis(g, BasisKind::Pi(PathConstraint::Unrestricted), n)
}

pub fn theta_cluster_basis(g: &Digraph, a: Vertex, b: Vertex, n: usize) -> SubspaceBasis {
    subspace_basis(g, BasisKind::ThetaCluster(a, b), n)
}

pub fn theta_tail_basis(g: &Digraph, a: Vertex, n: usize) -> SubspaceBasis {
    subspace_basis(g, BasisKind::ThetaTail(a), n)
}

pub fn theta_head_basis(g: &Digraph, b: Vertex, n: usize) -> SubspaceBasis {
    subspace_basis(g, BasisKind::ThetaHead(b), n)
}

/// Face-wise membership test: an allowed chain lies in the primitive
/// submodule iff every one of its unsigned face sums is again allowed.
/// Serves as an independent oracle for [`pi_basis`] membership.
pub fn pi_membership_by_faces(g: &Digraph, w: &Chain) -> Result<bool, ChainError> {
    if !w.is_allowed(g) {
        return Err(ChainError::NotAllowedChain);
    }
    if w.degree() == 0 {
        return Ok(true);
    }
    for m in 0..=w.degree() {
        let face = w.face_sum(m)?;
        if !face.is_allowed(g) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How to grade a basis by endpoint data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointGrouping {
    ByEndpoints,
    ByTail,
    ByHead,
}

impl EndpointGrouping {
    fn key(&self, p: &ElemPath) -> (Vertex, Vertex) {
        match self {
            EndpointGrouping::ByEndpoints => (p.tail(), p.head()),
            EndpointGrouping::ByTail => (p.tail(), Vertex::MAX),
            EndpointGrouping::ByHead => (Vertex::MAX, p.head()),
        }
    }
}

/// Splits an Omega or Pi basis into its endpoint-graded pieces by
/// intersecting the lattice with each coordinate block. The pieces form a
/// direct sum, so their ranks add up to the rank of the whole; callers
/// cross-check that equality rather than trusting it.
pub fn split_basis_by_endpoints(
    basis: &SubspaceBasis,
    grouping: EndpointGrouping,
) -> BTreeMap<(Vertex, Vertex), SubspaceBasis> {
    assert!(
        matches!(basis.kind, BasisKind::Omega(_) | BasisKind::Pi(_)),
        "endpoint splitting applies to the Omega and Pi bases"
    );
    let keys: Vec<(Vertex, Vertex)> =
        basis.ambient.paths().iter().map(|p| grouping.key(p)).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();

    let mut out = BTreeMap::new();
    for key in distinct {
        // Solutions (in generator coordinates) whose ambient coordinates
        // vanish outside this endpoint block.
        let outside: Vec<usize> = (0..keys.len()).filter(|&i| keys[i] != key).collect();
        let mut restricted = IntMatrix::zero(outside.len(), basis.rank());
        for (r, &i) in outside.iter().enumerate() {
            for j in 0..basis.rank() {
                restricted[(r, j)] = basis.coords[(i, j)].clone();
            }
        }
        let combo = integer_kernel(&restricted);
        let piece_coords = basis.coords.mul(&combo);
        let piece = SubspaceBasis::from_coords(basis.kind, basis.ambient.clone(), piece_coords);
        out.insert(key, piece);
    }
    out
}
