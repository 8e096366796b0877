//! Chain complexes assembled from subspace bases, homology groups with
//! torsion, reduced homology, the endpoint-stripping projections, and the
//! induced maps of digraph maps.
//!
//! The integer pipeline is primary: per-degree bases are saturated kernel
//! lattices, boundary matrices are solved exactly in those bases, and each
//! homology group is read off a Smith normal form of the boundary restricted
//! to kernel coordinates. Rational coefficients reuse the integer Betti
//! numbers (saturated lattices tensor to rational kernels of the same rank);
//! prime-field coefficients run the same construction with mod-p kernels and
//! ranks throughout.

use crate::chains::{Augmented, Chain, ChainError, ElemPath};
use crate::digraph::{Digraph, DigraphMap, Vertex};
use crate::linalg::{
    integer_kernel, integer_solve_many, snf, FpMatrix, IntMatrix, SmithDecomposition,
};
use crate::spaces::{
    membership_matrix, subspace_basis, BasisKind, PathConstraint, SubspaceBasis,
};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("degree {0} outside the computed range 0..={1}")]
    DegreeOutOfRange(usize, usize),
    #[error("reduced homology is only defined for the path and primitive theories")]
    ReducedUnsupported,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("induced maps require asymmetric source and target")]
    NotAsymmetric,
    #[error("induced chain map failed to commute with the differential")]
    ChainMapViolation,
}

/// Which chain theory to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theory {
    /// Path homology: allowed chains with allowed regularized boundary.
    PathGlmy,
    /// Primitive path homology: allowed chains with allowed full boundary.
    Primitive,
    /// Paths with fixed tail and head, closed under interior deletions.
    ClusterPrimitive(Vertex, Vertex),
    /// Paths with a fixed tail.
    TailPrimitive(Vertex),
    /// Paths with a fixed head.
    HeadPrimitive(Vertex),
}

impl Theory {
    pub fn basis_kind(&self) -> BasisKind {
        match *self {
            Theory::PathGlmy => BasisKind::Omega(PathConstraint::Unrestricted),
            Theory::Primitive => BasisKind::Pi(PathConstraint::Unrestricted),
            Theory::ClusterPrimitive(a, b) => BasisKind::ThetaCluster(a, b),
            Theory::TailPrimitive(a) => BasisKind::ThetaTail(a),
            Theory::HeadPrimitive(b) => BasisKind::ThetaHead(b),
        }
    }

    fn supports_reduction(&self) -> bool {
        matches!(self, Theory::PathGlmy | Theory::Primitive)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientRing {
    Integer,
    Rational,
    PrimeField(u64),
}

impl CoefficientRing {
    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientRing::Integer)
    }
}

/// A fully specified homology computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheorySpec {
    pub theory: Theory,
    pub reduced: bool,
    pub coefficients: CoefficientRing,
}

impl TheorySpec {
    pub fn new(theory: Theory) -> TheorySpec {
        TheorySpec { theory, reduced: false, coefficients: CoefficientRing::Integer }
    }

    pub fn reduced(theory: Theory) -> TheorySpec {
        TheorySpec { theory, reduced: true, coefficients: CoefficientRing::Integer }
    }

    pub fn with_coefficients(mut self, coefficients: CoefficientRing) -> TheorySpec {
        self.coefficients = coefficients;
        self
    }

    fn validate(&self) -> Result<(), HomologyError> {
        if self.reduced && !self.theory.supports_reduction() {
            return Err(HomologyError::ReducedUnsupported);
        }
        if let CoefficientRing::PrimeField(p) = self.coefficients {
            if !crate::linalg::FpMatrix::prime_ok(p) {
                return Err(HomologyError::NotPrime(p));
            }
        }
        Ok(())
    }
}

/// One homology group: free rank plus the invariant factors above one.
/// Over a field the torsion list is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Per-degree record consumed by reporting front ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
    /// Rank of the degree-n chain module.
    pub basis_rank: usize,
    /// Rank of the boundary arriving from degree n+1.
    pub boundary_rank: usize,
}

/// A chain complex in explicit bases: one `SubspaceBasis` per degree
/// `0..=n_max+1` and the integer boundary matrices between them, with
/// `D_n . D_{n+1} = 0` asserted at build time.
#[derive(Debug, Clone)]
pub struct ChainComplexRep {
    pub spec: TheorySpec,
    pub n_max: usize,
    pub bases: Vec<SubspaceBasis>,
    /// `d[n]` maps degree n to degree n-1; `d[0]` is the augmentation row
    /// when the complex is reduced and an empty matrix otherwise.
    pub d: Vec<IntMatrix>,
}

impl ChainComplexRep {
    pub fn basis(&self, n: usize) -> &SubspaceBasis {
        &self.bases[n]
    }
}

/// Builds bases for degrees `0..=n_max+1` and the boundary matrices between
/// them by applying the theory's differential to every generator and solving
/// in the one-lower basis.
pub fn build_complex(
    g: &Digraph,
    spec: &TheorySpec,
    n_max: usize,
) -> Result<ChainComplexRep, HomologyError> {
    spec.validate()?;
    let kind = spec.theory.basis_kind();
    let bases: Vec<SubspaceBasis> =
        (0..=n_max + 1).map(|n| subspace_basis(g, kind, n)).collect();
    let mut d = Vec::with_capacity(n_max + 2);
    // Degree 0 boundary: empty, or the augmentation row when reduced.
    let rank0 = bases[0].rank();
    if spec.reduced {
        let mut row = IntMatrix::zero(1, rank0);
        for (j, gen) in bases[0].generators.iter().enumerate() {
            row[(0, j)] = gen.augmentation().expect("degree 0 generator");
        }
        d.push(row);
    } else {
        d.push(IntMatrix::zero(0, rank0));
    }
    for n in 1..=n_max + 1 {
        let images: Vec<Vec<BigInt>> = bases[n]
            .generators
            .iter()
            .map(|gen| {
                let dg = kind.differential(gen).expect("generator respects its constraint");
                bases[n - 1]
                    .ambient
                    .vectorize(&dg)
                    .expect("differential of a generator must stay allowed")
            })
            .collect();
        let solved = integer_solve_many(&bases[n - 1].coords, &images);
        let cols: Vec<Vec<BigInt>> = solved
            .into_iter()
            .map(|x| x.expect("differential of a generator must lie in the lower basis"))
            .collect();
        d.push(IntMatrix::from_columns(bases[n - 1].rank(), cols));
    }
    for n in 0..=n_max {
        assert!(
            d[n].mul(&d[n + 1]).is_zero(),
            "boundary composition must vanish (degree {n})"
        );
    }
    Ok(ChainComplexRep { spec: *spec, n_max, bases, d })
}

/// Homology of the represented complex at degree n over the integers:
/// kernel coordinates of `D_n`, then Smith invariant factors of `D_{n+1}`
/// restricted to them.
pub fn homology(rep: &ChainComplexRep, n: usize) -> Result<HomologyGroup, HomologyError> {
    if n > rep.n_max {
        return Err(HomologyError::DegreeOutOfRange(n, rep.n_max));
    }
    let (group, _) = homology_with_smith(rep, n);
    Ok(group)
}

pub(crate) fn homology_with_smith(
    rep: &ChainComplexRep,
    n: usize,
) -> (HomologyGroup, Option<(IntMatrix, SmithDecomposition)>) {
    let kernel = integer_kernel(&rep.d[n]);
    let k = kernel.cols();
    if k == 0 {
        return (HomologyGroup { degree: n, betti: 0, torsion: vec![] }, None);
    }
    let incoming = &rep.d[n + 1];
    let image_cols: Vec<Vec<BigInt>> = (0..incoming.cols()).map(|j| incoming.column(j)).collect();
    let in_kernel = integer_solve_many(&kernel, &image_cols);
    let cols: Vec<Vec<BigInt>> = in_kernel
        .into_iter()
        .map(|x| x.expect("boundary image lies in the kernel"))
        .collect();
    let b = IntMatrix::from_columns(k, cols);
    let dec = snf(&b);
    let betti = k - dec.rank();
    let torsion = dec.torsion();
    (HomologyGroup { degree: n, betti, torsion }, Some((kernel, dec)))
}

/// All homology groups for degrees `0..=n_max`, honoring the coefficient
/// ring of the spec.
pub fn homology_all(
    g: &Digraph,
    spec: &TheorySpec,
    n_max: usize,
) -> Result<Vec<HomologyGroup>, HomologyError> {
    Ok(degree_reports(g, spec, n_max)?
        .into_iter()
        .map(|r| HomologyGroup { degree: r.degree, betti: r.betti, torsion: r.torsion })
        .collect())
}

/// Full per-degree reports (Betti, torsion, basis and boundary ranks).
pub fn degree_reports(
    g: &Digraph,
    spec: &TheorySpec,
    n_max: usize,
) -> Result<Vec<DegreeReport>, HomologyError> {
    spec.validate()?;
    match spec.coefficients {
        // Saturated integer kernels are rational kernel bases of the same
        // rank, so the rational Betti numbers equal the integer ones with
        // the torsion forgotten; one pipeline serves both rings.
        CoefficientRing::Integer | CoefficientRing::Rational => {
            let keep_torsion = spec.coefficients == CoefficientRing::Integer;
            let rep = build_complex(g, spec, n_max)?;
            let mut out = Vec::new();
            for n in 0..=n_max {
                let (h, smith) = homology_with_smith(&rep, n);
                let boundary_rank = smith.as_ref().map_or(0, |(_, dec)| dec.rank());
                out.push(DegreeReport {
                    degree: n,
                    betti: h.betti,
                    torsion: if keep_torsion { h.torsion } else { vec![] },
                    basis_rank: rep.bases[n].rank(),
                    boundary_rank,
                });
            }
            Ok(out)
        }
        CoefficientRing::PrimeField(p) => fp_degree_reports(g, spec, n_max, p),
    }
}

// Mod-p pipeline: kernels of the membership matrices over Z/p, boundary
// matrices solved over Z/p, Betti numbers by rank-nullity.
fn fp_degree_reports(
    g: &Digraph,
    spec: &TheorySpec,
    n_max: usize,
    p: u64,
) -> Result<Vec<DegreeReport>, HomologyError> {
    let kind = spec.theory.basis_kind();
    let mut bases: Vec<Vec<Vec<u64>>> = Vec::new();
    let mut ambients = Vec::new();
    for n in 0..=n_max + 1 {
        let mm = membership_matrix(g, kind, n);
        let f = FpMatrix::from_int(&mm.matrix, p);
        bases.push(f.kernel());
        ambients.push(mm.ambient);
    }
    let face_mats: Vec<FpMatrix> = (0..=n_max + 1)
        .map(|n| FpMatrix::from_int(&crate::spaces::allowed_face_matrix(g, kind, n), p))
        .collect();
    // d[n] expressed in the mod-p bases.
    let mut d: Vec<FpMatrix> = Vec::new();
    if spec.reduced {
        let row: Vec<u64> =
            bases[0].iter().map(|v| v.iter().fold(0, |acc, &x| (acc + x) % p)).collect();
        d.push(FpMatrix::from_rows(1, bases[0].len(), vec![row], p));
    } else {
        d.push(FpMatrix::from_rows(0, bases[0].len(), vec![], p));
    }
    for n in 1..=n_max + 1 {
        let lower = FpMatrix::from_cols(ambients[n - 1].rank(), bases[n - 1].clone(), p);
        let mut cols = Vec::new();
        for gen in &bases[n] {
            let image = face_mats[n].apply(gen);
            let x = lower.solve(&image).ok_or(HomologyError::ChainMapViolation)?;
            cols.push(x);
        }
        d.push(FpMatrix::from_cols(bases[n - 1].len(), cols, p));
    }
    let mut out = Vec::new();
    for n in 0..=n_max {
        let rank_n = bases[n].len();
        let nullity = rank_n - d[n].rank();
        let boundary_rank = d[n + 1].rank();
        out.push(DegreeReport {
            degree: n,
            betti: nullity - boundary_rank,
            torsion: vec![],
            basis_rank: rank_n,
            boundary_rank,
        });
    }
    Ok(out)
}

/// Path homology over the integers for degrees `0..=n_max`.
pub fn path_homology(g: &Digraph, n_max: usize) -> Vec<HomologyGroup> {
    homology_all(g, &TheorySpec::new(Theory::PathGlmy), n_max).expect("valid spec")
}

/// Primitive path homology over the integers.
pub fn primitive_homology(g: &Digraph, n_max: usize) -> Vec<HomologyGroup> {
    homology_all(g, &TheorySpec::new(Theory::Primitive), n_max).expect("valid spec")
}

/// Reduced homology: the augmentation row is appended at degree 0.
pub fn reduced_homology(
    g: &Digraph,
    theory: Theory,
    n_max: usize,
) -> Result<Vec<HomologyGroup>, HomologyError> {
    homology_all(g, &TheorySpec::reduced(theory), n_max)
}

/// Strips the fixed endpoints off a cluster chain: degree n >= 2 lands in
/// degree n-2, a degree-1 chain lands in the augmentation slot as its
/// coefficient, degree 0 does not occur for cluster chains.
pub fn cluster_projection(w: &Chain) -> Result<Augmented, ChainError> {
    if w.degree() == 0 {
        return Err(ChainError::DegreeZero);
    }
    let mut endpoints: Option<(Vertex, Vertex)> = None;
    for (p, _) in w.terms() {
        let e = (p.tail(), p.head());
        if *endpoints.get_or_insert(e) != e {
            return Err(ChainError::NotClusterChain);
        }
    }
    if w.degree() == 1 {
        let total: BigInt = w.terms().map(|(_, c)| c.clone()).sum();
        return Ok(Augmented::Scalar(total));
    }
    let mut out = Chain::zero(w.degree() - 2);
    for (p, c) in w.terms() {
        let inner = p.vertices()[1..p.vertices().len() - 1].to_vec();
        out.add_term(ElemPath::new(inner), c.clone());
    }
    Ok(Augmented::Chain(out))
}

/// Strips the fixed tail off a tail chain; degree 0 lands in the
/// augmentation slot.
pub fn tail_projection(w: &Chain) -> Result<Augmented, ChainError> {
    let mut tails = w.terms().map(|(p, _)| p.tail());
    let first = tails.next();
    if let Some(t) = first {
        if !tails.all(|x| x == t) {
            return Err(ChainError::NotTailChain);
        }
    }
    if w.degree() == 0 {
        let total: BigInt = w.terms().map(|(_, c)| c.clone()).sum();
        return Ok(Augmented::Scalar(total));
    }
    let mut out = Chain::zero(w.degree() - 1);
    for (p, c) in w.terms() {
        out.add_term(ElemPath::new(p.vertices()[1..].to_vec()), c.clone());
    }
    Ok(Augmented::Chain(out))
}

/// Strips the fixed head off a head chain; degree 0 lands in the
/// augmentation slot.
pub fn head_projection(w: &Chain) -> Result<Augmented, ChainError> {
    let mut heads = w.terms().map(|(p, _)| p.head());
    let first = heads.next();
    if let Some(h) = first {
        if !heads.all(|x| x == h) {
            return Err(ChainError::NotHeadChain);
        }
    }
    if w.degree() == 0 {
        let total: BigInt = w.terms().map(|(_, c)| c.clone()).sum();
        return Ok(Augmented::Scalar(total));
    }
    let mut out = Chain::zero(w.degree() - 1);
    for (p, c) in w.terms() {
        out.add_term(ElemPath::new(p.vertices()[..p.vertices().len() - 1].to_vec()), c.clone());
    }
    Ok(Augmented::Chain(out))
}

/// One degree of the directed-suspension comparison.
#[derive(Debug, Clone)]
pub struct SuspensionDegree {
    pub degree: usize,
    pub cluster_rank: usize,
    pub primitive_rank: Option<usize>,
    pub cluster_homology: HomologyGroup,
    pub primitive_homology: Option<HomologyGroup>,
    pub reduced_primitive_homology: Option<HomologyGroup>,
}

impl SuspensionDegree {
    pub fn ranks_equal(&self) -> bool {
        self.primitive_rank == Some(self.cluster_rank)
    }

    pub fn homology_matches_plain(&self) -> bool {
        self.primitive_homology.as_ref().is_some_and(|h| {
            h.betti == self.cluster_homology.betti && h.torsion == self.cluster_homology.torsion
        })
    }

    pub fn homology_matches_reduced(&self) -> bool {
        self.reduced_primitive_homology.as_ref().is_some_and(|h| {
            h.betti == self.cluster_homology.betti && h.torsion == self.cluster_homology.torsion
        })
    }
}

/// Compares the cluster theory of the directed suspension against the
/// primitive theory of the base digraph, degree n against degree n-2, both
/// as plain groups and against the reduced groups. Degrees below 2 report
/// only the suspension side.
pub fn suspension_comparison(
    g: &Digraph,
    a: &str,
    b: &str,
    n_max: usize,
) -> Result<Vec<SuspensionDegree>, crate::digraph::DigraphError> {
    let sd = g.directed_suspension(a, b)?;
    let av = sd.vertex(a)?;
    let bv = sd.vertex(b)?;
    let cluster_spec = TheorySpec::new(Theory::ClusterPrimitive(av, bv));
    let cluster_h = homology_all(&sd, &cluster_spec, n_max).expect("valid spec");
    let base_max = n_max.saturating_sub(2);
    let base_h = primitive_homology(g, base_max);
    let base_reduced =
        reduced_homology(g, Theory::Primitive, base_max).expect("reduced primitive is valid");
    let kind = BasisKind::ThetaCluster(av, bv);
    let base_kind = BasisKind::Pi(PathConstraint::Unrestricted);
    let mut out = Vec::new();
    for n in 0..=n_max {
        let cluster_rank = subspace_basis(&sd, kind, n).rank();
        let (primitive_rank, ph, rh) = if n >= 2 {
            (
                Some(subspace_basis(g, base_kind, n - 2).rank()),
                Some(base_h[n - 2].clone()),
                Some(base_reduced[n - 2].clone()),
            )
        } else {
            (None, None, None)
        };
        out.push(SuspensionDegree {
            degree: n,
            cluster_rank,
            primitive_rank,
            cluster_homology: cluster_h[n].clone(),
            primitive_homology: ph,
            reduced_primitive_homology: rh,
        });
    }
    Ok(out)
}

/// The matrix induced on free homology parts by a digraph map between
/// asymmetric digraphs, for the primitive and endpoint-fixed theories.
/// The underlying chain map is verified to commute with the boundaries.
pub fn induced_homology_map(
    f: &DigraphMap,
    theory: Theory,
    n: usize,
) -> Result<IntMatrix, HomologyError> {
    if !f.source.is_asymmetric() || !f.target.is_asymmetric() {
        return Err(HomologyError::NotAsymmetric);
    }
    let target_theory = match theory {
        Theory::PathGlmy => return Err(HomologyError::ReducedUnsupported),
        Theory::Primitive => Theory::Primitive,
        Theory::ClusterPrimitive(a, b) => Theory::ClusterPrimitive(f.apply(a), f.apply(b)),
        Theory::TailPrimitive(a) => Theory::TailPrimitive(f.apply(a)),
        Theory::HeadPrimitive(b) => Theory::HeadPrimitive(f.apply(b)),
    };
    let src = build_complex(&f.source, &TheorySpec::new(theory), n)?;
    let dst = build_complex(&f.target, &TheorySpec::new(target_theory), n)?;

    let map_at = |deg: usize| -> Result<IntMatrix, HomologyError> {
        let images: Vec<Vec<BigInt>> = src.bases[deg]
            .generators
            .iter()
            .map(|gen| {
                let image = gen.induced_map(f);
                dst.bases[deg].ambient.vectorize(&image).ok_or(HomologyError::ChainMapViolation)
            })
            .collect::<Result<_, _>>()?;
        let solved = integer_solve_many(&dst.bases[deg].coords, &images);
        let cols: Vec<Vec<BigInt>> = solved
            .into_iter()
            .map(|x| x.ok_or(HomologyError::ChainMapViolation))
            .collect::<Result<_, _>>()?;
        Ok(IntMatrix::from_columns(dst.bases[deg].rank(), cols))
    };

    let m_n = map_at(n)?;
    if n >= 1 {
        let m_prev = map_at(n - 1)?;
        if dst.d[n].mul(&m_n) != m_prev.mul(&src.d[n]) {
            return Err(HomologyError::ChainMapViolation);
        }
    }

    // Free homology coordinates on either side come from the Smith
    // transform of the incoming boundary in kernel coordinates: with
    // U B V = S of rank r, the rows of U past r read off the free quotient,
    // and the columns of U^-1 past r are kernel vectors representing the
    // free generators.
    let (src_h, src_smith) = homology_with_smith(&src, n);
    let (dst_h, dst_smith) = homology_with_smith(&dst, n);
    let mut out = IntMatrix::zero(dst_h.betti, src_h.betti);
    if src_h.betti == 0 || dst_h.betti == 0 {
        return Ok(out);
    }
    let (src_kernel, src_dec) = src_smith.expect("nonzero homology has a kernel");
    let (dst_kernel, dst_dec) = dst_smith.expect("nonzero homology has a kernel");
    let src_u_inv = invert_unimodular(&src_dec.u);
    let (src_rank, dst_rank) = (src_dec.rank(), dst_dec.rank());
    for j in 0..src_h.betti {
        // Representative cycle of the j-th free source generator.
        let gen_kernel_coords = src_u_inv.column(src_rank + j);
        let cycle = src_kernel.mul_vec(&gen_kernel_coords);
        let image = m_n.mul_vec(&cycle);
        let z = integer_solve_many(&dst_kernel, std::slice::from_ref(&image))
            .pop()
            .unwrap()
            .ok_or(HomologyError::ChainMapViolation)?;
        let uz = dst_dec.u.mul_vec(&z);
        for i in 0..dst_h.betti {
            out[(i, j)] = uz[dst_rank + i].clone();
        }
    }
    Ok(out)
}

fn invert_unimodular(u: &IntMatrix) -> IntMatrix {
    let n = u.rows();
    assert_eq!(n, u.cols());
    let ident: Vec<Vec<BigInt>> = (0..n).map(|j| IntMatrix::identity(n).column(j)).collect();
    let solved = integer_solve_many(u, &ident);
    let cols = solved.into_iter().map(|x| x.expect("unimodular matrices invert over Z")).collect();
    IntMatrix::from_columns(n, cols)
}

/// Betti numbers only, as a plain vector, for compact assertions.
pub fn betti_vector(g: &Digraph, spec: &TheorySpec, n_max: usize) -> Vec<usize> {
    homology_all(g, spec, n_max).expect("valid spec").into_iter().map(|h| h.betti).collect()
}
