//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every expected value is exact (integer arithmetic throughout). Fixture
//! digraphs are transcribed inline; randomized criteria run on fixed seeds
//! and demand zero failures. Criteria 4, 5 and 9 encode expectations that
//! contradict the definitional computation (both the Smith pipeline and the
//! independent rational oracle agree on different values, and the relevant
//! kernels can be checked by hand); those tests are kept faithful to their
//! stated expectations and fail honestly rather than being weakened.

use num_bigint::BigInt;
use pathhom::chains::Chain;
use pathhom::crosscheck::{
    self, check_asymmetric_coincidence, check_chain_maps_into_asymmetric, check_collapse_witness,
    check_cones_suspensions, check_differentials, check_face_oracle, check_inversion_cluster,
    check_inversion_primitive, check_inversion_tail_head, check_locality,
    check_omega_decomposition, check_pi_decomposition, check_projection_diagrams,
    check_rational_oracle, oracle_betti, CheckResult, SuiteConfig, DEFAULT_SEED,
};
use pathhom::digraph::Digraph;
use pathhom::homology::{
    betti_vector, homology_all, suspension_comparison, Theory, TheorySpec,
};
use pathhom::linalg::{counter_snapshot, lattice_eq};
use pathhom::spaces::{
    allowed_paths, omega_basis, pi_basis, theta_cluster_basis, theta_tail_basis, PathConstraint,
};

fn cfg(instances: usize, max_vertices: usize, max_dim: usize) -> SuiteConfig {
    SuiteConfig { seed: DEFAULT_SEED, instances, max_vertices, max_dim }
}

fn assert_check(criterion: &str, result: &CheckResult) {
    assert!(
        result.passed(),
        "criterion {criterion}: FAIL: {} ({} failures; first:\n{})",
        result.name,
        result.failures.len(),
        result.failures.first().map(String::as_str).unwrap_or("")
    );
    println!("criterion {criterion}: PASS: {} over {} instances", result.name, result.instances);
}

fn complete_pair() -> Digraph {
    Digraph::from_arcs(2, &[(0, 1), (1, 0)])
}

/// Nine-vertex planar digraph with sixteen arrows; all routes from 0 to 8.
fn planar_nine() -> Digraph {
    Digraph::from_arcs(
        9,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 8),
            (1, 5),
            (1, 7),
            (2, 5),
            (2, 8),
            (3, 6),
            (3, 8),
            (4, 6),
            (4, 7),
            (5, 8),
            (6, 8),
            (7, 8),
        ],
    )
}

fn three_cycle() -> Digraph {
    Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)])
}

#[test]
fn criterion_01_complete_pair_primitive_and_path() {
    let g = complete_pair();
    let primitive = betti_vector(&g, &TheorySpec::new(Theory::Primitive), 4);
    assert_eq!(primitive, vec![1, 1, 0, 0, 0], "primitive Betti numbers");
    let path = betti_vector(&g, &TheorySpec::new(Theory::PathGlmy), 4);
    assert_eq!(path, vec![1, 0, 0, 0, 0], "path Betti numbers");
    let pi_ranks: Vec<usize> = (0..=3).map(|n| pi_basis(&g, n).rank()).collect();
    assert_eq!(pi_ranks, vec![2, 2, 0, 0], "primitive submodule ranks");
    assert_eq!(omega_basis(&g, 2).rank(), 2, "path submodule rank at degree 2");
    println!("criterion 01: PASS: complete pair separates the two theories");
}

#[test]
fn criterion_02_square_cluster_class() {
    let sq = Digraph::n_cube(2);
    let spec = TheorySpec::new(Theory::ClusterPrimitive(0, 3));
    assert_eq!(betti_vector(&sq, &spec, 5), vec![0, 0, 1, 0, 0, 0]);
    let theta = theta_cluster_basis(&sq, 0, 3, 2);
    assert_eq!(theta.rank(), 1);
    let expected = Chain::from_terms(&[(&[0, 1, 3], 1), (&[0, 2, 3], -1)]);
    let gen = &theta.generators[0];
    assert!(
        *gen == expected || *gen == expected.scale(&BigInt::from(-1)),
        "generator must be the signed difference of the two square routes, got {gen:?}"
    );
    println!("criterion 02: PASS: square cluster class at degree 2");
}

#[test]
fn criterion_03_cube_cluster_class() {
    let cube = Digraph::n_cube(3);
    let spec = TheorySpec::new(Theory::ClusterPrimitive(0, 7));
    assert_eq!(betti_vector(&cube, &spec, 5), vec![0, 0, 0, 1, 0, 0]);
    let theta = theta_cluster_basis(&cube, 0, 7, 3);
    assert_eq!(theta.rank(), 1);
    let expected = Chain::from_terms(&[
        (&[0, 1, 3, 7], 1),
        (&[0, 2, 3, 7], -1),
        (&[0, 1, 5, 7], -1),
        (&[0, 4, 5, 7], 1),
        (&[0, 4, 6, 7], -1),
        (&[0, 2, 6, 7], 1),
    ]);
    let gen = &theta.generators[0];
    assert!(
        *gen == expected || *gen == expected.scale(&BigInt::from(-1)),
        "generator must be the alternating sum of the six cube routes, got {gen:?}"
    );
    println!("criterion 03: PASS: cube cluster class at degree 3");
}

#[test]
fn criterion_04_planar_nine_cluster() {
    let g = planar_nine();
    // Guard the transcription: the route modules from 0 to 8 have ranks
    // (0, 1, 2, 6, 0, 0) and the degree-3 basis is exactly the six routes.
    let ranks: Vec<usize> =
        (0..=5).map(|n| allowed_paths(&g, n, PathConstraint::Cluster(0, 8)).rank()).collect();
    assert_eq!(ranks, vec![0, 1, 2, 6, 0, 0], "route-module ranks from 0 to 8");
    let degree3: Vec<Vec<u32>> = allowed_paths(&g, 3, PathConstraint::Cluster(0, 8))
        .paths()
        .iter()
        .map(|p| p.vertices().to_vec())
        .collect();
    assert_eq!(
        degree3,
        vec![
            vec![0, 1, 5, 8],
            vec![0, 1, 7, 8],
            vec![0, 2, 5, 8],
            vec![0, 3, 6, 8],
            vec![0, 4, 6, 8],
            vec![0, 4, 7, 8],
        ],
        "degree-3 route basis"
    );
    assert_eq!(
        betti_vector(&g, &TheorySpec::new(Theory::PathGlmy), 3)[2],
        0,
        "path homology vanishes at degree 2"
    );

    let betti = betti_vector(&g, &TheorySpec::new(Theory::ClusterPrimitive(0, 8)), 5);
    assert_eq!(
        oracle_betti(&g, Theory::ClusterPrimitive(0, 8), 2),
        betti[2],
        "rational oracle agrees with the smith pipeline"
    );
    for n in [0usize, 1, 3, 4, 5] {
        assert_eq!(betti[n], 0, "degree {n}");
    }
    // Expected value encoded by this criterion. The definitional
    // computation gives 0: the alternating sum of the six degree-3 routes
    // has interior faces e_{028} - e_{038}, so it lies in the degree-3
    // submodule and bounds the would-be degree-2 class. Two independent
    // pipelines (Smith and rational null-space) agree on 0.
    assert_eq!(
        betti[2], 1,
        "degree-2 cluster Betti number: computed {} by both pipelines, expected 1 \
         by this fixture's stated value, which contradicts the definitional computation",
        betti[2]
    );
    println!("criterion 04: PASS: planar nine-vertex cluster homology");
}

#[test]
fn criterion_05_suspension_of_cycle_and_pruned_variant() {
    let sd = three_cycle().directed_suspension("a", "b").unwrap();
    let a = sd.vertex("a").unwrap();
    let b = sd.vertex("b").unwrap();
    let betti = betti_vector(&sd, &TheorySpec::new(Theory::ClusterPrimitive(a, b)), 6);
    assert_eq!(
        oracle_betti(&sd, Theory::ClusterPrimitive(a, b), 2),
        betti[2],
        "rational oracle agrees with the smith pipeline"
    );
    assert_eq!(betti[3], 1, "degree 3 carries the cycle class");
    for n in [0usize, 1, 4, 5, 6] {
        assert_eq!(betti[n], 0, "degree {n}");
    }
    // The pruned variant: drop the arrows a->2 and 2->b.
    let h = Digraph::new(
        &["0", "1", "2", "a", "b"],
        &[
            ("0", "1"),
            ("1", "2"),
            ("2", "0"),
            ("a", "0"),
            ("a", "1"),
            ("0", "b"),
            ("1", "b"),
        ],
    )
    .unwrap();
    let ha = h.vertex("a").unwrap();
    let hb = h.vertex("b").unwrap();
    let h_betti = betti_vector(&h, &TheorySpec::new(Theory::ClusterPrimitive(ha, hb)), 8);
    for n in (1..=8).filter(|&n| n != 2) {
        assert_eq!(h_betti[n], 0, "pruned variant degree {n}");
    }
    // Expected values encoded by this criterion. Definitionally both
    // degree-2 groups are trivial: with no arrow from a to b the degree-2
    // chains must have coefficient sum zero, and the degree-3 route
    // differences exhaust that sublattice. Both pipelines agree on 0.
    assert_eq!(
        betti[2], 1,
        "suspension degree-2 Betti: computed {} by both pipelines, expected 1 by this \
         fixture's stated value, which contradicts the definitional computation",
        betti[2]
    );
    assert_eq!(
        h_betti[2], 1,
        "pruned variant degree-2 Betti: computed {} by both pipelines, expected 1 by this \
         fixture's stated value, which contradicts the definitional computation",
        h_betti[2]
    );
    println!("criterion 05: PASS: directed suspension of the cycle");
}

#[test]
fn criterion_06_tail_homology_fixtures() {
    // (i) fan with two routes to a common sink plus a stray ray.
    let g1 = Digraph::from_arcs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4)]);
    let spec = TheorySpec::new(Theory::TailPrimitive(0));
    assert_eq!(betti_vector(&g1, &spec, 4), vec![0, 1, 0, 0, 0], "fixture (i)");

    // (ii) two stacked squares sharing their diagonal routes.
    let g2 = Digraph::from_arcs(5, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    assert_eq!(betti_vector(&g2, &spec, 4), vec![0, 0, 0, 0, 0], "fixture (ii)");

    // (iii) square plus a chord through vertex 3.
    let g3 = Digraph::from_arcs(5, &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 4), (3, 4)]);
    assert_eq!(betti_vector(&g3, &spec, 4), vec![0, 0, 0, 0, 0], "fixture (iii)");
    let theta2 = theta_tail_basis(&g3, 0, 2);
    assert_eq!(theta2.rank(), 2, "fixture (iii) degree-2 submodule");
    assert!(theta2.contains(&Chain::from_terms(&[(&[0, 1, 3], 1)])));
    assert!(theta2.contains(&Chain::from_terms(&[(&[0, 2, 4], 1), (&[0, 3, 4], -1)])));
    assert_eq!(theta_tail_basis(&g3, 0, 3).rank(), 0, "fixture (iii) degree-3 submodule");
    println!("criterion 06: PASS: tail homology fixtures");
}

#[test]
fn criterion_07_asymmetric_coincidence() {
    let result = check_asymmetric_coincidence(cfg(100, 6, 4));
    assert_check("07", &result);
}

#[test]
fn criterion_08_reversal_dualities() {
    let c = cfg(100, 6, 4);
    assert_check("08", &check_inversion_primitive(c));
    assert_check("08", &check_inversion_cluster(c));
    assert_check("08", &check_inversion_tail_head(c));
}

#[test]
fn criterion_09_suspension_shift() {
    // Stated expectation: cluster homology of the directed suspension at
    // degree n equals the primitive homology of the base at degree n-2 for
    // 2 <= n <= 5, with matching submodule ranks per degree. The shift is
    // definitionally exact from degree 3 up; at degree 2 the suspension
    // complex sees the augmentation kernel (rank one short, homology equal
    // to the reduced group), so the literal degree-2 comparison fails on
    // any base digraph with nonzero degree-0 homology.
    let instances = crosscheck::RandomDigraphSpec::new(DEFAULT_SEED ^ 0x5d5d, 5, false).take(50);
    let mut failures = Vec::new();
    for g in &instances {
        let rows = suspension_comparison(g, "a", "b", 5).unwrap();
        for row in rows.iter().filter(|r| r.degree >= 2) {
            if !row.ranks_equal() {
                failures.push(format!(
                    "degree {}: cluster rank {} vs primitive rank {:?}\n{}",
                    row.degree,
                    row.cluster_rank,
                    row.primitive_rank,
                    g.to_text()
                ));
            }
            if !row.homology_matches_plain() {
                failures.push(format!(
                    "degree {}: cluster {:?} vs primitive {:?}\n{}",
                    row.degree,
                    row.cluster_homology,
                    row.primitive_homology,
                    g.to_text()
                ));
            }
        }
    }
    let beyond_boundary = failures.iter().filter(|f| !f.starts_with("degree 2")).count();
    assert!(
        failures.is_empty(),
        "criterion 09: FAIL: {} comparisons diverged, {} of them beyond the boundary degree 2 \
         (the shift holds from degree 3 up, and at degree 2 against the reduced groups); first:\n{}",
        failures.len(),
        beyond_boundary,
        failures[0]
    );
    println!("criterion 09: PASS: suspension shift over 50 digraphs");
}

#[test]
fn criterion_10_cone_and_suspension_identities() {
    let result = check_cones_suspensions(cfg(50, 5, 4));
    assert_check("10", &result);
}

#[test]
fn criterion_11_decompositions_and_locality() {
    let c = cfg(100, 6, 3);
    assert_check("11", &check_omega_decomposition(c));
    assert_check("11", &check_pi_decomposition(c));
    assert_check("11", &check_locality(c));
}

#[test]
fn criterion_12_differential_algebra() {
    let c = cfg(100, 6, 4);
    assert_check("12", &check_differentials(c, 1000));
    assert_check("12", &check_projection_diagrams(c, 300));
    assert_check("12", &check_chain_maps_into_asymmetric(c));
    assert_check("12", &check_collapse_witness());
}

#[test]
fn criterion_13_oracle_equivalence() {
    let c = cfg(200, 6, 4);
    assert_check("13", &check_rational_oracle(c));
    assert_check("13", &check_face_oracle(c));
}

#[test]
fn criterion_14_linear_algebra_certificates() {
    // Smith decompositions self-verify (multiply-back) and kernel bases
    // self-certify saturation on every call, with global counters; this
    // test drives a representative workload through both pipelines and
    // then asserts that not a single certificate has failed process-wide.
    let before = counter_snapshot();
    let g = complete_pair();
    let _ = homology_all(&g, &TheorySpec::new(Theory::Primitive), 4).unwrap();
    let sq = Digraph::n_cube(2);
    let _ = homology_all(&sq, &TheorySpec::new(Theory::ClusterPrimitive(0, 3)), 5).unwrap();
    let cube = Digraph::n_cube(3);
    let _ = homology_all(&cube, &TheorySpec::new(Theory::ClusterPrimitive(0, 7)), 5).unwrap();
    let nine = planar_nine();
    let _ = homology_all(&nine, &TheorySpec::new(Theory::ClusterPrimitive(0, 8)), 5).unwrap();
    for g in crosscheck::RandomDigraphSpec::new(DEFAULT_SEED, 6, false).take(25) {
        let _ = homology_all(&g, &TheorySpec::new(Theory::Primitive), 4).unwrap();
        let _ = homology_all(&g, &TheorySpec::new(Theory::PathGlmy), 4).unwrap();
        for n in 0..=3 {
            let o = omega_basis(&g, n);
            let p = pi_basis(&g, n);
            let _ = lattice_eq(&o.coords, &p.coords);
        }
    }
    let after = counter_snapshot();
    assert!(after.snf_calls > before.snf_calls, "smith decompositions must have run");
    assert!(after.saturation_checks > before.saturation_checks, "saturation checks must have run");
    assert_eq!(after.snf_failures, 0, "no smith certificate may ever fail");
    assert_eq!(after.saturation_failures, 0, "no saturation certificate may ever fail");
    println!(
        "criterion 14: PASS: {} smith certificates and {} saturation checks, zero failures",
        after.snf_calls, after.saturation_checks
    );
}
