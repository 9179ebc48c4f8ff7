//! Acceptance suite: each test drives one exit criterion end to end at desk
//! scale, pitting the primary routines against their independent oracles,
//! and prints a single verdict line (visible with `--nocapture`).

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use vancert_core::arith::{is_integer, GaussRat, Int, IntVec, Rat};
use vancert_core::bivariate::torus_zero_count;
use vancert_core::laurent::{LaurentPoly, PolyData};
use vancert_core::nondegeneracy::{
    milnor_number_plane, CheckStatus, LaurentSystem, OverallVerdict,
};
use vancert_core::nonresonance::{check_nonresonance, m_gamma, Convention, ParameterVector};
use vancert_core::polytope::{minkowski_sum, LatticePolytope};
use vancert_core::spectrum::{eigenvalue_set, NewtonPolyhedron};
use vancert_core::theorems::{
    euler_complement, predict, verify_morse_count, PredictOptions, PredictedDimension, Theorem,
};
use vancert_core::volume::{mixed_volume_multi, mixed_volume_oracle, normalized_volume};

fn iv(v: &[i64]) -> IntVec {
    IntVec::from_i64(v)
}

fn q(num: i64, den: i64) -> GaussRat {
    GaussRat::from_rat(Rat::new(Int::from(num), Int::from(den)))
}

fn lp(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(n, terms.iter().map(|(v, a)| (iv(v), GaussRat::from_int(*a))))
}

fn rand_rat(rng: &mut StdRng) -> GaussRat {
    let num = loop {
        let n = rng.gen_range(-9i64..=9);
        if n != 0 {
            break n;
        }
    };
    q(num, rng.gen_range(1i64..=4))
}

fn rand_points(rng: &mut StdRng, dim: usize, count: usize, lo: i64, hi: i64) -> Vec<IntVec> {
    (0..count)
        .map(|_| {
            let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(lo..=hi)).collect();
            iv(&coords)
        })
        .collect()
}

fn rand_polytope(rng: &mut StdRng, dim: usize, max_points: usize) -> LatticePolytope {
    let count = rng.gen_range(1..=max_points);
    LatticePolytope::hull(&rand_points(rng, dim, count, -5, 5)).unwrap()
}

/// A random vector of `parts` positive integers summing to `total`.
fn rand_composition(rng: &mut StdRng, total: usize, parts: usize) -> Vec<usize> {
    let mut mult = vec![1usize; parts];
    for _ in 0..(total - parts) {
        let at = rng.gen_range(0..parts);
        mult[at] += 1;
    }
    mult
}

/// A random exact Laurent polynomial with `count` distinct support points.
fn rand_poly(rng: &mut StdRng, dim: usize, count: usize, lo: i64, hi: i64) -> LaurentPoly {
    let mut support = std::collections::BTreeSet::new();
    while support.len() < count {
        let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(lo..=hi)).collect();
        support.insert(coords);
    }
    LaurentPoly::from_terms(
        dim,
        support.into_iter().map(|coords| (iv(&coords), rand_rat(rng))),
    )
}

/// `Π (x − r)` over the given roots, as a one-variable polynomial.
fn product_of_linear(roots: &[GaussRat]) -> LaurentPoly {
    let mut acc = LaurentPoly::constant(1, GaussRat::from_int(1));
    for r in roots {
        let factor = LaurentPoly::from_terms(
            1,
            [(iv(&[1]), GaussRat::from_int(1)), (iv(&[0]), -r)],
        );
        acc = acc.mul(&factor);
    }
    acc
}

fn signed_by_dim(n0: usize, value: Int) -> Int {
    if n0 % 2 == 0 {
        value
    } else {
        -value
    }
}

#[test]
fn criterion_1_mixed_volume_routes_agree() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xC1);
    let total = 200;
    for case in 0..total {
        let dim = rng.gen_range(1..=3usize);
        let parts_count = rng.gen_range(1..=dim);
        let max_points = if dim == 3 { 6 } else { 8 };
        let polys: Vec<LatticePolytope> =
            (0..parts_count).map(|_| rand_polytope(&mut rng, dim, max_points)).collect();
        let refs: Vec<&LatticePolytope> = polys.iter().collect();
        let mult = rand_composition(&mut rng, dim, parts_count);
        let a = mixed_volume_multi(&refs, &mult);
        let b = mixed_volume_oracle(&refs, &mult);
        assert_eq!(a, b, "case {case}: polarization {a} vs interpolation {b}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "oracle comparison took {elapsed:?}");
    println!(
        "acceptance 1: PASS - {total}/{total} mixed volumes agree across both routes in {elapsed:?}"
    );
}

#[test]
fn criterion_2_diagonal_and_permutation_invariance() {
    let mut rng = StdRng::seed_from_u64(0xC2);
    let total = 100;
    for case in 0..total {
        let dim = rng.gen_range(1..=3usize);
        let p = rand_polytope(&mut rng, dim, 8);
        assert_eq!(
            mixed_volume_multi(&[&p], &[dim]),
            normalized_volume(&p),
            "case {case}: diagonal mixed volume differs from the volume"
        );
        if dim >= 2 {
            let other = rand_polytope(&mut rng, dim, 8);
            let mult = rand_composition(&mut rng, dim, 2);
            assert_eq!(
                mixed_volume_multi(&[&p, &other], &mult),
                mixed_volume_multi(&[&other, &p], &[mult[1], mult[0]]),
                "case {case}: mixed volume changed under permutation"
            );
        }
    }
    println!(
        "acceptance 2: PASS - {total}/{total} diagonal values equal the volume, permutations invariant"
    );
}

#[test]
fn criterion_3_torus_counts_match_mixed_volumes() {
    let mut rng = StdRng::seed_from_u64(0xC3);
    let total = 60;
    let mut matched = 0usize;
    let mut degenerate = 0usize;
    for case in 0..total {
        let f_count = rng.gen_range(2..=6);
        let f = rand_poly(&mut rng, 2, f_count, -2, 2);
        let g_count = rng.gen_range(2..=6);
        let g = rand_poly(&mut rng, 2, g_count, -2, 2);
        let mv = mixed_volume_multi(
            &[&f.newton_polytope().unwrap(), &g.newton_polytope().unwrap()],
            &[1, 1],
        );
        let count = torus_zero_count(&[f.clone(), g.clone()]).count();
        if count.map(Int::from) == Some(mv.clone()) {
            matched += 1;
            continue;
        }
        // Every mismatch must come from a genuinely degenerate system: some
        // face of the pair fails the exact rank check.
        let sys = LaurentSystem::new(vec![PolyData::Exact(f), PolyData::Exact(g)]).unwrap();
        let full = [0usize, 1];
        let bad = sys
            .delta()
            .faces()
            .iter()
            .any(|face| sys.check_pair(face, &full).status != CheckStatus::Pass);
        assert!(
            bad,
            "case {case}: count {count:?} differs from mixed volume {mv} on a non-degenerate system"
        );
        degenerate += 1;
    }
    assert!(
        matched * 10 >= total * 9,
        "only {matched}/{total} systems matched the mixed volume"
    );
    println!(
        "acceptance 3: PASS - {matched}/{total} torus counts equal the mixed volume; {degenerate} mismatches all confirmed degenerate"
    );
}

#[test]
fn criterion_4_segment_family_dimensions() {
    let pool = [
        q(1, 1),
        q(-1, 1),
        q(2, 1),
        q(-2, 1),
        q(1, 2),
        q(-1, 2),
    ];
    let c = ParameterVector::new(vec![q(1, 3)], vec![q(1, 2)], Convention::Section3);
    let mut checked = 0usize;
    for len in 1..=6usize {
        // Squarefree: distinct nonzero roots, full support {0, …, L}.
        let h = product_of_linear(&pool[..len]);
        let sys = LaurentSystem::new(vec![PolyData::Exact(h)]).unwrap();
        let verdicts = predict(&sys, &c, &PredictOptions::default()).unwrap();
        let vtm = verdicts.iter().find(|v| v.theorem == Theorem::Vtm).unwrap();
        assert!(vtm.applicable && !vtm.conditional);
        assert_eq!(vtm.concentration_degree, Some(1));
        assert_eq!(
            vtm.predicted_dimension,
            Some(PredictedDimension::Exact(Int::from(len))),
            "squarefree degree {len}"
        );
        let chi = euler_complement(&sys).unwrap().chi_complement;
        assert_eq!(chi, -Int::from(len), "chi(W) must be minus the root count");
        checked += 1;

        if len >= 2 {
            // Force a double root: L−1 distinct roots, the first squared.
            let mut roots = pool[..len - 1].to_vec();
            roots.push(pool[0].clone());
            let h = product_of_linear(&roots);
            let sys = LaurentSystem::new(vec![PolyData::Exact(h)]).unwrap();
            let verdicts = predict(&sys, &c, &PredictOptions::default()).unwrap();
            let vtm = verdicts.iter().find(|v| v.theorem == Theorem::Vtm).unwrap();
            assert!(vtm.applicable && !vtm.conditional);
            assert_eq!(
                vtm.predicted_dimension,
                Some(PredictedDimension::Exact(Int::from(len - 1))),
                "double root at degree {len}"
            );
            let chi = euler_complement(&sys).unwrap().chi_complement;
            assert_eq!(chi, -Int::from(len - 1), "chi(W) must count distinct roots");
            checked += 1;
        }
    }
    println!(
        "acceptance 4: PASS - {checked} segment instances: squarefree dimension L, double-root dimension L-1, chi cross-checked"
    );
}

#[test]
fn criterion_5_nonresonance_agrees_with_boundary_orders() {
    let mut rng = StdRng::seed_from_u64(0xC5);
    let shapes = [(1usize, 1usize), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3)];
    let mut instances = 0usize;
    let mut facets = 0usize;
    while instances < 100 {
        let (n0, k) = shapes[rng.gen_range(0..shapes.len())];
        let supports: Vec<Vec<IntVec>> = (0..k)
            .map(|_| {
                let mut pts = std::collections::BTreeSet::new();
                let count = rng.gen_range(2..=4);
                while pts.len() < count {
                    let coords: Vec<i64> = (0..n0).map(|_| rng.gen_range(-2i64..=2)).collect();
                    pts.insert(coords);
                }
                pts.into_iter().map(|c| iv(&c)).collect()
            })
            .collect();
        let torus: Vec<GaussRat> = (0..n0)
            .map(|_| if rng.gen_bool(0.2) { GaussRat::from_int(rng.gen_range(-2..=2)) } else { rand_rat(&mut rng) })
            .collect();
        let poly: Vec<GaussRat> = (0..k)
            .map(|_| if rng.gen_bool(0.2) { GaussRat::from_int(rng.gen_range(-2..=2)) } else { rand_rat(&mut rng) })
            .collect();
        let c = ParameterVector::new(torus, poly, Convention::Section3);
        // Draws whose Minkowski sum is lower-dimensional carry no facet
        // data; resample until the polytopes are in general position.
        let Ok(verdict) = check_nonresonance(&supports, &c) else { continue };

        let parts: Vec<LatticePolytope> =
            supports.iter().map(|b| LatticePolytope::hull(b).unwrap()).collect();
        let part_refs: Vec<&LatticePolytope> = parts.iter().collect();
        let sum = minkowski_sum(&part_refs).unwrap();
        for cert in &verdict.certificates {
            let Some(df) = &cert.delta_facet else { continue };
            let order = m_gamma(&part_refs, &sum, &df.face, &c).unwrap();
            assert_eq!(
                is_integer(&order),
                cert.resonant,
                "facet pairing and boundary order disagree on conormal {:?}",
                cert.conormal.0
            );
            facets += 1;
        }
        instances += 1;
    }
    println!(
        "acceptance 5: PASS - {instances} parameter draws, {facets} induced facets: pairing integrality equals the boundary-order test"
    );
}

#[test]
fn criterion_6_morse_counts_match_volumes() {
    let mut rng = StdRng::seed_from_u64(0xC6);
    let mut polys: Vec<LaurentPoly> = vec![
        lp(1, &[(&[0], 1), (&[1], 1)]),
        lp(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 3)]),
        lp(2, &[(&[1, 1], 5)]),
    ];
    for _ in 0..5 {
        let len = rng.gen_range(1..=4usize);
        let h = LaurentPoly::from_terms(
            1,
            (0..=len).map(|i| (iv(&[i as i64]), rand_rat(&mut rng))),
        );
        polys.push(h);
    }
    for _ in 0..5 {
        // Anchor the support on a full triangle so the polytope is planar.
        let mut support = std::collections::BTreeSet::new();
        support.insert(vec![0i64, 0]);
        support.insert(vec![1, 0]);
        support.insert(vec![0, 1]);
        let extras = rng.gen_range(0..=3);
        while support.len() < 3 + extras {
            support.insert(vec![rng.gen_range(0i64..=2), rng.gen_range(0i64..=2)]);
        }
        polys.push(LaurentPoly::from_terms(
            2,
            support.into_iter().map(|v| (iv(&v), rand_rat(&mut rng))),
        ));
    }
    let mut trials = 0usize;
    let mut matches = 0usize;
    for (i, h) in polys.iter().enumerate() {
        let rep = verify_morse_count(h, 3, 0xC6 + i as u64).unwrap();
        trials += rep.trials;
        matches += rep.matches;
    }
    assert!(trials >= 30, "need at least 30 trials, got {trials}");
    assert!(
        matches * 10 >= trials * 9,
        "only {matches}/{trials} critical counts matched the volume"
    );
    println!(
        "acceptance 6: PASS - {matches}/{trials} critical-point counts equal the normalized volume"
    );
}

#[test]
fn criterion_7_betti_numbers_match_euler_characteristics() {
    let instances: Vec<(LaurentSystem, ParameterVector)> = vec![
        (
            LaurentSystem::new(vec![PolyData::Exact(product_of_linear(&[
                q(1, 1),
                q(-1, 1),
                q(2, 1),
            ]))])
            .unwrap(),
            ParameterVector::new(vec![q(1, 3)], vec![q(1, 2)], Convention::Section3),
        ),
        (
            LaurentSystem::new(vec![PolyData::Exact(product_of_linear(&[
                q(1, 1),
                q(1, 1),
                q(2, 1),
                q(-1, 2),
            ]))])
            .unwrap(),
            ParameterVector::new(vec![q(1, 3)], vec![q(1, 2)], Convention::Section3),
        ),
        (
            LaurentSystem::new(vec![PolyData::Exact(lp(
                2,
                &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 3)],
            ))])
            .unwrap(),
            ParameterVector::new(vec![q(1, 5), q(1, 7)], vec![q(1, 2)], Convention::Section3),
        ),
        (
            LaurentSystem::new(vec![
                PolyData::Exact(lp(2, &[(&[0, 0], -2), (&[1, 0], 1), (&[0, 1], 1)])),
                PolyData::Exact(lp(2, &[(&[1, 0], 1), (&[0, 1], -1)])),
            ])
            .unwrap(),
            ParameterVector::new(
                vec![q(1, 5), q(1, 7)],
                vec![q(1, 3), q(1, 11)],
                Convention::Section3,
            ),
        ),
        (
            LaurentSystem::new(vec![
                PolyData::Exact(lp(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 3)])),
                PolyData::Exact(lp(2, &[(&[0, 0], 2), (&[1, 0], 5), (&[0, 1], 7), (&[1, 1], 11)])),
            ])
            .unwrap(),
            ParameterVector::new(
                vec![q(1, 5), q(1, 7)],
                vec![q(1, 3), q(1, 11)],
                Convention::Section3,
            ),
        ),
        (
            LaurentSystem::new(vec![PolyData::Exact(lp(1, &[(&[0], 1), (&[1], 1)]))]).unwrap(),
            ParameterVector::new(vec![q(1, 3)], vec![q(1, 2)], Convention::Section5),
        ),
    ];
    let mut checked = 0usize;
    for (idx, (sys, c)) in instances.iter().enumerate() {
        let chi = euler_complement(sys).unwrap().chi_complement;
        let expected = signed_by_dim(sys.torus_dim(), chi);
        for v in predict(sys, c, &PredictOptions::default()).unwrap() {
            if !v.applicable || v.concentration_degree.is_none() || v.theorem == Theorem::Nvtm {
                continue;
            }
            match v.predicted_dimension {
                Some(PredictedDimension::Exact(d)) | Some(PredictedDimension::EulerDerived(d)) => {
                    assert_eq!(
                        d, expected,
                        "instance {idx}: {} Betti prediction differs from the signed Euler characteristic",
                        v.theorem
                    );
                    checked += 1;
                }
                _ => {}
            }
        }
    }
    assert!(checked >= instances.len(), "too few applicable predictions: {checked}");
    println!(
        "acceptance 7: PASS - {checked} applicable predictions equal (-1)^(n-k) * chi(W) exactly"
    );
}

#[test]
fn criterion_8_spectrum_membership() {
    // f = y1^2 + y2^3.
    let f = lp(2, &[(&[2, 0], 1), (&[0, 3], 1)]);
    let np = NewtonPolyhedron::from_poly(&f).unwrap();
    let facets = np.facets();
    assert_eq!(facets.len(), 2);
    assert_eq!(facets[0].subset, vec![1]);
    assert_eq!(facets[0].distance, Int::from(3));
    assert_eq!(facets[0].last_weight, Int::from(1));
    assert_eq!(facets[1].subset, vec![0, 1]);
    assert_eq!(facets[1].distance, Int::from(6));
    assert_eq!(facets[1].last_weight, Int::from(2));

    // (beta, q, expected membership) — each row hand-evaluated against the
    // pair table {(3, beta), (6, 2*beta)}: membership iff q*d - phase ∈ Z
    // for some pair (d, phase).
    let cases = [
        (q(1, 2), q(1, 2), true),
        (q(1, 2), q(1, 6), true),
        (q(1, 2), q(1, 4), false),
        (q(1, 2), q(0, 1), true),
        (q(1, 2), q(1, 3), true),
        (q(1, 3), q(1, 9), true),
        (q(1, 3), q(1, 2), false),
        (q(1, 3), q(7, 9), true),
        (q(2, 5), q(4, 5), true),
        (q(2, 5), q(1, 5), false),
    ];
    for (beta, point, expected) in &cases {
        let set = eigenvalue_set(&np, beta);
        assert_eq!(set.pairs.len(), 2);
        assert_eq!(set.pairs[0].0, Int::from(3));
        assert_eq!(set.pairs[1].0, Int::from(6));
        assert_eq!(
            set.contains(point),
            *expected,
            "membership of q={point} for beta={beta}"
        );
    }
    println!(
        "acceptance 8: PASS - facet table (3, b), (6, 2b) reproduced; {} membership cases exact",
        cases.len()
    );
}

#[test]
fn criterion_9_weak_strong_split_and_milnor_numbers() {
    // 1 + 2x + x² = (1+x)²: fine on proper faces, singular on the torus.
    let p = lp(1, &[(&[0], 1), (&[1], 2), (&[2], 1)]);
    let sys = LaurentSystem::new(vec![PolyData::Exact(p)]).unwrap();
    assert_eq!(sys.check_weak().unwrap().verdict, OverallVerdict::Pass);
    assert_eq!(sys.check_strong().unwrap().verdict, OverallVerdict::Fail);

    // A node and a cusp at the torus point (1, 1).
    let node = lp(2, &[(&[1, 1], 1), (&[1, 0], -1), (&[0, 1], -1), (&[0, 0], 1)]);
    let at = [GaussRat::from_int(1), GaussRat::from_int(1)];
    assert_eq!(milnor_number_plane(&node, &at).unwrap(), 1);
    let cusp = lp(
        2,
        &[(&[0, 2], 1), (&[0, 1], -2), (&[3, 0], -1), (&[2, 0], 3), (&[1, 0], -3), (&[0, 0], 2)],
    );
    assert_eq!(milnor_number_plane(&cusp, &at).unwrap(), 2);
    println!(
        "acceptance 9: PASS - double root splits weak PASS / strong FAIL; node mu=1, cusp mu=2"
    );
}
