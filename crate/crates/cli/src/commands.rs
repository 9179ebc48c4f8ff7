//! One function per subcommand. Each returns the JSON payload for the
//! report, a one-line human summary, and the exit code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use vancert_core::arith::{rat_from_str, GaussRat, Int, IntVec, Rat};
use vancert_core::laurent::{LaurentPoly, PolyData};
use vancert_core::nondegeneracy::{
    singular_locus_hypersurface, milnor_number_plane, LaurentSystem, Level, NondegeneracyError,
    OverallVerdict,
};
use vancert_core::nonresonance::{check_nonresonance, Convention, ParameterVector};
use vancert_core::polytope::{dual_fan, face_decompose, LatticePolyhedron};
use vancert_core::spectrum::{eigenvalue_set, NewtonPolyhedron};
use vancert_core::theorems::{
    euler_complement, predict, verify_morse_count, PredictOptions, PredictedDimension, Theorem,
    TheoremsError,
};
use vancert_core::volume::{
    compositions, mixed_volume_multi, mixed_volume_oracle, mixed_volume_sum, normalized_volume,
};
use vancert_core::LatticePolytope;

use crate::render::*;
use crate::schema::{CliError, ProblemFile};

pub struct CmdOut {
    pub result: Value,
    pub summary: String,
    pub exit: i32,
}

fn ok(result: Value, summary: impl Into<String>) -> Result<CmdOut, CliError> {
    Ok(CmdOut { result, summary: summary.into(), exit: 0 })
}

fn theorems_error(e: TheoremsError) -> CliError {
    match e {
        TheoremsError::DegenerateStratum { .. } => CliError::hypothesis(e.to_string()),
        TheoremsError::EliminationRange { .. } => CliError::undecided(e.to_string()),
        TheoremsError::Nondegeneracy(
            NondegeneracyError::Undecided(_) | NondegeneracyError::TooManyVariables { .. },
        ) => CliError::undecided(e.to_string()),
        _ => CliError::input(e.to_string()),
    }
}

pub fn hull(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let parts: Vec<Value> = sys.newton_polytopes().iter().map(polytope_value).collect();
    let delta = sys.delta();
    let summary = format!(
        "{} polytope(s); Minkowski sum has {} vertices, dimension {}",
        parts.len(),
        delta.vertices().len(),
        delta.dim()
    );
    ok(
        json!({ "polytopes": parts, "minkowski_sum": polytope_value(delta) }),
        summary,
    )
}

pub fn faces(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let parts: Vec<&LatticePolytope> = sys.newton_polytopes().iter().collect();
    let delta = sys.delta();
    let faces: Vec<Value> = delta
        .faces()
        .iter()
        .map(|face| {
            let decomposition: Vec<Value> =
                face_decompose(&parts, face).iter().map(face_value).collect();
            json!({
                "face": face_value(face),
                "summand_faces": decomposition,
            })
        })
        .collect();
    let summary = format!("{} faces of the Minkowski sum, each decomposed into summand faces", faces.len());
    ok(json!({ "minkowski_sum": polytope_value(delta), "faces": faces }), summary)
}

pub fn fan(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let fan = dual_fan(sys.delta());
    let cones: Vec<Value> = fan
        .cones
        .iter()
        .map(|c| {
            json!({
                "face": face_value(&c.face),
                "dim": c.dim,
                "generators": c.generators.iter().map(ivec_value).collect::<Vec<_>>(),
            })
        })
        .collect();
    let summary = format!(
        "dual fan with {} cones in dimension {} ({} lineality direction(s))",
        cones.len(),
        fan.ambient_dim,
        fan.lineality.len()
    );
    ok(
        json!({
            "ambient_dim": fan.ambient_dim,
            "lineality": fan.lineality.iter().map(ivec_value).collect::<Vec<_>>(),
            "cones": cones,
        }),
        summary,
    )
}

pub fn volume(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let parts: Vec<Value> =
        sys.newton_polytopes().iter().map(|p| int_value(&normalized_volume(p))).collect();
    let value = normalized_volume(sys.delta());
    let summary = format!("normalized volume {value}");
    ok(
        json!({
            "value": int_value(&value),
            "parts": parts,
            "route": "pyramid decomposition over the lexicographically first vertex",
        }),
        summary,
    )
}

pub fn mixed_volume(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let parts: Vec<&LatticePolytope> = sys.newton_polytopes().iter().collect();
    let n0 = sys.torus_dim();
    let k = parts.len();
    let value = mixed_volume_sum(&parts);
    let patterns = compositions(n0, k);
    let oracle: Int = patterns.iter().map(|mult| mixed_volume_oracle(&parts, mult)).sum();
    let route = if k == n0 {
        "single multiplicity pattern: the plain mixed volume"
    } else {
        "sum over all positive multiplicity patterns"
    };
    let summary = format!("mixed volume {value} ({route})");
    ok(
        json!({
            "value": int_value(&value),
            "patterns": patterns.len(),
            "route": format!("inclusion-exclusion polarization; {route}"),
            "oracle_value": int_value(&oracle),
            "oracle_route": "dilation interpolation",
            "routes_agree": value == oracle,
        }),
        summary,
    )
}

pub fn nonresonance(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let c = file.parameter_vector()?;
    let supports = file.support_vectors();
    let verdict = check_nonresonance(&supports, &c).map_err(|e| CliError::input(e.to_string()))?;
    let certificates: Vec<Value> = verdict.certificates.iter().map(certificate_value).collect();
    let result = json!({
        "nonresonant": verdict.nonresonant,
        "convention": match file.convention() {
            Convention::Section3 => "section3",
            Convention::Section5 => "section5",
        },
        "certificates": certificates,
    });
    if verdict.nonresonant {
        ok(result, format!("nonresonant: {} facet pairings, none integral", verdict.certificates.len()))
    } else {
        let failing = verdict.failing_facets().next().expect("resonant verdicts list a facet");
        Ok(CmdOut {
            result,
            summary: format!(
                "RESONANT: facet with conormal {:?} has integral pairing {}",
                failing.conormal.0, failing.pairing
            ),
            exit: 1,
        })
    }
}

pub fn check_nondeg(file: &ProblemFile, level: Level) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let report = sys.check(level).map_err(|e| match e {
        NondegeneracyError::DimensionHypothesis { .. } => CliError::hypothesis(e.to_string()),
        NondegeneracyError::Undecided(_) => CliError::undecided(e.to_string()),
        _ => CliError::input(e.to_string()),
    })?;
    let exit = match report.verdict {
        OverallVerdict::Pass | OverallVerdict::ConditionalPass => 0,
        OverallVerdict::Fail => 1,
        OverallVerdict::Undecided => 3,
    };
    let checks: Vec<Value> = report.checks.iter().map(face_check_value).collect();
    let summary = format!(
        "{} non-degeneracy: {} ({} face/subset checks)",
        match level {
            Level::Weak => "weak",
            Level::Strong => "strong",
        },
        report.verdict,
        checks.len()
    );
    Ok(CmdOut {
        result: json!({
            "level": match level { Level::Weak => "weak", Level::Strong => "strong" },
            "verdict": report.verdict.to_string(),
            "checks": checks,
        }),
        summary,
        exit,
    })
}

pub fn singular_locus(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let poly = file.polys()?.into_iter().next().expect("k >= 1");
    let p = match poly {
        PolyData::Generic { .. } => {
            return ok(
                json!({
                    "assumed_generic": true,
                    "singular_points": [],
                    "isolated": true,
                    "milnor_numbers": [],
                }),
                "generic coefficients: smooth on the torus by genericity assumption",
            );
        }
        PolyData::Exact(p) => p,
    };
    let report = singular_locus_hypersurface(&p).map_err(|e| match e {
        NondegeneracyError::TooManyVariables { .. } | NondegeneracyError::Undecided(_) => {
            CliError::undecided(e.to_string())
        }
        _ => CliError::input(e.to_string()),
    })?;
    let points: Vec<Value> = report.singular_points.iter().map(singular_point_value).collect();
    let result = json!({
        "assumed_generic": false,
        "singular_points": points,
        "isolated": report.isolated,
        "milnor_numbers": report.milnor_numbers,
    });
    if report.isolated {
        let mus = report
            .milnor_numbers
            .map(|m| format!("Milnor numbers {m:?}"))
            .unwrap_or_else(|| "Milnor numbers undetermined".into());
        ok(result, format!("{} isolated singular point(s); {mus}", report.singular_points.len()))
    } else {
        Ok(CmdOut {
            result,
            summary: "positive-dimensional singular locus on the torus".into(),
            exit: 1,
        })
    }
}

pub fn milnor(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let p = file.first_exact()?;
    if file.torus_dim() != 2 {
        return Err(CliError::undecided(
            "exact Milnor numbers are computed for plane curves (n - k = 2) only",
        ));
    }
    let entries = file.milnor_points();
    if entries.is_empty() {
        return Err(CliError::input("milnor: a list of {point, mu} entries is required"));
    }
    let mut rows = Vec::new();
    let mut all_match = true;
    for (point, supplied) in &entries {
        let at = [point[0].clone(), point[1].clone()];
        let computed = match milnor_number_plane(&p, &at) {
            Ok(mu) => Some(mu),
            Err(NondegeneracyError::NotSingular) => Some(0),
            Err(NondegeneracyError::NotATorusPoint) => {
                return Err(CliError::input(format!(
                    "milnor: point {:?} has a zero coordinate",
                    point.iter().map(|z| z.to_string()).collect::<Vec<_>>()
                )));
            }
            Err(NondegeneracyError::Undecided(msg)) => {
                return Err(CliError::undecided(msg));
            }
            Err(e) => return Err(CliError::input(e.to_string())),
        };
        let matches = computed == Some(*supplied);
        all_match &= matches;
        rows.push(json!({
            "point": point_value(point),
            "supplied": supplied,
            "computed": computed,
            "match": matches,
        }));
    }
    let summary = if all_match {
        format!("{} Milnor number(s) confirmed", rows.len())
    } else {
        "supplied Milnor numbers disagree with the computed values".to_string()
    };
    Ok(CmdOut {
        result: json!({ "entries": rows }),
        summary,
        exit: if all_match { 0 } else { 1 },
    })
}

pub fn spectrum(
    file: &ProblemFile,
    beta: &str,
    point: Option<&str>,
) -> Result<CmdOut, CliError> {
    // The facet geometry depends only on the support, so generic
    // coefficients are instantiated as 1.
    let poly = match file.polys()?.into_iter().next().expect("k >= 1") {
        PolyData::Exact(p) => p,
        PolyData::Generic { n, support } => LaurentPoly::from_terms(
            n,
            support.into_iter().map(|v| (v, GaussRat::from_int(1))),
        ),
    };
    let np = NewtonPolyhedron::from_poly(&poly).map_err(|e| CliError::input(e.to_string()))?;
    let beta = GaussRat::from_rat(
        rat_from_str(beta).map_err(|_| CliError::input(format!("--beta: not a rational: '{beta}'")))?,
    );
    let set = eigenvalue_set(&np, &beta);
    let facets: Vec<Value> = np
        .facets()
        .iter()
        .map(|f| {
            json!({
                "subset": f.subset,
                "points": f.points.iter().map(ivec_value).collect::<Vec<_>>(),
                "conormal": ivec_value(&f.conormal),
                "distance": int_value(&f.distance),
                "last_weight": int_value(&f.last_weight),
            })
        })
        .collect();
    let pairs: Vec<Value> = set
        .pairs
        .iter()
        .map(|(d, phase)| json!([int_value(d), gauss_value(phase)]))
        .collect();
    let mut result = json!({
        "beta": gauss_value(&beta),
        "facets": facets,
        "pairs": pairs,
    });
    let mut exit = 0;
    let mut summary = format!("{} facet(s), {} congruence pair(s)", np.facets().len(), set.pairs.len());
    if let Some(q_str) = point {
        let q = GaussRat::from_rat(
            rat_from_str(q_str)
                .map_err(|_| CliError::input(format!("--point: not a rational: '{q_str}'")))?,
        );
        let contained = set.contains(&q);
        result["membership"] = json!({
            "point": gauss_value(&q),
            "contained": contained,
            "pair": set.violating_pair(&q).map(|(d, phase)| json!([int_value(d), gauss_value(phase)])),
        });
        if contained {
            exit = 1;
            summary = format!("eigenvalue at q = {q} lies in the spectrum set");
        } else {
            summary = format!("q = {q} is excluded from the spectrum set");
        }
    }
    Ok(CmdOut { result, summary, exit })
}

pub fn lift(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let n0 = file.torus_dim();
    let points = file.support_vectors().into_iter().next().expect("k >= 1");
    let rays: Vec<IntVec> = (0..n0)
        .map(|i| {
            let mut v = vec![0i64; n0];
            v[i] = 1;
            IntVec::from_i64(&v)
        })
        .collect();
    let polyhedron = LatticePolyhedron::new(&points, &rays)
        .map_err(|e| CliError::input(e.to_string()))?;
    let facets: Vec<Value> = polyhedron
        .facets()
        .iter()
        .map(|f| {
            json!({
                "conormal": ivec_value(&f.conormal),
                "offset": int_value(&f.offset),
                "points_on": f.points_on,
                "rays_on": f.rays_on,
                "compact": f.is_compact(),
            })
        })
        .collect();
    let compact: Vec<Value> = polyhedron
        .compact_faces()
        .iter()
        .map(|f| json!({ "points_on": f.points_on, "rays_on": f.rays_on }))
        .collect();
    let n_compact_facets = polyhedron.compact_facets().len();
    let summary = format!(
        "lifted polyhedron: {} facet(s), {} compact; {} compact face(s)",
        facets.len(),
        n_compact_facets,
        compact.len()
    );
    ok(
        json!({
            "points": points.iter().map(ivec_value).collect::<Vec<_>>(),
            "rays": rays.iter().map(ivec_value).collect::<Vec<_>>(),
            "facets": facets,
            "compact_faces": compact,
        }),
        summary,
    )
}

pub fn critical_count(file: &ProblemFile, trials: usize, seed: u64) -> Result<CmdOut, CliError> {
    let h = file.first_exact()?;
    let report = verify_morse_count(&h, trials, seed).map_err(theorems_error)?;
    let undecided = report.counts.iter().any(|c| c.is_none());
    let exit = if undecided {
        3
    } else if report.matches == report.trials {
        0
    } else {
        1
    };
    let summary = format!(
        "expected {} critical points; {}/{} seeded trials agree",
        report.expected, report.matches, report.trials
    );
    Ok(CmdOut {
        result: json!({
            "expected": int_value(&report.expected),
            "trials": report.trials,
            "matches": report.matches,
            "counts": report.counts,
        }),
        summary,
        exit,
    })
}

pub fn euler(file: &ProblemFile) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let report = euler_complement(&sys).map_err(theorems_error)?;
    let strata: Vec<Value> = report
        .chi_strata
        .iter()
        .map(|(subset, chi)| json!({ "subset": subset, "chi": int_value(chi) }))
        .collect();
    let summary = format!(
        "chi(W) = {}{}",
        report.chi_complement,
        if report.conditional { " (assuming declared genericity)" } else { "" }
    );
    ok(
        json!({
            "strata": strata,
            "chi_complement": int_value(&report.chi_complement),
            "conditional": report.conditional,
            "milnor_corrected": report.milnor_corrected,
        }),
        summary,
    )
}

fn dimension_value(d: &PredictedDimension) -> Value {
    match d {
        PredictedDimension::Exact(v) => json!({ "kind": "exact", "value": int_value(v) }),
        PredictedDimension::EulerDerived(v) => {
            json!({ "kind": "euler_derived", "value": int_value(v) })
        }
        PredictedDimension::Formula(text) => json!({ "kind": "formula", "text": text }),
    }
}

pub fn predict_cmd(file: &ProblemFile, theorem: &str) -> Result<CmdOut, CliError> {
    let sys = file.system()?;
    let c = file.parameter_vector()?;
    let target = if theorem.eq_ignore_ascii_case("auto") {
        None
    } else {
        Some(theorem.parse::<Theorem>().map_err(CliError::input)?)
    };
    let options = PredictOptions { target, supplied_milnor: file.supplied_mu() };
    let verdicts = predict(&sys, &c, &options).map_err(theorems_error)?;
    let rows: Vec<Value> = verdicts
        .iter()
        .map(|v| {
            json!({
                "theorem": v.theorem.to_string(),
                "applicable": v.applicable,
                "conditional": v.conditional,
                "concentration_degree": v.concentration_degree,
                "predicted_dimension": v.predicted_dimension.as_ref().map(dimension_value),
                "hypotheses": v.hypotheses.iter().map(|h| json!({
                    "name": h.name,
                    "status": h.status.to_string(),
                    "detail": h.detail,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let applicable: Vec<&_> = verdicts.iter().filter(|v| v.applicable).collect();
    let (summary, exit) = if let Some(v) = applicable.first() {
        let dim = match &v.predicted_dimension {
            Some(PredictedDimension::Exact(d)) | Some(PredictedDimension::EulerDerived(d)) => {
                d.to_string()
            }
            Some(PredictedDimension::Formula(f)) => f.clone(),
            None => "unknown".into(),
        };
        let degree = v
            .concentration_degree
            .map(|d| d.to_string())
            .unwrap_or_else(|| "n/a".into());
        (
            format!(
                "{} applies{}: concentration degree {degree}, dimension {dim}",
                v.theorem,
                if v.conditional { " (conditionally)" } else { "" },
            ),
            0,
        )
    } else if verdicts.iter().any(|v| {
        v.hypotheses.iter().all(|h| h.status != vancert_core::nondegeneracy::CheckStatus::Fail)
    }) {
        ("no statement decided: some hypotheses are undecided at this tier".to_string(), 3)
    } else {
        ("no statement applies: at least one hypothesis fails in every candidate".to_string(), 1)
    };
    Ok(CmdOut { result: json!({ "verdicts": rows }), summary, exit })
}

fn q(num: i64, den: i64) -> GaussRat {
    GaussRat::from_rat(Rat::new(Int::from(num), Int::from(den)))
}

fn random_polytope(rng: &mut ChaCha8Rng, dim: usize) -> LatticePolytope {
    let count = rng.gen_range(1..=6);
    let pts: Vec<IntVec> = (0..count)
        .map(|_| {
            let coords: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3i64..=3)).collect();
            IntVec::from_i64(&coords)
        })
        .collect();
    LatticePolytope::hull(&pts).expect("nonempty point set")
}

fn random_multiplicities(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut mult = vec![1usize; parts];
    for _ in 0..(total - parts) {
        let at = rng.gen_range(0..parts);
        mult[at] += 1;
    }
    mult
}

pub fn selftest(trials: usize, seed: u64) -> Result<CmdOut, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks: Vec<(String, bool, String)> = Vec::new();

    let mut route_failures = 0usize;
    for _ in 0..trials {
        let dim = rng.gen_range(1..=3usize);
        let parts_count = rng.gen_range(1..=dim);
        let polys: Vec<LatticePolytope> =
            (0..parts_count).map(|_| random_polytope(&mut rng, dim)).collect();
        let refs: Vec<&LatticePolytope> = polys.iter().collect();
        let mult = random_multiplicities(&mut rng, dim, parts_count);
        if mixed_volume_multi(&refs, &mult) != mixed_volume_oracle(&refs, &mult) {
            route_failures += 1;
        }
    }
    checks.push((
        "mixed-volume-routes".into(),
        route_failures == 0,
        format!("{trials} random queries, {route_failures} disagreements"),
    ));

    let mut diagonal_failures = 0usize;
    for _ in 0..trials {
        let dim = rng.gen_range(1..=3usize);
        let p = random_polytope(&mut rng, dim);
        if mixed_volume_multi(&[&p], &[dim]) != normalized_volume(&p) {
            diagonal_failures += 1;
        }
    }
    checks.push((
        "diagonal-volume".into(),
        diagonal_failures == 0,
        format!("{trials} random polytopes, {diagonal_failures} disagreements"),
    ));

    let double_root = LaurentPoly::from_terms(
        1,
        [
            (IntVec::from_i64(&[0]), GaussRat::from_int(1)),
            (IntVec::from_i64(&[1]), GaussRat::from_int(2)),
            (IntVec::from_i64(&[2]), GaussRat::from_int(1)),
        ],
    );
    let sys = LaurentSystem::new(vec![PolyData::Exact(double_root.clone())])
        .expect("one-variable fixture");
    let c = ParameterVector::new(vec![q(1, 3)], vec![q(1, 2)], Convention::Section3);
    let verdicts = predict(&sys, &c, &PredictOptions::default()).expect("fixture predicts");
    let vtm_ok = verdicts.iter().any(|v| {
        v.theorem == Theorem::Vtm
            && v.applicable
            && v.concentration_degree == Some(1)
            && v.predicted_dimension == Some(PredictedDimension::Exact(Int::from(1)))
    });
    checks.push((
        "segment-predict".into(),
        vtm_ok,
        "double-root segment: degree 1, dimension 1".into(),
    ));

    let resonant = check_nonresonance(
        &[vec![IntVec::from_i64(&[0]), IntVec::from_i64(&[1])]],
        &ParameterVector::new(vec![q(1, 2)], vec![q(1, 2)], Convention::Section3),
    )
    .expect("segment fixture");
    checks.push((
        "resonant-segment".into(),
        !resonant.nonresonant,
        "c = (1/2, 1/2) on the unit segment is resonant".into(),
    ));

    let cusp = LaurentPoly::from_terms(
        2,
        [
            (IntVec::from_i64(&[2, 0]), GaussRat::from_int(1)),
            (IntVec::from_i64(&[0, 3]), GaussRat::from_int(1)),
        ],
    );
    let np = NewtonPolyhedron::from_poly(&cusp).expect("cusp fixture");
    let set = eigenvalue_set(&np, &q(1, 2));
    let spectrum_ok = set.pairs == vec![(Int::from(3), q(1, 2)), (Int::from(6), q(1, 1))];
    checks.push((
        "spectrum-cusp".into(),
        spectrum_ok,
        "pairs (3, 1/2) and (6, 1) at beta = 1/2".into(),
    ));

    let weak = sys.check_weak().expect("weak check").verdict;
    let strong = sys.check_strong().expect("strong check").verdict;
    checks.push((
        "weak-strong-split".into(),
        weak == OverallVerdict::Pass && strong == OverallVerdict::Fail,
        format!("double root: weak {weak}, strong {strong}"),
    ));

    let cubic = LaurentPoly::from_terms(
        1,
        [
            (IntVec::from_i64(&[0]), GaussRat::from_int(1)),
            (IntVec::from_i64(&[1]), GaussRat::from_int(2)),
            (IntVec::from_i64(&[3]), GaussRat::from_int(5)),
        ],
    );
    let morse = verify_morse_count(&cubic, trials.min(8), seed).expect("cubic fixture");
    checks.push((
        "morse-cubic".into(),
        morse.matches == morse.trials,
        format!("{}/{} weighted trials hit {} critical points", morse.matches, morse.trials, morse.expected),
    ));

    let passed = checks.iter().filter(|(_, p, _)| *p).count();
    let total = checks.len();
    let rows: Vec<Value> = checks
        .iter()
        .map(|(name, pass, detail)| json!({ "name": name, "pass": pass, "detail": detail }))
        .collect();
    Ok(CmdOut {
        result: json!({ "checks": rows, "passed": passed, "total": total }),
        summary: format!("selftest: {passed}/{total} checks passed"),
        exit: if passed == total { 0 } else { 1 },
    })
}
