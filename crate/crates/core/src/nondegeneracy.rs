//! Non-degeneracy certification for Laurent polynomial systems.
//!
//! For a system `P₁, …, P_k` on the torus `(ℂ*)^{n₀}` with Minkowski sum
//! `Δ = NP(P₁) + ⋯ + NP(P_k)`, the weak check requires every pair of a face
//! `γ ≺ Δ` with `dim γ < dim Δ` and a nonempty subset `J` to define a
//! non-degenerate complete intersection: the face parts `{Pᵢ^{γᵢ} = 0}ᵢ∈J`
//! must have no common torus zero where the logarithmic Jacobian drops below
//! rank `|J|`. The strong check additionally constrains `γ = Δ` itself.
//! Because a face of a face is again a face (exposed by a perturbed
//! functional), these top-level rank checks already cover the nested
//! quantification in the complete-intersection definition.
//!
//! Each check is reduced to the essential coordinates of its face: a basis
//! of the saturated direction lattice of `Σᵢ∈J γᵢ` turns the face parts into
//! Laurent polynomials in `d = dim Σᵢ∈J γᵢ` variables with the same torus
//! zero structure and Jacobian ranks. Decisions are exact for `d ≤ 2`
//! (univariate gcds, bivariate elimination); larger faces are reported as
//! UNDECIDED rather than guessed, and systems with unspecified generic
//! coefficients are reported as ASSUMED_GENERIC.

use std::fmt;

use num_traits::ToPrimitive;

use crate::arith::{GaussRat, Int, IntVec};
use crate::bivariate::{milnor_number, torus_zeros, univariate_milnor, MilnorOutcome, TorusZeros};
use crate::laurent::{LaurentPoly, PolyData};
use crate::linalg::saturation_basis;
use crate::polytope::{
    face_decompose, minkowski_sum, Face, LatticePolyhedron, LatticePolytope, PolytopeError,
};
use crate::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NondegeneracyError {
    #[error("a system needs at least one polynomial")]
    Empty,
    #[error("polynomials live in different variable counts: expected {expected}, got {got}")]
    MixedVariables { expected: usize, got: usize },
    #[error("dimension hypothesis violated: dim Δ = {dim_delta} but the torus dimension is {torus_dim}")]
    DimensionHypothesis { dim_delta: usize, torus_dim: usize },
    #[error("exact singular-locus analysis covers at most 2 variables, got {vars}")]
    TooManyVariables { vars: usize },
    #[error("plane-curve operations need exactly two variables, got {got}")]
    NotPlane { got: usize },
    #[error("the point has a zero coordinate, so it is not in the torus")]
    NotATorusPoint,
    #[error("the point is not a singular point of the curve")]
    NotSingular,
    #[error("the origin-local test needs nonnegative exponents and no constant term")]
    NotLocalAtOrigin,
    #[error("undecided: {0}")]
    Undecided(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// Which faces of `Δ` are constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    /// Faces with `dim γ < dim Δ` only.
    Weak,
    /// All faces including `γ = Δ`.
    Strong,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Weak => "WEAK",
            Level::Strong => "STRONG",
        })
    }
}

/// Outcome of one (face, subset) check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Coefficients were left generic; the condition holds for a generic
    /// choice but was not verified for a particular one.
    AssumedGeneric,
    /// Outside the exactly decidable range.
    Undecided,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::AssumedGeneric => "ASSUMED_GENERIC",
            CheckStatus::Undecided => "UNDECIDED",
        })
    }
}

/// Evidence attached to a FAIL or UNDECIDED check. Chart points are given in
/// the essential coordinates of the face (the chart carried by the check).
#[derive(Debug, Clone, PartialEq)]
pub enum FailureWitness {
    ChartPoint(Vec<GaussRat>),
    PositiveDimensional,
    ResidualSystem(String),
}

/// One record per (face `γ`, subset `J`) pair.
#[derive(Debug, Clone)]
pub struct FaceCheck {
    /// The face of the Minkowski sum `Δ`.
    pub face: Face,
    /// Its canonical decomposition `γ = γ₁ + ⋯ + γ_k` into faces of the
    /// individual Newton polytopes.
    pub part_faces: Vec<Face>,
    /// The polynomials constrained on this face (0-based indices).
    pub subset: Vec<usize>,
    /// `dim Σᵢ∈J γᵢ`: the number of essential variables of the check.
    pub essential_dim: usize,
    pub status: CheckStatus,
    pub witness: Option<FailureWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverallVerdict {
    Pass,
    /// Every check passed, but at least one only by declared genericity.
    ConditionalPass,
    Fail,
    Undecided,
}

impl fmt::Display for OverallVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OverallVerdict::Pass => "PASS",
            OverallVerdict::ConditionalPass => "CONDITIONAL_PASS",
            OverallVerdict::Fail => "FAIL",
            OverallVerdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Debug, Clone)]
pub struct NondegeneracyReport {
    pub level: Level,
    pub checks: Vec<FaceCheck>,
    pub verdict: OverallVerdict,
}

fn aggregate<I: IntoIterator<Item = CheckStatus>>(statuses: I) -> OverallVerdict {
    let mut verdict = OverallVerdict::Pass;
    for s in statuses {
        match s {
            CheckStatus::Fail => return OverallVerdict::Fail,
            CheckStatus::Undecided => verdict = OverallVerdict::Undecided,
            CheckStatus::AssumedGeneric if verdict == OverallVerdict::Pass => {
                verdict = OverallVerdict::ConditionalPass;
            }
            _ => {}
        }
    }
    verdict
}

/// A tuple of Laurent polynomials on a common torus, with their Newton
/// polytopes and Minkowski sum precomputed.
#[derive(Debug, Clone)]
pub struct LaurentSystem {
    parts: Vec<PolyData>,
    polytopes: Vec<LatticePolytope>,
    sum: LatticePolytope,
}

impl LaurentSystem {
    pub fn new(parts: Vec<PolyData>) -> Result<Self, NondegeneracyError> {
        let first = parts.first().ok_or(NondegeneracyError::Empty)?;
        let expected = first.vars();
        for p in &parts {
            if p.vars() != expected {
                return Err(NondegeneracyError::MixedVariables { expected, got: p.vars() });
            }
        }
        let polytopes: Vec<LatticePolytope> = parts
            .iter()
            .map(|p| p.newton_polytope())
            .collect::<Result<_, _>>()?;
        let refs: Vec<&LatticePolytope> = polytopes.iter().collect();
        let sum = minkowski_sum(&refs)?;
        Ok(LaurentSystem { parts, polytopes, sum })
    }

    pub fn torus_dim(&self) -> usize {
        self.parts[0].vars()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn parts(&self) -> &[PolyData] {
        &self.parts
    }

    pub fn newton_polytopes(&self) -> &[LatticePolytope] {
        &self.polytopes
    }

    /// The Minkowski sum `Δ` of all Newton polytopes.
    pub fn delta(&self) -> &LatticePolytope {
        &self.sum
    }

    /// Decide whether `{Pᵢ^{γᵢ} = 0, i ∈ subset}` is a non-degenerate
    /// complete intersection on the torus. `gamma` must be a face of
    /// [`Self::delta`] (as produced by its face lattice).
    pub fn check_pair(&self, gamma: &Face, subset: &[usize]) -> FaceCheck {
        assert!(
            !subset.is_empty() && subset.iter().all(|&i| i < self.parts.len()),
            "subset must select existing polynomials"
        );
        let refs: Vec<&LatticePolytope> = self.polytopes.iter().collect();
        let part_faces = face_decompose(&refs, gamma);

        // Supports of the face parts, read off the declared supports so the
        // dimension of the check is known even for generic coefficients.
        let face_supports: Vec<Vec<IntVec>> = subset
            .iter()
            .map(|&i| face_support(&self.parts[i], &gamma.witness))
            .collect();
        debug_assert!(subset.iter().zip(&face_supports).all(|(&i, fs)| {
            part_faces[i]
                .vertex_set
                .iter()
                .all(|&j| fs.contains(&self.polytopes[i].vertices()[j]))
        }));

        let mut dirs: Vec<IntVec> = Vec::new();
        for fs in &face_supports {
            for v in &fs[1..] {
                dirs.push(v.sub(&fs[0]));
            }
        }
        let basis = saturation_basis(&dirs, self.torus_dim());
        let essential_dim = basis.len();

        let (status, witness) = if essential_dim == 0 {
            // Every constrained part is a single monomial: no torus zeros.
            (CheckStatus::Pass, None)
        } else if subset.iter().any(|&i| self.parts[i].is_generic()) {
            (CheckStatus::AssumedGeneric, None)
        } else {
            let charted: Vec<LaurentPoly> = subset
                .iter()
                .zip(&face_supports)
                .map(|(&i, fs)| {
                    let r = self.parts[i]
                        .exact()
                        .expect("non-generic part is exact")
                        .face_restriction(&gamma.witness);
                    debug_assert_eq!(r.support(), *fs);
                    r.in_chart(&fs[0], &basis)
                        .expect("face support lies in its saturated direction lattice")
                })
                .collect();
            decide_exact(&charted, essential_dim)
        };

        FaceCheck {
            face: gamma.clone(),
            part_faces,
            subset: subset.to_vec(),
            essential_dim,
            status,
            witness,
        }
    }

    /// Run every required (face, subset) check for the given level.
    /// Requires `Δ` to be full-dimensional in the torus.
    pub fn check(&self, level: Level) -> Result<NondegeneracyReport, NondegeneracyError> {
        let torus_dim = self.torus_dim();
        let dim_delta = self.sum.dim();
        if dim_delta != torus_dim {
            return Err(NondegeneracyError::DimensionHypothesis { dim_delta, torus_dim });
        }
        let k = self.parts.len();
        assert!(k < 63, "subset enumeration limited to fewer than 63 polynomials");
        let mut checks = Vec::new();
        for face in self.sum.faces() {
            if level == Level::Weak && face.dim == dim_delta {
                continue;
            }
            for mask in 1u64..(1u64 << k) {
                let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
                checks.push(self.check_pair(&face, &subset));
            }
        }
        let verdict = aggregate(checks.iter().map(|c| c.status));
        Ok(NondegeneracyReport { level, checks, verdict })
    }

    pub fn check_weak(&self) -> Result<NondegeneracyReport, NondegeneracyError> {
        self.check(Level::Weak)
    }

    pub fn check_strong(&self) -> Result<NondegeneracyReport, NondegeneracyError> {
        self.check(Level::Strong)
    }
}

/// Support points of `p` on the face exposed by `u` (where `⟨u, ·⟩` attains
/// its minimum over the support).
fn face_support(p: &PolyData, u: &IntVec) -> Vec<IntVec> {
    let supp = p.support();
    let m = supp.iter().map(|v| u.dot(v)).min().expect("nonempty support");
    supp.into_iter().filter(|v| u.dot(v) == m).collect()
}

/// Exact rank-drop decision for a charted system of `d`-variable Laurent
/// polynomials (`d ≥ 1`). For one polynomial this is smoothness of its torus
/// hypersurface; for `p = d` polynomials it is rank `p` of the logarithmic
/// Jacobian at every common zero; for `p > d` equations it is emptiness.
fn decide_exact(hs: &[LaurentPoly], d: usize) -> (CheckStatus, Option<FailureWitness>) {
    match d {
        1 => {
            let us: Vec<UPoly> = hs.iter().map(univariate).collect();
            let g = if let [h] = us.as_slice() {
                h.gcd(&h.derivative())
            } else {
                us[1..].iter().fold(us[0].clone(), |acc, h| acc.gcd(h))
            };
            match g.degree() {
                Some(0) => (CheckStatus::Pass, None),
                Some(1) => {
                    // The gcd is monic, so its root is minus the constant term.
                    let root = -&g.coeff(0);
                    (CheckStatus::Fail, Some(FailureWitness::ChartPoint(vec![root])))
                }
                Some(deg) => (
                    CheckStatus::Fail,
                    Some(FailureWitness::ResidualSystem(format!(
                        "common factor of degree {deg}; its roots are torus points where the rank drops"
                    ))),
                ),
                None => unreachable!("gcd of nonzero face parts is nonzero"),
            }
        }
        2 => {
            let system: Vec<LaurentPoly> = match hs {
                [h] => vec![h.clone(), h.log_deriv(0), h.log_deriv(1)],
                [a, b] => vec![a.clone(), b.clone(), log_jacobian_det(a, b)],
                _ => hs.to_vec(),
            };
            match torus_zeros(&system) {
                TorusZeros::Empty | TorusZeros::Finite { count: 0, .. } => {
                    (CheckStatus::Pass, None)
                }
                TorusZeros::Finite { points, residual, count } => {
                    let witness = if let Some(pt) = points.first() {
                        FailureWitness::ChartPoint(pt.to_vec())
                    } else {
                        FailureWitness::ResidualSystem(format!(
                            "{count} rank-drop point(s) in {} nonlinear residue branch(es)",
                            residual.len()
                        ))
                    };
                    (CheckStatus::Fail, Some(witness))
                }
                TorusZeros::PositiveDimensional => {
                    (CheckStatus::Fail, Some(FailureWitness::PositiveDimensional))
                }
                TorusZeros::Undecided(msg) => {
                    (CheckStatus::Undecided, Some(FailureWitness::ResidualSystem(msg)))
                }
            }
        }
        d => (
            CheckStatus::Undecided,
            Some(FailureWitness::ResidualSystem(format!(
                "exact decision covers at most 2 essential variables; this face needs {d}"
            ))),
        ),
    }
}

/// Log-Jacobian determinant `θ₁a·θ₂b − θ₂a·θ₁b` of two 2-variable
/// polynomials, where `θᵢ = xᵢ∂ᵢ`. On the torus this vanishes exactly where
/// the ordinary Jacobian of `(a, b)` is singular.
fn log_jacobian_det(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a.log_deriv(0)
        .mul(&b.log_deriv(1))
        .sub(&a.log_deriv(1).mul(&b.log_deriv(0)))
}

/// Dense coefficient form of a one-variable Laurent polynomial, after
/// multiplying by the monomial that moves its lowest exponent to zero (a
/// torus unit, so zero sets and multiplicities are unchanged).
fn univariate(h: &LaurentPoly) -> UPoly {
    debug_assert_eq!(h.vars(), 1);
    debug_assert!(!h.is_zero());
    let (shifted, _) = h.shift_to_origin();
    let mut coeffs: Vec<GaussRat> = Vec::new();
    for (v, c) in shifted.terms() {
        let e = v.0[0].to_usize().expect("nonnegative exponent after shift");
        if coeffs.len() <= e {
            coeffs.resize(e + 1, GaussRat::from_int(0));
        }
        coeffs[e] = c.clone();
    }
    UPoly::new(coeffs)
}

/// A singular point of a hypersurface, exactly or as a residual description.
#[derive(Debug, Clone, PartialEq)]
pub enum SingularPoint {
    Exact(Vec<GaussRat>),
    Residual(String),
}

#[derive(Debug, Clone)]
pub struct SingularLocusReport {
    pub singular_points: Vec<SingularPoint>,
    pub isolated: bool,
    /// One Milnor number per singular point, present only when the locus is
    /// isolated and every point was solved exactly.
    pub milnor_numbers: Option<Vec<usize>>,
}

impl SingularLocusReport {
    fn smooth() -> Self {
        SingularLocusReport {
            singular_points: vec![],
            isolated: true,
            milnor_numbers: Some(vec![]),
        }
    }
}

/// Solve `{P = 0, x₁∂₁P = 0, …}` on the torus and classify the singular
/// locus of the hypersurface `P = 0`. Exact in one or two variables.
pub fn singular_locus_hypersurface(
    p: &LaurentPoly,
) -> Result<SingularLocusReport, NondegeneracyError> {
    if p.is_zero() {
        return Ok(SingularLocusReport {
            singular_points: vec![SingularPoint::Residual(
                "the zero polynomial vanishes identically".into(),
            )],
            isolated: false,
            milnor_numbers: None,
        });
    }
    match p.vars() {
        1 => {
            let u = univariate(p);
            let g = u.gcd(&u.derivative());
            match g.degree() {
                Some(0) => Ok(SingularLocusReport::smooth()),
                Some(1) => {
                    let root = -&g.coeff(0);
                    let mu = univariate_milnor(&u, &root)
                        .expect("root of gcd(P, P') is a root of P");
                    debug_assert!(mu >= 1);
                    Ok(SingularLocusReport {
                        singular_points: vec![SingularPoint::Exact(vec![root])],
                        isolated: true,
                        milnor_numbers: Some(vec![mu]),
                    })
                }
                Some(deg) => Ok(SingularLocusReport {
                    singular_points: vec![SingularPoint::Residual(format!(
                        "roots of a repeated-root factor of degree {deg}"
                    ))],
                    isolated: true,
                    milnor_numbers: None,
                }),
                None => unreachable!("gcd of a nonzero polynomial is nonzero"),
            }
        }
        2 => {
            let system = [p.clone(), p.log_deriv(0), p.log_deriv(1)];
            match torus_zeros(&system) {
                TorusZeros::Empty | TorusZeros::Finite { count: 0, .. } => {
                    Ok(SingularLocusReport::smooth())
                }
                TorusZeros::Finite { count, points, residual } => {
                    let mut singular_points: Vec<SingularPoint> = points
                        .iter()
                        .map(|pt| SingularPoint::Exact(pt.to_vec()))
                        .collect();
                    for (modulus, fiber) in &residual {
                        singular_points.push(SingularPoint::Residual(format!(
                            "branch with modulus of degree {} and {} fiber polynomial(s)",
                            modulus.degree().unwrap_or(0),
                            fiber.len()
                        )));
                    }
                    let milnor_numbers = if residual.is_empty() && points.len() == count {
                        points
                            .iter()
                            .map(|pt| match milnor_number(p, pt) {
                                MilnorOutcome::Isolated(mu) => Some(mu),
                                _ => None,
                            })
                            .collect::<Option<Vec<_>>>()
                    } else {
                        None
                    };
                    Ok(SingularLocusReport { singular_points, isolated: true, milnor_numbers })
                }
                TorusZeros::PositiveDimensional => Ok(SingularLocusReport {
                    singular_points: vec![SingularPoint::Residual(
                        "positive-dimensional singular locus".into(),
                    )],
                    isolated: false,
                    milnor_numbers: None,
                }),
                TorusZeros::Undecided(msg) => Err(NondegeneracyError::Undecided(msg)),
            }
        }
        vars => Err(NondegeneracyError::TooManyVariables { vars }),
    }
}

/// Milnor number of the plane curve `P = 0` at an exact torus point.
/// Errors with [`NondegeneracyError::NotSingular`] at smooth or off-curve
/// points.
pub fn milnor_number_plane(
    p: &LaurentPoly,
    at: &[GaussRat; 2],
) -> Result<usize, NondegeneracyError> {
    if p.vars() != 2 {
        return Err(NondegeneracyError::NotPlane { got: p.vars() });
    }
    if at.iter().any(|c| c.is_zero()) {
        return Err(NondegeneracyError::NotATorusPoint);
    }
    match milnor_number(p, at) {
        MilnorOutcome::Isolated(mu) => Ok(mu),
        MilnorOutcome::Smooth | MilnorOutcome::NotOnCurve => Err(NondegeneracyError::NotSingular),
        MilnorOutcome::Undecided(msg) => Err(NondegeneracyError::Undecided(msg)),
    }
}

/// One compact face of the local Newton polyhedron with its smoothness
/// status.
#[derive(Debug, Clone)]
pub struct OriginFaceCheck {
    /// Support points of `f` on the face.
    pub support: Vec<IntVec>,
    pub essential_dim: usize,
    pub status: CheckStatus,
    pub witness: Option<FailureWitness>,
}

#[derive(Debug, Clone)]
pub struct NewtonOriginReport {
    pub checks: Vec<OriginFaceCheck>,
    pub verdict: OverallVerdict,
}

/// Local non-degeneracy of `f` at the origin: every compact face of
/// `conv(supp f) + ℝ₊ⁿ` must have a face part whose torus hypersurface is
/// smooth and reduced. Requires nonnegative exponents and no constant term.
pub fn newton_nondegenerate_at_origin(
    f: &LaurentPoly,
) -> Result<NewtonOriginReport, NondegeneracyError> {
    if f.is_zero() {
        return Err(NondegeneracyError::Empty);
    }
    let n = f.vars();
    let zero = Int::from(0);
    let supp = f.support();
    for v in &supp {
        if v.0.iter().any(|x| x < &zero) || v.is_zero() {
            return Err(NondegeneracyError::NotLocalAtOrigin);
        }
    }
    let rays: Vec<IntVec> = (0..n)
        .map(|j| {
            let mut e = IntVec::zero(n);
            e.0[j] = Int::from(1);
            e
        })
        .collect();
    let polyhedron = LatticePolyhedron::new(&supp, &rays)
        .expect("support plus the full orthant is full-dimensional");
    let mut checks = Vec::new();
    for face in polyhedron.compact_faces() {
        let support: Vec<IntVec> = face
            .points_on
            .iter()
            .map(|&i| polyhedron.points()[i].clone())
            .collect();
        let part =
            LaurentPoly::from_terms(n, support.iter().map(|v| (v.clone(), f.coeff(v))));
        let dirs: Vec<IntVec> = support[1..].iter().map(|v| v.sub(&support[0])).collect();
        let basis = saturation_basis(&dirs, n);
        let essential_dim = basis.len();
        let (status, witness) = if essential_dim == 0 {
            (CheckStatus::Pass, None)
        } else {
            let h = part
                .in_chart(&support[0], &basis)
                .expect("face support lies in its saturated direction lattice");
            decide_exact(&[h], essential_dim)
        };
        checks.push(OriginFaceCheck { support, essential_dim, status, witness });
    }
    let verdict = aggregate(checks.iter().map(|c| c.status));
    Ok(NewtonOriginReport { checks, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVec {
        IntVec::from_i64(v)
    }

    fn gi(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(v, c)| (iv(v), gi(*c))))
    }

    fn system(polys: &[LaurentPoly]) -> LaurentSystem {
        LaurentSystem::new(polys.iter().map(|p| PolyData::Exact(p.clone())).collect()).unwrap()
    }

    /// 1 + 2x + x² on ℂ*.
    fn double_root_poly() -> LaurentPoly {
        poly(1, &[(&[0], 1), (&[1], 2), (&[2], 1)])
    }

    #[test]
    fn vertex_faces_always_pass() {
        let sys = system(&[double_root_poly()]);
        let report = sys.check_weak().unwrap();
        assert_eq!(report.checks.len(), 2);
        assert!(report.checks.iter().all(|c| c.face.dim == 0));
        assert!(report.checks.iter().all(|c| c.status == CheckStatus::Pass));
        assert_eq!(report.verdict, OverallVerdict::Pass);
    }

    #[test]
    fn double_root_fails_only_on_the_full_face() {
        let sys = system(&[double_root_poly()]);
        let strong = sys.check_strong().unwrap();
        assert_eq!(strong.verdict, OverallVerdict::Fail);
        assert_eq!(strong.checks.len(), 3);
        let top = strong.checks.iter().find(|c| c.face.dim == 1).unwrap();
        assert_eq!(top.status, CheckStatus::Fail);
        assert_eq!(top.essential_dim, 1);
        assert_eq!(
            top.witness,
            Some(FailureWitness::ChartPoint(vec![gi(-1)])),
            "the repeated root sits at x = −1"
        );
    }

    #[test]
    fn transverse_lines_pass_strongly() {
        // x + y − 2 and x − y meet only at (1, 1), where the Jacobian has
        // rank two; every face pair is non-degenerate.
        let sys = system(&[
            poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -2)]),
            poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ]);
        let report = sys.check_strong().unwrap();
        assert_eq!(report.verdict, OverallVerdict::Pass);
        let top = report
            .checks
            .iter()
            .find(|c| c.face.dim == 2 && c.subset == vec![0, 1])
            .unwrap();
        assert_eq!(top.status, CheckStatus::Pass);
        assert_eq!(top.essential_dim, 2);
    }

    #[test]
    fn product_hypersurface_passes_weakly_but_fails_strongly() {
        // (1 + x)(1 + y) has a normal crossing at (−1, −1): every proper
        // face part is a smooth binomial-type curve, but the full
        // hypersurface is singular where the branches meet.
        let p = poly(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
        let sys = system(&[p]);
        let weak = sys.check_weak().unwrap();
        assert_eq!(weak.verdict, OverallVerdict::Pass);
        assert_eq!(weak.checks.len(), 8);
        let strong = sys.check_strong().unwrap();
        assert_eq!(strong.verdict, OverallVerdict::Fail);
        assert_eq!(strong.checks.len(), 9);
        let top = strong.checks.iter().find(|c| c.face.dim == 2).unwrap();
        assert_eq!(top.status, CheckStatus::Fail);
        match top.witness.as_ref().unwrap() {
            FailureWitness::ChartPoint(pt) => {
                assert_eq!(pt.len(), 2);
                assert!(pt.iter().all(|c| *c == gi(-1)), "crossing point is (−1, −1)");
            }
            other => panic!("expected an exact chart point, got {other:?}"),
        }
    }

    #[test]
    fn named_edge_part_is_smooth() {
        let p = poly(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
        let sys = system(&[p]);
        let edge = sys.delta().supporting_face(&iv(&[0, 1]));
        assert_eq!(edge.dim, 1);
        let check = sys.check_pair(&edge, &[0]);
        assert_eq!(check.status, CheckStatus::Pass);
        assert_eq!(check.essential_dim, 1);
        assert_eq!(check.part_faces.len(), 1);
        assert_eq!(check.part_faces[0].vertex_set, edge.vertex_set);
    }

    #[test]
    fn degenerate_sum_dimension_is_rejected() {
        // NP(1 + xy) is a segment inside the 2-torus: dim Δ = 1 ≠ 2.
        let p = poly(2, &[(&[0, 0], 1), (&[1, 1], 1)]);
        let sys = system(&[p.clone()]);
        assert_eq!(
            sys.check_weak().unwrap_err(),
            NondegeneracyError::DimensionHypothesis { dim_delta: 1, torus_dim: 2 }
        );
        // The pair check itself still works in the face chart.
        let top = sys.delta().supporting_face(&IntVec::zero(2));
        let check = sys.check_pair(&top, &[0]);
        assert_eq!(check.status, CheckStatus::Pass);
        assert_eq!(check.essential_dim, 1);
    }

    #[test]
    fn generic_coefficients_pass_conditionally() {
        let support = vec![iv(&[0, 0]), iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1])];
        let sys = LaurentSystem::new(vec![PolyData::Generic { n: 2, support }]).unwrap();
        let weak = sys.check_weak().unwrap();
        assert_eq!(weak.verdict, OverallVerdict::ConditionalPass);
        // Vertices still pass unconditionally; the edges are assumed.
        for check in &weak.checks {
            match check.essential_dim {
                0 => assert_eq!(check.status, CheckStatus::Pass),
                _ => assert_eq!(check.status, CheckStatus::AssumedGeneric),
            }
        }
    }

    #[test]
    fn three_or_more_essential_variables_are_undecided() {
        let p = poly(
            3,
            &[(&[0, 0, 0], 1), (&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)],
        );
        let sys = system(&[p]);
        let strong = sys.check_strong().unwrap();
        assert_eq!(strong.verdict, OverallVerdict::Undecided);
        let top = strong.checks.iter().find(|c| c.face.dim == 3).unwrap();
        assert_eq!(top.status, CheckStatus::Undecided);
        // All proper faces are exactly decidable and smooth.
        assert!(strong
            .checks
            .iter()
            .filter(|c| c.face.dim < 3)
            .all(|c| c.status == CheckStatus::Pass));
    }

    #[test]
    fn singular_locus_of_a_univariate_double_root() {
        let report = singular_locus_hypersurface(&double_root_poly()).unwrap();
        assert!(report.isolated);
        assert_eq!(report.singular_points, vec![SingularPoint::Exact(vec![gi(-1)])]);
        assert_eq!(report.milnor_numbers, Some(vec![1]));
    }

    #[test]
    fn singular_locus_of_a_smooth_line() {
        let p = poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -2)]);
        let report = singular_locus_hypersurface(&p).unwrap();
        assert!(report.isolated);
        assert!(report.singular_points.is_empty());
        assert_eq!(report.milnor_numbers, Some(vec![]));
    }

    #[test]
    fn singular_locus_of_a_shifted_circle_pair() {
        // (x−1)² + (y−1)² = x² − 2x + y² − 2y + 2: isolated singular point
        // at (1, 1) with Milnor number 1.
        let p = poly(
            2,
            &[(&[2, 0], 1), (&[1, 0], -2), (&[0, 2], 1), (&[0, 1], -2), (&[0, 0], 2)],
        );
        let report = singular_locus_hypersurface(&p).unwrap();
        assert!(report.isolated);
        assert_eq!(report.singular_points, vec![SingularPoint::Exact(vec![gi(1), gi(1)])]);
        assert_eq!(report.milnor_numbers, Some(vec![1]));
    }

    #[test]
    fn milnor_wrapper_node_and_cusp() {
        // Node: (x−1)² − (y−1)² at (1, 1).
        let node = poly(2, &[(&[2, 0], 1), (&[1, 0], -2), (&[0, 2], -1), (&[0, 1], 2)]);
        assert_eq!(milnor_number_plane(&node, &[gi(1), gi(1)]).unwrap(), 1);
        // Cusp: (x−1)² − (y−1)³ at (1, 1).
        let cusp = poly(
            2,
            &[
                (&[2, 0], 1),
                (&[1, 0], -2),
                (&[0, 0], 1),
                (&[0, 3], -1),
                (&[0, 2], 3),
                (&[0, 1], -3),
                (&[0, 0], 1),
            ],
        );
        assert_eq!(milnor_number_plane(&cusp, &[gi(1), gi(1)]).unwrap(), 2);
    }

    #[test]
    fn milnor_wrapper_rejects_smooth_and_invalid_inputs() {
        let line = poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -2)]);
        assert_eq!(
            milnor_number_plane(&line, &[gi(1), gi(1)]).unwrap_err(),
            NondegeneracyError::NotSingular
        );
        assert_eq!(
            milnor_number_plane(&line, &[gi(5), gi(5)]).unwrap_err(),
            NondegeneracyError::NotSingular,
            "off-curve points are not singular points"
        );
        assert_eq!(
            milnor_number_plane(&line, &[gi(0), gi(1)]).unwrap_err(),
            NondegeneracyError::NotATorusPoint
        );
        assert_eq!(
            milnor_number_plane(&double_root_poly(), &[gi(-1), gi(1)]).unwrap_err(),
            NondegeneracyError::NotPlane { got: 1 }
        );
    }

    #[test]
    fn origin_test_passes_for_the_cusp() {
        let f = poly(2, &[(&[2, 0], 1), (&[0, 3], 1)]);
        let report = newton_nondegenerate_at_origin(&f).unwrap();
        assert_eq!(report.verdict, OverallVerdict::Pass);
        // Two vertices and the connecting edge.
        assert_eq!(report.checks.len(), 3);
        let edge = report.checks.iter().find(|c| c.support.len() == 2).unwrap();
        assert_eq!(edge.essential_dim, 1);
        assert_eq!(edge.status, CheckStatus::Pass);
    }

    #[test]
    fn origin_test_fails_for_a_double_line() {
        // (y₁ + y₂)² restricted to its single compact edge is a square.
        let f = poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        let report = newton_nondegenerate_at_origin(&f).unwrap();
        assert_eq!(report.verdict, OverallVerdict::Fail);
        let edge = report.checks.iter().find(|c| c.support.len() == 3).unwrap();
        assert_eq!(edge.status, CheckStatus::Fail);
        assert_eq!(edge.witness, Some(FailureWitness::ChartPoint(vec![gi(-1)])));
    }

    #[test]
    fn origin_test_trivial_for_a_monomial() {
        let f = poly(2, &[(&[1, 0], 1)]);
        let report = newton_nondegenerate_at_origin(&f).unwrap();
        assert_eq!(report.verdict, OverallVerdict::Pass);
        assert_eq!(report.checks.len(), 1);
    }

    #[test]
    fn origin_test_validates_its_input() {
        let constant = poly(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        assert_eq!(
            newton_nondegenerate_at_origin(&constant).unwrap_err(),
            NondegeneracyError::NotLocalAtOrigin
        );
        let laurent = poly(2, &[(&[-1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(
            newton_nondegenerate_at_origin(&laurent).unwrap_err(),
            NondegeneracyError::NotLocalAtOrigin
        );
    }

    #[test]
    fn jacobian_determinant_matches_hand_expansion() {
        // a = x + y, b = x − y: θ₁a·θ₂b − θ₂a·θ₁b = x(−y) − yx = −2xy.
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(log_jacobian_det(&a, &b), poly(2, &[(&[1, 1], -2)]));
    }

    #[test]
    fn mixed_variable_counts_are_rejected() {
        let err = LaurentSystem::new(vec![
            PolyData::Exact(double_root_poly()),
            PolyData::Exact(poly(2, &[(&[1, 1], 1)])),
        ])
        .unwrap_err();
        assert_eq!(err, NondegeneracyError::MixedVariables { expected: 1, got: 2 });
        assert_eq!(LaurentSystem::new(vec![]).unwrap_err(), NondegeneracyError::Empty);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]

        /// Strong non-degeneracy implies weak: the weak checks are a subset.
        #[test]
        fn strong_pass_implies_weak_pass(
            raw in proptest::collection::vec(
                proptest::collection::vec(
                    (proptest::collection::vec(0i64..3, 2), 1i64..4),
                    1..4,
                ),
                1..3,
            ),
        ) {
            let polys: Vec<LaurentPoly> = raw
                .iter()
                .map(|terms| LaurentPoly::from_terms(
                    2,
                    terms.iter().map(|(v, c)| (IntVec::from_i64(v), gi(*c))),
                ))
                .collect();
            proptest::prop_assume!(polys.iter().all(|p| !p.is_zero()));
            let sys = system(&polys);
            proptest::prop_assume!(sys.delta().dim() == 2);
            let strong = sys.check_strong().unwrap();
            let weak = sys.check_weak().unwrap();
            let extra = (1usize << polys.len()) - 1;
            proptest::prop_assert_eq!(strong.checks.len(), weak.checks.len() + extra);
            if strong.verdict == OverallVerdict::Pass {
                proptest::prop_assert_eq!(weak.verdict, OverallVerdict::Pass);
            }
        }

        /// Chart reduction never changes a vertex check: zero-dimensional
        /// faces pass outright for any coefficients.
        #[test]
        fn vertex_checks_pass_for_any_system(
            coeffs in proptest::collection::vec(1i64..9, 3),
        ) {
            let p = LaurentPoly::from_terms(2, vec![
                (iv(&[0, 0]), gi(coeffs[0])),
                (iv(&[2, 0]), gi(coeffs[1])),
                (iv(&[0, 2]), gi(coeffs[2])),
            ]);
            let sys = system(&[p]);
            for face in sys.delta().faces() {
                if face.dim == 0 {
                    let check = sys.check_pair(&face, &[0]);
                    proptest::prop_assert_eq!(check.status, CheckStatus::Pass);
                }
            }
        }
    }

    #[test]
    fn display_labels_are_stable() {
        assert_eq!(Level::Weak.to_string(), "WEAK");
        assert_eq!(Level::Strong.to_string(), "STRONG");
        assert_eq!(CheckStatus::AssumedGeneric.to_string(), "ASSUMED_GENERIC");
        assert_eq!(OverallVerdict::ConditionalPass.to_string(), "CONDITIONAL_PASS");
    }
}
