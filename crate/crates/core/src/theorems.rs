//! Verdicts for the supported vanishing statements: each statement carries a
//! list of hypotheses that are checked exactly against a concrete system, and
//! an applicable verdict reports the concentration degree together with the
//! predicted middle Betti number whenever a formula is available. The module
//! also houses the desk-scale cross-checks those predictions are tested
//! against: Euler characteristics of hypersurface-complement strata (via
//! lattice volumes, with Milnor corrections for isolated singular points) and
//! critical-point counts of monomial-twisted functions.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{is_integer, GaussRat, Int, IntVec, Rat};
use crate::bivariate::torus_zero_count;
use crate::laurent::{LaurentPoly, PolyData};
use crate::linalg::saturation_basis;
use crate::nondegeneracy::{
    singular_locus_hypersurface, CheckStatus, LaurentSystem, Level, NondegeneracyError,
};
use crate::nonresonance::{check_c_not_integer, check_nonresonance, ParameterVector};
use crate::polytope::{face_decompose, LatticePolytope, PolytopeError};
use crate::upoly::UPoly;
use crate::volume::{mixed_volume_sum, normalized_volume};

/// Errors for the verdict and cross-check routines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TheoremsError {
    #[error("more equations ({p}) than torus dimensions ({n})")]
    TooManyEquations { p: usize, n: usize },
    #[error("polytope {index} has dimension {dim}, expected the ambient dimension {ambient}")]
    NotFullDimensional { index: usize, dim: usize, ambient: usize },
    #[error(
        "parameter vector has {got_torus} torus and {got_poly} polynomial entries; \
         the system needs {torus} and {poly}"
    )]
    ParameterShape { torus: usize, poly: usize, got_torus: usize, got_poly: usize },
    #[error("the stratum cut out by {subset:?} is degenerate: {reason}")]
    DegenerateStratum { subset: Vec<usize>, reason: String },
    #[error("supplied Milnor numbers {supplied:?} disagree with the computed {computed:?}")]
    MilnorMismatch { computed: Vec<usize>, supplied: Vec<usize> },
    #[error("the zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("exact elimination handles 1 or 2 variables, got {vars}")]
    EliminationRange { vars: usize },
    #[error(transparent)]
    Nondegeneracy(#[from] NondegeneracyError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// The statements the dispatcher knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    Vtm,
    Svtm,
    Mvtm,
    Smvtm,
    Ssmvtm,
    Ntm,
    Nvtm,
    Bkk,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Vtm,
        Theorem::Svtm,
        Theorem::Mvtm,
        Theorem::Smvtm,
        Theorem::Ssmvtm,
        Theorem::Ntm,
        Theorem::Nvtm,
        Theorem::Bkk,
    ];
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theorem::Vtm => "VTM",
            Theorem::Svtm => "SVTM",
            Theorem::Mvtm => "MVTM",
            Theorem::Smvtm => "SMVTM",
            Theorem::Ssmvtm => "SSMVTM",
            Theorem::Ntm => "NTM",
            Theorem::Nvtm => "NVTM",
            Theorem::Bkk => "BKK",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .iter()
            .copied()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem '{s}'"))
    }
}

/// One hypothesis of a statement, with the exact check outcome and a short
/// piece of evidence (counts, the first offending face, and so on).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

/// A predicted middle Betti number. `Exact` comes from a closed volume
/// formula, `EulerDerived` from the signed Euler characteristic of the
/// complement (valid under concentration), and `Formula` records a formula
/// with an input that could not be determined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictedDimension {
    Exact(Int),
    EulerDerived(Int),
    Formula(String),
}

/// The verdict for one statement on one instance. `applicable` holds exactly
/// when no hypothesis failed or was left undecided; `conditional` flags
/// verdicts that lean on an assumed-generic hypothesis. The concentration
/// degree and predicted dimension are reported only on applicable verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub hypotheses: Vec<HypothesisCheck>,
    pub applicable: bool,
    pub conditional: bool,
    pub concentration_degree: Option<usize>,
    pub predicted_dimension: Option<PredictedDimension>,
}

/// Dispatch options: an explicit target statement (`None` tries the full
/// fixed order) and optional externally supplied Milnor numbers for the
/// hypersurface dimension formula.
#[derive(Debug, Clone, Default)]
pub struct PredictOptions {
    pub target: Option<Theorem>,
    pub supplied_milnor: Option<Vec<usize>>,
}

fn sign_pow(k: usize) -> Int {
    if k % 2 == 0 {
        Int::from(1)
    } else {
        Int::from(-1)
    }
}

fn gauss_int(i: &Int) -> GaussRat {
    GaussRat::from_rat(Rat::from_integer(i.clone()))
}

/// Signed point count of a non-degenerate complete intersection on the
/// torus: `(−1)^{n−p}` times the sum of the mixed volumes over all positive
/// multiplicity patterns. Errors when there are more equations than torus
/// dimensions.
pub fn bkk_euler(parts: &[&LatticePolytope]) -> Result<Int, TheoremsError> {
    assert!(!parts.is_empty());
    let n = parts[0].ambient_dim();
    let p = parts.len();
    if p > n {
        return Err(TheoremsError::TooManyEquations { p, n });
    }
    Ok(sign_pow(n + p) * mixed_volume_sum(parts))
}

/// The middle Betti number of a non-degenerate complete intersection of
/// full-dimensional hypersurfaces under a non-trivial rank-one local system:
/// the plain sum of mixed volumes over positive multiplicity patterns.
pub fn nvtm_dimension(parts: &[&LatticePolytope]) -> Result<Int, TheoremsError> {
    assert!(!parts.is_empty());
    let n = parts[0].ambient_dim();
    if parts.len() > n {
        return Err(TheoremsError::TooManyEquations { p: parts.len(), n });
    }
    for (index, p) in parts.iter().enumerate() {
        if p.dim() != n {
            return Err(TheoremsError::NotFullDimensional { index, dim: p.dim(), ambient: n });
        }
    }
    Ok(mixed_volume_sum(parts))
}

/// Euler characteristics of the strata of a hypersurface arrangement on the
/// torus: `chi_strata` lists `χ(Z_J)` for every subset `J` of the system
/// (`Z_∅` is the torus itself, with `χ = 0`), and `chi_complement` is the
/// inclusion–exclusion total `χ(W) = Σ_J (−1)^{|J|} χ(Z_J)` for the common
/// complement `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerReport {
    pub chi_strata: Vec<(Vec<usize>, Int)>,
    pub chi_complement: Int,
    /// Some stratum leaned on assumed-generic coefficients.
    pub conditional: bool,
    /// Indices of single-polynomial strata whose value needed a Milnor
    /// correction for isolated singular points on the torus.
    pub milnor_corrected: Vec<usize>,
}

/// `χ` of one stratum `Z_J`, together with flags for assumed-generic
/// coefficients and an applied Milnor correction. The volume formula needs
/// every face check of the subsystem to pass; the only tolerated failure is
/// isolated singular points of a single hypersurface on the open torus,
/// which shift `χ` by `(−1)^n Σ μ`.
fn stratum_chi(sys: &LaurentSystem, subset: &[usize]) -> Result<(Int, bool, bool), TheoremsError> {
    let n0 = sys.torus_dim();
    let parts: Vec<PolyData> = subset.iter().map(|&i| sys.parts()[i].clone()).collect();
    let p = parts.len();
    let sub = LaurentSystem::new(parts)?;
    let polys: Vec<&LatticePolytope> = sub.newton_polytopes().iter().collect();
    let base = sign_pow(n0 + p) * mixed_volume_sum(&polys);

    let full: Vec<usize> = (0..p).collect();
    let dim_top = sub.delta().dim();
    let mut assumed = false;
    let mut top_status = CheckStatus::Pass;
    for face in sub.delta().faces() {
        let fc = sub.check_pair(&face, &full);
        match fc.status {
            CheckStatus::Pass => {}
            CheckStatus::AssumedGeneric => assumed = true,
            CheckStatus::Fail | CheckStatus::Undecided => {
                if face.dim == dim_top {
                    top_status = fc.status;
                } else {
                    return Err(TheoremsError::DegenerateStratum {
                        subset: subset.to_vec(),
                        reason: format!(
                            "face {:?} check is {}",
                            face.vertex_set, fc.status
                        ),
                    });
                }
            }
        }
    }
    if top_status == CheckStatus::Pass {
        return Ok((base, assumed, false));
    }
    if p != 1 {
        return Err(TheoremsError::DegenerateStratum {
            subset: subset.to_vec(),
            reason: format!("torus check of the full subsystem is {top_status}"),
        });
    }
    let part = &sub.parts()[0];
    let Some(poly) = part.exact() else {
        return Err(TheoremsError::DegenerateStratum {
            subset: subset.to_vec(),
            reason: "generic coefficients with a failing torus check".into(),
        });
    };
    match singular_locus_hypersurface(poly) {
        Ok(rep) if rep.isolated => match rep.milnor_numbers {
            Some(mus) => {
                let total: usize = mus.iter().sum();
                Ok((base + sign_pow(n0) * Int::from(total), assumed, true))
            }
            None => Err(TheoremsError::DegenerateStratum {
                subset: subset.to_vec(),
                reason: "isolated singular points with undetermined Milnor numbers".into(),
            }),
        },
        Ok(_) => Err(TheoremsError::DegenerateStratum {
            subset: subset.to_vec(),
            reason: "positive-dimensional singular locus on the torus".into(),
        }),
        Err(e) => Err(TheoremsError::DegenerateStratum {
            subset: subset.to_vec(),
            reason: e.to_string(),
        }),
    }
}

/// Euler characteristic of the complement of the arrangement by
/// inclusion–exclusion over the strata. Isolated singular points of a single
/// hypersurface on the torus are absorbed by a Milnor correction; any other
/// failing or undecided face check aborts with the offending stratum.
pub fn euler_complement(sys: &LaurentSystem) -> Result<EulerReport, TheoremsError> {
    let k = sys.len();
    assert!(k < 63, "subset enumeration uses a 64-bit mask");
    let mut chi_strata = vec![(Vec::new(), Int::zero())];
    let mut total = Int::zero();
    let mut conditional = false;
    let mut milnor_corrected = Vec::new();
    for mask in 1u64..(1 << k) {
        let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let (chi, assumed, corrected) = stratum_chi(sys, &subset)?;
        conditional |= assumed;
        if corrected {
            milnor_corrected.push(subset[0]);
        }
        total += sign_pow(subset.len()) * &chi;
        chi_strata.push((subset, chi));
    }
    Ok(EulerReport { chi_strata, chi_complement: total, conditional, milnor_corrected })
}

/// Whether `a` and `b` are equal up to a positive rational dilation and a
/// translation — the equivalence relation generated by dilations and lattice
/// translations (their closure under composition already reaches every
/// rational translation). Vertices are compared after anchoring both
/// polytopes at their lexicographically first vertex; a positive scale
/// preserves the lexicographic vertex order, so the anchored lists must be
/// proportional entrywise.
pub fn similar_polytopes(a: &LatticePolytope, b: &LatticePolytope) -> bool {
    if a.ambient_dim() != b.ambient_dim() || a.vertices().len() != b.vertices().len() {
        return false;
    }
    let a0 = &a.vertices()[0];
    let b0 = &b.vertices()[0];
    let va: Vec<IntVec> = a.vertices().iter().map(|v| v.sub(a0)).collect();
    let vb: Vec<IntVec> = b.vertices().iter().map(|v| v.sub(b0)).collect();
    // Scale candidate num/den from the first nonzero coordinate of `va`.
    let ratio = va.iter().zip(&vb).find_map(|(x, y)| {
        x.0.iter()
            .zip(&y.0)
            .find_map(|(xc, yc)| (!xc.is_zero()).then(|| (yc.clone(), xc.clone())))
    });
    let Some((num, den)) = ratio else {
        return true; // a single point is similar to any other point
    };
    if num.is_zero() || ((num < Int::zero()) != (den < Int::zero())) {
        return false;
    }
    va.iter().zip(&vb).all(|(x, y)| {
        x.0.iter().zip(&y.0).all(|(xc, yc)| yc * &den == xc * &num)
    })
}

/// Critical-point cross-check for a Laurent polynomial `h` in one or two
/// variables: for each trial, a random interior rational point `a` of the
/// Newton polytope twists `h` into `h·x^{−a}`, whose critical points on the
/// torus solve `S·θ_j h − N_j·h = 0` after clearing the denominator of
/// `a = N/S`. The distinct-solution count is compared against the
/// normalized volume of the Newton polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseReport {
    pub expected: Int,
    pub trials: usize,
    pub matches: usize,
    /// Per-trial distinct critical-point count; `None` when elimination
    /// found a positive-dimensional critical set or could not decide.
    pub counts: Vec<Option<usize>>,
}

pub fn verify_morse_count(
    h: &LaurentPoly,
    trials: usize,
    seed: u64,
) -> Result<MorseReport, TheoremsError> {
    let n = h.vars();
    if n == 0 || n > 2 {
        return Err(TheoremsError::EliminationRange { vars: n });
    }
    if h.is_zero() {
        return Err(TheoremsError::ZeroPolynomial);
    }
    let np = h.newton_polytope()?;
    let expected = normalized_volume(&np);
    if h.is_monomial() {
        // The twist of a monomial by its own exponent is constant: no
        // critical points, matching the zero volume of a point.
        return Ok(MorseReport {
            expected,
            trials,
            matches: trials,
            counts: vec![Some(0); trials],
        });
    }
    let verts = np.vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = Vec::with_capacity(trials);
    let mut matches = 0usize;
    for _ in 0..trials {
        // a = Σ w_v·v / Σ w_v with positive weights: an interior point.
        let weights: Vec<Int> = verts.iter().map(|_| Int::from(rng.gen_range(1..=9i64))).collect();
        let scale: Int = weights.iter().sum();
        let scale_g = gauss_int(&scale);
        let count = (0..n)
            .map(|j| {
                let num: Int = verts
                    .iter()
                    .zip(&weights)
                    .map(|(v, w)| &v.0[j] * w)
                    .sum();
                h.log_deriv(j).scalar_mul(&scale_g).sub(&h.scalar_mul(&gauss_int(&num)))
            })
            .collect::<Vec<LaurentPoly>>();
        let count = if n == 1 {
            let g = &count[0];
            if g.is_zero() {
                None
            } else {
                UPoly::from_laurent(&g.shift_to_origin().0)
                    .map(|u| u.distinct_nonzero_root_count())
            }
        } else {
            torus_zero_count(&count).count()
        };
        if count.map(Int::from) == Some(expected.clone()) {
            matches += 1;
        }
        counts.push(count);
    }
    Ok(MorseReport { expected, trials, matches, counts })
}

// ---------------------------------------------------------------------------
// Hypothesis legs
// ---------------------------------------------------------------------------

/// Accumulates many sub-checks into one hypothesis leg: a failure wins over
/// an undecided check, which wins over assumed-generic, which wins over pass.
struct Agg {
    n: usize,
    fail: Option<String>,
    undecided: Option<String>,
    assumed: bool,
}

impl Agg {
    fn new() -> Self {
        Agg { n: 0, fail: None, undecided: None, assumed: false }
    }

    fn push(&mut self, status: CheckStatus, context: impl FnOnce() -> String) {
        self.n += 1;
        match status {
            CheckStatus::Pass => {}
            CheckStatus::AssumedGeneric => self.assumed = true,
            CheckStatus::Fail => {
                if self.fail.is_none() {
                    self.fail = Some(context());
                }
            }
            CheckStatus::Undecided => {
                if self.undecided.is_none() {
                    self.undecided = Some(context());
                }
            }
        }
    }

    fn leg(self, name: &str) -> HypothesisCheck {
        let (status, detail) = if let Some(ctx) = self.fail {
            (CheckStatus::Fail, format!("fails at {ctx}"))
        } else if let Some(ctx) = self.undecided {
            (CheckStatus::Undecided, format!("undecided at {ctx}"))
        } else if self.assumed {
            (
                CheckStatus::AssumedGeneric,
                format!("{} checks, some on assumed-generic coefficients", self.n),
            )
        } else {
            (CheckStatus::Pass, format!("{} checks passed", self.n))
        };
        HypothesisCheck { name: name.into(), status, detail }
    }
}

fn bool_leg(name: &str, pass: bool, detail: String) -> HypothesisCheck {
    HypothesisCheck {
        name: name.into(),
        status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
        detail,
    }
}

fn generic_parameter_leg() -> HypothesisCheck {
    HypothesisCheck {
        name: "generic parameter vector".into(),
        status: CheckStatus::AssumedGeneric,
        detail: "the statement holds for generic parameters; the given vector is assumed generic"
            .into(),
    }
}

fn dim_delta_leg(sys: &LaurentSystem) -> HypothesisCheck {
    let d = sys.delta().dim();
    let n0 = sys.torus_dim();
    bool_leg(
        "dim Delta = n - k",
        d == n0,
        format!("dim Delta = {d}, torus dimension = {n0}"),
    )
}

fn dims_each_leg(sys: &LaurentSystem, name: &str) -> HypothesisCheck {
    let n0 = sys.torus_dim();
    let dims: Vec<usize> = sys.newton_polytopes().iter().map(|p| p.dim()).collect();
    bool_leg(
        name,
        dims.iter().all(|&d| d == n0),
        format!("polytope dimensions {dims:?}, torus dimension = {n0}"),
    )
}

fn nonresonance_leg(sys: &LaurentSystem, c: &ParameterVector) -> HypothesisCheck {
    let supports: Vec<Vec<IntVec>> = sys.parts().iter().map(|p| p.support()).collect();
    match check_nonresonance(&supports, c) {
        Ok(v) if v.nonresonant => bool_leg(
            "nonresonant parameter",
            true,
            format!("{} facet pairings, none integral", v.certificates.len()),
        ),
        Ok(v) => {
            let f = v.failing_facets().next().expect("a resonant verdict has a failing facet");
            bool_leg(
                "nonresonant parameter",
                false,
                format!("integral pairing {} on the facet with conormal {:?}", f.pairing, f.conormal.0),
            )
        }
        Err(e) => HypothesisCheck {
            name: "nonresonant parameter".into(),
            status: CheckStatus::Undecided,
            detail: format!("not evaluated: {e}"),
        },
    }
}

fn nondeg_leg(sys: &LaurentSystem, level: Level) -> HypothesisCheck {
    let name = match level {
        Level::Weak => "weakly non-degenerate",
        Level::Strong => "strongly non-degenerate",
    };
    match sys.check(level) {
        Ok(rep) => {
            let mut agg = Agg::new();
            for ch in &rep.checks {
                agg.push(ch.status, || {
                    format!("face {:?} subset {:?}", ch.face.vertex_set, ch.subset)
                });
            }
            agg.leg(name)
        }
        Err(e) => HypothesisCheck {
            name: name.into(),
            status: CheckStatus::Undecided,
            detail: format!("not evaluated: {e}"),
        },
    }
}

/// Aggregated non-degenerate-complete-intersection status of a full system:
/// the rank check of the whole tuple on every face of its Minkowski sum,
/// including the torus itself.
fn ndci_agg(parts: &[PolyData]) -> Agg {
    let mut agg = Agg::new();
    let sub = match LaurentSystem::new(parts.to_vec()) {
        Ok(s) => s,
        Err(e) => {
            agg.push(CheckStatus::Undecided, || e.to_string());
            return agg;
        }
    };
    let full: Vec<usize> = (0..parts.len()).collect();
    for face in sub.delta().faces() {
        let fc = sub.check_pair(&face, &full);
        agg.push(fc.status, || format!("face {:?}", face.vertex_set));
    }
    agg
}

/// Whether the zero set of one face part has only isolated singular points,
/// checked in a chart of its own face lattice (a finite cover of the face
/// torus, which preserves isolatedness). Up to one essential variable the
/// zero set is finite, hence automatic; two variables run the exact singular
/// locus; more are out of the exact range.
fn face_isolated_status(part: &PolyData, witness: &IntVec, n0: usize) -> (CheckStatus, String) {
    let sup = part.support();
    let m = sup.iter().map(|v| witness.dot(v)).min().expect("supports are nonempty");
    let fs: Vec<IntVec> = sup.into_iter().filter(|v| witness.dot(v) == m).collect();
    let dirs: Vec<IntVec> = fs[1..].iter().map(|v| v.sub(&fs[0])).collect();
    let basis = saturation_basis(&dirs, n0);
    let d = basis.len();
    if d == 0 {
        return (CheckStatus::Pass, "monomial face part".into());
    }
    if part.is_generic() {
        return (
            CheckStatus::AssumedGeneric,
            format!("{d} essential variables with generic coefficients"),
        );
    }
    if d == 1 {
        return (CheckStatus::Pass, "zero-dimensional zero locus".into());
    }
    if d > 2 {
        return (
            CheckStatus::Undecided,
            format!("{d} essential variables exceed the exact range"),
        );
    }
    let poly = part.exact().expect("non-generic data is exact");
    let h = poly
        .face_restriction(witness)
        .in_chart(&fs[0], &basis)
        .expect("a face part lies in the chart of its own face");
    match singular_locus_hypersurface(&h) {
        Ok(rep) if rep.isolated => (
            CheckStatus::Pass,
            format!("{} isolated singular points", rep.singular_points.len()),
        ),
        Ok(_) => (CheckStatus::Fail, "positive-dimensional singular locus".into()),
        Err(e) => (CheckStatus::Undecided, e.to_string()),
    }
}

/// Whether the zero set of one polynomial on the full torus has only
/// isolated singular points.
fn torus_isolated_status(part: &PolyData) -> (CheckStatus, String) {
    if part.is_generic() {
        return (CheckStatus::AssumedGeneric, "generic coefficients".into());
    }
    let poly = part.exact().expect("non-generic data is exact");
    match singular_locus_hypersurface(poly) {
        Ok(rep) if rep.isolated => (
            CheckStatus::Pass,
            format!("{} isolated singular points", rep.singular_points.len()),
        ),
        Ok(_) => (CheckStatus::Fail, "positive-dimensional singular locus".into()),
        Err(e) => (CheckStatus::Undecided, e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Dimension formulas
// ---------------------------------------------------------------------------

enum MuSum {
    Known(Int),
    Unknown(String),
}

/// Total Milnor number of the torus singular points of one hypersurface,
/// cross-checked against externally supplied values when both are known.
fn milnor_total(part: &PolyData, supplied: Option<&[usize]>) -> Result<MuSum, TheoremsError> {
    if part.is_generic() {
        // Generic coefficients give a smooth hypersurface; the verdict is
        // already conditional through the assumed-generic rank checks.
        return Ok(MuSum::Known(Int::zero()));
    }
    let poly = part.exact().expect("non-generic data is exact");
    match singular_locus_hypersurface(poly) {
        Ok(rep) => {
            if !rep.isolated {
                return Ok(MuSum::Unknown("a positive-dimensional singular locus".into()));
            }
            match (rep.milnor_numbers, supplied) {
                (Some(computed), Some(given)) => {
                    let mut a = computed.clone();
                    a.sort_unstable();
                    let mut b = given.to_vec();
                    b.sort_unstable();
                    if a != b {
                        return Err(TheoremsError::MilnorMismatch { computed: a, supplied: b });
                    }
                    Ok(MuSum::Known(Int::from(computed.iter().sum::<usize>())))
                }
                (Some(computed), None) => {
                    Ok(MuSum::Known(Int::from(computed.iter().sum::<usize>())))
                }
                (None, Some(given)) => Ok(MuSum::Known(Int::from(given.iter().sum::<usize>()))),
                (None, None) => {
                    Ok(MuSum::Unknown("undetermined for a non-linear residual branch".into()))
                }
            }
        }
        Err(NondegeneracyError::TooManyVariables { .. }) | Err(NondegeneracyError::Undecided(_)) => {
            match supplied {
                Some(given) => Ok(MuSum::Known(Int::from(given.iter().sum::<usize>()))),
                None => Ok(MuSum::Unknown("outside the exact two-variable range".into())),
            }
        }
        Err(e) => Ok(MuSum::Unknown(e.to_string())),
    }
}

/// `(−1)^{n−k}·χ(W)`: the middle Betti number under concentration, derived
/// from the Euler characteristic of the complement. `None` when some stratum
/// is degenerate or undecidable.
fn euler_dimension(sys: &LaurentSystem) -> Option<PredictedDimension> {
    euler_complement(sys)
        .ok()
        .map(|rep| PredictedDimension::EulerDerived(sign_pow(sys.torus_dim()) * rep.chi_complement))
}

// ---------------------------------------------------------------------------
// Per-statement verdict builders
// ---------------------------------------------------------------------------

fn all_pass(hypotheses: &[HypothesisCheck]) -> bool {
    hypotheses
        .iter()
        .all(|h| matches!(h.status, CheckStatus::Pass | CheckStatus::AssumedGeneric))
}

fn finish(
    theorem: Theorem,
    hypotheses: Vec<HypothesisCheck>,
    degree: Option<usize>,
    dimension: Option<PredictedDimension>,
) -> TheoremVerdict {
    let applicable = all_pass(&hypotheses);
    let conditional =
        applicable && hypotheses.iter().any(|h| h.status == CheckStatus::AssumedGeneric);
    TheoremVerdict {
        theorem,
        hypotheses,
        applicable,
        conditional,
        concentration_degree: if applicable { degree } else { None },
        predicted_dimension: if applicable { dimension } else { None },
    }
}

fn vtm_verdict(
    sys: &LaurentSystem,
    c: &ParameterVector,
    supplied_milnor: Option<&[usize]>,
) -> Result<TheoremVerdict, TheoremsError> {
    let n0 = sys.torus_dim();
    let hypotheses = vec![
        bool_leg("single polynomial", sys.len() == 1, format!("k = {}", sys.len())),
        dim_delta_leg(sys),
        nonresonance_leg(sys, c),
        nondeg_leg(sys, Level::Weak),
    ];
    let mut dimension = None;
    if all_pass(&hypotheses) {
        let vol = normalized_volume(sys.delta());
        dimension = Some(match milnor_total(&sys.parts()[0], supplied_milnor)? {
            MuSum::Known(mu) => PredictedDimension::Exact(vol - mu),
            MuSum::Unknown(why) => PredictedDimension::Formula(format!(
                "normalized volume {vol} minus a total Milnor number that is {why}"
            )),
        });
    }
    Ok(finish(Theorem::Vtm, hypotheses, Some(n0), dimension))
}

fn svtm_verdict(sys: &LaurentSystem) -> TheoremVerdict {
    let n0 = sys.torus_dim();
    let mut agg = Agg::new();
    for face in sys.delta().faces() {
        let (status, detail) = face_isolated_status(&sys.parts()[0], &face.witness, n0);
        agg.push(status, || format!("face {:?}: {detail}", face.vertex_set));
    }
    let hypotheses = vec![
        bool_leg("single polynomial", sys.len() == 1, format!("k = {}", sys.len())),
        dim_delta_leg(sys),
        agg.leg("isolated singular points on every face part"),
        generic_parameter_leg(),
    ];
    let dimension = if all_pass(&hypotheses) { euler_dimension(sys) } else { None };
    finish(Theorem::Svtm, hypotheses, Some(n0), dimension)
}

fn mvtm_verdict(sys: &LaurentSystem, c: &ParameterVector) -> TheoremVerdict {
    let n0 = sys.torus_dim();
    let hypotheses = vec![
        bool_leg("at least two polynomials", sys.len() >= 2, format!("k = {}", sys.len())),
        dim_delta_leg(sys),
        nonresonance_leg(sys, c),
        nondeg_leg(sys, Level::Weak),
    ];
    let dimension = if all_pass(&hypotheses) { euler_dimension(sys) } else { None };
    finish(Theorem::Mvtm, hypotheses, Some(n0), dimension)
}

fn smvtm_verdict(sys: &LaurentSystem) -> TheoremVerdict {
    let n0 = sys.torus_dim();
    let k = sys.len();
    let dim_delta = sys.delta().dim();
    let part_refs: Vec<&LatticePolytope> = sys.newton_polytopes().iter().collect();

    let mut torus_agg = Agg::new();
    for (i, part) in sys.parts().iter().enumerate() {
        let (status, detail) = torus_isolated_status(part);
        torus_agg.push(status, || format!("polynomial {i}: {detail}"));
    }

    // Proper faces with a nonempty subset: a single polynomial whose face
    // has the full facet dimension may have isolated face singularities;
    // every other pair must satisfy the rank condition.
    let mut face_agg = Agg::new();
    for face in sys.delta().faces() {
        if face.dim == dim_delta {
            continue;
        }
        let gammas = face_decompose(&part_refs, &face);
        for mask in 1u64..(1 << k) {
            let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            let relaxed = subset.len() == 1
                && face.dim + 1 == dim_delta
                && gammas[subset[0]].dim == face.dim;
            if relaxed {
                let (status, detail) =
                    face_isolated_status(&sys.parts()[subset[0]], &face.witness, n0);
                face_agg.push(status, || {
                    format!("facet {:?} polynomial {}: {detail}", face.vertex_set, subset[0])
                });
            } else {
                let fc = sys.check_pair(&face, &subset);
                face_agg.push(fc.status, || {
                    format!("face {:?} subset {subset:?}", face.vertex_set)
                });
            }
        }
    }

    let hypotheses = vec![
        bool_leg("at least two polynomials", k >= 2, format!("k = {k}")),
        dim_delta_leg(sys),
        torus_agg.leg("isolated singular points on each torus hypersurface"),
        face_agg.leg("face parts: isolated singular points or rank conditions"),
        generic_parameter_leg(),
    ];
    let dimension = if all_pass(&hypotheses) { euler_dimension(sys) } else { None };
    finish(Theorem::Smvtm, hypotheses, Some(n0), dimension)
}

fn ssmvtm_verdict(sys: &LaurentSystem) -> TheoremVerdict {
    let n0 = sys.torus_dim();
    let k = sys.len();
    let dim_delta = sys.delta().dim();
    let polys = sys.newton_polytopes();

    let mut similar = Agg::new();
    for i in 0..k {
        for j in i + 1..k {
            let ok = similar_polytopes(&polys[i], &polys[j]);
            similar.push(
                if ok { CheckStatus::Pass } else { CheckStatus::Fail },
                || format!("polytopes {i} and {j} are not dilate-translates"),
            );
        }
    }

    let mut isolated = Agg::new();
    for face in sys.delta().faces() {
        for (i, part) in sys.parts().iter().enumerate() {
            let (status, detail) = face_isolated_status(part, &face.witness, n0);
            isolated.push(status, || {
                format!("face {:?} polynomial {i}: {detail}", face.vertex_set)
            });
        }
    }

    let mut pairwise = Agg::new();
    for face in sys.delta().faces() {
        if face.dim == dim_delta {
            continue;
        }
        for mask in 1u64..(1 << k) {
            if (mask.count_ones() as usize) < 2 {
                continue;
            }
            let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            let fc = sys.check_pair(&face, &subset);
            pairwise.push(fc.status, || {
                format!("face {:?} subset {subset:?}", face.vertex_set)
            });
        }
    }

    let hypotheses = vec![
        bool_leg("at least two polynomials", k >= 2, format!("k = {k}")),
        dim_delta_leg(sys),
        similar.leg("similar Newton polytopes"),
        isolated.leg("isolated singular points on every face part of every polynomial"),
        pairwise.leg("multi-polynomial face intersections non-degenerate"),
        generic_parameter_leg(),
    ];
    let dimension = if all_pass(&hypotheses) { euler_dimension(sys) } else { None };
    finish(Theorem::Ssmvtm, hypotheses, Some(n0), dimension)
}

fn ntm_verdict(sys: &LaurentSystem, c: &ParameterVector) -> TheoremVerdict {
    let n0 = sys.torus_dim();
    let hypotheses = vec![
        dims_each_leg(sys, "dim Delta_i = n - k for every i"),
        nondeg_leg(sys, Level::Strong),
        bool_leg(
            "(c, c~) not integral",
            check_c_not_integer(c),
            if check_c_not_integer(c) {
                "some entry is not an integer".into()
            } else {
                "every entry is an integer".into()
            },
        ),
    ];
    let dimension = if all_pass(&hypotheses) { euler_dimension(sys) } else { None };
    finish(Theorem::Ntm, hypotheses, Some(n0), dimension)
}

fn nvtm_verdict(sys: &LaurentSystem, c: &ParameterVector) -> TheoremVerdict {
    let n0 = sys.torus_dim();
    let k = sys.len();
    let nontrivial = c.entries().take(c.torus_dim()).any(|z| !is_integer(z));
    let mut hypotheses = vec![
        bool_leg("at most n polynomials", k <= n0, format!("k = {k}, n = {n0}")),
        dims_each_leg(sys, "dim Delta_i = n for every i"),
        bool_leg(
            "non-trivial rank-one local system",
            nontrivial,
            if nontrivial {
                "some torus entry is not an integer".into()
            } else {
                "all torus entries are integers: the local system is trivial".into()
            },
        ),
    ];
    for i in 1..=k {
        hypotheses.push(
            ndci_agg(&sys.parts()[..i])
                .leg(&format!("non-degenerate intersection of the first {i} polynomial(s)")),
        );
    }
    let mut dimension = None;
    if all_pass(&hypotheses) {
        let refs: Vec<&LatticePolytope> = sys.newton_polytopes().iter().collect();
        dimension = nvtm_dimension(&refs).ok().map(PredictedDimension::Exact);
    }
    finish(Theorem::Nvtm, hypotheses, Some(n0.saturating_sub(k)), dimension)
}

fn bkk_verdict(sys: &LaurentSystem) -> TheoremVerdict {
    let n0 = sys.torus_dim();
    let k = sys.len();
    let hypotheses = vec![
        bool_leg("at most n polynomials", k <= n0, format!("k = {k}, n = {n0}")),
        ndci_agg(sys.parts()).leg("non-degenerate complete intersection"),
    ];
    let mut dimension = None;
    if all_pass(&hypotheses) {
        let refs: Vec<&LatticePolytope> = sys.newton_polytopes().iter().collect();
        // For this verdict the predicted value is the signed point count
        // χ(Z), not a Betti number; there is no concentration degree.
        dimension = bkk_euler(&refs).ok().map(PredictedDimension::Exact);
    }
    finish(Theorem::Bkk, hypotheses, None, dimension)
}

/// Check the hypotheses of one statement — or, without a target, of every
/// statement matching the system shape in the fixed order NTM, MVTM/VTM,
/// NVTM, then the generic-parameter variants — and return the verdicts.
/// The dispatch is deterministic: identical inputs give identical verdicts.
pub fn predict(
    sys: &LaurentSystem,
    c: &ParameterVector,
    options: &PredictOptions,
) -> Result<Vec<TheoremVerdict>, TheoremsError> {
    if c.torus_dim() != sys.torus_dim() || c.poly_count() != sys.len() {
        return Err(TheoremsError::ParameterShape {
            torus: sys.torus_dim(),
            poly: sys.len(),
            got_torus: c.torus_dim(),
            got_poly: c.poly_count(),
        });
    }
    let supplied = options.supplied_milnor.as_deref();
    let k = sys.len();
    let verdicts = match options.target {
        Some(Theorem::Vtm) => vec![vtm_verdict(sys, c, supplied)?],
        Some(Theorem::Svtm) => vec![svtm_verdict(sys)],
        Some(Theorem::Mvtm) => vec![mvtm_verdict(sys, c)],
        Some(Theorem::Smvtm) => vec![smvtm_verdict(sys)],
        Some(Theorem::Ssmvtm) => vec![ssmvtm_verdict(sys)],
        Some(Theorem::Ntm) => vec![ntm_verdict(sys, c)],
        Some(Theorem::Nvtm) => vec![nvtm_verdict(sys, c)],
        Some(Theorem::Bkk) => vec![bkk_verdict(sys)],
        None => {
            let mut out = vec![ntm_verdict(sys, c)];
            if k >= 2 {
                out.push(mvtm_verdict(sys, c));
            } else {
                out.push(vtm_verdict(sys, c, supplied)?);
            }
            out.push(nvtm_verdict(sys, c));
            if k == 1 {
                out.push(svtm_verdict(sys));
            } else {
                out.push(smvtm_verdict(sys));
                out.push(ssmvtm_verdict(sys));
            }
            out
        }
    };
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nonresonance::Convention;

    fn iv(v: &[i64]) -> IntVec {
        IntVec::from_i64(v)
    }

    fn gr(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn q(num: i64, den: i64) -> GaussRat {
        GaussRat::from_rat(Rat::new(Int::from(num), Int::from(den)))
    }

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<IntVec> = pts.iter().map(|p| iv(p)).collect();
        LatticePolytope::hull(&pts).unwrap()
    }

    fn lp(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(v, a)| (iv(v), gr(*a))))
    }

    fn system(polys: Vec<LaurentPoly>) -> LaurentSystem {
        LaurentSystem::new(polys.into_iter().map(PolyData::Exact).collect()).unwrap()
    }

    fn params(torus: &[GaussRat], poly: &[GaussRat], convention: Convention) -> ParameterVector {
        ParameterVector::new(torus.to_vec(), poly.to_vec(), convention)
    }

    fn unit_square_poly() -> LaurentPoly {
        lp(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 3)])
    }

    fn double_root() -> LaurentPoly {
        lp(1, &[(&[0], 1), (&[1], 2), (&[2], 1)])
    }

    fn assert_invariants(v: &TheoremVerdict) {
        let pass = v
            .hypotheses
            .iter()
            .all(|h| matches!(h.status, CheckStatus::Pass | CheckStatus::AssumedGeneric));
        assert_eq!(v.applicable, pass, "{v:?}");
        if !v.applicable {
            assert!(v.concentration_degree.is_none());
            assert!(v.predicted_dimension.is_none());
            assert!(!v.conditional);
        }
        if v.conditional {
            assert!(v.hypotheses.iter().any(|h| h.status == CheckStatus::AssumedGeneric));
        }
    }

    #[test]
    fn bkk_fixture_values() {
        let square = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let simplex = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let segment = poly(&[&[0], &[4]]);
        assert_eq!(bkk_euler(&[&square]).unwrap(), Int::from(-2));
        assert_eq!(bkk_euler(&[&simplex, &square]).unwrap(), Int::from(2));
        assert_eq!(bkk_euler(&[&segment]).unwrap(), Int::from(4));
        assert_eq!(
            bkk_euler(&[&segment, &segment]),
            Err(TheoremsError::TooManyEquations { p: 2, n: 1 })
        );
    }

    #[test]
    fn nvtm_dimension_matches_signed_euler_count() {
        let square = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let big = poly(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        assert_eq!(nvtm_dimension(&[&square]).unwrap(), Int::from(2));
        assert_eq!(nvtm_dimension(&[&square, &square]).unwrap(), Int::from(2));
        assert_eq!(nvtm_dimension(&[&square, &big]).unwrap(), Int::from(4));
        // Structural sign relation with the Euler count: for p polytopes in
        // dimension n, the signed count is (−1)^{n−p} times this dimension.
        for parts in [vec![&square], vec![&square, &big]] {
            let n = 2;
            let p = parts.len();
            assert_eq!(
                bkk_euler(&parts).unwrap(),
                sign_pow(n + p) * nvtm_dimension(&parts).unwrap()
            );
        }
        let seg = poly(&[&[0, 0], &[1, 0]]);
        assert!(matches!(
            nvtm_dimension(&[&seg]),
            Err(TheoremsError::NotFullDimensional { index: 0, dim: 1, ambient: 2 })
        ));
    }

    #[test]
    fn euler_complement_of_a_smooth_curve() {
        let sys = system(vec![unit_square_poly()]);
        let rep = euler_complement(&sys).unwrap();
        assert_eq!(rep.chi_complement, Int::from(2));
        assert_eq!(
            rep.chi_strata,
            vec![(vec![], Int::zero()), (vec![0], Int::from(-2))]
        );
        assert!(!rep.conditional);
        assert!(rep.milnor_corrected.is_empty());
    }

    #[test]
    fn euler_complement_corrects_for_a_double_root() {
        let sys = system(vec![double_root()]);
        let rep = euler_complement(&sys).unwrap();
        // Two roots counted by volume collapse to one point: χ(Z) = 1.
        assert_eq!(rep.chi_strata[1], (vec![0], Int::from(1)));
        assert_eq!(rep.chi_complement, Int::from(-1));
        assert_eq!(rep.milnor_corrected, vec![0]);
    }

    #[test]
    fn euler_complement_of_two_transverse_lines() {
        let sys = system(vec![
            lp(2, &[(&[0, 0], -2), (&[1, 0], 1), (&[0, 1], 1)]),
            lp(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ]);
        let rep = euler_complement(&sys).unwrap();
        let chi: std::collections::BTreeMap<Vec<usize>, Int> =
            rep.chi_strata.iter().cloned().collect();
        assert_eq!(chi[&vec![0usize]], Int::from(-1));
        assert_eq!(chi[&vec![1usize]], Int::zero());
        assert_eq!(chi[&vec![0usize, 1]], Int::from(1));
        assert_eq!(rep.chi_complement, Int::from(2));
    }

    #[test]
    fn euler_complement_rejects_a_positive_dimensional_singular_locus() {
        // (1 + xy)² is singular along a curve on the torus.
        let f = lp(2, &[(&[0, 0], 1), (&[1, 1], 2), (&[2, 2], 1)]);
        let sys = system(vec![f]);
        let err = euler_complement(&sys).unwrap_err();
        assert!(matches!(err, TheoremsError::DegenerateStratum { .. }));
    }

    #[test]
    fn similarity_accepts_dilates_with_lattice_translation() {
        let square = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let double_shifted = poly(&[&[3, 1], &[5, 1], &[3, 3], &[5, 3]]);
        let triangle = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let rect = poly(&[&[0, 0], &[2, 0], &[0, 1], &[2, 1]]);
        assert!(similar_polytopes(&square, &double_shifted));
        assert!(similar_polytopes(&double_shifted, &square));
        assert!(!similar_polytopes(&square, &triangle));
        assert!(!similar_polytopes(&square, &rect));
        assert!(similar_polytopes(&poly(&[&[2]]), &poly(&[&[7]])));
        // The relation is blind to the anchor: both segments halve to [0,1].
        assert!(similar_polytopes(&poly(&[&[0], &[2]]), &poly(&[&[0], &[1]])));
        assert!(similar_polytopes(&poly(&[&[1], &[3]]), &poly(&[&[0], &[1]])));
        // Negating a segment is just a translation, but a reflected
        // triangle is not a positive dilate-translate of the original.
        assert!(similar_polytopes(
            &poly(&[&[0, 0], &[1, 2]]),
            &poly(&[&[0, 0], &[-1, -2]])
        ));
        assert!(!similar_polytopes(
            &poly(&[&[0, 0], &[1, 0], &[0, 1]]),
            &poly(&[&[0, 0], &[-1, 0], &[0, -1]])
        ));
    }

    #[test]
    fn morse_counts_for_a_segment_and_a_monomial() {
        let h = lp(1, &[(&[0], 1), (&[1], 1)]);
        let rep = verify_morse_count(&h, 5, 11).unwrap();
        assert_eq!(rep.expected, Int::from(1));
        assert_eq!(rep.matches, 5);
        assert_eq!(rep.counts, vec![Some(1); 5]);

        let m = lp(2, &[(&[2, 1], 3)]);
        let rep = verify_morse_count(&m, 4, 0).unwrap();
        assert_eq!(rep.expected, Int::zero());
        assert_eq!(rep.matches, 4);

        assert!(matches!(
            verify_morse_count(&lp(3, &[(&[0, 0, 0], 1)]), 1, 0),
            Err(TheoremsError::EliminationRange { vars: 3 })
        ));
    }

    #[test]
    fn morse_counts_match_the_square_volume() {
        let rep = verify_morse_count(&unit_square_poly(), 6, 42).unwrap();
        assert_eq!(rep.expected, Int::from(2));
        assert_eq!(rep.matches, 6, "{:?}", rep.counts);
    }

    #[test]
    fn auto_dispatch_on_the_double_root_example() {
        let sys = system(vec![double_root()]);
        let c = params(&[q(1, 3)], &[q(1, 2)], Convention::Section3);
        let verdicts = predict(&sys, &c, &PredictOptions::default()).unwrap();
        let order: Vec<Theorem> = verdicts.iter().map(|v| v.theorem).collect();
        assert_eq!(order, vec![Theorem::Ntm, Theorem::Vtm, Theorem::Nvtm, Theorem::Svtm]);
        for v in &verdicts {
            assert_invariants(v);
        }

        // The double root breaks strong non-degeneracy (NTM) and the
        // complete-intersection checks (NVTM), but not the weak hypotheses.
        assert!(!verdicts[0].applicable);
        assert!(!verdicts[2].applicable);

        let vtm = &verdicts[1];
        assert!(vtm.applicable && !vtm.conditional);
        assert_eq!(vtm.concentration_degree, Some(1));
        assert_eq!(vtm.predicted_dimension, Some(PredictedDimension::Exact(Int::from(1))));

        let svtm = &verdicts[3];
        assert!(svtm.applicable && svtm.conditional);
        assert_eq!(svtm.concentration_degree, Some(1));
        assert_eq!(
            svtm.predicted_dimension,
            Some(PredictedDimension::EulerDerived(Int::from(1)))
        );

        // First applicable verdict in AUTO order is the unconditional one.
        let first = verdicts.iter().find(|v| v.applicable).unwrap();
        assert_eq!(first.theorem, Theorem::Vtm);
    }

    #[test]
    fn vtm_dimension_agrees_with_the_signed_euler_characteristic() {
        let sys = system(vec![double_root()]);
        let c = params(&[q(1, 3)], &[q(1, 2)], Convention::Section3);
        let verdicts =
            predict(&sys, &c, &PredictOptions { target: Some(Theorem::Vtm), supplied_milnor: None })
                .unwrap();
        let Some(PredictedDimension::Exact(dim)) = &verdicts[0].predicted_dimension else {
            panic!("expected an exact dimension");
        };
        let chi = euler_complement(&sys).unwrap().chi_complement;
        assert_eq!(dim, &(sign_pow(sys.torus_dim()) * chi));
    }

    #[test]
    fn supplied_milnor_numbers_are_cross_checked() {
        let sys = system(vec![double_root()]);
        let c = params(&[q(1, 3)], &[q(1, 2)], Convention::Section3);
        let ok = predict(
            &sys,
            &c,
            &PredictOptions { target: Some(Theorem::Vtm), supplied_milnor: Some(vec![1]) },
        )
        .unwrap();
        assert_eq!(
            ok[0].predicted_dimension,
            Some(PredictedDimension::Exact(Int::from(1)))
        );
        let err = predict(
            &sys,
            &c,
            &PredictOptions { target: Some(Theorem::Vtm), supplied_milnor: Some(vec![2]) },
        )
        .unwrap_err();
        assert_eq!(
            err,
            TheoremsError::MilnorMismatch { computed: vec![1], supplied: vec![2] }
        );
    }

    #[test]
    fn ntm_requires_a_non_integral_parameter() {
        let sys = system(vec![lp(1, &[(&[0], 1), (&[1], 1)])]);
        let integral = params(&[gr(1)], &[gr(1)], Convention::Section5);
        let v = predict(
            &sys,
            &integral,
            &PredictOptions { target: Some(Theorem::Ntm), supplied_milnor: None },
        )
        .unwrap();
        assert!(!v[0].applicable);
        let failing: Vec<&str> = v[0]
            .hypotheses
            .iter()
            .filter(|h| h.status == CheckStatus::Fail)
            .map(|h| h.name.as_str())
            .collect();
        assert_eq!(failing, vec!["(c, c~) not integral"]);

        let generic = params(&[q(1, 3)], &[q(1, 2)], Convention::Section5);
        let v = predict(
            &sys,
            &generic,
            &PredictOptions { target: Some(Theorem::Ntm), supplied_milnor: None },
        )
        .unwrap();
        assert!(v[0].applicable && !v[0].conditional);
        assert_eq!(v[0].concentration_degree, Some(1));
        // χ(W) = χ(C* minus one point) = −1, so the degree-1 Betti number is 1.
        assert_eq!(
            v[0].predicted_dimension,
            Some(PredictedDimension::EulerDerived(Int::from(1)))
        );
    }

    #[test]
    fn mvtm_on_two_transverse_lines() {
        let sys = system(vec![
            lp(2, &[(&[0, 0], -2), (&[1, 0], 1), (&[0, 1], 1)]),
            lp(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ]);
        let c = params(&[q(1, 5), q(1, 7)], &[q(1, 3), q(1, 11)], Convention::Section3);
        let verdicts = predict(&sys, &c, &PredictOptions::default()).unwrap();
        let order: Vec<Theorem> = verdicts.iter().map(|v| v.theorem).collect();
        assert_eq!(
            order,
            vec![Theorem::Ntm, Theorem::Mvtm, Theorem::Nvtm, Theorem::Smvtm, Theorem::Ssmvtm]
        );
        for v in &verdicts {
            assert_invariants(v);
        }

        let mvtm = &verdicts[1];
        assert!(mvtm.applicable, "{:?}", mvtm.hypotheses);
        assert!(!mvtm.conditional);
        assert_eq!(mvtm.concentration_degree, Some(2));
        assert_eq!(
            mvtm.predicted_dimension,
            Some(PredictedDimension::EulerDerived(Int::from(2)))
        );

        // A triangle and a segment are not similar polytopes.
        let ssmvtm = &verdicts[4];
        assert!(!ssmvtm.applicable);
        assert!(ssmvtm
            .hypotheses
            .iter()
            .any(|h| h.name == "similar Newton polytopes" && h.status == CheckStatus::Fail));

        // NVTM rejects the segment polytope for not being full-dimensional.
        assert!(!verdicts[2].applicable);
    }

    #[test]
    fn nvtm_on_full_dimensional_hypersurfaces() {
        let sys = system(vec![unit_square_poly()]);
        let c = params(&[q(1, 2), q(1, 3)], &[gr(0)], Convention::Section3);
        let v = predict(
            &sys,
            &c,
            &PredictOptions { target: Some(Theorem::Nvtm), supplied_milnor: None },
        )
        .unwrap();
        assert!(v[0].applicable, "{:?}", v[0].hypotheses);
        assert_eq!(v[0].concentration_degree, Some(1));
        assert_eq!(v[0].predicted_dimension, Some(PredictedDimension::Exact(Int::from(2))));

        // An integral torus parameter makes the local system trivial.
        let trivial = params(&[gr(2), gr(0)], &[gr(0)], Convention::Section3);
        let v = predict(
            &sys,
            &trivial,
            &PredictOptions { target: Some(Theorem::Nvtm), supplied_milnor: None },
        )
        .unwrap();
        assert!(!v[0].applicable);
    }

    #[test]
    fn ssmvtm_on_two_squares() {
        let sys = system(vec![
            unit_square_poly(),
            lp(2, &[(&[0, 0], 2), (&[1, 0], 5), (&[0, 1], 7), (&[1, 1], 11)]),
        ]);
        let c = params(&[q(1, 5), q(1, 7)], &[q(1, 3), q(1, 11)], Convention::Section3);
        let verdicts = predict(&sys, &c, &PredictOptions::default()).unwrap();
        let ssmvtm = verdicts.iter().find(|v| v.theorem == Theorem::Ssmvtm).unwrap();
        assert!(ssmvtm.applicable, "{:?}", ssmvtm.hypotheses);
        assert!(ssmvtm.conditional);
        assert_eq!(ssmvtm.concentration_degree, Some(2));
        // χ(W) = 0 − (−2) − (−2) + 2 = 6 for two smooth transverse curves.
        assert_eq!(
            ssmvtm.predicted_dimension,
            Some(PredictedDimension::EulerDerived(Int::from(6)))
        );
        for v in &verdicts {
            assert_invariants(v);
        }
    }

    #[test]
    fn bkk_target_reports_the_signed_count() {
        let sys = system(vec![unit_square_poly()]);
        let c = params(&[q(1, 2), q(1, 3)], &[gr(0)], Convention::Section3);
        let v = predict(
            &sys,
            &c,
            &PredictOptions { target: Some(Theorem::Bkk), supplied_milnor: None },
        )
        .unwrap();
        assert!(v[0].applicable);
        assert_eq!(v[0].concentration_degree, None);
        assert_eq!(v[0].predicted_dimension, Some(PredictedDimension::Exact(Int::from(-2))));
    }

    #[test]
    fn generic_coefficients_make_verdicts_conditional() {
        let sys = LaurentSystem::new(vec![PolyData::Generic {
            n: 2,
            support: vec![iv(&[0, 0]), iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1])],
        }])
        .unwrap();
        let c = params(&[q(1, 2), q(1, 3)], &[q(1, 5)], Convention::Section3);
        let verdicts = predict(&sys, &c, &PredictOptions::default()).unwrap();
        let vtm = verdicts.iter().find(|v| v.theorem == Theorem::Vtm).unwrap();
        assert!(vtm.applicable && vtm.conditional);
        // Generic coefficients are assumed smooth: the exact volume formula.
        assert_eq!(vtm.predicted_dimension, Some(PredictedDimension::Exact(Int::from(2))));
        for v in &verdicts {
            assert_invariants(v);
        }
    }

    #[test]
    fn parameter_shape_is_validated() {
        let sys = system(vec![double_root()]);
        let c = params(&[q(1, 3), q(1, 5)], &[q(1, 2)], Convention::Section3);
        assert!(matches!(
            predict(&sys, &c, &PredictOptions::default()),
            Err(TheoremsError::ParameterShape { .. })
        ));
    }

    #[test]
    fn predict_is_deterministic() {
        let sys = system(vec![
            lp(2, &[(&[0, 0], -2), (&[1, 0], 1), (&[0, 1], 1)]),
            lp(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ]);
        let c = params(&[q(1, 5), q(1, 7)], &[q(1, 3), q(1, 11)], Convention::Section3);
        let a = predict(&sys, &c, &PredictOptions::default()).unwrap();
        let b = predict(&sys, &c, &PredictOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.to_string().parse::<Theorem>().unwrap(), t);
            assert_eq!(t.to_string().to_lowercase().parse::<Theorem>().unwrap(), t);
        }
        assert!("xyz".parse::<Theorem>().is_err());
    }
}
