//! Local Newton polyhedron data at the origin and the induced
//! monodromy-eigenvalue bound.
//!
//! For `f` in `n` variables with support in `ℤ₊ⁿ \ {0}`, every coordinate
//! subset `I` containing the last variable restricts the Newton polyhedron
//! `Γ₊(f) = conv(supp f) + ℝ₊ⁿ` to `Γ₊(f) ∩ ℝ₊^I`, which equals the Newton
//! polyhedron of the terms supported on `I`. Each compact facet of a
//! restriction carries a unique primitive inner conormal `u` (strictly
//! positive on `I`), its lattice distance `d = min ⟨u, supp⟩ ≥ 1` from the
//! origin, and the last-coordinate weight `δ = u_n ≥ 1`. The eigenvalue
//! bound is the union of the root sets `{λ : λ^d = exp(2πi·β·δ)}`, kept
//! exact as congruence pairs `(d, β·δ)` — membership of `λ = exp(2πi·q)`
//! is the integrality test `q·d − β·δ ∈ ℤ`.

use crate::arith::{GaussRat, Int, IntVec};
use crate::laurent::LaurentPoly;
use crate::nondegeneracy::{NewtonOriginReport, OverallVerdict};
use crate::nonresonance::NonresonanceVerdict;
use crate::polytope::LatticePolyhedron;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectrumError {
    #[error(
        "the local Newton polyhedron needs a nonzero polynomial with nonnegative exponents and no constant term"
    )]
    NotLocalAtOrigin,
}

/// One compact facet of a coordinate restriction of the Newton polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetDatum {
    /// The coordinate subset `I` (sorted, 0-based, contains the last
    /// variable).
    pub subset: Vec<usize>,
    /// Support points of `f` on the facet, in ambient coordinates.
    pub points: Vec<IntVec>,
    /// Primitive inner conormal in ambient coordinates, zero off `subset`
    /// and strictly positive on it.
    pub conormal: IntVec,
    /// Lattice distance `d = min ⟨conormal, supp⟩ ≥ 1` from the origin.
    pub distance: Int,
    /// `δ`: the last coordinate of the conormal.
    pub last_weight: Int,
}

/// The Newton polyhedron of `f` at the origin together with the compact
/// facet data of every coordinate restriction that matters for the
/// eigenvalue bound.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    dim: usize,
    support: Vec<IntVec>,
    facets: Vec<FacetDatum>,
}

impl NewtonPolyhedron {
    /// Requires `supp(f) ⊂ ℤ₊ⁿ` and no constant term (`f(0) = 0`).
    pub fn from_poly(f: &LaurentPoly) -> Result<Self, SpectrumError> {
        if f.is_zero() {
            return Err(SpectrumError::NotLocalAtOrigin);
        }
        let n = f.vars();
        let zero = Int::from(0);
        let support = f.support();
        for v in &support {
            if v.0.iter().any(|x| x < &zero) || v.is_zero() {
                return Err(SpectrumError::NotLocalAtOrigin);
            }
        }
        let last = n - 1;
        let mut facets = Vec::new();
        // Subsets of {0, …, n−2}, each augmented by the mandatory last
        // variable.
        assert!(n < 32, "coordinate-subset enumeration limited to < 32 variables");
        for mask in 0u32..(1u32 << last) {
            let subset: Vec<usize> =
                (0..last).filter(|i| mask >> i & 1 == 1).chain([last]).collect();
            let restricted: Vec<&IntVec> = support
                .iter()
                .filter(|v| {
                    (0..n).all(|i| subset.contains(&i) || v.0[i] == zero)
                })
                .collect();
            if restricted.is_empty() {
                continue;
            }
            let projected: Vec<IntVec> = restricted
                .iter()
                .map(|v| IntVec(subset.iter().map(|&i| v.0[i].clone()).collect()))
                .collect();
            let rays: Vec<IntVec> = (0..subset.len())
                .map(|j| {
                    let mut e = IntVec::zero(subset.len());
                    e.0[j] = Int::from(1);
                    e
                })
                .collect();
            let polyhedron = LatticePolyhedron::new(&projected, &rays)
                .expect("points plus the full orthant are full-dimensional");
            for facet in polyhedron.facets() {
                if !facet.is_compact() {
                    continue;
                }
                let mut conormal = IntVec::zero(n);
                for (j, &i) in subset.iter().enumerate() {
                    conormal.0[i] = facet.conormal.0[j].clone();
                }
                let last_weight = conormal.0[last].clone();
                debug_assert!(
                    subset.iter().all(|&i| conormal.0[i] > zero),
                    "compact facet conormals are strictly positive on the subset"
                );
                debug_assert!(facet.offset >= Int::from(1));
                debug_assert!(last_weight <= facet.offset, "δ never exceeds d");
                facets.push(FacetDatum {
                    subset: subset.clone(),
                    points: facet
                        .points_on
                        .iter()
                        .map(|&idx| {
                            // Map the deduplicated polyhedron point back to
                            // ambient coordinates.
                            let mut p = IntVec::zero(n);
                            for (j, &i) in subset.iter().enumerate() {
                                p.0[i] = polyhedron.points()[idx].0[j].clone();
                            }
                            p
                        })
                        .collect(),
                    conormal,
                    distance: facet.offset.clone(),
                    last_weight,
                });
            }
        }
        facets.sort_by(|a, b| {
            (a.subset.len(), &a.subset, &a.conormal).cmp(&(b.subset.len(), &b.subset, &b.conormal))
        });
        Ok(NewtonPolyhedron { dim: n, support, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &[IntVec] {
        &self.support
    }

    pub fn facets(&self) -> &[FacetDatum] {
        &self.facets
    }
}

/// A finite union of root sets `{λ : λ^d = exp(2πi·phase)}`, kept as exact
/// `(d, phase)` congruence pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueSet {
    pub beta: GaussRat,
    /// Deduplicated `(d, β·δ)` pairs, sorted by `d`.
    pub pairs: Vec<(Int, GaussRat)>,
}

impl EigenvalueSet {
    /// The pair whose congruence `q·d − phase ∈ ℤ` places `exp(2πi·q)` in
    /// the set, if any.
    pub fn violating_pair(&self, q: &GaussRat) -> Option<&(Int, GaussRat)> {
        self.pairs
            .iter()
            .find(|(d, phase)| crate::arith::is_integer(&(&q.scale(d) - phase)))
    }

    /// Does `λ = exp(2πi·q)` belong to the set?
    pub fn contains(&self, q: &GaussRat) -> bool {
        self.violating_pair(q).is_some()
    }
}

/// Bind the boundary order `β` to the facet table: each facet contributes
/// the pair `(d, β·δ)`.
pub fn eigenvalue_set(np: &NewtonPolyhedron, beta: &GaussRat) -> EigenvalueSet {
    let mut pairs: Vec<(Int, GaussRat)> = Vec::new();
    for f in np.facets() {
        let pair = (f.distance.clone(), beta.scale(&f.last_weight));
        if !pairs.contains(&pair) {
            pairs.push(pair);
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    EigenvalueSet { beta: beta.clone(), pairs }
}

/// The three stalk-vanishing hypotheses bundled into one record: the
/// parameter must be nonresonant, the local equation Newton non-degenerate,
/// and the boundary eigenvalue `exp(2πi·q)` outside the bound.
#[derive(Debug, Clone)]
pub struct StalkVanishingVerdict {
    pub nonresonant: bool,
    pub newton_nondegenerate: OverallVerdict,
    pub eigenvalue_excluded: bool,
    /// The offending `(d, phase)` pair when the eigenvalue is not excluded.
    pub offending_pair: Option<(Int, GaussRat)>,
    /// All three hypotheses hold (non-degeneracy possibly by assumption).
    pub vanishing: bool,
}

pub fn stalk_vanishing_check(
    np: &NewtonPolyhedron,
    nonresonance: &NonresonanceVerdict,
    origin: &NewtonOriginReport,
    q: &GaussRat,
    beta: &GaussRat,
) -> StalkVanishingVerdict {
    let es = eigenvalue_set(np, beta);
    let offending_pair = es.violating_pair(q).cloned();
    let eigenvalue_excluded = offending_pair.is_none();
    let nondegenerate = matches!(
        origin.verdict,
        OverallVerdict::Pass | OverallVerdict::ConditionalPass
    );
    StalkVanishingVerdict {
        nonresonant: nonresonance.nonresonant,
        newton_nondegenerate: origin.verdict,
        eigenvalue_excluded,
        offending_pair,
        vanishing: nonresonance.nonresonant && nondegenerate && eigenvalue_excluded,
    }
}
