//! The resonance test for parameter vectors: every facet of the stacked
//! cone over the supports gets a primitive conormal, and the parameter is
//! resonant on a facet exactly when its pairing with that conormal is an
//! integer. For facets induced by a facet of the Minkowski sum the module
//! also evaluates the boundary-order formula as an independent cross-check.

use std::fmt;

use crate::arith::{is_integer, GaussRat, Int, IntVec};
use crate::polytope::{cayley_cone, minkowski_sum, Face, LatticePolytope, PolytopeError};

/// How the parameter entries were declared. `Twisted` parameters belong to
/// the multivalued function `P₁^{−c̃₁}⋯P_k^{−c̃_k}·x₁^{c₁−1}⋯`, `Plain`
/// parameters to `P₁^{c̃₁}⋯P_k^{c̃_k}·x₁^{c₁}⋯`. All internal tests run in
/// the twisted coordinates; plain input is converted on entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Entries of `P^{−c̃}·x^{c−1}`: used as given.
    Section3,
    /// Entries of `P^{c̃}·x^{c}`: torus entries shift by one, polynomial
    /// entries flip sign.
    Section5,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::Section3 => write!(f, "SECTION3"),
            Convention::Section5 => write!(f, "SECTION5"),
        }
    }
}

/// A parameter vector split into its torus part (one entry per torus
/// coordinate) and its polynomial part (one entry per support).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterVector {
    torus: Vec<GaussRat>,
    poly: Vec<GaussRat>,
    convention: Convention,
}

impl ParameterVector {
    pub fn new(torus: Vec<GaussRat>, poly: Vec<GaussRat>, convention: Convention) -> Self {
        ParameterVector { torus, poly, convention }
    }

    pub fn torus_dim(&self) -> usize {
        self.torus.len()
    }

    pub fn poly_count(&self) -> usize {
        self.poly.len()
    }

    pub fn len(&self) -> usize {
        self.torus.len() + self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn entries(&self) -> impl Iterator<Item = &GaussRat> {
        self.torus.iter().chain(self.poly.iter())
    }

    /// The full vector in the twisted coordinates that the facet pairings
    /// are evaluated in: torus entries first, then polynomial entries.
    pub fn twisted(&self) -> Vec<GaussRat> {
        match self.convention {
            Convention::Section3 => self.entries().cloned().collect(),
            Convention::Section5 => {
                let one = GaussRat::from_int(1);
                self.torus
                    .iter()
                    .map(|c| c + &one)
                    .chain(self.poly.iter().map(|c| -c))
                    .collect()
            }
        }
    }

    /// True when every entry is an ordinary integer. Invariant under the
    /// convention conversion (an integer shift and a sign flip).
    pub fn is_integral(&self) -> bool {
        self.entries().all(is_integer)
    }
}

/// At least one entry is not an integer.
pub fn check_c_not_integer(c: &ParameterVector) -> bool {
    !c.is_integral()
}

/// Data attached to a cone facet that is induced by a facet of the Minkowski
/// sum of the supports: the exposing conormal, the per-part minima, and the
/// boundary order of the multivalued function along the matching divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaFacetData {
    /// The facet of the Minkowski sum, as a face record.
    pub face: Face,
    /// Primitive inner conormal `ν` of that facet.
    pub conormal: IntVec,
    /// `mᵢ = min ⟨ν, ·⟩` over the `i`-th summand.
    pub part_minima: Vec<Int>,
    /// Boundary order `⟨ν, c − 1⟩ − Σ mᵢ·c̃ᵢ` in twisted coordinates.
    pub boundary_order: GaussRat,
}

/// The verdict for one facet of the stacked cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCertificate {
    /// Indices (into the stacked generator list) of generators on the facet.
    pub generators_on: Vec<usize>,
    /// Primitive inner conormal of the facet.
    pub conormal: IntVec,
    /// `⟨conormal, c⟩` in twisted coordinates.
    pub pairing: GaussRat,
    /// Whether the pairing is an integer.
    pub resonant: bool,
    /// Present when the facet comes from a facet of the Minkowski sum
    /// (nonzero torus block); absent for selector facets.
    pub delta_facet: Option<DeltaFacetData>,
}

/// The full resonance report: one certificate per cone facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonresonanceVerdict {
    pub nonresonant: bool,
    pub certificates: Vec<FacetCertificate>,
}

impl NonresonanceVerdict {
    pub fn failing_facets(&self) -> impl Iterator<Item = &FacetCertificate> {
        self.certificates.iter().filter(|c| c.resonant)
    }
}

/// The boundary order `m(γ) = ⟨ν, (c₁−1, …)⟩ − Σ mᵢ·c̃ᵢ` of the multivalued
/// function along the divisor matching the facet `γ` of the Minkowski sum,
/// where `ν` is the primitive inner conormal of `γ` and `mᵢ` its minimum on
/// the `i`-th summand.
pub fn m_gamma(
    parts: &[&LatticePolytope],
    sum: &LatticePolytope,
    gamma: &Face,
    c: &ParameterVector,
) -> Result<GaussRat, PolytopeError> {
    let (nu, _) = sum.facet_conormal(gamma)?;
    Ok(m_gamma_from_conormal(parts, &nu, c))
}

fn m_gamma_from_conormal(
    parts: &[&LatticePolytope],
    nu: &IntVec,
    c: &ParameterVector,
) -> GaussRat {
    let twisted = c.twisted();
    let n0 = c.torus_dim();
    let one = GaussRat::from_int(1);
    let mut order = GaussRat::from_int(0);
    for (coord, entry) in nu.0.iter().zip(&twisted[..n0]) {
        order = &order + &(entry - &one).scale(coord);
    }
    for (part, tilde) in parts.iter().zip(&twisted[n0..]) {
        order = &order - &tilde.scale(&part.min_pairing(nu));
    }
    order
}

/// Decide resonance of `c` against the supports: build the stacked cone
/// over the supports, pair `c` with every primitive facet conormal, and
/// flag integer pairings. Each facet induced by a facet of the Minkowski
/// sum additionally carries the boundary-order cross-check, which must
/// agree with the pairing modulo integers.
pub fn check_nonresonance(
    supports: &[Vec<IntVec>],
    c: &ParameterVector,
) -> Result<NonresonanceVerdict, PolytopeError> {
    assert_eq!(supports.len(), c.poly_count(), "one polynomial entry per support");
    let parts: Vec<LatticePolytope> = supports
        .iter()
        .map(|b| LatticePolytope::hull(b))
        .collect::<Result<_, _>>()?;
    for p in &parts {
        if p.ambient_dim() != c.torus_dim() {
            return Err(PolytopeError::DimensionMismatch {
                expected: c.torus_dim(),
                got: p.ambient_dim(),
            });
        }
    }
    let part_refs: Vec<&LatticePolytope> = parts.iter().collect();
    let cone = cayley_cone(&part_refs)?;
    let sum = minkowski_sum(&part_refs)?;
    let twisted = c.twisted();
    let n0 = c.torus_dim();

    let mut certificates = Vec::with_capacity(cone.facets.len());
    for facet in &cone.facets {
        let pairing = facet.conormal.dot_gauss(&twisted);
        let resonant = is_integer(&pairing);
        let nu = IntVec(facet.conormal.0[..n0].to_vec());
        let delta_facet = if nu.is_zero() {
            None
        } else {
            let face = sum.supporting_face(&nu);
            debug_assert_eq!(
                face.dim + 1,
                sum.dim(),
                "a nonzero torus block must expose a facet of the sum"
            );
            let part_minima: Vec<Int> =
                part_refs.iter().map(|p| p.min_pairing(&nu)).collect();
            // The stacked conormal is exactly (ν, −m₁, …, −m_k).
            debug_assert_eq!(
                facet.conormal,
                nu.concat(&IntVec(part_minima.iter().map(|m| -m.clone()).collect()))
            );
            let boundary_order = m_gamma_from_conormal(&part_refs, &nu, c);
            debug_assert!(
                is_integer(&(&boundary_order - &pairing)),
                "boundary order and facet pairing must agree modulo integers"
            );
            Some(DeltaFacetData { face, conormal: nu, part_minima, boundary_order })
        };
        certificates.push(FacetCertificate {
            generators_on: facet.generators_on.clone(),
            conormal: facet.conormal.clone(),
            pairing,
            resonant,
            delta_facet,
        });
    }
    let nonresonant = certificates.iter().all(|c| !c.resonant);
    Ok(NonresonanceVerdict { nonresonant, certificates })
}
