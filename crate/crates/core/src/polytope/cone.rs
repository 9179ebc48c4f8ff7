//! Pointed-polar cone duality: facet descriptions of cones spanned by
//! finitely many lattice generators, and the stacked cone over several
//! supports that drives the resonance test.

use crate::arith::IntVec;
use crate::polytope::dd::dual_rays;
use crate::polytope::{LatticePolytope, PolytopeError};

/// One facet of a cone: its primitive inner conormal and the generators it
/// contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeFacet {
    pub conormal: IntVec,
    pub generators_on: Vec<usize>,
}

/// A rational polyhedral cone spanned by lattice generators, carrying its
/// full facet description. The generators must span the ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralCone {
    pub ambient_dim: usize,
    pub generators: Vec<IntVec>,
    pub facets: Vec<ConeFacet>,
}

impl PolyhedralCone {
    pub fn from_generators(gens: &[IntVec]) -> Result<Self, PolytopeError> {
        let dim = gens.first().ok_or(PolytopeError::Empty)?.dim();
        if gens.iter().any(|g| g.dim() != dim) {
            return Err(PolytopeError::MixedDimensions);
        }
        let rays = dual_rays(gens, dim)?;
        let facets = rays
            .into_iter()
            .map(|r| ConeFacet {
                generators_on: r.active.ones(gens.len()),
                conormal: r.ray,
            })
            .collect();
        Ok(PolyhedralCone { ambient_dim: dim, generators: gens.to_vec(), facets })
    }

    /// Membership in the closed cone: nonnegative against every facet.
    pub fn contains(&self, u: &IntVec) -> bool {
        self.facets.iter().all(|f| f.conormal.dot(u) >= 0.into())
    }
}

/// The cone over the supports of `k` polytopes in ℝⁿ, stacked into ℝ^{n+k}:
/// generated by every support point of part `i` lifted with selector `e_i`.
/// Errors when the lifted generators do not span ℝ^{n+k}.
pub fn cayley_cone(parts: &[&LatticePolytope]) -> Result<PolyhedralCone, PolytopeError> {
    let k = parts.len();
    let first = parts.first().ok_or(PolytopeError::Empty)?;
    let n = first.ambient_dim();
    let mut gens = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        if p.ambient_dim() != n {
            return Err(PolytopeError::MixedDimensions);
        }
        let mut e = IntVec::zero(k);
        e.0[i] = 1.into();
        for q in p.points() {
            gens.push(q.concat(&e));
        }
    }
    PolyhedralCone::from_generators(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::tests::{iv, poly};

    #[test]
    fn orthant_facets_are_coordinate_hyperplanes() {
        let gens = vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])];
        let c = PolyhedralCone::from_generators(&gens).unwrap();
        let mut conormals: Vec<&IntVec> = c.facets.iter().map(|f| &f.conormal).collect();
        conormals.sort();
        assert_eq!(conormals, vec![&iv(&[0, 0, 1]), &iv(&[0, 1, 0]), &iv(&[1, 0, 0])]);
        assert!(c.contains(&iv(&[2, 3, 1])));
        assert!(!c.contains(&iv(&[-1, 0, 0])));
    }

    #[test]
    fn stacked_cone_over_unit_segment() {
        let b = poly(&[&[0], &[1]]);
        let c = cayley_cone(&[&b]).unwrap();
        let mut conormals: Vec<&IntVec> = c.facets.iter().map(|f| &f.conormal).collect();
        conormals.sort();
        assert_eq!(conormals, vec![&iv(&[-1, 1]), &iv(&[1, 0])]);
    }

    #[test]
    fn stacked_cone_over_unit_square() {
        let b = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let c = cayley_cone(&[&b]).unwrap();
        let mut conormals: Vec<&IntVec> = c.facets.iter().map(|f| &f.conormal).collect();
        conormals.sort();
        assert_eq!(
            conormals,
            vec![&iv(&[-1, 0, 1]), &iv(&[0, -1, 1]), &iv(&[0, 1, 0]), &iv(&[1, 0, 0])]
        );
    }

    #[test]
    fn stacked_cone_of_two_segments_has_selector_facets() {
        let a = poly(&[&[0], &[1]]);
        let b = poly(&[&[0], &[1]]);
        let c = cayley_cone(&[&a, &b]).unwrap();
        let mut conormals: Vec<&IntVec> = c.facets.iter().map(|f| &f.conormal).collect();
        conormals.sort();
        assert_eq!(
            conormals,
            vec![
                &iv(&[-1, 1, 1]),
                &iv(&[0, 0, 1]),
                &iv(&[0, 1, 0]),
                &iv(&[1, 0, 0]),
            ]
        );
        // The two selector facets are the ones whose first block vanishes:
        // they are not induced by any facet of the underlying segments.
        let selector = c
            .facets
            .iter()
            .filter(|f| f.conormal.0[0] == 0.into())
            .count();
        assert_eq!(selector, 2);
    }

    #[test]
    fn degenerate_generators_are_rejected() {
        let gens = vec![iv(&[1, 0]), iv(&[2, 0])];
        assert!(matches!(
            PolyhedralCone::from_generators(&gens),
            Err(PolytopeError::DegenerateCone { rank: 1, dim: 2 })
        ));
    }
}
