//! Unbounded lattice polyhedra of the form `conv(points) + cone(rays)`,
//! represented through their homogenization: the cone in ℝ^{d+1} spanned by
//! the points at height one and the rays at height zero. Faces are read off
//! the homogeneous facet structure; a face is compact exactly when it
//! contains no ray generator.

use std::collections::BTreeSet;

use crate::arith::{Int, IntVec};
use crate::polytope::dd::dual_rays;
use crate::polytope::PolytopeError;

/// One facet `⟨conormal, x⟩ ≥ offset` of the polyhedron, with the incident
/// generators listed separately for points and rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedronFacet {
    /// Primitive inner conormal; pairs nonnegatively with every ray.
    pub conormal: IntVec,
    pub offset: Int,
    /// Indices into the defining point list.
    pub points_on: Vec<usize>,
    /// Indices into the defining ray list.
    pub rays_on: Vec<usize>,
}

impl PolyhedronFacet {
    pub fn is_compact(&self) -> bool {
        self.rays_on.is_empty()
    }
}

/// A face of the polyhedron, named by the defining points and rays on it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolyhedronFace {
    pub points_on: Vec<usize>,
    pub rays_on: Vec<usize>,
}

impl PolyhedronFace {
    pub fn is_compact(&self) -> bool {
        self.rays_on.is_empty()
    }
}

/// `conv(points) + cone(rays)` for a nonempty point set; full-dimensional
/// together with the rays (errors otherwise, since the facet description of
/// a lower-dimensional polyhedron lives in a chart this type does not keep).
#[derive(Debug, Clone)]
pub struct LatticePolyhedron {
    ambient_dim: usize,
    points: Vec<IntVec>,
    rays: Vec<IntVec>,
    facets: Vec<PolyhedronFacet>,
}

impl LatticePolyhedron {
    pub fn new(points: &[IntVec], rays: &[IntVec]) -> Result<Self, PolytopeError> {
        let dim = points.first().ok_or(PolytopeError::Empty)?.dim();
        if points.iter().chain(rays).any(|v| v.dim() != dim) {
            return Err(PolytopeError::MixedDimensions);
        }
        let mut points: Vec<IntVec> = points.to_vec();
        points.sort();
        points.dedup();
        let rays = rays.to_vec();
        let one = Int::from(1);
        let zero = Int::from(0);
        let mut gens: Vec<IntVec> = points
            .iter()
            .map(|p| IntVec(p.0.iter().cloned().chain([one.clone()]).collect()))
            .collect();
        gens.extend(
            rays.iter()
                .map(|r| IntVec(r.0.iter().cloned().chain([zero.clone()]).collect())),
        );
        let homogeneous = dual_rays(&gens, dim + 1).map_err(|e| {
            let crate::polytope::dd::ConeError::NotPointed { rank, .. } = e;
            PolytopeError::NotFullDimensional { dim: rank.saturating_sub(1), ambient: dim }
        })?;
        let n_points = points.len();
        let mut facets = Vec::new();
        for ray in homogeneous {
            let conormal = IntVec(ray.ray.0[..dim].to_vec());
            if conormal.is_zero() {
                // The height facet: the recession structure, not a facet of
                // the polyhedron itself.
                continue;
            }
            let offset = -ray.ray.0[dim].clone();
            let on = ray.active.ones(gens.len());
            facets.push(PolyhedronFacet {
                conormal,
                offset,
                points_on: on.iter().copied().filter(|&i| i < n_points).collect(),
                rays_on: on
                    .iter()
                    .copied()
                    .filter(|&i| i >= n_points)
                    .map(|i| i - n_points)
                    .collect(),
            });
        }
        Ok(LatticePolyhedron { ambient_dim: dim, points, rays, facets })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn facets(&self) -> &[PolyhedronFacet] {
        &self.facets
    }

    /// Every proper nonempty face, as the closure of the facet set under
    /// intersection (the whole polyhedron is not listed).
    pub fn proper_faces(&self) -> Vec<PolyhedronFace> {
        let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
        for f in &self.facets {
            seen.insert((f.points_on.clone(), f.rays_on.clone()));
        }
        loop {
            let current: Vec<(Vec<usize>, Vec<usize>)> = seen.iter().cloned().collect();
            let before = seen.len();
            for a in &current {
                for b in &current {
                    let pts: Vec<usize> =
                        a.0.iter().copied().filter(|i| b.0.contains(i)).collect();
                    let rys: Vec<usize> =
                        a.1.iter().copied().filter(|i| b.1.contains(i)).collect();
                    if !pts.is_empty() || !rys.is_empty() {
                        seen.insert((pts, rys));
                    }
                }
            }
            if seen.len() == before {
                break;
            }
        }
        seen.into_iter()
            .map(|(points_on, rays_on)| PolyhedronFace { points_on, rays_on })
            .collect()
    }

    /// The compact proper faces: intersections of facets containing at
    /// least one point and no ray.
    pub fn compact_faces(&self) -> Vec<PolyhedronFace> {
        self.proper_faces()
            .into_iter()
            .filter(|f| f.is_compact() && !f.points_on.is_empty())
            .collect()
    }

    /// The compact facets.
    pub fn compact_facets(&self) -> Vec<&PolyhedronFacet> {
        self.facets.iter().filter(|f| f.is_compact()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::tests::iv;

    fn orthant_rays(n: usize) -> Vec<IntVec> {
        (0..n)
            .map(|j| {
                let mut e = IntVec::zero(n);
                e.0[j] = Int::from(1);
                e
            })
            .collect()
    }

    #[test]
    fn staircase_region_has_one_compact_facet() {
        // conv{(2,0),(0,3)} + ℝ₊²: facets x≥0, y≥0 are unbounded; the
        // slanted edge between (2,0) and (0,3) is the one compact facet.
        let p = LatticePolyhedron::new(&[iv(&[2, 0]), iv(&[0, 3])], &orthant_rays(2)).unwrap();
        assert_eq!(p.facets().len(), 3);
        let compact = p.compact_facets();
        assert_eq!(compact.len(), 1);
        assert_eq!(compact[0].conormal, iv(&[3, 2]));
        assert_eq!(compact[0].offset, Int::from(6));
        assert_eq!(compact[0].points_on, vec![0, 1]);
    }

    #[test]
    fn compact_faces_are_vertices_and_bounded_edges() {
        // conv{(2,0),(1,1),(0,3)} + ℝ₊²: both slanted edges are compact,
        // and the three vertices are the compact points.
        let pts = [iv(&[2, 0]), iv(&[1, 1]), iv(&[0, 3])];
        let p = LatticePolyhedron::new(&pts, &orthant_rays(2)).unwrap();
        let compact = p.compact_faces();
        let dims: Vec<usize> = compact.iter().map(|f| f.points_on.len()).collect();
        // Three vertices (one point each) and two edges (two points each).
        assert_eq!(compact.len(), 5);
        assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 3);
        assert_eq!(dims.iter().filter(|&&d| d == 2).count(), 2);
    }

    #[test]
    fn interior_point_supports_no_compact_face() {
        // A point deep inside the recession cone spans the polyhedron alone:
        // conv{(0,0)} + ℝ₊² has no compact facet, only the vertex.
        let p = LatticePolyhedron::new(&[iv(&[0, 0])], &orthant_rays(2)).unwrap();
        assert_eq!(p.compact_facets().len(), 0);
        let compact = p.compact_faces();
        assert_eq!(compact.len(), 1);
        assert_eq!(compact[0].points_on, vec![0]);
    }

    #[test]
    fn one_dimensional_newton_polyhedron() {
        // {3} + ℝ₊ in one variable: single vertex, no compact facet… the
        // vertex itself is the only compact face.
        let p = LatticePolyhedron::new(&[iv(&[3]), iv(&[5])], &orthant_rays(1)).unwrap();
        assert_eq!(p.facets().len(), 1);
        assert!(p.facets()[0].is_compact());
        assert_eq!(p.facets()[0].conormal, iv(&[1]));
        assert_eq!(p.facets()[0].offset, Int::from(3));
    }

    #[test]
    fn mixed_ray_sets_respect_the_selected_axes() {
        // conv{(1,0),(0,1)} + ℝ₊·e₁ only is the strip 0 ≤ y ≤ 1, x ≥ 1−y:
        // both horizontal sides recede along e₁, so only the slanted edge
        // between the two points is compact.
        let p = LatticePolyhedron::new(&[iv(&[1, 0]), iv(&[0, 1])], &[iv(&[1, 0])]).unwrap();
        assert_eq!(p.facets().len(), 3);
        let compact = p.compact_facets();
        assert_eq!(compact.len(), 1);
        assert_eq!(compact[0].conormal, iv(&[1, 1]));
        assert_eq!(compact[0].offset, Int::from(1));
    }
}
