//! Lattice polytopes with exact hulls, face lattices, dual fans, Minkowski
//! sums and Cayley constructions.
//!
//! A polytope remembers its generating points, its extreme points, and its
//! facet description. Degenerate (lower-dimensional) polytopes are first
//! class: faces are computed in a saturated lattice chart of the affine hull
//! and witnesses are lifted back to ambient functionals.

mod cone;
pub mod dd;
mod fan;
mod minkowski;
mod polyhedron;

pub use cone::{cayley_cone, PolyhedralCone};
pub use polyhedron::{LatticePolyhedron, PolyhedronFace, PolyhedronFacet};
pub use fan::{dual_fan, DualCone, Fan};
pub use minkowski::{dilate, face_decompose, join_polytope, minkowski_sum};

use crate::arith::{Int, IntVec};
use crate::linalg::{int_coords, lift_functional, rank_int, saturation_basis};
use dd::{dual_rays, ConeError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolytopeError {
    #[error("a polytope needs at least one point")]
    Empty,
    #[error("points live in different ambient dimensions")]
    MixedDimensions,
    #[error("ambient dimension must be positive")]
    AmbientZero,
    #[error("operation requires a full-dimensional polytope (dim {dim} < ambient {ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("the given face is not a face of this polytope")]
    NotAFace,
    #[error("the given face is not a facet")]
    NotAFacet,
    #[error("cone is degenerate: generators span rank {rank} in dimension {dim}")]
    DegenerateCone { rank: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

impl From<ConeError> for PolytopeError {
    fn from(e: ConeError) -> Self {
        let ConeError::NotPointed { rank, dim } = e;
        PolytopeError::DegenerateCone { rank, dim }
    }
}

/// Affine chart of a (possibly lower-dimensional) polytope: a base point and
/// a basis of the saturated direction lattice, so chart coordinates of
/// lattice points are again lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub base: IntVec,
    pub basis: Vec<IntVec>,
}

impl Chart {
    pub fn project(&self, p: &IntVec) -> IntVec {
        int_coords(&self.basis, &p.sub(&self.base))
            .expect("point lies in the affine hull lattice")
    }
}

/// One facet: primitive inner conormal, its minimum over the polytope, and
/// the vertices it contains. For degenerate polytopes the conormal is a
/// lifted representative (exact up to the affine hull's conormal space).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetData {
    pub conormal: IntVec,
    pub offset: Int,
    pub vertices: Vec<usize>,
}

/// A face identified by the sorted set of vertices it contains, with its
/// affine dimension and a supporting functional that exposes exactly it.
#[derive(Debug, Clone, Eq)]
pub struct Face {
    pub vertex_set: Vec<usize>,
    pub dim: usize,
    pub witness: IntVec,
}

impl PartialEq for Face {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_set == other.vertex_set
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    points: Vec<IntVec>,
    vertices: Vec<IntVec>,
    dim: usize,
    facets: Vec<FacetData>,
    chart: Option<Chart>,
}

impl LatticePolytope {
    /// Convex hull of a finite set of lattice points.
    pub fn hull(points: &[IntVec]) -> Result<Self, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::Empty);
        }
        let ambient = points[0].dim();
        if ambient == 0 {
            return Err(PolytopeError::AmbientZero);
        }
        if points.iter().any(|p| p.dim() != ambient) {
            return Err(PolytopeError::MixedDimensions);
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();

        let dirs: Vec<IntVec> = pts.iter().map(|p| p.sub(&pts[0])).collect();
        let dim = rank_int(&dirs);
        if dim == 0 {
            return Ok(LatticePolytope {
                ambient_dim: ambient,
                vertices: pts.clone(),
                points: pts,
                dim: 0,
                facets: vec![],
                chart: None,
            });
        }

        let chart = (dim < ambient).then(|| Chart {
            base: pts[0].clone(),
            basis: saturation_basis(&dirs, ambient),
        });
        let work: Vec<IntVec> = match &chart {
            Some(c) => pts.iter().map(|p| c.project(p)).collect(),
            None => pts.clone(),
        };

        // Facets of the homogenization cone over (q, 1) are exactly the
        // facets of the polytope, as pairs (ν, −m).
        let lifted: Vec<IntVec> = work
            .iter()
            .map(|q| q.concat(&IntVec(vec![Int::from(1)])))
            .collect();
        let rays = dual_rays(&lifted, dim + 1).expect("homogenization cone polar is pointed");

        let is_vertex: Vec<bool> = (0..pts.len())
            .map(|i| {
                let active: Vec<IntVec> = rays
                    .iter()
                    .filter(|r| r.active.get(i))
                    .map(|r| IntVec(r.ray.0[..dim].to_vec()))
                    .collect();
                rank_int(&active) == dim
            })
            .collect();
        let vertices: Vec<IntVec> = pts
            .iter()
            .zip(&is_vertex)
            .filter(|(_, &v)| v)
            .map(|(p, _)| p.clone())
            .collect();
        let vertex_index: Vec<Option<usize>> = {
            let mut next = 0;
            is_vertex
                .iter()
                .map(|&v| {
                    v.then(|| {
                        let i = next;
                        next += 1;
                        i
                    })
                })
                .collect()
        };

        let facets: Vec<FacetData> = rays
            .iter()
            .map(|r| {
                let w = IntVec(r.ray.0[..dim].to_vec());
                let conormal = match &chart {
                    Some(c) => lift_functional(&c.basis, &w, ambient),
                    None => w,
                };
                let offset = pts.iter().map(|p| conormal.dot(p)).min().expect("nonempty");
                let verts = r
                    .active
                    .ones(pts.len())
                    .into_iter()
                    .filter_map(|i| vertex_index[i])
                    .collect();
                FacetData { conormal, offset, vertices: verts }
            })
            .collect();

        Ok(LatticePolytope { ambient_dim: ambient, points: pts, vertices, dim, facets, chart })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dim(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetData] {
        &self.facets
    }

    pub fn chart(&self) -> Option<&Chart> {
        self.chart.as_ref()
    }

    /// Minimum of `⟨u, ·⟩` over the polytope.
    pub fn min_pairing(&self, u: &IntVec) -> Int {
        self.vertices
            .iter()
            .map(|v| u.dot(v))
            .min()
            .expect("polytope has vertices")
    }

    /// The face on which `⟨u, ·⟩` attains its minimum (`u = 0` gives the
    /// whole polytope).
    pub fn supporting_face(&self, u: &IntVec) -> Face {
        let m = self.min_pairing(u);
        let vertex_set: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| u.dot(&self.vertices[i]) == m)
            .collect();
        let dirs: Vec<IntVec> = vertex_set
            .iter()
            .map(|&i| self.vertices[i].sub(&self.vertices[vertex_set[0]]))
            .collect();
        Face { dim: rank_int(&dirs), vertex_set, witness: u.clone() }
    }

    /// The complete face lattice: the polytope itself, every facet, and every
    /// intersection of facets down to the vertices. Sorted by dimension then
    /// vertex set; no duplicates; each face carries a supporting witness.
    pub fn faces(&self) -> Vec<Face> {
        use std::collections::BTreeSet;
        let full: Vec<usize> = (0..self.vertices.len()).collect();
        let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
        sets.insert(full);
        for f in &self.facets {
            sets.insert(f.vertices.clone());
        }
        loop {
            let snapshot: Vec<Vec<usize>> = sets.iter().cloned().collect();
            let before = sets.len();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let meet: Vec<usize> = snapshot[i]
                        .iter()
                        .copied()
                        .filter(|v| snapshot[j].binary_search(v).is_ok())
                        .collect();
                    if !meet.is_empty() {
                        sets.insert(meet);
                    }
                }
            }
            if sets.len() == before {
                break;
            }
        }
        let mut faces: Vec<Face> = sets.into_iter().map(|set| self.face_from_set(set)).collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then(a.vertex_set.cmp(&b.vertex_set)));
        faces
    }

    fn face_from_set(&self, vertex_set: Vec<usize>) -> Face {
        let dirs: Vec<IntVec> = vertex_set
            .iter()
            .map(|&i| self.vertices[i].sub(&self.vertices[vertex_set[0]]))
            .collect();
        let dim = rank_int(&dirs);
        let mut witness = IntVec::zero(self.ambient_dim);
        for f in &self.facets {
            if vertex_set.iter().all(|v| f.vertices.contains(v)) && vertex_set.len() < self.vertices.len()
            {
                witness += &f.conormal;
            }
        }
        Face { vertex_set, dim, witness }
    }

    /// Look up a face by its vertex set (which is how faces are identified).
    pub fn face_by_vertex_set(&self, set: &[usize]) -> Result<Face, PolytopeError> {
        let faces = self.faces();
        faces
            .into_iter()
            .find(|f| f.vertex_set == set)
            .ok_or(PolytopeError::NotAFace)
    }

    /// Primitive inner conormal of a facet and its minimum value over the
    /// polytope. Requires a full-dimensional polytope.
    pub fn facet_conormal(&self, face: &Face) -> Result<(IntVec, Int), PolytopeError> {
        if !self.is_full_dim() {
            return Err(PolytopeError::NotFullDimensional {
                dim: self.dim,
                ambient: self.ambient_dim,
            });
        }
        self.facets
            .iter()
            .find(|f| f.vertices == face.vertex_set)
            .map(|f| (f.conormal.clone(), f.offset.clone()))
            .ok_or(PolytopeError::NotAFacet)
    }

    /// Translate by a lattice vector (facet conormals are unchanged, offsets
    /// shift by the pairing).
    pub fn translate(&self, t: &IntVec) -> LatticePolytope {
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            points: self.points.iter().map(|p| p.add(t)).collect(),
            vertices: self.vertices.iter().map(|p| p.add(t)).collect(),
            dim: self.dim,
            facets: self
                .facets
                .iter()
                .map(|f| FacetData {
                    conormal: f.conormal.clone(),
                    offset: &f.offset + f.conormal.dot(t),
                    vertices: f.vertices.clone(),
                })
                .collect(),
            chart: self.chart.as_ref().map(|c| Chart {
                base: c.base.add(t),
                basis: c.basis.clone(),
            }),
        }
    }
}
