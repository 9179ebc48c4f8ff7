//! The dual (normal) fan of a lattice polytope, oriented by inner conormals:
//! the cone of a face collects the functionals whose minimum over the
//! polytope is attained on that face.

use crate::arith::IntVec;
use crate::linalg::integer_kernel;
use crate::polytope::{Face, LatticePolytope};

/// The dual cone of one face: all `u` whose minimizing face contains this
/// face. Generated by the conormals of the facets containing the face
/// together with the lineality space of the fan (functionals constant on the
/// whole polytope).
#[derive(Debug, Clone)]
pub struct DualCone {
    pub face: Face,
    /// Cone dimension: ambient dimension minus face dimension.
    pub dim: usize,
    /// Generators: containing-facet conormals, then ± the lineality basis.
    pub generators: Vec<IntVec>,
}

impl DualCone {
    /// Exact membership: `u` lies in this cone iff its minimizing face
    /// contains the cone's face.
    pub fn contains(&self, p: &LatticePolytope, u: &IntVec) -> bool {
        let s = p.supporting_face(u);
        is_sorted_subset(&self.face.vertex_set, &s.vertex_set)
    }
}

/// A complete fan in the conormal lattice, one cone per face of the source
/// polytope.
#[derive(Debug, Clone)]
pub struct Fan {
    pub ambient_dim: usize,
    /// Basis of the lineality space shared by every cone.
    pub lineality: Vec<IntVec>,
    pub cones: Vec<DualCone>,
}

impl Fan {
    /// The inclusion-minimal cone containing `u` (always exists: the fan is
    /// complete).
    pub fn minimal_cone(&self, p: &LatticePolytope, u: &IntVec) -> &DualCone {
        let s = p.supporting_face(u);
        self.cones
            .iter()
            .find(|c| c.face.vertex_set == s.vertex_set)
            .expect("every minimizing face indexes a cone of the dual fan")
    }
}

/// Basis of the functionals vanishing on all edge directions of `p`, i.e.
/// constant on `p`. Trivial exactly when `p` is full-dimensional.
pub fn lineality_basis(p: &LatticePolytope) -> Vec<IntVec> {
    let verts = p.vertices();
    let dirs: Vec<IntVec> = verts.iter().map(|v| v.sub(&verts[0])).collect();
    integer_kernel(&dirs, p.ambient_dim())
}

/// Dual fan of `p`, cones listed in the face order of [`LatticePolytope::faces`].
pub fn dual_fan(p: &LatticePolytope) -> Fan {
    let lineality = lineality_basis(p);
    let cones = p
        .faces()
        .into_iter()
        .map(|face| {
            let mut generators: Vec<IntVec> = p
                .facets()
                .iter()
                .filter(|f| face.vertex_set.iter().all(|v| f.vertices.contains(v)))
                .map(|f| f.conormal.clone())
                .collect();
            for b in &lineality {
                generators.push(b.clone());
                generators.push(b.neg());
            }
            DualCone { dim: p.ambient_dim() - face.dim, face, generators }
        })
        .collect();
    Fan { ambient_dim: p.ambient_dim(), lineality, cones }
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}
