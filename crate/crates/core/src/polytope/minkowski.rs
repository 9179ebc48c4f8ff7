//! Minkowski sums, integer dilation, face decomposition of a sum into faces
//! of its summands, and the join construction that stacks several polytopes
//! into one higher-dimensional one.

use num_traits::{Signed, Zero};

use crate::arith::{Int, IntVec};
use crate::polytope::{Face, LatticePolytope, PolytopeError};

/// Minkowski sum of the given polytopes (left fold, re-hulling after each
/// pairwise vertex-sum so intermediate point sets stay small).
pub fn minkowski_sum(parts: &[&LatticePolytope]) -> Result<LatticePolytope, PolytopeError> {
    let first = parts.first().ok_or(PolytopeError::Empty)?;
    let mut acc = (*first).clone();
    for p in &parts[1..] {
        if p.ambient_dim() != acc.ambient_dim() {
            return Err(PolytopeError::MixedDimensions);
        }
        let sums: Vec<IntVec> = acc
            .vertices()
            .iter()
            .flat_map(|a| p.vertices().iter().map(move |b| a.add(b)))
            .collect();
        acc = LatticePolytope::hull(&sums)?;
    }
    Ok(acc)
}

/// The dilate `k·P` for `k ≥ 0`; `0·P` is the origin point.
pub fn dilate(p: &LatticePolytope, k: &Int) -> LatticePolytope {
    assert!(!k.is_negative(), "dilation factor must be nonnegative");
    if k.is_zero() {
        return LatticePolytope::hull(&[IntVec::zero(p.ambient_dim())])
            .expect("origin point is a valid polytope");
    }
    let pts: Vec<IntVec> = p.vertices().iter().map(|v| v.scaled(k)).collect();
    LatticePolytope::hull(&pts).expect("dilate of a valid polytope")
}

/// Decompose a face of a Minkowski sum into the faces of the summands it is
/// the sum of: each part contributes its minimizing face under the witness
/// functional of the sum's face. (The decomposition does not depend on which
/// exposing functional is used.)
pub fn face_decompose(parts: &[&LatticePolytope], sum_face: &Face) -> Vec<Face> {
    parts.iter().map(|p| p.supporting_face(&sum_face.witness)).collect()
}

/// The join of `k` polytopes in ℝⁿ: the hull of their points lifted to
/// ℝ^{n+k}, part `i` placed at selector height `e_i`.
pub fn join_polytope(parts: &[&LatticePolytope]) -> Result<LatticePolytope, PolytopeError> {
    let k = parts.len();
    let first = parts.first().ok_or(PolytopeError::Empty)?;
    let n = first.ambient_dim();
    let mut pts = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        if p.ambient_dim() != n {
            return Err(PolytopeError::MixedDimensions);
        }
        let mut e = IntVec::zero(k);
        e.0[i] = Int::from(1);
        for q in p.points() {
            pts.push(q.concat(&e));
        }
    }
    LatticePolytope::hull(&pts)
}
