//! Exact double description: extreme rays of a cone `{y : ⟨c, y⟩ ≥ 0}`.
//!
//! One conversion engine serves every dual task in the crate: facets of a
//! full-dimensional polytope (via homogenization), facets of a generated
//! cone (via its polar), and recession analysis of Newton polyhedra. All
//! arithmetic is over arbitrary-precision integers; rays come back primitive
//! and sorted, each with the exact set of constraints it saturates.

use num_traits::{Signed, Zero};

use crate::arith::{primitive_vector, Int, IntVec, Rat};
use crate::linalg::{rank_int, rat_solve};

/// Constraint-incidence bitset for one ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn or_bit(&self, i: usize) -> BitSet {
        let mut s = self.clone();
        s.set(i);
        s
    }

    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn ones(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&i| self.get(i)).collect()
    }
}

/// A primitive extreme ray together with the constraints it saturates.
#[derive(Debug, Clone)]
pub struct RayData {
    pub ray: IntVec,
    pub active: BitSet,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("constraint matrix does not pin a pointed cone (rank {rank} < dim {dim})")]
    NotPointed { rank: usize, dim: usize },
}

/// Extreme rays of the pointed cone `{y ∈ ℝ^dim : ⟨c, y⟩ ≥ 0 for all c}`.
///
/// The constraints must have full rank `dim` (otherwise the cone has a
/// lineality space and no extreme rays). Duplicate and zero constraints are
/// tolerated; incidence bits refer to the constraint list as given.
pub fn dual_rays(constraints: &[IntVec], dim: usize) -> Result<Vec<RayData>, ConeError> {
    let n = constraints.len();
    let live: Vec<usize> = (0..n).filter(|&i| !constraints[i].is_zero()).collect();
    let rank = rank_int(&live.iter().map(|&i| constraints[i].clone()).collect::<Vec<_>>());
    if rank < dim {
        return Err(ConeError::NotPointed { rank, dim });
    }

    // Greedy full-rank seed; the initial cone is the simplicial cone those
    // constraints cut out, whose rays solve M·y = e_j.
    let mut seed: Vec<usize> = Vec::with_capacity(dim);
    let mut picked: Vec<IntVec> = Vec::with_capacity(dim);
    for &i in &live {
        if seed.len() == dim {
            break;
        }
        picked.push(constraints[i].clone());
        if rank_int(&picked) > seed.len() {
            seed.push(i);
        } else {
            picked.pop();
        }
    }
    let seed_mat: Vec<Vec<Rat>> = seed
        .iter()
        .map(|&i| constraints[i].0.iter().map(|a| Rat::from_integer(a.clone())).collect())
        .collect();

    let mut rays: Vec<RayData> = Vec::with_capacity(dim);
    for j in 0..dim {
        let rhs: Vec<Rat> = (0..dim)
            .map(|i| Rat::from_integer(Int::from((i == j) as i64)))
            .collect();
        let sol = rat_solve(&seed_mat, &rhs).expect("seed matrix is invertible");
        let mut denom = Int::from(1);
        for c in &sol {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        let denom = Rat::from_integer(denom);
        let ray = primitive_vector(&IntVec(
            sol.iter().map(|c| (c * &denom).to_integer()).collect(),
        ))
        .expect("seed ray is nonzero");
        let mut active = BitSet::new(n);
        for &i in &seed {
            if constraints[i].dot(&ray).is_zero() {
                active.set(i);
            }
        }
        rays.push(RayData { ray, active });
    }

    for &t in &live {
        if seed.contains(&t) {
            continue;
        }
        let c = &constraints[t];
        let vals: Vec<Int> = rays.iter().map(|r| c.dot(&r.ray)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.active.set(t);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut fresh: Vec<RayData> = Vec::new();
        for &p in &pos {
            for &m in &neg {
                let common = rays[p].active.and(&rays[m].active);
                // Combinatorial adjacency: no third ray saturates everything
                // both of these saturate.
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != m && common.is_subset_of(&r.active));
                if blocked {
                    continue;
                }
                let combo = rays[m]
                    .ray
                    .scaled(&vals[p])
                    .sub(&rays[p].ray.scaled(&vals[m]));
                let ray = primitive_vector(&combo).expect("adjacent combination is nonzero");
                if fresh.iter().any(|r| r.ray == ray) {
                    continue;
                }
                fresh.push(RayData { ray, active: common.or_bit(t) });
            }
        }

        let mut kept: Vec<RayData> = Vec::with_capacity(pos.len() + fresh.len());
        for (i, r) in rays.into_iter().enumerate() {
            if vals[i].is_positive() {
                kept.push(r);
            } else if vals[i].is_zero() {
                let mut r = r;
                r.active.set(t);
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    rays.sort_by(|a, b| a.ray.cmp(&b.ray));
    Ok(rays)
}
