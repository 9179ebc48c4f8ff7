//! Exact lattice volumes: the normalized volume (d! times the euclidean
//! volume, so the unimodular simplex has volume 1), mixed volumes with
//! multiplicities via polarization, and an independent interpolation route
//! used to cross-check the polarization formula.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, IntVec, Rat};
use crate::linalg::rat_solve;
use crate::polytope::{dilate, minkowski_sum, LatticePolytope};

/// Normalized volume of a polytope, zero when it is not full-dimensional.
/// Computed by exact pyramid decomposition over the lexicographically first
/// vertex: each facet contributes its lattice height times its own
/// normalized volume inside a saturated chart of its hyperplane.
pub fn normalized_volume(p: &LatticePolytope) -> Int {
    let n = p.ambient_dim();
    if p.dim() < n {
        return Int::zero();
    }
    if n == 1 {
        let first = &p.vertices()[0].0[0];
        let last = &p.vertices()[p.vertices().len() - 1].0[0];
        return last - first;
    }
    let apex = &p.vertices()[0];
    let mut total = Int::zero();
    for f in p.facets() {
        let height = f.conormal.dot(apex) - &f.offset;
        if height.is_zero() {
            continue;
        }
        let pts: Vec<IntVec> = f.vertices.iter().map(|&i| p.vertices()[i].clone()).collect();
        let facet = LatticePolytope::hull(&pts).expect("facet vertices form a polytope");
        let chart = facet.chart().expect("a facet is lower-dimensional");
        let proj: Vec<IntVec> = facet.vertices().iter().map(|v| chart.project(v)).collect();
        let reduced = LatticePolytope::hull(&proj).expect("projected facet");
        total += height * normalized_volume(&reduced);
    }
    total
}

fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut num = Int::one();
    for i in 0..k {
        num *= Int::from(n - i);
    }
    num / factorial(k)
}

/// `Σ j_i · P_i` as a polytope (the all-zero weight gives the origin point).
fn weighted_sum(parts: &[&LatticePolytope], weights: &[usize]) -> LatticePolytope {
    let dilates: Vec<LatticePolytope> = parts
        .iter()
        .zip(weights)
        .map(|(p, &w)| dilate(p, &Int::from(w)))
        .collect();
    let refs: Vec<&LatticePolytope> = dilates.iter().collect();
    minkowski_sum(&refs).expect("dilates share an ambient dimension")
}

/// Normalized mixed volume of `parts` with multiplicities `mult`
/// (`Σ mult = ambient dimension`), by polarization:
/// `n!·MV = Σ_j (−1)^{n−|j|} Π C(m_i, j_i) · Vol(Σ j_i·P_i)` over `0 ≤ j ≤ m`.
/// Normalized so that `MV(P,…,P) = Vol(P)`.
pub fn mixed_volume_multi(parts: &[&LatticePolytope], mult: &[usize]) -> Int {
    assert_eq!(parts.len(), mult.len());
    assert!(!parts.is_empty());
    let n: usize = mult.iter().sum();
    let ambient = parts[0].ambient_dim();
    assert!(parts.iter().all(|p| p.ambient_dim() == ambient));
    assert_eq!(n, ambient, "total multiplicity must equal the ambient dimension");

    let mut total = Int::zero();
    let mut j = vec![0usize; mult.len()];
    loop {
        let weight: usize = j.iter().sum();
        let mut coeff = Int::one();
        for (ji, mi) in j.iter().zip(mult) {
            coeff *= binomial(*mi, *ji);
        }
        if (n - weight) % 2 == 1 {
            coeff = -coeff;
        }
        total += coeff * normalized_volume(&weighted_sum(parts, &j));

        // Odometer over the box 0 ≤ j ≤ mult.
        let mut pos = 0;
        loop {
            if pos == j.len() {
                let (q, r) = total.div_rem(&factorial(n));
                assert!(r.is_zero(), "polarization sum must be divisible by n!");
                assert!(!q.is_negative(), "mixed volume is nonnegative");
                return q;
            }
            if j[pos] < mult[pos] {
                j[pos] += 1;
                break;
            }
            j[pos] = 0;
            pos += 1;
        }
    }
}

/// Plain mixed volume of exactly `n` polytopes in ℝⁿ.
pub fn mixed_volume(parts: &[&LatticePolytope]) -> Int {
    mixed_volume_multi(parts, &vec![1; parts.len()])
}

fn bounded_exponents(vars: usize, max_total: usize) -> Vec<Vec<usize>> {
    if vars == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for head in 0..=max_total {
        for mut tail in bounded_exponents(vars - 1, max_total - head) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Independent mixed-volume computation: `Vol(Σ λ_i·P_i)` is a homogeneous
/// degree-`n` polynomial in λ; dehomogenize at `λ_r = 1`, interpolate on the
/// principal lattice `{μ ≥ 0, Σμ ≤ n}` (unisolvent for total degree `n`),
/// and read the mixed volume off one coefficient:
/// `MV(P^m) = coeff(μ^{m'}) · Π m_i! / n!`.
pub fn mixed_volume_oracle(parts: &[&LatticePolytope], mult: &[usize]) -> Int {
    assert_eq!(parts.len(), mult.len());
    assert!(!parts.is_empty());
    let n: usize = mult.iter().sum();
    let ambient = parts[0].ambient_dim();
    assert_eq!(n, ambient, "total multiplicity must equal the ambient dimension");
    let r = parts.len();

    let exps = bounded_exponents(r - 1, n);
    let matrix: Vec<Vec<Rat>> = exps
        .iter()
        .map(|mu| {
            exps.iter()
                .map(|beta| {
                    let mut v = Int::one();
                    for (m, b) in mu.iter().zip(beta) {
                        v *= Int::from(*m).pow(*b as u32);
                    }
                    Rat::from_integer(v)
                })
                .collect()
        })
        .collect();
    let values: Vec<Rat> = exps
        .iter()
        .map(|mu| {
            let mut weights = mu.clone();
            weights.push(1);
            Rat::from_integer(normalized_volume(&weighted_sum(parts, &weights)))
        })
        .collect();
    let coeffs = rat_solve(&matrix, &values).expect("principal lattice is unisolvent");

    let target = &mult[..r - 1];
    let idx = exps.iter().position(|b| b == target).expect("target exponent in range");
    let scale = Ratio::new(
        mult.iter().map(|&m| factorial(m)).product::<Int>(),
        factorial(n),
    );
    let mv = &coeffs[idx] * scale;
    assert!(mv.is_integer(), "mixed volume must be an integer");
    assert!(!mv.is_negative());
    mv.to_integer()
}

/// Sum of the mixed volumes over all multiplicity patterns `m ≥ 1` with
/// `Σ m_i = n`: the total intersection count for a system with these Newton
/// polytopes. Zero when there are more polytopes than dimensions.
pub fn mixed_volume_sum(parts: &[&LatticePolytope]) -> Int {
    assert!(!parts.is_empty());
    let n = parts[0].ambient_dim();
    let k = parts.len();
    if k > n {
        return Int::zero();
    }
    let mut total = Int::zero();
    for comp in compositions(n, k) {
        total += mixed_volume_multi(parts, &comp);
    }
    total
}

/// All vectors of `k` positive integers summing to `n`.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    if k == 1 {
        return if n >= 1 { vec![vec![n]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=(n + 1 - k) {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
