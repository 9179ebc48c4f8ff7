//! Small exact linear algebra kit over the integers and rationals: row
//! reduction, linear solving, integer kernels and saturated sublattice bases.
//!
//! Matrices here are tiny (ambient dimensions ≤ ~7) so plain rational
//! Gaussian elimination is the right tool; no pivoting heuristics needed.

use num_traits::{Euclid, Signed, Zero};

use crate::arith::{Int, IntVec, Rat};

/// Reduce `mat` to row echelon form in place; returns the pivot columns.
pub fn rat_row_echelon(mat: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for x in &mut mat[r] {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let t = &mat[r][j] * &f;
                    mat[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

fn to_rat_rows(rows: &[IntVec]) -> Vec<Vec<Rat>> {
    rows.iter()
        .map(|v| v.0.iter().map(|a| Rat::from_integer(a.clone())).collect())
        .collect()
}

/// Rank of a stack of integer row vectors.
pub fn rank_int(rows: &[IntVec]) -> usize {
    let mut m = to_rat_rows(rows);
    rat_row_echelon(&mut m).len()
}

/// One solution of `A·x = b` over the rationals (free variables set to 0),
/// or `None` when the system is inconsistent.
pub fn rat_solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rat_row_echelon(&mut m);
    if pivots.last().is_some_and(|&c| c == cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Basis of the integer kernel `{x ∈ ℤ^dim : ⟨row, x⟩ = 0 for all rows}`.
///
/// Kernels of integer matrices are saturated lattices, so the returned basis
/// spans every integer point of the rational kernel.
pub fn integer_kernel(rows: &[IntVec], dim: usize) -> Vec<IntVec> {
    // Column reduction with a tracked unimodular transform: columns of `u`
    // that end up annihilated by every row form the kernel basis.
    let mut m: Vec<Vec<Int>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut u: Vec<Vec<Int>> = (0..dim)
        .map(|j| (0..dim).map(|i| Int::from((i == j) as i64)).collect())
        .collect();
    let col_get = |m: &Vec<Vec<Int>>, i: usize, j: usize| m[i][j].clone();
    let mut active: Vec<usize> = (0..dim).collect();
    for i in 0..m.len() {
        loop {
            let mut nz: Vec<usize> = active
                .iter()
                .copied()
                .filter(|&j| !m[i][j].is_zero())
                .collect();
            if nz.len() <= 1 {
                if let Some(j) = nz.pop() {
                    active.retain(|&c| c != j);
                }
                break;
            }
            // Euclidean step on the two smallest entries of row i.
            nz.sort_by_key(|&j| m[i][j].abs());
            let (j, l) = (nz[0], nz[1]);
            let q = col_get(&m, i, l).div_euclid(&col_get(&m, i, j));
            for row in &mut m {
                let t = &row[j] * &q;
                row[l] -= t;
            }
            for row in &mut u {
                let t = &row[j] * &q;
                row[l] -= t;
            }
        }
    }
    active
        .into_iter()
        .map(|j| IntVec((0..dim).map(|i| u[i][j].clone()).collect()))
        .collect()
}

/// Integer basis of the saturation `span_ℚ(dirs) ∩ ℤ^dim`.
pub fn saturation_basis(dirs: &[IntVec], dim: usize) -> Vec<IntVec> {
    let orthogonal = integer_kernel(dirs, dim);
    integer_kernel(&orthogonal, dim)
}

/// Coordinates of `v` in an integer basis, if `v` lies in its ℤ-span.
pub fn int_coords(basis: &[IntVec], v: &IntVec) -> Option<IntVec> {
    if basis.is_empty() {
        return v.is_zero().then(|| IntVec(vec![]));
    }
    let dim = v.dim();
    // Solve B^T · x = v with B's vectors as columns.
    let a: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            basis
                .iter()
                .map(|b| Rat::from_integer(b.0[i].clone()))
                .collect()
        })
        .collect();
    let rhs: Vec<Rat> = v.0.iter().map(|a| Rat::from_integer(a.clone())).collect();
    let x = rat_solve(&a, &rhs)?;
    let mut out = Vec::with_capacity(x.len());
    for c in x {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(IntVec(out))
}

/// An ambient functional restricting to `w` on a chart basis, up to a
/// positive integer scale (which preserves supporting faces).
pub fn lift_functional(basis: &[IntVec], w: &IntVec, ambient: usize) -> IntVec {
    let a: Vec<Vec<Rat>> = basis
        .iter()
        .map(|b| b.0.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let rhs: Vec<Rat> = w.0.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let x = rat_solve(&a, &rhs).expect("chart functional must lift");
    debug_assert_eq!(x.len(), ambient);
    let mut denom = Int::from(1);
    for c in &x {
        denom = num_integer::lcm(denom, c.denom().clone());
    }
    let denom = Rat::from_integer(denom);
    IntVec(x.iter().map(|c| (c * &denom).to_integer()).collect())
}
