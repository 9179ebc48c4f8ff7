//! Exact solving of bivariate Laurent systems on the torus: resultants by
//! evaluation–interpolation, bivariate gcds by a primitive remainder
//! sequence, and a dynamic-evaluation solver that counts (and where possible
//! extracts) the distinct common zeros with both coordinates nonzero.
//!
//! The solver never approximates: roots are kept as residue rings
//! ℚ(i)[y₁]/(V) and the ring is split whenever a zero divisor shows up, so
//! every reported count is a theorem about the exact input.

use num_traits::ToPrimitive;

use crate::arith::{GaussRat, Int, IntVec};
use crate::laurent::LaurentPoly;
use crate::upoly::{self, UPoly};

/// A polynomial in `y₂` whose coefficients are polynomials in `y₁`;
/// `cols[i]` is the coefficient of `y₂^i`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    cols: Vec<UPoly>,
}

impl BiPoly {
    pub fn new(mut cols: Vec<UPoly>) -> Self {
        while cols.last().is_some_and(|c| c.is_zero()) {
            cols.pop();
        }
        BiPoly { cols }
    }

    pub fn zero() -> Self {
        BiPoly { cols: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn deg_y2(&self) -> Option<usize> {
        self.cols.len().checked_sub(1)
    }

    pub fn deg_y1(&self) -> Option<usize> {
        self.cols.iter().filter_map(|c| c.degree()).max()
    }

    pub fn coeff_y2(&self, i: usize) -> UPoly {
        self.cols.get(i).cloned().unwrap_or_else(UPoly::zero)
    }

    pub fn lc_y2(&self) -> Option<&UPoly> {
        self.cols.last()
    }

    /// Requires two variables and nonnegative exponents.
    pub fn from_laurent(p: &LaurentPoly) -> Option<BiPoly> {
        if p.vars() != 2 {
            return None;
        }
        let mut cols: Vec<Vec<GaussRat>> = Vec::new();
        for (v, a) in p.terms() {
            let e1 = v.0[0].to_usize()?;
            let e2 = v.0[1].to_usize()?;
            if cols.len() <= e2 {
                cols.resize(e2 + 1, Vec::new());
            }
            if cols[e2].len() <= e1 {
                cols[e2].resize(e1 + 1, GaussRat::from_int(0));
            }
            cols[e2][e1] = a.clone();
        }
        Some(BiPoly::new(cols.into_iter().map(UPoly::new).collect()))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        let mut terms = Vec::new();
        for (e2, col) in self.cols.iter().enumerate() {
            for (e1, c) in col.coeffs().iter().enumerate() {
                terms.push((IntVec(vec![Int::from(e1), Int::from(e2)]), c.clone()));
            }
        }
        LaurentPoly::from_terms(2, terms)
    }

    /// Specialize `y₁ = x`, leaving a polynomial in `y₂`.
    pub fn eval_y1(&self, x: &GaussRat) -> UPoly {
        UPoly::new(self.cols.iter().map(|c| c.eval(x)).collect())
    }

    pub fn deriv_y2(&self) -> BiPoly {
        BiPoly::new(
            self.cols
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scalar_mul(&GaussRat::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let len = self.cols.len().max(rhs.cols.len());
        BiPoly::new((0..len).map(|i| self.coeff_y2(i).add(&rhs.coeff_y2(i))).collect())
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let len = self.cols.len().max(rhs.cols.len());
        BiPoly::new((0..len).map(|i| self.coeff_y2(i).sub(&rhs.coeff_y2(i))).collect())
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut cols = vec![UPoly::zero(); self.cols.len() + rhs.cols.len() - 1];
        for (i, a) in self.cols.iter().enumerate() {
            for (j, b) in rhs.cols.iter().enumerate() {
                cols[i + j] = cols[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(cols)
    }

    fn scale_cols(&self, f: &UPoly) -> BiPoly {
        BiPoly::new(self.cols.iter().map(|c| c.mul(f)).collect())
    }

    fn shift_y2(&self, k: usize) -> BiPoly {
        let mut cols = vec![UPoly::zero(); k];
        cols.extend(self.cols.iter().cloned());
        BiPoly::new(cols)
    }

    fn mod_reduce(&self, v: &UPoly) -> BiPoly {
        BiPoly::new(self.cols.iter().map(|c| c.rem(v).expect("nonzero modulus")).collect())
    }

    /// Transpose the roles of `y₁` and `y₂`.
    pub fn swap_vars(&self) -> BiPoly {
        let rows = self.cols.iter().filter_map(|c| c.degree()).max().map_or(0, |d| d + 1);
        let mut out: Vec<Vec<GaussRat>> = vec![Vec::new(); rows];
        for (e2, col) in self.cols.iter().enumerate() {
            for (e1, c) in col.coeffs().iter().enumerate() {
                if out[e1].len() <= e2 {
                    out[e1].resize(e2 + 1, GaussRat::from_int(0));
                }
                out[e1][e2] = c.clone();
            }
        }
        BiPoly::new(out.into_iter().map(UPoly::new).collect())
    }

    fn content_y2(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.cols {
            g = g.gcd(c);
        }
        g
    }

    fn primitive_part_y2(&self) -> BiPoly {
        let c = self.content_y2();
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly::new(
            self.cols
                .iter()
                .map(|col| {
                    let (q, r) = col.divrem(&c).expect("content divides");
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }
}

fn upow(p: &UPoly, k: usize) -> UPoly {
    let mut acc = UPoly::one();
    for _ in 0..k {
        acc = acc.mul(p);
    }
    acc
}

/// Resultant with respect to `y₂`, a polynomial in `y₁`. Computed by
/// specializing `y₁` at integer nodes where neither leading coefficient
/// vanishes (so the specialization commutes with the resultant) and
/// interpolating through `deg₁f·deg₂g + deg₁g·deg₂f + 1` values.
pub fn resultant_y2(f: &BiPoly, g: &BiPoly) -> UPoly {
    if f.is_zero() || g.is_zero() {
        return UPoly::zero();
    }
    let d2f = f.deg_y2().expect("nonzero");
    let d2g = g.deg_y2().expect("nonzero");
    if d2f == 0 && d2g == 0 {
        return UPoly::one();
    }
    if d2f == 0 {
        return upow(&f.cols[0], d2g);
    }
    if d2g == 0 {
        return upow(&g.cols[0], d2f);
    }
    let bound = f.deg_y1().unwrap_or(0) * d2g + g.deg_y1().unwrap_or(0) * d2f;
    let lcf = f.lc_y2().expect("nonzero");
    let lcg = g.lc_y2().expect("nonzero");
    let mut points = Vec::with_capacity(bound + 1);
    let mut node = 0i64;
    while points.len() <= bound {
        let x = GaussRat::from_int(node);
        node += 1;
        if lcf.eval(&x).is_zero() || lcg.eval(&x).is_zero() {
            continue;
        }
        let value = upoly::resultant(&f.eval_y1(&x), &g.eval_y1(&x));
        points.push((x, value));
    }
    upoly::interpolate(&points)
}

/// Gcd in ℚ(i)[y₁, y₂], normalized so the leading coefficient of the
/// leading `y₂`-coefficient is 1. Content/primitive-part split in `y₂`, with
/// a primitive pseudo-remainder sequence for the primitive parts.
pub fn bivariate_gcd(f: &BiPoly, g: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return normalize(g.clone());
    }
    if g.is_zero() {
        return normalize(f.clone());
    }
    let content = f.content_y2().gcd(&g.content_y2());
    let (mut a, mut b) = (f.primitive_part_y2(), g.primitive_part_y2());
    if a.deg_y2() < b.deg_y2() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r.primitive_part_y2();
    }
    normalize(a.primitive_part_y2().scale_cols(&content))
}

fn normalize(p: BiPoly) -> BiPoly {
    match p.lc_y2().and_then(|c| c.lead()) {
        None => p,
        Some(l) => {
            let inv = l.inv().expect("nonzero leading coefficient");
            BiPoly::new(p.cols.iter().map(|c| c.scalar_mul(&inv)).collect())
        }
    }
}

/// `lc(b)^k·a mod b` in `(ℚ(i)[y₁])[y₂]`, multiplying through instead of
/// dividing so everything stays polynomial.
fn pseudo_rem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.deg_y2().expect("nonzero divisor");
    let lb = b.lc_y2().expect("nonzero").clone();
    let mut r = a.clone();
    while let Some(dr) = r.deg_y2() {
        if dr < db {
            break;
        }
        let lr = r.lc_y2().expect("nonzero").clone();
        r = r.scale_cols(&lb).sub(&b.shift_y2(dr - db).scale_cols(&lr));
    }
    r
}

/// Exact description of the common zeros of a Laurent system on the torus
/// (ℂ\{0})²: distinct points only, multiplicities discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusZeros {
    Empty,
    Finite {
        /// Number of distinct torus zeros.
        count: usize,
        /// Zeros with Gaussian-rational coordinates, when every branch of
        /// the residue decomposition is linear. Sorted and complete exactly
        /// when `residual` is empty.
        points: Vec<[GaussRat; 2]>,
        /// Non-linear branches, reported as (modulus in y₁, fiber in y₂).
        residual: Vec<(UPoly, Vec<UPoly>)>,
    },
    PositiveDimensional,
    Undecided(String),
}

impl TorusZeros {
    pub fn count(&self) -> Option<usize> {
        match self {
            TorusZeros::Empty => Some(0),
            TorusZeros::Finite { count, .. } => Some(*count),
            _ => None,
        }
    }
}

/// Count (and where possible list) the distinct common torus zeros of a
/// system of two-variable Laurent polynomials.
pub fn torus_zeros(system: &[LaurentPoly]) -> TorusZeros {
    assert!(system.iter().all(|f| f.vars() == 2));
    let shifted: Vec<LaurentPoly> = system
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.shift_to_origin().0)
        .collect();
    if shifted.is_empty() {
        return TorusZeros::PositiveDimensional;
    }
    if shifted.iter().any(|f| f.is_monomial()) {
        return TorusZeros::Empty;
    }
    if shifted.len() == 1 {
        // A single non-monomial curve always meets the torus in a curve.
        return TorusZeros::PositiveDimensional;
    }
    let polys: Vec<BiPoly> = shifted
        .iter()
        .map(|f| BiPoly::from_laurent(f).expect("shifted polynomials"))
        .collect();

    // A positive-dimensional common component is exactly a common factor;
    // such a factor that is not a monomial meets the torus in a curve.
    let mut common = polys[0].clone();
    for p in &polys[1..] {
        common = bivariate_gcd(&common, p);
    }
    if !common.to_laurent().shift_to_origin().0.is_monomial() {
        return TorusZeros::PositiveDimensional;
    }

    let eliminant = match find_eliminant(&shifted, &polys) {
        Ok(w) => w,
        Err(e) => return e,
    };
    let w = eliminant.strip_zero_root().squarefree_part();
    match w.degree() {
        None => unreachable!("eliminant is nonzero"),
        Some(0) => return TorusZeros::Empty,
        Some(_) => {}
    }

    let mut count = 0usize;
    let mut points = Vec::new();
    let mut residual = Vec::new();
    let mut positive_dim = false;
    fold_gcd_branches(&w, &polys, &mut count, &mut points, &mut residual, &mut positive_dim);
    if positive_dim {
        return TorusZeros::PositiveDimensional;
    }
    if count == 0 {
        return TorusZeros::Empty;
    }
    points.sort();
    TorusZeros::Finite { count, points, residual }
}

/// Just the number of distinct torus zeros, when finite.
pub fn torus_zero_count(system: &[LaurentPoly]) -> TorusZeros {
    torus_zeros(system)
}

/// A nonzero polynomial in `y₁` vanishing on the projection of every common
/// zero. Pairwise eliminations first; if every pair shares a component, pit
/// the first polynomial against deterministic combinations of the others
/// (some combination must work once no factor is common to all).
fn find_eliminant(shifted: &[LaurentPoly], polys: &[BiPoly]) -> Result<UPoly, TorusZeros> {
    let mut candidates: Vec<UPoly> = Vec::new();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            match pair_eliminant(&polys[i], &polys[j]) {
                PairElim::Empty => return Err(TorusZeros::Empty),
                PairElim::Vanishes(w) => candidates.push(w),
                PairElim::SharedComponent => {}
            }
        }
    }
    if let Some(first) = candidates.first() {
        let mut w = first.clone();
        for c in &candidates[1..] {
            w = w.gcd(c);
        }
        if w.degree() == Some(0) {
            return Err(TorusZeros::Empty);
        }
        return Ok(w);
    }
    // Every pair shares a component. Combine: f₁ against f₂ + t·f₃ + t²·f₄…
    let degree_bound: usize = polys
        .iter()
        .map(|p| p.deg_y1().unwrap_or(0) + p.deg_y2().unwrap_or(0))
        .sum();
    for t in 1..=(degree_bound * polys.len() + 2) as i64 {
        let mut combo = shifted[1].clone();
        let mut weight = GaussRat::from_int(1);
        for f in &shifted[2..] {
            weight = &weight * &GaussRat::from_int(t);
            combo = combo.add(&f.scalar_mul(&weight));
        }
        let combo = combo.shift_to_origin().0;
        if combo.is_zero() {
            continue;
        }
        let cb = BiPoly::from_laurent(&combo).expect("shifted");
        match pair_eliminant(&polys[0], &cb) {
            PairElim::Empty => return Err(TorusZeros::Empty),
            PairElim::Vanishes(w) => return Ok(w),
            PairElim::SharedComponent => continue,
        }
    }
    Err(TorusZeros::Undecided(
        "no eliminant found for a system whose pairs all share components".into(),
    ))
}

enum PairElim {
    /// The pair alone has no common zeros at all.
    Empty,
    /// Nonzero polynomial in `y₁` vanishing under every common zero.
    Vanishes(UPoly),
    /// Resultant vanished identically.
    SharedComponent,
}

fn pair_eliminant(a: &BiPoly, b: &BiPoly) -> PairElim {
    if a.deg_y2() == Some(0) && b.deg_y2() == Some(0) {
        let g = a.cols[0].gcd(&b.cols[0]);
        return match g.degree() {
            Some(0) => PairElim::Empty,
            _ => PairElim::Vanishes(g),
        };
    }
    let r = resultant_y2(a, b);
    if r.is_zero() {
        PairElim::SharedComponent
    } else {
        PairElim::Vanishes(r)
    }
}

/// Invertibility of `c` in ℚ(i)[y₁]/(v) for squarefree `v`: an inverse, a
/// certified zero, or a splitting of `v` into coprime factors on which the
/// question has uniform answers.
enum InvOutcome {
    Inverse(UPoly),
    Zero,
    Split(UPoly, UPoly),
}

fn inv_mod(c: &UPoly, v: &UPoly) -> InvOutcome {
    let c = c.rem(v).expect("nonzero modulus");
    if c.is_zero() {
        return InvOutcome::Zero;
    }
    let (g, s, _) = c.xgcd(v);
    if g.degree() == Some(0) {
        return InvOutcome::Inverse(s.rem(v).expect("nonzero modulus"));
    }
    let (cofactor, r) = v.divrem(&g).expect("gcd divides");
    debug_assert!(r.is_zero());
    InvOutcome::Split(g, cofactor)
}

enum MonicOutcome {
    Monic(BiPoly),
    Zero,
    Split(UPoly, UPoly),
}

fn monicize(v: &UPoly, p: &BiPoly) -> MonicOutcome {
    let p = p.mod_reduce(v);
    if p.is_zero() {
        return MonicOutcome::Zero;
    }
    match inv_mod(p.lc_y2().expect("nonzero"), v) {
        InvOutcome::Zero => unreachable!("trimmed leading column is nonzero mod v"),
        InvOutcome::Split(d, e) => MonicOutcome::Split(d, e),
        InvOutcome::Inverse(inv) => {
            MonicOutcome::Monic(p.scale_cols(&inv).mod_reduce(v))
        }
    }
}

/// Remainder of `a` under a divisor that is monic in `y₂` over ℚ(i)[y₁]/(v).
fn rem_by_monic(v: &UPoly, a: &BiPoly, monic: &BiPoly) -> BiPoly {
    let db = monic.deg_y2().expect("nonzero divisor");
    let mut r = a.mod_reduce(v);
    while let Some(dr) = r.deg_y2() {
        if dr < db {
            break;
        }
        let lr = r.lc_y2().expect("nonzero").clone();
        r = r.sub(&monic.shift_y2(dr - db).scale_cols(&lr)).mod_reduce(v);
    }
    r
}

/// Exact quotient by a monic divisor (remainder must vanish mod `v`).
fn div_by_monic(v: &UPoly, a: &BiPoly, monic: &BiPoly) -> BiPoly {
    let db = monic.deg_y2().expect("nonzero divisor");
    let mut r = a.mod_reduce(v);
    let mut q = vec![UPoly::zero(); r.cols.len().saturating_sub(db)];
    while let Some(dr) = r.deg_y2() {
        if dr < db {
            break;
        }
        let lr = r.lc_y2().expect("nonzero").clone();
        q[dr - db] = lr.clone();
        r = r.sub(&monic.shift_y2(dr - db).scale_cols(&lr)).mod_reduce(v);
    }
    assert!(r.is_zero(), "division by a factor must be exact");
    BiPoly::new(q)
}

/// Compute the monic gcd of the system's fibers over every root of `w`,
/// splitting the modulus as needed, then finish each branch (squarefree
/// reduction, stripping `y₂ = 0`, counting and point extraction).
fn fold_gcd_branches(
    w: &UPoly,
    polys: &[BiPoly],
    count: &mut usize,
    points: &mut Vec<[GaussRat; 2]>,
    residual: &mut Vec<(UPoly, Vec<UPoly>)>,
    positive_dim: &mut bool,
) {
    let reduced: Vec<BiPoly> = polys
        .iter()
        .map(|p| p.mod_reduce(w))
        .filter(|p| !p.is_zero())
        .collect();
    let Some(first) = reduced.first() else {
        // Every equation vanishes identically over these roots: whole lines.
        *positive_dim = true;
        return;
    };
    let mut g = first.clone();
    for p in &reduced[1..] {
        match monicize(w, p) {
            MonicOutcome::Zero => continue,
            MonicOutcome::Split(d, e) => {
                fold_gcd_branches(&d, polys, count, points, residual, positive_dim);
                fold_gcd_branches(&e, polys, count, points, residual, positive_dim);
                return;
            }
            MonicOutcome::Monic(pm) => {
                match euclid_pair(w, &g, &pm) {
                    EuclidOutcome::Split(d, e) => {
                        fold_gcd_branches(&d, polys, count, points, residual, positive_dim);
                        fold_gcd_branches(&e, polys, count, points, residual, positive_dim);
                        return;
                    }
                    EuclidOutcome::Gcd(next) => g = next,
                }
            }
        }
    }
    match monicize(w, &g) {
        MonicOutcome::Zero => *positive_dim = true,
        MonicOutcome::Split(d, e) => {
            fold_gcd_branches(&d, polys, count, points, residual, positive_dim);
            fold_gcd_branches(&e, polys, count, points, residual, positive_dim);
        }
        MonicOutcome::Monic(gm) => finish_branch(w, &gm, count, points, residual),
    }
}

enum EuclidOutcome {
    Gcd(BiPoly),
    Split(UPoly, UPoly),
}

fn euclid_pair(v: &UPoly, a: &BiPoly, b: &BiPoly) -> EuclidOutcome {
    let mut a = a.mod_reduce(v);
    let mut b = b.mod_reduce(v);
    loop {
        if b.is_zero() {
            return EuclidOutcome::Gcd(a);
        }
        match monicize(v, &b) {
            MonicOutcome::Zero => return EuclidOutcome::Gcd(a),
            MonicOutcome::Split(d, e) => return EuclidOutcome::Split(d, e),
            MonicOutcome::Monic(bm) => {
                let r = rem_by_monic(v, &a, &bm);
                a = bm;
                b = r;
            }
        }
    }
}

/// `g` is the monic fiber gcd over every root of `v`. Reduce it squarefree,
/// strip the `y₂ = 0` root, and count `deg(v) · deg(stripped)` torus zeros.
fn finish_branch(
    v: &UPoly,
    g: &BiPoly,
    count: &mut usize,
    points: &mut Vec<[GaussRat; 2]>,
    residual: &mut Vec<(UPoly, Vec<UPoly>)>,
) {
    if g.deg_y2() == Some(0) {
        return; // invertible constant: no common fiber roots here
    }
    // Squarefree part: divide by gcd(g, ∂g/∂y₂); may split the branch.
    let deriv = g.deriv_y2();
    match euclid_pair(v, g, &deriv) {
        EuclidOutcome::Split(d, e) => {
            finish_branch(&d, &g.mod_reduce(&d), count, points, residual);
            finish_branch(&e, &g.mod_reduce(&e), count, points, residual);
        }
        EuclidOutcome::Gcd(dd) => match monicize(v, &dd) {
            MonicOutcome::Zero => unreachable!("gcd with derivative divides g"),
            MonicOutcome::Split(d, e) => {
                finish_branch(&d, &g.mod_reduce(&d), count, points, residual);
                finish_branch(&e, &g.mod_reduce(&e), count, points, residual);
            }
            MonicOutcome::Monic(dm) => {
                let h = div_by_monic(v, g, &dm);
                strip_and_count(v, &h, count, points, residual);
            }
        },
    }
}

fn strip_and_count(
    v: &UPoly,
    h: &BiPoly,
    count: &mut usize,
    points: &mut Vec<[GaussRat; 2]>,
    residual: &mut Vec<(UPoly, Vec<UPoly>)>,
) {
    let mut h = h.mod_reduce(v);
    loop {
        if h.deg_y2().is_none() {
            unreachable!("squarefree fiber polynomial is nonzero");
        }
        let c0 = h.coeff_y2(0);
        match inv_mod(&c0, v) {
            InvOutcome::Zero => {
                // y₂ = 0 is a root over every root of v: strip it.
                h = BiPoly::new(h.cols[1..].to_vec()).mod_reduce(v);
            }
            InvOutcome::Split(d, e) => {
                strip_and_count(&d, &h.mod_reduce(&d), count, points, residual);
                strip_and_count(&e, &h.mod_reduce(&e), count, points, residual);
                return;
            }
            InvOutcome::Inverse(_) => break,
        }
    }
    let fiber_roots = h.deg_y2().expect("nonzero");
    if fiber_roots == 0 {
        return;
    }
    let dv = v.degree().expect("nontrivial modulus");
    *count += dv * fiber_roots;
    if dv == 1 && fiber_roots == 1 {
        // v = y₁ + c monic; h = h₁·y₂ + h₀ with constant residues.
        let a = -&v.coeff(0);
        let h0 = h.coeff_y2(0).coeff(0);
        let h1 = h.coeff_y2(1).coeff(0);
        let b = (&(-&h0)).div(&h1).expect("leading residue is invertible");
        points.push([a, b]);
    } else {
        residual.push((v.clone(), h.cols.clone()));
    }
}

/// Outcome of a local singularity measurement at a torus point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MilnorOutcome {
    NotOnCurve,
    Smooth,
    Isolated(usize),
    Undecided(String),
}

/// Milnor number of the plane curve `f = 0` at a torus point with
/// Gaussian-rational coordinates. Exact: translate the point to the origin,
/// shear into general position (checked, not assumed), and read the local
/// intersection number of the two polars off the valuation of their
/// resultant.
pub fn milnor_number(f: &LaurentPoly, at: &[GaussRat; 2]) -> MilnorOutcome {
    assert_eq!(f.vars(), 2);
    assert!(!at[0].is_zero() && !at[1].is_zero(), "expected a torus point");
    let (f0, _) = f.shift_to_origin();
    let g = f0.substitute_shift(0, &at[0]).substitute_shift(1, &at[1]);
    if !g.eval(&[GaussRat::from_int(0), GaussRat::from_int(0)])
        .unwrap_or_else(|_| GaussRat::from_int(1))
        .is_zero()
    {
        return MilnorOutcome::NotOnCurve;
    }
    let origin = [GaussRat::from_int(0), GaussRat::from_int(0)];
    let d1 = g.deriv(0);
    let d2 = g.deriv(1);
    if !d1.eval(&origin).expect("polynomial").is_zero()
        || !d2.eval(&origin).expect("polynomial").is_zero()
    {
        return MilnorOutcome::Smooth;
    }

    for s in shear_values() {
        for t in shear_values() {
            let sheared = g
                .substitute_mix(0, 1, &GaussRat::from_int(s))
                .substitute_mix(1, 0, &GaussRat::from_int(t));
            let a = BiPoly::from_laurent(&sheared.deriv(0)).expect("polynomial");
            let b = BiPoly::from_laurent(&sheared.deriv(1)).expect("polynomial");
            if let Some(mu) = polar_valuation(&a, &b) {
                assert!(mu >= 1, "critical point must have positive multiplicity");
                return MilnorOutcome::Isolated(mu);
            }
        }
    }
    MilnorOutcome::Undecided("no shear put the polar curves in general position".into())
}

fn shear_values() -> impl Iterator<Item = i64> {
    [0i64, 1, -1, 2, -2, 3, -3].into_iter()
}

/// `ord_{y₁} Res_{y₂}(a, b)` equals the local intersection number at the
/// origin exactly when (i) the resultant is nonzero, (ii) neither leading
/// `y₂`-coefficient vanishes at `y₁ = 0` (unless the polynomial is `y₂`-free
/// altogether), and (iii) the fiber `y₁ = 0` carries no other common zero —
/// i.e. the gcd of the two restrictions is a pure power of `y₂`.
fn polar_valuation(a: &BiPoly, b: &BiPoly) -> Option<usize> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    for p in [a, b] {
        if p.deg_y2() > Some(0) {
            let lc_at_zero = p.lc_y2().expect("nonzero").coeff(0);
            if lc_at_zero.is_zero() {
                return None;
            }
        }
    }
    let restr_a = a.eval_y1(&GaussRat::from_int(0));
    let restr_b = b.eval_y1(&GaussRat::from_int(0));
    let g = restr_a.gcd(&restr_b);
    if g.is_zero() {
        return None;
    }
    let pure = g.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
    if !pure {
        return None;
    }
    let res = resultant_y2(a, b);
    if res.is_zero() {
        return None;
    }
    res.ord_at_zero()
}

/// Milnor number of a univariate polynomial at a root: multiplicity − 1.
pub fn univariate_milnor(f: &UPoly, root: &GaussRat) -> Option<usize> {
    if f.is_zero() || !f.eval(root).is_zero() {
        return None;
    }
    let lin = UPoly::new(vec![-root, GaussRat::from_int(1)]);
    let mut mult = 0usize;
    let mut g = f.clone();
    loop {
        let (q, r) = g.divrem(&lin).expect("nonzero divisor");
        if !r.is_zero() {
            break;
        }
        mult += 1;
        g = q;
    }
    Some(mult - 1)
}
