//! Closed-form corrections for measures made of finitely many point masses.
//!
//! `P^Λ_{m,n} f` keeps the Taylor coefficients `m ..= n+m−s` of `f` and replaces
//! the top `s` coefficients so that the polynomial interpolates `f` at every
//! atom. The replacement coefficients solve a Vandermonde system whose
//! right-hand side is the tail series `Σ_{k≥j0} a_k λ_j^{k−j0}`. The same
//! polynomial is also reachable by a two-point partial-fraction recursion,
//! which [`recursion_build`] implements as an independent construction.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::coefficients::{check_distinct, ComplexCompensatedSum, Measure, TaylorPoly, UnitPoint};
use crate::douglas::mu_norm_sq;
use crate::error::{Error, Result};
use crate::summation::ConvergenceRecord;

/// Largest number of atoms handled by the dense solver.
pub const MAX_POINTS: usize = 16;

const PIVOT_FLOOR: f64 = 1e-13;

/// `Σ_{k=j0}^{deg} a_k λ^{k−j0}`, with powers taken from the angle and the
/// terms accumulated with compensation.
pub fn tail_sum(f: &TaylorPoly, point: &UnitPoint, j0: usize) -> Complex64 {
    let mut acc = ComplexCompensatedSum::new();
    for (k, a) in f.terms().filter(|&(k, _)| k >= j0) {
        acc.add(a * point.pow(k - j0));
    }
    acc.value()
}

/// A partial sum with its top coefficients corrected to interpolate at `points`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrectedPolynomial {
    pub poly: TaylorPoly,
    /// `n + m − s`: the last index copied unchanged from `f`.
    pub base_degree: usize,
    pub points: Vec<UnitPoint>,
}

impl CorrectedPolynomial {
    /// `|P(λ_j) − f(λ_j)|` for each point.
    pub fn interpolation_residuals(&self, f: &TaylorPoly) -> Vec<f64> {
        self.points
            .iter()
            .map(|p| (self.poly.evaluate(p.value()) - f.boundary_value(p)).norm())
            .collect()
    }

    fn check_interpolation(&self, f: &TaylorPoly) -> Result<()> {
        for (p, r) in self.points.iter().zip(self.interpolation_residuals(f)) {
            let scale = 1.0 + f.boundary_value(p).norm();
            if !(r <= 1e-9 * scale) {
                return Err(Error::InvariantViolation(format!(
                    "interpolation residual {r:e} at angle {}",
                    p.theta()
                )));
            }
        }
        Ok(())
    }
}

/// The system `A B = C` with `A[j][i] = λ_j^i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VandermondeSystem {
    pub points: Vec<UnitPoint>,
    pub matrix: Vec<Vec<Complex64>>,
    pub rhs: Vec<Complex64>,
    pub solution: Vec<Complex64>,
    /// `det A` from the elimination pivots.
    pub determinant: Complex64,
}

impl VandermondeSystem {
    pub fn new(points: &[UnitPoint], rhs: Vec<Complex64>) -> Result<Self> {
        let s = points.len();
        if s > MAX_POINTS {
            return Err(Error::TooManyPoints { got: s, max: MAX_POINTS });
        }
        check_distinct(points)?;
        let matrix: Vec<Vec<Complex64>> = points
            .iter()
            .map(|p| (0..s).map(|i| p.pow(i)).collect())
            .collect();
        let (solution, determinant) = solve_partial_pivoting(&matrix, &rhs)?;
        let system = Self {
            points: points.to_vec(),
            matrix,
            rhs,
            solution,
            determinant,
        };
        system.check()?;
        Ok(system)
    }

    /// `Π_{i<j} |λ_j − λ_i|`.
    pub fn determinant_product_formula(&self) -> f64 {
        let mut prod = 1.0;
        for j in 0..self.points.len() {
            for i in 0..j {
                prod *= (self.points[j].value() - self.points[i].value()).norm();
            }
        }
        prod
    }

    /// `max_j |(A B − C)_j|`.
    pub fn residual_norm(&self) -> f64 {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, &c)| {
                let ab: Complex64 = row.iter().zip(&self.solution).map(|(a, b)| a * b).sum();
                (ab - c).norm()
            })
            .fold(0.0, f64::max)
    }

    fn check(&self) -> Result<()> {
        let formula = self.determinant_product_formula();
        let det = self.determinant.norm();
        if (det - formula).abs() > 1e-8 * formula {
            return Err(Error::InvariantViolation(format!(
                "|det A| = {det:e} but the product formula gives {formula:e}"
            )));
        }
        let max_rhs = self.rhs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let res = self.residual_norm();
        if res > 1e-10 * (1.0 + max_rhs) {
            return Err(Error::InvariantViolation(format!("Vandermonde residual {res:e}")));
        }
        Ok(())
    }
}

/// Complex Gaussian elimination with partial pivoting; returns the solution
/// and the determinant.
pub fn solve_partial_pivoting(matrix: &[Vec<Complex64>], rhs: &[Complex64]) -> Result<(Vec<Complex64>, Complex64)> {
    let s = rhs.len();
    let mut a: Vec<Vec<Complex64>> = matrix.to_vec();
    let mut b = rhs.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..s {
        let (piv, mag) = (col..s)
            .map(|r| (r, a[r][col].norm()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if mag < PIVOT_FLOOR {
            return Err(Error::SingularSystem(mag));
        }
        if piv != col {
            a.swap(piv, col);
            b.swap(piv, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in (col + 1)..s {
            let factor = a[r][col] / p;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for c in col..s {
                let v = a[col][c];
                a[r][c] -= factor * v;
            }
            let v = b[col];
            b[r] -= factor * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); s];
    for r in (0..s).rev() {
        let acc: Complex64 = ((r + 1)..s).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - acc) / a[r][r];
    }
    Ok((x, det))
}

fn require_start(f: &TaylorPoly, m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidOrder(m));
    }
    if f.low_index().is_some_and(|lo| lo < m) {
        return Err(Error::InvalidSupport(format!(
            "f must start at index >= {m} (starts at {})",
            f.start()
        )));
    }
    Ok(())
}

/// `q_n = Σ_{k=m}^{n+m−1} a_k z^k + (Σ_{k≥n+m} a_k λ^{k−n−m}) z^{n+m}`.
pub fn single_point_correction(f: &TaylorPoly, point: &UnitPoint, m: usize, n: usize) -> Result<CorrectedPolynomial> {
    require_start(f, m)?;
    let top = n + m;
    let head = if top > m { f.restrict(m, top - 1) } else { TaylorPoly::zero() };
    let corrected = TaylorPoly::from_raw(top, vec![tail_sum(f, point, top)]);
    let out = CorrectedPolynomial {
        poly: &head + &corrected,
        base_degree: top - 1,
        points: vec![*point],
    };
    out.check_interpolation(f)?;
    Ok(out)
}

/// `P^Λ_{m,n} f` from the Vandermonde system.
pub fn vandermonde_correct(
    f: &TaylorPoly,
    points: &[UnitPoint],
    m: usize,
    n: usize,
) -> Result<(CorrectedPolynomial, VandermondeSystem)> {
    require_start(f, m)?;
    let s = points.len();
    if s == 0 {
        return Err(Error::InvalidSupport("at least one point is required".into()));
    }
    if s > MAX_POINTS {
        return Err(Error::TooManyPoints { got: s, max: MAX_POINTS });
    }
    if n < s {
        return Err(Error::IndexTooSmall { n, s });
    }
    check_distinct(points)?;
    let j0 = n + m - s + 1;
    let rhs = points.iter().map(|p| tail_sum(f, p, j0)).collect();
    let system = VandermondeSystem::new(points, rhs)?;
    let head = f.restrict(m, j0 - 1);
    let top = TaylorPoly::from_raw(j0, system.solution.clone());
    let corrected = CorrectedPolynomial {
        poly: &head + &top,
        base_degree: j0 - 1,
        points: points.to_vec(),
    };
    corrected.check_interpolation(f)?;
    Ok((corrected, system))
}

/// `P^Λ_{m,n} f` by the two-point recursion
/// `h = a (z − λ_1) P^{Λ∖{λ_1}}_{m,n−1} f + b (z − λ_2) P^{Λ∖{λ_2}}_{m,n−1} f`
/// with `a = (λ_2 − λ_1)^{-1}`, `b = (λ_1 − λ_2)^{-1}`; one point falls back
/// to [`single_point_correction`].
pub fn recursion_build(f: &TaylorPoly, points: &[UnitPoint], m: usize, n: usize) -> Result<TaylorPoly> {
    require_start(f, m)?;
    let s = points.len();
    if s == 0 {
        return Err(Error::InvalidSupport("at least one point is required".into()));
    }
    if s > MAX_POINTS {
        return Err(Error::TooManyPoints { got: s, max: MAX_POINTS });
    }
    if n < s {
        return Err(Error::IndexTooSmall { n, s });
    }
    check_distinct(points)?;
    build(f, points, m, n)
}

fn build(f: &TaylorPoly, points: &[UnitPoint], m: usize, n: usize) -> Result<TaylorPoly> {
    if points.len() == 1 {
        return Ok(single_point_correction(f, &points[0], m, n)?.poly);
    }
    let (l1, l2) = (points[0].value(), points[1].value());
    let without_second: Vec<UnitPoint> = std::iter::once(points[0]).chain(points[2..].iter().copied()).collect();
    let without_first: Vec<UnitPoint> = points[1..].to_vec();
    let p1 = build(f, &without_second, m, n - 1)?;
    let p2 = build(f, &without_first, m, n - 1)?;
    let a = (l2 - l1).inv();
    let b = (l1 - l2).inv();
    Ok(&p2.mul_linear(l1).scale(a) + &p1.mul_linear(l2).scale(b))
}

/// `‖f − P^Λ_{m,n} f‖²_{μ,m}` for `n ∈ [n_lo, n_hi]`, `Λ` the atoms of `μ`.
pub fn converge_dirac(
    f: &TaylorPoly,
    measure: &Measure,
    m: usize,
    n_lo: usize,
    n_hi: usize,
) -> Result<Vec<ConvergenceRecord>> {
    let points = match measure {
        Measure::PointMasses(atoms) if !atoms.is_empty() => measure.points(),
        _ => return Err(Error::NotPointMasses),
    };
    if n_lo < points.len() {
        return Err(Error::IndexTooSmall { n: n_lo, s: points.len() });
    }
    let denom = mu_norm_sq(f, measure, m + 1);
    (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let (corrected, _) = vandermonde_correct(f, &points, m, n)?;
            let norm_sq = mu_norm_sq(&(f - &corrected.poly), measure, m);
            Ok(ConvergenceRecord {
                n,
                norm_sq,
                bound_ratio: crate::summation::guarded_ratio(norm_sq, denom),
            })
        })
        .collect()
}
