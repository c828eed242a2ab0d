//! Direct quadrature of the area-integral definition
//!
//! `D_{μ,m}(f) = 1/(m!(m−1)!) ∫_𝔻 |f^{(m)}(z)|² P_μ(z) (1−|z|²)^{m−1} dA(z)`
//!
//! with `dA` normalized to total mass 1. None of the series formulas are used
//! here, so the result is an independent check on them.
//!
//! The radial variable is `t = r²` (so `dA = dt dθ / 2π`) on Gauss–Legendre
//! nodes; the angular mean on each circle is a uniform trapezoid sum. For
//! point masses the Poisson kernel on the circle of radius `r` has width of
//! order `1 − r`, so with singular refinement enabled each circle gets at
//! least `REFINE_WIDTHS / (1 − r)` angular nodes.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::coefficients::{falling_factorial, CompensatedSum, Measure, TaylorPoly};
use crate::error::{Error, Result};

/// Angular nodes per kernel width on refined circles; the trapezoid aliasing
/// error there is about `exp(−REFINE_WIDTHS)`.
const REFINE_WIDTHS: f64 = 24.0;

const MAX_ANGULAR_NODES: usize = 1 << 25;

const CHUNK: usize = 1 << 16;

/// Relative disagreement between a grid and its doubling that counts as failure.
pub const REFINEMENT_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadratureGrid {
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    pub singular_refinement: bool,
}

impl QuadratureGrid {
    pub fn new(radial_nodes: usize, angular_nodes: usize, singular_refinement: bool) -> Result<Self> {
        if radial_nodes < 16 || angular_nodes < 64 {
            return Err(Error::GridTooCoarse(format!(
                "need radial >= 16 and angular >= 64, got ({radial_nodes}, {angular_nodes})"
            )));
        }
        Ok(Self {
            radial_nodes,
            angular_nodes,
            singular_refinement,
        })
    }

    pub fn doubled(&self) -> Self {
        Self {
            radial_nodes: 2 * self.radial_nodes,
            angular_nodes: 2 * self.angular_nodes,
            singular_refinement: self.singular_refinement,
        }
    }
}

impl Default for QuadratureGrid {
    fn default() -> Self {
        Self {
            radial_nodes: 128,
            angular_nodes: 512,
            singular_refinement: true,
        }
    }
}

/// Gauss–Legendre nodes and weights on `[0, 1]`, ascending.
pub fn gauss_legendre_unit(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 1..=n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 0 { 1.0 } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = nf * (x * p - pm1) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map from [-1, 1] to [0, 1]
        out.push(((1.0 + x) / 2.0, w / 2.0));
        if 2 * i - 1 != n {
            out.push(((1.0 - x) / 2.0, w / 2.0));
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// `P_μ(z)`: `1` for the uniform measure, `Σ c_j (1−|z|²)/|z−λ_j|²` for atoms.
pub fn poisson_kernel(z: Complex64, measure: &Measure) -> Result<f64> {
    if !(z.norm() < 1.0 - 1e-12) {
        return Err(Error::OutsideDisk(format!("{z}")));
    }
    Ok(kernel(z, measure))
}

fn kernel(z: Complex64, measure: &Measure) -> f64 {
    match measure {
        Measure::Uniform => 1.0,
        Measure::PointMasses(atoms) => {
            let w = 1.0 - z.norm_sqr();
            atoms
                .iter()
                .map(|a| a.mass * w / (z - a.point.value()).norm_sqr())
                .sum()
        }
    }
}

/// `f^{(m)}`: coefficient of `z^{k−m}` is `k!/(k−m)! · a_k`.
pub fn derivative(f: &TaylorPoly, m: usize) -> TaylorPoly {
    let Some(deg) = f.degree() else {
        return TaylorPoly::zero();
    };
    if deg < m {
        return TaylorPoly::zero();
    }
    let coeffs = (m..=deg)
        .map(|k| f.coeff(k) * falling_factorial(k, m))
        .collect();
    TaylorPoly::from_raw(0, coeffs)
}

/// Quadrature value together with the change observed under grid doubling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureEstimate {
    /// Result on the doubled grid.
    pub value: f64,
    /// Result on the requested grid.
    pub coarse: f64,
    /// `|value − coarse|`.
    pub error_estimate: f64,
    pub grid: QuadratureGrid,
}

/// Integrates the definition on `grid` and on its doubling.
///
/// Fails with `NonConvergent` when the two disagree by more than
/// [`REFINEMENT_TOLERANCE`] relative.
pub fn quadrature_norm(f: &TaylorPoly, measure: &Measure, m: usize, grid: &QuadratureGrid) -> Result<QuadratureEstimate> {
    if m == 0 {
        return Err(Error::InvalidOrder(m));
    }
    let coarse = integrate(f, measure, m, grid);
    let fine = integrate(f, measure, m, &grid.doubled());
    let error_estimate = (fine - coarse).abs();
    if error_estimate > REFINEMENT_TOLERANCE * fine.abs().max(coarse.abs()) {
        return Err(Error::NonConvergent { coarse, fine });
    }
    Ok(QuadratureEstimate {
        value: fine,
        coarse,
        error_estimate,
        grid: *grid,
    })
}

/// One quadrature pass, no refinement check.
pub fn integrate(f: &TaylorPoly, measure: &Measure, m: usize, grid: &QuadratureGrid) -> f64 {
    let g = derivative(f, m);
    if g.is_zero() {
        return 0.0;
    }
    let refine = grid.singular_refinement && matches!(measure, Measure::PointMasses(_));
    let shells: Vec<f64> = gauss_legendre_unit(grid.radial_nodes)
        .into_iter()
        .map(|(t, w)| {
            let r = t.sqrt();
            let nodes = if refine {
                let need = (REFINE_WIDTHS / (1.0 - r)).ceil() as usize;
                need.next_multiple_of(64)
                    .clamp(grid.angular_nodes, MAX_ANGULAR_NODES.max(grid.angular_nodes))
            } else {
                grid.angular_nodes
            };
            w * (1.0 - t).powi(m as i32 - 1) * angular_mean(&g, measure, r, nodes)
        })
        .collect();
    let total: CompensatedSum = shells.into_iter().collect();
    let norm = falling_factorial(m, m) * falling_factorial(m - 1, m - 1);
    total.value() / norm
}

/// Trapezoid mean of `|g|² P_μ` over the circle of radius `r`.
fn angular_mean(g: &TaylorPoly, measure: &Measure, r: f64, nodes: usize) -> f64 {
    let step = std::f64::consts::TAU / nodes as f64;
    let partials: Vec<f64> = (0..nodes.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = CompensatedSum::new();
            for j in (c * CHUNK)..((c + 1) * CHUNK).min(nodes) {
                let z = Complex64::from_polar(r, step * j as f64);
                acc.add(g.evaluate(z).norm_sqr() * kernel(z, measure));
            }
            acc.value()
        })
        .collect();
    partials.into_iter().collect::<CompensatedSum>().value() / nodes as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{binom, UnitPoint};

    fn poly(terms: &[(usize, f64)]) -> TaylorPoly {
        TaylorPoly::from_terms(terms.iter().map(|&(k, a)| (k, Complex64::new(a, 0.0)))).unwrap()
    }

    #[test]
    fn gauss_legendre_exactness() {
        let rule = gauss_legendre_unit(16);
        assert_eq!(rule.len(), 16);
        for p in 0..32 {
            let q: f64 = rule.iter().map(|&(t, w)| w * t.powi(p)).sum();
            assert!((q - 1.0 / (p as f64 + 1.0)).abs() < 1e-14, "degree {p}");
        }
        let odd = gauss_legendre_unit(17);
        assert_eq!(odd.len(), 17);
        assert!((odd[8].0 - 0.5).abs() < 1e-15);
        let outer = gauss_legendre_unit(512);
        assert!(outer.last().unwrap().0 <= 1.0 - 1e-6);
    }

    #[test]
    fn poisson_examples() {
        let one = Measure::dirac(UnitPoint::one());
        assert!((poisson_kernel(Complex64::new(0.0, 0.0), &one).unwrap() - 1.0).abs() < 1e-15);
        let lam = Measure::dirac(UnitPoint::new(2.0).unwrap());
        assert!((poisson_kernel(Complex64::new(0.0, 0.0), &lam).unwrap() - 1.0).abs() < 1e-15);
        assert!((poisson_kernel(Complex64::new(0.5, 0.0), &one).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(poisson_kernel(Complex64::new(0.3, 0.6), &Measure::Uniform).unwrap(), 1.0);
        assert!(matches!(
            poisson_kernel(Complex64::new(1.0, 0.0), &one),
            Err(Error::OutsideDisk(_))
        ));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative(&poly(&[(3, 1.0)]), 2), poly(&[(1, 6.0)]));
        for m in 1..6 {
            let fact = (1..=m).product::<usize>() as f64;
            assert_eq!(derivative(&poly(&[(m, 1.0)]), m), poly(&[(0, fact)]));
        }
        assert!(derivative(&poly(&[(0, 1.0), (2, 3.0)]), 3).is_zero());
    }

    #[test]
    fn monomials_under_uniform_measure() {
        let grid = QuadratureGrid::new(16, 64, false).unwrap();
        for m in 1..=3 {
            for k in m..=12 {
                let q = quadrature_norm(&poly(&[(k, 1.0)]), &Measure::Uniform, m, &grid).unwrap();
                let want = binom(k, m);
                assert!((q.value - want).abs() <= 1e-10 * want, "k={k} m={m}: {}", q.value);
            }
        }
    }

    #[test]
    fn zero_function() {
        let q = quadrature_norm(&TaylorPoly::zero(), &Measure::dirac(UnitPoint::one()), 1, &QuadratureGrid::default())
            .unwrap();
        assert_eq!(q.value, 0.0);
    }

    #[test]
    fn grid_validation() {
        assert!(QuadratureGrid::new(8, 64, false).is_err());
        assert!(QuadratureGrid::new(16, 32, false).is_err());
    }

    #[test]
    fn single_atom_square() {
        let q = quadrature_norm(&poly(&[(2, 1.0)]), &Measure::dirac(UnitPoint::one()), 1, &QuadratureGrid::default())
            .unwrap();
        assert!((q.value - 2.0).abs() < 1e-3 * 2.0, "{q:?}");
    }
}
