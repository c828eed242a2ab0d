//! Corrected partial sums that interpolate f at three atoms, built two ways,
//! and their convergence in the point-mass norm.

use dirsum::dirac::{converge_dirac, recursion_build};
use dirsum::{vandermonde_correct, Complex64, Measure, TaylorPoly, UnitPoint};

fn main() -> dirsum::Result<()> {
    let f = TaylorPoly::from_terms((1..=30).map(|k| (k, Complex64::new(1.0 / (k * k) as f64, 0.1 / k as f64))))?;
    let points = vec![UnitPoint::new(0.0)?, UnitPoint::new(2.0)?, UnitPoint::new(4.0)?];

    let (p, system) = vandermonde_correct(&f, &points, 1, 6)?;
    println!("correction coefficients from z^{}:", p.base_degree + 1);
    for b in &system.solution {
        println!("  {b:.6}");
    }
    println!("interpolation residuals {:?}", p.interpolation_residuals(&f));
    let h = recursion_build(&f, &points, 1, 6)?;
    println!("recursion vs Vandermonde: {:e}", h.max_abs_diff(&p.poly));

    let mu = Measure::point_masses(points.iter().map(|&p| (p, 1.0)).collect())?;
    for r in converge_dirac(&f, &mu, 1, 3, 30)?.iter().step_by(3) {
        println!("n={:>2}  ||f - P_n||^2 = {:.3e}", r.n, r.norm_sq);
    }
    Ok(())
}
