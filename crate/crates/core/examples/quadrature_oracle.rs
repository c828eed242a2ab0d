//! Cross-check the coefficient formulas against direct quadrature of the area integral.

use dirsum::{mu_norm_sq, quadrature_norm, Measure, QuadratureGrid, TaylorPoly, UnitPoint};

fn main() -> dirsum::Result<()> {
    let f = TaylorPoly::from_real(&[0.3, 1.0, -0.5, 0.0, 0.25])?;
    let measures = [
        ("sigma", Measure::Uniform),
        ("delta at angle 1", Measure::dirac(UnitPoint::new(1.0)?)),
        ("two atoms", Measure::point_masses(vec![(UnitPoint::new(0.5)?, 1.0), (UnitPoint::new(3.5)?, 2.0)])?),
    ];
    let grid = QuadratureGrid::default();
    for (name, mu) in &measures {
        for m in 1..=2 {
            let series = mu_norm_sq(&f, mu, m);
            let q = quadrature_norm(&f, mu, m, &grid)?;
            println!(
                "{name:>16} m={m}: series {series:.10} quadrature {:.10} (refinement change {:.1e})",
                q.value, q.error_estimate
            );
        }
    }
    Ok(())
}
