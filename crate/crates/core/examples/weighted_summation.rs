//! Weighted Taylor polynomials p_n converge in the local norm at 1 for
//! f = sum k^-3 z^k, with Boxcar and Tapered weights.

use dirsum::{converge_weighted, Complex64, Measure, TaylorPoly, UnitPoint, Variant, WeightArray};

fn main() -> dirsum::Result<()> {
    let f = TaylorPoly::from_terms((2..=60).map(|k| (k, Complex64::new((k as f64).powi(-3), 0.0))))?;
    let mu = Measure::dirac(UnitPoint::one());
    let arrays = [
        ("boxcar", WeightArray::boxcar(Variant::Shifted, 1)?),
        ("tapered(0.5)", WeightArray::tapered(Variant::Shifted, 1, 0.5)?),
    ];
    for (name, array) in &arrays {
        let recs = converge_weighted(&f, &mu, 1, array, 0, 56)?;
        println!("{name}");
        for r in recs.iter().step_by(8) {
            println!("  n={:>3}  D(f - p_n) = {:.3e}  ratio = {:.4}", r.n, r.norm_sq, r.bound_ratio);
        }
    }
    Ok(())
}
