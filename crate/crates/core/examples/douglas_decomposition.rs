//! f = alpha + (z - lambda) g, the local norm through g, and a two-point split.

use dirsum::{difference_quotient, local_norm, multi_decompose, sigma_norm, TaylorPoly, UnitPoint};

fn main() -> dirsum::Result<()> {
    let f = TaylorPoly::from_real(&[0.0, 1.0, 0.0, 0.0, 1.0])?;
    let one = UnitPoint::one();

    let d = difference_quotient(&f, &one);
    println!("f = {f}");
    println!("alpha = {}, g = {}", d.alpha, d.quotient);
    for m in 1..=3 {
        println!(
            "D_1,{m}(f) = {} = D_sigma,{}(g) = {}",
            local_norm(&f, &one, m),
            m - 1,
            sigma_norm(&d.quotient, m - 1)
        );
    }

    let pts = [one, UnitPoint::new(std::f64::consts::PI)?];
    let split = multi_decompose(&f, &pts)?;
    println!("at {{1, -1}}: residual {}, core {}", split.residual, split.core);
    println!("reconstruction error {:e}", split.reconstruct().max_abs_diff(&f));
    Ok(())
}
