//! Uniform and point-mass norms of a small polynomial, and the CSV round trip.

use dirsum::{mu_norm_sq, read_coefficients, sigma_norm, write_coefficients, Measure, TaylorPoly, UnitPoint};

fn main() -> dirsum::Result<()> {
    let f = TaylorPoly::from_real(&[0.0, 1.0, 1.0])?;
    println!("f = {f}");
    for m in 1..=2 {
        println!("D_sigma,{m}(f) = {}", sigma_norm(&f, m));
    }

    let mu = Measure::point_masses(vec![(UnitPoint::one(), 1.0), (UnitPoint::new(std::f64::consts::PI)?, 0.5)])?;
    println!("D_mu,1(f) with mu = delta_1 + 0.5 delta_-1: {}", mu_norm_sq(&f, &mu, 1));

    let mut buf = Vec::new();
    write_coefficients(&f, &mut buf)?;
    print!("{}", String::from_utf8_lossy(&buf));
    assert_eq!(read_coefficients(buf.as_slice())?, f);
    Ok(())
}
