//! Audit built-in weight arrays and a Fejér ramp table against the array conditions.

use dirsum::weights::fejer_ramp;
use dirsum::{validate, Variant, WeightArray};

fn main() -> dirsum::Result<()> {
    for m in [1, 2, 4] {
        for array in [WeightArray::boxcar(Variant::Shifted, m)?, WeightArray::tapered(Variant::Shifted, m, 0.5)?] {
            let r = validate(&array, 200, 1e-6)?;
            println!(
                "m={m} {:?}: pass={} M={:.4} (claimed {:.4}) L={:.4} (claimed {:.4})",
                array.rule, r.pass, r.empirical_m, r.claimed_m, r.empirical_l, r.claimed_l
            );
        }
    }

    let fejer = fejer_ramp(Variant::Shifted, 2, 201, 1.0)?;
    let r = validate(&fejer, 200, 1e-6)?;
    println!("fejer ramp m=2: pass={} difference ok={}", r.pass, r.cond_difference_ok);
    for n in [50, 100, 150, 200] {
        println!("  row constant at n={n}: {:.4}", fejer.row_difference_constant(n));
    }
    if let Some(w) = r.witnesses.first() {
        println!("  first witness: {} at (n={}, k={}) value {:.4}", w.condition, w.n, w.k, w.value);
    }
    Ok(())
}
