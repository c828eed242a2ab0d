//! The partial-sum operators are unbounded in the local norm at 1: the ratio
//! ||S_n f_n|| / ||f_n|| keeps growing.

use dirsum::summation::counterexample_report;

fn main() -> dirsum::Result<()> {
    for m in 1..=3 {
        println!("m = {m}");
        println!("{:>5} {:>14} {:>14} {:>10}", "n", "D(S_n f_n)", "D(f_n)", "ratio");
        for n in [1, 2, 5, 10, 20, 50, 100, 200] {
            let r = counterexample_report(m, n)?;
            println!("{n:>5} {:>14.6e} {:>14.6e} {:>10.4}", r.closed_s, r.closed_f, r.ratio);
        }
    }
    Ok(())
}
