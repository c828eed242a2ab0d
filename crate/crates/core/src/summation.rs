//! Plain partial sums versus weighted summation.
//!
//! The three-term family `f_n = n z^{n+m+1} − (n+1) z^{n+m} + z^m` has
//! closed-form local norms at `λ = 1` for both `f_n` and `S_{m,n} f_n`; their
//! ratio grows without bound, so the partial-sum operators are not uniformly
//! bounded. Weighted sums `p_n` restore convergence, which
//! [`converge_weighted`] measures on truncated expansions.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coefficients::{binom, partial_sum, sigma_norm, Measure, TaylorPoly, UnitPoint};
use crate::douglas::{local_norm, mu_norm_sq};
use crate::error::{Error, Result};
use crate::weights::{modified_taylor, Variant, WeightArray};

/// Closed forms and direct quotient-norm values for `f_n` at `λ = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub m: usize,
    pub n: usize,
    pub closed_s: f64,
    pub closed_f: f64,
    pub direct_s: f64,
    pub direct_f: f64,
    pub ratio: f64,
}

/// One row of a convergence experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub norm_sq: f64,
    pub bound_ratio: f64,
}

/// `f_n(z) = n z^{n+m+1} − (n+1) z^{n+m} + z^m`, in normal form.
pub fn counterexample_fn(m: usize, n: usize) -> TaylorPoly {
    let nf = n as f64;
    TaylorPoly::from_terms([
        (n + m + 1, nf.into()),
        (n + m, (-(nf + 1.0)).into()),
        (m, 1.0.into()),
    ])
    .expect("finite coefficients")
}

/// `(n+1)² C(m+n, m) − 2n − 1`.
pub fn closed_partial_sum_norm(m: usize, n: usize) -> f64 {
    let n1 = (n + 1) as f64;
    n1 * n1 * binom(m + n, m) - 2.0 * n as f64 - 1.0
}

/// `n² C(m+n, m−1) + C(m+n, m) − 1`.
pub fn closed_function_norm(m: usize, n: usize) -> f64 {
    let nf = n as f64;
    nf * nf * binom(m + n, m - 1) + binom(m + n, m) - 1.0
}

fn agrees(closed: f64, direct: f64) -> bool {
    let diff = (closed - direct).abs();
    diff <= 1e-12 || diff <= 1e-10 * closed.abs().max(direct.abs())
}

/// Evaluates both closed forms and the corresponding local norms at `λ = 1`.
pub fn counterexample_report(m: usize, n: usize) -> Result<CounterexampleReport> {
    if m == 0 {
        return Err(Error::InvalidOrder(m));
    }
    let f = counterexample_fn(m, n);
    let one = UnitPoint::one();
    let direct_s = local_norm(&partial_sum(&f, m, n), &one, m);
    let direct_f = local_norm(&f, &one, m);
    let closed_s = closed_partial_sum_norm(m, n);
    let closed_f = closed_function_norm(m, n);
    if !agrees(closed_s, direct_s) || !agrees(closed_f, direct_f) {
        return Err(Error::InvariantViolation(format!(
            "closed forms disagree at m={m}, n={n}: S {closed_s} vs {direct_s}, f {closed_f} vs {direct_f}"
        )));
    }
    let ratio = if closed_f == 0.0 { 0.0 } else { (closed_s / closed_f).sqrt() };
    Ok(CounterexampleReport {
        m,
        n,
        closed_s,
        closed_f,
        direct_s,
        direct_f,
        ratio,
    })
}

/// Both sides of `D_{λ,m}(q) ≤ (n+1) C(n+m+1, m) D_{σ,m}(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

/// Checks the local-versus-uniform comparison for `q` supported in `[m+1, n+m+1]`.
pub fn lemma47_check(q: &TaylorPoly, point: &UnitPoint, m: usize, n: usize) -> Result<ComparisonCheck> {
    if m == 0 {
        return Err(Error::InvalidOrder(m));
    }
    if let (Some(lo), Some(hi)) = (q.low_index(), q.degree()) {
        if lo < m + 1 || hi > n + m + 1 {
            return Err(Error::InvalidSupport(format!(
                "q occupies [{lo}, {hi}], allowed [{}, {}]",
                m + 1,
                n + m + 1
            )));
        }
    }
    let lhs = local_norm(q, point, m);
    let rhs = (n + 1) as f64 * binom(n + m + 1, m) * sigma_norm(q, m);
    Ok(ComparisonCheck {
        lhs,
        rhs,
        ok: lhs <= rhs * (1.0 + 1e-10),
    })
}

/// `norm_sq / denom`, with `0/0 = 0` and `x/0 = +∞`.
pub(crate) fn guarded_ratio(norm_sq: f64, denom: f64) -> f64 {
    if denom > 0.0 {
        norm_sq / denom
    } else if norm_sq == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// `D_{μ,m}(f − p_n)` for `n ∈ [n_lo, n_hi]`, plus its ratio to `D_{μ,m+1}(f)`.
///
/// `f` must have no coefficients below `m + 1`. A warning is logged when the
/// scan reaches past the truncation degree of `f`, since the records there are
/// exact recoveries rather than approximations.
pub fn converge_weighted(
    f: &TaylorPoly,
    measure: &Measure,
    m: usize,
    array: &WeightArray,
    n_lo: usize,
    n_hi: usize,
) -> Result<Vec<ConvergenceRecord>> {
    if array.variant != Variant::Shifted {
        return Err(Error::VariantMismatch {
            expected: Variant::Shifted.name(),
            got: array.variant.name(),
        });
    }
    if m == 0 {
        return Err(Error::InvalidOrder(m));
    }
    if f.low_index().is_some_and(|lo| lo < m + 1) {
        return Err(Error::InvalidSupport(format!(
            "f must start at index >= {} (starts at {})",
            m + 1,
            f.start()
        )));
    }
    if let Some(deg) = f.degree() {
        if n_hi + m + 1 > deg {
            log::warn!(
                "scan reaches n + m + 1 = {} past the truncation degree {deg}",
                n_hi + m + 1
            );
        }
    }
    let denom = mu_norm_sq(f, measure, m + 1);
    (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let p = modified_taylor(array, f, m, n)?;
            let norm_sq = mu_norm_sq(&(f - &p), measure, m);
            Ok(ConvergenceRecord {
                n,
                norm_sq,
                bound_ratio: guarded_ratio(norm_sq, denom),
            })
        })
        .collect()
}

/// Writes records as CSV with header `n,norm_sq,bound_ratio`.
pub fn write_records<W: std::io::Write>(records: &[ConvergenceRecord], writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(["n", "norm_sq", "bound_ratio"])?;
    for r in records {
        wtr.write_record([r.n.to_string(), r.norm_sq.to_string(), r.bound_ratio.to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}
