//! Lower-triangular weight arrays `(w_{n,k})` and their audit.
//!
//! Two index conventions exist. The shifted one is used by the modified
//! Taylor polynomials `p_n = Σ_{k=m+1}^{n+m+1} w_{n,k} a_k z^k`; the base one
//! drives the quotient-side maps used for point-mass measures. A valid array
//! is bounded by `M`, converges to 1 down every column, and has adjacent row
//! differences at most `L / sqrt((n+1) C(bound_k, bound_m))`.

use std::collections::BTreeMap;
use std::io::Read;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coefficients::{binom, ensure_finite, TaylorPoly};
use crate::error::{Error, Result};

/// Relative slack used when comparing empirical constants with claimed ones.
const CLAIM_SLACK: f64 = 1e-9;

/// Contraction factor a slowly converging column must show when the row
/// index doubles.
pub const COLUMN_CONTRACTION: f64 = 0.9;

/// Witnesses kept per condition.
const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// Support `k ∈ [m+1, m+n+1]`.
    Shifted,
    /// Support `k ∈ [m, m+n]`.
    Base,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Shifted => "shifted",
            Variant::Base => "base",
        }
    }
}

/// Explicit triangular table: `rows[n][k − k_min(n)]`. Rows past the end
/// and entries past a row's end read as zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightTable {
    pub rows: Vec<Vec<Complex64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Rule {
    Boxcar,
    Tapered { eps: f64 },
    Table(WeightTable),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightArray {
    pub variant: Variant,
    pub rule: Rule,
    pub order_m: usize,
    pub claimed_m: f64,
    pub claimed_l: f64,
}

impl WeightArray {
    /// All ones on the support: `M = 1`, `L = 0`.
    pub fn boxcar(variant: Variant, m: usize) -> Result<Self> {
        check_order(m)?;
        Ok(Self {
            variant,
            rule: Rule::Boxcar,
            order_m: m,
            claimed_m: 1.0,
            claimed_l: 0.0,
        })
    }

    /// Linear taper whose adjacent differences sit exactly at `eps` times the
    /// permitted row bound, so `L = |eps|`.
    ///
    /// The claimed `M` is `1 + |eps| · sup_n n δ_n`, infinite when that
    /// supremum diverges (base variant with `m = 1`).
    pub fn tapered(variant: Variant, m: usize, eps: f64) -> Result<Self> {
        check_order(m)?;
        if !eps.is_finite() {
            return Err(Error::NonFinite(format!("taper eps {eps}")));
        }
        Ok(Self {
            variant,
            rule: Rule::Tapered { eps },
            order_m: m,
            claimed_m: 1.0 + eps.abs() * taper_supremum(variant, m),
            claimed_l: eps.abs(),
        })
    }

    pub fn table(variant: Variant, m: usize, table: WeightTable, claimed_m: f64, claimed_l: f64) -> Result<Self> {
        check_order(m)?;
        for row in &table.rows {
            for &w in row {
                ensure_finite(w)?;
            }
        }
        Ok(Self {
            variant,
            rule: Rule::Table(table),
            order_m: m,
            claimed_m,
            claimed_l,
        })
    }

    /// Tabulates `rule(n, k)` over the support of rows `0..rows`.
    pub fn table_from_fn(
        variant: Variant,
        m: usize,
        rows: usize,
        claimed_m: f64,
        claimed_l: f64,
        rule: impl Fn(usize, usize) -> Complex64,
    ) -> Result<Self> {
        let table = WeightTable {
            rows: (0..rows)
                .map(|n| {
                    let (lo, hi) = support(variant, m, n);
                    (lo..=hi).map(|k| rule(n, k)).collect()
                })
                .collect(),
        };
        Self::table(variant, m, table, claimed_m, claimed_l)
    }

    /// Loads an `n,k,re,im` table; every entry must lie inside its row's support.
    pub fn table_from_csv<R: Read>(
        reader: R,
        variant: Variant,
        m: usize,
        claimed_m: f64,
        claimed_l: f64,
    ) -> Result<Self> {
        check_order(m)?;
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["n", "k", "re", "im"] {
            return Err(Error::Parse("expected header n,k,re,im".into()));
        }
        let mut rows: Vec<Vec<Complex64>> = Vec::new();
        for (line, record) in rdr.records().enumerate() {
            let record = record?;
            let get = |i: usize| record.get(i).unwrap_or("");
            let bad = |what: &str| Error::Parse(format!("row {}: bad {what}", line + 1));
            let n: usize = get(0).parse().map_err(|_| bad("n"))?;
            let k: usize = get(1).parse().map_err(|_| bad("k"))?;
            let re: f64 = get(2).parse().map_err(|_| bad("re"))?;
            let im: f64 = get(3).parse().map_err(|_| bad("im"))?;
            let (lo, hi) = support(variant, m, n);
            if k < lo || k > hi {
                return Err(Error::InvalidSupport(format!(
                    "table entry (n={n}, k={k}) outside [{lo}, {hi}]"
                )));
            }
            if rows.len() <= n {
                rows.resize(n + 1, Vec::new());
            }
            let row = &mut rows[n];
            if row.len() <= k - lo {
                row.resize(k - lo + 1, Complex64::new(0.0, 0.0));
            }
            row[k - lo] = ensure_finite(Complex64::new(re, im))?;
        }
        Self::table(variant, m, WeightTable { rows }, claimed_m, claimed_l)
    }

    pub fn support(&self, n: usize) -> (usize, usize) {
        support(self.variant, self.order_m, n)
    }

    /// `δ_n = 1 / sqrt((n+1) C(bound_k, bound_m))`, the row-difference scale.
    pub fn row_bound(&self, n: usize) -> f64 {
        1.0 / row_scale(self.variant, self.order_m, n)
    }

    /// `w_{n,k}`, zero outside the support.
    pub fn weight(&self, n: usize, k: usize) -> Complex64 {
        let (lo, hi) = self.support(n);
        if k < lo || k > hi {
            return Complex64::new(0.0, 0.0);
        }
        match &self.rule {
            Rule::Boxcar => Complex64::new(1.0, 0.0),
            Rule::Tapered { eps } => {
                Complex64::new(1.0 + eps * (k - lo) as f64 / row_scale(self.variant, self.order_m, n), 0.0)
            }
            Rule::Table(t) => t
                .rows
                .get(n)
                .and_then(|row| row.get(k - lo))
                .copied()
                .unwrap_or(Complex64::new(0.0, 0.0)),
        }
    }

    /// `w_{n,k+1} − w_{n,k}`. Rule-defined arrays difference the formula
    /// itself, so no cancellation between two entries close to 1.
    pub fn weight_step(&self, n: usize, k: usize) -> Complex64 {
        let (lo, hi) = self.support(n);
        match &self.rule {
            Rule::Boxcar if k + 1 == lo => Complex64::new(1.0, 0.0),
            Rule::Boxcar if k == hi => Complex64::new(-1.0, 0.0),
            Rule::Boxcar => Complex64::new(0.0, 0.0),
            Rule::Tapered { eps } if k >= lo && k < hi => {
                Complex64::new(eps / row_scale(self.variant, self.order_m, n), 0.0)
            }
            _ => self.weight(n, k + 1) - self.weight(n, k),
        }
    }

    /// `max_k |w_{n,k+1} − w_{n,k}| · sqrt((n+1) C(bound))` over one row;
    /// zero for a single-entry row.
    pub fn row_difference_constant(&self, n: usize) -> f64 {
        let (lo, hi) = self.support(n);
        let scale = row_scale(self.variant, self.order_m, n);
        (lo..hi)
            .map(|k| self.weight_step(n, k).norm() * scale)
            .fold(0.0, f64::max)
    }

    fn expect_order(&self, m: usize) -> Result<()> {
        if m != self.order_m {
            return Err(Error::OrderMismatch {
                array: self.order_m,
                requested: m,
            });
        }
        Ok(())
    }
}

fn check_order(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidOrder(m));
    }
    Ok(())
}

fn support(variant: Variant, m: usize, n: usize) -> (usize, usize) {
    match variant {
        Variant::Shifted => (m + 1, m + n + 1),
        Variant::Base => (m, m + n),
    }
}

/// `sqrt((n+1) C(bound_k, bound_m))` with `(m+n+1, m)` for the shifted and
/// `(m+n, m−1)` for the base variant.
fn row_scale(variant: Variant, m: usize, n: usize) -> f64 {
    let b = match variant {
        Variant::Shifted => binom(m + n + 1, m),
        Variant::Base => binom(m + n, m - 1),
    };
    ((n + 1) as f64 * b).sqrt()
}

/// `sup_n n δ_n` for the taper.
///
/// `n δ_n` tends to 1 from below when `(n+1) C(bound)` grows like `n²`
/// (shifted `m = 1`, base `m = 2`), diverges for base `m = 1`, and otherwise
/// decays, peaking at small `n`.
fn taper_supremum(variant: Variant, m: usize) -> f64 {
    match (variant, m) {
        (Variant::Base, 1) => f64::INFINITY,
        (Variant::Shifted, 1) | (Variant::Base, 2) => 1.0,
        _ => (0..=10_000)
            .map(|n| n as f64 / row_scale(variant, m, n))
            .fold(0.0, f64::max),
    }
}

/// A failing `(n, k)` with the condition it violates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub condition: String,
    pub n: usize,
    pub k: usize,
    pub value: f64,
}

/// Result of scanning a weight array over rows `0..=scanned_n_max`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub scanned_n_max: usize,
    pub cond_support_ok: bool,
    #[serde(rename = "empirical_M")]
    pub empirical_m: f64,
    #[serde(rename = "claimed_M")]
    pub claimed_m: f64,
    pub cond_bounded_ok: bool,
    /// Column `k` ↦ largest `|w(n,k) − 1|` over the top quartile of rows.
    pub column_gap: BTreeMap<usize, f64>,
    pub cond_column_ok: bool,
    #[serde(rename = "empirical_L")]
    pub empirical_l: f64,
    #[serde(rename = "claimed_L")]
    pub claimed_l: f64,
    pub cond_difference_ok: bool,
    pub witnesses: Vec<Witness>,
    pub pass: bool,
}

/// Audits the four array conditions over rows `0..=n_max`.
///
/// * support: zero outside the variant's window (checked two columns past the
///   top of each row and every column below it);
/// * boundedness: `max |w| ≤ claimed_M (1 + 1e−9)`;
/// * column limit: for each column `k ≤ m + n_max/2`, either every
///   `|w(n,k) − 1|` in the top quartile of rows is within `tol_col`, or the gap
///   is non-increasing there and shrinks by [`COLUMN_CONTRACTION`] from row
///   `n_max/2` to row `n_max`. Either way this is consistency with
///   convergence, not a proof of it;
/// * row differences: `empirical_L ≤ claimed_L (1 + 1e−9)`.
pub fn validate(array: &WeightArray, n_max: usize, tol_col: f64) -> Result<ValidationReport> {
    if n_max < 4 {
        return Err(Error::ScanTooSmall(n_max));
    }
    let m = array.order_m;
    let mut witnesses = Vec::new();
    let mut push = |w: Witness, count: &mut usize| {
        if *count < MAX_WITNESSES {
            witnesses.push(w);
        }
        *count += 1;
    };

    let mut support_failures = 0;
    let mut bound_failures = 0;
    let mut diff_failures = 0;
    let mut empirical_m: f64 = 0.0;
    let mut empirical_l: f64 = 0.0;
    let m_limit = array.claimed_m * (1.0 + CLAIM_SLACK);
    let l_limit = array.claimed_l * (1.0 + CLAIM_SLACK);

    for n in 0..=n_max {
        let (lo, hi) = array.support(n);
        for k in (0..lo).chain(hi + 1..=hi + 2) {
            let w = array.weight(n, k);
            if w != Complex64::new(0.0, 0.0) {
                push(
                    Witness { condition: "support".into(), n, k, value: w.norm() },
                    &mut support_failures,
                );
            }
        }
        let scale = row_scale(array.variant, m, n);
        for k in lo..=hi {
            let w = array.weight(n, k).norm();
            empirical_m = empirical_m.max(w);
            if !(w <= m_limit) {
                push(
                    Witness { condition: "bounded".into(), n, k, value: w },
                    &mut bound_failures,
                );
            }
            if k < hi {
                let d = array.weight_step(n, k).norm() * scale;
                empirical_l = empirical_l.max(d);
                if !(d <= l_limit) {
                    push(
                        Witness { condition: "difference".into(), n, k, value: d },
                        &mut diff_failures,
                    );
                }
            }
        }
    }

    let window_lo = n_max - n_max / 4;
    let half = n_max / 2;
    let (k_first, _) = array.support(0);
    let k_last = m + half;
    let mut column_gap = BTreeMap::new();
    let mut column_failures = 0;
    for k in k_first..=k_last {
        let gaps: Vec<f64> = (window_lo..=n_max)
            .map(|n| (array.weight(n, k) - Complex64::new(1.0, 0.0)).norm())
            .collect();
        let worst = gaps.iter().copied().fold(0.0, f64::max);
        column_gap.insert(k, worst);
        let within_tol = worst <= tol_col;
        let monotone = gaps.windows(2).all(|w| w[1] <= w[0]);
        let at_half = (array.weight(half, k) - Complex64::new(1.0, 0.0)).norm();
        let at_end = gaps.last().copied().unwrap_or(worst);
        let contracting = monotone && at_end <= COLUMN_CONTRACTION * at_half;
        if !(within_tol || contracting) {
            push(
                Witness { condition: "column_limit".into(), n: n_max, k, value: worst },
                &mut column_failures,
            );
        }
    }

    let cond_support_ok = support_failures == 0;
    let cond_bounded_ok = bound_failures == 0 && array.claimed_m.is_finite();
    let cond_column_ok = column_failures == 0;
    let cond_difference_ok = diff_failures == 0;
    Ok(ValidationReport {
        scanned_n_max: n_max,
        cond_support_ok,
        empirical_m,
        claimed_m: array.claimed_m,
        cond_bounded_ok,
        column_gap,
        cond_column_ok,
        empirical_l,
        claimed_l: array.claimed_l,
        cond_difference_ok,
        witnesses,
        pass: cond_support_ok && cond_bounded_ok && cond_column_ok && cond_difference_ok,
    })
}

/// `g_n = Σ w_{n,k+1} b_k z^k`: over `k ∈ [m, n+m]` for the shifted variant,
/// `k ∈ [m−1, n+m−1]` for the base variant.
pub fn apply_weights_g(array: &WeightArray, g: &TaylorPoly, n: usize, m: usize) -> Result<TaylorPoly> {
    array.expect_order(m)?;
    let (lo, hi) = match array.variant {
        Variant::Shifted => (m, n + m),
        Variant::Base => (m - 1, n + m - 1),
    };
    Ok(weighted_window(array, g, n, lo, hi, 1))
}

/// `p_n = Σ_{k=m+1}^{n+m+1} w_{n,k} a_k z^k` (shifted arrays only).
pub fn modified_taylor(array: &WeightArray, f: &TaylorPoly, m: usize, n: usize) -> Result<TaylorPoly> {
    if array.variant != Variant::Shifted {
        return Err(Error::VariantMismatch {
            expected: Variant::Shifted.name(),
            got: array.variant.name(),
        });
    }
    array.expect_order(m)?;
    Ok(weighted_window(array, f, n, m + 1, n + m + 1, 0))
}

fn weighted_window(array: &WeightArray, f: &TaylorPoly, n: usize, lo: usize, hi: usize, shift: usize) -> TaylorPoly {
    if f.is_zero() || lo > hi {
        return TaylorPoly::zero();
    }
    let coeffs = (lo..=hi)
        .map(|k| array.weight(n, k + shift) * f.coeff(k))
        .collect();
    TaylorPoly::from_raw(lo, coeffs)
}

/// Fejér/Cesàro ramp `w(n,k) = 1 − (k − k_min)/(n+2)` tabulated over `rows` rows.
/// Bounded by 1 and convergent down columns, but its row differences `1/(n+2)`
/// decay too slowly for the row-difference condition once `m ≥ 2`.
pub fn fejer_ramp(variant: Variant, m: usize, rows: usize, claimed_l: f64) -> Result<WeightArray> {
    let k0 = support(variant, m, 0).0;
    WeightArray::table_from_fn(variant, m, rows, 1.0, claimed_l, |n, k| {
        Complex64::new(1.0 - (k - k0) as f64 / (n + 2) as f64, 0.0)
    })
}
