//! Finite Taylor coefficient sequences and the basic quantities built on them:
//! binomial weights, the uniform-measure seminorm, partial sums and evaluation.
//!
//! Every analytic function is handled through a finite truncation
//! `a_start z^start + ... + a_deg z^deg`. Constructions that are infinite
//! series in the continuous setting (tails, quotients, corrected partial sums)
//! are exact finite computations on these truncations.

use std::fmt;
use std::io::{Read, Write};
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimal angular separation (radians) for two boundary points to count as distinct.
pub const POINT_TOLERANCE: f64 = 1e-9;

/// Largest binomial value accepted by [`checked_binom`].
pub const BINOM_LIMIT: f64 = 1e300;

/// Binomial coefficient `C(k, m)`, zero when `k < m`.
///
/// Computed as a running product over `min(m, k - m)` factors, so no factorial
/// is ever formed. Overflows to `+inf` past the `f64` range; use
/// [`checked_binom`] where that must be an error.
pub fn binom(k: usize, m: usize) -> f64 {
    if k < m {
        return 0.0;
    }
    let r = m.min(k - m);
    let base = (k - r) as f64;
    let mut acc = 1.0_f64;
    for i in 1..=r {
        // stays integral at every step: acc = C(k - r + i, i)
        acc = acc * (base + i as f64) / i as f64;
    }
    acc
}

/// [`binom`] with a range error once the value exceeds [`BINOM_LIMIT`].
pub fn checked_binom(k: usize, m: usize) -> Result<f64> {
    let v = binom(k, m);
    if !v.is_finite() || v > BINOM_LIMIT {
        return Err(Error::BinomialOverflow { k, m });
    }
    Ok(v)
}

/// Falling factorial `k (k-1) ... (k-m+1)`; zero when `k < m`.
pub fn falling_factorial(k: usize, m: usize) -> f64 {
    if k < m {
        return 0.0;
    }
    ((k - m + 1)..=k).fold(1.0, |acc, j| acc * j as f64)
}

/// Neumaier-compensated accumulator for real sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated accumulator for complex sums (componentwise).
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexCompensatedSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexCompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

pub(crate) fn ensure_finite(z: Complex64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(format!("{z}")))
    }
}

/// A point on the unit circle, stored by its angle.
///
/// The complex value is always `(cos θ, sin θ)`, so `|λ| = 1` holds to
/// machine precision and `λ⁻¹` is taken as `conj(λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitPoint {
    theta: f64,
}

impl UnitPoint {
    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::NonFinite(format!("angle {theta}")));
        }
        Ok(Self { theta })
    }

    /// The point `1`.
    pub fn one() -> Self {
        Self { theta: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn value(&self) -> Complex64 {
        let (s, c) = self.theta.sin_cos();
        Complex64::new(c, s)
    }

    pub fn inverse(&self) -> Complex64 {
        self.value().conj()
    }

    /// `λ^k`, evaluated directly from the angle.
    pub fn pow(&self, k: usize) -> Complex64 {
        let (s, c) = (self.theta * k as f64).sin_cos();
        Complex64::new(c, s)
    }

    /// Angular distance on the circle, in `[0, π]`.
    pub fn angular_distance(&self, other: &UnitPoint) -> f64 {
        let tau = std::f64::consts::TAU;
        let d = (self.theta - other.theta).rem_euclid(tau);
        d.min(tau - d)
    }
}

/// Rejects any pair of points closer than [`POINT_TOLERANCE`].
pub fn check_distinct(points: &[UnitPoint]) -> Result<()> {
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i].angular_distance(&points[j]) <= POINT_TOLERANCE {
                return Err(Error::DuplicatePoints(i, j));
            }
        }
    }
    Ok(())
}

/// A positive mass at a boundary point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointMass {
    pub point: UnitPoint,
    pub mass: f64,
}

/// The measures supported: normalized arc length, or finitely many point masses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Measure {
    Uniform,
    PointMasses(Vec<PointMass>),
}

impl Measure {
    /// Builds a point-mass measure, enforcing positive masses and distinct points.
    pub fn point_masses(atoms: Vec<(UnitPoint, f64)>) -> Result<Self> {
        for &(_, c) in &atoms {
            if !(c.is_finite() && c > 0.0) {
                return Err(Error::NonPositiveMass(c));
            }
        }
        let points: Vec<UnitPoint> = atoms.iter().map(|&(p, _)| p).collect();
        check_distinct(&points)?;
        Ok(Measure::PointMasses(
            atoms
                .into_iter()
                .map(|(point, mass)| PointMass { point, mass })
                .collect(),
        ))
    }

    /// Unit mass at a single point.
    pub fn dirac(point: UnitPoint) -> Self {
        Measure::PointMasses(vec![PointMass { point, mass: 1.0 }])
    }

    pub fn atoms(&self) -> &[PointMass] {
        match self {
            Measure::Uniform => &[],
            Measure::PointMasses(atoms) => atoms,
        }
    }

    pub fn points(&self) -> Vec<UnitPoint> {
        self.atoms().iter().map(|a| a.point).collect()
    }
}

/// Finite Taylor expansion `Σ_{k=start}^{start+len-1} a_k z^k`.
///
/// Always kept in normal form: no exact zeros at either end, and the zero
/// polynomial is the empty sequence with `start = 0`. Two values are equal
/// exactly when their coefficients agree.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct TaylorPoly {
    start: usize,
    coeffs: Vec<Complex64>,
}

impl TaylorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from `a_start, a_start+1, ...`; rejects non-finite entries.
    pub fn new(start: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        for &c in &coeffs {
            ensure_finite(c)?;
        }
        Ok(Self::from_raw(start, coeffs))
    }

    /// Dense coefficients from index 0.
    pub fn from_dense(coeffs: &[Complex64]) -> Result<Self> {
        Self::new(0, coeffs.to_vec())
    }

    /// Dense real coefficients from index 0.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(0, coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn monomial(k: usize, c: Complex64) -> Result<Self> {
        Self::new(k, vec![c])
    }

    /// Sum of `(k, a_k)` terms; repeated indices accumulate.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Complex64)>,
    {
        let terms: Vec<(usize, Complex64)> = terms.into_iter().collect();
        let Some(max) = terms.iter().map(|t| t.0).max() else {
            return Ok(Self::zero());
        };
        let mut dense = vec![Complex64::new(0.0, 0.0); max + 1];
        for (k, c) in terms {
            dense[k] += ensure_finite(c)?;
        }
        Ok(Self::from_raw(0, dense))
    }

    /// Normalizes without the finiteness check; for internal arithmetic on
    /// values that are already finite.
    pub(crate) fn from_raw(mut start: usize, mut coeffs: Vec<Complex64>) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        while coeffs.last() == Some(&zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == zero).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        start += lead;
        Self { start, coeffs }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the top nonzero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.start + self.coeffs.len() - 1)
        }
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_index(&self) -> Option<usize> {
        (!self.is_zero()).then_some(self.start)
    }

    /// `a_k`, zero outside the stored range.
    pub fn coeff(&self, k: usize) -> Complex64 {
        if k < self.start {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs
            .get(k - self.start)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Stored coefficients `a_start, ..., a_deg`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Dense vector `a_0, ..., a_deg` (empty for zero).
    pub fn to_dense(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.start];
        out.extend_from_slice(&self.coeffs);
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// `(k, a_k)` for every stored index, zeros inside the range included.
    pub fn terms(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, &c)| (self.start + i, c))
    }

    /// Keeps only the coefficients with index in `lo..=hi`.
    pub fn restrict(&self, lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Self::zero();
        }
        let coeffs = self
            .terms()
            .filter(|&(k, _)| k >= lo && k <= hi)
            .map(|(_, c)| c)
            .collect::<Vec<_>>();
        let start = self.start.max(lo);
        Self::from_raw(start, coeffs)
    }

    pub fn scale(&self, alpha: Complex64) -> Self {
        Self::from_raw(self.start, self.coeffs.iter().map(|&c| c * alpha).collect())
    }

    /// `(z - λ) f` for an arbitrary complex `λ`.
    pub fn mul_linear(&self, lambda: Complex64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let deg = self.degree().unwrap_or(0);
        let mut out = vec![Complex64::new(0.0, 0.0); deg + 2];
        for (k, c) in self.terms() {
            out[k + 1] += c;
            out[k] -= lambda * c;
        }
        Self::from_raw(0, out)
    }

    /// Horner evaluation from the top coefficient down.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * z.powu(self.start as u32)
    }

    /// `Σ a_k λ^k`; on a finite expansion this is the point value at `λ`.
    pub fn boundary_value(&self, point: &UnitPoint) -> Complex64 {
        let mut acc = ComplexCompensatedSum::new();
        for (k, c) in self.terms() {
            acc.add(c * point.pow(k));
        }
        acc.value()
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coefficient-wise distance to `other`.
    pub fn max_abs_diff(&self, other: &TaylorPoly) -> f64 {
        (self - other).max_abs()
    }

    fn zip_with(&self, other: &TaylorPoly, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let (lo, hi) = match (self.low_index(), other.low_index()) {
            (None, None) => return Self::zero(),
            (Some(a), None) => (a, self.degree().unwrap_or(a)),
            (None, Some(b)) => (b, other.degree().unwrap_or(b)),
            (Some(a), Some(b)) => (
                a.min(b),
                self.degree().unwrap_or(0).max(other.degree().unwrap_or(0)),
            ),
        };
        let coeffs = (lo..=hi)
            .map(|k| op(self.coeff(k), other.coeff(k)))
            .collect();
        Self::from_raw(lo, coeffs)
    }
}

impl Add for &TaylorPoly {
    type Output = TaylorPoly;
    fn add(self, rhs: &TaylorPoly) -> TaylorPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TaylorPoly {
    type Output = TaylorPoly;
    fn sub(self, rhs: &TaylorPoly) -> TaylorPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TaylorPoly {
    type Output = TaylorPoly;
    fn neg(self) -> TaylorPoly {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &TaylorPoly {
    type Output = TaylorPoly;
    fn mul(self, rhs: &TaylorPoly) -> TaylorPoly {
        if self.is_zero() || rhs.is_zero() {
            return TaylorPoly::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TaylorPoly::from_raw(self.start + rhs.start, out)
    }
}

impl fmt::Display for TaylorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms().filter(|t| t.1 != Complex64::new(0.0, 0.0)) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}{:+}i)z^{}", c.re, c.im, k)?;
        }
        Ok(())
    }
}

/// `D_{σ,m}(f) = Σ_{k≥m} C(k,m) |a_k|²`, summed in ascending `k`.
///
/// `m = 0` is allowed and gives the squared `H²` coefficient norm.
pub fn sigma_norm(f: &TaylorPoly, m: usize) -> f64 {
    f.terms()
        .filter(|&(k, _)| k >= m)
        .map(|(k, c)| binom(k, m) * c.norm_sqr())
        .collect::<CompensatedSum>()
        .value()
}

/// `S_{m,n} f = Σ_{k=m}^{n+m} a_k z^k`.
pub fn partial_sum(f: &TaylorPoly, m: usize, n: usize) -> TaylorPoly {
    f.restrict(m, n + m)
}

pub fn evaluate(f: &TaylorPoly, z: Complex64) -> Complex64 {
    f.evaluate(z)
}

pub fn boundary_value(f: &TaylorPoly, point: &UnitPoint) -> Complex64 {
    f.boundary_value(point)
}

/// Reads the `k,re,im` coefficient format: one row per nonzero coefficient,
/// `k` strictly increasing.
pub fn read_coefficients<R: Read>(reader: R) -> Result<TaylorPoly> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["k", "re", "im"] {
        return Err(Error::Parse(format!(
            "expected header k,re,im, found {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut terms = Vec::new();
    let mut last: Option<usize> = None;
    for (line, record) in rdr.records().enumerate() {
        let record = record?;
        let field = |i: usize| record.get(i).unwrap_or("");
        let k: usize = field(0)
            .parse()
            .map_err(|_| Error::Parse(format!("row {}: bad index {:?}", line + 1, field(0))))?;
        let re: f64 = field(1)
            .parse()
            .map_err(|_| Error::Parse(format!("row {}: bad re {:?}", line + 1, field(1))))?;
        let im: f64 = field(2)
            .parse()
            .map_err(|_| Error::Parse(format!("row {}: bad im {:?}", line + 1, field(2))))?;
        if last.is_some_and(|prev| k <= prev) {
            return Err(Error::Parse(format!(
                "row {}: index {k} not strictly increasing",
                line + 1
            )));
        }
        last = Some(k);
        terms.push((k, ensure_finite(Complex64::new(re, im))?));
    }
    TaylorPoly::from_terms(terms)
}

/// Writes the `k,re,im` format, skipping zero coefficients.
pub fn write_coefficients<W: Write>(f: &TaylorPoly, writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(["k", "re", "im"])?;
    for (k, c) in f.terms().filter(|t| t.1 != Complex64::new(0.0, 0.0)) {
        wtr.write_record([k.to_string(), c.re.to_string(), c.im.to_string()])?;
    }
    wtr.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn poly(terms: &[(usize, f64)]) -> TaylorPoly {
        TaylorPoly::from_terms(terms.iter().map(|&(k, a)| (k, c(a)))).unwrap()
    }

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(3, 1), 3.0);
        assert_eq!(binom(10, 3), 120.0);
        for m in 0..20 {
            assert_eq!(binom(m, m), 1.0);
        }
        assert_eq!(binom(2, 5), 0.0);
        assert_eq!(binom(7, 0), 1.0);
    }

    #[test]
    fn binom_pascal_rule() {
        for k in 1..400 {
            for m in 1..=k.min(12) {
                let lhs = binom(k, m);
                let rhs = binom(k - 1, m - 1) + binom(k - 1, m);
                assert!((lhs - rhs).abs() <= 1e-12 * lhs, "C({k},{m})");
            }
        }
    }

    #[test]
    fn binom_large_argument_against_integer_product() {
        // exact in u128 for these sizes
        let exact = |k: u128, m: u128| -> u128 {
            let mut acc: u128 = 1;
            for i in 1..=m {
                acc = acc * (k - m + i) / i;
            }
            acc
        };
        for &(k, m) in &[(100_000usize, 3usize), (100_000, 6), (54_321, 5), (99_999, 4)] {
            let want = exact(k as u128, m as u128) as f64;
            let got = binom(k, m);
            assert!(((got - want) / want).abs() <= 1e-13, "C({k},{m})");
        }
    }

    #[test]
    fn checked_binom_overflow() {
        assert!(checked_binom(100_000, 12).is_ok());
        assert!(matches!(
            checked_binom(2000, 1000),
            Err(Error::BinomialOverflow { .. })
        ));
    }

    #[test]
    fn sigma_norm_examples() {
        for m in 1..6 {
            assert_eq!(sigma_norm(&poly(&[(m, 1.0)]), m), 1.0);
        }
        assert_eq!(sigma_norm(&poly(&[(1, 1.0), (2, 1.0)]), 1), 3.0);
        assert_eq!(sigma_norm(&poly(&[(2, 1.0), (3, 2.0)]), 2), 13.0);
        assert_eq!(sigma_norm(&poly(&[(0, 5.0), (1, 1.0)]), 2), 0.0);
    }

    #[test]
    fn partial_sum_examples() {
        let f = poly(&[(1, 1.0), (4, 1.0)]);
        assert_eq!(partial_sum(&f, 1, 1), poly(&[(1, 1.0)]));
        assert_eq!(partial_sum(&f, 1, 3), f);
        assert_eq!(partial_sum(&TaylorPoly::zero(), 1, 3), TaylorPoly::zero());
        let g = poly(&[(0, 3.0), (1, 1.0), (2, 2.0)]);
        assert_eq!(partial_sum(&g, 1, 5), poly(&[(1, 1.0), (2, 2.0)]));
    }

    #[test]
    fn evaluate_examples() {
        let i = Complex64::new(0.0, 1.0);
        assert!((poly(&[(2, 1.0)]).evaluate(i) - c(-1.0)).norm() < 1e-15);
        assert_eq!(poly(&[(1, 1.0), (4, 1.0)]).evaluate(c(1.0)), c(2.0));
        assert_eq!(TaylorPoly::zero().evaluate(c(0.3)), c(0.0));
    }

    #[test]
    fn boundary_value_examples() {
        let f = poly(&[(1, 1.0), (4, 1.0)]);
        assert!((f.boundary_value(&UnitPoint::one()) - c(2.0)).norm() < 1e-15);
        let minus_one = UnitPoint::new(std::f64::consts::PI).unwrap();
        assert!(f.boundary_value(&minus_one).norm() < 1e-15);
        let i = UnitPoint::new(std::f64::consts::FRAC_PI_2).unwrap();
        assert!((poly(&[(2, 1.0)]).boundary_value(&i) - c(-1.0)).norm() < 1e-15);
    }

    #[test]
    fn normal_form() {
        let f = TaylorPoly::new(2, vec![c(0.0), c(1.0), c(0.0)]).unwrap();
        assert_eq!(f.start(), 3);
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.coeff(2), c(0.0));
        assert_eq!(f.coeff(99), c(0.0));
        let z = TaylorPoly::new(5, vec![c(0.0)]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z, TaylorPoly::zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(TaylorPoly::new(0, vec![Complex64::new(f64::NAN, 0.0)]).is_err());
        assert!(UnitPoint::new(f64::INFINITY).is_err());
    }

    #[test]
    fn measure_invariants() {
        let p = UnitPoint::new(0.0).unwrap();
        let q = UnitPoint::new(std::f64::consts::TAU + 1e-12).unwrap();
        assert!(matches!(
            Measure::point_masses(vec![(p, 1.0), (q, 2.0)]),
            Err(Error::DuplicatePoints(0, 1))
        ));
        assert!(matches!(
            Measure::point_masses(vec![(p, 0.0)]),
            Err(Error::NonPositiveMass(_))
        ));
        assert!(Measure::point_masses(vec![(p, 1.0), (UnitPoint::new(1e-6).unwrap(), 1.0)]).is_ok());
    }

    #[test]
    fn unit_point_modulus() {
        for i in 0..100 {
            let p = UnitPoint::new(0.37 * i as f64).unwrap();
            assert!((p.value().norm_sqr() - 1.0).abs() < 1e-15);
            assert!((p.value() * p.inverse() - c(1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn arithmetic() {
        let a = poly(&[(1, 1.0), (2, 2.0)]);
        let b = poly(&[(0, 1.0), (2, -2.0)]);
        assert_eq!(&a + &b, poly(&[(0, 1.0), (1, 1.0)]));
        assert_eq!(&a - &a, TaylorPoly::zero());
        assert_eq!(&a * &b, poly(&[(1, 1.0), (2, 2.0), (3, -2.0), (4, -4.0)]));
        assert_eq!(
            poly(&[(1, 1.0)]).mul_linear(c(1.0)),
            poly(&[(1, -1.0), (2, 1.0)])
        );
    }

    #[test]
    fn coefficient_csv_format() {
        let f = TaylorPoly::from_terms([(1, c(1.0)), (3, Complex64::new(0.5, -2.0))]).unwrap();
        let mut buf = Vec::new();
        write_coefficients(&f, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text, "k,re,im\n1,1,0\n3,0.5,-2\n");
        assert_eq!(read_coefficients(buf.as_slice()).unwrap(), f);

        assert!(read_coefficients("k,re,im\n2,1,0\n1,1,0\n".as_bytes()).is_err());
        assert!(read_coefficients("n,re,im\n1,1,0\n".as_bytes()).is_err());
        assert!(read_coefficients("k,re,im\n1,NaN,0\n".as_bytes()).is_err());
    }
}
