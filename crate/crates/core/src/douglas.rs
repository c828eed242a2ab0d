//! Local Douglas decomposition `f = α + (z − λ) g` and the norms it induces.
//!
//! For a boundary point `λ` the quotient `g = Q_λ f = (f − f(λ)) / (z − λ)` carries
//! the whole local seminorm: `D_{λ,m}(f) = D_{σ,m−1}(g)`. On a finite expansion the
//! quotient is produced by synthetic division, and its coefficients obey
//! `b_{k−1} − λ b_k = a_k` for every `k ≥ 1`, with `α = λ b_0 + a_0`.

use num_complex::Complex64;
use serde::Serialize;

use crate::coefficients::{check_distinct, sigma_norm, CompensatedSum, Measure, TaylorPoly, UnitPoint};
use crate::error::Result;

/// `f = alpha + (z − point) · quotient`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalDecomposition {
    pub alpha: Complex64,
    pub quotient: TaylorPoly,
    pub point: UnitPoint,
}

impl LocalDecomposition {
    /// `alpha + (z − λ) · quotient`.
    pub fn reconstruct(&self) -> TaylorPoly {
        let constant = TaylorPoly::from_raw(0, vec![self.alpha]);
        &constant + &self.quotient.mul_linear(self.point.value())
    }
}

/// Synthetic division of `f` by `(z − λ)`, highest degree first:
/// `d_{deg−1} = a_deg`, `d_{k−1} = a_k + λ d_k`, remainder `f(λ)`.
pub fn difference_quotient(f: &TaylorPoly, point: &UnitPoint) -> LocalDecomposition {
    let lambda = point.value();
    let Some(deg) = f.degree() else {
        return LocalDecomposition {
            alpha: Complex64::new(0.0, 0.0),
            quotient: TaylorPoly::zero(),
            point: *point,
        };
    };
    let mut quotient = vec![Complex64::new(0.0, 0.0); deg];
    let mut carry = Complex64::new(0.0, 0.0);
    for k in (1..=deg).rev() {
        carry = f.coeff(k) + lambda * carry;
        quotient[k - 1] = carry;
    }
    let alpha = f.coeff(0) + lambda * carry;
    LocalDecomposition {
        alpha,
        quotient: TaylorPoly::from_raw(0, quotient),
        point: *point,
    }
}

/// `D_{λ,m}(f) = D_{σ,m−1}(Q_λ f)`.
///
/// # Panics
/// If `m == 0`.
pub fn local_norm(f: &TaylorPoly, point: &UnitPoint, m: usize) -> f64 {
    assert!(m >= 1, "local_norm needs order m >= 1");
    sigma_norm(&difference_quotient(f, point).quotient, m - 1)
}

/// `D_{μ,m}(f)`: the coefficient series for the uniform measure, and
/// `Σ_j c_j D_{σ,m−1}(Q_{λ_j} f)` for point masses.
///
/// # Panics
/// If `m == 0`.
pub fn mu_norm_sq(f: &TaylorPoly, measure: &Measure, m: usize) -> f64 {
    assert!(m >= 1, "mu_norm_sq needs order m >= 1");
    match measure {
        Measure::Uniform => sigma_norm(f, m),
        Measure::PointMasses(atoms) => atoms
            .iter()
            .map(|a| a.mass * local_norm(f, &a.point, m))
            .collect::<CompensatedSum>()
            .value(),
    }
}

/// `f = residual + Π_j (z − λ_j) · core`, `deg residual ≤ s − 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiPointDecomposition {
    pub residual: TaylorPoly,
    pub core: TaylorPoly,
    pub points: Vec<UnitPoint>,
}

impl MultiPointDecomposition {
    /// `Π_j (z − λ_j)`.
    pub fn node_polynomial(&self) -> TaylorPoly {
        node_polynomial(&self.points)
    }

    pub fn reconstruct(&self) -> TaylorPoly {
        &self.residual + &(&self.node_polynomial() * &self.core)
    }
}

pub(crate) fn node_polynomial(points: &[UnitPoint]) -> TaylorPoly {
    points
        .iter()
        .fold(TaylorPoly::from_raw(0, vec![Complex64::new(1.0, 0.0)]), |acc, p| {
            acc.mul_linear(p.value())
        })
}

/// Applies `Q_{λ_1}, …, Q_{λ_s}` in the given order.
///
/// The residual is assembled in Newton form from the successive remainders,
/// `α_1 + (z − λ_1)(α_2 + (z − λ_2)(α_3 + …))`, so its degree is at most `s − 1`
/// by construction rather than up to rounding.
pub fn multi_decompose(f: &TaylorPoly, points: &[UnitPoint]) -> Result<MultiPointDecomposition> {
    check_distinct(points)?;
    let mut alphas = Vec::with_capacity(points.len());
    let mut core = f.clone();
    for p in points {
        let step = difference_quotient(&core, p);
        alphas.push(step.alpha);
        core = step.quotient;
    }
    let mut residual = TaylorPoly::zero();
    for (alpha, p) in alphas.iter().zip(points).rev() {
        residual = residual.mul_linear(p.value());
        residual = &residual + &TaylorPoly::from_raw(0, vec![*alpha]);
    }
    Ok(MultiPointDecomposition {
        residual,
        core,
        points: points.to_vec(),
    })
}
