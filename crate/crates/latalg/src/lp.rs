//! ℓᵖ spaces on finite groups with counting Haar measure, and the left
//! convolution action of ℓ¹ on them.
//!
//! On a finite group the Haar measure is counting measure and the modular
//! function is identically 1, so the action is
//!
//! ```text
//! (μ ⋆_p g)(s) = Σ_t μ(t)·g(t⁻¹s)
//! ```
//!
//! and satisfies `‖μ ⋆_p g‖_p ≤ ‖μ‖₁·‖g‖_p`. The action itself is exact for
//! exact scalars; only the p-norm with `p ∉ {1}` goes through `f64`.

use crate::algebra::AlgebraElement;
use crate::lattice::LatticeVector;
use crate::operator::RegularOperator;
use crate::scalar::Scalar;
use crate::weight::Weight;


#[derive(Debug, thiserror::Error)]
pub enum LpError {
    #[error("p must be a finite exponent ≥ 1, got {p}")]
    BadExponent { p: f64 },
    #[error("{name} is not a group")]
    NotAGroup { name: String },
    #[error("the ℓᵖ action requires the trivial weight ω ≡ 1")]
    WeightNotTrivial,
    #[error("element lives on a group of order {expected}, vector has {got} coordinates")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Element of `ℓᵖ(G)` over a finite group: a coordinate vector together with
/// its exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct LpElement<T> {
    vector: LatticeVector<T>,
    p: f64,
}

impl<T: Scalar> LpElement<T> {
    pub fn new(vector: LatticeVector<T>, p: f64) -> Result<Self, LpError> {
        if !p.is_finite() || p < 1.0 {
            return Err(LpError::BadExponent { p });
        }
        Ok(LpElement { vector, p })
    }

    /// The constant-one vector in `ℓᵖ` on `n` points.
    pub fn constant_one(n: usize, p: f64) -> Result<Self, LpError> {
        LpElement::new(
            LatticeVector::new(vec![T::one(); n]).expect("n ≥ 1"),
            p,
        )
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn vector(&self) -> &LatticeVector<T> {
        &self.vector
    }

    /// `(Σ |g(s)|^p)^{1/p}` in `f64`.
    pub fn lp_norm(&self) -> f64 {
        let sum: f64 = self
            .vector
            .coords()
            .iter()
            .map(|v| v.to_f64().expect("coordinate representable as f64").abs())
            .map(|a| a.powf(self.p))
            .sum();
        sum.powf(1.0 / self.p)
    }

    /// Exact ℓ¹ norm, independent of the stored exponent.
    pub fn l1_norm_exact(&self) -> T {
        self.vector
            .coords()
            .iter()
            .fold(T::zero(), |acc, v| acc + v.abs())
    }
}

fn check_action_context<T: Scalar>(mu: &AlgebraElement<T>) -> Result<(), LpError> {
    let table = mu.algebra().table();
    if !table.classify().is_group {
        return Err(LpError::NotAGroup {
            name: table.name().to_string(),
        });
    }
    if !mu.algebra().weight().is_trivial() {
        return Err(LpError::WeightNotTrivial);
    }
    Ok(())
}

/// Left action `(μ ⋆_p g)(s) = Σ_t μ(t)·g(t⁻¹s)` of ℓ¹(G) on ℓᵖ(G).
pub fn lp_action<T: Scalar>(
    mu: &AlgebraElement<T>,
    g: &LpElement<T>,
) -> Result<LpElement<T>, LpError> {
    check_action_context(mu)?;
    let table = mu.algebra().table();
    let n = table.order();
    if g.vector.dim() != n {
        return Err(LpError::DimensionMismatch {
            expected: n,
            got: g.vector.dim(),
        });
    }
    let mut out = vec![T::zero(); n];
    for (t, mt) in mu.coords().iter().enumerate() {
        if mt.is_zero() {
            continue;
        }
        let t_inv = table.inverse_of(t).expect("group elements are invertible");
        for (s, slot) in out.iter_mut().enumerate() {
            let u = table.mul(t_inv, s);
            *slot = slot.clone() + mt.clone() * g.vector.coords()[u].clone();
        }
    }
    LpElement::new(LatticeVector::new(out).expect("n ≥ 1"), g.p)
}

/// Matrix of the action `g ↦ μ ⋆_p g`: `M[s][u] = μ(s·u⁻¹)`, with trivial
/// weights (the entries are exactly the coefficients of μ, spread along
/// translated diagonals).
pub fn lp_action_matrix<T: Scalar>(
    mu: &AlgebraElement<T>,
) -> Result<RegularOperator<T>, LpError> {
    check_action_context(mu)?;
    let table = mu.algebra().table();
    let n = table.order();
    let matrix: Vec<Vec<T>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|u| {
                    let u_inv = table.inverse_of(u).expect("group");
                    mu.coords()[table.mul(s, u_inv)].clone()
                })
                .collect()
        })
        .collect();
    Ok(RegularOperator::new(matrix, Weight::ones(n), Weight::ones(n))
        .expect("square matrix with trivial weights"))
}
