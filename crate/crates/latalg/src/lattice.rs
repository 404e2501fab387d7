//! Finite-dimensional vector-lattice primitives.
//!
//! Every lattice in this crate is a coordinate space with the coordinatewise
//! order, so suprema, infima, and moduli are all coordinatewise. The complex
//! modulus is the supremum of `re·cosθ + im·sinθ` over the circle; in a
//! coordinate lattice that supremum evaluates to the coordinatewise
//! `sqrt(re² + im²)`, which is the primary implementation here. The θ-grid
//! sweep is kept as an independent oracle that approaches the closed form
//! from below.

use crate::scalar::Scalar;
use num_traits::Float;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("universe mismatch: left has {left} coordinates, right has {right}")]
    UniverseMismatch { left: usize, right: usize },
    #[error("a lattice vector needs at least one coordinate")]
    EmptyUniverse,
    #[error("θ-grid too coarse: {grid} points (minimum 4)")]
    GridTooCoarse { grid: usize },
}

/// Coefficient vector over a fixed finite universe, ordered coordinatewise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVector<T> {
    coords: Vec<T>,
}

impl<T: Scalar> LatticeVector<T> {
    pub fn new(coords: Vec<T>) -> Result<Self, LatticeError> {
        if coords.is_empty() {
            return Err(LatticeError::EmptyUniverse);
        }
        Ok(LatticeVector { coords })
    }

    /// Zero vector on a universe of size `n`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "universe must be non-empty");
        LatticeVector {
            coords: vec![T::zero(); n],
        }
    }

    /// Unit atom `value·δ_i` on a universe of size `n`.
    pub fn atom(n: usize, i: usize, value: T) -> Self {
        let mut v = Self::zeros(n);
        v.coords[i] = value;
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    fn check_universe(&self, other: &Self) -> Result<(), LatticeError> {
        if self.dim() != other.dim() {
            return Err(LatticeError::UniverseMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self, LatticeError> {
        self.check_universe(other)?;
        Ok(LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Least upper bound: coordinatewise maximum.
    pub fn sup(&self, other: &Self) -> Result<Self, LatticeError> {
        self.zip_with(other, |a, b| T::max_of(a, b))
    }

    /// Greatest lower bound: coordinatewise minimum.
    pub fn inf(&self, other: &Self) -> Result<Self, LatticeError> {
        self.zip_with(other, |a, b| T::min_of(a, b))
    }

    pub fn plus(&self, other: &Self) -> Result<Self, LatticeError> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn minus(&self, other: &Self) -> Result<Self, LatticeError> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn negated(&self) -> Self {
        LatticeVector {
            coords: self.coords.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scaled(&self, by: &T) -> Self {
        LatticeVector {
            coords: self.coords.iter().map(|a| a.clone() * by.clone()).collect(),
        }
    }

    /// Modulus `|x| = x ∨ (−x)`: coordinatewise absolute value.
    pub fn modulus(&self) -> Self {
        LatticeVector {
            coords: self.coords.iter().map(|a| a.abs()).collect(),
        }
    }

    /// Positive part `x ∨ 0`.
    pub fn pos_part(&self) -> Self {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .map(|a| T::max_of(a, &T::zero()))
                .collect(),
        }
    }

    /// Negative part `(−x) ∨ 0`, so that `x = pos_part − neg_part`.
    pub fn neg_part(&self) -> Self {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .map(|a| T::max_of(&-a.clone(), &T::zero()))
                .collect(),
        }
    }

    /// True iff `|x| ∧ |y| = 0` coordinatewise.
    pub fn are_disjoint(&self, other: &Self) -> Result<bool, LatticeError> {
        self.check_universe(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a.is_zero() || b.is_zero()))
    }

    /// Coordinatewise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> Result<bool, LatticeError> {
        self.check_universe(other)?;
        Ok(self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|a| *a >= T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|a| a.is_zero())
    }

    /// Indices of the nonzero coordinates.
    pub fn support_indices(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Largest coordinatewise `|self − other|`, for deviation reporting.
    pub fn max_abs_deviation(&self, other: &Self) -> Result<T, LatticeError> {
        self.check_universe(other)?;
        let mut worst = T::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            let d = (a.clone() - b.clone()).abs();
            if d > worst {
                worst = d;
            }
        }
        Ok(worst)
    }
}

/// Complexification `re + i·im` of a coordinate lattice vector.
///
/// Complexified spaces have a modulus but no order; only the modulus and the
/// linear structure are exposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexLatticeVector<T> {
    re: LatticeVector<T>,
    im: LatticeVector<T>,
}

impl<T: Scalar> ComplexLatticeVector<T> {
    pub fn new(re: LatticeVector<T>, im: LatticeVector<T>) -> Result<Self, LatticeError> {
        re.check_universe(&im)?;
        Ok(ComplexLatticeVector { re, im })
    }

    pub fn re(&self) -> &LatticeVector<T> {
        &self.re
    }

    pub fn im(&self) -> &LatticeVector<T> {
        &self.im
    }

    pub fn dim(&self) -> usize {
        self.re.dim()
    }

    pub fn plus(&self, other: &Self) -> Result<Self, LatticeError> {
        Ok(ComplexLatticeVector {
            re: self.re.plus(&other.re)?,
            im: self.im.plus(&other.im)?,
        })
    }

    /// Multiplication by the complex scalar `a + ib`.
    pub fn scaled(&self, a: &T, b: &T) -> Self {
        ComplexLatticeVector {
            re: self.re.scaled(a).minus(&self.im.scaled(b)).expect("same universe"),
            im: self.re.scaled(b).plus(&self.im.scaled(a)).expect("same universe"),
        }
    }
}

impl<T: Scalar + Float> ComplexLatticeVector<T> {
    /// Coordinatewise `sqrt(re² + im²)`: the closed form of the supremum of
    /// `re·cosθ + im·sinθ` over `0 ≤ θ ≤ 2π` in a coordinate lattice.
    pub fn complex_modulus(&self) -> LatticeVector<T> {
        LatticeVector {
            coords: self
                .re
                .coords
                .iter()
                .zip(&self.im.coords)
                .map(|(a, b)| a.hypot(*b))
                .collect(),
        }
    }

    /// Grid oracle: coordinatewise max of `re·cos(θ_k) + im·sin(θ_k)` over
    /// `θ_k = 2πk/grid_count`. Converges to [`Self::complex_modulus`] from
    /// below as the grid refines; the gap is at most `|z|·(1 − cos(π/g))`.
    pub fn complex_modulus_oracle(
        &self,
        grid_count: usize,
    ) -> Result<LatticeVector<T>, LatticeError> {
        if grid_count < 4 {
            return Err(LatticeError::GridTooCoarse { grid: grid_count });
        }
        let two_pi = T::from(std::f64::consts::TAU).expect("float from f64");
        let g = T::from(grid_count).expect("float from usize");
        let mut best = self.re.coords.clone();
        for k in 1..grid_count {
            let theta = two_pi * T::from(k).expect("float from usize") / g;
            let (c, s) = (theta.cos(), theta.sin());
            for (acc, (a, b)) in best.iter_mut().zip(self.re.coords.iter().zip(&self.im.coords)) {
                let v = *a * c + *b * s;
                if v > *acc {
                    *acc = v;
                }
            }
        }
        Ok(LatticeVector { coords: best })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::Rational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn rv(coords: &[i64]) -> LatticeVector<Rational> {
        LatticeVector::new(coords.iter().map(|&c| ratio(c, 1)).collect()).unwrap()
    }

    fn fv(coords: &[f64]) -> LatticeVector<f64> {
        LatticeVector::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn sup_is_coordinatewise_max() {
        assert_eq!(rv(&[1, -1]).sup(&rv(&[0, 0])).unwrap(), rv(&[1, 0]));
        let x = rv(&[3, -2, 7]);
        assert_eq!(x.sup(&x).unwrap(), x);
        assert_eq!(
            rv(&[2, -3, 5]).sup(&rv(&[-2, 3, 5])).unwrap(),
            rv(&[2, 3, 5])
        );
    }

    #[test]
    fn sup_rejects_universe_mismatch() {
        let err = rv(&[1, 2]).sup(&rv(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, LatticeError::UniverseMismatch { left: 2, right: 3 });
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(rv(&[1, -1]).modulus(), rv(&[1, 1]));
        assert_eq!(rv(&[0, 0]).modulus(), rv(&[0, 0]));
        assert_eq!(rv(&[-3, 0, 2]).modulus(), rv(&[3, 0, 2]));
    }

    #[test]
    fn disjointness_examples() {
        assert!(rv(&[1, 0]).are_disjoint(&rv(&[0, -5])).unwrap());
        assert!(!rv(&[1, 1]).are_disjoint(&rv(&[0, 1])).unwrap());
        let x = rv(&[4, -7, 0, 2]);
        assert!(x.pos_part().are_disjoint(&x.neg_part()).unwrap());
    }

    #[test]
    fn empty_universe_is_rejected() {
        assert_eq!(
            LatticeVector::<Rational>::new(vec![]).unwrap_err(),
            LatticeError::EmptyUniverse
        );
    }

    #[test]
    fn complex_modulus_closed_form() {
        let z = ComplexLatticeVector::new(fv(&[3.0]), fv(&[4.0])).unwrap();
        assert_eq!(z.complex_modulus(), fv(&[5.0]));

        let z = ComplexLatticeVector::new(fv(&[-2.0, 0.5]), fv(&[0.0, 0.0])).unwrap();
        assert_eq!(z.complex_modulus(), fv(&[-2.0, 0.5]).modulus());

        let z = ComplexLatticeVector::new(fv(&[1.0, 0.0]), fv(&[0.0, 1.0])).unwrap();
        assert_eq!(z.complex_modulus(), fv(&[1.0, 1.0]));
    }

    #[test]
    fn grid_oracle_frozen_values() {
        // Grid 4 evaluates θ ∈ {0, π/2, π, 3π/2}: coordinate values
        // {3, 4, −3, −4}, so the oracle reports 4.
        let z = ComplexLatticeVector::new(fv(&[3.0]), fv(&[4.0])).unwrap();
        let coarse = z.complex_modulus_oracle(4).unwrap();
        assert!((coarse.coords()[0] - 4.0).abs() < 1e-12);

        let z1 = ComplexLatticeVector::new(fv(&[1.0]), fv(&[0.0])).unwrap();
        assert_eq!(z1.complex_modulus_oracle(4).unwrap().coords()[0], 1.0);

        let fine = z.complex_modulus_oracle(100_000).unwrap();
        assert!((fine.coords()[0] - 5.0).abs() < 1e-6);
    }

    #[test]
    fn grid_oracle_rejects_coarse_grids() {
        let z = ComplexLatticeVector::new(fv(&[1.0]), fv(&[0.0])).unwrap();
        assert_eq!(
            z.complex_modulus_oracle(3).unwrap_err(),
            LatticeError::GridTooCoarse { grid: 3 }
        );
    }

    fn rational_coord() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
    }

    fn rational_vector(dim: usize) -> impl Strategy<Value = LatticeVector<Rational>> {
        proptest::collection::vec(rational_coord(), dim)
            .prop_map(|c| LatticeVector::new(c).unwrap())
    }

    fn vector_pair() -> impl Strategy<Value = (LatticeVector<Rational>, LatticeVector<Rational>)> {
        (1usize..7).prop_flat_map(|d| (rational_vector(d), rational_vector(d)))
    }

    proptest! {
        #[test]
        fn jordan_decomposition((x, _) in vector_pair()) {
            let pos = x.pos_part();
            let neg = x.neg_part();
            prop_assert!(pos.is_nonnegative() && neg.is_nonnegative());
            prop_assert_eq!(pos.minus(&neg).unwrap(), x.clone());
            prop_assert_eq!(pos.plus(&neg).unwrap(), x.modulus());
            prop_assert!(pos.are_disjoint(&neg).unwrap());
            prop_assert_eq!(x.sup(&x.negated()).unwrap(), x.modulus());
        }

        #[test]
        fn sup_is_least_upper_bound((x, y) in vector_pair()) {
            let s = x.sup(&y).unwrap();
            prop_assert!(x.leq(&s).unwrap() && y.leq(&s).unwrap());
            // Minimality: s ∧ any other upper bound equals s.
            let bigger = s.plus(&x.modulus()).unwrap();
            prop_assert_eq!(s.inf(&bigger).unwrap(), s);
        }

        #[test]
        fn disjoint_pairs_have_additive_modulus((x, y) in vector_pair()) {
            // Force disjoint supports by zeroing y where x is nonzero.
            let mask: Vec<Rational> = x
                .coords()
                .iter()
                .zip(y.coords())
                .map(|(a, b)| if a.is_zero() { b.clone() } else { Rational::zero() })
                .collect();
            let y = LatticeVector::new(mask).unwrap();
            prop_assert!(x.are_disjoint(&y).unwrap());
            let lhs = x.plus(&y).unwrap().modulus();
            let rhs = x.modulus().plus(&y.modulus()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    fn float_vector(dim: usize) -> impl Strategy<Value = LatticeVector<f64>> {
        proptest::collection::vec(-10.0f64..10.0, dim)
            .prop_map(|c| LatticeVector::new(c).unwrap())
    }

    fn complex_pair() -> impl Strategy<Value = (ComplexLatticeVector<f64>, ComplexLatticeVector<f64>)>
    {
        (1usize..6).prop_flat_map(|d| {
            (
                (float_vector(d), float_vector(d))
                    .prop_map(|(re, im)| ComplexLatticeVector::new(re, im).unwrap()),
                (float_vector(d), float_vector(d))
                    .prop_map(|(re, im)| ComplexLatticeVector::new(re, im).unwrap()),
            )
        })
    }

    proptest! {
        #[test]
        fn complex_modulus_triangle_inequality((z, w) in complex_pair()) {
            let lhs = z.plus(&w).unwrap().complex_modulus();
            let rhs = z.complex_modulus().plus(&w.complex_modulus()).unwrap();
            for (l, r) in lhs.coords().iter().zip(rhs.coords()) {
                prop_assert!(*l <= r + 1e-12);
            }
        }

        #[test]
        fn complex_modulus_homogeneity((z, _) in complex_pair(), a in -5.0f64..5.0, b in -5.0f64..5.0) {
            let lhs = z.scaled(&a, &b).complex_modulus();
            let alpha = a.hypot(b);
            let rhs = z.complex_modulus().scaled(&alpha);
            for (l, r) in lhs.coords().iter().zip(rhs.coords()) {
                prop_assert!((l - r).abs() <= 1e-11);
            }
        }

        #[test]
        fn grid_oracle_brackets_closed_form((z, _) in complex_pair(), g in 4usize..64) {
            let oracle = z.complex_modulus_oracle(g).unwrap();
            let exact = z.complex_modulus();
            let slack = 1.0 - (std::f64::consts::PI / g as f64).cos();
            for (o, e) in oracle.coords().iter().zip(exact.coords()) {
                prop_assert!(*o <= e + 1e-12);
                prop_assert!(e - o <= e * slack + 1e-12);
            }
            // Nondecreasing under nested refinement.
            let refined = z.complex_modulus_oracle(2 * g).unwrap();
            for (coarse, fine) in oracle.coords().iter().zip(refined.coords()) {
                prop_assert!(*coarse <= fine + 1e-12);
            }
        }
    }
}
