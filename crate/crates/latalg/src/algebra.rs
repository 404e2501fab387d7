//! Weighted ℓ¹ convolution algebras over finite semigroups.
//!
//! An algebra bundles a validated Cayley table with a weight that is
//! submultiplicative for that table. Elements are coefficient vectors over
//! the semigroup's elements; the product is the bilinear extension of
//! `δ_s ⋆ δ_t = δ_{st}`:
//!
//! ```text
//! (x ⋆ y)(t) = Σ_{r·s = t} x(r)·y(s)
//! ```
//!
//! With the Beurling norm `‖x‖_ω = Σ |x(s)| ω(s)` this is a Banach lattice
//! algebra; positivity of the product on positive elements, the Riesz
//! inequality `|x⋆y| ≤ |x|⋆|y|`, and submultiplicativity of the norm all
//! hold exactly and are exercised by the test suite.

use crate::lattice::{LatticeError, LatticeVector};
use crate::scalar::Scalar;
use crate::semigroup::{SemigroupError, SemigroupTable};
use crate::weight::{Weight, WeightError};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("coefficient vector has {got} coordinates but the algebra has {expected} elements")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weights disagree at embedded element {label:?}")]
    WeightRestrictionMismatch { label: String },
    #[error("label {label:?} is not an element of the semigroup")]
    UnknownLabel { label: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// The weighted ℓ¹ space over a finite semigroup, with convolution.
#[derive(Debug)]
pub struct BeurlingAlgebra<T> {
    table: SemigroupTable,
    weight: Weight<T>,
}

impl<T: Scalar> BeurlingAlgebra<T> {
    /// Bundle a table with a weight, checking dimensions and
    /// submultiplicativity exhaustively.
    pub fn new(table: SemigroupTable, weight: Weight<T>) -> Result<Arc<Self>, AlgebraError> {
        weight.check_submultiplicative(&table)?;
        Ok(Arc::new(BeurlingAlgebra { table, weight }))
    }

    /// The ℓ¹ algebra with the trivial weight ω ≡ 1.
    pub fn unweighted(table: SemigroupTable) -> Arc<Self> {
        let weight = Weight::ones(table.order());
        Arc::new(BeurlingAlgebra { table, weight })
    }

    pub fn table(&self) -> &SemigroupTable {
        &self.table
    }

    pub fn weight(&self) -> &Weight<T> {
        &self.weight
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn element(
        self: &Arc<Self>,
        coords: Vec<T>,
    ) -> Result<AlgebraElement<T>, AlgebraError> {
        if coords.len() != self.order() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.order(),
                got: coords.len(),
            });
        }
        Ok(AlgebraElement {
            algebra: Arc::clone(self),
            vector: LatticeVector::new(coords)?,
        })
    }

    pub fn element_from_vector(
        self: &Arc<Self>,
        vector: LatticeVector<T>,
    ) -> Result<AlgebraElement<T>, AlgebraError> {
        if vector.dim() != self.order() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.order(),
                got: vector.dim(),
            });
        }
        Ok(AlgebraElement {
            algebra: Arc::clone(self),
            vector,
        })
    }

    /// Element from a label → value map (values in the exact string format
    /// accepted by [`Scalar::parse_exact`]); absent labels are zero, unknown
    /// labels are rejected.
    pub fn element_from_label_map(
        self: &Arc<Self>,
        map: &std::collections::BTreeMap<String, String>,
    ) -> Result<AlgebraElement<T>, AlgebraError> {
        let mut coords = vec![T::zero(); self.order()];
        for (label, raw) in map {
            let Some(ix) = self.table.index_of(label) else {
                return Err(AlgebraError::UnknownLabel {
                    label: label.clone(),
                });
            };
            coords[ix] = T::parse_exact(raw).map_err(crate::weight::WeightError::Parse)?;
        }
        self.element(coords)
    }

    /// The point mass `δ_i`.
    pub fn delta(self: &Arc<Self>, i: usize) -> AlgebraElement<T> {
        assert!(i < self.order());
        AlgebraElement {
            algebra: Arc::clone(self),
            vector: LatticeVector::atom(self.order(), i, T::one()),
        }
    }

    pub fn zero(self: &Arc<Self>) -> AlgebraElement<T> {
        AlgebraElement {
            algebra: Arc::clone(self),
            vector: LatticeVector::zeros(self.order()),
        }
    }
}

impl<T: PartialEq> PartialEq for BeurlingAlgebra<T> {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.weight == other.weight
    }
}

/// Element of a [`BeurlingAlgebra`]: a coefficient vector plus its ambient
/// algebra.
#[derive(Debug, Clone)]
pub struct AlgebraElement<T> {
    algebra: Arc<BeurlingAlgebra<T>>,
    vector: LatticeVector<T>,
}

impl<T: Scalar> AlgebraElement<T> {
    pub fn algebra(&self) -> &Arc<BeurlingAlgebra<T>> {
        &self.algebra
    }

    pub fn vector(&self) -> &LatticeVector<T> {
        &self.vector
    }

    pub fn coords(&self) -> &[T] {
        self.vector.coords()
    }

    fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    fn check_algebra(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    fn rewrap(&self, vector: LatticeVector<T>) -> Self {
        AlgebraElement {
            algebra: Arc::clone(&self.algebra),
            vector,
        }
    }

    /// Convolution `(x ⋆ y)(t) = Σ_{r·s = t} x(r)·y(s)`.
    pub fn convolve(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_algebra(other)?;
        let table = self.algebra.table();
        let mut out = vec![T::zero(); self.algebra.order()];
        for (r, xr) in self.coords().iter().enumerate() {
            if xr.is_zero() {
                continue;
            }
            for (s, ys) in other.coords().iter().enumerate() {
                if ys.is_zero() {
                    continue;
                }
                let t = table.mul(r, s);
                out[t] = out[t].clone() + xr.clone() * ys.clone();
            }
        }
        Ok(self.rewrap(LatticeVector::new(out).expect("non-empty universe")))
    }

    /// Beurling norm `Σ |x(s)| ω(s)`; a lattice norm.
    pub fn beurling_norm(&self) -> T {
        self.coords()
            .iter()
            .zip(self.algebra.weight().values())
            .fold(T::zero(), |acc, (x, w)| acc + x.abs() * w.clone())
    }

    /// Support `{s : x(s) ≠ 0}` as element indices.
    pub fn support(&self) -> BTreeSet<usize> {
        self.vector.support_indices().into_iter().collect()
    }

    pub fn modulus(&self) -> Self {
        self.rewrap(self.vector.modulus())
    }

    pub fn pos_part(&self) -> Self {
        self.rewrap(self.vector.pos_part())
    }

    pub fn neg_part(&self) -> Self {
        self.rewrap(self.vector.neg_part())
    }

    pub fn negated(&self) -> Self {
        self.rewrap(self.vector.negated())
    }

    pub fn scaled(&self, by: &T) -> Self {
        self.rewrap(self.vector.scaled(by))
    }

    pub fn sup(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_algebra(other)?;
        Ok(self.rewrap(self.vector.sup(&other.vector)?))
    }

    pub fn inf(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_algebra(other)?;
        Ok(self.rewrap(self.vector.inf(&other.vector)?))
    }

    pub fn plus(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_algebra(other)?;
        Ok(self.rewrap(self.vector.plus(&other.vector)?))
    }

    pub fn minus(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_algebra(other)?;
        Ok(self.rewrap(self.vector.minus(&other.vector)?))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.vector.is_nonnegative()
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero()
    }

    /// n-th convolution power `x^{⋆n}`, `n ≥ 1`.
    pub fn convolution_power(&self, n: usize) -> Result<Self, AlgebraError> {
        assert!(n >= 1);
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.convolve(self)?;
        }
        Ok(acc)
    }

    /// The sequence `‖x^{⋆n}‖_ω^{1/n}` for `n = 1..=max_power`, as floats.
    /// Reports the finite sequence only; classification is the caller's job.
    pub fn spectral_radius_probe(&self, max_power: usize) -> Result<Vec<f64>, AlgebraError> {
        assert!(max_power >= 1);
        let mut out = Vec::with_capacity(max_power);
        let mut power = self.clone();
        for n in 1..=max_power {
            let norm = power
                .beurling_norm()
                .to_f64()
                .expect("norm representable as f64");
            out.push(norm.powf(1.0 / n as f64));
            if n < max_power {
                power = power.convolve(self)?;
            }
        }
        Ok(out)
    }

    /// Coefficients as a label → exact-value map, nonzero entries only.
    pub fn to_label_map(&self) -> std::collections::BTreeMap<String, String> {
        let table = self.algebra.table();
        self.coords()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (table.label(i).to_string(), v.to_report_string()))
            .collect()
    }

    /// Zero-extension into the algebra of an ambient semigroup: coefficients
    /// are copied on the embedded elements and zero elsewhere. Requires the
    /// element's table to be the restriction of the target's and the weights
    /// to agree on the embedded elements.
    pub fn zero_extend(
        &self,
        target: &Arc<BeurlingAlgebra<T>>,
    ) -> Result<AlgebraElement<T>, AlgebraError> {
        let map = self.algebra.table().embedding_into(target.table())?;
        for (sub_ix, &big_ix) in map.iter().enumerate() {
            if self.algebra.weight().value(sub_ix) != target.weight().value(big_ix) {
                return Err(AlgebraError::WeightRestrictionMismatch {
                    label: self.algebra.table().label(sub_ix).to_string(),
                });
            }
        }
        let mut coords = vec![T::zero(); target.order()];
        for (sub_ix, &big_ix) in map.iter().enumerate() {
            coords[big_ix] = self.coords()[sub_ix].clone();
        }
        target.element(coords)
    }
}

impl<T: Scalar> PartialEq for AlgebraElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.vector == other.vector
    }
}

/// Complexified algebra element `re + i·im` with the bilinear product
/// `(a+ib)(c+id) = (ac − bd) + i(ad + bc)`.
#[derive(Debug, Clone)]
pub struct ComplexAlgebraElement<T> {
    re: AlgebraElement<T>,
    im: AlgebraElement<T>,
}

impl<T: Scalar> PartialEq for ComplexAlgebraElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl<T: Scalar> ComplexAlgebraElement<T> {
    pub fn new(re: AlgebraElement<T>, im: AlgebraElement<T>) -> Result<Self, AlgebraError> {
        re.check_algebra(&im)?;
        Ok(ComplexAlgebraElement { re, im })
    }

    pub fn re(&self) -> &AlgebraElement<T> {
        &self.re
    }

    pub fn im(&self) -> &AlgebraElement<T> {
        &self.im
    }

    pub fn convolve(&self, other: &Self) -> Result<Self, AlgebraError> {
        let ac = self.re.convolve(&other.re)?;
        let bd = self.im.convolve(&other.im)?;
        let ad = self.re.convolve(&other.im)?;
        let bc = self.im.convolve(&other.re)?;
        Ok(ComplexAlgebraElement {
            re: ac.minus(&bd)?,
            im: ad.plus(&bc)?,
        })
    }

    pub fn plus(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(ComplexAlgebraElement {
            re: self.re.plus(&other.re)?,
            im: self.im.plus(&other.im)?,
        })
    }
}

impl<T: Scalar + num_traits::Float> ComplexAlgebraElement<T> {
    /// Coordinatewise complex modulus of the coefficient pair.
    pub fn complex_modulus(&self) -> LatticeVector<T> {
        crate::lattice::ComplexLatticeVector::new(self.re.vector.clone(), self.im.vector.clone())
            .expect("same universe")
            .complex_modulus()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::semigroup::{builtin_catalog, cyclic_group, null_semigroup};
    use crate::Rational;
    use proptest::prelude::*;

    fn z2() -> Arc<BeurlingAlgebra<Rational>> {
        BeurlingAlgebra::unweighted(cyclic_group(2))
    }

    fn el(
        alg: &Arc<BeurlingAlgebra<Rational>>,
        coords: &[i64],
    ) -> AlgebraElement<Rational> {
        alg.element(coords.iter().map(|&c| ratio(c, 1)).collect())
            .unwrap()
    }

    #[test]
    fn delta_algebra_on_z2() {
        let a = z2();
        // (δ_e + 2δ_a) ⋆ δ_a = 2δ_e + δ_a
        let x = el(&a, &[1, 2]);
        let y = a.delta(1);
        assert_eq!(x.convolve(&y).unwrap(), el(&a, &[2, 1]));
    }

    #[test]
    fn identity_element_is_neutral() {
        for table in builtin_catalog(6) {
            let flags = table.classify();
            let Some(e) = flags.identity else { continue };
            let alg = BeurlingAlgebra::<Rational>::unweighted(table);
            let x = el(&alg, &(0..alg.order() as i64).map(|i| i - 2).collect::<Vec<_>>());
            assert_eq!(alg.delta(e).convolve(&x).unwrap(), x);
            assert_eq!(x.convolve(&alg.delta(e)).unwrap(), x);
        }
    }

    #[test]
    fn null_semigroup_collapses_products() {
        let alg = BeurlingAlgebra::<Rational>::unweighted(null_semigroup(2));
        let x = el(&alg, &[2, 3]);
        let y = el(&alg, &[-1, 4]);
        // ((x_z + x_a)(y_z + y_a))·δ_z = (5·3)·δ_z
        assert_eq!(x.convolve(&y).unwrap(), el(&alg, &[15, 0]));
    }

    #[test]
    fn beurling_norm_examples() {
        let a = z2();
        assert_eq!(el(&a, &[1, -2]).beurling_norm(), ratio(3, 1));
        assert_eq!(a.delta(1).beurling_norm(), ratio(1, 1));

        let weighted = BeurlingAlgebra::new(
            cyclic_group(2),
            Weight::new(vec![ratio(1, 1), ratio(2, 1)]).unwrap(),
        )
        .unwrap();
        assert_eq!(el(&weighted, &[1, 1]).beurling_norm(), ratio(3, 1));
        assert_eq!(weighted.delta(1).beurling_norm(), ratio(2, 1));
    }

    #[test]
    fn support_examples() {
        let alg = BeurlingAlgebra::<Rational>::unweighted(cyclic_group(3));
        let x = el(&alg, &[1, 0, -1]);
        assert_eq!(x.support(), [0, 2].into());
        assert!(alg.zero().support().is_empty());

        let y = el(&z2(), &[1, -1]);
        assert_eq!(y.pos_part().support(), [0].into());
        assert_eq!(y.neg_part().support(), [1].into());
    }

    #[test]
    fn convolve_rejects_mismatched_algebras() {
        let a = z2();
        let b = BeurlingAlgebra::new(
            cyclic_group(2),
            Weight::new(vec![ratio(1, 1), ratio(2, 1)]).unwrap(),
        )
        .unwrap();
        let err = el(&a, &[1, 0]).convolve(&el(&b, &[1, 0])).unwrap_err();
        assert!(matches!(err, AlgebraError::AlgebraMismatch));
    }

    #[test]
    fn spectral_probe_examples() {
        // δ_a in ℓ¹(Z₂): powers alternate δ_e, δ_a, all of norm 1.
        let a = z2();
        let probe = a.delta(1).spectral_radius_probe(6).unwrap();
        assert!(probe.iter().all(|&v| (v - 1.0).abs() < 1e-12));

        // ω = (1,4): odd powers have norm 4, even powers norm 1.
        let weighted = BeurlingAlgebra::new(
            cyclic_group(2),
            Weight::new(vec![ratio(1, 1), ratio(4, 1)]).unwrap(),
        )
        .unwrap();
        let probe = weighted.delta(1).spectral_radius_probe(5).unwrap();
        for (i, v) in probe.iter().enumerate() {
            let n = (i + 1) as f64;
            let expected = if (i + 1) % 2 == 1 {
                4f64.powf(1.0 / n)
            } else {
                1.0
            };
            assert!((v - expected).abs() < 1e-12, "n={} got {}", i + 1, v);
        }

        // δ_z in the null semigroup is idempotent.
        let null = BeurlingAlgebra::<Rational>::unweighted(null_semigroup(2));
        let probe = null.delta(0).spectral_radius_probe(4).unwrap();
        assert!(probe.iter().all(|&v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn zero_extension_examples() {
        let z2t = cyclic_group(2);
        let trivial = z2t.subsemigroups().into_iter().find(|s| s.order() == 1).unwrap();
        let big = BeurlingAlgebra::<Rational>::unweighted(z2t);
        let small = BeurlingAlgebra::<Rational>::unweighted(trivial);
        let x = small.delta(0);
        let ext = x.zero_extend(&big).unwrap();
        assert_eq!(ext, el(&big, &[1, 0]));
        assert_eq!(ext.support(), [0].into());

        // Extension commutes with the modulus (coordinatewise zero padding).
        let y = el(&small, &[-3]);
        assert_eq!(
            y.zero_extend(&big).unwrap().modulus(),
            y.modulus().zero_extend(&big).unwrap()
        );
    }

    #[test]
    fn label_map_round_trip() {
        let alg = BeurlingAlgebra::<Rational>::unweighted(cyclic_group(3));
        let x = el(&alg, &[2, 0, -1]);
        let map = x.to_label_map();
        assert_eq!(map.len(), 2);
        assert_eq!(map["0"], "2");
        assert_eq!(map["2"], "-1");
        assert_eq!(alg.element_from_label_map(&map).unwrap(), x);

        let mut bad = map.clone();
        bad.insert("nope".into(), "1".into());
        assert!(matches!(
            alg.element_from_label_map(&bad).unwrap_err(),
            AlgebraError::UnknownLabel { .. }
        ));
    }

    #[test]
    fn zero_extension_rejects_non_subsemigroups() {
        let z2 = BeurlingAlgebra::<Rational>::unweighted(cyclic_group(2));
        let z3 = BeurlingAlgebra::<Rational>::unweighted(cyclic_group(3));
        let x = z3.delta(1);
        assert!(matches!(
            x.zero_extend(&z2).unwrap_err(),
            AlgebraError::Semigroup(_)
        ));
    }

    fn catalog_algebra() -> impl Strategy<Value = Arc<BeurlingAlgebra<Rational>>> {
        let tables = builtin_catalog(5);
        (0..tables.len()).prop_map(move |i| BeurlingAlgebra::unweighted(tables[i].clone()))
    }

    fn element_of(
        alg: Arc<BeurlingAlgebra<Rational>>,
    ) -> impl Strategy<Value = AlgebraElement<Rational>> {
        let n = alg.order();
        proptest::collection::vec((-9i64..=9, 1i64..=3), n)
            .prop_map(move |cs| {
                alg.element(cs.into_iter().map(|(p, q)| ratio(p, q)).collect())
                    .unwrap()
            })
    }

    fn element_triple() -> impl Strategy<
        Value = (
            AlgebraElement<Rational>,
            AlgebraElement<Rational>,
            AlgebraElement<Rational>,
        ),
    > {
        catalog_algebra().prop_flat_map(|alg| {
            (
                element_of(Arc::clone(&alg)),
                element_of(Arc::clone(&alg)),
                element_of(alg),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn convolution_is_associative_and_bilinear((x, y, z) in element_triple()) {
            let left = x.convolve(&y).unwrap().convolve(&z).unwrap();
            let right = x.convolve(&y.convolve(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);

            let dist = x.plus(&y).unwrap().convolve(&z).unwrap();
            let split = x.convolve(&z).unwrap().plus(&y.convolve(&z).unwrap()).unwrap();
            prop_assert_eq!(dist, split);
        }

        #[test]
        fn positivity_riesz_and_submultiplicativity((x, y, _) in element_triple()) {
            let pos = x.modulus().convolve(&y.modulus()).unwrap();
            prop_assert!(pos.is_nonnegative());

            // |x⋆y| ≤ |x|⋆|y| coordinatewise.
            let product = x.convolve(&y).unwrap();
            prop_assert!(product.modulus().vector().leq(pos.vector()).unwrap());

            // ‖x⋆y‖_ω ≤ ‖x‖_ω·‖y‖_ω.
            prop_assert!(product.beurling_norm() <= x.beurling_norm() * y.beurling_norm());
        }

        #[test]
        fn beurling_norm_is_a_lattice_norm((x, y, _) in element_triple()) {
            // |u| ≤ |y| ⇒ ‖u‖_ω ≤ ‖y‖_ω, with u = |x| ∧ |y| as the
            // dominated element.
            let u = x.modulus().inf(&y.modulus()).unwrap();
            prop_assert!(u.modulus().vector().leq(y.modulus().vector()).unwrap());
            prop_assert!(u.beurling_norm() <= y.beurling_norm());
        }

        #[test]
        fn support_of_product_is_contained_in_product_of_supports((x, y, _) in element_triple()) {
            let product = x.convolve(&y).unwrap();
            let bound = x
                .algebra()
                .table()
                .product_set(&x.support(), &y.support());
            prop_assert!(product.support().is_subset(&bound));
        }
    }
}
