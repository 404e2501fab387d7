//! Strictly positive weights on semigroup elements.
//!
//! A weight is stored as a positive vector indexed like the ambient table's
//! elements. Submultiplicativity `ω(st) ≤ ω(s)ω(t)` is a joint property of
//! the weight and a table; it is validated exhaustively whenever the two
//! meet (algebra construction, or [`Weight::check_submultiplicative`]).

use crate::scalar::{Scalar, ScalarParseError};
use crate::semigroup::SemigroupTable;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum WeightError {
    #[error("weight must have at least one value")]
    Empty,
    #[error("weight value at index {index} is not strictly positive: {value}")]
    NonPositive { index: usize, value: String },
    #[error("weight is not submultiplicative: ω({s}·{t}) = {product_value} > {bound} = ω({s})·ω({t})")]
    NotSubmultiplicative {
        s: String,
        t: String,
        product_value: String,
        bound: String,
    },
    #[error("weight has {got} values but the table has {expected} elements")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight file is missing a value for element {label:?}")]
    MissingLabel { label: String },
    #[error(transparent)]
    Parse(#[from] ScalarParseError),
}

/// Strictly positive function on semigroup elements; carries the data of the
/// Beurling norm `‖f‖_ω = Σ |f(s)| ω(s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight<T> {
    values: Vec<T>,
}

impl<T: Scalar> Weight<T> {
    pub fn new(values: Vec<T>) -> Result<Self, WeightError> {
        if values.is_empty() {
            return Err(WeightError::Empty);
        }
        for (index, v) in values.iter().enumerate() {
            if *v <= T::zero() {
                return Err(WeightError::NonPositive {
                    index,
                    value: v.to_report_string(),
                });
            }
        }
        Ok(Weight { values })
    }

    /// The trivial weight ω ≡ 1.
    pub fn ones(n: usize) -> Self {
        assert!(n >= 1);
        Weight {
            values: vec![T::one(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, i: usize) -> &T {
        &self.values[i]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| *v == T::one())
    }

    /// Exhaustive O(n²) check of `ω(st) ≤ ω(s)ω(t)` against a table.
    pub fn check_submultiplicative(&self, table: &SemigroupTable) -> Result<(), WeightError> {
        if self.dim() != table.order() {
            return Err(WeightError::DimensionMismatch {
                expected: table.order(),
                got: self.dim(),
            });
        }
        for s in 0..table.order() {
            for t in 0..table.order() {
                let product = table.mul(s, t);
                let bound = self.values[s].clone() * self.values[t].clone();
                if self.values[product] > bound {
                    return Err(WeightError::NotSubmultiplicative {
                        s: table.label(s).to_string(),
                        t: table.label(t).to_string(),
                        product_value: self.values[product].to_report_string(),
                        bound: bound.to_report_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Build a weight from a label→value map (values in the exact string
    /// format accepted by [`Scalar::parse_exact`]), ordered like the table.
    pub fn from_label_map(
        map: &BTreeMap<String, String>,
        table: &SemigroupTable,
    ) -> Result<Self, WeightError> {
        let mut values = Vec::with_capacity(table.order());
        for label in table.elements() {
            let raw = map.get(label).ok_or_else(|| WeightError::MissingLabel {
                label: label.clone(),
            })?;
            values.push(T::parse_exact(raw)?);
        }
        Weight::new(values)
    }

    /// Restriction to a subset of indices (an embedded subsemigroup).
    pub fn restricted(&self, indices: &[usize]) -> Self {
        Weight {
            values: indices.iter().map(|&i| self.values[i].clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::semigroup::cyclic_group;
    use crate::Rational;

    #[test]
    fn positive_values_required() {
        let err = Weight::new(vec![ratio(1, 1), ratio(0, 1)]).unwrap_err();
        assert!(matches!(err, WeightError::NonPositive { index: 1, .. }));
    }

    #[test]
    fn submultiplicativity_on_z2() {
        let z2 = cyclic_group(2);
        // ω = (1, 4): ω(a·a) = ω(e) = 1 ≤ 16.
        Weight::new(vec![ratio(1, 1), ratio(4, 1)])
            .unwrap()
            .check_submultiplicative(&z2)
            .unwrap();
        // ω = (1, 1/4): ω(a·a) = 1 > 1/16.
        let bad = Weight::new(vec![ratio(1, 1), ratio(1, 4)]).unwrap();
        assert!(matches!(
            bad.check_submultiplicative(&z2).unwrap_err(),
            WeightError::NotSubmultiplicative { .. }
        ));
    }

    #[test]
    fn label_map_round_trip() {
        let z2 = cyclic_group(2);
        let mut map = BTreeMap::new();
        map.insert("0".to_string(), "1".to_string());
        map.insert("1".to_string(), "2.5".to_string());
        let w: Weight<Rational> = Weight::from_label_map(&map, &z2).unwrap();
        assert_eq!(w.value(1), &ratio(5, 2));

        map.remove("1");
        let err = Weight::<Rational>::from_label_map(&map, &z2).unwrap_err();
        assert!(matches!(err, WeightError::MissingLabel { .. }));
    }
}
