//! Signed measures on the power set of a finite point set.
//!
//! A measure is stored by its atoms; evaluation on a subset is summation.
//! On atoms the lattice operations have closed forms — `(μ∨ν)({x}) =
//! max(μ({x}), ν({x}))` and `|μ|({x}) = |μ({x})|` — while the defining
//! formulas are suprema over subsets and partitions:
//!
//! ```text
//! (μ∨ν)(A) = sup { μ(B) + ν(A∖B) : B ⊆ A }
//! |μ|(A)   = sup { Σᵢ |μ(Bᵢ)|   : B₁,…,Bₙ a partition of A }
//! ```
//!
//! Both suprema are implemented as brute-force oracles so the closed forms
//! can be checked against them on every subset of small point sets.

use crate::scalar::Scalar;
use std::collections::BTreeSet;

#[derive(Debug, thiserror::Error)]
pub enum MeasureError {
    #[error("point sets differ: left is {left:?}, right is {right:?}")]
    PointSetMismatch { left: Vec<String>, right: Vec<String> },
    #[error("a measure needs at least one point")]
    EmptyPointSet,
    #[error("duplicate point label {label:?}")]
    DuplicatePoint { label: String },
    #[error("{points} points but {atoms} atom values")]
    LengthMismatch { points: usize, atoms: usize },
    #[error("point index {index} is out of range for {size} points")]
    PointOutOfRange { index: usize, size: usize },
    #[error("label {label:?} is not a point of the measure space")]
    UnknownLabel { label: String },
    #[error(transparent)]
    Parse(#[from] crate::scalar::ScalarParseError),
}

/// Signed measure on the power set of a finite point set, stored by atoms.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMeasure<T> {
    points: Vec<String>,
    atoms: Vec<T>,
}

impl<T: Scalar> FiniteMeasure<T> {
    pub fn new(points: Vec<String>, atoms: Vec<T>) -> Result<Self, MeasureError> {
        if points.is_empty() {
            return Err(MeasureError::EmptyPointSet);
        }
        if points.len() != atoms.len() {
            return Err(MeasureError::LengthMismatch {
                points: points.len(),
                atoms: atoms.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &points {
            if !seen.insert(label.clone()) {
                return Err(MeasureError::DuplicatePoint {
                    label: label.clone(),
                });
            }
        }
        Ok(FiniteMeasure { points, atoms })
    }

    /// Measure with auto-generated point labels `x0, x1, …`.
    pub fn from_atoms(atoms: Vec<T>) -> Result<Self, MeasureError> {
        let points = (0..atoms.len()).map(|i| format!("x{i}")).collect();
        FiniteMeasure::new(points, atoms)
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn atoms(&self) -> &[T] {
        &self.atoms
    }

    pub fn atom(&self, i: usize) -> &T {
        &self.atoms[i]
    }

    fn check_points(&self, other: &Self) -> Result<(), MeasureError> {
        if self.points != other.points {
            return Err(MeasureError::PointSetMismatch {
                left: self.points.clone(),
                right: other.points.clone(),
            });
        }
        Ok(())
    }

    fn check_subset(&self, subset: &BTreeSet<usize>) -> Result<(), MeasureError> {
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.point_count()) {
            return Err(MeasureError::PointOutOfRange {
                index: bad,
                size: self.point_count(),
            });
        }
        Ok(())
    }

    /// Measure over `points` from a label → value map (exact string values);
    /// absent labels carry zero mass, unknown labels are rejected.
    pub fn from_label_map(
        points: Vec<String>,
        map: &std::collections::BTreeMap<String, String>,
    ) -> Result<Self, MeasureError> {
        let mut atoms = vec![T::zero(); points.len()];
        for (label, raw) in map {
            let Some(ix) = points.iter().position(|p| p == label) else {
                return Err(MeasureError::UnknownLabel {
                    label: label.clone(),
                });
            };
            atoms[ix] = T::parse_exact(raw)?;
        }
        FiniteMeasure::new(points, atoms)
    }

    /// Atom values as a label → exact-value map, nonzero entries only.
    pub fn to_label_map(&self) -> std::collections::BTreeMap<String, String> {
        self.points
            .iter()
            .zip(&self.atoms)
            .filter(|(_, v)| !v.is_zero())
            .map(|(p, v)| (p.clone(), v.to_report_string()))
            .collect()
    }

    /// `μ(A)` by summation over atoms; `μ(∅) = 0`.
    pub fn evaluate(&self, subset: &BTreeSet<usize>) -> Result<T, MeasureError> {
        self.check_subset(subset)?;
        Ok(subset
            .iter()
            .fold(T::zero(), |acc, &i| acc + self.atoms[i].clone()))
    }

    /// Supremum `μ∨ν`, atomwise maximum.
    pub fn measure_sup(&self, other: &Self) -> Result<Self, MeasureError> {
        self.check_points(other)?;
        Ok(FiniteMeasure {
            points: self.points.clone(),
            atoms: self
                .atoms
                .iter()
                .zip(&other.atoms)
                .map(|(a, b)| T::max_of(a, b))
                .collect(),
        })
    }

    /// Infimum `μ∧ν`, atomwise minimum.
    pub fn measure_inf(&self, other: &Self) -> Result<Self, MeasureError> {
        self.check_points(other)?;
        Ok(FiniteMeasure {
            points: self.points.clone(),
            atoms: self
                .atoms
                .iter()
                .zip(&other.atoms)
                .map(|(a, b)| T::min_of(a, b))
                .collect(),
        })
    }

    /// Total variation `|μ|`, atomwise absolute value.
    pub fn total_variation(&self) -> Self {
        FiniteMeasure {
            points: self.points.clone(),
            atoms: self.atoms.iter().map(|a| a.abs()).collect(),
        }
    }

    /// Total variation norm `‖μ‖ = |μ|(X)`.
    pub fn norm(&self) -> T {
        self.atoms.iter().fold(T::zero(), |acc, a| acc + a.abs())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.atoms.iter().all(|a| *a >= T::zero())
    }

    /// Brute-force `sup { μ(B) + ν(A∖B) : B ⊆ A }` over all 2^|A| subsets.
    pub fn sup_oracle(&self, other: &Self, a: &BTreeSet<usize>) -> Result<T, MeasureError> {
        self.check_points(other)?;
        self.check_subset(a)?;
        let items: Vec<usize> = a.iter().copied().collect();
        let mut best: Option<T> = None;
        for mask in 0u64..(1 << items.len()) {
            let mut value = T::zero();
            for (bit, &point) in items.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    value = value + self.atoms[point].clone();
                } else {
                    value = value + other.atoms[point].clone();
                }
            }
            best = Some(match best {
                None => value,
                Some(b) => T::max_of(&b, &value),
            });
        }
        Ok(best.expect("at least the empty split"))
    }

    /// Brute-force `sup { Σᵢ |μ(Bᵢ)| : partition of A }` over all set
    /// partitions of `A`.
    pub fn total_variation_oracle(&self, a: &BTreeSet<usize>) -> Result<T, MeasureError> {
        self.check_subset(a)?;
        let items: Vec<usize> = a.iter().copied().collect();
        let mut best = T::zero(); // the empty partition of ∅ sums to 0
        for partition in set_partitions(&items) {
            let mut total = T::zero();
            for block in &partition {
                let block_value = block
                    .iter()
                    .fold(T::zero(), |acc, &i| acc + self.atoms[i].clone());
                total = total + block_value.abs();
            }
            if total > best {
                best = total;
            }
        }
        Ok(best)
    }
}

/// All partitions of `items` into non-empty blocks (the empty input has the
/// single empty partition).
pub fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn rec(
        items: &[usize],
        pos: usize,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pos == items.len() {
            out.push(current.clone());
            return;
        }
        for b in 0..current.len() {
            current[b].push(items[pos]);
            rec(items, pos + 1, current, out);
            current[b].pop();
        }
        current.push(vec![items[pos]]);
        rec(items, pos + 1, current, out);
        current.pop();
    }
    rec(items, 0, &mut current, &mut out);
    out
}

/// All subsets of `{0, …, n−1}` in mask order.
pub fn all_subsets(n: usize) -> Vec<BTreeSet<usize>> {
    assert!(n <= 20);
    (0u64..(1 << n))
        .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect()
}
