//! Regular operators between finite-dimensional weighted coordinate
//! lattices.
//!
//! Every matrix between coordinate lattices is regular (it splits into its
//! entrywise positive and negative parts), and the Riesz–Kantorovich
//! formulas all have entrywise closed forms:
//!
//! ```text
//! |T|(x)   = sup { |Ty|   : |y| ≤ x }           → entrywise |T|
//! [S∨T](x) = sup { Sy+Tz  : y,z ≥ 0, y+z = x }  → entrywise max
//! [S∧T](x) = inf { Sy+Tz  : y,z ≥ 0, y+z = x }  → entrywise min
//! ```
//!
//! The defining suprema are kept as enumeration oracles: the supremum of a
//! linear functional over the order interval `[−x, x]` (resp. over the
//! decompositions `y+z = x`) is attained, coordinate by coordinate, at a
//! sign pattern (resp. a binary split), so `2ⁿ` candidates suffice. Oracles
//! refuse dimensions above an explicit cutoff rather than sampling.
//!
//! The ℓ¹(ω) → ℓ¹(ω′) operator norm is the maximum weighted column sum,
//! which makes the regular norm `‖T‖_r = ‖|T|‖` exactly computable.

use crate::algebra::AlgebraElement;
use crate::lattice::{LatticeError, LatticeVector};
use crate::scalar::Scalar;
use crate::semigroup::SemigroupTable;
use crate::weight::Weight;

/// Default bound on the dimension of `2ⁿ` enumeration oracles.
pub const DEFAULT_ENUMERATION_CUTOFF: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum OperatorError {
    #[error("operator shapes differ: {left_rows}×{left_cols} vs {right_rows}×{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("operator weights differ")]
    WeightMismatch,
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("matrix row {row} has {got} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("vector has {got} coordinates, operator expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("oracle input must be coordinatewise nonnegative")]
    NotNonnegative,
    #[error("enumeration over dimension {dim} exceeds the cutoff {cutoff}")]
    CutoffExceeded { dim: usize, cutoff: usize },
    #[error("{name} is not a group")]
    NotAGroup { name: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Matrix between weighted coordinate lattices `ℓ¹(ω) → ℓ¹(ω′)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularOperator<T> {
    matrix: Vec<Vec<T>>,
    domain_weight: Weight<T>,
    codomain_weight: Weight<T>,
}

impl<T: Scalar> RegularOperator<T> {
    pub fn new(
        matrix: Vec<Vec<T>>,
        domain_weight: Weight<T>,
        codomain_weight: Weight<T>,
    ) -> Result<Self, OperatorError> {
        if matrix.is_empty() || matrix[0].is_empty() {
            return Err(OperatorError::EmptyMatrix);
        }
        let cols = matrix[0].len();
        for (row, r) in matrix.iter().enumerate() {
            if r.len() != cols {
                return Err(OperatorError::RaggedRow {
                    row,
                    got: r.len(),
                    expected: cols,
                });
            }
        }
        if domain_weight.dim() != cols || codomain_weight.dim() != matrix.len() {
            return Err(OperatorError::WeightMismatch);
        }
        Ok(RegularOperator {
            matrix,
            domain_weight,
            codomain_weight,
        })
    }

    /// Operator with trivial weights on both sides.
    pub fn unweighted(matrix: Vec<Vec<T>>) -> Result<Self, OperatorError> {
        if matrix.is_empty() || matrix[0].is_empty() {
            return Err(OperatorError::EmptyMatrix);
        }
        let (m, n) = (matrix.len(), matrix[0].len());
        RegularOperator::new(matrix, Weight::ones(n), Weight::ones(m))
    }

    pub fn identity(weight: Weight<T>) -> Self {
        let n = weight.dim();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect();
        RegularOperator {
            matrix,
            domain_weight: weight.clone(),
            codomain_weight: weight,
        }
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix[0].len()
    }

    pub fn matrix(&self) -> &[Vec<T>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.matrix[i][j]
    }

    pub fn domain_weight(&self) -> &Weight<T> {
        &self.domain_weight
    }

    pub fn codomain_weight(&self) -> &Weight<T> {
        &self.codomain_weight
    }

    fn check_same_space(&self, other: &Self) -> Result<(), OperatorError> {
        if self.rows() != other.rows() || self.cols() != other.cols() {
            return Err(OperatorError::ShapeMismatch {
                left_rows: self.rows(),
                left_cols: self.cols(),
                right_rows: other.rows(),
                right_cols: other.cols(),
            });
        }
        if self.domain_weight != other.domain_weight
            || self.codomain_weight != other.codomain_weight
        {
            return Err(OperatorError::WeightMismatch);
        }
        Ok(())
    }

    fn map_entries(&self, f: impl Fn(&T) -> T) -> Self {
        RegularOperator {
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
            domain_weight: self.domain_weight.clone(),
            codomain_weight: self.codomain_weight.clone(),
        }
    }

    fn zip_entries(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self, OperatorError> {
        self.check_same_space(other)?;
        Ok(RegularOperator {
            matrix: self
                .matrix
                .iter()
                .zip(&other.matrix)
                .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| f(a, b)).collect())
                .collect(),
            domain_weight: self.domain_weight.clone(),
            codomain_weight: self.codomain_weight.clone(),
        })
    }

    pub fn apply(&self, x: &LatticeVector<T>) -> Result<LatticeVector<T>, OperatorError> {
        if x.dim() != self.cols() {
            return Err(OperatorError::DimensionMismatch {
                expected: self.cols(),
                got: x.dim(),
            });
        }
        let coords = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x.coords())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect();
        Ok(LatticeVector::new(coords).expect("rows ≥ 1"))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, OperatorError> {
        if self.cols() != other.rows() {
            return Err(OperatorError::ShapeMismatch {
                left_rows: self.rows(),
                left_cols: self.cols(),
                right_rows: other.rows(),
                right_cols: other.cols(),
            });
        }
        if self.domain_weight != other.codomain_weight {
            return Err(OperatorError::WeightMismatch);
        }
        let matrix = (0..self.rows())
            .map(|i| {
                (0..other.cols())
                    .map(|j| {
                        (0..self.cols()).fold(T::zero(), |acc, k| {
                            acc + self.matrix[i][k].clone() * other.matrix[k][j].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(RegularOperator {
            matrix,
            domain_weight: other.domain_weight.clone(),
            codomain_weight: self.codomain_weight.clone(),
        })
    }

    pub fn plus(&self, other: &Self) -> Result<Self, OperatorError> {
        self.zip_entries(other, |a, b| a.clone() + b.clone())
    }

    pub fn minus(&self, other: &Self) -> Result<Self, OperatorError> {
        self.zip_entries(other, |a, b| a.clone() - b.clone())
    }

    pub fn negated(&self) -> Self {
        self.map_entries(|a| -a.clone())
    }

    pub fn scaled(&self, by: &T) -> Self {
        self.map_entries(|a| a.clone() * by.clone())
    }

    pub fn is_positive(&self) -> bool {
        self.matrix
            .iter()
            .all(|r| r.iter().all(|a| *a >= T::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| r.iter().all(|a| a.is_zero()))
    }

    /// Riesz–Kantorovich modulus: entrywise absolute value.
    pub fn operator_modulus(&self) -> Self {
        self.map_entries(|a| a.abs())
    }

    /// Riesz–Kantorovich supremum: entrywise maximum.
    pub fn operator_sup(&self, other: &Self) -> Result<Self, OperatorError> {
        self.zip_entries(other, |a, b| T::max_of(a, b))
    }

    /// Riesz–Kantorovich infimum: entrywise minimum.
    pub fn operator_inf(&self, other: &Self) -> Result<Self, OperatorError> {
        self.zip_entries(other, |a, b| T::min_of(a, b))
    }

    fn check_oracle_input(
        &self,
        x: &LatticeVector<T>,
        cutoff: usize,
    ) -> Result<(), OperatorError> {
        if x.dim() != self.cols() {
            return Err(OperatorError::DimensionMismatch {
                expected: self.cols(),
                got: x.dim(),
            });
        }
        if !x.is_nonnegative() {
            return Err(OperatorError::NotNonnegative);
        }
        if self.cols() > cutoff {
            return Err(OperatorError::CutoffExceeded {
                dim: self.cols(),
                cutoff,
            });
        }
        Ok(())
    }

    /// Enumeration oracle for `|T|(x) = sup{|Ty| : |y| ≤ x}` with `x ≥ 0`:
    /// coordinatewise max of `|Ty|` over the `2ⁿ` sign patterns
    /// `y ∈ {−x_j, +x_j}ⁿ`. Sufficient because the supremum of a linear
    /// functional over the box `[−x, x]` is attained at a vertex.
    pub fn rk_modulus_oracle(
        &self,
        x: &LatticeVector<T>,
        cutoff: usize,
    ) -> Result<LatticeVector<T>, OperatorError> {
        self.check_oracle_input(x, cutoff)?;
        let n = self.cols();
        let mut best: Option<Vec<T>> = None;
        for mask in 0u64..(1 << n) {
            let y: Vec<T> = x
                .coords()
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    if mask & (1 << j) != 0 {
                        -v.clone()
                    } else {
                        v.clone()
                    }
                })
                .collect();
            let image = self
                .apply(&LatticeVector::new(y).expect("n ≥ 1"))?
                .modulus();
            best = Some(match best {
                None => image.into_coords(),
                Some(b) => b
                    .iter()
                    .zip(image.coords())
                    .map(|(a, c)| T::max_of(a, c))
                    .collect(),
            });
        }
        Ok(LatticeVector::new(best.expect("at least one pattern")).expect("rows ≥ 1"))
    }

    /// Enumeration oracle for `[S∨T](x)` with `x ≥ 0`: coordinatewise max of
    /// `Sy + Tz` over the `2ⁿ` binary splits that assign each coordinate of
    /// `x` wholly to `y` or to `z`.
    pub fn rk_sup_oracle(
        &self,
        other: &Self,
        x: &LatticeVector<T>,
        cutoff: usize,
    ) -> Result<LatticeVector<T>, OperatorError> {
        self.binary_split_oracle(other, x, cutoff, true)
    }

    /// Enumeration oracle for `[S∧T](x)`: minima over binary splits.
    pub fn rk_inf_oracle(
        &self,
        other: &Self,
        x: &LatticeVector<T>,
        cutoff: usize,
    ) -> Result<LatticeVector<T>, OperatorError> {
        self.binary_split_oracle(other, x, cutoff, false)
    }

    fn binary_split_oracle(
        &self,
        other: &Self,
        x: &LatticeVector<T>,
        cutoff: usize,
        take_max: bool,
    ) -> Result<LatticeVector<T>, OperatorError> {
        self.check_same_space(other)?;
        self.check_oracle_input(x, cutoff)?;
        let n = self.cols();
        let mut best: Option<Vec<T>> = None;
        for mask in 0u64..(1 << n) {
            let mut y = vec![T::zero(); n];
            let mut z = vec![T::zero(); n];
            for (j, v) in x.coords().iter().enumerate() {
                if mask & (1 << j) != 0 {
                    y[j] = v.clone();
                } else {
                    z[j] = v.clone();
                }
            }
            let sy = self.apply(&LatticeVector::new(y).expect("n ≥ 1"))?;
            let tz = other.apply(&LatticeVector::new(z).expect("n ≥ 1"))?;
            let value = sy.plus(&tz)?;
            best = Some(match best {
                None => value.into_coords(),
                Some(b) => b
                    .iter()
                    .zip(value.coords())
                    .map(|(a, c)| {
                        if take_max {
                            T::max_of(a, c)
                        } else {
                            T::min_of(a, c)
                        }
                    })
                    .collect(),
            });
        }
        Ok(LatticeVector::new(best.expect("at least one split")).expect("rows ≥ 1"))
    }

    /// ℓ¹(ω) → ℓ¹(ω′) operator norm: the maximum weighted column sum
    /// `max_j (Σᵢ |T[i][j]| ω′(i)) / ω(j)`. Exact for exact scalars.
    pub fn weighted_operator_norm(&self) -> T {
        let mut best = T::zero();
        for j in 0..self.cols() {
            let mut sum = T::zero();
            for i in 0..self.rows() {
                sum = sum + self.matrix[i][j].abs() * self.codomain_weight.value(i).clone();
            }
            let ratio = sum / self.domain_weight.value(j).clone();
            if ratio > best {
                best = ratio;
            }
        }
        best
    }

    /// Regular norm `‖T‖_r = ‖|T|‖`.
    pub fn regular_norm(&self) -> T {
        self.operator_modulus().weighted_operator_norm()
    }

    /// Largest entrywise `|self − other|`, for deviation reporting.
    pub fn max_abs_deviation(&self, other: &Self) -> Result<T, OperatorError> {
        self.check_same_space(other)?;
        let mut worst = T::zero();
        for (r1, r2) in self.matrix.iter().zip(&other.matrix) {
            for (a, b) in r1.iter().zip(r2) {
                let d = (a.clone() - b.clone()).abs();
                if d > worst {
                    worst = d;
                }
            }
        }
        Ok(worst)
    }
}

/// Matrix of the left regular representation `π_x: y ↦ x⋆y`, i.e.
/// `M[t][s] = Σ_{r : r·s = t} x(r)`, with the algebra's weight on both
/// sides.
#[allow(clippy::needless_range_loop)] // scatter write into matrix[t][s] with computed t
pub fn left_regular_matrix<T: Scalar>(x: &AlgebraElement<T>) -> RegularOperator<T> {
    let table = x.algebra().table();
    let n = table.order();
    let mut matrix = vec![vec![T::zero(); n]; n];
    for (r, xr) in x.coords().iter().enumerate() {
        if xr.is_zero() {
            continue;
        }
        for s in 0..n {
            let t = table.mul(r, s);
            matrix[t][s] = matrix[t][s].clone() + xr.clone();
        }
    }
    RegularOperator {
        matrix,
        domain_weight: x.algebra().weight().clone(),
        codomain_weight: x.algebra().weight().clone(),
    }
}

/// Permutation matrix of the right translation `ρ_t f(s) = f(s·t)` on a
/// group, acting on coordinate vectors with trivial weights.
pub fn right_translation_matrix<T: Scalar>(
    table: &SemigroupTable,
    t: usize,
) -> Result<RegularOperator<T>, OperatorError> {
    if !table.classify().is_group {
        return Err(OperatorError::NotAGroup {
            name: table.name().to_string(),
        });
    }
    let n = table.order();
    let mut matrix = vec![vec![T::zero(); n]; n];
    for (s, row) in matrix.iter_mut().enumerate() {
        row[table.mul(s, t)] = T::one();
    }
    RegularOperator::unweighted(matrix)
}

/// Basis of `{T : Tρ_s = ρ_sT for all s}` over the scalar field, found by
/// exact Gaussian elimination on the stacked commutation constraints. The
/// basis order is determined by the ascending free columns of the reduced
/// system, so the output is deterministic.
pub fn commutant_basis<T: Scalar>(
    table: &SemigroupTable,
    cutoff: usize,
) -> Result<Vec<RegularOperator<T>>, OperatorError> {
    if !table.classify().is_group {
        return Err(OperatorError::NotAGroup {
            name: table.name().to_string(),
        });
    }
    let n = table.order();
    if n > cutoff {
        return Err(OperatorError::CutoffExceeded { dim: n, cutoff });
    }
    // Unknowns T[a][b] flattened as a·n + b. For each s and each position
    // (i,j), the (i,j) entry of Tρ_s − ρ_sT must vanish:
    //   (Tρ_s)[i][j]  = Σ_b T[i][b]·[j = b·s]
    //   (ρ_sT)[i][j]  = Σ_a [a = i·s]·T[a][j]
    let mut rows = Vec::new();
    for s in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![T::zero(); n * n];
                for b in 0..n {
                    if table.mul(b, s) == j {
                        row[i * n + b] = row[i * n + b].clone() + T::one();
                    }
                }
                let a = table.mul(i, s);
                row[a * n + j] = row[a * n + j].clone() - T::one();
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = nullspace(rows, n * n);
    Ok(basis
        .into_iter()
        .map(|flat| {
            let matrix = (0..n)
                .map(|i| flat[i * n..(i + 1) * n].to_vec())
                .collect();
            RegularOperator {
                matrix,
                domain_weight: Weight::ones(n),
                codomain_weight: Weight::ones(n),
            }
        })
        .collect())
}

/// Nullspace basis of a linear system by Gauss–Jordan elimination with exact
/// division. One basis vector per free column, in ascending column order.
pub fn nullspace<T: Scalar>(mut rows: Vec<Vec<T>>, ncols: usize) -> Vec<Vec<T>> {
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v = v.clone() / pivot.clone();
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (cell, p) in row.iter_mut().zip(&pivot_row) {
                    *cell = cell.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![T::zero(); ncols];
        v[free] = T::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rows[r][free].clone();
        }
        basis.push(v);
    }
    basis
}
