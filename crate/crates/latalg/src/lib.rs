//! Vector lattices, weighted convolution algebras on finite semigroups, and
//! the regular-operator calculus connecting them.
//!
//! The crate is organised around a handful of carriers:
//!
//! - [`LatticeVector`]: a coordinate vector with the coordinatewise order,
//!   supporting suprema, moduli, and disjointness tests.
//! - [`SemigroupTable`]: a finite Cayley table, validated for associativity
//!   and classified (unital / cancellative / group / abelian).
//! - [`BeurlingAlgebra`] and [`AlgebraElement`]: the weighted ℓ¹ space over a
//!   semigroup with convolution as product and the Beurling norm.
//! - [`FiniteMeasure`]: a signed measure on the power set of a finite point
//!   set, with brute-force oracles for the lattice formulas.
//! - [`RegularOperator`]: a matrix between weighted coordinate lattices, with
//!   the Riesz–Kantorovich closed forms, their enumeration oracles, and the
//!   regular norm.
//! - [`verify`]: executable renderings of the theorems about left regular
//!   representations, with pass/fail verdicts and replayable witnesses.
//!
//! All core math is generic over a [`Scalar`]; exact checks instantiate it
//! with arbitrary-precision rationals ([`Rational`]), while operations that
//! are intrinsically irrational (complex moduli, p-norms, root sequences)
//! run on `f64`.
//!
//! ```
//! use latalg::semigroup::{cyclic_group, null_semigroup};
//! use latalg::operator::left_regular_matrix;
//! use latalg::scalar::ratio;
//! use latalg::{BeurlingAlgebra, Rational};
//!
//! // On a group, |π_x| = π_{|x|} holds exactly for every x.
//! let z2 = BeurlingAlgebra::<Rational>::unweighted(cyclic_group(2));
//! let x = z2.element(vec![ratio(1, 2), ratio(-3, 1)]).unwrap();
//! assert_eq!(
//!     left_regular_matrix(&x).operator_modulus(),
//!     left_regular_matrix(&x.modulus()),
//! );
//!
//! // On the null semigroup it fails: x = δ_a − δ_z deviates by 2.
//! let null = BeurlingAlgebra::<Rational>::unweighted(null_semigroup(2));
//! let x = null.element(vec![ratio(-1, 1), ratio(1, 1)]).unwrap();
//! let lhs = left_regular_matrix(&x).operator_modulus();
//! let rhs = left_regular_matrix(&x.modulus());
//! assert_eq!(lhs.max_abs_deviation(&rhs).unwrap(), ratio(2, 1));
//! ```

pub mod algebra;
pub mod lattice;
pub mod lp;
pub mod measure;
pub mod operator;
pub mod scalar;
pub mod semigroup;
pub mod verify;
pub mod weight;

pub use algebra::{AlgebraElement, AlgebraError, BeurlingAlgebra, ComplexAlgebraElement};
pub use lattice::{ComplexLatticeVector, LatticeError, LatticeVector};
pub use lp::{LpElement, LpError};
pub use measure::{FiniteMeasure, MeasureError};
pub use operator::{OperatorError, RegularOperator};
pub use scalar::Scalar;
pub use semigroup::{SemigroupError, SemigroupTable, StructureFlags};
pub use weight::{Weight, WeightError};

/// Exact arbitrary-precision rational scalar used by all theorem-grade checks.
pub type Rational = num_rational::BigRational;

/// Coordinate vector with exact rational entries.
pub type RationalVector = LatticeVector<Rational>;
/// Coordinate vector with `f64` entries.
pub type FloatVector = LatticeVector<f64>;
/// Weighted ℓ¹ convolution algebra with exact rational coefficients.
pub type RationalAlgebra = BeurlingAlgebra<Rational>;
/// Element of a [`RationalAlgebra`].
pub type RationalElement = AlgebraElement<Rational>;
/// Regular operator with exact rational entries.
pub type RationalOperator = RegularOperator<Rational>;
/// Signed measure with exact rational atom values.
pub type RationalMeasure = FiniteMeasure<Rational>;
