//! Executable theorem checks with pass/fail verdicts and replayable
//! witnesses.
//!
//! The central check compares, for a sample element `x` of a weighted
//! convolution algebra, the operator modulus of the left regular
//! representation with the representation of the modulus:
//!
//! ```text
//! |π_x|  vs  π_{|x|}
//! ```
//!
//! Equality for all `x` says the representation is a lattice homomorphism.
//! It must hold whenever the underlying semigroup is cancellative; on
//! non-cancellative tables it may fail, and failures are returned as
//! verdicts carrying the exact inputs and the deviation, never as errors.
//!
//! All sampling is seeded and exact: coefficients are rationals with
//! numerators in `[−9, 9]` and denominators in `{1, 2, 3}`, so verdicts are
//! pure functions of `(catalog, seed, config)`.

use crate::algebra::{AlgebraElement, AlgebraError, BeurlingAlgebra, ComplexAlgebraElement};
use crate::lattice::LatticeVector;
use crate::lp::{lp_action, lp_action_matrix, LpElement, LpError};
use crate::measure::{all_subsets, FiniteMeasure};
use crate::operator::{
    commutant_basis, left_regular_matrix, right_translation_matrix, RegularOperator,
};
use crate::operator::OperatorError;
use crate::scalar::Scalar;
use crate::semigroup::{SemigroupTable, StructureFlags};
use crate::weight::Weight;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

pub const THEOREM_LATTICE_HOM: &str = "lattice_homomorphism";
pub const THEOREM_SUPPORT: &str = "support_hypotheses";
pub const THEOREM_DISJOINTNESS: &str = "disjointness_lemma";
pub const THEOREM_LP_ACTION: &str = "lp_action";
pub const THEOREM_EMBEDDING: &str = "embedding";
pub const THEOREM_COMMUTANT: &str = "commutant";
pub const THEOREM_RK_ORACLES: &str = "riesz_kantorovich_oracles";
pub const THEOREM_MEASURE_LATTICE: &str = "measure_lattice";
pub const THEOREM_COMPLEX_MODULUS: &str = "complex_modulus_grid";
pub const THEOREM_COMPLEX_SUBMULT: &str = "complex_submultiplicativity";
pub const THEOREM_ALGEBRA_INEQ: &str = "algebra_inequalities";

/// Whether a verdict covers its hypothesis space exhaustively or on a
/// seeded sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Exhaustive,
    Sampled,
}

/// A named coefficient vector, coordinates in exact report format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedVector {
    pub name: String,
    pub coords: Vec<String>,
}

impl NamedVector {
    pub fn from_vector<T: Scalar>(name: &str, v: &LatticeVector<T>) -> Self {
        NamedVector {
            name: name.to_string(),
            coords: v.coords().iter().map(|c| c.to_report_string()).collect(),
        }
    }
}

/// Row-major grid of values in exact report format; a vector is a 1×n grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueGrid {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl ValueGrid {
    pub fn from_operator<T: Scalar>(op: &RegularOperator<T>) -> Self {
        ValueGrid {
            rows: op.rows(),
            cols: op.cols(),
            entries: op
                .matrix()
                .iter()
                .flat_map(|r| r.iter().map(|v| v.to_report_string()))
                .collect(),
        }
    }

    pub fn from_vector<T: Scalar>(v: &LatticeVector<T>) -> Self {
        ValueGrid {
            rows: 1,
            cols: v.dim(),
            entries: v.coords().iter().map(|c| c.to_report_string()).collect(),
        }
    }

    pub fn from_scalar<T: Scalar>(v: &T) -> Self {
        ValueGrid {
            rows: 1,
            cols: 1,
            entries: vec![v.to_report_string()],
        }
    }
}

/// Failure evidence: the inputs and the two unequal values with their
/// largest absolute deviation. Inputs are stored exactly so the deviation
/// can be reproduced by re-running the named operation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<NamedVector>,
    pub lhs: ValueGrid,
    pub rhs: ValueGrid,
    pub max_deviation: String,
}

/// Pass/fail outcome of one theorem check on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub theorem_id: String,
    /// Catalog entry the verdict refers to, or `"-"` for global sweeps.
    pub entry: String,
    /// Human-readable description of (table, weight, inputs).
    pub instance: String,
    pub passed: bool,
    pub check: CheckKind,
    /// Instances checked (all of them on success; up to and including the
    /// failing one otherwise).
    pub checked: usize,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn pass(theorem_id: &str, entry: &str, instance: String, check: CheckKind, checked: usize) -> Self {
        Verdict {
            theorem_id: theorem_id.to_string(),
            entry: entry.to_string(),
            instance,
            passed: true,
            check,
            checked,
            notes: Vec::new(),
            witness: None,
        }
    }

    fn fail(
        theorem_id: &str,
        entry: &str,
        instance: String,
        check: CheckKind,
        checked: usize,
        witness: Witness,
    ) -> Self {
        Verdict {
            theorem_id: theorem_id.to_string(),
            entry: entry.to_string(),
            instance,
            passed: false,
            check,
            checked,
            notes: Vec::new(),
            witness: Some(witness),
        }
    }
}

/// Stable aggregation order: theorem id, then entry, then instance.
pub fn sort_verdicts(verdicts: &mut [Verdict]) {
    verdicts.sort_by(|a, b| {
        (&a.theorem_id, &a.entry, &a.instance).cmp(&(&b.theorem_id, &b.entry, &b.instance))
    });
}

/// Deterministic 64-bit tag hash for deriving per-check seeds.
pub fn seed_for(base: u64, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    base ^ h
}

/// Seeded source of exact rational samples on a small grid: numerators in
/// `[−9, 9]`, denominators in `{1, 2, 3}`.
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-9i64..=9);
        let den = self.rng.gen_range(1i64..=3);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn nonneg_rational(&mut self) -> Rational {
        let num = self.rng.gen_range(0i64..=9);
        let den = self.rng.gen_range(1i64..=3);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn vector(&mut self, n: usize) -> LatticeVector<Rational> {
        LatticeVector::new((0..n).map(|_| self.rational()).collect()).expect("n ≥ 1")
    }

    pub fn nonneg_vector(&mut self, n: usize) -> LatticeVector<Rational> {
        LatticeVector::new((0..n).map(|_| self.nonneg_rational()).collect()).expect("n ≥ 1")
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Vec<Vec<Rational>> {
        (0..rows)
            .map(|_| (0..cols).map(|_| self.rational()).collect())
            .collect()
    }

    pub fn element(&mut self, alg: &Arc<BeurlingAlgebra<Rational>>) -> AlgebraElement<Rational> {
        let v = self.vector(alg.order());
        alg.element_from_vector(v).expect("matching dimension")
    }

    /// A pair with disjoint supports: the second element is zeroed wherever
    /// the first is nonzero.
    pub fn disjoint_pair(
        &mut self,
        alg: &Arc<BeurlingAlgebra<Rational>>,
    ) -> (AlgebraElement<Rational>, AlgebraElement<Rational>) {
        let x = self.element(alg);
        let y = self.element(alg);
        let masked: Vec<Rational> = x
            .coords()
            .iter()
            .zip(y.coords())
            .map(|(a, b)| {
                if num_traits::Zero::is_zero(a) {
                    b.clone()
                } else {
                    Rational::from_integer(BigInt::from(0))
                }
            })
            .collect();
        let y = alg.element(masked).expect("matching dimension");
        (x, y)
    }

    pub fn usize_in(&mut self, range: std::ops::RangeInclusive<usize>) -> usize {
        self.rng.gen_range(range)
    }
}

fn weight_descriptor(weight: &Weight<Rational>) -> String {
    if weight.is_trivial() {
        "ω≡1".to_string()
    } else {
        format!(
            "ω=[{}]",
            weight
                .values()
                .iter()
                .map(|v| v.to_report_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Compare `|π_x|` with `π_{|x|}` for each sample; pass iff they agree
/// exactly on all of them. Guaranteed to pass on cancellative tables.
pub fn verify_lattice_hom(
    alg: &Arc<BeurlingAlgebra<Rational>>,
    samples: &[AlgebraElement<Rational>],
) -> Verdict {
    let entry = alg.table().name().to_string();
    let instance = format!(
        "{}, {}, {} samples",
        entry,
        weight_descriptor(alg.weight()),
        samples.len()
    );
    for (i, x) in samples.iter().enumerate() {
        let lhs = left_regular_matrix(x).operator_modulus();
        let rhs = left_regular_matrix(&x.modulus());
        if lhs != rhs {
            let deviation = lhs.max_abs_deviation(&rhs).expect("same shape");
            let witness = Witness {
                inputs: vec![NamedVector::from_vector("x", x.vector())],
                lhs: ValueGrid::from_operator(&lhs),
                rhs: ValueGrid::from_operator(&rhs),
                max_deviation: deviation.to_report_string(),
            };
            return Verdict::fail(
                THEOREM_LATTICE_HOM,
                &entry,
                instance,
                CheckKind::Sampled,
                i + 1,
                witness,
            );
        }
    }
    Verdict::pass(
        THEOREM_LATTICE_HOM,
        &entry,
        instance,
        CheckKind::Sampled,
        samples.len(),
    )
}

/// Seeded-sample variant of [`verify_lattice_hom`]. With `mirror` set, the
/// check runs on the opposite table, which turns the left regular
/// representation into the right one.
pub fn verify_lattice_hom_sampled(
    table: &SemigroupTable,
    weight: &Weight<Rational>,
    trials: usize,
    seed: u64,
    mirror: bool,
) -> Result<Verdict, AlgebraError> {
    let table = if mirror { table.opposite() } else { table.clone() };
    let alg = BeurlingAlgebra::new(table, weight.clone())?;
    let mut sampler = RationalSampler::new(seed_for(seed, alg.table().name()));
    let samples: Vec<_> = (0..trials).map(|_| sampler.element(&alg)).collect();
    Ok(verify_lattice_hom(&alg, &samples))
}

/// Re-run the lattice-homomorphism comparison on a stored witness and
/// return the reproduced deviation.
pub fn replay_lattice_hom_deviation(
    table: &SemigroupTable,
    weight: &Weight<Rational>,
    witness: &Witness,
) -> Result<Rational, AlgebraError> {
    let alg = BeurlingAlgebra::new(table.clone(), weight.clone())?;
    let x_coords = witness
        .inputs
        .iter()
        .find(|v| v.name == "x")
        .expect("lattice homomorphism witnesses carry x");
    let coords: Vec<Rational> = x_coords
        .coords
        .iter()
        .map(|s| Rational::parse_exact(s).expect("witness coordinates are exact"))
        .collect();
    let x = alg.element(coords)?;
    let lhs = left_regular_matrix(&x).operator_modulus();
    let rhs = left_regular_matrix(&x.modulus());
    Ok(lhs.max_abs_deviation(&rhs).expect("same shape"))
}

/// Run the lattice-homomorphism check over a catalog with seeded samples and
/// return every failure. Tables are taken with the trivial weight.
pub fn search_counterexamples(
    catalog: &[SemigroupTable],
    trials: usize,
    seed: u64,
) -> Vec<Verdict> {
    let mut failures = Vec::new();
    for table in catalog {
        let alg = BeurlingAlgebra::<Rational>::unweighted(table.clone());
        let mut sampler = RationalSampler::new(seed_for(seed, table.name()));
        for i in 0..trials {
            let x = sampler.element(&alg);
            let verdict = verify_lattice_hom(&alg, std::slice::from_ref(&x));
            if !verdict.passed {
                let mut v = verdict;
                v.instance = format!("{}, ω≡1, sample {}", table.name(), i);
                failures.push(v);
            }
        }
    }
    sort_verdicts(&mut failures);
    failures
}

/// Support hypotheses: `supp(x⋆y) ⊆ supp(x)·supp(y)` on every sample pair,
/// and coordinate restrictions `χ_A·y` stay dominated by `y` and vanish off
/// `A`. The remaining hypotheses of the main theorem (density of finitely
/// supported elements, restriction stability) hold structurally in finite
/// dimension and are recorded as a note.
pub fn verify_support_hypotheses(
    alg: &Arc<BeurlingAlgebra<Rational>>,
    pairs: &[(AlgebraElement<Rational>, AlgebraElement<Rational>)],
) -> Verdict {
    let entry = alg.table().name().to_string();
    let instance = format!(
        "{}, {}, {} sample pairs",
        entry,
        weight_descriptor(alg.weight()),
        pairs.len()
    );
    let mut checked = 0usize;
    for (x, y) in pairs {
        checked += 1;
        let product = x.convolve(y).expect("same algebra");
        let bound = alg.table().product_set(&x.support(), &y.support());
        if !product.support().is_subset(&bound) {
            let witness = Witness {
                inputs: vec![
                    NamedVector::from_vector("x", x.vector()),
                    NamedVector::from_vector("y", y.vector()),
                ],
                lhs: ValueGrid::from_vector(product.vector()),
                rhs: ValueGrid {
                    rows: 1,
                    cols: bound.len(),
                    entries: bound.iter().map(|i| i.to_string()).collect(),
                },
                max_deviation: "support escape".to_string(),
            };
            return Verdict::fail(
                THEOREM_SUPPORT,
                &entry,
                instance,
                CheckKind::Sampled,
                checked,
                witness,
            );
        }
        // χ_A·y for every A ⊆ supp y: dominated by y, supported in A.
        let supp: Vec<usize> = y.support().into_iter().collect();
        for mask in 0u64..(1 << supp.len().min(12)) {
            let a: BTreeSet<usize> = supp
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &s)| s)
                .collect();
            let restricted: Vec<Rational> = y
                .coords()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    if a.contains(&i) {
                        v.clone()
                    } else {
                        Rational::from_integer(BigInt::from(0))
                    }
                })
                .collect();
            let chi_a_y = alg.element(restricted).expect("matching dimension");
            let dominated = chi_a_y
                .modulus()
                .vector()
                .leq(y.modulus().vector())
                .expect("same universe");
            if !dominated || !chi_a_y.support().is_subset(&a) {
                let witness = Witness {
                    inputs: vec![NamedVector::from_vector("y", y.vector())],
                    lhs: ValueGrid::from_vector(chi_a_y.vector()),
                    rhs: ValueGrid::from_vector(y.vector()),
                    max_deviation: "restriction escaped the order interval".to_string(),
                };
                return Verdict::fail(
                    THEOREM_SUPPORT,
                    &entry,
                    instance,
                    CheckKind::Sampled,
                    checked,
                    witness,
                );
            }
        }
    }
    let mut verdict = Verdict::pass(THEOREM_SUPPORT, &entry, instance, CheckKind::Sampled, checked);
    verdict.notes.push(
        "density and restriction hypotheses hold structurally in finite dimension".to_string(),
    );
    verdict
}

/// Additive modulus on disjoint elements: `|x+y| = |x|+|y|` for every sample
/// pair with disjoint supports; pairs violating the hypothesis are skipped.
pub fn verify_disjointness_lemma(
    pairs: &[(AlgebraElement<Rational>, AlgebraElement<Rational>)],
) -> Verdict {
    let entry = pairs
        .first()
        .map(|(x, _)| x.algebra().table().name().to_string())
        .unwrap_or_else(|| "-".to_string());
    let mut checked = 0usize;
    for (x, y) in pairs {
        let disjoint = x
            .vector()
            .are_disjoint(y.vector())
            .expect("same universe");
        if !disjoint {
            continue;
        }
        checked += 1;
        let lhs = x.plus(y).expect("same algebra").modulus();
        let rhs = x.modulus().plus(&y.modulus()).expect("same algebra");
        if lhs != rhs {
            let deviation = lhs
                .vector()
                .max_abs_deviation(rhs.vector())
                .expect("same universe");
            let witness = Witness {
                inputs: vec![
                    NamedVector::from_vector("x", x.vector()),
                    NamedVector::from_vector("y", y.vector()),
                ],
                lhs: ValueGrid::from_vector(lhs.vector()),
                rhs: ValueGrid::from_vector(rhs.vector()),
                max_deviation: deviation.to_report_string(),
            };
            return Verdict::fail(
                THEOREM_DISJOINTNESS,
                &entry,
                format!("{entry}, {} disjoint pairs", checked),
                CheckKind::Sampled,
                checked,
                witness,
            );
        }
    }
    Verdict::pass(
        THEOREM_DISJOINTNESS,
        &entry,
        format!("{entry}, {checked} disjoint pairs"),
        CheckKind::Sampled,
        checked,
    )
}

/// ℓᵖ action checks on a group: the modulus identity `|π_μ| = π_{|μ|}` on
/// action matrices (exact), the contraction `‖μ⋆g‖_p ≤ ‖μ‖₁‖g‖_p` within
/// `1e−9`, attainment on positive μ against the constant-one vector (exact
/// for p = 1), and injectivity of `s ↦ π_{δ_s}`.
pub fn verify_lp_action(
    table: &SemigroupTable,
    p_values: &[f64],
    trials: usize,
    seed: u64,
) -> Result<Verdict, LpError> {
    let entry = table.name().to_string();
    if !table.classify().is_group {
        return Err(LpError::NotAGroup { name: entry });
    }
    let alg = BeurlingAlgebra::<Rational>::unweighted(table.clone());
    let n = alg.order();
    let instance = format!("{entry}, p∈{p_values:?}, {trials} trials");
    let mut sampler = RationalSampler::new(seed_for(seed, &format!("lp:{entry}")));
    let mut checked = 0usize;

    // Injectivity on the delta basis (exhaustive).
    for s in 0..n {
        for t in (s + 1)..n {
            checked += 1;
            let ms = lp_action_matrix(&alg.delta(s))?;
            let mt = lp_action_matrix(&alg.delta(t))?;
            if ms == mt {
                let witness = Witness {
                    inputs: vec![
                        NamedVector::from_vector("δ_s", alg.delta(s).vector()),
                        NamedVector::from_vector("δ_t", alg.delta(t).vector()),
                    ],
                    lhs: ValueGrid::from_operator(&ms),
                    rhs: ValueGrid::from_operator(&mt),
                    max_deviation: "0".to_string(),
                };
                return Ok(Verdict::fail(
                    THEOREM_LP_ACTION,
                    &entry,
                    instance,
                    CheckKind::Exhaustive,
                    checked,
                    witness,
                ));
            }
        }
    }

    for _ in 0..trials {
        let mu = sampler.element(&alg);
        let g_vec = sampler.vector(n);

        // (a) modulus identity on the action matrix, exact.
        checked += 1;
        let lhs = lp_action_matrix(&mu)?.operator_modulus();
        let rhs = lp_action_matrix(&mu.modulus())?;
        if lhs != rhs {
            let witness = Witness {
                inputs: vec![NamedVector::from_vector("μ", mu.vector())],
                lhs: ValueGrid::from_operator(&lhs),
                rhs: ValueGrid::from_operator(&rhs),
                max_deviation: lhs
                    .max_abs_deviation(&rhs)
                    .expect("same shape")
                    .to_report_string(),
            };
            return Ok(Verdict::fail(
                THEOREM_LP_ACTION,
                &entry,
                instance,
                CheckKind::Sampled,
                checked,
                witness,
            ));
        }

        for &p in p_values {
            // (b) contraction within 1e−9.
            checked += 1;
            let g = LpElement::new(g_vec.clone(), p)?;
            let image = lp_action(&mu, &g)?;
            let norm_mu = mu.beurling_norm().to_f64().expect("fits f64");
            let bound = norm_mu * g.lp_norm();
            if image.lp_norm() > bound + 1e-9 {
                let witness = Witness {
                    inputs: vec![
                        NamedVector::from_vector("μ", mu.vector()),
                        NamedVector::from_vector("g", g.vector()),
                    ],
                    lhs: ValueGrid::from_scalar(&image.lp_norm()),
                    rhs: ValueGrid::from_scalar(&bound),
                    max_deviation: (image.lp_norm() - bound).to_report_string(),
                };
                return Ok(Verdict::fail(
                    THEOREM_LP_ACTION,
                    &entry,
                    instance,
                    CheckKind::Sampled,
                    checked,
                    witness,
                ));
            }

            // Attainment for positive μ against the constant-one vector.
            checked += 1;
            let mu_pos = mu.modulus();
            let one = LpElement::<Rational>::constant_one(n, p)?;
            let image = lp_action(&mu_pos, &one)?;
            let ok = if p == 1.0 {
                image.l1_norm_exact() == mu_pos.beurling_norm() * one.l1_norm_exact()
            } else {
                let lhs = image.lp_norm();
                let rhs = mu_pos.beurling_norm().to_f64().expect("fits f64") * one.lp_norm();
                (lhs - rhs).abs() <= 1e-9
            };
            if !ok {
                let witness = Witness {
                    inputs: vec![NamedVector::from_vector("|μ|", mu_pos.vector())],
                    lhs: ValueGrid::from_scalar(&image.lp_norm()),
                    rhs: ValueGrid::from_scalar(
                        &(mu_pos.beurling_norm().to_f64().expect("fits f64") * one.lp_norm()),
                    ),
                    max_deviation: "attainment gap".to_string(),
                };
                return Ok(Verdict::fail(
                    THEOREM_LP_ACTION,
                    &entry,
                    instance,
                    CheckKind::Sampled,
                    checked,
                    witness,
                ));
            }
        }
    }
    Ok(Verdict::pass(
        THEOREM_LP_ACTION,
        &entry,
        instance,
        CheckKind::Sampled,
        checked,
    ))
}

/// Zero-extension checks for a subsemigroup `S ⊆ G`: the extension commutes
/// with modulus, supremum, and convolution, preserves supports and the
/// Beurling norm, and its image is an order ideal (dominated elements vanish
/// off `S`).
pub fn verify_embedding(
    sub_table: &SemigroupTable,
    big: &Arc<BeurlingAlgebra<Rational>>,
    trials: usize,
    seed: u64,
) -> Result<Verdict, AlgebraError> {
    let map = sub_table.embedding_into(big.table())?;
    let sub_weight = big.weight().restricted(&map);
    let sub = BeurlingAlgebra::new(sub_table.clone(), sub_weight)?;
    let entry = big.table().name().to_string();
    let instance = format!(
        "{} ⊆ {}, {}, {} trials",
        sub_table.name(),
        entry,
        weight_descriptor(big.weight()),
        trials
    );
    let mut sampler =
        RationalSampler::new(seed_for(seed, &format!("embed:{}:{}", sub_table.name(), entry)));
    let mut checked = 0usize;
    let embedded: BTreeSet<usize> = map.iter().copied().collect();

    let fail = |checked: usize, x: &AlgebraElement<Rational>, lhs: &AlgebraElement<Rational>, rhs: &AlgebraElement<Rational>, what: &str| {
        let witness = Witness {
            inputs: vec![NamedVector::from_vector("x", x.vector())],
            lhs: ValueGrid::from_vector(lhs.vector()),
            rhs: ValueGrid::from_vector(rhs.vector()),
            max_deviation: format!(
                "{what}: {}",
                lhs.vector()
                    .max_abs_deviation(rhs.vector())
                    .expect("same universe")
                    .to_report_string()
            ),
        };
        Verdict::fail(
            THEOREM_EMBEDDING,
            &entry,
            instance.clone(),
            CheckKind::Sampled,
            checked,
            witness,
        )
    };

    for _ in 0..trials {
        let x = sampler.element(&sub);
        let y = sampler.element(&sub);
        let ext_x = x.zero_extend(big)?;
        let ext_y = y.zero_extend(big)?;

        checked += 1;
        let lhs = x.modulus().zero_extend(big)?;
        let rhs = ext_x.modulus();
        if lhs != rhs {
            return Ok(fail(checked, &x, &lhs, &rhs, "modulus"));
        }

        checked += 1;
        let lhs = x.sup(&y)?.zero_extend(big)?;
        let rhs = ext_x.sup(&ext_y)?;
        if lhs != rhs {
            return Ok(fail(checked, &x, &lhs, &rhs, "sup"));
        }

        checked += 1;
        let lhs = x.convolve(&y)?.zero_extend(big)?;
        let rhs = ext_x.convolve(&ext_y)?;
        if lhs != rhs {
            return Ok(fail(checked, &x, &lhs, &rhs, "convolution"));
        }

        // Supports map exactly through the embedding.
        checked += 1;
        let mapped: BTreeSet<usize> = x.support().iter().map(|&i| map[i]).collect();
        if ext_x.support() != mapped {
            return Ok(fail(checked, &x, &ext_x, &ext_x, "support"));
        }

        // Isometry of the embedding.
        checked += 1;
        if x.beurling_norm() != ext_x.beurling_norm() {
            return Ok(fail(checked, &x, &ext_x, &ext_x, "norm"));
        }

        // Order ideal: |u| ≤ |ext x| forces u to vanish off the image.
        checked += 1;
        let shrunk: Vec<Rational> = ext_x
            .coords()
            .iter()
            .map(|c| {
                let num = sampler.usize_in(0..=3) as i64;
                c.clone() * Rational::new(BigInt::from(num), BigInt::from(3))
                    * Rational::from_integer(BigInt::from(
                        if sampler.usize_in(0..=1) == 0 { 1 } else { -1 },
                    ))
            })
            .collect();
        let u = big.element(shrunk)?;
        let dominated = u
            .modulus()
            .vector()
            .leq(ext_x.modulus().vector())
            .expect("same universe");
        let vanishes = u.support().iter().all(|s| embedded.contains(s));
        if dominated && !vanishes {
            return Ok(fail(checked, &x, &u, &ext_x, "order ideal"));
        }
    }
    Ok(Verdict::pass(
        THEOREM_EMBEDDING,
        &entry,
        instance,
        CheckKind::Sampled,
        checked,
    ))
}

/// Finite-scale commutant check on a group: the solution space of
/// `Tρ_s = ρ_sT` has dimension `|G|`, every basis element is the matrix of a
/// left convolution, every basis element commutes with every `ρ_t`, and the
/// commutant is closed under products and entrywise modulus.
pub fn verify_commutant(table: &SemigroupTable, cutoff: usize) -> Result<Verdict, OperatorError> {
    let entry = table.name().to_string();
    let flags = table.classify();
    if !flags.is_group {
        return Err(OperatorError::NotAGroup { name: entry });
    }
    let n = table.order();
    let instance = format!("{entry}, |G|={n}");
    let basis: Vec<RegularOperator<Rational>> = commutant_basis(table, cutoff)?;
    let mut checked = 0usize;

    let dim_witness = |basis: &[RegularOperator<Rational>]| Witness {
        inputs: Vec::new(),
        lhs: ValueGrid::from_scalar(&Rational::from_integer(BigInt::from(basis.len() as i64))),
        rhs: ValueGrid::from_scalar(&Rational::from_integer(BigInt::from(n as i64))),
        max_deviation: format!("dimension {} ≠ {}", basis.len(), n),
    };
    checked += 1;
    if basis.len() != n {
        return Ok(Verdict::fail(
            THEOREM_COMMUTANT,
            &entry,
            instance,
            CheckKind::Exhaustive,
            checked,
            dim_witness(&basis),
        ));
    }

    let e = flags.identity.expect("groups have an identity");
    let rhos: Vec<RegularOperator<Rational>> = (0..n)
        .map(|t| right_translation_matrix(table, t).expect("group"))
        .collect();

    let in_commutant = |op: &RegularOperator<Rational>| {
        rhos.iter().all(|rho| {
            op.compose(rho).expect("square") == rho.compose(op).expect("square")
        })
    };

    let escape_witness = |op: &RegularOperator<Rational>, what: &str| Witness {
        inputs: Vec::new(),
        lhs: ValueGrid::from_operator(op),
        rhs: ValueGrid::from_operator(op),
        max_deviation: what.to_string(),
    };

    for b in &basis {
        // Commutation with every right translation, exactly.
        checked += 1;
        if !in_commutant(b) {
            return Ok(Verdict::fail(
                THEOREM_COMMUTANT,
                &entry,
                instance,
                CheckKind::Exhaustive,
                checked,
                escape_witness(b, "basis element escapes the commutant"),
            ));
        }

        // Wendel at finite scale: T = π_{Tδ_e}.
        checked += 1;
        let alg = BeurlingAlgebra::<Rational>::unweighted(table.clone());
        let x_coords = b
            .apply(alg.delta(e).vector())
            .expect("square matrix");
        let x = alg
            .element_from_vector(x_coords)
            .expect("matching dimension");
        if left_regular_matrix(&x) != *b {
            return Ok(Verdict::fail(
                THEOREM_COMMUTANT,
                &entry,
                instance,
                CheckKind::Exhaustive,
                checked,
                escape_witness(b, "basis element is not a left convolution"),
            ));
        }

        // Lattice-subalgebra closure: entrywise modulus stays inside.
        checked += 1;
        if !in_commutant(&b.operator_modulus()) {
            return Ok(Verdict::fail(
                THEOREM_COMMUTANT,
                &entry,
                instance,
                CheckKind::Exhaustive,
                checked,
                escape_witness(b, "modulus escapes the commutant"),
            ));
        }
    }

    // Closure under products.
    for a in &basis {
        for b in &basis {
            checked += 1;
            if !in_commutant(&a.compose(b).expect("square")) {
                return Ok(Verdict::fail(
                    THEOREM_COMMUTANT,
                    &entry,
                    instance,
                    CheckKind::Exhaustive,
                    checked,
                    escape_witness(a, "product escapes the commutant"),
                ));
            }
        }
    }

    Ok(Verdict::pass(
        THEOREM_COMMUTANT,
        &entry,
        instance,
        CheckKind::Exhaustive,
        checked,
    ))
}

/// Sweep of the Riesz–Kantorovich enumeration oracles against the entrywise
/// closed forms on random rational matrices.
pub fn rk_oracle_sweep(trials: usize, max_dim: usize, cutoff: usize, seed: u64) -> Verdict {
    let instance = format!("random matrices up to {max_dim}×{max_dim}, {trials} trials");
    let mut sampler = RationalSampler::new(seed_for(seed, "rk_sweep"));
    let mut checked = 0usize;
    for _ in 0..trials {
        let m = sampler.usize_in(1..=max_dim);
        let n = sampler.usize_in(1..=max_dim.min(cutoff));
        let s = RegularOperator::unweighted(sampler.matrix(m, n)).expect("non-empty");
        let t = RegularOperator::unweighted(sampler.matrix(m, n)).expect("non-empty");
        let x = sampler.nonneg_vector(n);

        checked += 3;
        let modulus_closed = t.operator_modulus().apply(&x).expect("matching dims");
        let modulus_oracle = t.rk_modulus_oracle(&x, cutoff).expect("within cutoff");
        let sup_closed = s
            .operator_sup(&t)
            .expect("same space")
            .apply(&x)
            .expect("matching dims");
        let sup_oracle = s.rk_sup_oracle(&t, &x, cutoff).expect("within cutoff");
        let inf_closed = s
            .operator_inf(&t)
            .expect("same space")
            .apply(&x)
            .expect("matching dims");
        let inf_oracle = s.rk_inf_oracle(&t, &x, cutoff).expect("within cutoff");

        for (name, closed, oracle) in [
            ("modulus", &modulus_closed, &modulus_oracle),
            ("sup", &sup_closed, &sup_oracle),
            ("inf", &inf_closed, &inf_oracle),
        ] {
            if closed != oracle {
                let witness = Witness {
                    inputs: vec![NamedVector::from_vector("x", &x)],
                    lhs: ValueGrid::from_vector(closed),
                    rhs: ValueGrid::from_vector(oracle),
                    max_deviation: format!(
                        "{name}: {}",
                        closed
                            .max_abs_deviation(oracle)
                            .expect("same universe")
                            .to_report_string()
                    ),
                };
                return Verdict::fail(
                    THEOREM_RK_ORACLES,
                    "-",
                    instance,
                    CheckKind::Sampled,
                    checked,
                    witness,
                );
            }
        }
    }
    Verdict::pass(THEOREM_RK_ORACLES, "-", instance, CheckKind::Sampled, checked)
}

/// Atomwise closed forms for `μ∨ν` and `|μ|` against brute-force subset and
/// partition suprema, for every subset `A` of random measures on point sets
/// of size up to `max_points`.
pub fn verify_measure_lattice(max_points: usize, trials: usize, seed: u64) -> Verdict {
    let instance = format!("point sets up to {max_points}, {trials} random measures");
    let mut sampler = RationalSampler::new(seed_for(seed, "measure_lattice"));
    let mut checked = 0usize;
    for trial in 0..trials {
        // Cycle point-set sizes so every |X| ≤ max_points is covered.
        let n = (trial % max_points) + 1;
        let mu =
            FiniteMeasure::from_atoms(sampler.vector(n).into_coords()).expect("non-empty");
        let nu =
            FiniteMeasure::from_atoms(sampler.vector(n).into_coords()).expect("non-empty");
        let sup = mu.measure_sup(&nu).expect("same points");
        let tv = mu.total_variation();
        for a in all_subsets(n) {
            checked += 2;
            let sup_closed = sup.evaluate(&a).expect("valid subset");
            let sup_oracle = mu.sup_oracle(&nu, &a).expect("valid subset");
            let tv_closed = tv.evaluate(&a).expect("valid subset");
            let tv_oracle = mu.total_variation_oracle(&a).expect("valid subset");
            if sup_closed != sup_oracle || tv_closed != tv_oracle {
                let witness = Witness {
                    inputs: vec![
                        NamedVector {
                            name: "μ".to_string(),
                            coords: mu.atoms().iter().map(|v| v.to_report_string()).collect(),
                        },
                        NamedVector {
                            name: "ν".to_string(),
                            coords: nu.atoms().iter().map(|v| v.to_report_string()).collect(),
                        },
                    ],
                    lhs: ValueGrid::from_scalar(&sup_closed),
                    rhs: ValueGrid::from_scalar(&sup_oracle),
                    max_deviation: format!("A={a:?}"),
                };
                return Verdict::fail(
                    THEOREM_MEASURE_LATTICE,
                    "-",
                    instance,
                    CheckKind::Sampled,
                    checked,
                    witness,
                );
            }
        }
    }
    Verdict::pass(
        THEOREM_MEASURE_LATTICE,
        "-",
        instance,
        CheckKind::Sampled,
        checked,
    )
}

/// Closed-form complex modulus against the θ-grid oracle at the given grid
/// size and tolerance.
pub fn verify_complex_modulus_grid(trials: usize, grid: usize, tol: f64, seed: u64) -> Verdict {
    let instance = format!("grid {grid}, tolerance {tol:e}, {trials} samples");
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(seed, "complex_grid"));
    let mut checked = 0usize;
    for _ in 0..trials {
        let n = rng.gen_range(1usize..=4);
        let coords = |rng: &mut ChaCha8Rng| {
            LatticeVector::new((0..n).map(|_| rng.gen_range(-9.0f64..9.0)).collect())
                .expect("n ≥ 1")
        };
        let z = crate::lattice::ComplexLatticeVector::new(coords(&mut rng), coords(&mut rng))
            .expect("same universe");
        let closed = z.complex_modulus();
        let oracle = z.complex_modulus_oracle(grid).expect("grid ≥ 4");
        checked += 1;
        let gap = closed
            .coords()
            .iter()
            .zip(oracle.coords())
            .map(|(c, o)| (c - o).abs())
            .fold(0.0f64, f64::max);
        let below = oracle
            .coords()
            .iter()
            .zip(closed.coords())
            .all(|(o, c)| *o <= c + 1e-12);
        if gap > tol || !below {
            let witness = Witness {
                inputs: vec![
                    NamedVector::from_vector("re", z.re()),
                    NamedVector::from_vector("im", z.im()),
                ],
                lhs: ValueGrid::from_vector(&closed),
                rhs: ValueGrid::from_vector(&oracle),
                max_deviation: gap.to_report_string(),
            };
            return Verdict::fail(
                THEOREM_COMPLEX_MODULUS,
                "-",
                instance,
                CheckKind::Sampled,
                checked,
                witness,
            );
        }
    }
    Verdict::pass(
        THEOREM_COMPLEX_MODULUS,
        "-",
        instance,
        CheckKind::Sampled,
        checked,
    )
}

/// Complexified submultiplicativity `|z₁⋆z₂| ≤ |z₁|⋆|z₂|` within `tol` on a
/// float instantiation of the algebra over `table`.
pub fn verify_complex_submultiplicativity(
    table: &SemigroupTable,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Verdict {
    let entry = table.name().to_string();
    let instance = format!("{entry}, tolerance {tol:e}, {trials} samples");
    let alg = BeurlingAlgebra::<f64>::unweighted(table.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(seed, &format!("complex_submult:{entry}")));
    let n = alg.order();
    let mut checked = 0usize;
    let sample = |rng: &mut ChaCha8Rng| {
        let coords: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0f64..3.0)).collect();
        alg.element(coords).expect("matching dimension")
    };
    for _ in 0..trials {
        checked += 1;
        let z1 = ComplexAlgebraElement::new(sample(&mut rng), sample(&mut rng))
            .expect("same algebra");
        let z2 = ComplexAlgebraElement::new(sample(&mut rng), sample(&mut rng))
            .expect("same algebra");
        let lhs = z1.convolve(&z2).expect("same algebra").complex_modulus();
        let mod1 = alg
            .element_from_vector(z1.complex_modulus())
            .expect("matching dimension");
        let mod2 = alg
            .element_from_vector(z2.complex_modulus())
            .expect("matching dimension");
        let rhs = mod1.convolve(&mod2).expect("same algebra");
        let violation = lhs
            .coords()
            .iter()
            .zip(rhs.coords())
            .map(|(l, r)| l - r)
            .fold(f64::NEG_INFINITY, f64::max);
        if violation > tol {
            let witness = Witness {
                inputs: vec![
                    NamedVector::from_vector("re z₁", z1.re().vector()),
                    NamedVector::from_vector("im z₁", z1.im().vector()),
                    NamedVector::from_vector("re z₂", z2.re().vector()),
                    NamedVector::from_vector("im z₂", z2.im().vector()),
                ],
                lhs: ValueGrid::from_vector(&lhs),
                rhs: ValueGrid::from_vector(rhs.vector()),
                max_deviation: violation.to_report_string(),
            };
            return Verdict::fail(
                THEOREM_COMPLEX_SUBMULT,
                &entry,
                instance,
                CheckKind::Sampled,
                checked,
                witness,
            );
        }
    }
    Verdict::pass(
        THEOREM_COMPLEX_SUBMULT,
        &entry,
        instance,
        CheckKind::Sampled,
        checked,
    )
}

/// Exact algebra inequalities on sampled pairs: the Riesz inequality
/// `|x⋆y| ≤ |x|⋆|y|`, Beurling submultiplicativity
/// `‖x⋆y‖_ω ≤ ‖x‖_ω‖y‖_ω`, and submultiplicativity of the regular norm on
/// the representation matrices.
pub fn verify_algebra_inequalities(
    alg: &Arc<BeurlingAlgebra<Rational>>,
    trials: usize,
    seed: u64,
) -> Verdict {
    let entry = alg.table().name().to_string();
    let instance = format!(
        "{entry}, {}, {trials} sample pairs",
        weight_descriptor(alg.weight())
    );
    let mut sampler = RationalSampler::new(seed_for(seed, &format!("ineq:{entry}")));
    let mut checked = 0usize;
    for _ in 0..trials {
        let x = sampler.element(alg);
        let y = sampler.element(alg);
        let product = x.convolve(&y).expect("same algebra");

        checked += 3;
        let riesz_ok = product
            .modulus()
            .vector()
            .leq(
                x.modulus()
                    .convolve(&y.modulus())
                    .expect("same algebra")
                    .vector(),
            )
            .expect("same universe");
        let beurling_ok = product.beurling_norm() <= x.beurling_norm() * y.beurling_norm();
        let pi_x = left_regular_matrix(&x);
        let pi_y = left_regular_matrix(&y);
        let regular_ok = pi_x.compose(&pi_y).expect("same weight").regular_norm()
            <= pi_x.regular_norm() * pi_y.regular_norm();

        if !riesz_ok || !beurling_ok || !regular_ok {
            let what = if !riesz_ok {
                "riesz"
            } else if !beurling_ok {
                "beurling"
            } else {
                "regular norm"
            };
            let witness = Witness {
                inputs: vec![
                    NamedVector::from_vector("x", x.vector()),
                    NamedVector::from_vector("y", y.vector()),
                ],
                lhs: ValueGrid::from_vector(product.vector()),
                rhs: ValueGrid::from_scalar(&product.beurling_norm()),
                max_deviation: what.to_string(),
            };
            return Verdict::fail(
                THEOREM_ALGEBRA_INEQ,
                &entry,
                instance,
                CheckKind::Sampled,
                checked,
                witness,
            );
        }
    }
    Verdict::pass(
        THEOREM_ALGEBRA_INEQ,
        &entry,
        instance,
        CheckKind::Sampled,
        checked,
    )
}

// ---------------------------------------------------------------------------
// Radicality probe on truncated ℤ⁺.

#[derive(Debug, thiserror::Error)]
pub enum RadicalityError {
    #[error("the probe needs log-weights for n = 0..=N with N ≥ 1")]
    TooShallow,
    #[error("weight is not submultiplicative on the truncation at ({m}, {n})")]
    NotSubmultiplicative { m: usize, n: usize },
}

/// Classification of a weight sequence probe. A finite probe can suggest but
/// never certify a limit, hence the `_CANDIDATE` naming.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RadicalityClass {
    #[serde(rename = "RADICAL_CANDIDATE")]
    RadicalCandidate,
    #[serde(rename = "SEMISIMPLE_CANDIDATE")]
    SemisimpleCandidate,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl std::fmt::Display for RadicalityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RadicalityClass::RadicalCandidate => "RADICAL_CANDIDATE",
            RadicalityClass::SemisimpleCandidate => "SEMISIMPLE_CANDIDATE",
            RadicalityClass::Inconclusive => "INCONCLUSIVE",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalityConfig {
    /// A strictly decreasing tail ending at or below this value is a radical
    /// candidate.
    pub radical_threshold: f64,
    /// Relative slack below which consecutive roots count as equal.
    pub flatness_tolerance: f64,
}

impl Default for RadicalityConfig {
    fn default() -> Self {
        RadicalityConfig {
            radical_threshold: 1e-3,
            flatness_tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalityReport {
    pub depth: usize,
    /// `ω(n)^{1/n}` for `n = 1..=depth`.
    pub roots: Vec<f64>,
    pub classification: RadicalityClass,
}

/// Probe `ω(n)^{1/n}` on the truncated additive semigroup `{0,…,N}`.
///
/// Weights are passed in log space (`log_weights[n] = ln ω(n)`) so that
/// rapidly decaying families like `ω(n) = exp(−n²)` stay representable far
/// past the underflow point of `f64`. Submultiplicativity is validated on
/// the truncation: `ln ω(m+n) ≤ ln ω(m) + ln ω(n)` whenever `m+n ≤ N`.
pub fn radicality_probe(
    log_weights: &[f64],
    config: &RadicalityConfig,
) -> Result<RadicalityReport, RadicalityError> {
    if log_weights.len() < 2 {
        return Err(RadicalityError::TooShallow);
    }
    let depth = log_weights.len() - 1;
    for m in 0..=depth {
        for n in 0..=(depth - m) {
            if log_weights[m + n] > log_weights[m] + log_weights[n] + 1e-9 {
                return Err(RadicalityError::NotSubmultiplicative { m, n });
            }
        }
    }
    let roots: Vec<f64> = (1..=depth)
        .map(|n| (log_weights[n] / n as f64).exp())
        .collect();

    // Tail = second half of the root sequence; a single point is not enough
    // to call a trend.
    let tail_start = roots.len().div_ceil(2) - 1;
    let tail = &roots[tail_start..];
    let classification = if tail.len() < 2 {
        RadicalityClass::Inconclusive
    } else {
        let strictly_decreasing = tail
            .windows(2)
            .all(|w| w[1] < w[0] * (1.0 - config.flatness_tolerance));
        let last = *roots.last().expect("depth ≥ 1");
        if strictly_decreasing && last <= config.radical_threshold {
            RadicalityClass::RadicalCandidate
        } else if !strictly_decreasing && last > config.radical_threshold {
            RadicalityClass::SemisimpleCandidate
        } else {
            RadicalityClass::Inconclusive
        }
    };
    Ok(RadicalityReport {
        depth,
        roots,
        classification,
    })
}

/// `ln ω(n) = −n²` for `n = 0..=depth` (a radical weight family).
pub fn exp_quadratic_log_weight(depth: usize) -> Vec<f64> {
    (0..=depth).map(|n| -((n * n) as f64)).collect()
}

/// `ω ≡ 1` in log space.
pub fn constant_log_weight(depth: usize) -> Vec<f64> {
    vec![0.0; depth + 1]
}

/// `ω(n) = rⁿ` in log space; submultiplicative with equality for any r > 0.
pub fn geometric_log_weight(r: f64, depth: usize) -> Vec<f64> {
    assert!(r > 0.0, "geometric ratio must be positive");
    (0..=depth).map(|n| n as f64 * r.ln()).collect()
}

// ---------------------------------------------------------------------------
// Suite orchestration.

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub enumeration_cutoff: usize,
    pub p_values: Vec<f64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            trials: 200,
            enumeration_cutoff: 12,
            p_values: vec![1.0, 2.0, 3.0],
        }
    }
}

/// Per-entry classification plus the verdicts of the full verifier run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub entries: Vec<EntrySummary>,
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntrySummary {
    pub name: String,
    pub order: usize,
    pub flags: StructureFlags,
}

/// Run every verifier over a catalog. Weights default to ω ≡ 1; a caller
/// can supply one exact weight per entry (same order as the catalog).
pub fn run_suite(
    catalog: &[SemigroupTable],
    weights: Option<&[Weight<Rational>]>,
    cfg: &SuiteConfig,
) -> Result<SuiteOutcome, AlgebraError> {
    let mut entries = Vec::new();
    let mut verdicts = Vec::new();

    for (ix, table) in catalog.iter().enumerate() {
        let flags = table.classify();
        entries.push(EntrySummary {
            name: table.name().to_string(),
            order: table.order(),
            flags: flags.clone(),
        });
        let weight = match weights {
            Some(ws) => ws[ix].clone(),
            None => Weight::ones(table.order()),
        };
        let alg = BeurlingAlgebra::new(table.clone(), weight.clone())?;
        let mut sampler = RationalSampler::new(seed_for(cfg.seed, table.name()));

        let samples: Vec<_> = (0..cfg.trials).map(|_| sampler.element(&alg)).collect();
        verdicts.push(verify_lattice_hom(&alg, &samples));
        verdicts.push(verify_lattice_hom_sampled(
            table, &weight, cfg.trials, cfg.seed, true,
        )?);

        let pairs: Vec<_> = (0..cfg.trials.div_ceil(4))
            .map(|_| (sampler.element(&alg), sampler.element(&alg)))
            .collect();
        verdicts.push(verify_support_hypotheses(&alg, &pairs));

        let disjoint: Vec<_> = (0..cfg.trials)
            .map(|_| sampler.disjoint_pair(&alg))
            .collect();
        verdicts.push(verify_disjointness_lemma(&disjoint));

        verdicts.push(verify_algebra_inequalities(&alg, cfg.trials, cfg.seed));
        verdicts.push(verify_complex_submultiplicativity(
            table,
            cfg.trials.min(200),
            1e-12,
            cfg.seed,
        ));

        // Subsemigroup enumeration is exponential in the order; skip it for
        // tables beyond the enumeration cutoff rather than sampling subsets.
        if table.order() <= cfg.enumeration_cutoff {
            for sub in table.subsemigroups() {
                verdicts.push(verify_embedding(
                    &sub,
                    &alg,
                    cfg.trials.div_ceil(4).max(4),
                    cfg.seed,
                )?);
            }
        }

        if flags.is_group && table.order() <= cfg.enumeration_cutoff {
            verdicts.push(
                verify_commutant(table, cfg.enumeration_cutoff)
                    .expect("group within cutoff"),
            );
            verdicts.push(
                verify_lp_action(table, &cfg.p_values, cfg.trials.min(100), cfg.seed)
                    .expect("group"),
            );
        }
    }

    verdicts.push(rk_oracle_sweep(
        cfg.trials.max(100),
        10,
        cfg.enumeration_cutoff,
        cfg.seed,
    ));
    verdicts.push(verify_measure_lattice(8, cfg.trials.min(100), cfg.seed));
    verdicts.push(verify_complex_modulus_grid(
        cfg.trials.min(50),
        100_000,
        1e-6,
        cfg.seed,
    ));

    sort_verdicts(&mut verdicts);
    Ok(SuiteOutcome { entries, verdicts })
}

/// Exit policy: a failed verdict is expected only for the
/// lattice-homomorphism theorem on a table that is verifiably
/// non-cancellative; any other failure is unexpected. Cancellativity is
/// recomputed from the catalog rather than trusted from flags.
pub fn unexpected_failures<'a>(
    verdicts: &'a [Verdict],
    catalog: &[SemigroupTable],
) -> Vec<&'a Verdict> {
    verdicts
        .iter()
        .filter(|v| !v.passed)
        .filter(|v| {
            if v.theorem_id != THEOREM_LATTICE_HOM {
                return true;
            }
            // Mirror runs are tagged with the opposite table's name;
            // cancellativity is the same for a table and its opposite.
            let table = catalog
                .iter()
                .find(|t| t.name() == v.entry)
                .or_else(|| {
                    v.entry
                        .strip_suffix("_op")
                        .and_then(|base| catalog.iter().find(|t| t.name() == base))
                });
            match table {
                Some(table) => table.classify().is_cancellative,
                None => true,
            }
        })
        .collect()
}
