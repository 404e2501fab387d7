//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime. Exact checks use rational arithmetic with zero
//! tolerance; float checks carry their stated tolerances.

use latalg::algebra::BeurlingAlgebra;
use latalg::scalar::ratio;
use latalg::semigroup::{builtin_catalog, cyclic_group, null_semigroup};
use latalg::verify::{
    constant_log_weight, exp_quadratic_log_weight, radicality_probe,
    replay_lattice_hom_deviation, rk_oracle_sweep, verify_algebra_inequalities,
    verify_commutant, verify_complex_modulus_grid, verify_complex_submultiplicativity,
    verify_disjointness_lemma, verify_embedding, verify_lattice_hom,
    verify_lattice_hom_sampled, verify_lp_action, verify_measure_lattice, RadicalityClass,
    RadicalityConfig, RationalSampler,
};
use latalg::weight::Weight;
use latalg::Rational;
use std::time::{Duration, Instant};

const SEED: u64 = 20240601;

fn conclude(criterion: &str, started: Instant, budget: Duration, passed: bool) {
    let elapsed = started.elapsed();
    let status = if passed && elapsed <= budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "[{status}] {criterion} ({:.2}s, budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(passed, "{criterion}: check failed");
    assert!(
        elapsed <= budget,
        "{criterion}: runtime {elapsed:?} exceeded budget {budget:?}"
    );
}

#[test]
fn criterion_01_lattice_homomorphism_on_cancellative_tables() {
    let started = Instant::now();
    let catalog = builtin_catalog(6);
    let cancellative: Vec<_> = catalog
        .iter()
        .filter(|t| t.classify().is_cancellative)
        .collect();
    // Z1..Z6, V4, S3: every group of order ≤ 6 up to isomorphism. At finite
    // order, cancellative tables are exactly the groups.
    assert_eq!(cancellative.len(), 8);
    let mut all = true;
    for table in cancellative {
        let verdict =
            verify_lattice_hom_sampled(table, &Weight::ones(table.order()), 200, SEED, false)
                .unwrap();
        all &= verdict.passed && verdict.checked == 200;
    }
    conclude(
        "criterion 1: |π_x| = π_{|x|} exactly on all cancellative tables of order ≤ 6 (200 samples each)",
        started,
        Duration::from_secs(30),
        all,
    );
}

#[test]
fn criterion_02_null_semigroup_counterexample_replays() {
    let started = Instant::now();
    let table = null_semigroup(2);
    let alg = BeurlingAlgebra::<Rational>::unweighted(table.clone());
    // x = δ_a − δ_z.
    let x = alg.element(vec![ratio(-1, 1), ratio(1, 1)]).unwrap();
    let verdict = verify_lattice_hom(&alg, &[x]);
    let mut ok = !verdict.passed;
    let witness = verdict.witness.expect("failure carries a witness");
    ok &= witness.max_deviation == "2";
    let replayed = replay_lattice_hom_deviation(&table, &Weight::ones(2), &witness).unwrap();
    ok &= replayed == ratio(2, 1);
    conclude(
        "criterion 2: order-2 null semigroup fails with deviation exactly 2 and the witness replays",
        started,
        Duration::from_secs(1),
        ok,
    );
}

#[test]
fn criterion_03_riesz_kantorovich_oracle_equivalence() {
    let started = Instant::now();
    let verdict = rk_oracle_sweep(500, 10, 12, SEED);
    // Each trial compares the modulus, sup, and inf closed forms against
    // their enumeration oracles.
    let ok = verdict.passed && verdict.checked >= 1500;
    conclude(
        "criterion 3: sign-enumeration and binary-split oracles match entrywise closed forms on 500 random matrices (n ≤ 10), exactly",
        started,
        Duration::from_secs(60),
        ok,
    );
}

#[test]
fn criterion_04_measure_lattice_formulas() {
    let started = Instant::now();
    // 104 measures cycling |X| = 1..8, every subset A of each X.
    let verdict = verify_measure_lattice(8, 104, SEED);
    conclude(
        "criterion 4: subset/partition suprema equal atomwise closed forms for |X| ≤ 8, 104 random measures, every A ⊆ X, exactly",
        started,
        Duration::from_secs(60),
        verdict.passed,
    );
}

#[test]
fn criterion_05_disjointness_lemma() {
    let started = Instant::now();
    let alg = BeurlingAlgebra::<Rational>::unweighted(cyclic_group(8));
    let mut sampler = RationalSampler::new(SEED);
    let pairs: Vec<_> = (0..500).map(|_| sampler.disjoint_pair(&alg)).collect();
    let verdict = verify_disjointness_lemma(&pairs);
    let ok = verdict.passed && verdict.checked == 500;
    conclude(
        "criterion 5: |x+y| = |x|+|y| exactly on 500 seeded disjoint-support pairs",
        started,
        Duration::from_secs(60),
        ok,
    );
}

#[test]
fn criterion_06_algebra_inequalities() {
    let started = Instant::now();
    let catalog = builtin_catalog(6);
    let mut ok = true;
    let mut pairs = 0usize;
    for table in &catalog {
        let alg = BeurlingAlgebra::<Rational>::unweighted(table.clone());
        let verdict = verify_algebra_inequalities(&alg, 35, SEED);
        ok &= verdict.passed;
        pairs += verdict.checked / 3;
    }
    // A genuinely weighted algebra as well.
    let weighted = BeurlingAlgebra::new(
        cyclic_group(2),
        Weight::new(vec![ratio(1, 1), ratio(4, 1)]).unwrap(),
    )
    .unwrap();
    let verdict = verify_algebra_inequalities(&weighted, 35, SEED);
    ok &= verdict.passed;
    pairs += verdict.checked / 3;
    ok &= pairs >= 500;
    conclude(
        "criterion 6: Riesz inequality, Beurling submultiplicativity, and regular-norm submultiplicativity, exactly, on ≥ 500 samples",
        started,
        Duration::from_secs(60),
        ok,
    );
}

#[test]
fn criterion_07_complexified_modulus_and_submultiplicativity() {
    let started = Instant::now();
    let grid = verify_complex_modulus_grid(50, 100_000, 1e-6, SEED);
    let mut ok = grid.passed;
    let mut samples = 0usize;
    for name in ["S3", "Z6", "null_4"] {
        let table = builtin_catalog(6)
            .into_iter()
            .find(|t| t.name() == name)
            .unwrap();
        let verdict = verify_complex_submultiplicativity(&table, 70, 1e-12, SEED);
        ok &= verdict.passed;
        samples += verdict.checked;
    }
    ok &= samples >= 200;
    conclude(
        "criterion 7: closed-form complex modulus within 1e-6 of the 10^5-point grid oracle; |z₁⋆z₂| ≤ |z₁|⋆|z₂| within 1e-12 on 210 float samples",
        started,
        Duration::from_secs(60),
        ok,
    );
}

#[test]
fn criterion_08_lp_action_on_groups() {
    let started = Instant::now();
    let mut ok = true;
    for table in builtin_catalog(6) {
        if !table.classify().is_group {
            continue;
        }
        // Covers the exact p=1 modulus identity, the contraction within
        // 1e-9 for p ∈ {1,2,3}, and attainment on positive μ against the
        // constant-one vector (exact at p=1, 1e-9 otherwise).
        let verdict = verify_lp_action(&table, &[1.0, 2.0, 3.0], 100, SEED).unwrap();
        ok &= verdict.passed;
    }
    conclude(
        "criterion 8: ℓᵖ contraction within 1e-9 for p ∈ {1,2,3} on all groups of order ≤ 6, with exact attainment and exact modulus identity",
        started,
        Duration::from_secs(60),
        ok,
    );
}

#[test]
fn criterion_09_finite_wendel_commutant() {
    let started = Instant::now();
    let mut ok = true;
    let mut groups = 0usize;
    for table in builtin_catalog(6) {
        if !table.classify().is_group {
            continue;
        }
        groups += 1;
        let verdict = verify_commutant(&table, 12).unwrap();
        ok &= verdict.passed;
    }
    ok &= groups == 8;
    conclude(
        "criterion 9: commutant of right translations has dimension |G|, consists of left convolutions, and is closed under products and modulus, for every group of order ≤ 6",
        started,
        Duration::from_secs(10),
        ok,
    );
}

#[test]
fn criterion_10_radicality_probe_classifications() {
    let started = Instant::now();
    let config = RadicalityConfig::default();
    let report = radicality_probe(&exp_quadratic_log_weight(30), &config).unwrap();
    let mut ok = report.classification == RadicalityClass::RadicalCandidate;
    for (i, r) in report.roots.iter().enumerate() {
        let n = (i + 1) as f64;
        ok &= (r - (-n).exp()).abs() <= 1e-12;
    }
    let constant = radicality_probe(&constant_log_weight(30), &config).unwrap();
    ok &= constant.classification == RadicalityClass::SemisimpleCandidate;
    conclude(
        "criterion 10: ω(n)=exp(-n²) at depth 30 is RADICAL_CANDIDATE with roots exp(-n) within 1e-12; ω≡1 is SEMISIMPLE_CANDIDATE",
        started,
        Duration::from_secs(10),
        ok,
    );
}

#[test]
fn criterion_11_zero_extension_embedding() {
    let started = Instant::now();
    let mut ok = true;
    let mut samples = 0usize;
    for table in builtin_catalog(6) {
        let big = BeurlingAlgebra::<Rational>::unweighted(table.clone());
        for sub in table.subsemigroups() {
            let verdict = verify_embedding(&sub, &big, 4, SEED).unwrap();
            ok &= verdict.passed;
            samples += 4;
        }
    }
    ok &= samples >= 100;
    conclude(
        "criterion 11: zero-extension commutes with modulus/sup/convolution and preserves supports, exactly, on ≥ 100 samples over subsemigroup pairs",
        started,
        Duration::from_secs(60),
        ok,
    );
}
