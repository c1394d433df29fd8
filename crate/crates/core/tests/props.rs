//! Property suites: exactness of the rational arithmetic, serialization
//! round-trips, and randomized cross-checks against the brute-force oracles.

mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use minsol::decompose::{decompose, membership, trace, Membership};
use minsol::graver::{graver_basis, negated};
use minsol::hilbert::hilbert_basis;
use minsol::{Instance, Rational, Solution};

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

proptest! {
    // No failure-persistence files in integration-test targets.
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rational_arithmetic_is_exact(
        pn in -200i64..200, pd in 1i64..60,
        qn in -200i64..200, qd in 1i64..60,
        rn in -200i64..200, rd in 1i64..60,
    ) {
        let p = rational(pn, pd);
        let q = rational(qn, qd);
        let r = rational(rn, rd);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        // Normalization is idempotent: the textual form parses back exactly.
        let reparsed: Rational = p.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn instance_json_round_trip(
        a in proptest::collection::vec(1i64..=50, 1..4),
        b in proptest::collection::vec(1i64..=50, 1..4),
    ) {
        let inst = Instance::from_ints(&a, &b).unwrap();
        let text = serde_json::to_string(&inst).unwrap();
        let back: Instance = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, inst);
    }

    #[test]
    fn zero_norm_iff_empty_support(
        entries in proptest::collection::vec(0i64..4, 2..5),
    ) {
        let n = 1;
        let coeffs = vec![1i64; entries.len()];
        let inst = Instance::from_ints(&vec![1; n], &coeffs).unwrap();
        // Build a valid pair by matching the left side to the right sum.
        let total: i64 = entries.iter().sum();
        let s = inst.solution_from_ints(&[total], &entries).unwrap();
        prop_assert_eq!(s.norm_y() == BigInt::from(0), s.support_y().is_empty());
        prop_assert_eq!(s.norm_x() == BigInt::from(0), s.support_x().is_empty());
    }
}

fn random_instances(count: usize, max_side: usize, max_coeff: i64, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_side);
            let m = rng.gen_range(1..=max_side);
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max_coeff)).collect();
            let b: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=max_coeff)).collect();
            Instance::from_ints(&a, &b).unwrap()
        })
        .collect()
}

#[test]
fn graver_matches_brute_force_on_random_rows() {
    let check = |alpha: &[i64]| {
        let basis = graver_basis(&common::ints(alpha)).unwrap();
        let oracle: Vec<Vec<BigInt>> = common::oracle_graver(alpha)
            .iter()
            .map(|v| common::ints(v))
            .collect();
        assert_eq!(basis.elements, oracle, "mismatch for alpha = {alpha:?}");
        for v in &basis.elements {
            assert!(
                basis.elements.contains(&negated(v)),
                "negation missing for {v:?}"
            );
        }
    };
    // Exhaustive for one and two coordinates.
    for a0 in -8i64..=8 {
        check(&[a0]);
        for a1 in -8i64..=8 {
            check(&[a0, a1]);
        }
    }
    // Seeded sample for three and four coordinates.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..120 {
        let k = rng.gen_range(3..=4);
        let alpha: Vec<i64> = (0..k).map(|_| rng.gen_range(-8..=8)).collect();
        check(&alpha);
    }
}

/// Sampled version of the oracle-equivalence property on the wider corpus
/// (coefficients up to 12, up to six coordinates in total); the exhaustive
/// sweep lives in the acceptance suite at its stated desk-scale limits.
#[test]
fn hilbert_matches_oracle_on_larger_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..800 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=(6 - n).min(5));
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=12)).collect();
        let b: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=12)).collect();
        let inst = Instance::from_ints(&a, &b).unwrap();
        let basis = hilbert_basis(&inst).unwrap();
        let pairs: Vec<(Vec<i64>, Vec<i64>)> = basis.iter().map(common::to_pair).collect();
        assert_eq!(
            pairs,
            common::oracle_hilbert(&a, &b),
            "mismatch for a={a:?} b={b:?}"
        );
    }
}

#[test]
fn extreme_points_match_on_random_coprime_instances() {
    use minsol::fundamental::extreme_points_check;
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let mut checked = 0;
    while checked < 8 {
        let n = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=2);
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=6)).collect();
        let b: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=6)).collect();
        let inst = Instance::from_ints(&a, &b).unwrap();
        match extreme_points_check(&inst) {
            Ok(report) => {
                assert!(
                    report.matches,
                    "extreme points differ from prediction for a={a:?} b={b:?}"
                );
                checked += 1;
            }
            Err(minsol::Error::NotCoprime { .. }) => continue,
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
}

#[test]
fn basis_elements_lie_in_the_generator_hull() {
    for inst in random_instances(40, 3, 10, 11) {
        let generators: Vec<Solution> = inst
            .generators()
            .iter()
            .map(|g| g.vector().clone())
            .collect();
        for s in hilbert_basis(&inst).unwrap() {
            let result = membership(&inst, &s, &generators).unwrap();
            assert!(
                matches!(result, Membership::Feasible { .. }),
                "basis element {s} outside the generator hull"
            );
        }
    }
}

#[test]
fn trace_levels_shrink_by_exactly_one_term() {
    for inst in random_instances(25, 3, 9, 23) {
        for s in hilbert_basis(&inst).unwrap() {
            let tr = trace(&inst, &s).unwrap();
            let terms: Vec<usize> = tr
                .levels
                .iter()
                .map(|l| {
                    let rows = (0..l.lambdas.len())
                        .filter(|&i| l.lambdas[i].iter().any(|v| !v.is_zero()))
                        .count();
                    let cols = (0..l.lambdas[0].len())
                        .filter(|&j| l.lambdas.iter().any(|row| !row[j].is_zero()))
                        .count();
                    rows + cols
                })
                .collect();
            for pair in terms.windows(2) {
                assert_eq!(
                    pair[0],
                    pair[1] + 1,
                    "terms must drop by one per level in {s}"
                );
            }
            let (base, reductions) = tr.levels.split_last().unwrap();
            assert!(base.record.is_base());
            for level in reductions {
                assert!(!level.record.is_base());
                assert!(level.record.replaced_value() > BigInt::from(0));
            }
        }
    }
}

#[test]
fn certificates_and_traces_round_trip_through_json() {
    for inst in random_instances(10, 3, 8, 37) {
        for s in hilbert_basis(&inst).unwrap().into_iter().take(4) {
            let cert = decompose(&inst, &s).unwrap();
            let back: minsol::decompose::ConvexCertificate =
                serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
            assert_eq!(back, cert);
            back.verify(&inst, &s).unwrap();

            let tr = trace(&inst, &s).unwrap();
            let back: minsol::decompose::Trace =
                serde_json::from_str(&serde_json::to_string(&tr).unwrap()).unwrap();
            assert_eq!(back, tr);

            let sol_back: Solution =
                serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
            assert_eq!(sol_back, s);
        }
    }
}
