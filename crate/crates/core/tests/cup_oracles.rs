mod common;

use common::{naive_cup, random_cochain, random_complex, s, solid};
use cupsq::cup::{cup_cochain_by_evaluation, cup_eval_bounded, cup_eval_oracle, cup_product, CupPlan};
use cupsq::{Cochain, Ring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rings() -> Vec<Ring> {
    vec![Ring::Integers, Ring::Z2, Ring::integers_mod(7).unwrap()]
}

#[test]
fn evaluators_match_the_face_operator_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let k = solid(6);
    for p in 0..=3 {
        for q in 0..=3 {
            for n in 0..=p.min(q) {
                let m = p + q - n;
                if m > 6 {
                    continue;
                }
                let c = random_cochain(&mut rng, &k, p, Ring::Integers);
                let cp = random_cochain(&mut rng, &k, q, Ring::Integers);
                for x in k.simplices_of_dim(m).into_iter().take(12) {
                    let want = Ring::Integers.element(naive_cup(&c, &cp, &x, n));
                    assert_eq!(cup_eval_oracle(&c, &cp, &x, n).unwrap(), want, "oracle p={p} q={q} n={n} x={x}");
                    assert_eq!(cup_eval_bounded(&c, &cp, &x, n).unwrap(), want, "bounded p={p} q={q} n={n} x={x}");
                }
            }
        }
    }
}

#[test]
fn bounded_equals_oracle_on_random_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..15 {
        let k = random_complex(&mut rng, 6);
        let top = k.dim().unwrap();
        for ring in rings() {
            for p in 0..=3 {
                for q in 0..=3 {
                    for n in 0..=p.min(q) {
                        let m = p + q - n;
                        if m > top {
                            continue;
                        }
                        let c = random_cochain(&mut rng, &k, p, ring);
                        let cp = random_cochain(&mut rng, &k, q, ring);
                        for x in k.simplices_of_dim(m) {
                            assert_eq!(
                                cup_eval_bounded(&c, &cp, &x, n).unwrap(),
                                cup_eval_oracle(&c, &cp, &x, n).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn support_pairing_equals_simplexwise_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..15 {
        let k = random_complex(&mut rng, 6);
        let top = k.dim().unwrap();
        for ring in rings() {
            for p in 0..=3 {
                for q in 0..=3 {
                    for n in 0..=p.min(q) {
                        if p + q - n > top {
                            continue;
                        }
                        let c = random_cochain(&mut rng, &k, p, ring);
                        let cp = random_cochain(&mut rng, &k, q, ring);
                        let by_pairs = cup_product(&c, &cp, n, &k).unwrap();
                        let by_eval = cup_cochain_by_evaluation(&c, &cp, n, &k).unwrap();
                        assert_eq!(by_pairs, by_eval.to_formal_sum(), "p={p} q={q} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn any_partition_of_the_pairs_gives_the_same_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let k = solid(5);
    for ring in rings() {
        let c = random_cochain(&mut rng, &k, 2, ring);
        let cp = random_cochain(&mut rng, &k, 2, ring);
        let plan = CupPlan::new(&c, &cp, 1, &k).unwrap();
        let whole = cup_product(&c, &cp, 1, &k).unwrap();
        assert!(!whole.is_empty());
        for parts in [2, 3, 5, 8] {
            let chunk = plan.len().div_ceil(parts).max(1);
            let mut sum = cupsq::FormalSum::new(ring);
            for start in (0..plan.len()).step_by(chunk) {
                sum.add_assign(&plan.part(start..(start + chunk).min(plan.len()))).unwrap();
            }
            assert_eq!(sum, whole);
        }
    }
}

#[test]
fn cup_one_matches_the_two_index_display() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for p in 1..=4usize {
        for q in 1..=4usize {
            let m = p + q - 1;
            let k = solid(m as i64);
            let x = k.maximal()[0].clone();
            for _ in 0..5 {
                let c = random_cochain(&mut rng, &k, p, Ring::Integers);
                let cp = random_cochain(&mut rng, &k, q, Ring::Integers);
                let v = x.vertices();
                let mut want = num_bigint::BigInt::from(0);
                for j in 0..p {
                    let mut front: Vec<i64> = v[..=j].to_vec();
                    front.extend_from_slice(&v[j + q..]);
                    let middle = v[j..=j + q].to_vec();
                    let term = c.evaluate(&s(&front)).value() * cp.evaluate(&s(&middle)).value();
                    if (j + (p - 1 + j) * q) % 2 == 0 {
                        want += term;
                    } else {
                        want -= term;
                    }
                }
                assert_eq!(cup_eval_bounded(&c, &cp, &x, 1).unwrap(), Ring::Integers.element(want));
            }
        }
    }
}

#[test]
fn cup_zero_on_a_triangle_is_front_times_back() {
    let k = solid(2);
    let c = Cochain::new(1, Ring::Integers, [(s(&[0, 1]), 2), (s(&[0, 2]), 5)]).unwrap();
    let cp = Cochain::new(1, Ring::Integers, [(s(&[1, 2]), 3), (s(&[0, 1]), 1)]).unwrap();
    let prod = cup_product(&c, &cp, 0, &k).unwrap();
    assert_eq!(prod.coefficient(&s(&[0, 1, 2])), Ring::Integers.element(6));
}
