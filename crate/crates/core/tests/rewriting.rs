use std::cmp::Ordering;

use ncrewrite::word::w;
use ncrewrite::{
    minsky_utm, Construction, Polynomial, Presentation, Reduct, Strategy as Sweep, DEFAULT_BUDGET,
};
use proptest::prelude::*;

fn nilp() -> Presentation {
    Construction::Nilpotency.presentation(&minsky_utm())
}

fn zd() -> Presentation {
    Construction::ZeroDivisor.presentation(&minsky_utm())
}

fn nf(p: &Presentation, text: &str) -> Reduct {
    p.normalize_word(&w(text), DEFAULT_BUDGET).unwrap().0
}

#[test]
fn head_moves_left_and_clock_exits_right() {
    assert_eq!(nf(&nilp(), "t R a1 Q2 P3 a0 R"), Reduct::Word(w("R Q4 P1 a1 a0 R t")));
}

#[test]
fn zero_divisor_right_move_emits_s() {
    assert_eq!(nf(&zd(), "t L Q0 P2 a1 R"), Reduct::Word(w("L a0 Q0 P1 R s")));
}

#[test]
fn single_reductions() {
    let p = nilp();
    let once = |text: &str| p.reduce_once(&w(text)).unwrap().map(|r| r.result);
    assert_eq!(once("R a0 Q4 P3 a1 R"), Some(Reduct::Zero));
    assert_eq!(once("R a0 a1 R"), None);
    assert_eq!(once("t R a1 Q2 P3 a0 R"), Some(Reduct::Word(w("R t a1 Q2 P3 a0 R"))));
}

#[test]
fn clock_passes_through_a_bare_tape() {
    let p = nilp();
    let b = DEFAULT_BUDGET;
    let x = Polynomial::from(w("t a1 a2 R"));
    assert!(p.equal_in_algebra(&x, &Polynomial::from(w("a1 a2 R t")), b).unwrap());
    assert!(p.equal_in_algebra(&x, &x, b).unwrap());
    let (r0, r1) = (Polynomial::from(w("R a0 R")), Polynomial::from(w("R a1 R")));
    assert!(!p.equal_in_algebra(&r0, &r1, b).unwrap());
}

#[test]
fn powers() {
    let p = nilp();
    let b = DEFAULT_BUDGET;
    assert!(p.power_normalize(&w("R a0 Q4 P3 R"), 1, b).unwrap().poly.is_zero());
    assert_eq!(
        p.power_normalize(&w("a0"), 3, b).unwrap().poly,
        Polynomial::from(w("a0 a0 a0"))
    );
    assert!(p.power_normalize(&w("t R a3 Q2 P3 R"), 1, b).unwrap().poly.is_zero());
    assert!(p.power_normalize(&w("a0"), 0, b).is_err());
}

#[test]
fn zero_polynomial_takes_no_steps() {
    let out = nilp().normalize(&Polynomial::zero(), 10).unwrap();
    assert!(out.poly.is_zero());
    assert_eq!(out.steps, 0);
}

#[test]
fn exhausted_budget_reports_partial_result() {
    let err = nilp().normalize(&Polynomial::from(w("t R a1 Q2 P3 a0 R")), 1);
    match err {
        Err(ncrewrite::Error::BudgetExhausted { budget, partial, .. }) => {
            assert_eq!(budget, 1);
            assert!(!partial.is_zero());
        }
        other => panic!("expected budget exhaustion, got {other:?}"),
    }
}

fn sampled(construction: Construction) -> impl Strategy<Value = ncrewrite::Word> {
    (any::<u64>(), 1usize..24).prop_map(move |(seed, len)| {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        ncrewrite::harness::sample_word(&mut rng, &minsky_utm(), construction, len)
    })
}

fn check_descent(p: &Presentation, word: &ncrewrite::Word) -> Result<(), TestCaseError> {
    let mut current = word.clone();
    for _ in 0..10_000 {
        match p.reduce_once(&current).unwrap() {
            None => return Ok(()),
            Some(step) => match step.result {
                Reduct::Zero => return Ok(()),
                Reduct::Word(next) => {
                    prop_assert_eq!(
                        p.order().compare(&current, &next).unwrap(),
                        Ordering::Greater
                    );
                    current = next;
                }
            },
        }
    }
    Err(TestCaseError::fail("no normal form within 10000 steps"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_nilpotency_rewrite_descends(word in sampled(Construction::Nilpotency)) {
        check_descent(&nilp(), &word)?;
    }

    #[test]
    fn every_zerodivisor_rewrite_descends(word in sampled(Construction::ZeroDivisor)) {
        check_descent(&zd(), &word)?;
    }

    #[test]
    fn normal_forms_are_normal_and_strategy_free(word in sampled(Construction::ZeroDivisor)) {
        let p = zd();
        let left = p.normalize_word_with(&word, Sweep::Leftmost, DEFAULT_BUDGET).unwrap().0;
        let right = p.normalize_word_with(&word, Sweep::Rightmost, DEFAULT_BUDGET).unwrap().0;
        prop_assert_eq!(&left, &right);
        if let Reduct::Word(v) = left {
            prop_assert!(p.is_normal(&v));
        }
    }
}
