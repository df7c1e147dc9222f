//! Cross-module properties of the bound pairs.

use std::cmp::Ordering;

use proptest::prelude::*;
use wdbounds::{
    eval_target, pi_eval, pi_sign, sf_d, sf_e, verify_pair, verify_pair_escalating, wilker_c,
    BigFloat, Kappa, PiConstant, Status, Target, TargetFn,
};

const MAX_ORDER: usize = 8;

fn all_pairs() -> impl Iterator<Item = (Target, usize)> {
    Target::ALL
        .into_iter()
        .flat_map(|t| (t.min_order()..=MAX_ORDER).map(move |n| (t, n)))
}

fn right_end(target: Target, bits: u32) -> BigFloat {
    pi_eval(&target.domain().value(), bits)
}

/// `b·t` for `t ∈ (0, 1)`.
fn interior(target: Target, t: f64, bits: u32) -> BigFloat {
    (right_end(target, bits + 32) * BigFloat::with_precision(64, t)).round_to(bits)
}

#[test]
fn no_theorem_is_ever_violated_at_128_bits() {
    for (target, n) in all_pairs() {
        let report = verify_pair(&target.bounds(n).unwrap(), 10_000, 128).unwrap();
        assert_ne!(report.status, Status::Violated, "{target} order {n}");
    }
}

#[test]
fn escalation_reaches_verified() {
    for (target, n) in all_pairs() {
        let pair = target.bounds(n).unwrap();
        let report = verify_pair_escalating(&pair, 400, 32, 1 << 16).unwrap();
        assert_eq!(report.status, Status::Verified, "{target} order {n}");
    }
}

#[test]
fn low_precision_is_indeterminate_not_violated() {
    let pair = Target::Wilker.bounds(8).unwrap();
    let report = verify_pair(&pair, 10_000, 32).unwrap();
    assert_eq!(report.status, Status::Indeterminate);
}

#[test]
fn reports_are_bit_identical() {
    let pair = Target::SfE.bounds(5).unwrap();
    assert_eq!(
        verify_pair(&pair, 3000, 192).unwrap(),
        verify_pair(&pair, 3000, 192).unwrap()
    );
}

#[test]
fn sf_e_partial_sums_approach_pi_minus_three_from_below() {
    let limit = &PiConstant::pi() - &PiConstant::from(3);
    let mut sum = PiConstant::zero();
    for m in 2..=200 {
        let next = &sum + &sf_e(m);
        assert_eq!(
            pi_sign(&(&next - &sum)).unwrap(),
            Ordering::Greater,
            "m = {m}"
        );
        assert_eq!(
            pi_sign(&(&limit - &next)).unwrap(),
            Ordering::Greater,
            "m = {m}"
        );
        sum = next;
    }
}

#[test]
fn coefficients_are_positive_to_200() {
    for k in 3..=200 {
        assert_eq!(pi_sign(&wilker_c(k)).unwrap(), Ordering::Greater, "c_{k}");
    }
    for m in 2..=200 {
        assert_eq!(pi_sign(&sf_e(m)).unwrap(), Ordering::Greater, "E({m})");
        assert_eq!(
            pi_sign(&sf_d(Kappa::Three, m)).unwrap(),
            Ordering::Greater,
            "D_3({m})"
        );
        assert_eq!(
            pi_sign(&sf_d(Kappa::Pi, m)).unwrap(),
            Ordering::Greater,
            "D_pi({m})"
        );
    }
}

fn target_strategy() -> impl Strategy<Value = Target> {
    prop::sample::select(Target::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_lies_strictly_between_bounds(target in target_strategy(), t in 0.001f64..0.999, extra in 0usize..=5) {
        let n = target.min_order() + extra;
        let pair = target.bounds(n).unwrap();
        let bits = 192;
        let x = interior(target, t, bits);
        let y = eval_target(TargetFn::for_target(target), &x, bits).unwrap();
        let oracle_err = y.ulp() * BigFloat::from_integer(16, 64);
        let (lo, lo_err) = pair.lower.materialize(bits + 32).eval(&x);
        let (up, up_err) = pair.upper.materialize(bits + 32).eval(&x);
        prop_assert!(y.clone() - lo > oracle_err.clone() + lo_err);
        prop_assert!(up - y > oracle_err + up_err);
    }

    #[test]
    fn bounds_tighten_with_order(target in target_strategy(), t in 0.001f64..0.999, a in 0usize..6, b in 0usize..6) {
        let (a, b) = (a.min(b), a.max(b));
        let lo_order = target.min_order() + a;
        let hi_order = (target.min_order() + b).min(MAX_ORDER);
        prop_assume!(lo_order < hi_order);
        let bits = 160;
        let x = interior(target, t, bits);
        let eval = |n: usize| {
            let pair = target.bounds(n).unwrap();
            let (lo, lo_err) = pair.lower.materialize(bits).eval(&x);
            let (up, up_err) = pair.upper.materialize(bits).eval(&x);
            (lo.clone(), up - lo, lo_err.clone() + up_err + lo_err)
        };
        let (lower_a, gap_a, err_a) = eval(lo_order);
        let (lower_b, gap_b, err_b) = eval(hi_order);
        let budget = err_a + err_b;
        prop_assert!(lower_a <= lower_b + budget.clone());
        prop_assert!(gap_b <= gap_a + budget);
    }
}
