mod common;

use common::all_sides;
use simcoal::enumerate::StepSpace;
use simcoal::lts::default_alphabet;
use simcoal::order::{check_functorial, check_preorder};
use simcoal::stability::check_commute;
use simcoal::{make_order, ActionPartition, Budget, FunctorialOrder, Side};

fn builtins(k: usize) -> Vec<FunctorialOrder> {
    let mut out = vec![
        FunctorialOrder::inclusion(),
        FunctorialOrder::reverse(),
        FunctorialOrder::equality(),
        FunctorialOrder::conformance(),
        FunctorialOrder::conf_empty(),
        FunctorialOrder::conf_nonempty(),
    ];
    out.extend(all_sides(k).into_iter().map(FunctorialOrder::cov_contra));
    out
}

fn same_pointwise(a: &FunctorialOrder, b: &FunctorialOrder, carrier: usize, k: usize) {
    let all = StepSpace::new(carrier, k, 1 << 12).unwrap().all();
    for u in &all {
        for v in &all {
            assert_eq!(a.leq(u, v).unwrap(), b.leq(u, v).unwrap(), "{a} vs {b} at {u}, {v}");
        }
    }
}

#[test]
fn builtins_are_functorial_preorders() {
    let b = Budget::default();
    for k in 1..=2 {
        for o in builtins(k) {
            for n in 0..=3 {
                let r = check_preorder(&o, n, k, &b).unwrap();
                assert!(r.passed(), "{r}");
                for m in 0..=3 {
                    let r = check_functorial(&o, n, m, k, &b).unwrap();
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }
}

#[test]
fn double_opposite_is_identity() {
    for o in builtins(2) {
        let oo = FunctorialOrder::opposite(FunctorialOrder::opposite(o.clone()));
        same_pointwise(&o, &oo, 2, 2);
    }
}

#[test]
fn cov_contra_specializations() {
    for k in 1..=2 {
        let uniform = |s| FunctorialOrder::cov_contra(vec![s; k]);
        for n in 0..=3 {
            if n * k > 6 {
                continue;
            }
            same_pointwise(&uniform(Side::Right), &FunctorialOrder::inclusion(), n, k);
            same_pointwise(
                &uniform(Side::Left),
                &FunctorialOrder::opposite(FunctorialOrder::inclusion()),
                n,
                k,
            );
            same_pointwise(&uniform(Side::Bi), &FunctorialOrder::equality(), n, k);
        }
    }
}

#[test]
fn conformance_factors_commute() {
    let b = Budget::default();
    let (ce, cn) = (FunctorialOrder::conf_empty(), FunctorialOrder::conf_nonempty());
    assert!(check_commute(&ce, &cn, 4, 1, &b).unwrap().passed());
    let cc = FunctorialOrder::cov_contra(vec![Side::Right, Side::Left]);
    let f = cc.side_factors().unwrap();
    assert!(check_commute(&f.left, &f.right, 3, 2, &b).unwrap().passed());
    let inc = FunctorialOrder::inclusion();
    assert!(check_commute(&inc, &inc, 3, 1, &b).unwrap().passed());
}

#[test]
fn non_commuting_orders_give_a_witness() {
    let b = Budget::default();
    let r = check_commute(&FunctorialOrder::conformance(), &FunctorialOrder::inclusion(), 2, 1, &b).unwrap();
    assert!(r.failed());
    let orders = [&FunctorialOrder::conformance(), &FunctorialOrder::inclusion()];
    assert!(simcoal::stability::confirm_witness(&r, &orders).unwrap());
}

#[test]
fn expressions_build_the_expected_orders() {
    let act = default_alphabet(2);
    let part = ActionPartition::from_sides(&act, &[Side::Right, Side::Left]);
    let composed = make_order("compose(conf_empty, conf_nonempty)", &act, None).unwrap();
    same_pointwise(&composed, &FunctorialOrder::conformance(), 2, 2);
    let anti = make_order("op(inclusion)", &act, None).unwrap();
    same_pointwise(&anti, &FunctorialOrder::reverse(), 2, 2);
    let cc = make_order("cc", &act, Some(&part)).unwrap();
    same_pointwise(&cc, &FunctorialOrder::cov_contra(vec![Side::Right, Side::Left]), 2, 2);
    let lr = make_order("compose(lbar(cc), rbar(cc))", &act, Some(&part)).unwrap();
    same_pointwise(&lr, &cc, 3, 2);
    assert!(make_order("compose(inclusion", &act, None).is_err());
    assert!(make_order("cc", &act, None).is_err());
}
