mod common;

use common::all_sides;
use simcoal::report::Verdict;
use simcoal::stability::{
    check_composition_stability, check_factored_lift, check_interchange, check_left_stable,
    check_op_duality, check_right_stable, check_stable, confirm_witness, CompositionLaw,
};
use simcoal::{Budget, FunctorialOrder, Side, Witness};

fn orders(k: usize) -> Vec<FunctorialOrder> {
    let mut out = vec![
        FunctorialOrder::inclusion(),
        FunctorialOrder::reverse(),
        FunctorialOrder::equality(),
        FunctorialOrder::conformance(),
        FunctorialOrder::conf_empty(),
        FunctorialOrder::conf_nonempty(),
        FunctorialOrder::compose(FunctorialOrder::inclusion(), FunctorialOrder::conformance()).unwrap(),
    ];
    out.extend(all_sides(k).into_iter().map(FunctorialOrder::cov_contra));
    out
}

#[test]
fn right_stable_matches_left_stable_of_opposite() {
    let b = Budget::default();
    for k in 1..=2 {
        for o in orders(k) {
            let op = FunctorialOrder::opposite(o.clone());
            for (sx, sy) in [(1, 2), (2, 2), (2, 1), (2, 3)] {
                let r = check_right_stable(&o, sx, sy, k, &b).unwrap();
                let l = check_left_stable(&op, sx, sy, k, &b).unwrap();
                assert_eq!(r.verdict, l.verdict, "{o} at ({sx},{sy}) alphabet {k}");
                match (&r.witness, &l.witness) {
                    (Some(Witness::RightStable { f, u, v }), Some(Witness::LeftStable { f: g, u: u2, v: v2 })) => {
                        assert_eq!((f, u, v), (g, u2, v2));
                    }
                    (None, None) => {}
                    other => panic!("mismatched witnesses {other:?}"),
                }
            }
        }
    }
}

#[test]
fn failing_witnesses_confirm() {
    let b = Budget::default();
    for o in orders(1) {
        for (sx, sy) in [(1, 2), (2, 2), (2, 3)] {
            for r in [
                check_right_stable(&o, sx, sy, 1, &b).unwrap(),
                check_left_stable(&o, sx, sy, 1, &b).unwrap(),
            ] {
                if r.failed() {
                    assert!(confirm_witness(&r, &[&o]).unwrap(), "{r}");
                }
            }
        }
        for part in check_interchange(&o, 1, 2, 1, &b).unwrap().parts {
            if part.failed() {
                assert!(confirm_witness(&part, &[&o]).unwrap(), "{part}");
            }
        }
    }
}

/// Right-stability is checked on every size pair up to 4, since the
/// interchange law at `(X, Y)` goes through maps out of `R ⊆ X × Y`.
#[test]
fn right_stability_iff_stable_with_interchange() {
    let b = Budget::default();
    for o in orders(1) {
        let mut right = true;
        for sx in 1..=4 {
            for sy in 1..=4 {
                right &= check_right_stable(&o, sx, sy, 1, &b).unwrap().passed();
            }
        }
        let mut interchange = true;
        for sx in 1..=2 {
            for sy in 1..=2 {
                let r = check_interchange(&o, sx, sy, 1, &b).unwrap();
                interchange &= r.parts[0].passed();
                if right {
                    assert!(r.passed(), "{o}\n{r}");
                }
            }
        }
        let stable = check_stable(&o, [2, 2, 2, 2], 1, &b).unwrap().passed();
        assert_eq!(right, stable && interchange, "{o}");
    }
}

#[test]
fn interchange_examples() {
    let b = Budget::default();
    let inc = check_interchange(&FunctorialOrder::inclusion(), 2, 2, 1, &b).unwrap();
    assert!(inc.parts.iter().all(|p| p.passed()));
    let eq = check_interchange(&FunctorialOrder::equality(), 2, 2, 1, &b).unwrap();
    assert!(eq.passed());
    let rev = check_interchange(&FunctorialOrder::reverse(), 1, 2, 1, &b).unwrap();
    assert!(rev.parts[0].failed());
}

#[test]
fn side_stability_fails_for_mixed_orders() {
    let b = Budget::default();
    for sides in all_sides(2) {
        let mixed = sides.contains(&Side::Right) && sides.contains(&Side::Left);
        if !mixed {
            continue;
        }
        let cc = FunctorialOrder::cov_contra(sides);
        assert!(check_right_stable(&cc, 1, 2, 2, &b).unwrap().failed());
        assert!(check_left_stable(&cc, 1, 2, 2, &b).unwrap().failed());
    }
}

#[test]
fn composition_laws() {
    let b = Budget::default();
    let inc = FunctorialOrder::inclusion();
    let r = check_composition_stability(&inc, &inc, CompositionLaw::RightStable, &[2, 2], 1, &b).unwrap();
    assert!(r.passed(), "{r}");

    let (ce, cn) = (FunctorialOrder::conf_empty(), FunctorialOrder::conf_nonempty());
    for (a, c) in [(&cn, &ce), (&ce, &cn)] {
        let r = check_composition_stability(a, c, CompositionLaw::Stable, &[2, 2, 2, 2], 1, &b).unwrap();
        assert!(r.passed(), "{r}");
    }

    let cc = FunctorialOrder::cov_contra(vec![Side::Right, Side::Left]);
    let f = cc.side_factors().unwrap();
    let r = check_composition_stability(&f.right, &f.left, CompositionLaw::Stable, &[2, 2, 2, 2], 2, &b).unwrap();
    assert!(r.passed(), "{r}");

    // Right-stable and left-stable, but the two do not commute.
    let r = check_composition_stability(&inc, &cn, CompositionLaw::Stable, &[1, 1, 2, 2], 1, &b).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert!(r.parts.iter().any(|p| p.law == simcoal::Law::Commute && p.failed()));
}

#[test]
fn conformance_factors_sit_on_fixed_sides() {
    let b = Budget::default();
    let conf = FunctorialOrder::conformance();
    let (ce, cn) = (FunctorialOrder::conf_empty(), FunctorialOrder::conf_nonempty());
    assert!(check_factored_lift(&conf, &cn, &ce, 2, 2, 2, &b).unwrap().passed());

    // The left-stable factor has to act on the source side.
    let swapped = check_factored_lift(&conf, &ce, &cn, 2, 1, 1, &b).unwrap();
    assert!(swapped.failed());
    assert!(confirm_witness(&swapped, &[&conf, &ce, &cn]).unwrap());
    let Some(Witness::FactoredLift { full, factored, .. }) = swapped.witness else {
        panic!("wrong witness kind");
    };
    assert!(full && !factored);
}

#[test]
fn op_duality_examples() {
    let b = Budget::default();
    for o in [FunctorialOrder::inclusion(), FunctorialOrder::conformance(), FunctorialOrder::equality()] {
        let r = check_op_duality(&o, [2, 2, 2, 2], 1, &b).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.parts.iter().all(|p| p.passed()));
    }
}

#[test]
fn unstable_composite_is_reported() {
    let b = Budget::default();
    let c = FunctorialOrder::compose(FunctorialOrder::inclusion(), FunctorialOrder::conformance()).unwrap();
    let r = check_stable(&c, [2, 2, 2, 2], 1, &b).unwrap();
    assert!(r.failed());
    assert!(confirm_witness(&r, &[&c]).unwrap(), "{r}");
}
