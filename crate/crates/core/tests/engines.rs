mod common;

use common::*;
use simcoal::engine::{
    bisimilarity, classical_refinement, coalgebraic_refinement, greatest_classical_sim,
    greatest_coalgebraic_sim, holds, Criterion, Mode,
};
use simcoal::{FunctorialOrder, Semantics, Side};

#[test]
fn reverse_is_transposed_plain() {
    let systems = family(2, 2);
    for x in &systems {
        for y in systems.iter().step_by(7) {
            let rev = greatest_classical_sim(x, y, &Semantics::Reverse).unwrap();
            let plain = greatest_classical_sim(y, x, &Semantics::Plain).unwrap();
            assert_eq!(rev, plain.transpose());
        }
    }
}

#[test]
fn refinement_shrinks_strictly_and_stops_in_time() {
    let mut rng = rng(9);
    for _ in 0..200 {
        let x = random_lts(&mut rng, 5, 2);
        let y = random_lts(&mut rng, 5, 2);
        let bound = x.state_count() * y.state_count() + 1;
        for s in semantics_for(2, &[vec![Side::Right, Side::Left]]) {
            let c = classical_refinement(&x, &y, &s).unwrap();
            let g = coalgebraic_refinement(&x, &y, &s.order(), Mode::Generic).unwrap();
            for r in [&c, &g] {
                assert!(r.sweeps() <= bound);
                assert!(r.sizes.windows(2).all(|w| w[0] > w[1]), "{:?}", r.sizes);
            }
            assert_eq!(c.relation, g.relation);
        }
    }
}

#[test]
fn coalgebraic_examples() {
    let (a, ab) = unified(&term("P = a.0;"), &term("Q = a.0 + b.0;"));
    let inc = FunctorialOrder::inclusion();
    assert_eq!(
        greatest_coalgebraic_sim(&a, &ab, &inc, Mode::Generic).unwrap(),
        greatest_classical_sim(&a, &ab, &Semantics::Plain).unwrap()
    );
    let eq = FunctorialOrder::equality();
    assert!(greatest_coalgebraic_sim(&a, &a, &eq, Mode::Fast).unwrap().contains(0, 0));
    let all_bi = FunctorialOrder::cov_contra(vec![Side::Bi, Side::Bi]);
    for (x, y) in [(&a, &ab), (&ab, &ab), (&ab, &a)] {
        assert_eq!(
            greatest_coalgebraic_sim(x, y, &all_bi, Mode::Generic).unwrap(),
            greatest_coalgebraic_sim(x, y, &eq, Mode::Generic).unwrap()
        );
    }
}

#[test]
fn non_builtin_orders_run_generically() {
    let (x, y) = unified(&term("P = a.b.0 + a.c.0;"), &term("Q = a.b.0;"));
    let composite = FunctorialOrder::compose(FunctorialOrder::conf_empty(), FunctorialOrder::conf_nonempty()).unwrap();
    let fast = greatest_coalgebraic_sim(&x, &y, &composite, Mode::Fast).unwrap();
    assert_eq!(fast, greatest_classical_sim(&x, &y, &Semantics::Conformance).unwrap());
}

#[test]
fn every_state_simulates_itself() {
    let mut rng = rng(3);
    for _ in 0..50 {
        let p = random_lts(&mut rng, 6, 2);
        for s in semantics_for(2, &all_sides(2)) {
            for st in 0..p.state_count() {
                assert!(holds(&p, st, &p, st, &Criterion::Semantics(s.clone())).unwrap());
            }
        }
    }
}

#[test]
fn bisimilarity_is_symmetric_on_one_system() {
    let mut rng = rng(4);
    for _ in 0..100 {
        let p = random_lts(&mut rng, 6, 2);
        let b = bisimilarity(&p, &p).unwrap();
        assert_eq!(b, b.transpose());
        assert!(is_transitive(&b));
    }
}

#[test]
fn holds_rejects_bad_indices() {
    let p = term("P = a.0;");
    let c = Criterion::Semantics(Semantics::Plain);
    assert!(holds(&p, 5, &p, 0, &c).is_err());
}
