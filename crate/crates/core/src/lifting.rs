//! Relation lifting for `F = P^A` and its lax variant
//! `Rel_⊑(F)(R) = ⊑_Y ∘ Rel(F)(R) ∘ ⊑_X`.
//!
//! `Rel(P^A)(R)` is the Egli–Milner lifting applied action by action: every
//! element on either side has an `R`-partner on the other side.
//!
//! The generic lax lifting searches witnesses `u ⊑_X u'`, `v' ⊑_Y v` with
//! `u' Rel(R) v'`. Since both the lifting and every order are products over
//! actions, the search runs per action over `P(X) × P(Y)`; [`lax_lift_whole`]
//! runs the joint search over `FX × FY` and is kept as a cross-check.

use crate::enumerate::StepSpace;
use crate::error::{Error, Result};
use crate::lts::{Side, StepFunction};
use crate::order::{FunctorialOrder, Semantics};
use crate::relation::Relation;
use crate::sets::StateSet;

/// Default cap on `2^|X| · 2^|Y|`, the witness candidates per action.
pub const DEFAULT_WITNESS_CAP: u128 = 1 << 16;

fn check_operands(r: &Relation, u: &StepFunction, v: &StepFunction) -> Result<()> {
    r.check_dims(u.carrier(), v.carrier())?;
    u.same_alphabet(v)
}

/// Every `x ∈ xs` has an `R`-partner in `ys`.
pub fn forward_matched(r: &Relation, xs: &StateSet, ys: &StateSet) -> bool {
    xs.iter().all(|x| r.image_of(x).intersects(ys))
}

/// Every `y ∈ ys` has an `R`-partner in `xs`.
pub fn backward_matched(r: &Relation, xs: &StateSet, ys: &StateSet) -> bool {
    ys.iter().all(|y| r.preimage_of(y).intersects(xs))
}

/// `Rel(P)(R)` on two sets.
pub fn egli_milner(r: &Relation, xs: &StateSet, ys: &StateSet) -> bool {
    forward_matched(r, xs, ys) && backward_matched(r, xs, ys)
}

/// `(u, v) ∈ Rel(P^A)(R)`.
pub fn rel_lift(r: &Relation, u: &StepFunction, v: &StepFunction) -> Result<bool> {
    check_operands(r, u, v)?;
    Ok((0..u.alphabet_size()).all(|a| egli_milner(r, u.at(a), v.at(a))))
}

fn subsets(carrier: usize) -> impl Iterator<Item = StateSet> {
    (0..1u64 << carrier).map(StateSet::from_mask)
}

fn witness_budget(rows: usize, cols: usize, cap: u128) -> Result<()> {
    let needed = 1u128
        .checked_shl((rows + cols) as u32)
        .filter(|_| rows < 64 && cols < 64)
        .unwrap_or(u128::MAX);
    if needed > cap {
        Err(Error::BudgetExceeded {
            what: "lax lifting witness search",
            needed,
            cap,
        })
    } else {
        Ok(())
    }
}

/// `(u, v) ∈ right_Y ∘ Rel(F)(R) ∘ left_X`: some `u'` with `u left u'` and
/// some `v'` with `v' right v` are related by the plain lifting.
///
/// With `left = right = ⊑` this is the lax lifting `Rel_⊑(F)(R)`.
pub fn lax_lift_factored(
    left: &FunctorialOrder,
    right: &FunctorialOrder,
    r: &Relation,
    u: &StepFunction,
    v: &StepFunction,
    cap: u128,
) -> Result<bool> {
    check_operands(r, u, v)?;
    left.check_arity(u.alphabet_size())?;
    right.check_arity(u.alphabet_size())?;
    witness_budget(r.rows(), r.cols(), cap)?;
    let (nx, ny) = (r.rows(), r.cols());
    for a in 0..u.alphabet_size() {
        let mut lefts = Vec::new();
        for x in subsets(nx) {
            if left.leq_sets(a, u.at(a), &x, nx)? {
                lefts.push(x);
            }
        }
        let mut rights = Vec::new();
        for y in subsets(ny) {
            if right.leq_sets(a, &y, v.at(a), ny)? {
                rights.push(y);
            }
        }
        let found = lefts
            .iter()
            .any(|x| rights.iter().any(|y| egli_milner(r, x, y)));
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(u, v) ∈ Rel_⊑(F)(R)` by complete witness search.
pub fn lax_lift_generic(
    order: &FunctorialOrder,
    r: &Relation,
    u: &StepFunction,
    v: &StepFunction,
) -> Result<bool> {
    lax_lift_generic_with(order, r, u, v, DEFAULT_WITNESS_CAP)
}

pub fn lax_lift_generic_with(
    order: &FunctorialOrder,
    r: &Relation,
    u: &StepFunction,
    v: &StepFunction,
    cap: u128,
) -> Result<bool> {
    lax_lift_factored(order, order, r, u, v, cap)
}

/// `(u, v) ∈ Rel_⊑(F)(R)` by enumerating whole step functions
/// `u' ∈ FX`, `v' ∈ FY`. `cap` bounds `|FX| · |FY|`.
pub fn lax_lift_whole(
    order: &FunctorialOrder,
    r: &Relation,
    u: &StepFunction,
    v: &StepFunction,
    cap: u64,
) -> Result<bool> {
    lax_lift_factored_whole(order, order, r, u, v, cap)
}

/// [`lax_lift_factored`] by joint search over `FX × FY`.
pub fn lax_lift_factored_whole(
    left: &FunctorialOrder,
    right: &FunctorialOrder,
    r: &Relation,
    u: &StepFunction,
    v: &StepFunction,
    cap: u64,
) -> Result<bool> {
    check_operands(r, u, v)?;
    let k = u.alphabet_size();
    let xs = StepSpace::new(r.rows(), k, cap)?;
    let ys = StepSpace::new(r.cols(), k, cap)?;
    let needed = (xs.len() as u128) * (ys.len() as u128);
    if needed > cap as u128 {
        return Err(Error::BudgetExceeded {
            what: "whole-space witness search",
            needed,
            cap: cap as u128,
        });
    }
    let mut lefts = Vec::new();
    for x in xs.iter() {
        if left.leq(u, &x)? {
            lefts.push(x);
        }
    }
    let mut rights = Vec::new();
    for y in ys.iter() {
        if right.leq(&y, v)? {
            rights.push(y);
        }
    }
    for x in &lefts {
        for y in &rights {
            if rel_lift(r, x, y)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Direct decision of the lax lifting for the built-in semantics, without
/// witness search.
pub fn lax_lift_fast(
    semantics: &Semantics,
    r: &Relation,
    u: &StepFunction,
    v: &StepFunction,
) -> Result<bool> {
    check_operands(r, u, v)?;
    let k = u.alphabet_size();
    if let Semantics::CovContra(sides) = semantics {
        if sides.len() != k {
            return Err(Error::AlphabetMismatch {
                expected: sides.len(),
                found: k,
            });
        }
    }
    Ok((0..k).all(|a| {
        let (xs, ys) = (u.at(a), v.at(a));
        match semantics {
            Semantics::Plain => forward_matched(r, xs, ys),
            Semantics::Reverse => backward_matched(r, xs, ys),
            Semantics::Bisim => egli_milner(r, xs, ys),
            Semantics::CovContra(sides) => match sides[a] {
                Side::Right => forward_matched(r, xs, ys),
                Side::Left => backward_matched(r, xs, ys),
                Side::Bi => egli_milner(r, xs, ys),
            },
            Semantics::Conformance => {
                xs.is_empty() || (!ys.is_empty() && backward_matched(r, xs, ys))
            }
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(carrier: usize, lists: &[&[usize]]) -> StepFunction {
        StepFunction::from_lists(carrier, lists).unwrap()
    }

    #[test]
    fn plain_lifting() {
        let id = Relation::identity(1);
        assert!(rel_lift(&id, &sf(1, &[&[0]]), &sf(1, &[&[0]])).unwrap());
        let empty = Relation::empty(1, 1);
        assert!(!rel_lift(&empty, &sf(1, &[&[0]]), &sf(1, &[&[0]])).unwrap());
        let r = Relation::from_pairs(1, 2, [(0, 1)]).unwrap();
        assert!(rel_lift(&r, &sf(1, &[&[0]]), &sf(2, &[&[1]])).unwrap());
        assert!(matches!(
            rel_lift(&r, &sf(2, &[&[0]]), &sf(2, &[&[1]])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn generic_examples() {
        let inc = FunctorialOrder::inclusion();
        let id = Relation::identity(2);
        let u = sf(2, &[&[0, 1], &[1]]);
        assert!(lax_lift_generic(&inc, &id, &u, &u).unwrap());

        let r = Relation::from_pairs(2, 2, [(0, 0)]).unwrap();
        assert!(lax_lift_generic(&inc, &r, &sf(2, &[&[0]]), &sf(2, &[&[0, 1]])).unwrap());

        let conf = FunctorialOrder::conformance();
        assert!(lax_lift_generic(&conf, &id, &sf(2, &[&[0, 1]]), &sf(2, &[&[0]])).unwrap());
    }

    #[test]
    fn fast_examples() {
        let r = Relation::from_pairs(2, 2, [(0, 0)]).unwrap();
        assert!(lax_lift_fast(&Semantics::Plain, &r, &sf(2, &[&[0]]), &sf(2, &[&[0, 1]])).unwrap());

        let cc = Semantics::CovContra(vec![Side::Right, Side::Left]);
        let id = Relation::identity(2);
        let u = sf(2, &[&[0], &[0, 1]]);
        let v = sf(2, &[&[0, 1], &[0]]);
        assert!(lax_lift_fast(&cc, &id, &u, &v).unwrap());
        assert!(lax_lift_generic(&cc.order(), &id, &u, &v).unwrap());

        let one = Relation::full(1, 1);
        assert!(!lax_lift_fast(&Semantics::Conformance, &one, &sf(1, &[&[0]]), &sf(1, &[&[]])).unwrap());
    }

    #[test]
    fn whole_search_agrees_on_small_cases() {
        let orders = [
            FunctorialOrder::inclusion(),
            FunctorialOrder::reverse(),
            FunctorialOrder::conformance(),
            FunctorialOrder::cov_contra(vec![Side::Right, Side::Left]),
            FunctorialOrder::compose(FunctorialOrder::conf_empty(), FunctorialOrder::conf_nonempty()).unwrap(),
        ];
        let xs = StepSpace::new(2, 2, 4096).unwrap();
        let ys = StepSpace::new(1, 2, 4096).unwrap();
        for order in &orders {
            for r in crate::enumerate::relations(2, 1).unwrap() {
                for u in xs.iter() {
                    for v in ys.iter() {
                        assert_eq!(
                            lax_lift_generic(order, &r, &u, &v).unwrap(),
                            lax_lift_whole(order, &r, &u, &v, 1 << 12).unwrap(),
                            "{order} {r:?} {u} {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn witness_cap() {
        let r = Relation::full(10, 10);
        let u = StepFunction::empty(10, 1);
        assert!(matches!(
            lax_lift_generic(&FunctorialOrder::inclusion(), &r, &u, &u),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
