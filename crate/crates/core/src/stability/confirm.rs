//! Independent re-evaluation of counterexamples.
//!
//! Nothing here goes through the per-action witness search: liftings are
//! decided by joint search over whole step-function spaces and existence
//! claims by plain enumeration.

use crate::enumerate::StepSpace;
use crate::error::{Error, Result};
use crate::lifting::lax_lift_factored_whole;
use crate::lts::StepFunction;
use crate::order::FunctorialOrder;
use crate::relation::Relation;
use crate::report::{CheckReport, Law, Witness};

const CAP: u64 = 1 << 20;

fn order_at<'a>(orders: &[&'a FunctorialOrder], i: usize) -> Result<&'a FunctorialOrder> {
    orders.get(i).copied().ok_or_else(|| {
        Error::InvalidOrder(format!("witness confirmation needs {} orders", i + 1))
    })
}

fn whole(
    left: &FunctorialOrder,
    right: &FunctorialOrder,
    r: &Relation,
    u: &StepFunction,
    v: &StepFunction,
) -> Result<bool> {
    lax_lift_factored_whole(left, right, r, u, v, CAP)
}

/// `u (A ∘ B) v` by enumerating middle step functions.
fn composite_leq(
    a: &FunctorialOrder,
    b: &FunctorialOrder,
    u: &StepFunction,
    v: &StepFunction,
) -> Result<bool> {
    let space = StepSpace::new(u.carrier(), u.alphabet_size(), CAP)?;
    for w in space.iter() {
        if b.leq(u, &w)? && a.leq(&w, v)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether the witness of a failed report really violates its law.
///
/// `orders` are the orders the report was produced from, in its argument
/// order: one order, or `(A, B)` for commutation, or
/// `(order, left, right)` for factored lifts. Reports without a witness
/// confirm nothing and give `false`.
pub fn confirm_witness(report: &CheckReport, orders: &[&FunctorialOrder]) -> Result<bool> {
    let Some(witness) = &report.witness else {
        return Ok(false);
    };
    let o = order_at(orders, 0)?;
    Ok(match witness {
        Witness::Reflexivity { u } => !o.leq(u, u)?,
        Witness::Transitivity { u, v, w } => o.leq(u, v)? && o.leq(v, w)? && !o.leq(u, w)?,
        Witness::Functoriality { f, u, v } => {
            o.leq(u, v)? && !o.leq(&f.apply_step(u)?, &f.apply_step(v)?)?
        }
        Witness::RightStable { f, u, v } | Witness::LeftStable { f, u, v } => {
            let right = matches!(witness, Witness::RightStable { .. });
            let fu = f.apply_step(u)?;
            let premise = if right { o.leq(v, &fu)? } else { o.leq(&fu, v)? };
            let space = StepSpace::new(u.carrier(), u.alphabet_size(), CAP)?;
            let mut repaired = false;
            for w in space.iter() {
                let ordered = if right { o.leq(&w, u)? } else { o.leq(u, &w)? };
                if ordered && &f.apply_step(&w)? == v {
                    repaired = true;
                    break;
                }
            }
            premise && !repaired
        }
        Witness::Stable {
            f,
            g,
            relation,
            u,
            v,
            lhs,
            rhs,
        } => {
            let pulled = relation.inverse_image(f, g)?;
            let l = whole(o, o, &pulled, u, v)?;
            let r = whole(o, o, relation, &f.apply_step(u)?, &g.apply_step(v)?)?;
            l != r && l == *lhs && r == *rhs
        }
        Witness::Interchange {
            relation,
            u,
            v,
            lhs,
            rhs,
        } => {
            let eq = FunctorialOrder::equality();
            let b = whole(&eq, o, relation, u, v)?;
            match report.law {
                Law::InterchangeEquality => {
                    let c = whole(o, o, relation, u, v)?;
                    c != b && c == *lhs && b == *rhs
                }
                _ => {
                    let a = whole(o, &eq, relation, u, v)?;
                    a && !b && *lhs && !*rhs
                }
            }
        }
        Witness::Commute {
            u,
            v,
            first,
            second,
        } => {
            let b = order_at(orders, 1)?;
            let ab = composite_leq(o, b, u, v)?;
            let ba = composite_leq(b, o, u, v)?;
            ab != ba && ab == *first && ba == *second
        }
        Witness::FactoredLift {
            relation,
            u,
            v,
            full,
            factored,
        } => {
            let (left, right) = (order_at(orders, 1)?, order_at(orders, 2)?);
            let f_ = whole(o, o, relation, u, v)?;
            let g_ = whole(left, right, relation, u, v)?;
            f_ != g_ && f_ == *full && g_ == *factored
        }
        Witness::OpDuality {
            f,
            g,
            relation,
            u,
            v,
            order_stable,
            opposite_stable,
        } => {
            let op = FunctorialOrder::opposite(o.clone());
            let pulled = relation.inverse_image(f, g)?;
            let fu = f.apply_step(u)?;
            let gv = g.apply_step(v)?;
            let s1 = whole(o, o, &pulled, u, v)? == whole(o, o, relation, &fu, &gv)?;
            let t = relation.transpose();
            let s2 = whole(&op, &op, &t.inverse_image(g, f)?, v, u)?
                == whole(&op, &op, &t, &gv, &fu)?;
            s1 != s2 && s1 == *order_stable && s2 == *opposite_stable
        }
        Witness::LiftTranspose {
            relation,
            u,
            v,
            opposite,
            transposed,
        } => {
            let op = FunctorialOrder::opposite(o.clone());
            let a = whole(&op, &op, relation, u, v)?;
            let b = whole(o, o, &relation.transpose(), v, u)?;
            a != b && a == *opposite && b == *transposed
        }
    })
}
