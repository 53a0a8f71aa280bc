//! Exhaustive preorder and functoriality checks.

use crate::enumerate::{map_count, maps, Budget, StepSpace};
use crate::error::Result;
use crate::order::FunctorialOrder;
use crate::report::{CheckReport, Law, Witness};
use crate::sets::StateSet;

/// Row `i` holds the indices `j` with `space[i] ⊑ space[j]`.
pub(crate) fn up_sets(order: &FunctorialOrder, space: &StepSpace) -> Result<Vec<StateSet>> {
    let all = space.all();
    all.iter()
        .map(|u| {
            let mut row = StateSet::new();
            for (j, v) in all.iter().enumerate() {
                if order.leq(u, v)? {
                    row.insert(j);
                }
            }
            Ok(row)
        })
        .collect()
}

/// Reflexivity and transitivity of `order` on every step function over the
/// carrier.
pub fn check_preorder(
    order: &FunctorialOrder,
    carrier: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let space = budget.space(carrier, alphabet)?;
    let mut report = CheckReport::new(Law::Preorder, &[order.name()], &[carrier], alphabet);
    report.instances = (space.len() * space.len()) as u64;
    let up = up_sets(order, &space)?;

    for (i, row) in up.iter().enumerate() {
        if !row.contains(i) {
            return Ok(report.fail(Witness::Reflexivity { u: space.get(i) }));
        }
    }
    for (i, row) in up.iter().enumerate() {
        for j in row.iter() {
            if let Some(k) = up[j].difference(row).iter().next() {
                return Ok(report.fail(Witness::Transitivity {
                    u: space.get(i),
                    v: space.get(j),
                    w: space.get(k),
                }));
            }
        }
    }
    Ok(report)
}

/// `u ⊑_X v ⇒ Ff(u) ⊑_Y Ff(v)` for every `f : X -> Y`.
pub fn check_functorial(
    order: &FunctorialOrder,
    carrier_x: usize,
    carrier_y: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let xs = budget.space(carrier_x, alphabet)?;
    let ys = budget.space(carrier_y, alphabet)?;
    budget.require(
        "functoriality check",
        map_count(carrier_x, carrier_y) * (xs.len() * xs.len()) as u128,
    )?;
    let mut report = CheckReport::new(
        Law::Functorial,
        &[order.name()],
        &[carrier_x, carrier_y],
        alphabet,
    );
    let up_x = up_sets(order, &xs)?;
    let up_y = up_sets(order, &ys)?;

    for f in maps(carrier_x, carrier_y) {
        let image: Vec<usize> = xs
            .iter()
            .map(|u| f.apply_step(&u).map(|fu| ys.index_of(&fu)))
            .collect::<Result<_>>()?;
        for (i, row) in up_x.iter().enumerate() {
            for j in row.iter() {
                report.instances += 1;
                if !up_y[image[i]].contains(image[j]) {
                    return Ok(report.fail(Witness::Functoriality {
                        f,
                        u: xs.get(i),
                        v: xs.get(j),
                    }));
                }
            }
        }
    }
    Ok(report)
}
