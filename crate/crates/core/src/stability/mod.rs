//! Finite-carrier checkers for the stability laws of an order on `P^A`.
//!
//! All enumerations are lexicographic, so a failing check always reports the
//! same counterexample. Checks over `(f, g, R, u, v)` may fall back to seeded
//! uniform sampling when the budget allows it.

mod confirm;
mod map;

pub use confirm::confirm_witness;
pub use map::StateMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{map_count, maps, relation_count, relations, Budget};
use crate::error::Result;
use crate::lifting::{lax_lift_factored, lax_lift_generic, DEFAULT_WITNESS_CAP};
use crate::lts::StepFunction;
use crate::order::{up_sets, FunctorialOrder};
use crate::relation::Relation;
use crate::report::{CheckReport, Coverage, Law, Verdict, Witness};
use crate::sets::StateSet;

fn transpose(up: &[StateSet]) -> Vec<StateSet> {
    let mut down = vec![StateSet::new(); up.len()];
    for (i, row) in up.iter().enumerate() {
        for j in row.iter() {
            down[j].insert(i);
        }
    }
    down
}

fn side_stable(
    order: &FunctorialOrder,
    size_x: usize,
    size_y: usize,
    alphabet: usize,
    budget: &Budget,
    right: bool,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let xs = budget.space(size_x, alphabet)?;
    let ys = budget.space(size_y, alphabet)?;
    budget.require(
        "side-stability check",
        map_count(size_x, size_y) * (xs.len() as u128) * (ys.len() as u128),
    )?;
    let law = if right { Law::RightStable } else { Law::LeftStable };
    let mut report = CheckReport::new(law, &[order.name()], &[size_x, size_y], alphabet);
    let up_x = up_sets(order, &xs)?;
    let up_y = up_sets(order, &ys)?;
    let (down_x, down_y) = (transpose(&up_x), transpose(&up_y));

    for f in maps(size_x, size_y) {
        let image: Vec<usize> = xs
            .iter()
            .map(|u| f.apply_step(&u).map(|fu| ys.index_of(&fu)))
            .collect::<Result<_>>()?;
        // Largest u first, so the reported u is as large as possible.
        for i in (0..xs.len()).rev() {
            let (candidates, targets) = if right {
                (&down_x[i], &down_y[image[i]])
            } else {
                (&up_x[i], &up_y[image[i]])
            };
            let reached: StateSet = candidates.iter().map(|j| image[j]).collect();
            report.instances += targets.len() as u64;
            if let Some(j) = targets.difference(&reached).iter().next() {
                let (u, v) = (xs.get(i), ys.get(j));
                let witness = if right {
                    Witness::RightStable { f, u, v }
                } else {
                    Witness::LeftStable { f, u, v }
                };
                return Ok(report.fail(witness));
            }
        }
    }
    Ok(report)
}

/// `v ⊑_Y Ff(u)` implies some `u' ⊑_X u` with `Ff(u') = v`, for every
/// `f : X -> Y`.
pub fn check_right_stable(
    order: &FunctorialOrder,
    size_x: usize,
    size_y: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    side_stable(order, size_x, size_y, alphabet, budget, true)
}

/// `Ff(u) ⊑_Y v` implies some `u ⊑_X u'` with `Ff(u') = v`, for every
/// `f : X -> Y`.
pub fn check_left_stable(
    order: &FunctorialOrder,
    size_x: usize,
    size_y: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    side_stable(order, size_x, size_y, alphabet, budget, false)
}

/// One `(f, g, R, u, v)` with `f : X -> Z`, `g : Y -> W`, `R ⊆ Z × W`.
struct Instance {
    f: StateMap,
    g: StateMap,
    relation: Relation,
    u: StepFunction,
    v: StepFunction,
}

/// Carrier sizes `(X, Y, Z, W)` of a substitution instance.
pub type Sizes4 = [usize; 4];

/// Drives `visit` over every instance, or over `budget.instances` uniform
/// samples when the space is too large and sampling is allowed.
fn for_each_instance(
    sizes: Sizes4,
    alphabet: usize,
    budget: &Budget,
    report: &mut CheckReport,
    mut visit: impl FnMut(&Instance) -> Result<Option<Witness>>,
) -> Result<Option<Witness>> {
    let [x, y, z, w] = sizes;
    let xs = budget.space(x, alphabet)?;
    let ys = budget.space(y, alphabet)?;
    budget.space(z, alphabet)?;
    budget.space(w, alphabet)?;
    let total = map_count(x, z)
        .saturating_mul(map_count(y, w))
        .saturating_mul(relation_count(z, w))
        .saturating_mul((xs.len() * ys.len()) as u128);
    if total == 0 {
        return Ok(None);
    }

    if total > budget.instances as u128 {
        let Some(seed) = budget.sample_seed else {
            budget.require("substitution instance enumeration", total)?;
            unreachable!("require fails above the cap");
        };
        report.coverage = Coverage::Sampled;
        report.seed = Some(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random_map = |rng: &mut ChaCha8Rng, d: usize, c: usize| {
            StateMap::new(c, (0..d).map(|_| rng.gen_range(0..c)).collect())
                .expect("entries drawn below codomain")
        };
        for _ in 0..budget.instances {
            let f = random_map(&mut rng, x, z);
            let g = random_map(&mut rng, y, w);
            let mut relation = Relation::empty(z, w);
            for a in 0..z {
                for b in 0..w {
                    if rng.gen_bool(0.5) {
                        relation.insert(a, b);
                    }
                }
            }
            let u = xs.get(rng.gen_range(0..xs.len()));
            let v = ys.get(rng.gen_range(0..ys.len()));
            report.instances += 1;
            if let Some(found) = visit(&Instance { f, g, relation, u, v })? {
                return Ok(Some(found));
            }
        }
        return Ok(None);
    }

    for relation in relations(z, w)? {
        for f in maps(x, z) {
            for g in maps(y, w) {
                for u in xs.iter() {
                    for v in ys.iter() {
                        report.instances += 1;
                        let inst = Instance {
                            f: f.clone(),
                            g: g.clone(),
                            relation: relation.clone(),
                            u: u.clone(),
                            v,
                        };
                        if let Some(found) = visit(&inst)? {
                            return Ok(Some(found));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Both sides of the stability equation at one instance:
/// `(u, v) ∈ Rel_⊑((f×g)^{-1}R)` and `(Ff(u), Fg(v)) ∈ Rel_⊑(R)`.
fn stability_sides(order: &FunctorialOrder, inst: &Instance) -> Result<(bool, bool)> {
    let pulled = inst.relation.inverse_image(&inst.f, &inst.g)?;
    let lhs = lax_lift_generic(order, &pulled, &inst.u, &inst.v)?;
    let fu = inst.f.apply_step(&inst.u)?;
    let gv = inst.g.apply_step(&inst.v)?;
    let rhs = lax_lift_generic(order, &inst.relation, &fu, &gv)?;
    Ok((lhs, rhs))
}

/// `Rel_⊑((f×g)^{-1}R) = (Ff×Fg)^{-1}(Rel_⊑(R))` for every `f : X -> Z`,
/// `g : Y -> W` and `R ⊆ Z × W`.
pub fn check_stable(
    order: &FunctorialOrder,
    sizes: Sizes4,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let mut report = CheckReport::new(Law::Stable, &[order.name()], &sizes, alphabet);
    let found = for_each_instance(sizes, alphabet, budget, &mut report, |inst| {
        let (lhs, rhs) = stability_sides(order, inst)?;
        Ok((lhs != rhs).then(|| Witness::Stable {
            f: inst.f.clone(),
            g: inst.g.clone(),
            relation: inst.relation.clone(),
            u: inst.u.clone(),
            v: inst.v.clone(),
            lhs,
            rhs,
        }))
    })?;
    if let Some(w) = found {
        if let Witness::Stable { lhs: true, .. } = w {
            report.note = Some("the inclusion direction failed".into());
        }
        return Ok(report.fail(w));
    }
    Ok(report)
}

/// Visits every `(R, u, v)` with `R ⊆ X × Y`, `u ∈ FX`, `v ∈ FY`.
fn for_each_lift_instance(
    size_x: usize,
    size_y: usize,
    alphabet: usize,
    budget: &Budget,
    report: &mut CheckReport,
    mut visit: impl FnMut(&Relation, &StepFunction, &StepFunction) -> Result<Option<Witness>>,
) -> Result<Option<Witness>> {
    let xs = budget.space(size_x, alphabet)?;
    let ys = budget.space(size_y, alphabet)?;
    budget.require(
        "lifting instance enumeration",
        relation_count(size_x, size_y).saturating_mul((xs.len() * ys.len()) as u128),
    )?;
    let (xs, ys) = (xs.all(), ys.all());
    for r in relations(size_x, size_y)? {
        for u in &xs {
            for v in &ys {
                report.instances += 1;
                if let Some(w) = visit(&r, u, v)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// The interchange laws between an order and the plain lifting: part one
/// is `Rel(F)(R) ∘ ⊑_X ⊆ ⊑_Y ∘ Rel(F)(R)`, part two is
/// `⊑_Y ∘ Rel(F)(R) ∘ ⊑_X = ⊑_Y ∘ Rel(F)(R)`. The report passes when both do.
pub fn check_interchange(
    order: &FunctorialOrder,
    size_x: usize,
    size_y: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let eq = FunctorialOrder::equality();
    let names = [order.name()];
    let sizes = [size_x, size_y];
    let cap = DEFAULT_WITNESS_CAP;

    let mut inclusion = CheckReport::new(Law::InterchangeInclusion, &names, &sizes, alphabet);
    let found = for_each_lift_instance(size_x, size_y, alphabet, budget, &mut inclusion, |r, u, v| {
        let lhs = lax_lift_factored(order, &eq, r, u, v, cap)?;
        let rhs = lhs && lax_lift_factored(&eq, order, r, u, v, cap)?;
        Ok((lhs && !rhs).then(|| Witness::Interchange {
            relation: r.clone(),
            u: u.clone(),
            v: v.clone(),
            lhs,
            rhs,
        }))
    })?;
    if let Some(w) = found {
        inclusion = inclusion.fail(w);
    }

    let mut equality = CheckReport::new(Law::InterchangeEquality, &names, &sizes, alphabet);
    let found = for_each_lift_instance(size_x, size_y, alphabet, budget, &mut equality, |r, u, v| {
        let lhs = lax_lift_factored(order, order, r, u, v, cap)?;
        let rhs = lax_lift_factored(&eq, order, r, u, v, cap)?;
        Ok((lhs != rhs).then(|| Witness::Interchange {
            relation: r.clone(),
            u: u.clone(),
            v: v.clone(),
            lhs,
            rhs,
        }))
    })?;
    if let Some(w) = found {
        equality = equality.fail(w);
    }

    let mut report = CheckReport::new(Law::Interchange, &names, &sizes, alphabet);
    report.instances = inclusion.instances + equality.instances;
    let failing = [&inclusion, &equality]
        .into_iter()
        .find(|p| p.failed())
        .and_then(|p| p.witness.clone());
    report.parts = vec![inclusion, equality];
    Ok(match failing {
        Some(w) => report.fail(w),
        None => report,
    })
}

/// `A ∘ B = B ∘ A` pointwise on `FX`.
pub fn check_commute(
    a: &FunctorialOrder,
    b: &FunctorialOrder,
    carrier: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    let ab = FunctorialOrder::compose(a.clone(), b.clone())?;
    let ba = FunctorialOrder::compose(b.clone(), a.clone())?;
    ab.check_arity(alphabet)?;
    let space = budget.space(carrier, alphabet)?;
    budget.require("commutation check", (space.len() * space.len()) as u128)?;
    let mut report = CheckReport::new(Law::Commute, &[a.name(), b.name()], &[carrier], alphabet);
    let all = space.all();
    for u in &all {
        for v in &all {
            report.instances += 1;
            let first = ab.leq(u, v)?;
            let second = ba.leq(u, v)?;
            if first != second {
                return Ok(report.fail(Witness::Commute {
                    u: u.clone(),
                    v: v.clone(),
                    first,
                    second,
                }));
            }
        }
    }
    Ok(report)
}

/// Which closure property of composition to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionLaw {
    /// Both factors right-stable, so is `A ∘ B`. Sizes `(X, Y)`.
    RightStable,
    /// Both factors left-stable, so is `A ∘ B`. Sizes `(X, Y)`.
    LeftStable,
    /// One factor right-stable, the other left-stable, and they commute;
    /// then `A ∘ B` is stable. Sizes `(X, Y, Z, W)`.
    Stable,
}

/// Checks the preconditions of `law` for `a` and `b`, then the conclusion
/// for `A ∘ B`. Failed preconditions give an inconclusive report with the
/// precondition checks as parts.
pub fn check_composition_stability(
    a: &FunctorialOrder,
    b: &FunctorialOrder,
    law: CompositionLaw,
    sizes: &[usize],
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    let composite = FunctorialOrder::compose(a.clone(), b.clone())?;
    let need = if law == CompositionLaw::Stable { 4 } else { 2 };
    if sizes.len() != need {
        return Err(crate::error::Error::InvalidOrder(format!(
            "{law:?} composition check takes {need} sizes, got {}",
            sizes.len()
        )));
    }
    let (report_law, mut parts, holds) = match law {
        CompositionLaw::RightStable | CompositionLaw::LeftStable => {
            let right = law == CompositionLaw::RightStable;
            let check = |o: &FunctorialOrder| side_stable(o, sizes[0], sizes[1], alphabet, budget, right);
            let parts = vec![check(a)?, check(b)?];
            let holds = parts.iter().all(CheckReport::passed);
            let law = if right {
                Law::CompositionRightStable
            } else {
                Law::CompositionLeftStable
            };
            (law, parts, holds)
        }
        CompositionLaw::Stable => {
            // Maps run X -> Z and Y -> W, so side-stability is needed at
            // those two size pairs.
            let pairs = [(sizes[0], sizes[2]), (sizes[1], sizes[3])];
            let mut parts = Vec::new();
            let mut side = |o: &FunctorialOrder, right: bool| -> Result<bool> {
                let mut ok = true;
                for &(p, q) in &pairs {
                    let r = side_stable(o, p, q, alphabet, budget, right)?;
                    ok &= r.passed();
                    parts.push(r);
                }
                Ok(ok)
            };
            let a_right = side(a, true)?;
            let b_left = side(b, false)?;
            let a_left = side(a, false)?;
            let b_right = side(b, true)?;
            let mut carriers: Vec<usize> = sizes.to_vec();
            carriers.sort_unstable();
            carriers.dedup();
            let mut commute = true;
            for c in carriers {
                let r = check_commute(a, b, c, alphabet, budget)?;
                commute &= r.passed();
                parts.push(r);
            }
            let holds = ((a_right && b_left) || (a_left && b_right)) && commute;
            (Law::CompositionStable, parts, holds)
        }
    };

    let mut report = CheckReport::new(report_law, &[composite.name()], sizes, alphabet);
    if !holds {
        report.verdict = Verdict::Inconclusive;
        report.note = Some("precondition failed".into());
        report.parts = parts;
        return Ok(report);
    }
    let conclusion = match law {
        CompositionLaw::RightStable => {
            check_right_stable(&composite, sizes[0], sizes[1], alphabet, budget)?
        }
        CompositionLaw::LeftStable => {
            check_left_stable(&composite, sizes[0], sizes[1], alphabet, budget)?
        }
        CompositionLaw::Stable => check_stable(
            &composite,
            [sizes[0], sizes[1], sizes[2], sizes[3]],
            alphabet,
            budget,
        )?,
    };
    report.instances = conclusion.instances;
    report.coverage = conclusion.coverage;
    report.seed = conclusion.seed;
    let witness = conclusion.witness.clone();
    parts.push(conclusion);
    report.parts = parts;
    Ok(match witness {
        Some(w) => report.fail(w),
        None => report,
    })
}

/// `Rel_⊑(F)(R) = right_Y ∘ Rel(F)(R) ∘ left_X` for every `R`, `u`, `v`.
pub fn check_factored_lift(
    order: &FunctorialOrder,
    left: &FunctorialOrder,
    right: &FunctorialOrder,
    size_x: usize,
    size_y: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let mut report = CheckReport::new(
        Law::FactoredLift,
        &[order.name(), left.name(), right.name()],
        &[size_x, size_y],
        alphabet,
    );
    let found = for_each_lift_instance(size_x, size_y, alphabet, budget, &mut report, |r, u, v| {
        let full = lax_lift_generic(order, r, u, v)?;
        let factored = lax_lift_factored(left, right, r, u, v, DEFAULT_WITNESS_CAP)?;
        Ok((full != factored).then(|| Witness::FactoredLift {
            relation: r.clone(),
            u: u.clone(),
            v: v.clone(),
            full,
            factored,
        }))
    })?;
    Ok(match found {
        Some(w) => report.fail(w),
        None => report,
    })
}

/// The stability equation holds for `⊑` at `(f, g, R, u, v)` exactly when it
/// holds for `⊑^op` at the mirrored instance `(g, f, Rᵀ, v, u)`. The parts
/// are plain stability checks of both orders.
pub fn check_op_duality(
    order: &FunctorialOrder,
    sizes: Sizes4,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let opposite = FunctorialOrder::opposite(order.clone());
    let mut report = CheckReport::new(
        Law::OpDuality,
        &[order.name(), opposite.name()],
        &sizes,
        alphabet,
    );
    let found = for_each_instance(sizes, alphabet, budget, &mut report, |inst| {
        let (l, r) = stability_sides(order, inst)?;
        let mirrored = Instance {
            f: inst.g.clone(),
            g: inst.f.clone(),
            relation: inst.relation.transpose(),
            u: inst.v.clone(),
            v: inst.u.clone(),
        };
        let (ol, or) = stability_sides(&opposite, &mirrored)?;
        let (order_stable, opposite_stable) = (l == r, ol == or);
        Ok((order_stable != opposite_stable).then(|| Witness::OpDuality {
            f: inst.f.clone(),
            g: inst.g.clone(),
            relation: inst.relation.clone(),
            u: inst.u.clone(),
            v: inst.v.clone(),
            order_stable,
            opposite_stable,
        }))
    })?;
    let [x, y, z, w] = sizes;
    report.parts = vec![
        check_stable(order, sizes, alphabet, budget)?,
        check_stable(&opposite, [y, x, w, z], alphabet, budget)?,
    ];
    if report.parts[0].verdict != report.parts[1].verdict && found.is_none() {
        report.note = Some("stability verdicts differ".into());
        report.verdict = Verdict::Fail;
    }
    Ok(match found {
        Some(w) => report.fail(w),
        None => report,
    })
}

/// `Rel_{⊑op}(F)(R) = (Rel_⊑(F)(Rᵀ))ᵀ` on every `R`, `u`, `v`.
pub fn check_lift_transpose(
    order: &FunctorialOrder,
    size_x: usize,
    size_y: usize,
    alphabet: usize,
    budget: &Budget,
) -> Result<CheckReport> {
    order.check_arity(alphabet)?;
    let op = FunctorialOrder::opposite(order.clone());
    let mut report = CheckReport::new(
        Law::LiftTranspose,
        &[order.name()],
        &[size_x, size_y],
        alphabet,
    );
    let found = for_each_lift_instance(size_x, size_y, alphabet, budget, &mut report, |r, u, v| {
        let opposite = lax_lift_generic(&op, r, u, v)?;
        let transposed = lax_lift_generic(order, &r.transpose(), v, u)?;
        Ok((opposite != transposed).then(|| Witness::LiftTranspose {
            relation: r.clone(),
            u: u.clone(),
            v: v.clone(),
            opposite,
            transposed,
        }))
    })?;
    Ok(match found {
        Some(w) => report.fail(w),
        None => report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lts::Side;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn inclusion_right_stable_reverse_not() {
        assert!(check_right_stable(&FunctorialOrder::inclusion(), 3, 3, 1, &b()).unwrap().passed());
        let r = check_right_stable(&FunctorialOrder::reverse(), 1, 2, 1, &b()).unwrap();
        assert!(r.failed());
        let Some(Witness::RightStable { f, u, v }) = r.witness else {
            panic!("wrong witness kind")
        };
        assert_eq!(f.table(), &[0]);
        assert_eq!(u, StepFunction::from_lists(1, &[&[0]]).unwrap());
        assert_eq!(v, StepFunction::from_lists(2, &[&[0, 1]]).unwrap());
    }

    #[test]
    fn left_stability() {
        assert!(check_left_stable(&FunctorialOrder::reverse(), 3, 3, 1, &b()).unwrap().passed());
        assert!(check_left_stable(&FunctorialOrder::inclusion(), 1, 2, 1, &b()).unwrap().failed());
        assert!(check_left_stable(&FunctorialOrder::equality(), 2, 2, 1, &b()).unwrap().passed());
        assert!(check_right_stable(&FunctorialOrder::equality(), 2, 2, 1, &b()).unwrap().passed());
    }

    #[test]
    fn conformance_factors_are_side_stable() {
        assert!(check_right_stable(&FunctorialOrder::conf_empty(), 2, 3, 1, &b()).unwrap().passed());
        assert!(check_left_stable(&FunctorialOrder::conf_nonempty(), 2, 3, 1, &b()).unwrap().passed());
        assert!(check_left_stable(&FunctorialOrder::conf_empty(), 1, 2, 1, &b()).unwrap().failed());
        assert!(check_right_stable(&FunctorialOrder::conf_nonempty(), 1, 2, 1, &b()).unwrap().failed());
    }

    #[test]
    fn stable_orders() {
        assert!(check_stable(&FunctorialOrder::conformance(), [2, 2, 2, 2], 1, &b()).unwrap().passed());
        assert!(check_stable(&FunctorialOrder::reverse(), [2, 2, 2, 2], 1, &b()).unwrap().passed());
    }

    #[test]
    fn sampled_stability_records_seed() {
        let budget = Budget::sampled(300, 7);
        let cc = FunctorialOrder::cov_contra(vec![Side::Right, Side::Left]);
        let r = check_stable(&cc, [2, 2, 2, 2], 2, &budget).unwrap();
        assert!(r.passed());
        assert_eq!(r.coverage, Coverage::Sampled);
        assert_eq!(r.seed, Some(7));
        assert_eq!(r.instances, 300);
        assert!(check_stable(&cc, [2, 2, 2, 2], 2, &Budget { instances: 10, ..b() }).is_err());
    }

    #[test]
    fn interchange_parts() {
        let r = check_interchange(&FunctorialOrder::inclusion(), 2, 2, 1, &b()).unwrap();
        assert!(r.passed());
        assert_eq!(r.parts.len(), 2);
        let r = check_interchange(&FunctorialOrder::reverse(), 1, 2, 1, &b()).unwrap();
        assert!(r.parts[0].failed());
        assert!(r.failed());
    }

    #[test]
    fn composition_preconditions() {
        let inc = FunctorialOrder::inclusion();
        let r = check_composition_stability(&inc, &inc, CompositionLaw::RightStable, &[2, 2], 1, &b()).unwrap();
        assert!(r.passed());
        let rev = FunctorialOrder::reverse();
        let r = check_composition_stability(&rev, &rev, CompositionLaw::RightStable, &[1, 2], 1, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(check_composition_stability(&inc, &inc, CompositionLaw::Stable, &[2, 2], 1, &b()).is_err());
    }

    #[test]
    fn transpose_law() {
        for o in [FunctorialOrder::inclusion(), FunctorialOrder::conformance()] {
            assert!(check_lift_transpose(&o, 2, 2, 1, &b()).unwrap().passed());
        }
    }
}
