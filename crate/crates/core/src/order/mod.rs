//! Functorial orders on `FX = P(X)^A`.
//!
//! Every order built here is action-distributive: `u ⊑ v` iff
//! `u(a) ⊑^a v(a)` for every action `a`, where `⊑^a` is an order on `P(X)`.
//! Products, compositions and opposites of such orders stay
//! action-distributive, so [`FunctorialOrder::leq_sets`] (one action) is the
//! primitive and [`FunctorialOrder::leq`] is its conjunction.
//!
//! Composition follows the relational convention: `u (A ∘ B) v` iff there is
//! a `w` with `u B w` and `w A v`. The right operand is applied first.

mod expr;
mod laws;

use std::fmt;

pub use expr::{make_order, OrderExpr};
pub use laws::{check_functorial, check_preorder};
pub(crate) use laws::up_sets;

use crate::error::{Error, Result};
use crate::lts::{Side, StepFunction};
use crate::sets::StateSet;

/// Largest carrier over which a composite order will search for a middle
/// element.
pub const COMPOSE_MAX_CARRIER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// `u(a) ⊆ v(a)`: plain simulation.
    Inclusion,
    /// `u(a) ⊇ v(a)`: anti-simulation.
    ReverseInclusion,
    Equality,
    /// Inclusion on `Act^r`, reverse inclusion on `Act^l`, equality on `Act^bi`.
    CovContra(Vec<Side>),
    /// `u(a) = ∅`, or `u(a) ⊇ v(a)` with `v(a) ≠ ∅`.
    Conformance,
    /// `u(a) = ∅` or `u(a) = v(a)`.
    ConfEmpty,
    /// `u(a) ⊇ v(a)` with `v(a) ≠ ∅`, or `u(a) = v(a)`.
    ConfNonEmpty,
    /// One component order per action.
    PerActionProduct(Vec<OrderKind>),
    /// `Compose(A, B)` is `A ∘ B`.
    Compose(Box<FunctorialOrder>, Box<FunctorialOrder>),
    Opposite(Box<FunctorialOrder>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorialOrder {
    name: String,
    kind: OrderKind,
}

/// A decomposition `⊑ = ⊑^right ∘ ⊑^left = ⊑^left ∘ ⊑^right` into a
/// left-stable factor, used on the source side of a lifting, and a
/// right-stable factor, used on the target side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideFactors {
    pub left: FunctorialOrder,
    pub right: FunctorialOrder,
}

impl FunctorialOrder {
    fn named(name: impl Into<String>, kind: OrderKind) -> Self {
        FunctorialOrder {
            name: name.into(),
            kind,
        }
    }

    pub fn inclusion() -> Self {
        Self::named("inclusion", OrderKind::Inclusion)
    }

    pub fn reverse() -> Self {
        Self::named("reverse", OrderKind::ReverseInclusion)
    }

    pub fn equality() -> Self {
        Self::named("equality", OrderKind::Equality)
    }

    pub fn conformance() -> Self {
        Self::named("conformance", OrderKind::Conformance)
    }

    pub fn conf_empty() -> Self {
        Self::named("conf_empty", OrderKind::ConfEmpty)
    }

    pub fn conf_nonempty() -> Self {
        Self::named("conf_nonempty", OrderKind::ConfNonEmpty)
    }

    pub fn cov_contra(sides: Vec<Side>) -> Self {
        let tag = |s: &Side| match s {
            Side::Right => 'r',
            Side::Left => 'l',
            Side::Bi => 'b',
        };
        let name = format!("cc[{}]", sides.iter().map(tag).collect::<String>());
        Self::named(name, OrderKind::CovContra(sides))
    }

    /// Per-action product. Components are evaluated at their own action.
    pub fn product(components: Vec<OrderKind>) -> Self {
        let name = format!(
            "product[{}]",
            components.iter().map(kind_tag).collect::<Vec<_>>().join(",")
        );
        Self::named(name, OrderKind::PerActionProduct(components))
    }

    /// `first ∘ second`: `u ⊑ v` iff `u second w` and `w first v` for some `w`.
    pub fn compose(first: FunctorialOrder, second: FunctorialOrder) -> Result<Self> {
        if let (Some(a), Some(b)) = (first.arity(), second.arity()) {
            if a != b {
                return Err(Error::InvalidOrder(format!(
                    "cannot compose orders over {a} and {b} actions"
                )));
            }
        }
        let name = format!("compose({},{})", first.name, second.name);
        Ok(Self::named(
            name,
            OrderKind::Compose(Box::new(first), Box::new(second)),
        ))
    }

    pub fn opposite(inner: FunctorialOrder) -> Self {
        let name = format!("op({})", inner.name);
        Self::named(name, OrderKind::Opposite(Box::new(inner)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    /// The alphabet size the order is tied to, if any.
    pub fn arity(&self) -> Option<usize> {
        match &self.kind {
            OrderKind::CovContra(sides) => Some(sides.len()),
            OrderKind::PerActionProduct(parts) => Some(parts.len()),
            OrderKind::Compose(a, b) => a.arity().or(b.arity()),
            OrderKind::Opposite(o) => o.arity(),
            _ => None,
        }
    }

    pub fn check_arity(&self, alphabet_size: usize) -> Result<()> {
        match self.arity() {
            Some(n) if n != alphabet_size => Err(Error::AlphabetMismatch {
                expected: n,
                found: alphabet_size,
            }),
            _ => Ok(()),
        }
    }

    /// `u ⊑_X v`.
    pub fn leq(&self, u: &StepFunction, v: &StepFunction) -> Result<bool> {
        u.same_shape(v)?;
        self.check_arity(u.alphabet_size())?;
        for a in 0..u.alphabet_size() {
            if !self.leq_sets(a, u.at(a), v.at(a), u.carrier())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The component order `⊑^a` on `P(X)` for action `a`, over a carrier of
    /// `carrier` states.
    pub fn leq_sets(
        &self,
        action: usize,
        x1: &StateSet,
        x2: &StateSet,
        carrier: usize,
    ) -> Result<bool> {
        kind_leq(&self.kind, action, x1, x2, carrier)
    }

    /// The left-stable / right-stable factorization of the built-in orders.
    ///
    /// Actions that could go to either factor (equality components) are
    /// equality in both, which is the same as assigning them to the right
    /// factor.
    pub fn side_factors(&self) -> Option<SideFactors> {
        use OrderKind::*;
        let (left, right) = match &self.kind {
            Inclusion => (Self::equality(), Self::inclusion()),
            ReverseInclusion => (Self::reverse(), Self::equality()),
            Equality => (Self::equality(), Self::equality()),
            Conformance => (Self::conf_nonempty(), Self::conf_empty()),
            CovContra(sides) => {
                let left = sides
                    .iter()
                    .map(|s| if *s == Side::Left { ReverseInclusion } else { Equality })
                    .collect();
                let right = sides
                    .iter()
                    .map(|s| if *s == Side::Right { Inclusion } else { Equality })
                    .collect();
                (
                    Self::named(format!("lbar({})", self.name), PerActionProduct(left)),
                    Self::named(format!("rbar({})", self.name), PerActionProduct(right)),
                )
            }
            _ => return None,
        };
        Some(SideFactors { left, right })
    }
}

fn kind_tag(kind: &OrderKind) -> String {
    match kind {
        OrderKind::Inclusion => "inclusion".into(),
        OrderKind::ReverseInclusion => "reverse".into(),
        OrderKind::Equality => "equality".into(),
        OrderKind::Conformance => "conformance".into(),
        OrderKind::ConfEmpty => "conf_empty".into(),
        OrderKind::ConfNonEmpty => "conf_nonempty".into(),
        OrderKind::CovContra(s) => FunctorialOrder::cov_contra(s.clone()).name,
        OrderKind::PerActionProduct(parts) => FunctorialOrder::product(parts.clone()).name,
        OrderKind::Compose(a, b) => format!("compose({},{})", a.name, b.name),
        OrderKind::Opposite(o) => format!("op({})", o.name),
    }
}

fn kind_leq(
    kind: &OrderKind,
    action: usize,
    x1: &StateSet,
    x2: &StateSet,
    carrier: usize,
) -> Result<bool> {
    use OrderKind::*;
    Ok(match kind {
        Inclusion => x1.is_subset(x2),
        ReverseInclusion => x2.is_subset(x1),
        Equality => x1 == x2,
        CovContra(sides) => match sides.get(action) {
            Some(Side::Right) => x1.is_subset(x2),
            Some(Side::Left) => x2.is_subset(x1),
            Some(Side::Bi) => x1 == x2,
            None => {
                return Err(Error::ActionOutOfRange {
                    index: action,
                    count: sides.len(),
                })
            }
        },
        Conformance => x1.is_empty() || (!x2.is_empty() && x2.is_subset(x1)),
        ConfEmpty => x1.is_empty() || x1 == x2,
        ConfNonEmpty => (!x2.is_empty() && x2.is_subset(x1)) || x1 == x2,
        PerActionProduct(parts) => {
            let part = parts.get(action).ok_or(Error::ActionOutOfRange {
                index: action,
                count: parts.len(),
            })?;
            kind_leq(part, action, x1, x2, carrier)?
        }
        Compose(first, second) => {
            if carrier > COMPOSE_MAX_CARRIER {
                return Err(Error::BudgetExceeded {
                    what: "composite order",
                    needed: 1u128 << carrier,
                    cap: 1u128 << COMPOSE_MAX_CARRIER,
                });
            }
            for mask in 0..1u64 << carrier {
                let w = StateSet::from_mask(mask);
                if second.leq_sets(action, x1, &w, carrier)?
                    && first.leq_sets(action, &w, x2, carrier)?
                {
                    return Ok(true);
                }
            }
            false
        }
        Opposite(inner) => inner.leq_sets(action, x2, x1, carrier)?,
    })
}

impl fmt::Display for FunctorialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The four classical simulation notions, plus bisimulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Semantics {
    Plain,
    Reverse,
    CovContra(Vec<Side>),
    Conformance,
    Bisim,
}

impl Semantics {
    /// The functorial order whose coalgebraic simulations are this notion.
    pub fn order(&self) -> FunctorialOrder {
        match self {
            Semantics::Plain => FunctorialOrder::inclusion(),
            Semantics::Reverse => FunctorialOrder::reverse(),
            Semantics::CovContra(sides) => FunctorialOrder::cov_contra(sides.clone()),
            Semantics::Conformance => FunctorialOrder::conformance(),
            Semantics::Bisim => FunctorialOrder::equality(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Semantics::Plain => "plain",
            Semantics::Reverse => "reverse",
            Semantics::CovContra(_) => "cc",
            Semantics::Conformance => "conformance",
            Semantics::Bisim => "bisim",
        }
    }
}

impl FunctorialOrder {
    /// The classical notion this order characterizes, for orders that have a
    /// direct decision procedure.
    pub fn semantics(&self) -> Option<Semantics> {
        match &self.kind {
            OrderKind::Inclusion => Some(Semantics::Plain),
            OrderKind::ReverseInclusion => Some(Semantics::Reverse),
            OrderKind::Equality => Some(Semantics::Bisim),
            OrderKind::CovContra(s) => Some(Semantics::CovContra(s.clone())),
            OrderKind::Conformance => Some(Semantics::Conformance),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::StepSpace;

    fn sf(carrier: usize, lists: &[&[usize]]) -> StepFunction {
        StepFunction::from_lists(carrier, lists).unwrap()
    }

    #[test]
    fn conformance_clauses() {
        let c = FunctorialOrder::conformance();
        assert!(c.leq(&sf(4, &[&[], &[1, 2]]), &sf(4, &[&[3], &[1]])).unwrap());
        assert!(!c.leq(&sf(2, &[&[1]]), &sf(2, &[&[]])).unwrap());
    }

    #[test]
    fn cov_contra_clauses() {
        let cc = FunctorialOrder::cov_contra(vec![Side::Right, Side::Left]);
        let u = sf(3, &[&[1], &[1, 2]]);
        let v = sf(3, &[&[1, 2], &[2]]);
        assert!(cc.leq(&u, &v).unwrap());
        assert!(!cc.leq(&v, &u).unwrap());
        assert!(cc.leq(&u, &sf(3, &[&[1]])).is_err());
    }

    #[test]
    fn shape_errors() {
        let o = FunctorialOrder::inclusion();
        assert!(matches!(
            o.leq(&sf(2, &[&[]]), &sf(3, &[&[]])),
            Err(Error::CarrierMismatch { .. })
        ));
        assert!(matches!(
            o.leq(&sf(2, &[&[]]), &sf(2, &[&[], &[]])),
            Err(Error::AlphabetMismatch { .. })
        ));
        let cc = FunctorialOrder::cov_contra(vec![Side::Right]);
        assert!(FunctorialOrder::compose(cc, FunctorialOrder::cov_contra(vec![Side::Bi; 2])).is_err());
    }

    fn pointwise_equal(a: &FunctorialOrder, b: &FunctorialOrder, carrier: usize, k: usize) -> bool {
        let space = StepSpace::new(carrier, k, 1 << 12).unwrap();
        let all = space.all();
        all.iter()
            .all(|u| all.iter().all(|v| a.leq(u, v).unwrap() == b.leq(u, v).unwrap()))
    }

    #[test]
    fn cov_contra_specializations() {
        for k in 1..=2 {
            for n in 0..=3 {
                let with = |s| FunctorialOrder::cov_contra(vec![s; k]);
                assert!(pointwise_equal(&with(Side::Right), &FunctorialOrder::inclusion(), n, k));
                assert!(pointwise_equal(&with(Side::Left), &FunctorialOrder::opposite(FunctorialOrder::inclusion()), n, k));
                assert!(pointwise_equal(&with(Side::Bi), &FunctorialOrder::equality(), n, k));
            }
        }
    }

    #[test]
    fn double_opposite() {
        for o in [FunctorialOrder::conformance(), FunctorialOrder::conf_nonempty(), FunctorialOrder::inclusion()] {
            let oo = FunctorialOrder::opposite(FunctorialOrder::opposite(o.clone()));
            assert!(pointwise_equal(&o, &oo, 3, 1));
            assert!(pointwise_equal(&o, &oo, 2, 2));
        }
    }

    /// Composition evaluated by searching a whole middle step function, not
    /// action by action.
    fn compose_whole(a: &FunctorialOrder, b: &FunctorialOrder, u: &StepFunction, v: &StepFunction, all: &[StepFunction]) -> bool {
        all.iter().any(|w| b.leq(u, w).unwrap() && a.leq(w, v).unwrap())
    }

    #[test]
    fn per_action_composition_matches_whole_search() {
        let pairs = [
            (FunctorialOrder::conf_empty(), FunctorialOrder::conf_nonempty()),
            (FunctorialOrder::inclusion(), FunctorialOrder::reverse()),
            (FunctorialOrder::reverse(), FunctorialOrder::conformance()),
        ];
        for (a, b) in pairs {
            let composite = FunctorialOrder::compose(a.clone(), b.clone()).unwrap();
            for (n, k) in [(2, 2), (3, 1)] {
                let all = StepSpace::new(n, k, 1 << 12).unwrap().all();
                for u in &all {
                    for v in &all {
                        assert_eq!(
                            composite.leq(u, v).unwrap(),
                            compose_whole(&a, &b, u, v, &all),
                            "{composite} at {u} {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn factors_of_builtins() {
        let cc = FunctorialOrder::cov_contra(vec![Side::Right, Side::Left, Side::Bi]);
        let f = cc.side_factors().unwrap();
        assert_eq!(
            f.left.kind(),
            &OrderKind::PerActionProduct(vec![OrderKind::Equality, OrderKind::ReverseInclusion, OrderKind::Equality])
        );
        assert_eq!(
            f.right.kind(),
            &OrderKind::PerActionProduct(vec![OrderKind::Inclusion, OrderKind::Equality, OrderKind::Equality])
        );
        let c = FunctorialOrder::conformance().side_factors().unwrap();
        assert_eq!(c.left, FunctorialOrder::conf_nonempty());
        assert_eq!(c.right, FunctorialOrder::conf_empty());
        assert!(FunctorialOrder::conf_empty().side_factors().is_none());
    }
}
