//! Greatest simulations between two transition systems.
//!
//! Every engine computes a greatest fixed point by pair deletion: start from
//! `X × Y` and, in each sweep, drop every pair whose step clause fails
//! against the relation of the previous sweep.

use crate::error::{Error, Result};
use crate::lifting::{lax_lift_fast, lax_lift_generic};
use crate::lts::{Lts, Side, StepFunction};
use crate::order::{FunctorialOrder, Semantics};
use crate::relation::Relation;

/// Largest `|X| · |Y|` the brute-force oracle accepts.
pub const BRUTE_FORCE_MAX_PAIRS: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Direct clauses for built-in orders; others fall back to witness search.
    #[default]
    Fast,
    /// Witness search for every order.
    Generic,
}

/// A greatest fixed point together with `|R|` after each sweep, starting
/// with the full relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub relation: Relation,
    pub sizes: Vec<usize>,
}

impl Refinement {
    pub fn sweeps(&self) -> usize {
        self.sizes.len()
    }
}

/// Iterates `R ↦ {(x, y) ∈ R | keep(R, x, y)}` from the full relation until
/// nothing changes.
pub fn refine(
    rows: usize,
    cols: usize,
    mut keep: impl FnMut(&Relation, usize, usize) -> Result<bool>,
) -> Result<Refinement> {
    let mut current = Relation::full(rows, cols);
    let mut sizes = vec![current.len()];
    loop {
        let mut next = current.clone();
        for (x, y) in current.pairs().collect::<Vec<_>>() {
            if !keep(&current, x, y)? {
                next.remove(x, y);
            }
        }
        if next == current {
            return Ok(Refinement {
                relation: current,
                sizes,
            });
        }
        sizes.push(next.len());
        current = next;
    }
}

fn require_same_alphabet(x: &Lts, y: &Lts) -> Result<()> {
    if x.alphabet() != y.alphabet() {
        return Err(Error::AlphabetsDiffer {
            left: x.alphabet().to_vec(),
            right: y.alphabet().to_vec(),
        });
    }
    Ok(())
}

fn check_semantics(semantics: &Semantics, alphabet: usize) -> Result<()> {
    match semantics {
        Semantics::CovContra(sides) if sides.len() != alphabet => Err(Error::AlphabetMismatch {
            expected: sides.len(),
            found: alphabet,
        }),
        _ => Ok(()),
    }
}

/// Some `y' ∈ ys` with `R(x', y')` for each `x' ∈ xs`.
fn forward(r: &Relation, x: &Lts, xs: usize, y: &Lts, ys: usize, a: usize) -> bool {
    x.successors(xs, a)
        .iter()
        .all(|x2| y.successors(ys, a).iter().any(|y2| r.contains(x2, y2)))
}

fn backward(r: &Relation, x: &Lts, xs: usize, y: &Lts, ys: usize, a: usize) -> bool {
    y.successors(ys, a)
        .iter()
        .all(|y2| x.successors(xs, a).iter().any(|x2| r.contains(x2, y2)))
}

/// The transfer condition of `semantics` for the pair `(xs, ys)`, with
/// successors related by `r`. Reads transitions directly and does not go
/// through any lifting.
pub fn classical_clause(
    semantics: &Semantics,
    r: &Relation,
    x: &Lts,
    xs: usize,
    y: &Lts,
    ys: usize,
) -> bool {
    (0..x.alphabet().len()).all(|a| match semantics {
        Semantics::Plain => forward(r, x, xs, y, ys, a),
        Semantics::Reverse => backward(r, x, xs, y, ys, a),
        Semantics::Bisim => forward(r, x, xs, y, ys, a) && backward(r, x, xs, y, ys, a),
        Semantics::CovContra(sides) => match sides[a] {
            Side::Right => forward(r, x, xs, y, ys, a),
            Side::Left => backward(r, x, xs, y, ys, a),
            Side::Bi => forward(r, x, xs, y, ys, a) && backward(r, x, xs, y, ys, a),
        },
        Semantics::Conformance => {
            // I(x) ⊆ I(y), and on the initials of x every y-step is matched.
            x.successors(xs, a).is_empty()
                || (!y.successors(ys, a).is_empty() && backward(r, x, xs, y, ys, a))
        }
    })
}

/// Greatest simulation of `semantics` by its transfer clauses.
pub fn greatest_classical_sim(x: &Lts, y: &Lts, semantics: &Semantics) -> Result<Relation> {
    Ok(classical_refinement(x, y, semantics)?.relation)
}

pub fn classical_refinement(x: &Lts, y: &Lts, semantics: &Semantics) -> Result<Refinement> {
    require_same_alphabet(x, y)?;
    check_semantics(semantics, x.alphabet().len())?;
    refine(x.state_count(), y.state_count(), |r, xs, ys| {
        Ok(classical_clause(semantics, r, x, xs, y, ys))
    })
}

/// The greatest bisimulation.
pub fn bisimilarity(x: &Lts, y: &Lts) -> Result<Relation> {
    greatest_classical_sim(x, y, &Semantics::Bisim)
}

fn steps(lts: &Lts) -> Result<Vec<StepFunction>> {
    (0..lts.state_count()).map(|s| lts.step_of(s)).collect()
}

/// Greatest `R` with `(c(x), d(y)) ∈ Rel_⊑(F)(R)` for every `(x, y) ∈ R`.
pub fn greatest_coalgebraic_sim(
    x: &Lts,
    y: &Lts,
    order: &FunctorialOrder,
    mode: Mode,
) -> Result<Relation> {
    Ok(coalgebraic_refinement(x, y, order, mode)?.relation)
}

pub fn coalgebraic_refinement(
    x: &Lts,
    y: &Lts,
    order: &FunctorialOrder,
    mode: Mode,
) -> Result<Refinement> {
    require_same_alphabet(x, y)?;
    order.check_arity(x.alphabet().len())?;
    let (cx, cy) = (steps(x)?, steps(y)?);
    let fast = match mode {
        Mode::Fast => order.semantics(),
        Mode::Generic => None,
    };
    refine(x.state_count(), y.state_count(), |r, xs, ys| match &fast {
        Some(s) => lax_lift_fast(s, r, &cx[xs], &cy[ys]),
        None => lax_lift_generic(order, r, &cx[xs], &cy[ys]),
    })
}

/// Union of all relations `R` with `step(R, x, y)` for every `(x, y) ∈ R`,
/// by enumerating every relation. The union is checked to be closed itself.
pub fn brute_force_similarity(
    x: &Lts,
    y: &Lts,
    mut step: impl FnMut(&Relation, usize, usize) -> bool,
) -> Result<Relation> {
    let (rows, cols) = (x.state_count(), y.state_count());
    if rows * cols > BRUTE_FORCE_MAX_PAIRS {
        return Err(Error::BudgetExceeded {
            what: "brute-force similarity",
            needed: 1u128 << (rows * cols).min(127),
            cap: 1 << BRUTE_FORCE_MAX_PAIRS,
        });
    }
    let mut union = Relation::empty(rows, cols);
    for mask in 0..1u64 << (rows * cols) {
        let r = Relation::from_mask(rows, cols, mask);
        if r.pairs().all(|(a, b)| step(&r, a, b)) {
            for (a, b) in r.pairs() {
                union.insert(a, b);
            }
        }
    }
    if !union.pairs().all(|(a, b)| step(&union, a, b)) {
        return Err(Error::NotClosed);
    }
    Ok(union)
}

/// What `holds` decides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criterion {
    Semantics(Semantics),
    Order(FunctorialOrder, Mode),
}

impl Criterion {
    pub fn greatest(&self, x: &Lts, y: &Lts) -> Result<Relation> {
        match self {
            Criterion::Semantics(s) => greatest_classical_sim(x, y, s),
            Criterion::Order(o, mode) => greatest_coalgebraic_sim(x, y, o, *mode),
        }
    }
}

/// Whether state `xs` of `x` is simulated by state `ys` of `y`.
pub fn holds(x: &Lts, xs: usize, y: &Lts, ys: usize, criterion: &Criterion) -> Result<bool> {
    for (s, lts) in [(xs, x), (ys, y)] {
        if s >= lts.state_count() {
            return Err(Error::StateOutOfRange {
                index: s,
                count: lts.state_count(),
            });
        }
    }
    Ok(criterion.greatest(x, y)?.contains(xs, ys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_term;

    fn term(text: &str) -> Lts {
        parse_term(text).unwrap()
    }

    fn same(x: &Lts, y: &Lts) -> (Lts, Lts) {
        let (x, y, _) = crate::lts::unify_alphabets(x, y).unwrap();
        (x, y)
    }

    #[test]
    fn conformance_examples() {
        let (a, ab) = same(&term("P = a.0;"), &term("Q = a.0 + b.0;"));
        let c = Criterion::Semantics(Semantics::Conformance);
        assert!(holds(&a, 0, &ab, 0, &c).unwrap());
        assert!(!holds(&ab, 0, &a, 0, &c).unwrap());

        let (apq, ap) = same(&term("P = a.b.0 + a.c.0;"), &term("Q = a.b.0;"));
        assert!(holds(&apq, 0, &ap, 0, &c).unwrap());
        assert!(!holds(&ap, 0, &apq, 0, &c).unwrap());
    }

    #[test]
    fn plain_and_generic_agree_on_example() {
        let (ab, a) = same(&term("P = a.0 + b.0;"), &term("Q = a.0;"));
        let classical = greatest_classical_sim(&ab, &a, &Semantics::Plain).unwrap();
        assert!(!classical.contains(0, 0));
        let inc = FunctorialOrder::inclusion();
        for mode in [Mode::Fast, Mode::Generic] {
            assert_eq!(greatest_coalgebraic_sim(&ab, &a, &inc, mode).unwrap(), classical);
        }
    }

    #[test]
    fn brute_force_matches_engine() {
        let a = term("P = a.0;");
        let plain = Semantics::Plain;
        let oracle = brute_force_similarity(&a, &a, |r, x, y| classical_clause(&plain, r, &a, x, &a, y)).unwrap();
        assert_eq!(oracle, greatest_classical_sim(&a, &a, &plain).unwrap());
        assert!(oracle.contains(1, 0));
        assert!(!oracle.contains(0, 1));

        let (b, a) = same(&term("P = b.0;"), &a);
        let conf = Semantics::Conformance;
        let oracle = brute_force_similarity(&b, &a, |r, x, y| classical_clause(&conf, r, &b, x, &a, y)).unwrap();
        assert!(!oracle.contains(0, 0));
    }

    #[test]
    fn sweep_bound() {
        let p = term("P = a.b.a.b.0;");
        let q = term("Q = a.b.a.0;");
        let (p, q) = same(&p, &q);
        let refinement = classical_refinement(&p, &q, &Semantics::Plain).unwrap();
        assert!(refinement.sweeps() <= p.state_count() * q.state_count() + 1);
        assert!(refinement.sizes.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn mismatched_alphabets_are_rejected() {
        let err = greatest_classical_sim(&term("P = a.0;"), &term("Q = b.0;"), &Semantics::Plain);
        assert!(matches!(err, Err(Error::AlphabetsDiffer { .. })));
        let a = term("P = a.0;");
        let err = greatest_classical_sim(&a, &a, &Semantics::CovContra(vec![Side::Right, Side::Left]));
        assert!(matches!(err, Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn empty_alphabet_relates_everything() {
        let x = Lts::new(2, vec![]).unwrap();
        let r = greatest_classical_sim(&x, &x, &Semantics::Plain).unwrap();
        assert_eq!(r, Relation::full(2, 2));
    }
}
