//! Generators shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simcoal::engine::{self, classical_clause};
use simcoal::lts::default_alphabet;
use simcoal::{unify_alphabets, Lts, Relation, Semantics, Side};

/// Every LTS on `n` states over `k` actions, rooted at 0.
pub fn all_lts(n: usize, k: usize) -> Vec<Lts> {
    let bits = n * n * k;
    (0..1u64 << bits)
        .map(|mask| {
            let mut lts = Lts::new(n, default_alphabet(k)).unwrap().with_initial(0).unwrap();
            for bit in 0..bits {
                if mask >> bit & 1 == 1 {
                    let (src, rest) = (bit / (n * k), bit % (n * k));
                    lts.add_transition(src, rest / n, rest % n).unwrap();
                }
            }
            lts
        })
        .collect()
}

/// Every LTS with 1..=max_states states over `k` actions.
pub fn family(max_states: usize, k: usize) -> Vec<Lts> {
    (1..=max_states).flat_map(|n| all_lts(n, k)).collect()
}

pub fn random_lts(rng: &mut ChaCha8Rng, max_states: usize, k: usize) -> Lts {
    let n = rng.gen_range(1..=max_states);
    let density = rng.gen_range(0.1..0.6);
    let mut lts = Lts::new(n, default_alphabet(k)).unwrap().with_initial(0).unwrap();
    for s in 0..n {
        for a in 0..k {
            for t in 0..n {
                if rng.gen_bool(density) {
                    lts.add_transition(s, a, t).unwrap();
                }
            }
        }
    }
    lts
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn term(text: &str) -> Lts {
    simcoal::parse_term(text).unwrap()
}

/// Both systems over the union of their alphabets.
pub fn unified(x: &Lts, y: &Lts) -> (Lts, Lts) {
    let (x, y, _) = unify_alphabets(x, y).unwrap();
    (x, y)
}

/// The four simulation notions over `k` actions; covariant-contravariant
/// ones for every given side assignment.
pub fn semantics_for(k: usize, cc_sides: &[Vec<Side>]) -> Vec<Semantics> {
    let mut out = vec![Semantics::Plain, Semantics::Reverse, Semantics::Conformance];
    for sides in cc_sides {
        assert_eq!(sides.len(), k);
        out.push(Semantics::CovContra(sides.clone()));
    }
    out
}

/// Every side assignment for `k` actions.
pub fn all_sides(k: usize) -> Vec<Vec<Side>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Side>| {
                [Side::Right, Side::Left, Side::Bi].into_iter().map(move |s| {
                    let mut p = prefix.clone();
                    p.push(s);
                    p
                })
            })
            .collect();
    }
    out
}

/// Union of all relations closed under the transfer clause of `s`.
pub fn oracle(x: &Lts, y: &Lts, s: &Semantics) -> Relation {
    engine::brute_force_similarity(x, y, |r, a, b| classical_clause(s, r, x, a, y, b)).unwrap()
}

/// `R ∘ R ⊆ R`, through explicit matrix composition.
pub fn is_transitive(r: &Relation) -> bool {
    r.then(r).unwrap().is_subset(r)
}
