//! Deterministic enumeration of the finite objects the law checkers range
//! over: step functions, maps between carriers, and relations.

use crate::error::{Error, Result};
use crate::lts::StepFunction;
use crate::relation::Relation;
use crate::sets::StateSet;
use crate::stability::StateMap;

/// Default cap on `|FX| = (2^carrier)^alphabet`.
pub const DEFAULT_STEP_CAP: u64 = 4096;

/// Default cap on the number of instances a law check may evaluate.
pub const DEFAULT_INSTANCE_CAP: u64 = 1 << 24;

/// Enumeration limits for the law checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Cap on the size of any single step-function space.
    pub step_functions: u64,
    /// Cap on the instances of one check.
    pub instances: u64,
    /// When set, checks above the instance cap draw `instances` uniform
    /// samples from this seed instead of failing.
    pub sample_seed: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            step_functions: DEFAULT_STEP_CAP,
            instances: DEFAULT_INSTANCE_CAP,
            sample_seed: None,
        }
    }
}

impl Budget {
    pub fn sampled(instances: u64, seed: u64) -> Self {
        Budget {
            instances,
            sample_seed: Some(seed),
            ..Budget::default()
        }
    }

    pub(crate) fn space(&self, carrier: usize, alphabet: usize) -> Result<StepSpace> {
        StepSpace::new(carrier, alphabet, self.step_functions)
    }

    pub(crate) fn require(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.instances as u128 {
            Err(Error::BudgetExceeded {
                what,
                needed,
                cap: self.instances as u128,
            })
        } else {
            Ok(())
        }
    }
}

/// All of `P(X)^A` for a carrier of `carrier` states and `alphabet` actions.
///
/// Index `i` encodes action `a`'s successor set in bits
/// `a * carrier .. (a + 1) * carrier`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepSpace {
    carrier: usize,
    alphabet: usize,
    count: usize,
}

impl StepSpace {
    pub fn new(carrier: usize, alphabet: usize, cap: u64) -> Result<Self> {
        let bits = carrier * alphabet;
        if bits >= 63 || (1u64 << bits) > cap {
            return Err(Error::BudgetExceeded {
                what: "step-function enumeration",
                needed: 1u128.checked_shl(bits as u32).unwrap_or(u128::MAX),
                cap: cap as u128,
            });
        }
        Ok(StepSpace {
            carrier,
            alphabet,
            count: 1 << bits,
        })
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: usize) -> StepFunction {
        let width = self.carrier;
        let mask = (1u64 << width) - 1;
        let sets = (0..self.alphabet)
            .map(|a| StateSet::from_mask((index as u64 >> (a * width)) & mask))
            .collect();
        StepFunction::new(self.carrier, sets).expect("masks stay inside the carrier")
    }

    pub fn index_of(&self, u: &StepFunction) -> usize {
        debug_assert_eq!(u.carrier(), self.carrier);
        u.sets()
            .iter()
            .enumerate()
            .map(|(a, s)| (s.to_mask().expect("carrier below 64") as usize) << (a * self.carrier))
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = StepFunction> + '_ {
        (0..self.count).map(|i| self.get(i))
    }

    pub fn all(&self) -> Vec<StepFunction> {
        self.iter().collect()
    }
}

/// `|Y|^|X|`, saturating.
pub fn map_count(domain: usize, codomain: usize) -> u128 {
    (codomain as u128).checked_pow(domain as u32).unwrap_or(u128::MAX)
}

/// Every map `X -> Y` in lexicographic order of its table.
pub fn maps(domain: usize, codomain: usize) -> impl Iterator<Item = StateMap> {
    let mut next = if codomain == 0 && domain > 0 {
        None
    } else {
        Some(vec![0; domain])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut i = domain;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < codomain {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(StateMap::new(codomain, current).expect("entries below codomain"))
    })
}

pub fn relation_count(rows: usize, cols: usize) -> u128 {
    1u128.checked_shl((rows * cols) as u32).unwrap_or(u128::MAX)
}

/// Every relation `R ⊆ X × Y`, ordered by the bitmask of
/// [`Relation::from_mask`].
pub fn relations(rows: usize, cols: usize) -> Result<impl Iterator<Item = Relation>> {
    let bits = rows * cols;
    if bits > 32 {
        return Err(Error::BudgetExceeded {
            what: "relation enumeration",
            needed: relation_count(rows, cols),
            cap: 1 << 32,
        });
    }
    Ok((0..1u64 << bits).map(move |m| Relation::from_mask(rows, cols, m)))
}
