use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lts::StepFunction;
use crate::sets::StateSet;

/// A function `f : X -> Y` between finite carriers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMap")]
pub struct StateMap {
    domain: usize,
    codomain: usize,
    table: Vec<usize>,
}

#[derive(Deserialize)]
struct RawMap {
    domain: usize,
    codomain: usize,
    table: Vec<usize>,
}

impl TryFrom<RawMap> for StateMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        if raw.table.len() != raw.domain {
            return Err(Error::StateOutOfRange {
                index: raw.table.len(),
                count: raw.domain,
            });
        }
        StateMap::new(raw.codomain, raw.table)
    }
}

impl StateMap {
    /// `table[x]` is `f(x)`; the domain size is `table.len()`.
    pub fn new(codomain: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&y| y >= codomain) {
            return Err(Error::StateOutOfRange {
                index: bad,
                count: codomain,
            });
        }
        Ok(StateMap {
            domain: table.len(),
            codomain,
            table,
        })
    }

    pub fn identity(n: usize) -> Self {
        StateMap {
            domain: n,
            codomain: n,
            table: (0..n).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `∐_f(A) = f(A)`
    pub fn image(&self, set: &StateSet) -> StateSet {
        set.iter().map(|x| self.table[x]).collect()
    }

    /// `f^{-1}(B)`
    pub fn preimage(&self, set: &StateSet) -> StateSet {
        (0..self.domain)
            .filter(|&x| set.contains(self.table[x]))
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        StateSet::from_iter(self.table.iter().copied()).len() == self.codomain
    }

    /// `Ff` for `F = P^A`: the image taken action by action.
    pub fn apply_step(&self, u: &StepFunction) -> Result<StepFunction> {
        if u.carrier() != self.domain {
            return Err(Error::CarrierMismatch {
                left: u.carrier(),
                right: self.domain,
            });
        }
        StepFunction::new(
            self.codomain,
            u.sets().iter().map(|s| self.image(s)).collect(),
        )
    }
}

impl fmt::Display for StateMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (x, y) in self.table.iter().enumerate() {
            if x > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x} ↦ {y}")?;
        }
        write!(f, "]")
    }
}
