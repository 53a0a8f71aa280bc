//! Finite labelled transition systems viewed as coalgebras `X -> P(X)^A`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::StateSet;

/// A finite LTS over a fixed, ordered alphabet.
///
/// States are dense indices `0..state_count`. Absent transitions are empty
/// successor sets, so `successors` is total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lts {
    state_count: usize,
    alphabet: Vec<String>,
    succ: Vec<Vec<StateSet>>,
    initial: Option<usize>,
    names: Option<Vec<String>>,
}

impl Lts {
    pub fn new(state_count: usize, alphabet: Vec<String>) -> Result<Self> {
        let distinct: BTreeSet<&String> = alphabet.iter().collect();
        if distinct.len() != alphabet.len() {
            return Err(Error::InvalidPartition(format!(
                "alphabet {alphabet:?} has repeated actions"
            )));
        }
        Ok(Lts {
            state_count,
            succ: vec![vec![StateSet::new(); alphabet.len()]; state_count],
            alphabet,
            initial: None,
            names: None,
        })
    }

    pub fn with_initial(mut self, initial: usize) -> Result<Self> {
        self.check_state(initial)?;
        self.initial = Some(initial);
        Ok(self)
    }

    /// Attaches display names to states. Names are metadata only.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.state_count {
            return Err(Error::StateOutOfRange {
                index: names.len(),
                count: self.state_count,
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn add_transition(&mut self, src: usize, action: usize, dst: usize) -> Result<()> {
        self.check_state(src)?;
        self.check_state(dst)?;
        self.check_action(action)?;
        self.succ[src][action].insert(dst);
        Ok(())
    }

    pub fn add_labelled(&mut self, src: usize, label: &str, dst: usize) -> Result<()> {
        let a = self
            .action_index(label)
            .ok_or_else(|| Error::UnknownAction(label.to_string()))?;
        self.add_transition(src, a, dst)
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn action_index(&self, label: &str) -> Option<usize> {
        self.alphabet.iter().position(|a| a == label)
    }

    /// Looks a state up by index or by display name.
    pub fn resolve_state(&self, key: &str) -> Option<usize> {
        if let Ok(i) = key.parse::<usize>() {
            return (i < self.state_count).then_some(i);
        }
        self.names.as_ref()?.iter().position(|n| n == key)
    }

    pub fn state_label(&self, s: usize) -> String {
        match &self.names {
            Some(names) => names[s].clone(),
            None => s.to_string(),
        }
    }

    pub fn successors(&self, s: usize, action: usize) -> &StateSet {
        &self.succ[s][action]
    }

    /// All transitions in (source, action, target) order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(s, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, targets)| targets.iter().map(move |t| (s, a, t)))
        })
    }

    pub fn transition_count(&self) -> usize {
        self.succ.iter().flatten().map(StateSet::len).sum()
    }

    fn check_state(&self, s: usize) -> Result<()> {
        if s < self.state_count {
            Ok(())
        } else {
            Err(Error::StateOutOfRange {
                index: s,
                count: self.state_count,
            })
        }
    }

    fn check_action(&self, a: usize) -> Result<()> {
        if a < self.alphabet.len() {
            Ok(())
        } else {
            Err(Error::ActionOutOfRange {
                index: a,
                count: self.alphabet.len(),
            })
        }
    }

    /// The coalgebra structure at `s`: each action mapped to its successor set.
    pub fn step_of(&self, s: usize) -> Result<StepFunction> {
        self.check_state(s)?;
        Ok(StepFunction {
            carrier: self.state_count,
            sets: self.succ[s].clone(),
        })
    }

    /// The initial actions `I(s)`: actions with a nonempty successor set.
    pub fn initials(&self, s: usize) -> Result<BTreeSet<String>> {
        self.check_state(s)?;
        Ok(self.succ[s]
            .iter()
            .zip(&self.alphabet)
            .filter(|(targets, _)| !targets.is_empty())
            .map(|(_, a)| a.clone())
            .collect())
    }

    /// Re-expresses the LTS over `alphabet`, which must contain every action
    /// of the current alphabet. New actions get empty successor sets.
    pub fn with_alphabet(&self, alphabet: &[String]) -> Result<Lts> {
        let mut out = Lts::new(self.state_count, alphabet.to_vec())?;
        let index: HashMap<&str, usize> = alphabet
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect();
        for (old, label) in self.alphabet.iter().enumerate() {
            let new = *index
                .get(label.as_str())
                .ok_or_else(|| Error::UnknownAction(label.clone()))?;
            for s in 0..self.state_count {
                out.succ[s][new] = self.succ[s][old].clone();
            }
        }
        out.initial = self.initial;
        out.names = self.names.clone();
        Ok(out)
    }
}

/// Brings two systems onto the sorted union of their alphabets. Returns
/// `true` as the third component when either alphabet had to change.
pub fn unify_alphabets(x: &Lts, y: &Lts) -> Result<(Lts, Lts, bool)> {
    if x.alphabet == y.alphabet {
        return Ok((x.clone(), y.clone(), false));
    }
    let union: Vec<String> = x
        .alphabet
        .iter()
        .chain(&y.alphabet)
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok((x.with_alphabet(&union)?, y.with_alphabet(&union)?, true))
}

/// An element of `P(X)^A`: one successor set per action, over a carrier of
/// `carrier` states.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StepFunction {
    carrier: usize,
    sets: Vec<StateSet>,
}

impl StepFunction {
    pub fn new(carrier: usize, sets: Vec<StateSet>) -> Result<Self> {
        for s in &sets {
            if s.bound() > carrier {
                return Err(Error::StateOutOfRange {
                    index: s.bound() - 1,
                    count: carrier,
                });
            }
        }
        Ok(StepFunction { carrier, sets })
    }

    /// Builds from per-action member lists.
    pub fn from_lists(carrier: usize, lists: &[&[usize]]) -> Result<Self> {
        Self::new(
            carrier,
            lists.iter().map(|l| l.iter().copied().collect()).collect(),
        )
    }

    pub fn empty(carrier: usize, alphabet_size: usize) -> Self {
        StepFunction {
            carrier,
            sets: vec![StateSet::new(); alphabet_size],
        }
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn alphabet_size(&self) -> usize {
        self.sets.len()
    }

    pub fn at(&self, action: usize) -> &StateSet {
        &self.sets[action]
    }

    pub fn sets(&self) -> &[StateSet] {
        &self.sets
    }

    pub(crate) fn same_alphabet(&self, other: &StepFunction) -> Result<()> {
        if self.sets.len() == other.sets.len() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                expected: self.sets.len(),
                found: other.sets.len(),
            })
        }
    }

    pub(crate) fn same_shape(&self, other: &StepFunction) -> Result<()> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch {
                left: self.carrier,
                right: other.carrier,
            });
        }
        self.same_alphabet(other)
    }
}

impl fmt::Display for StepFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (a, s) in self.sets.iter().enumerate() {
            if a > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} ↦ {s}", action_name(a))?;
        }
        write!(f, "]")
    }
}

/// Default name of the `i`-th action in abstract alphabets: a, b, .., z, a26, ..
pub fn action_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("a{i}")
    }
}

/// The abstract alphabet `[a, b, ..]` of size `n`.
pub fn default_alphabet(n: usize) -> Vec<String> {
    (0..n).map(action_name).collect()
}

/// Which simulation clause an action follows in a covariant-contravariant
/// partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `Act^r`: moves of the left state are matched forward.
    Right,
    /// `Act^l`: moves of the right state are matched backward.
    Left,
    /// `Act^bi`: both.
    Bi,
}

/// A partition `{Act^r, Act^l, Act^bi}` of an alphabet, by action name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionPartition {
    #[serde(default)]
    pub r: BTreeSet<String>,
    #[serde(default)]
    pub l: BTreeSet<String>,
    #[serde(default)]
    pub bi: BTreeSet<String>,
}

impl ActionPartition {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Every action on one side.
    pub fn uniform(alphabet: &[String], side: Side) -> Self {
        let all: BTreeSet<String> = alphabet.iter().cloned().collect();
        let mut p = ActionPartition::default();
        match side {
            Side::Right => p.r = all,
            Side::Left => p.l = all,
            Side::Bi => p.bi = all,
        }
        p
    }

    pub fn from_sides(alphabet: &[String], sides: &[Side]) -> Self {
        let mut p = ActionPartition::default();
        for (a, side) in alphabet.iter().zip(sides) {
            match side {
                Side::Right => p.r.insert(a.clone()),
                Side::Left => p.l.insert(a.clone()),
                Side::Bi => p.bi.insert(a.clone()),
            };
        }
        p
    }

    /// Checks that the three blocks are disjoint and cover `alphabet`
    /// exactly, and returns the side of each action in alphabet order.
    pub fn validate(&self, alphabet: &[String]) -> Result<Vec<Side>> {
        for (x, y, nx, ny) in [
            (&self.r, &self.l, "r", "l"),
            (&self.r, &self.bi, "r", "bi"),
            (&self.l, &self.bi, "l", "bi"),
        ] {
            if let Some(a) = x.intersection(y).next() {
                return Err(Error::InvalidPartition(format!(
                    "action `{a}` is in both {nx} and {ny}"
                )));
            }
        }
        let known: BTreeSet<&String> = alphabet.iter().collect();
        for a in self.r.iter().chain(&self.l).chain(&self.bi) {
            if !known.contains(a) {
                return Err(Error::InvalidPartition(format!(
                    "action `{a}` is not in the alphabet"
                )));
            }
        }
        alphabet
            .iter()
            .map(|a| {
                if self.r.contains(a) {
                    Ok(Side::Right)
                } else if self.l.contains(a) {
                    Ok(Side::Left)
                } else if self.bi.contains(a) {
                    Ok(Side::Bi)
                } else {
                    Err(Error::InvalidPartition(format!(
                        "action `{a}` is not covered by the partition"
                    )))
                }
            })
            .collect()
    }
}
